/*
 * Copyright (c) 2026 The uavnet authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "uavnet/geometry.hpp"

#include "uavnet/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace uavnet
{

namespace
{

constexpr double kPi = std::numbers::pi;

double
ClampedAcos(double c)
{
    return std::acos(std::clamp(c, -1.0, 1.0));
}

} // namespace

std::vector<PlanarPoint>
SamplePppDisk(double density, double radius, PlanarPoint center, Rng& rng)
{
    std::vector<PlanarPoint> points;
    const double mean = density * kPi * radius * radius;
    if (!(mean > 0.0))
    {
        return points;
    }
    std::poisson_distribution<long> count(mean);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const long n = count(rng);
    points.reserve(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i)
    {
        const double r = radius * std::sqrt(unit(rng));
        const double phi = 2.0 * kPi * unit(rng);
        points.push_back({center.x + r * std::cos(phi), center.y + r * std::sin(phi)});
    }
    return points;
}

std::vector<UavPoint>
SampleBppDisk(int n, double radius, Rng& rng)
{
    std::vector<UavPoint> points;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    points.reserve(static_cast<size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i)
    {
        const double r = radius * std::sqrt(unit(rng));
        const double phi = 2.0 * kPi * unit(rng);
        points.push_back({r * std::cos(phi), r * std::sin(phi)});
    }
    return points;
}

UavDistanceLaw::UavDistanceLaw(const SystemParams& params)
    : m_rc(params.rC),
      m_x0(params.x0),
      m_ha(params.hA),
      m_wm(params.Wm()),
      m_wp(params.Wp())
{
}

double
UavDistanceLaw::Pdf(double w) const
{
    if (w < m_ha || w > m_wp)
    {
        return 0.0;
    }
    const double rc2 = m_rc * m_rc;
    // x_0 = 0 gives w_m = w_p and only the inner piece exists.
    if (w <= m_wm || m_x0 == 0.0)
    {
        return 2.0 * w / rc2;
    }
    const double rho = std::sqrt(w * w - m_ha * m_ha);
    const double c = (rho * rho + m_x0 * m_x0 - rc2) / (2.0 * m_x0 * rho);
    return 2.0 * w / (kPi * rc2) * ClampedAcos(c);
}

double
UavDistanceLaw::Ccdf(double x) const
{
    if (x <= m_ha)
    {
        return 1.0;
    }
    if (x >= m_wp)
    {
        return 0.0;
    }
    const double rc2 = m_rc * m_rc;
    const double rho2 = x * x - m_ha * m_ha;
    if (x <= m_wm || m_x0 == 0.0)
    {
        return 1.0 - rho2 / rc2;
    }
    // Lens between the UE-centered circle (radius rho) and the UAV disk.
    const double rho = std::sqrt(rho2);
    const double d = m_x0;
    const double a1 = rho2 * ClampedAcos((d * d + rho2 - rc2) / (2.0 * d * rho));
    const double a2 = rc2 * ClampedAcos((d * d + rc2 - rho2) / (2.0 * d * m_rc));
    const double k = (-d + rho + m_rc) * (d + rho - m_rc) * (d - rho + m_rc) * (d + rho + m_rc);
    const double lens = a1 + a2 - 0.5 * std::sqrt(std::max(k, 0.0));
    return std::clamp(1.0 - lens / (kPi * rc2), 0.0, 1.0);
}

double
UavDistancePdf(double w, const SystemParams& params)
{
    return UavDistanceLaw(params).Pdf(w);
}

double
UavDistanceCcdf(double x, const SystemParams& params)
{
    return UavDistanceLaw(params).Ccdf(x);
}

double
NearestUavCcdf(double x, const SystemParams& params)
{
    return std::pow(UavDistanceCcdf(x, params), params.nUav);
}

double
ExclusionRadius(ExclusionKind kind, double x, const SystemParams& p)
{
    switch (kind)
    {
    case ExclusionKind::BsGivenUav: {
        const double s2 =
            std::pow(p.pTg / p.pTa, 2.0 / p.etaG) * std::pow(x, 2.0 * p.etaA / p.etaG) - p.hG * p.hG;
        return s2 > 0.0 ? std::sqrt(s2) : 0.0;
    }
    case ExclusionKind::UavGivenBs:
        return std::pow(p.pTa / p.pTg, 1.0 / p.etaA) *
               std::pow(x * x + p.hG * p.hG, p.etaG / (2.0 * p.etaA));
    case ExclusionKind::NlosGivenLos: {
        // NLOS BS at y loses to the LOS BS at x iff c_N (y^2+dh^2)^(-eta_N/2) < c_L (x^2+dh^2)^(-eta_L/2).
        const double dh2 = p.DeltaH() * p.DeltaH();
        const double s2 =
            std::pow(p.cN / p.cL, 2.0 / p.etaN) * std::pow(x * x + dh2, p.etaL / p.etaN) - dh2;
        return s2 > 0.0 ? std::sqrt(s2) : 0.0;
    }
    case ExclusionKind::LosGivenNlos: {
        const double dh2 = p.DeltaH() * p.DeltaH();
        const double s2 =
            std::pow(p.cL / p.cN, 2.0 / p.etaL) * std::pow(x * x + dh2, p.etaN / p.etaL) - dh2;
        return s2 > 0.0 ? std::sqrt(s2) : 0.0;
    }
    }
    return 0.0;
}

double
InterfererDistancePdf(double u, double lower, const SystemParams& params)
{
    UavDistanceLaw law(params);
    const double lo = std::max(lower, law.Ha());
    if (lo >= law.Wp())
    {
        throw Error(ErrorCode::DegenerateSupport, "interferer support [lower, w_p] is empty");
    }
    const double mass = law.Ccdf(lo);
    if (!(mass > 0.0))
    {
        throw Error(ErrorCode::DegenerateSupport, "no UAV mass beyond the lower limit");
    }
    if (u < lo)
    {
        return 0.0;
    }
    return law.Pdf(u) / mass;
}

} // namespace uavnet
