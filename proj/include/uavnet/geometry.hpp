/*
 * Copyright (c) 2026 The uavnet authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef UAVNET_GEOMETRY_HPP
#define UAVNET_GEOMETRY_HPP

#include "uavnet/params.hpp"

#include <random>
#include <vector>

namespace uavnet
{

using Rng = std::mt19937_64;

/// Ground-plane position; node heights come from SystemParams.
struct PlanarPoint
{
    double x;
    double y;

    bool operator==(const PlanarPoint&) const = default;
};

/// Ground projection of a UAV, inside the r_c disk centered at the origin.
struct UavPoint
{
    double x;
    double y;

    bool operator==(const UavPoint&) const = default;
};

/// Homogeneous PPP restricted to a disk.
std::vector<PlanarPoint> SamplePppDisk(double density, double radius, PlanarPoint center, Rng& rng);

/// n i.i.d. uniform points in the origin-centered disk.
std::vector<UavPoint> SampleBppDisk(int n, double radius, Rng& rng);

/**
 * Law of the 3-D distance W between the UE at (x_0, 0, 0) and a UAV drawn
 * uniformly in the r_c disk at height h_a.
 *
 * Pdf() is 2w/r_c^2 on [h_a, w_m] and the arc-fraction form on [w_m, w_p].
 * Ccdf() evaluates P(W > x) in closed form through the area of the lens
 * between the UE-centered circle of horizontal radius sqrt(x^2 - h_a^2) and
 * the UAV disk.
 */
class UavDistanceLaw
{
  public:
    explicit UavDistanceLaw(const SystemParams& params);

    double Pdf(double w) const;
    double Ccdf(double x) const;

    double Ha() const
    {
        return m_ha;
    }

    double Wm() const
    {
        return m_wm;
    }

    double Wp() const
    {
        return m_wp;
    }

  private:
    double m_rc;
    double m_x0;
    double m_ha;
    double m_wm;
    double m_wp;
};

/// f_W(w).
double UavDistancePdf(double w, const SystemParams& params);

/// P(W > x) for a single UAV.
double UavDistanceCcdf(double x, const SystemParams& params);

/// P(nearest of the N UAVs is farther than x).
double NearestUavCcdf(double x, const SystemParams& params);

enum class ExclusionKind
{
    BsGivenUav,   ///< E_a: minimum BS horizontal distance when a UAV at x serves
    UavGivenBs,   ///< E_g: minimum UAV distance when a BS at horizontal x serves
    NlosGivenLos, ///< E_L: minimum NLOS BS horizontal distance when a LOS BS at x serves the backhaul
    LosGivenNlos, ///< E_N: minimum LOS BS horizontal distance when a NLOS BS at x serves the backhaul
};

/// Exclusion radius induced by the association rules; 0 where the constraint is vacuous.
double ExclusionRadius(ExclusionKind kind, double x, const SystemParams& params);

/// f_U(u, lower) = f_W(u) / P(W > lower) on [lower, w_p]; throws DegenerateSupport when lower >= w_p.
double InterfererDistancePdf(double u, double lower, const SystemParams& params);

} // namespace uavnet

#endif // UAVNET_GEOMETRY_HPP
