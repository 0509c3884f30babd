/*
 * Copyright (c) 2026 The uavnet authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "uavnet/channel.hpp"

#include <cmath>
#include <numbers>

namespace uavnet
{

double
LosProbability(double s, const SystemParams& p)
{
    const double theta =
        s > 0.0 ? (180.0 / std::numbers::pi) * std::atan(p.DeltaH() / s) : 90.0;
    return 1.0 / (1.0 + p.envA * std::exp(-p.envB * (theta - p.envA)));
}

double
MeanRxPower(LinkKind kind, double dist, const SystemParams& p)
{
    switch (kind)
    {
    case LinkKind::AccessBs:
        return p.pTg * std::pow(dist * dist + p.hG * p.hG, -p.etaG / 2.0);
    case LinkKind::AccessUav:
        return p.pTa * std::pow(dist, -p.etaA);
    case LinkKind::BackhaulLos:
        return p.pTb * p.cL * std::pow(dist, -p.etaL);
    case LinkKind::BackhaulNlos:
        return p.pTb * p.cN * std::pow(dist, -p.etaN);
    }
    return 0.0;
}

FadingSampler::FadingSampler(const SystemParams& p)
    : m_bs(1.0),
      m_uav(p.mA, 1.0 / p.mA),
      m_los(p.mL, 1.0 / p.mL),
      m_nlos(p.mN, 1.0 / p.mN)
{
}

double
FadingSampler::Sample(LinkKind kind, Rng& rng)
{
    switch (kind)
    {
    case LinkKind::AccessBs:
        return m_bs(rng);
    case LinkKind::AccessUav:
        return m_uav(rng);
    case LinkKind::BackhaulLos:
        return m_los(rng);
    case LinkKind::BackhaulNlos:
        return m_nlos(rng);
    }
    return 0.0;
}

double
SampleFading(LinkKind kind, const SystemParams& params, Rng& rng)
{
    FadingSampler sampler(params);
    return sampler.Sample(kind, rng);
}

double
GainDistribution::Mean() const
{
    double m = 0.0;
    for (size_t k = 0; k < gains.size(); ++k)
    {
        m += probs[k] * gains[k];
    }
    return m;
}

GainDistribution
MakeGainDistribution(const AntennaPattern& a)
{
    const double cg = a.Cg();
    const double ca = a.Ca();
    GainDistribution gd{};
    gd.gains = {a.gMainBs * a.gMainUav,
                a.gMainBs * a.gSideUav,
                a.gSideBs * a.gMainUav,
                a.gSideBs * a.gSideUav};
    gd.probs[0] = cg * ca;
    gd.probs[1] = cg * (1.0 - ca);
    gd.probs[2] = (1.0 - cg) * ca;
    gd.probs[3] = 1.0 - (gd.probs[0] + gd.probs[1] + gd.probs[2]);
    gd.g0 = a.gMainBs * a.gMainUav;
    return gd;
}

double
SampleInterfererGain(const GainDistribution& gd, Rng& rng)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double u = unit(rng);
    for (size_t k = 0; k + 1 < gd.gains.size(); ++k)
    {
        if (u < gd.probs[k])
        {
            return gd.gains[k];
        }
        u -= gd.probs[k];
    }
    return gd.gains.back();
}

} // namespace uavnet
