/*
 * Copyright (c) 2026 The uavnet authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef UAVNET_CHANNEL_HPP
#define UAVNET_CHANNEL_HPP

#include "uavnet/geometry.hpp"
#include "uavnet/params.hpp"

#include <array>
#include <random>

namespace uavnet
{

enum class LinkKind
{
    AccessBs,
    AccessUav,
    BackhaulLos,
    BackhaulNlos,
};

/**
 * Elevation-angle logistic LOS probability of a BS-UAV link whose ground
 * projections are @p s metres apart (the angle uses |h_a - h_g|).
 */
double LosProbability(double s, const SystemParams& params);

/**
 * Received power with unit fading and unit beam gain.
 *
 * AccessBs takes the horizontal distance and adds h_g internally; the other
 * kinds take the 3-D distance. Backhaul kinds include P_tb and the intercept.
 */
double MeanRxPower(LinkKind kind, double dist, const SystemParams& params);

/// Unit-mean small-scale fading: Exp(1) for BS access, Gamma(m, 1/m) otherwise.
class FadingSampler
{
  public:
    explicit FadingSampler(const SystemParams& params);

    double Sample(LinkKind kind, Rng& rng);

  private:
    std::exponential_distribution<double> m_bs;
    std::gamma_distribution<double> m_uav;
    std::gamma_distribution<double> m_los;
    std::gamma_distribution<double> m_nlos;
};

double SampleFading(LinkKind kind, const SystemParams& params, Rng& rng);

/// Four-point backhaul beam-gain law of an interfering BS, plus the aligned gain.
struct GainDistribution
{
    std::array<double, 4> gains;
    std::array<double, 4> probs;
    double g0;

    double Mean() const;
};

GainDistribution MakeGainDistribution(const AntennaPattern& antenna);

double SampleInterfererGain(const GainDistribution& gd, Rng& rng);

} // namespace uavnet

#endif // UAVNET_CHANNEL_HPP
