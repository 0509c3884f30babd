/*
 * Copyright (c) 2026 The uavnet authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef UAVNET_MONTECARLO_HPP
#define UAVNET_MONTECARLO_HPP

#include "uavnet/channel.hpp"
#include "uavnet/geometry.hpp"
#include "uavnet/params.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace uavnet
{

/**
 * Monte Carlo estimator of the same metrics as the analysis module.
 *
 * Full mode samples the whole network around the UE and checks the backhaul
 * of the UAV that actually serves it. Every full-mode trial also evaluates a
 * reference UAV at the disk center against the same BS realization, which is
 * what the tier and S(tau_b) estimates are built from. CenterUav mode samples
 * only BSs around the reference UAV.
 */

enum class SimMode
{
    Full,
    CenterUav,
};

struct SimOptions
{
    std::uint64_t nTrials = 100000;
    std::uint64_t seed = 1;
    /// Worker threads; 0 picks the hardware concurrency. Never affects results.
    int jobs = 0;
    SimMode mode = SimMode::Full;
    /// BS window radius in m; 0 selects SimulationWindow(params).
    double windowRadius = 0.0;
    /// Multiplier applied to the window radius (the doubling check uses 2).
    double windowScale = 1.0;
};

/// Default BS sampling radius around the UE: max(10/sqrt(pi lambda_g), 5 r_c, 20 E_a(w_p)),
/// with E_a capped where an empty BS disk becomes a 1e-12 event,
/// widened until the center UAV expects at least 14 LOS BSs inside it.
double SimulationWindow(const SystemParams& params);

struct NetworkRealization
{
    std::vector<PlanarPoint> bs;
    std::vector<UavPoint> uav;
    PlanarPoint ue;
};

NetworkRealization SampleRealization(const SystemParams& params, double window, Rng& rng);

enum class Association
{
    Bs,
    Uav,
};

struct BackhaulOutcome
{
    bool valid = false; ///< false when no BS was sampled
    bool los = false;
    double servingDist = 0.0; ///< horizontal, m
    double sinr = 0.0;
};

/**
 * Minimum-path-loss BS selection and SINR for a UAV at ground position
 * @p uav: LOS marks drawn per BS, aligned gain G_0 on the serving link,
 * four-point gains on the interferers, Nakagami fading per tier.
 */
BackhaulOutcome EvaluateBackhaul(PlanarPoint uav,
                                 std::span<const PlanarPoint> bs,
                                 const SystemParams& params,
                                 FadingSampler& fading,
                                 const GainDistribution& gains,
                                 Rng& rng);

struct TrialOutcome
{
    Association assoc = Association::Uav;
    double sir = 0.0;
    bool sirOk = false;
    double backhaulSinr = 0.0; ///< serving UAV only
    bool backhaulOk = false;
    bool covered = false;
    double servingDist = 0.0; ///< horizontal for a BS, 3-D for a UAV
    bool noServer = false;    ///< neither a BS nor a UAV existed

    BackhaulOutcome reference; ///< center-of-disk reference UAV
    bool referenceOk = false;
};

/// One independent realization; all randomness drawn from @p rng.
TrialOutcome RunTrial(const SystemParams& params, Rng& rng, double window = 0.0);

/// Backhaul-only trial of the reference UAV at the disk center.
TrialOutcome RunCenterTrial(const SystemParams& params, Rng& rng, double window = 0.0);

/// Per-trial generator: trial i of a run seeded with @p seed, independent of execution order.
Rng TrialRng(std::uint64_t seed, std::uint64_t trial);

/// Raw outcomes of every trial, in trial order.
std::vector<TrialOutcome> SimulateTrials(const SystemParams& params, const SimOptions& opts);

enum class Metric
{
    AG,
    AA,
    ALos,
    ANlos,
    S,
    PCovG,
    PCovA,
    PCov,
    IndependenceGap,
};

const char* ToString(Metric metric);

struct MetricEstimate
{
    double value = 0.0;
    std::uint64_t trials = 0;
    double halfWidth = 0.0; ///< 95% normal-approximation half width
    bool flagged = false;   ///< fewer than 100 conditioning events

    /// Standard error implied by the half width.
    double Sigma() const
    {
        return halfWidth / 1.96;
    }
};

using MetricMap = std::map<Metric, MetricEstimate>;

/// Proportion estimate with its 95% half width; flagged below 100 trials.
MetricEstimate Proportion(std::uint64_t hits, std::uint64_t trials);

/// Re-thresholds stored outcomes; lets one run serve several (beta, tau_b) pairs.
MetricMap Summarize(std::span<const TrialOutcome> outcomes, SimMode mode, double beta, double tauB);

/// SimulateTrials + Summarize at the thresholds stored in @p params.
MetricMap EstimateMetrics(const SystemParams& params, const SimOptions& opts);

/// |P(SIR and SINR | UAV) - P(SIR | UAV) P(SINR | UAV)| with a delta-method half width.
MetricEstimate IndependenceGap(const SystemParams& params, const SimOptions& opts);

} // namespace uavnet

#endif // UAVNET_MONTECARLO_HPP
