/*
 * Copyright (c) 2026 The uavnet authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef UAVNET_ANALYSIS_HPP
#define UAVNET_ANALYSIS_HPP

#include "uavnet/params.hpp"
#include "uavnet/quadrature.hpp"

#include <memory>

namespace uavnet
{

/**
 * Numerical evaluation of the stochastic-geometry coverage model.
 *
 * Access side: the typical UE at (x_0, 0) attaches to whichever of the
 * nearest BS and the nearest UAV gives the larger mean received power and
 * sees SIR against every other co-band transmitter. Backhaul side: a
 * reference UAV at the disk center attaches to the minimum-path-loss BS
 * among the LOS/NLOS-thinned BS process and sees SINR; S(tau_b) uses the
 * Alzer bound on the normalized-gamma CCDF. UAV coverage is the product of
 * the access and backhaul events.
 *
 * Every function validates @p params and throws Error on failure.
 */

enum class Tier
{
    Bs,
    Uav,
};

enum class BackhaulTier
{
    Los,
    Nlos,
};

enum class LaplaceScenario
{
    BsExceptServing,   ///< BS-served UE: all other BSs, beyond the serving horizontal distance
    UavsGivenBs,       ///< BS-served UE: all N UAVs, beyond E_g(serving distance)
    AllBsGivenUav,     ///< UAV-served UE: all BSs, beyond E_a(serving distance)
    UavsExceptServing, ///< UAV-served UE: the other N-1 UAVs, beyond the serving distance
};

struct AnalysisOptions
{
    quad::Tolerance tol{1e-7, 1e-10, 60};
};

struct AssociationSplit
{
    double aG;
    double aA;
};

struct BackhaulSplit
{
    double aLos;
    double aNlos;
};

/// Quadrature error estimates of the outer integral behind each metric.
struct ErrorBudget
{
    double aG = 0.0;
    double aLos = 0.0;
    double sBackhaul = 0.0;
    double pCovG = 0.0;
    double pCovA = 0.0;
};

struct AnalyticReport
{
    double aG;
    double aA;
    double aLos;
    double aNlos;
    double sBackhaul;
    double pCovG;
    double pCovA;
    double pCov;
    ErrorBudget error;
};

/**
 * Serving-distance densities with their normalizing tier probabilities
 * computed once at construction. Evaluation is then read-only, so one
 * instance may be shared between threads.
 */
class ServingDistanceLaws
{
  public:
    explicit ServingDistanceLaws(const SystemParams& params, const AnalysisOptions& opts = {});
    ~ServingDistanceLaws();
    ServingDistanceLaws(ServingDistanceLaws&&) noexcept;
    ServingDistanceLaws& operator=(ServingDistanceLaws&&) noexcept;

    /// f_{X_g} over horizontal distance or f_{X_a} over 3-D distance.
    double Access(Tier tier, double x) const;
    /// f_L or f_N over the horizontal distance from the reference UAV.
    double Backhaul(BackhaulTier tier, double x) const;
    /// Tier probability times Backhaul(); defined even for a degenerate tier.
    double BackhaulJoint(BackhaulTier tier, double x) const;

    AssociationSplit Association() const;
    BackhaulSplit BackhaulTiers() const;

    /// Largest horizontal distance at which a BS can win the access association.
    double BsRange() const;
    /// Kinks of the access densities (BS side, then UAV side).
    std::vector<double> BsBreakpoints() const;
    std::vector<double> UavBreakpoints() const;

  private:
    struct Impl;
    std::unique_ptr<Impl> m_impl;
};

AssociationSplit AssociationProbabilities(const SystemParams& params, const AnalysisOptions& opts = {});

/// f_{X_g} over horizontal distance (Tier::Bs) or f_{X_a} over 3-D distance (Tier::Uav).
double ServingDistancePdf(Tier tier, double x, const SystemParams& params, const AnalysisOptions& opts = {});

/// E[exp(-s I)] for the interference field selected by @p scenario.
double InterferenceLaplace(LaplaceScenario scenario,
                           double s,
                           double servingDist,
                           const SystemParams& params,
                           const AnalysisOptions& opts = {});

/**
 * d^k/ds^k [L_{I_g}(s) L_{\hat I_a}(s)] for a UE served by a UAV at 3-D
 * distance @p xa, by differentiating under the integral sign (k <= 3).
 */
double LaplaceProductDerivative(double s,
                                int order,
                                double xa,
                                const SystemParams& params,
                                const AnalysisOptions& opts = {});

double ConditionalCoverageBs(double beta, const SystemParams& params, const AnalysisOptions& opts = {});

BackhaulSplit BackhaulTierProbabilities(const SystemParams& params, const AnalysisOptions& opts = {});

/// Horizontal distance from the reference UAV to its serving LOS or NLOS BS.
double BackhaulServingDistancePdf(BackhaulTier tier,
                                  double x,
                                  const SystemParams& params,
                                  const AnalysisOptions& opts = {});

/// S(tau_b).
double BackhaulProbability(double tauB, const SystemParams& params, const AnalysisOptions& opts = {});

/// S(tau_b) * P(SIR >= beta | UAV).
double ConditionalCoverageUav(double beta,
                              double tauB,
                              const SystemParams& params,
                              const AnalysisOptions& opts = {});

/// Every metric at one parameter point; pCov = aA * pCovA + aG * pCovG.
AnalyticReport OverallCoverage(double beta,
                               double tauB,
                               const SystemParams& params,
                               const AnalysisOptions& opts = {});

} // namespace uavnet

#endif // UAVNET_ANALYSIS_HPP
