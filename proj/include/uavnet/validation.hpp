/*
 * Copyright (c) 2026 The uavnet authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef UAVNET_VALIDATION_HPP
#define UAVNET_VALIDATION_HPP

#include "uavnet/analysis.hpp"
#include "uavnet/montecarlo.hpp"

#include <string>
#include <vector>

namespace uavnet
{

/**
 * Analytic-versus-simulated comparison at one parameter point.
 *
 * Association and LOS-tier probabilities must agree within three standard
 * errors; S(tau_b) and P_cov within an absolute 0.02. The independence gap
 * must stay below 0.03. With the window check enabled the simulation is
 * repeated on a window of twice the radius and each estimate must move by
 * less than three combined standard errors.
 */

enum class Rule
{
    Sigma3,     ///< |gap| <= 3 sigma
    Absolute,   ///< |gap| <= tolerance
    UpperBound, ///< simulated <= tolerance
};

const char* ToString(Rule rule);

struct ValidationRow
{
    std::string name;
    Rule rule = Rule::Absolute;
    double analytic = 0.0; ///< reference value; the base-window estimate for window rows
    double simulated = 0.0;
    double halfWidth = 0.0;
    double gap = 0.0;
    double tolerance = 0.0; ///< resolved bound the gap was compared against
    bool pass = false;
};

struct ValidationOptions
{
    SimOptions sim;
    AnalysisOptions analysis;
    bool windowCheck = true;
};

struct ValidationReport
{
    std::vector<ValidationRow> rows;

    bool Passed() const;
};

/// Three-sigma comparison of a simulated proportion against @p reference;
/// sigma is the larger of the simulated and the reference binomial errors.
ValidationRow CompareSigma3(const std::string& name, double reference, const MetricEstimate& sim);

ValidationRow CompareAbsolute(const std::string& name, double reference, const MetricEstimate& sim, double tol);

ValidationReport RunValidation(const SystemParams& params, const ValidationOptions& opts = {});

} // namespace uavnet

#endif // UAVNET_VALIDATION_HPP
