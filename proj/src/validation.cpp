/*
 * Copyright (c) 2026 The uavnet authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "uavnet/validation.hpp"

#include <algorithm>
#include <cmath>

namespace uavnet
{

namespace
{

constexpr double kAbsoluteTolerance = 0.02;
constexpr double kGapBound = 0.03;

double
BinomialSigma(double p, std::uint64_t n)
{
    return n > 0 ? std::sqrt(std::clamp(p, 0.0, 1.0) * (1.0 - std::clamp(p, 0.0, 1.0)) / n) : 0.0;
}

ValidationRow
CompareWindows(const std::string& name, const MetricEstimate& base, const MetricEstimate& doubled)
{
    ValidationRow row;
    row.name = name;
    row.rule = Rule::Sigma3;
    row.analytic = base.value;
    row.simulated = doubled.value;
    row.halfWidth = doubled.halfWidth;
    row.gap = std::abs(doubled.value - base.value);
    const double sa = std::max(base.Sigma(), BinomialSigma(doubled.value, base.trials));
    const double sb = std::max(doubled.Sigma(), BinomialSigma(base.value, doubled.trials));
    row.tolerance = 3.0 * std::hypot(sa, sb);
    row.pass = row.gap <= row.tolerance;
    return row;
}

} // namespace

const char*
ToString(Rule rule)
{
    switch (rule)
    {
    case Rule::Sigma3:
        return "3sigma";
    case Rule::Absolute:
        return "abs";
    case Rule::UpperBound:
        return "max";
    }
    return "unknown";
}

bool
ValidationReport::Passed() const
{
    return std::all_of(rows.begin(), rows.end(), [](const ValidationRow& r) { return r.pass; });
}

ValidationRow
CompareSigma3(const std::string& name, double reference, const MetricEstimate& sim)
{
    ValidationRow row;
    row.name = name;
    row.rule = Rule::Sigma3;
    row.analytic = reference;
    row.simulated = sim.value;
    row.halfWidth = sim.halfWidth;
    row.gap = std::abs(sim.value - reference);
    row.tolerance = 3.0 * std::max(sim.Sigma(), BinomialSigma(reference, sim.trials));
    row.pass = sim.trials > 0 && row.gap <= row.tolerance;
    return row;
}

ValidationRow
CompareAbsolute(const std::string& name, double reference, const MetricEstimate& sim, double tol)
{
    ValidationRow row;
    row.name = name;
    row.rule = Rule::Absolute;
    row.analytic = reference;
    row.simulated = sim.value;
    row.halfWidth = sim.halfWidth;
    row.gap = std::abs(sim.value - reference);
    row.tolerance = tol;
    row.pass = sim.trials > 0 && row.gap <= tol;
    return row;
}

ValidationReport
RunValidation(const SystemParams& params, const ValidationOptions& opts)
{
    const AnalyticReport analytic = OverallCoverage(params.beta, params.tauB, params, opts.analysis);

    SimOptions sim = opts.sim;
    sim.mode = SimMode::Full;
    const MetricMap est = EstimateMetrics(params, sim);

    ValidationReport report;
    report.rows.push_back(CompareSigma3("a_g", analytic.aG, est.at(Metric::AG)));
    report.rows.push_back(CompareSigma3("a_los", analytic.aLos, est.at(Metric::ALos)));
    report.rows.push_back(CompareAbsolute("s_backhaul", analytic.sBackhaul, est.at(Metric::S), kAbsoluteTolerance));
    report.rows.push_back(CompareAbsolute("p_cov", analytic.pCov, est.at(Metric::PCov), kAbsoluteTolerance));

    const MetricEstimate& gap = est.at(Metric::IndependenceGap);
    ValidationRow independence;
    independence.name = "independence_gap";
    independence.rule = Rule::UpperBound;
    independence.simulated = gap.value;
    independence.halfWidth = gap.halfWidth;
    independence.gap = gap.value;
    independence.tolerance = kGapBound;
    independence.pass = gap.value <= kGapBound;
    report.rows.push_back(independence);

    if (opts.windowCheck)
    {
        SimOptions wide = sim;
        wide.windowScale *= 2.0;
        const MetricMap doubled = EstimateMetrics(params, wide);
        for (Metric m : {Metric::AG, Metric::ALos, Metric::S, Metric::PCov})
        {
            report.rows.push_back(
                CompareWindows(std::string("window_") + ToString(m), est.at(m), doubled.at(m)));
        }
    }
    return report;
}

} // namespace uavnet
