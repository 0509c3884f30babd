/*
 * Copyright (c) 2026 The uavnet authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "uavnet/montecarlo.hpp"

#include "uavnet/error.hpp"
#include "uavnet/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

namespace uavnet
{

namespace
{

constexpr std::uint64_t kMinConditioning = 100;
constexpr double kLosCountTarget = 14.0;
constexpr double kMaxWindowGrowth = 16.0;
constexpr double kNegligible = 1e-12;

std::uint64_t
SplitMix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

double
ResolveWindow(const SystemParams& params, double window)
{
    return window > 0.0 ? window : SimulationWindow(params);
}

} // namespace

double
SimulationWindow(const SystemParams& p)
{
    // A UAV-served UE needs an empty BS disk of radius E_a; beyond the radius
    // where that has probability 1e-12 the UAV tier is irrelevant.
    const double emptyDisk = std::sqrt(-std::log(kNegligible) / (std::numbers::pi * p.lambdaG));
    const double ea = std::min(ExclusionRadius(ExclusionKind::BsGivenUav, p.Wp(), p), emptyDisk);
    const double base =
        std::max({10.0 / std::sqrt(std::numbers::pi * p.lambdaG), 5.0 * p.rC, 20.0 * ea});

    // The LOS probability has a positive floor, so an empty LOS tier is a
    // finite-window artifact. Grow the radius until the expected number of
    // LOS BSs around the center UAV makes that event negligible.
    auto losCount = [&p](double r) {
        auto f = [&p](double t) { return LosProbability(t, p) * t; };
        return 2.0 * std::numbers::pi * p.lambdaG * quad::Integrate(f, 0.0, r, {1e-6, 1e-9, 40}).value;
    };
    double radius = base;
    while (losCount(radius) < kLosCountTarget && radius < kMaxWindowGrowth * base)
    {
        radius *= 1.25;
    }
    return std::max(base, radius + p.x0);
}

NetworkRealization
SampleRealization(const SystemParams& params, double window, Rng& rng)
{
    NetworkRealization net;
    net.ue = {params.x0, 0.0};
    net.bs = SamplePppDisk(params.lambdaG, window, net.ue, rng);
    net.uav = SampleBppDisk(params.nUav, params.rC, rng);
    return net;
}

BackhaulOutcome
EvaluateBackhaul(PlanarPoint uav,
                 std::span<const PlanarPoint> bs,
                 const SystemParams& p,
                 FadingSampler& fading,
                 const GainDistribution& gains,
                 Rng& rng)
{
    BackhaulOutcome out;
    if (bs.empty())
    {
        return out;
    }
    std::bernoulli_distribution coin;
    const double dh2 = p.DeltaH() * p.DeltaH();

    struct Link
    {
        double horizontal;
        double pathGain;
        bool los;
    };
    std::vector<Link> links;
    links.reserve(bs.size());
    size_t best = 0;
    for (size_t i = 0; i < bs.size(); ++i)
    {
        const double s = std::hypot(bs[i].x - uav.x, bs[i].y - uav.y);
        const bool los = coin(rng, decltype(coin)::param_type(LosProbability(s, p)));
        const double gain = los ? p.cL * std::pow(s * s + dh2, -p.etaL / 2.0)
                                : p.cN * std::pow(s * s + dh2, -p.etaN / 2.0);
        links.push_back({s, gain, los});
        if (gain > links[best].pathGain)
        {
            best = i;
        }
    }

    double interference = 0.0;
    double signal = 0.0;
    for (size_t i = 0; i < links.size(); ++i)
    {
        const LinkKind kind = links[i].los ? LinkKind::BackhaulLos : LinkKind::BackhaulNlos;
        const double omega = fading.Sample(kind, rng);
        if (i == best)
        {
            signal = p.pTb * gains.g0 * links[i].pathGain * omega;
            continue;
        }
        const double g = SampleInterfererGain(gains, rng);
        interference += p.pTb * g * links[i].pathGain * omega;
    }
    out.valid = true;
    out.los = links[best].los;
    out.servingDist = links[best].horizontal;
    out.sinr = signal / (p.sigma2 + interference);
    return out;
}

TrialOutcome
RunTrial(const SystemParams& p, Rng& rng, double window)
{
    const NetworkRealization net = SampleRealization(p, ResolveWindow(p, window), rng);
    FadingSampler fading(p);
    const GainDistribution gains = MakeGainDistribution(p.antenna);
    TrialOutcome out;

    // Mean received powers; association ignores fading.
    std::vector<double> bsPower(net.bs.size());
    std::vector<double> bsHorizontal(net.bs.size());
    size_t nearestBs = 0;
    for (size_t i = 0; i < net.bs.size(); ++i)
    {
        bsHorizontal[i] = std::hypot(net.bs[i].x - net.ue.x, net.bs[i].y - net.ue.y);
        bsPower[i] = MeanRxPower(LinkKind::AccessBs, bsHorizontal[i], p);
        if (bsPower[i] > bsPower[nearestBs])
        {
            nearestBs = i;
        }
    }
    std::vector<double> uavPower(net.uav.size());
    std::vector<double> uavDist(net.uav.size());
    size_t nearestUav = 0;
    for (size_t i = 0; i < net.uav.size(); ++i)
    {
        const double dx = net.uav[i].x - net.ue.x;
        const double dy = net.uav[i].y - net.ue.y;
        uavDist[i] = std::sqrt(dx * dx + dy * dy + p.hA * p.hA);
        uavPower[i] = MeanRxPower(LinkKind::AccessUav, uavDist[i], p);
        if (uavPower[i] > uavPower[nearestUav])
        {
            nearestUav = i;
        }
    }

    if (net.bs.empty() && net.uav.empty())
    {
        out.noServer = true;
    }
    else
    {
        const bool bsWins =
            net.uav.empty() || (!net.bs.empty() && bsPower[nearestBs] > uavPower[nearestUav]);
        out.assoc = bsWins ? Association::Bs : Association::Uav;
        out.servingDist = bsWins ? bsHorizontal[nearestBs] : uavDist[nearestUav];

        double signal = 0.0;
        double interference = 0.0;
        for (size_t i = 0; i < net.bs.size(); ++i)
        {
            const double rx = bsPower[i] * fading.Sample(LinkKind::AccessBs, rng);
            (bsWins && i == nearestBs ? signal : interference) += rx;
        }
        for (size_t i = 0; i < net.uav.size(); ++i)
        {
            const double rx = uavPower[i] * fading.Sample(LinkKind::AccessUav, rng);
            (!bsWins && i == nearestUav ? signal : interference) += rx;
        }
        out.sir = interference > 0.0 ? signal / interference : std::numeric_limits<double>::infinity();
        out.sirOk = out.sir >= p.beta;

        if (!bsWins)
        {
            const auto& u = net.uav[nearestUav];
            const BackhaulOutcome bh = EvaluateBackhaul({u.x, u.y}, net.bs, p, fading, gains, rng);
            out.backhaulSinr = bh.sinr;
            out.backhaulOk = bh.valid && bh.sinr >= p.tauB;
        }
        out.covered = out.sirOk && (bsWins || out.backhaulOk);
    }

    out.reference = EvaluateBackhaul({0.0, 0.0}, net.bs, p, fading, gains, rng);
    out.referenceOk = out.reference.valid && out.reference.sinr >= p.tauB;
    return out;
}

TrialOutcome
RunCenterTrial(const SystemParams& p, Rng& rng, double window)
{
    FadingSampler fading(p);
    const GainDistribution gains = MakeGainDistribution(p.antenna);
    const auto bs = SamplePppDisk(p.lambdaG, ResolveWindow(p, window), {0.0, 0.0}, rng);
    TrialOutcome out;
    out.reference = EvaluateBackhaul({0.0, 0.0}, bs, p, fading, gains, rng);
    out.referenceOk = out.reference.valid && out.reference.sinr >= p.tauB;
    return out;
}

Rng
TrialRng(std::uint64_t seed, std::uint64_t trial)
{
    return Rng(SplitMix64(SplitMix64(seed) ^ SplitMix64(trial + 0x632BE59BD9B4E019ULL)));
}

std::vector<TrialOutcome>
SimulateTrials(const SystemParams& params, const SimOptions& opts)
{
    if (opts.nTrials < 1)
    {
        throw Error(ErrorCode::InvalidArgument, "at least one trial is required");
    }
    if (!(opts.windowScale > 0.0) || opts.windowRadius < 0.0)
    {
        throw Error(ErrorCode::InvalidArgument, "window radius and scale must be positive");
    }
    auto checks = Validate(params);
    // The simulator tolerates an empty UAV set; everything else must be valid.
    std::erase_if(checks.issues, [](const ValidationIssue& i) { return i.field == "n_uav"; });
    if (!checks.Ok() || params.nUav < 0)
    {
        throw Error(ErrorCode::InvalidParams, "invalid parameters:\n" + checks.Describe());
    }

    const double window = ResolveWindow(params, opts.windowRadius) * opts.windowScale;
    std::vector<TrialOutcome> outcomes(opts.nTrials);
    unsigned jobs = opts.jobs > 0 ? static_cast<unsigned>(opts.jobs) : std::thread::hardware_concurrency();
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::uint64_t>(opts.nTrials, 256))));

    auto work = [&](unsigned worker) {
        for (std::uint64_t i = worker; i < opts.nTrials; i += jobs)
        {
            Rng rng = TrialRng(opts.seed, i);
            outcomes[i] = opts.mode == SimMode::Full ? RunTrial(params, rng, window)
                                                     : RunCenterTrial(params, rng, window);
        }
    };
    if (jobs == 1)
    {
        work(0);
    }
    else
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < jobs; ++w)
        {
            pool.emplace_back(work, w);
        }
    }
    return outcomes;
}

const char*
ToString(Metric metric)
{
    switch (metric)
    {
    case Metric::AG:
        return "a_g";
    case Metric::AA:
        return "a_a";
    case Metric::ALos:
        return "a_los";
    case Metric::ANlos:
        return "a_nlos";
    case Metric::S:
        return "s_backhaul";
    case Metric::PCovG:
        return "p_cov_g";
    case Metric::PCovA:
        return "p_cov_a";
    case Metric::PCov:
        return "p_cov";
    case Metric::IndependenceGap:
        return "independence_gap";
    }
    return "unknown";
}

MetricEstimate
Proportion(std::uint64_t hits, std::uint64_t trials)
{
    MetricEstimate e;
    e.trials = trials;
    e.flagged = trials < kMinConditioning;
    if (trials == 0)
    {
        return e;
    }
    e.value = static_cast<double>(hits) / static_cast<double>(trials);
    e.halfWidth = 1.96 * std::sqrt(e.value * (1.0 - e.value) / static_cast<double>(trials));
    return e;
}

namespace
{

MetricEstimate
Gap(std::uint64_t both, std::uint64_t sirOnly, std::uint64_t sinrOnly, std::uint64_t n)
{
    MetricEstimate e;
    e.trials = n;
    e.flagged = n < kMinConditioning;
    if (n == 0)
    {
        return e;
    }
    const double dn = static_cast<double>(n);
    const double p11 = both / dn;
    const double p10 = sirOnly / dn;
    const double p01 = sinrOnly / dn;
    const double a = p11 + p10;
    const double b = p11 + p01;
    const double delta = p11 - a * b;
    e.value = std::abs(delta);
    // Delta method on the multinomial cell frequencies (p00 has zero gradient).
    const double g11 = 1.0 - a - b;
    const double g10 = -b;
    const double g01 = -a;
    const double mean = g11 * p11 + g10 * p10 + g01 * p01;
    const double second = g11 * g11 * p11 + g10 * g10 * p10 + g01 * g01 * p01;
    e.halfWidth = 1.96 * std::sqrt(std::max(second - mean * mean, 0.0) / dn);
    return e;
}

} // namespace

MetricMap
Summarize(std::span<const TrialOutcome> outcomes, SimMode mode, double beta, double tauB)
{
    std::uint64_t n = 0;
    std::uint64_t refValid = 0;
    std::uint64_t refLos = 0;
    std::uint64_t refOk = 0;
    std::uint64_t bs = 0;
    std::uint64_t uav = 0;
    std::uint64_t bsSir = 0;
    std::uint64_t uavBoth = 0;
    std::uint64_t uavSirOnly = 0;
    std::uint64_t uavSinrOnly = 0;
    std::uint64_t covered = 0;
    for (const auto& o : outcomes)
    {
        ++n;
        if (o.reference.valid)
        {
            ++refValid;
            refLos += o.reference.los ? 1 : 0;
            // tau_b = 0 accepts every link, including a zero SINR.
            refOk += o.reference.sinr >= tauB ? 1 : 0;
        }
        if (mode == SimMode::CenterUav || o.noServer)
        {
            continue;
        }
        const bool sirOk = o.sir >= beta;
        if (o.assoc == Association::Bs)
        {
            ++bs;
            bsSir += sirOk ? 1 : 0;
            covered += sirOk ? 1 : 0;
        }
        else
        {
            ++uav;
            const bool sinrOk = o.backhaulSinr >= tauB && (tauB == 0.0 || o.backhaulSinr > 0.0);
            uavBoth += (sirOk && sinrOk) ? 1 : 0;
            uavSirOnly += (sirOk && !sinrOk) ? 1 : 0;
            uavSinrOnly += (!sirOk && sinrOk) ? 1 : 0;
            covered += (sirOk && sinrOk) ? 1 : 0;
        }
    }

    MetricMap m;
    m[Metric::ALos] = Proportion(refLos, refValid);
    m[Metric::ANlos] = Proportion(refValid - refLos, refValid);
    m[Metric::S] = Proportion(refOk, n);
    if (mode == SimMode::CenterUav)
    {
        return m;
    }
    m[Metric::AG] = Proportion(bs, n);
    m[Metric::AA] = Proportion(n - bs, n);
    m[Metric::PCovG] = Proportion(bsSir, bs);
    m[Metric::PCovA] = Proportion(uavBoth, uav);
    m[Metric::PCov] = Proportion(covered, n);
    m[Metric::IndependenceGap] = Gap(uavBoth, uavSirOnly, uavSinrOnly, uav);
    return m;
}

MetricMap
EstimateMetrics(const SystemParams& params, const SimOptions& opts)
{
    const auto outcomes = SimulateTrials(params, opts);
    return Summarize(outcomes, opts.mode, params.beta, params.tauB);
}

MetricEstimate
IndependenceGap(const SystemParams& params, const SimOptions& opts)
{
    SimOptions full = opts;
    full.mode = SimMode::Full;
    return EstimateMetrics(params, full).at(Metric::IndependenceGap);
}

} // namespace uavnet
