/*
 * Copyright (c) 2026 The uavnet authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "uavnet/channel.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace uavnet;
using doctest::Approx;

TEST_CASE("LOS probability follows the elevation logistic")
{
    const SystemParams p = DefaultParams();
    const double a = p.envA;
    const double b = p.envB;
    CHECK(LosProbability(0.0, p) == Approx(1.0 / (1.0 + a * std::exp(-b * (90.0 - a)))));
    const double theta = std::atan(70.0 / 70.0) * 180.0 / std::numbers::pi;
    CHECK(LosProbability(70.0, p) == Approx(1.0 / (1.0 + a * std::exp(-b * (theta - a)))));
    double prev = 1.0;
    for (double s = 1.0; s < 1e6; s *= 1.7)
    {
        const double v = LosProbability(s, p);
        CHECK(v <= prev);
        CHECK(v > 0.0);
        prev = v;
    }
    CHECK(LosProbability(1e9, p) == Approx(1.0 / (1.0 + a * std::exp(b * a))).epsilon(1e-6));
}

TEST_CASE("mean received power by link kind")
{
    const SystemParams p = DefaultParams();
    CHECK(MeanRxPower(LinkKind::AccessBs, 40.0, p) == Approx(20.0 * std::pow(50.0, -4.0)));
    CHECK(MeanRxPower(LinkKind::AccessUav, 200.0, p) == Approx(std::pow(200.0, -2.5)));
    CHECK(MeanRxPower(LinkKind::BackhaulLos, 300.0, p) == Approx(10.0 * p.cL * std::pow(300.0, -2.5)));
    CHECK(MeanRxPower(LinkKind::BackhaulNlos, 300.0, p) == Approx(10.0 * p.cN * std::pow(300.0, -4.0)));
}

TEST_CASE("fading samplers have unit mean and 1/m variance")
{
    SystemParams p = DefaultParams();
    p.mN = 2.0;
    FadingSampler fading(p);
    Rng rng(3);
    const int n = 200000;
    struct Case
    {
        LinkKind kind;
        double m;
    };
    for (const Case c : {Case{LinkKind::AccessBs, 1.0},
                         Case{LinkKind::AccessUav, p.mA},
                         Case{LinkKind::BackhaulLos, p.mL},
                         Case{LinkKind::BackhaulNlos, p.mN}})
    {
        double s = 0.0;
        double s2 = 0.0;
        for (int i = 0; i < n; ++i)
        {
            const double v = fading.Sample(c.kind, rng);
            s += v;
            s2 += v * v;
        }
        const double mean = s / n;
        CHECK(mean == Approx(1.0).epsilon(0.01));
        CHECK(s2 / n - mean * mean == Approx(1.0 / c.m).epsilon(0.03));
    }
}

TEST_CASE("interferer beam gains against uniformly steered beams")
{
    const SystemParams p = DefaultParams();
    const GainDistribution gd = MakeGainDistribution(p.antenna);
    double total = 0.0;
    for (double q : gd.probs)
    {
        CHECK(q >= 0.0);
        total += q;
    }
    CHECK(total == Approx(1.0).epsilon(1e-15));
    CHECK(gd.g0 == Approx(std::pow(10.0, 3.6)));

    // Oracle: steer both beams uniformly and check whether each main lobe covers the link direction.
    Rng rng(9);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    const int n = 400000;
    double sampledMean = 0.0;
    int mainMain = 0;
    for (int i = 0; i < n; ++i)
    {
        const bool bsMain = std::abs(angle(rng)) <= p.antenna.thetaBs / 2.0;
        const bool uavMain = std::abs(angle(rng)) <= p.antenna.thetaUav / 2.0;
        mainMain += (bsMain && uavMain) ? 1 : 0;
        sampledMean += SampleInterfererGain(gd, rng);
    }
    const double expectedMain = std::pow(20.0 / 360.0, 2);
    CHECK(gd.probs[0] == Approx(expectedMain));
    CHECK(static_cast<double>(mainMain) / n == Approx(expectedMain).epsilon(0.05));
    // Independent beams: the mean gain factorizes.
    const double cg = p.antenna.thetaBs / (2.0 * std::numbers::pi);
    const double ca = p.antenna.thetaUav / (2.0 * std::numbers::pi);
    const double expectedMean = (cg * p.antenna.gMainBs + (1.0 - cg) * p.antenna.gSideBs) *
                                (ca * p.antenna.gMainUav + (1.0 - ca) * p.antenna.gSideUav);
    CHECK(gd.Mean() == Approx(expectedMean).epsilon(1e-12));
    CHECK(sampledMean / n == Approx(gd.Mean()).epsilon(0.03));
}
