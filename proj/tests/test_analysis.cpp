/*
 * Copyright (c) 2026 The uavnet authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "oracles.hpp"

#include "uavnet/analysis.hpp"
#include "uavnet/channel.hpp"
#include "uavnet/error.hpp"
#include "uavnet/geometry.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace uavnet;
using doctest::Approx;
using std::numbers::pi;

namespace
{

const AnalysisOptions kTight{{1e-12, 1e-16, 60}};

SystemParams
At(double ha, double x0 = 0.0)
{
    SystemParams p = DefaultParams();
    p.hA = ha;
    p.x0 = x0;
    return p;
}

/// exp(-2 pi lambda int_x^inf s a(z) / (1 + s a(z)) z dz), a(z) = P (z^2 + h^2)^(-eta/2); Simpson plus a power-law tail.
double
BsLaplaceOracle(double s, double x, const SystemParams& p)
{
    const double zMax = std::max(200.0 * x, 2e5);
    auto f = [&](double z) {
        const double a = s * p.pTg * std::pow(z * z + p.hG * p.hG, -p.etaG / 2.0);
        return a / (1.0 + a) * z;
    };
    const double body = oracle::SimpsonPieces(f, {x, x + 100.0, x + 2000.0, 50000.0, zMax}, 20000);
    const double tail = s * p.pTg * std::pow(zMax, 2.0 - p.etaG) / (p.etaG - 2.0);
    return std::exp(-2.0 * pi * p.lambdaG * (body + tail));
}

/// (E[(1 + s P_ta U^-eta_a / m_a)^-m_a | U > lower])^n by Simpson over the distance law.
double
UavLaplaceOracle(double s, double lower, int n, const SystemParams& p)
{
    const double lo = std::max(lower, p.hA);
    auto f = [&](double u) {
        return std::pow(1.0 + s * p.pTa * std::pow(u, -p.etaA) / p.mA, -p.mA) * UavDistancePdf(u, p);
    };
    std::vector<double> cuts{lo, p.Wp()};
    if (p.Wm() > lo)
    {
        cuts.push_back(p.Wm());
    }
    return std::pow(oracle::SimpsonPieces(f, cuts, 20000) / UavDistanceCcdf(lo, p), n);
}

} // namespace

TEST_CASE("association probabilities: complement and the UAV-side oracle")
{
    for (double ha : {60.0, 100.0, 200.0})
    {
        for (double x0 : {0.0, 300.0})
        {
            const SystemParams p = At(ha, x0);
            const auto split = AssociationProbabilities(p);
            CHECK(split.aG + split.aA == 1.0);
            // Integrate over the nearest-UAV distance instead of the nearest-BS distance.
            auto f = [&](double x) {
                const double ea = ExclusionRadius(ExclusionKind::BsGivenUav, x, p);
                return p.nUav * UavDistancePdf(x, p) * std::pow(UavDistanceCcdf(x, p), p.nUav - 1) *
                       std::exp(-pi * p.lambdaG * ea * ea);
            };
            const double aa = oracle::SimpsonPieces(f, {p.hA, p.Wm(), p.Wp()}, 20000);
            CHECK(split.aA == Approx(aa).epsilon(1e-6));
        }
    }
}

TEST_CASE("serving-distance densities integrate to one")
{
    for (double ha : {60.0, 100.0, 200.0})
    {
        for (double x0 : {0.0, 300.0})
        {
            const SystemParams p = At(ha, x0);
            const ServingDistanceLaws laws(p);
            auto bs = [&](double x) { return laws.Access(Tier::Bs, x); };
            auto cuts = laws.BsBreakpoints();
            cuts.push_back(0.0);
            cuts.push_back(laws.BsRange());
            std::erase_if(cuts, [&](double c) { return c > laws.BsRange(); });
            CHECK(oracle::SimpsonPieces(bs, cuts, 4000) == Approx(1.0).epsilon(1e-6));

            auto uav = [&](double x) { return laws.Access(Tier::Uav, x); };
            auto ucuts = laws.UavBreakpoints();
            ucuts.push_back(p.hA);
            ucuts.push_back(p.Wp());
            std::erase_if(ucuts, [&](double c) { return c < p.hA || c > p.Wp(); });
            CHECK(oracle::SimpsonPieces(uav, ucuts, 4000) == Approx(1.0).epsilon(1e-6));
        }
    }
}

TEST_CASE("ServingDistancePdf agrees with the shared-law object")
{
    const SystemParams p = At(100.0);
    const ServingDistanceLaws laws(p);
    CHECK(ServingDistancePdf(Tier::Bs, 80.0, p) == laws.Access(Tier::Bs, 80.0));
    CHECK(ServingDistancePdf(Tier::Uav, 500.0, p) == laws.Access(Tier::Uav, 500.0));
    CHECK(BackhaulServingDistancePdf(BackhaulTier::Los, 300.0, p) == laws.Backhaul(BackhaulTier::Los, 300.0));
    CHECK(laws.Association().aG == AssociationProbabilities(p).aG);
}

TEST_CASE("BS Laplace transform: closed form for eta_g = 4")
{
    const SystemParams p = At(100.0);
    REQUIRE(p.etaG == 4.0);
    for (double x : {20.0, 150.0, 700.0})
    {
        for (double s : {1e6, 1e9, 1e11})
        {
            const double root = std::sqrt(s * p.pTg);
            const double exponent =
                2.0 * pi * p.lambdaG * (root / 2.0) * (pi / 2.0 - std::atan((x * x + p.hG * p.hG) / root));
            CHECK(InterferenceLaplace(LaplaceScenario::BsExceptServing, s, x, p, kTight) ==
                  Approx(std::exp(-exponent)).epsilon(1e-9));
        }
    }
}

TEST_CASE("BS Laplace transform: general exponent against direct quadrature")
{
    SystemParams p = At(100.0);
    p.etaG = 3.3;
    for (double x : {30.0, 400.0})
    {
        for (double s : {1e5, 1e8})
        {
            CHECK(InterferenceLaplace(LaplaceScenario::BsExceptServing, s, x, p, kTight) ==
                  Approx(BsLaplaceOracle(s, x, p)).epsilon(1e-6));
        }
    }
    // UAV-served UE: BSs start at E_a(x).
    const double xa = 300.0;
    const double ea = ExclusionRadius(ExclusionKind::BsGivenUav, xa, p);
    CHECK(InterferenceLaplace(LaplaceScenario::AllBsGivenUav, 1e7, xa, p, kTight) ==
          Approx(BsLaplaceOracle(1e7, ea, p)).epsilon(1e-6));
}

TEST_CASE("UAV Laplace transforms against direct quadrature")
{
    for (double x0 : {0.0, 300.0})
    {
        const SystemParams p = At(100.0, x0);
        for (double s : {1e3, 1e5, 1e7})
        {
            const double xa = 400.0;
            CHECK(InterferenceLaplace(LaplaceScenario::UavsExceptServing, s, xa, p, kTight) ==
                  Approx(UavLaplaceOracle(s, xa, p.nUav - 1, p)).epsilon(1e-7));
            const double r = 120.0;
            const double eg = ExclusionRadius(ExclusionKind::UavGivenBs, r, p);
            CHECK(InterferenceLaplace(LaplaceScenario::UavsGivenBs, s, r, p, kTight) ==
                  Approx(UavLaplaceOracle(s, eg, p.nUav, p)).epsilon(1e-7));
        }
    }
}

TEST_CASE("Laplace transforms: unity at zero and strictly decreasing")
{
    const SystemParams p = At(100.0);
    struct Case
    {
        LaplaceScenario scenario;
        double dist;
        double power;
    };
    const Case cases[] = {
        {LaplaceScenario::BsExceptServing, 100.0, MeanRxPower(LinkKind::AccessBs, 100.0, p)},
        {LaplaceScenario::UavsGivenBs, 100.0, MeanRxPower(LinkKind::AccessBs, 100.0, p)},
        {LaplaceScenario::AllBsGivenUav, 400.0, MeanRxPower(LinkKind::AccessUav, 400.0, p)},
        {LaplaceScenario::UavsExceptServing, 400.0, MeanRxPower(LinkKind::AccessUav, 400.0, p)},
    };
    for (const auto& c : cases)
    {
        CHECK(InterferenceLaplace(c.scenario, 0.0, c.dist, p) == 1.0);
        double prev = 1.0;
        for (int k = 0; k < 10; ++k)
        {
            const double s = std::pow(10.0, -3.0 + 6.0 * k / 9.0) / c.power;
            const double v = InterferenceLaplace(c.scenario, s, c.dist, p);
            CHECK(v < prev);
            CHECK(v > 0.0);
            prev = v;
        }
    }
    CHECK_THROWS_AS(InterferenceLaplace(LaplaceScenario::BsExceptServing, -1.0, 10.0, p), Error);
}

TEST_CASE("Laplace product derivatives match finite differences")
{
    for (double x0 : {0.0, 300.0})
    {
        const SystemParams p = At(100.0, x0);
        for (double xa : {150.0, 600.0})
        {
            auto product = [&](double s) {
                return InterferenceLaplace(LaplaceScenario::AllBsGivenUav, s, xa, p, kTight) *
                       InterferenceLaplace(LaplaceScenario::UavsExceptServing, s, xa, p, kTight);
            };
            const double s = p.mA * std::pow(xa, p.etaA) / p.pTa;
            CHECK(LaplaceProductDerivative(s, 0, xa, p, kTight) == Approx(product(s)).epsilon(1e-10));
            for (int k = 1; k <= 3; ++k)
            {
                const double analytic = LaplaceProductDerivative(s, k, xa, p, kTight);
                const double numeric = quad::Derivative(product, s, k);
                CHECK_MESSAGE(analytic == Approx(numeric).epsilon(k < 3 ? 1e-4 : 1e-3),
                              "order " << k << " xa " << xa);
                CHECK((k % 2 == 1 ? analytic < 0.0 : analytic > 0.0));
            }
        }
    }
}

TEST_CASE("backhaul tier densities integrate to one and split exactly")
{
    for (double ha : {60.0, 100.0, 200.0})
    {
        SystemParams p = At(ha);
        p.cN = DbToLinear(-60.0);
        const ServingDistanceLaws laws(p);
        const auto split = laws.BackhaulTiers();
        CHECK(split.aLos + split.aNlos == 1.0);
        CHECK(split.aLos > 0.0);
        CHECK(split.aNlos > 0.0);
        auto los = [&](double x) { return laws.Backhaul(BackhaulTier::Los, x); };
        auto nlos = [&](double x) { return laws.Backhaul(BackhaulTier::Nlos, x); };
        const double r0 = 1.0 / std::sqrt(pi * p.lambdaG);
        const std::vector<double> cuts{0.0, 100.0, r0, 3.0 * r0, 8.0 * r0, 20.0 * r0, 60.0 * r0};
        CHECK(oracle::SimpsonPieces(los, cuts, 2000) == Approx(1.0).epsilon(1e-5));
        CHECK(oracle::SimpsonPieces(nlos, cuts, 2000) == Approx(1.0).epsilon(1e-5));
    }
}

TEST_CASE("backhaul probability limits and monotonicity")
{
    const SystemParams p = At(100.0);
    CHECK(BackhaulProbability(0.0, p) == 1.0);
    double prev = 1.0;
    for (double db : {-10.0, 0.0, 5.0, 10.0, 20.0, 30.0})
    {
        const double v = BackhaulProbability(DbToLinear(db), p);
        CHECK(v <= prev);
        CHECK(v >= 0.0);
        prev = v;
    }
    CHECK(BackhaulProbability(DbToLinear(60.0), p) < 1e-3);
}

TEST_CASE("coverage limits")
{
    const SystemParams p = At(100.0);
    CHECK(ConditionalCoverageBs(1e-6, p) == Approx(1.0).epsilon(1e-3));
    const double tau = DbToLinear(5.0);
    const auto low = OverallCoverage(1e-6, tau, p);
    CHECK(low.pCov == Approx(low.aG + low.aA * low.sBackhaul).epsilon(1e-3));
    CHECK(ConditionalCoverageUav(1.0, 0.0, p) ==
          Approx(ConditionalCoverageUav(1.0, tau, p) / BackhaulProbability(tau, p)).epsilon(1e-9));
    CHECK_THROWS_AS(ConditionalCoverageBs(0.0, p), Error);
}

TEST_CASE("overall coverage assembles by total probability")
{
    for (double ha : {60.0, 100.0, 200.0})
    {
        const SystemParams p = At(ha);
        const auto r = OverallCoverage(1.0, 1.0, p);
        CHECK(r.aG + r.aA == 1.0);
        CHECK(r.aLos + r.aNlos == 1.0);
        CHECK(r.pCov == r.aA * r.pCovA + r.aG * r.pCovG);
        CHECK(r.pCovG == Approx(ConditionalCoverageBs(1.0, p)));
        CHECK(r.pCovA == Approx(ConditionalCoverageUav(1.0, 1.0, p)));
        CHECK(r.sBackhaul == Approx(BackhaulProbability(1.0, p)));
        for (double v : {r.pCovG, r.pCovA, r.pCov, r.sBackhaul})
        {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
        CHECK(r.error.aG < 1e-6);
    }
}

TEST_CASE("coverage decreases with the SIR threshold")
{
    const SystemParams p = At(100.0);
    double prevG = 1.0;
    double prevA = 1.0;
    for (double db : {-10.0, -5.0, 0.0, 5.0, 10.0})
    {
        const double g = ConditionalCoverageBs(DbToLinear(db), p);
        const double a = ConditionalCoverageUav(DbToLinear(db), 1.0, p);
        CHECK(g < prevG);
        CHECK(a < prevA);
        prevG = g;
        prevA = a;
    }
}

TEST_CASE("single UAV has no UAV interferers")
{
    SystemParams p = At(100.0);
    p.nUav = 1;
    CHECK(InterferenceLaplace(LaplaceScenario::UavsExceptServing, 1e6, 300.0, p) == 1.0);
    const auto r = OverallCoverage(1.0, 1.0, p);
    CHECK(r.aA > 0.0);
    CHECK(r.pCov > 0.0);
}

TEST_CASE("invalid parameters are rejected")
{
    SystemParams p = At(100.0);
    p.etaG = 1.9;
    CHECK_THROWS_AS(OverallCoverage(1.0, 1.0, p), Error);
    CHECK_THROWS_AS(AssociationProbabilities(p), Error);
}

TEST_CASE("closed form is limited to small UAV fading shapes")
{
    SystemParams p = At(100.0);
    p.mA = 4;
    const auto r = OverallCoverage(1.0, 1.0, p);
    CHECK(r.pCovA > 0.0);
    CHECK(r.pCovA < 1.0);
    p.mA = 5;
    try
    {
        ConditionalCoverageUav(1.0, 1.0, p);
        FAIL("expected an error");
    }
    catch (const Error& e)
    {
        CHECK(e.Code() == ErrorCode::InvalidParams);
    }
}

TEST_CASE("steep LOS transition stays finite")
{
    SystemParams p = At(100.0);
    p.envB = 1e4;
    const auto r = OverallCoverage(1.0, 1.0, p);
    CHECK(r.aLos + r.aNlos == 1.0);
    CHECK(std::isfinite(r.pCov));
    CHECK(r.sBackhaul >= 0.0);
    CHECK(r.sBackhaul <= 1.0);
}

TEST_CASE("a degenerate backhaul tier keeps a usable joint density")
{
    const SystemParams p = At(200.0);
    const ServingDistanceLaws laws(p);
    const auto split = laws.BackhaulTiers();
    REQUIRE(split.aNlos < 1e-12);
    REQUIRE(split.aNlos > 0.0);
    CHECK_THROWS_AS(laws.Backhaul(BackhaulTier::Nlos, 500.0), Error);
    auto joint = [&](double x) { return laws.BackhaulJoint(BackhaulTier::Nlos, x); };
    const double r0 = 1.0 / std::sqrt(pi * p.lambdaG);
    const std::vector<double> cuts{0.0, 100.0, r0, 3.0 * r0, 8.0 * r0, 20.0 * r0, 60.0 * r0};
    CHECK(oracle::SimpsonPieces(joint, cuts, 2000) / split.aNlos == Approx(1.0).epsilon(1e-5));
    CHECK(laws.BackhaulJoint(BackhaulTier::Los, 300.0) ==
          Approx(split.aLos * laws.Backhaul(BackhaulTier::Los, 300.0)).epsilon(1e-12));
}
