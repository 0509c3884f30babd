/*
 * Copyright (c) 2026 The uavnet authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "uavnet/error.hpp"
#include "uavnet/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

using namespace uavnet;
using doctest::Approx;

TEST_CASE("polynomials up to degree 22 are exact on one segment")
{
    for (int k = 0; k <= 22; ++k)
    {
        auto f = [k](double x) { return std::pow(x, k); };
        const auto r = quad::Integrate(f, 0.0, 1.0);
        CHECK(r.value == Approx(1.0 / (k + 1)).epsilon(1e-12));
    }
}

TEST_CASE("smooth and peaked integrands")
{
    using std::numbers::pi;
    CHECK(quad::Integrate([](double x) { return std::sin(x); }, 0.0, pi).value == Approx(2.0).epsilon(1e-12));
    CHECK(quad::Integrate([](double x) { return std::exp(-x * x); }, -10.0, 10.0).value ==
          Approx(std::sqrt(pi)).epsilon(1e-12));
    // Narrow Lorentzian well away from the midpoint.
    const double w = 1e-4;
    auto peak = [w](double x) { return w / ((x - 0.3) * (x - 0.3) + w * w); };
    const double exact = std::atan(0.7 / w) + std::atan(0.3 / w);
    CHECK(quad::Integrate(peak, 0.0, 1.0, {1e-10, 1e-14, 60}).value == Approx(exact).epsilon(1e-9));
}

TEST_CASE("integrable endpoint singularities")
{
    CHECK(quad::Integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, {1e-9, 1e-14, 80}).value ==
          Approx(2.0).epsilon(1e-7));
    CHECK(quad::Integrate([](double x) { return std::log(x); }, 0.0, 1.0, {1e-10, 1e-14, 80}).value ==
          Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("semi-infinite ranges")
{
    using std::numbers::pi;
    CHECK(quad::IntegrateSemiInfinite([](double t) { return std::exp(-t); }, 0.0).value ==
          Approx(1.0).epsilon(1e-10));
    CHECK(quad::IntegrateSemiInfinite([](double t) { return 1.0 / (1.0 + t * t); }, 0.0).value ==
          Approx(pi / 2).epsilon(1e-10));
    // Slow algebraic tail: the squared map keeps it well conditioned.
    auto tail = [](double t) { return std::pow(t, -1.5); };
    CHECK(quad::IntegrateSemiInfinite(tail, 1.0, {1e-10, 1e-14, 60}, 1.0, 2).value == Approx(2.0).epsilon(1e-9));
    CHECK(quad::IntegrateSemiInfinite([](double t) { return std::exp(-t / 500.0); }, 100.0, {}, 500.0).value ==
          Approx(500.0 * std::exp(-0.2)).epsilon(1e-10));
}

TEST_CASE("degenerate and failing cases")
{
    CHECK(quad::Integrate([](double) { return 1.0; }, 2.0, 2.0).value == 0.0);
    CHECK_THROWS_AS(quad::Integrate([](double) { return 1.0; }, 1.0, 0.0), Error);
    try
    {
        quad::Integrate([](double x) { return 1.0 / x; }, 0.0, 1.0, {1e-10, 1e-14, 20});
        FAIL("expected NonConvergence");
    }
    catch (const Error& e)
    {
        CHECK(e.Code() == ErrorCode::NonConvergence);
    }
    try
    {
        quad::Integrate([](double x) { return x > 0.5 ? std::numeric_limits<double>::quiet_NaN() : x; }, 0.0, 1.0);
        FAIL("expected NonFiniteEvaluation");
    }
    catch (const Error& e)
    {
        CHECK(e.Code() == ErrorCode::NonFiniteEvaluation);
    }
}

TEST_CASE("error estimate bounds the true error")
{
    auto f = [](double x) { return std::exp(std::sin(5.0 * x)); };
    const auto loose = quad::Integrate(f, 0.0, 3.0, {1e-4, 1e-12, 60});
    const auto tight = quad::Integrate(f, 0.0, 3.0, {1e-13, 1e-15, 60});
    CHECK(std::abs(loose.value - tight.value) <= loose.error + 1e-14);
    CHECK(loose.evaluations < tight.evaluations);
}

TEST_CASE("finite-difference derivatives")
{
    auto e = [](double x) { return std::exp(x); };
    CHECK(quad::Derivative(e, 1.0, 0) == std::exp(1.0));
    CHECK(quad::Derivative(e, 1.0, 1) == Approx(std::exp(1.0)).epsilon(1e-8));
    CHECK(quad::Derivative(e, 1.0, 2) == Approx(std::exp(1.0)).epsilon(1e-6));
    CHECK(quad::Derivative([](double x) { return std::pow(x, 4); }, 2.0, 3) == Approx(48.0).epsilon(1e-5));
    CHECK(quad::Derivative(e, 1.0, 4) == Approx(std::exp(1.0)).epsilon(1e-3));
    auto s = [](double x) { return std::sin(x / 1e3); };
    CHECK(quad::Derivative(s, 2e3, 1) == Approx(std::cos(2.0) / 1e3).epsilon(1e-7));
    CHECK(quad::Derivative(s, 2e3, 2) == Approx(-std::sin(2.0) / 1e6).epsilon(1e-5));
    CHECK_THROWS_AS(quad::Derivative(e, 0.0, 5), Error);
}

TEST_CASE("interference kernel against a brute-force trapezoid")
{
    const double s = 1e6;
    const double power = 20.0;
    const double h = 30.0;
    const double x = 100.0;
    auto f = [&](double z) { return (1.0 - 1.0 / (1.0 + s * power * std::pow(z * z + h * h, -2.0))) * z; };
    const double cutoff = 1e6;
    const long n = 10000000;
    // Geometric grid so the 10^7 points resolve both the core and the tail.
    const double ratio = std::pow(cutoff / x, 1.0 / n);
    double brute = 0.0;
    double z0 = x;
    double f0 = f(z0);
    for (long i = 0; i < n; ++i)
    {
        const double z1 = z0 * ratio;
        const double f1 = f(z1);
        brute += 0.5 * (f0 + f1) * (z1 - z0);
        z0 = z1;
        f0 = f1;
    }
    brute += s * power / (2.0 * cutoff * cutoff);
    const double value = quad::IntegrateSemiInfinite(f, x, {1e-10, 1e-14, 60}, 1.0, 2).value;
    CHECK(value == Approx(brute).epsilon(1e-6));
}

TEST_CASE("zero integrand and linearity")
{
    CHECK(quad::Integrate([](double) { return 0.0; }, -3.0, 5.0).value == 0.0);
    auto f = [](double x) { return std::exp(-x) * std::cos(3.0 * x); };
    auto g = [](double x) { return 1.0 / (1.0 + x * x); };
    const quad::Tolerance tol{1e-9, 1e-14, 60};
    const auto rf = quad::Integrate(f, 0.0, 4.0, tol);
    const auto rg = quad::Integrate(g, 0.0, 4.0, tol);
    const auto rs = quad::Integrate([&](double x) { return 2.5 * f(x) - 0.75 * g(x); }, 0.0, 4.0, tol);
    const double combo = 2.5 * rf.value - 0.75 * rg.value;
    CHECK(std::abs(rs.value - combo) <= 2.0 * (rs.error + 2.5 * rf.error + 0.75 * rg.error) + 1e-15);
}

TEST_CASE("error estimates never under-report on the closed-form battery")
{
    using std::numbers::pi;
    struct Case
    {
        std::function<double(double)> f;
        double a;
        double b;
        double exact;
    };
    const Case battery[] = {
        {[](double x) { return std::sin(x); }, 0.0, pi, 2.0},
        {[](double x) { return std::exp(x); }, 0.0, 3.0, std::exp(3.0) - 1.0},
        {[](double x) { return 1.0 / (1.0 + 25.0 * x * x); }, -1.0, 1.0, 0.4 * std::atan(5.0)},
        {[](double x) { return std::sqrt(x); }, 0.0, 1.0, 2.0 / 3.0},
        {[](double x) { return std::abs(x - 0.3); }, 0.0, 1.0, 0.045 + 0.245},
        {[](double x) { return std::cos(40.0 * x); }, 0.0, 1.0, std::sin(40.0) / 40.0},
    };
    for (const auto& c : battery)
    {
        for (double rel : {1e-4, 1e-8})
        {
            const auto r = quad::Integrate(c.f, c.a, c.b, {rel, 1e-14, 60});
            CHECK(std::abs(r.value - c.exact) <= r.error + 1e-14);
        }
    }
}
