/*
 * Copyright (c) 2026 The uavnet authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "uavnet/quadrature.hpp"

#include "uavnet/error.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

namespace uavnet::quad
{

namespace
{

// Kronrod abscissae on [0,1] (positive half, descending) and weights; odd
// indices are shared with the 7-point Gauss rule.
constexpr std::array<double, 8> kXk{0.991455371120812639206854697526329,
                                    0.949107912342758524526189684047851,
                                    0.864864423359769072789712788640926,
                                    0.741531185599394439863864773280788,
                                    0.586087235467691130294144845693013,
                                    0.405845151377397166906606412076961,
                                    0.207784955007898467600689403773245,
                                    0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWk{0.022935322010529224963732008058970,
                                    0.063092092629978553290700663189204,
                                    0.104790010322250183839876322541518,
                                    0.140653259715525918745189590510238,
                                    0.169004726639267902826583426598550,
                                    0.190350578064785409913256402421014,
                                    0.204432940075298892414161999234649,
                                    0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg{0.129484966168869693270611432679082,
                                    0.279705391489276667901467771423780,
                                    0.381830050505118944950369775488975,
                                    0.417959183673469387755102040816327};

struct Segment
{
    double a;
    double b;
    double value;
    double error;
    int depth;

    bool operator<(const Segment& other) const
    {
        return error < other.error;
    }
};

double
Sample(const Integrand& f, double x)
{
    double y = f(x);
    if (!std::isfinite(y))
    {
        std::ostringstream os;
        os << "integrand not finite at x = " << x;
        throw Error(ErrorCode::NonFiniteEvaluation, os.str());
    }
    return y;
}

Segment
Kronrod15(const Integrand& f, double a, double b, int depth)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = Sample(f, center);
    double kronrod = kWk[7] * fc;
    double gauss = kWg[3] * fc;
    for (int j = 0; j < 7; ++j)
    {
        const double dx = half * kXk[j];
        const double f1 = Sample(f, center - dx);
        const double f2 = Sample(f, center + dx);
        kronrod += kWk[j] * (f1 + f2);
        if (j % 2 == 1)
        {
            gauss += kWg[j / 2] * (f1 + f2);
        }
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::abs(kronrod - gauss), depth};
}

} // namespace

Result
Integrate(const Integrand& f, double a, double b, const Tolerance& tol)
{
    if (!(a <= b))
    {
        throw Error(ErrorCode::InvalidArgument, "integration bounds must satisfy a <= b");
    }
    if (a == b)
    {
        return {};
    }

    std::priority_queue<Segment> open;
    std::vector<Segment> frozen;
    Segment first = Kronrod15(f, a, b, 0);
    int evaluations = 15;
    double value = first.value;
    double error = first.error;
    open.push(first);

    auto target = [&] { return std::max(tol.abs, tol.rel * std::abs(value)); };

    constexpr int kMaxEvaluations = 2'000'000;
    while (error > target())
    {
        if (open.empty() || evaluations > kMaxEvaluations)
        {
            std::ostringstream os;
            os << "adaptive quadrature on [" << a << ", " << b << "] stopped at error " << error
               << " (target " << target() << ")";
            throw Error(ErrorCode::NonConvergence, os.str());
        }
        Segment worst = open.top();
        open.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (worst.depth >= tol.maxDepth || mid <= worst.a || mid >= worst.b)
        {
            frozen.push_back(worst);
            continue;
        }
        Segment left = Kronrod15(f, worst.a, mid, worst.depth + 1);
        Segment right = Kronrod15(f, mid, worst.b, worst.depth + 1);
        evaluations += 30;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        open.push(left);
        open.push(right);
    }

    // Re-sum to shed the drift of the running updates.
    double sum = 0.0;
    double err = 0.0;
    while (!open.empty())
    {
        sum += open.top().value;
        err += open.top().error;
        open.pop();
    }
    for (const auto& s : frozen)
    {
        sum += s.value;
        err += s.error;
    }
    return {sum, err, evaluations};
}

Result
IntegrateSemiInfinite(const Integrand& f, double a, const Tolerance& tol, double scale, int power)
{
    if (!(scale > 0.0) || power < 1)
    {
        throw Error(ErrorCode::InvalidArgument, "semi-infinite map needs scale > 0 and power >= 1");
    }
    auto mapped = [&](double u) {
        const double w = 1.0 - u;
        const double v = u / w;
        // dt/du = scale * power * v^(power-1) / w^2
        const double vp1 = power == 1 ? 1.0 : std::pow(v, power - 1);
        const double t = a + scale * vp1 * v;
        if (!std::isfinite(t))
        {
            return 0.0;
        }
        const double y = f(t);
        if (y == 0.0)
        {
            return 0.0;
        }
        return y * scale * power * vp1 / (w * w);
    };
    return Integrate(mapped, 0.0, 1.0, tol);
}

double
Derivative(const Integrand& f, double s, int order)
{
    if (order < 0 || order > 4)
    {
        throw Error(ErrorCode::InvalidArgument, "derivative order must lie in 0..4");
    }
    auto at = [&](double x) {
        double y = f(x);
        if (!std::isfinite(y))
        {
            std::ostringstream os;
            os << "function not finite at x = " << x;
            throw Error(ErrorCode::NonFiniteEvaluation, os.str());
        }
        return y;
    };
    if (order == 0)
    {
        return at(s);
    }

    // Second-order central stencils; coefficients for f(s + j h), j = -2..2.
    static constexpr std::array<std::array<double, 5>, 5> kStencil{{
        {0, 0, 1, 0, 0},
        {0, -0.5, 0, 0.5, 0},
        {0, 1, -2, 1, 0},
        {-0.5, 1, 0, -1, 0.5},
        {1, -4, 6, -4, 1},
    }};
    const double eps = std::numeric_limits<double>::epsilon();
    const double h = std::max(std::abs(s), 1.0) * std::pow(eps, 1.0 / (order + 2));

    auto central = [&](double step) {
        double acc = 0.0;
        for (int j = -2; j <= 2; ++j)
        {
            const double c = kStencil[order][j + 2];
            if (c != 0.0)
            {
                acc += c * at(s + j * step);
            }
        }
        return acc / std::pow(step, order);
    };
    const double coarse = central(h);
    const double fine = central(0.5 * h);
    return (4.0 * fine - coarse) / 3.0;
}

} // namespace uavnet::quad
