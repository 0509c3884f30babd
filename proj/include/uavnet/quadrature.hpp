/*
 * Copyright (c) 2026 The uavnet authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef UAVNET_QUADRATURE_HPP
#define UAVNET_QUADRATURE_HPP

#include <functional>

namespace uavnet::quad
{

using Integrand = std::function<double(double)>;

struct Tolerance
{
    double rel = 1e-8;
    double abs = 1e-12;
    int maxDepth = 60;

    /// The tolerance handed to integrals nested inside an outer one.
    Tolerance Inner() const
    {
        return {rel / 10.0, abs / 10.0, maxDepth};
    }
};

struct Result
{
    double value = 0.0;
    double error = 0.0;
    int evaluations = 0;
};

/**
 * Globally adaptive 7/15-point Gauss-Kronrod quadrature of f over [a, b].
 *
 * The segment with the largest |K15 - G7| is bisected until the summed
 * estimate drops below max(tol.abs, tol.rel * |result|). Throws
 * Error(NonConvergence) when segments reach tol.maxDepth bisections with the
 * estimate still above tolerance, and Error(NonFiniteEvaluation) on a NaN/inf
 * sample.
 */
Result Integrate(const Integrand& f, double a, double b, const Tolerance& tol = {});

/**
 * Integral of f over [a, inf) through t = a + scale * (u / (1 - u))^power,
 * u in [0, 1), then Integrate(). @p scale and @p power only move the
 * abscissae. power = 2 keeps the mapped integrand bounded for tails decaying
 * like t^-q with q >= 1.5, where power = 1 leaves an endpoint singularity.
 */
Result IntegrateSemiInfinite(const Integrand& f,
                             double a,
                             const Tolerance& tol = {},
                             double scale = 1.0,
                             int power = 1);

/**
 * k-th derivative (0 <= k <= 4) of f at s by central differences with step
 * max(|s|, 1) * eps^(1/(k+2)), Richardson-extrapolated once.
 */
double Derivative(const Integrand& f, double s, int order);

} // namespace uavnet::quad

#endif // UAVNET_QUADRATURE_HPP
