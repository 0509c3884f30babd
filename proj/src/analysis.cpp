/*
 * Copyright (c) 2026 The uavnet authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "uavnet/analysis.hpp"

#include "uavnet/channel.hpp"
#include "uavnet/error.hpp"
#include "uavnet/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

namespace uavnet
{

namespace
{

constexpr double kPi = std::numbers::pi;
constexpr double kDegenerateTier = 1e-12;
constexpr int kMaxOrder = 3;

using Terms = std::array<double, kMaxOrder + 1>;

/// 1 - (1 + y)^-m without cancellation for small y.
double
GammaLaplaceComplement(double m, double y)
{
    return -std::expm1(-m * std::log1p(y));
}

double
AlzerGamma(int m)
{
    return m * std::pow(std::tgamma(m + 1.0), -1.0 / m);
}

double
Binomial(int n, int k)
{
    double c = 1.0;
    for (int i = 1; i <= k; ++i)
    {
        c = c * (n - k + i) / i;
    }
    return c;
}

/// n (n-1) ... (n-r+1) h^(n-r); zero once the falling factorial vanishes.
double
FallingPower(int n, int r, double h)
{
    double c = 1.0;
    for (int i = 0; i < r; ++i)
    {
        c *= (n - i);
    }
    if (c == 0.0)
    {
        return 0.0;
    }
    return c * std::pow(h, n - r);
}

/**
 * s^k d^k/ds^k [exp(-g(s)) h(s)^n] for k = 0..order, given the scaled
 * derivatives g[j] = s^j g^(j)(s) (g[0] = g) and h[j] = s^j h^(j)(s).
 * With s = 0 the same algebra applies to unscaled derivatives.
 */
Terms
ProductDerivatives(const Terms& g, const Terms& h, int n, int order)
{
    const double e0 = std::exp(-g[0]);
    Terms e{};
    e[0] = e0;
    e[1] = -g[1] * e0;
    e[2] = (g[1] * g[1] - g[2]) * e0;
    e[3] = (-g[1] * g[1] * g[1] + 3.0 * g[1] * g[2] - g[3]) * e0;

    Terms hp{};
    hp[0] = n == 0 ? 1.0 : std::pow(h[0], n);
    hp[1] = FallingPower(n, 1, h[0]) * h[1];
    hp[2] = FallingPower(n, 2, h[0]) * h[1] * h[1] + FallingPower(n, 1, h[0]) * h[2];
    hp[3] = FallingPower(n, 3, h[0]) * h[1] * h[1] * h[1] +
            3.0 * FallingPower(n, 2, h[0]) * h[1] * h[2] + FallingPower(n, 1, h[0]) * h[3];

    Terms out{};
    for (int k = 0; k <= order; ++k)
    {
        double acc = 0.0;
        for (int j = 0; j <= k; ++j)
        {
            acc += Binomial(k, j) * e[j] * hp[k - j];
        }
        out[k] = acc;
    }
    return out;
}

quad::Result
Sum(const quad::Result& a, const quad::Result& b)
{
    return {a.value + b.value, a.error + b.error, a.evaluations + b.evaluations};
}

/// Integrates over [a, b] split at every interior breakpoint.
quad::Result
IntegratePieces(const quad::Integrand& f, double a, double b, std::vector<double> cuts, const quad::Tolerance& tol)
{
    cuts.push_back(a);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    quad::Result total;
    double lo = a;
    for (double c : cuts)
    {
        if (c <= lo || c > b)
        {
            continue;
        }
        total = Sum(total, quad::Integrate(f, lo, c, tol));
        lo = c;
    }
    return total;
}

const SystemParams&
Checked(const SystemParams& params)
{
    RequireValid(params);
    if (params.ShapeA() - 1 > kMaxOrder)
    {
        throw Error(ErrorCode::InvalidParams,
                    "invalid parameters:\n  m_a: closed-form coverage supports m_a <= 4 (simulate for larger shapes)");
    }
    return params;
}

/// Parameters of one backhaul tier (serving or interfering).
struct BackhaulLink
{
    double intercept;
    double eta;
    int shape;
    bool los;
};

class Model
{
  public:
    Model(const SystemParams& params, const AnalysisOptions& opts)
        : m_p(Checked(params)),
          m_tol(opts.tol),
          m_inner(opts.tol.Inner()),
          m_law(params),
          m_gains(MakeGainDistribution(params.antenna)),
          m_twoPiLambda(2.0 * kPi * params.lambdaG)
    {
    }

    const SystemParams& P() const
    {
        return m_p;
    }

    const UavDistanceLaw& Law() const
    {
        return m_law;
    }

    double Ea(double x) const
    {
        return ExclusionRadius(ExclusionKind::BsGivenUav, x, m_p);
    }

    double Eg(double x) const
    {
        return ExclusionRadius(ExclusionKind::UavGivenBs, x, m_p);
    }

    double El(double x) const
    {
        return ExclusionRadius(ExclusionKind::NlosGivenLos, x, m_p);
    }

    double En(double x) const
    {
        return ExclusionRadius(ExclusionKind::LosGivenNlos, x, m_p);
    }

    // ---- access association ------------------------------------------------

    /// Upper end of the BS serving distance: beyond it every UAV is stronger.
    double BsRange() const
    {
        return Ea(m_law.Wp());
    }

    /// Breakpoints of integrands over the BS serving distance.
    std::vector<double> BsCuts() const
    {
        std::vector<double> cuts{Ea(m_law.Ha()), Ea(m_law.Wm())};
        const double r0 = 1.0 / std::sqrt(kPi * m_p.lambdaG);
        for (double k : {1.0, 3.0, 10.0})
        {
            cuts.push_back(k * r0);
        }
        return cuts;
    }

    std::vector<double> UavCuts() const
    {
        return {m_law.Wm(), Eg(0.0)};
    }

    double BsServingWeight(double x) const
    {
        const double ccdf = m_law.Ccdf(Eg(x));
        return m_twoPiLambda * x * std::exp(-kPi * m_p.lambdaG * x * x) * std::pow(ccdf, m_p.nUav);
    }

    double UavServingWeight(double x) const
    {
        const double ea = Ea(x);
        return m_p.nUav * m_law.Pdf(x) * std::exp(-kPi * m_p.lambdaG * ea * ea) *
               std::pow(m_law.Ccdf(x), m_p.nUav - 1);
    }

    const quad::Result& Ag()
    {
        if (!m_ag)
        {
            m_ag = IntegratePieces([this](double r) { return BsServingWeight(r); },
                                   0.0,
                                   BsRange(),
                                   BsCuts(),
                                   m_tol);
        }
        return *m_ag;
    }

    double Aa()
    {
        return 1.0 - Ag().value;
    }

    // ---- access interference -----------------------------------------------

    /**
     * BS interference exponent beyond horizontal distance @p lower:
     * t[0] = 2 pi lambda int (s a / (1 + s a)) z dz and t[j] the j-th
     * s-derivative scaled by s^j (unscaled when s = 0).
     */
    Terms BsInterference(double s, double lower, int order) const
    {
        Terms t{};
        const double hg2 = m_p.hG * m_p.hG;
        const double scale =
            std::max({lower, m_p.hG, s > 0.0 ? std::pow(s * m_p.pTg, 1.0 / m_p.etaG) : 0.0});
        for (int j = 0; j <= order; ++j)
        {
            if (j == 0 && s == 0.0)
            {
                continue;
            }
            const double factorial = std::tgamma(j + 1.0);
            const double sign = (j % 2 == 1) ? 1.0 : -1.0;
            auto f = [&](double z) {
                const double a = m_p.pTg * std::pow(z * z + hg2, -m_p.etaG / 2.0);
                const double sa = s * a;
                const double base = s > 0.0 ? sa : a;
                if (j == 0)
                {
                    return sa / (1.0 + sa) * z;
                }
                return std::pow(base, j) / std::pow(1.0 + sa, j + 1) * z;
            };
            const double v = quad::IntegrateSemiInfinite(f, lower, m_inner, scale, 2).value;
            t[j] = j == 0 ? m_twoPiLambda * v : m_twoPiLambda * sign * factorial * v;
        }
        return t;
    }

    /**
     * Unnormalized UAV interference transform over [lower, w_p]:
     * t[0] = int (1 + s c(u))^-m f_W(u) du, c(u) = P_ta u^-eta_a / m_a, and
     * t[j] its scaled s-derivatives.
     */
    Terms UavInterference(double s, double lower, int order) const
    {
        Terms t{};
        const double lo = std::max(lower, m_law.Ha());
        const double hi = m_law.Wp();
        if (lo >= hi)
        {
            return t;
        }
        const double m = m_p.mA;
        quad::Tolerance tol = m_inner;
        tol.abs = m_inner.abs * std::max(m_law.Ccdf(lo), 1e-300);
        for (int j = 0; j <= order; ++j)
        {
            double rising = 1.0;
            for (int i = 0; i < j; ++i)
            {
                rising *= -(m + i);
            }
            auto f = [&](double u) {
                const double c = m_p.pTa * std::pow(u, -m_p.etaA) / m;
                const double sc = s * c;
                const double base = s > 0.0 ? sc : c;
                return rising * std::pow(base, j) * std::pow(1.0 + sc, -m - j) * m_law.Pdf(u);
            };
            t[j] = IntegratePieces(f, lo, hi, {m_law.Wm()}, tol).value;
        }
        return t;
    }

    /// Limit of the normalized UAV transform when the support collapses onto w_p.
    double UavEdgeTransform(double s) const
    {
        const double c = m_p.pTa * std::pow(m_law.Wp(), -m_p.etaA) / m_p.mA;
        return std::pow(1.0 + s * c, -m_p.mA);
    }

    double NormalizedUavTransform(double s, double lower) const
    {
        const double lo = std::max(lower, m_law.Ha());
        const double mass = m_law.Ccdf(lo);
        if (lo >= m_law.Wp() || mass <= 0.0)
        {
            return UavEdgeTransform(s);
        }
        return UavInterference(s, lo, 0)[0] / mass;
    }

    // ---- access coverage ---------------------------------------------------

    /// A_g * P(SIR >= beta | BS).
    quad::Result JointBs(double beta) const
    {
        auto f = [&](double x) {
            const double weight = BsServingWeight(x);
            if (weight == 0.0)
            {
                return 0.0;
            }
            const double s1 = beta * std::pow(x * x + m_p.hG * m_p.hG, m_p.etaG / 2.0) / m_p.pTg;
            const double bs = std::exp(-BsInterference(s1, x, 0)[0]);
            const double lower = Eg(x);
            double uav = 0.0;
            if (lower < m_law.Wp())
            {
                uav = std::pow(UavInterference(s1, lower, 0)[0], m_p.nUav);
            }
            return m_twoPiLambda * x * std::exp(-kPi * m_p.lambdaG * x * x) * bs * uav;
        };
        return IntegratePieces(f, 0.0, BsRange(), BsCuts(), m_tol);
    }

    /// A_a * P(SIR >= beta | UAV) (backhaul excluded).
    quad::Result JointUav(double beta) const
    {
        const int order = m_p.ShapeA() - 1;
        auto f = [&](double x) {
            const double ea = Ea(x);
            const double weight = m_p.nUav * m_law.Pdf(x) * std::exp(-kPi * m_p.lambdaG * ea * ea);
            if (weight == 0.0)
            {
                return 0.0;
            }
            const double s2 = m_p.mA * beta * std::pow(x, m_p.etaA) / m_p.pTa;
            const Terms g = BsInterference(s2, ea, order);
            const Terms h = UavInterference(s2, x, order);
            const Terms d = ProductDerivatives(g, h, m_p.nUav - 1, order);
            double acc = 0.0;
            double factorial = 1.0;
            for (int k = 0; k <= order; ++k)
            {
                if (k > 0)
                {
                    factorial *= k;
                }
                acc += ((k % 2 == 0) ? 1.0 : -1.0) * d[k] / factorial;
            }
            return weight * acc;
        };
        return IntegratePieces(f, m_law.Ha(), m_law.Wp(), UavCuts(), m_tol);
    }

    // ---- backhaul ----------------------------------------------------------

    double Los(double s) const
    {
        return LosProbability(s, m_p);
    }

    double Nlos(double s) const
    {
        const double theta = s > 0.0 ? (180.0 / kPi) * std::atan(m_p.DeltaH() / s) : 90.0;
        return 1.0 / (1.0 + std::exp(m_p.envB * (theta - m_p.envA)) / m_p.envA);
    }

    double TierWeight(bool los, double t) const
    {
        return los ? Los(t) : Nlos(t);
    }

    /// int_0^r P_tier(t) t dt.
    double TierMass(bool los, double r) const
    {
        if (r <= 0.0)
        {
            return 0.0;
        }
        auto f = [&](double t) { return TierWeight(los, t) * t; };
        return IntegratePieces(f, 0.0, r, {10.0 * m_p.DeltaH()}, m_inner).value;
    }

    BackhaulLink Link(bool los) const
    {
        return los ? BackhaulLink{m_p.cL, m_p.etaL, m_p.ShapeL(), true}
                   : BackhaulLink{m_p.cN, m_p.etaN, m_p.ShapeN(), false};
    }

    /// Other-tier exclusion radius when the serving BS of tier @p los sits at x.
    double Exclusion(bool los, double x) const
    {
        return los ? El(x) : En(x);
    }

    /// Density (per unit x) that the nearest BS of the tier is at x and wins the path-loss comparison.
    double BackhaulServingWeight(bool los, double x) const
    {
        const double nearest =
            m_twoPiLambda * x * TierWeight(los, x) * std::exp(-m_twoPiLambda * TierMass(los, x));
        if (nearest == 0.0)
        {
            return 0.0;
        }
        return nearest * std::exp(-m_twoPiLambda * TierMass(!los, Exclusion(los, x)));
    }

    double BackhaulScale() const
    {
        return 1.0 / std::sqrt(kPi * m_p.lambdaG);
    }

    const quad::Result& ALos()
    {
        if (!m_aLos)
        {
            // Integrate the rarer tier and complement it, so a tiny probability keeps its relative accuracy.
            auto weight = [this](bool los, const quad::Tolerance& tol) {
                return quad::IntegrateSemiInfinite(
                    [this, los](double x) { return BackhaulServingWeight(los, x); }, 0.0, tol, BackhaulScale());
            };
            quad::Result nlos = weight(false, m_tol);
            if (nlos.value > 0.0 && nlos.value * m_tol.rel < m_tol.abs)
            {
                // The absolute floor would swamp a tiny tier; redo it on a relative scale.
                quad::Tolerance fine = m_tol;
                fine.abs = std::max(0.1 * m_tol.rel * nlos.value, 1e-300);
                nlos = weight(false, fine);
            }
            if (nlos.value < 0.5)
            {
                m_aNlos = nlos.value;
                nlos.value = 1.0 - nlos.value;
                m_aLos = nlos;
            }
            else
            {
                m_aLos = weight(true, m_tol);
                m_aNlos = 1.0 - m_aLos->value;
            }
        }
        return *m_aLos;
    }

    double ANlos()
    {
        ALos();
        return *m_aNlos;
    }

    /**
     * Interference exponent from tier @p interferer beyond @p lower for the
     * n-th Alzer term: 2 pi lambda sum_k p_k int F(m_i, A_k / (t^2+dh^2)^(eta_i/2)) P_i(t) t dt.
     */
    double TierInterference(const BackhaulLink& interferer, double amplitude, double lower) const
    {
        const double dh2 = m_p.DeltaH() * m_p.DeltaH();
        const double biggest = amplitude * *std::max_element(m_gains.gains.begin(), m_gains.gains.end());
        const double scale = std::max({lower, m_p.DeltaH(), std::pow(biggest, 1.0 / interferer.eta), 1.0});
        auto f = [&](double t) {
            const double pl = std::pow(t * t + dh2, -interferer.eta / 2.0);
            double acc = 0.0;
            for (size_t k = 0; k < m_gains.gains.size(); ++k)
            {
                acc += m_gains.probs[k] *
                       GammaLaplaceComplement(interferer.shape, amplitude * m_gains.gains[k] * pl);
            }
            return acc * TierWeight(interferer.los, t) * t;
        };
        return m_twoPiLambda * quad::IntegrateSemiInfinite(f, lower, m_inner, scale, 2).value;
    }

    /// A_tier * S_tier(tau_b) under the Alzer approximation.
    quad::Result JointBackhaul(bool los, double tauB) const
    {
        const BackhaulLink serving = Link(los);
        const BackhaulLink other = Link(!los);
        const int m = serving.shape;
        const double gamma = AlzerGamma(m);
        const double dh2 = m_p.DeltaH() * m_p.DeltaH();
        const double g0 = m_gains.g0;
        auto f = [&](double x) {
            const double weight = BackhaulServingWeight(los, x);
            if (weight == 0.0)
            {
                return 0.0;
            }
            const double inversePathGain = std::pow(x * x + dh2, serving.eta / 2.0);
            double acc = 0.0;
            for (int n = 1; n <= m; ++n)
            {
                const double mu = n * gamma * tauB * inversePathGain;
                const double noise = mu * m_p.sigma2 / (m_p.pTb * serving.intercept * g0);
                double exponent = noise;
                if (exponent < 745.0)
                {
                    // Interferer power per unit gain, relative to the serving link, folded
                    // with the 1/m of the interferer's gamma Laplace transform.
                    const double sameTier = mu / (g0 * serving.shape);
                    const double crossTier = mu * other.intercept / (serving.intercept * g0 * other.shape);
                    exponent += TierInterference(serving, sameTier, x);
                    exponent += TierInterference(other, crossTier, Exclusion(los, x));
                }
                const double sign = (n % 2 == 1) ? 1.0 : -1.0;
                acc += sign * Binomial(m, n) * std::exp(-exponent);
            }
            return weight * acc;
        };
        return quad::IntegrateSemiInfinite(f, 0.0, m_tol, BackhaulScale());
    }

  private:
    SystemParams m_p;
    quad::Tolerance m_tol;
    quad::Tolerance m_inner;
    UavDistanceLaw m_law;
    GainDistribution m_gains;
    double m_twoPiLambda;
    std::optional<quad::Result> m_ag;
    std::optional<quad::Result> m_aLos;
    std::optional<double> m_aNlos;
};

void
RequireTier(double probability, const char* what)
{
    if (probability < kDegenerateTier)
    {
        throw Error(ErrorCode::DegenerateTier, std::string(what) + " association probability is below 1e-12");
    }
}

struct BackhaulEval
{
    double value;
    double error;
};

BackhaulEval
EvaluateBackhaul(Model& model, double tauB)
{
    if (!(tauB >= 0.0))
    {
        throw Error(ErrorCode::InvalidArgument, "tau_b must be >= 0");
    }
    if (tauB == 0.0)
    {
        // Every Alzer term reduces to the tier mass and the alternating binomial sum is 1.
        return {1.0, 0.0};
    }
    const auto los = model.JointBackhaul(true, tauB);
    const auto nlos = model.JointBackhaul(false, tauB);
    return {los.value + nlos.value, los.error + nlos.error};
}

} // namespace

AssociationSplit
AssociationProbabilities(const SystemParams& params, const AnalysisOptions& opts)
{
    Model model(params, opts);
    const double ag = model.Ag().value;
    return {ag, 1.0 - ag};
}

struct ServingDistanceLaws::Impl
{
    Impl(const SystemParams& params, const AnalysisOptions& opts)
        : model(params, opts)
    {
        aG = model.Ag().value;
        aLos = model.ALos().value;
        aNlos = model.ANlos();
    }

    Model model;
    double aG;
    double aLos;
    double aNlos;
};

ServingDistanceLaws::ServingDistanceLaws(const SystemParams& params, const AnalysisOptions& opts)
    : m_impl(std::make_unique<Impl>(params, opts))
{
}

ServingDistanceLaws::~ServingDistanceLaws() = default;
ServingDistanceLaws::ServingDistanceLaws(ServingDistanceLaws&&) noexcept = default;
ServingDistanceLaws& ServingDistanceLaws::operator=(ServingDistanceLaws&&) noexcept = default;

double
ServingDistanceLaws::Access(Tier tier, double x) const
{
    const Model& model = m_impl->model;
    if (tier == Tier::Bs)
    {
        RequireTier(m_impl->aG, "BS");
        if (x < 0.0 || x > model.BsRange())
        {
            return 0.0;
        }
        return model.BsServingWeight(x) / m_impl->aG;
    }
    const double aa = 1.0 - m_impl->aG;
    RequireTier(aa, "UAV");
    if (x < model.Law().Ha() || x > model.Law().Wp())
    {
        return 0.0;
    }
    return model.UavServingWeight(x) / aa;
}

double
ServingDistanceLaws::Backhaul(BackhaulTier tier, double x) const
{
    if (x < 0.0)
    {
        return 0.0;
    }
    const bool los = tier == BackhaulTier::Los;
    const double mass = los ? m_impl->aLos : m_impl->aNlos;
    RequireTier(mass, los ? "LOS backhaul" : "NLOS backhaul");
    return m_impl->model.BackhaulServingWeight(los, x) / mass;
}

double
ServingDistanceLaws::BackhaulJoint(BackhaulTier tier, double x) const
{
    return x < 0.0 ? 0.0 : m_impl->model.BackhaulServingWeight(tier == BackhaulTier::Los, x);
}

AssociationSplit
ServingDistanceLaws::Association() const
{
    return {m_impl->aG, 1.0 - m_impl->aG};
}

BackhaulSplit
ServingDistanceLaws::BackhaulTiers() const
{
    return {m_impl->aLos, m_impl->aNlos};
}

double
ServingDistanceLaws::BsRange() const
{
    return m_impl->model.BsRange();
}

std::vector<double>
ServingDistanceLaws::BsBreakpoints() const
{
    return m_impl->model.BsCuts();
}

std::vector<double>
ServingDistanceLaws::UavBreakpoints() const
{
    return m_impl->model.UavCuts();
}

double
ServingDistancePdf(Tier tier, double x, const SystemParams& params, const AnalysisOptions& opts)
{
    return ServingDistanceLaws(params, opts).Access(tier, x);
}

double
InterferenceLaplace(LaplaceScenario scenario,
                    double s,
                    double servingDist,
                    const SystemParams& params,
                    const AnalysisOptions& opts)
{
    if (!(s >= 0.0))
    {
        throw Error(ErrorCode::InvalidArgument, "Laplace argument must be >= 0");
    }
    if (s == 0.0)
    {
        return 1.0;
    }
    Model model(params, opts);
    switch (scenario)
    {
    case LaplaceScenario::BsExceptServing:
        return std::exp(-model.BsInterference(s, servingDist, 0)[0]);
    case LaplaceScenario::UavsGivenBs:
        return std::pow(model.NormalizedUavTransform(s, model.Eg(servingDist)), params.nUav);
    case LaplaceScenario::AllBsGivenUav:
        return std::exp(-model.BsInterference(s, model.Ea(servingDist), 0)[0]);
    case LaplaceScenario::UavsExceptServing:
        if (params.nUav == 1)
        {
            return 1.0;
        }
        return std::pow(model.NormalizedUavTransform(s, servingDist), params.nUav - 1);
    }
    return 1.0;
}

double
LaplaceProductDerivative(double s, int order, double xa, const SystemParams& params, const AnalysisOptions& opts)
{
    if (order < 0 || order > kMaxOrder)
    {
        throw Error(ErrorCode::InvalidArgument, "derivative order must lie in 0..3");
    }
    if (!(s >= 0.0))
    {
        throw Error(ErrorCode::InvalidArgument, "Laplace argument must be >= 0");
    }
    Model model(params, opts);
    const Terms g = model.BsInterference(s, model.Ea(xa), order);
    Terms h{};
    const double lo = std::max(xa, model.Law().Ha());
    const double mass = model.Law().Ccdf(lo);
    if (params.nUav > 1)
    {
        if (lo >= model.Law().Wp() || mass <= 0.0)
        {
            throw Error(ErrorCode::DegenerateSupport, "no UAV mass beyond the serving distance");
        }
        h = model.UavInterference(s, lo, order);
        for (double& v : h)
        {
            v /= mass;
        }
    }
    const Terms d = ProductDerivatives(g, h, params.nUav - 1, order);
    return s > 0.0 ? d[order] / std::pow(s, order) : d[order];
}

double
ConditionalCoverageBs(double beta, const SystemParams& params, const AnalysisOptions& opts)
{
    if (!(beta > 0.0))
    {
        throw Error(ErrorCode::InvalidArgument, "beta must be > 0");
    }
    Model model(params, opts);
    const double ag = model.Ag().value;
    RequireTier(ag, "BS");
    return model.JointBs(beta).value / ag;
}

BackhaulSplit
BackhaulTierProbabilities(const SystemParams& params, const AnalysisOptions& opts)
{
    Model model(params, opts);
    return {model.ALos().value, model.ANlos()};
}

double
BackhaulServingDistancePdf(BackhaulTier tier, double x, const SystemParams& params, const AnalysisOptions& opts)
{
    return ServingDistanceLaws(params, opts).Backhaul(tier, x);
}

double
BackhaulProbability(double tauB, const SystemParams& params, const AnalysisOptions& opts)
{
    Model model(params, opts);
    return EvaluateBackhaul(model, tauB).value;
}

double
ConditionalCoverageUav(double beta, double tauB, const SystemParams& params, const AnalysisOptions& opts)
{
    if (!(beta > 0.0))
    {
        throw Error(ErrorCode::InvalidArgument, "beta must be > 0");
    }
    Model model(params, opts);
    const double aa = model.Aa();
    RequireTier(aa, "UAV");
    const double access = model.JointUav(beta).value / aa;
    return EvaluateBackhaul(model, tauB).value * access;
}

AnalyticReport
OverallCoverage(double beta, double tauB, const SystemParams& params, const AnalysisOptions& opts)
{
    if (!(beta > 0.0))
    {
        throw Error(ErrorCode::InvalidArgument, "beta must be > 0");
    }
    Model model(params, opts);
    AnalyticReport r{};
    const auto& ag = model.Ag();
    r.aG = ag.value;
    r.aA = 1.0 - ag.value;
    r.error.aG = ag.error;

    const auto& aLos = model.ALos();
    r.aLos = aLos.value;
    r.aNlos = model.ANlos();
    r.error.aLos = aLos.error;

    const auto backhaul = EvaluateBackhaul(model, tauB);
    r.sBackhaul = backhaul.value;
    r.error.sBackhaul = backhaul.error;

    r.pCovG = 0.0;
    if (r.aG >= kDegenerateTier)
    {
        const auto joint = model.JointBs(beta);
        r.pCovG = joint.value / r.aG;
        r.error.pCovG = joint.error / r.aG;
    }
    r.pCovA = 0.0;
    if (r.aA >= kDegenerateTier)
    {
        const auto joint = model.JointUav(beta);
        r.pCovA = r.sBackhaul * joint.value / r.aA;
        r.error.pCovA = r.sBackhaul * joint.error / r.aA + r.error.sBackhaul;
    }
    r.pCov = r.aA * r.pCovA + r.aG * r.pCovG;
    return r;
}

} // namespace uavnet
