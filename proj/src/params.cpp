/*
 * Copyright (c) 2026 The uavnet authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "uavnet/params.hpp"

#include "uavnet/error.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace uavnet
{

const char*
ToString(ErrorCode code)
{
    switch (code)
    {
    case ErrorCode::InvalidArgument:
        return "InvalidArgument";
    case ErrorCode::InvalidParams:
        return "InvalidParams";
    case ErrorCode::ParseError:
        return "ParseError";
    case ErrorCode::UnknownKey:
        return "UnknownKey";
    case ErrorCode::UnitError:
        return "UnitError";
    case ErrorCode::NonConvergence:
        return "NonConvergence";
    case ErrorCode::NonFiniteEvaluation:
        return "NonFiniteEvaluation";
    case ErrorCode::DegenerateSupport:
        return "DegenerateSupport";
    case ErrorCode::DegenerateTier:
        return "DegenerateTier";
    }
    return "Unknown";
}

double
AntennaPattern::Cg() const
{
    return thetaBs / (2.0 * std::numbers::pi);
}

double
AntennaPattern::Ca() const
{
    return thetaUav / (2.0 * std::numbers::pi);
}

double
SystemParams::Wm() const
{
    return std::hypot(rC - x0, hA);
}

double
SystemParams::Wp() const
{
    return std::hypot(rC + x0, hA);
}

double
SystemParams::DeltaH() const
{
    return std::abs(hA - hG);
}

double
DbToLinear(double db)
{
    return std::pow(10.0, db / 10.0);
}

double
LinearToDb(double linear)
{
    return 10.0 * std::log10(linear);
}

double
DegToRad(double deg)
{
    return deg * std::numbers::pi / 180.0;
}

SystemParams
DefaultParams()
{
    SystemParams p{};
    p.lambdaG = 1e-6;
    p.hG = 30.0;
    p.hA = 100.0;
    p.nUav = 5;
    p.rC = 1000.0;
    p.x0 = 0.0;
    p.pTg = 20.0;
    p.pTa = 1.0;
    p.pTb = 10.0;
    p.etaG = 4.0;
    p.etaA = 2.5;
    p.etaL = 2.5;
    p.etaN = 4.0;
    p.mA = 3;
    p.mL = 3;
    p.mN = 1;
    p.cL = DbToLinear(-69.8);
    p.cN = DbToLinear(-69.8);
    p.envA = 4.88;
    p.envB = 0.43;
    p.sigma2 = 4e-11;
    p.antenna.gMainBs = DbToLinear(18.0);
    p.antenna.gSideBs = DbToLinear(-2.0);
    p.antenna.gMainUav = DbToLinear(18.0);
    p.antenna.gSideUav = DbToLinear(-2.0);
    p.antenna.thetaBs = DegToRad(20.0);
    p.antenna.thetaUav = DegToRad(20.0);
    p.beta = 1.0;
    p.tauB = 1.0;
    return p;
}

const char*
ToString(IssueKind kind)
{
    switch (kind)
    {
    case IssueKind::NonPositive:
        return "NonPositive";
    case IssueKind::ExponentTooSmall:
        return "ExponentTooSmall";
    case IssueKind::NonIntegerShape:
        return "NonIntegerShape";
    case IssueKind::UeOutsideDisk:
        return "UEOutsideDisk";
    case IssueKind::BadAntenna:
        return "BadAntenna";
    }
    return "Unknown";
}

std::string
ValidationResult::Describe() const
{
    std::ostringstream os;
    for (const auto& issue : issues)
    {
        os << ToString(issue.kind) << "(" << issue.field << "): " << issue.message << "\n";
    }
    return os.str();
}

namespace
{

void
Positive(ValidationResult& r, const char* field, double v)
{
    if (!(v > 0.0) || !std::isfinite(v))
    {
        std::ostringstream os;
        os << "must be finite and > 0, got " << v;
        r.issues.push_back({IssueKind::NonPositive, field, os.str()});
    }
}

void
Exponent(ValidationResult& r, const char* field, double v)
{
    if (!(v > 2.0) || !std::isfinite(v))
    {
        std::ostringstream os;
        os << "path-loss exponent must exceed 2, got " << v;
        r.issues.push_back({IssueKind::ExponentTooSmall, field, os.str()});
    }
}

void
Shape(ValidationResult& r, const char* field, double v)
{
    if (!(v >= 1.0) || std::floor(v) != v || v > 1e6)
    {
        std::ostringstream os;
        os << "Nakagami shape must be an integer >= 1, got " << v;
        r.issues.push_back({IssueKind::NonIntegerShape, field, os.str()});
    }
}

void
Gains(ValidationResult& r, const char* mainField, double main, const char* sideField, double side)
{
    Positive(r, mainField, main);
    Positive(r, sideField, side);
    if (main > 0.0 && side > 0.0 && main < side)
    {
        r.issues.push_back(
            {IssueKind::BadAntenna, mainField, "main-lobe gain must not be below the side-lobe gain"});
    }
}

void
Beamwidth(ValidationResult& r, const char* field, double theta)
{
    if (!(theta > 0.0 && theta < 2.0 * std::numbers::pi))
    {
        std::ostringstream os;
        os << "beamwidth must lie in (0, 2pi) rad, got " << theta;
        r.issues.push_back({IssueKind::BadAntenna, field, os.str()});
    }
}

} // namespace

ValidationResult
Validate(const SystemParams& p)
{
    ValidationResult r;
    Positive(r, "lambda_g", p.lambdaG);
    Positive(r, "h_g", p.hG);
    Positive(r, "h_a", p.hA);
    if (p.nUav < 1)
    {
        r.issues.push_back({IssueKind::NonPositive, "n_uav", "at least one UAV is required"});
    }
    Positive(r, "r_c", p.rC);
    if (!(p.x0 >= 0.0) || !std::isfinite(p.x0))
    {
        r.issues.push_back({IssueKind::NonPositive, "x_0", "must be finite and >= 0"});
    }
    else if (p.rC > 0.0 && !(p.x0 < p.rC))
    {
        r.issues.push_back({IssueKind::UeOutsideDisk, "x_0", "UE must lie strictly inside the UAV disk"});
    }
    Positive(r, "p_tg", p.pTg);
    Positive(r, "p_ta", p.pTa);
    Positive(r, "p_tb", p.pTb);
    Exponent(r, "eta_g", p.etaG);
    Exponent(r, "eta_a", p.etaA);
    Exponent(r, "eta_l", p.etaL);
    Exponent(r, "eta_n", p.etaN);
    Shape(r, "m_a", p.mA);
    Shape(r, "m_l", p.mL);
    Shape(r, "m_n", p.mN);
    Positive(r, "c_l", p.cL);
    Positive(r, "c_n", p.cN);
    Positive(r, "env_a", p.envA);
    Positive(r, "env_b", p.envB);
    Positive(r, "sigma2", p.sigma2);
    Gains(r, "g_main_bs", p.antenna.gMainBs, "g_side_bs", p.antenna.gSideBs);
    Gains(r, "g_main_uav", p.antenna.gMainUav, "g_side_uav", p.antenna.gSideUav);
    Beamwidth(r, "theta_bs", p.antenna.thetaBs);
    Beamwidth(r, "theta_uav", p.antenna.thetaUav);
    Positive(r, "beta", p.beta);
    if (!(p.tauB >= 0.0) || !std::isfinite(p.tauB))
    {
        r.issues.push_back({IssueKind::NonPositive, "tau_b", "must be finite and >= 0"});
    }
    return r;
}

void
RequireValid(const SystemParams& params)
{
    auto r = Validate(params);
    if (!r.Ok())
    {
        throw Error(ErrorCode::InvalidParams, "invalid parameters:\n" + r.Describe());
    }
}

} // namespace uavnet
