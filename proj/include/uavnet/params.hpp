/*
 * Copyright (c) 2026 The uavnet authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef UAVNET_PARAMS_HPP
#define UAVNET_PARAMS_HPP

#include <string>
#include <string_view>
#include <vector>

namespace uavnet
{

/**
 * Two-level (main lobe / side lobe) sectored pattern used on the mmWave
 * backhaul by both the ground BSs and the UAVs. Gains are linear, beamwidths
 * in radians.
 */
struct AntennaPattern
{
    double gMainBs;
    double gSideBs;
    double gMainUav;
    double gSideUav;
    double thetaBs;
    double thetaUav;

    /// Probability that a uniformly steered BS beam covers a given direction.
    double Cg() const;
    /// Same for a UAV beam.
    double Ca() const;

    bool operator==(const AntennaPattern&) const = default;
};

/**
 * Every scalar of the hybrid aerial/terrestrial network model, SI linear
 * units throughout (m, W, 1/m^2, radians, linear ratios).
 *
 * Nakagami shapes are stored as doubles so that a non-integer value read
 * from a config file can be reported by Validate(); everything downstream
 * reads them through the integer accessors.
 */
struct SystemParams
{
    double lambdaG; ///< BS density, 1/m^2
    double hG;      ///< BS height, m
    double hA;      ///< UAV height, m
    int nUav;       ///< number of UAVs in the disk
    double rC;      ///< UAV disk radius, m
    double x0;      ///< UE distance from the disk center, m

    double pTg; ///< BS access power, W
    double pTa; ///< UAV access power, W
    double pTb; ///< BS backhaul power, W

    double etaG;
    double etaA;
    double etaL;
    double etaN;

    double mA;
    double mL;
    double mN;

    double cL; ///< LOS backhaul intercept, linear
    double cN; ///< NLOS backhaul intercept, linear

    double envA; ///< LOS logistic constant a
    double envB; ///< LOS logistic constant b

    double sigma2; ///< backhaul noise power, W

    AntennaPattern antenna;

    double beta; ///< access SIR threshold, linear
    double tauB; ///< backhaul SINR threshold, linear

    int ShapeA() const
    {
        return static_cast<int>(mA);
    }

    int ShapeL() const
    {
        return static_cast<int>(mL);
    }

    int ShapeN() const
    {
        return static_cast<int>(mN);
    }

    /// Closest possible UE-UAV distance beyond the inner (full-annulus) part.
    double Wm() const;
    /// Farthest possible UE-UAV distance.
    double Wp() const;
    /// |h_a - h_g|.
    double DeltaH() const;

    bool operator==(const SystemParams&) const = default;
};

/// Baseline parameter point used throughout the evaluation.
SystemParams DefaultParams();

double DbToLinear(double db);
double LinearToDb(double linear);
double DegToRad(double deg);

enum class IssueKind
{
    NonPositive,
    ExponentTooSmall,
    NonIntegerShape,
    UeOutsideDisk,
    BadAntenna,
};

const char* ToString(IssueKind kind);

struct ValidationIssue
{
    IssueKind kind;
    std::string field;
    std::string message;
};

/// Outcome of Validate(): empty issue list means the parameters are usable.
struct ValidationResult
{
    std::vector<ValidationIssue> issues;

    bool Ok() const
    {
        return issues.empty();
    }

    /// One line per issue, "Kind(field): message".
    std::string Describe() const;
};

/// Checks every invariant and reports all violations; never throws.
ValidationResult Validate(const SystemParams& params);

/// Throws Error(InvalidParams) listing every violation.
void RequireValid(const SystemParams& params);

} // namespace uavnet

#endif // UAVNET_PARAMS_HPP
