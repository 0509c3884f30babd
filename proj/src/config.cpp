/*
 * Copyright (c) 2026 The uavnet authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "uavnet/config.hpp"

#include "uavnet/error.hpp"

#include <json.hpp>

#include <cmath>
#include <numbers>
#include <optional>
#include <set>

namespace uavnet
{

namespace
{

using Json = nlohmann::json;

enum class Unit
{
    None,   // dimensionless, bare key
    Meters, // _m
    Watts,  // _w
    PerM2,  // _per_m2
    Count,  // bare key, integer
    Ratio,  // bare key linear, or _db
    Angle,  // _deg or _rad
};

struct Quantity
{
    const char* base;
    Unit unit;
    double SystemParams::*field;
    double AntennaPattern::*antennaField;
};

double*
Slot(SystemParams& p, const Quantity& q)
{
    return q.field != nullptr ? &(p.*q.field) : &(p.antenna.*q.antennaField);
}

const std::vector<Quantity>&
Quantities()
{
    static const std::vector<Quantity> table{
        {"lambda_g", Unit::PerM2, &SystemParams::lambdaG, nullptr},
        {"h_g", Unit::Meters, &SystemParams::hG, nullptr},
        {"h_a", Unit::Meters, &SystemParams::hA, nullptr},
        {"n_uav", Unit::Count, nullptr, nullptr},
        {"r_c", Unit::Meters, &SystemParams::rC, nullptr},
        {"x_0", Unit::Meters, &SystemParams::x0, nullptr},
        {"p_tg", Unit::Watts, &SystemParams::pTg, nullptr},
        {"p_ta", Unit::Watts, &SystemParams::pTa, nullptr},
        {"p_tb", Unit::Watts, &SystemParams::pTb, nullptr},
        {"eta_g", Unit::None, &SystemParams::etaG, nullptr},
        {"eta_a", Unit::None, &SystemParams::etaA, nullptr},
        {"eta_l", Unit::None, &SystemParams::etaL, nullptr},
        {"eta_n", Unit::None, &SystemParams::etaN, nullptr},
        {"m_a", Unit::None, &SystemParams::mA, nullptr},
        {"m_l", Unit::None, &SystemParams::mL, nullptr},
        {"m_n", Unit::None, &SystemParams::mN, nullptr},
        {"c_l", Unit::Ratio, &SystemParams::cL, nullptr},
        {"c_n", Unit::Ratio, &SystemParams::cN, nullptr},
        {"env_a", Unit::None, &SystemParams::envA, nullptr},
        {"env_b", Unit::None, &SystemParams::envB, nullptr},
        {"sigma2", Unit::Watts, &SystemParams::sigma2, nullptr},
        {"g_main_bs", Unit::Ratio, nullptr, &AntennaPattern::gMainBs},
        {"g_side_bs", Unit::Ratio, nullptr, &AntennaPattern::gSideBs},
        {"g_main_uav", Unit::Ratio, nullptr, &AntennaPattern::gMainUav},
        {"g_side_uav", Unit::Ratio, nullptr, &AntennaPattern::gSideUav},
        {"theta_bs", Unit::Angle, nullptr, &AntennaPattern::thetaBs},
        {"theta_uav", Unit::Angle, nullptr, &AntennaPattern::thetaUav},
        {"beta", Unit::Ratio, &SystemParams::beta, nullptr},
        {"tau_b", Unit::Ratio, &SystemParams::tauB, nullptr},
    };
    return table;
}

std::vector<std::string>
SuffixesFor(Unit unit)
{
    switch (unit)
    {
    case Unit::None:
    case Unit::Count:
        return {""};
    case Unit::Meters:
        return {"_m"};
    case Unit::Watts:
        return {"_w"};
    case Unit::PerM2:
        return {"_per_m2"};
    case Unit::Ratio:
        return {"", "_db"};
    case Unit::Angle:
        return {"_deg", "_rad"};
    }
    return {};
}

struct Resolved
{
    const Quantity* quantity;
    std::string suffix;
};

std::optional<Resolved>
Resolve(const std::string& key)
{
    for (const auto& q : Quantities())
    {
        for (const auto& suffix : SuffixesFor(q.unit))
        {
            if (key == std::string(q.base) + suffix)
            {
                return Resolved{&q, suffix};
            }
        }
    }
    return std::nullopt;
}

/// A key that names a known quantity with the wrong unit suffix.
bool
LooksLikeKnownQuantity(const std::string& key)
{
    for (const auto& q : Quantities())
    {
        std::string base = q.base;
        if (key == base || key.rfind(base + "_", 0) == 0)
        {
            return true;
        }
    }
    return false;
}

double
ToSi(const Resolved& r, double value)
{
    if (r.suffix == "_db")
    {
        return DbToLinear(value);
    }
    if (r.suffix == "_deg")
    {
        return DegToRad(value);
    }
    return value;
}

void
ApplyOne(SystemParams& params, const std::string& key, const Json& value, std::set<std::string>& seen)
{
    auto resolved = Resolve(key);
    if (!resolved)
    {
        if (LooksLikeKnownQuantity(key))
        {
            throw Error(ErrorCode::UnitError, "unsupported unit for key '" + key + "'");
        }
        throw Error(ErrorCode::UnknownKey, "unknown key '" + key + "'");
    }
    const Quantity& q = *resolved->quantity;
    if (!seen.insert(q.base).second)
    {
        throw Error(ErrorCode::UnitError,
                    std::string("quantity '") + q.base + "' given in more than one unit");
    }
    if (!value.is_number())
    {
        throw Error(ErrorCode::ParseError, "value of '" + key + "' must be a number");
    }
    if (q.unit == Unit::Count)
    {
        if (!value.is_number_integer())
        {
            throw Error(ErrorCode::ParseError, "value of '" + key + "' must be an integer");
        }
        params.nUav = value.get<int>();
        return;
    }
    *Slot(params, q) = ToSi(*resolved, value.get<double>());
}

void
ApplyDocument(SystemParams& params, std::string_view text)
{
    Json doc;
    try
    {
        doc = Json::parse(text.begin(), text.end());
    }
    catch (const Json::parse_error& e)
    {
        throw Error(ErrorCode::ParseError, std::string("config: ") + e.what());
    }
    if (!doc.is_object())
    {
        throw Error(ErrorCode::ParseError, "config: top level must be a JSON object");
    }
    std::set<std::string> seen;
    for (const auto& [key, value] : doc.items())
    {
        ApplyOne(params, key, value, seen);
    }
}

} // namespace

const std::vector<std::string>&
ConfigKeys()
{
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> out;
        for (const auto& q : Quantities())
        {
            for (const auto& suffix : SuffixesFor(q.unit))
            {
                out.push_back(std::string(q.base) + suffix);
            }
        }
        return out;
    }();
    return keys;
}

SystemParams
LoadConfig(std::string_view text)
{
    SystemParams params = DefaultParams();
    ApplyDocument(params, text);
    RequireValid(params);
    return params;
}

void
ApplyConfig(SystemParams& params, std::string_view text)
{
    ApplyDocument(params, text);
}

void
ApplyOverride(SystemParams& params, const std::string& key, double value)
{
    std::set<std::string> seen;
    auto resolved = Resolve(key);
    if (resolved && resolved->quantity->unit == Unit::Count)
    {
        if (std::floor(value) != value)
        {
            throw Error(ErrorCode::ParseError, "value of '" + key + "' must be an integer");
        }
        ApplyOne(params, key, Json(static_cast<long long>(value)), seen);
        return;
    }
    ApplyOne(params, key, Json(value), seen);
}

double
ReadKey(const SystemParams& params, const std::string& key)
{
    auto resolved = Resolve(key);
    if (!resolved)
    {
        throw Error(LooksLikeKnownQuantity(key) ? ErrorCode::UnitError : ErrorCode::UnknownKey,
                    "cannot read key '" + key + "'");
    }
    const Quantity& q = *resolved->quantity;
    if (q.unit == Unit::Count)
    {
        return params.nUav;
    }
    SystemParams copy = params;
    const double si = *Slot(copy, q);
    if (resolved->suffix == "_db")
    {
        return LinearToDb(si);
    }
    if (resolved->suffix == "_deg")
    {
        return si * 180.0 / std::numbers::pi;
    }
    return si;
}

std::string
RenderConfig(const SystemParams& params)
{
    Json doc = Json::object();
    SystemParams copy = params;
    for (const auto& q : Quantities())
    {
        if (q.unit == Unit::Count)
        {
            doc[q.base] = params.nUav;
            continue;
        }
        std::string key = std::string(q.base) + SuffixesFor(q.unit).back();
        if (q.unit == Unit::Ratio)
        {
            key = q.base;
        }
        doc[key] = *Slot(copy, q);
    }
    return doc.dump(2);
}

} // namespace uavnet
