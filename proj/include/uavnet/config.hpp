/*
 * Copyright (c) 2026 The uavnet authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef UAVNET_CONFIG_HPP
#define UAVNET_CONFIG_HPP

#include "uavnet/params.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace uavnet
{

/**
 * JSON configuration documents.
 *
 * Keys are snake_case and carry their unit as a suffix: _m, _w, _per_m2,
 * _deg, _rad, _db. Dimensionless quantities (exponents, Nakagami shapes,
 * environment constants, linear gains and thresholds) have no suffix. Gains,
 * intercepts and thresholds may be given either linear (bare key) or in dB
 * (_db key), beamwidths in _deg or _rad, but not both forms at once.
 * Absent keys keep their current value; unknown keys are rejected.
 */

/// Every accepted key, in documentation order.
const std::vector<std::string>& ConfigKeys();

/// Parses a full document on top of DefaultParams() and validates the result.
SystemParams LoadConfig(std::string_view text);

/// Applies the keys of a JSON object document onto @p params without
/// validating the result.
void ApplyConfig(SystemParams& params, std::string_view text);

/// Applies a single key with a numeric value (the CLI --set path).
void ApplyOverride(SystemParams& params, const std::string& key, double value);

/// Current value of @p key in the unit its suffix names.
double ReadKey(const SystemParams& params, const std::string& key);

/// Renders the parameters with linear/SI keys only, so LoadConfig(RenderConfig(p)) == p.
std::string RenderConfig(const SystemParams& params);

} // namespace uavnet

#endif // UAVNET_CONFIG_HPP
