/*
 * Copyright (c) 2026 The uavnet authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "uavnet/uavnet.h"

#include "uavnet/analysis.hpp"
#include "uavnet/config.hpp"
#include "uavnet/error.hpp"
#include "uavnet/montecarlo.hpp"
#include "uavnet/validation.hpp"

#include <cmath>
#include <cstring>
#include <limits>
#include <new>
#include <string>

struct uavnet_params
{
    uavnet::SystemParams value;
    uavnet::AnalysisOptions analysis;
};

struct uavnet_validation
{
    uavnet::ValidationReport report;
};

namespace
{

thread_local std::string g_lastError;

uavnet_status
StatusOf(uavnet::ErrorCode code)
{
    using uavnet::ErrorCode;
    switch (code)
    {
    case ErrorCode::InvalidArgument:
        return UAVNET_ERR_INVALID_ARGUMENT;
    case ErrorCode::InvalidParams:
        return UAVNET_ERR_INVALID_PARAMS;
    case ErrorCode::ParseError:
        return UAVNET_ERR_PARSE;
    case ErrorCode::UnknownKey:
        return UAVNET_ERR_UNKNOWN_KEY;
    case ErrorCode::UnitError:
        return UAVNET_ERR_UNIT;
    case ErrorCode::NonConvergence:
        return UAVNET_ERR_NON_CONVERGENCE;
    case ErrorCode::NonFiniteEvaluation:
        return UAVNET_ERR_NON_FINITE;
    case ErrorCode::DegenerateSupport:
        return UAVNET_ERR_DEGENERATE_SUPPORT;
    case ErrorCode::DegenerateTier:
        return UAVNET_ERR_DEGENERATE_TIER;
    }
    return UAVNET_ERR_INTERNAL;
}

uavnet_status
Fail(uavnet_status status, const std::string& message)
{
    g_lastError = message;
    return status;
}

template <typename F>
uavnet_status
Guard(F&& body)
{
    g_lastError.clear();
    try
    {
        body();
        return UAVNET_OK;
    }
    catch (const uavnet::Error& e)
    {
        return Fail(StatusOf(e.Code()), e.what());
    }
    catch (const std::bad_alloc&)
    {
        return Fail(UAVNET_ERR_INTERNAL, "out of memory");
    }
    catch (const std::exception& e)
    {
        return Fail(UAVNET_ERR_INTERNAL, e.what());
    }
}

#define UAVNET_REQUIRE(cond)                                                                       \
    do                                                                                             \
    {                                                                                              \
        if (!(cond))                                                                               \
        {                                                                                          \
            return Fail(UAVNET_ERR_INVALID_ARGUMENT, "null argument: " #cond);                     \
        }                                                                                          \
    } while (false)

uavnet::SimOptions
ToSimOptions(const uavnet_sim_options* o)
{
    uavnet::SimOptions s;
    s.nTrials = o->trials;
    s.seed = o->seed;
    s.jobs = o->jobs;
    if (o->mode != UAVNET_MODE_FULL && o->mode != UAVNET_MODE_CENTER_UAV)
    {
        throw uavnet::Error(uavnet::ErrorCode::InvalidArgument, "unknown simulation mode");
    }
    s.mode = o->mode == UAVNET_MODE_CENTER_UAV ? uavnet::SimMode::CenterUav : uavnet::SimMode::Full;
    s.windowRadius = o->window_m;
    s.windowScale = o->window_scale;
    return s;
}

void
FillPartial(const uavnet::SystemParams& p,
            const uavnet::AnalysisOptions& opts,
            uavnet_report* out,
            uavnet_status& first)
{
    const double nan = std::numeric_limits<double>::quiet_NaN();
    *out = {nan, nan, nan, nan, nan, nan, nan, nan, nan, nan, nan, nan, nan};
    auto attempt = [&first](auto&& body) {
        try
        {
            body();
        }
        catch (const uavnet::Error& e)
        {
            if (first == UAVNET_OK)
            {
                first = StatusOf(e.Code());
                g_lastError = e.what();
            }
        }
    };
    attempt([&] {
        auto a = uavnet::AssociationProbabilities(p, opts);
        out->a_g = a.aG;
        out->a_a = a.aA;
    });
    attempt([&] {
        auto t = uavnet::BackhaulTierProbabilities(p, opts);
        out->a_los = t.aLos;
        out->a_nlos = t.aNlos;
    });
    attempt([&] { out->s_backhaul = uavnet::BackhaulProbability(p.tauB, p, opts); });
    attempt([&] { out->p_cov_g = uavnet::ConditionalCoverageBs(p.beta, p, opts); });
    attempt([&] { out->p_cov_a = uavnet::ConditionalCoverageUav(p.beta, p.tauB, p, opts); });
    out->p_cov = out->a_a * out->p_cov_a + out->a_g * out->p_cov_g;
}

} // namespace

extern "C" {

const char*
uavnet_status_name(uavnet_status status)
{
    switch (status)
    {
    case UAVNET_OK:
        return "OK";
    case UAVNET_ERR_INVALID_ARGUMENT:
        return "InvalidArgument";
    case UAVNET_ERR_INVALID_PARAMS:
        return "InvalidParams";
    case UAVNET_ERR_PARSE:
        return "ParseError";
    case UAVNET_ERR_UNKNOWN_KEY:
        return "UnknownKey";
    case UAVNET_ERR_UNIT:
        return "UnitError";
    case UAVNET_ERR_NON_CONVERGENCE:
        return "NonConvergence";
    case UAVNET_ERR_NON_FINITE:
        return "NonFiniteEvaluation";
    case UAVNET_ERR_DEGENERATE_SUPPORT:
        return "DegenerateSupport";
    case UAVNET_ERR_DEGENERATE_TIER:
        return "DegenerateTier";
    case UAVNET_ERR_INTERNAL:
        return "Internal";
    }
    return "Unknown";
}

const char*
uavnet_last_error(void)
{
    return g_lastError.c_str();
}

const char*
uavnet_version(void)
{
    return "1.0.0";
}

uavnet_status
uavnet_params_create(uavnet_params** out)
{
    UAVNET_REQUIRE(out);
    return Guard([&] { *out = new uavnet_params{uavnet::DefaultParams()}; });
}

uavnet_status
uavnet_params_clone(const uavnet_params* params, uavnet_params** out)
{
    UAVNET_REQUIRE(params && out);
    return Guard([&] { *out = new uavnet_params{*params}; });
}

void
uavnet_params_destroy(uavnet_params* params)
{
    delete params;
}

uavnet_status
uavnet_params_apply_json(uavnet_params* params, const char* json)
{
    UAVNET_REQUIRE(params && json);
    return Guard([&] {
        uavnet::SystemParams next = params->value;
        uavnet::ApplyConfig(next, json);
        params->value = next;
    });
}

uavnet_status
uavnet_params_set(uavnet_params* params, const char* key, double value)
{
    UAVNET_REQUIRE(params && key);
    return Guard([&] { uavnet::ApplyOverride(params->value, key, value); });
}

uavnet_status
uavnet_params_get(const uavnet_params* params, const char* key, double* value)
{
    UAVNET_REQUIRE(params && key && value);
    return Guard([&] { *value = uavnet::ReadKey(params->value, key); });
}

uavnet_status
uavnet_params_set_quadrature(uavnet_params* params, double rel_tol, double abs_tol, int max_depth)
{
    UAVNET_REQUIRE(params);
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || !std::isfinite(rel_tol) || !std::isfinite(abs_tol) ||
        max_depth < 1 || max_depth > 200)
    {
        return Fail(UAVNET_ERR_INVALID_ARGUMENT, "quadrature tolerances must be positive and max_depth in 1..200");
    }
    return Guard([&] { params->analysis.tol = {rel_tol, abs_tol, max_depth}; });
}

uavnet_status
uavnet_params_get_quadrature(const uavnet_params* params, double* rel_tol, double* abs_tol, int* max_depth)
{
    UAVNET_REQUIRE(params && rel_tol && abs_tol && max_depth);
    return Guard([&] {
        *rel_tol = params->analysis.tol.rel;
        *abs_tol = params->analysis.tol.abs;
        *max_depth = params->analysis.tol.maxDepth;
    });
}

uavnet_status
uavnet_params_validate(const uavnet_params* params)
{
    UAVNET_REQUIRE(params);
    return Guard([&] { uavnet::RequireValid(params->value); });
}

uavnet_status
uavnet_params_to_json(const uavnet_params* params, char** out)
{
    UAVNET_REQUIRE(params && out);
    return Guard([&] {
        const std::string text = uavnet::RenderConfig(params->value);
        char* buffer = new char[text.size() + 1];
        std::memcpy(buffer, text.c_str(), text.size() + 1);
        *out = buffer;
    });
}

void
uavnet_string_free(char* text)
{
    delete[] text;
}

size_t
uavnet_config_key_count(void)
{
    return uavnet::ConfigKeys().size();
}

const char*
uavnet_config_key(size_t index)
{
    const auto& keys = uavnet::ConfigKeys();
    return index < keys.size() ? keys[index].c_str() : nullptr;
}

uavnet_status
uavnet_analyze(const uavnet_params* params, uavnet_report* out)
{
    UAVNET_REQUIRE(params && out);
    const uavnet::SystemParams& p = params->value;
    uavnet_status status = Guard([&] {
        uavnet::RequireValid(p);
        const auto r = uavnet::OverallCoverage(p.beta, p.tauB, p, params->analysis);
        *out = {r.aG,
                r.aA,
                r.aLos,
                r.aNlos,
                r.sBackhaul,
                r.pCovG,
                r.pCovA,
                r.pCov,
                r.error.aG,
                r.error.aLos,
                r.error.sBackhaul,
                r.error.pCovG,
                r.error.pCovA};
    });
    if (status == UAVNET_OK || status == UAVNET_ERR_INVALID_PARAMS)
    {
        return status;
    }
    uavnet_status partial = UAVNET_OK;
    const std::string message = g_lastError;
    FillPartial(p, params->analysis, out, partial);
    g_lastError = message;
    return status;
}

void
uavnet_sim_options_init(uavnet_sim_options* opts)
{
    if (opts == nullptr)
    {
        return;
    }
    const uavnet::SimOptions d;
    opts->trials = d.nTrials;
    opts->seed = d.seed;
    opts->jobs = d.jobs;
    opts->mode = UAVNET_MODE_FULL;
    opts->window_m = d.windowRadius;
    opts->window_scale = d.windowScale;
}

const char*
uavnet_metric_name(uavnet_metric metric)
{
    if (metric < 0 || metric >= UAVNET_METRIC_COUNT)
    {
        return nullptr;
    }
    return uavnet::ToString(static_cast<uavnet::Metric>(metric));
}

uavnet_status
uavnet_simulate(const uavnet_params* params, const uavnet_sim_options* opts, uavnet_sim_result* out)
{
    UAVNET_REQUIRE(params && opts && out);
    return Guard([&] {
        const auto estimates = uavnet::EstimateMetrics(params->value, ToSimOptions(opts));
        uavnet_sim_result result{};
        for (const auto& [metric, e] : estimates)
        {
            uavnet_estimate& slot = result.metrics[static_cast<int>(metric)];
            slot.present = 1;
            slot.flagged = e.flagged ? 1 : 0;
            slot.value = e.value;
            slot.half_width = e.halfWidth;
            slot.trials = e.trials;
        }
        *out = result;
    });
}

uavnet_status
uavnet_validate(const uavnet_params* params,
                const uavnet_sim_options* opts,
                int window_check,
                uavnet_validation** out)
{
    UAVNET_REQUIRE(params && opts && out);
    return Guard([&] {
        uavnet::ValidationOptions v;
        v.sim = ToSimOptions(opts);
        v.analysis = params->analysis;
        v.windowCheck = window_check != 0;
        uavnet::RequireValid(params->value);
        *out = new uavnet_validation{uavnet::RunValidation(params->value, v)};
    });
}

size_t
uavnet_validation_row_count(const uavnet_validation* validation)
{
    return validation != nullptr ? validation->report.rows.size() : 0;
}

uavnet_status
uavnet_validation_row_at(const uavnet_validation* validation, size_t index, uavnet_validation_row* out)
{
    UAVNET_REQUIRE(validation && out);
    if (index >= validation->report.rows.size())
    {
        return Fail(UAVNET_ERR_INVALID_ARGUMENT, "row index out of range");
    }
    const auto& r = validation->report.rows[index];
    *out = {r.name.c_str(),
            uavnet::ToString(r.rule),
            r.analytic,
            r.simulated,
            r.halfWidth,
            r.gap,
            r.tolerance,
            r.pass ? 1 : 0};
    return UAVNET_OK;
}

int
uavnet_validation_passed(const uavnet_validation* validation)
{
    return validation != nullptr && validation->report.Passed() ? 1 : 0;
}

void
uavnet_validation_destroy(uavnet_validation* validation)
{
    delete validation;
}

} // extern "C"
