/*
 * Copyright (c) 2026 The uavnet authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

// Exercises the shared library through its C header only.

#include "uavnet/uavnet.h"

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

namespace
{

struct Params
{
    uavnet_params* p = nullptr;

    Params()
    {
        REQUIRE(uavnet_params_create(&p) == UAVNET_OK);
    }

    ~Params()
    {
        uavnet_params_destroy(p);
    }
};

double
Get(const uavnet_params* p, const char* key)
{
    double v = 0.0;
    REQUIRE(uavnet_params_get(p, key, &v) == UAVNET_OK);
    return v;
}

} // namespace

TEST_CASE("status names and versions")
{
    CHECK(std::string(uavnet_status_name(UAVNET_OK)) == "OK");
    CHECK(std::string(uavnet_status_name(UAVNET_ERR_NON_CONVERGENCE)) == "NonConvergence");
    CHECK(std::strlen(uavnet_version()) > 0);
    CHECK(uavnet_config_key_count() > 20);
    CHECK(std::string(uavnet_config_key(0)) == "lambda_g_per_m2");
    CHECK(uavnet_config_key(100000) == nullptr);
    CHECK(std::string(uavnet_metric_name(UAVNET_METRIC_P_COV)) == "p_cov");
    CHECK(uavnet_metric_name(UAVNET_METRIC_COUNT) == nullptr);
}

TEST_CASE("parameter handles")
{
    Params a;
    CHECK(Get(a.p, "h_a_m") == 100.0);
    CHECK(uavnet_params_set(a.p, "h_a_m", 150.0) == UAVNET_OK);
    CHECK(Get(a.p, "h_a_m") == 150.0);
    CHECK(uavnet_params_set(a.p, "beta_db", 3.0) == UAVNET_OK);
    CHECK(Get(a.p, "beta_db") == doctest::Approx(3.0));

    uavnet_params* copy = nullptr;
    REQUIRE(uavnet_params_clone(a.p, &copy) == UAVNET_OK);
    CHECK(uavnet_params_set(copy, "h_a_m", 60.0) == UAVNET_OK);
    CHECK(Get(a.p, "h_a_m") == 150.0);
    CHECK(Get(copy, "h_a_m") == 60.0);

    char* json = nullptr;
    REQUIRE(uavnet_params_to_json(a.p, &json) == UAVNET_OK);
    Params b;
    CHECK(uavnet_params_apply_json(b.p, json) == UAVNET_OK);
    CHECK(Get(b.p, "h_a_m") == 150.0);
    CHECK(Get(b.p, "beta") == Get(a.p, "beta"));
    uavnet_string_free(json);
    uavnet_params_destroy(copy);
}

TEST_CASE("errors map to status codes and leave handles untouched")
{
    Params a;
    CHECK(uavnet_params_set(a.p, "altitude", 1.0) == UAVNET_ERR_UNKNOWN_KEY);
    CHECK(std::string(uavnet_last_error()).find("altitude") != std::string::npos);
    CHECK(uavnet_params_set(a.p, "h_a_km", 1.0) == UAVNET_ERR_UNIT);
    CHECK(uavnet_params_apply_json(a.p, "{\"h_a_m\": 200, \"oops\": 1}") == UAVNET_ERR_UNKNOWN_KEY);
    CHECK(Get(a.p, "h_a_m") == 100.0);
    CHECK(uavnet_params_apply_json(a.p, "{not json") == UAVNET_ERR_PARSE);
    CHECK(uavnet_params_create(nullptr) == UAVNET_ERR_INVALID_ARGUMENT);
    CHECK(uavnet_params_get(a.p, "h_a_m", nullptr) == UAVNET_ERR_INVALID_ARGUMENT);

    CHECK(uavnet_params_set(a.p, "eta_g", 1.5) == UAVNET_OK);
    CHECK(uavnet_params_validate(a.p) == UAVNET_ERR_INVALID_PARAMS);
    CHECK(std::string(uavnet_last_error()).find("eta_g") != std::string::npos);
    uavnet_report r;
    CHECK(uavnet_analyze(a.p, &r) == UAVNET_ERR_INVALID_PARAMS);

    CHECK(uavnet_params_validate(Params().p) == UAVNET_OK);
    CHECK(std::string(uavnet_last_error()).empty());
}

TEST_CASE("analysis report")
{
    Params a;
    uavnet_report r;
    REQUIRE(uavnet_analyze(a.p, &r) == UAVNET_OK);
    CHECK(r.a_g + r.a_a == 1.0);
    CHECK(r.a_los + r.a_nlos == 1.0);
    CHECK(r.p_cov == r.a_a * r.p_cov_a + r.a_g * r.p_cov_g);
    CHECK(r.p_cov > 0.0);
    CHECK(r.p_cov < 1.0);
    CHECK(r.err_a_g >= 0.0);
    CHECK(r.err_a_g < 1e-6);
}

TEST_CASE("quadrature settings travel with the handle")
{
    Params a;
    double rel = 0.0;
    double abs = 0.0;
    int depth = 0;
    REQUIRE(uavnet_params_get_quadrature(a.p, &rel, &abs, &depth) == UAVNET_OK);
    CHECK(rel == 1e-7);
    CHECK(depth == 60);
    CHECK(uavnet_params_set_quadrature(a.p, -1.0, abs, depth) == UAVNET_ERR_INVALID_ARGUMENT);
    CHECK(uavnet_params_set_quadrature(a.p, rel, abs, 0) == UAVNET_ERR_INVALID_ARGUMENT);

    REQUIRE(uavnet_params_set_quadrature(a.p, rel, abs, 1) == UAVNET_OK);
    uavnet_params* copy = nullptr;
    REQUIRE(uavnet_params_clone(a.p, &copy) == UAVNET_OK);
    int copied = 0;
    uavnet_params_get_quadrature(copy, &rel, &abs, &copied);
    CHECK(copied == 1);
    uavnet_params_destroy(copy);

    uavnet_report r;
    CHECK(uavnet_analyze(a.p, &r) == UAVNET_ERR_NON_CONVERGENCE);
    CHECK(std::string(uavnet_last_error()).find("quadrature") != std::string::npos);
    CHECK(std::isnan(r.p_cov));
}

TEST_CASE("simulation through the C API")
{
    Params a;
    uavnet_sim_options o;
    uavnet_sim_options_init(&o);
    CHECK(o.trials == 100000);
    CHECK(o.window_scale == 1.0);
    o.trials = 500;
    o.jobs = 1;
    uavnet_sim_result r1;
    uavnet_sim_result r2;
    REQUIRE(uavnet_simulate(a.p, &o, &r1) == UAVNET_OK);
    o.jobs = 2;
    REQUIRE(uavnet_simulate(a.p, &o, &r2) == UAVNET_OK);
    for (int m = 0; m < UAVNET_METRIC_COUNT; ++m)
    {
        CHECK(r1.metrics[m].present == 1);
        CHECK(r1.metrics[m].value == r2.metrics[m].value);
        CHECK(r1.metrics[m].trials == r2.metrics[m].trials);
    }
    CHECK(r1.metrics[UAVNET_METRIC_P_COV].trials == 500);

    o.mode = UAVNET_MODE_CENTER_UAV;
    REQUIRE(uavnet_simulate(a.p, &o, &r1) == UAVNET_OK);
    CHECK(r1.metrics[UAVNET_METRIC_S_BACKHAUL].present == 1);
    CHECK(r1.metrics[UAVNET_METRIC_P_COV].present == 0);

    o.mode = 7;
    CHECK(uavnet_simulate(a.p, &o, &r1) == UAVNET_ERR_INVALID_ARGUMENT);
    o.mode = UAVNET_MODE_FULL;
    o.trials = 0;
    CHECK(uavnet_simulate(a.p, &o, &r1) == UAVNET_ERR_INVALID_ARGUMENT);
}

TEST_CASE("validation handle")
{
    Params a;
    uavnet_sim_options o;
    uavnet_sim_options_init(&o);
    o.trials = 2000;
    o.jobs = 1;
    uavnet_validation* v = nullptr;
    REQUIRE(uavnet_validate(a.p, &o, 0, &v) == UAVNET_OK);
    REQUIRE(uavnet_validation_row_count(v) == 5);
    uavnet_validation_row row;
    REQUIRE(uavnet_validation_row_at(v, 0, &row) == UAVNET_OK);
    CHECK(std::string(row.name) == "a_g");
    CHECK(std::string(row.rule) == "3sigma");
    CHECK(uavnet_validation_row_at(v, 5, &row) == UAVNET_ERR_INVALID_ARGUMENT);
    const int passed = uavnet_validation_passed(v);
    CHECK((passed == 0 || passed == 1));
    uavnet_validation_destroy(v);
    CHECK(uavnet_validation_row_count(nullptr) == 0);
}
