/*
 * Copyright (c) 2026 The uavnet authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

// Command-line front end. Talks to the library only through uavnet.h.

#include "uavnet/uavnet.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace
{

using Json = nlohmann::json;

enum Exit
{
    kExitOk = 0,
    kExitFail = 1,
    kExitConfig = 2,
    kExitNonConvergence = 3,
    kExitRuntime = 4,
};

struct ParamsDeleter
{
    void operator()(uavnet_params* p) const
    {
        uavnet_params_destroy(p);
    }
};

using ParamsPtr = std::unique_ptr<uavnet_params, ParamsDeleter>;

struct ValidationDeleter
{
    void operator()(uavnet_validation* v) const
    {
        uavnet_validation_destroy(v);
    }
};

class CliError : public std::runtime_error
{
  public:
    CliError(int code, const std::string& what)
        : std::runtime_error(what),
          m_code(code)
    {
    }

    int Code() const
    {
        return m_code;
    }

  private:
    int m_code;
};

int
ExitFor(uavnet_status status)
{
    switch (status)
    {
    case UAVNET_OK:
        return kExitOk;
    case UAVNET_ERR_INVALID_PARAMS:
    case UAVNET_ERR_PARSE:
    case UAVNET_ERR_UNKNOWN_KEY:
    case UAVNET_ERR_UNIT:
        return kExitConfig;
    case UAVNET_ERR_NON_CONVERGENCE:
        return kExitNonConvergence;
    default:
        return kExitRuntime;
    }
}

void
Check(uavnet_status status, const std::string& context)
{
    if (status != UAVNET_OK)
    {
        throw CliError(ExitFor(status),
                       context + ": " + uavnet_status_name(status) + ": " + uavnet_last_error());
    }
}

std::string
Num(double v)
{
    if (std::isnan(v))
    {
        return "";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

Json
JsonNum(double v)
{
    return std::isnan(v) ? Json(nullptr) : Json(v);
}

struct Common
{
    std::string config;
    std::vector<std::string> sets;
    std::optional<double> betaDb;
    std::optional<double> tauDb;
    std::string out;
    std::string format = "csv";
    std::optional<double> quadRelTol;
    std::optional<double> quadAbsTol;
    std::optional<int> quadMaxDepth;
};

struct SimFlags
{
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    int jobs = 0;
    std::string mode = "full";
    double windowM = 0.0;
};

void
AddCommon(CLI::App* cmd, Common& c)
{
    cmd->add_option("--config", c.config, "JSON parameter file")->check(CLI::ExistingFile);
    cmd->add_option("--set", c.sets, "Override one config key, KEY=VALUE (repeatable)");
    cmd->add_option("--beta-db", c.betaDb, "Access SIR threshold in dB");
    cmd->add_option("--tau-db", c.tauDb, "Backhaul SINR threshold in dB");
    cmd->add_option("--out", c.out, "Write output to this file instead of stdout");
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--quad-rel-tol", c.quadRelTol, "Relative quadrature tolerance (default 1e-7)");
    cmd->add_option("--quad-abs-tol", c.quadAbsTol, "Absolute quadrature tolerance (default 1e-10)");
    cmd->add_option("--quad-max-depth", c.quadMaxDepth, "Bisections allowed per segment (default 60)");
}

void
AddSim(CLI::App* cmd, SimFlags& s, bool withMode)
{
    cmd->add_option("--trials", s.trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", s.seed, "Root seed");
    cmd->add_option("--jobs", s.jobs, "Worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
    cmd->add_option("--window-m", s.windowM, "BS sampling radius in m (0: automatic)")
        ->check(CLI::NonNegativeNumber);
    if (withMode)
    {
        cmd->add_option("--mode", s.mode, "Simulation mode")->check(CLI::IsMember({"full", "center-uav"}));
    }
}

uavnet_sim_options
ToOptions(const SimFlags& s)
{
    uavnet_sim_options o;
    uavnet_sim_options_init(&o);
    o.trials = s.trials;
    o.seed = s.seed;
    o.jobs = s.jobs;
    o.mode = s.mode == "center-uav" ? UAVNET_MODE_CENTER_UAV : UAVNET_MODE_FULL;
    o.window_m = s.windowM;
    return o;
}

std::string
ReadFile(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
    {
        throw CliError(kExitConfig, "cannot read config file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

double
ParseNumber(const std::string& text, const std::string& what)
{
    try
    {
        size_t used = 0;
        const double v = std::stod(text, &used);
        if (used == text.size())
        {
            return v;
        }
    }
    catch (const std::exception&)
    {
    }
    throw CliError(kExitConfig, "invalid number '" + text + "' in " + what);
}

ParamsPtr
BuildParams(const Common& c)
{
    uavnet_params* raw = nullptr;
    Check(uavnet_params_create(&raw), "params");
    ParamsPtr params(raw);
    if (!c.config.empty())
    {
        Check(uavnet_params_apply_json(params.get(), ReadFile(c.config).c_str()), c.config);
    }
    for (const auto& kv : c.sets)
    {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
        {
            throw CliError(kExitConfig, "--set expects KEY=VALUE, got '" + kv + "'");
        }
        const std::string key = kv.substr(0, eq);
        Check(uavnet_params_set(params.get(), key.c_str(), ParseNumber(kv.substr(eq + 1), "--set " + key)),
              "--set " + key);
    }
    if (c.betaDb)
    {
        Check(uavnet_params_set(params.get(), "beta_db", *c.betaDb), "--beta-db");
    }
    if (c.tauDb)
    {
        Check(uavnet_params_set(params.get(), "tau_b_db", *c.tauDb), "--tau-db");
    }
    if (c.quadRelTol || c.quadAbsTol || c.quadMaxDepth)
    {
        double rel = 0.0;
        double abs = 0.0;
        int depth = 0;
        Check(uavnet_params_get_quadrature(params.get(), &rel, &abs, &depth), "quadrature");
        if (uavnet_params_set_quadrature(params.get(),
                                         c.quadRelTol.value_or(rel),
                                         c.quadAbsTol.value_or(abs),
                                         c.quadMaxDepth.value_or(depth)) != UAVNET_OK)
        {
            throw CliError(kExitConfig, std::string("quadrature: ") + uavnet_last_error());
        }
    }
    Check(uavnet_params_validate(params.get()), "parameters");
    return params;
}

void
Emit(const Common& c, const std::string& text)
{
    if (c.out.empty())
    {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(c.out);
    if (!out)
    {
        throw CliError(kExitRuntime, "cannot write '" + c.out + "'");
    }
    out << text;
}

// analyze

struct ReportRow
{
    const char* name;
    double value;
    double error;
};

std::vector<ReportRow>
ReportRows(const uavnet_report& r)
{
    // P_cov inherits the errors of its three ingredients.
    const double pcovErr = r.a_a * r.err_p_cov_a + r.a_g * r.err_p_cov_g +
                           std::abs(r.p_cov_g - r.p_cov_a) * r.err_a_g;
    return {
        {"a_g", r.a_g, r.err_a_g},
        {"a_a", r.a_a, r.err_a_g},
        {"a_los", r.a_los, r.err_a_los},
        {"a_nlos", r.a_nlos, r.err_a_los},
        {"s_backhaul", r.s_backhaul, r.err_s_backhaul},
        {"p_cov_g", r.p_cov_g, r.err_p_cov_g},
        {"p_cov_a", r.p_cov_a, r.err_p_cov_a},
        {"p_cov", r.p_cov, pcovErr},
    };
}

std::string
RenderReport(const uavnet_report& r, const std::string& format)
{
    if (format == "json")
    {
        Json doc = Json::object();
        Json errors = Json::object();
        for (const auto& row : ReportRows(r))
        {
            doc[row.name] = JsonNum(row.value);
            errors[row.name] = JsonNum(row.error);
        }
        doc["quad_error"] = errors;
        return doc.dump(2) + "\n";
    }
    std::string text = "metric,value,quad_error\n";
    for (const auto& row : ReportRows(r))
    {
        text += std::string(row.name) + "," + Num(row.value) + "," + Num(row.error) + "\n";
    }
    return text;
}

int
RunAnalyze(const Common& c)
{
    ParamsPtr params = BuildParams(c);
    uavnet_report report;
    const uavnet_status status = uavnet_analyze(params.get(), &report);
    if (status != UAVNET_OK)
    {
        std::cerr << "analyze: " << uavnet_status_name(status) << ": " << uavnet_last_error() << "\n";
        std::cerr << "partial results:\n" << RenderReport(report, c.format);
        return ExitFor(status);
    }
    Emit(c, RenderReport(report, c.format));
    return kExitOk;
}

// simulate

int
RunSimulate(const Common& c, const SimFlags& s)
{
    ParamsPtr params = BuildParams(c);
    const uavnet_sim_options opts = ToOptions(s);
    uavnet_sim_result result;
    Check(uavnet_simulate(params.get(), &opts, &result), "simulate");

    if (c.format == "json")
    {
        Json metrics = Json::object();
        for (int m = 0; m < UAVNET_METRIC_COUNT; ++m)
        {
            const uavnet_estimate& e = result.metrics[m];
            if (e.present)
            {
                metrics[uavnet_metric_name(static_cast<uavnet_metric>(m))] = {
                    {"value", e.value}, {"trials", e.trials}, {"half_width", e.half_width},
                    {"flagged", e.flagged != 0}};
            }
        }
        Json doc = {{"trials", s.trials}, {"seed", s.seed}, {"mode", s.mode}, {"metrics", metrics}};
        Emit(c, doc.dump(2) + "\n");
        return kExitOk;
    }
    std::string text = "metric,value,trials,half_width,flagged\n";
    for (int m = 0; m < UAVNET_METRIC_COUNT; ++m)
    {
        const uavnet_estimate& e = result.metrics[m];
        if (e.present)
        {
            text += std::string(uavnet_metric_name(static_cast<uavnet_metric>(m))) + "," + Num(e.value) + "," +
                    std::to_string(e.trials) + "," + Num(e.half_width) + "," + (e.flagged ? "1" : "0") + "\n";
        }
    }
    Emit(c, text);
    return kExitOk;
}

// validate

int
RunValidate(const Common& c, const SimFlags& s, bool noWindowCheck)
{
    ParamsPtr params = BuildParams(c);
    const uavnet_sim_options opts = ToOptions(s);
    uavnet_validation* raw = nullptr;
    Check(uavnet_validate(params.get(), &opts, noWindowCheck ? 0 : 1, &raw), "validate");
    std::unique_ptr<uavnet_validation, ValidationDeleter> validation(raw);

    std::vector<uavnet_validation_row> rows(uavnet_validation_row_count(raw));
    for (size_t i = 0; i < rows.size(); ++i)
    {
        Check(uavnet_validation_row_at(raw, i, &rows[i]), "validate");
    }
    const bool passed = uavnet_validation_passed(raw) != 0;

    if (c.format == "json")
    {
        Json list = Json::array();
        for (const auto& r : rows)
        {
            list.push_back({{"metric", r.name},
                            {"rule", r.rule},
                            {"analytic", r.analytic},
                            {"simulated", r.simulated},
                            {"half_width", r.half_width},
                            {"gap", r.gap},
                            {"tolerance", r.tolerance},
                            {"result", r.pass ? "PASS" : "FAIL"}});
        }
        Emit(c, Json{{"passed", passed}, {"rows", list}}.dump(2) + "\n");
    }
    else
    {
        std::string text = "metric,rule,analytic,simulated,half_width,gap,tolerance,result\n";
        for (const auto& r : rows)
        {
            text += std::string(r.name) + "," + r.rule + "," + Num(r.analytic) + "," + Num(r.simulated) + "," +
                    Num(r.half_width) + "," + Num(r.gap) + "," + Num(r.tolerance) + "," +
                    (r.pass ? "PASS" : "FAIL") + "\n";
        }
        Emit(c, text);
    }
    return passed ? kExitOk : kExitFail;
}

// sweep

struct SweepFlags
{
    std::string axis;
    std::string values;
    std::string range;
    std::string metrics = "a_g,a_los,s_backhaul,p_cov";
    std::string modes = "analytic";
};

struct SweepPoint
{
    double x = 0.0;
    uavnet_report analytic{};
    uavnet_sim_result sim{};
    std::string error;
};

std::vector<std::string>
Split(const std::string& text, char sep)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep))
    {
        if (!item.empty())
        {
            out.push_back(item);
        }
    }
    return out;
}

std::string
AxisKey(const std::string& axis)
{
    if (axis == "h_a")
    {
        return "h_a_m";
    }
    if (axis == "lambda_g")
    {
        return "lambda_g_per_m2";
    }
    if (axis == "beta")
    {
        return "beta_db";
    }
    if (axis == "tau_b")
    {
        return "tau_b_db";
    }
    return axis;
}

std::vector<double>
AxisValues(const SweepFlags& f)
{
    std::vector<double> xs;
    for (const auto& v : Split(f.values, ','))
    {
        xs.push_back(ParseNumber(v, "--values"));
    }
    if (!f.range.empty())
    {
        const auto parts = Split(f.range, ':');
        if (parts.size() != 3)
        {
            throw CliError(kExitConfig, "--range expects START:STOP:STEP");
        }
        const double start = ParseNumber(parts[0], "--range");
        const double stop = ParseNumber(parts[1], "--range");
        const double step = ParseNumber(parts[2], "--range");
        if (!(step > 0.0) || stop < start)
        {
            throw CliError(kExitConfig, "--range needs STEP > 0 and STOP >= START");
        }
        const auto n = static_cast<long>(std::floor((stop - start) / step + 1e-9));
        for (long i = 0; i <= n; ++i)
        {
            xs.push_back(start + static_cast<double>(i) * step);
        }
    }
    return xs;
}

double
ReportValue(const uavnet_report& r, int metric)
{
    switch (metric)
    {
    case UAVNET_METRIC_A_G:
        return r.a_g;
    case UAVNET_METRIC_A_A:
        return r.a_a;
    case UAVNET_METRIC_A_LOS:
        return r.a_los;
    case UAVNET_METRIC_A_NLOS:
        return r.a_nlos;
    case UAVNET_METRIC_S_BACKHAUL:
        return r.s_backhaul;
    case UAVNET_METRIC_P_COV_G:
        return r.p_cov_g;
    case UAVNET_METRIC_P_COV_A:
        return r.p_cov_a;
    case UAVNET_METRIC_P_COV:
        return r.p_cov;
    default:
        return std::nan("");
    }
}

int
MetricIndex(const std::string& name)
{
    for (int m = 0; m < UAVNET_METRIC_COUNT; ++m)
    {
        if (name == uavnet_metric_name(static_cast<uavnet_metric>(m)))
        {
            return m;
        }
    }
    throw CliError(kExitConfig, "unknown metric '" + name + "'");
}

void
EvaluatePoint(const uavnet_params* base,
              const std::string& key,
              bool analytic,
              bool simulate,
              const uavnet_sim_options& opts,
              SweepPoint& point)
{
    const double nan = std::nan("");
    point.analytic = {nan, nan, nan, nan, nan, nan, nan, nan, nan, nan, nan, nan, nan};
    uavnet_params* raw = nullptr;
    if (uavnet_params_clone(base, &raw) != UAVNET_OK)
    {
        point.error = uavnet_last_error();
        return;
    }
    ParamsPtr params(raw);
    auto failed = [&point](uavnet_status status) {
        if (status == UAVNET_OK)
        {
            return false;
        }
        if (point.error.empty())
        {
            point.error = std::string(uavnet_status_name(status)) + ": " + uavnet_last_error();
        }
        return true;
    };
    if (failed(uavnet_params_set(params.get(), key.c_str(), point.x)) ||
        failed(uavnet_params_validate(params.get())))
    {
        return;
    }
    if (analytic)
    {
        failed(uavnet_analyze(params.get(), &point.analytic));
    }
    if (simulate)
    {
        failed(uavnet_simulate(params.get(), &opts, &point.sim));
    }
}

std::string
CsvField(const std::string& text)
{
    if (text.find_first_of(",\"\n") == std::string::npos)
    {
        return text;
    }
    std::string quoted = "\"";
    for (char ch : text)
    {
        quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch == '\n' ? ' ' : ch);
    }
    return quoted + "\"";
}

int
RunSweep(const Common& c, const SimFlags& s, const SweepFlags& f)
{
    ParamsPtr params = BuildParams(c);
    const std::string key = AxisKey(f.axis);
    double probe = 0.0;
    Check(uavnet_params_get(params.get(), key.c_str(), &probe), "--axis");

    const bool analytic = f.modes == "analytic" || f.modes == "both";
    const bool simulate = f.modes == "simulate" || f.modes == "both";
    std::vector<int> metrics;
    for (const auto& m : Split(f.metrics, ','))
    {
        metrics.push_back(MetricIndex(m));
    }

    std::vector<SweepPoint> points;
    for (double x : AxisValues(f))
    {
        points.push_back({x, {}, {}, {}});
    }

    // Points are spread over workers; each simulation then runs single-threaded.
    unsigned workers = s.jobs > 0 ? static_cast<unsigned>(s.jobs) : std::thread::hardware_concurrency();
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(points.size())));
    uavnet_sim_options opts = ToOptions(s);
    if (workers > 1)
    {
        opts.jobs = 1;
    }
    auto work = [&](unsigned w) {
        for (size_t i = w; i < points.size(); i += workers)
        {
            EvaluatePoint(params.get(), key, analytic, simulate, opts, points[i]);
        }
    };
    if (workers <= 1)
    {
        work(0);
    }
    else
    {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
        {
            pool.emplace_back(work, w);
        }
        for (auto& t : pool)
        {
            t.join();
        }
    }

    if (c.format == "json")
    {
        Json rows = Json::array();
        for (const auto& p : points)
        {
            Json row = {{key, p.x}};
            for (int m : metrics)
            {
                const std::string name = uavnet_metric_name(static_cast<uavnet_metric>(m));
                if (analytic)
                {
                    row[name + "_analytic"] = JsonNum(ReportValue(p.analytic, m));
                }
                if (simulate)
                {
                    const auto& e = p.sim.metrics[m];
                    row[name + "_sim"] = e.present ? Json(e.value) : Json(nullptr);
                    row[name + "_sim_half_width"] = e.present ? Json(e.half_width) : Json(nullptr);
                }
            }
            row["error"] = p.error;
            rows.push_back(row);
        }
        Emit(c, Json{{"axis", key}, {"rows", rows}}.dump(2) + "\n");
        return kExitOk;
    }

    std::string text = key;
    for (int m : metrics)
    {
        const std::string name = uavnet_metric_name(static_cast<uavnet_metric>(m));
        if (analytic)
        {
            text += "," + name + "_analytic";
        }
        if (simulate)
        {
            text += "," + name + "_sim," + name + "_sim_half_width";
        }
    }
    text += ",error\n";
    for (const auto& p : points)
    {
        text += Num(p.x);
        for (int m : metrics)
        {
            if (analytic)
            {
                text += "," + Num(ReportValue(p.analytic, m));
            }
            if (simulate)
            {
                const auto& e = p.sim.metrics[m];
                text += "," + (e.present ? Num(e.value) : "") + "," + (e.present ? Num(e.half_width) : "");
            }
        }
        text += "," + CsvField(p.error) + "\n";
    }
    Emit(c, text);
    return kExitOk;
}

} // namespace

int
main(int argc, char** argv)
{
    CLI::App app{"Coverage analysis and simulation of UAV-assisted cellular networks with mmWave backhaul"};
    app.require_subcommand(1);
    app.set_version_flag("--version", uavnet_version());

    Common common;
    SimFlags sim;
    SweepFlags sweep;
    bool noWindowCheck = false;
    bool listKeys = false;

    auto* analyze = app.add_subcommand("analyze", "Evaluate the analytic model at one parameter point");
    AddCommon(analyze, common);

    auto* simulate = app.add_subcommand("simulate", "Estimate every metric by Monte Carlo");
    AddCommon(simulate, common);
    AddSim(simulate, sim, true);

    auto* sweepCmd = app.add_subcommand("sweep", "Evaluate metrics along one parameter axis");
    AddCommon(sweepCmd, common);
    AddSim(sweepCmd, sim, true);
    sweepCmd->add_option("--axis", sweep.axis, "Config key or alias (h_a, lambda_g, beta, tau_b, n_uav)")
        ->required();
    sweepCmd->add_option("--values", sweep.values, "Comma-separated axis values");
    sweepCmd->add_option("--range", sweep.range, "START:STOP:STEP, appended after --values");
    sweepCmd->add_option("--metrics", sweep.metrics, "Comma-separated metric names");
    sweepCmd->add_option("--modes", sweep.modes, "Which estimates to report")
        ->check(CLI::IsMember({"analytic", "simulate", "both"}));

    auto* validate = app.add_subcommand("validate", "Compare analysis against simulation");
    AddCommon(validate, common);
    AddSim(validate, sim, false);
    validate->add_flag("--no-window-check", noWindowCheck, "Skip the window-doubling rows");

    auto* keys = app.add_subcommand("keys", "List accepted config keys");
    keys->callback([&listKeys] { listKeys = true; });

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try
    {
        if (listKeys)
        {
            for (size_t i = 0; i < uavnet_config_key_count(); ++i)
            {
                std::cout << uavnet_config_key(i) << "\n";
            }
            return kExitOk;
        }
        if (analyze->parsed())
        {
            return RunAnalyze(common);
        }
        if (simulate->parsed())
        {
            return RunSimulate(common, sim);
        }
        if (sweepCmd->parsed())
        {
            return RunSweep(common, sim, sweep);
        }
        return RunValidate(common, sim, noWindowCheck);
    }
    catch (const CliError& e)
    {
        std::cerr << "uavnet: " << e.what() << "\n";
        return e.Code();
    }
}
