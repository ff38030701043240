// SPDX-License-Identifier: Apache-2.0
//
// fdrelay - link-level simulator for wirelessly powered full-duplex MIMO relays
// Copyright (C) 2026 The fdrelay authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------


#include "fdrelay/expcli/config.hpp"

#include "fdrelay/error.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace fdrelay::expcli
{

using nlohmann::json;

namespace
{

[[noreturn]] void fail(const std::string &what) { throw ConfigError("config: " + what); }

void reject_unknown(const json &obj, const std::set<std::string> &known, const std::string &where)
{
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!known.count(it.key()))
            fail("unknown key '" + where + it.key() + "'");
}

template <typename T> T get(const json &obj, const std::string &key, const std::string &where)
{
    try
    {
        return obj.at(key).get<T>();
    }
    catch (const json::exception &)
    {
        fail("key '" + where + key + "' has the wrong type");
    }
}

template <typename T> void read_opt(const json &obj, const std::string &key, T &out, const std::string &where)
{
    if (obj.contains(key))
        out = get<T>(obj, key, where);
}

// Linear `key` or dB `key_db`, never both.
void read_level(const json &obj, const std::string &key, double &out, const std::string &where)
{
    const bool lin = obj.contains(key), db = obj.contains(key + "_db");
    if (lin && db)
        fail("give either '" + where + key + "' or '" + where + key + "_db', not both");
    if (lin)
        out = get<double>(obj, key, where);
    else if (db)
        out = db_to_linear(get<double>(obj, key + "_db", where));
}

std::uint64_t get_count(const json &obj, const std::string &key, const std::string &where)
{
    const json &v = obj.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        fail("key '" + where + key + "' must be a non-negative integer");
    return v.get<std::uint64_t>();
}

SystemParams parse_params(const json &j)
{
    const std::string w = "params.";
    if (!j.is_object())
        fail("'params' must be an object");
    reject_unknown(j,
                   {"m_r", "m_t", "p_s", "p_s_db", "d1", "d2", "tau", "eta", "alpha", "sigma2_li", "gamma_th",
                    "gamma_th_db", "r_c"},
                   w);
    SystemParams p;
    read_opt(j, "m_r", p.m_r, w);
    read_opt(j, "m_t", p.m_t, w);
    read_level(j, "p_s", p.p_s, w);
    read_opt(j, "d1", p.d1, w);
    read_opt(j, "d2", p.d2, w);
    read_opt(j, "tau", p.tau, w);
    read_opt(j, "eta", p.eta, w);
    read_opt(j, "alpha", p.alpha, w);
    read_opt(j, "sigma2_li", p.sigma2_li, w);
    read_level(j, "gamma_th", p.gamma_th, w);
    read_opt(j, "r_c", p.r_c, w);
    return p;
}

Sweep parse_sweep(const json &j)
{
    if (!j.is_object() || j.size() != 1)
        fail("'sweep' must hold exactly one of snr_db, alpha, threshold_db");
    Sweep s;
    if (j.contains("snr_db"))
    {
        s.kind = SweepKind::SnrDb;
        s.values = get<std::vector<double>>(j, "snr_db", "sweep.");
    }
    else if (j.contains("threshold_db"))
    {
        s.kind = SweepKind::ThresholdDb;
        s.values = get<std::vector<double>>(j, "threshold_db", "sweep.");
    }
    else if (j.contains("alpha"))
    {
        s.kind = SweepKind::Alpha;
        const json &a = j.at("alpha");
        if (!a.is_object())
            fail("'sweep.alpha' must be an object");
        reject_unknown(a, {"grid", "refine_iters"}, "sweep.alpha.");
        read_opt(a, "grid", s.alpha_grid, "sweep.alpha.");
        read_opt(a, "refine_iters", s.alpha_refine, "sweep.alpha.");
    }
    else
    {
        fail("'sweep' must hold exactly one of snr_db, alpha, threshold_db");
    }
    return s;
}

json params_json(const SystemParams &p)
{
    return json{{"m_r", p.m_r},           {"m_t", p.m_t},         {"p_s", p.p_s},           {"d1", p.d1},
                {"d2", p.d2},             {"tau", p.tau},         {"eta", p.eta},           {"alpha", p.alpha},
                {"sigma2_li", p.sigma2_li}, {"gamma_th", p.gamma_th}, {"r_c", p.r_c}};
}

} // namespace

std::string_view to_string(OutputKind kind)
{
    switch (kind)
    {
    case OutputKind::MonteCarlo:
        return "monte_carlo";
    case OutputKind::Analytic:
        return "analytic";
    case OutputKind::Asymptotic:
        return "asymptotic";
    }
    return "unknown";
}

std::string_view to_string(SweepKind kind)
{
    switch (kind)
    {
    case SweepKind::SnrDb:
        return "snr_db";
    case SweepKind::Alpha:
        return "alpha";
    case SweepKind::ThresholdDb:
        return "threshold_db";
    }
    return "unknown";
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

std::vector<double> Sweep::points() const
{
    if (kind != SweepKind::Alpha)
        return values;
    std::vector<double> out;
    for (int i = 1; i <= alpha_grid; ++i)
        out.push_back(static_cast<double>(i) / (alpha_grid + 1));
    return out;
}

bool ExperimentConfig::operator==(const ExperimentConfig &o) const
{
    return params == o.params && schemes == o.schemes && sweep == o.sweep && n_trials == o.n_trials &&
           n_trials_optimal == o.n_trials_optimal && seed == o.seed && threads == o.threads && outputs == o.outputs &&
           output_path == o.output_path && json_mirror == o.json_mirror && threshold_mode == o.threshold_mode &&
           search.t_grid_points == o.search.t_grid_points && search.refine_iters == o.search.refine_iters &&
           search.restarts == o.search.restarts && search.tol == o.search.tol;
}

void ExperimentConfig::validate() const
{
    try
    {
        params.validate();
        search.validate();
    }
    catch (const DomainError &e)
    {
        fail(e.what());
    }
    if (schemes.empty())
        fail("'schemes' must list at least one scheme");
    if (outputs.empty())
        fail("'outputs' must list at least one output kind");
    if (sweep.kind == SweepKind::Alpha)
    {
        if (sweep.alpha_grid < 8 || sweep.alpha_refine < 0)
            fail("'sweep.alpha' needs grid >= 8 and refine_iters >= 0");
    }
    else if (sweep.values.empty())
    {
        fail("'sweep' must not be empty");
    }
    for (double v : sweep.values)
        if (!std::isfinite(v))
            fail("sweep values must be finite");
    if (sweep.kind == SweepKind::ThresholdDb && threshold_mode == simkit::ThresholdMode::RateCoupled)
        fail("a threshold_db sweep needs threshold_mode 'fixed'");
    if (n_trials < 1 || n_trials_optimal < 1)
        fail("'n_trials' and 'n_trials_optimal' must be >= 1");
    if (threads < 0)
        fail("'threads' must be >= 0");
    if (output_path.empty())
        fail("'output_path' must not be empty");
}

ExperimentConfig parse_config(std::string_view text)
{
    json j;
    try
    {
        j = json::parse(text);
    }
    catch (const json::parse_error &e)
    {
        fail(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object())
        fail("top level must be an object");
    reject_unknown(j,
                   {"params", "schemes", "sweep", "n_trials", "n_trials_optimal", "seed", "threads", "outputs",
                    "output_path", "json_mirror", "threshold_mode", "search"},
                   "");

    ExperimentConfig cfg;
    if (j.contains("params"))
        cfg.params = parse_params(j.at("params"));
    if (!j.contains("schemes"))
        fail("missing key 'schemes'");
    for (const auto &name : get<std::vector<std::string>>(j, "schemes", ""))
    {
        const auto s = scheme_from_string(name);
        if (!s)
            fail("unknown scheme '" + name + "'");
        cfg.schemes.push_back(*s);
    }
    if (!j.contains("sweep"))
        fail("missing key 'sweep'");
    cfg.sweep = parse_sweep(j.at("sweep"));
    if (j.contains("n_trials"))
        cfg.n_trials = get_count(j, "n_trials", "");
    if (j.contains("n_trials_optimal"))
        cfg.n_trials_optimal = get_count(j, "n_trials_optimal", "");
    if (j.contains("seed"))
        cfg.seed = get_count(j, "seed", "");
    read_opt(j, "threads", cfg.threads, "");
    if (j.contains("outputs"))
    {
        cfg.outputs.clear();
        for (const auto &name : get<std::vector<std::string>>(j, "outputs", ""))
        {
            if (name == "monte_carlo")
                cfg.outputs.push_back(OutputKind::MonteCarlo);
            else if (name == "analytic")
                cfg.outputs.push_back(OutputKind::Analytic);
            else if (name == "asymptotic")
                cfg.outputs.push_back(OutputKind::Asymptotic);
            else
                fail("unknown output kind '" + name + "'");
        }
    }
    read_opt(j, "output_path", cfg.output_path, "");
    read_opt(j, "json_mirror", cfg.json_mirror, "");
    if (j.contains("threshold_mode"))
    {
        const auto mode = get<std::string>(j, "threshold_mode", "");
        if (mode == "fixed")
            cfg.threshold_mode = simkit::ThresholdMode::Fixed;
        else if (mode == "rate_coupled")
            cfg.threshold_mode = simkit::ThresholdMode::RateCoupled;
        else
            fail("unknown threshold_mode '" + mode + "'");
    }
    if (j.contains("search"))
    {
        const json &s = j.at("search");
        if (!s.is_object())
            fail("'search' must be an object");
        reject_unknown(s, {"t_grid_points", "refine_iters", "restarts", "tol"}, "search.");
        read_opt(s, "t_grid_points", cfg.search.t_grid_points, "search.");
        read_opt(s, "refine_iters", cfg.search.refine_iters, "search.");
        read_opt(s, "restarts", cfg.search.restarts, "search.");
        read_opt(s, "tol", cfg.search.tol, "search.");
    }
    cfg.validate();
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string serialize_config(const ExperimentConfig &cfg)
{
    json j;
    j["params"] = params_json(cfg.params);
    json schemes = json::array();
    for (Scheme s : cfg.schemes)
        schemes.push_back(std::string(to_string(s)));
    j["schemes"] = schemes;
    if (cfg.sweep.kind == SweepKind::Alpha)
        j["sweep"] = json{{"alpha", {{"grid", cfg.sweep.alpha_grid}, {"refine_iters", cfg.sweep.alpha_refine}}}};
    else
        j["sweep"] = json{{std::string(to_string(cfg.sweep.kind)), cfg.sweep.values}};
    j["n_trials"] = cfg.n_trials;
    j["n_trials_optimal"] = cfg.n_trials_optimal;
    j["seed"] = cfg.seed;
    j["threads"] = cfg.threads;
    json outputs = json::array();
    for (OutputKind k : cfg.outputs)
        outputs.push_back(std::string(to_string(k)));
    j["outputs"] = outputs;
    j["output_path"] = cfg.output_path;
    j["json_mirror"] = cfg.json_mirror;
    j["threshold_mode"] = cfg.threshold_mode == simkit::ThresholdMode::Fixed ? "fixed" : "rate_coupled";
    j["search"] = json{{"t_grid_points", cfg.search.t_grid_points},
                       {"refine_iters", cfg.search.refine_iters},
                       {"restarts", cfg.search.restarts},
                       {"tol", cfg.search.tol}};
    return j.dump(2) + "\n";
}

std::string config_hash(const ExperimentConfig &cfg)
{
    // Only fields that change results enter the hash.
    ExperimentConfig key = cfg;
    key.output_path.clear();
    key.json_mirror = false;
    key.threads = 1;
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : serialize_config(key))
    {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace fdrelay::expcli
