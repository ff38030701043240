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


#include "catch_amalgamated.hpp"

#include "fdrelay/error.hpp"
#include "fdrelay/expcli/config.hpp"
#include "fdrelay/expcli/runner.hpp"
#include "fdrelay/expcli/table.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace fdrelay;
using namespace fdrelay::expcli;
namespace fs = std::filesystem;

namespace
{

ExperimentConfig outage_config()
{
    ExperimentConfig c;
    c.params.m_r = 2;
    c.params.m_t = 2;
    c.params.alpha = 0.5;
    c.params.sigma2_li = 0.1;
    c.schemes = {Scheme::TZF, Scheme::RZF, Scheme::MrcMrt};
    c.sweep.kind = SweepKind::SnrDb;
    c.sweep.values = {0, 5, 10, 15, 20, 25, 30};
    c.outputs = {OutputKind::MonteCarlo, OutputKind::Analytic, OutputKind::Asymptotic};
    c.n_trials = 20'000;
    return c;
}

std::string slurp(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string &args)
{
    const std::string cmd = std::string(FDRELAY_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path scratch(const std::string &name)
{
    const fs::path dir = fs::temp_directory_path() / "fdrelay_test_expcli";
    fs::create_directories(dir);
    return dir / name;
}

double num(const Cell &c) { return std::get<double>(c); }
const std::string &str(const Cell &c) { return std::get<std::string>(c); }

} // namespace

TEST_CASE("config round trip", "[expcli]")
{
    ExperimentConfig c = outage_config();
    c.params.p_s = 12.5;
    c.params.d1 = 2.0;
    c.params.d2 = 1.5;
    c.params.tau = 3.1;
    c.params.eta = 0.8;
    c.params.gamma_th = 1.7;
    c.params.r_c = 1.25;
    c.n_trials_optimal = 777;
    c.seed = 123456789012345ULL;
    c.threads = 3;
    c.output_path = "out/run.csv";
    c.json_mirror = true;
    c.threshold_mode = simkit::ThresholdMode::RateCoupled;
    c.search.t_grid_points = 12;
    c.search.refine_iters = 7;
    c.search.restarts = 5;
    c.search.tol = 1e-7;
    const std::string text = serialize_config(c);
    const ExperimentConfig back = parse_config(text);
    CHECK(back == c);
    CHECK(serialize_config(back) == text);
    CHECK(config_hash(back) == config_hash(c));
    CHECK(config_hash(c).size() == 16);

    ExperimentConfig a = c;
    a.sweep.kind = SweepKind::Alpha;
    a.sweep.values.clear();
    a.sweep.alpha_grid = 17;
    a.sweep.alpha_refine = 4;
    CHECK(parse_config(serialize_config(a)) == a);
    CHECK(config_hash(a) != config_hash(c));
    ExperimentConfig moved = c;
    moved.output_path = "elsewhere.csv";
    moved.threads = 8;
    moved.json_mirror = false;
    CHECK(config_hash(moved) == config_hash(c));
}

TEST_CASE("dB keys and defaults", "[expcli]")
{
    const auto c = parse_config(R"({"params": {"p_s_db": 10, "gamma_th_db": 3, "m_r": 4},
                                    "schemes": ["tzf", "hd"], "sweep": {"snr_db": [0, 10]}})");
    CHECK(std::abs(c.params.p_s - 10.0) < 1e-12);
    CHECK(std::abs(c.params.gamma_th - std::pow(10.0, 0.3)) < 1e-12);
    CHECK(c.params.eta == 1.0);
    CHECK(c.schemes == std::vector<Scheme>{Scheme::TZF, Scheme::HalfDuplex});
    CHECK(c.n_trials == 100000);
    CHECK(c.n_trials_optimal == 10000);
    CHECK(c.outputs == std::vector<OutputKind>{OutputKind::MonteCarlo});
    CHECK(c.threshold_mode == simkit::ThresholdMode::Fixed);
    CHECK(std::abs(linear_to_db(db_to_linear(7.5)) - 7.5) < 1e-12);
}

TEST_CASE("config errors", "[expcli]")
{
    const char *bad[] = {
        "{not json",
        R"({"schemes": ["tzf"], "sweep": {"snr_db": [0]}, "bogus": 1})",
        R"({"schemes": ["tzf"], "sweep": {"snr_db": [0]}, "params": {"p_s": 1, "p_s_db": 0}})",
        R"({"schemes": ["zf"], "sweep": {"snr_db": [0]}})",
        R"({"schemes": [], "sweep": {"snr_db": [0]}})",
        R"({"schemes": ["tzf"], "sweep": {"snr_db": []}})",
        R"({"schemes": ["tzf"], "sweep": {"snr_db": [0], "threshold_db": [1]}})",
        R"({"schemes": ["tzf"], "sweep": {"snr_db": [0]}, "outputs": []})",
        R"({"schemes": ["tzf"], "sweep": {"snr_db": [0]}, "outputs": ["plot"]})",
        R"({"schemes": ["tzf"], "sweep": {"snr_db": [0]}, "params": {"alpha": 1.5}})",
        R"({"schemes": ["tzf"], "sweep": {"snr_db": [0]}, "params": {"m_r": "two"}})",
        R"({"schemes": ["tzf"], "sweep": {"snr_db": [0]}, "n_trials": -5})",
        R"({"schemes": ["tzf"], "sweep": {"alpha": {"grid": 4}}})",
        R"({"schemes": ["tzf"], "sweep": {"snr_db": [0]}, "threshold_mode": "adaptive"})",
        R"({"sweep": {"snr_db": [0]}})",
    };
    for (const char *text : bad)
    {
        INFO(text);
        CHECK_THROWS_AS(parse_config(text), ConfigError);
    }
    CHECK_THROWS_AS(load_config("/nonexistent/fdrelay.json"), ConfigError);
}

TEST_CASE("outage sweep shape", "[expcli]")
{
    ExperimentConfig one = outage_config();
    one.schemes = {Scheme::TZF};
    one.sweep.values = {20};
    one.outputs = {OutputKind::MonteCarlo};
    const Table t1 = run_outage_sweep(one);
    REQUIRE(t1.rows.size() == 1);
    CHECK(std::holds_alternative<double>(t1.rows[0][9]));

    const auto cfg = outage_config();
    const Table t = run_outage_sweep(cfg);
    REQUIRE(t.rows.size() == 63);
    const std::vector<std::string> kinds{"monte_carlo", "analytic", "asymptotic"};
    for (std::size_t s = 0; s < 3; ++s)
        for (std::size_t i = 0; i < 7; ++i)
            for (std::size_t k = 0; k < 3; ++k)
            {
                const auto &row = t.rows[s * 21 + i * 3 + k];
                CHECK(str(row[0]) == to_string(cfg.schemes[s]));
                CHECK(str(row[1]) == kinds[k]);
                CHECK(std::abs(num(row[2]) - cfg.sweep.values[i]) < 1e-9);
            }
    // MRC/MRT at 2x2 has no closed form.
    CHECK(str(t.rows[42 + 1][11]) == "not_applicable");
    CHECK(str(t.rows[42][11]) == "ok");

    // Monte Carlo rows carry their closed-form counterpart.
    for (const auto &row : t.rows)
        if (str(row[1]) == "monte_carlo" && std::holds_alternative<double>(row[9]))
            CHECK(std::abs(num(row[7]) - num(row[9])) <= 3.0 * num(row[8]) + 1e-3);

    ExperimentConfig inf = outage_config();
    inf.params.m_t = 1;
    inf.schemes = {Scheme::TZF};
    const Table ti = run_outage_sweep(inf);
    REQUIRE(ti.rows.size() == 21);
    for (const auto &row : ti.rows)
        CHECK(str(row[11]) == "infeasible");
}

TEST_CASE("throughput sweep shape", "[expcli]")
{
    ExperimentConfig c;
    c.params.m_r = 2;
    c.params.m_t = 2;
    c.params.p_s = 10.0;
    c.params.sigma2_li = 0.1;
    c.schemes = {Scheme::TZF};
    c.sweep.kind = SweepKind::Alpha;
    c.sweep.alpha_refine = 3;
    c.n_trials = 2000;
    const Table t = run_throughput_sweep(c);
    REQUIRE(t.rows.size() == 2 * 34); // HD appended
    for (std::size_t s = 0; s < 2; ++s)
    {
        for (std::size_t i = 0; i < 33; ++i)
            CHECK(str(t.rows[s * 34 + i][1]) == "grid");
        CHECK(str(t.rows[s * 34 + 33][1]) == "summary");
    }
    for (std::size_t i = 34; i < 68; ++i)
    {
        const auto &row = t.rows[i];
        CHECK(str(row[0]) == "hd");
        CHECK(num(row[6]) == 0.5 * (1.0 - num(row[4])) * c.params.r_c * (1.0 - num(row[2])));
    }

    ExperimentConfig snr = outage_config();
    CHECK_THROWS_AS(run_throughput_sweep(snr), ConfigError);
}

TEST_CASE("tables", "[expcli]")
{
    Table t;
    t.meta = {{"tool", "x"}};
    t.columns = {"a", "b", "c"};
    t.add_row({std::string("p,q"), 0.1, Cell()});
    t.add_row({std::string("say \"hi\""), 1e-20, 3.0});
    CHECK_THROWS_AS(t.add_row({1.0}), DimensionError);
    CHECK(to_csv(t) == "# tool: x\na,b,c\n\"p,q\",0.1,\n\"say \"\"hi\"\"\",1e-20,3\n");
    CHECK(format_cell(1.0 / 3.0) == "0.333333333333");
    const std::string j = to_json(t);
    CHECK(j.find("\"columns\"") != std::string::npos);
    CHECK(j.find("null") != std::string::npos);
}

TEST_CASE("reruns are byte-identical", "[expcli]")
{
    ExperimentConfig c = outage_config();
    c.n_trials = 5000;
    const std::string a = to_csv(run_outage_sweep(c));
    c.threads = 4;
    const std::string b = to_csv(run_outage_sweep(c));
    CHECK(a == b);
    c.threads = 1;
    CHECK(a == to_csv(run_outage_sweep(c)));
    CHECK(a.find("# config_hash: " + config_hash(c)) != std::string::npos);
}

TEST_CASE("command line", "[expcli][cli]")
{
    ExperimentConfig c = outage_config();
    c.n_trials = 2000;
    c.json_mirror = true;
    const fs::path cfg = scratch("outage.json");
    write_text(cfg, serialize_config(c));
    const fs::path out1 = scratch("o1.csv"), out2 = scratch("o2.csv");

    CHECK(run_cli("outage --config " + cfg.string() + " --out " + out1.string()) == 0);
    CHECK(run_cli("outage --config " + cfg.string() + " --out " + out2.string()) == 0);
    CHECK(slurp(out1) == slurp(out2));
    CHECK(fs::exists(scratch("o1.json")));
    CHECK(run_cli("outage --config " + cfg.string() + " --out " + out2.string() + " --seed 9 --trials 1000") == 0);
    CHECK(slurp(out1) != slurp(out2));
    CHECK(slurp(out2).find("# seed: 9") != std::string::npos);

    const fs::path bad = scratch("bad.json");
    write_text(bad, R"({"schemes": ["tzf"], "sweep": {"snr_db": [0]}, "bogus": 1})");
    CHECK(run_cli("outage --config " + bad.string()) == 2);
    CHECK(run_cli("outage --config /nonexistent/x.json") == 2);
    CHECK(run_cli("outage") == 2);
    CHECK(run_cli("frobnicate --config " + cfg.string()) == 2);
    CHECK(run_cli("outage --config " + cfg.string() + " --threads -1") == 2);
    CHECK(run_cli("throughput --config " + cfg.string() + " --out " + out2.string()) == 2);
}
