// vlcsec - secrecy beamforming and outage analysis for indoor VLC downlinks
// Copyright (C) 2026 The vlcsec authors
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

#include <vlcsec/app/cli.hpp>
#include <vlcsec/app/config.hpp>
#include <vlcsec/app/experiment.hpp>
#include <vlcsec/app/presets.hpp>

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace vlcsec::app;

namespace
{
    struct Outcome
    {
        int code = -1;
        std::string out;
        std::string err;
    };

    Outcome cli(std::vector<std::string> args)
    {
        args.insert(args.begin(), "vlc-secrecy");
        std::ostringstream out, err;
        Outcome o;
        o.code = run_cli(args, out, err);
        o.out = out.str();
        o.err = err.str();
        return o;
    }

    std::filesystem::path temp_file(const std::string &name)
    {
        return std::filesystem::temp_directory_path() / ("vlcsec_test_cli_" + name);
    }

    std::string write_temp(const std::string &name, const std::string &text)
    {
        const auto path = temp_file(name);
        std::ofstream(path) << text;
        return path.string();
    }

    std::string slurp(const std::filesystem::path &path)
    {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    // Minimal RFC 4180 reader used to check the writer.
    std::vector<std::vector<std::string>> parse_csv(const std::string &text)
    {
        std::vector<std::vector<std::string>> rows(1);
        std::string field;
        bool quoted = false;
        for (std::size_t i = 0; i < text.size(); ++i)
        {
            const char c = text[i];
            if (quoted)
            {
                if (c == '"' && i + 1 < text.size() && text[i + 1] == '"')
                    field += '"', ++i;
                else if (c == '"')
                    quoted = false;
                else
                    field += c;
            }
            else if (c == '"')
                quoted = true;
            else if (c == ',')
                rows.back().push_back(field), field.clear();
            else if (c == '\n')
            {
                rows.back().push_back(field), field.clear();
                rows.emplace_back();
            }
            else
                field += c;
        }
        if (rows.back().empty())
            rows.pop_back();
        return rows;
    }
}

TEST(Cli, ListShowsEveryPreset)
{
    const Outcome o = cli({"list"});
    ASSERT_EQ(o.code, exit_ok);
    EXPECT_NE(o.out.find("fig7"), std::string::npos);
    EXPECT_NE(o.out.find("presets (7)"), std::string::npos);
    for (const char *name : {"fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8"})
        EXPECT_NE(find_preset(name), nullptr) << name;
    EXPECT_EQ(presets().size(), 7u);
}

TEST(Cli, EmbeddedPresetsMatchSourceFiles)
{
    std::size_t files = 0;
    for (const auto &entry : std::filesystem::directory_iterator(VLCSEC_PRESET_DIR))
    {
        if (entry.path().extension() != ".ini")
            continue;
        ++files;
        const Preset *p = find_preset(entry.path().stem().string());
        ASSERT_NE(p, nullptr) << entry.path();
        EXPECT_EQ(p->text, slurp(entry.path()));
        EXPECT_FALSE(p->description.empty());
    }
    EXPECT_EQ(files, presets().size());
}

TEST(Cli, EveryPresetRunsOnDefaults)
{
    for (const Preset &p : presets())
    {
        const auto path = temp_file(p.name + ".csv");
        const Outcome o = cli({"run", p.name, "--out", path.string()});
        EXPECT_EQ(o.code, exit_ok) << p.name << ": " << o.err;
        const auto rows = parse_csv(slurp(path));
        ASSERT_GE(rows.size(), 2u) << p.name;
        const auto &header = rows.front();
        const auto status = std::find(header.begin(), header.end(), "status") - header.begin();
        ASSERT_LT(std::size_t(status), header.size());
        for (std::size_t r = 1; r < rows.size(); ++r)
        {
            ASSERT_EQ(rows[r].size(), header.size()) << p.name << " row " << r;
            EXPECT_EQ(rows[r][std::size_t(status)], "ok") << p.name << " row " << r;
        }
        // one summary line per point
        EXPECT_EQ(std::count(o.out.begin(), o.out.end(), '\n'), std::ptrdiff_t(rows.size() - 1)) << p.name;
    }
}

TEST(Cli, Fig7ColumnsAndShape)
{
    const auto path = temp_file("fig7_small.csv");
    const Outcome o = cli({"run", "fig7", "--set", "montecarlo.trials=2000", "--out", path.string()});
    ASSERT_EQ(o.code, exit_ok) << o.err;
    const auto rows = parse_csv(slurp(path));
    ASSERT_EQ(rows.size(), 1u + 2u * 10u);
    const auto &h = rows.front();
    for (const char *col : {"secrecy.threshold_bits", "eavesdroppers.intensity_per_m2", "lambda_E", "C_th",
                            "sop_upper_cf", "sop_lower_cf", "sop_upper_mc", "sop_upper_mc_se", "sop_lower_mc",
                            "sop_lower_mc_se", "trials", "workers", "seed"})
        EXPECT_NE(std::find(h.begin(), h.end(), col), h.end()) << col;
    EXPECT_EQ(rows[1][2], "0.01");
    EXPECT_EQ(rows[10][2], "0.1");
}

TEST(Cli, SameSeedGivesIdenticalBytes)
{
    for (const char *workers : {"1", "3"})
    {
        const auto a = temp_file(std::string("det_a_") + workers + ".csv");
        const auto b = temp_file(std::string("det_b_") + workers + ".csv");
        const std::vector<std::string> common = {"run", "fig8", "--seed", "42", "--workers", workers,
                                                 "--set", "montecarlo.trials=3000"};
        auto args_a = common, args_b = common;
        args_a.insert(args_a.end(), {"--out", a.string()});
        args_b.insert(args_b.end(), {"--out", b.string()});
        ASSERT_EQ(cli(args_a).code, exit_ok);
        ASSERT_EQ(cli(args_b).code, exit_ok);
        EXPECT_EQ(slurp(a), slurp(b));
    }
}

TEST(Cli, DifferentSeedsDiffer)
{
    const Outcome a = cli({"run", "fig7", "--seed", "1", "--set", "montecarlo.trials=2000", "--out", "-"});
    const Outcome b = cli({"run", "fig7", "--seed", "2", "--set", "montecarlo.trials=2000", "--out", "-"});
    ASSERT_EQ(a.code, exit_ok);
    ASSERT_EQ(b.code, exit_ok);
    EXPECT_NE(a.out, b.out);
}

TEST(Cli, ExecutableMatchesInProcessRun)
{
    const auto path = temp_file("exe.csv");
    const std::string cmd = std::string("\"") + VLCSEC_CLI_PATH + "\" run fig2 --out \"" + path.string() +
                            "\" > /dev/null 2>&1";
    ASSERT_EQ(std::system(cmd.c_str()), 0);
    const Outcome o = cli({"run", "fig2"});
    ASSERT_EQ(o.code, exit_ok);
    EXPECT_EQ(slurp(path), o.out);
}

TEST(Cli, UnknownKeyIsConfigErrorNamingKey)
{
    const std::string path = write_temp("bad_key.ini", "[room]\nlength_m = 10\nbreadth_m = 4\n");
    const Outcome o = cli({"run", path});
    EXPECT_EQ(o.code, exit_config_error);
    EXPECT_NE(o.err.find("room.breadth_m"), std::string::npos) << o.err;
}

TEST(Cli, MalformedValueIsConfigErrorNamingKey)
{
    const std::string path = write_temp("bad_value.ini", "[montecarlo]\ntrials = many\n");
    const Outcome o = cli({"run", path});
    EXPECT_EQ(o.code, exit_config_error);
    EXPECT_NE(o.err.find("montecarlo.trials"), std::string::npos) << o.err;

    const Outcome neg = cli({"run", "fig7", "--set", "montecarlo.workers=0"});
    EXPECT_EQ(neg.code, exit_config_error);
    EXPECT_NE(neg.err.find("montecarlo.workers"), std::string::npos) << neg.err;
}

TEST(Cli, ConfigErrorCases)
{
    EXPECT_EQ(cli({"run", "no-such-preset"}).code, exit_config_error);
    EXPECT_EQ(cli({"run", "fig2", "--set", "room.length_m"}).code, exit_config_error);
    EXPECT_EQ(cli({"run", "fig2", "--set", "sweep.room.colour=1,2"}).code, exit_config_error);
    EXPECT_EQ(cli({"run", "fig2", "--set", "experiment.mode=optimize"}).code, exit_config_error);
    EXPECT_EQ(cli({"frobnicate"}).code, exit_config_error);
    EXPECT_EQ(cli({}).code, exit_config_error);

    const Outcome two = cli({"run", "fig2", "--set", "target.ed_snr_cap_db=20"});
    EXPECT_EQ(two.code, exit_config_error);
    EXPECT_NE(two.err.find("target.ed_snr_cap_db"), std::string::npos) << two.err;

    const Outcome no_target =
        cli({"run", "fig2", "--set", "target.ue_snr_db=", "--set", "experiment.mode=beamform"});
    EXPECT_EQ(no_target.code, exit_config_error);

    const Outcome axes_without_sweep = cli({"run", "fig7", "--set", "experiment.mode=sop-closed"});
    EXPECT_EQ(axes_without_sweep.code, exit_config_error);

    const Outcome outside = cli({"run", "fig2", "--set", "sweep.user.x_m,user.y_m=9 9"});
    EXPECT_EQ(outside.code, exit_config_error);
    EXPECT_NE(outside.err.find("user.x_m"), std::string::npos) << outside.err;

    const Outcome square = cli({"run", "fig7", "--set", "room.width_m=10", "--set", "montecarlo.trials=10"});
    EXPECT_EQ(square.code, exit_config_error) << "aspect 1 has no closed form";
}

TEST(Cli, InfeasibleTargetIsNumericalError)
{
    const std::string path = write_temp("single.ini", "[room]\nlength_m = 8\nwidth_m = 8\n"
                                                      "[layout]\nkind = custom\npositions_m = 2.5 0; -2.5 0\n"
                                                      "[experiment]\nmode = beamform\n");
    ASSERT_EQ(cli({"run", path, "--set", "target.ue_snr_db=40"}).code, exit_ok);
    const Outcome o = cli({"run", path, "--set", "target.ue_snr_db=120"});
    EXPECT_EQ(o.code, exit_numerical_error);
    EXPECT_NE(o.err.find("numerical error"), std::string::npos);
}

TEST(Cli, SweepRecordsInfeasiblePointsAndContinues)
{
    const Outcome o = cli({"run", "fig2", "--set", "sweep.target.ue_snr_db=40, 120"});
    ASSERT_EQ(o.code, exit_ok) << o.err;
    const auto rows = parse_csv(o.out);
    ASSERT_EQ(rows.size(), 5u);
    const auto &h = rows.front();
    const auto status = std::size_t(std::find(h.begin(), h.end(), "status") - h.begin());
    EXPECT_EQ(rows[1][status], "ok");
    EXPECT_EQ(rows[2][status], "infeasible");
    EXPECT_EQ(rows[3][status], "ok");
    EXPECT_EQ(rows[4][status], "infeasible");
    for (const auto &r : rows)
        EXPECT_EQ(r.size(), h.size());
}

TEST(Cli, DumpConfigRoundTrips)
{
    std::vector<std::vector<std::string>> sources = {{}};
    for (const Preset &p : presets())
        sources.push_back({p.name});
    sources.push_back({"fig7", "--set", "drive.dc_bias_a=0.1", "--set", "room.height_m=2.7",
                       "--set", "layout.positions_m=1 2;3   4", "--set", "sweep.quadrature.nodes=16:16:64"});

    for (const auto &src : sources)
    {
        std::vector<std::string> args = {"dump-config"};
        args.insert(args.end(), src.begin(), src.end());
        const Outcome first = cli(args);
        ASSERT_EQ(first.code, exit_ok) << first.err;

        const Config parsed = Config::from_ini_text(first.out, "dump");
        EXPECT_EQ(parsed.to_ini(), first.out);

        const std::string path = write_temp("dump.ini", first.out);
        const Outcome second = cli({"dump-config", path});
        ASSERT_EQ(second.code, exit_ok);
        EXPECT_EQ(second.out, first.out);

        if (!src.empty() && src.size() == 1)
        {
            const Preset *p = find_preset(src.front());
            EXPECT_TRUE(parsed == Config::from_ini_text(p->text, p->name)) << p->name;
        }
    }
}

TEST(Config, DefaultsCoverTheRegistry)
{
    const Config cfg;
    for (const ParameterSpec &p : parameter_registry())
        EXPECT_NO_THROW(cfg.text(p.key)) << p.key;
    EXPECT_EQ(cfg.text("experiment.mode"), "select");
    EXPECT_DOUBLE_EQ(cfg.real("drive.noise_power_dbm"), -98.35);
    EXPECT_FALSE(cfg.optional_real("target.ue_snr_db"));
}

TEST(Config, DefaultInputsMatchReferenceConstants)
{
    const Inputs in = build_inputs(Config{});
    EXPECT_DOUBLE_EQ(in.drive.dc_bias, 14.4);
    EXPECT_NEAR(in.drive.snr_coefficient(), 3.545e14, 0.001e14);
    EXPECT_DOUBLE_EQ(in.channel.lambertian_m, 1.0);
    EXPECT_EQ(in.layout.size(), 4u);
    EXPECT_TRUE(in.eavesdroppers.is_homogeneous());
}

TEST(Config, DoublesRoundTripThroughText)
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> mantissa(-1.0, 1.0);
    std::uniform_int_distribution<int> exponent(-300, 300);
    Config cfg;
    for (int i = 0; i < 10000; ++i)
    {
        const double x = std::ldexp(mantissa(rng), exponent(rng) / 4);
        cfg.set("room.length_m", format_double(x));
        EXPECT_EQ(cfg.real("room.length_m"), x);
    }
}

TEST(Config, RangeAxesAreTidy)
{
    const SweepAxis axis = parse_sweep_axis("eavesdroppers.intensity_per_m2", "0.01:0.01:0.1");
    ASSERT_EQ(axis.points.size(), 10u);
    EXPECT_EQ(axis.points[2][0], "0.03");
    EXPECT_EQ(axis.points[9][0], "0.1");

    const SweepAxis ints = parse_sweep_axis("layout.rows", "2:1:4");
    ASSERT_EQ(ints.points.size(), 3u);
    EXPECT_EQ(ints.points[2][0], "4");

    EXPECT_THROW(parse_sweep_axis("layout.rows,layout.cols", "1:1:3"), ConfigError);
    EXPECT_THROW(parse_sweep_axis("layout.rows,layout.cols", "2 2, 3"), ConfigError);
    EXPECT_THROW(parse_sweep_axis("output.path", "a, b"), ConfigError);
    EXPECT_THROW(parse_sweep_axis("room.length_m", "1:-1:3"), ConfigError);
}

TEST(Config, UnknownSectionRejected)
{
    EXPECT_THROW(Config::from_ini_text("[rooom]\nlength_m = 3\n", "x"), ConfigError);
    EXPECT_THROW(Config::from_ini_text("[room]\nlength_m = 3\nlength_m = 4\n", "x"), ConfigError);
}

TEST(Csv, QuotesPerRfc4180)
{
    Table t;
    t.header = {"a", "b,c", "d"};
    t.rows = {{"plain", "with \"quote\"", "two\nlines"}, {"", "1.5", "x"}};
    std::ostringstream out;
    write_csv(out, t);
    EXPECT_EQ(out.str(), "a,\"b,c\",d\nplain,\"with \"\"quote\"\"\",\"two\nlines\"\n,1.5,x\n");
    const auto rows = parse_csv(out.str());
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0], t.header);
    EXPECT_EQ(rows[1], t.rows[0]);
    EXPECT_EQ(rows[2], t.rows[1]);
}
