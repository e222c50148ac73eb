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

#include "vlcsec/app/cli.hpp"

#include "vlcsec/app/config.hpp"
#include "vlcsec/app/experiment.hpp"
#include "vlcsec/app/presets.hpp"

#include <vlcsec/error.hpp>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace vlcsec::app
{
    namespace
    {
        Config load_config(const std::string &source, const std::vector<std::string> &overrides)
        {
            Config cfg;
            if (!source.empty())
            {
                if (std::filesystem::is_regular_file(source))
                {
                    std::ifstream in(source);
                    if (!in)
                        throw ConfigError("Cannot read config file '" + source + "'.");
                    cfg = Config::from_ini(in, source);
                }
                else if (const Preset *p = find_preset(source))
                    cfg = Config::from_ini_text(p->text, p->name);
                else
                    throw ConfigError("'" + source + "' is neither a config file nor a preset (see 'list').");
            }
            for (const std::string &o : overrides)
                cfg.apply_override(o);
            return cfg;
        }
    }

    int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
    {
        CLI::App app{"Secrecy beamforming and outage simulator for indoor VLC downlinks", "vlc-secrecy"};
        app.require_subcommand(1);

        std::string source;
        std::vector<std::string> overrides;
        std::optional<long long> seed, workers;
        std::string out_path;

        CLI::App *run = app.add_subcommand("run", "Run a config file or preset and write CSV");
        run->add_option("config", source, "INI config file or preset name")->required();
        run->add_option("--set", overrides, "Override a parameter, section.key=value (repeatable)");
        run->add_option("--seed", seed, "Monte Carlo master seed");
        run->add_option("--out", out_path, "CSV destination; '-' writes to stdout");
        run->add_option("--workers", workers, "Monte Carlo worker threads");

        CLI::App *list = app.add_subcommand("list", "List presets and experiment modes");

        CLI::App *dump = app.add_subcommand("dump-config", "Print the fully resolved configuration");
        dump->add_option("config", source, "INI config file or preset name; defaults when omitted");
        dump->add_option("--set", overrides, "Override a parameter, section.key=value (repeatable)");

        std::ostringstream cli_out, cli_err;
        try
        {
            std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
            app.parse(reversed);
        }
        catch (const CLI::ParseError &e)
        {
            const int code = app.exit(e, cli_out, cli_err);
            out << cli_out.str();
            err << cli_err.str();
            return code == 0 ? exit_ok : exit_config_error;
        }

        try
        {
            if (list->parsed())
            {
                out << "presets (" << presets().size() << "):\n";
                for (const Preset &p : presets())
                    out << "  " << p.name << "  " << p.description << "\n";
                out << "modes:\n";
                for (const std::string &m : find_parameter("experiment.mode")->choices)
                    out << "  " << m << "\n";
                return exit_ok;
            }

            Config cfg = load_config(source, overrides);
            if (dump->parsed())
            {
                out << cfg.to_ini();
                return exit_ok;
            }

            if (seed)
                cfg.set("montecarlo.seed", std::to_string(*seed));
            if (workers)
                cfg.set("montecarlo.workers", std::to_string(*workers));
            if (!out_path.empty())
                cfg.set("output.path", out_path == "-" ? "" : out_path);

            const std::string path = cfg.text("output.path");
            // Summaries share stdout only when the CSV goes to a file.
            std::ostream &summary = path.empty() ? err : out;
            Runner runner(summary);
            const Table table = runner.run(cfg);

            if (path.empty())
                write_csv(out, table);
            else
            {
                std::ofstream file(path, std::ios::binary);
                if (!file)
                    throw ConfigError("Cannot open output file '" + path + "'.");
                write_csv(file, table);
                if (!file.flush())
                    throw ConfigError("Cannot write output file '" + path + "'.");
            }
            return exit_ok;
        }
        catch (const NumericalError &e)
        {
            err << "numerical error: " << e.what() << "\n";
            return exit_numerical_error;
        }
        catch (const std::logic_error &e)
        {
            err << "config error: " << e.what() << "\n";
            return exit_config_error;
        }
    }
}
