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

#include "vlcsec/app/experiment.hpp"

#include <vlcsec/error.hpp>
#include <vlcsec/montecarlo.hpp>
#include <vlcsec/secrecy.hpp>

#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

namespace vlcsec::app
{
    namespace
    {
        double deg(double d) { return d * std::numbers::pi / 180.0; }

        double from_db(double db) { return std::pow(10.0, db / 10.0); }

        std::string num(double x) { return format_double(x); }

        std::string db(double linear) { return format_double(10.0 * std::log10(linear)); }

        // Re-raise core argument errors as configuration errors tagged with `where`.
        template <class F>
        auto guarded(const std::string &where, F &&f)
        {
            try
            {
                return f();
            }
            catch (const ConfigError &)
            {
                throw;
            }
            catch (const std::logic_error &e)
            {
                throw ConfigError(where + ": " + e.what());
            }
        }

        std::vector<Point2> parse_points(const std::string &text)
        {
            std::vector<Point2> out;
            std::istringstream in(text);
            for (std::string item; std::getline(in, item, ';');)
            {
                std::istringstream xy(item);
                Point2 p;
                xy >> p.x >> p.y;
                out.push_back(p);
            }
            return out;
        }

        const std::vector<std::string> target_keys = {"target.ue_snr_db", "target.ed_snr_cap_db",
                                                      "target.ue_capacity_bits", "target.ed_capacity_cap_bits"};

        std::string cache_key(const Config &cfg, bool with_quadrature)
        {
            std::string key;
            for (const ParameterSpec &p : parameter_registry())
            {
                const bool scenario = p.key.starts_with("room.") || p.key.starts_with("layout.") ||
                                      p.key.starts_with("front_end.") || p.key.starts_with("eavesdroppers.");
                if (scenario || (with_quadrature && p.key.starts_with("quadrature.")))
                    key += p.key + "=" + cfg.text(p.key) + "\n";
            }
            return key;
        }

        std::string error_status(const NumericalError &e)
        {
            if (dynamic_cast<const InfeasibleError *>(&e))
                return "infeasible";
            if (dynamic_cast<const SingularMatrixError *>(&e))
                return "singular";
            if (dynamic_cast<const ConvergenceError *>(&e))
                return "no-convergence";
            return "numerical-error";
        }

        std::string join_weights(const BeamVector &w)
        {
            std::string out;
            for (std::size_t i = 0; i < w.size(); ++i)
                out += (i ? " " : "") + num(w[i]);
            return out;
        }

        std::size_t ue_cell(const Config &cfg, const TransmitterLayout &layout)
        {
            const long long cell = cfg.integer("user.cell");
            if (cell < 0)
                return nearest_transmitter(layout, {0.0, 0.0});
            if (std::size_t(cell) >= layout.size())
                throw ConfigError("Parameter 'user.cell': cell " + std::to_string(cell) + " does not exist (" +
                                  std::to_string(layout.size()) + " fixtures).");
            return std::size_t(cell);
        }
    }

    Inputs build_inputs(const Config &cfg)
    {
        Inputs in;
        in.room = guarded("room", [&] {
            RoomConfig r{cfg.real("room.length_m"), cfg.real("room.width_m"), cfg.real("room.height_m")};
            r.validate();
            return r;
        });

        in.layout = guarded("layout", [&] {
            if (cfg.text("layout.kind") == "grid")
                return build_grid_layout(in.room, std::size_t(cfg.integer("layout.rows")),
                                         std::size_t(cfg.integer("layout.cols")), cfg.real("layout.edge_m"));
            const auto points = parse_points(cfg.text("layout.positions_m"));
            if (points.empty())
                throw ConfigError("Parameter 'layout.positions_m' must list at least one fixture for a custom layout.");
            return custom_layout(in.room, points);
        });

        in.front_end = guarded("front_end", [&] {
            OpticalFrontEnd fe;
            fe.conversion_efficiency = cfg.real("front_end.conversion_efficiency_w_per_a");
            fe.half_angle = deg(cfg.real("front_end.half_angle_deg"));
            fe.pd_area = cfg.real("front_end.pd_area_cm2") * 1e-4;
            fe.lens_index = cfg.real("front_end.lens_index");
            fe.fov = deg(cfg.real("front_end.fov_deg"));
            fe.responsivity = cfg.real("front_end.responsivity_a_per_w");
            fe.tia_gain = cfg.real("front_end.tia_gain_v_per_a");
            fe.validate();
            return fe;
        });
        in.channel = guarded("front_end", [&] { return channel_constant(in.front_end, in.room.height); });

        in.drive = guarded("drive", [&] {
            DriveConfig d;
            const auto bias = cfg.optional_real("drive.dc_bias_a");
            d.dc_bias = bias ? *bias
                             : dc_bias_from_optics(cfg.real("front_end.leds_per_fixture"),
                                                   cfg.real("front_end.optical_power_per_led_w"),
                                                   in.front_end.conversion_efficiency);
            d.modulation_index = cfg.real("drive.modulation_index");
            d.noise_power = from_db(cfg.real("drive.noise_power_dbm")) * 1e-3;
            d.validate();
            return d;
        });

        in.eavesdroppers = guarded("eavesdroppers", [&] {
            const double base = cfg.real("eavesdroppers.intensity_per_m2");
            const double peak = cfg.real("eavesdroppers.hotspot_intensity_per_m2");
            const double sigma = cfg.real("eavesdroppers.hotspot_sigma_m");
            if (!(base >= 0.0))
                throw ConfigError("Parameter 'eavesdroppers.intensity_per_m2' must be non-negative.");
            if (!(peak >= 0.0))
                throw ConfigError("Parameter 'eavesdroppers.hotspot_intensity_per_m2' must be non-negative.");
            if (peak == 0.0)
                return IntensityField::homogeneous(base);
            if (!(sigma > 0.0))
                throw ConfigError("Parameter 'eavesdroppers.hotspot_sigma_m' must be positive.");
            const Point2 c{cfg.real("eavesdroppers.hotspot_x_m"), cfg.real("eavesdroppers.hotspot_y_m")};
            return IntensityField::inhomogeneous(
                [=](Point2 p) { return base + peak * std::exp(-squared_distance(p, c) / (2.0 * sigma * sigma)); },
                base + peak);
        });

        for (const std::string &key : target_keys)
        {
            const auto value = cfg.optional_real(key);
            if (!value)
                continue;
            if (in.target)
                throw ConfigError("Parameters '" + in.target_key + "' and '" + key +
                                  "' are both set; choose at most one target.");
            in.target_key = key;
            if (key == "target.ue_snr_db")
                in.target = SnrTarget{TargetKind::ue_snr_floor, from_db(*value)};
            else if (key == "target.ed_snr_cap_db")
                in.target = SnrTarget{TargetKind::ed_snr_cap, from_db(*value)};
            else if (key == "target.ue_capacity_bits")
                in.target = SnrTarget{TargetKind::ue_capacity_floor, *value};
            else
                in.target = SnrTarget{TargetKind::ed_capacity_cap, *value};
            if (in.target->kind != TargetKind::ue_snr_floor && in.target->kind != TargetKind::ed_snr_cap &&
                !(*value >= 0.0))
                throw ConfigError("Parameter '" + key + "' must be non-negative.");
        }

        in.quadrature.nodes = std::size_t(cfg.integer("quadrature.nodes"));
        in.quadrature.richardson = cfg.boolean("quadrature.richardson");
        in.user = {cfg.real("user.x_m"), cfg.real("user.y_m")};
        if (!in.room.contains(in.user))
            throw ConfigError("Parameters 'user.x_m', 'user.y_m': (" + num(in.user.x) + ", " + num(in.user.y) +
                              ") lies outside the room.");
        in.weight_rule = cfg.text("selection.weight_rule") == "literal_squared" ? WeightRule::literal_squared
                                                                                : WeightRule::quadratic_form;
        return in;
    }

    struct Runner::Cache
    {
        std::map<std::string, EavesdropperGram> grams;
        std::map<std::string, std::unique_ptr<IntensityQuadrature>> quadratures;
        std::map<std::string, Eigen::MatrixXd> node_gains;

        // Row k holds the gains from every fixture to quadrature node k.
        const Eigen::MatrixXd &gains_at_nodes(const Config &cfg, const Inputs &in)
        {
            auto &slot = node_gains[cache_key(cfg, true)];
            if (slot.size() == 0)
            {
                const auto &points = quadrature(cfg, in).points();
                slot.resize(Eigen::Index(points.size()), Eigen::Index(in.layout.size()));
                for (std::size_t k = 0; k < points.size(); ++k)
                    slot.row(Eigen::Index(k)) = gain_vector(in.layout, in.channel, points[k]).transpose();
            }
            return slot;
        }

        const EavesdropperGram &gram(const Config &cfg, const Inputs &in)
        {
            auto &slot = grams[cache_key(cfg, true)];
            if (slot.matrix.size() == 0)
                slot = guarded("eavesdroppers", [&] {
                    return eavesdropper_gram(in.layout, in.channel, in.eavesdroppers, in.room, in.quadrature);
                });
            return slot;
        }

        const IntensityQuadrature &quadrature(const Config &cfg, const Inputs &in)
        {
            auto &slot = quadratures[cache_key(cfg, true)];
            if (!slot)
                slot = guarded("eavesdroppers", [&] {
                    return std::make_unique<IntensityQuadrature>(in.room, in.eavesdroppers, in.quadrature.nodes);
                });
            return *slot;
        }
    };

    Runner::Runner(std::ostream &summary) : summary_(summary), cache_(std::make_unique<Cache>()) {}

    Runner::~Runner() = default;

    std::vector<std::string> Runner::header(const std::string &mode) const
    {
        if (mode == "select")
            return {"x_m", "y_m", "target", "target_value", "sel_index", "sel_weight", "sel_ue_snr_db",
                    "sel_ed_avg_snr_db", "sel_ue_capacity_lower", "sel_ed_capacity_upper_avg", "status"};
        if (mode == "beamform")
            return {"x_m", "y_m", "target", "target_value", "bf_weights", "bf_ue_snr_db", "bf_ed_avg_snr_db",
                    "bf_ue_capacity_lower", "bf_ed_capacity_upper_avg", "bf_eigenvalue", "bf_fallback",
                    "bf_box_limited", "sel_index", "sel_weight", "sel_ue_snr_db", "sel_ed_avg_snr_db",
                    "sel_ue_capacity_lower", "sel_ed_capacity_upper_avg", "quadrature_error", "status"};
        if (mode == "sop-closed")
            return {"lambda_E", "C_th", "rows", "cols", "a_hat", "k_hat", "sop_upper_cf", "sop_lower_cf", "status"};
        return {"lambda_E", "C_th", "rows", "cols", "a_hat", "k_hat", "scheme", "ue_cell", "sop_upper_cf",
                "sop_lower_cf", "sop_upper_mc", "sop_upper_mc_se", "sop_lower_mc", "sop_lower_mc_se", "trials",
                "workers", "seed", "status"};
    }

    std::vector<std::string> Runner::run_point(const std::string &mode, const Config &cfg, std::string &summary)
    {
        const Inputs in = build_inputs(cfg);
        std::vector<std::string> row;

        if (mode == "select" || mode == "beamform")
        {
            const EavesdropperGram &ed = cache_->gram(cfg, in);
            const IntensityQuadrature &quad = cache_->quadrature(cfg, in);
            const Eigen::VectorXd h = gain_vector(in.layout, in.channel, in.user);
            const GramMatrices gm = make_gram_matrices(h, ed);
            const std::string target_value = in.target ? cfg.text(in.target_key) : std::string();
            row = {num(in.user.x), num(in.user.y), in.target_key, target_value};

            if (mode == "beamform")
            {
                if (!in.target)
                    throw ConfigError("Experiment 'beamform' needs one of the target.* parameters.");
                const BeamformResult bf = solve_beamformer(gm, in.drive, *in.target);
                const double phi = in.drive.snr_coefficient();
                const Eigen::VectorXd received = cache_->gains_at_nodes(cfg, in) * bf.beam.weights();
                double ed_cap = 0.0;
                for (Eigen::Index k = 0; k < received.size(); ++k)
                    ed_cap += quad.weights()[std::size_t(k)] *
                              capacity_bounds(phi * received[k] * received[k]).upper;
                row.insert(row.end(), {join_weights(bf.beam), db(bf.ue_snr), db(bf.ed_avg_snr),
                                       num(capacity_bounds(bf.ue_snr).lower), num(ed_cap), num(bf.eigenvalue),
                                       bf.used_fallback ? "true" : "false", bf.box_limited ? "true" : "false"});
                summary = "bf UE " + db(bf.ue_snr) + " dB, mean ED " + db(bf.ed_avg_snr) + " dB";
            }

            const SelectionResult sel =
                in.target ? select_and_weight(in.layout, in.channel, in.drive, in.user, *in.target, ed.matrix,
                                              in.weight_rule)
                          : select_and_weight(in.layout, in.channel, in.drive, in.user);
            const SelectionMetrics sm = selection_metrics(sel, gm, in.drive, in.layout, in.channel, quad);
            row.insert(row.end(), {std::to_string(sel.index), num(sel.weight), db(sm.ue_snr), db(sm.ed_avg_snr),
                                   num(sm.ue_capacity_lower), num(sm.ed_capacity_upper_avg)});
            summary += (summary.empty() ? "" : "; ") + std::string("sel UE ") + db(sm.ue_snr) + " dB, mean ED " +
                       db(sm.ed_avg_snr) + " dB";
            if (mode == "beamform")
                row.push_back(num(ed.quadrature_error));
            row.push_back("ok");
            return row;
        }

        if (!in.layout.cells)
            throw ConfigError("Experiment '" + mode + "' needs layout.kind = grid.");
        const CellGrid &grid = *in.layout.cells;
        const double lambda = cfg.real("eavesdroppers.intensity_per_m2");
        const double cth = cfg.real("secrecy.threshold_bits");
        const auto threshold = guarded("secrecy", [&] { return SecrecyThreshold::from_capacity(cth); });
        row = {num(lambda), num(cth), std::to_string(grid.rows), std::to_string(grid.cols), num(grid.half_width),
               num(grid.aspect)};

        std::optional<SopBounds> cf;
        if (in.eavesdroppers.is_homogeneous())
        {
            const SopModel model =
                guarded("layout", [&] { return build_sop_model(in.drive, in.channel, grid, lambda); });
            cf = sop_closed_form(model, threshold);
        }
        else if (mode == "sop-closed")
            throw ConfigError("Experiment 'sop-closed' needs eavesdroppers.hotspot_intensity_per_m2 = 0.");

        if (mode == "sop-closed")
        {
            row.insert(row.end(), {num(cf->upper), num(cf->lower), "ok"});
            summary = "SOP upper " + num(cf->upper) + ", lower " + num(cf->lower);
            return row;
        }

        TrialConfig tc;
        tc.trials = std::size_t(cfg.integer("montecarlo.trials"));
        tc.seed = std::uint64_t(cfg.integer("montecarlo.seed"));
        tc.workers = std::size_t(cfg.integer("montecarlo.workers"));
        tc.secrecy_threshold = cth;
        tc.scenario = Scenario{in.room, in.layout, in.channel, in.drive, in.eavesdroppers, ue_cell(cfg, in.layout)};
        const std::string scheme = cfg.text("montecarlo.scheme");
        if (scheme == "beamforming")
            tc.scheme = BeamformingScheme{in.target, cache_->gram(cfg, in).matrix};
        else
            tc.scheme = SelectionScheme{1.0};
        const SopEstimates mc = guarded("montecarlo", [&] { return estimate_sop_bounds(tc); });

        row.insert(row.end(), {scheme, std::to_string(tc.scenario.ue_cell), cf ? num(cf->upper) : "",
                               cf ? num(cf->lower) : "", num(mc.upper.value), num(mc.upper.std_error),
                               num(mc.lower.value), num(mc.lower.std_error), std::to_string(tc.trials),
                               std::to_string(tc.workers), std::to_string(tc.seed), "ok"});
        summary = "SOP upper " + num(mc.upper.value) + " +- " + num(mc.upper.std_error) + " (mc)";
        if (cf)
            summary += " vs " + num(cf->upper) + " (cf)";
        return row;
    }

    Table Runner::run(const Config &cfg)
    {
        const std::string mode = cfg.text("experiment.mode");
        Table table;

        if (mode != "sweep")
        {
            if (!cfg.sweep_axes().empty())
                throw ConfigError("Sweep axes are set but experiment.mode is '" + mode + "', not 'sweep'.");
            table.header = header(mode);
            std::string summary;
            table.rows.push_back(run_point(mode, cfg, summary));
            summary_ << mode << ": " << summary << "\n";
            return table;
        }

        const auto &axes = cfg.sweep_axes();
        if (axes.empty())
            throw ConfigError("Experiment 'sweep' needs at least one sweep axis in [sweep].");
        const std::string run_mode = cfg.text("sweep.run");
        for (const SweepAxis &axis : axes)
            table.header.insert(table.header.end(), axis.keys.begin(), axis.keys.end());
        const std::vector<std::string> result = header(run_mode);
        table.header.insert(table.header.end(), result.begin(), result.end());

        std::size_t total = 1;
        for (const SweepAxis &axis : axes)
            total *= axis.points.size();

        // Odometer over the axes; the last axis varies fastest.
        std::vector<std::size_t> index(axes.size(), 0);
        for (std::size_t n = 0; n < total; ++n)
        {
            Config point = cfg;
            std::vector<std::string> row;
            std::string label;
            for (std::size_t a = 0; a < axes.size(); ++a)
                for (std::size_t k = 0; k < axes[a].keys.size(); ++k)
                {
                    const std::string &value = axes[a].points[index[a]][k];
                    point.set(axes[a].keys[k], value);
                    row.push_back(value);
                    label += (label.empty() ? "" : " ") + axes[a].keys[k] + "=" + value;
                }

            std::string summary;
            try
            {
                const auto values = run_point(run_mode, point, summary);
                row.insert(row.end(), values.begin(), values.end());
            }
            catch (const NumericalError &e)
            {
                row.resize(table.header.size() - 1);
                row.push_back(error_status(e));
                summary = error_status(e) + ": " + e.what();
            }
            table.rows.push_back(std::move(row));
            summary_ << "[" << (n + 1) << "/" << total << "] " << label << ": " << summary << "\n";

            for (std::size_t a = axes.size(); a-- > 0;)
            {
                if (++index[a] < axes[a].points.size())
                    break;
                index[a] = 0;
            }
        }
        return table;
    }

    void write_csv(std::ostream &out, const Table &table)
    {
        const auto field = [&](const std::string &s) {
            if (s.find_first_of(",\"\r\n") == std::string::npos)
            {
                out << s;
                return;
            }
            out << '"';
            for (char c : s)
                out << (c == '"' ? "\"\"" : std::string(1, c));
            out << '"';
        };
        const auto line = [&](const std::vector<std::string> &cells) {
            for (std::size_t i = 0; i < cells.size(); ++i)
            {
                if (i)
                    out << ',';
                field(cells[i]);
            }
            out << '\n';
        };
        line(table.header);
        for (const auto &row : table.rows)
            line(row);
    }
}
