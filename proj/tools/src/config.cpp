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

#include "vlcsec/app/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <sstream>

namespace vlcsec::app
{
    namespace
    {
        ParameterSpec real(std::string key, std::string def, std::string desc)
        {
            return {std::move(key), ValueType::real, std::move(def), std::move(desc), {}, 0};
        }

        ParameterSpec optional(std::string key, std::string desc)
        {
            return {std::move(key), ValueType::optional_real, "", std::move(desc), {}, 0};
        }

        ParameterSpec integer(std::string key, std::string def, long long min, std::string desc)
        {
            return {std::move(key), ValueType::integer, std::move(def), std::move(desc), {}, min};
        }

        ParameterSpec choice(std::string key, std::vector<std::string> choices, std::string desc)
        {
            std::string def = choices.front();
            return {std::move(key), ValueType::choice, std::move(def), std::move(desc), std::move(choices), 0};
        }

        std::vector<ParameterSpec> build_registry()
        {
            return {
                real("room.length_m", "10", "room extent along x"),
                real("room.width_m", "10", "room extent along y"),
                real("room.height_m", "3", "ceiling height above the work plane"),

                choice("layout.kind", {"grid", "custom"}, "fixture placement"),
                integer("layout.rows", "2", 1, "grid fixtures along x"),
                integer("layout.cols", "2", 1, "grid fixtures along y"),
                real("layout.edge_m", "1", "uncovered border along every wall (grid)"),
                {"layout.positions_m", ValueType::points, "", "fixture positions \"x y; x y; ...\" (custom)", {}, 0},

                real("front_end.leds_per_fixture", "9", "LEDs per fixture"),
                real("front_end.optical_power_per_led_w", "8", "average optical power per LED"),
                real("front_end.conversion_efficiency_w_per_a", "5", "current-to-light conversion"),
                real("front_end.half_angle_deg", "60", "LED half-intensity angle"),
                real("front_end.pd_area_cm2", "1", "photodiode area"),
                real("front_end.lens_index", "1.5", "concentrator refractive index"),
                real("front_end.fov_deg", "60", "receiver field of view"),
                real("front_end.responsivity_a_per_w", "0.54", "photodiode responsivity"),
                real("front_end.tia_gain_v_per_a", "1", "transimpedance gain"),

                optional("drive.dc_bias_a", "bias current per fixture; empty derives it from the LED optics"),
                real("drive.modulation_index", "0.5", "alpha"),
                real("drive.noise_power_dbm", "-98.35", "receiver noise power"),

                real("eavesdroppers.intensity_per_m2", "0.05", "uniform eavesdropper intensity"),
                real("eavesdroppers.hotspot_intensity_per_m2", "0", "peak of an added Gaussian hotspot"),
                real("eavesdroppers.hotspot_x_m", "0", "hotspot center x"),
                real("eavesdroppers.hotspot_y_m", "0", "hotspot center y"),
                real("eavesdroppers.hotspot_sigma_m", "1", "hotspot spread"),

                real("user.x_m", "0", "UE position x (beamform, select)"),
                real("user.y_m", "0", "UE position y (beamform, select)"),
                integer("user.cell", "-1", -1, "UE coverage cell for sop-mc; -1 picks the cell nearest the room center"),

                optional("target.ue_snr_db", "UE SNR floor"),
                optional("target.ed_snr_cap_db", "mean ED SNR cap"),
                optional("target.ue_capacity_bits", "UE capacity floor"),
                optional("target.ed_capacity_cap_bits", "mean ED capacity cap"),

                real("secrecy.threshold_bits", "0.5", "secrecy outage threshold C_th"),

                choice("selection.weight_rule", {"quadratic_form", "literal_squared"}, "selection weighting rule"),

                integer("quadrature.nodes", "128", 1, "Gauss-Legendre nodes per axis"),
                {"quadrature.richardson", ValueType::boolean, "true", "repeat at twice the nodes for an error estimate", {}, 0},

                integer("montecarlo.trials", "100000", 1, "trials per point"),
                integer("montecarlo.workers", "1", 1, "worker threads; results depend on this count"),
                integer("montecarlo.seed", "1", 0, "master seed"),
                choice("montecarlo.scheme", {"selection", "beamforming"}, "transmit scheme in sop-mc"),

                choice("experiment.mode", {"select", "beamform", "sop-closed", "sop-mc", "sweep"}, "experiment to run"),
                choice("sweep.run", {"sop-closed", "sop-mc", "beamform", "select"}, "experiment run at each sweep point"),

                {"output.path", ValueType::text, "", "CSV destination; empty writes to stdout", {}, 0},
            };
        }

        std::string trim(std::string_view s)
        {
            const auto first = s.find_first_not_of(" \t\r\n");
            if (first == std::string_view::npos)
                return {};
            const auto last = s.find_last_not_of(" \t\r\n");
            return std::string(s.substr(first, last - first + 1));
        }

        std::vector<std::string> split(std::string_view s, char sep)
        {
            std::vector<std::string> out;
            std::size_t start = 0;
            while (true)
            {
                const auto pos = s.find(sep, start);
                out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
                if (pos == std::string_view::npos)
                    return out;
                start = pos + 1;
            }
        }

        std::vector<std::string> split_whitespace(const std::string &s)
        {
            std::istringstream in(s);
            std::vector<std::string> out;
            for (std::string tok; in >> tok;)
                out.push_back(tok);
            return out;
        }

        std::optional<double> parse_double(std::string_view s)
        {
            double x = 0.0;
            if (!s.empty() && s.front() == '+')
                s.remove_prefix(1);
            const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
            if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(x))
                return std::nullopt;
            return x;
        }

        double require_double(const std::string &key, const std::string &value)
        {
            const auto x = parse_double(value);
            if (!x)
                throw ConfigError("Parameter '" + key + "': '" + value + "' is not a finite number.");
            return *x;
        }

        std::string canonical_points(const std::string &key, const std::string &value)
        {
            if (value.empty())
                return {};
            std::string out;
            for (const std::string &item : split(value, ';'))
            {
                const auto xy = split_whitespace(item);
                if (xy.size() != 2)
                    throw ConfigError("Parameter '" + key + "': '" + item + "' is not an 'x y' pair.");
                if (!out.empty())
                    out += "; ";
                out += format_double(require_double(key, xy[0])) + " " + format_double(require_double(key, xy[1]));
            }
            return out;
        }

        // Round an arithmetic-progression value so that 0.1 * 3 prints as 0.3.
        double tidy(double x)
        {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.12g", x);
            return std::strtod(buf, nullptr);
        }
    }

    const std::vector<ParameterSpec> &parameter_registry()
    {
        static const std::vector<ParameterSpec> registry = build_registry();
        return registry;
    }

    const ParameterSpec *find_parameter(std::string_view key)
    {
        for (const ParameterSpec &p : parameter_registry())
            if (p.key == key)
                return &p;
        return nullptr;
    }

    std::string format_double(double x)
    {
        if (x == 0.0)
            return "0";
        char buf[64];
        const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
        return std::string(buf, ptr);
    }

    std::string canonical_value(const std::string &key, const std::string &raw)
    {
        const ParameterSpec *spec = find_parameter(key);
        if (!spec)
            throw ConfigError("Unknown parameter '" + key + "'.");
        const std::string value = trim(raw);

        switch (spec->type)
        {
        case ValueType::real:
            return format_double(require_double(key, value));
        case ValueType::optional_real:
            return value.empty() ? std::string() : format_double(require_double(key, value));
        case ValueType::integer:
        {
            long long n = 0;
            const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
            if (value.empty() || ec != std::errc() || ptr != value.data() + value.size())
                throw ConfigError("Parameter '" + key + "': '" + value + "' is not an integer.");
            if (n < spec->min_integer)
                throw ConfigError("Parameter '" + key + "' must be at least " + std::to_string(spec->min_integer) +
                                  ", got " + value + ".");
            return std::to_string(n);
        }
        case ValueType::boolean:
            if (value == "true" || value == "1" || value == "yes" || value == "on")
                return "true";
            if (value == "false" || value == "0" || value == "no" || value == "off")
                return "false";
            throw ConfigError("Parameter '" + key + "': '" + value + "' is not a boolean.");
        case ValueType::choice:
            if (std::find(spec->choices.begin(), spec->choices.end(), value) == spec->choices.end())
            {
                std::string list;
                for (const auto &c : spec->choices)
                    list += (list.empty() ? "" : ", ") + c;
                throw ConfigError("Parameter '" + key + "': '" + value + "' is not one of " + list + ".");
            }
            return value;
        case ValueType::text:
            return value;
        case ValueType::points:
            return canonical_points(key, value);
        }
        return value;
    }

    SweepAxis parse_sweep_axis(const std::string &keys_text, const std::string &values_text)
    {
        SweepAxis axis;
        for (const std::string &k : split(keys_text, ','))
        {
            const ParameterSpec *spec = find_parameter(k);
            if (!spec)
                throw ConfigError("Sweep axis names unknown parameter '" + k + "'.");
            if (k.starts_with("sweep.") || k.starts_with("output.") || k == "experiment.mode")
                throw ConfigError("Parameter '" + k + "' cannot be swept.");
            if (std::find(axis.keys.begin(), axis.keys.end(), k) != axis.keys.end())
                throw ConfigError("Sweep axis names parameter '" + k + "' twice.");
            axis.keys.push_back(k);
        }

        const std::string values = trim(values_text);
        const auto range = split(values, ':');
        if (range.size() == 3)
        {
            if (axis.keys.size() != 1)
                throw ConfigError("Sweep axis '" + keys_text + "': ranges need a single parameter.");
            const std::string &key = axis.keys.front();
            const double start = require_double(key, range[0]);
            const double step = require_double(key, range[1]);
            const double stop = require_double(key, range[2]);
            if (!(step != 0.0) || (stop - start) / step < 0.0)
                throw ConfigError("Sweep axis '" + key + "': range " + values + " is empty.");
            const double count = std::floor((stop - start) / step + 1e-9);
            if (count > 1e6)
                throw ConfigError("Sweep axis '" + key + "': range " + values + " has too many points.");
            for (long long i = 0; i <= (long long)count; ++i)
            {
                const double x = tidy(start + double(i) * step);
                std::string text = format_double(x);
                if (find_parameter(key)->type == ValueType::integer)
                    text = std::to_string((long long)std::llround(x));
                axis.points.push_back({canonical_value(key, text)});
            }
            return axis;
        }
        if (range.size() != 1)
            throw ConfigError("Sweep axis '" + keys_text + "': malformed range '" + values + "'.");

        for (const std::string &item : split(values, ','))
        {
            const auto parts = axis.keys.size() == 1 ? std::vector<std::string>{item} : split_whitespace(item);
            if (parts.size() != axis.keys.size())
                throw ConfigError("Sweep axis '" + keys_text + "': point '" + item + "' needs " +
                                  std::to_string(axis.keys.size()) + " values.");
            std::vector<std::string> point;
            for (std::size_t i = 0; i < parts.size(); ++i)
                point.push_back(canonical_value(axis.keys[i], parts[i]));
            axis.points.push_back(std::move(point));
        }
        if (axis.points.empty() || (axis.points.size() == 1 && axis.points.front().front().empty() &&
                                    find_parameter(axis.keys.front())->type != ValueType::optional_real))
            throw ConfigError("Sweep axis '" + keys_text + "' has no values.");
        return axis;
    }

    Config::Config()
    {
        for (const ParameterSpec &p : parameter_registry())
            values_[p.key] = canonical_value(p.key, p.default_value);
    }

    Config Config::from_ini_text(const std::string &text, const std::string &source)
    {
        std::istringstream in(text);
        return from_ini(in, source);
    }

    Config Config::from_ini(std::istream &in, const std::string &source)
    {
        boost::property_tree::ptree tree;
        try
        {
            boost::property_tree::read_ini(in, tree);
        }
        catch (const boost::property_tree::ini_parser_error &e)
        {
            throw ConfigError(source + ":" + std::to_string(e.line()) + ": " + e.message());
        }

        Config cfg;
        for (const auto &[section, body] : tree)
        {
            if (!body.data().empty() && body.empty())
                throw ConfigError(source + ": key '" + section + "' lies outside any section.");
            for (const auto &[name, value] : body)
            {
                if (section == "sweep" && name.find('.') != std::string::npos)
                    cfg.set_sweep_axis(name, value.data());
                else
                    cfg.set(section + "." + name, value.data());
            }
        }
        return cfg;
    }

    void Config::set(const std::string &key, const std::string &value)
    {
        std::string canonical = canonical_value(key, value); // rejects unknown keys
        values_[key] = std::move(canonical);
    }

    void Config::set_sweep_axis(const std::string &keys, const std::string &values)
    {
        SweepAxis axis = parse_sweep_axis(keys, values);
        for (SweepAxis &existing : axes_)
            if (existing.keys == axis.keys)
            {
                existing = std::move(axis);
                return;
            }
        for (const SweepAxis &existing : axes_)
            for (const std::string &k : axis.keys)
                if (std::find(existing.keys.begin(), existing.keys.end(), k) != existing.keys.end())
                    throw ConfigError("Parameter '" + k + "' appears on two sweep axes.");
        axes_.push_back(std::move(axis));
    }

    void Config::apply_override(const std::string &assignment)
    {
        const auto eq = assignment.find('=');
        if (eq == std::string::npos)
            throw ConfigError("Override '" + assignment + "' is not of the form key=value.");
        const std::string key = trim(std::string_view(assignment).substr(0, eq));
        const std::string value = assignment.substr(eq + 1);
        if (key.starts_with("sweep.") && key.find('.', 6) != std::string::npos)
        {
            set_sweep_axis(key.substr(6), value);
            return;
        }
        if (!find_parameter(key))
            throw ConfigError("Unknown parameter '" + key + "'.");
        set(key, value);
    }

    const std::string &Config::text(const std::string &key) const
    {
        const auto it = values_.find(key);
        if (it == values_.end())
            throw ConfigError("Unknown parameter '" + key + "'.");
        return it->second;
    }

    double Config::real(const std::string &key) const
    {
        return *parse_double(text(key));
    }

    std::optional<double> Config::optional_real(const std::string &key) const
    {
        const std::string &t = text(key);
        if (t.empty())
            return std::nullopt;
        return *parse_double(t);
    }

    long long Config::integer(const std::string &key) const
    {
        return std::stoll(text(key));
    }

    bool Config::boolean(const std::string &key) const
    {
        return text(key) == "true";
    }

    std::string Config::to_ini() const
    {
        std::ostringstream out;
        std::string section;
        for (const ParameterSpec &p : parameter_registry())
        {
            const auto dot = p.key.find('.');
            const std::string s = p.key.substr(0, dot);
            if (s != section)
            {
                if (!section.empty())
                    out << "\n";
                out << "[" << s << "]\n";
                section = s;
            }
            out << "; " << p.description << "\n";
            out << p.key.substr(dot + 1) << " = " << values_.at(p.key) << "\n";
            if (p.key == "sweep.run")
                for (const SweepAxis &axis : axes_)
                {
                    std::string keys, points;
                    for (const auto &k : axis.keys)
                        keys += (keys.empty() ? "" : ",") + k;
                    for (const auto &pt : axis.points)
                    {
                        std::string joined;
                        for (const auto &v : pt)
                            joined += (joined.empty() ? "" : " ") + v;
                        points += (points.empty() ? "" : ", ") + joined;
                    }
                    out << keys << " = " << points << "\n";
                }
        }
        return out.str();
    }
}
