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

#ifndef VLCSEC_APP_CONFIG_HPP
#define VLCSEC_APP_CONFIG_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vlcsec::app
{
    // Malformed or inconsistent configuration. The message names the offending key.
    class ConfigError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    enum class ValueType
    {
        real,
        optional_real, // empty means unset
        integer,
        boolean,
        choice,
        text,
        points // "x y; x y; ..." in meters
    };

    struct ParameterSpec
    {
        std::string key; // section.name
        ValueType type = ValueType::real;
        std::string default_value;
        std::string description;
        std::vector<std::string> choices;
        long long min_integer = 0;
    };

    const std::vector<ParameterSpec> &parameter_registry();
    const ParameterSpec *find_parameter(std::string_view key);

    // Canonical text of `value` for parameter `key`; throws ConfigError naming the key.
    std::string canonical_value(const std::string &key, const std::string &value);

    // Shortest decimal text that parses back to the same double.
    std::string format_double(double x);

    // One sweep dimension. Several keys on one axis advance together; every point
    // holds one value per key.
    struct SweepAxis
    {
        std::vector<std::string> keys;
        std::vector<std::vector<std::string>> points;

        friend bool operator==(const SweepAxis &, const SweepAxis &) = default;
    };

    class Config
    {
    public:
        Config(); // every parameter at its default

        // INI text merged over the defaults. Unknown sections or keys are rejected.
        static Config from_ini(std::istream &in, const std::string &source);
        static Config from_ini_text(const std::string &text, const std::string &source);

        // Applies "section.name=value".
        void apply_override(const std::string &assignment);
        void set(const std::string &key, const std::string &value);
        void set_sweep_axis(const std::string &keys, const std::string &values);

        const std::string &text(const std::string &key) const;
        double real(const std::string &key) const;
        std::optional<double> optional_real(const std::string &key) const;
        long long integer(const std::string &key) const;
        bool boolean(const std::string &key) const;

        const std::vector<SweepAxis> &sweep_axes() const { return axes_; }

        // Full configuration, every key included, in registry order.
        std::string to_ini() const;

        friend bool operator==(const Config &, const Config &) = default;

    private:
        std::map<std::string, std::string> values_;
        std::vector<SweepAxis> axes_;
    };

    // Values of a sweep axis from "v1, v2, ..." or "start:step:stop" (single-key axes only).
    SweepAxis parse_sweep_axis(const std::string &keys, const std::string &values);
}

#endif
