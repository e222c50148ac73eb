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

#ifndef VLCSEC_APP_EXPERIMENT_HPP
#define VLCSEC_APP_EXPERIMENT_HPP

#include "vlcsec/app/config.hpp"

#include <vlcsec/beamform.hpp>
#include <vlcsec/channel.hpp>
#include <vlcsec/geometry.hpp>
#include <vlcsec/quadrature.hpp>
#include <vlcsec/selection.hpp>

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace vlcsec::app
{
    // Core objects described by a configuration, in SI units and linear SNR.
    struct Inputs
    {
        RoomConfig room;
        TransmitterLayout layout;
        OpticalFrontEnd front_end;
        ChannelConstants channel;
        DriveConfig drive;
        IntensityField eavesdroppers = IntensityField::homogeneous(0.0);
        std::optional<SnrTarget> target;
        std::string target_key; // parameter holding the target, empty without one
        QuadratureSpec quadrature;
        Point2 user;
        WeightRule weight_rule = WeightRule::quadratic_form;
    };

    // Throws ConfigError naming the offending section or key.
    Inputs build_inputs(const Config &cfg);

    struct Table
    {
        std::vector<std::string> header;
        std::vector<std::vector<std::string>> rows;
    };

    // Runs experiments and caches eavesdropper averages across sweep points that
    // share a room, layout, front end, intensity and quadrature.
    class Runner
    {
    public:
        // One summary line per point goes to `summary`.
        explicit Runner(std::ostream &summary);
        ~Runner();

        // A single run rethrows numerical failures. A sweep records them in the
        // status column and carries on.
        Table run(const Config &cfg);

    private:
        struct Cache;

        std::vector<std::string> header(const std::string &mode) const;
        std::vector<std::string> run_point(const std::string &mode, const Config &cfg, std::string &summary);

        std::ostream &summary_;
        std::unique_ptr<Cache> cache_;
    };

    // RFC 4180 with '\n' line endings.
    void write_csv(std::ostream &out, const Table &table);
}

#endif
