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

#ifndef VLCSEC_SELECTION_HPP
#define VLCSEC_SELECTION_HPP

#include "vlcsec/beamform.hpp"
#include "vlcsec/channel.hpp"
#include "vlcsec/geometry.hpp"
#include "vlcsec/quadrature.hpp"

#include <Eigen/Dense>

#include <cstddef>

namespace vlcsec
{
    // Single active fixture: w = weight * e_index.
    struct SelectionResult
    {
        std::size_t index = 0;
        double weight = 1.0;
        BeamVector beam;
    };

    enum class WeightRule
    {
        quadratic_form, // phi w^2 A_ii >= rho_U, phi w^2 Bbar_ii <= rho_E
        literal_squared // w^2 A_ii^2 >= rho_U, w^2 Bbar_ii^2 <= rho_E
    };

    // Nearest fixture with full weight.
    SelectionResult select_and_weight(const TransmitterLayout &layout, const ChannelConstants &cc,
                                      const DriveConfig &drive, Point2 ue);

    // Nearest fixture, weighted to meet `target`: the smallest weight reaching a UE floor,
    // or the largest weight (at most 1) respecting an ED cap. `eavesdropper_gram` is only
    // read for ED caps.
    SelectionResult select_and_weight(const TransmitterLayout &layout, const ChannelConstants &cc,
                                      const DriveConfig &drive, Point2 ue, const SnrTarget &target,
                                      const Eigen::MatrixXd &eavesdropper_gram,
                                      WeightRule rule = WeightRule::quadratic_form);

    struct SelectionMetrics
    {
        double ue_snr = 0.0;
        double ed_avg_snr = 0.0;
        double ue_capacity_lower = 0.0;    // bits
        double ed_capacity_upper_avg = 0.0; // bits, averaged over the eavesdropper location
    };

    // `ed_quad` must be built over the same room and intensity as gm.eavesdropper_gram.
    SelectionMetrics selection_metrics(const SelectionResult &sel, const GramMatrices &gm, const DriveConfig &drive,
                                       const TransmitterLayout &layout, const ChannelConstants &cc,
                                       const IntensityQuadrature &ed_quad);
}

#endif
