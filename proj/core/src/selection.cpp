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

#include "vlcsec/selection.hpp"
#include "vlcsec/error.hpp"
#include "vlcsec/secrecy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace vlcsec
{
    SelectionResult select_and_weight(const TransmitterLayout &layout, const ChannelConstants &,
                                      const DriveConfig &, Point2 ue)
    {
        if (layout.size() == 0)
            throw std::invalid_argument("Transmitter layout is empty.");
        const std::size_t i = nearest_transmitter(layout, ue);
        return {i, 1.0, BeamVector::unit(layout.size(), i)};
    }

    SelectionResult select_and_weight(const TransmitterLayout &layout, const ChannelConstants &cc,
                                      const DriveConfig &drive, Point2 ue, const SnrTarget &target,
                                      const Eigen::MatrixXd &eavesdropper_gram, WeightRule rule)
    {
        if (layout.size() == 0)
            throw std::invalid_argument("Transmitter layout is empty.");
        const std::size_t i = nearest_transmitter(layout, ue);
        const SnrTarget snr = target.as_snr();
        if (!(snr.value >= 0.0))
            throw std::invalid_argument("SNR target must be non-negative.");
        const double phi = drive.snr_coefficient();

        double weight = 1.0;
        if (snr.kind == TargetKind::ue_snr_floor)
        {
            const double h = gain_vector(layout, cc, ue)[Eigen::Index(i)];
            const double full = rule == WeightRule::quadratic_form ? phi * h * h : h * h * h * h;
            if (snr.value > full)
                throw InfeasibleError("UE SNR floor " + std::to_string(snr.value) +
                                          " is not reachable by the selected fixture at full weight.",
                                      phi * h * h);
            weight = snr.value == full ? 1.0 : std::sqrt(snr.value / full);
        }
        else
        {
            const Eigen::Index n = Eigen::Index(layout.size());
            if (eavesdropper_gram.rows() != n || eavesdropper_gram.cols() != n)
                throw std::invalid_argument("Eavesdropper Gram matrix does not match the layout size.");
            const double b = eavesdropper_gram(Eigen::Index(i), Eigen::Index(i));
            const double full = rule == WeightRule::quadratic_form ? phi * b : b * b;
            weight = full > 0.0 ? std::min(1.0, std::sqrt(snr.value / full)) : 1.0;
        }
        weight = std::clamp(weight, 0.0, 1.0);
        return {i, weight, BeamVector::unit(layout.size(), i, weight)};
    }

    SelectionMetrics selection_metrics(const SelectionResult &sel, const GramMatrices &gm, const DriveConfig &drive,
                                       const TransmitterLayout &layout, const ChannelConstants &cc,
                                       const IntensityQuadrature &ed_quad)
    {
        const Eigen::Index n = Eigen::Index(sel.beam.size());
        if (gm.user_gram.rows() != n || gm.eavesdropper_gram.rows() != n || Eigen::Index(layout.size()) != n)
            throw std::invalid_argument("Selection vector and Gram matrices differ in size.");
        if (sel.index >= layout.size())
            throw std::out_of_range("Selected fixture index out of range.");

        const double phi = drive.snr_coefficient();
        const Eigen::VectorXd &w = sel.beam.weights();
        SelectionMetrics out;
        out.ue_snr = phi * w.dot(gm.user_gram * w);
        out.ed_avg_snr = phi * w.dot(gm.eavesdropper_gram * w);
        out.ue_capacity_lower = capacity_bounds(out.ue_snr).lower;

        const double g = phi * sel.weight * sel.weight;
        if (g == 0.0)
            return out;
        const Point2 tx = layout.positions[sel.index];
        const double z2 = cc.height * cc.height;
        out.ed_capacity_upper_avg = ed_quad.expectation([&](Point2 p) {
            const double h = gain_simplified(cc, std::sqrt(squared_distance(tx, p) + z2));
            return 0.5 * std::log2(1.0 + g * h * h);
        });
        return out;
    }
}
