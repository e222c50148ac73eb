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

#ifndef VLCSEC_MONTECARLO_HPP
#define VLCSEC_MONTECARLO_HPP

#include "vlcsec/beamform.hpp"
#include "vlcsec/channel.hpp"
#include "vlcsec/geometry.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

namespace vlcsec
{
    struct Scenario
    {
        RoomConfig room;
        TransmitterLayout layout; // must be a grid layout for UE sampling
        ChannelConstants channel;
        DriveConfig drive;
        IntensityField eavesdroppers = IntensityField::homogeneous(0.0);
        std::size_t ue_cell = 0; // coverage cell the UE is drawn from
    };

    // Nearest fixture at a fixed weight.
    struct SelectionScheme
    {
        double weight = 1.0;
    };

    // Per-trial beamformer for the drawn UE. Without a target the mean ED SNR cap is set
    // to the leakage of full-weight selection of the nearest fixture.
    struct BeamformingScheme
    {
        std::optional<SnrTarget> target;
        Eigen::MatrixXd eavesdropper_gram; // for the scenario's room and intensity
    };

    using Scheme = std::variant<SelectionScheme, BeamformingScheme>;

    struct TrialConfig
    {
        std::size_t trials = 1;
        std::uint64_t seed = 0;
        Scheme scheme = SelectionScheme{};
        Scenario scenario;
        double secrecy_threshold = 0.0; // bits
        std::size_t workers = 1;        // results depend on the worker count, not on scheduling
    };

    struct Estimate
    {
        double value = 0.0;
        double std_error = 0.0;
        std::size_t trials_used = 0;
    };

    enum class SopBound
    {
        upper, // outage of the secrecy capacity lower bound
        lower  // outage of the secrecy capacity upper bound
    };

    Estimate estimate_sop(const TrialConfig &cfg, SopBound bound);

    struct SopEstimates
    {
        Estimate upper;
        Estimate lower;
    };

    // Both bounds from the same trials.
    SopEstimates estimate_sop_bounds(const TrialConfig &cfg);

    // Mean ED SNR of a fixed beam over single eavesdroppers drawn from the normalized intensity.
    Estimate estimate_avg_ed_snr(const BeamVector &w, const Scenario &scenario, std::size_t trials,
                                 std::uint64_t seed);

    // Right-continuous empirical CDF.
    class EmpiricalCdf
    {
    public:
        explicit EmpiricalCdf(std::vector<double> samples);

        double operator()(double x) const;
        std::size_t size() const { return sorted_.size(); }
        const std::vector<double> &sorted() const { return sorted_; }

        // sup_x |F_n(x) - F(x)| for a continuous (or at least monotone) F.
        double ks_distance(const std::function<double(double)> &cdf) const;

    private:
        std::vector<double> sorted_;
    };

    // Largest SNR over the eavesdroppers for beam w; 0 when there are none.
    double worst_ed_snr(const BeamVector &w, const std::vector<Point2> &eavesdroppers,
                        const TransmitterLayout &layout, const ChannelConstants &cc, const DriveConfig &drive);

    // One eavesdropper drawn from the normalized intensity over the room.
    Point2 sample_single_eavesdropper(const IntensityField &field, const RoomConfig &room, Rng &rng);

    // splitmix64 of (master, stream): independent per-worker seeds.
    std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);
}

#endif
