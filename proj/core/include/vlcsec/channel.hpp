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

#ifndef VLCSEC_CHANNEL_HPP
#define VLCSEC_CHANNEL_HPP

#include "vlcsec/geometry.hpp"

#include <Eigen/Dense>

#include <cstddef>

namespace vlcsec
{
    // LED and photodiode constants. Angles in radians, areas in m^2.
    struct OpticalFrontEnd
    {
        double conversion_efficiency = 0.0; // W/A, current-to-light
        double half_angle = 0.0;            // half-intensity angle of the LED
        double pd_area = 0.0;
        double lens_index = 0.0; // refractive index of the optical concentrator
        double fov = 0.0;        // receiver field of view
        double responsivity = 0.0; // A/W
        double tia_gain = 1.0;     // V/A

        void validate() const;
    };

    // DC-biased PAM drive. The signal amplitude is bounded by modulation_index * dc_bias.
    struct DriveConfig
    {
        double dc_bias = 0.0; // A, per fixture
        double modulation_index = 0.0;
        double noise_power = 0.0; // same squared-signal units as the received signal

        void validate() const;

        // alpha^2 I_DC^2 / sigma^2, the factor turning w^T h h^T w into a peak SNR.
        double snr_coefficient() const;
    };

    // Power-law form of the LoS gain, h = gain_constant * l^-(m+3), for a receiver
    // facing up at `height` below the fixture plane.
    struct ChannelConstants
    {
        double lambertian_m = 0.0;
        double gain_constant = 0.0; // K
        double height = 0.0;        // Z

        double exponent() const { return lambertian_m + 3.0; }
    };

    // m = -ln 2 / ln cos(half_angle)
    double lambertian_order(double half_angle);

    // Bias current per fixture when `leds` LEDs each emit `optical_power` watts on average.
    double dc_bias_from_optics(double leds, double optical_power, double conversion_efficiency);

    ChannelConstants channel_constant(const OpticalFrontEnd &fe, double height);

    // Full Lambertian gain at work-plane distance d with the receiver facing up.
    // With apply_fov set, the gain is zero outside the receiver field of view.
    double gain_full(const OpticalFrontEnd &fe, double height, double d, bool apply_fov = true);

    // K * l^-(m+3) at Euclidean distance l >= height.
    double gain_simplified(const ChannelConstants &cc, double l);

    // Gains from every fixture in `layout` to a receiver at p.
    Eigen::VectorXd gain_vector(const TransmitterLayout &layout, const ChannelConstants &cc, Point2 p);

    // Same, evaluated with the full Lambertian model (optionally with the FOV cutoff).
    Eigen::VectorXd gain_vector_full(const TransmitterLayout &layout, const OpticalFrontEnd &fe, double height,
                                     Point2 p, bool apply_fov);

    // Transmit weights, one per fixture, each in [-1, 1].
    class BeamVector
    {
    public:
        BeamVector() = default;
        explicit BeamVector(Eigen::VectorXd weights);

        static BeamVector zeros(std::size_t n);
        static BeamVector unit(std::size_t n, std::size_t index, double weight = 1.0);

        const Eigen::VectorXd &weights() const { return weights_; }
        std::size_t size() const { return std::size_t(weights_.size()); }
        double operator[](std::size_t i) const { return weights_[Eigen::Index(i)]; }
        double max_abs() const { return weights_.size() ? weights_.cwiseAbs().maxCoeff() : 0.0; }

    private:
        Eigen::VectorXd weights_;
    };

    // Peak SNR (linear) of w at a receiver with gain vector h.
    double peak_snr(const BeamVector &w, const Eigen::VectorXd &h, const DriveConfig &drive);

    // zeta = alpha^2 I_DC^2 K^2 / sigma^2: single-fixture SNR at unit distance, full weight.
    double snr_scale(const DriveConfig &drive, const ChannelConstants &cc);
}

#endif
