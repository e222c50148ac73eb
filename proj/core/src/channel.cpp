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

#include "vlcsec/channel.hpp"

#include <boost/math/special_functions/cos_pi.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace vlcsec
{
    void OpticalFrontEnd::validate() const
    {
        if (!(conversion_efficiency > 0.0) || !(pd_area > 0.0) || !(lens_index > 0.0) || !(responsivity > 0.0) ||
            !(tia_gain > 0.0))
            throw std::invalid_argument("Optical front-end constants must be strictly positive.");
        if (!(half_angle > 0.0) || !(half_angle < 0.5 * std::numbers::pi))
            throw std::invalid_argument("LED half-intensity angle must lie in (0, pi/2).");
        if (!(fov > 0.0) || !(fov <= 0.5 * std::numbers::pi))
            throw std::invalid_argument("Receiver field of view must lie in (0, pi/2].");
    }

    void DriveConfig::validate() const
    {
        if (!(dc_bias > 0.0))
            throw std::invalid_argument("DC bias current must be strictly positive.");
        if (!(modulation_index >= 0.0) || !(modulation_index <= 1.0))
            throw std::invalid_argument("Modulation index must lie in [0, 1].");
        if (!(noise_power > 0.0))
            throw std::invalid_argument("Noise power must be strictly positive.");
    }

    double DriveConfig::snr_coefficient() const
    {
        const double amplitude = modulation_index * dc_bias;
        return amplitude * amplitude / noise_power;
    }

    double lambertian_order(double half_angle)
    {
        if (!(half_angle > 0.0) || !(half_angle < 0.5 * std::numbers::pi))
            throw std::domain_error("Half-intensity angle must lie in (0, pi/2), got " + std::to_string(half_angle));

        // cos_pi keeps cos(60 deg) at exactly 0.5, so m comes out as exactly 1
        const double c = boost::math::cos_pi(half_angle / std::numbers::pi);
        return -std::numbers::ln2 / std::log(c);
    }

    double dc_bias_from_optics(double leds, double optical_power, double conversion_efficiency)
    {
        if (!(leds > 0.0) || !(optical_power > 0.0) || !(conversion_efficiency > 0.0))
            throw std::invalid_argument("LED count, optical power and conversion efficiency must be positive.");
        return leds * optical_power / conversion_efficiency;
    }

    ChannelConstants channel_constant(const OpticalFrontEnd &fe, double height)
    {
        fe.validate();
        if (!(height > 0.0))
            throw std::invalid_argument("Ceiling height above the work plane must be positive.");

        const double m = lambertian_order(fe.half_angle);
        const double s = std::sin(fe.fov);
        const double K = fe.conversion_efficiency * (m + 1.0) * fe.pd_area * std::pow(height, m + 1.0) *
                         fe.lens_index * fe.lens_index * fe.responsivity * fe.tia_gain /
                         (2.0 * std::numbers::pi * s * s);
        return {m, K, height};
    }

    double gain_full(const OpticalFrontEnd &fe, double height, double d, bool apply_fov)
    {
        if (!(d >= 0.0))
            throw std::domain_error("Work-plane distance must be non-negative.");
        if (!(height > 0.0))
            throw std::invalid_argument("Ceiling height above the work plane must be positive.");

        const double incidence = std::atan2(d, height);
        if (apply_fov && incidence > fe.fov)
            return 0.0;

        const double m = lambertian_order(fe.half_angle);
        const double l2 = d * d + height * height;
        const double cos_angle = height / std::sqrt(l2); // irradiance and incidence angles coincide
        const double s = std::sin(fe.fov);

        return fe.conversion_efficiency * (m + 1.0) * fe.pd_area / (2.0 * std::numbers::pi * l2) *
               fe.lens_index * fe.lens_index * std::pow(cos_angle, m) / (s * s) * cos_angle * fe.responsivity *
               fe.tia_gain;
    }

    double gain_simplified(const ChannelConstants &cc, double l)
    {
        if (!(l >= cc.height * (1.0 - 1e-12)))
            throw std::domain_error("Distance " + std::to_string(l) + " m is shorter than the ceiling height.");
        return cc.gain_constant * std::pow(l, -cc.exponent());
    }

    Eigen::VectorXd gain_vector(const TransmitterLayout &layout, const ChannelConstants &cc, Point2 p)
    {
        Eigen::VectorXd h(Eigen::Index(layout.size()));
        const double z2 = cc.height * cc.height;
        for (std::size_t i = 0; i < layout.size(); ++i)
            h[Eigen::Index(i)] = gain_simplified(cc, std::sqrt(squared_distance(layout.positions[i], p) + z2));
        return h;
    }

    Eigen::VectorXd gain_vector_full(const TransmitterLayout &layout, const OpticalFrontEnd &fe, double height,
                                     Point2 p, bool apply_fov)
    {
        Eigen::VectorXd h(Eigen::Index(layout.size()));
        for (std::size_t i = 0; i < layout.size(); ++i)
            h[Eigen::Index(i)] = gain_full(fe, height, std::sqrt(squared_distance(layout.positions[i], p)), apply_fov);
        return h;
    }

    BeamVector::BeamVector(Eigen::VectorXd weights) : weights_(std::move(weights))
    {
        for (Eigen::Index i = 0; i < weights_.size(); ++i)
            if (!(std::abs(weights_[i]) <= 1.0))
                throw std::invalid_argument("Beam weight " + std::to_string(weights_[i]) + " at index " +
                                            std::to_string(i) + " violates the amplitude constraint |w| <= 1.");
    }

    BeamVector BeamVector::zeros(std::size_t n)
    {
        return BeamVector(Eigen::VectorXd::Zero(Eigen::Index(n)));
    }

    BeamVector BeamVector::unit(std::size_t n, std::size_t index, double weight)
    {
        if (index >= n)
            throw std::out_of_range("Selected transmitter index out of range.");
        Eigen::VectorXd w = Eigen::VectorXd::Zero(Eigen::Index(n));
        w[Eigen::Index(index)] = weight;
        return BeamVector(std::move(w));
    }

    double peak_snr(const BeamVector &w, const Eigen::VectorXd &h, const DriveConfig &drive)
    {
        if (Eigen::Index(w.size()) != h.size())
            throw std::invalid_argument("Beam vector and gain vector sizes differ.");
        const double s = w.weights().dot(h);
        return drive.snr_coefficient() * s * s;
    }

    double snr_scale(const DriveConfig &drive, const ChannelConstants &cc)
    {
        return drive.snr_coefficient() * cc.gain_constant * cc.gain_constant;
    }
}
