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

#ifndef VLCSEC_SECRECY_HPP
#define VLCSEC_SECRECY_HPP

#include "vlcsec/channel.hpp"
#include "vlcsec/geometry.hpp"

#include <array>

namespace vlcsec
{
    // Capacity bounds in bits per channel use for a peak-constrained channel at linear SNR gamma.
    struct CapacityBounds
    {
        double upper = 0.0; // 1/2 log2(1 + gamma)
        double lower = 0.0; // 1/2 log2(1 + 2 gamma / (pi e))
    };

    CapacityBounds capacity_bounds(double snr);

    // Bounds on the secrecy capacity against the strongest eavesdropper. Either may be negative.
    struct SecrecyCapacityBounds
    {
        double lower = 0.0;
        double upper = 0.0;
    };

    SecrecyCapacityBounds secrecy_capacity_bounds(double ue_snr, double worst_ed_snr);

    // Outage threshold and the SNR ratios it induces:
    //   C_s_lower <= C_th  <=>  ue_snr <= upper_ratio * ed_snr + (3 upper_ratio - pi e / 2)
    //   C_s_upper <= C_th  <=>  ue_snr <= lower_ratio * ed_snr + (lower_ratio - 1)
    struct SecrecyThreshold
    {
        double capacity = 0.0;    // bits
        double upper_ratio = 0.0; // pi e 2^(2 C_th) / 6
        double lower_ratio = 1.0; // 2^(2 C_th)

        static SecrecyThreshold from_capacity(double bits);
    };

    // Piecewise-linear fit of A(d) / d^2, the fraction of the circle of radius d that
    // falls inside a 2a x 2ka cell, through its exact values at d = a, ka, a sqrt(k^2+1).
    struct AreaFit
    {
        double inner_slope = 0.0;     // a < d <= ka
        double inner_intercept = 0.0;
        double outer_slope = 0.0;     // ka < d <= a sqrt(k^2 + 1)
        double outer_intercept = 0.0;
    };

    // Everything the closed-form outage analysis needs about one selection cell.
    struct SopModel
    {
        double snr_scale = 0.0; // zeta
        double lambertian_m = 0.0;
        double height = 0.0;
        double half_width = 0.0; // a_hat
        double aspect = 0.0;     // k_hat
        double intensity = 0.0;  // eavesdropper points per m^2
        std::array<double, 4> breakpoints{}; // UE SNR at the far corner, far edge, near edge, fixture
        AreaFit fit;

        // Squared work-plane distance at which the received SNR equals `snr`.
        double squared_distance_at(double snr) const;
    };

    inline constexpr double min_aspect = 1.0 + 1e-3;

    SopModel build_sop_model(const DriveConfig &drive, const ChannelConstants &cc, const CellGrid &cell,
                             double intensity);

    // Exact circle-in-cell area A(d) and its fitted counterpart d^2 * D_hat(d).
    double covered_area(double half_width, double aspect, double d);
    double approx_area_ratio(const SopModel &model, double d);

    double ue_snr_cdf(const SopModel &model, double snr);
    double ue_snr_pdf(const SopModel &model, double snr);

    // Strongest eavesdropper relative to the selected fixture.
    double ed_snr_cdf(const SopModel &model, double snr);
    double ed_snr_pdf(const SopModel &model, double snr);

    // Gamma(3/2, x) and gamma(3/2, x).
    double upper_gamma_3half(double x);
    double lower_gamma_3half(double x);

    // Pieces of one outage bound for a given SNR ratio; value = f_far - j1 - j2 - j3 + tail.
    struct SopTerms
    {
        double f_far = 0.0; // F_E(y4 / ratio)
        double j1 = 0.0;
        double j2 = 0.0;
        double j3 = 0.0;
        double tail = 0.0;  // F_E(y4) - F_E(y4 / ratio)
        double value = 0.0; // clamped to [0, 1]
    };

    SopTerms sop_terms(const SopModel &model, double ratio);

    struct SopBounds
    {
        double upper = 0.0;
        double lower = 0.0;
    };

    SopBounds sop_closed_form(const SopModel &model, const SecrecyThreshold &threshold);
}

#endif
