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

#ifndef VLCSEC_BEAMFORM_HPP
#define VLCSEC_BEAMFORM_HPP

#include "vlcsec/channel.hpp"
#include "vlcsec/geometry.hpp"
#include "vlcsec/quadrature.hpp"

#include <Eigen/Dense>

namespace vlcsec
{
    // The two quadratic forms behind every beamforming problem:
    //   UE SNR         = phi * w^T user_gram w          (user_gram = h_U h_U^T, rank one)
    //   mean ED SNR    = phi * w^T eavesdropper_gram w  (eavesdropper_gram = E[h_E h_E^T])
    struct GramMatrices
    {
        Eigen::MatrixXd user_gram;
        Eigen::MatrixXd eavesdropper_gram;
        double quadrature_error = 0.0; // estimated absolute error of eavesdropper_gram entries
    };

    // Eavesdropper-averaged Gram matrix with its quadrature error estimate.
    struct EavesdropperGram
    {
        Eigen::MatrixXd matrix;
        double quadrature_error = 0.0;
    };

    Eigen::MatrixXd user_gram(const Eigen::VectorXd &user_gains);

    // E[h_E h_E^T] for one eavesdropper drawn from the normalized intensity over the room,
    // by tensor Gauss-Legendre quadrature. With spec.richardson the rule is repeated at
    // twice the node count; the finer result is returned and the entry-wise difference
    // is the error estimate.
    EavesdropperGram eavesdropper_gram(const TransmitterLayout &layout, const ChannelConstants &cc,
                                       const IntensityField &field, const RoomConfig &room,
                                       const QuadratureSpec &spec = {});

    GramMatrices make_gram_matrices(const Eigen::VectorXd &user_gains, const EavesdropperGram &ed);

    // Generator h of a rank-one PSD matrix A = h h^T (sign chosen so the largest entry is positive).
    Eigen::VectorXd rank_one_factor(const Eigen::MatrixXd &rank_one);

    // Largest eigenvalue of eavesdropper_gram^-1 * user_gram and its unit eigenvector
    // (first nonzero component positive). The product is rank one, so the pair comes
    // from one linear solve: v = Bbar^-1 h, eigenvalue = h^T v.
    struct EigenMode
    {
        double value = 0.0;
        Eigen::VectorXd direction;
        double condition_estimate = 0.0; // of eavesdropper_gram
    };

    inline constexpr double max_condition_number = 1e12;

    EigenMode dominant_eigenmode(const Eigen::MatrixXd &user_gram, const Eigen::MatrixXd &eavesdropper_gram);

    enum class TargetKind
    {
        ue_snr_floor,      // minimum UE SNR, minimize mean ED SNR
        ed_snr_cap,        // cap on mean ED SNR, maximize UE SNR
        ue_capacity_floor, // bits; UE capacity lower bound floor
        ed_capacity_cap    // bits; cap on the (Jensen-relaxed) mean ED capacity upper bound
    };

    struct SnrTarget
    {
        TargetKind kind = TargetKind::ue_snr_floor;
        double value = 0.0; // linear SNR or bits, depending on kind

        // Equivalent SNR-domain target (capacity targets mapped to SNR thresholds).
        SnrTarget as_snr() const;
    };

    // UE capacity floor (bits) -> UE SNR floor: (2^(2 xi) - 1) * pi * e / 2
    double ue_capacity_to_snr(double bits);

    // Mean ED capacity cap (bits) -> mean ED SNR cap: 2^(2 xi) - 1
    double ed_capacity_to_snr(double bits);

    struct FallbackParams
    {
        double tolerance = 1e-9;
        long max_iterations = 100000;
    };

    struct BeamformResult
    {
        BeamVector beam;
        double ue_snr = 0.0;      // linear
        double ed_avg_snr = 0.0;  // linear
        double eigenvalue = 0.0;  // largest eigenvalue of Bbar^-1 A
        bool used_fallback = false; // min-ED problem solved numerically because the box constraint binds
        bool box_limited = false;   // max-UE problem scaled down to fit the box; the ED cap is then slack
    };

    // Minimize the mean ED SNR subject to UE SNR >= ue_snr_floor and |w| <= 1.
    BeamformResult min_ed_snr_beamformer(const GramMatrices &gm, const DriveConfig &drive, double ue_snr_floor,
                                         const FallbackParams &params = {});

    // Maximize the UE SNR subject to mean ED SNR <= ed_snr_cap and |w| <= 1.
    BeamformResult max_ue_snr_beamformer(const GramMatrices &gm, const DriveConfig &drive, double ed_snr_cap);

    BeamformResult min_ed_capacity_beamformer(const GramMatrices &gm, const DriveConfig &drive,
                                              double ue_capacity_floor, const FallbackParams &params = {});

    BeamformResult max_ue_capacity_beamformer(const GramMatrices &gm, const DriveConfig &drive,
                                              double ed_capacity_cap);

    // Dispatch on the target kind.
    BeamformResult solve_beamformer(const GramMatrices &gm, const DriveConfig &drive, const SnrTarget &target,
                                    const FallbackParams &params = {});

    // Box-constrained minimizer of w^T Bbar w with phi (w^T h_U)^2 >= ue_snr_floor.
    // The constraint is convexified to h_U^T w >= sqrt(ue_snr_floor / phi) (the problem is
    // symmetric under w -> -w) and solved by accelerated projected gradient with backtracking.
    BeamVector constrained_qp_fallback(const GramMatrices &gm, const DriveConfig &drive, double ue_snr_floor,
                                       const FallbackParams &params = {});

    // Exhaustive search over the grid {k * step : |k * step| <= 1}^N, N <= 3.
    // Test oracle for the min-ED problem.
    BeamVector brute_force_beamformer(const GramMatrices &gm, const DriveConfig &drive, double ue_snr_floor,
                                      double step);
}

#endif
