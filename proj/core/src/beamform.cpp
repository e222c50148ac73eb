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

#include "vlcsec/beamform.hpp"
#include "vlcsec/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace vlcsec
{
    namespace
    {
        constexpr double feasibility_slack = 1e-12;

        Eigen::MatrixXd gram_at(const IntensityQuadrature &quad, const TransmitterLayout &layout,
                                const ChannelConstants &cc)
        {
            const Eigen::Index n = Eigen::Index(layout.size());
            Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
            const auto &pts = quad.points();
            const auto &wts = quad.weights();
            for (std::size_t k = 0; k < pts.size(); ++k)
            {
                const Eigen::VectorXd h = gain_vector(layout, cc, pts[k]);
                acc.selfadjointView<Eigen::Lower>().rankUpdate(h, wts[k]);
            }
            return acc.selfadjointView<Eigen::Lower>();
        }

        void check_gram_shapes(const GramMatrices &gm)
        {
            const Eigen::Index n = gm.user_gram.rows();
            if (n == 0 || gm.user_gram.cols() != n || gm.eavesdropper_gram.rows() != n ||
                gm.eavesdropper_gram.cols() != n)
                throw std::invalid_argument("Gram matrices must be square, non-empty and of equal size.");
        }

        Eigen::VectorXd clamp_box(const Eigen::VectorXd &z)
        {
            return z.cwiseMax(-1.0).cwiseMin(1.0);
        }

        // Euclidean projection onto {|x_i| <= 1} intersected with {c^T x >= tau}.
        // The KKT point is clamp(z + nu c) for the smallest nu >= 0 meeting the halfspace;
        // c^T clamp(z + nu c) is nondecreasing in nu, so nu is found by bisection.
        Eigen::VectorXd project_feasible(const Eigen::VectorXd &z, const Eigen::VectorXd &c, double tau)
        {
            Eigen::VectorXd y = clamp_box(z);
            if (c.dot(y) >= tau)
                return y;

            double hi = 0.0;
            for (Eigen::Index i = 0; i < c.size(); ++i)
            {
                if (c[i] > 0.0)
                    hi = std::max(hi, (1.0 - z[i]) / c[i]);
                else if (c[i] < 0.0)
                    hi = std::max(hi, (-1.0 - z[i]) / c[i]);
            }
            double lo = 0.0;
            for (int it = 0; it < 200 && hi - lo > 1e-17 * hi; ++it)
            {
                const double mid = 0.5 * (lo + hi);
                if (c.dot(clamp_box(z + mid * c)) < tau)
                    lo = mid;
                else
                    hi = mid;
            }
            return clamp_box(z + hi * c);
        }

        BeamformResult evaluate(const GramMatrices &gm, const DriveConfig &drive, BeamVector beam)
        {
            const double phi = drive.snr_coefficient();
            BeamformResult r;
            const Eigen::VectorXd &w = beam.weights();
            r.ue_snr = phi * w.dot(gm.user_gram * w);
            r.ed_avg_snr = phi * w.dot(gm.eavesdropper_gram * w);
            r.beam = std::move(beam);
            return r;
        }

        // Guards against w = 1 + ulp after scaling.
        Eigen::VectorXd snap_to_box(Eigen::VectorXd w)
        {
            for (Eigen::Index i = 0; i < w.size(); ++i)
                if (std::abs(w[i]) > 1.0 && std::abs(w[i]) <= 1.0 + 1e-12)
                    w[i] = std::copysign(1.0, w[i]);
            return w;
        }
    }

    Eigen::MatrixXd user_gram(const Eigen::VectorXd &user_gains)
    {
        if (user_gains.size() == 0)
            throw std::invalid_argument("User gain vector is empty.");
        return user_gains * user_gains.transpose();
    }

    EavesdropperGram eavesdropper_gram(const TransmitterLayout &layout, const ChannelConstants &cc,
                                       const IntensityField &field, const RoomConfig &room,
                                       const QuadratureSpec &spec)
    {
        if (layout.size() == 0)
            throw std::invalid_argument("Transmitter layout is empty.");
        if (spec.nodes < 2)
            throw std::invalid_argument("Quadrature needs at least two nodes per axis.");

        const IntensityQuadrature coarse(room, field, spec.nodes);
        EavesdropperGram out;
        out.matrix = gram_at(coarse, layout, cc);
        if (!spec.richardson)
            return out;

        const IntensityQuadrature fine(room, field, 2 * spec.nodes);
        const Eigen::MatrixXd refined = gram_at(fine, layout, cc);
        out.quadrature_error = (refined - out.matrix).cwiseAbs().maxCoeff();
        out.matrix = refined;
        return out;
    }

    GramMatrices make_gram_matrices(const Eigen::VectorXd &user_gains, const EavesdropperGram &ed)
    {
        GramMatrices gm{user_gram(user_gains), ed.matrix, ed.quadrature_error};
        check_gram_shapes(gm);
        return gm;
    }

    Eigen::VectorXd rank_one_factor(const Eigen::MatrixXd &rank_one)
    {
        if (rank_one.rows() == 0 || rank_one.rows() != rank_one.cols())
            throw std::invalid_argument("Rank-one factorization needs a non-empty square matrix.");
        Eigen::Index k = 0;
        const double peak = rank_one.diagonal().maxCoeff(&k);
        if (!(peak > 0.0))
            throw std::invalid_argument("User Gram matrix is zero: the user receives no signal.");
        return rank_one.col(k) / std::sqrt(peak);
    }

    EigenMode dominant_eigenmode(const Eigen::MatrixXd &user_gram, const Eigen::MatrixXd &eavesdropper_gram)
    {
        check_gram_shapes({user_gram, eavesdropper_gram, 0.0});

        const Eigen::LLT<Eigen::MatrixXd> llt(eavesdropper_gram);
        if (llt.info() != Eigen::Success)
            throw SingularMatrixError("Eavesdropper Gram matrix is not positive definite.",
                                      std::numeric_limits<double>::infinity());
        const double rcond = llt.rcond();
        const double cond = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
        if (cond > max_condition_number)
            throw SingularMatrixError("Eavesdropper Gram matrix is ill-conditioned (condition estimate " +
                                          std::to_string(cond) + ").",
                                      cond);

        const Eigen::VectorXd h = rank_one_factor(user_gram);
        Eigen::VectorXd v = llt.solve(h);

        EigenMode mode;
        mode.value = h.dot(v);
        mode.condition_estimate = cond;
        v.normalize();
        for (Eigen::Index i = 0; i < v.size(); ++i)
            if (v[i] != 0.0)
            {
                if (v[i] < 0.0)
                    v = -v;
                break;
            }
        mode.direction = std::move(v);
        return mode;
    }

    SnrTarget SnrTarget::as_snr() const
    {
        switch (kind)
        {
        case TargetKind::ue_capacity_floor:
            return {TargetKind::ue_snr_floor, ue_capacity_to_snr(value)};
        case TargetKind::ed_capacity_cap:
            return {TargetKind::ed_snr_cap, ed_capacity_to_snr(value)};
        default:
            return *this;
        }
    }

    double ue_capacity_to_snr(double bits)
    {
        if (!(bits >= 0.0))
            throw std::invalid_argument("Capacity target must be non-negative.");
        return std::expm1(2.0 * bits * std::numbers::ln2) * std::numbers::pi * std::numbers::e / 2.0;
    }

    double ed_capacity_to_snr(double bits)
    {
        if (!(bits >= 0.0))
            throw std::invalid_argument("Capacity target must be non-negative.");
        return std::expm1(2.0 * bits * std::numbers::ln2);
    }

    BeamformResult min_ed_snr_beamformer(const GramMatrices &gm, const DriveConfig &drive, double ue_snr_floor,
                                         const FallbackParams &params)
    {
        check_gram_shapes(gm);
        if (!(ue_snr_floor > 0.0))
            throw std::invalid_argument("UE SNR floor must be strictly positive.");
        const double phi = drive.snr_coefficient();
        if (!(phi > 0.0))
            throw std::invalid_argument("SNR coefficient must be strictly positive.");

        const Eigen::VectorXd h = rank_one_factor(gm.user_gram);
        const double reach = h.lpNorm<1>();
        const double t = std::sqrt(ue_snr_floor / phi);
        if (t > reach * (1.0 + feasibility_slack))
            throw InfeasibleError("UE SNR floor " + std::to_string(ue_snr_floor) +
                                      " exceeds the largest attainable UE SNR " + std::to_string(phi * reach * reach) +
                                      ".",
                                  phi * reach * reach);

        const EigenMode mode = dominant_eigenmode(gm.user_gram, gm.eavesdropper_gram);
        const Eigen::VectorXd w = mode.direction * (t / mode.direction.dot(h));

        BeamformResult r;
        if (w.cwiseAbs().maxCoeff() < 1.0)
            r = evaluate(gm, drive, BeamVector(w));
        else
        {
            r = evaluate(gm, drive, constrained_qp_fallback(gm, drive, ue_snr_floor, params));
            r.used_fallback = true;
        }
        r.eigenvalue = mode.value;
        return r;
    }

    BeamformResult max_ue_snr_beamformer(const GramMatrices &gm, const DriveConfig &drive, double ed_snr_cap)
    {
        check_gram_shapes(gm);
        if (!(ed_snr_cap > 0.0))
            throw std::invalid_argument("Mean ED SNR cap must be strictly positive.");
        const double phi = drive.snr_coefficient();
        if (!(phi > 0.0))
            throw std::invalid_argument("SNR coefficient must be strictly positive.");

        const EigenMode mode = dominant_eigenmode(gm.user_gram, gm.eavesdropper_gram);
        const Eigen::VectorXd &v = mode.direction;
        const double leak = phi * v.dot(gm.eavesdropper_gram * v);
        Eigen::VectorXd w = v * std::sqrt(ed_snr_cap / leak);

        bool limited = false;
        const double peak = w.cwiseAbs().maxCoeff();
        if (peak > 1.0 + 1e-12)
        {
            w = v / v.cwiseAbs().maxCoeff();
            limited = true;
        }
        BeamformResult r = evaluate(gm, drive, BeamVector(snap_to_box(std::move(w))));
        r.eigenvalue = mode.value;
        r.box_limited = limited;
        return r;
    }

    BeamformResult min_ed_capacity_beamformer(const GramMatrices &gm, const DriveConfig &drive,
                                              double ue_capacity_floor, const FallbackParams &params)
    {
        return min_ed_snr_beamformer(gm, drive, ue_capacity_to_snr(ue_capacity_floor), params);
    }

    BeamformResult max_ue_capacity_beamformer(const GramMatrices &gm, const DriveConfig &drive,
                                              double ed_capacity_cap)
    {
        return max_ue_snr_beamformer(gm, drive, ed_capacity_to_snr(ed_capacity_cap));
    }

    BeamformResult solve_beamformer(const GramMatrices &gm, const DriveConfig &drive, const SnrTarget &target,
                                    const FallbackParams &params)
    {
        const SnrTarget snr = target.as_snr();
        if (snr.kind == TargetKind::ue_snr_floor)
            return min_ed_snr_beamformer(gm, drive, snr.value, params);
        return max_ue_snr_beamformer(gm, drive, snr.value);
    }

    BeamVector constrained_qp_fallback(const GramMatrices &gm, const DriveConfig &drive, double ue_snr_floor,
                                       const FallbackParams &params)
    {
        check_gram_shapes(gm);
        if (!(ue_snr_floor >= 0.0))
            throw std::invalid_argument("UE SNR floor must be non-negative.");
        if (!(params.tolerance > 0.0) || params.max_iterations < 1)
            throw std::invalid_argument("Fallback tolerance and iteration cap must be positive.");
        const double phi = drive.snr_coefficient();
        if (!(phi > 0.0))
            throw std::invalid_argument("SNR coefficient must be strictly positive.");

        const Eigen::VectorXd h = rank_one_factor(gm.user_gram);
        const double hn = h.norm();
        const double t = std::sqrt(ue_snr_floor / phi);
        if (t > h.lpNorm<1>() * (1.0 + feasibility_slack))
        {
            const double reach = h.lpNorm<1>();
            throw InfeasibleError("UE SNR floor is not attainable inside the amplitude box.", phi * reach * reach);
        }

        // Work in normalized units: unit-diagonal-scale objective, unit-norm constraint normal.
        const double scale = gm.eavesdropper_gram.diagonal().cwiseAbs().maxCoeff();
        if (!(scale > 0.0))
            throw std::invalid_argument("Eavesdropper Gram matrix is zero.");
        const Eigen::MatrixXd Q = gm.eavesdropper_gram / scale;
        const Eigen::VectorXd c = h / hn;
        const double tau = std::min(t / hn, h.lpNorm<1>() / hn);

        auto f = [&](const Eigen::VectorXd &x) { return x.dot(Q * x); };
        auto project = [&](const Eigen::VectorXd &z) { return project_feasible(z, c, tau); };

        Eigen::VectorXd x = project(tau * c);
        Eigen::VectorXd y = x;
        double fx = f(x);
        double mom = 1.0;
        double L = 2.0 * Q.diagonal().maxCoeff();

        for (long it = 0; it < params.max_iterations; ++it)
        {
            const Eigen::VectorXd g = 2.0 * (Q * y);
            const double fy = y.dot(Q * y);
            Eigen::VectorXd xn;
            double fxn = 0.0;
            for (;;)
            {
                xn = project(y - g / L);
                fxn = f(xn);
                const Eigen::VectorXd d = xn - y;
                if (fxn <= fy + g.dot(d) + 0.5 * L * d.squaredNorm() + 1e-15 * std::abs(fy))
                    break;
                L *= 2.0;
            }

            if (fxn > fx)
            {
                // a plain projected step cannot increase f except by rounding: x is stationary
                if (mom == 1.0)
                    return BeamVector(x);
                // momentum overshoot: restart from the last iterate
                y = x;
                mom = 1.0;
                continue;
            }

            const double gap = fx - fxn;
            const double step = (xn - x).cwiseAbs().maxCoeff();
            const double mom_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * mom * mom));
            y = xn + ((mom - 1.0) / mom_next) * (xn - x);
            x = std::move(xn);
            fx = fxn;
            mom = mom_next;

            if (gap <= params.tolerance * std::max(fx, 1e-300) && step <= params.tolerance)
            {
                // confirm with the projected-gradient fixed-point residual
                const Eigen::VectorXd r = x - project(x - 2.0 * (Q * x) / L);
                if (r.cwiseAbs().maxCoeff() <= params.tolerance)
                    return BeamVector(x);
            }
        }
        throw ConvergenceError("Box-constrained beamformer did not converge.", params.max_iterations);
    }

    BeamVector brute_force_beamformer(const GramMatrices &gm, const DriveConfig &drive, double ue_snr_floor,
                                      double step)
    {
        check_gram_shapes(gm);
        const Eigen::Index n = gm.user_gram.rows();
        if (n > 3)
            throw std::invalid_argument("Brute-force search supports at most three transmitters.");
        if (!(step > 0.0) || !(step <= 1.0))
            throw std::invalid_argument("Grid step must lie in (0, 1].");

        std::vector<double> levels;
        const long kmax = long(std::floor((1.0 + 1e-12) / step));
        for (long k = -kmax; k <= kmax; ++k)
            levels.push_back(std::clamp(double(k) * step, -1.0, 1.0));

        const double phi = drive.snr_coefficient();
        const Eigen::VectorXd h = rank_one_factor(gm.user_gram);
        const std::size_t base = levels.size();
        std::size_t total = 1;
        for (Eigen::Index i = 0; i < n; ++i)
            total *= base;

        Eigen::VectorXd w(n), best;
        double best_val = std::numeric_limits<double>::infinity();
        for (std::size_t code = 0; code < total; ++code)
        {
            std::size_t rest = code;
            for (Eigen::Index i = 0; i < n; ++i)
            {
                w[i] = levels[rest % base];
                rest /= base;
            }
            const double s = w.dot(h);
            if (phi * s * s < ue_snr_floor)
                continue;
            const double val = w.dot(gm.eavesdropper_gram * w);
            if (val < best_val)
            {
                best_val = val;
                best = w;
            }
        }
        if (best.size() == 0)
        {
            const double reach = h.lpNorm<1>();
            throw InfeasibleError("No grid point meets the UE SNR floor.", phi * reach * reach);
        }
        return BeamVector(best);
    }
}
