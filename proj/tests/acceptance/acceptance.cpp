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

#include "defaults.hpp"

#include <vlcsec/beamform.hpp>
#include <vlcsec/channel.hpp>
#include <vlcsec/geometry.hpp>
#include <vlcsec/montecarlo.hpp>
#include <vlcsec/quadrature.hpp>
#include <vlcsec/secrecy.hpp>
#include <vlcsec/selection.hpp>

#ifdef VLCSEC_HAVE_APP
#include <vlcsec/app/cli.hpp>
#endif

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace vlcsec;
using namespace vlcsec::fixtures;

namespace
{
    struct Verdict
    {
        bool pass = true;
        std::string detail;
    };

    // Collects failed checks; the first few are reported.
    class Checks
    {
    public:
        void expect(bool ok, const std::string &what)
        {
            if (ok)
                return;
            ++failures_;
            if (failures_ <= 3)
                detail_ += (detail_.empty() ? "" : "; ") + what;
        }
        Verdict verdict(const std::string &summary) const
        {
            if (failures_ == 0)
                return {true, summary};
            return {false, summary + "; " + std::to_string(failures_) + " failed: " + detail_};
        }

    private:
        long failures_ = 0;
        std::string detail_;
    };

    std::string fmt(const char *format, double a, double b = 0.0, double c = 0.0, double d = 0.0)
    {
        char buf[256];
        std::snprintf(buf, sizeof buf, format, a, b, c, d);
        return buf;
    }

    double to_db(double x) { return 10.0 * std::log10(x); }

    // SNR of a single full-weight fixture at work-plane distance d, from the full Lambertian model.
    double single_fixture_snr(double d, double height = 3.0)
    {
        const double g = gain_full(reference_front_end(), height, d, false);
        return reference_drive().snr_coefficient() * g * g;
    }

    // ---------------------------------------------------------------------------------------

    Verdict ac1()
    {
        const double m = lambertian_order(deg(60.0));
        return {m == 1.0, fmt("lambertian_order(60 deg) = %.17g", m)};
    }

    Verdict ac2()
    {
        std::mt19937_64 rng(2);
        std::uniform_real_distribution<double> dist(0.0, 15.0), height(0.5, 6.0), half(10.0, 80.0);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i)
        {
            OpticalFrontEnd fe = reference_front_end();
            fe.half_angle = deg(half(rng));
            const double z = height(rng), d = dist(rng);
            const ChannelConstants cc = channel_constant(fe, z);
            const double full = gain_full(fe, z, d, false);
            const double simple = gain_simplified(cc, std::sqrt(d * d + z * z));
            worst = std::max(worst, std::abs(full - simple) / full);
        }
        return {worst <= 1e-12, fmt("max relative difference %.3g over 1000 geometries", worst)};
    }

    Verdict ac3()
    {
        const RoomConfig room{8.0, 8.0, 3.0};
        const TransmitterLayout layout = custom_layout(room, {{2.5, 0.0}, {-2.5, 0.0}});
        const ChannelConstants cc = reference_channel();
        const DriveConfig drive = reference_drive();
        const EavesdropperGram ed = eavesdropper_gram(layout, cc, IntensityField::homogeneous(0.05), room);
        const double rho = db_to_linear(40.0);

        const auto solve = [&](Point2 ue) {
            return min_ed_snr_beamformer(make_gram_matrices(gain_vector(layout, cc, ue), ed), drive, rho).beam;
        };
        const BeamVector a = solve({0.0, 1.0});
        const BeamVector b = solve({2.0, 1.0});

        Checks c;
        c.expect(std::abs(a[0] - a[1]) <= 1e-6, "UE (0,1) components differ");
        c.expect(std::abs(a[0] - 0.3) <= 0.05 && std::abs(a[1] - 0.3) <= 0.05, "UE (0,1) not within 0.05 of 0.3");
        c.expect(std::abs(b[0] - 0.24) <= 0.05, "UE (2,1) w1 not within 0.05 of 0.24");
        c.expect(std::abs(b[1] - 0.02) <= 0.05, fmt("UE (2,1) w2 = %.4f not within 0.05 of 0.02", b[1]));
        return c.verdict(fmt("w*(0,1) = (%.4f, %.4f), w*(2,1) = (%.4f, %.4f)", a[0], a[1], b[0], b[1]));
    }

    Verdict ac4()
    {
        const RoomConfig room{8.0, 8.0, 3.0};
        const ChannelConstants cc = reference_channel();
        const DriveConfig drive = reference_drive();
        const double phi = drive.snr_coefficient();
        std::mt19937_64 rng(4);
        std::uniform_real_distribution<double> pos(-3.5, 3.5), scale(0.2, 0.9);

        Checks c;
        double worst_gap = -1e300;
        for (int inst = 0; inst < 20; ++inst)
        {
            const TransmitterLayout layout = custom_layout(room, {{pos(rng), pos(rng)}, {pos(rng), pos(rng)}});
            const Point2 ue{pos(rng), pos(rng)};
            const Eigen::VectorXd h = gain_vector(layout, cc, ue);
            const EavesdropperGram ed =
                eavesdropper_gram(layout, cc, IntensityField::homogeneous(0.05), room, QuadratureSpec{64, false});
            const GramMatrices gm = make_gram_matrices(h, ed);

            // floor chosen so that the scaled eigen direction stays strictly inside the box
            const Eigen::VectorXd v = ed.matrix.ldlt().solve(h);
            const Eigen::VectorXd w_int = v * (scale(rng) / v.cwiseAbs().maxCoeff());
            const double proj = w_int.dot(h);
            const double rho = phi * proj * proj;

            const BeamformResult bf = min_ed_snr_beamformer(gm, drive, rho);
            c.expect(!bf.used_fallback, "instance " + std::to_string(inst) + " needed the fallback");

            double best = std::numeric_limits<double>::infinity();
            const int n = 400; // step 0.005 over [-1, 1]
            for (int i = 0; i <= n; ++i)
                for (int j = 0; j <= n; ++j)
                {
                    const Eigen::Vector2d w(-1.0 + 0.005 * i, -1.0 + 0.005 * j);
                    const double s = w.dot(h);
                    if (phi * s * s < rho)
                        continue;
                    best = std::min(best, phi * w.dot(ed.matrix * w));
                }
            const double gap = to_db(bf.ed_avg_snr) - to_db(best);
            worst_gap = std::max(worst_gap, gap);
            c.expect(gap <= 0.1, fmt("instance gap %.3f dB", gap));
        }
        return c.verdict(fmt("largest eigen-minus-grid gap %.4f dB over 20 instances", worst_gap));
    }

    Verdict ac5()
    {
        const TransmitterLayout layout = outage_layout();
        const CellGrid &grid = *layout.cells;
        const SopModel model = build_sop_model(reference_drive(), reference_channel(), grid, 0.05);
        const double a = grid.half_width, k = grid.aspect;

        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> ux(-a, a), uy(-k * a, k * a);
        std::vector<double> samples(1000000);
        for (double &s : samples)
        {
            const double dx = ux(rng), dy = uy(rng);
            s = single_fixture_snr(std::hypot(dx, dy));
        }
        const EmpiricalCdf empirical(std::move(samples));
        const double sup = empirical.ks_distance([&](double x) { return ue_snr_cdf(model, x); });

        // at the fit distances the analytic CDF equals the exact-area CDF
        double at_fit = 0.0;
        for (double d : {a, k * a, a * std::sqrt(k * k + 1.0)})
        {
            // SNR falls with distance, so P(SNR <= x) = 1 - P(d_U <= d)
            const double exact = 1.0 - covered_area(a, k, d) / (4.0 * k * a * a);
            const double analytic = ue_snr_cdf(model, single_fixture_snr(d));
            at_fit = std::max(at_fit, std::abs(exact - analytic));
        }

        Checks c;
        c.expect(sup <= 0.01, fmt("sup deviation %.4g > 0.01", sup));
        c.expect(at_fit <= 1e-12, fmt("deviation %.3g at a fit distance", at_fit));
        return c.verdict(fmt("sup deviation %.5f over 1e6 UE draws, %.2g at the fit distances", sup, at_fit));
    }

    Verdict ac6()
    {
        const double lambda = 0.05;
        const SopModel model =
            build_sop_model(reference_drive(), reference_channel(), *outage_layout().cells, lambda);

        // unbounded-plane process approximated by a 40 m x 40 m window around the fixture
        const double half = 20.0;
        std::mt19937_64 rng(6);
        std::poisson_distribution<int> count(lambda * 4.0 * half * half);
        std::uniform_real_distribution<double> coord(-half, half);
        std::vector<double> samples(1000000);
        for (double &s : samples)
        {
            const int n = count(rng);
            double d2 = std::numeric_limits<double>::infinity();
            for (int i = 0; i < n; ++i)
            {
                const double x = coord(rng), y = coord(rng);
                d2 = std::min(d2, x * x + y * y);
            }
            s = std::isinf(d2) ? 0.0 : single_fixture_snr(std::sqrt(d2));
        }
        const EmpiricalCdf empirical(std::move(samples));
        const double ks = empirical.ks_distance([&](double x) { return ed_snr_cdf(model, x); });
        return {ks <= 0.005, fmt("KS statistic %.5f over 1e6 PPP draws", ks)};
    }

    Verdict ac7()
    {
        const TransmitterLayout layout = outage_layout();
        const ChannelConstants cc = reference_channel();
        const DriveConfig drive = reference_drive();

        Checks c;
        double worst = 0.0;
        for (double cth : {0.5, 1.0})
            for (double lambda : {0.02, 0.04, 0.06, 0.08, 0.10})
            {
                const SopModel model = build_sop_model(drive, cc, *layout.cells, lambda);
                const SopBounds cf = sop_closed_form(model, SecrecyThreshold::from_capacity(cth));

                TrialConfig tc;
                tc.trials = 100000;
                tc.seed = 7;
                tc.workers = 4;
                tc.secrecy_threshold = cth;
                tc.scenario = Scenario{outage_room(), layout, cc, drive, IntensityField::homogeneous(lambda), 5};
                const SopEstimates mc = estimate_sop_bounds(tc);

                const double du = std::abs(cf.upper - mc.upper.value);
                const double dl = std::abs(cf.lower - mc.lower.value);
                worst = std::max({worst, du, dl});
                c.expect(du <= std::max(3.0 * mc.upper.std_error, 0.02),
                         fmt("upper at lambda %.2f C_th %.1f off by %.4f", lambda, cth, du));
                c.expect(dl <= std::max(3.0 * mc.lower.std_error, 0.02),
                         fmt("lower at lambda %.2f C_th %.1f off by %.4f", lambda, cth, dl));
            }
        return c.verdict(fmt("largest |closed form - MC| %.4f over 10 points", worst));
    }

    Verdict ac8()
    {
        const SecrecyThreshold th = SecrecyThreshold::from_capacity(0.5);
        std::vector<double> upper;
        for (std::size_t n : {2, 3, 4})
        {
            const TransmitterLayout layout = outage_layout(n, n);
            upper.push_back(
                sop_closed_form(build_sop_model(reference_drive(), reference_channel(), *layout.cells, 0.05), th)
                    .upper);
        }
        const bool ok = upper[0] > upper[1] && upper[1] > upper[2];
        return {ok, fmt("upper bound %.4f (2x2), %.4f (3x3), %.4f (4x4)", upper[0], upper[1], upper[2])};
    }

    // Random grid whose cells are clearly oblong.
    struct RandomGrid
    {
        RoomConfig room;
        TransmitterLayout layout;
        ChannelConstants cc;
        double lambda = 0.0;
    };

    RandomGrid random_grid(std::mt19937_64 &rng)
    {
        std::uniform_int_distribution<int> cells(2, 5);
        std::uniform_real_distribution<double> edge(0.5, 1.5), half(0.8, 1.6), aspect(1.1, 2.0), height(2.5, 3.5),
            lambda(0.01, 0.2);
        RandomGrid g;
        const std::size_t rows = std::size_t(cells(rng)), cols = std::size_t(cells(rng));
        const double e = edge(rng), a = half(rng), k = aspect(rng);
        g.room = {2.0 * (double(rows) * a + e), 2.0 * (k * double(cols) * a + e), height(rng)};
        g.layout = build_grid_layout(g.room, rows, cols, e);
        g.cc = reference_channel(g.room.height);
        g.lambda = lambda(rng);
        return g;
    }

    Verdict ac9()
    {
        std::mt19937_64 rng(9);
        const DriveConfig drive = reference_drive();
        boost::math::quadrature::tanh_sinh<double> integrator;
        Checks c;
        double worst_norm = 0.0;

        for (int trial = 0; trial < 25; ++trial)
        {
            const RandomGrid g = random_grid(rng);
            const SopModel model = build_sop_model(drive, g.cc, *g.layout.cells, g.lambda);
            const auto &y = model.breakpoints;

            // normalization
            double ue_mass = 0.0;
            for (int i = 0; i < 3; ++i)
                ue_mass += integrator.integrate([&](double s) { return ue_snr_pdf(model, s); }, y[i], y[i + 1]);
            // below the SNR at this distance the remaining mass exp(-40) is negligible
            const double far = single_fixture_snr(std::sqrt(40.0 / (g.lambda * std::numbers::pi)), g.room.height);
            const double ed_mass = integrator.integrate([&](double s) { return ed_snr_pdf(model, s); }, far, y[3]);
            worst_norm = std::max({worst_norm, std::abs(ue_mass - 1.0), std::abs(ed_mass - 1.0)});
            c.expect(std::abs(ue_mass - 1.0) <= 1e-6, fmt("UE pdf mass %.9f", ue_mass));
            c.expect(std::abs(ed_mass - 1.0) <= 1e-6, fmt("ED pdf mass %.9f", ed_mass));

            // monotone CDFs on a log grid spanning both supports
            double prev_ue = 0.0, prev_ed = 0.0;
            for (int i = 0; i <= 2000; ++i)
            {
                const double x = y[0] * 1e-3 * std::pow(y[3] / (y[0] * 1e-3), i / 2000.0) * 1.01;
                const double fu = ue_snr_cdf(model, x), fe = ed_snr_cdf(model, x);
                c.expect(fu >= prev_ue && fu >= 0.0 && fu <= 1.0, "UE cdf not monotone");
                c.expect(fe >= prev_ed && fe >= 0.0 && fe <= 1.0, "ED cdf not monotone");
                prev_ue = fu;
                prev_ed = fe;
            }

            // bound ordering and monotonicity in the threshold and intensity
            std::uniform_real_distribution<double> cth(0.0, 2.0);
            const double t0 = cth(rng), t1 = t0 + 0.25;
            const SopBounds b0 = sop_closed_form(model, SecrecyThreshold::from_capacity(t0));
            const SopBounds b1 = sop_closed_form(model, SecrecyThreshold::from_capacity(t1));
            const SopBounds b2 = sop_closed_form(build_sop_model(drive, g.cc, *g.layout.cells, 1.5 * g.lambda),
                                                 SecrecyThreshold::from_capacity(t0));
            c.expect(b0.lower <= b0.upper, "lower bound above upper bound");
            c.expect(b1.upper >= b0.upper && b1.lower >= b0.lower, "SOP decreased with the threshold");
            c.expect(b2.upper >= b0.upper && b2.lower >= b0.lower, "SOP decreased with the intensity");

            // Gram matrix: PSD and independent of a homogeneous intensity
            const QuadratureSpec quad{48, false};
            const EavesdropperGram e1 = eavesdropper_gram(g.layout, g.cc, IntensityField::homogeneous(g.lambda), g.room, quad);
            const EavesdropperGram e2 =
                eavesdropper_gram(g.layout, g.cc, IntensityField::homogeneous(7.0 * g.lambda), g.room, quad);
            const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(e1.matrix);
            c.expect(eig.eigenvalues().minCoeff() >= -1e-12 * eig.eigenvalues().maxCoeff(), "Gram matrix not PSD");
            c.expect((e1.matrix - e2.matrix).norm() <= 1e-12 * e1.matrix.norm(), "Gram matrix depends on lambda");

            // Jensen at sampled UE positions, for selection and for beamforming
            const IntensityQuadrature iq(g.room, IntensityField::homogeneous(g.lambda), quad.nodes);
            std::uniform_real_distribution<double> ux(-0.5 * g.room.length, 0.5 * g.room.length),
                uy(-0.5 * g.room.width, 0.5 * g.room.width), target(10.0, 30.0);
            const double phi = drive.snr_coefficient();
            for (int s = 0; s < 4; ++s)
            {
                const Point2 ue{ux(rng), uy(rng)};
                const Eigen::VectorXd h = gain_vector(g.layout, g.cc, ue);
                const GramMatrices gm = make_gram_matrices(h, e1);
                const SelectionResult sel = select_and_weight(g.layout, g.cc, drive, ue);
                const SelectionMetrics sm = selection_metrics(sel, gm, drive, g.layout, g.cc, iq);
                c.expect(sm.ed_capacity_upper_avg <= capacity_bounds(sm.ed_avg_snr).upper + 1e-12,
                         "Jensen fails for selection");

                const BeamformResult bf = max_ue_snr_beamformer(gm, drive, db_to_linear(target(rng)));
                const double avg = iq.expectation([&](Point2 p) {
                    const double r = bf.beam.weights().dot(gain_vector(g.layout, g.cc, p));
                    return capacity_bounds(phi * r * r).upper;
                });
                const double mean_snr = phi * bf.beam.weights().dot(e1.matrix * bf.beam.weights());
                c.expect(avg <= capacity_bounds(mean_snr).upper + 1e-12, "Jensen fails for beamforming");
            }
        }
        return c.verdict(fmt("25 random grids, worst pdf mass error %.2g", worst_norm));
    }

    Verdict ac10()
    {
#ifdef VLCSEC_HAVE_APP
        Checks c;
        int runs = 0;
        const std::vector<std::vector<std::string>> experiments = {
            {"fig2"},
            {"fig4", "--set", "sweep.user.x_m=0:0.5:5", "--set", "sweep.user.y_m=0:0.5:5"},
            {"fig7", "--set", "montecarlo.trials=20000"},
            {"fig8", "--set", "montecarlo.trials=5000"},
        };
        for (const auto &exp : experiments)
            for (const char *workers : {"1", "4"})
            {
                std::string first;
                for (int rep = 0; rep < 2; ++rep)
                {
                    std::vector<std::string> args = {"vlc-secrecy", "run"};
                    args.insert(args.end(), exp.begin(), exp.end());
                    args.insert(args.end(), {"--seed", "42", "--workers", workers, "--out", "-"});
                    std::ostringstream out, err;
                    const int code = app::run_cli(args, out, err);
                    c.expect(code == 0, exp.front() + " exited with " + std::to_string(code));
                    if (rep == 0)
                        first = out.str();
                    else
                        c.expect(out.str() == first, exp.front() + " output differs between runs");
                    ++runs;
                }
            }
        return c.verdict(std::to_string(runs) + " CLI runs, byte-identical CSV per seed and worker count");
#else
        return {false, "built without the command line tool"};
#endif
    }

    struct Criterion
    {
        const char *name;
        double limit_seconds; // 0: no stated limit
        std::function<Verdict()> run;
    };
}

int main()
{
    const std::vector<Criterion> criteria = {
        {"AC1", 1.0, ac1},   {"AC2", 1.0, ac2},  {"AC3", 10.0, ac3}, {"AC4", 60.0, ac4},
        {"AC5", 30.0, ac5},  {"AC6", 60.0, ac6}, {"AC7", 300.0, ac7}, {"AC8", 10.0, ac8},
        {"AC9", 120.0, ac9}, {"AC10", 0.0, ac10},
    };

    int failed = 0;
    for (const Criterion &cr : criteria)
    {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try
        {
            v = cr.run();
        }
        catch (const std::exception &e)
        {
            v = {false, std::string("threw: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (cr.limit_seconds > 0.0 && seconds > cr.limit_seconds)
        {
            v.pass = false;
            v.detail += fmt("; over the %.0f s limit", cr.limit_seconds);
        }
        std::printf("%-4s %s  %s (%.2f s)\n", cr.name, v.pass ? "PASS" : "FAIL", v.detail.c_str(), seconds);
        std::fflush(stdout);
        failed += v.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
