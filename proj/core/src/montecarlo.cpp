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

#include "vlcsec/montecarlo.hpp"
#include "vlcsec/secrecy.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>

namespace vlcsec
{
    namespace
    {
        struct OutageCounts
        {
            std::size_t upper = 0;
            std::size_t lower = 0;
        };

        BeamVector trial_beam(const Scheme &scheme, const Scenario &sc, Point2 ue)
        {
            const std::size_t nearest = nearest_transmitter(sc.layout, ue);
            if (const auto *sel = std::get_if<SelectionScheme>(&scheme))
                return BeamVector::unit(sc.layout.size(), nearest, sel->weight);

            const auto &bf = std::get<BeamformingScheme>(scheme);
            const GramMatrices gm{user_gram(gain_vector(sc.layout, sc.channel, ue)), bf.eavesdropper_gram, 0.0};
            if (bf.target)
                return solve_beamformer(gm, sc.drive, *bf.target).beam;
            const Eigen::Index i = Eigen::Index(nearest);
            const double cap = sc.drive.snr_coefficient() * bf.eavesdropper_gram(i, i);
            return max_ue_snr_beamformer(gm, sc.drive, cap).beam;
        }

        OutageCounts run_block(const TrialConfig &cfg, std::size_t trials, std::uint64_t seed)
        {
            const Scenario &sc = cfg.scenario;
            Rng rng(seed);
            OutageCounts out;
            for (std::size_t t = 0; t < trials; ++t)
            {
                const Point2 ue = sample_ue(sc.layout, sc.ue_cell, rng);
                const std::vector<Point2> eds = sample_ppp(sc.eavesdroppers, sc.room, rng);
                const BeamVector w = trial_beam(cfg.scheme, sc, ue);
                const double gu = peak_snr(w, gain_vector(sc.layout, sc.channel, ue), sc.drive);
                const double ge = worst_ed_snr(w, eds, sc.layout, sc.channel, sc.drive);
                const SecrecyCapacityBounds cs = secrecy_capacity_bounds(gu, ge);
                if (cs.lower <= cfg.secrecy_threshold)
                    ++out.upper;
                if (cs.upper <= cfg.secrecy_threshold)
                    ++out.lower;
            }
            return out;
        }

        Estimate binomial(std::size_t hits, std::size_t n)
        {
            const double p = double(hits) / double(n);
            return {p, std::sqrt(p * (1.0 - p) / double(n)), n};
        }

        void validate(const TrialConfig &cfg)
        {
            if (cfg.trials < 1)
                throw std::invalid_argument("At least one trial is required.");
            if (cfg.workers < 1)
                throw std::invalid_argument("At least one worker is required.");
            if (!(cfg.secrecy_threshold >= 0.0))
                throw std::invalid_argument("Secrecy threshold must be non-negative.");
            cfg.scenario.room.validate();
            cfg.scenario.drive.validate();
            if (!cfg.scenario.layout.cells)
                throw std::invalid_argument("Monte Carlo trials need a grid layout to place the UE.");
            if (cfg.scenario.ue_cell >= cfg.scenario.layout.size())
                throw std::out_of_range("UE cell index out of range.");
            if (const auto *bf = std::get_if<BeamformingScheme>(&cfg.scheme))
            {
                const Eigen::Index n = Eigen::Index(cfg.scenario.layout.size());
                if (bf->eavesdropper_gram.rows() != n || bf->eavesdropper_gram.cols() != n)
                    throw std::invalid_argument("Eavesdropper Gram matrix does not match the layout size.");
            }
            else if (const auto *sel = std::get_if<SelectionScheme>(&cfg.scheme))
            {
                if (!(sel->weight >= 0.0) || !(sel->weight <= 1.0))
                    throw std::invalid_argument("Selection weight must lie in [0, 1].");
            }
        }
    }

    SopEstimates estimate_sop_bounds(const TrialConfig &cfg)
    {
        validate(cfg);
        const std::size_t workers = std::min(cfg.workers, cfg.trials);
        std::vector<OutageCounts> parts(workers);

        auto block = [&](std::size_t k) {
            const std::size_t begin = k * cfg.trials / workers;
            const std::size_t end = (k + 1) * cfg.trials / workers;
            parts[k] = run_block(cfg, end - begin, derive_seed(cfg.seed, k));
        };

        if (workers == 1)
            block(0);
        else
        {
            std::vector<std::exception_ptr> errors(workers);
            std::vector<std::thread> pool;
            pool.reserve(workers);
            for (std::size_t k = 0; k < workers; ++k)
                pool.emplace_back([&, k] {
                    try
                    {
                        block(k);
                    }
                    catch (...)
                    {
                        errors[k] = std::current_exception();
                    }
                });
            for (auto &t : pool)
                t.join();
            for (auto &e : errors)
                if (e)
                    std::rethrow_exception(e);
        }

        OutageCounts total;
        for (const auto &p : parts)
        {
            total.upper += p.upper;
            total.lower += p.lower;
        }
        return {binomial(total.upper, cfg.trials), binomial(total.lower, cfg.trials)};
    }

    Estimate estimate_sop(const TrialConfig &cfg, SopBound bound)
    {
        const SopEstimates both = estimate_sop_bounds(cfg);
        return bound == SopBound::upper ? both.upper : both.lower;
    }

    Point2 sample_single_eavesdropper(const IntensityField &field, const RoomConfig &room, Rng &rng)
    {
        std::uniform_real_distribution<double> ux(-0.5 * room.length, 0.5 * room.length);
        std::uniform_real_distribution<double> uy(-0.5 * room.width, 0.5 * room.width);
        if (field.is_homogeneous())
            return {ux(rng), uy(rng)};
        if (!(field.upper_bound() > 0.0))
            throw std::invalid_argument("Eavesdropper intensity is zero.");
        std::uniform_real_distribution<double> accept(0.0, field.upper_bound());
        for (;;)
        {
            const Point2 p{ux(rng), uy(rng)};
            if (accept(rng) < field(p))
                return p;
        }
    }

    Estimate estimate_avg_ed_snr(const BeamVector &w, const Scenario &scenario, std::size_t trials,
                                 std::uint64_t seed)
    {
        if (trials < 1)
            throw std::invalid_argument("At least one trial is required.");
        if (w.size() != scenario.layout.size())
            throw std::invalid_argument("Beam vector does not match the layout size.");
        scenario.room.validate();
        if (!(scenario.eavesdroppers.upper_bound() > 0.0))
            throw std::invalid_argument("Eavesdropper intensity is zero.");

        Rng rng(seed);
        double mean = 0.0, m2 = 0.0;
        for (std::size_t t = 0; t < trials; ++t)
        {
            const Point2 p = sample_single_eavesdropper(scenario.eavesdroppers, scenario.room, rng);
            const double x = peak_snr(w, gain_vector(scenario.layout, scenario.channel, p), scenario.drive);
            const double delta = x - mean;
            mean += delta / double(t + 1);
            m2 += delta * (x - mean);
        }
        const double var = trials > 1 ? m2 / double(trials - 1) : 0.0;
        return {mean, std::sqrt(var / double(trials)), trials};
    }

    EmpiricalCdf::EmpiricalCdf(std::vector<double> samples) : sorted_(std::move(samples))
    {
        if (sorted_.empty())
            throw std::invalid_argument("Empirical CDF needs at least one sample.");
        for (double x : sorted_)
            if (std::isnan(x))
                throw std::domain_error("Empirical CDF sample is NaN.");
        std::sort(sorted_.begin(), sorted_.end());
    }

    double EmpiricalCdf::operator()(double x) const
    {
        const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
        return double(it - sorted_.begin()) / double(sorted_.size());
    }

    double EmpiricalCdf::ks_distance(const std::function<double(double)> &cdf) const
    {
        const double n = double(sorted_.size());
        double sup = 0.0;
        for (std::size_t i = 0; i < sorted_.size(); ++i)
        {
            // compare F at each jump against the empirical values just before and at the jump
            const double f = cdf(sorted_[i]);
            sup = std::max({sup, std::abs(f - double(i) / n), std::abs(double(i + 1) / n - f)});
        }
        return sup;
    }

    double worst_ed_snr(const BeamVector &w, const std::vector<Point2> &eavesdroppers,
                        const TransmitterLayout &layout, const ChannelConstants &cc, const DriveConfig &drive)
    {
        double worst = 0.0;
        for (const Point2 &p : eavesdroppers)
            worst = std::max(worst, peak_snr(w, gain_vector(layout, cc, p), drive));
        return worst;
    }

    std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream)
    {
        std::uint64_t z = master + (stream + 1) * 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
}
