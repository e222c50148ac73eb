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

#include "vlcsec/quadrature.hpp"

#include <boost/math/special_functions/legendre.hpp>

#include <algorithm>
#include <stdexcept>

namespace vlcsec
{
    GaussLegendreRule gauss_legendre(std::size_t n)
    {
        if (n < 1)
            throw std::invalid_argument("Gauss-Legendre rule needs at least one node.");

        // Boost returns the non-negative zeros only, ascending from 0 (or from the smallest positive)
        const std::vector<double> half = boost::math::legendre_p_zeros<double>(int(n));

        GaussLegendreRule rule;
        rule.nodes.reserve(n);
        for (auto it = half.rbegin(); it != half.rend(); ++it)
            if (*it != 0.0)
                rule.nodes.push_back(-*it);
        for (double x : half)
            rule.nodes.push_back(x);

        rule.weights.reserve(n);
        for (double x : rule.nodes)
        {
            const double dp = boost::math::legendre_p_prime(int(n), x);
            rule.weights.push_back(2.0 / ((1.0 - x * x) * dp * dp));
        }
        if (rule.nodes.size() != n)
            throw std::logic_error("Gauss-Legendre node count mismatch.");
        return rule;
    }

    IntensityQuadrature::IntensityQuadrature(const RoomConfig &room, const IntensityField &field,
                                             std::size_t nodes_per_axis)
    {
        room.validate();
        const GaussLegendreRule rule = gauss_legendre(nodes_per_axis);
        const std::size_t n = rule.nodes.size();
        const double hx = 0.5 * room.length, hy = 0.5 * room.width;

        points_.reserve(n * n);
        weights_.reserve(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                points_.push_back({hx * rule.nodes[i], hy * rule.nodes[j]});

        if (field.is_homogeneous())
        {
            if (!(field.upper_bound() > 0.0))
                throw std::invalid_argument("Eavesdropper intensity is zero: the average over eavesdroppers is undefined.");
            expected_count_ = field.upper_bound() * room.area();
            // lambda / N_E = 1 / area exactly, so the weights do not depend on lambda
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    weights_.push_back(0.25 * rule.weights[i] * rule.weights[j]);
            return;
        }

        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
            {
                const double w = hx * hy * rule.weights[i] * rule.weights[j] * field(points_[i * n + j]);
                weights_.push_back(w);
                total += w;
            }
        if (!(total > 0.0))
            throw std::invalid_argument("Eavesdropper intensity integrates to zero over the room.");
        expected_count_ = total;
        for (double &w : weights_)
            w /= total;
    }
}
