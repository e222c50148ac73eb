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

#ifndef VLCSEC_QUADRATURE_HPP
#define VLCSEC_QUADRATURE_HPP

#include "vlcsec/geometry.hpp"

#include <cstddef>
#include <vector>

namespace vlcsec
{
    struct QuadratureSpec
    {
        std::size_t nodes = 128;   // Gauss-Legendre nodes per axis
        bool richardson = true;    // also evaluate at 2 * nodes and report the difference
    };

    // n-point Gauss-Legendre rule on [-1, 1], nodes ascending.
    struct GaussLegendreRule
    {
        std::vector<double> nodes;
        std::vector<double> weights;
    };

    GaussLegendreRule gauss_legendre(std::size_t n);

    // Tensor-product rule over the room whose weights already include the normalized
    // eavesdropper density lambda(x, y) / N_E, so that sum_k w_k f(p_k) approximates
    // the expectation of f at a single eavesdropper location.
    class IntensityQuadrature
    {
    public:
        IntensityQuadrature(const RoomConfig &room, const IntensityField &field, std::size_t nodes_per_axis);

        const std::vector<Point2> &points() const { return points_; }
        const std::vector<double> &weights() const { return weights_; }

        // Integral of the intensity over the room (the mean eavesdropper count).
        double expected_count() const { return expected_count_; }

        template <class F>
        double expectation(F &&f) const
        {
            double acc = 0.0;
            for (std::size_t k = 0; k < points_.size(); ++k)
                acc += weights_[k] * f(points_[k]);
            return acc;
        }

    private:
        std::vector<Point2> points_;
        std::vector<double> weights_;
        double expected_count_ = 0.0;
    };
}

#endif
