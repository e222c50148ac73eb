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

#include <vlcsec/quadrature.hpp>

#include <boost/math/quadrature/gauss.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

using namespace vlcsec;

TEST(GaussLegendre, MatchesTabulatedRule)
{
    using Rule = boost::math::quadrature::gauss<double, 20>;
    const auto rule = gauss_legendre(20);
    const auto &abs = Rule::abscissa();
    const auto &wts = Rule::weights();
    // tabulated rule stores the non-negative half, ascending
    for (std::size_t k = 0; k < abs.size(); ++k)
    {
        EXPECT_NEAR(rule.nodes[10 + k], abs[k], 1e-15);
        EXPECT_NEAR(rule.nodes[9 - k], -abs[k], 1e-15);
        EXPECT_NEAR(rule.weights[10 + k], wts[k], 1e-14);
        EXPECT_NEAR(rule.weights[9 - k], wts[k], 1e-14);
    }
}

TEST(GaussLegendre, ExactForPolynomialsUpToDegree2nMinus1)
{
    for (std::size_t n : {1u, 2u, 5u, 8u, 33u})
    {
        const auto rule = gauss_legendre(n);
        ASSERT_EQ(rule.nodes.size(), n);
        for (std::size_t p = 0; p < 2 * n; ++p)
        {
            double acc = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                acc += rule.weights[k] * std::pow(rule.nodes[k], double(p));
            const double exact = p % 2 ? 0.0 : 2.0 / double(p + 1);
            EXPECT_NEAR(acc, exact, 1e-13) << "n=" << n << " p=" << p;
        }
    }
    EXPECT_THROW(gauss_legendre(0), std::invalid_argument);
}

TEST(IntensityQuadrature, HomogeneousWeightsSumToOneAndGiveUniformMoments)
{
    const RoomConfig room{10.0, 12.0, 3.0};
    const IntensityQuadrature q(room, IntensityField::homogeneous(0.05), 16);
    EXPECT_NEAR(std::accumulate(q.weights().begin(), q.weights().end(), 0.0), 1.0, 1e-14);
    EXPECT_NEAR(q.expectation([](Point2 p) { return p.x * p.x; }), 100.0 / 12.0, 1e-12);
    EXPECT_NEAR(q.expectation([](Point2 p) { return p.y * p.y; }), 144.0 / 12.0, 1e-12);
    EXPECT_NEAR(q.expected_count(), 6.0, 1e-12);
}

TEST(IntensityQuadrature, HomogeneousWeightsDoNotDependOnIntensity)
{
    const RoomConfig room{8.0, 8.0, 3.0};
    const IntensityQuadrature a(room, IntensityField::homogeneous(0.01), 32);
    const IntensityQuadrature b(room, IntensityField::homogeneous(3.7), 32);
    EXPECT_EQ(a.weights(), b.weights());
}

TEST(IntensityQuadrature, InhomogeneousNormalization)
{
    // density proportional to 1 + x / 5 on a 10 x 10 room: mean of x is 100/12/5
    const RoomConfig room{10.0, 10.0, 3.0};
    const auto field = IntensityField::inhomogeneous([](Point2 p) { return 0.1 * (1.0 + p.x / 5.0); }, 0.2);
    const IntensityQuadrature q(room, field, 16);
    EXPECT_NEAR(q.expected_count(), 10.0, 1e-12);
    EXPECT_NEAR(q.expectation([](Point2 p) { return p.x; }), 100.0 / 12.0 / 5.0, 1e-12);
}

TEST(IntensityQuadrature, ZeroIntensityIsRejected)
{
    const RoomConfig room{8.0, 8.0, 3.0};
    EXPECT_THROW(IntensityQuadrature(room, IntensityField::homogeneous(0.0), 8), std::invalid_argument);
}
