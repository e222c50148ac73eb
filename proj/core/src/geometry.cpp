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

#include "vlcsec/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace vlcsec
{
    void RoomConfig::validate() const
    {
        if (!(length > 0.0) || !(width > 0.0) || !(height > 0.0))
            throw std::invalid_argument("Room length, width and height must be strictly positive.");
    }

    bool RoomConfig::contains(Point2 p) const
    {
        return std::abs(p.x) <= 0.5 * length && std::abs(p.y) <= 0.5 * width;
    }

    Rect TransmitterLayout::coverage_cell(std::size_t index) const
    {
        if (!cells)
            throw std::invalid_argument("Layout has no coverage cells (free-form layout).");
        if (index >= positions.size())
            throw std::out_of_range("Cell index " + std::to_string(index) + " out of range.");

        const Point2 c = positions[index];
        const double hx = cells->half_width;
        const double hy = cells->aspect * cells->half_width;
        return {c.x - hx, c.x + hx, c.y - hy, c.y + hy};
    }

    TransmitterLayout build_grid_layout(const RoomConfig &room, std::size_t rows, std::size_t cols, double edge)
    {
        room.validate();
        if (rows < 1 || cols < 1)
            throw std::invalid_argument("Grid layout needs at least one row and one column.");
        if (!(edge >= 0.0))
            throw std::invalid_argument("Edge zone thickness cannot be negative.");
        if (!(0.5 * room.length > edge) || !(0.5 * room.width > edge))
            throw std::invalid_argument("Edge zone leaves no room for coverage cells.");

        const double half_width = (0.5 * room.length - edge) / double(rows);
        const double aspect = (0.5 * room.width - edge) / (double(cols) * half_width);

        if (!(half_width > 0.0))
            throw std::invalid_argument("Grid parameters give a non-positive cell half width.");
        if (aspect < 1.0)
            throw std::invalid_argument("Grid parameters give a cell aspect ratio below 1 (aspect = " +
                                        std::to_string(aspect) + "); swap the room axes or adjust rows/cols.");

        TransmitterLayout layout;
        layout.cells = CellGrid{rows, cols, edge, half_width, aspect};
        layout.positions.reserve(rows * cols);

        const double cell_y = aspect * half_width;
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                layout.positions.push_back({-0.5 * room.length + edge + double(2 * r + 1) * half_width,
                                            -0.5 * room.width + edge + double(2 * c + 1) * cell_y});
        return layout;
    }

    TransmitterLayout custom_layout(const RoomConfig &room, std::vector<Point2> positions)
    {
        room.validate();
        if (positions.empty())
            throw std::invalid_argument("A layout needs at least one transmitter.");
        for (const auto &p : positions)
            if (!room.contains(p))
                throw std::invalid_argument("Transmitter at (" + std::to_string(p.x) + ", " + std::to_string(p.y) +
                                            ") lies outside the room.");
        return TransmitterLayout{std::move(positions), std::nullopt};
    }

    IntensityField::IntensityField(Density density, double upper_bound)
        : density_(std::move(density)), upper_bound_(upper_bound)
    {
    }

    IntensityField IntensityField::homogeneous(double intensity)
    {
        if (!(intensity >= 0.0) || !std::isfinite(intensity))
            throw std::invalid_argument("Eavesdropper intensity must be finite and non-negative.");
        return IntensityField(nullptr, intensity);
    }

    IntensityField IntensityField::inhomogeneous(Density density, double upper_bound)
    {
        if (!density)
            throw std::invalid_argument("Inhomogeneous intensity needs a density function.");
        if (!(upper_bound >= 0.0) || !std::isfinite(upper_bound))
            throw std::invalid_argument("Intensity upper bound must be finite and non-negative.");
        return IntensityField(std::move(density), upper_bound);
    }

    double IntensityField::operator()(Point2 p) const
    {
        if (!density_)
            return upper_bound_;
        const double v = density_(p);
        if (!(v >= 0.0) || v > upper_bound_ * (1.0 + 1e-12))
            throw std::domain_error("Intensity density outside [0, upper bound] at (" + std::to_string(p.x) + ", " +
                                    std::to_string(p.y) + ").");
        return v;
    }

    std::vector<Point2> sample_ppp(const IntensityField &field, const RoomConfig &room, Rng &rng)
    {
        room.validate();
        std::vector<Point2> points;
        const double mean_count = field.upper_bound() * room.area();
        if (mean_count <= 0.0)
            return points;

        std::poisson_distribution<long> count_dist(mean_count);
        std::uniform_real_distribution<double> ux(-0.5 * room.length, 0.5 * room.length);
        std::uniform_real_distribution<double> uy(-0.5 * room.width, 0.5 * room.width);

        const long count = count_dist(rng);
        points.reserve(std::size_t(count));

        if (field.is_homogeneous())
        {
            for (long i = 0; i < count; ++i)
            {
                const double x = ux(rng);
                points.push_back({x, uy(rng)});
            }
            return points;
        }

        // Thinning: keep each candidate with probability density / upper bound
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        for (long i = 0; i < count; ++i)
        {
            const double x = ux(rng);
            const Point2 p{x, uy(rng)};
            if (u01(rng) * field.upper_bound() < field(p))
                points.push_back(p);
        }
        return points;
    }

    Point2 sample_ue(const TransmitterLayout &layout, std::size_t cell_index, Rng &rng)
    {
        const Rect cell = layout.coverage_cell(cell_index);
        std::uniform_real_distribution<double> ux(cell.x_min, cell.x_max);
        std::uniform_real_distribution<double> uy(cell.y_min, cell.y_max);
        const double x = ux(rng);
        return {x, uy(rng)};
    }

    std::size_t nearest_transmitter(const TransmitterLayout &layout, Point2 p)
    {
        if (layout.positions.empty())
            throw std::invalid_argument("Layout has no transmitters.");

        std::size_t best = 0;
        double best_d2 = squared_distance(layout.positions[0], p);
        for (std::size_t i = 1; i < layout.positions.size(); ++i)
        {
            const double d2 = squared_distance(layout.positions[i], p);
            if (d2 < best_d2)
            {
                best = i;
                best_d2 = d2;
            }
        }
        return best;
    }
}
