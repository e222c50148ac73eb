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

#ifndef VLCSEC_GEOMETRY_HPP
#define VLCSEC_GEOMETRY_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <vector>

namespace vlcsec
{
    // Every sampling routine takes this generator explicitly; there is no global RNG state.
    using Rng = std::mt19937_64;

    // Work-plane coordinates in meters. The frame is centered on the room.
    struct Point2
    {
        double x = 0.0;
        double y = 0.0;

        friend bool operator==(const Point2 &, const Point2 &) = default;
    };

    inline double squared_distance(Point2 a, Point2 b)
    {
        const double dx = a.x - b.x, dy = a.y - b.y;
        return dx * dx + dy * dy;
    }

    // Rectangular room. `height` is the vertical distance between ceiling and work plane.
    struct RoomConfig
    {
        double length = 0.0; // extent along x
        double width = 0.0;  // extent along y
        double height = 0.0;

        void validate() const;
        double area() const { return length * width; }
        bool contains(Point2 p) const;

        friend bool operator==(const RoomConfig &, const RoomConfig &) = default;
    };

    // Axis-aligned rectangle on the work plane.
    struct Rect
    {
        double x_min = 0.0, x_max = 0.0, y_min = 0.0, y_max = 0.0;

        bool contains(Point2 p) const { return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max; }
    };

    // Regular grid of identical coverage cells. Each cell is 2*half_width along x and
    // 2*aspect*half_width along y, centered on its fixture.
    struct CellGrid
    {
        std::size_t rows = 0; // cells along the room length (x)
        std::size_t cols = 0; // cells along the room width (y)
        double edge = 0.0;    // thickness of the uncovered border zone
        double half_width = 0.0;
        double aspect = 1.0;

        friend bool operator==(const CellGrid &, const CellGrid &) = default;
    };

    struct TransmitterLayout
    {
        std::vector<Point2> positions;
        std::optional<CellGrid> cells; // absent for free-form layouts

        std::size_t size() const { return positions.size(); }

        // Coverage rectangle of fixture `index`; requires a grid layout.
        Rect coverage_cell(std::size_t index) const;

        friend bool operator==(const TransmitterLayout &, const TransmitterLayout &) = default;
    };

    // Grid of rows x cols fixtures at the centers of the coverage cells, leaving an
    // edge zone of thickness `edge` along every wall. Index = row * cols + col.
    TransmitterLayout build_grid_layout(const RoomConfig &room, std::size_t rows, std::size_t cols, double edge);

    // Free-form layout (no coverage cells). All positions must lie inside the room.
    TransmitterLayout custom_layout(const RoomConfig &room, std::vector<Point2> positions);

    // Eavesdropper intensity (points per m^2) over the work plane.
    class IntensityField
    {
    public:
        using Density = std::function<double(Point2)>;

        static IntensityField homogeneous(double intensity);

        // `density` must satisfy 0 <= density(p) <= upper_bound everywhere in the room.
        static IntensityField inhomogeneous(Density density, double upper_bound);

        bool is_homogeneous() const { return !density_; }
        double operator()(Point2 p) const;
        double upper_bound() const { return upper_bound_; }

    private:
        IntensityField(Density density, double upper_bound);

        Density density_;
        double upper_bound_ = 0.0;
    };

    // Poisson point process over the room. Inhomogeneous fields are sampled at the
    // upper bound and thinned. The result may be empty.
    std::vector<Point2> sample_ppp(const IntensityField &field, const RoomConfig &room, Rng &rng);

    // One UE uniformly distributed over the coverage cell of fixture `cell_index`.
    Point2 sample_ue(const TransmitterLayout &layout, std::size_t cell_index, Rng &rng);

    // Index of the closest fixture on the work plane; ties go to the lowest index.
    std::size_t nearest_transmitter(const TransmitterLayout &layout, Point2 p);
}

#endif
