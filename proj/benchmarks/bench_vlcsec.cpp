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

#include <vlcsec/beamform.hpp>
#include <vlcsec/channel.hpp>
#include <vlcsec/geometry.hpp>
#include <vlcsec/montecarlo.hpp>
#include <vlcsec/secrecy.hpp>

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

using namespace vlcsec;

namespace
{
    OpticalFrontEnd front_end()
    {
        const double deg = std::numbers::pi / 180.0;
        return {5.0, 60.0 * deg, 1e-4, 1.5, 60.0 * deg, 0.54, 1.0};
    }

    DriveConfig drive()
    {
        return {14.4, 0.5, std::pow(10.0, -9.835) * 1e-3};
    }

    const RoomConfig room{10.0, 12.0, 3.0};
}

static void BM_EavesdropperGram(benchmark::State &state)
{
    const std::size_t n = std::size_t(state.range(0));
    const TransmitterLayout layout = build_grid_layout(room, n, n, 1.0);
    const ChannelConstants cc = channel_constant(front_end(), room.height);
    const QuadratureSpec spec{std::size_t(state.range(1)), false};
    for (auto _ : state)
        benchmark::DoNotOptimize(eavesdropper_gram(layout, cc, IntensityField::homogeneous(0.05), room, spec));
}
BENCHMARK(BM_EavesdropperGram)->Args({2, 64})->Args({4, 64})->Args({4, 128})->Unit(benchmark::kMillisecond);

static void BM_MinEdBeamformer(benchmark::State &state)
{
    const std::size_t n = std::size_t(state.range(0));
    const TransmitterLayout layout = build_grid_layout(room, n, n, 1.0);
    const ChannelConstants cc = channel_constant(front_end(), room.height);
    const EavesdropperGram ed =
        eavesdropper_gram(layout, cc, IntensityField::homogeneous(0.05), room, QuadratureSpec{64, false});
    const GramMatrices gm = make_gram_matrices(gain_vector(layout, cc, {0.3, -0.2}), ed);
    for (auto _ : state)
        benchmark::DoNotOptimize(min_ed_snr_beamformer(gm, drive(), 100.0));
}
BENCHMARK(BM_MinEdBeamformer)->Arg(2)->Arg(4)->Arg(6);

static void BM_SopClosedForm(benchmark::State &state)
{
    const TransmitterLayout layout = build_grid_layout(room, 4, 4, 1.0);
    const SopModel model =
        build_sop_model(drive(), channel_constant(front_end(), room.height), *layout.cells, 0.05);
    const SecrecyThreshold th = SecrecyThreshold::from_capacity(0.5);
    for (auto _ : state)
        benchmark::DoNotOptimize(sop_closed_form(model, th));
}
BENCHMARK(BM_SopClosedForm);

static void BM_MonteCarloTrials(benchmark::State &state)
{
    const TransmitterLayout layout = build_grid_layout(room, 4, 4, 1.0);
    const ChannelConstants cc = channel_constant(front_end(), room.height);
    TrialConfig tc;
    tc.trials = 10000;
    tc.seed = 1;
    tc.secrecy_threshold = 0.5;
    tc.scenario = Scenario{room, layout, cc, drive(), IntensityField::homogeneous(0.05), 5};
    if (state.range(0) == 1)
        tc.scheme = BeamformingScheme{std::nullopt, eavesdropper_gram(layout, cc, tc.scenario.eavesdroppers, room,
                                                                      QuadratureSpec{64, false})
                                                        .matrix};
    for (auto _ : state)
        benchmark::DoNotOptimize(estimate_sop_bounds(tc));
    state.SetItemsProcessed(state.iterations() * std::int64_t(tc.trials));
}
BENCHMARK(BM_MonteCarloTrials)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
