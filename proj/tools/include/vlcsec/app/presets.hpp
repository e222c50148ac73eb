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

#ifndef VLCSEC_APP_PRESETS_HPP
#define VLCSEC_APP_PRESETS_HPP

#include <string>
#include <string_view>
#include <vector>

namespace vlcsec::app
{
    struct Preset
    {
        std::string name;
        std::string description; // first comment line of the preset file
        std::string text;        // INI
    };

    // Built-in experiment configurations, sorted by name.
    const std::vector<Preset> &presets();
    const Preset *find_preset(std::string_view name);
}

#endif
