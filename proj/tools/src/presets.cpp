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

#include "vlcsec/app/presets.hpp"

#include <algorithm>

namespace vlcsec::app
{
    // Generated from tools/presets/*.ini
    std::vector<Preset> embedded_presets();

    namespace
    {
        std::vector<Preset> load()
        {
            std::vector<Preset> all = embedded_presets();
            for (Preset &p : all)
            {
                const auto end = p.text.find('\n');
                const std::string first = p.text.substr(0, end);
                if (first.starts_with(";"))
                    p.description = first.substr(first.find_first_not_of("; "));
            }
            std::sort(all.begin(), all.end(), [](const Preset &a, const Preset &b) { return a.name < b.name; });
            return all;
        }
    }

    const std::vector<Preset> &presets()
    {
        static const std::vector<Preset> all = load();
        return all;
    }

    const Preset *find_preset(std::string_view name)
    {
        for (const Preset &p : presets())
            if (p.name == name)
                return &p;
        return nullptr;
    }
}
