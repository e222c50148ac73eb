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

#ifndef VLCSEC_APP_CLI_HPP
#define VLCSEC_APP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace vlcsec::app
{
    inline constexpr int exit_ok = 0;
    inline constexpr int exit_config_error = 1;
    inline constexpr int exit_numerical_error = 2;

    // Entry point of vlc-secrecy. args[0] is the program name.
    int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
}

#endif
