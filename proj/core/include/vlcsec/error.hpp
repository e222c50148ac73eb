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

#ifndef VLCSEC_ERROR_HPP
#define VLCSEC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace vlcsec
{
    // Invalid arguments are reported with std::invalid_argument / std::domain_error /
    // std::out_of_range. The types below mark failures of the numerics themselves:
    // a well-posed request that has no solution or that a solver could not finish.
    class NumericalError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // The UE SNR requirement cannot be met by any weight vector inside the box.
    class InfeasibleError : public NumericalError
    {
    public:
        InfeasibleError(const std::string &what, double max_attainable_snr)
            : NumericalError(what), max_attainable_snr_(max_attainable_snr) {}

        // Largest UE SNR (linear) reachable under |w| <= 1.
        double max_attainable_snr() const noexcept { return max_attainable_snr_; }

    private:
        double max_attainable_snr_;
    };

    // The eavesdropper Gram matrix is singular or too ill-conditioned to invert.
    // The optimal direction then lies in its null space, which is not solved for.
    class SingularMatrixError : public NumericalError
    {
    public:
        SingularMatrixError(const std::string &what, double condition_estimate)
            : NumericalError(what), condition_estimate_(condition_estimate) {}

        double condition_estimate() const noexcept { return condition_estimate_; }

    private:
        double condition_estimate_;
    };

    class ConvergenceError : public NumericalError
    {
    public:
        ConvergenceError(const std::string &what, long iterations)
            : NumericalError(what), iterations_(iterations) {}

        long iterations() const noexcept { return iterations_; }

    private:
        long iterations_;
    };
}

#endif
