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

#include "vlcsec/secrecy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace vlcsec
{
    namespace
    {
        using std::numbers::pi;

        double clamp01(double p)
        {
            return std::clamp(p, 0.0, 1.0);
        }

        void reject_nan(double x, const char *what)
        {
            if (std::isnan(x))
                throw std::domain_error(std::string(what) + " is NaN.");
        }

        // exp(-x_lo) - exp(-x_hi) for x_hi >= x_lo
        double exp_gap(double x_lo, double x_hi)
        {
            return -std::exp(-x_lo) * std::expm1(-(x_hi - x_lo));
        }

        // gamma(3/2, x_hi) - gamma(3/2, x_lo) for x_hi >= x_lo
        double lower_gamma_gap(double x_lo, double x_hi)
        {
            if (x_lo > 1.5)
                return upper_gamma_3half(x_lo) - upper_gamma_3half(x_hi);
            return lower_gamma_3half(x_hi) - lower_gamma_3half(x_lo);
        }

        double area_fraction_norm(const SopModel &model)
        {
            return 1.0 / (4.0 * model.aspect * model.half_width * model.half_width);
        }
    }

    CapacityBounds capacity_bounds(double snr)
    {
        if (!(snr >= 0.0))
            throw std::invalid_argument("SNR must be non-negative.");
        return {0.5 * std::log1p(snr) / std::numbers::ln2,
                0.5 * std::log1p(2.0 * snr / (pi * std::numbers::e)) / std::numbers::ln2};
    }

    SecrecyCapacityBounds secrecy_capacity_bounds(double ue_snr, double worst_ed_snr)
    {
        if (!(ue_snr >= 0.0) || !(worst_ed_snr >= 0.0))
            throw std::invalid_argument("SNRs must be non-negative.");
        const double pie = pi * std::numbers::e;
        SecrecyCapacityBounds out;
        // (6 gU + 3 pi e) / (pi e gE + 3 pi e) = (1 + 2 gU / (pi e)) / (1 + gE / 3)
        out.lower = 0.5 * (std::log1p(2.0 * ue_snr / pie) - std::log1p(worst_ed_snr / 3.0)) / std::numbers::ln2;
        out.upper = 0.5 * (std::log1p(ue_snr) - std::log1p(worst_ed_snr)) / std::numbers::ln2;
        return out;
    }

    SecrecyThreshold SecrecyThreshold::from_capacity(double bits)
    {
        if (!(bits >= 0.0))
            throw std::invalid_argument("Secrecy capacity threshold must be non-negative.");
        const double b = std::exp2(2.0 * bits);
        return {bits, pi * std::numbers::e * b / 6.0, b};
    }

    double SopModel::squared_distance_at(double snr) const
    {
        return std::pow(snr / snr_scale, -1.0 / (lambertian_m + 3.0)) - height * height;
    }

    SopModel build_sop_model(const DriveConfig &drive, const ChannelConstants &cc, const CellGrid &cell,
                             double intensity)
    {
        drive.validate();
        if (!(cc.gain_constant > 0.0) || !(cc.height > 0.0) || !(cc.lambertian_m > 0.0))
            throw std::invalid_argument("Channel constants must be strictly positive.");
        if (!(cell.half_width > 0.0))
            throw std::invalid_argument("Cell half-width must be strictly positive.");
        if (!(cell.aspect >= min_aspect))
            throw std::domain_error("Cell aspect ratio " + std::to_string(cell.aspect) +
                                    " is too close to 1 for the piecewise area fit (need > 1.001).");
        if (!(intensity > 0.0))
            throw std::invalid_argument("Eavesdropper intensity must be strictly positive.");

        SopModel model;
        model.snr_scale = snr_scale(drive, cc);
        model.lambertian_m = cc.lambertian_m;
        model.height = cc.height;
        model.half_width = cell.half_width;
        model.aspect = cell.aspect;
        model.intensity = intensity;

        const double a = cell.half_width, k = cell.aspect, z2 = cc.height * cc.height;
        const double n = cc.exponent();
        model.breakpoints = {model.snr_scale * std::pow(a * a * (1.0 + k * k) + z2, -n),
                             model.snr_scale * std::pow(a * a * k * k + z2, -n),
                             model.snr_scale * std::pow(a * a + z2, -n), model.snr_scale * std::pow(z2, -n)};

        const double r = std::sqrt(k * k + 1.0);
        const double s = std::sqrt(k * k - 1.0);
        const double ac = std::acos(1.0 / k);
        AreaFit &f = model.fit;
        f.inner_slope = (2.0 * s / (k * k) - 2.0 * ac) / (a * (k - 1.0));
        f.inner_intercept = pi - a * f.inner_slope;
        f.outer_slope = 2.0 * (ac - std::acos(1.0 / r) - std::acos(k / r) + 2.0 * k / (k * k + 1.0) - s / (k * k)) /
                        (a * (r - k));
        f.outer_intercept = pi - 2.0 * (ac - s / (k * k)) - k * a * f.outer_slope;
        return model;
    }

    double covered_area(double half_width, double aspect, double d)
    {
        if (!(half_width > 0.0) || !(aspect >= 1.0))
            throw std::invalid_argument("Cell must have positive half-width and aspect >= 1.");
        if (!(d >= 0.0))
            throw std::domain_error("Distance must be non-negative.");
        const double a = half_width, ka = aspect * half_width;
        const double d2 = d * d;
        if (d <= a)
            return pi * d2;
        double area = pi * d2 - 2.0 * (d2 * std::acos(a / d) - a * std::sqrt(d2 - a * a));
        if (d <= ka)
            return area;
        if (d >= std::hypot(a, ka))
            return 4.0 * a * ka;
        area -= 2.0 * (d2 * std::acos(ka / d) - ka * std::sqrt(d2 - ka * ka));
        return area;
    }

    double approx_area_ratio(const SopModel &model, double d)
    {
        reject_nan(d, "Distance");
        const double a = model.half_width, k = model.aspect;
        if (d <= a)
            return pi;
        if (d <= k * a)
            return model.fit.inner_slope * d + model.fit.inner_intercept;
        if (d <= a * std::sqrt(k * k + 1.0))
            return model.fit.outer_slope * d + model.fit.outer_intercept;
        return 4.0 * k * a * a / (d * d);
    }

    double ue_snr_cdf(const SopModel &model, double snr)
    {
        reject_nan(snr, "UE SNR");
        const auto &y = model.breakpoints;
        if (snr <= y[0])
            return 0.0;
        if (snr >= y[3])
            return 1.0;
        const double u = std::max(0.0, model.squared_distance_at(snr));
        const double d = std::sqrt(u);
        const AreaFit &f = model.fit;
        double covered = 0.0;
        if (snr <= y[1])
            covered = f.outer_intercept * u + f.outer_slope * u * d;
        else if (snr <= y[2])
            covered = f.inner_intercept * u + f.inner_slope * u * d;
        else
            covered = pi * u;
        return clamp01(1.0 - covered * area_fraction_norm(model));
    }

    double ue_snr_pdf(const SopModel &model, double snr)
    {
        reject_nan(snr, "UE SNR");
        const auto &y = model.breakpoints;
        if (snr <= y[0] || snr > y[3])
            return 0.0;
        const double n = model.lambertian_m + 3.0;
        const double s = std::pow(snr / model.snr_scale, -1.0 / n);
        const double d = std::sqrt(std::max(0.0, s - model.height * model.height));
        const double denom = 8.0 * model.half_width * model.half_width * model.aspect * n * snr;
        const AreaFit &f = model.fit;
        if (snr <= y[1])
            return s * (3.0 * f.outer_slope * d + 2.0 * f.outer_intercept) / denom;
        if (snr <= y[2])
            return s * (3.0 * f.inner_slope * d + 2.0 * f.inner_intercept) / denom;
        return 2.0 * pi * s / denom;
    }

    double ed_snr_cdf(const SopModel &model, double snr)
    {
        reject_nan(snr, "Eavesdropper SNR");
        if (snr <= 0.0)
            return 0.0;
        if (snr >= model.breakpoints[3])
            return 1.0;
        const double u = std::max(0.0, model.squared_distance_at(snr));
        return clamp01(std::exp(-model.intensity * pi * u));
    }

    double ed_snr_pdf(const SopModel &model, double snr)
    {
        reject_nan(snr, "Eavesdropper SNR");
        if (snr <= 0.0 || snr > model.breakpoints[3])
            return 0.0;
        const double n = model.lambertian_m + 3.0;
        const double s = std::pow(snr / model.snr_scale, -1.0 / n);
        const double u = std::max(0.0, s - model.height * model.height);
        return model.intensity * pi * s / (snr * n) * std::exp(-model.intensity * pi * u);
    }

    double upper_gamma_3half(double x)
    {
        if (!(x >= 0.0))
            throw std::domain_error("Incomplete gamma argument must be non-negative.");
        const double r = std::sqrt(x);
        return 0.5 * std::sqrt(pi) * std::erfc(r) + r * std::exp(-x);
    }

    double lower_gamma_3half(double x)
    {
        if (!(x >= 0.0))
            throw std::domain_error("Incomplete gamma argument must be non-negative.");
        if (x > 2.0)
            return 0.5 * std::sqrt(pi) - upper_gamma_3half(x);
        // x^s e^-x sum_k x^k / (s (s+1) ... (s+k)), s = 3/2
        double term = 1.0 / 1.5, sum = term;
        for (int k = 1; k < 60; ++k)
        {
            term *= x / (1.5 + k);
            sum += term;
            if (term < 1e-17 * sum)
                break;
        }
        return x * std::sqrt(x) * std::exp(-x) * sum;
    }

    SopTerms sop_terms(const SopModel &model, double ratio)
    {
        if (!(ratio >= 1.0))
            throw std::invalid_argument("Outage SNR ratio must be at least 1.");
        const double n = model.lambertian_m + 3.0;
        const double c = std::pow(ratio, 1.0 / n);
        const double lp = model.intensity * pi;
        const double beta = lp * c;
        const double z2 = model.height * model.height;
        const double a = model.half_width, k = model.aspect;
        const double u1 = a * a * (1.0 + k * k), u2 = a * a * k * k, u3 = a * a;

        // F_E(y / ratio) = E * exp(-beta u) with E = F_E(y4 / ratio)
        const double log_e = lp * z2 * (1.0 - c);
        const double E = std::exp(log_e);
        const double norm = E * area_fraction_norm(model);
        const double b15 = beta * std::sqrt(beta);
        const AreaFit &f = model.fit;

        SopTerms t;
        t.f_far = E;
        t.j1 = norm * (f.outer_intercept * exp_gap(beta * u2, beta * u1) / beta +
                       1.5 * f.outer_slope * lower_gamma_gap(beta * u2, beta * u1) / b15);
        t.j2 = norm * (f.inner_intercept * exp_gap(beta * u3, beta * u2) / beta +
                       1.5 * f.inner_slope * lower_gamma_gap(beta * u3, beta * u2) / b15);
        t.j3 = norm * pi * (-std::expm1(-beta * u3)) / beta;
        t.tail = -std::expm1(log_e);
        t.value = clamp01(t.f_far - t.j1 - t.j2 - t.j3 + t.tail);
        return t;
    }

    SopBounds sop_closed_form(const SopModel &model, const SecrecyThreshold &threshold)
    {
        if (!(model.intensity > 0.0) || !(model.snr_scale > 0.0) || !(model.aspect >= min_aspect))
            throw std::invalid_argument("SOP model is not valid.");
        return {sop_terms(model, threshold.upper_ratio).value, sop_terms(model, threshold.lower_ratio).value};
    }
}
