// aerolink - link statistics for RIS-assisted UAV relaying under channel aging
// Copyright (C) 2026 The aerolink authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "aerolink/channel.hpp"
#include "aerolink/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aerolink
{
    UpaGeometry UpaGeometry::half_wavelength(int n_h, int n_v, double fc)
    {
        if (!(fc > 0.0))
            throw std::invalid_argument("UpaGeometry: carrier frequency must be positive");
        const double lam = speed_of_light / fc;
        return {n_h, n_v, 0.5 * lam, 0.5 * lam, lam};
    }

    void validate(const UpaGeometry &g)
    {
        if (g.n_h < 1 || g.n_v < 1)
            throw std::invalid_argument("UpaGeometry: n_h and n_v must be >= 1");
        if (!(g.d_h > 0.0) || !(g.d_v > 0.0) || !(g.wavelength > 0.0))
            throw std::invalid_argument("UpaGeometry: spacings and wavelength must be positive");
    }

    std::pair<int, int> ind2sub(int m, int n_h, int n_v)
    {
        if (n_h < 1 || n_v < 1 || m < 1 || m > n_h * n_v)
            throw std::out_of_range("ind2sub: element index out of range");
        return {(m - 1) % n_h + 1, (m - 1) / n_h + 1};
    }

    Vec3 element_offset(const UpaGeometry &g, int m)
    {
        const auto [i, j] = ind2sub(m, g.n_h, g.n_v);
        return {0.0, (i - 1) * g.d_h, (j - 1) * g.d_v};
    }

    CVec steering_vector(const UpaGeometry &g, const Vec3 &r)
    {
        validate(g);
        if (std::abs(norm(r) - 1.0) > 1e-9)
            throw std::invalid_argument("steering_vector: direction must be a unit vector");
        const int M = g.size();
        const double kw = 2.0 * pi / g.wavelength;
        const double amp = 1.0 / std::sqrt(static_cast<double>(M));
        CVec a(M);
        for (int m = 1; m <= M; ++m)
            a[m - 1] = std::polar(amp, kw * dot(r, element_offset(g, m)));
        return a;
    }

    double rician_k(const RicianFactorModel &model, double theta)
    {
        if (model.nlos)
            return 0.0;
        if (!(model.k0 >= 0.0) || !(model.kpi >= 0.0))
            throw std::invalid_argument("rician_k: factors must be nonnegative");
        if (model.k0 == 0.0)
        {
            if (model.kpi > 0.0)
                throw std::invalid_argument("rician_k: k0 must be positive when kpi > 0");
            return 0.0;
        }
        return model.k0 * std::exp(2.0 / pi * theta * std::log(model.kpi / model.k0));
    }

    AgingState AgingState::from_rho(double rho, long long t_k, double T_s)
    {
        if (!(rho >= -1.0 && rho <= 1.0))
            throw std::invalid_argument("AgingState: rho must lie in [-1, 1]");
        return {rho, std::sqrt(std::max(0.0, 1.0 - rho * rho)), t_k, T_s};
    }

    double jakes_rho(long long delta_samples, double T_s, double f_max)
    {
        if (delta_samples < 0)
            delta_samples = -delta_samples;
        return bessel_j0(2.0 * pi * static_cast<double>(delta_samples) * T_s * f_max);
    }

    AgingState make_aging(long long t_k, double T_s, double f_max)
    {
        return AgingState::from_rho(jakes_rho(t_k, T_s, f_max), t_k, T_s);
    }

    void sample_rician_vector(double K, const CVec &los, Rng &rng, CVec &out)
    {
        if (!(K >= 0.0))
            throw std::invalid_argument("sample_rician_vector: K must be nonnegative");
        const double a = std::sqrt(K / (K + 1.0));
        const double b = 1.0 / std::sqrt(K + 1.0);
        out.resize(los.size());
        for (std::size_t i = 0; i < los.size(); ++i)
            out[i] = a * los[i] + b * rng.cnormal();
    }

    CVec sample_rician_vector(double K, const CVec &los, Rng &rng)
    {
        CVec h;
        sample_rician_vector(K, los, rng, h);
        return h;
    }

    void age_channel(const CVec &h_hat, double rho, double rho_bar, Rng &rng, CVec &out)
    {
        out.resize(h_hat.size());
        for (std::size_t i = 0; i < h_hat.size(); ++i)
            out[i] = rho * h_hat[i] + rho_bar * rng.cnormal();
    }

    CVec age_channel(const CVec &h_hat, const AgingState &aging, Rng &rng)
    {
        if (!(aging.rho >= -1.0 && aging.rho <= 1.0))
            throw std::invalid_argument("age_channel: rho must lie in [-1, 1]");
        CVec h;
        if (aging.rho == 1.0)
            return h_hat;
        age_channel(h_hat, aging.rho, aging.rho_bar, rng, h);
        return h;
    }

    CVec los_with_doppler(const CVec &alpha, double delta_f, double t, double scale)
    {
        const double frac = delta_f * t - std::floor(delta_f * t);
        const cd rot = std::polar(1.0, 2.0 * pi * frac);
        CVec out(alpha.size());
        for (std::size_t i = 0; i < alpha.size(); ++i)
            out[i] = rot * scale * alpha[i];
        return out;
    }

    double path_loss_db(const PathLossModel &model, double d3d)
    {
        if (!(d3d > 0.0))
            throw std::invalid_argument("path_loss: distance must be positive");
        if (!(model.fc > 0.0))
            throw std::invalid_argument("path_loss: carrier frequency must be positive");
        const double f_ghz = model.fc / 1e9;
        switch (model.kind)
        {
        case PathLossKind::UMiLoS:
            return 32.4 + 21.0 * std::log10(d3d) + 20.0 * std::log10(f_ghz);
        case PathLossKind::UMiAV:
            if (!(model.h_ut > 0.0))
                throw std::invalid_argument("path_loss: UMi-AV requires a positive terminal height");
            return 30.9 + (22.25 - 0.5 * std::log10(model.h_ut)) * std::log10(d3d) + 20.0 * std::log10(f_ghz);
        }
        throw std::invalid_argument("path_loss: unknown model");
    }

    double path_loss(const PathLossModel &model, double d3d)
    {
        return std::min(1.0, std::pow(10.0, -path_loss_db(model, d3d) / 10.0));
    }

    double los_probability(const PathLossModel &model, double d2d)
    {
        if (model.kind == PathLossKind::UMiAV && model.h_ut > 22.5)
            return 1.0;
        if (d2d <= 18.0)
            return 1.0;
        return 18.0 / d2d + std::exp(-d2d / 36.0) * (1.0 - 18.0 / d2d);
    }
}
