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

#pragma once

#include "aerolink/geometry.hpp"
#include "aerolink/rng.hpp"

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

namespace aerolink
{
    using cd = std::complex<double>;
    using CVec = std::vector<cd>;

    // Planar array in the yz-plane; element m sits at [0, (i-1) d_h, (j-1) d_v].
    struct UpaGeometry
    {
        int n_h = 1;
        int n_v = 1;
        double d_h = 0.075;
        double d_v = 0.075;
        double wavelength = 0.15;

        int size() const { return n_h * n_v; }
        static UpaGeometry half_wavelength(int n_h, int n_v, double fc);
    };

    void validate(const UpaGeometry &g);

    // 1-based (i, j) for the 1-based element index m.
    std::pair<int, int> ind2sub(int m, int n_h, int n_v);
    Vec3 element_offset(const UpaGeometry &g, int m);

    CVec steering_vector(const UpaGeometry &g, const Vec3 &r);

    struct RicianFactorModel
    {
        double k0 = 10.0;
        double kpi = 10.0;
        bool nlos = false;
    };

    double rician_k(const RicianFactorModel &model, double theta);

    struct AgingState
    {
        double rho = 1.0;
        double rho_bar = 0.0;
        long long t_k = 0;
        double T_s = 1e-5;

        static AgingState from_rho(double rho, long long t_k = 0, double T_s = 1e-5);
    };

    double jakes_rho(long long delta_samples, double T_s, double f_max);
    AgingState make_aging(long long t_k, double T_s, double f_max);

    CVec sample_rician_vector(double K, const CVec &los, Rng &rng);
    void sample_rician_vector(double K, const CVec &los, Rng &rng, CVec &out);
    CVec age_channel(const CVec &h_hat, const AgingState &aging, Rng &rng);
    void age_channel(const CVec &h_hat, double rho, double rho_bar, Rng &rng, CVec &out);

    CVec los_with_doppler(const CVec &alpha, double delta_f, double t, double scale);

    enum class PathLossKind
    {
        UMiLoS,
        UMiAV
    };

    struct PathLossModel
    {
        PathLossKind kind = PathLossKind::UMiLoS;
        double fc = 2e9;
        double h_ut = 1.5; // terminal height, used by UMi-AV
    };

    double path_loss_db(const PathLossModel &model, double d3d);
    double path_loss(const PathLossModel &model, double d3d);
    double los_probability(const PathLossModel &model, double d2d);

    inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
    inline double linear_to_db(double v) { return 10.0 * std::log10(v); }
    inline double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
}
