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

#include "aerolink/channel.hpp"
#include "aerolink/specfun.hpp"

#include <string>
#include <vector>

namespace aerolink
{
    // Composite channel convention: Z = sum_n h_RDn beta_n e^{j theta_n} h_URn.

    enum class PscKind
    {
        Delayed,       // theta_n = -arg(hhat_RDn hhat_URn)
        RandomUniform, // theta_n ~ U[a, b]
        Fixed,         // theta_n given
        LoSBased,      // theta_n = -arg(hbar_RDn hbar_URn)
        IdealBenchmark // theta_n = -arg(h_RDn h_URn) on the current channel, simulation only
    };

    struct PscConfig
    {
        PscKind kind = PscKind::Delayed;
        double a = -3.14159265358979323846;
        double b = 3.14159265358979323846;
        std::vector<double> theta; // Fixed: one value (broadcast) or N values
        int quantization_bits = 0; // 0 = continuous phases
    };

    void validate(const PscConfig &psc);
    std::string to_string(PscKind kind);
    PscKind psc_kind_from_string(const std::string &s);

    struct A2GLink
    {
        int N = 1;
        std::vector<double> beta; // effective amplitudes (per-element path loss folded in)
        double K_ur = 0.0, K_rd = 0.0;
        double rho_ur = 1.0, rho_rd = 1.0;
        double gamma_bar = 1.0;
        CVec los_ur, los_rd; // unit-modulus LoS entries of the estimates; empty = all ones
    };

    void validate(const A2GLink &link);
    cd los_ur_at(const A2GLink &link, int n);
    cd los_rd_at(const A2GLink &link, int n);

    struct GaussianConditioning
    {
        cd mu_z;
        double sigma_z2 = 0.0;
    };

    struct MomentTriple
    {
        double mean = 0.0;
        double variance = 0.0;
        double mu3 = 0.0;
    };

    struct A2GOptions
    {
        double taylor_threshold = 0.05;
        double poisson_eps = 1e-10;
    };

    struct MuZMoments
    {
        double mean_abs2 = 0.0; // E|mu_Z|^2
        double abs_mean2 = 0.0; // |E mu_Z|^2
        double var_abs2 = 0.0;  // Var|mu_Z|^2
        cd mean;                // E mu_Z
        double var = 0.0;       // E|mu_Z|^2 - |E mu_Z|^2
    };

    struct GammaRMatch
    {
        double gamma_bar_R = 1.0;
        double k_R = 1.0;
        double lambda_R = 0.0;
        double mean = 1.0;
        double variance = 1.0;
        bool fallback = false;
    };

    struct A2GCharacterization
    {
        int N = 1;
        double gamma_bar_Z = 1.0, k_Z = 1.0, lambda_Z = 0.0; // per element; totals N k_Z, N lambda_Z
        double gamma_bar_R = 1.0, k_R = 1.0, lambda_R = 0.0;
        double gamma_bar_a2g = 1.0;
        MomentTriple sigma2;
        MuZMoments mu;
        double mean_gamma_r = 1.0, var_gamma_r = 1.0;
        double poisson_eps = 1e-10;
        std::vector<std::string> diagnostics;
    };

    // Per-trial phase resolution; current channels are only read by IdealBenchmark.
    void resolve_phases(const PscConfig &psc, const A2GLink &link, const CVec &hhat_ur, const CVec &hhat_rd,
                        const CVec &h_ur, const CVec &h_rd, Rng &rng, std::vector<double> &theta);
    double quantize_phase(double theta, int bits);

    // E[exp(j Re(conj(omega) Z)) | estimates]
    cd conditional_cf(const A2GLink &link, const std::vector<double> &theta, const CVec &hhat_ur, const CVec &hhat_rd, cd omega);

    GaussianConditioning gaussian_conditioning(const A2GLink &link, const std::vector<double> &theta, const CVec &hhat_ur, const CVec &hhat_rd);

    MomentTriple ncchi2_moments(const NoncentralChi2Params &p);
    MomentTriple ltc_moments(double k, double gamma_bar, const MomentTriple &x);
    NoncentralChi2Params match_ncchi2(const MomentTriple &m);

    MomentTriple sigma_z2_moments(const A2GLink &link);
    // Returns per-element (k, lambda) and the shared scale.
    NoncentralChi2Params sigma_z2_match(const A2GLink &link);

    double rician_envelope_mean(double K);
    // E|hhat_RD hhat_UR|^{2r} for r in {0, 1, 2, ...} or r = 1/2.
    double mu_hat_abs_moment(double r, double K_rd, double K_ur);

    // Mean phase factor E[e^{j theta_n}] for CSI-independent PSCs.
    cd psc_cf_factor(const PscConfig &psc, const A2GLink &link, int n);

    MuZMoments mu_z_moments(const A2GLink &link, const PscConfig &psc, const A2GOptions &opt = {});
    GammaRMatch gamma_r_match(const A2GLink &link, const PscConfig &psc, const A2GOptions &opt = {});

    A2GCharacterization characterize(const A2GLink &link, const PscConfig &psc, const A2GOptions &opt = {});

    double a2g_pdf(const A2GCharacterization &chr, double z);
    double a2g_cdf(const A2GCharacterization &chr, double z);
    double a2g_mean(const A2GCharacterization &chr);

    // Gaussian large-N form; intended for N >= 100.
    double a2g_cdf_asymptotic(const A2GCharacterization &chr, double x);

    double avg_a2g_snr(const A2GLink &link, const PscConfig &psc, const A2GOptions &opt = {});
}
