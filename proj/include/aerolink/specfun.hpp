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

#include <functional>
#include <vector>

namespace aerolink
{
    // Scaled noncentral chi-squared: 2k degrees of freedom, noncentrality 2*lambda, scale gamma_bar.
    struct NoncentralChi2Params
    {
        double k = 1.0;
        double lambda = 0.0;
        double gamma_bar = 1.0;
    };

    struct KappaMuParams
    {
        double omega = 1.0;
        double kappa = 0.0;
        double mu = 1.0;
    };

    void validate(const NoncentralChi2Params &p);

    // ---- Bessel functions ----------------------------------------------

    // log(exp(-x) I_nu(x)), nu >= -1, x >= 0.
    double log_bessel_i_scaled(double nu, double x);
    double bessel_i_scaled(double nu, double x);
    // Throws std::overflow_error when I_nu(x) is not representable.
    double bessel_i(double nu, double x);

    double bessel_k(double nu, double x);
    double log_bessel_k(double nu, double x);
    double bessel_j0(double x);

    // ---- Gamma-type distributions --------------------------------------

    double chi2_pdf(double k, double x);
    double chi2_cdf(double k, double x);

    double ncchi2_pdf(const NoncentralChi2Params &p, double x);
    double ncchi2_log_pdf(const NoncentralChi2Params &p, double x);
    double ncchi2_cdf(const NoncentralChi2Params &p, double x);
    double ncchi2_sf(const NoncentralChi2Params &p, double x);

    // Generalized Marcum Q-function of real order k.
    double marcum_q(double k, double a, double b);

    // Density of U*V with U ~ Gamma(a, 1), V ~ Gamma(alpha, 1).
    double gk_pdf(double a, double alpha, double x);
    double gk_log_pdf(double a, double alpha, double x);
    double gk_cdf(double a, double alpha, double x);
    // Terms t_i, i < count, with 1 - gk_cdf(b, n, x) = sum_{i<n} t_i for integer n.
    std::vector<double> gk_sf_terms(double b, double x, int count);

    // True when the second-order large-shape expansion replaces the exact form.
    bool gk_use_surrogate(double a, double alpha);
    double gk_surrogate_pdf(double a, double alpha, double x);
    double gk_surrogate_cdf(double a, double alpha, double x);

    KappaMuParams to_kappa_mu(const NoncentralChi2Params &p);
    NoncentralChi2Params from_kappa_mu(const KappaMuParams &p);

    // ---- Miscellaneous ---------------------------------------------------

    double q_func(double x);
    double q_inv(double p);

    double laguerre(int r, double x);
    // L_{1/2}(-K) for K >= 0.
    double laguerre_half_neg(double K);

    struct PoissonWindow
    {
        long long lo = 0;
        long long hi = 0;
    };

    double poisson_log_pmf(long long j, double mean);
    double poisson_pmf(long long j, double mean);
    PoissonWindow poisson_truncation(double mean, double epsilon = 1e-10);

    // ---- Quadrature --------------------------------------------------

    using Integrand = std::function<double(double)>;

    // Adaptive Gauss-Kronrod on a finite interval.
    double integrate(const Integrand &f, double a, double b, double rel_tol = 1e-10);
    // tanh-sinh on a finite interval, tolerant of endpoint singularities.
    double integrate_singular(const Integrand &f, double a, double b, double rel_tol = 1e-10);
    // exp-sinh on [a, inf).
    double integrate_to_inf(const Integrand &f, double a, double rel_tol = 1e-10);
}
