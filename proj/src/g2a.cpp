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

#include "aerolink/g2a.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace aerolink
{
    namespace
    {
        constexpr double ninf = -std::numeric_limits<double>::infinity();

        // n * log(v) with 0 * log(0) = 0
        double xlogy(double n, double v)
        {
            if (n == 0.0)
                return 0.0;
            return v > 0.0 ? n * std::log(v) : ninf;
        }

        double log_binom(int n, int k)
        {
            return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
        }
    }

    void validate(const G2ALink &link)
    {
        if (link.M < 1)
            throw std::invalid_argument("G2ALink: M must be >= 1");
        if (!(link.K >= 0.0) || !std::isfinite(link.K))
            throw std::invalid_argument("G2ALink: K must be finite and nonnegative");
        if (!(link.rho >= -1.0 && link.rho <= 1.0))
            throw std::invalid_argument("G2ALink: rho must lie in [-1, 1]");
        if (!(link.gamma_bar > 0.0) || !std::isfinite(link.gamma_bar))
            throw std::invalid_argument("G2ALink: gamma_bar must be positive");
        if (!link.los.empty() && static_cast<int>(link.los.size()) != link.M)
            throw std::invalid_argument("G2ALink: LoS vector length must equal M");
    }

    G2AMixture mixture_params(const G2ALink &link)
    {
        validate(link);
        const int M = link.M;
        const double K = link.K;
        const double r2 = link.rho * link.rho;
        const double rb2 = std::max(0.0, 1.0 - r2);
        const double den = K * rb2 + 1.0;

        G2AMixture mix;
        mix.lambda = M * K * r2 / den;
        mix.gamma_bar = link.gamma_bar * den / (K + 1.0);
        mix.weights.resize(M);
        mix.dofs.resize(M);
        // binomial(M-1, a) with a = rb2 (K+1)/den and 1 - a = r2/den
        const double a = rb2 * (K + 1.0) / den;
        const double b = r2 / den;
        for (int m = 0; m < M; ++m)
        {
            const double lw = log_binom(M - 1, m) + xlogy(m, a) + xlogy(M - 1 - m, b);
            mix.weights[m] = std::exp(lw);
            mix.dofs[m] = M - m;
        }
        return mix;
    }

    double g2a_pdf(const G2AMixture &mix, double x)
    {
        if (!(x > 0.0))
            throw std::domain_error("g2a_pdf: requires x > 0");
        double s = 0.0;
        for (std::size_t m = 0; m < mix.weights.size(); ++m)
            if (mix.weights[m] > 0.0)
                s += mix.weights[m] * ncchi2_pdf({mix.dofs[m], mix.lambda, mix.gamma_bar}, x);
        return s;
    }

    double g2a_cdf(const G2AMixture &mix, double x)
    {
        if (!(x >= 0.0))
            throw std::domain_error("g2a_cdf: requires x >= 0");
        double s = 0.0;
        for (std::size_t m = 0; m < mix.weights.size(); ++m)
            if (mix.weights[m] > 0.0)
                s += mix.weights[m] * ncchi2_cdf({mix.dofs[m], mix.lambda, mix.gamma_bar}, x);
        return std::min(1.0, s);
    }

    double g2a_pdf(const G2ALink &link, double x) { return g2a_pdf(mixture_params(link), x); }
    double g2a_cdf(const G2ALink &link, double x) { return g2a_cdf(mixture_params(link), x); }

    double g2a_pdf_closed(const G2ALink &link, double x)
    {
        validate(link);
        if (!(x > 0.0))
            throw std::domain_error("g2a_pdf: requires x > 0");
        const int M = link.M;
        const double K = link.K;
        const double g = link.gamma_bar;
        const double r2 = link.rho * link.rho;
        const double rb2 = std::max(0.0, 1.0 - r2);
        const double d = K * rb2 + 1.0;
        const double xi = M * K * r2 * (K + 1.0) / g;
        const double lx = std::log(x);

        const double base = -M * K * r2 / d - (K + 1.0) * x / (g * d) + M * std::log((K + 1.0) / d);
        double lmax = ninf;
        std::vector<double> terms(M, ninf);
        for (int i = 0; i < M; ++i)
        {
            const double nu = M - i - 1.0;
            double lt = log_binom(M - 1, i) + xlogy(i, rb2) + xlogy(nu, r2) - (M - i) * std::log(g);
            if (!std::isfinite(lt))
                continue;
            if (xi > 0.0)
            {
                const double z = 2.0 * std::sqrt(xi * x) / d;
                lt += 0.5 * nu * (lx - std::log(xi)) + log_bessel_i_scaled(nu, z) + z;
            }
            else
                lt += nu * lx - nu * std::log(d) - std::lgamma(nu + 1.0);
            terms[i] = lt;
            lmax = std::max(lmax, lt);
        }
        if (!std::isfinite(lmax))
            return 0.0;
        double s = 0.0;
        for (double lt : terms)
            if (std::isfinite(lt))
                s += std::exp(lt - lmax);
        return std::exp(base + lmax + std::log(s));
    }

    double g2a_mean(const G2ALink &link)
    {
        const G2AMixture mix = mixture_params(link);
        double s = 0.0;
        for (std::size_t m = 0; m < mix.weights.size(); ++m)
            s += mix.weights[m] * (mix.dofs[m] + mix.lambda) * mix.gamma_bar;
        return s;
    }

    double g2a_cdf_slope(const G2ALink &link)
    {
        validate(link);
        const int M = link.M;
        const double K = link.K;
        const double r2 = link.rho * link.rho;
        const double rb2 = std::max(0.0, 1.0 - r2);
        const double d = K * rb2 + 1.0;
        const double l = -M * K * r2 / d + M * std::log(K + 1.0) + xlogy(M - 1.0, rb2) - M * std::log(d);
        return std::exp(l) / link.gamma_bar;
    }

    double g2a_cdf_asymptotic(const G2ALink &link, double x)
    {
        if (!(x > 0.0))
            throw std::domain_error("g2a_cdf_asymptotic: requires x > 0");
        return g2a_cdf_slope(link) * x;
    }
}
