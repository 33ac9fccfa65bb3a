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

#include "aerolink/a2g.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aerolink
{
    namespace
    {
        double sq(double v) { return v * v; }

        double quant_factor(int bits)
        {
            if (bits <= 0)
                return 1.0;
            const double h = pi / std::ldexp(1.0, bits);
            return std::sin(h) / h;
        }
    }

    void validate(const PscConfig &psc)
    {
        if (psc.kind == PscKind::RandomUniform)
        {
            if (!(psc.a >= -pi - 1e-12 && psc.b <= pi + 1e-12 && psc.a <= psc.b))
                throw std::invalid_argument("PscConfig: random interval must satisfy -pi <= a <= b <= pi");
        }
        if (psc.kind == PscKind::Fixed && psc.theta.empty())
            throw std::invalid_argument("PscConfig: fixed configuration needs at least one phase");
        if (psc.quantization_bits < 0 || psc.quantization_bits > 30)
            throw std::invalid_argument("PscConfig: quantization_bits must lie in [0, 30]");
    }

    std::string to_string(PscKind kind)
    {
        switch (kind)
        {
        case PscKind::Delayed:
            return "delayed";
        case PscKind::RandomUniform:
            return "random";
        case PscKind::Fixed:
            return "fixed";
        case PscKind::LoSBased:
            return "los";
        case PscKind::IdealBenchmark:
            return "ideal";
        }
        return "unknown";
    }

    PscKind psc_kind_from_string(const std::string &s)
    {
        if (s == "delayed")
            return PscKind::Delayed;
        if (s == "random")
            return PscKind::RandomUniform;
        if (s == "fixed")
            return PscKind::Fixed;
        if (s == "los")
            return PscKind::LoSBased;
        if (s == "ideal")
            return PscKind::IdealBenchmark;
        throw std::invalid_argument("unknown PSC kind '" + s + "' (expected delayed, random, fixed, los, ideal)");
    }

    void validate(const A2GLink &link)
    {
        if (link.N < 1)
            throw std::invalid_argument("A2GLink: N must be >= 1");
        if (static_cast<int>(link.beta.size()) != link.N)
            throw std::invalid_argument("A2GLink: beta must have N entries");
        for (double b : link.beta)
            if (!(b > 0.0) || !std::isfinite(b))
                throw std::invalid_argument("A2GLink: beta entries must be positive");
        if (!(link.K_ur >= 0.0) || !(link.K_rd >= 0.0))
            throw std::invalid_argument("A2GLink: Rician factors must be nonnegative");
        if (!(std::abs(link.rho_ur) <= 1.0) || !(std::abs(link.rho_rd) <= 1.0))
            throw std::invalid_argument("A2GLink: rho must lie in [-1, 1]");
        if (!(link.gamma_bar > 0.0))
            throw std::invalid_argument("A2GLink: gamma_bar must be positive");
        if (!link.los_ur.empty() && static_cast<int>(link.los_ur.size()) != link.N)
            throw std::invalid_argument("A2GLink: los_ur must have N entries");
        if (!link.los_rd.empty() && static_cast<int>(link.los_rd.size()) != link.N)
            throw std::invalid_argument("A2GLink: los_rd must have N entries");
    }

    cd los_ur_at(const A2GLink &link, int n) { return link.los_ur.empty() ? cd(1.0, 0.0) : link.los_ur[n]; }
    cd los_rd_at(const A2GLink &link, int n) { return link.los_rd.empty() ? cd(1.0, 0.0) : link.los_rd[n]; }

    double quantize_phase(double theta, int bits)
    {
        if (bits <= 0)
            return theta;
        const double step = 2.0 * pi / std::ldexp(1.0, bits);
        double q = std::round(theta / step) * step;
        q = std::fmod(q, 2.0 * pi);
        if (q < 0.0)
            q += 2.0 * pi;
        return q;
    }

    void resolve_phases(const PscConfig &psc, const A2GLink &link, const CVec &hhat_ur, const CVec &hhat_rd,
                        const CVec &h_ur, const CVec &h_rd, Rng &rng, std::vector<double> &theta)
    {
        const int N = link.N;
        theta.resize(N);
        for (int n = 0; n < N; ++n)
        {
            double t = 0.0;
            switch (psc.kind)
            {
            case PscKind::Delayed:
                t = -std::arg(hhat_rd[n] * hhat_ur[n]);
                break;
            case PscKind::RandomUniform:
                t = rng.uniform(psc.a, psc.b);
                break;
            case PscKind::Fixed:
                t = psc.theta.size() == 1 ? psc.theta[0] : psc.theta.at(n);
                break;
            case PscKind::LoSBased:
                t = -std::arg(los_rd_at(link, n) * los_ur_at(link, n));
                break;
            case PscKind::IdealBenchmark:
                t = -std::arg(h_rd[n] * h_ur[n]);
                break;
            }
            theta[n] = quantize_phase(t, psc.quantization_bits);
        }
    }

    cd conditional_cf(const A2GLink &link, const std::vector<double> &theta, const CVec &hhat_ur, const CVec &hhat_rd, cd omega)
    {
        const double rur2 = sq(link.rho_ur), rrd2 = sq(link.rho_rd);
        const double rbur2 = std::max(0.0, 1.0 - rur2), rbrd2 = std::max(0.0, 1.0 - rrd2);
        const double w2 = std::norm(omega);
        const double rr = link.rho_ur * link.rho_rd;
        double logmag = 0.0, phase = 0.0;
        for (int n = 0; n < link.N; ++n)
        {
            const double b2 = sq(link.beta[n]);
            const double t = 0.25 * w2 * rbur2 * rbrd2 * b2;
            const double quad = 0.25 * w2 * b2 * (rbrd2 * rur2 * std::norm(hhat_ur[n]) + rbur2 * rrd2 * std::norm(hhat_rd[n]));
            const cd coupling = std::conj(omega) * hhat_ur[n] * link.beta[n] * std::polar(1.0, theta[n]) * hhat_rd[n];
            logmag += -std::log1p(t) - quad / (1.0 + t);
            phase += rr * coupling.real() / (1.0 + t);
        }
        return std::polar(std::exp(logmag), phase);
    }

    GaussianConditioning gaussian_conditioning(const A2GLink &link, const std::vector<double> &theta, const CVec &hhat_ur, const CVec &hhat_rd)
    {
        const double rur2 = sq(link.rho_ur), rrd2 = sq(link.rho_rd);
        const double rbur2 = std::max(0.0, 1.0 - rur2), rbrd2 = std::max(0.0, 1.0 - rrd2);
        cd mu = 0.0;
        double s_rd = 0.0, s_ur = 0.0, s_b = 0.0;
        for (int n = 0; n < link.N; ++n)
        {
            const double b = link.beta[n];
            mu += hhat_rd[n] * b * std::polar(1.0, theta[n]) * hhat_ur[n];
            s_rd += sq(b) * std::norm(hhat_rd[n]);
            s_ur += sq(b) * std::norm(hhat_ur[n]);
            s_b += sq(b);
        }
        GaussianConditioning g;
        g.mu_z = link.rho_rd * link.rho_ur * mu;
        g.sigma_z2 = rrd2 * rbur2 * s_rd + rbrd2 * rur2 * s_ur + rbrd2 * rbur2 * s_b;
        return g;
    }

    MomentTriple ncchi2_moments(const NoncentralChi2Params &p)
    {
        return {(p.k + p.lambda) * p.gamma_bar, (p.k + 2.0 * p.lambda) * sq(p.gamma_bar), (2.0 * p.k + 6.0 * p.lambda) * std::pow(p.gamma_bar, 3)};
    }

    MomentTriple ltc_moments(double k, double gamma_bar, const MomentTriple &x)
    {
        if (!(k > 0.0))
            throw std::invalid_argument("ltc_moments: k must be positive");
        const double g = gamma_bar;
        return {(k + x.mean) * g,
                (k + x.variance + 2.0 * x.mean) * g * g,
                (2.0 * k + 6.0 * x.mean + 6.0 * x.variance + x.mu3) * g * g * g};
    }

    NoncentralChi2Params match_ncchi2(const MomentTriple &m)
    {
        if (!(m.mean > 0.0) || !(m.variance > 0.0))
            throw std::invalid_argument("match_ncchi2: mean and variance must be positive");
        const double E = m.mean, V = m.variance, h = 0.5 * E * m.mu3;
        if (V * V > h && h > 0.75 * V * V)
        {
            const double g = (V - std::sqrt(V * V - h)) / E;
            const double lam = (V / g - E) / g;
            return {E / g - lam, std::max(0.0, lam), g};
        }
        return {E * E / V, 0.0, V / E};
    }

    MomentTriple sigma_z2_moments(const A2GLink &link)
    {
        validate(link);
        const double rur2 = sq(link.rho_ur), rrd2 = sq(link.rho_rd);
        const double rbur2 = std::max(0.0, 1.0 - rur2), rbrd2 = std::max(0.0, 1.0 - rrd2);
        const double c_rd = rrd2 * rbur2, c_ur = rbrd2 * rur2;
        const NoncentralChi2Params hrd{1.0, link.K_rd, 1.0 / (link.K_rd + 1.0)};
        const NoncentralChi2Params hur{1.0, link.K_ur, 1.0 / (link.K_ur + 1.0)};
        const MomentTriple mrd = ncchi2_moments(hrd), mur = ncchi2_moments(hur);
        double b2 = 0.0, b4 = 0.0, b6 = 0.0;
        for (double b : link.beta)
        {
            const double bb = b * b;
            b2 += bb;
            b4 += bb * bb;
            b6 += bb * bb * bb;
        }
        MomentTriple m;
        m.mean = (1.0 - rrd2 * rur2) * b2;
        m.variance = (sq(c_rd) * mrd.variance + sq(c_ur) * mur.variance) * b4;
        m.mu3 = (std::pow(c_rd, 3) * mrd.mu3 + std::pow(c_ur, 3) * mur.mu3) * b6;
        return m;
    }

    NoncentralChi2Params sigma_z2_match(const A2GLink &link)
    {
        const MomentTriple m = sigma_z2_moments(link);
        if (!(m.mean > 0.0))
            throw std::domain_error("sigma_z2_match: conditional variance is degenerate (rho_RD rho_UR = 1)");
        NoncentralChi2Params p;
        if (m.variance <= 1e-15 * m.mean * m.mean)
        {
            // deterministic sigma_Z^2: a very concentrated Gamma law stands in for the point mass
            const double k = 1e15;
            p = {k, 0.0, m.mean / k};
        }
        else
            p = match_ncchi2(m);
        p.k /= link.N;
        p.lambda /= link.N;
        return p;
    }

    double rician_envelope_mean(double K)
    {
        if (!(K >= 0.0))
            throw std::invalid_argument("rician_envelope_mean: K must be nonnegative");
        return 0.5 * std::sqrt(pi) * laguerre_half_neg(K) / std::sqrt(K + 1.0);
    }

    double mu_hat_abs_moment(double r, double K_rd, double K_ur)
    {
        double lrd, lur;
        if (r == 0.5)
        {
            lrd = laguerre_half_neg(K_rd);
            lur = laguerre_half_neg(K_ur);
        }
        else if (r >= 0.0 && r == std::floor(r))
        {
            lrd = laguerre(static_cast<int>(r), -K_rd);
            lur = laguerre(static_cast<int>(r), -K_ur);
        }
        else
            throw std::invalid_argument("mu_hat_abs_moment: order must be a nonnegative integer or 1/2");
        return std::exp(2.0 * std::lgamma(1.0 + r)) * lrd * lur / std::pow((K_rd + 1.0) * (K_ur + 1.0), r);
    }

    cd psc_cf_factor(const PscConfig &psc, const A2GLink &link, int n)
    {
        validate(psc);
        switch (psc.kind)
        {
        case PscKind::RandomUniform:
        {
            const double a = psc.a, b = psc.b;
            cd f;
            if (b - a < 1e-12)
                f = std::polar(1.0, a);
            else
                f = cd((std::sin(b) - std::sin(a)) / (b - a), (std::cos(a) - std::cos(b)) / (b - a));
            return f * quant_factor(psc.quantization_bits);
        }
        case PscKind::Fixed:
        {
            const double t = psc.theta.size() == 1 ? psc.theta[0] : psc.theta.at(n);
            return std::polar(1.0, quantize_phase(t, psc.quantization_bits));
        }
        case PscKind::LoSBased:
        {
            const double t = -std::arg(los_rd_at(link, n) * los_ur_at(link, n));
            return std::polar(1.0, quantize_phase(t, psc.quantization_bits));
        }
        case PscKind::Delayed:
            throw std::invalid_argument("psc_cf_factor: delayed configuration depends on the estimate; handled through envelope means");
        case PscKind::IdealBenchmark:
            throw std::invalid_argument("psc_cf_factor: ideal configuration has no closed-form CF; Monte Carlo only");
        }
        throw std::invalid_argument("psc_cf_factor: unknown configuration");
    }

    MuZMoments mu_z_moments(const A2GLink &link, const PscConfig &psc, const A2GOptions &opt)
    {
        validate(link);
        validate(psc);
        if (psc.kind == PscKind::IdealBenchmark)
            throw std::invalid_argument("mu_z_moments: ideal configuration has no closed form; Monte Carlo only");
        const double rr = link.rho_rd * link.rho_ur;
        const double e2 = mu_hat_abs_moment(1.0, link.K_rd, link.K_ur);

        double s_diag = 0.0;
        cd s_mean = 0.0;
        if (psc.kind == PscKind::Delayed)
        {
            const double c = mu_hat_abs_moment(0.5, link.K_rd, link.K_ur) * quant_factor(psc.quantization_bits);
            for (int n = 0; n < link.N; ++n)
            {
                const double b = link.beta[n];
                s_diag += b * b * (e2 - c * c);
                s_mean += b * c;
            }
        }
        else
        {
            const double amp = std::sqrt(link.K_ur / (link.K_ur + 1.0) * link.K_rd / (link.K_rd + 1.0));
            for (int n = 0; n < link.N; ++n)
            {
                const double b = link.beta[n];
                const cd c = amp * los_rd_at(link, n) * los_ur_at(link, n) * psc_cf_factor(psc, link, n);
                s_diag += b * b * (e2 - std::norm(c));
                s_mean += b * c;
            }
        }

        MuZMoments m;
        m.mean = rr * s_mean;
        m.abs_mean2 = std::norm(m.mean);
        m.var = rr * rr * s_diag;
        m.mean_abs2 = m.var + m.abs_mean2;

        const double sd = std::sqrt(std::max(0.0, m.var));
        if (std::abs(m.mean.real()) < opt.taylor_threshold * sd)
            m.var_abs2 = m.var * m.var;
        else
        {
            double var_re;
            if (std::abs(m.mean.imag()) < opt.taylor_threshold * sd)
                var_re = m.mean_abs2 - m.abs_mean2;
            else
                var_re = 0.5 * (m.mean_abs2 - (m.mean * m.mean).real());
            m.var_abs2 = 4.0 * sq(m.mean.real()) * std::max(0.0, var_re);
        }
        return m;
    }

    namespace
    {
        GammaRMatch gamma_r_from(const MomentTriple &s2, const MuZMoments &mu)
        {
            GammaRMatch g;
            const double Es = s2.mean, Vs = s2.variance;
            const double Es4 = Vs + Es * Es;
            const double Vz2 = Vs + mu.var_abs2 + Es4 + 2.0 * Es * mu.mean_abs2;
            g.mean = (Es + mu.mean_abs2) / Es;
            g.variance = (Vz2 - Vs * g.mean * g.mean) / (Vs + Es * Es);
            double disc = g.mean * g.mean - g.variance;
            if (std::abs(disc) <= 1e-12 * g.mean * g.mean)
                disc = 0.0;
            if (disc >= 0.0 && g.variance > 0.0)
            {
                const double s = std::sqrt(disc);
                g.gamma_bar_R = g.mean - s;
                g.lambda_R = s / g.gamma_bar_R;
                g.k_R = 1.0;
                return g;
            }
            g.fallback = true;
            const double V = std::max(g.variance, 1e-300);
            g.k_R = g.mean * g.mean / V;
            g.gamma_bar_R = V / g.mean;
            g.lambda_R = 0.0;
            return g;
        }
    }

    GammaRMatch gamma_r_match(const A2GLink &link, const PscConfig &psc, const A2GOptions &opt)
    {
        return gamma_r_from(sigma_z2_moments(link), mu_z_moments(link, psc, opt));
    }

    A2GCharacterization characterize(const A2GLink &link, const PscConfig &psc, const A2GOptions &opt)
    {
        A2GCharacterization c;
        c.N = link.N;
        c.poisson_eps = opt.poisson_eps;
        c.gamma_bar_a2g = link.gamma_bar;
        c.sigma2 = sigma_z2_moments(link);
        const NoncentralChi2Params z = sigma_z2_match(link);
        c.gamma_bar_Z = z.gamma_bar;
        c.k_Z = z.k;
        c.lambda_Z = z.lambda;
        if (c.sigma2.variance <= 1e-15 * c.sigma2.mean * c.sigma2.mean)
            c.diagnostics.push_back("sigma_Z^2 is deterministic; represented by a concentrated Gamma law");
        c.mu = mu_z_moments(link, psc, opt);
        const GammaRMatch r = gamma_r_from(c.sigma2, c.mu);
        c.gamma_bar_R = r.gamma_bar_R;
        c.k_R = r.k_R;
        c.lambda_R = r.lambda_R;
        c.mean_gamma_r = r.mean;
        c.var_gamma_r = r.variance;
        if (r.fallback)
            c.diagnostics.push_back("gamma_R discriminant negative; central moment match used (k_R != 1)");
        return c;
    }

    namespace
    {
        template <class F>
        double double_poisson_sum(const A2GCharacterization &c, double z, F &&term)
        {
            if (!(z > 0.0))
                throw std::domain_error("a2g: requires z > 0");
            const double s = c.gamma_bar_R * c.gamma_bar_Z * c.gamma_bar_a2g;
            const double aY = c.N * c.k_Z, lY = c.N * c.lambda_Z;
            const PoissonWindow w1 = poisson_truncation(lY, c.poisson_eps);
            const PoissonWindow w2 = poisson_truncation(c.lambda_R, c.poisson_eps);
            double total = 0.0;
            for (long long k1 = w1.lo; k1 <= w1.hi; ++k1)
            {
                const double p1 = poisson_pmf(k1, lY);
                if (p1 == 0.0)
                    continue;
                double inner = 0.0;
                for (long long k2 = w2.lo; k2 <= w2.hi; ++k2)
                {
                    const double p2 = poisson_pmf(k2, c.lambda_R);
                    if (p2 == 0.0)
                        continue;
                    inner += p2 * term(aY + k1, c.k_R + k2, z / s);
                }
                total += p1 * inner;
            }
            return total;
        }
    }

    double a2g_pdf(const A2GCharacterization &chr, double z)
    {
        const double s = chr.gamma_bar_R * chr.gamma_bar_Z * chr.gamma_bar_a2g;
        return double_poisson_sum(chr, z, [](double a, double al, double x)
                                  { return gk_pdf(a, al, x); }) /
               s;
    }

    double a2g_cdf(const A2GCharacterization &chr, double z)
    {
        if (z == 0.0)
            return 0.0;
        const double kr = std::round(chr.k_R);
        if (std::abs(chr.k_R - kr) > 1e-12 || kr < 1.0)
            return std::min(1.0, double_poisson_sum(chr, z, [](double a, double al, double x)
                                                    { return gk_cdf(a, al, x); }));
        if (!(z > 0.0))
            throw std::domain_error("a2g: requires z > 0");

        // integer second shape: the survival terms depend only on the first shape, so every
        // k2 of the inner sum reads a prefix sum of one term vector
        const double s = chr.gamma_bar_R * chr.gamma_bar_Z * chr.gamma_bar_a2g;
        const double x = z / s;
        const double aY = chr.N * chr.k_Z, lY = chr.N * chr.lambda_Z;
        const PoissonWindow w1 = poisson_truncation(lY, chr.poisson_eps);
        const PoissonWindow w2 = poisson_truncation(chr.lambda_R, chr.poisson_eps);
        const int n_max = static_cast<int>(kr) + static_cast<int>(w2.hi);
        std::vector<double> prefix;
        double total = 0.0;
        for (long long k1 = w1.lo; k1 <= w1.hi; ++k1)
        {
            const double p1 = poisson_pmf(k1, lY);
            if (p1 == 0.0)
                continue;
            const double b = aY + k1;
            bool have_terms = false;
            double inner = 0.0;
            for (long long k2 = w2.lo; k2 <= w2.hi; ++k2)
            {
                const double p2 = poisson_pmf(k2, chr.lambda_R);
                if (p2 == 0.0)
                    continue;
                const int n = static_cast<int>(kr) + static_cast<int>(k2);
                double f;
                if (gk_use_surrogate(b, n))
                    f = gk_surrogate_cdf(b, n, x);
                else
                {
                    if (!have_terms)
                    {
                        const std::vector<double> t = gk_sf_terms(b, x, n_max);
                        prefix.assign(t.size() + 1, 0.0);
                        for (std::size_t i = 0; i < t.size(); ++i)
                            prefix[i + 1] = prefix[i] + t[i];
                        have_terms = true;
                    }
                    f = std::clamp(1.0 - prefix[n], 0.0, 1.0);
                }
                inner += p2 * f;
            }
            total += p1 * inner;
        }
        return std::min(1.0, total);
    }

    double a2g_mean(const A2GCharacterization &chr)
    {
        return chr.N * (chr.k_Z + chr.lambda_Z) * chr.gamma_bar_Z * (chr.k_R + chr.lambda_R) * chr.gamma_bar_R * chr.gamma_bar_a2g;
    }

    double a2g_cdf_asymptotic(const A2GCharacterization &chr, double x)
    {
        const double omega = chr.gamma_bar_a2g * chr.sigma2.mean;
        const double u = (x / (chr.gamma_bar_R * omega) - (chr.k_R + chr.lambda_R)) / std::sqrt(chr.k_R + 2.0 * chr.lambda_R);
        return 1.0 - q_func(u);
    }

    double avg_a2g_snr(const A2GLink &link, const PscConfig &psc, const A2GOptions &opt)
    {
        const MomentTriple s2 = sigma_z2_moments(link);
        const MuZMoments mu = mu_z_moments(link, psc, opt);
        return link.gamma_bar * (s2.mean + mu.mean_abs2);
    }
}
