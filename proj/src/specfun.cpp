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

#include "aerolink/specfun.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <vector>
#include <limits>
#include <stdexcept>

namespace aerolink
{
    namespace
    {
        constexpr double inf = std::numeric_limits<double>::infinity();
        constexpr double log_max = 709.78;
        constexpr double kPi = 3.14159265358979323846;

        double log_i_series_mult(double nu, double x)
        {
            const double h2 = 0.25 * x * x;
            double t = 1.0, sum = 1.0;
            for (int k = 1; k < 100000; ++k)
            {
                t *= h2 / (k * (k + nu));
                sum += t;
                if (t < 1e-17 * sum && k > 0.5 * x)
                    break;
            }
            return nu * std::log(0.5 * x) - std::lgamma(nu + 1.0) + std::log(sum) - x;
        }

        // Term-wise log evaluation around the largest term; used where the running product would overflow.
        double log_i_series_lgamma(double nu, double x)
        {
            const double lh = std::log(0.5 * x);
            auto lt = [&](double k)
            { return (2.0 * k + nu) * lh - std::lgamma(k + 1.0) - std::lgamma(k + nu + 1.0); };
            const double kstar = std::max(0.0, std::floor(0.5 * (-nu + std::sqrt(nu * nu + x * x))));
            const double lmax = lt(kstar);
            double sum = 1.0;
            for (double k = kstar + 1.0;; k += 1.0)
            {
                const double r = std::exp(lt(k) - lmax);
                sum += r;
                if (r < 1e-18)
                    break;
            }
            for (double k = kstar - 1.0; k >= 0.0; k -= 1.0)
            {
                const double r = std::exp(lt(k) - lmax);
                sum += r;
                if (r < 1e-18)
                    break;
            }
            return lmax + std::log(sum) - x;
        }

        double log_i_hankel(double nu, double x)
        {
            const double mu = 4.0 * nu * nu;
            double term = 1.0, sum = 1.0, prev = inf;
            for (int k = 1; k < 200; ++k)
            {
                const double odd = 2.0 * k - 1.0;
                term *= -(mu - odd * odd) / (8.0 * k * x);
                if (std::abs(term) > prev)
                    break;
                sum += term;
                prev = std::abs(term);
                if (prev < 1e-17 * std::abs(sum))
                    break;
            }
            return std::log(sum) - 0.5 * std::log(2.0 * kPi * x);
        }

        bool is_integer(double v) { return std::abs(v - std::round(v)) < 1e-12; }

        // Sum over Poisson(lam) weights of regularized incomplete gamma P(k+j, y) (upper=false) or Q (upper=true).
        double poisson_gamma_sum(double k, double lam, double y, bool upper)
        {
            namespace bm = boost::math;
            if (lam == 0.0)
                return upper ? bm::gamma_q(k, y) : bm::gamma_p(k, y);
            auto G = [&](double a)
            { return upper ? bm::gamma_q(a, y) : bm::gamma_p(a, y); };
            const double m = std::floor(lam);
            const double pm = std::exp(-lam + m * std::log(lam) - std::lgamma(m + 1.0));
            double sum = 0.0;
            double pj = pm;
            for (double j = m; j < m + 1e7; j += 1.0)
            {
                const double term = pj * G(k + j);
                sum += term;
                if (pj < 1e-17 * sum || (!upper && term < 1e-17 * sum) || (sum == 0.0 && pj < 1e-300))
                    break;
                pj *= lam / (j + 1.0);
            }
            pj = pm * m / lam;
            for (double j = m - 1.0; j >= 0.0; j -= 1.0)
            {
                const double term = pj * G(k + j);
                sum += term;
                if (pj < 1e-17 * sum || (upper && term < 1e-17 * sum) || (sum == 0.0 && pj < 1e-300))
                    break;
                pj *= j / lam;
            }
            return std::min(1.0, std::max(0.0, sum));
        }
    }

    void validate(const NoncentralChi2Params &p)
    {
        if (!(p.k > 0.0) || !(p.lambda >= 0.0) || !(p.gamma_bar > 0.0) || !std::isfinite(p.k) || !std::isfinite(p.lambda) || !std::isfinite(p.gamma_bar))
            throw std::invalid_argument("NoncentralChi2Params: need k > 0, lambda >= 0, gamma_bar > 0");
    }

    // ---- Bessel ------------------------------------------------------------

    double log_bessel_i_scaled(double nu, double x)
    {
        if (!(x >= 0.0) || !(nu >= -1.0))
            throw std::domain_error("bessel_i: requires nu >= -1 and x >= 0");
        if (nu < 0.0 && is_integer(nu))
            nu = -nu;
        if (x == 0.0)
        {
            if (nu == 0.0)
                return 0.0;
            return nu > 0.0 ? -inf : inf;
        }
        if (x > 35.0 && x > 2.0 * nu * nu)
            return log_i_hankel(nu, x);
        if (x < 600.0)
            return log_i_series_mult(nu, x);
        return log_i_series_lgamma(nu, x);
    }

    double bessel_i_scaled(double nu, double x) { return std::exp(log_bessel_i_scaled(nu, x)); }

    double bessel_i(double nu, double x)
    {
        const double l = log_bessel_i_scaled(nu, x) + x;
        if (l > log_max)
            throw std::overflow_error("bessel_i: result exceeds double range; use bessel_i_scaled");
        return std::exp(l);
    }

    double bessel_k(double nu, double x)
    {
        if (!(x > 0.0))
            throw std::domain_error("bessel_k: requires x > 0");
        nu = std::abs(nu);
        try
        {
            return boost::math::cyl_bessel_k(nu, x);
        }
        catch (const std::overflow_error &)
        {
            return inf;
        }
    }

    double log_bessel_k(double nu, double x)
    {
        if (!(x > 0.0))
            throw std::domain_error("bessel_k: requires x > 0");
        nu = std::abs(nu);
        double v = 0.0;
        try
        {
            v = boost::math::cyl_bessel_k(nu, x);
        }
        catch (const std::overflow_error &)
        {
            v = inf;
        }
        catch (const std::underflow_error &)
        {
            v = 0.0;
        }
        if (std::isfinite(v) && v > 1e-290)
            return std::log(v);

        if (x > 50.0 && x > 2.0 * nu * nu)
        {
            // large-argument expansion: K_nu(x) ~ sqrt(pi/(2x)) e^{-x} sum_k prod_j (4nu^2 - (2j-1)^2) / (k! (8x)^k)
            const double mu = 4.0 * nu * nu;
            double term = 1.0, sum = 1.0;
            for (int k = 1; k < 60; ++k)
            {
                term *= (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (k * 8.0 * x);
                sum += term;
                if (std::abs(term) < 1e-17 * std::abs(sum))
                    break;
            }
            return 0.5 * std::log(boost::math::constants::pi<double>() / (2.0 * x)) - x + std::log(sum);
        }

        // K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt, evaluated relative to its peak.
        auto g = [&](double t)
        {
            const double lc = nu * t + std::log1p(std::exp(-2.0 * nu * t)) - std::log(2.0);
            return -x * std::cosh(t) + lc;
        };
        double ts = std::asinh(nu / x);
        for (int it = 0; it < 50; ++it)
        {
            const double d1 = -x * std::sinh(ts) + nu * std::tanh(nu * ts);
            const double d2 = -x * std::cosh(ts) + nu * nu / std::pow(std::cosh(nu * ts), 2);
            if (d2 >= 0.0)
                break;
            const double step = d1 / d2;
            ts = std::max(0.0, ts - step);
            if (std::abs(step) < 1e-14 * (1.0 + ts))
                break;
        }
        const double gmax = g(ts);
        double hi = ts + 1.0;
        while (g(hi) - gmax > -60.0)
            hi += 1.0;
        double lo = ts;
        while (lo > 0.0 && g(lo) - gmax > -60.0)
            lo = std::max(0.0, lo - 1.0);
        auto f = [&](double t)
        { return std::exp(g(t) - gmax); };
        const double s = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, lo, hi, 15, 1e-13);
        return gmax + std::log(s);
    }

    double bessel_j0(double x) { return boost::math::cyl_bessel_j(0.0, x); }

    // ---- Gamma-type distributions -----------------------------------------------

    double chi2_pdf(double k, double x)
    {
        if (!(k > 0.0) || !(x > 0.0))
            throw std::domain_error("chi2_pdf: requires k > 0 and x > 0");
        return boost::math::gamma_p_derivative(k, x);
    }

    double chi2_cdf(double k, double x)
    {
        if (!(k > 0.0) || !(x >= 0.0))
            throw std::domain_error("chi2_cdf: requires k > 0 and x >= 0");
        if (x == 0.0)
            return 0.0;
        return boost::math::gamma_p(k, x);
    }

    double ncchi2_log_pdf(const NoncentralChi2Params &p, double x)
    {
        validate(p);
        if (!(x > 0.0))
            throw std::domain_error("ncchi2_pdf: requires x > 0");
        const double y = x / p.gamma_bar;
        const double lg = std::log(p.gamma_bar);
        if (p.lambda == 0.0)
            return (p.k - 1.0) * std::log(y) - y - std::lgamma(p.k) - lg;
        const double sy = std::sqrt(y), sl = std::sqrt(p.lambda);
        return -(sy - sl) * (sy - sl) + 0.5 * (p.k - 1.0) * (std::log(y) - std::log(p.lambda)) + log_bessel_i_scaled(p.k - 1.0, 2.0 * sy * sl) - lg;
    }

    double ncchi2_pdf(const NoncentralChi2Params &p, double x)
    {
        if (p.lambda == 0.0)
        {
            validate(p);
            return chi2_pdf(p.k, x / p.gamma_bar) / p.gamma_bar;
        }
        return std::exp(ncchi2_log_pdf(p, x));
    }

    double ncchi2_cdf(const NoncentralChi2Params &p, double x)
    {
        validate(p);
        if (!(x >= 0.0))
            throw std::domain_error("ncchi2_cdf: requires x >= 0");
        if (x == 0.0)
            return 0.0;
        if (std::isinf(x))
            return 1.0;
        return poisson_gamma_sum(p.k, p.lambda, x / p.gamma_bar, false);
    }

    double ncchi2_sf(const NoncentralChi2Params &p, double x)
    {
        validate(p);
        if (!(x >= 0.0))
            throw std::domain_error("ncchi2_sf: requires x >= 0");
        if (x == 0.0)
            return 1.0;
        if (std::isinf(x))
            return 0.0;
        return poisson_gamma_sum(p.k, p.lambda, x / p.gamma_bar, true);
    }

    double marcum_q(double k, double a, double b)
    {
        if (!(k > 0.0) || !(a >= 0.0) || !(b >= 0.0))
            throw std::domain_error("marcum_q: requires k > 0, a >= 0, b >= 0");
        if (b == 0.0)
            return 1.0;
        return poisson_gamma_sum(k, 0.5 * a * a, 0.5 * b * b, true);
    }

    // ---- Generalized-K -----------------------------------------------------------

    bool gk_use_surrogate(double a, double alpha)
    {
        const double big = std::max(a, alpha), small = std::min(a, alpha);
        return big >= 50.0 && big >= 40.0 * std::pow(small, 1.4);
    }

    double gk_surrogate_pdf(double a, double alpha, double x)
    {
        if (a < alpha)
            std::swap(a, alpha);
        const double y = x / a;
        const double d = alpha - y;
        const double bracket = 1.0 + (alpha + d * d) / (2.0 * a) - y / a;
        return std::max(0.0, bracket) * chi2_pdf(alpha, y) / a;
    }

    double gk_surrogate_cdf(double a, double alpha, double x)
    {
        if (a < alpha)
            std::swap(a, alpha);
        if (x <= 0.0)
            return 0.0;
        namespace bm = boost::math;
        const double c = x / a;
        const double P0 = bm::gamma_p(alpha, c);
        const double P1 = bm::gamma_p(alpha + 1.0, c);
        const double P2 = bm::gamma_p(alpha + 2.0, c);
        const double corr = alpha * P0 + alpha * alpha * P0 - 2.0 * alpha * alpha * P1 + alpha * (alpha + 1.0) * P2 - 2.0 * alpha * P1;
        return std::min(1.0, std::max(0.0, P0 + corr / (2.0 * a)));
    }

    double gk_log_pdf(double a, double alpha, double x)
    {
        if (!(a > 0.0) || !(alpha > 0.0) || !(x > 0.0))
            throw std::domain_error("gk_pdf: requires a, alpha, x > 0");
        return (0.5 * (a + alpha) - 1.0) * std::log(x) + std::log(2.0) + log_bessel_k(a - alpha, 2.0 * std::sqrt(x)) - std::lgamma(a) - std::lgamma(alpha);
    }

    double gk_pdf(double a, double alpha, double x)
    {
        if (!(a > 0.0) || !(alpha > 0.0) || !(x > 0.0))
            throw std::domain_error("gk_pdf: requires a, alpha, x > 0");
        if (gk_use_surrogate(a, alpha))
            return gk_surrogate_pdf(a, alpha, x);
        return std::exp(gk_log_pdf(a, alpha, x));
    }

    namespace
    {
        // log K_{nu0 + j}(z) for j < count by upward recurrence, which is stable for K
        std::vector<double> log_bessel_k_ladder(double nu0, double z, int count)
        {
            std::vector<double> out(static_cast<std::size_t>(std::max(0, count)));
            if (count < 1)
                return out;
            out[0] = log_bessel_k(nu0, z);
            if (count < 2)
                return out;
            out[1] = log_bessel_k(nu0 + 1.0, z);
            double r = std::exp(out[1] - out[0]);
            for (int j = 1; j + 1 < count; ++j)
            {
                r = 1.0 / r + 2.0 * (nu0 + j) / z;
                out[j + 1] = out[j] + std::log(r);
            }
            return out;
        }
    }

    std::vector<double> gk_sf_terms(double b, double x, int count)
    {
        if (!(b > 0.0) || !(x > 0.0) || count < 0)
            throw std::domain_error("gk_sf_terms: requires b > 0, x > 0, count >= 0");
        // P(UV > x) = sum_{i<n} E[(x/U)^i e^{-x/U}]/i! with U ~ Gamma(b), V ~ Gamma(n).
        const double lx = std::log(x), z = 2.0 * std::sqrt(x), lgb = std::lgamma(b);
        const int top = count - 1;
        const double fb = std::floor(b), phi = b - fb;
        // orders b - i >= 0 sit on the ladder phi + j; negative orders reflect to i - b
        const int pos = static_cast<int>(std::min<double>(fb, top));
        const int neg_hi = top - static_cast<int>(std::ceil(b));
        const int n_up = phi == 0.0 ? std::max(static_cast<int>(fb) + 1, top - static_cast<int>(fb) + 1) : static_cast<int>(fb) + 1;
        const std::vector<double> up = count > 0 ? log_bessel_k_ladder(phi, z, n_up) : std::vector<double>{};
        const std::vector<double> down = phi > 0.0 && neg_hi >= 0 ? log_bessel_k_ladder(1.0 - phi, z, neg_hi + 1) : std::vector<double>{};
        std::vector<double> t(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i)
        {
            double lk;
            if (i <= pos)
                lk = up[static_cast<std::size_t>(fb) - i];
            else if (phi == 0.0)
                lk = up[i - static_cast<std::size_t>(fb)];
            else
                lk = down[i - static_cast<std::size_t>(fb) - 1];
            t[i] = std::exp(std::log(2.0) + 0.5 * (b + i) * lx + lk - lgb - std::lgamma(i + 1.0));
        }
        return t;
    }

    double gk_cdf(double a, double alpha, double x)
    {
        if (!(a > 0.0) || !(alpha > 0.0) || !(x >= 0.0))
            throw std::domain_error("gk_cdf: requires a, alpha > 0 and x >= 0");
        if (x == 0.0)
            return 0.0;
        if (std::isinf(x))
            return 1.0;
        if (gk_use_surrogate(a, alpha))
            return gk_surrogate_cdf(a, alpha, x);

        double n = -1.0, b = 0.0;
        if (is_integer(std::min(a, alpha)))
            n = std::round(std::min(a, alpha)), b = std::max(a, alpha);
        else if (is_integer(std::max(a, alpha)))
            n = std::round(std::max(a, alpha)), b = std::min(a, alpha);
        if (n >= 1.0 && n <= 1e5)
        {
            const std::vector<double> t = gk_sf_terms(b, x, static_cast<int>(n));
            double sf = 0.0;
            for (double v : t)
                sf += v;
            return std::min(1.0, std::max(0.0, 1.0 - sf));
        }

        auto f = [&](double t)
        { return t > 0.0 ? gk_pdf(a, alpha, t) : 0.0; };
        const double lower = integrate_singular(f, 0.0, x, 1e-11);
        if (lower <= 0.5)
            return std::max(0.0, lower);
        return std::min(1.0, std::max(0.0, 1.0 - integrate_to_inf(f, x, 1e-11)));
    }

    KappaMuParams to_kappa_mu(const NoncentralChi2Params &p)
    {
        validate(p);
        return {p.gamma_bar * (p.k + p.lambda), p.lambda / p.k, p.k};
    }

    NoncentralChi2Params from_kappa_mu(const KappaMuParams &p)
    {
        if (!(p.omega > 0.0) || !(p.kappa >= 0.0) || !(p.mu > 0.0))
            throw std::invalid_argument("KappaMuParams: need omega > 0, kappa >= 0, mu > 0");
        return {p.mu, p.mu * p.kappa, p.omega / (p.mu * (1.0 + p.kappa))};
    }

    // ---- Miscellaneous ---------------------------------------------------------------

    double q_func(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

    double q_inv(double p)
    {
        if (!(p > 0.0 && p < 1.0))
            throw std::domain_error("q_inv: probability must lie in (0, 1)");
        double x = std::sqrt(2.0) * boost::math::erfc_inv(2.0 * p);
        for (int it = 0; it < 3; ++it)
        {
            const double d = -std::exp(-0.5 * x * x) / std::sqrt(2.0 * kPi);
            const double f = q_func(x) - p;
            if (d == 0.0)
                break;
            x -= f / d;
        }
        return x;
    }

    double laguerre(int r, double x)
    {
        if (r < 0)
            throw std::domain_error("laguerre: order must be nonnegative");
        if (r == 0)
            return 1.0;
        double l0 = 1.0, l1 = 1.0 - x;
        for (int n = 1; n < r; ++n)
        {
            const double l2 = ((2.0 * n + 1.0 - x) * l1 - n * l0) / (n + 1.0);
            l0 = l1;
            l1 = l2;
        }
        return l1;
    }

    double laguerre_half_neg(double K)
    {
        if (!(K >= 0.0))
            throw std::domain_error("laguerre_half_neg: requires K >= 0");
        return (1.0 + K) * bessel_i_scaled(0.0, 0.5 * K) + K * bessel_i_scaled(1.0, 0.5 * K);
    }

    double poisson_log_pmf(long long j, double mean)
    {
        if (j < 0)
            return -inf;
        if (mean == 0.0)
            return j == 0 ? 0.0 : -inf;
        return -mean + j * std::log(mean) - std::lgamma(j + 1.0);
    }

    double poisson_pmf(long long j, double mean) { return std::exp(poisson_log_pmf(j, mean)); }

    PoissonWindow poisson_truncation(double mean, double epsilon)
    {
        if (!(mean >= 0.0) || !std::isfinite(mean))
            throw std::invalid_argument("poisson_truncation: mean must be finite and nonnegative");
        if (!(epsilon > 0.0 && epsilon < 1.0))
            throw std::invalid_argument("poisson_truncation: epsilon must lie in (0, 1)");
        if (mean == 0.0)
            return {0, 0};
        const double target = 1.0 - epsilon;
        const double p0 = std::exp(-mean);
        const long long guard = static_cast<long long>(mean + 60.0 * std::sqrt(mean) + 200.0);
        if (p0 >= epsilon)
        {
            double p = p0, c = p0;
            long long j = 0;
            while (c < target && j < guard)
            {
                ++j;
                p *= mean / j;
                c += p;
            }
            return {0, j};
        }
        const long long mode = static_cast<long long>(std::floor(mean));
        long long lo = mode, hi = mode;
        double mass = poisson_pmf(mode, mean);
        double pl = lo > 0 ? poisson_pmf(lo - 1, mean) : 0.0;
        double ph = poisson_pmf(hi + 1, mean);
        while (mass < target && hi - lo < 2 * guard)
        {
            if (lo > 0 && pl >= ph)
            {
                --lo;
                mass += pl;
                pl = lo > 0 ? pl * lo / mean : 0.0;
            }
            else
            {
                ++hi;
                mass += ph;
                ph *= mean / (hi + 1);
            }
        }
        return {lo, hi};
    }

    // ---- Quadrature --------------------------------------------------------------------

    double integrate(const Integrand &f, double a, double b, double rel_tol)
    {
        return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, rel_tol);
    }

    double integrate_singular(const Integrand &f, double a, double b, double rel_tol)
    {
        boost::math::quadrature::tanh_sinh<double> ts;
        return ts.integrate(f, a, b, rel_tol);
    }

    double integrate_to_inf(const Integrand &f, double a, double rel_tol)
    {
        boost::math::quadrature::exp_sinh<double> es;
        return es.integrate(f, a, inf, rel_tol);
    }
}
