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

#include "aerolink/validation.hpp"
#include "aerolink/csv.hpp"
#include "aerolink/mc_oracle.hpp"
#include "aerolink/specfun.hpp"

#include <boost/math/distributions/non_central_chi_squared.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>

namespace aerolink
{
    namespace
    {
        using Check = std::function<CheckResult()>;

        CheckResult guarded(const std::string &name, const Check &f)
        {
            try
            {
                CheckResult r = f();
                r.name = name;
                return r;
            }
            catch (const std::exception &e)
            {
                return {name, false, 0.0, 0.0, std::string("exception: ") + e.what()};
            }
        }

        CheckResult at_most(double v, double limit, std::string detail = {})
        {
            return {"", v <= limit, v, limit, std::move(detail)};
        }

        std::vector<double> log_grid(double lo, double hi, int n)
        {
            std::vector<double> g(n);
            for (int i = 0; i < n; ++i)
                g[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
            return g;
        }

        double normalization_error(const std::function<double(double)> &pdf, double split)
        {
            const Integrand f = [&](double x)
            { return x > 0.0 ? pdf(x) : 0.0; };
            const double mass = integrate_singular(f, 0.0, split, 1e-10) + integrate_to_inf(f, split, 1e-10);
            return std::abs(mass - 1.0);
        }

        double monotonicity_violation(const std::function<double(double)> &cdf, const std::vector<double> &grid)
        {
            double worst = 0.0, prev = 0.0;
            for (double x : grid)
            {
                const double F = cdf(x);
                worst = std::max({worst, prev - F, F - 1.0, -F});
                prev = F;
            }
            return worst;
        }

        PscConfig analytic_psc(const Scenario &s)
        {
            PscConfig p = s.psc;
            if (p.kind == PscKind::IdealBenchmark)
                p = PscConfig{};
            return p;
        }
    }

    std::vector<CheckResult> run_validation(const Scenario &s, const ValidationOptions &opt)
    {
        validate(s);
        std::vector<CheckResult> out;
        const LinkSet links = build_links(s);
        const PscConfig psc = analytic_psc(s);

        out.push_back(guarded("g2a.mixture_weights_sum", [&]
                              {
            double worst = 0.0;
            for (int M : {1, 2, 4, 9, 16, 64})
                for (double K : {0.0, 1.0, 10.0, 1000.0})
                    for (double rho : {0.0, 0.3, 0.9, 1.0})
                    {
                        const G2AMixture mix = mixture_params({M, K, rho, 1.0, {}});
                        double sum = 0.0;
                        for (double w : mix.weights)
                            sum += w;
                        worst = std::max(worst, std::abs(sum - 1.0));
                    }
            return at_most(worst, 1e-12); }));

        std::vector<int> Ms{4, 9};
        if (std::find(Ms.begin(), Ms.end(), links.g2a.M) == Ms.end())
            Ms.push_back(links.g2a.M);
        for (int M : Ms)
        {
            G2ALink g = links.g2a;
            g.M = M;
            g.los.clear();
            const std::string tag = "[M=" + std::to_string(M) + "]";
            out.push_back(guarded("g2a.pdf_normalization" + tag, [&]
                                  { return at_most(normalization_error([&](double x)
                                                                       { return g2a_pdf(g, x); },
                                                                       g2a_mean(g)),
                                                   1e-6); }));
            out.push_back(guarded("g2a.cdf_monotone" + tag, [&]
                                  {
                const double m = g2a_mean(g);
                const double v = monotonicity_violation([&](double x)
                                                        { return g2a_cdf(g, x); },
                                                        log_grid(1e-6 * m, 50.0 * m, 400));
                const double tail = 1.0 - g2a_cdf(g, 200.0 * m);
                return at_most(std::max(v, tail - 1e-8), 1e-14, "includes cdf(200 mean) >= 1 - 1e-8"); }));
            out.push_back(guarded("g2a.closed_form_vs_mixture" + tag, [&]
                                  {
                double worst = 0.0;
                const double m = g2a_mean(g);
                for (double x : log_grid(1e-4 * m, 10.0 * m, 120))
                {
                    const double a = g2a_pdf(g, x), b = g2a_pdf_closed(g, x);
                    if (a > 1e-280)
                        worst = std::max(worst, std::abs(a - b) / a);
                }
                return at_most(worst, 1e-9); }));
        }

        out.push_back(guarded("ncchi2.pdf_normalization", [&]
                              {
            double worst = 0.0;
            for (double k : {0.5, 1.0, 3.0, 12.5})
                for (double lam : {0.0, 0.7, 25.0, 400.0})
                {
                    const NoncentralChi2Params p{k, lam, 2.5};
                    worst = std::max(worst, normalization_error([&](double x)
                                                                { return ncchi2_pdf(p, x); },
                                                                (k + lam) * 2.5));
                }
            return at_most(worst, 1e-6); }));

        out.push_back(guarded("ncchi2.cdf_vs_boost", [&]
                              {
            double worst = 0.0;
            for (double k : {1.0, 2.0, 4.5, 9.0})
                for (double lam : {0.3, 5.0, 60.0})
                {
                    const NoncentralChi2Params p{k, lam, 0.8};
                    boost::math::non_central_chi_squared_distribution<double> ref(2.0 * k, 2.0 * lam);
                    for (double x : log_grid(0.05 * (k + lam), 3.0 * (k + lam), 25))
                        worst = std::max(worst, std::abs(ncchi2_cdf(p, x) - boost::math::cdf(ref, 2.0 * x / 0.8)));
                }
            return at_most(worst, 1e-9, "absolute"); }));

        out.push_back(guarded("ncchi2.marcum_consistency", [&]
                              {
            double worst = 0.0;
            for (double k : {1.0, 2.5, 6.0})
                for (double lam : {0.0, 1.5, 30.0})
                    for (double x : {0.1, 1.0, 5.0, 40.0})
                    {
                        const NoncentralChi2Params p{k, lam, 1.7};
                        const double q = marcum_q(k, std::sqrt(2.0 * lam), std::sqrt(2.0 * x / 1.7));
                        worst = std::max({worst, std::abs(ncchi2_sf(p, x) - q), std::abs(1.0 - ncchi2_cdf(p, x) - q)});
                    }
            return at_most(worst, 1e-12, "absolute"); }));

        out.push_back(guarded("kappa_mu.round_trip", [&]
                              {
            double worst = 0.0;
            Rng rng(opt.seed, 900, 0);
            for (int i = 0; i < 200; ++i)
            {
                const NoncentralChi2Params p{rng.uniform(0.2, 40.0), rng.uniform(0.0, 80.0), std::exp(rng.uniform(-6.0, 6.0))};
                const NoncentralChi2Params q = from_kappa_mu(to_kappa_mu(p));
                worst = std::max({worst, std::abs(q.k - p.k) / p.k, std::abs(q.gamma_bar - p.gamma_bar) / p.gamma_bar,
                                  std::abs(q.lambda - p.lambda) / std::max(1.0, p.lambda)});
            }
            return at_most(worst, 1e-12); }));

        out.push_back(guarded("gk.pdf_normalization", [&]
                              {
            double worst = 0.0;
            for (double a : {0.6, 1.0, 3.0, 30.0, 400.0})
                for (double al : {1.0, 2.0, 7.5})
                    worst = std::max(worst, normalization_error([&](double x)
                                                                { return gk_pdf(a, al, x); },
                                                                a * al));
            return at_most(worst, 1e-6); }));

        out.push_back(guarded("gk.cdf_vs_pdf_quadrature", [&]
                              {
            double worst = 0.0;
            for (double a : {0.8, 2.0, 40.0})
                for (double al : {1.0, 3.0, 2.5})
                    for (double x : {0.2, 1.0, 3.0})
                    {
                        const double xx = x * a * al;
                        const double q = integrate_singular([&](double t)
                                                            { return t > 0.0 ? gk_pdf(a, al, t) : 0.0; },
                                                            0.0, xx, 1e-11);
                        worst = std::max(worst, std::abs(q - gk_cdf(a, al, xx)));
                    }
            return at_most(worst, 1e-7, "absolute"); }));

        const auto a2g_checks = [&](const A2GLink &link, const std::string &tag)
        {
            out.push_back(guarded("a2g.pdf_normalization" + tag, [&]
                                  {
                const A2GCharacterization c = characterize(link, psc, s.a2g_options);
                return at_most(normalization_error([&](double x)
                                                   { return a2g_pdf(c, x); },
                                                   a2g_mean(c)),
                               1e-6); }));
            out.push_back(guarded("a2g.cdf_monotone" + tag, [&]
                                  {
                const A2GCharacterization c = characterize(link, psc, s.a2g_options);
                const double m = a2g_mean(c);
                return at_most(monotonicity_violation([&](double x)
                                                      { return a2g_cdf(c, x); },
                                                      log_grid(1e-6 * m, 60.0 * m, 300)),
                               1e-12); }));
        };
        a2g_checks(links.a2g, "[N=" + std::to_string(links.a2g.N) + "]");
        {
            Scenario s4 = s;
            s4.ris_nh = s4.ris_nv = 2;
            a2g_checks(build_links(s4).a2g, "[N=4]");
        }

        out.push_back(guarded("a2g.cf_modulus_bound", [&]
                              {
            const A2GLink &link = links.a2g;
            Rng rng(opt.seed, 901, 0);
            double worst = 0.0;
            CVec hu, hd;
            std::vector<double> theta;
            for (int i = 0; i < 200; ++i)
            {
                sample_rician_vector(link.K_ur, link.los_ur, rng, hu);
                sample_rician_vector(link.K_rd, link.los_rd, rng, hd);
                resolve_phases(psc, link, hu, hd, hu, hd, rng, theta);
                const double scale = 1.0 / std::sqrt(link.N * std::pow(link.beta[0], 2));
                const cd w = std::polar(std::exp(rng.uniform(-3.0, 3.0)) * scale, rng.uniform(-pi, pi));
                worst = std::max(worst, std::abs(conditional_cf(link, theta, hu, hd, w)));
            }
            return at_most(worst, 1.0 + 1e-12); }));

        out.push_back(guarded("a2g.cf_vs_monte_carlo", [&]
                              {
            // small RIS with moderate aging so the conditional law is far from trivial
            A2GLink link{4, {1.0, 0.8, 0.6, 0.9}, 3.0, 5.0, 0.7, 0.6, 1.0, {}, {}};
            Rng rng(opt.seed, 902, 0);
            CVec hu, hd, u, d;
            const CVec ones(4, cd(1.0, 0.0));
            sample_rician_vector(link.K_ur, ones, rng, hu);
            sample_rician_vector(link.K_rd, ones, rng, hd);
            std::vector<double> theta;
            resolve_phases(PscConfig{}, link, hu, hd, hu, hd, rng, theta);
            const long long n = 40000;
            const cd w(0.7, -0.4);
            cd acc = 0.0;
            for (long long i = 0; i < n; ++i)
            {
                Rng r(opt.seed, 903, static_cast<std::uint64_t>(i));
                age_channel(hu, link.rho_ur, std::sqrt(1.0 - link.rho_ur * link.rho_ur), r, u);
                age_channel(hd, link.rho_rd, std::sqrt(1.0 - link.rho_rd * link.rho_rd), r, d);
                cd z = 0.0;
                for (int k = 0; k < 4; ++k)
                    z += d[k] * link.beta[k] * std::polar(1.0, theta[k]) * u[k];
                acc += std::polar(1.0, (std::conj(w) * z).real());
            }
            acc /= static_cast<double>(n);
            const double err = std::abs(acc - conditional_cf(link, theta, hu, hd, w));
            return at_most(err, 5.0 / std::sqrt(static_cast<double>(n)), "|empirical - analytic|, 5 sigma"); }));

        out.push_back(guarded("estimator.noncentral_chi2_identity", [&]
                              {
            Rng rng(opt.seed, 904, 0);
            double worst = 0.0;
            for (int i = 0; i < 1000; ++i)
            {
                const NoncentralChi2Params p{std::exp(rng.uniform(std::log(0.1), std::log(100.0))),
                                            std::exp(rng.uniform(std::log(0.05), std::log(100.0))),
                                            std::exp(rng.uniform(-7.0, 7.0))};
                const NoncentralChi2Params q = match_ncchi2(ncchi2_moments(p));
                worst = std::max({worst, std::abs(q.k - p.k) / p.k, std::abs(q.lambda - p.lambda) / p.lambda,
                                  std::abs(q.gamma_bar - p.gamma_bar) / p.gamma_bar});
            }
            return at_most(worst, 1e-9); }));

        if (opt.monte_carlo)
        {
            out.push_back(guarded("mc.g2a_ks[M=" + std::to_string(links.g2a.M) + "]", [&]
                                  {
                const TrialBatch b = sim_g2a(links.g2a, opt.trials, opt.seed);
                return at_most(ks_stat(b, [&](double x)
                                       { return g2a_cdf(links.g2a, x); }),
                               0.01); }));
            out.push_back(guarded("mc.a2g_ks[N=" + std::to_string(links.a2g.N) + "," + to_string(psc.kind) + "]", [&]
                                  {
                const A2GCharacterization c = characterize(links.a2g, psc, s.a2g_options);
                const TrialBatch b = sim_a2g(links.a2g, psc, opt.trials, opt.seed);
                const TabulatedCdf cdf([&](double x)
                                       { return a2g_cdf(c, x); },
                                       b.samples);
                return at_most(ks_stat(b, cdf), 0.015); }));
            out.push_back(guarded("mc.a2g_kl[N=4,delayed]", [&]
                                  {
                Scenario s4 = s;
                s4.ris_nh = s4.ris_nv = 2;
                const A2GLink link = build_links(s4).a2g;
                const A2GCharacterization c = characterize(link, PscConfig{}, s.a2g_options);
                const TrialBatch b = sim_a2g(link, PscConfig{}, opt.trials, opt.seed);
                return at_most(kl_vs_pdf(b, [&](double x)
                                         { return a2g_pdf(c, x); },
                                         s.kl_bins),
                               0.02); }));
        }
        return out;
    }

    bool all_passed(const std::vector<CheckResult> &r)
    {
        return std::all_of(r.begin(), r.end(), [](const CheckResult &c)
                           { return c.pass; });
    }

    void print_checks(std::ostream &os, const std::vector<CheckResult> &r)
    {
        for (const CheckResult &c : r)
        {
            os << (c.pass ? "PASS " : "FAIL ") << c.name << " value=" << format_double(c.value) << " limit=" << format_double(c.limit);
            if (!c.detail.empty())
                os << " (" << c.detail << ")";
            os << '\n';
        }
    }
}
