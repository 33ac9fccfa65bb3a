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

#include "aerolink/mc_oracle.hpp"
#include "aerolink/csv.hpp"
#include "aerolink/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace aerolink
{
    namespace
    {
        constexpr std::uint64_t kStreamG2A = 1;
        constexpr std::uint64_t kStreamA2G = 2;
        constexpr std::uint64_t kStreamEopG2A = 3;
        constexpr std::uint64_t kStreamEopA2G = 4;

        void check_n(long long n)
        {
            if (n < 1)
                throw std::invalid_argument("Monte Carlo: number of trials must be >= 1");
        }

        // Body(i, scratch) is called once per trial; Scratch is per worker.
        template <class Scratch, class Body>
        void run_trials(long long n, Execution ex, Body &&body)
        {
            if (ex == Execution::Serial)
            {
                Scratch sc;
                for (long long i = 0; i < n; ++i)
                    body(i, sc);
                return;
            }
#pragma omp parallel
            {
                Scratch sc;
#pragma omp for schedule(static)
                for (long long i = 0; i < n; ++i)
                    body(i, sc);
            }
        }

        struct G2AScratch
        {
            CVec hhat, h;
        };

        struct A2GScratch
        {
            CVec hu, hd, u, d;
            std::vector<double> theta;
        };

        CVec ones(int n) { return CVec(static_cast<std::size_t>(n), cd(1.0, 0.0)); }

        double g2a_trial(const G2ALink &link, const CVec &los, double rb, Rng &rng, G2AScratch &sc)
        {
            sample_rician_vector(link.K, los, rng, sc.hhat);
            age_channel(sc.hhat, link.rho, rb, rng, sc.h);
            cd ip = 0.0;
            double nrm = 0.0;
            for (std::size_t m = 0; m < sc.hhat.size(); ++m)
            {
                ip += std::conj(sc.h[m]) * sc.hhat[m];
                nrm += std::norm(sc.hhat[m]);
            }
            return link.gamma_bar * std::norm(ip) / nrm;
        }

        struct A2GPrepared
        {
            CVec los_ur, los_rd;
            double rb_ur, rb_rd;
        };

        A2GPrepared prepare(const A2GLink &link)
        {
            validate(link);
            return {link.los_ur.empty() ? ones(link.N) : link.los_ur, link.los_rd.empty() ? ones(link.N) : link.los_rd,
                    std::sqrt(std::max(0.0, 1.0 - link.rho_ur * link.rho_ur)),
                    std::sqrt(std::max(0.0, 1.0 - link.rho_rd * link.rho_rd))};
        }

        void a2g_draw(const A2GLink &link, const PscConfig &psc, const A2GPrepared &pp, Rng &rng, A2GScratch &sc)
        {
            sample_rician_vector(link.K_ur, pp.los_ur, rng, sc.hu);
            sample_rician_vector(link.K_rd, pp.los_rd, rng, sc.hd);
            age_channel(sc.hu, link.rho_ur, pp.rb_ur, rng, sc.u);
            age_channel(sc.hd, link.rho_rd, pp.rb_rd, rng, sc.d);
            resolve_phases(psc, link, sc.hu, sc.hd, sc.u, sc.d, rng, sc.theta);
        }

        double a2g_snr(const A2GLink &link, const A2GScratch &sc)
        {
            cd z = 0.0;
            for (int n = 0; n < link.N; ++n)
                z += sc.d[n] * link.beta[n] * std::polar(1.0, sc.theta[n]) * sc.u[n];
            return link.gamma_bar * std::norm(z);
        }

        std::vector<double> sorted_samples(const TrialBatch &b)
        {
            if (b.samples.empty())
                throw std::invalid_argument("mc_oracle: empty batch");
            std::vector<double> s = b.samples;
            std::sort(s.begin(), s.end());
            return s;
        }

        // Equal-mass bins on the sample quantiles; mass(a, b) gives the analytic probability of (a, b].
        template <class Mass>
        double kl_binned(const TrialBatch &batch, int n_bins, Mass &&mass)
        {
            if (n_bins < 2)
                throw std::invalid_argument("kl: need at least 2 bins");
            const std::vector<double> s = sorted_samples(batch);
            const std::size_t n = s.size();
            std::vector<double> edges(n_bins + 1);
            edges[0] = 0.0;
            edges[n_bins] = std::numeric_limits<double>::infinity();
            for (int j = 1; j < n_bins; ++j)
                edges[j] = s[static_cast<std::size_t>(static_cast<double>(j) * n / n_bins)];
            double kl = 0.0;
            for (int j = 0; j < n_bins; ++j)
            {
                if (!(edges[j + 1] > edges[j]))
                    continue;
                const auto lo = j == 0 ? s.begin() : std::upper_bound(s.begin(), s.end(), edges[j]);
                const auto hi = j + 1 == n_bins ? s.end() : std::upper_bound(s.begin(), s.end(), edges[j + 1]);
                const double cnt = static_cast<double>(std::distance(lo, hi));
                if (cnt == 0.0)
                    continue;
                const double p = cnt / static_cast<double>(n);
                const double q = std::max(mass(edges[j], edges[j + 1]), 1e-300);
                kl += p * std::log(p / q);
            }
            return std::max(0.0, kl);
        }
    }

    TrialBatch sim_g2a(const G2ALink &link, long long n, std::uint64_t seed, Execution ex)
    {
        validate(link);
        check_n(n);
        TrialBatch b{seed, n, std::vector<double>(static_cast<std::size_t>(n))};
        const CVec los = link.los.empty() ? ones(link.M) : link.los;
        const double rb = std::sqrt(std::max(0.0, 1.0 - link.rho * link.rho));
        run_trials<G2AScratch>(n, ex, [&](long long i, G2AScratch &sc)
                               {
            Rng rng(seed, kStreamG2A, static_cast<std::uint64_t>(i));
            b.samples[i] = g2a_trial(link, los, rb, rng, sc); });
        return b;
    }

    TrialBatch sim_a2g(const A2GLink &link, const PscConfig &psc, long long n, std::uint64_t seed, Execution ex)
    {
        validate(psc);
        check_n(n);
        const A2GPrepared pp = prepare(link);
        TrialBatch b{seed, n, std::vector<double>(static_cast<std::size_t>(n))};
        run_trials<A2GScratch>(n, ex, [&](long long i, A2GScratch &sc)
                               {
            Rng rng(seed, kStreamA2G, static_cast<std::uint64_t>(i));
            a2g_draw(link, psc, pp, rng, sc);
            b.samples[i] = a2g_snr(link, sc); });
        return b;
    }

    ConditioningBatch sim_a2g_conditioning(const A2GLink &link, const PscConfig &psc, long long n, std::uint64_t seed, Execution ex)
    {
        validate(psc);
        check_n(n);
        const A2GPrepared pp = prepare(link);
        ConditioningBatch out{std::vector<double>(n), std::vector<double>(n)};
        run_trials<A2GScratch>(n, ex, [&](long long i, A2GScratch &sc)
                               {
            Rng rng(seed, kStreamA2G, static_cast<std::uint64_t>(i));
            a2g_draw(link, psc, pp, rng, sc);
            const GaussianConditioning g = gaussian_conditioning(link, sc.theta, sc.hu, sc.hd);
            out.sigma_z2[i] = g.sigma_z2;
            out.mu_abs2[i] = std::norm(g.mu_z); });
        return out;
    }

    double EopEstimate::stderr_binomial() const
    {
        return n > 0 ? std::sqrt(std::max(p * (1.0 - p), 0.0) / static_cast<double>(n)) : 0.0;
    }

    EopEstimate sim_eop(const G2ALink &g2a, const A2GLink &a2g, const PscConfig &psc, double gamma_th, long long n,
                        std::uint64_t seed, Execution ex)
    {
        validate(g2a);
        validate(psc);
        check_n(n);
        if (!(gamma_th >= 0.0))
            throw std::invalid_argument("sim_eop: threshold must be nonnegative");
        const A2GPrepared pp = prepare(a2g);
        const CVec los = g2a.los.empty() ? ones(g2a.M) : g2a.los;
        const double rb = std::sqrt(std::max(0.0, 1.0 - g2a.rho * g2a.rho));
        struct Scratch
        {
            G2AScratch g;
            A2GScratch a;
        };
        std::vector<unsigned char> hit(static_cast<std::size_t>(n), 0);
        run_trials<Scratch>(n, ex, [&](long long i, Scratch &sc)
                            {
            Rng rg(seed, kStreamEopG2A, static_cast<std::uint64_t>(i));
            Rng ra(seed, kStreamEopA2G, static_cast<std::uint64_t>(i));
            const double x = g2a_trial(g2a, los, rb, rg, sc.g);
            a2g_draw(a2g, psc, pp, ra, sc.a);
            const double y = a2g_snr(a2g, sc.a);
            hit[i] = std::min(x, y) < gamma_th ? 1 : 0; });
        EopEstimate e;
        e.n = n;
        for (unsigned char h : hit)
            e.outages += h;
        e.p = static_cast<double>(e.outages) / static_cast<double>(n);
        return e;
    }

    double pairwise_sum(const double *x, std::size_t n)
    {
        if (n <= 16)
        {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                s += x[i];
            return s;
        }
        const std::size_t h = n / 2;
        return pairwise_sum(x, h) + pairwise_sum(x + h, n - h);
    }

    double pairwise_sum(const std::vector<double> &x) { return pairwise_sum(x.data(), x.size()); }

    SampleMoments sample_moments(const std::vector<double> &x)
    {
        if (x.empty())
            throw std::invalid_argument("sample_moments: empty sample");
        const double n = static_cast<double>(x.size());
        SampleMoments m;
        m.mean = pairwise_sum(x) / n;
        std::vector<double> d2(x.size()), d3(x.size());
        for (std::size_t i = 0; i < x.size(); ++i)
        {
            const double d = x[i] - m.mean;
            d2[i] = d * d;
            d3[i] = d * d * d;
        }
        m.variance = pairwise_sum(d2) / n;
        m.mu3 = pairwise_sum(d3) / n;
        return m;
    }

    std::vector<double> ecdf(const TrialBatch &batch, const std::vector<double> &grid)
    {
        const std::vector<double> s = sorted_samples(batch);
        std::vector<double> out(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i)
            out[i] = static_cast<double>(std::upper_bound(s.begin(), s.end(), grid[i]) - s.begin()) / static_cast<double>(s.size());
        return out;
    }

    double ks_stat(const TrialBatch &batch, const std::function<double(double)> &cdf)
    {
        const std::vector<double> s = sorted_samples(batch);
        const double n = static_cast<double>(s.size());
        double d = 0.0;
        for (std::size_t i = 0; i < s.size(); ++i)
        {
            // ties: the ECDF jumps once, at the last copy
            if (i + 1 < s.size() && s[i + 1] == s[i])
                continue;
            std::size_t first = i;
            while (first > 0 && s[first - 1] == s[i])
                --first;
            const double F = cdf(s[i]);
            d = std::max({d, (i + 1) / n - F, F - first / n});
        }
        return std::clamp(d, 0.0, 1.0);
    }

    double kl_vs_pdf(const TrialBatch &batch, const std::function<double(double)> &pdf, int n_bins)
    {
        const Integrand f = [&](double x)
        { return x > 0.0 ? pdf(x) : 0.0; };
        return kl_binned(batch, n_bins, [&](double a, double b)
                         {
            if (std::isinf(b))
                return integrate_to_inf(f, a, 1e-7);
            if (a == 0.0)
                return integrate_singular(f, a, b, 1e-7);
            return integrate(f, a, b, 1e-7); });
    }

    double kl_vs_cdf(const TrialBatch &batch, const std::function<double(double)> &cdf, int n_bins)
    {
        return kl_binned(batch, n_bins, [&](double a, double b)
                         {
            const double fa = a > 0.0 ? cdf(a) : 0.0;
            const double fb = std::isinf(b) ? 1.0 : cdf(b);
            return fb - fa; });
    }

    TabulatedCdf::TabulatedCdf(const std::function<double(double)> &cdf, const std::vector<double> &samples, int nodes) : cdf_(cdf)
    {
        if (samples.empty())
            throw std::invalid_argument("TabulatedCdf: empty sample");
        if (nodes < 2)
            throw std::invalid_argument("TabulatedCdf: need at least 2 nodes");
        std::vector<double> s = samples;
        std::sort(s.begin(), s.end());
        for (int j = 0; j < nodes; ++j)
        {
            const double x = s[static_cast<std::size_t>(std::llround(static_cast<double>(j) * (s.size() - 1) / (nodes - 1)))];
            if (x_.empty() || x > x_.back())
                x_.push_back(x);
        }
        f_.resize(x_.size());
        for (std::size_t i = 0; i < x_.size(); ++i)
            f_[i] = cdf(x_[i]);
    }

    double TabulatedCdf::operator()(double x) const
    {
        if (x <= x_.front() || x >= x_.back())
            return cdf_(x);
        const auto it = std::upper_bound(x_.begin(), x_.end(), x);
        const std::size_t i = static_cast<std::size_t>(it - x_.begin());
        const double t = (x - x_[i - 1]) / (x_[i] - x_[i - 1]);
        return f_[i - 1] + t * (f_[i] - f_[i - 1]);
    }

    FitReport fit_report(const TrialBatch &batch, const std::function<double(double)> &cdf,
                         const std::function<double(double)> &pdf, int n_bins)
    {
        FitReport r;
        r.n_bins = n_bins;
        r.ks = ks_stat(batch, cdf);
        r.kl = pdf ? kl_vs_pdf(batch, pdf, n_bins) : kl_vs_cdf(batch, cdf, n_bins);
        r.notes = pdf ? "kl from pdf quadrature" : "kl from cdf differences";
        return r;
    }

    void write_batch_csv(std::ostream &os, const TrialBatch &batch)
    {
        CsvWriter w(os, {"trial_index", "sample"});
        for (std::size_t i = 0; i < batch.samples.size(); ++i)
            w.cell(i).cell(batch.samples[i]).end_row();
    }

    void write_report_csv(std::ostream &os, const FitReport &r)
    {
        CsvWriter w(os, {"statistic", "value"});
        w.cell(std::string_view("ks")).cell(r.ks).end_row();
        w.cell(std::string_view("kl")).cell(r.kl).end_row();
        w.cell(std::string_view("n_bins")).cell(r.n_bins).end_row();
        w.cell(std::string_view("notes")).cell(std::string_view(r.notes)).end_row();
    }
}
