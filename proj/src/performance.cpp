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

#include "aerolink/performance.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>

namespace aerolink
{
    double threshold_from_se(double R)
    {
        if (!(R > 0.0) || !std::isfinite(R))
            throw std::invalid_argument("threshold_from_se: target SE must be positive");
        return std::expm1(2.0 * R * std::log(2.0));
    }

    double se_from_threshold(double gamma_th)
    {
        if (!(gamma_th >= 0.0))
            throw std::invalid_argument("se_from_threshold: threshold must be nonnegative");
        return 0.5 * std::log2(1.0 + gamma_th);
    }

    double OutageQuery::gamma_th() const { return threshold_from_se(target_se); }

    double eop(const G2ALink &g2a, const A2GCharacterization &a2g, double gamma_th)
    {
        if (!(gamma_th >= 0.0))
            throw std::invalid_argument("eop: threshold must be nonnegative");
        if (gamma_th == 0.0)
            return 0.0;
        const double fg = g2a_cdf(g2a, gamma_th);
        const double fa = a2g_cdf(a2g, gamma_th);
        return std::clamp(1.0 - (1.0 - fg) * (1.0 - fa), 0.0, 1.0);
    }

    double eop(const G2ALink &g2a, const A2GCharacterization &a2g, const OutageQuery &q) { return eop(g2a, a2g, q.gamma_th()); }

    double eop_asymptotic(const G2ALink &g2a, const A2GCharacterization &a2g, double gamma_th)
    {
        if (!(gamma_th > 0.0))
            return 0.0;
        const double fg = std::clamp(g2a_cdf_asymptotic(g2a, gamma_th), 0.0, 1.0);
        const double fa = std::clamp(a2g_cdf_asymptotic(a2g, gamma_th), 0.0, 1.0);
        return 1.0 - (1.0 - fg) * (1.0 - fa);
    }

    double eop_floor(const G2ALink &g2a, double gamma_th)
    {
        if (!(gamma_th > 0.0))
            throw std::invalid_argument("eop_floor: threshold must be positive");
        return std::min(1.0, g2a_cdf_asymptotic(g2a, gamma_th));
    }

    void validate(const AdaptivePolicy &p)
    {
        if (!(p.L > 0.0 && p.L < 1.0))
            throw std::invalid_argument("AdaptivePolicy: outage budget L must lie in (0, 1)");
    }

    AdaptiveResult adaptive_gamma_th(const G2ALink &g2a, const A2GCharacterization &a2g, const AdaptivePolicy &policy)
    {
        validate(policy);
        const double L = policy.L;
        AdaptiveResult r;

        const double slope = g2a_cdf_slope(g2a);
        r.gamma_g2a = slope > 0.0 ? L / slope : std::numeric_limits<double>::infinity();

        const double omega = a2g.gamma_bar_a2g * a2g.sigma2.mean;
        r.gamma_a2g = a2g.gamma_bar_R * omega *
                      (q_inv(1.0 - L) * std::sqrt(a2g.k_R + 2.0 * a2g.lambda_R) + a2g.k_R + a2g.lambda_R);

        double g = std::min(r.gamma_g2a, r.gamma_a2g);
        if (!std::isfinite(g))
            g = 1e300;
        auto exact = [&](double x)
        { return x > 0.0 ? eop(g2a, a2g, x) : 0.0; };

        double e = g > 0.0 ? exact(g) : 1.0;
        if (!(g > 0.0) || e > L)
        {
            r.refined = true;
            double hi = g > 0.0 ? g : std::max(1e-300, a2g_mean(a2g));
            double lo = hi;
            double elo = exact(lo);
            for (int i = 0; i < 2000 && elo > L; ++i)
            {
                hi = lo;
                lo *= 0.5;
                elo = exact(lo);
            }
            if (elo > L)
                throw std::domain_error("adaptive_gamma_th: no positive threshold meets the outage budget");
            for (int i = 0; i < 80 && hi / lo > 1.0 + 1e-12; ++i)
            {
                const double mid = std::sqrt(lo * hi);
                if (exact(mid) <= L)
                    lo = mid;
                else
                    hi = mid;
            }
            g = lo;
            e = exact(g);
        }
        r.gamma_th = g;
        r.se = se_from_threshold(g);
        r.eop_exact = e;
        r.eop_asymptotic = eop_asymptotic(g2a, a2g, g);
        return r;
    }

    std::vector<TrajectoryPoint> eop_trajectory(const Scenario &s, const std::vector<Snapshot> &snaps,
                                                const std::optional<AdaptivePolicy> &policy)
    {
        validate(s);
        if (snaps.empty())
            throw std::invalid_argument("eop_trajectory: steps must be >= 1");
        if (policy)
            validate(*policy);
        const int steps = static_cast<int>(snaps.size());
        const double gth = threshold_from_se(s.target_se);
        std::vector<TrajectoryPoint> pts(steps);
        std::exception_ptr err;

#pragma omp parallel for schedule(dynamic)
        for (int k = 0; k < steps; ++k)
        {
            try
            {
                const LinkSet links = build_links(s, snaps[k]);
                const A2GCharacterization chr = characterize(links.a2g, s.psc, s.a2g_options);
                TrajectoryPoint &p = pts[k];
                p.k = k + 1;
                p.snapshot = snaps[k];
                p.rho_su = links.g2a.rho;
                p.rho_ur = links.a2g.rho_ur;
                p.rho_rd = links.a2g.rho_rd;
                p.se_fixed = s.target_se;
                p.eop_fixed = eop(links.g2a, chr, gth);
                if (policy)
                {
                    p.adaptive = true;
                    p.adapt = adaptive_gamma_th(links.g2a, chr, *policy);
                }
            }
            catch (...)
            {
#pragma omp critical
                if (!err)
                    err = std::current_exception();
            }
        }
        if (err)
            std::rethrow_exception(err);

        double sum_fixed = 0.0, sum_adapt = 0.0, sum_se = 0.0;
        for (int k = 0; k < steps; ++k)
        {
            sum_fixed += pts[k].eop_fixed;
            pts[k].avg_eop_fixed = sum_fixed / (k + 1);
            if (policy)
            {
                sum_adapt += pts[k].adapt.eop_exact;
                sum_se += pts[k].adapt.se;
                pts[k].avg_eop_adaptive = sum_adapt / (k + 1);
                pts[k].avg_se_adaptive = sum_se / (k + 1);
            }
        }
        return pts;
    }

    std::vector<TrajectoryPoint> eop_trajectory(const Scenario &s, int steps, const std::optional<AdaptivePolicy> &policy,
                                                std::uint64_t seed)
    {
        return eop_trajectory(s, generate_snapshots(s, steps, seed), policy);
    }
}
