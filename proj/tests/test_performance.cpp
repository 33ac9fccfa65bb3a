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
#include "aerolink/mc_oracle.hpp"
#include "aerolink/g2a.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

using namespace aerolink;

namespace
{
    Scenario small_scenario(double p_dbm)
    {
        Scenario s = default_scenario();
        s.ris_nh = s.ris_nv = 4;
        s.bs_nh = s.bs_nv = 2;
        s.p_s_dbm = s.p_u_dbm = p_dbm;
        return s;
    }

    struct Evaluated
    {
        LinkSet links;
        A2GCharacterization chr;
    };

    Evaluated evaluate(const Scenario &s)
    {
        Evaluated e{build_links(s), {}};
        e.chr = characterize(e.links.a2g, s.psc, s.a2g_options);
        return e;
    }
}

TEST_SUITE("performance")
{
    TEST_CASE("threshold and spectral efficiency")
    {
        CHECK(threshold_from_se(1.0) == doctest::Approx(3.0).epsilon(1e-15));
        CHECK(threshold_from_se(0.5) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(se_from_threshold(3.0) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(OutageQuery{2.0}.gamma_th() == doctest::Approx(15.0));
        CHECK_THROWS_AS(se_from_threshold(-1.0), std::invalid_argument);
    }

    TEST_CASE("independence composition")
    {
        const Evaluated e = evaluate(small_scenario(20.0));
        for (double g : {0.1, 1.0, 3.0, 10.0})
        {
            const double fg = g2a_cdf(e.links.g2a, g), fa = a2g_cdf(e.chr, g);
            CHECK(1.0 - eop(e.links.g2a, e.chr, g) == doctest::Approx((1.0 - fg) * (1.0 - fa)).epsilon(1e-14));
        }
        CHECK(eop(e.links.g2a, e.chr, 0.0) == 0.0);
        CHECK_THROWS_AS(eop(e.links.g2a, e.chr, -1.0), std::invalid_argument);
    }

    TEST_CASE("monotone in threshold and in transmit powers")
    {
        const Evaluated e = evaluate(small_scenario(20.0));
        double prev = 0.0;
        for (int i = 1; i <= 60; ++i)
        {
            const double v = eop(e.links.g2a, e.chr, 0.25 * i);
            CHECK(v >= prev);
            prev = v;
        }
        const double gth = threshold_from_se(1.0);
        double prev_s = 1.0, prev_u = 1.0;
        for (double p = 0.0; p <= 40.0; p += 5.0)
        {
            Scenario a = small_scenario(20.0), b = small_scenario(20.0);
            a.p_s_dbm = p;
            b.p_u_dbm = p;
            const Evaluated ea = evaluate(a), eb = evaluate(b);
            const double va = eop(ea.links.g2a, ea.chr, gth), vb = eop(eb.links.g2a, eb.chr, gth);
            CHECK(va <= prev_s + 1e-15);
            CHECK(vb <= prev_u + 1e-15);
            prev_s = va, prev_u = vb;
        }
    }

    TEST_CASE("outage floor")
    {
        G2ALink l;
        l.M = 1, l.K = 10.0, l.rho = 0.5, l.gamma_bar = 100.0;
        CHECK(eop_floor(l, 3.0) > 0.0);
        G2ALink h = l;
        h.gamma_bar = 200.0;
        CHECK(eop_floor(h, 3.0) == doctest::Approx(0.5 * eop_floor(l, 3.0)).epsilon(1e-14));
        const Evaluated e = evaluate(small_scenario(50.0));
        const double gth = threshold_from_se(1.0);
        CHECK(eop(e.links.g2a, e.chr, gth) >= g2a_cdf(e.links.g2a, gth));
    }

    TEST_CASE("analytic outage against Monte Carlo")
    {
        for (double p : {45.0, 50.0})
        {
            Scenario s = small_scenario(p);
            s.ris_nh = s.ris_nv = 8;
            const Evaluated e = evaluate(s);
            const double gth = threshold_from_se(1.0);
            const double a = eop(e.links.g2a, e.chr, gth);
            const EopEstimate mc = sim_eop(e.links.g2a, e.links.a2g, s.psc, gth, 100000, 3);
            CAPTURE(p);
            REQUIRE(a > 1e-3);
            // the matched A2G law carries a few percent of model error on top of sampling noise
            CHECK(std::abs(mc.p - a) <= 3.0 * mc.stderr_binomial() + 0.03 * a);
        }
    }

    TEST_CASE("adaptive threshold meets the budget")
    {
        Rng rng(31, 0, 0);
        for (int i = 0; i < 12; ++i)
        {
            Scenario s = small_scenario(rng.uniform(20.0, 60.0));
            s.t_k = static_cast<long long>(rng.uniform(0.0, 6000.0));
            s.ris_nh = s.ris_nv = 2 + static_cast<int>(rng.uniform() * 6);
            const Evaluated e = evaluate(s);
            const AdaptivePolicy pol{std::exp(rng.uniform(std::log(1e-5), std::log(1e-2)))};
            const AdaptiveResult r = adaptive_gamma_th(e.links.g2a, e.chr, pol);
            CAPTURE(i);
            CHECK(r.gamma_th > 0.0);
            CHECK(r.eop_exact <= 1.05 * pol.L);
            CHECK(r.eop_exact == doctest::Approx(eop(e.links.g2a, e.chr, r.gamma_th)));
            CHECK(r.se == doctest::Approx(0.5 * std::log2(1.0 + r.gamma_th)));
            if (!r.refined)
                CHECK(r.gamma_th == std::min(r.gamma_g2a, r.gamma_a2g));
        }
    }

    TEST_CASE("adaptive threshold grows with the budget")
    {
        const Evaluated e = evaluate(small_scenario(40.0));
        double prev = 0.0;
        for (double L : {1e-6, 1e-5, 1e-4, 1e-3, 1e-2, 1e-1})
        {
            const double g = adaptive_gamma_th(e.links.g2a, e.chr, {L}).gamma_th;
            CHECK(g > prev);
            prev = g;
        }
        CHECK_THROWS_AS(adaptive_gamma_th(e.links.g2a, e.chr, {0.0}), std::invalid_argument);
        CHECK_THROWS_AS(adaptive_gamma_th(e.links.g2a, e.chr, {1.0}), std::invalid_argument);
    }

    TEST_CASE("ground hop share of the outage grows with the surface")
    {
        double prev = -1.0;
        for (int side : {4, 16, 100})
        {
            Scenario s = default_scenario();
            s.ris_nh = s.ris_nv = side;
            s.p_s_dbm = s.p_u_dbm = 30.0;
            const Evaluated e = evaluate(s);
            const AdaptiveResult r = adaptive_gamma_th(e.links.g2a, e.chr, {1e-4});
            const double share = g2a_cdf(e.links.g2a, r.gamma_th) / r.eop_exact;
            CAPTURE(side);
            CHECK(share > prev);
            CHECK(share <= 1.0 + 1e-9);
            prev = share;
        }
    }

    TEST_CASE("static nodes give a constant series")
    {
        const Scenario s = small_scenario(30.0);
        const std::vector<Snapshot> snaps(6, initial_snapshot(s));
        const auto pts = eop_trajectory(s, snaps, AdaptivePolicy{1e-4});
        REQUIRE(pts.size() == 6);
        for (const TrajectoryPoint &p : pts)
        {
            CHECK(p.eop_fixed == pts[0].eop_fixed);
            CHECK(p.avg_eop_fixed == doctest::Approx(pts[0].eop_fixed).epsilon(1e-14));
            CHECK(p.adapt.gamma_th == pts[0].adapt.gamma_th);
        }
    }

    TEST_CASE("running averages along a moving trajectory")
    {
        const Scenario s = small_scenario(30.0);
        const auto pts = eop_trajectory(s, 20, AdaptivePolicy{1e-4}, 5);
        double sum = 0.0;
        for (std::size_t k = 0; k < pts.size(); ++k)
        {
            sum += pts[k].eop_fixed;
            CHECK(pts[k].k == static_cast<int>(k + 1));
            CHECK(pts[k].avg_eop_fixed == doctest::Approx(sum / (k + 1)).epsilon(1e-14));
            CHECK(pts[k].adapt.eop_exact <= 1.05e-4);
            CHECK(pts[k].avg_eop_adaptive <= 1.05e-4);
        }
        // serial and parallel evaluation agree exactly
        const auto again = eop_trajectory(s, generate_snapshots(s, 20, 5), AdaptivePolicy{1e-4});
        for (std::size_t k = 0; k < pts.size(); ++k)
            CHECK(again[k].eop_fixed == pts[k].eop_fixed);
        CHECK_THROWS_AS(eop_trajectory(s, std::vector<Snapshot>{}, std::nullopt), std::invalid_argument);
    }
}
