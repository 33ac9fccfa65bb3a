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
#include "aerolink/mc_oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace aerolink;

namespace
{
    A2GLink test_link(int N, double rho_ur, double rho_rd, double K_ur = 5.0, double K_rd = 8.0)
    {
        A2GLink l;
        l.N = N;
        l.K_ur = K_ur;
        l.K_rd = K_rd;
        l.rho_ur = rho_ur;
        l.rho_rd = rho_rd;
        l.gamma_bar = 2.0;
        Rng rng(77, 0, 0);
        for (int n = 0; n < N; ++n)
        {
            l.beta.push_back(rng.uniform(0.5, 1.5));
            l.los_ur.push_back(std::polar(1.0, rng.uniform(-pi, pi)));
            l.los_rd.push_back(std::polar(1.0, rng.uniform(-pi, pi)));
        }
        return l;
    }

    PscConfig psc_of(PscKind k, int bits = 0)
    {
        PscConfig p;
        p.kind = k;
        p.quantization_bits = bits;
        if (k == PscKind::Fixed)
            p.theta = {0.4};
        return p;
    }

    double mean_of(const std::vector<double> &v) { return sample_moments(v).mean; }
}

TEST_SUITE("a2g")
{
    TEST_CASE("PSC configuration")
    {
        for (PscKind k : {PscKind::Delayed, PscKind::RandomUniform, PscKind::Fixed, PscKind::LoSBased, PscKind::IdealBenchmark})
            CHECK(psc_kind_from_string(to_string(k)) == k);
        CHECK_THROWS_AS(psc_kind_from_string("optimal"), std::invalid_argument);
        PscConfig p;
        p.kind = PscKind::RandomUniform;
        p.a = 1.0, p.b = 0.5;
        CHECK_THROWS_AS(validate(p), std::invalid_argument);
        p = PscConfig{};
        p.kind = PscKind::Fixed;
        CHECK_THROWS_AS(validate(p), std::invalid_argument);
        p = PscConfig{};
        p.quantization_bits = 31;
        CHECK_THROWS_AS(validate(p), std::invalid_argument);
    }

    TEST_CASE("phase quantization")
    {
        CHECK(quantize_phase(0.8, 0) == 0.8);
        CHECK(quantize_phase(0.8, 2) == doctest::Approx(pi / 2));
        CHECK(quantize_phase(-0.1, 2) == doctest::Approx(0.0));
        CHECK(quantize_phase(-1.0, 2) == doctest::Approx(1.5 * pi));
        CHECK(quantize_phase(3.1, 1) == doctest::Approx(pi));
        Rng rng(2, 0, 0);
        for (int i = 0; i < 500; ++i)
        {
            const double t = rng.uniform(-10.0, 10.0);
            const double q = quantize_phase(t, 3);
            CHECK(q >= 0.0);
            CHECK(q < 2 * pi);
            CHECK(std::abs(std::remainder(q - t, 2 * pi)) <= pi / 8 + 1e-12);
        }
    }

    TEST_CASE("phase rules")
    {
        const A2GLink l = test_link(6, 0.9, 0.8);
        Rng rng(3, 0, 0);
        const CVec hu = sample_rician_vector(l.K_ur, l.los_ur, rng), hd = sample_rician_vector(l.K_rd, l.los_rd, rng);
        const CVec u = age_channel(hu, AgingState::from_rho(0.9), rng), d = age_channel(hd, AgingState::from_rho(0.8), rng);
        std::vector<double> th;
        resolve_phases(psc_of(PscKind::Delayed), l, hu, hd, u, d, rng, th);
        for (int n = 0; n < l.N; ++n)
            CHECK(std::abs(std::arg(hd[n] * std::polar(1.0, th[n]) * hu[n])) < 1e-12);
        resolve_phases(psc_of(PscKind::LoSBased), l, hu, hd, u, d, rng, th);
        for (int n = 0; n < l.N; ++n)
            CHECK(std::abs(std::arg(l.los_rd[n] * std::polar(1.0, th[n]) * l.los_ur[n])) < 1e-12);
        resolve_phases(psc_of(PscKind::IdealBenchmark), l, hu, hd, u, d, rng, th);
        for (int n = 0; n < l.N; ++n)
            CHECK(std::abs(std::arg(d[n] * std::polar(1.0, th[n]) * u[n])) < 1e-12);
        resolve_phases(psc_of(PscKind::Fixed), l, hu, hd, u, d, rng, th);
        for (double t : th)
            CHECK(t == 0.4);
    }

    TEST_CASE("Rician envelope moments")
    {
        // mpmath quadrature of the Rician envelope density at unit power
        CHECK(rician_envelope_mean(0.0) == doctest::Approx(0.88622692545275801).epsilon(1e-13));
        CHECK(rician_envelope_mean(1.0) == doctest::Approx(0.90645402552196947).epsilon(1e-12));
        CHECK(rician_envelope_mean(10.0) == doctest::Approx(0.97762439090461111).epsilon(1e-12));
        CHECK(mu_hat_abs_moment(0.5, 10.0, 1.0) == doctest::Approx(0.97762439090461111 * 0.90645402552196947).epsilon(1e-12));
        CHECK(mu_hat_abs_moment(1.0, 3.0, 7.0) == doctest::Approx(1.0).epsilon(1e-14));
        const double K = 4.0, e4 = (K * K + 4 * K + 2) / ((K + 1) * (K + 1));
        CHECK(mu_hat_abs_moment(2.0, K, K) == doctest::Approx(e4 * e4).epsilon(1e-13));
        CHECK_THROWS_AS(mu_hat_abs_moment(0.3, 1.0, 1.0), std::invalid_argument);
    }

    TEST_CASE("noncentral chi-square estimator identity")
    {
        Rng rng(1234, 0, 0);
        for (int i = 0; i < 1000; ++i)
        {
            const NoncentralChi2Params p{std::exp(rng.uniform(-2.0, 4.0)), std::exp(rng.uniform(-3.0, 4.5)), std::exp(rng.uniform(-6.0, 6.0))};
            const NoncentralChi2Params q = match_ncchi2(ncchi2_moments(p));
            CHECK(q.k == doctest::Approx(p.k).epsilon(1e-9));
            CHECK(q.lambda == doctest::Approx(p.lambda).epsilon(1e-9));
            CHECK(q.gamma_bar == doctest::Approx(p.gamma_bar).epsilon(1e-9));
        }
        // central moment sets fall back to the Gamma match
        const NoncentralChi2Params c = match_ncchi2(ncchi2_moments({3.0, 0.0, 2.0}));
        CHECK(c.lambda == 0.0);
        CHECK(c.k == doctest::Approx(3.0));
        CHECK(c.gamma_bar == doctest::Approx(2.0));
        CHECK_THROWS_AS(match_ncchi2({0.0, 1.0, 1.0}), std::invalid_argument);
    }

    TEST_CASE("law of total cumulance with a constant noncentrality")
    {
        const MomentTriple x{2.5, 0.0, 0.0};
        const MomentTriple a = ltc_moments(1.5, 0.7, x);
        const MomentTriple b = ncchi2_moments({1.5, 2.5, 0.7});
        CHECK(a.mean == doctest::Approx(b.mean));
        CHECK(a.variance == doctest::Approx(b.variance));
        CHECK(a.mu3 == doctest::Approx(b.mu3));
    }

    TEST_CASE("conditional CF")
    {
        const A2GLink l = test_link(8, 0.7, 0.6);
        Rng rng(5, 0, 0);
        const CVec hu = sample_rician_vector(l.K_ur, l.los_ur, rng), hd = sample_rician_vector(l.K_rd, l.los_rd, rng);
        std::vector<double> th(l.N, 0.3);
        CHECK(std::abs(conditional_cf(l, th, hu, hd, 0.0) - cd(1.0)) < 1e-15);
        for (int i = 0; i < 200; ++i)
        {
            const cd w(rng.normal() * 3, rng.normal() * 3);
            CHECK(std::abs(conditional_cf(l, th, hu, hd, w)) <= 1.0 + 1e-15);
        }
        // small-argument expansion matches the Gaussian conditioning moments
        const GaussianConditioning g = gaussian_conditioning(l, th, hu, hd);
        const cd w = std::polar(1e-4, 0.8);
        const cd phi = conditional_cf(l, th, hu, hd, w);
        CHECK(std::log(std::abs(phi)) == doctest::Approx(-0.25 * std::norm(w) * g.sigma_z2).epsilon(1e-6));
        CHECK(std::arg(phi) == doctest::Approx((std::conj(w) * g.mu_z).real()).epsilon(1e-12));
    }

    TEST_CASE("conditioning moments against Monte Carlo")
    {
        const A2GLink l = test_link(16, 0.85, 0.75);
        const long long n = 100000;
        for (const PscConfig &psc : {psc_of(PscKind::Delayed), psc_of(PscKind::RandomUniform, 2), psc_of(PscKind::Fixed),
                                     psc_of(PscKind::LoSBased), psc_of(PscKind::LoSBased, 3)})
        {
            CAPTURE(to_string(psc.kind));
            CAPTURE(psc.quantization_bits);
            const ConditioningBatch b = sim_a2g_conditioning(l, psc, n, 9);
            const MomentTriple s2 = sigma_z2_moments(l);
            const SampleMoments ms = sample_moments(b.sigma_z2);
            CHECK(ms.mean == doctest::Approx(s2.mean).epsilon(5e-3));
            CHECK(ms.variance == doctest::Approx(s2.variance).epsilon(3e-2));
            const MuZMoments mu = mu_z_moments(l, psc);
            CHECK(mean_of(b.mu_abs2) == doctest::Approx(mu.mean_abs2).epsilon(2e-2));
            const double mc_avg = mean_of(sim_a2g(l, psc, n, 10).samples);
            CHECK(mc_avg == doctest::Approx(avg_a2g_snr(l, psc)).epsilon(2e-2));
        }
    }

    TEST_CASE("quantized delayed PSC with uniform estimate phases")
    {
        const A2GLink l = test_link(16, 0.9, 0.9, 0.0, 0.0);
        const PscConfig psc = psc_of(PscKind::Delayed, 2);
        const ConditioningBatch b = sim_a2g_conditioning(l, psc, 100000, 4);
        CHECK(mean_of(b.mu_abs2) == doctest::Approx(mu_z_moments(l, psc).mean_abs2).epsilon(2e-2));
        const double unq = mu_z_moments(l, psc_of(PscKind::Delayed)).mean_abs2;
        CHECK(mu_z_moments(l, psc).mean_abs2 < unq);
    }

    TEST_CASE("ratio statistic matches Monte Carlo")
    {
        const A2GLink l = test_link(16, 0.95, 0.95);
        const PscConfig psc = psc_of(PscKind::Delayed);
        const A2GCharacterization c = characterize(l, psc);
        const ConditioningBatch b = sim_a2g_conditioning(l, psc, 100000, 12);
        const double es = mean_of(b.sigma_z2), emu = mean_of(b.mu_abs2);
        CHECK(c.mean_gamma_r == doctest::Approx((es + emu) / es).epsilon(2e-2));
        CHECK(c.k_R == 1.0);
        CHECK(c.lambda_R > 0.0);
        CHECK(c.diagnostics.empty());
    }

    TEST_CASE("distribution normalization and agreement at small N")
    {
        const A2GLink l = test_link(4, 0.8, 0.7);
        const PscConfig psc = psc_of(PscKind::Delayed);
        const A2GCharacterization c = characterize(l, psc);
        const double m = a2g_mean(c);
        CHECK(m == doctest::Approx(avg_a2g_snr(l, psc)).epsilon(1e-9));
        const double mass = integrate([&](double z)
                                      { return z > 0.0 ? a2g_pdf(c, z) : 0.0; },
                                      0.0, 40.0 * m, 1e-9);
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-5));
        double prev = 0.0;
        for (int i = 1; i <= 200; ++i)
        {
            const double f = a2g_cdf(c, 0.03 * i * m);
            CHECK(f >= prev - 1e-12);
            prev = f;
        }
        CHECK(a2g_cdf(c, 0.0) == 0.0);
    }

    TEST_CASE("agreement with Monte Carlo improves with the surface size")
    {
        const PscConfig psc = psc_of(PscKind::Delayed);
        std::vector<double> ks;
        for (int N : {4, 64})
        {
            const A2GLink l = test_link(N, 0.8, 0.7);
            const A2GCharacterization c = characterize(l, psc);
            const TrialBatch b = sim_a2g(l, psc, 50000, 3);
            ks.push_back(ks_stat(b, TabulatedCdf([&](double z)
                                                 { return a2g_cdf(c, z); },
                                                 b.samples)));
        }
        CHECK(ks[1] < ks[0]);
        CHECK(ks[1] <= 0.015);
    }

    TEST_CASE("degenerate conditional variance")
    {
        const A2GLink l = test_link(4, 0.0, 0.0);
        const A2GCharacterization c = characterize(l, psc_of(PscKind::Delayed));
        CHECK(c.k_Z > 1e14);
        CHECK_FALSE(c.diagnostics.empty());
        CHECK_THROWS_AS(sigma_z2_match(test_link(4, 1.0, 1.0)), std::domain_error);
    }

    TEST_CASE("ideal benchmark has no closed form")
    {
        const A2GLink l = test_link(4, 0.8, 0.7);
        CHECK_THROWS_AS(characterize(l, psc_of(PscKind::IdealBenchmark)), std::invalid_argument);
        CHECK_THROWS_AS(psc_cf_factor(psc_of(PscKind::Delayed), l, 0), std::invalid_argument);
        // the ideal benchmark bounds every realizable configuration on average
        const double ideal = mean_of(sim_a2g(l, psc_of(PscKind::IdealBenchmark), 20000, 1).samples);
        CHECK(ideal > mean_of(sim_a2g(l, psc_of(PscKind::Delayed), 20000, 1).samples));
    }

    TEST_CASE("link validation")
    {
        A2GLink l = test_link(4, 0.8, 0.7);
        l.beta.pop_back();
        CHECK_THROWS_AS(validate(l), std::invalid_argument);
        l = test_link(4, 0.8, 0.7);
        l.beta[0] = 0.0;
        CHECK_THROWS_AS(validate(l), std::invalid_argument);
        l = test_link(4, 0.8, 0.7);
        l.los_rd.resize(2);
        CHECK_THROWS_AS(validate(l), std::invalid_argument);
        l = test_link(4, 0.8, 0.7);
        l.gamma_bar = 0.0;
        CHECK_THROWS_AS(validate(l), std::invalid_argument);
        CHECK_THROWS_AS(a2g_pdf(characterize(test_link(4, 0.8, 0.7), psc_of(PscKind::Delayed)), -1.0), std::domain_error);
    }
}
