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

#include "aerolink/a2g.hpp"
#include "aerolink/g2a.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace aerolink
{
    struct TrialBatch
    {
        std::uint64_t seed = 0;
        long long n_trials = 0;
        std::vector<double> samples;
    };

    struct FitReport
    {
        double ks = 0.0;
        double kl = 0.0;
        int n_bins = 0;
        std::string notes;
    };

    enum class Execution
    {
        Serial,
        Parallel
    };

    // Trial i always draws from Rng(seed, stream, i), so both execution modes give identical batches.
    TrialBatch sim_g2a(const G2ALink &link, long long n, std::uint64_t seed, Execution ex = Execution::Parallel);
    TrialBatch sim_a2g(const A2GLink &link, const PscConfig &psc, long long n, std::uint64_t seed, Execution ex = Execution::Parallel);

    // Per-trial conditional statistics (sigma_Z^2, |mu_Z|^2) given the delayed CSI.
    struct ConditioningBatch
    {
        std::vector<double> sigma_z2;
        std::vector<double> mu_abs2;
    };
    ConditioningBatch sim_a2g_conditioning(const A2GLink &link, const PscConfig &psc, long long n, std::uint64_t seed,
                                           Execution ex = Execution::Parallel);

    struct EopEstimate
    {
        double p = 0.0;
        long long outages = 0;
        long long n = 0;
        double stderr_binomial() const;
    };

    EopEstimate sim_eop(const G2ALink &g2a, const A2GLink &a2g, const PscConfig &psc, double gamma_th, long long n,
                        std::uint64_t seed, Execution ex = Execution::Parallel);

    // ---- reducers ------------------------------------------------------

    double pairwise_sum(const double *x, std::size_t n);
    double pairwise_sum(const std::vector<double> &x);

    struct SampleMoments
    {
        double mean = 0.0, variance = 0.0, mu3 = 0.0;
    };
    SampleMoments sample_moments(const std::vector<double> &x);

    std::vector<double> ecdf(const TrialBatch &batch, const std::vector<double> &grid);
    double ks_stat(const TrialBatch &batch, const std::function<double(double)> &cdf);
    // Equal-mass bins on the sample quantiles; analytic bin masses from quadrature of the pdf.
    double kl_vs_pdf(const TrialBatch &batch, const std::function<double(double)> &pdf, int n_bins = 100);
    // Same binning with analytic bin masses from CDF differences.
    double kl_vs_cdf(const TrialBatch &batch, const std::function<double(double)> &cdf, int n_bins = 100);

    // Piecewise-linear CDF table for costly CDFs, with nodes at sample quantiles.
    class TabulatedCdf
    {
    public:
        TabulatedCdf(const std::function<double(double)> &cdf, const std::vector<double> &samples, int nodes = 2048);
        double operator()(double x) const;

    private:
        std::vector<double> x_, f_;
        std::function<double(double)> cdf_;
    };

    FitReport fit_report(const TrialBatch &batch, const std::function<double(double)> &cdf,
                         const std::function<double(double)> &pdf, int n_bins = 100);

    void write_batch_csv(std::ostream &os, const TrialBatch &batch);
    void write_report_csv(std::ostream &os, const FitReport &r);
}
