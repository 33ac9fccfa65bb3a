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

#include "aerolink/csv.hpp"
#include "aerolink/mc_oracle.hpp"
#include "aerolink/performance.hpp"
#include "aerolink/scenario.hpp"
#include "aerolink/validation.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace aerolink;

namespace
{
    struct Common
    {
        std::string scenario_path;
        std::optional<std::uint64_t> seed;
        std::optional<long long> trials;
        std::string out_dir = ".";
        bool no_mc = false;
    };

    struct Context
    {
        Scenario scenario;
        std::uint64_t seed = 0;
        long long trials = 0;
        fs::path out;
        bool mc = true;
    };

    Context make_context(const Common &c)
    {
        Context ctx;
        ctx.scenario = c.scenario_path.empty() ? default_scenario() : load_scenario(c.scenario_path);
        ctx.seed = ctx.scenario.seed;
        if (const char *env = std::getenv("AEROLINK_SEED"))
        {
            try
            {
                std::size_t pos = 0;
                ctx.seed = std::stoull(env, &pos);
                if (env[pos] != '\0')
                    throw std::invalid_argument("trailing characters");
            }
            catch (const std::exception &)
            {
                throw std::invalid_argument(std::string("AEROLINK_SEED: not an unsigned integer: '") + env + "'");
            }
        }
        if (c.seed)
            ctx.seed = *c.seed;
        ctx.trials = c.trials ? *c.trials : ctx.scenario.trials;
        if (ctx.trials < 1)
            throw std::invalid_argument("--trials must be >= 1");
        ctx.out = c.out_dir;
        fs::create_directories(ctx.out);
        ctx.mc = !c.no_mc;
        return ctx;
    }

    std::ofstream open_out(const Context &ctx, const std::string &name)
    {
        const fs::path p = ctx.out / name;
        std::ofstream os(p);
        if (!os)
            throw std::runtime_error("cannot write '" + p.string() + "'");
        std::cerr << "wrote " << p.string() << '\n';
        return os;
    }

    std::vector<double> lin_grid(double lo, double hi, int n)
    {
        std::vector<double> g(n);
        for (int i = 0; i < n; ++i)
            g[i] = lo + (hi - lo) * (i + 1) / n;
        return g;
    }

    std::pair<int, int> square_dims(int M)
    {
        const int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(M))));
        if (r * r == M)
            return {r, r};
        return {M, 1};
    }

    void cmd_g2a_dist(const Context &ctx, const std::vector<int> &Ms, int points)
    {
        for (int M : Ms)
        {
            Scenario s = ctx.scenario;
            std::tie(s.bs_nh, s.bs_nv) = square_dims(M);
            const LinkSet links = build_links(s);
            const G2AMixture mix = mixture_params(links.g2a);
            const double mean = g2a_mean(links.g2a);
            const std::vector<double> grid = lin_grid(0.0, 3.0 * mean, points);

            std::vector<double> emp;
            double ks = std::nan("");
            if (ctx.mc)
            {
                const TrialBatch b = sim_g2a(links.g2a, ctx.trials, ctx.seed);
                emp = ecdf(b, grid);
                ks = ks_stat(b, [&](double x)
                             { return g2a_cdf(mix, x); });
            }
            std::ofstream os = open_out(ctx, "g2a_dist_M" + std::to_string(M) + ".csv");
            std::vector<std::string> hdr{"x", "pdf_analytic", "cdf_analytic"};
            if (ctx.mc)
                hdr.insert(hdr.end(), {"ecdf_mc", "ks"});
            CsvWriter w(os, hdr);
            for (std::size_t i = 0; i < grid.size(); ++i)
            {
                w.cell(grid[i]).cell(g2a_pdf(mix, grid[i])).cell(g2a_cdf(mix, grid[i]));
                if (ctx.mc)
                    w.cell(emp[i]).cell(ks);
                w.end_row();
            }
        }
    }

    void cmd_a2g_dist(const Context &ctx, const std::vector<int> &sides, const std::vector<std::string> &pscs, int points)
    {
        for (int side : sides)
            for (const std::string &pk : pscs)
            {
                Scenario s = ctx.scenario;
                s.ris_nh = s.ris_nv = side;
                PscConfig psc = s.psc;
                if (pk != "scenario")
                {
                    psc = PscConfig{};
                    psc.kind = psc_kind_from_string(pk);
                    psc.quantization_bits = s.psc.quantization_bits;
                    if (psc.kind == PscKind::Fixed)
                        psc.theta = s.psc.kind == PscKind::Fixed ? s.psc.theta : std::vector<double>{0.0};
                }
                const LinkSet links = build_links(s);
                const bool analytic = psc.kind != PscKind::IdealBenchmark;
                std::optional<A2GCharacterization> chr;
                double mean = 0.0;
                if (analytic)
                {
                    chr = characterize(links.a2g, psc, s.a2g_options);
                    mean = a2g_mean(*chr);
                }
                std::optional<TrialBatch> batch;
                if (ctx.mc)
                {
                    batch = sim_a2g(links.a2g, psc, ctx.trials, ctx.seed);
                    if (!analytic)
                        mean = sample_moments(batch->samples).mean;
                }
                if (!analytic && !batch)
                {
                    std::cerr << "skipping ideal PSC: Monte Carlo disabled and no closed form\n";
                    continue;
                }
                // grid on the mean-normalized SNR
                const std::vector<double> grid = lin_grid(0.0, 4.0, points);
                std::vector<double> xs(grid.size());
                for (std::size_t i = 0; i < grid.size(); ++i)
                    xs[i] = grid[i] * mean;
                std::vector<double> emp;
                FitReport rep;
                if (batch)
                {
                    emp = ecdf(*batch, xs);
                    if (analytic)
                    {
                        const TabulatedCdf cdf([&](double x)
                                               { return a2g_cdf(*chr, x); },
                                               batch->samples);
                        rep.ks = ks_stat(*batch, cdf);
                        rep.kl = kl_vs_pdf(*batch, [&](double x)
                                           { return a2g_pdf(*chr, x); },
                                           s.kl_bins);
                        rep.n_bins = s.kl_bins;
                        rep.notes = "N=" + std::to_string(side * side) + " psc=" + to_string(psc.kind);
                    }
                }
                const std::string stem = "a2g_dist_N" + std::to_string(side * side) + "_" + to_string(psc.kind);
                {
                    std::ofstream os = open_out(ctx, stem + ".csv");
                    std::vector<std::string> hdr{"x_normalized", "x"};
                    if (analytic)
                        hdr.insert(hdr.end(), {"pdf_analytic_normalized", "cdf_analytic"});
                    if (batch)
                        hdr.push_back("ecdf_mc");
                    CsvWriter w(os, hdr);
                    for (std::size_t i = 0; i < xs.size(); ++i)
                    {
                        w.cell(grid[i]).cell(xs[i]);
                        if (analytic)
                            w.cell(a2g_pdf(*chr, xs[i]) * mean).cell(a2g_cdf(*chr, xs[i]));
                        if (batch)
                            w.cell(emp[i]);
                        w.end_row();
                    }
                }
                if (batch && analytic)
                {
                    std::ofstream os = open_out(ctx, stem + "_fit.csv");
                    write_report_csv(os, rep);
                }
            }
    }

    void cmd_eop(const Context &ctx, double p_min, double p_max, double p_step)
    {
        if (!(p_step > 0.0) || p_max < p_min)
            throw std::invalid_argument("eop: need p_step > 0 and p_max >= p_min");
        const double gth = threshold_from_se(ctx.scenario.target_se);
        std::ofstream os = open_out(ctx, "eop_sweep.csv");
        std::vector<std::string> hdr{"P_dBm", "eop_analytic"};
        if (ctx.mc)
            hdr.insert(hdr.end(), {"eop_mc", "eop_mc_stderr"});
        hdr.insert(hdr.end(), {"eop_floor", "a2g_op"});
        CsvWriter w(os, hdr);
        const int steps = static_cast<int>(std::floor((p_max - p_min) / p_step + 1e-9));
        for (int i = 0; i <= steps; ++i)
        {
            Scenario s = ctx.scenario;
            const double P = p_min + i * p_step;
            s.p_s_dbm = s.p_u_dbm = P;
            const LinkSet links = build_links(s);
            const A2GCharacterization chr = characterize(links.a2g, s.psc, s.a2g_options);
            w.cell(P).cell(eop(links.g2a, chr, gth));
            if (ctx.mc)
            {
                const EopEstimate e = sim_eop(links.g2a, links.a2g, s.psc, gth, ctx.trials, ctx.seed);
                w.cell(e.p).cell(e.stderr_binomial());
            }
            w.cell(eop_floor(links.g2a, gth)).cell(a2g_cdf(chr, gth)).end_row();
        }
    }

    void cmd_trajectory(const Context &ctx, int steps, std::optional<double> policy_L)
    {
        const Scenario &s = ctx.scenario;
        if (steps < 1)
            steps = s.locations;
        const std::vector<Snapshot> snaps = generate_snapshots(s, steps, ctx.seed);
        std::optional<AdaptivePolicy> pol;
        if (policy_L)
            pol = AdaptivePolicy{*policy_L};
        const std::vector<TrajectoryPoint> pts = eop_trajectory(s, snaps, pol);
        {
            std::ofstream os = open_out(ctx, "trajectory_eop.csv");
            std::vector<std::string> hdr{"k", "t_k", "eop", "avg_eop", "R"};
            if (pol)
                hdr.insert(hdr.end(), {"eop_adaptive", "avg_eop_adaptive", "R_hat", "avg_R_hat", "refined"});
            CsvWriter w(os, hdr);
            for (const TrajectoryPoint &p : pts)
            {
                w.cell(p.k).cell(s.t_k).cell(p.eop_fixed).cell(p.avg_eop_fixed).cell(p.se_fixed);
                if (pol)
                    w.cell(p.adapt.eop_exact).cell(p.avg_eop_adaptive).cell(p.adapt.se).cell(p.avg_se_adaptive).cell(p.adapt.refined ? 1 : 0);
                w.end_row();
            }
        }
        std::ofstream os = open_out(ctx, "trajectory_nodes.csv");
        write_trajectory_csv(os, snapshots_to_rows(snaps));
    }

    void cmd_avg_snr(const Context &ctx, const std::string &sweep, long long tk_max, const std::vector<int> &sides)
    {
        const Scenario &base = ctx.scenario;
        if (sweep == "tk")
        {
            if (tk_max < 1)
                throw std::invalid_argument("avg-snr: --tk-max must be >= 1");
            std::ofstream os = open_out(ctx, "avg_snr_vs_tk.csv");
            CsvWriter w(os, {"t_k", "rho_ur", "rho_rd", "avg_snr", "avg_snr_db"});
            for (long long tk = 0; tk <= tk_max; ++tk)
            {
                Scenario s = base;
                s.t_k = tk;
                const LinkSet links = build_links(s);
                const double a = avg_a2g_snr(links.a2g, s.psc, s.a2g_options);
                w.cell(tk).cell(links.a2g.rho_ur).cell(links.a2g.rho_rd).cell(a).cell(linear_to_db(a)).end_row();
            }
            return;
        }
        if (sweep != "n")
            throw std::invalid_argument("avg-snr: --sweep must be 'tk' or 'n'");
        std::ofstream os = open_out(ctx, "avg_snr_vs_n.csv");
        std::vector<std::string> hdr{"N", "avg_snr", "avg_snr_db"};
        if (ctx.mc)
            hdr.insert(hdr.end(), {"mc_mean", "mc_mean_db"});
        CsvWriter w(os, hdr);
        for (int side : sides)
        {
            Scenario s = base;
            s.ris_nh = s.ris_nv = side;
            const LinkSet links = build_links(s);
            const double a = avg_a2g_snr(links.a2g, s.psc, s.a2g_options);
            w.cell(side * side).cell(a).cell(linear_to_db(a));
            if (ctx.mc)
            {
                const double m = sample_moments(sim_a2g(links.a2g, s.psc, ctx.trials, ctx.seed).samples).mean;
                w.cell(m).cell(linear_to_db(m));
            }
            w.end_row();
        }
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"aerolink: SNR distributions, outage and Monte Carlo oracles for RIS-assisted UAV relaying"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--scenario", common.scenario_path, "scenario JSON file (defaults built in)");
    app.add_option("--seed", common.seed, "RNG seed (overrides AEROLINK_SEED and the scenario)");
    app.add_option("--trials", common.trials, "Monte Carlo trials");
    app.add_option("--out", common.out_dir, "output directory");
    app.add_flag("--no-mc", common.no_mc, "analytic columns only");
    std::optional<double> policy_L;
    app.add_option("--policy-L", policy_L, "outage budget for the adaptive SE policy (trajectory)");
    app.fallthrough();

    auto *g2a = app.add_subcommand("g2a-dist", "G2A SNR pdf/cdf vs ECDF");
    std::vector<int> Ms{4, 9};
    int points = 200;
    g2a->add_option("--M", Ms, "antenna counts");
    g2a->add_option("--points", points, "grid points")->check(CLI::PositiveNumber);

    auto *a2g = app.add_subcommand("a2g-dist", "A2G SNR pdf/cdf vs ECDF with KS/KL report");
    std::vector<int> sides{2, 4, 8};
    std::vector<std::string> pscs{"scenario"};
    a2g->add_option("--side", sides, "RIS side lengths (N = side^2)");
    a2g->add_option("--psc", pscs, "PSC kinds: scenario, delayed, random, fixed, los, ideal");
    a2g->add_option("--points", points, "grid points")->check(CLI::PositiveNumber);

    auto *eopc = app.add_subcommand("eop", "end-to-end outage vs transmit power");
    double p_min = -10.0, p_max = 30.0, p_step = 5.0;
    eopc->add_option("--p-min", p_min, "dBm");
    eopc->add_option("--p-max", p_max, "dBm");
    eopc->add_option("--p-step", p_step, "dB");

    auto *traj = app.add_subcommand("trajectory", "per-location outage along an RWM/RPGM trajectory");
    int steps = 0;
    traj->add_option("--steps", steps, "locations (default from scenario)");

    auto *avg = app.add_subcommand("avg-snr", "average A2G SNR vs t_k or N");
    std::string sweep = "tk";
    long long tk_max = 2000;
    std::vector<int> nsides{8, 16, 28, 100};
    avg->add_option("--sweep", sweep, "tk or n");
    avg->add_option("--tk-max", tk_max, "largest t_k");
    avg->add_option("--side", nsides, "RIS side lengths for --sweep n");

    auto *val = app.add_subcommand("validate", "run the invariant suite; nonzero exit on failure");
    auto *show = app.add_subcommand("show-scenario", "print the effective scenario as JSON");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        return app.exit(e);
    }

    try
    {
        const Context ctx = make_context(common);
        if (g2a->parsed())
            cmd_g2a_dist(ctx, Ms, points);
        else if (a2g->parsed())
            cmd_a2g_dist(ctx, sides, pscs, points);
        else if (eopc->parsed())
            cmd_eop(ctx, p_min, p_max, p_step);
        else if (traj->parsed())
            cmd_trajectory(ctx, steps, policy_L);
        else if (avg->parsed())
            cmd_avg_snr(ctx, sweep, tk_max, nsides);
        else if (show->parsed())
            std::cout << scenario_to_json(ctx.scenario) << '\n';
        else if (val->parsed())
        {
            ValidationOptions opt;
            opt.trials = ctx.trials;
            opt.seed = ctx.seed;
            opt.monte_carlo = ctx.mc;
            const auto res = run_validation(ctx.scenario, opt);
            print_checks(std::cout, res);
            const bool ok = all_passed(res);
            std::cout << (ok ? "validate: all checks passed" : "validate: FAILURES") << '\n';
            return ok ? 0 : 1;
        }
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
