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
#include "aerolink/mobility.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace aerolink
{
    // All quantities linear / SI unless the member name says otherwise.
    struct Scenario
    {
        double fc_hz = 2e9;
        double bandwidth_hz = 10e6;
        double noise_figure_db = 5.0;
        double n0_dbm_per_hz = -174.0;

        double ts_s = 1e-5;
        long long t_k = 5000;
        double estimation_time_s = 0.0;

        double k0_db = 10.0;
        double kpi_db = 10.0;
        bool nlos = false;

        double p_s_dbm = 0.0;
        double p_u_dbm = 0.0;
        double target_se = 1.0;

        Vec3 p_bs{0.0, 0.0, 10.0};
        int bs_nh = 3, bs_nv = 3;
        Vec3 v_bs{};

        Vec3 p_uav{56.0, -10.0, 120.0};
        Vec3 v_uav{40.0, 0.0, 0.0};

        Vec3 p_ris{75.0, 0.0, 25.0};
        int ris_nh = 12, ris_nv = 12;
        double ris_beta = 1.0;
        Vec3 v_ris{};

        Vec3 p_gue{80.68, 14.15, 1.5};
        Vec3 v_gue{40.0, 0.0, 0.0};

        PscConfig psc;

        RwmConfig rwm{{75.0, 25.0, 1.5}, 20.0, 40.0, 40.0, 0.0, 0.0, 0.0};
        RpgmConfig rpgm{5.0, 0.0, 0.0, {-25.0, -25.0, 118.5}};
        double location_interval_s = 0.1;
        int locations = 50;

        std::uint64_t seed = 20260101ULL;
        long long trials = 100000;
        int kl_bins = 100;
        A2GOptions a2g_options;

        double noise_dbm() const;
        double noise_w() const;
        double wavelength() const;
        int M() const { return bs_nh * bs_nv; }
        int N() const { return ris_nh * ris_nv; }
    };

    // Throws std::invalid_argument naming the offending field.
    void validate(const Scenario &s);

    Scenario default_scenario();
    Scenario load_scenario(const std::string &path);
    Scenario parse_scenario(const std::string &json_text);
    std::string scenario_to_json(const Scenario &s);

    // Positions and velocities of the four nodes at one instant.
    struct Snapshot
    {
        Vec3 p_bs, p_uav, p_ris, p_gue;
        Vec3 v_bs, v_uav, v_ris, v_gue;
    };

    Snapshot initial_snapshot(const Scenario &s);

    struct LinkSet
    {
        G2ALink g2a;
        A2GLink a2g;
        double f_max_su = 0.0, f_max_ur = 0.0, f_max_rd = 0.0;
        double pl_su_db = 0.0;
        double ell_a2g = 0.0;
    };

    // Geometry-dependent K factors, aging, path loss and LoS vectors at the scenario's t_k.
    LinkSet build_links(const Scenario &s, const Snapshot &snap);
    LinkSet build_links(const Scenario &s);

    // Location k = 0 is the initial snapshot; each later one advances RWM/RPGM by location_interval_s.
    std::vector<Snapshot> generate_snapshots(const Scenario &s, int steps, std::uint64_t seed);
    std::vector<TrajectoryRow> snapshots_to_rows(const std::vector<Snapshot> &snaps);
}
