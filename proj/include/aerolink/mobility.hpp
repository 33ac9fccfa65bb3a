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

#include "aerolink/geometry.hpp"
#include "aerolink/rng.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace aerolink
{
    struct MobilityState
    {
        Vec3 position;
        Vec3 velocity;
        Vec3 waypoint_src;
        Vec3 waypoint_dst;
        double pause_remaining = 0.0;
        Vec3 drift; // group-mobility deviation velocity (UAV only)
    };

    // Random waypoint model on a horizontal disc.
    struct RwmConfig
    {
        Vec3 region_center;
        double region_radius = 20.0;
        double v_min = 40.0, v_max = 40.0;
        double p_pause = 0.0;
        double tau_min = 0.0, tau_max = 0.0;
    };

    // Reference point group mobility: the UAV follows p_GUE + reference_offset.
    struct RpgmConfig
    {
        double deviation_radius = 5.0;
        double dv_min = 0.0, dv_max = 0.0;
        Vec3 reference_offset;
    };

    void validate(const RwmConfig &cfg);
    void validate(const RpgmConfig &cfg);

    // Starts at `start` (projected onto the disc plane) and draws the first leg.
    MobilityState rwm_init(const Vec3 &start, const RwmConfig &cfg, Rng &rng);
    MobilityState rwm_advance(const MobilityState &state, const RwmConfig &cfg, double dt, Rng &rng);

    // The UAV starts at `start`; its offset from the reference point is clamped to the disc.
    MobilityState rpgm_init(const Vec3 &start, const MobilityState &gue, const RpgmConfig &cfg, Rng &rng);
    // `gue` is the GUE state at the end of the step.
    MobilityState rpgm_advance(const MobilityState &uav, const MobilityState &gue, const RpgmConfig &cfg, double dt, Rng &rng);

    struct TrajectoryRow
    {
        long long t_index;
        std::string node;
        Vec3 position;
        Vec3 velocity;
    };

    void write_trajectory_csv(std::ostream &os, const std::vector<TrajectoryRow> &rows);
}
