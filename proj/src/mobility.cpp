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

#include "aerolink/mobility.hpp"
#include "aerolink/csv.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aerolink
{
    void validate(const RwmConfig &cfg)
    {
        if (!(cfg.region_radius > 0.0))
            throw std::invalid_argument("RwmConfig: region_radius must be positive");
        if (!(cfg.v_min >= 0.0 && cfg.v_min <= cfg.v_max))
            throw std::invalid_argument("RwmConfig: need 0 <= v_min <= v_max");
        if (!(cfg.tau_min >= 0.0 && cfg.tau_min <= cfg.tau_max))
            throw std::invalid_argument("RwmConfig: need 0 <= tau_min <= tau_max");
        if (!(cfg.p_pause >= 0.0 && cfg.p_pause <= 1.0))
            throw std::invalid_argument("RwmConfig: p_pause must lie in [0, 1]");
    }

    void validate(const RpgmConfig &cfg)
    {
        if (!(cfg.deviation_radius >= 0.0))
            throw std::invalid_argument("RpgmConfig: deviation_radius must be nonnegative");
        if (!(cfg.dv_min >= 0.0 && cfg.dv_min <= cfg.dv_max))
            throw std::invalid_argument("RpgmConfig: need 0 <= dv_min <= dv_max");
    }

    namespace
    {
        Vec3 sample_disc(const RwmConfig &cfg, Rng &rng)
        {
            const double r = cfg.region_radius * std::sqrt(rng.uniform());
            const double a = 2.0 * pi * rng.uniform();
            return {cfg.region_center.x + r * std::cos(a), cfg.region_center.y + r * std::sin(a), cfg.region_center.z};
        }

        void new_leg(MobilityState &s, const RwmConfig &cfg, Rng &rng)
        {
            s.waypoint_src = s.position;
            s.waypoint_dst = sample_disc(cfg, rng);
            const double speed = rng.uniform(cfg.v_min, cfg.v_max);
            const Vec3 d = s.waypoint_dst - s.position;
            const double len = norm(d);
            s.velocity = (len > 0.0) ? d * (speed / len) : Vec3{};
        }

        Vec3 horizontal(const Vec3 &v) { return {v.x, v.y, 0.0}; }

        Vec3 draw_drift(const RpgmConfig &cfg, const Vec3 &offset, Rng &rng)
        {
            const double speed = rng.uniform(cfg.dv_min, cfg.dv_max);
            const double a = 2.0 * pi * rng.uniform();
            Vec3 dir{std::cos(a), std::sin(a), 0.0};
            if (dot(dir, offset) > 0.0)
                dir = -dir;
            return dir * speed;
        }
    }

    MobilityState rwm_init(const Vec3 &start, const RwmConfig &cfg, Rng &rng)
    {
        validate(cfg);
        MobilityState s;
        s.position = {start.x, start.y, cfg.region_center.z};
        if (norm(horizontal(s.position - cfg.region_center)) > cfg.region_radius * (1.0 + 1e-12))
            throw std::invalid_argument("rwm_init: start position outside the active area");
        new_leg(s, cfg, rng);
        return s;
    }

    MobilityState rwm_advance(const MobilityState &state, const RwmConfig &cfg, double dt, Rng &rng)
    {
        if (!(dt > 0.0))
            throw std::invalid_argument("rwm_advance: dt must be positive");
        MobilityState s = state;
        double remaining = dt;
        for (int guard = 0; remaining > 0.0 && guard < 1000000; ++guard)
        {
            if (s.pause_remaining > 0.0)
            {
                const double use = std::min(remaining, s.pause_remaining);
                s.pause_remaining -= use;
                remaining -= use;
                if (s.pause_remaining <= 0.0)
                {
                    s.pause_remaining = 0.0;
                    new_leg(s, cfg, rng);
                }
                continue;
            }
            const double speed = norm(s.velocity);
            const double dist = norm(s.waypoint_dst - s.position);
            if (speed == 0.0)
            {
                if (cfg.v_max == 0.0)
                    break;
                new_leg(s, cfg, rng);
                continue;
            }
            const double t_arrive = dist / speed;
            if (t_arrive > remaining)
            {
                s.position += s.velocity * remaining;
                remaining = 0.0;
                break;
            }
            s.position = s.waypoint_dst;
            remaining -= t_arrive;
            if (cfg.p_pause > 0.0 && rng.uniform() < cfg.p_pause)
            {
                s.velocity = {};
                s.pause_remaining = rng.uniform(cfg.tau_min, cfg.tau_max);
                if (s.pause_remaining <= 0.0)
                {
                    s.pause_remaining = 0.0;
                    new_leg(s, cfg, rng);
                }
            }
            else
                new_leg(s, cfg, rng);
        }
        return s;
    }

    // For the UAV, waypoint_dst holds the current reference point and drift the deviation velocity.
    MobilityState rpgm_init(const Vec3 &start, const MobilityState &gue, const RpgmConfig &cfg, Rng &rng)
    {
        validate(cfg);
        MobilityState u;
        const Vec3 ref = gue.position + cfg.reference_offset;
        Vec3 off = horizontal(start - ref);
        const double r = norm(off);
        if (r > cfg.deviation_radius)
            off *= (r > 0.0 ? cfg.deviation_radius / r : 0.0);
        u.waypoint_src = ref;
        u.waypoint_dst = ref;
        u.position = ref + off;
        u.drift = draw_drift(cfg, off, rng);
        u.velocity = gue.velocity + u.drift;
        return u;
    }

    MobilityState rpgm_advance(const MobilityState &uav, const MobilityState &gue, const RpgmConfig &cfg, double dt, Rng &rng)
    {
        if (!(dt > 0.0))
            throw std::invalid_argument("rpgm_advance: dt must be positive");
        MobilityState u = uav;
        Vec3 off = horizontal(uav.position - uav.waypoint_dst);
        const double R = cfg.deviation_radius;
        double remaining = dt;
        for (int guard = 0; remaining > 0.0 && guard < 1000000; ++guard)
        {
            const double a = dot(u.drift, u.drift);
            if (a == 0.0)
                break;
            const double b = dot(off, u.drift);
            const double c = dot(off, off) - R * R;
            const double disc = std::max(0.0, b * b - a * c);
            const double t_hit = std::max(0.0, (-b + std::sqrt(disc)) / a);
            if (t_hit >= remaining)
            {
                off += u.drift * remaining;
                break;
            }
            off += u.drift * t_hit;
            remaining -= t_hit;
            u.drift = draw_drift(cfg, off, rng);
        }
        const double r = norm(off);
        if (r > R)
            off *= (r > 0.0 ? R / r : 0.0);
        const Vec3 ref = gue.position + cfg.reference_offset;
        u.waypoint_src = uav.waypoint_dst;
        u.waypoint_dst = ref;
        u.position = ref + off;
        u.velocity = gue.velocity + u.drift;
        return u;
    }

    void write_trajectory_csv(std::ostream &os, const std::vector<TrajectoryRow> &rows)
    {
        CsvWriter w(os, {"t_index", "node", "x", "y", "z", "vx", "vy", "vz"});
        for (const auto &r : rows)
        {
            w.cell(r.t_index).cell(r.node);
            w.cell(r.position.x).cell(r.position.y).cell(r.position.z);
            w.cell(r.velocity.x).cell(r.velocity.y).cell(r.velocity.z);
            w.end_row();
        }
    }
}
