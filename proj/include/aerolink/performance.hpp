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
#include "aerolink/scenario.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace aerolink
{
    struct OutageQuery
    {
        double target_se = 1.0; // bps/Hz
        double gamma_th() const;
    };

    double threshold_from_se(double R);
    double se_from_threshold(double gamma_th);

    double eop(const G2ALink &g2a, const A2GCharacterization &a2g, double gamma_th);
    double eop(const G2ALink &g2a, const A2GCharacterization &a2g, const OutageQuery &q);
    // Same composition on the small-x G2A line and the Gaussian A2G form.
    double eop_asymptotic(const G2ALink &g2a, const A2GCharacterization &a2g, double gamma_th);
    // High-power limit set by the G2A hop.
    double eop_floor(const G2ALink &g2a, double gamma_th);

    struct AdaptivePolicy
    {
        double L = 1e-4;
    };

    void validate(const AdaptivePolicy &p);

    struct AdaptiveResult
    {
        double gamma_g2a = 0.0;   // G2A branch of the min
        double gamma_a2g = 0.0;   // A2G branch of the min
        double gamma_th = 0.0;    // final threshold
        double se = 0.0;          // log2(1 + gamma_th) / 2
        double eop_asymptotic = 0.0;
        double eop_exact = 0.0;
        bool refined = false;     // closed form exceeded L under the exact eop; bisected
    };

    AdaptiveResult adaptive_gamma_th(const G2ALink &g2a, const A2GCharacterization &a2g, const AdaptivePolicy &policy);

    struct TrajectoryPoint
    {
        int k = 1;
        Snapshot snapshot;
        double rho_su = 1.0, rho_ur = 1.0, rho_rd = 1.0;
        double eop_fixed = 0.0, avg_eop_fixed = 0.0;
        double se_fixed = 1.0;
        bool adaptive = false;
        AdaptiveResult adapt;
        double avg_eop_adaptive = 0.0;
        double avg_se_adaptive = 0.0;
    };

    // One entry per location, k = 1..steps; locations evaluated in parallel.
    std::vector<TrajectoryPoint> eop_trajectory(const Scenario &s, int steps, const std::optional<AdaptivePolicy> &policy,
                                                std::uint64_t seed);
    std::vector<TrajectoryPoint> eop_trajectory(const Scenario &s, const std::vector<Snapshot> &snaps,
                                                const std::optional<AdaptivePolicy> &policy);
}
