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

#include "aerolink/scenario.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace aerolink
{
    struct CheckResult
    {
        std::string name;
        bool pass = false;
        double value = 0.0;
        double limit = 0.0;
        std::string detail;
    };

    struct ValidationOptions
    {
        long long trials = 100000;
        std::uint64_t seed = 1;
        bool monte_carlo = true;
    };

    // Invariant suite on a scenario: normalizations, monotonicity, weight sums, CF bound,
    // kappa-mu round trip, cross-library ncchi2 checks, estimator identity and KS/KL gates.
    std::vector<CheckResult> run_validation(const Scenario &s, const ValidationOptions &opt);
    bool all_passed(const std::vector<CheckResult> &r);
    void print_checks(std::ostream &os, const std::vector<CheckResult> &r);
}
