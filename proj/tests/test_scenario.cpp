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

#include "aerolink/scenario.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

using namespace aerolink;

namespace
{
    std::string error_of(const std::string &json)
    {
        try
        {
            parse_scenario(json);
        }
        catch (const std::invalid_argument &e)
        {
            return e.what();
        }
        return {};
    }
}

TEST_SUITE("scenario")
{
    TEST_CASE("defaults")
    {
        const Scenario s = default_scenario();
        CHECK_NOTHROW(validate(s));
        CHECK(s.M() == 9);
        CHECK(s.N() == 144);
        // -174 dBm/Hz + 70 dB + 5 dB
        CHECK(s.noise_dbm() == doctest::Approx(-99.0));
        CHECK(s.wavelength() == doctest::Approx(0.149896229));
    }

    TEST_CASE("JSON round trip")
    {
        Scenario s = default_scenario();
        s.psc.kind = PscKind::Fixed;
        s.psc.theta = {-0.2};
        s.psc.quantization_bits = 3;
        s.ris_nh = 5;
        s.t_k = 1234;
        s.p_gue = {70.0, 20.0, 1.5};
        const Scenario r = parse_scenario(scenario_to_json(s));
        CHECK(scenario_to_json(r) == scenario_to_json(s));
        CHECK(r.psc.theta == s.psc.theta);
        CHECK(r.t_k == 1234);
        CHECK(r.N() == 60);
    }

    TEST_CASE("partial documents override defaults")
    {
        const Scenario s = parse_scenario(R"({"ris": {"n_h": 4, "n_v": 4}, "radio": {"p_u_dbm": 10}})");
        CHECK(s.N() == 16);
        CHECK(s.p_u_dbm == 10.0);
        CHECK(s.p_s_dbm == 0.0);
    }

    TEST_CASE("errors name the offending field")
    {
        CHECK(error_of(R"({"ris": {"n_h": 0}})").find("'ris.n_h'") != std::string::npos);
        CHECK(error_of(R"({"radio": {"fc": 1}})").find("'radio.fc'") != std::string::npos);
        CHECK(error_of(R"({"aging": {"ts_s": -1}})").find("'aging.ts_s'") != std::string::npos);
        CHECK(error_of(R"({"psc": {"kind": "best"}})").find("psc.kind") != std::string::npos);
        CHECK(error_of(R"({"bs": {"position_m": [1, 2]}})").find("'bs.position_m'") != std::string::npos);
        CHECK(error_of(R"({"mobility": {"rwm": {"radius_m": 0}}})").find("mobility.rwm.radius_m") != std::string::npos);
        CHECK(error_of(R"({"trials": 0})").find("'trials'") != std::string::npos);
        CHECK(error_of("{\"radio\": ").find("malformed JSON") != std::string::npos);
        CHECK_THROWS_AS(load_scenario("/nonexistent/scenario.json"), std::invalid_argument);
    }

    TEST_CASE("link construction")
    {
        const Scenario s = default_scenario();
        const LinkSet l = build_links(s);
        CHECK(l.g2a.M == 9);
        CHECK(l.g2a.los.size() == 9);
        for (const cd &v : l.g2a.los)
            CHECK(std::abs(v) == doctest::Approx(1.0));
        CHECK(l.f_max_su == doctest::Approx(266.85127615852164));
        CHECK(l.g2a.rho == doctest::Approx(jakes_rho(5000, 1e-5, l.f_max_su)).epsilon(1e-14));
        CHECK(l.a2g.rho_ur == doctest::Approx(l.g2a.rho));
        CHECK(l.a2g.rho_rd == doctest::Approx(l.g2a.rho));
        CHECK(l.g2a.K == doctest::Approx(10.0));
        // unit-sum normalization of the folded amplitudes
        const double sb = std::accumulate(l.a2g.beta.begin(), l.a2g.beta.end(), 0.0);
        CHECK(sb * sb / l.a2g.N == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(l.a2g.gamma_bar == doctest::Approx(dbm_to_watt(s.p_u_dbm) * l.ell_a2g / s.noise_w()));
        // element 1 sits at the reference point
        CHECK(std::abs(l.a2g.los_ur[0] - cd(1.0)) < 1e-14);
        CHECK(std::abs(l.a2g.los_rd[0] - cd(1.0)) < 1e-14);
        const double d = norm(s.p_uav - s.p_bs);
        CHECK(l.pl_su_db == doctest::Approx(path_loss_db({PathLossKind::UMiAV, s.fc_hz, s.p_uav.z}, d)));
    }

    TEST_CASE("path loss per element")
    {
        Scenario s = default_scenario();
        s.ris_nh = s.ris_nv = 1;
        const LinkSet l = build_links(s);
        const double lur = path_loss({PathLossKind::UMiAV, s.fc_hz, s.p_uav.z}, norm(s.p_ris - s.p_uav));
        const double lrd = path_loss({PathLossKind::UMiLoS, s.fc_hz, s.p_gue.z}, norm(s.p_gue - s.p_ris));
        CHECK(l.ell_a2g == doctest::Approx(lur * lrd).epsilon(1e-12));
        CHECK(l.a2g.beta[0] == doctest::Approx(1.0));
    }

    TEST_CASE("snapshots")
    {
        const Scenario s = default_scenario();
        const auto a = generate_snapshots(s, 30, 9), b = generate_snapshots(s, 30, 9), c = generate_snapshots(s, 30, 10);
        REQUIRE(a.size() == 30);
        CHECK(norm(a[0].p_gue - s.p_gue) < 1e-12);
        CHECK(norm(a[0].p_uav - s.p_uav) < 1.0);
        bool differs = false;
        for (int k = 0; k < 30; ++k)
        {
            CHECK(norm(a[k].p_gue - b[k].p_gue) == 0.0);
            differs = differs || norm(a[k].p_gue - c[k].p_gue) > 0.0;
            if (k > 0)
                CHECK(norm(a[k].p_gue - a[k - 1].p_gue) <= 40.0 * s.location_interval_s + 1e-9);
            CHECK(norm(a[k].p_bs - s.p_bs) == 0.0);
        }
        CHECK(differs);
        CHECK(snapshots_to_rows(a).size() == 60);
        CHECK_THROWS_AS(generate_snapshots(s, 0, 1), std::invalid_argument);
    }
}
