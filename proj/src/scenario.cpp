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

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace aerolink
{
    using json = nlohmann::json;

    double Scenario::noise_dbm() const { return n0_dbm_per_hz + 10.0 * std::log10(bandwidth_hz) + noise_figure_db; }
    double Scenario::noise_w() const { return dbm_to_watt(noise_dbm()); }
    double Scenario::wavelength() const { return speed_of_light / fc_hz; }

    namespace
    {
        [[noreturn]] void field_error(const std::string &path, const std::string &what)
        {
            throw std::invalid_argument("scenario: field '" + path + "': " + what);
        }

        bool finite3(const Vec3 &v) { return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z); }

        // Reads one JSON object, remembering which keys were consumed.
        class ObjectReader
        {
        public:
            ObjectReader(const json &j, std::string path) : j_(j), path_(std::move(path))
            {
                if (!j_.is_object())
                    field_error(path_.empty() ? "<root>" : path_, "expected an object");
            }

            std::string sub(const std::string &key) const { return path_.empty() ? key : path_ + "." + key; }

            const json *find(const std::string &key)
            {
                seen_.insert(key);
                auto it = j_.find(key);
                return it == j_.end() ? nullptr : &*it;
            }

            void number(const std::string &key, double &out)
            {
                if (const json *v = find(key))
                {
                    if (!v->is_number())
                        field_error(sub(key), "expected a number");
                    out = v->get<double>();
                    if (!std::isfinite(out))
                        field_error(sub(key), "must be finite");
                }
            }

            template <class Int>
            void integer(const std::string &key, Int &out)
            {
                if (const json *v = find(key))
                {
                    if (!v->is_number_integer() && !v->is_number_unsigned())
                        field_error(sub(key), "expected an integer");
                    out = v->get<Int>();
                }
            }

            void boolean(const std::string &key, bool &out)
            {
                if (const json *v = find(key))
                {
                    if (!v->is_boolean())
                        field_error(sub(key), "expected true or false");
                    out = v->get<bool>();
                }
            }

            void string(const std::string &key, std::string &out)
            {
                if (const json *v = find(key))
                {
                    if (!v->is_string())
                        field_error(sub(key), "expected a string");
                    out = v->get<std::string>();
                }
            }

            void vec3(const std::string &key, Vec3 &out)
            {
                if (const json *v = find(key))
                {
                    if (!v->is_array() || v->size() != 3)
                        field_error(sub(key), "expected an array of 3 numbers");
                    for (const auto &e : *v)
                        if (!e.is_number())
                            field_error(sub(key), "expected an array of 3 numbers");
                    out = {(*v)[0].get<double>(), (*v)[1].get<double>(), (*v)[2].get<double>()};
                }
            }

            void numbers(const std::string &key, std::vector<double> &out)
            {
                if (const json *v = find(key))
                {
                    if (!v->is_array())
                        field_error(sub(key), "expected an array of numbers");
                    out.clear();
                    for (const auto &e : *v)
                    {
                        if (!e.is_number())
                            field_error(sub(key), "expected an array of numbers");
                        out.push_back(e.get<double>());
                    }
                }
            }

            void finish() const
            {
                for (auto it = j_.begin(); it != j_.end(); ++it)
                    if (!seen_.count(it.key()))
                        field_error(sub(it.key()), "unknown field");
            }

        private:
            const json &j_;
            std::string path_;
            std::set<std::string> seen_;
        };

        json vec_json(const Vec3 &v) { return json::array({v.x, v.y, v.z}); }
    }

    void validate(const Scenario &s)
    {
        if (!(s.fc_hz > 0.0))
            field_error("radio.fc_hz", "must be positive");
        if (!(s.bandwidth_hz > 0.0))
            field_error("radio.bandwidth_hz", "must be positive");
        if (!(s.ts_s > 0.0))
            field_error("aging.ts_s", "must be positive");
        if (s.t_k < 0)
            field_error("aging.t_k_samples", "must be nonnegative");
        if (!(s.estimation_time_s >= 0.0))
            field_error("aging.estimation_time_s", "must be nonnegative");
        if (!(s.target_se > 0.0))
            field_error("target_se_bps_per_hz", "must be positive");
        if (s.bs_nh < 1 || s.bs_nv < 1)
            field_error("bs.n_h", "array dimensions must be >= 1");
        if (s.ris_nh < 1 || s.ris_nv < 1)
            field_error("ris.n_h", "array dimensions must be >= 1");
        if (!(s.ris_beta > 0.0 && s.ris_beta <= 1.0))
            field_error("ris.beta", "must lie in (0, 1]");
        for (const auto &[name, v] : {std::pair<const char *, Vec3>{"bs.position_m", s.p_bs}, {"uav.position_m", s.p_uav},
                                      {"ris.position_m", s.p_ris}, {"gue.position_m", s.p_gue}, {"bs.velocity_mps", s.v_bs},
                                      {"uav.velocity_mps", s.v_uav}, {"ris.velocity_mps", s.v_ris}, {"gue.velocity_mps", s.v_gue}})
            if (!finite3(v))
                field_error(name, "components must be finite");
        if (!(s.p_uav.z > 0.0))
            field_error("uav.position_m", "UAV height must be positive");
        if (!(s.location_interval_s > 0.0))
            field_error("mobility.location_interval_s", "must be positive");
        if (s.locations < 1)
            field_error("mobility.locations", "must be >= 1");
        if (s.trials < 1)
            field_error("trials", "must be >= 1");
        if (s.kl_bins < 2)
            field_error("kl_bins", "must be >= 2");
        if (!(s.a2g_options.poisson_eps > 0.0 && s.a2g_options.poisson_eps < 0.5))
            field_error("analysis.poisson_eps", "must lie in (0, 0.5)");
        if (!(s.a2g_options.taylor_threshold >= 0.0))
            field_error("analysis.taylor_threshold", "must be nonnegative");
        if (!(s.rwm.region_radius > 0.0))
            field_error("mobility.rwm.radius_m", "must be positive");
        if (!(s.rwm.v_min >= 0.0))
            field_error("mobility.rwm.v_min_mps", "must be nonnegative");
        if (!(s.rwm.v_max >= s.rwm.v_min))
            field_error("mobility.rwm.v_max_mps", "must be >= v_min_mps");
        if (!(s.rwm.p_pause >= 0.0 && s.rwm.p_pause <= 1.0))
            field_error("mobility.rwm.p_pause", "must lie in [0, 1]");
        if (!(s.rwm.tau_min >= 0.0))
            field_error("mobility.rwm.tau_min_s", "must be nonnegative");
        if (!(s.rwm.tau_max >= s.rwm.tau_min))
            field_error("mobility.rwm.tau_max_s", "must be >= tau_min_s");
        if (!(s.rpgm.deviation_radius >= 0.0))
            field_error("mobility.rpgm.deviation_radius_m", "must be nonnegative");
        if (!(s.rpgm.dv_min >= 0.0))
            field_error("mobility.rpgm.dv_min_mps", "must be nonnegative");
        if (!(s.rpgm.dv_max >= s.rpgm.dv_min))
            field_error("mobility.rpgm.dv_max_mps", "must be >= dv_min_mps");
        try
        {
            validate(s.psc);
        }
        catch (const std::invalid_argument &e)
        {
            field_error("psc", e.what());
        }
        if (s.psc.kind == PscKind::Fixed && s.psc.theta.size() != 1 && static_cast<int>(s.psc.theta.size()) != s.N())
            field_error("psc.theta_rad", "needs 1 or N = n_h * n_v entries");
    }

    Scenario default_scenario() { return Scenario{}; }

    Scenario parse_scenario(const std::string &text)
    {
        json j;
        try
        {
            j = json::parse(text);
        }
        catch (const json::parse_error &e)
        {
            throw std::invalid_argument(std::string("scenario: malformed JSON: ") + e.what());
        }

        Scenario s;
        ObjectReader root(j, "");

        if (const json *r = root.find("radio"))
        {
            ObjectReader o(*r, "radio");
            o.number("fc_hz", s.fc_hz);
            o.number("bandwidth_hz", s.bandwidth_hz);
            o.number("noise_figure_db", s.noise_figure_db);
            o.number("n0_dbm_per_hz", s.n0_dbm_per_hz);
            o.number("k0_db", s.k0_db);
            o.number("kpi_db", s.kpi_db);
            o.boolean("nlos", s.nlos);
            o.number("p_s_dbm", s.p_s_dbm);
            o.number("p_u_dbm", s.p_u_dbm);
            o.finish();
        }
        if (const json *a = root.find("aging"))
        {
            ObjectReader o(*a, "aging");
            o.number("ts_s", s.ts_s);
            o.integer("t_k_samples", s.t_k);
            o.number("estimation_time_s", s.estimation_time_s);
            o.finish();
        }
        root.number("target_se_bps_per_hz", s.target_se);

        if (const json *b = root.find("bs"))
        {
            ObjectReader o(*b, "bs");
            o.vec3("position_m", s.p_bs);
            o.vec3("velocity_mps", s.v_bs);
            o.integer("n_h", s.bs_nh);
            o.integer("n_v", s.bs_nv);
            o.finish();
        }
        if (const json *u = root.find("uav"))
        {
            ObjectReader o(*u, "uav");
            o.vec3("position_m", s.p_uav);
            o.vec3("velocity_mps", s.v_uav);
            o.finish();
        }
        if (const json *r = root.find("ris"))
        {
            ObjectReader o(*r, "ris");
            o.vec3("position_m", s.p_ris);
            o.vec3("velocity_mps", s.v_ris);
            o.integer("n_h", s.ris_nh);
            o.integer("n_v", s.ris_nv);
            o.number("beta", s.ris_beta);
            o.finish();
        }
        if (const json *g = root.find("gue"))
        {
            ObjectReader o(*g, "gue");
            o.vec3("position_m", s.p_gue);
            o.vec3("velocity_mps", s.v_gue);
            o.finish();
        }
        if (const json *p = root.find("psc"))
        {
            ObjectReader o(*p, "psc");
            std::string kind = to_string(s.psc.kind);
            o.string("kind", kind);
            try
            {
                s.psc.kind = psc_kind_from_string(kind);
            }
            catch (const std::invalid_argument &e)
            {
                field_error("psc.kind", e.what());
            }
            o.number("a_rad", s.psc.a);
            o.number("b_rad", s.psc.b);
            o.numbers("theta_rad", s.psc.theta);
            o.integer("quantization_bits", s.psc.quantization_bits);
            o.finish();
        }
        if (const json *m = root.find("mobility"))
        {
            ObjectReader o(*m, "mobility");
            if (const json *w = o.find("rwm"))
            {
                ObjectReader r(*w, "mobility.rwm");
                r.vec3("center_m", s.rwm.region_center);
                r.number("radius_m", s.rwm.region_radius);
                r.number("v_min_mps", s.rwm.v_min);
                r.number("v_max_mps", s.rwm.v_max);
                r.number("p_pause", s.rwm.p_pause);
                r.number("tau_min_s", s.rwm.tau_min);
                r.number("tau_max_s", s.rwm.tau_max);
                r.finish();
            }
            if (const json *g = o.find("rpgm"))
            {
                ObjectReader r(*g, "mobility.rpgm");
                r.number("deviation_radius_m", s.rpgm.deviation_radius);
                r.number("dv_min_mps", s.rpgm.dv_min);
                r.number("dv_max_mps", s.rpgm.dv_max);
                r.vec3("reference_offset_m", s.rpgm.reference_offset);
                r.finish();
            }
            o.number("location_interval_s", s.location_interval_s);
            o.integer("locations", s.locations);
            o.finish();
        }
        if (const json *a = root.find("analysis"))
        {
            ObjectReader o(*a, "analysis");
            o.number("poisson_eps", s.a2g_options.poisson_eps);
            o.number("taylor_threshold", s.a2g_options.taylor_threshold);
            o.finish();
        }
        root.integer("seed", s.seed);
        root.integer("trials", s.trials);
        root.integer("kl_bins", s.kl_bins);
        root.finish();

        validate(s);
        return s;
    }

    Scenario load_scenario(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw std::invalid_argument("scenario: cannot open '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        try
        {
            return parse_scenario(ss.str());
        }
        catch (const std::invalid_argument &e)
        {
            throw std::invalid_argument(path + ": " + e.what());
        }
    }

    std::string scenario_to_json(const Scenario &s)
    {
        json j;
        j["radio"] = {{"fc_hz", s.fc_hz}, {"bandwidth_hz", s.bandwidth_hz}, {"noise_figure_db", s.noise_figure_db},
                      {"n0_dbm_per_hz", s.n0_dbm_per_hz}, {"k0_db", s.k0_db}, {"kpi_db", s.kpi_db}, {"nlos", s.nlos},
                      {"p_s_dbm", s.p_s_dbm}, {"p_u_dbm", s.p_u_dbm}};
        j["aging"] = {{"ts_s", s.ts_s}, {"t_k_samples", s.t_k}, {"estimation_time_s", s.estimation_time_s}};
        j["target_se_bps_per_hz"] = s.target_se;
        j["bs"] = {{"position_m", vec_json(s.p_bs)}, {"velocity_mps", vec_json(s.v_bs)}, {"n_h", s.bs_nh}, {"n_v", s.bs_nv}};
        j["uav"] = {{"position_m", vec_json(s.p_uav)}, {"velocity_mps", vec_json(s.v_uav)}};
        j["ris"] = {{"position_m", vec_json(s.p_ris)}, {"velocity_mps", vec_json(s.v_ris)}, {"n_h", s.ris_nh}, {"n_v", s.ris_nv}, {"beta", s.ris_beta}};
        j["gue"] = {{"position_m", vec_json(s.p_gue)}, {"velocity_mps", vec_json(s.v_gue)}};
        j["psc"] = {{"kind", to_string(s.psc.kind)}, {"a_rad", s.psc.a}, {"b_rad", s.psc.b}, {"theta_rad", s.psc.theta},
                    {"quantization_bits", s.psc.quantization_bits}};
        j["mobility"] = {{"rwm", {{"center_m", vec_json(s.rwm.region_center)}, {"radius_m", s.rwm.region_radius}, {"v_min_mps", s.rwm.v_min}, {"v_max_mps", s.rwm.v_max}, {"p_pause", s.rwm.p_pause}, {"tau_min_s", s.rwm.tau_min}, {"tau_max_s", s.rwm.tau_max}}},
                         {"rpgm", {{"deviation_radius_m", s.rpgm.deviation_radius}, {"dv_min_mps", s.rpgm.dv_min}, {"dv_max_mps", s.rpgm.dv_max}, {"reference_offset_m", vec_json(s.rpgm.reference_offset)}}},
                         {"location_interval_s", s.location_interval_s},
                         {"locations", s.locations}};
        j["analysis"] = {{"poisson_eps", s.a2g_options.poisson_eps}, {"taylor_threshold", s.a2g_options.taylor_threshold}};
        j["seed"] = s.seed;
        j["trials"] = s.trials;
        j["kl_bins"] = s.kl_bins;
        return j.dump(2);
    }

    Snapshot initial_snapshot(const Scenario &s)
    {
        return {s.p_bs, s.p_uav, s.p_ris, s.p_gue, s.v_bs, s.v_uav, s.v_ris, s.v_gue};
    }

    LinkSet build_links(const Scenario &s, const Snapshot &snap)
    {
        validate(s);
        const double lam = s.wavelength();
        const double kw = 2.0 * pi / lam;
        const double noise = s.noise_w();
        const RicianFactorModel kmodel{db_to_linear(s.k0_db), db_to_linear(s.kpi_db), s.nlos};
        const double t_est = s.estimation_time_s;

        LinkSet out;

        // BS -> UAV
        const Vec3 d_su = snap.p_uav - snap.p_bs;
        const Spherical sph_su = cart_to_sph(d_su);
        const Vec3 r_su = unit(d_su);
        const UpaGeometry bs_geom = UpaGeometry::half_wavelength(s.bs_nh, s.bs_nv, s.fc_hz);
        const int M = bs_geom.size();
        const PathLossModel pl_av{PathLossKind::UMiAV, s.fc_hz, snap.p_uav.z};
        out.f_max_su = max_doppler(snap.v_bs, snap.v_uav, s.fc_hz);
        out.pl_su_db = path_loss_db(pl_av, sph_su.d);
        G2ALink &g = out.g2a;
        g.M = M;
        g.K = rician_k(kmodel, std::abs(sph_su.theta));
        g.rho = jakes_rho(s.t_k, s.ts_s, out.f_max_su);
        g.gamma_bar = dbm_to_watt(s.p_s_dbm) * path_loss(pl_av, sph_su.d) / noise;
        g.los = los_with_doppler(steering_vector(bs_geom, r_su), doppler_shift(snap.v_bs, snap.v_uav, r_su, s.fc_hz), t_est,
                                 std::sqrt(static_cast<double>(M)));

        // UAV -> RIS -> GUE, per element
        const UpaGeometry ris_geom = UpaGeometry::half_wavelength(s.ris_nh, s.ris_nv, s.fc_hz);
        const int N = ris_geom.size();
        const Vec3 r_ur = unit(snap.p_ris - snap.p_uav);
        const Vec3 r_rd = unit(snap.p_gue - snap.p_ris);
        const PathLossModel pl_los{PathLossKind::UMiLoS, s.fc_hz, snap.p_gue.z};
        const double df_ur = doppler_shift(snap.v_uav, snap.v_ris, r_ur, s.fc_hz);
        const double df_rd = doppler_shift(snap.v_ris, snap.v_gue, r_rd, s.fc_hz);
        const cd rot_ur = std::polar(1.0, 2.0 * pi * df_ur * t_est);
        const cd rot_rd = std::polar(1.0, 2.0 * pi * df_rd * t_est);
        out.f_max_ur = max_doppler(snap.v_uav, snap.v_ris, s.fc_hz);
        out.f_max_rd = max_doppler(snap.v_ris, snap.v_gue, s.fc_hz);

        A2GLink &a = out.a2g;
        a.N = N;
        a.K_ur = rician_k(kmodel, std::abs(cart_to_sph(r_ur).theta));
        a.K_rd = rician_k(kmodel, std::abs(cart_to_sph(r_rd).theta));
        a.rho_ur = jakes_rho(s.t_k, s.ts_s, out.f_max_ur);
        a.rho_rd = jakes_rho(s.t_k, s.ts_s, out.f_max_rd);
        a.los_ur.resize(N);
        a.los_rd.resize(N);
        std::vector<double> amp(N);
        double amp_sum = 0.0;
        for (int n = 0; n < N; ++n)
        {
            const Vec3 off = element_offset(ris_geom, n + 1);
            const Vec3 pn = snap.p_ris + off;
            const double l_ur = path_loss(pl_av, norm(pn - snap.p_uav));
            const double l_rd = path_loss(pl_los, norm(snap.p_gue - pn));
            amp[n] = std::sqrt(l_ur * l_rd) * s.ris_beta;
            amp_sum += amp[n];
            a.los_ur[n] = rot_ur * std::polar(1.0, kw * dot(-r_ur, off));
            a.los_rd[n] = rot_rd * std::polar(1.0, kw * dot(r_rd, off));
        }
        out.ell_a2g = amp_sum * amp_sum / N;
        const double root_ell = std::sqrt(out.ell_a2g);
        a.beta.resize(N);
        for (int n = 0; n < N; ++n)
            a.beta[n] = amp[n] / root_ell;
        a.gamma_bar = dbm_to_watt(s.p_u_dbm) * out.ell_a2g / noise;
        return out;
    }

    LinkSet build_links(const Scenario &s) { return build_links(s, initial_snapshot(s)); }

    std::vector<Snapshot> generate_snapshots(const Scenario &s, int steps, std::uint64_t seed)
    {
        validate(s);
        if (steps < 1)
            throw std::invalid_argument("generate_snapshots: steps must be >= 1");
        Rng rng_d(seed, 101, 0);
        Rng rng_u(seed, 102, 0);
        MobilityState gue = rwm_init(s.p_gue, s.rwm, rng_d);
        MobilityState uav = rpgm_init(s.p_uav, gue, s.rpgm, rng_u);
        std::vector<Snapshot> out;
        out.reserve(steps);
        for (int k = 0; k < steps; ++k)
        {
            if (k > 0)
            {
                gue = rwm_advance(gue, s.rwm, s.location_interval_s, rng_d);
                uav = rpgm_advance(uav, gue, s.rpgm, s.location_interval_s, rng_u);
            }
            out.push_back({s.p_bs, uav.position, s.p_ris, gue.position, s.v_bs, uav.velocity, s.v_ris, gue.velocity});
        }
        return out;
    }

    std::vector<TrajectoryRow> snapshots_to_rows(const std::vector<Snapshot> &snaps)
    {
        std::vector<TrajectoryRow> rows;
        rows.reserve(2 * snaps.size());
        for (std::size_t k = 0; k < snaps.size(); ++k)
        {
            rows.push_back({static_cast<long long>(k), "gue", snaps[k].p_gue, snaps[k].v_gue});
            rows.push_back({static_cast<long long>(k), "uav", snaps[k].p_uav, snaps[k].v_uav});
        }
        return rows;
    }
}
