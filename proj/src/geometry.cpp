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

#include "aerolink/geometry.hpp"

#include <stdexcept>

namespace aerolink
{
    Vec3 unit(const Vec3 &a)
    {
        const double n = norm(a);
        if (!(n > 0.0))
            throw std::domain_error("unit: undefined direction");
        return a * (1.0 / n);
    }

    Vec3 sph_to_cart(const Spherical &s)
    {
        if (!(s.d >= 0.0))
            throw std::invalid_argument("sph_to_cart: distance must be nonnegative");
        const double ct = std::cos(s.theta);
        return {s.d * ct * std::cos(s.phi), s.d * ct * std::sin(s.phi), s.d * std::sin(s.theta)};
    }

    Spherical cart_to_sph(const Vec3 &v)
    {
        const double d = norm(v);
        if (!(d > 0.0))
            throw std::domain_error("cart_to_sph: undefined direction");
        Spherical s;
        s.d = d;
        double r = v.z / d;
        r = r > 1.0 ? 1.0 : (r < -1.0 ? -1.0 : r);
        s.theta = std::asin(r);
        if (v.x == 0.0 && v.y == 0.0)
            s.phi = 0.0;
        else
        {
            s.phi = std::atan2(v.y, v.x);
            if (s.phi < 0.0)
                s.phi += 2.0 * pi;
            if (s.phi >= 2.0 * pi)
                s.phi = 0.0;
        }
        return s;
    }

    double doppler_shift(const Vec3 &vA, const Vec3 &vB, const Vec3 &rAB, double fc)
    {
        if (std::abs(norm(rAB) - 1.0) > 1e-9)
            throw std::invalid_argument("doppler_shift: direction must be a unit vector");
        return fc / speed_of_light * dot(vB - vA, rAB);
    }

    double max_doppler(const Vec3 &vA, const Vec3 &vB, double fc)
    {
        return fc / speed_of_light * norm(vB - vA);
    }
}
