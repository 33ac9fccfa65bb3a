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

#include <cmath>

namespace aerolink
{
    inline constexpr double speed_of_light = 299792458.0;
    inline constexpr double pi = 3.14159265358979323846;

    struct Vec3
    {
        double x = 0.0, y = 0.0, z = 0.0;

        Vec3 &operator+=(const Vec3 &o)
        {
            x += o.x, y += o.y, z += o.z;
            return *this;
        }
        Vec3 &operator-=(const Vec3 &o)
        {
            x -= o.x, y -= o.y, z -= o.z;
            return *this;
        }
        Vec3 &operator*=(double s)
        {
            x *= s, y *= s, z *= s;
            return *this;
        }
    };

    inline Vec3 operator+(Vec3 a, const Vec3 &b) { return a += b; }
    inline Vec3 operator-(Vec3 a, const Vec3 &b) { return a -= b; }
    inline Vec3 operator*(Vec3 a, double s) { return a *= s; }
    inline Vec3 operator*(double s, Vec3 a) { return a *= s; }
    inline Vec3 operator-(const Vec3 &a) { return {-a.x, -a.y, -a.z}; }
    inline double dot(const Vec3 &a, const Vec3 &b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
    inline double norm(const Vec3 &a) { return std::sqrt(dot(a, a)); }

    // Throws std::domain_error for the zero vector.
    Vec3 unit(const Vec3 &a);

    // d >= 0, theta is the elevation asin(z/d), phi the azimuth in [0, 2pi).
    struct Spherical
    {
        double d = 0.0;
        double theta = 0.0;
        double phi = 0.0;
    };

    Vec3 sph_to_cart(const Spherical &s);
    Spherical cart_to_sph(const Vec3 &v);

    // (fc/c) (vB - vA)^T rAB; rAB must be a unit vector.
    double doppler_shift(const Vec3 &vA, const Vec3 &vB, const Vec3 &rAB, double fc);

    // (fc/c) |vB - vA|
    double max_doppler(const Vec3 &vA, const Vec3 &vB, double fc);
}
