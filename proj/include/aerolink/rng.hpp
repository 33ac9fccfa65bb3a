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

#include <complex>
#include <cstdint>
#include <limits>
#include <random>

namespace aerolink
{
    inline std::uint64_t splitmix64(std::uint64_t &s)
    {
        std::uint64_t z = (s += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // xoshiro256** with splitmix64 seeding; satisfies UniformRandomBitGenerator.
    class Xoshiro256
    {
    public:
        using result_type = std::uint64_t;

        explicit Xoshiro256(std::uint64_t seed = 0) { reseed(seed); }

        void reseed(std::uint64_t seed)
        {
            std::uint64_t s = seed;
            for (auto &w : s_)
                w = splitmix64(s);
        }

        static constexpr result_type min() { return 0; }
        static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

        result_type operator()()
        {
            const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
            const std::uint64_t t = s_[1] << 17;
            s_[2] ^= s_[0];
            s_[3] ^= s_[1];
            s_[1] ^= s_[2];
            s_[0] ^= s_[3];
            s_[2] ^= t;
            s_[3] = rotl(s_[3], 45);
            return result;
        }

    private:
        static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
        std::uint64_t s_[4];
    };

    // Random stream bound to (seed, stream, index). Any trial can be regenerated on its own.
    class Rng
    {
    public:
        explicit Rng(std::uint64_t seed, std::uint64_t stream = 0, std::uint64_t index = 0)
            : eng_(derive(seed, stream, index)) {}

        static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream, std::uint64_t index)
        {
            std::uint64_t s = seed;
            std::uint64_t h = splitmix64(s);
            s = h ^ (stream * 0xD1B54A32D192ED03ULL);
            h = splitmix64(s);
            s = h ^ (index * 0x8CB92BA72F3D8DD7ULL);
            return splitmix64(s);
        }

        double uniform() { return (eng_() >> 11) * 0x1.0p-53; }
        double uniform(double a, double b) { return a + (b - a) * uniform(); }
        double normal() { return normal_(eng_); }

        // Circularly symmetric complex Gaussian with unit variance.
        std::complex<double> cnormal()
        {
            constexpr double s = 0.70710678118654752440;
            const double re = normal_(eng_);
            const double im = normal_(eng_);
            return {s * re, s * im};
        }

        Xoshiro256 &engine() { return eng_; }

    private:
        Xoshiro256 eng_;
        std::normal_distribution<double> normal_{0.0, 1.0};
    };
}
