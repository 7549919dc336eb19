#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace tmkit
{
    /// Seeded generator whose draws are identical on every platform: only the
    /// raw 64-bit engine output is used, never a library distribution.
    class Rng
    {
        public:
            explicit Rng(std::uint64_t seed) :
                _engine(seed)
            {
            }

            /// Uniform in [lo, hi]; lo <= hi.
            auto uniform(long long lo, long long hi) -> long long
            {
                auto span = static_cast<std::uint64_t>(hi - lo) + 1;
                return lo + static_cast<long long>(_engine() % span);
            }

            /// True with probability num/den.
            auto chance(int num, int den) -> bool
            {
                return uniform(0, den - 1) < num;
            }

            template <typename T_>
            auto shuffle(std::vector<T_> & v) -> void
            {
                for (std::size_t i = v.size() ; i > 1 ; --i)
                    std::swap(v[i - 1], v[static_cast<std::size_t>(uniform(0, static_cast<long long>(i) - 1))]);
            }

            auto engine() -> std::mt19937_64 & { return _engine; }

        private:
            std::mt19937_64 _engine;
    };
}
