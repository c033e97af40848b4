#pragma once

#include <cstdint>
#include <random>

namespace revmax {

// Deterministic RNG with named substreams: stream i of seed s always yields the
// same sequence, so experiment suites can be generated (or re-generated) per
// instance without ordering effects. Doubles are built from raw mt19937_64 bits
// rather than std::uniform_real_distribution, whose output is
// implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(splitmix(seed)) {}

    static Rng for_stream(std::uint64_t seed, std::uint64_t stream) {
        return Rng(splitmix(seed + 0x9e3779b97f4a7c15ULL * (stream + 1)));
    }

    std::uint64_t next_u64() { return gen_(); }

    // uniform in [lo, hi)
    double uniform(double lo, double hi) {
        double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    // uniform integer in [lo, hi], inclusive
    int uniform_int(int lo, int hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(next_u64() % span);
    }

    // uniform pick from a fixed-size list
    template <typename T, std::size_t N>
    T pick(const T (&options)[N]) {
        return options[next_u64() % N];
    }

private:
    static std::uint64_t splitmix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::mt19937_64 gen_;
};

}  // namespace revmax
