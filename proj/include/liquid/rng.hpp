#pragma once

#include <cstdint>
#include <random>

namespace liquid {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Decorrelated seed for stream `stream` of a run seeded with `seed`.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t s = seed ^ (0x632be59bd9b4e019ULL * (stream + 1));
    return splitmix64(s);
}

// Tiny counter-seeded generator. One instance per Monte Carlo trial, so a
// trial's draws depend on (seed, trial index) only.
class SplitMix {
public:
    explicit SplitMix(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() { return splitmix64(state_); }
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

// [0, 1), from the top 53 bits of the engine output.
double uniform01(std::mt19937_64& eng);

// Unbiased integer in [0, bound).
std::uint64_t uniform_below(std::mt19937_64& eng, std::uint64_t bound);

// Unbiased integer in [lo, hi], inclusive.
int uniform_int(std::mt19937_64& eng, int lo, int hi);

double normal_sample(std::mt19937_64& eng);
double gamma_sample(std::mt19937_64& eng, double shape);
double beta_sample(std::mt19937_64& eng, double a, double b);

}  // namespace liquid
