#include "liquid/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace liquid {

double uniform01(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

std::uint64_t uniform_below(std::mt19937_64& eng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("bound must be positive");
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = eng();
        if (r >= threshold) return r % bound;
    }
}

int uniform_int(std::mt19937_64& eng, int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("empty integer range");
    const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    return static_cast<int>(lo + static_cast<long long>(uniform_below(eng, span)));
}

double normal_sample(std::mt19937_64& eng) {
    // Box-Muller; fully determined by the engine's output sequence
    const double u1 = 1.0 - uniform01(eng);
    const double u2 = uniform01(eng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

double gamma_sample(std::mt19937_64& eng, double shape) {
    if (!(shape > 0.0)) throw std::invalid_argument("gamma shape must be positive");
    if (shape < 1.0) {
        const double u = uniform01(eng);
        return gamma_sample(eng, shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    // Marsaglia-Tsang squeeze
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x;
        double v;
        do {
            x = normal_sample(eng);
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform01(eng);
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

double beta_sample(std::mt19937_64& eng, double a, double b) {
    const double x = gamma_sample(eng, a);
    const double y = gamma_sample(eng, b);
    if (x + y == 0.0) return 0.5;  // both underflowed
    return x / (x + y);
}

}  // namespace liquid
