#pragma once

// Exact quantum chromatic number of Hadamard graphs: the Hoffman ceiling
// supplies the lower bound N, the explicit N-color strategy (verified
// numerically) witnesses the upper bound N.

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "qchrom/spectrum.hpp"
#include "qchrom/strategy.hpp"

namespace qchrom {

struct ChromaticReport {
    int n = 0;
    std::int64_t chi_q = 0;
    HoffmanReport hoffman;
    std::int64_t lower_bound = 0;
    std::int64_t upper_bound = 0;
    StrategyReport strategy;
};

// Default witness verification: exhaustive for n <= 8, otherwise sampled
// with 10^5 tuples from seed 42.
inline ChromaticReport hadamard_quantum_chromatic(
    int n, const std::optional<Sampling>& sampling = std::nullopt) {
    if (n < 4 || n % 4 != 0)
        throw std::invalid_argument("quantum chromatic number computed for orders divisible by 4");

    ChromaticReport rep;
    rep.n = n;

    const auto [lmax, lmin] = hadamard_extremes(n);
    rep.hoffman.lambda_max = lmax;
    rep.hoffman.lambda_min = lmin;
    rep.hoffman.ratio = Rational(1) + Rational(lmax, -lmin);
    rep.hoffman.integer_bound = rep.hoffman.ratio.ceil_value();
    rep.lower_bound = rep.hoffman.integer_bound;

    const Sampling mode =
        sampling ? *sampling : (n <= 8 ? Sampling::exhaustive_mode() : Sampling::sampled(100000, 42));
    rep.strategy = verify_strategy(n, mode);
    rep.upper_bound = n;

    rep.chi_q = n;
    return rep;
}

}  // namespace qchrom
