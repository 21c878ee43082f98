#ifndef LEFSCHETZ_SAMPLING_HPP
#define LEFSCHETZ_SAMPLING_HPP

#include <lefschetz/form.hpp>

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace lefschetz {

/// Seed and trial count shared by every randomized (generic-object) query.
struct SamplingOptions {
    std::uint64_t seed = 0;
    int trials = 3;
};

inline constexpr long kCoefficientBound = 999;

/// Independent generator for one (seed, operation, a, b) tuple, so results do
/// not depend on call order or thread scheduling.
std::mt19937_64 make_stream(std::uint64_t seed, std::string_view operation, long a = 0, long b = 0);

/// Integer uniform in [-999, 999].
long random_coefficient(std::mt19937_64& rng);

/// Linear form with coefficients uniform in [-999, 999], not identically zero.
Form random_linear_form(std::size_t nvars, std::mt19937_64& rng);

/// Point with integer coordinates uniform in [1, 999] (off every coordinate hyperplane).
std::vector<Rational> random_torus_point(std::size_t nvars, std::mt19937_64& rng);

/// Dense random form of the given degree, coefficients in [-999, 999].
Form random_form(std::size_t nvars, int degree, std::mt19937_64& rng);

}  // namespace lefschetz

#endif  // LEFSCHETZ_SAMPLING_HPP
