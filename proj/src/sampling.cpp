#include <lefschetz/sampling.hpp>

namespace lefschetz {

std::mt19937_64 make_stream(std::uint64_t seed, std::string_view operation, long a, long b)
{
    // FNV-1a keeps the operation tag stable across platforms.
    std::uint64_t tag = 1469598103934665603ULL;
    for (unsigned char ch : operation) {
        tag ^= ch;
        tag *= 1099511628211ULL;
    }
    const auto ua = static_cast<std::uint64_t>(a);
    const auto ub = static_cast<std::uint64_t>(b);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(tag), static_cast<std::uint32_t>(tag >> 32),
                      static_cast<std::uint32_t>(ua), static_cast<std::uint32_t>(ua >> 32),
                      static_cast<std::uint32_t>(ub), static_cast<std::uint32_t>(ub >> 32)};
    return std::mt19937_64(seq);
}

long random_coefficient(std::mt19937_64& rng)
{
    return std::uniform_int_distribution<long>(-kCoefficientBound, kCoefficientBound)(rng);
}

Form random_linear_form(std::size_t nvars, std::mt19937_64& rng)
{
    std::vector<long> c(nvars);
    bool nonzero = false;
    while (!nonzero) {
        for (auto& v : c) {
            v = random_coefficient(rng);
            nonzero = nonzero || v != 0;
        }
    }
    return Form::linear(std::span<const long>(c));
}

std::vector<Rational> random_torus_point(std::size_t nvars, std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> dist(1, kCoefficientBound);
    std::vector<Rational> p;
    p.reserve(nvars);
    for (std::size_t i = 0; i < nvars; ++i) p.emplace_back(dist(rng));
    return p;
}

Form random_form(std::size_t nvars, int degree, std::mt19937_64& rng)
{
    Form f(nvars, degree);
    for (const auto& e : monomial_basis(static_cast<int>(nvars) - 1, degree))
        f.add_term(e, random_coefficient(rng));
    return f;
}

}  // namespace lefschetz
