#ifndef LEFSCHETZ_TESTS_SUPPORT_HPP
#define LEFSCHETZ_TESTS_SUPPORT_HPP

#include <lefschetz/form.hpp>
#include <lefschetz/linalg.hpp>
#include <lefschetz/monomial.hpp>
#include <lefschetz/parse.hpp>
#include <lefschetz/wlp.hpp>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace lefschetz::testing {

inline std::vector<std::string> vars_for(std::size_t nvars)
{
    return conventional_variables(nvars);
}

inline Form poly(const std::string& text, std::size_t nvars = 3)
{
    return parse_polynomial(text, vars_for(nvars));
}

inline IdealSpec ideal(std::initializer_list<const char*> generators, std::size_t nvars = 3)
{
    std::vector<Form> forms;
    for (const char* g : generators) forms.push_back(poly(g, nvars));
    const int d = forms.front().degree();
    return IdealSpec(static_cast<int>(nvars) - 1, d, forms);
}

inline std::vector<ExponentVector> exponents(std::initializer_list<const char*> monomials, std::size_t nvars = 4)
{
    std::vector<ExponentVector> out;
    for (const char* m : monomials) out.push_back(poly(m, nvars).terms().begin()->first);
    std::sort(out.begin(), out.end());
    return out;
}

inline IdealSpec togliatti_ideal() { return ideal({"x^3", "y^3", "z^3", "xyz"}); }
inline IdealSpec control_ideal() { return ideal({"x^3", "y^3", "z^3", "x^2y"}); }

// Textbook Gaussian elimination over Q, used as the rank oracle.
inline std::size_t naive_rank(RationalMatrix m)
{
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(rank, k), m(pivot, k));
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            if (m(i, c) == 0) continue;
            const Rational f = m(i, c) / m(rank, c);
            for (std::size_t k = c; k < m.cols(); ++k) m(i, k) -= f * m(rank, k);
        }
        ++rank;
    }
    return rank;
}

inline RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int rank_cap, long bound)
{
    std::uniform_int_distribution<long> coef(-bound, bound);
    RationalMatrix left(rows, static_cast<std::size_t>(rank_cap));
    RationalMatrix right(static_cast<std::size_t>(rank_cap), cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (int k = 0; k < rank_cap; ++k) {
            Rational q(coef(rng), 1 + rng() % 3);
            q.canonicalize();
            left(i, static_cast<std::size_t>(k)) = q;
        }
    for (int k = 0; k < rank_cap; ++k)
        for (std::size_t j = 0; j < cols; ++j) right(static_cast<std::size_t>(k), j) = coef(rng);
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            for (int k = 0; k < rank_cap; ++k)
                m(i, j) += left(i, static_cast<std::size_t>(k)) * right(static_cast<std::size_t>(k), j);
    return m;
}

struct CorpusIdeal {
    IdealSpec ideal;
    std::string description;
};

// Artinian ideals with n <= 3, d <= 6: pure powers plus random monomials,
// or pure powers plus small random dense forms.
inline std::vector<CorpusIdeal> random_corpus(std::size_t count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<CorpusIdeal> out;
    while (out.size() < count) {
        const int n = 2 + static_cast<int>(rng() % 2);
        const int dmax = n == 2 ? 6 : 4;
        const int d = 2 + static_cast<int>(rng() % static_cast<unsigned>(dmax - 1));
        const auto nvars = static_cast<std::size_t>(n) + 1;
        const auto basis = monomial_basis(n, d);
        std::vector<ExponentVector> mixed;
        for (const auto& e : basis)
            if (e.support().size() > 1) mixed.push_back(e);
        std::shuffle(mixed.begin(), mixed.end(), rng);
        const std::size_t limit = std::min<std::size_t>(mixed.size(), static_cast<std::size_t>(binomial(n + d - 1, n - 1)));
        const std::size_t extra = 1 + rng() % std::max<std::size_t>(1, limit - n);
        std::vector<Form> gens;
        for (std::size_t i = 0; i < nvars; ++i) gens.push_back(Form::monomial(ExponentVector::unit(nvars, i, d)));
        const bool dense = rng() % 4 == 0;
        std::string description = "n=" + std::to_string(n) + " d=" + std::to_string(d);
        for (std::size_t k = 0; k < extra && k < mixed.size(); ++k) {
            if (!dense) {
                gens.push_back(Form::monomial(mixed[k]));
                continue;
            }
            Form f(nvars, d);
            std::uniform_int_distribution<long> coef(-5, 5);
            for (std::size_t t = 0; t < 3; ++t) f.add_term(mixed[(k + t) % mixed.size()], coef(rng));
            if (!f.is_zero()) gens.push_back(f);
        }
        if (rank_of_span(gens) != gens.size()) continue;
        IdealSpec I(n, d, gens);
        out.push_back({I, description + (dense ? " dense" : " monomial") + " r=" + std::to_string(I.r())});
    }
    return out;
}

}  // namespace lefschetz::testing

#endif  // LEFSCHETZ_TESTS_SUPPORT_HPP
