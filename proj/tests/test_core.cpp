#include "support.hpp"

#include <lefschetz/errors.hpp>
#include <lefschetz/sampling.hpp>

#include <doctest.h>

using namespace lefschetz;
using namespace lefschetz::testing;

TEST_CASE("monomial_basis sizes")
{
    CHECK(monomial_basis(2, 3).size() == 10);
    CHECK(monomial_basis(3, 3).size() == 20);
    const auto constant = monomial_basis(4, 0);
    REQUIRE(constant.size() == 1);
    CHECK(constant.front() == ExponentVector::zero(5));
    for (int n = 1; n <= 4; ++n)
        for (int d = 0; d <= 5; ++d) CHECK(monomial_basis(n, d).size() == static_cast<std::size_t>(binomial(n + d, d)));
}

TEST_CASE("monomial_basis is strictly increasing")
{
    const auto basis = monomial_basis(3, 4);
    CHECK(std::is_sorted(basis.begin(), basis.end()));
    CHECK(std::adjacent_find(basis.begin(), basis.end()) == basis.end());
}

TEST_CASE("substitute z := -x - y")
{
    const Form minus_x_minus_y = poly("-x - y", 3);
    CHECK(substitute_variable(poly("x^3 + y^3 + z^3 - 3xyz"), 2, minus_x_minus_y).is_zero());
    CHECK(substitute_variable(poly("xyz"), 2, minus_x_minus_y) == parse_polynomial("-x^2y - xy^2", {{"x", "y"}}));
    CHECK(substitute_variable(poly("x^3"), 2, minus_x_minus_y) == parse_polynomial("x^3", {{"x", "y"}}));
    CHECK_THROWS_AS(substitute_variable(poly("x^3"), 2, poly("z")), PreconditionError);
    CHECK_THROWS_AS(substitute_variable(poly("x^3"), 2, poly("x^2")), PreconditionError);
}

TEST_CASE("substitution is multiplicative")
{
    auto rng = make_stream(11, "test.substitute");
    for (int trial = 0; trial < 20; ++trial) {
        const Form f = random_form(3, 1 + trial % 3, rng);
        const Form g = random_form(3, 1 + trial % 2, rng);
        Form h(3, 1);
        h.add_term(ExponentVector{1, 0, 0}, random_coefficient(rng));
        h.add_term(ExponentVector{0, 1, 0}, random_coefficient(rng));
        CHECK(substitute_variable(f * g, 2, h) == substitute_variable(f, 2, h) * substitute_variable(g, 2, h));
    }
}

TEST_CASE("rank_of_span examples")
{
    const auto hyperplane = poly("-x - y");
    std::vector<Form> restricted;
    for (const char* g : {"x^3", "y^3", "z^3", "xyz"}) restricted.push_back(substitute_variable(poly(g), 2, hyperplane));
    CHECK(rank_of_span(restricted) == 3);
    // the dependence (1,1,1,-3)
    CHECK((restricted[0] + restricted[1] + restricted[2] - 3 * restricted[3]).is_zero());
    const std::vector<Form> control{poly("x^3"), poly("y^3"), poly("z^3"), poly("x^2y")};
    CHECK(rank_of_span(control) == 4);
    CHECK(rank_of_span(std::vector<Form>{}) == 0);
}

TEST_CASE("rank_of_span ignores order and scaling")
{
    auto rng = make_stream(5, "test.span");
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Form> forms;
        for (int i = 0; i < 6; ++i) forms.push_back(random_form(3, 2, rng));
        forms.push_back(forms[0] + forms[1]);
        const auto base = rank_of_span(forms);
        CHECK(base == 6);
        std::shuffle(forms.begin(), forms.end(), rng);
        forms[2] *= Rational(-7, 3);
        CHECK(rank_of_span(forms) == base);
    }
}

TEST_CASE("fraction-free, modular and naive ranks agree on 200 random matrices")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng() % 30;
        const std::size_t cols = 1 + rng() % 30;
        const int cap = 1 + static_cast<int>(rng() % std::min<std::size_t>(rows, cols));
        const auto m = random_matrix(rng, rows, cols, cap, trial % 2 ? 9 : 1000000);
        const auto expected = naive_rank(m);
        CAPTURE(trial);
        CHECK(expected == static_cast<std::size_t>(cap));
        const auto integral = clear_denominators(m);
        CHECK(rank_fraction_free(integral) == expected);
        CHECK(rank_exact(integral) == expected);
    }
}

TEST_CASE("rank_exact survives huge entries")
{
    IntegerMatrix m(3, 3);
    const Integer big = Integer(1) << 400;
    m(0, 0) = big;
    m(0, 1) = big + 1;
    m(1, 0) = big - 1;
    m(1, 1) = big;
    m(2, 0) = 2 * big - 1;
    m(2, 1) = 2 * big + 1;
    CHECK(rank_exact(m) == 2);
    CHECK(rank_fraction_free(m) == 2);
    CHECK_THROWS_AS(rank_exact(m, 1), ConsistencyError);
}

TEST_CASE("kernel_basis vectors are killed")
{
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        const auto m = random_matrix(rng, 5, 8, 1 + trial % 5, 50);
        const auto kernel = kernel_basis(m);
        CHECK(kernel.size() == 8 - naive_rank(m));
        for (const auto& v : kernel)
            for (std::size_t i = 0; i < m.rows(); ++i) {
                Rational s = 0;
                for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
                CHECK(s == 0);
            }
    }
}

TEST_CASE("form arithmetic and printing")
{
    const Form f = poly("x^2 + 2xy");
    CHECK(to_string(f, vars_for(3)) == "x^2 + 2*x*y");
    CHECK((f - f).is_zero());
    CHECK(poly("x + y").pow(2) == poly("x^2 + 2xy + y^2"));
    CHECK(primitive_part(poly("-4x^2 + 6xy")) == poly("2x^2 - 3xy"));
    const std::vector<Rational> point{1, 2, 3};
    CHECK(poly("xyz").evaluate(point) == 6);
}

TEST_CASE("sampling streams are reproducible and separated")
{
    auto a = make_stream(7, "wlp.linear", 3);
    auto b = make_stream(7, "wlp.linear", 3);
    auto c = make_stream(7, "wlp.linear", 4);
    const auto x = a();
    CHECK(x == b());
    CHECK(x != c());
    for (int i = 0; i < 1000; ++i) {
        const long v = random_coefficient(a);
        CHECK(std::labs(v) <= kCoefficientBound);
    }
    for (const auto& p : random_torus_point(4, a)) CHECK((p >= 1 && p <= 999));
}
