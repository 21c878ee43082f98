#include "support.hpp"

#include <lefschetz/apolarity.hpp>
#include <lefschetz/sampling.hpp>

#include <doctest.h>

#include <set>

using namespace lefschetz;
using namespace lefschetz::testing;

TEST_CASE("contraction by derivatives")
{
    const auto vars = default_variables(2);
    auto P = [&](const char* text) { return parse_polynomial(text, vars); };
    CHECK(contract(P("x0"), P("x0^3")) == P("3x0^2"));
    CHECK(contract(P("x0x1"), P("x0^2x1^2")) == P("4x0x1"));
    CHECK(contract(P("x0^2"), P("x1^3")).is_zero());
    CHECK(contract(P("x0^2"), P("x1^3")).degree() == 1);
}

TEST_CASE("contraction is adjoint to multiplication")
{
    auto rng = make_stream(3, "test.adjoint");
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t nvars = 3 + trial % 2;
        const int d = 2 + trial % 4;
        const Form u = random_form(nvars, d - 1, rng);
        const Form F = random_form(nvars, d, rng);
        const Form L = random_linear_form(nvars, rng);
        CHECK(contract(L * u, F) == contract(u, contract(L, F)));
    }
}

TEST_CASE("apolar complement of the Togliatti ideal")
{
    const auto system = apolar_complement(togliatti_ideal());
    CHECK(system.monomial);
    std::set<std::string> got;
    for (const auto& f : system.basis) got.insert(to_string(f, vars_for(3)));
    CHECK(got == std::set<std::string>{"x^2*y", "x*y^2", "x^2*z", "x*z^2", "y^2*z", "y*z^2"});
}

TEST_CASE("complement of everything is empty")
{
    std::vector<Form> all;
    for (const auto& e : monomial_basis(2, 3)) all.push_back(Form::monomial(e));
    const IdealSpec full(2, 3, all);
    const auto system = apolar_complement(full);
    CHECK(system.basis.empty());
    CHECK(dual_map_rank(system, sum_of_variables(3)) == 0);
}

TEST_CASE("complement is annihilated and has the right size")
{
    for (const auto& [I, description] : random_corpus(40, 41)) {
        CAPTURE(description);
        const auto system = apolar_complement(I);
        CHECK(static_cast<std::int64_t>(system.basis.size()) == binomial(I.n() + I.degree(), I.degree()) -
                                                                     static_cast<std::int64_t>(I.r()));
        for (const auto& g : I.generators())
            for (const auto& F : system.basis) CHECK(contract(g, F).is_zero());
        if (!I.is_monomial()) continue;
        // monomial ideals: exactly the missing monomials
        std::set<ExponentVector> missing;
        for (const auto& e : monomial_basis(I.n(), I.degree()))
            if (!I.has_generator(e)) missing.insert(e);
        std::set<ExponentVector> got;
        for (const auto& F : system.basis) {
            REQUIRE(F.size() == 1);
            got.insert(F.terms().begin()->first);
        }
        CHECK(got == missing);
    }
}

TEST_CASE("dual map rank")
{
    CHECK(dual_map_rank(togliatti_ideal(), sum_of_variables(3)) == 5);
    CHECK(dual_map_rank(togliatti_ideal(), sum_of_variables(3)) ==
          multiplication_rank(togliatti_ideal(), sum_of_variables(3), 2).rank);
    // no generators: x L is injective on R_{d-1}
    const IdealSpec zero(2, 3, {});
    auto rng = make_stream(0, "test.dual");
    CHECK(dual_map_rank(zero, random_linear_form(3, rng)) == binomial(2 + 2, 2));
}
