#include "support.hpp"

#include <lefschetz/bundles.hpp>
#include <lefschetz/errors.hpp>
#include <lefschetz/sampling.hpp>

#include <doctest.h>

using namespace lefschetz;
using namespace lefschetz::testing;

namespace {

// k(t) = sum max(0, a_i + t + 1)
std::vector<std::int64_t> kernel_from_type(const std::vector<int>& a, int d)
{
    std::vector<std::int64_t> k;
    for (int t = 0; t <= d; ++t) {
        std::int64_t s = 0;
        for (int v : a) s += std::max(0, v + t + 1);
        k.push_back(s);
    }
    return k;
}

}  // namespace

TEST_CASE("restriction to the line through e0 and e1")
{
    const std::vector<Rational> p{1, 0, 0};
    const std::vector<Rational> q{0, 1, 0};
    const std::vector<Form> forms{poly("x^3"), poly("xyz")};
    const auto restricted = restrict_to_line(forms, p, q);
    REQUIRE(restricted.size() == 2);
    CHECK(restricted[0] == parse_polynomial("s^3", {{"s", "t"}}));
    CHECK(restricted[1].is_zero());
    CHECK_THROWS_AS(restrict_to_line(forms, p, std::vector<Rational>{2, 0, 0}), PreconditionError);
}

TEST_CASE("splitting types of the fixtures")
{
    const auto tog = splitting_type(togliatti_ideal());
    CHECK(tog.values == std::vector<int>{-2, -1, 0});
    CHECK(tog.sum() == -3);
    CHECK_FALSE(wlp_via_splitting(togliatti_ideal()));

    const auto control = splitting_type(control_ideal());
    CHECK(control.values == std::vector<int>{-1, -1, -1});
    CHECK(control.kernel_dims.front() == 0);
    CHECK(control.kernel_dims == kernel_from_type({-1, -1, -1}, 3));
    CHECK(wlp_via_splitting(control_ideal()));
}

TEST_CASE("the criterion only sees degree d-1")
{
    const auto I = ideal({"x^9", "y^9", "z^9", "x^3y^3z^3"});
    CHECK(wlp_via_splitting(I));
    CHECK_FALSE(has_wlp(I).has_wlp);
}

TEST_CASE("splitting_type_from_kernel inverts the kernel formula")
{
    const std::vector<std::vector<int>> types{{-2, -1, 0}, {-1, -1, -1}, {-3, 0, 0, 0}, {-2, -2, -1, -1}};
    for (const auto& a : types) {
        int d = 0;
        for (int v : a) d -= v;
        const auto k = kernel_from_type(a, d);
        const auto type = splitting_type_from_kernel(k, a.size() + 1, d);
        CHECK(type.values == a);
    }
}

TEST_CASE("splitting type needs an artinian ideal")
{
    CHECK_THROWS_AS(splitting_type(ideal({"x^3", "y^3"})), NotArtinianError);
}

TEST_CASE("splitting type invariants on the corpus")
{
    for (const auto& [I, description] : random_corpus(80, 53)) {
        CAPTURE(description);
        const auto type = splitting_type(I);
        CHECK(type.values.size() == I.r() - 1);
        CHECK(type.sum() == -I.degree());
        for (int v : type.values) CHECK(v <= 0);
        CHECK(std::is_sorted(type.values.begin(), type.values.end()));
        for (std::size_t t = 1; t < type.kernel_dims.size(); ++t)
            CHECK(type.kernel_dims[t] >= type.kernel_dims[t - 1]);
        const auto d = static_cast<std::size_t>(I.degree());
        CHECK(type.kernel_dims[d] - type.kernel_dims[d - 1] <= static_cast<std::int64_t>(I.r()) - 1);
        CHECK(type.kernel_dims == kernel_from_type(type.values, I.degree()));
        if (static_cast<std::int64_t>(I.r()) > hyperplane_lemma_bound(I.n(), I.degree())) continue;
        // a dependence in degree d-1 forces a zero summand
        const bool fails = fails_in_degree_dminus1(I);
        if (fails) CHECK(type.last() == 0);
        if (I.n() == 2) CHECK(wlp_via_splitting(I) == !fails);
    }
}

TEST_CASE("Valles family")
{
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        for (int d : {5, 7}) {
            const auto check = valles_check(d, seed);
            CHECK(check.fails_in_degree_dminus1);
        }
        for (int d : {4, 6}) {
            const auto check = valles_check(d, seed);
            CHECK(check.has_wlp);
            CHECK(check.failure_degrees.empty());
        }
    }
}

TEST_CASE("r = 4 harness on a small range")
{
    R4Options options;
    options.monomial_samples = 10;
    options.random_samples = 2;
    const auto report = verify_r4_theorem(4, 9, options);
    CHECK(report.passed());
    REQUIRE(report.degrees.size() == 6);
    const auto& nine = report.degrees.back();
    bool special = false;
    for (const auto& s : nine.samples)
        if (s.kind == "special") {
            special = true;
            CHECK(s.failure_degrees == std::vector<int>{10});
        }
    CHECK(special);
    for (const auto& r : report.degrees)
        for (const auto& s : r.samples) CHECK_FALSE(s.fails_in_degree_dminus1);
    const auto j = to_json(report);
    CHECK(j.at("degrees").size() == 6);
}
