#include "support.hpp"

#include <lefschetz/apolarity.hpp>
#include <lefschetz/classify.hpp>
#include <lefschetz/errors.hpp>
#include <lefschetz/osculating.hpp>
#include <lefschetz/polytope.hpp>

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <set>

using namespace lefschetz;
using namespace lefschetz::testing;

namespace {

// all distinct images under variable permutations
std::set<MonomialSet> orbit(const MonomialSet& set)
{
    const std::size_t nvars = set.front().size();
    std::vector<std::size_t> perm(nvars);
    std::iota(perm.begin(), perm.end(), 0);
    std::set<MonomialSet> out;
    do {
        MonomialSet image;
        for (const auto& e : set) image.push_back(e.permuted(perm));
        std::sort(image.begin(), image.end());
        out.insert(image);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

const ClassificationResult& n3()
{
    static const ClassificationResult result = enumerate_cubic_togliatti(3);
    return result;
}

std::vector<ExponentVector> apolar_points(const IdealSpec& I)
{
    std::vector<ExponentVector> points;
    for (const auto& f : apolar_complement(I).basis) points.push_back(f.terms().begin()->first);
    return points;
}

}  // namespace

TEST_CASE("canonical forms")
{
    CHECK(canonical_form(exponents({"a^2b"})) == canonical_form(exponents({"c^2d"})));
    const auto symmetric = exponents({"x^3", "y^3", "z^3", "xyz"}, 3);
    CHECK(canonical_form(symmetric) == symmetric);
    CHECK(canonicalize(symmetric).orbit_size == 1);
    CHECK(canonicalize(exponents({"a^2b"})).orbit_size == 12);
}

TEST_CASE("canonical form is the least image and orbit sizes match")
{
    std::mt19937_64 rng(5);
    auto cubics = monomial_basis(3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        std::shuffle(cubics.begin(), cubics.end(), rng);
        MonomialSet set(cubics.begin(), cubics.begin() + 1 + trial % 9);
        std::sort(set.begin(), set.end());
        const auto images = orbit(set);
        const auto form = canonicalize(set);
        CHECK(form.monomials == *images.begin());
        CHECK(form.orbit_size == images.size());
        MonomialSet shuffled = set;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(canonical_form(shuffled) == form.monomials);
    }
}

TEST_CASE("n = 2 has a single Togliatti system of cubics")
{
    const auto result = enumerate_cubic_togliatti(2);
    CHECK(result.candidates == 7);
    REQUIRE(result.records.size() == 1);
    const auto& record = result.records.front();
    CHECK_FALSE(record.trivial());
    CHECK(record.generators == exponents({"x^3", "y^3", "z^3", "xyz"}, 3));
    CHECK(record.smooth());
    CHECK(record.toric_degree == 6);
    CHECK(record.laplace_equations == 1);
    CHECK(record.label == "togliatti");
}

TEST_CASE("n = 3 enumeration counts")
{
    const auto& result = n3();
    CHECK(result.candidates == 14892);
    CHECK(result.raw_hits == 4104);
    CHECK(result.records.size() == 224);
    std::size_t orbit_total = 0;
    for (const auto& r : result.records) orbit_total += r.orbit_size;
    CHECK(orbit_total == result.raw_hits);
}

TEST_CASE("n = 3 every record is a certified Togliatti system")
{
    for (const auto& r : n3().records) {
        CHECK(r.togliatti);
        CHECK(r.laplace_equations >= 1);
        CHECK(r.wlp_failure_degrees.size() >= 1);
        CHECK(std::find(r.wlp_failure_degrees.begin(), r.wlp_failure_degrees.end(), 2) != r.wlp_failure_degrees.end());
        CHECK(r.r() <= 10);
        CHECK(r.quadric.has_value());
    }
}

TEST_CASE("n = 3 smooth records")
{
    std::map<std::string, const ClassificationRecord*> smooth_nontrivial;
    std::vector<const ClassificationRecord*> smooth_trivial;
    for (const auto& r : n3().records) {
        if (!r.smooth()) continue;
        if (r.trivial())
            smooth_trivial.push_back(&r);
        else
            smooth_nontrivial[r.label] = &r;
    }
    REQUIRE(smooth_nontrivial.size() == 3);
    CHECK(smooth_nontrivial.at("case-1")->toric_degree == 23);
    CHECK(smooth_nontrivial.at("case-2")->toric_degree == 18);
    CHECK(smooth_nontrivial.at("case-3")->toric_degree == 13);
    CHECK(smooth_nontrivial.at("case-1")->orbit_size == 1);
    CHECK(smooth_nontrivial.at("case-2")->orbit_size == 6);
    CHECK(smooth_nontrivial.at("case-3")->orbit_size == 3);
    CHECK(smooth_nontrivial.at("case-3")->wlp_failure_degrees == std::vector<int>{2, 3});

    // one further smooth system, trivial of both types, with no case label
    REQUIRE(smooth_trivial.size() == 1);
    const auto& extra = *smooth_trivial.front();
    CHECK(extra.toric_degree == 9);
    CHECK(extra.orbit_size == 12);
    CHECK(extra.r() == 10);
    CHECK(extra.trivial_a.has_value());
    CHECK(extra.trivial_b);
    CHECK(extra.label.empty());
    CHECK(extra.laplace_equations == 2);
    // ten marked points, eight of them vertices, six facets
    const auto P = build_polytope(extra.apolar);
    CHECK(P.facets().size() == 6);
    CHECK(P.vertices().size() == 8);
    CHECK(is_smooth(P));
}

TEST_CASE("n = 3 quasi-smooth records")
{
    std::map<std::string, int> labels;
    const ClassificationRecord* four = nullptr;
    for (const auto& r : n3().records) {
        if (!r.quasi_smooth() || r.smooth()) continue;
        ++labels[r.label];
        if (r.label == "case-4") four = &r;
    }
    CHECK(labels["case-4"] == 1);
    CHECK(labels["case-4'"] == 6);
    CHECK(labels[""] == 4);
    REQUIRE(four != nullptr);
    CHECK(four->toric_degree == 18);
    CHECK(four->edge_rule_fired);
    REQUIRE(four->trivial_a.has_value());
    // ab up to renaming
    CHECK(canonical_form(MonomialSet{*four->trivial_a}) == canonical_form(exponents({"ab"})));
    REQUIRE(four->quadric.has_value());
    CHECK(four->quadric->size() == 1);
}

TEST_CASE("the 13-generator systems are singular and trivial")
{
    const auto record = certify(build_named_example("thirteen", 3));
    CHECK(record.togliatti);
    CHECK(record.verdict == ToricVerdict::singular);
    CHECK(record.trivial_a.has_value());
}

TEST_CASE("projection family")
{
    const auto family = projection_family();
    CHECK(family.size() == 3 + 15 + 3);
    for (const auto& member : family) {
        const auto record = certify(member.ideal);
        CAPTURE(member.source);
        CHECK(record.quasi_smooth());
        CHECK_FALSE(record.smooth());
        // more than ten generators leaves the Togliatti range
        CHECK(record.togliatti == (member.ideal.r() <= 10));
    }
}

TEST_CASE("counterexample family")
{
    const auto case2 = canonical_form(build_named_example("case-2", 3).monomials());
    CHECK(canonical_form(build_named_example("ilardi-counterexample", 3).monomials()) == case2);
    for (int n = 3; n <= 5; ++n) {
        CAPTURE(n);
        const auto I = build_named_example("ilardi-counterexample", n);
        CHECK(is_togliatti(I));
        const auto points = apolar_points(I);
        CHECK(static_cast<int>(points.size()) == n * (n + 1));
        CHECK(is_smooth(build_polytope(points)));
        const Form q = ilardi_quadric(n);
        for (const auto& p : points) {
            std::vector<Rational> x(p.entries().begin(), p.entries().end());
            CHECK(q.evaluate(x) == 0);
        }
    }
    const Form four = ilardi_quadric(4);
    const auto vars = default_variables(5);
    CHECK(four == parse_polynomial("2x0^2 + 2x1^2 + 2x2^2 + 2x3^2 + 2x4^2 + 4x0x1 + 4x0x2 + 4x1x2"
                                   " - 5x0x3 - 5x0x4 - 5x1x3 - 5x1x4 - 5x2x3 - 5x2x4 - 5x3x4",
                                   vars));
}

TEST_CASE("truncated simplex for n = 2 is the punctured hexagon")
{
    const auto points = apolar_points(build_named_example("truncated-simplex", 2));
    CHECK(points.size() == 6);
    for (const auto& p : points) {
        CHECK(std::count(p.entries().begin(), p.entries().end(), 2) == 1);
        CHECK(std::count(p.entries().begin(), p.entries().end(), 1) == 1);
    }
}

TEST_CASE("partition examples")
{
    CHECK(parse_partition("0,1|2|3") == std::vector<std::vector<int>>{{0, 1}, {2}, {3}});
    CHECK_THROWS_AS(parse_partition("0,1|x"), ParseError);
    CHECK_THROWS_AS(partition_example(3, {{0, 1, 2}, {3}}), PreconditionError);
    const std::map<std::string, std::int64_t> degrees{{"0|1|2|3", 23}, {"0,1|2|3", 18}, {"0,1|2,3", 13}};
    for (const auto& [text, degree] : degrees) {
        const auto record = certify(partition_example(3, parse_partition(text)));
        CAPTURE(text);
        CHECK(record.smooth());
        CHECK(record.toric_degree == degree);
    }
    CHECK(certify(partition_example(4, parse_partition("0,1|2|3,4"))).smooth());
}

TEST_CASE("named examples")
{
    for (const auto& name : named_examples()) {
        if (name == "partition") continue;
        CAPTURE(name);
        CHECK_NOTHROW(build_named_example(name, 3));
    }
    CHECK_THROWS_AS(build_named_example("nonsense", 3), PreconditionError);
}

TEST_CASE("records survive JSON")
{
    for (const auto& r : n3().records) {
        const auto j = to_json(r);
        const auto back = record_from_json(j);
        CHECK(to_json(back) == j);
        CHECK(j.at("schema") == kCacheSchemaVersion);
    }
}

TEST_CASE("cache and resume")
{
    const auto dir = std::filesystem::temp_directory_path() / "lefschetz-cache-test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "n2.jsonl";
    std::filesystem::remove(path);
    ClassifyOptions options;
    options.cache = path;
    const auto first = enumerate_cubic_togliatti(2, options);
    CHECK(std::filesystem::exists(path));
    options.resume = true;
    const auto second = enumerate_cubic_togliatti(2, options);
    CHECK(second.reused == first.records.size());
    CHECK(to_json(second) == to_json(first));

    std::ofstream(path) << "{\"schema\": 99}\n";
    CHECK_THROWS(enumerate_cubic_togliatti(2, options));
    std::filesystem::remove_all(dir);
}

TEST_CASE("threads do not change the result")
{
    ClassifyOptions options;
    options.threads = 3;
    options.max_extra = 4;
    const auto threaded = enumerate_cubic_togliatti(3, options);
    options.threads = 1;
    const auto serial = enumerate_cubic_togliatti(3, options);
    CHECK(to_json(threaded) == to_json(serial));
}
