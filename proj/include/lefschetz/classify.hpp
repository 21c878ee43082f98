#ifndef LEFSCHETZ_CLASSIFY_HPP
#define LEFSCHETZ_CLASSIFY_HPP

#include <lefschetz/form.hpp>
#include <lefschetz/monomial.hpp>
#include <lefschetz/sampling.hpp>
#include <lefschetz/wlp.hpp>

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lefschetz {

using MonomialSet = std::vector<ExponentVector>;

struct CanonicalForm {
    /// Sorted ascending; lexicographically minimal over all coordinate permutations.
    MonomialSet monomials;
    /// Number of distinct images under the symmetric group.
    std::size_t orbit_size = 0;
};

/// Sorted image minimal among all (n+1)! permutations of the coordinates.
CanonicalForm canonicalize(std::span<const ExponentVector> monomials);
MonomialSet canonical_form(std::span<const ExponentVector> monomials);

enum class ToricVerdict { smooth, quasi_smooth, singular, degenerate };
std::string to_string(ToricVerdict verdict);

struct ClassificationRecord {
    int n = 0;
    int d = 3;
    /// Canonical generators of I (pure cubes included).
    MonomialSet generators;
    /// Generators other than the pure powers.
    MonomialSet extra;
    /// Degree-d monomials outside I: the apolar system I^{-1}.
    MonomialSet apolar;
    bool togliatti = false;
    std::vector<int> wlp_failure_degrees;
    std::int64_t laplace_equations = 0;
    std::optional<ExponentVector> trivial_a;
    bool trivial_b = false;
    ToricVerdict verdict = ToricVerdict::degenerate;
    bool edge_rule_fired = false;
    std::int64_t toric_degree = 0;
    std::optional<Form> quadric;
    std::size_t orbit_size = 1;
    /// Name of the matching reference system (e.g. "case-2", "case-4'"), if any.
    std::string label;

    std::size_t r() const noexcept { return generators.size(); }
    bool trivial() const noexcept { return trivial_a.has_value() || trivial_b; }
    bool smooth() const noexcept { return verdict == ToricVerdict::smooth; }
    bool quasi_smooth() const noexcept
    {
        return verdict == ToricVerdict::smooth || verdict == ToricVerdict::quasi_smooth;
    }
};

/// Computes every certificate for a monomial ideal generated in degree 3.
/// Records with togliatti = true always carry a lattice quadric.
ClassificationRecord certify(const IdealSpec& ideal, const SamplingOptions& sampling = {});

inline constexpr int kCacheSchemaVersion = 1;

struct ClassifyOptions {
    SamplingOptions sampling;
    int threads = 1;
    /// Largest number of extra generators tried; defaults to C(n+2, n-1) - (n+1).
    std::optional<int> max_extra;
    /// JSON-lines cache of certified records.
    std::optional<std::filesystem::path> cache;
    /// Reuse records already in the cache instead of certifying them again.
    bool resume = false;
};

struct ClassificationResult {
    int n = 0;
    std::size_t candidates = 0;
    /// Togliatti candidates before identifying permutation-equivalent ones.
    std::size_t raw_hits = 0;
    /// Records loaded from the cache rather than recomputed.
    std::size_t reused = 0;
    /// Canonical records sorted by (number of extra generators, generators).
    std::vector<ClassificationRecord> records;
};

/// All canonical monomial Togliatti systems of cubics in n+1 variables.
ClassificationResult enumerate_cubic_togliatti(int n, const ClassifyOptions& options = {});

/// Cubic monomial ideal of a partition of {0..n}: every cubic supported in a
/// single part, plus x_i x_j x_k for i, j, k in three distinct parts. Parts
/// hold at most n-1 indices.
IdealSpec partition_example(int n, const std::vector<std::vector<int>>& parts);

/// Parse "0,1|2|3" into parts.
std::vector<std::vector<int>> parse_partition(const std::string& text);

/// Names: togliatti, control, truncated-simplex, second-example,
/// ilardi-counterexample, case-1, case-2, case-3, case-4, thirteen, partition.
/// `partition` is consulted only for the name "partition".
IdealSpec build_named_example(const std::string& name, int n,
                              const std::vector<std::vector<int>>& partition = {});
std::vector<std::string> named_examples();

/// Lattice quadric stated for the ilardi-counterexample system in n+1 coordinates:
/// 2 sum x_i^2 - 5 sum_{i<j} x_i x_j + 9 sum_{i<j<=n-2} x_i x_j.
Form ilardi_quadric(int n);

struct ProjectionMember {
    std::string source;
    MonomialSet removed;
    IdealSpec ideal;
};

/// Cases (2), (3), (4) of the n = 3 list with a non-empty subset of their
/// removable monomials moved from the apolar system into the ideal.
std::vector<ProjectionMember> projection_family();

nlohmann::json to_json(const ClassificationRecord& record);
ClassificationRecord record_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ClassificationResult& result);

}  // namespace lefschetz

#endif  // LEFSCHETZ_CLASSIFY_HPP
