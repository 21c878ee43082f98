#ifndef LEFSCHETZ_BUNDLES_HPP
#define LEFSCHETZ_BUNDLES_HPP

#include <lefschetz/form.hpp>
#include <lefschetz/sampling.hpp>
#include <lefschetz/wlp.hpp>

#include <json.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lefschetz {

/// Substitute x_i = p_i s + q_i t. Results are binary forms (variables s, t).
/// Throws PreconditionError when p and q are proportional.
std::vector<Form> restrict_to_line(std::span<const Form> forms, std::span<const Rational> p, std::span<const Rational> q);

/// k(t) for t = 0..d: kernel dimension of (g_1..g_r) -> sum g_i F_i from
/// binary forms of degree t to degree t + d.
std::vector<std::int64_t> kernel_dimensions(std::span<const Form> binary_forms, int d);

/// Splitting type a_1 <= ... <= a_{r-1} of the kernel bundle on a line.
struct SplittingType {
    std::vector<int> values;
    /// Kernel dimensions k(0..d) the values were read off from.
    std::vector<std::int64_t> kernel_dims;

    int sum() const;
    /// a_{r-1}, or 0 for an empty type.
    int last() const;
};

/// Recover the multiset {a_i} from k(t) = sum_i max(0, a_i + t + 1); r-1 values
/// expected. Throws ConsistencyError when the data is not of that shape.
SplittingType splitting_type_from_kernel(std::span<const std::int64_t> kernel_dims, std::size_t r, int d);

/// Generic splitting type: pointwise minimum of k(t) over `trials` random lines.
/// Throws NotArtinianError. Asserts sum a_i = -d and a_i <= 0.
SplittingType splitting_type(const IdealSpec& ideal, const SamplingOptions& sampling = {});

/// a_{r-1} < 0.
bool wlp_via_splitting(const IdealSpec& ideal, const SamplingOptions& sampling = {});

/// (l_1^d, ..., l_d^d, l_1 ... l_d) in three variables with random linear l_i.
IdealSpec valles_ideal(int d, std::mt19937_64& rng);

struct VallesCheck {
    int d = 0;
    std::uint64_t seed = 0;
    bool fails_in_degree_dminus1 = false;
    bool has_wlp = false;
    std::vector<int> failure_degrees;
};

/// Builds the ideal from stream (seed, "valles.ideal", d, sample) and runs the
/// degree-(d-1) test and the full WLP scan.
VallesCheck valles_check(int d, std::uint64_t seed, int sample = 0, int trials = 3);

struct R4Sample {
    std::string kind;
    std::vector<std::string> generators;
    bool fails_in_degree_dminus1 = false;
    bool wlp_checked = false;
    bool has_wlp = false;
    std::vector<int> failure_degrees;
};

struct R4DegreeResult {
    int d = 0;
    std::size_t monomial_population = 0;
    std::vector<R4Sample> samples;
    std::vector<std::string> violations;
};

struct R4Report {
    int dmin = 0;
    int dmax = 0;
    std::uint64_t seed = 0;
    std::vector<R4DegreeResult> degrees;
    bool passed() const;
};

struct R4Options {
    SamplingOptions sampling;
    /// Monomial ideals (x^d, y^d, z^d, m) per degree; all of them when fewer exist.
    int monomial_samples = 50;
    /// Dense random 4-generated ideals per degree.
    int random_samples = 5;
    int threads = 1;
};

/// Checks, for every d in [dmin, dmax]: no sample fails in degree d-1; for
/// d not divisible by 3 every sample has the WLP; for d = 3 lambda every
/// failure sits in degree 4 lambda - 2 and (x^d, y^d, z^d, (xyz)^lambda) fails
/// there when d is odd; for d divisible by 6 monomial samples have the WLP.
R4Report verify_r4_theorem(int dmin, int dmax, const R4Options& options = {});

nlohmann::json to_json(const SplittingType& type);
nlohmann::json to_json(const R4Report& report);

}  // namespace lefschetz

#endif  // LEFSCHETZ_BUNDLES_HPP
