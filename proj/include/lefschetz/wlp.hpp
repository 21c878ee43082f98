#ifndef LEFSCHETZ_WLP_HPP
#define LEFSCHETZ_WLP_HPP

#include <lefschetz/form.hpp>
#include <lefschetz/sampling.hpp>

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace lefschetz {

/// Ideal of R = k[x_0..x_n] generated by linearly independent forms of one degree d.
class IdealSpec {
public:
    /// Validates degrees, variable count and linear independence.
    IdealSpec(int n, int d, std::vector<Form> generators);

    static IdealSpec from_monomials(int n, int d, const std::vector<ExponentVector>& monomials);

    int n() const noexcept { return n_; }
    int degree() const noexcept { return d_; }
    std::size_t nvars() const noexcept { return static_cast<std::size_t>(n_) + 1; }
    std::size_t r() const noexcept { return generators_.size(); }
    const std::vector<Form>& generators() const noexcept { return generators_; }
    bool is_monomial() const noexcept { return monomial_; }

    /// Generator exponents, ascending. Empty unless is_monomial().
    const std::vector<ExponentVector>& monomials() const noexcept { return monomials_; }
    /// Membership of a degree-d monomial among the generators (monomial ideals only).
    bool has_generator(const ExponentVector& e) const { return monomial_set_.count(e) > 0; }

private:
    int n_;
    int d_;
    std::vector<Form> generators_;
    bool monomial_ = false;
    std::vector<ExponentVector> monomials_;
    std::set<ExponentVector> monomial_set_;
};

/// Rank data of x L : (R/I)_j -> (R/I)_{j+1}.
struct WlpReport {
    int degree = 0;
    std::int64_t dim_source = 0;
    std::int64_t dim_target = 0;
    std::int64_t rank = 0;
    bool injective = false;
    bool surjective = false;
    bool maximal_rank = false;
    Form lefschetz_form;
};

struct WlpVerdict {
    bool has_wlp = false;
    std::vector<int> failure_degrees;
    std::vector<std::int64_t> h_vector;
    std::vector<WlpReport> reports;
};

struct WlpOptions {
    SamplingOptions sampling;
    /// Use random linear forms even for monomial ideals.
    bool generic_l = false;
};

/// Spanning set of I_t: all m * F_i with deg m = t - d (monomials for monomial I).
std::vector<Form> ideal_spanning_set(const IdealSpec& ideal, int t);

std::int64_t ideal_piece_dimension(const IdealSpec& ideal, int t);
std::int64_t hilbert_function(const IdealSpec& ideal, int t);

/// Degree bound T = (n+1)(d-1)+1: I is artinian iff h(T) = 0.
int artinian_bound(const IdealSpec& ideal);
bool is_artinian(const IdealSpec& ideal);

/// h-vector (h_0, ..., h_e); throws NotArtinianError for non-artinian ideals.
std::vector<std::int64_t> h_vector(const IdealSpec& ideal);

/// x0 + x1 + ... + xn.
Form sum_of_variables(std::size_t nvars);

/// Rank of multiplication by `linear` from degree j to j+1 of R/I, obtained as
/// dim(L R_j + I_{j+1}) - dim I_{j+1}.
WlpReport multiplication_rank(const IdealSpec& ideal, const Form& linear, int j);

/// Generic-L report in degree j: x0+...+xn for monomial ideals, otherwise the
/// best of `trials` random linear forms.
WlpReport generic_multiplication_rank(const IdealSpec& ideal, int j, const WlpOptions& options = {});

/// Full WLP scan over degrees 0..e-1; throws NotArtinianError.
WlpVerdict has_wlp(const IdealSpec& ideal, const WlpOptions& options = {});

/// Largest admissible generator count for the hyperplane lemma, C(n+d-1, d).
std::int64_t hyperplane_lemma_bound(int n, int d);

/// Generators restricted to x_n = -(x_0+...+x_{n-1}) (monomial case) or to a
/// random hyperplane, as forms in n variables.
std::vector<Form> restrict_to_hyperplane(const IdealSpec& ideal, const Form& hyperplane);

/// True iff the generators become dependent on a generic hyperplane, i.e. x L
/// fails to have maximal rank from degree d-1 to d. Requires r <= C(n+d-1, d).
bool fails_in_degree_dminus1(const IdealSpec& ideal, const WlpOptions& options = {});

/// Artinian, r <= C(n+d-1, n-1), and dependent on a generic hyperplane.
bool is_togliatti(const IdealSpec& ideal, const WlpOptions& options = {});

/// A degree-(d-1) monomial Q with Q x_i in I for every i, if one exists.
std::optional<ExponentVector> trivial_type_a(const IdealSpec& ideal);

struct TypeBPoint {
    std::size_t index = 0;
    std::int64_t divisible_generators = 0;
    bool sufficient = false;
    bool full = false;
};

struct TypeBResult {
    bool sufficient = false;
    bool full = false;
    std::optional<std::size_t> witness;
    std::vector<TypeBPoint> points;
};

/// Type-B triviality at the coordinate points of a monomial cubic ideal.
TypeBResult trivial_type_b_test(const IdealSpec& ideal, const SamplingOptions& sampling = {});

}  // namespace lefschetz

#endif  // LEFSCHETZ_WLP_HPP
