#ifndef LEFSCHETZ_OSCULATING_HPP
#define LEFSCHETZ_OSCULATING_HPP

#include <lefschetz/apolarity.hpp>
#include <lefschetz/form.hpp>
#include <lefschetz/sampling.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace lefschetz {

/// Linear system of degree-d forms on P^n defining a rational map to P^N.
class LinearSystem {
public:
    /// Members must be linearly independent forms of degree d in n+1 variables.
    LinearSystem(int n, int d, std::vector<Form> members);

    static LinearSystem from_monomials(int n, int d, const std::vector<ExponentVector>& monomials);
    static LinearSystem from_apolar(const ApolarSystem& system);

    int n() const noexcept { return n_; }
    int degree() const noexcept { return d_; }
    const std::vector<Form>& members() const noexcept { return members_; }
    /// Projective dimension N of the target space.
    std::int64_t projective_dimension() const noexcept { return static_cast<std::int64_t>(members_.size()) - 1; }

private:
    int n_;
    int d_;
    std::vector<Form> members_;
};

/// Projective dimensions of the s-th osculating space at a generic point.
struct OsculatingReport {
    int order = 0;
    std::int64_t expected_dim = 0;
    std::int64_t actual_dim = 0;
    std::int64_t delta = 0;
};

/// Rank of the jet matrix of all partials of order <= s of the affine chart
/// x0 = 1 parametrization, evaluated at one point of the chart (t_1..t_n).
std::size_t affine_jet_rank(const LinearSystem& system, int s, std::span<const Rational> chart_point);

/// Rank of the matrix of all order-s partials of the homogeneous members at a
/// point of P^n. By Euler's formula this spans the same projective space.
std::size_t homogeneous_jet_rank(const LinearSystem& system, int s, std::span<const Rational> point);

/// Generic osculating dimension: max jet rank over `trials` torus points.
OsculatingReport osculating_dimension(const LinearSystem& system, int s, const SamplingOptions& sampling = {});

struct LaplaceCount {
    std::int64_t equations = 0;
    /// N < C(n+s, s) - 1: the equations are forced by the ambient dimension.
    bool forced_by_ambient = false;
};

LaplaceCount laplace_count(const LinearSystem& system, int s, const SamplingOptions& sampling = {});

/// All homogeneous quadrics in the n+1 lattice coordinates vanishing on the
/// points (a basis of that space, each scaled to a primitive integer form).
std::vector<Form> lattice_quadrics(std::span<const ExponentVector> points);

/// One such quadric, or none when the evaluation matrix has full column rank.
std::optional<Form> perkinson_quadric(std::span<const ExponentVector> points);

}  // namespace lefschetz

#endif  // LEFSCHETZ_OSCULATING_HPP
