#ifndef LEFSCHETZ_APOLARITY_HPP
#define LEFSCHETZ_APOLARITY_HPP

#include <lefschetz/form.hpp>
#include <lefschetz/wlp.hpp>

#include <cstdint>
#include <vector>

namespace lefschetz {

// Dual variables y_i share the monomial representation of x_i; which side a
// form lives on is a matter of role, not type.

/// Differentiation action u . F = u(d/dy_0, ..., d/dy_n) F, with factorials.
Form contract(const Form& u, const Form& f);

/// Basis of the inverse system (I^{-1})_d.
struct ApolarSystem {
    int n = 0;
    int d = 0;
    std::vector<Form> basis;
    /// True when the basis consists of monic monomials (monomial ideals).
    bool monomial = false;
};

/// Monomial ideals: the complementary monomials of degree d. Otherwise: the
/// kernel of the pairing F_i . y^alpha = c_{i,alpha} alpha!.
ApolarSystem apolar_complement(const IdealSpec& ideal);

/// Rank of contraction by L from (I^{-1})_d to R_{d-1}.
std::int64_t dual_map_rank(const ApolarSystem& system, const Form& linear);
std::int64_t dual_map_rank(const IdealSpec& ideal, const Form& linear);

}  // namespace lefschetz

#endif  // LEFSCHETZ_APOLARITY_HPP
