#ifndef LEFSCHETZ_MONOMIAL_HPP
#define LEFSCHETZ_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace lefschetz {

/// Exponent vector of a monomial x_0^{e_0} ... x_n^{e_n}.
///
/// The length is the number of variables (n + 1 for P^n). Entries are never
/// negative. Ordering is lexicographic on the entries, which fixes the order of
/// every monomial basis produced by the library.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::vector<int> exponents);
    ExponentVector(std::initializer_list<int> exponents);

    static ExponentVector zero(std::size_t nvars);
    static ExponentVector unit(std::size_t nvars, std::size_t i, int power = 1);

    std::size_t size() const noexcept { return e_.size(); }
    int operator[](std::size_t i) const { return e_[i]; }
    int degree() const noexcept { return degree_; }
    std::span<const int> entries() const noexcept { return e_; }

    /// True iff this monomial divides `other`.
    bool divides(const ExponentVector& other) const;
    /// Support as a sorted list of variable indices with positive exponent.
    std::vector<std::size_t> support() const;

    ExponentVector operator+(const ExponentVector& other) const;
    /// Componentwise difference; requires `other` to divide `*this`.
    ExponentVector operator-(const ExponentVector& other) const;

    /// Variables permuted: result[perm[i]] = (*this)[i].
    ExponentVector permuted(std::span<const std::size_t> perm) const;
    /// Drop variable i (used by substitution and dehomogenization).
    ExponentVector without(std::size_t i) const;

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
    friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b)
    {
        return a.e_ <=> b.e_;
    }

private:
    std::vector<int> e_;
    int degree_ = 0;
};

std::int64_t binomial(std::int64_t n, std::int64_t k);

/// Number of monomials of degree d in n + 1 variables, C(n + d, d).
std::int64_t monomial_count(int n, int d);

/// All monomials of degree d in the variables x_0..x_n, sorted ascending.
std::vector<ExponentVector> monomial_basis(int n, int d);

/// Default variable names x0, x1, ...
std::vector<std::string> default_variables(std::size_t nvars);

/// Human form such as "x0^2*x1"; "1" for the constant monomial.
std::string to_string(const ExponentVector& e, std::span<const std::string> variables);

}  // namespace lefschetz

#endif  // LEFSCHETZ_MONOMIAL_HPP
