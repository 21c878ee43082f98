#ifndef LEFSCHETZ_LINALG_HPP
#define LEFSCHETZ_LINALG_HPP

#include <lefschetz/form.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace lefschetz {

/// Dense row-major matrix with exact entries.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

/// Scale each row by the lcm of its denominators; rank is unchanged.
IntegerMatrix clear_denominators(const RationalMatrix& m);

/// Rank by fraction-free (Bareiss) elimination. Every intermediate entry is a
/// minor of the input, so divisions are exact and no fractions appear.
std::size_t rank_fraction_free(IntegerMatrix m);

/// Rank modulo a prime p < 2^63. Always a lower bound for the rational rank.
std::size_t rank_mod_p(const IntegerMatrix& m, std::uint64_t p);

/// The i-th prime of the fixed descending sequence below 2^62.
std::uint64_t modular_prime(std::size_t i);

/// Exact rational rank, certified with modular images.
///
/// Each modular rank is a lower bound. An upper bound k is certified once the
/// product of primes whose images all have rank <= k exceeds the Hadamard bound
/// on the (k+1)-minors: any nonzero minor would then be divisible by a number
/// larger than itself. `known_upper_bound` lets callers short-circuit as soon as
/// a modular image reaches a rank they know cannot be exceeded.
std::size_t rank_exact(const IntegerMatrix& m, std::optional<std::size_t> known_upper_bound = {});

/// Basis of the right kernel {v : m v = 0}, from the reduced row echelon form.
/// Vectors are normalized so that their free coordinate equals 1.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

/// Exact matrix between monomial bases of two graded pieces.
class GradedMap {
public:
    GradedMap(std::vector<ExponentVector> target, std::vector<ExponentVector> source,
              RationalMatrix entries);

    const std::vector<ExponentVector>& target_basis() const noexcept { return target_; }
    const std::vector<ExponentVector>& source_basis() const noexcept { return source_; }
    const RationalMatrix& entries() const noexcept { return entries_; }

    std::size_t rank() const;
    /// Kernel vectors written as forms on the source basis.
    std::vector<Form> kernel() const;

private:
    std::vector<ExponentVector> target_;
    std::vector<ExponentVector> source_;
    RationalMatrix entries_;
};

/// Multiplication by a linear form, R_j -> R_{j+1}.
GradedMap multiplication_map(const Form& linear, int j);

/// Coefficient matrix of a list of forms of one degree: row i holds forms[i]
/// on the ascending monomial basis of that degree.
RationalMatrix coefficient_matrix(std::span<const Form> forms);

/// Dimension of the span of forms of a common degree and variable count.
///
/// Forms that are single monomials act as unit pivots: their columns are
/// eliminated directly before the remaining rows go to `rank_exact`.
std::size_t rank_of_span(std::span<const Form> forms,
                         std::optional<std::size_t> known_upper_bound = {});

}  // namespace lefschetz

#endif  // LEFSCHETZ_LINALG_HPP
