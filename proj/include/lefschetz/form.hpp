#ifndef LEFSCHETZ_FORM_HPP
#define LEFSCHETZ_FORM_HPP

#include <lefschetz/monomial.hpp>

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace lefschetz {

using Integer = mpz_class;
using Rational = mpq_class;

/// Sparse homogeneous polynomial with exact rational coefficients.
///
/// Every stored exponent has the form's degree and the form's variable count;
/// zero coefficients are never stored, so two forms are equal iff their term
/// maps are equal.
class Form {
public:
    using Terms = std::map<ExponentVector, Rational>;

    Form() = default;
    Form(std::size_t nvars, int degree);

    static Form monomial(const ExponentVector& e, const Rational& c = 1);
    /// Degree-1 form sum_i c_i x_i.
    static Form linear(std::span<const Rational> coefficients);
    static Form linear(std::span<const long> coefficients);

    std::size_t nvars() const noexcept { return nvars_; }
    int degree() const noexcept { return degree_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// True iff the form is a single monomial with coefficient 1.
    bool is_monic_monomial() const;
    Rational coefficient(const ExponentVector& e) const;
    bool involves(std::size_t variable) const;

    void add_term(const ExponentVector& e, const Rational& c);

    Form& operator+=(const Form& other);
    Form& operator-=(const Form& other);
    Form& operator*=(const Rational& c);

    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(Form a, const Rational& c) { return a *= c; }
    friend Form operator*(const Rational& c, Form a) { return a *= c; }
    friend Form operator*(const Form& a, const Form& b);
    Form operator-() const;

    /// Multiply by a monic monomial.
    Form shifted(const ExponentVector& m) const;

    Form pow(int k) const;

    Rational evaluate(std::span<const Rational> point) const;

    /// Variables permuted as in ExponentVector::permuted.
    Form permuted(std::span<const std::size_t> perm) const;

    friend bool operator==(const Form& a, const Form& b)
    {
        return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

private:
    std::size_t nvars_ = 0;
    int degree_ = 0;
    Terms terms_;
};

/// Substitute x_i := g, where g is linear in the other variables, and drop x_i.
/// The result has one variable fewer and the same degree.
Form substitute_variable(const Form& f, std::size_t i, const Form& g);

/// Linear change of variables x_k := images[k]. All images are degree-1 forms
/// in a common target ring; the result lives in that ring.
Form substitute_linear(const Form& f, std::span<const Form> images);

/// Canonical printer: terms in descending monomial order, e.g.
/// "x0^3 - 3*x0*x1*x2" or "1/2*x0^2*x1 + x2^3".
std::string to_string(const Form& f, std::span<const std::string> variables);
std::string to_string(const Form& f);

/// Scale to coprime integer coefficients whose leading term (printer order)
/// is positive. Zero stays zero.
Form primitive_part(const Form& f);

}  // namespace lefschetz

#endif  // LEFSCHETZ_FORM_HPP
