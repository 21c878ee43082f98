#include <lefschetz/form.hpp>

#include <lefschetz/errors.hpp>

#include <utility>

namespace lefschetz {

Form::Form(std::size_t nvars, int degree) : nvars_(nvars), degree_(degree)
{
    if (degree < 0) throw PreconditionError("negative form degree");
}

Form Form::monomial(const ExponentVector& e, const Rational& c)
{
    Form f(e.size(), e.degree());
    f.add_term(e, c);
    return f;
}

Form Form::linear(std::span<const Rational> coefficients)
{
    Form f(coefficients.size(), 1);
    for (std::size_t i = 0; i < coefficients.size(); ++i)
        f.add_term(ExponentVector::unit(coefficients.size(), i), coefficients[i]);
    return f;
}

Form Form::linear(std::span<const long> coefficients)
{
    std::vector<Rational> c(coefficients.begin(), coefficients.end());
    return linear(std::span<const Rational>(c));
}

bool Form::is_monic_monomial() const
{
    return terms_.size() == 1 && terms_.begin()->second == 1;
}

Rational Form::coefficient(const ExponentVector& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool Form::involves(std::size_t variable) const
{
    for (const auto& [e, c] : terms_)
        if (e[variable] > 0) return true;
    return false;
}

void Form::add_term(const ExponentVector& e, const Rational& c)
{
    if (e.size() != nvars_ || e.degree() != degree_)
        throw PreconditionError("term does not match the form's degree or variable count");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Form& Form::operator+=(const Form& other)
{
    if (other.is_zero()) return *this;
    if (is_zero() && terms_.empty() && nvars_ == 0) return *this = other;
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

Form& Form::operator-=(const Form& other)
{
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

Form& Form::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Form operator*(const Form& a, const Form& b)
{
    if (a.nvars_ != b.nvars_) throw PreconditionError("product of forms in different rings");
    Form out(a.nvars_, a.degree_ + b.degree_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

Form Form::operator-() const
{
    Form out(*this);
    for (auto& [e, v] : out.terms_) v = -v;
    return out;
}

Form Form::shifted(const ExponentVector& m) const
{
    Form out(nvars_, degree_ + m.degree());
    for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + m, c);
    return out;
}

Form Form::pow(int k) const
{
    if (k < 0) throw PreconditionError("negative power");
    Form out = Form::monomial(ExponentVector::zero(nvars_));
    for (int i = 0; i < k; ++i) out = out * *this;
    return out;
}

Rational Form::evaluate(std::span<const Rational> point) const
{
    if (point.size() != nvars_) throw PreconditionError("evaluation point has wrong length");
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational v = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) v *= point[i];
        total += v;
    }
    return total;
}

Form Form::permuted(std::span<const std::size_t> perm) const
{
    Form out(nvars_, degree_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e.permuted(perm), c);
    return out;
}

Form substitute_linear(const Form& f, std::span<const Form> images)
{
    if (images.size() != f.nvars()) throw PreconditionError("one image per variable is required");
    if (images.empty()) return f;
    const std::size_t target_vars = images.front().nvars();
    for (const Form& g : images)
        if (g.nvars() != target_vars || g.degree() != 1)
            throw PreconditionError("substitution images must be linear forms in one ring");

    // powers[k][p] = images[k]^p, built lazily up to the largest exponent used.
    std::vector<std::vector<Form>> powers(images.size());
    auto power = [&](std::size_t k, int p) -> const Form& {
        auto& cache = powers[k];
        if (cache.empty()) cache.push_back(Form::monomial(ExponentVector::zero(target_vars)));
        while (static_cast<int>(cache.size()) <= p) cache.push_back(cache.back() * images[k]);
        return cache[static_cast<std::size_t>(p)];
    };

    Form out(target_vars, f.degree());
    for (const auto& [e, c] : f.terms()) {
        Form term = Form::monomial(ExponentVector::zero(target_vars), c);
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k] > 0) term = term * power(k, e[k]);
        out += term;
    }
    return out;
}

Form substitute_variable(const Form& f, std::size_t i, const Form& g)
{
    const std::size_t n = f.nvars();
    if (i >= n) throw PreconditionError("substitution index out of range");
    if (g.degree() != 1) throw PreconditionError("substituted form must be linear");

    Form image;
    if (g.nvars() == n) {
        if (g.involves(i)) throw PreconditionError("substituted form involves the eliminated variable");
        image = Form(n - 1, 1);
        for (const auto& [e, c] : g.terms()) image.add_term(e.without(i), c);
    } else if (g.nvars() == n - 1) {
        image = g;
    } else {
        throw PreconditionError("substituted form lives in the wrong ring");
    }

    std::vector<Form> images;
    images.reserve(n);
    for (std::size_t k = 0, j = 0; k < n; ++k) {
        if (k == i) {
            images.push_back(image);
        } else {
            images.push_back(Form::monomial(ExponentVector::unit(n - 1, j)));
            ++j;
        }
    }
    return substitute_linear(f, images);
}

std::string to_string(const Form& f, std::span<const std::string> variables)
{
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        const bool negative = sgn(c) < 0;
        Rational magnitude = abs(c);
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const bool constant = e.degree() == 0;
        if (magnitude != 1 || constant) {
            out += magnitude.get_str();
            if (!constant) out += '*';
        }
        if (!constant) out += to_string(e, variables);
    }
    return out;
}

std::string to_string(const Form& f)
{
    const auto vars = default_variables(f.nvars());
    return to_string(f, vars);
}

Form primitive_part(const Form& f)
{
    if (f.is_zero()) return f;
    Integer den_lcm = 1;
    for (const auto& [e, c] : f.terms()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    Integer num_gcd = 0;
    for (const auto& [e, c] : f.terms()) {
        Integer scaled = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (sgn(f.terms().rbegin()->second) < 0) scale = -scale;
    return f * scale;
}

}  // namespace lefschetz
