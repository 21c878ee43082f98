#include <lefschetz/monomial.hpp>

#include <lefschetz/errors.hpp>

#include <algorithm>
#include <numeric>

namespace lefschetz {

ExponentVector::ExponentVector(std::vector<int> exponents) : e_(std::move(exponents))
{
    for (int v : e_) {
        if (v < 0) throw PreconditionError("negative exponent");
        degree_ += v;
    }
}

ExponentVector::ExponentVector(std::initializer_list<int> exponents)
    : ExponentVector(std::vector<int>(exponents))
{
}

ExponentVector ExponentVector::zero(std::size_t nvars)
{
    return ExponentVector(std::vector<int>(nvars, 0));
}

ExponentVector ExponentVector::unit(std::size_t nvars, std::size_t i, int power)
{
    std::vector<int> e(nvars, 0);
    e.at(i) = power;
    return ExponentVector(std::move(e));
}

bool ExponentVector::divides(const ExponentVector& other) const
{
    if (other.size() != size()) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > other.e_[i]) return false;
    return true;
}

std::vector<std::size_t> ExponentVector::support() const
{
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > 0) s.push_back(i);
    return s;
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const
{
    if (other.size() != size()) throw PreconditionError("exponent vectors of different length");
    std::vector<int> r(e_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += other.e_[i];
    return ExponentVector(std::move(r));
}

ExponentVector ExponentVector::operator-(const ExponentVector& other) const
{
    if (!other.divides(*this)) throw PreconditionError("monomial quotient is not a monomial");
    std::vector<int> r(e_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= other.e_[i];
    return ExponentVector(std::move(r));
}

ExponentVector ExponentVector::permuted(std::span<const std::size_t> perm) const
{
    std::vector<int> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r[perm[i]] = e_[i];
    return ExponentVector(std::move(r));
}

ExponentVector ExponentVector::without(std::size_t i) const
{
    std::vector<int> r;
    r.reserve(e_.size() - 1);
    for (std::size_t k = 0; k < e_.size(); ++k)
        if (k != i) r.push_back(e_[k]);
    return ExponentVector(std::move(r));
}

std::int64_t binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::int64_t monomial_count(int n, int d)
{
    if (d < 0) return 0;
    return binomial(n + d, d);
}

namespace {

void fill_basis(std::vector<int>& current, std::size_t index, int remaining,
                std::vector<ExponentVector>& out)
{
    if (index + 1 == current.size()) {
        current[index] = remaining;
        out.emplace_back(current);
        return;
    }
    for (int v = 0; v <= remaining; ++v) {
        current[index] = v;
        fill_basis(current, index + 1, remaining - v, out);
    }
}

}  // namespace

std::vector<ExponentVector> monomial_basis(int n, int d)
{
    if (n < 0 || d < 0) throw PreconditionError("monomial_basis needs n >= 0 and d >= 0");
    std::vector<ExponentVector> out;
    out.reserve(static_cast<std::size_t>(monomial_count(n, d)));
    std::vector<int> current(static_cast<std::size_t>(n) + 1, 0);
    fill_basis(current, 0, d, out);
    // The recursion already produces ascending lexicographic order.
    return out;
}

std::vector<std::string> default_variables(std::size_t nvars)
{
    std::vector<std::string> names;
    names.reserve(nvars);
    for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

std::string to_string(const ExponentVector& e, std::span<const std::string> variables)
{
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += variables[i];
        if (e[i] > 1) out += '^' + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

}  // namespace lefschetz
