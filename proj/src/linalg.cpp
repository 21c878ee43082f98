#include <lefschetz/linalg.hpp>

#include <lefschetz/errors.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace lefschetz {

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 pow_mod(u64 base, u64 exp, u64 p)
{
    u64 result = 1;
    base %= p;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return result;
}

bool is_prime_u64(u64 n)
{
    if (n < 2) return false;
    for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These bases are deterministic for every n < 3.3e24.
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Every prime in the sequence exceeds 2^61, so each contributes 61 bits.
constexpr int kBitsPerPrime = 61;

std::vector<unsigned> hadamard_bits_sorted(const IntegerMatrix& m, bool by_rows)
{
    const std::size_t outer = by_rows ? m.rows() : m.cols();
    const std::size_t inner = by_rows ? m.cols() : m.rows();
    std::vector<unsigned> bits;
    bits.reserve(outer);
    Integer sumsq;
    for (std::size_t a = 0; a < outer; ++a) {
        sumsq = 0;
        for (std::size_t b = 0; b < inner; ++b) {
            const Integer& v = by_rows ? m(a, b) : m(b, a);
            if (sgn(v) != 0) sumsq += v * v;
        }
        if (sgn(sumsq) == 0) continue;
        const auto sq_bits = static_cast<unsigned>(mpz_sizeinbase(sumsq.get_mpz_t(), 2));
        bits.push_back((sq_bits + 1) / 2);
    }
    std::sort(bits.begin(), bits.end(), std::greater<>());
    return bits;
}

}  // namespace

std::uint64_t modular_prime(std::size_t i)
{
    static std::mutex mutex;
    static std::vector<u64> primes;
    std::lock_guard lock(mutex);
    u64 candidate = primes.empty() ? (1ULL << 62) - 1 : primes.back() - 2;
    while (primes.size() <= i) {
        while (!is_prime_u64(candidate)) candidate -= 2;
        primes.push_back(candidate);
        candidate -= 2;
    }
    return primes[i];
}

IntegerMatrix clear_denominators(const RationalMatrix& m)
{
    IntegerMatrix out(m.rows(), m.cols());
    Integer lcm;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        lcm = 1;
        for (const Rational& v : m.row(i))
            if (v.get_den() != 1) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& v = m(i, j);
            out(i, j) = v.get_num() * (lcm / v.get_den());
        }
    }
    return out;
}

std::size_t rank_fraction_free(IntegerMatrix m)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    Integer previous = 1;
    Integer scratch;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && sgn(m(pivot, c)) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t j = c; j < cols; ++j) std::swap(m(pivot, j), m(rank, j));
        const Integer& p = m(rank, c);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const Integer factor = m(i, c);
            for (std::size_t j = c + 1; j < cols; ++j) {
                scratch = p * m(i, j) - factor * m(rank, j);
                mpz_divexact(m(i, j).get_mpz_t(), scratch.get_mpz_t(), previous.get_mpz_t());
            }
            m(i, c) = 0;
        }
        previous = p;
        ++rank;
    }
    return rank;
}

std::size_t rank_mod_p(const IntegerMatrix& m, std::uint64_t p)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<u64> a(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            a[i * cols + j] = mpz_fdiv_ui(m(i, j).get_mpz_t(), p);

    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(pivot * cols + c),
                             a.begin() + static_cast<std::ptrdiff_t>(pivot * cols + cols),
                             a.begin() + static_cast<std::ptrdiff_t>(rank * cols + c));
        const u64 inverse = pow_mod(a[rank * cols + c], p - 2, p);
        const u64* prow = &a[rank * cols];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            u64* row = &a[i * cols];
            if (row[c] == 0) continue;
            const u64 factor = mul_mod(row[c], inverse, p);
            for (std::size_t j = c + 1; j < cols; ++j) {
                if (prow[j] == 0) continue;
                const u64 sub = mul_mod(factor, prow[j], p);
                row[j] = row[j] >= sub ? row[j] - sub : row[j] + p - sub;
            }
            row[c] = 0;
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_exact(const IntegerMatrix& m, std::optional<std::size_t> known_upper_bound)
{
    std::size_t cap = std::min(m.rows(), m.cols());
    if (cap == 0) return 0;
    if (known_upper_bound) cap = std::min(cap, *known_upper_bound);

    std::vector<unsigned> row_bits;
    std::vector<unsigned> col_bits;
    std::size_t best = 0;
    std::size_t accumulated = 0;
    for (std::size_t i = 0;; ++i) {
        best = std::max(best, rank_mod_p(m, modular_prime(i)));
        if (best > cap) throw ConsistencyError("modular rank exceeds the supplied upper bound");
        if (best == cap) return best;
        if (i == 0) {
            row_bits = hadamard_bits_sorted(m, true);
            col_bits = hadamard_bits_sorted(m, false);
        }
        accumulated += kBitsPerPrime;
        const std::size_t k = best + 1;
        if (k > row_bits.size() || k > col_bits.size()) return best;
        const auto bound = std::min(std::accumulate(row_bits.begin(), row_bits.begin() + static_cast<std::ptrdiff_t>(k), std::size_t{0}),
                                    std::accumulate(col_bits.begin(), col_bits.begin() + static_cast<std::ptrdiff_t>(k), std::size_t{0}));
        if (accumulated >= bound + 1) return best;
    }
}

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& input)
{
    RationalMatrix m = input;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && sgn(m(pivot, c)) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(pivot, j), m(r, j));
        const Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            const Rational factor = m(i, c);
            for (std::size_t j = c; j < cols; ++j) m(i, j) -= factor * m(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols, 0);
        v[free] = 1;
        for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -m(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

GradedMap::GradedMap(std::vector<ExponentVector> target, std::vector<ExponentVector> source,
                     RationalMatrix entries)
    : target_(std::move(target)), source_(std::move(source)), entries_(std::move(entries))
{
    if (entries_.rows() != target_.size() || entries_.cols() != source_.size())
        throw PreconditionError("graded map dimensions do not match its bases");
}

std::size_t GradedMap::rank() const { return rank_exact(clear_denominators(entries_)); }

std::vector<Form> GradedMap::kernel() const
{
    std::vector<Form> out;
    if (source_.empty()) return out;
    const std::size_t nvars = source_.front().size();
    const int degree = source_.front().degree();
    for (const auto& v : kernel_basis(entries_)) {
        Form f(nvars, degree);
        for (std::size_t k = 0; k < v.size(); ++k) f.add_term(source_[k], v[k]);
        out.push_back(std::move(f));
    }
    return out;
}

namespace {

std::map<ExponentVector, std::size_t> index_of(const std::vector<ExponentVector>& basis)
{
    std::map<ExponentVector, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace_hint(index.end(), basis[i], i);
    return index;
}

}  // namespace

GradedMap multiplication_map(const Form& linear, int j)
{
    if (linear.degree() != 1) throw PreconditionError("multiplication map needs a linear form");
    const int n = static_cast<int>(linear.nvars()) - 1;
    auto source = monomial_basis(n, j);
    auto target = monomial_basis(n, j + 1);
    const auto index = index_of(target);
    RationalMatrix entries(target.size(), source.size());
    for (std::size_t col = 0; col < source.size(); ++col)
        for (const auto& [e, c] : linear.terms()) entries(index.at(e + source[col]), col) += c;
    return GradedMap(std::move(target), std::move(source), std::move(entries));
}

RationalMatrix coefficient_matrix(std::span<const Form> forms)
{
    if (forms.empty()) return {};
    const std::size_t nvars = forms.front().nvars();
    const int degree = forms.front().degree();
    const auto basis = monomial_basis(static_cast<int>(nvars) - 1, degree);
    const auto index = index_of(basis);
    RationalMatrix m(forms.size(), basis.size());
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (forms[i].nvars() != nvars || forms[i].degree() != degree)
            throw PreconditionError("rank of span needs forms of one degree in one ring");
        for (const auto& [e, c] : forms[i].terms()) m(i, index.at(e)) = c;
    }
    return m;
}

std::size_t rank_of_span(std::span<const Form> forms, std::optional<std::size_t> known_upper_bound)
{
    if (forms.empty()) return 0;
    const std::size_t nvars = forms.front().nvars();
    const int degree = forms.front().degree();
    for (const Form& f : forms)
        if (f.nvars() != nvars || f.degree() != degree)
            throw PreconditionError("rank of span needs forms of one degree in one ring");

    std::set<ExponentVector> pivots;
    for (const Form& f : forms)
        if (f.size() == 1) pivots.insert(f.terms().begin()->first);

    // Residual rows: the remaining forms with pivot columns eliminated.
    std::map<ExponentVector, std::size_t> columns;
    std::vector<const Form*> residual;
    for (const Form& f : forms) {
        if (f.size() <= 1) continue;
        bool nonzero = false;
        for (const auto& [e, c] : f.terms()) {
            if (pivots.count(e)) continue;
            columns.emplace(e, 0);
            nonzero = true;
        }
        if (nonzero) residual.push_back(&f);
    }
    if (residual.empty()) return pivots.size();

    std::size_t next = 0;
    for (auto& [e, idx] : columns) idx = next++;
    RationalMatrix m(residual.size(), columns.size());
    for (std::size_t i = 0; i < residual.size(); ++i)
        for (const auto& [e, c] : residual[i]->terms()) {
            auto it = columns.find(e);
            if (it != columns.end()) m(i, it->second) = c;
        }

    std::optional<std::size_t> residual_bound;
    if (known_upper_bound) residual_bound = *known_upper_bound > pivots.size() ? *known_upper_bound - pivots.size() : 0;
    return pivots.size() + rank_exact(clear_denominators(m), residual_bound);
}

}  // namespace lefschetz
