#include <lefschetz/osculating.hpp>

#include <lefschetz/errors.hpp>
#include <lefschetz/linalg.hpp>

#include <algorithm>

namespace lefschetz {

LinearSystem::LinearSystem(int n, int d, std::vector<Form> members) : n_(n), d_(d), members_(std::move(members))
{
    if (members_.empty()) throw PreconditionError("empty linear system");
    if (n < 1) throw PreconditionError("linear system needs n >= 1");
    for (const Form& f : members_)
        if (f.nvars() != static_cast<std::size_t>(n) + 1 || f.degree() != d)
            throw PreconditionError("every member must be a form of degree " + std::to_string(d));
    if (rank_of_span(members_) != members_.size()) throw PreconditionError("members are linearly dependent");
}

LinearSystem LinearSystem::from_monomials(int n, int d, const std::vector<ExponentVector>& monomials)
{
    std::vector<Form> members;
    members.reserve(monomials.size());
    for (const auto& e : monomials) members.push_back(Form::monomial(e));
    return LinearSystem(n, d, std::move(members));
}

LinearSystem LinearSystem::from_apolar(const ApolarSystem& system)
{
    return LinearSystem(system.n, system.d, system.basis);
}

namespace {

class PowerTable {
public:
    PowerTable(std::span<const Rational> point, int max_power) : table_(point.size())
    {
        for (std::size_t i = 0; i < point.size(); ++i) {
            table_[i].push_back(1);
            for (int k = 1; k <= max_power; ++k) table_[i].push_back(table_[i].back() * point[i]);
        }
    }
    const Rational& operator()(std::size_t i, int k) const { return table_[i][static_cast<std::size_t>(k)]; }

private:
    std::vector<std::vector<Rational>> table_;
};

// sum_terms c * prod_i (e_i)_(g_i) * p_i^(e_i - g_i), over terms with g <= e.
Rational derivative_at(const std::vector<std::pair<ExponentVector, Rational>>& terms, const ExponentVector& g,
                       const PowerTable& powers)
{
    Rational total = 0;
    Rational v;
    for (const auto& [e, c] : terms) {
        if (!g.divides(e)) continue;
        v = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (int k = 0; k < g[i]; ++k) v *= e[i] - k;
            v *= powers(i, e[i] - g[i]);
        }
        total += v;
    }
    return total;
}

std::size_t jet_rank(const std::vector<std::vector<std::pair<ExponentVector, Rational>>>& members,
                     const std::vector<ExponentVector>& derivatives, std::span<const Rational> point, int degree)
{
    const PowerTable powers(point, degree);
    RationalMatrix jets(derivatives.size(), members.size());
    for (std::size_t r = 0; r < derivatives.size(); ++r)
        for (std::size_t c = 0; c < members.size(); ++c) jets(r, c) = derivative_at(members[c], derivatives[r], powers);
    return rank_exact(clear_denominators(jets));
}

}  // namespace

std::size_t affine_jet_rank(const LinearSystem& system, int s, std::span<const Rational> chart_point)
{
    const int n = system.n();
    if (s < 0) throw PreconditionError("negative osculating order");
    if (chart_point.size() != static_cast<std::size_t>(n)) throw PreconditionError("chart point needs n coordinates");
    std::vector<std::vector<std::pair<ExponentVector, Rational>>> members;
    for (const Form& f : system.members()) {
        auto& terms = members.emplace_back();
        for (const auto& [e, c] : f.terms()) terms.emplace_back(e.without(0), c);
    }
    std::vector<ExponentVector> derivatives;
    for (int k = 0; k <= s; ++k)
        for (auto& g : monomial_basis(n - 1, k)) derivatives.push_back(std::move(g));
    return jet_rank(members, derivatives, chart_point, system.degree());
}

std::size_t homogeneous_jet_rank(const LinearSystem& system, int s, std::span<const Rational> point)
{
    const int n = system.n();
    if (s < 0 || s > system.degree()) throw PreconditionError("order must lie in [0, d]");
    if (point.size() != static_cast<std::size_t>(n) + 1) throw PreconditionError("point needs n+1 coordinates");
    std::vector<std::vector<std::pair<ExponentVector, Rational>>> members;
    for (const Form& f : system.members()) members.emplace_back(f.terms().begin(), f.terms().end());
    return jet_rank(members, monomial_basis(n, s), point, system.degree());
}

OsculatingReport osculating_dimension(const LinearSystem& system, int s, const SamplingOptions& sampling)
{
    if (s < 1) throw PreconditionError("osculating order must be at least 1");
    OsculatingReport report;
    report.order = s;
    report.expected_dim = binomial(system.n() + s, s) - 1;
    const auto ceiling = static_cast<std::size_t>(
        std::min<std::int64_t>(report.expected_dim, system.projective_dimension()) + 1);
    std::size_t best = 0;
    for (int trial = 0; trial < std::max(1, sampling.trials); ++trial) {
        auto rng = make_stream(sampling.seed, "osculating.point", s, trial);
        const auto point = random_torus_point(static_cast<std::size_t>(system.n()), rng);
        best = std::max(best, affine_jet_rank(system, s, point));
        if (best == ceiling) break;
    }
    report.actual_dim = static_cast<std::int64_t>(best) - 1;
    report.delta = report.expected_dim - report.actual_dim;
    return report;
}

LaplaceCount laplace_count(const LinearSystem& system, int s, const SamplingOptions& sampling)
{
    const auto report = osculating_dimension(system, s, sampling);
    LaplaceCount count;
    count.equations = report.delta;
    count.forced_by_ambient = system.projective_dimension() < report.expected_dim;
    return count;
}

std::vector<Form> lattice_quadrics(std::span<const ExponentVector> points)
{
    if (points.empty()) throw PreconditionError("quadric search needs at least one point");
    const std::size_t nvars = points.front().size();
    const auto quadratic = monomial_basis(static_cast<int>(nvars) - 1, 2);
    RationalMatrix evaluation(points.size(), quadratic.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != nvars) throw PreconditionError("lattice points of different dimension");
        for (std::size_t k = 0; k < quadratic.size(); ++k) {
            long v = 1;
            for (std::size_t c = 0; c < nvars; ++c)
                for (int p = 0; p < quadratic[k][c]; ++p) v *= points[i][c];
            evaluation(i, k) = v;
        }
    }
    std::vector<Form> out;
    for (const auto& v : kernel_basis(evaluation)) {
        Form q(nvars, 2);
        for (std::size_t k = 0; k < v.size(); ++k) q.add_term(quadratic[k], v[k]);
        out.push_back(primitive_part(q));
    }
    return out;
}

std::optional<Form> perkinson_quadric(std::span<const ExponentVector> points)
{
    auto quadrics = lattice_quadrics(points);
    if (quadrics.empty()) return std::nullopt;
    return quadrics.front();
}

}  // namespace lefschetz
