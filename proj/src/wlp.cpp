#include <lefschetz/wlp.hpp>

#include <lefschetz/errors.hpp>
#include <lefschetz/linalg.hpp>

#include <algorithm>

namespace lefschetz {

IdealSpec::IdealSpec(int n, int d, std::vector<Form> generators)
    : n_(n), d_(d), generators_(std::move(generators))
{
    if (n < 0 || d < 1) throw PreconditionError("ideal needs n >= 0 and generator degree d >= 1");
    for (const Form& f : generators_) {
        if (f.nvars() != nvars() || f.degree() != d)
            throw PreconditionError("every generator must be a form of degree " + std::to_string(d) + " in " +
                                    std::to_string(nvars()) + " variables");
        if (f.is_zero()) throw PreconditionError("zero generator");
    }
    if (rank_of_span(generators_) != generators_.size())
        throw PreconditionError("generators are linearly dependent");

    monomial_ = std::all_of(generators_.begin(), generators_.end(),
                            [](const Form& f) { return f.is_monic_monomial(); });
    if (monomial_) {
        for (const Form& f : generators_) monomials_.push_back(f.terms().begin()->first);
        std::sort(monomials_.begin(), monomials_.end());
        monomial_set_.insert(monomials_.begin(), monomials_.end());
    }
}

IdealSpec IdealSpec::from_monomials(int n, int d, const std::vector<ExponentVector>& monomials)
{
    std::vector<Form> gens;
    gens.reserve(monomials.size());
    for (const auto& e : monomials) gens.push_back(Form::monomial(e));
    return IdealSpec(n, d, std::move(gens));
}

namespace {

bool monomial_in_ideal(const IdealSpec& ideal, const ExponentVector& m)
{
    if (m.degree() < ideal.degree()) return false;
    return std::any_of(ideal.monomials().begin(), ideal.monomials().end(),
                       [&](const ExponentVector& g) { return g.divides(m); });
}

std::int64_t piece_upper_bound(const IdealSpec& ideal, int t)
{
    return std::min(monomial_count(ideal.n(), t),
                    static_cast<std::int64_t>(ideal.r()) * monomial_count(ideal.n(), t - ideal.degree()));
}

}  // namespace

std::vector<Form> ideal_spanning_set(const IdealSpec& ideal, int t)
{
    std::vector<Form> out;
    if (t < ideal.degree()) return out;
    if (ideal.is_monomial()) {
        for (const auto& m : monomial_basis(ideal.n(), t))
            if (monomial_in_ideal(ideal, m)) out.push_back(Form::monomial(m));
        return out;
    }
    const auto multipliers = monomial_basis(ideal.n(), t - ideal.degree());
    out.reserve(multipliers.size() * ideal.r());
    for (const Form& f : ideal.generators())
        for (const auto& m : multipliers) out.push_back(f.shifted(m));
    return out;
}

std::int64_t ideal_piece_dimension(const IdealSpec& ideal, int t)
{
    if (t < 0) throw PreconditionError("negative degree");
    if (t < ideal.degree()) return 0;
    if (ideal.is_monomial()) {
        std::int64_t count = 0;
        for (const auto& m : monomial_basis(ideal.n(), t))
            if (monomial_in_ideal(ideal, m)) ++count;
        return count;
    }
    const auto span = ideal_spanning_set(ideal, t);
    return static_cast<std::int64_t>(
        rank_of_span(span, static_cast<std::size_t>(piece_upper_bound(ideal, t))));
}

std::int64_t hilbert_function(const IdealSpec& ideal, int t)
{
    return monomial_count(ideal.n(), t) - ideal_piece_dimension(ideal, t);
}

int artinian_bound(const IdealSpec& ideal) { return (ideal.n() + 1) * (ideal.degree() - 1) + 1; }

bool is_artinian(const IdealSpec& ideal)
{
    if (ideal.is_monomial()) {
        // Generated in one degree: artinian iff every pure power x_i^d is a generator.
        for (std::size_t i = 0; i < ideal.nvars(); ++i)
            if (!ideal.has_generator(ExponentVector::unit(ideal.nvars(), i, ideal.degree()))) return false;
        return true;
    }
    const int bound = artinian_bound(ideal);
    // h(t) = 0 is monotone in t, so any certified zero below the bound settles it.
    // Below the counting bound the spanning set is too small to fill R_t.
    for (int t = ideal.degree(); t < bound; ++t) {
        if (piece_upper_bound(ideal, t) < monomial_count(ideal.n(), t)) continue;
        const auto span = ideal_spanning_set(ideal, t);
        const auto m = clear_denominators(coefficient_matrix(span));
        if (static_cast<std::int64_t>(rank_mod_p(m, modular_prime(0))) == monomial_count(ideal.n(), t))
            return true;
    }
    return hilbert_function(ideal, bound) == 0;
}

std::vector<std::int64_t> h_vector(const IdealSpec& ideal)
{
    if (!is_artinian(ideal)) throw NotArtinianError();
    std::vector<std::int64_t> h;
    for (int t = 0;; ++t) {
        const auto value = hilbert_function(ideal, t);
        if (value == 0) break;
        h.push_back(value);
    }
    return h;
}

Form sum_of_variables(std::size_t nvars)
{
    std::vector<long> ones(nvars, 1);
    return Form::linear(std::span<const long>(ones));
}

namespace {

WlpReport multiplication_rank_with(const IdealSpec& ideal, const Form& linear, int j,
                                   std::int64_t dim_ideal_j, std::int64_t dim_ideal_next)
{
    const int n = ideal.n();
    WlpReport report;
    report.degree = j;
    report.lefschetz_form = linear;
    report.dim_source = monomial_count(n, j) - dim_ideal_j;
    report.dim_target = monomial_count(n, j + 1) - dim_ideal_next;

    auto forms = ideal_spanning_set(ideal, j + 1);
    for (const auto& m : monomial_basis(n, j)) {
        // L*m already lies in I_{j+1} when m is in the monomial ideal.
        if (ideal.is_monomial() && monomial_in_ideal(ideal, m)) continue;
        Form product = linear.shifted(m);
        forms.push_back(std::move(product));
    }
    const auto bound = dim_ideal_next + std::min(report.dim_source, report.dim_target);
    const auto combined = static_cast<std::int64_t>(rank_of_span(forms, static_cast<std::size_t>(bound)));
    report.rank = combined - dim_ideal_next;
    report.injective = report.rank == report.dim_source;
    report.surjective = report.rank == report.dim_target;
    report.maximal_rank = report.rank == std::min(report.dim_source, report.dim_target);
    return report;
}

}  // namespace

WlpReport multiplication_rank(const IdealSpec& ideal, const Form& linear, int j)
{
    if (linear.degree() != 1 || linear.nvars() != ideal.nvars())
        throw PreconditionError("multiplication needs a linear form in the ideal's ring");
    if (j < 0) throw PreconditionError("negative degree");
    return multiplication_rank_with(ideal, linear, j, ideal_piece_dimension(ideal, j),
                                    ideal_piece_dimension(ideal, j + 1));
}

namespace {

WlpReport generic_rank_cached(const IdealSpec& ideal, int j, const WlpOptions& options,
                              std::int64_t dim_j, std::int64_t dim_next)
{
    if (ideal.is_monomial() && !options.generic_l)
        return multiplication_rank_with(ideal, sum_of_variables(ideal.nvars()), j, dim_j, dim_next);
    std::optional<WlpReport> best;
    for (int trial = 0; trial < std::max(1, options.sampling.trials); ++trial) {
        auto rng = make_stream(options.sampling.seed, "wlp.linear", j, trial);
        auto report = multiplication_rank_with(ideal, random_linear_form(ideal.nvars(), rng), j, dim_j, dim_next);
        if (!best || report.rank > best->rank) best = std::move(report);
        if (best->maximal_rank) break;
    }
    return *best;
}

}  // namespace

WlpReport generic_multiplication_rank(const IdealSpec& ideal, int j, const WlpOptions& options)
{
    return generic_rank_cached(ideal, j, options, ideal_piece_dimension(ideal, j),
                               ideal_piece_dimension(ideal, j + 1));
}

WlpVerdict has_wlp(const IdealSpec& ideal, const WlpOptions& options)
{
    WlpVerdict verdict;
    verdict.h_vector = h_vector(ideal);
    const int top = static_cast<int>(verdict.h_vector.size()) - 1;
    auto dim_ideal = [&](int t) {
        if (t > top) return monomial_count(ideal.n(), t);
        return monomial_count(ideal.n(), t) - verdict.h_vector[static_cast<std::size_t>(t)];
    };
    for (int j = 0; j < top; ++j) {
        auto report = generic_rank_cached(ideal, j, options, dim_ideal(j), dim_ideal(j + 1));
        if (!report.maximal_rank) verdict.failure_degrees.push_back(j);
        verdict.reports.push_back(std::move(report));
    }
    verdict.has_wlp = verdict.failure_degrees.empty();
    return verdict;
}

std::int64_t hyperplane_lemma_bound(int n, int d) { return binomial(n + d - 1, d); }

std::vector<Form> restrict_to_hyperplane(const IdealSpec& ideal, const Form& hyperplane)
{
    const std::size_t last = ideal.nvars() - 1;
    const Rational lead = hyperplane.coefficient(ExponentVector::unit(ideal.nvars(), last));
    if (lead == 0) throw PreconditionError("hyperplane must involve the last variable");
    // x_n = -(c_0 x_0 + ... + c_{n-1} x_{n-1}) / c_n
    Form image(last, 1);
    for (const auto& [e, c] : hyperplane.terms())
        if (e[last] == 0) image.add_term(e.without(last), -c / lead);
    std::vector<Form> out;
    out.reserve(ideal.r());
    for (const Form& f : ideal.generators()) out.push_back(substitute_variable(f, last, image));
    return out;
}

bool fails_in_degree_dminus1(const IdealSpec& ideal, const WlpOptions& options)
{
    if (ideal.n() < 1) throw PreconditionError("hyperplane restriction needs at least two variables");
    if (static_cast<std::int64_t>(ideal.r()) > hyperplane_lemma_bound(ideal.n(), ideal.degree()))
        throw PreconditionError("hyperplane lemma needs r <= C(n+d-1, d)");

    if (ideal.is_monomial() && !options.generic_l) {
        const auto restricted = restrict_to_hyperplane(ideal, sum_of_variables(ideal.nvars()));
        return rank_of_span(restricted) < ideal.r();
    }
    std::size_t best = 0;
    const ExponentVector last = ExponentVector::unit(ideal.nvars(), ideal.nvars() - 1);
    for (int trial = 0; trial < std::max(1, options.sampling.trials); ++trial) {
        auto rng = make_stream(options.sampling.seed, "wlp.hyperplane", ideal.degree(), trial);
        Form h = random_linear_form(ideal.nvars(), rng);
        while (h.coefficient(last) == 0) h = random_linear_form(ideal.nvars(), rng);
        best = std::max(best, rank_of_span(restrict_to_hyperplane(ideal, h)));
        if (best == ideal.r()) break;
    }
    return best < ideal.r();
}

bool is_togliatti(const IdealSpec& ideal, const WlpOptions& options)
{
    if (ideal.n() < 1) return false;
    if (static_cast<std::int64_t>(ideal.r()) > binomial(ideal.n() + ideal.degree() - 1, ideal.n() - 1))
        return false;
    if (!is_artinian(ideal)) return false;
    return fails_in_degree_dminus1(ideal, options);
}

std::optional<ExponentVector> trivial_type_a(const IdealSpec& ideal)
{
    if (!ideal.is_monomial()) throw PreconditionError("type A search is implemented for monomial ideals");
    for (const auto& q : monomial_basis(ideal.n(), ideal.degree() - 1)) {
        bool saturating = true;
        for (std::size_t i = 0; i < ideal.nvars() && saturating; ++i)
            saturating = ideal.has_generator(q + ExponentVector::unit(ideal.nvars(), i));
        if (saturating) return q;
    }
    return std::nullopt;
}

TypeBResult trivial_type_b_test(const IdealSpec& ideal, const SamplingOptions& sampling)
{
    if (!ideal.is_monomial() || ideal.degree() != 3)
        throw PreconditionError("type B test needs a monomial ideal of cubics");
    const std::size_t nvars = ideal.nvars();
    const std::int64_t threshold = binomial(ideal.n() + 1, 2);

    TypeBResult result;
    for (std::size_t i = 0; i < nvars; ++i) {
        TypeBPoint point;
        point.index = i;
        point.divisible_generators = std::count_if(ideal.monomials().begin(), ideal.monomials().end(),
                                                   [&](const ExponentVector& g) { return g[i] > 0; });
        point.sufficient = point.divisible_generators > threshold;

        // dim(I_3 ∩ x_i M R_1) = r + (n+1) - dim(I_3 + x_i M R_1), required >= 1 for every sampled M.
        point.full = true;
        const Form xi = Form::monomial(ExponentVector::unit(nvars, i));
        for (int trial = 0; trial < std::max(1, sampling.trials) && point.full; ++trial) {
            auto rng = make_stream(sampling.seed, "wlp.typeB", static_cast<long>(i), trial);
            const Form m = xi * random_linear_form(nvars, rng);
            std::vector<Form> forms = ideal.generators();
            for (std::size_t k = 0; k < nvars; ++k) forms.push_back(m.shifted(ExponentVector::unit(nvars, k)));
            const auto joint = static_cast<std::int64_t>(rank_of_span(forms));
            const auto meet = static_cast<std::int64_t>(ideal.r() + nvars) - joint;
            point.full = meet >= 1;
        }
        result.sufficient = result.sufficient || point.sufficient;
        result.full = result.full || point.full;
        if (!result.witness && (point.full || point.sufficient)) result.witness = i;
        result.points.push_back(point);
    }
    return result;
}

}  // namespace lefschetz
