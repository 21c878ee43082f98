#include <lefschetz/bundles.hpp>

#include <lefschetz/errors.hpp>
#include <lefschetz/linalg.hpp>

#include <algorithm>
#include <mutex>
#include <numeric>
#include <thread>

namespace lefschetz {

std::vector<Form> restrict_to_line(std::span<const Form> forms, std::span<const Rational> p, std::span<const Rational> q)
{
    if (p.size() != q.size()) throw PreconditionError("line points of different dimension");
    {
        RationalMatrix pq(2, p.size());
        for (std::size_t i = 0; i < p.size(); ++i) {
            pq(0, i) = p[i];
            pq(1, i) = q[i];
        }
        if (rank_exact(clear_denominators(pq)) < 2) throw PreconditionError("line needs two distinct points");
    }
    std::vector<Form> images;
    images.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Rational c[2] = {p[i], q[i]};
        images.push_back(Form::linear(std::span<const Rational>(c)));
    }
    std::vector<Form> out;
    out.reserve(forms.size());
    for (const Form& f : forms) {
        if (f.nvars() != p.size()) throw PreconditionError("form and line live in different spaces");
        out.push_back(substitute_linear(f, images));
    }
    return out;
}

std::vector<std::int64_t> kernel_dimensions(std::span<const Form> binary_forms, int d)
{
    const std::size_t r = binary_forms.size();
    std::vector<std::int64_t> dims;
    for (int t = 0; t <= d; ++t) {
        const auto target = monomial_basis(1, t + d);
        const auto source = monomial_basis(1, t);
        RationalMatrix m(target.size(), r * source.size());
        std::size_t col = 0;
        for (const Form& f : binary_forms) {
            if (f.nvars() != 2 || f.degree() != d) throw PreconditionError("expected binary forms of degree d");
            for (const auto& g : source) {
                for (const auto& [e, c] : f.terms()) {
                    const auto product = e + g;
                    m(static_cast<std::size_t>(product[0]), col) = c;
                }
                ++col;
            }
        }
        const auto cap = std::min(target.size(), r * source.size());
        const auto rank = rank_exact(clear_denominators(m), cap);
        dims.push_back(static_cast<std::int64_t>(r * source.size()) - static_cast<std::int64_t>(rank));
    }
    return dims;
}

int SplittingType::sum() const { return std::accumulate(values.begin(), values.end(), 0); }

int SplittingType::last() const { return values.empty() ? 0 : values.back(); }

SplittingType splitting_type_from_kernel(std::span<const std::int64_t> kernel_dims, std::size_t r, int d)
{
    if (kernel_dims.size() != static_cast<std::size_t>(d) + 1) throw PreconditionError("need k(0..d)");
    SplittingType type;
    type.kernel_dims.assign(kernel_dims.begin(), kernel_dims.end());
    // delta(t) = #{i : a_i >= -t}
    std::int64_t previous_delta = 0;
    std::int64_t previous_k = 0;
    for (int t = 0; t <= d; ++t) {
        const std::int64_t delta = kernel_dims[static_cast<std::size_t>(t)] - previous_k;
        const std::int64_t count = delta - previous_delta;
        if (count < 0) throw ConsistencyError("kernel dimensions are not convex");
        for (std::int64_t k = 0; k < count; ++k) type.values.push_back(-t);
        previous_delta = delta;
        previous_k = kernel_dims[static_cast<std::size_t>(t)];
    }
    if (type.values.size() + 1 != r) throw ConsistencyError("splitting type does not have r - 1 summands");
    std::sort(type.values.begin(), type.values.end());
    return type;
}

SplittingType splitting_type(const IdealSpec& ideal, const SamplingOptions& sampling)
{
    if (ideal.n() < 1) throw PreconditionError("splitting type needs at least two variables");
    if (!is_artinian(ideal)) throw NotArtinianError();
    const int d = ideal.degree();
    std::vector<std::int64_t> best;
    for (int trial = 0; trial < std::max(1, sampling.trials); ++trial) {
        auto rng = make_stream(sampling.seed, "bundles.line", d, trial);
        std::vector<Rational> p(ideal.nvars());
        std::vector<Rational> q(ideal.nvars());
        std::vector<Form> restricted;
        while (true) {
            for (auto& x : p) x = random_coefficient(rng);
            for (auto& x : q) x = random_coefficient(rng);
            try {
                restricted = restrict_to_line(ideal.generators(), p, q);
                break;
            } catch (const PreconditionError&) {
            }
        }
        auto dims = kernel_dimensions(restricted, d);
        if (best.empty()) {
            best = std::move(dims);
        } else {
            for (std::size_t t = 0; t < best.size(); ++t) best[t] = std::min(best[t], dims[t]);
        }
    }
    auto type = splitting_type_from_kernel(best, ideal.r(), d);
    if (type.sum() != -d) throw ConsistencyError("splitting type does not sum to -d");
    if (!type.values.empty() && type.values.back() > 0) throw ConsistencyError("positive splitting summand");
    return type;
}

bool wlp_via_splitting(const IdealSpec& ideal, const SamplingOptions& sampling)
{
    return splitting_type(ideal, sampling).last() < 0;
}

IdealSpec valles_ideal(int d, std::mt19937_64& rng)
{
    if (d < 2) throw PreconditionError("construction needs d >= 2");
    while (true) {
        std::vector<Form> lines;
        for (int i = 0; i < d; ++i) lines.push_back(random_linear_form(3, rng));
        std::vector<Form> generators;
        Form product = lines.front();
        for (std::size_t i = 1; i < lines.size(); ++i) product = product * lines[i];
        for (const Form& l : lines) generators.push_back(l.pow(d));
        generators.push_back(std::move(product));
        if (rank_of_span(generators) == generators.size()) return IdealSpec(2, d, std::move(generators));
    }
}

VallesCheck valles_check(int d, std::uint64_t seed, int sample, int trials)
{
    auto rng = make_stream(seed, "valles.ideal", d, sample);
    const IdealSpec ideal = valles_ideal(d, rng);
    WlpOptions options;
    options.sampling = SamplingOptions{seed, trials};
    VallesCheck check;
    check.d = d;
    check.seed = seed;
    check.fails_in_degree_dminus1 = fails_in_degree_dminus1(ideal, options);
    const auto verdict = has_wlp(ideal, options);
    check.has_wlp = verdict.has_wlp;
    check.failure_degrees = verdict.failure_degrees;
    return check;
}

namespace {

std::vector<std::string> generator_strings(const IdealSpec& ideal)
{
    const std::vector<std::string> names = {"x", "y", "z"};
    std::vector<std::string> out;
    for (const Form& f : ideal.generators()) out.push_back(to_string(f, names));
    return out;
}

std::string join(const std::vector<int>& values)
{
    std::string out = "{";
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
    return out + "}";
}

IdealSpec monomial_r4(int d, const ExponentVector& extra)
{
    return IdealSpec::from_monomials(
        2, d, {ExponentVector{d, 0, 0}, ExponentVector{0, d, 0}, ExponentVector{0, 0, d}, extra});
}

R4DegreeResult check_degree(int d, const R4Options& options)
{
    R4DegreeResult result;
    result.d = d;
    WlpOptions wlp_options;
    wlp_options.sampling = options.sampling;
    const bool divisible_by_three = d % 3 == 0;
    const int lambda = d / 3;

    std::vector<ExponentVector> mixed;
    for (const auto& e : monomial_basis(2, d))
        if (std::count(e.entries().begin(), e.entries().end(), d) == 0) mixed.push_back(e);
    result.monomial_population = mixed.size();
    if (static_cast<int>(mixed.size()) > options.monomial_samples) {
        auto rng = make_stream(options.sampling.seed, "r4.monomials", d);
        std::shuffle(mixed.begin(), mixed.end(), rng);
        mixed.resize(static_cast<std::size_t>(options.monomial_samples));
        std::sort(mixed.begin(), mixed.end());
    }

    auto record = [&](std::string kind, const IdealSpec& ideal, bool check_wlp) {
        R4Sample sample;
        sample.kind = std::move(kind);
        sample.generators = generator_strings(ideal);
        sample.fails_in_degree_dminus1 = fails_in_degree_dminus1(ideal, wlp_options);
        if (sample.fails_in_degree_dminus1)
            result.violations.push_back(sample.kind + " sample fails in degree d-1");
        if (check_wlp) {
            const auto verdict = has_wlp(ideal, wlp_options);
            sample.wlp_checked = true;
            sample.has_wlp = verdict.has_wlp;
            sample.failure_degrees = verdict.failure_degrees;
            if (!divisible_by_three && !verdict.has_wlp)
                result.violations.push_back(sample.kind + " sample fails the WLP at " + join(verdict.failure_degrees));
            if (divisible_by_three && !verdict.has_wlp &&
                verdict.failure_degrees != std::vector<int>{4 * lambda - 2})
                result.violations.push_back(sample.kind + " sample fails outside degree 4*lambda-2: " +
                                            join(verdict.failure_degrees));
            if (d % 6 == 0 && sample.kind == "monomial" && !verdict.has_wlp)
                result.violations.push_back("monomial sample fails the WLP with 6 | d");
        }
        result.samples.push_back(std::move(sample));
    };

    for (const auto& m : mixed) record("monomial", monomial_r4(d, m), true);
    for (int s = 0; s < options.random_samples; ++s) {
        auto rng = make_stream(options.sampling.seed, "r4.random", d, s);
        std::optional<IdealSpec> ideal;
        while (!ideal) {
            std::vector<Form> gens;
            for (int i = 0; i < 4; ++i) gens.push_back(random_form(3, d, rng));
            try {
                IdealSpec candidate(2, d, std::move(gens));
                if (is_artinian(candidate)) ideal = std::move(candidate);
            } catch (const PreconditionError&) {
            }
        }
        record("random", *ideal, true);
    }
    if (divisible_by_three && d % 2 == 1) {
        const IdealSpec special = monomial_r4(d, ExponentVector{lambda, lambda, lambda});
        const auto verdict = has_wlp(special, wlp_options);
        R4Sample sample;
        sample.kind = "special";
        sample.generators = generator_strings(special);
        sample.fails_in_degree_dminus1 = fails_in_degree_dminus1(special, wlp_options);
        sample.wlp_checked = true;
        sample.has_wlp = verdict.has_wlp;
        sample.failure_degrees = verdict.failure_degrees;
        if (verdict.failure_degrees != std::vector<int>{4 * lambda - 2})
            result.violations.push_back("(x^d,y^d,z^d,(xyz)^lambda) fails at " + join(verdict.failure_degrees) +
                                        " instead of exactly {" + std::to_string(4 * lambda - 2) + "}");
        result.samples.push_back(std::move(sample));
    }
    return result;
}

}  // namespace

bool R4Report::passed() const
{
    return std::all_of(degrees.begin(), degrees.end(), [](const R4DegreeResult& r) { return r.violations.empty(); });
}

R4Report verify_r4_theorem(int dmin, int dmax, const R4Options& options)
{
    if (dmin < 4 || dmax < dmin) throw PreconditionError("harness needs 4 <= dmin <= dmax");
    R4Report report;
    report.dmin = dmin;
    report.dmax = dmax;
    report.seed = options.sampling.seed;
    report.degrees.resize(static_cast<std::size_t>(dmax - dmin + 1));

    const int workers = std::max(1, std::min(options.threads, dmax - dmin + 1));
    std::mutex error_mutex;
    std::exception_ptr error;
    int next = dmin;
    std::mutex next_mutex;
    auto work = [&] {
        while (true) {
            int d;
            {
                std::lock_guard lock(next_mutex);
                if (next > dmax) return;
                d = next++;
            }
            try {
                report.degrees[static_cast<std::size_t>(d - dmin)] = check_degree(d, options);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);
    return report;
}

nlohmann::json to_json(const SplittingType& type)
{
    return {{"values", type.values}, {"kernel_dimensions", type.kernel_dims}, {"sum", type.sum()}};
}

nlohmann::json to_json(const R4Report& report)
{
    nlohmann::json degrees = nlohmann::json::array();
    for (const auto& r : report.degrees) {
        nlohmann::json samples = nlohmann::json::array();
        for (const auto& s : r.samples) {
            nlohmann::json j = {{"kind", s.kind},
                                {"generators", s.generators},
                                {"fails_in_degree_dminus1", s.fails_in_degree_dminus1}};
            if (s.wlp_checked) {
                j["has_wlp"] = s.has_wlp;
                j["failure_degrees"] = s.failure_degrees;
            }
            samples.push_back(std::move(j));
        }
        degrees.push_back({{"d", r.d},
                           {"monomial_population", r.monomial_population},
                           {"samples", samples},
                           {"violations", r.violations},
                           {"passed", r.violations.empty()}});
    }
    return {{"dmin", report.dmin},
            {"dmax", report.dmax},
            {"seed", report.seed},
            {"passed", report.passed()},
            {"degrees", degrees}};
}

}  // namespace lefschetz
