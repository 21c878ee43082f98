#include <lefschetz/apolarity.hpp>
#include <lefschetz/bundles.hpp>
#include <lefschetz/classify.hpp>
#include <lefschetz/errors.hpp>
#include <lefschetz/osculating.hpp>
#include <lefschetz/parse.hpp>
#include <lefschetz/polytope.hpp>
#include <lefschetz/wlp.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace lefschetz;
using nlohmann::json;

namespace {

constexpr int kExitAnalysis = 1;
constexpr int kExitUsage = 2;

struct Global {
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    bool json = false;
    std::string out;
    bool generic_l = false;
};

struct Input {
    std::string document;
    std::vector<std::string> generators;
    std::string variables;
};

class AnalysisFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split_names(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

IdealDocument load_document(const Input& input)
{
    if (!input.document.empty()) {
        if (!input.generators.empty()) throw ParseError("give either a document or --gen, not both");
        std::ifstream in(input.document);
        if (!in) throw ParseError("cannot read " + input.document);
        json j;
        try {
            j = json::parse(in);
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what());
        }
        return IdealDocument::from_json(j);
    }
    if (input.generators.empty()) throw ParseError("no ideal given: pass a document path or --gen");
    IdealDocument doc;
    doc.variables = input.variables.empty() ? infer_variables(input.generators) : split_names(input.variables);
    doc.generators = input.generators;
    doc.degree = parse_polynomial(input.generators.front(), doc.variables).degree();
    return doc;
}

SamplingOptions sampling_for(const Global& g, const IdealDocument* doc = nullptr)
{
    SamplingOptions s;
    if (g.seed) {
        s.seed = *g.seed;
    } else if (doc && doc->seed) {
        s.seed = *doc->seed;
    } else if (const char* env = std::getenv("LEFSCHETZ_SEED")) {
        try {
            s.seed = std::stoull(env);
        } catch (const std::exception&) {
            throw ParseError(std::string("LEFSCHETZ_SEED is not an integer: ") + env);
        }
    }
    if (g.trials)
        s.trials = *g.trials;
    else if (doc && doc->trials)
        s.trials = *doc->trials;
    if (s.trials < 1) throw ParseError("--trials must be at least 1");
    return s;
}

class Output {
public:
    explicit Output(const Global& g) : global_(g)
    {
        if (!g.out.empty()) {
            file_.open(g.out);
            if (!file_) throw ParseError("cannot write " + g.out);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
    void emit(const json& j, const std::string& human)
    {
        if (global_.json)
            stream() << j.dump(2) << '\n';
        else
            stream() << human;
    }

private:
    const Global& global_;
    std::ofstream file_;
};

std::string tuple(const std::vector<std::int64_t>& values)
{
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + std::to_string(values[i]);
    return out + ")";
}

std::string tuple(const std::vector<int>& values)
{
    return tuple(std::vector<std::int64_t>(values.begin(), values.end()));
}

json report_json(const WlpReport& r, const std::vector<std::string>& vars)
{
    return {{"degree", r.degree},
            {"dim_source", r.dim_source},
            {"dim_target", r.dim_target},
            {"rank", r.rank},
            {"injective", r.injective},
            {"surjective", r.surjective},
            {"maximal_rank", r.maximal_rank},
            {"lefschetz_form", to_string(r.lefschetz_form, vars)}};
}

int run_wlp(const Global& g, const Input& input)
{
    const auto doc = load_document(input);
    const auto ideal = doc.ideal();
    WlpOptions options{sampling_for(g, &doc), g.generic_l};
    const auto verdict = has_wlp(ideal, options);

    json reports = json::array();
    std::ostringstream human;
    human << "h-vector: " << tuple(verdict.h_vector) << "\n";
    human << "Lefschetz element: "
          << (ideal.is_monomial() && !g.generic_l ? "sum of the variables" : "random linear form") << "\n";
    human << "degree  source  target  rank  status\n";
    for (const auto& r : verdict.reports) {
        reports.push_back(report_json(r, doc.variables));
        const std::string status = r.maximal_rank ? (r.injective && r.surjective ? "bijective"
                                                     : r.injective             ? "injective"
                                                                               : "surjective")
                                                  : "FAILS";
        human << std::left << std::setw(8) << r.degree << std::setw(8) << r.dim_source << std::setw(8) << r.dim_target
              << std::setw(6) << r.rank << status << "\n";
    }
    human << (verdict.has_wlp ? std::string("WLP: yes\n")
                              : "WLP: no, failure degree(s) " + tuple(verdict.failure_degrees) + "\n");
    const json j = {{"h_vector", verdict.h_vector},
                    {"has_wlp", verdict.has_wlp},
                    {"failure_degrees", verdict.failure_degrees},
                    {"monomial", ideal.is_monomial()},
                    {"generic_l", g.generic_l},
                    {"reports", reports}};
    Output(g).emit(j, human.str());
    return 0;
}

int run_togliatti(const Global& g, const Input& input)
{
    const auto doc = load_document(input);
    const auto ideal = doc.ideal();
    const int n = ideal.n();
    const int d = ideal.degree();
    if (static_cast<std::int64_t>(ideal.r()) > binomial(n + d - 1, n - 1))
        throw PreconditionError("the three conditions are compared only for r <= C(n+d-1, n-1) = " +
                                std::to_string(binomial(n + d - 1, n - 1)));
    if (!is_artinian(ideal)) throw NotArtinianError();
    WlpOptions options{sampling_for(g, &doc), g.generic_l};
    const auto report = generic_multiplication_rank(ideal, d - 1, options);
    const bool wlp_failure = !report.maximal_rank;
    const bool dependent = fails_in_degree_dminus1(ideal, options);
    const auto system = LinearSystem::from_apolar(apolar_complement(ideal));
    const auto laplace = laplace_count(system, d - 1, options.sampling);
    const bool has_laplace = laplace.equations >= 1;
    const bool agree = wlp_failure == dependent && dependent == has_laplace;

    std::ostringstream human;
    human << "WLP fails in degree " << d - 1 << ": " << (wlp_failure ? "yes" : "no") << "\n";
    human << "generators dependent on a general hyperplane: " << (dependent ? "yes" : "no") << "\n";
    human << "Laplace equations of order " << d - 1 << ": " << laplace.equations
          << (laplace.forced_by_ambient ? " (forced by the ambient dimension)" : "") << "\n";
    human << "Togliatti system: " << (agree && dependent ? "yes" : "no") << "\n";
    if (!agree) human << "ERROR: the three conditions disagree\n";
    const json j = {{"wlp_fails_in_degree_dminus1", wlp_failure},
                    {"hyperplane_dependent", dependent},
                    {"laplace_order", d - 1},
                    {"laplace_equations", laplace.equations},
                    {"forced_by_ambient", laplace.forced_by_ambient},
                    {"togliatti", agree && dependent},
                    {"agree", agree}};
    Output(g).emit(j, human.str());
    if (!agree) throw AnalysisFailure("Tea-Theorem conditions disagree");
    return 0;
}

LinearSystem system_for(const IdealSpec& ideal, bool as_system)
{
    if (as_system) return LinearSystem(ideal.n(), ideal.degree(), ideal.generators());
    return LinearSystem::from_apolar(apolar_complement(ideal));
}

int run_osculate(const Global& g, const Input& input, int order, bool as_system)
{
    const auto doc = load_document(input);
    const auto ideal = doc.ideal();
    const auto system = system_for(ideal, as_system);
    const auto sampling = sampling_for(g, &doc);
    const auto report = osculating_dimension(system, order, sampling);
    const auto laplace = laplace_count(system, order, sampling);
    std::ostringstream human;
    human << "linear system: " << system.members().size() << " forms, N = " << system.projective_dimension() << "\n";
    human << "osculating space of order " << order << ": dimension " << report.actual_dim << ", expected "
          << report.expected_dim << "\n";
    human << "Laplace equations of order " << order << ": " << report.delta
          << (laplace.forced_by_ambient ? " (forced by the ambient dimension)" : "") << "\n";
    const json j = {{"order", report.order},
                    {"expected_dim", report.expected_dim},
                    {"actual_dim", report.actual_dim},
                    {"delta", report.delta},
                    {"N", system.projective_dimension()},
                    {"forced_by_ambient", laplace.forced_by_ambient}};
    Output(g).emit(j, human.str());
    return 0;
}

int run_apolar(const Global& g, const Input& input)
{
    const auto doc = load_document(input);
    const auto system = apolar_complement(doc.ideal());
    json basis = json::array();
    std::ostringstream human;
    human << "inverse system in degree " << system.d << ": " << system.basis.size() << " forms\n";
    for (const Form& f : system.basis) {
        basis.push_back(to_string(f, doc.variables));
        human << "  " << to_string(f, doc.variables) << "\n";
    }
    Output(g).emit({{"degree", system.d}, {"dimension", system.basis.size()}, {"basis", basis}}, human.str());
    return 0;
}

int run_polytope(const Global& g, const Input& input, bool as_system)
{
    const auto doc = load_document(input);
    const auto ideal = doc.ideal();
    if (!ideal.is_monomial()) throw PreconditionError("polytope needs a monomial ideal");
    MonomialSet points;
    if (as_system) {
        points = ideal.monomials();
    } else {
        for (const Form& f : apolar_complement(ideal).basis) points.push_back(f.terms().begin()->first);
    }
    const auto polytope = build_polytope(points);
    const json j = polytope_report(polytope);
    const auto diagnosis = diagnose_smoothness(polytope);

    std::ostringstream human;
    human << "points: " << polytope.points().size() << ", vertices: " << polytope.vertices().size()
          << ", edges: " << polytope.edges().size() << ", facets: " << polytope.facets().size() << "\n";
    human << "simple (quasi-smooth): " << (diagnosis.simple ? "yes" : "no") << "\n";
    human << "smooth: " << (diagnosis.smooth ? "yes" : "no") << "\n";
    if (diagnosis.edge_rule_fired())
        human << "edge lattice-point rule fired at " << diagnosis.missing_edge_points.size() << " edge end(s)\n";
    human << "degree (normalized volume): " << j["normalized_volume"].get<std::int64_t>() << "\n";
    Output(g).emit(j, human.str());
    return 0;
}

struct ClassifyArgs {
    int n = 3;
    std::optional<int> max_extra;
    std::string cache;
    bool resume = false;
    int threads = 1;
};

int run_classify(const Global& g, const ClassifyArgs& args)
{
    ClassifyOptions options;
    options.sampling = sampling_for(g);
    options.threads = args.threads;
    options.max_extra = args.max_extra;
    if (!args.cache.empty()) options.cache = args.cache;
    options.resume = args.resume;
    if (args.resume && args.cache.empty()) throw ParseError("--resume needs --cache");
    const auto result = enumerate_cubic_togliatti(args.n, options);

    Output out(g);
    const auto vars = conventional_variables(static_cast<std::size_t>(args.n) + 1);
    std::size_t smooth = 0;
    std::size_t quasi = 0;
    for (const auto& r : result.records) {
        smooth += r.smooth();
        quasi += r.quasi_smooth() && !r.smooth();
    }
    if (g.json) {
        for (const auto& r : result.records) out.stream() << to_json(r).dump() << '\n';
        const json summary = {{"summary",
                               {{"n", result.n},
                                {"candidates", result.candidates},
                                {"raw_hits", result.raw_hits},
                                {"records", result.records.size()},
                                {"smooth", smooth},
                                {"quasi_smooth_not_smooth", quasi}}}};
        out.stream() << summary.dump() << '\n';
        return 0;
    }
    auto& s = out.stream();
    s << "candidates: " << result.candidates << ", Togliatti hits: " << result.raw_hits
      << ", up to permutation: " << result.records.size() << "\n";
    for (const auto& r : result.records) {
        s << "r=" << r.r() << " " << to_string(r.verdict) << " degree " << r.toric_degree << " orbit " << r.orbit_size;
        if (r.trivial_a) s << " trivial-A(" << to_string(*r.trivial_a, vars) << ")";
        if (r.trivial_b) s << " trivial-B";
        if (!r.label.empty()) s << " [" << r.label << "]";
        s << "\n  extra:";
        for (const auto& e : r.extra) s << " " << to_string(e, vars);
        if (r.quadric) s << "\n  quadric: " << to_string(*r.quadric, vars);
        s << "\n";
    }
    s << "smooth: " << smooth << ", quasi-smooth but not smooth: " << quasi << "\n";
    return 0;
}

int run_splitting(const Global& g, const Input& input)
{
    const auto doc = load_document(input);
    const auto ideal = doc.ideal();
    const auto sampling = sampling_for(g, &doc);
    const auto type = splitting_type(ideal, sampling);
    json j = to_json(type);
    j["wlp_via_splitting"] = type.last() < 0;
    std::ostringstream human;
    human << "generic splitting type: " << tuple(type.values) << "\n";
    human << "kernel dimensions k(0.." << ideal.degree() << "): " << tuple(type.kernel_dims) << "\n";
    human << "a_{r-1} < 0: " << (type.last() < 0 ? "yes" : "no") << "\n";
    if (static_cast<std::int64_t>(ideal.r()) <= hyperplane_lemma_bound(ideal.n(), ideal.degree())) {
        WlpOptions options{sampling, g.generic_l};
        const bool fails = fails_in_degree_dminus1(ideal, options);
        j["fails_in_degree_dminus1"] = fails;
        human << "WLP fails in degree " << ideal.degree() - 1 << ": " << (fails ? "yes" : "no") << "\n";
    }
    Output(g).emit(j, human.str());
    return 0;
}

struct R4Args {
    int dmin = 4;
    int dmax = 12;
    int monomial_samples = 50;
    int random_samples = 5;
    int threads = 1;
};

int run_verify_r4(const Global& g, const R4Args& args)
{
    R4Options options;
    options.sampling = sampling_for(g);
    options.monomial_samples = args.monomial_samples;
    options.random_samples = args.random_samples;
    options.threads = args.threads;
    const auto report = verify_r4_theorem(args.dmin, args.dmax, options);
    std::ostringstream human;
    for (const auto& r : report.degrees) {
        std::size_t with_wlp = 0;
        for (const auto& s : r.samples) with_wlp += s.wlp_checked && s.has_wlp;
        human << "d=" << r.d << ": " << r.samples.size() << " samples, " << with_wlp << " with the WLP, "
              << (r.violations.empty() ? "ok" : "VIOLATIONS") << "\n";
        for (const auto& s : r.samples)
            if (s.kind == "special")
                human << "  (x^d, y^d, z^d, (xyz)^" << r.d / 3 << ") fails in degree(s) " << tuple(s.failure_degrees)
                      << "\n";
        for (const auto& v : r.violations) human << "  " << v << "\n";
    }
    human << (report.passed() ? "all assertions hold\n" : "assertions violated\n");
    Output(g).emit(to_json(report), human.str());
    if (!report.passed()) throw AnalysisFailure("r = 4 assertions violated");
    return 0;
}

int run_example(const Global& g, const std::string& name, int n, const std::string& partition)
{
    const auto parts = partition.empty() ? std::vector<std::vector<int>>{} : parse_partition(partition);
    if (name == "partition" && parts.empty()) throw ParseError("--partition is required for the partition example");
    const auto ideal = build_named_example(name, n, parts);
    const auto doc = document_for(ideal, conventional_variables(ideal.nvars()));
    Output(g).stream() << doc.to_json().dump(2) << '\n';
    return 0;
}

void add_input(CLI::App* cmd, Input& input)
{
    cmd->add_option("document", input.document, "ideal document (JSON)");
    cmd->add_option("--gen", input.generators, "generator expression (repeatable)");
    cmd->add_option("--vars", input.variables, "comma-separated variable names for --gen");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Weak Lefschetz Property, Togliatti systems and their certificates"};
    app.require_subcommand(1);
    app.fallthrough();
    Global g;
    std::uint64_t seed = 0;
    int trials = 3;
    auto* seed_opt = app.add_option("--seed", seed, "random seed (default 0, or LEFSCHETZ_SEED)");
    auto* trials_opt = app.add_option("--trials", trials, "random trials per generic object (default 3)");
    app.add_flag("--json", g.json, "machine-readable output");
    app.add_option("--out", g.out, "write the report to a file");
    app.add_flag("--generic-l", g.generic_l, "use random linear forms even for monomial ideals");

    Input input;
    int order = 2;
    bool as_system = false;
    ClassifyArgs classify_args;
    R4Args r4_args;
    std::string example_name;
    int example_n = 3;
    std::string partition;

    auto* wlp = app.add_subcommand("wlp", "decide the WLP degree by degree");
    add_input(wlp, input);
    auto* togliatti = app.add_subcommand("togliatti", "compare the three Togliatti conditions");
    add_input(togliatti, input);
    auto* osculate = app.add_subcommand("osculate", "osculating-space dimension of the inverse system");
    add_input(osculate, input);
    osculate->add_option("--order", order, "osculating order s")->check(CLI::PositiveNumber);
    osculate->add_flag("--system", as_system, "treat the generators as the linear system itself");
    auto* apolar = app.add_subcommand("apolar", "basis of the inverse system");
    add_input(apolar, input);
    auto* polytope = app.add_subcommand("polytope", "lattice polytope of the inverse system");
    add_input(polytope, input);
    polytope->add_flag("--system", as_system, "use the generators' exponents instead");
    auto* classify = app.add_subcommand("classify", "enumerate monomial Togliatti systems of cubics");
    classify->add_option("--n", classify_args.n, "projective dimension n")->check(CLI::Range(2, 6));
    classify->add_option("--max-extra", classify_args.max_extra, "cap on extra generators");
    classify->add_option("--cache", classify_args.cache, "JSON-lines cache file");
    classify->add_flag("--resume", classify_args.resume, "reuse records from the cache");
    classify->add_option("--threads", classify_args.threads, "worker threads")->check(CLI::PositiveNumber);
    auto* splitting = app.add_subcommand("splitting", "generic splitting type of the syzygy bundle");
    add_input(splitting, input);
    auto* r4 = app.add_subcommand("verify-r4", "check the r = 4 statements over a degree range");
    r4->add_option("--dmin", r4_args.dmin, "smallest degree")->check(CLI::Range(4, 40));
    r4->add_option("--dmax", r4_args.dmax, "largest degree")->check(CLI::Range(4, 40));
    r4->add_option("--monomial-samples", r4_args.monomial_samples, "monomial samples per degree");
    r4->add_option("--random-samples", r4_args.random_samples, "random samples per degree");
    r4->add_option("--threads", r4_args.threads, "worker threads")->check(CLI::PositiveNumber);
    auto* example = app.add_subcommand("example", "print a named example as an ideal document");
    example->add_option("--name", example_name, "example name")->required()->check(CLI::IsMember(named_examples()));
    example->add_option("--n", example_n, "projective dimension for the families");
    example->add_option("--partition", partition, "parts such as 0,1|2|3");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }
    if (seed_opt->count()) g.seed = seed;
    if (trials_opt->count()) g.trials = trials;

    try {
        if (wlp->parsed()) return run_wlp(g, input);
        if (togliatti->parsed()) return run_togliatti(g, input);
        if (osculate->parsed()) return run_osculate(g, input, order, as_system);
        if (apolar->parsed()) return run_apolar(g, input);
        if (polytope->parsed()) return run_polytope(g, input, as_system);
        if (classify->parsed()) return run_classify(g, classify_args);
        if (splitting->parsed()) return run_splitting(g, input);
        if (r4->parsed()) return run_verify_r4(g, r4_args);
        if (example->parsed()) return run_example(g, example_name, example_n, partition);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NotArtinianError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAnalysis;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAnalysis;
    }
    return kExitUsage;
}
