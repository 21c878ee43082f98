#include <lefschetz/classify.hpp>

#include <lefschetz/apolarity.hpp>
#include <lefschetz/errors.hpp>
#include <lefschetz/osculating.hpp>
#include <lefschetz/polytope.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

namespace lefschetz {

CanonicalForm canonicalize(std::span<const ExponentVector> monomials)
{
    CanonicalForm out;
    if (monomials.empty()) {
        out.orbit_size = 1;
        return out;
    }
    const std::size_t nvars = monomials.front().size();
    std::vector<std::size_t> perm(nvars);
    std::iota(perm.begin(), perm.end(), 0);
    std::set<MonomialSet> images;
    do {
        MonomialSet image;
        image.reserve(monomials.size());
        for (const auto& e : monomials) image.push_back(e.permuted(perm));
        std::sort(image.begin(), image.end());
        images.insert(std::move(image));
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.monomials = *images.begin();
    out.orbit_size = images.size();
    return out;
}

MonomialSet canonical_form(std::span<const ExponentVector> monomials) { return canonicalize(monomials).monomials; }

std::string to_string(ToricVerdict verdict)
{
    switch (verdict) {
    case ToricVerdict::smooth:
        return "smooth";
    case ToricVerdict::quasi_smooth:
        return "quasi-smooth";
    case ToricVerdict::singular:
        return "singular";
    case ToricVerdict::degenerate:
        break;
    }
    return "degenerate";
}

namespace {

ExponentVector cube(std::size_t nvars, std::size_t i) { return ExponentVector::unit(nvars, i, 3); }

ExponentVector product(std::size_t nvars, std::initializer_list<std::size_t> indices)
{
    std::vector<int> e(nvars, 0);
    for (std::size_t i : indices) ++e[i];
    return ExponentVector(e);
}

bool is_pure_power(const ExponentVector& e) { return e.support().size() == 1; }

MonomialSet complement(int n, int d, const MonomialSet& monomials)
{
    const std::set<ExponentVector> present(monomials.begin(), monomials.end());
    MonomialSet out;
    for (const auto& e : monomial_basis(n, d))
        if (!present.count(e)) out.push_back(e);
    return out;
}

// Apolar systems of the n = 3 reference list, in a, b, c, d.
MonomialSet parse_apolar(const std::vector<std::string>& words)
{
    MonomialSet out;
    for (const auto& w : words) {
        std::vector<int> e(4, 0);
        for (std::size_t k = 0; k < w.size(); ++k) {
            const auto var = static_cast<std::size_t>(w[k] - 'a');
            if (k + 1 < w.size() && w[k + 1] == '2') {
                e[var] += 2;
                ++k;
            } else {
                ++e[var];
            }
        }
        out.emplace_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

const std::map<std::string, MonomialSet>& reference_apolar()
{
    static const std::map<std::string, MonomialSet> table = {
        {"case-1", parse_apolar({"a2b", "a2c", "a2d", "ab2", "ac2", "ad2", "b2c", "b2d", "bc2", "bd2", "c2d", "cd2"})},
        {"case-2", parse_apolar({"abc", "abd", "a2c", "a2d", "ac2", "ad2", "b2c", "b2d", "bc2", "bd2", "c2d", "cd2"})},
        {"case-3", parse_apolar({"abc", "abd", "acd", "bcd", "a2c", "ac2", "a2d", "ad2", "b2c", "bc2", "b2d", "bd2"})},
        {"case-4", parse_apolar({"acd", "bcd", "a2c", "a2d", "ac2", "ad2", "b2c", "b2d", "bc2", "bd2", "c2d", "cd2"})},
    };
    return table;
}

IdealSpec ideal_from_apolar(const MonomialSet& apolar) { return IdealSpec::from_monomials(3, 3, complement(3, 3, apolar)); }

// Canonical generator sets of the named n = 3 systems, for labelling records.
const std::vector<std::pair<MonomialSet, std::string>>& reference_labels()
{
    static const std::vector<std::pair<MonomialSet, std::string>> labels = [] {
        std::vector<std::pair<MonomialSet, std::string>> out;
        for (const auto& [name, apolar] : reference_apolar())
            out.emplace_back(canonical_form(complement(3, 3, apolar)), name);
        out.emplace_back(canonical_form(build_named_example("thirteen", 3).monomials()), "thirteen");
        for (const auto& member : projection_family())
            out.emplace_back(canonical_form(member.ideal.monomials()), "case-4'");
        return out;
    }();
    return labels;
}

std::string label_for(int n, const MonomialSet& canonical)
{
    if (n == 3) {
        for (const auto& [set, name] : reference_labels())
            if (set == canonical) return name;
        return "";
    }
    if (n >= 2) {
        const std::vector<std::string> names = n == 2 ? std::vector<std::string>{"togliatti"}
                                                      : std::vector<std::string>{"truncated-simplex",
                                                                                 "ilardi-counterexample",
                                                                                 "second-example"};
        for (const auto& name : names)
            if (canonical_form(build_named_example(name, n).monomials()) == canonical) return name;
    }
    return "";
}

template <class F>
void parallel_for(std::size_t count, int threads, F&& body)
{
    const auto workers = static_cast<std::size_t>(std::max(1, threads));
    if (workers == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < std::min(workers, count); ++w)
        pool.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

nlohmann::json exponents_json(const MonomialSet& set)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : set) out.push_back(e.entries());
    return out;
}

MonomialSet exponents_from_json(const nlohmann::json& j)
{
    MonomialSet out;
    for (const auto& e : j) out.emplace_back(e.get<std::vector<int>>());
    return out;
}

nlohmann::json cache_header(int n, int max_extra)
{
    return {{"schema", kCacheSchemaVersion}, {"kind", "cubic-togliatti"}, {"n", n}, {"max_extra", max_extra}};
}

}  // namespace

ClassificationRecord certify(const IdealSpec& ideal, const SamplingOptions& sampling)
{
    if (!ideal.is_monomial() || ideal.degree() != 3) throw PreconditionError("certification needs a monomial cubic ideal");
    ClassificationRecord record;
    record.n = ideal.n();
    record.d = 3;
    record.generators = ideal.monomials();
    for (const auto& e : record.generators)
        if (!is_pure_power(e)) record.extra.push_back(e);
    record.apolar = complement(ideal.n(), 3, record.generators);

    WlpOptions options;
    options.sampling = sampling;
    record.togliatti = is_togliatti(ideal, options);
    if (is_artinian(ideal)) record.wlp_failure_degrees = has_wlp(ideal, options).failure_degrees;

    if (!record.apolar.empty() && ideal.n() >= 1) {
        const auto system = LinearSystem::from_monomials(ideal.n(), 3, record.apolar);
        record.laplace_equations = laplace_count(system, 2, sampling).equations;
    }
    record.trivial_a = trivial_type_a(ideal);
    record.trivial_b = trivial_type_b_test(ideal, sampling).full;

    if (!record.apolar.empty()) {
        const auto polytope = build_polytope(record.apolar);
        if (polytope.full_dimensional()) {
            const auto diagnosis = diagnose_smoothness(polytope);
            record.verdict = diagnosis.smooth   ? ToricVerdict::smooth
                             : diagnosis.simple ? ToricVerdict::quasi_smooth
                                                : ToricVerdict::singular;
            record.edge_rule_fired = diagnosis.edge_rule_fired();
            record.toric_degree = normalized_volume(polytope);
        }
        record.quadric = perkinson_quadric(record.apolar);
    }
    if (record.togliatti && !record.quadric)
        throw ConsistencyError("Togliatti system without a lattice quadric");
    return record;
}

ClassificationResult enumerate_cubic_togliatti(int n, const ClassifyOptions& options)
{
    if (n < 2) throw PreconditionError("classification needs n >= 2");
    const int bound_extra = static_cast<int>(binomial(n + 2, n - 1)) - (n + 1);
    const int max_extra = std::min(bound_extra, options.max_extra.value_or(bound_extra));

    MonomialSet cubes;
    MonomialSet mixed;
    for (const auto& e : monomial_basis(n, 3)) (is_pure_power(e) ? cubes : mixed).push_back(e);

    std::vector<std::vector<std::size_t>> candidates;
    for (int j = 1; j <= max_extra && j <= static_cast<int>(mixed.size()); ++j) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(j));
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            candidates.push_back(idx);
            std::size_t i = idx.size();
            while (i > 0 && idx[i - 1] == mixed.size() - idx.size() + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t k = i; k < idx.size(); ++k) idx[k] = idx[k - 1] + 1;
        }
    }

    auto generators_of = [&](const std::vector<std::size_t>& idx) {
        MonomialSet gens = cubes;
        for (std::size_t i : idx) gens.push_back(mixed[i]);
        std::sort(gens.begin(), gens.end());
        return gens;
    };

    WlpOptions wlp_options;
    wlp_options.sampling = options.sampling;
    std::vector<char> hit(candidates.size(), 0);
    parallel_for(candidates.size(), options.threads, [&](std::size_t c) {
        const auto ideal = IdealSpec::from_monomials(n, 3, generators_of(candidates[c]));
        hit[c] = is_togliatti(ideal, wlp_options) ? 1 : 0;
    });

    ClassificationResult result;
    result.n = n;
    result.candidates = candidates.size();
    std::map<MonomialSet, std::size_t> orbits;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        if (!hit[c]) continue;
        ++result.raw_hits;
        const auto gens = generators_of(candidates[c]);
        const auto canonical = canonical_form(gens);
        if (canonical == gens) orbits.emplace(canonical, 0);
    }
    std::vector<MonomialSet> representatives;
    for (const auto& [set, unused] : orbits) representatives.push_back(set);

    std::map<MonomialSet, ClassificationRecord> cached;
    if (options.cache && options.resume && std::filesystem::exists(*options.cache)) {
        std::ifstream in(*options.cache);
        std::string line;
        if (std::getline(in, line)) {
            const auto header = nlohmann::json::parse(line);
            if (header != cache_header(n, max_extra))
                throw PreconditionError("cache was written for a different run: " + line);
        }
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            try {
                auto record = record_from_json(nlohmann::json::parse(line));
                cached.emplace(record.generators, std::move(record));
            } catch (const nlohmann::json::exception&) {
                // A partially written trailing line from an interrupted run.
            }
        }
    }
    std::ofstream cache_out;
    std::mutex cache_mutex;
    if (options.cache) {
        const bool append = options.resume && std::filesystem::exists(*options.cache) && !cached.empty();
        cache_out.open(*options.cache, append ? std::ios::app : std::ios::trunc);
        if (!cache_out) throw PreconditionError("cannot write cache " + options.cache->string());
        if (!append) cache_out << cache_header(n, max_extra).dump() << '\n' << std::flush;
    }

    result.records.resize(representatives.size());
    std::atomic<std::size_t> reused{0};
    parallel_for(representatives.size(), options.threads, [&](std::size_t i) {
        const auto& gens = representatives[i];
        ClassificationRecord record;
        if (auto it = cached.find(gens); it != cached.end()) {
            record = it->second;
            ++reused;
        } else {
            record = certify(IdealSpec::from_monomials(n, 3, gens), options.sampling);
            record.orbit_size = canonicalize(gens).orbit_size;
            record.label = label_for(n, gens);
            if (cache_out.is_open()) {
                std::lock_guard lock(cache_mutex);
                cache_out << to_json(record).dump() << '\n' << std::flush;
            }
        }
        result.records[i] = std::move(record);
    });
    result.reused = reused.load();

    std::stable_sort(result.records.begin(), result.records.end(),
                     [](const ClassificationRecord& a, const ClassificationRecord& b) {
                         if (a.extra.size() != b.extra.size()) return a.extra.size() < b.extra.size();
                         return a.generators < b.generators;
                     });
    std::size_t orbit_total = 0;
    for (const auto& r : result.records) orbit_total += r.orbit_size;
    if (orbit_total != result.raw_hits) throw ConsistencyError("orbit sizes do not add up to the raw hit count");
    return result;
}

IdealSpec partition_example(int n, const std::vector<std::vector<int>>& parts)
{
    if (n < 2) throw PreconditionError("partition construction needs n >= 2");
    const auto nvars = static_cast<std::size_t>(n) + 1;
    std::vector<int> part_of(nvars, -1);
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p].empty()) throw PreconditionError("empty part in partition");
        if (static_cast<int>(parts[p].size()) > n - 1)
            throw PreconditionError("each part holds at most n-1 points");
        for (int i : parts[p]) {
            if (i < 0 || i > n) throw PreconditionError("partition index out of range");
            if (part_of[static_cast<std::size_t>(i)] != -1) throw PreconditionError("index in two parts");
            part_of[static_cast<std::size_t>(i)] = static_cast<int>(p);
        }
    }
    if (std::count(part_of.begin(), part_of.end(), -1) != 0) throw PreconditionError("partition misses an index");

    MonomialSet gens;
    for (const auto& e : monomial_basis(n, 3)) {
        std::set<int> touched;
        for (std::size_t i : e.support()) touched.insert(part_of[i]);
        const bool within_part = touched.size() == 1;
        const bool three_parts = touched.size() == 3 && e.support().size() == 3;
        if (within_part || three_parts) gens.push_back(e);
    }
    return IdealSpec::from_monomials(n, 3, gens);
}

std::vector<std::vector<int>> parse_partition(const std::string& text)
{
    std::vector<std::vector<int>> parts;
    std::stringstream outer(text);
    std::string chunk;
    while (std::getline(outer, chunk, '|')) {
        std::vector<int> part;
        std::stringstream inner(chunk);
        std::string token;
        while (std::getline(inner, token, ',')) {
            const auto first = token.find_first_not_of(" \t");
            if (first == std::string::npos) continue;
            std::size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(token.substr(first), &used);
            } catch (const std::exception&) {
                throw ParseError("bad partition index '" + token + "'");
            }
            if (token.find_first_not_of(" \t", first + used) != std::string::npos)
                throw ParseError("bad partition index '" + token + "'");
            part.push_back(value);
        }
        parts.push_back(std::move(part));
    }
    return parts;
}

std::vector<std::string> named_examples()
{
    return {"togliatti", "control", "truncated-simplex", "second-example", "ilardi-counterexample", "case-1",
            "case-2",    "case-3",  "case-4",            "thirteen",       "partition"};
}

IdealSpec build_named_example(const std::string& name, int n, const std::vector<std::vector<int>>& partition)
{
    if (name == "togliatti")
        return IdealSpec::from_monomials(2, 3, {cube(3, 0), cube(3, 1), cube(3, 2), product(3, {0, 1, 2})});
    if (name == "control")
        return IdealSpec::from_monomials(2, 3, {cube(3, 0), cube(3, 1), cube(3, 2), product(3, {0, 0, 1})});
    if (name.rfind("case-", 0) == 0) {
        const auto it = reference_apolar().find(name);
        if (it == reference_apolar().end()) throw PreconditionError("unknown example '" + name + "'");
        return ideal_from_apolar(it->second);
    }
    if (name == "thirteen")
        return IdealSpec::from_monomials(3, 3,
                                         {cube(4, 0), cube(4, 1), cube(4, 2), cube(4, 3), product(4, {0, 0, 1}),
                                          product(4, {0, 0, 2}), product(4, {0, 0, 3})});
    if (n < 2) throw PreconditionError("example needs n >= 2");
    if (name == "truncated-simplex") {
        std::vector<std::vector<int>> parts;
        for (int i = 0; i <= n; ++i) parts.push_back({i});
        return partition_example(n, parts);
    }
    if (name == "second-example") {
        if (n < 3) throw PreconditionError("second-example needs n >= 3");
        std::vector<std::vector<int>> parts = {{0, 1}};
        for (int i = 2; i <= n; ++i) parts.push_back({i});
        return partition_example(n, parts);
    }
    if (name == "ilardi-counterexample") {
        if (n < 3) throw PreconditionError("ilardi-counterexample needs n >= 3");
        std::vector<int> head(static_cast<std::size_t>(n - 1));
        std::iota(head.begin(), head.end(), 0);
        return partition_example(n, {head, {n - 1}, {n}});
    }
    if (name == "partition") return partition_example(n, partition);
    throw PreconditionError("unknown example '" + name + "'");
}

Form ilardi_quadric(int n)
{
    const auto nvars = static_cast<std::size_t>(n) + 1;
    Form q(nvars, 2);
    for (std::size_t i = 0; i < nvars; ++i) {
        q.add_term(ExponentVector::unit(nvars, i, 2), 2);
        for (std::size_t j = i + 1; j < nvars; ++j) {
            const long c = (static_cast<int>(j) <= n - 2) ? 4 : -5;
            q.add_term(product(nvars, {i, j}), c);
        }
    }
    return q;
}

std::vector<ProjectionMember> projection_family()
{
    const auto& table = reference_apolar();
    const std::vector<std::pair<std::string, std::vector<std::string>>> sources = {
        {"case-2", {"abc", "abd"}},
        {"case-3", {"abc", "abd", "acd", "bcd"}},
        {"case-4", {"acd", "bcd"}},
    };
    std::vector<ProjectionMember> out;
    for (const auto& [name, words] : sources) {
        const auto removable = parse_apolar(words);
        const MonomialSet& apolar = table.at(name);
        for (unsigned mask = 1; mask < (1u << removable.size()); ++mask) {
            MonomialSet removed;
            for (std::size_t k = 0; k < removable.size(); ++k)
                if (mask & (1u << k)) removed.push_back(removable[k]);
            MonomialSet kept;
            std::set_difference(apolar.begin(), apolar.end(), removed.begin(), removed.end(), std::back_inserter(kept));
            out.push_back(ProjectionMember{name, removed, ideal_from_apolar(kept)});
        }
    }
    return out;
}

nlohmann::json to_json(const ClassificationRecord& record)
{
    nlohmann::json quadric = nullptr;
    nlohmann::json quadric_terms = nullptr;
    if (record.quadric) {
        quadric = to_string(*record.quadric);
        quadric_terms = nlohmann::json::array();
        for (const auto& [e, c] : record.quadric->terms()) quadric_terms.push_back({e.entries(), c.get_str()});
    }
    return {{"schema", kCacheSchemaVersion},
            {"n", record.n},
            {"d", record.d},
            {"r", record.r()},
            {"generators", exponents_json(record.generators)},
            {"extra", exponents_json(record.extra)},
            {"apolar", exponents_json(record.apolar)},
            {"togliatti", record.togliatti},
            {"wlp_failure_degrees", record.wlp_failure_degrees},
            {"laplace_equations", record.laplace_equations},
            {"trivial_a", record.trivial_a ? nlohmann::json(record.trivial_a->entries()) : nlohmann::json()},
            {"trivial_b", record.trivial_b},
            {"trivial", record.trivial()},
            {"verdict", to_string(record.verdict)},
            {"smooth", record.smooth()},
            {"quasi_smooth", record.quasi_smooth()},
            {"edge_rule_fired", record.edge_rule_fired},
            {"toric_degree", record.toric_degree},
            {"quadric", quadric},
            {"quadric_terms", quadric_terms},
            {"orbit_size", record.orbit_size},
            {"label", record.label}};
}

ClassificationRecord record_from_json(const nlohmann::json& j)
{
    if (j.at("schema").get<int>() != kCacheSchemaVersion) throw PreconditionError("unsupported record schema");
    ClassificationRecord record;
    record.n = j.at("n").get<int>();
    record.d = j.at("d").get<int>();
    record.generators = exponents_from_json(j.at("generators"));
    record.extra = exponents_from_json(j.at("extra"));
    record.apolar = exponents_from_json(j.at("apolar"));
    record.togliatti = j.at("togliatti").get<bool>();
    record.wlp_failure_degrees = j.at("wlp_failure_degrees").get<std::vector<int>>();
    record.laplace_equations = j.at("laplace_equations").get<std::int64_t>();
    if (!j.at("trivial_a").is_null()) record.trivial_a = ExponentVector(j.at("trivial_a").get<std::vector<int>>());
    record.trivial_b = j.at("trivial_b").get<bool>();
    const auto verdict = j.at("verdict").get<std::string>();
    for (auto v : {ToricVerdict::smooth, ToricVerdict::quasi_smooth, ToricVerdict::singular, ToricVerdict::degenerate})
        if (to_string(v) == verdict) record.verdict = v;
    record.edge_rule_fired = j.at("edge_rule_fired").get<bool>();
    record.toric_degree = j.at("toric_degree").get<std::int64_t>();
    if (!j.at("quadric_terms").is_null()) {
        Form q(static_cast<std::size_t>(record.n) + 1, 2);
        for (const auto& term : j.at("quadric_terms"))
            q.add_term(ExponentVector(term.at(0).get<std::vector<int>>()), Rational(term.at(1).get<std::string>()));
        record.quadric = std::move(q);
    }
    record.orbit_size = j.at("orbit_size").get<std::size_t>();
    record.label = j.at("label").get<std::string>();
    return record;
}

nlohmann::json to_json(const ClassificationResult& result)
{
    nlohmann::json records = nlohmann::json::array();
    for (const auto& r : result.records) records.push_back(to_json(r));
    return {{"n", result.n},
            {"candidates", result.candidates},
            {"raw_hits", result.raw_hits},
            {"records", records}};
}

}  // namespace lefschetz
