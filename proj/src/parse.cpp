#include <lefschetz/parse.hpp>

#include <lefschetz/errors.hpp>

#include <algorithm>
#include <cctype>
#include <regex>
#include <set>

namespace lefschetz {

namespace {

class Parser {
public:
    Parser(std::string_view source, std::span<const std::string> variables)
        : src_(source), vars_(variables.begin(), variables.end())
    {
    }

    Form run(std::optional<int> expected)
    {
        Form out;
        std::optional<int> degree = expected;
        bool first = true;
        skip();
        if (at_end()) fail("empty polynomial");
        while (true) {
            int sign = 1;
            skip();
            if (!first || peek() == '+' || peek() == '-') {
                if (peek() == '+' || peek() == '-') {
                    sign = peek() == '-' ? -1 : 1;
                    ++pos_;
                } else {
                    fail("expected '+' or '-'");
                }
            }
            first = false;
            skip();
            const std::size_t term_start = pos_;
            auto [coefficient, exponents] = term();
            coefficient *= sign;
            int term_degree = 0;
            for (int e : exponents) term_degree += e;
            if (!degree) degree = term_degree;
            if (term_degree != *degree) {
                pos_ = term_start;
                fail(expected ? "term of degree " + std::to_string(term_degree) + ", expected " +
                                    std::to_string(*expected)
                              : "polynomial is not homogeneous");
            }
            if (out.nvars() == 0) out = Form(vars_.size(), *degree);
            out.add_term(ExponentVector(exponents), coefficient);
            skip();
            if (at_end()) break;
        }
        if (out.nvars() == 0) out = Form(vars_.size(), degree.value_or(0));
        return out;
    }

private:
    std::pair<Rational, std::vector<int>> term()
    {
        skip();
        Rational coefficient = 1;
        std::vector<int> exponents(vars_.size(), 0);
        bool has_coefficient = false;
        bool has_variable = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Integer num(digits());
            Integer den = 1;
            skip();
            if (peek() == '/') {
                ++pos_;
                skip();
                if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
                const std::size_t at = pos_;
                den = Integer(digits());
                if (den == 0) {
                    pos_ = at;
                    fail("zero denominator");
                }
            }
            coefficient = Rational(num, den);
            coefficient.canonicalize();
            has_coefficient = true;
        }
        while (true) {
            skip();
            const std::size_t before = pos_;
            if (peek() == '*') {
                ++pos_;
                skip();
                if (!is_identifier_start(peek())) fail("expected a variable after '*'");
            }
            if (!is_identifier_start(peek())) {
                pos_ = before;
                break;
            }
            const std::size_t at = pos_;
            const std::string name = identifier();
            const auto indices = split_identifier(name);
            if (indices.empty()) {
                pos_ = at;
                fail("unknown variable '" + name + "'");
            }
            int power = 1;
            skip();
            if (peek() == '^') {
                ++pos_;
                skip();
                if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
                const std::string text = digits();
                if (text.size() > 6) fail("exponent too large");
                power = std::stoi(text);
            }
            for (std::size_t i = 0; i + 1 < indices.size(); ++i) exponents[indices[i]] += 1;
            const std::size_t index = indices.back();
            exponents[index] += power;
            has_variable = true;
        }
        if (!has_coefficient && !has_variable) fail("expected a term");
        return {coefficient, exponents};
    }

    // Whole name if declared, else the greedy longest-prefix split (xyz -> x, y, z).
    std::vector<std::size_t> split_identifier(const std::string& name) const
    {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return {i};
        std::vector<std::size_t> out;
        std::size_t at = 0;
        while (at < name.size()) {
            std::size_t best = vars_.size();
            for (std::size_t i = 0; i < vars_.size(); ++i)
                if (name.compare(at, vars_[i].size(), vars_[i]) == 0 &&
                    (best == vars_.size() || vars_[i].size() > vars_[best].size()))
                    best = i;
            if (best == vars_.size()) return {};
            out.push_back(best);
            at += vars_[best].size();
        }
        return out;
    }

    static bool is_identifier_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

    std::string identifier()
    {
        const std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
        return std::string(src_.substr(start, pos_ - start));
    }

    std::string digits()
    {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        return std::string(src_.substr(start, pos_ - start));
    }

    void skip()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool at_end() const { return pos_ >= src_.size(); }
    char peek() const { return at_end() ? '\0' : src_[pos_]; }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

    std::string_view src_;
    std::vector<std::string> vars_;
    std::size_t pos_ = 0;
};

}  // namespace

Form parse_polynomial(std::string_view source, std::span<const std::string> variables,
                      std::optional<int> expected_degree)
{
    if (variables.empty()) throw PreconditionError("no variables declared");
    std::set<std::string> seen;
    for (const auto& v : variables)
        if (!seen.insert(v).second) throw PreconditionError("duplicate variable '" + v + "'");
    return Parser(source, variables).run(expected_degree);
}

IdealDocument IdealDocument::from_json(const nlohmann::json& j)
{
    IdealDocument doc;
    try {
        doc.variables = j.at("variables").get<std::vector<std::string>>();
        doc.degree = j.at("degree").get<int>();
        doc.generators = j.at("generators").get<std::vector<std::string>>();
        if (j.contains("seed")) doc.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("trials")) doc.trials = j.at("trials").get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed ideal document: ") + e.what());
    }
    std::set<std::string> seen;
    for (const auto& v : doc.variables)
        if (!seen.insert(v).second) throw ParseError("duplicate variable '" + v + "'");
    if (doc.variables.size() < 2) throw ParseError("an ideal document needs at least two variables");
    return doc;
}

nlohmann::json IdealDocument::to_json() const
{
    nlohmann::json j = {{"variables", variables}, {"degree", degree}, {"generators", generators}};
    if (seed) j["seed"] = *seed;
    if (trials) j["trials"] = *trials;
    return j;
}

std::vector<Form> IdealDocument::forms() const
{
    std::vector<Form> out;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        try {
            out.push_back(parse_polynomial(generators[i], variables, degree));
        } catch (const ParseError& e) {
            const std::string message = "generator " + std::to_string(i + 1) + ": " + e.detail();
            if (e.position()) throw ParseError(message, *e.position());
            throw ParseError(message);
        }
    }
    return out;
}

IdealSpec IdealDocument::ideal() const
{
    return IdealSpec(static_cast<int>(variables.size()) - 1, degree, forms());
}

IdealDocument document_for(const IdealSpec& ideal, const std::vector<std::string>& variables)
{
    IdealDocument doc;
    doc.variables = variables;
    doc.degree = ideal.degree();
    for (const Form& f : ideal.generators()) doc.generators.push_back(to_string(f, variables));
    return doc;
}

std::vector<std::string> infer_variables(const std::vector<std::string>& generators)
{
    const std::regex identifier("[A-Za-z_][A-Za-z0-9_]*");
    const std::regex indexed("x([0-9]+)");
    int top = -1;
    bool all_indexed = true;
    for (const auto& g : generators)
        for (auto it = std::sregex_iterator(g.begin(), g.end(), identifier); it != std::sregex_iterator(); ++it) {
            std::smatch m;
            const std::string name = it->str();
            if (std::regex_match(name, m, indexed))
                top = std::max(top, std::stoi(m[1].str()));
            else
                all_indexed = false;
        }
    if (all_indexed && top >= 1) return default_variables(static_cast<std::size_t>(top) + 1);
    return {"x", "y", "z"};
}

std::vector<std::string> conventional_variables(std::size_t nvars)
{
    if (nvars == 3) return {"x", "y", "z"};
    if (nvars == 4) return {"a", "b", "c", "d"};
    return default_variables(nvars);
}

}  // namespace lefschetz
