#ifndef LEFSCHETZ_PARSE_HPP
#define LEFSCHETZ_PARSE_HPP

#include <lefschetz/form.hpp>
#include <lefschetz/wlp.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lefschetz {

/// Parse a homogeneous polynomial.
///
///   expr  := ['+'|'-'] term (('+'|'-') term)*
///   term  := coeff? ('*'? var ('^' nat)?)*
///   coeff := integer | integer '/' positive-integer
///
/// A name that is not declared is split into declared names when possible,
/// so xyz reads as x*y*z. Whitespace is insignificant. Throws ParseError (with a 1-based column) on
/// syntax errors, unknown variables, and inhomogeneous input. When
/// `expected_degree` is given every term must have that degree.
Form parse_polynomial(std::string_view source, std::span<const std::string> variables,
                      std::optional<int> expected_degree = std::nullopt);

/// Ideal document: {"variables": [...], "degree": d, "generators": ["expr", ...]}
/// with optional "seed" and "trials".
struct IdealDocument {
    std::vector<std::string> variables;
    int degree = 0;
    std::vector<std::string> generators;
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;

    static IdealDocument from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    std::vector<Form> forms() const;
    IdealSpec ideal() const;
};

/// Document with canonical printed generators for an ideal.
IdealDocument document_for(const IdealSpec& ideal, const std::vector<std::string>& variables);

/// Variables for bare generator strings: x0..xk when every identifier has that
/// shape, otherwise x, y, z.
std::vector<std::string> infer_variables(const std::vector<std::string>& generators);

/// Conventional names: x, y, z for three variables, a, b, c, d for four, x0.. otherwise.
std::vector<std::string> conventional_variables(std::size_t nvars);

}  // namespace lefschetz

#endif  // LEFSCHETZ_PARSE_HPP
