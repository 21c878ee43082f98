#include <lefschetz/apolarity.hpp>

#include <lefschetz/errors.hpp>
#include <lefschetz/linalg.hpp>

namespace lefschetz {

namespace {

// Product over coordinates of b_i! / (b_i - a_i)!.
Integer falling_factorials(const ExponentVector& top, const ExponentVector& lower)
{
    Integer out = 1;
    for (std::size_t i = 0; i < top.size(); ++i)
        for (int k = 0; k < lower[i]; ++k) out *= top[i] - k;
    return out;
}

Integer multi_factorial(const ExponentVector& e)
{
    Integer out = 1;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 2; k <= e[i]; ++k) out *= k;
    return out;
}

}  // namespace

Form contract(const Form& u, const Form& f)
{
    if (u.nvars() != f.nvars()) throw PreconditionError("contraction needs forms in the same number of variables");
    if (u.degree() > f.degree()) throw PreconditionError("contraction degree exceeds the form's degree");
    Form out(f.nvars(), f.degree() - u.degree());
    for (const auto& [a, cu] : u.terms())
        for (const auto& [b, cf] : f.terms()) {
            if (!a.divides(b)) continue;
            out.add_term(b - a, cu * cf * Rational(falling_factorials(b, a)));
        }
    return out;
}

ApolarSystem apolar_complement(const IdealSpec& ideal)
{
    ApolarSystem system;
    system.n = ideal.n();
    system.d = ideal.degree();
    const auto basis = monomial_basis(ideal.n(), ideal.degree());
    if (ideal.is_monomial()) {
        system.monomial = true;
        for (const auto& e : basis)
            if (!ideal.has_generator(e)) system.basis.push_back(Form::monomial(e));
        return system;
    }
    RationalMatrix pairing(ideal.r(), basis.size());
    for (std::size_t i = 0; i < ideal.r(); ++i)
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const Rational c = ideal.generators()[i].coefficient(basis[k]);
            if (c != 0) pairing(i, k) = c * Rational(multi_factorial(basis[k]));
        }
    for (const auto& v : kernel_basis(pairing)) {
        Form g(ideal.nvars(), ideal.degree());
        for (std::size_t k = 0; k < v.size(); ++k) g.add_term(basis[k], v[k]);
        system.basis.push_back(primitive_part(g));
    }
    return system;
}

std::int64_t dual_map_rank(const ApolarSystem& system, const Form& linear)
{
    if (linear.degree() != 1) throw PreconditionError("dual map needs a linear form");
    if (system.basis.empty()) return 0;
    std::vector<Form> images;
    images.reserve(system.basis.size());
    for (const Form& g : system.basis) images.push_back(contract(linear, g));
    return static_cast<std::int64_t>(rank_of_span(images));
}

std::int64_t dual_map_rank(const IdealSpec& ideal, const Form& linear)
{
    return dual_map_rank(apolar_complement(ideal), linear);
}

}  // namespace lefschetz
