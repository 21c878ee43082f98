#include <lefschetz/apolarity.hpp>
#include <lefschetz/bundles.hpp>
#include <lefschetz/classify.hpp>
#include <lefschetz/errors.hpp>
#include <lefschetz/linalg.hpp>
#include <lefschetz/osculating.hpp>
#include <lefschetz/parse.hpp>
#include <lefschetz/polytope.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace lefschetz;

namespace {

// Parsed document together with the validated ideal.
struct Ideal {
    IdealDocument doc;
    IdealSpec spec;

    explicit Ideal(IdealDocument d) : doc(std::move(d)), spec(doc.ideal()) {}

    static Ideal from_strings(const std::vector<std::string>& generators,
                              const std::optional<std::vector<std::string>>& variables)
    {
        if (generators.empty()) throw ParseError("no generators");
        IdealDocument doc;
        doc.variables = variables ? *variables : infer_variables(generators);
        doc.generators = generators;
        doc.degree = parse_polynomial(generators.front(), doc.variables).degree();
        return Ideal(std::move(doc));
    }

    std::vector<std::string> names(const std::vector<Form>& forms) const
    {
        std::vector<std::string> out;
        for (const auto& f : forms) out.push_back(to_string(f, doc.variables));
        return out;
    }
};

py::object to_python(const nlohmann::json& j)
{
    return py::module_::import("json").attr("loads")(j.dump());
}

SamplingOptions sampling(std::uint64_t seed, int trials)
{
    if (trials < 1) throw PreconditionError("trials must be at least 1");
    return SamplingOptions{seed, trials};
}

WlpOptions wlp_options(std::uint64_t seed, int trials, bool generic_l = false)
{
    WlpOptions o;
    o.sampling = sampling(seed, trials);
    o.generic_l = generic_l;
    return o;
}

std::vector<ExponentVector> apolar_points(const Ideal& I)
{
    if (!I.spec.is_monomial()) throw PreconditionError("the ideal is not monomial");
    std::vector<ExponentVector> points;
    for (const auto& f : apolar_complement(I.spec).basis) points.push_back(f.terms().begin()->first);
    return points;
}

}  // namespace

PYBIND11_MODULE(_lefschetz, m)
{
    m.doc() = "Weak Lefschetz property, Togliatti systems and their toric geometry";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<NotArtinianError>(m, "NotArtinianError", PyExc_RuntimeError);
    py::register_exception<DegenerateHullError>(m, "DegenerateHullError", PyExc_RuntimeError);
    py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

    py::class_<Ideal>(m, "Ideal")
        .def(py::init(&Ideal::from_strings), py::arg("generators"), py::arg("variables") = py::none())
        .def_static(
            "from_json", [](const std::string& text) { return Ideal(IdealDocument::from_json(nlohmann::json::parse(text))); },
            py::arg("text"))
        .def_static(
            "example", [](const std::string& name, int n) {
                const auto spec = build_named_example(name, n);
                return Ideal(document_for(spec, conventional_variables(spec.nvars())));
            },
            py::arg("name"), py::arg("n") = 3)
        .def("to_json", [](const Ideal& I) { return I.doc.to_json().dump(); })
        .def_property_readonly("n", [](const Ideal& I) { return I.spec.n(); })
        .def_property_readonly("degree", [](const Ideal& I) { return I.spec.degree(); })
        .def_property_readonly("r", [](const Ideal& I) { return I.spec.r(); })
        .def_property_readonly("variables", [](const Ideal& I) { return I.doc.variables; })
        .def_property_readonly("generators", [](const Ideal& I) { return I.names(I.spec.generators()); })
        .def_property_readonly("is_monomial", [](const Ideal& I) { return I.spec.is_monomial(); })
        .def("__repr__", [](const Ideal& I) {
            std::string s = "Ideal(";
            const auto g = I.names(I.spec.generators());
            for (std::size_t i = 0; i < g.size(); ++i) s += (i ? ", " : "") + g[i];
            return s + ")";
        });

    m.def("is_artinian", [](const Ideal& I) { return is_artinian(I.spec); });
    m.def("h_vector", [](const Ideal& I) { return h_vector(I.spec); });

    m.def(
        "has_wlp",
        [](const Ideal& I, std::uint64_t seed, int trials, bool generic_l) {
            const auto v = has_wlp(I.spec, wlp_options(seed, trials, generic_l));
            py::dict out;
            out["has_wlp"] = v.has_wlp;
            out["failure_degrees"] = v.failure_degrees;
            out["h_vector"] = v.h_vector;
            py::list ranks;
            for (const auto& r : v.reports) ranks.append(py::make_tuple(r.degree, r.dim_source, r.dim_target, r.rank));
            out["ranks"] = ranks;
            return out;
        },
        py::arg("ideal"), py::arg("seed") = 0, py::arg("trials") = 3, py::arg("generic_l") = false);

    m.def(
        "fails_in_degree_dminus1",
        [](const Ideal& I, std::uint64_t seed, int trials) { return fails_in_degree_dminus1(I.spec, wlp_options(seed, trials)); },
        py::arg("ideal"), py::arg("seed") = 0, py::arg("trials") = 3);
    m.def(
        "is_togliatti", [](const Ideal& I, std::uint64_t seed, int trials) { return is_togliatti(I.spec, wlp_options(seed, trials)); },
        py::arg("ideal"), py::arg("seed") = 0, py::arg("trials") = 3);

    m.def("apolar_system", [](const Ideal& I) { return I.names(apolar_complement(I.spec).basis); });

    m.def(
        "osculating_dimension",
        [](const Ideal& I, int order, std::uint64_t seed, int trials) {
            if (order < 1) throw PreconditionError("order must be positive");
            const auto system = LinearSystem::from_apolar(apolar_complement(I.spec));
            const auto r = osculating_dimension(system, order, sampling(seed, trials));
            py::dict out;
            out["order"] = r.order;
            out["expected_dim"] = r.expected_dim;
            out["actual_dim"] = r.actual_dim;
            out["delta"] = r.delta;
            return out;
        },
        py::arg("ideal"), py::arg("order"), py::arg("seed") = 0, py::arg("trials") = 3);

    m.def(
        "splitting_type",
        [](const Ideal& I, std::uint64_t seed, int trials) { return splitting_type(I.spec, sampling(seed, trials)).values; },
        py::arg("ideal"), py::arg("seed") = 0, py::arg("trials") = 3);

    m.def("polytope", [](const Ideal& I) { return to_python(polytope_report(build_polytope(apolar_points(I)))); });

    m.def("perkinson_quadric", [](const Ideal& I) -> std::optional<std::string> {
        const auto q = perkinson_quadric(apolar_points(I));
        if (!q) return std::nullopt;
        return to_string(*q, conventional_variables(I.spec.nvars()));
    });

    m.def(
        "certify", [](const Ideal& I, std::uint64_t seed) { return to_python(to_json(certify(I.spec, sampling(seed, 3)))); },
        py::arg("ideal"), py::arg("seed") = 0);

    m.def(
        "classify",
        [](int n, std::optional<int> max_extra, int threads, std::uint64_t seed) {
            ClassifyOptions options;
            options.max_extra = max_extra;
            options.threads = threads;
            options.sampling.seed = seed;
            ClassificationResult result;
            {
                py::gil_scoped_release release;
                result = enumerate_cubic_togliatti(n, options);
            }
            return to_python(to_json(result));
        },
        py::arg("n"), py::arg("max_extra") = py::none(), py::arg("threads") = 1, py::arg("seed") = 0);

    m.def("named_examples", &named_examples);

    // Entries may be ints, Fractions or strings such as "3/4".
    m.def("rank", [](const std::vector<std::vector<py::object>>& rows) {
        const std::size_t cols = rows.empty() ? 0 : rows.front().size();
        RationalMatrix a(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw PreconditionError("ragged matrix");
            for (std::size_t j = 0; j < cols; ++j) {
                const std::string text = py::str(rows[i][j]);
                Rational q;
                if (q.set_str(text, 10) != 0 || q.get_den() == 0) throw ParseError("not a rational: " + text);
                q.canonicalize();
                a(i, j) = q;
            }
        }
        return rank_exact(clear_denominators(a));
    });
}
