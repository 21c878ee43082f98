#include <lefschetz/polytope.hpp>

#include <lefschetz/errors.hpp>
#include <lefschetz/linalg.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace lefschetz {

namespace {

long dot(const std::vector<long>& a, const LatticePoint& b)
{
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Fraction-free determinant of a small square integer matrix.
long determinant(std::vector<std::vector<long>> m)
{
    const std::size_t k = m.size();
    if (k == 0) return 1;
    long previous = 1;
    int sign = 1;
    for (std::size_t c = 0; c + 1 < k; ++c) {
        std::size_t pivot = c;
        while (pivot < k && m[pivot][c] == 0) ++pivot;
        if (pivot == k) return 0;
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < k; ++i) {
            for (std::size_t j = c + 1; j < k; ++j)
                m[i][j] = (m[c][c] * m[i][j] - m[i][c] * m[c][j]) / previous;
            m[i][c] = 0;
        }
        previous = m[c][c];
    }
    return sign * m[k - 1][k - 1];
}

std::size_t integer_rank(const std::vector<std::vector<long>>& rows, std::size_t cols)
{
    IntegerMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return rank_fraction_free(std::move(m));
}

std::size_t affine_rank(const std::vector<LatticePoint>& points, std::span<const std::size_t> subset, std::size_t dim)
{
    if (subset.size() <= 1) return 0;
    std::vector<std::vector<long>> diffs;
    for (std::size_t k = 1; k < subset.size(); ++k) {
        std::vector<long> d(dim);
        for (std::size_t c = 0; c < dim; ++c) d[c] = points[subset[k]][c] - points[subset[0]][c];
        diffs.push_back(std::move(d));
    }
    return integer_rank(diffs, dim);
}

std::vector<long> primitive(std::vector<long> v)
{
    long g = 0;
    for (long x : v) g = std::gcd(g, std::abs(x));
    if (g > 1)
        for (long& x : v) x /= g;
    return v;
}

// Normal of the hyperplane through m affinely independent points (generalized
// cross product of the m-1 difference vectors); zero if they are dependent.
std::vector<long> hyperplane_normal(const std::vector<LatticePoint>& points, std::span<const std::size_t> subset,
                                    std::size_t dim)
{
    std::vector<std::vector<long>> diffs;
    for (std::size_t k = 1; k < subset.size(); ++k) {
        std::vector<long> d(dim);
        for (std::size_t c = 0; c < dim; ++c) d[c] = points[subset[k]][c] - points[subset[0]][c];
        diffs.push_back(std::move(d));
    }
    std::vector<long> normal(dim);
    for (std::size_t col = 0; col < dim; ++col) {
        std::vector<std::vector<long>> minor;
        for (const auto& d : diffs) {
            std::vector<long> row;
            for (std::size_t c = 0; c < dim; ++c)
                if (c != col) row.push_back(d[c]);
            minor.push_back(std::move(row));
        }
        const long det = determinant(std::move(minor));
        normal[col] = (col % 2 == 0) ? det : -det;
    }
    return normal;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(std::span<const std::size_t>)>& visit)
{
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        visit(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

LatticePolytope::LatticePolytope(std::vector<LatticePoint> points) : points_(std::move(points))
{
    if (points_.empty()) throw PreconditionError("polytope needs at least one point");
    const std::size_t dim = points_.front().size();
    dim_ = static_cast<int>(dim);
    for (const auto& p : points_)
        if (p.size() != dim) throw PreconditionError("lattice points of different dimension");
    {
        std::set<LatticePoint> unique(points_.begin(), points_.end());
        if (unique.size() != points_.size()) throw PreconditionError("repeated marked point");
    }

    std::vector<std::size_t> all(points_.size());
    std::iota(all.begin(), all.end(), 0);
    full_dimensional_ = dim > 0 && affine_rank(points_, all, dim) == dim;
    if (!full_dimensional_) return;

    std::set<std::pair<std::vector<long>, long>> found;
    for_each_subset(points_.size(), dim, [&](std::span<const std::size_t> subset) {
        auto normal = hyperplane_normal(points_, subset, dim);
        if (std::all_of(normal.begin(), normal.end(), [](long v) { return v == 0; })) return;
        normal = primitive(std::move(normal));
        const long level = dot(normal, points_[subset[0]]);
        bool below = true;
        bool above = true;
        for (const auto& p : points_) {
            const long v = dot(normal, p);
            below = below && v <= level;
            above = above && v >= level;
        }
        if (!below && !above) return;
        if (!below) {
            for (long& v : normal) v = -v;
            found.emplace(std::move(normal), -level);
        } else {
            found.emplace(std::move(normal), level);
        }
    });
    for (const auto& [normal, offset] : found) facets_.push_back(Facet{normal, offset});

    std::vector<std::vector<std::size_t>> tight_facets(points_.size());
    for (std::size_t f = 0; f < facets_.size(); ++f)
        for (std::size_t i = 0; i < points_.size(); ++i)
            if (dot(facets_[f].normal, points_[i]) == facets_[f].offset) tight_facets[i].push_back(f);

    auto normals_rank = [&](const std::vector<std::size_t>& facet_ids) {
        std::vector<std::vector<long>> rows;
        for (std::size_t f : facet_ids) rows.push_back(facets_[f].normal);
        return integer_rank(rows, dim);
    };

    for (std::size_t i = 0; i < points_.size(); ++i)
        if (tight_facets[i].size() >= dim && normals_rank(tight_facets[i]) == dim) vertices_.push_back(i);

    facet_vertices_.resize(facets_.size());
    for (std::size_t v : vertices_)
        for (std::size_t f : tight_facets[v]) facet_vertices_[f].push_back(v);

    for (std::size_t a = 0; a < vertices_.size(); ++a)
        for (std::size_t b = a + 1; b < vertices_.size(); ++b) {
            std::vector<std::size_t> common;
            std::set_intersection(tight_facets[vertices_[a]].begin(), tight_facets[vertices_[a]].end(),
                                  tight_facets[vertices_[b]].begin(), tight_facets[vertices_[b]].end(),
                                  std::back_inserter(common));
            if (common.size() + 1 >= dim && normals_rank(common) + 1 == dim)
                edges_.emplace_back(vertices_[a], vertices_[b]);
        }
}

bool LatticePolytope::contains_marked(const LatticePoint& p) const
{
    return std::find(points_.begin(), points_.end(), p) != points_.end();
}

std::size_t LatticePolytope::marked_points_on(std::size_t facet) const
{
    const Facet& f = facets_.at(facet);
    return static_cast<std::size_t>(
        std::count_if(points_.begin(), points_.end(), [&](const LatticePoint& p) { return dot(f.normal, p) == f.offset; }));
}

LatticePolytope build_polytope(std::span<const ExponentVector> monomials)
{
    if (monomials.empty()) throw PreconditionError("polytope needs at least one monomial");
    const std::size_t nvars = monomials.front().size();
    const int degree = monomials.front().degree();
    std::vector<LatticePoint> points;
    points.reserve(monomials.size());
    for (const auto& e : monomials) {
        if (e.size() != nvars || e.degree() != degree)
            throw PreconditionError("monomials of a linear system share degree and variable count");
        LatticePoint p(e.entries().begin(), e.entries().end() - 1);
        points.push_back(std::move(p));
    }
    return LatticePolytope(std::move(points));
}

namespace {

std::vector<std::vector<std::size_t>> vertex_neighbours(const LatticePolytope& polytope)
{
    std::vector<std::vector<std::size_t>> neighbours(polytope.points().size());
    for (const auto& [a, b] : polytope.edges()) {
        neighbours[a].push_back(b);
        neighbours[b].push_back(a);
    }
    return neighbours;
}

void require_full_dimensional(const LatticePolytope& polytope)
{
    if (!polytope.full_dimensional()) throw DegenerateHullError("convex hull is not full-dimensional");
}

}  // namespace

bool is_simple(const LatticePolytope& polytope)
{
    require_full_dimensional(polytope);
    const auto neighbours = vertex_neighbours(polytope);
    const auto dim = static_cast<std::size_t>(polytope.dimension());
    return std::all_of(polytope.vertices().begin(), polytope.vertices().end(),
                       [&](std::size_t v) { return neighbours[v].size() == dim; });
}

SmoothnessDiagnosis diagnose_smoothness(const LatticePolytope& polytope)
{
    SmoothnessDiagnosis diagnosis;
    diagnosis.simple = is_simple(polytope);
    if (!diagnosis.simple) return diagnosis;
    const auto neighbours = vertex_neighbours(polytope);
    const auto& pts = polytope.points();
    const auto dim = static_cast<std::size_t>(polytope.dimension());
    for (std::size_t v : polytope.vertices()) {
        std::vector<std::vector<long>> directions;
        for (std::size_t w : neighbours[v]) {
            std::vector<long> d(dim);
            for (std::size_t c = 0; c < dim; ++c) d[c] = pts[w][c] - pts[v][c];
            d = primitive(std::move(d));
            LatticePoint step(dim);
            for (std::size_t c = 0; c < dim; ++c) step[c] = pts[v][c] + d[c];
            if (!polytope.contains_marked(step)) diagnosis.missing_edge_points.push_back({v, step});
            directions.push_back(std::move(d));
        }
        if (std::abs(determinant(directions)) != 1) diagnosis.non_unimodular_vertices.push_back(v);
    }
    diagnosis.smooth = diagnosis.non_unimodular_vertices.empty() && diagnosis.missing_edge_points.empty();
    return diagnosis;
}

bool is_smooth(const LatticePolytope& polytope)
{
    const auto diagnosis = diagnose_smoothness(polytope);
    if (!diagnosis.simple) throw PreconditionError("smoothness test needs a simple polytope");
    return diagnosis.smooth;
}

std::int64_t normalized_volume(const LatticePolytope& polytope)
{
    require_full_dimensional(polytope);
    const auto& pts = polytope.points();
    const auto dim = static_cast<std::size_t>(polytope.dimension());

    // Faces of a k-face are its intersections with polytope facets of dimension k-1.
    std::function<std::vector<std::vector<std::size_t>>(const std::vector<std::size_t>&, std::size_t)> triangulate =
        [&](const std::vector<std::size_t>& face, std::size_t k) -> std::vector<std::vector<std::size_t>> {
        if (k == 0) return {{face.front()}};
        const std::size_t apex = face.front();
        std::set<std::vector<std::size_t>> subfaces;
        for (const auto& fv : polytope.facet_vertices()) {
            std::vector<std::size_t> meet;
            std::set_intersection(face.begin(), face.end(), fv.begin(), fv.end(), std::back_inserter(meet));
            if (meet.size() < k || std::binary_search(meet.begin(), meet.end(), apex)) continue;
            if (affine_rank(pts, meet, dim) + 1 == k) subfaces.insert(std::move(meet));
        }
        std::vector<std::vector<std::size_t>> simplices;
        for (const auto& sub : subfaces)
            for (auto simplex : triangulate(sub, k - 1)) {
                simplex.push_back(apex);
                simplices.push_back(std::move(simplex));
            }
        return simplices;
    };

    std::int64_t total = 0;
    for (const auto& simplex : triangulate(polytope.vertices(), dim)) {
        std::vector<std::vector<long>> rows;
        for (std::size_t k = 0; k < dim; ++k) {
            std::vector<long> d(dim);
            for (std::size_t c = 0; c < dim; ++c) d[c] = pts[simplex[k]][c] - pts[simplex[dim]][c];
            rows.push_back(std::move(d));
        }
        total += std::abs(determinant(std::move(rows)));
    }
    return total;
}

nlohmann::json polytope_json(const LatticePolytope& polytope)
{
    nlohmann::json out;
    out["points"] = polytope.points();
    out["vertices"] = polytope.vertices();
    nlohmann::json facets = nlohmann::json::array();
    for (const auto& f : polytope.facets()) facets.push_back({{"normal", f.normal}, {"offset", f.offset}});
    out["facets"] = facets;
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [a, b] : polytope.edges()) edges.push_back({a, b});
    out["edges"] = edges;
    out["normalized_volume"] = polytope.full_dimensional() ? nlohmann::json(normalized_volume(polytope)) : nlohmann::json();
    return out;
}

nlohmann::json polytope_report(const LatticePolytope& polytope)
{
    if (!polytope.full_dimensional()) throw DegenerateHullError("convex hull is not full-dimensional");
    const auto diagnosis = diagnose_smoothness(polytope);
    nlohmann::json j = polytope_json(polytope);
    j["simple"] = diagnosis.simple;
    j["smooth"] = diagnosis.smooth;
    j["quasi_smooth"] = diagnosis.simple;
    j["verdict"] = diagnosis.smooth ? "smooth" : diagnosis.simple ? "quasi-smooth" : "singular";
    j["edge_rule_fired"] = diagnosis.edge_rule_fired();
    nlohmann::json missing = nlohmann::json::array();
    for (const auto& m : diagnosis.missing_edge_points) missing.push_back({{"vertex", m.vertex}, {"point", m.point}});
    j["missing_edge_points"] = missing;
    j["non_unimodular_vertices"] = diagnosis.non_unimodular_vertices;
    return j;
}

}  // namespace lefschetz
