#ifndef LEFSCHETZ_POLYTOPE_HPP
#define LEFSCHETZ_POLYTOPE_HPP

#include <lefschetz/monomial.hpp>

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace lefschetz {

using LatticePoint = std::vector<long>;

/// Supporting hyperplane normal . x <= offset, tight on the facet. The normal
/// is primitive and points outward.
struct Facet {
    std::vector<long> normal;
    long offset = 0;
};

/// Convex hull of a marked lattice point set A.
///
/// Built by exhaustive facet enumeration over m-subsets of A with exact
/// integer arithmetic; intended for the small point sets of monomial linear
/// systems (tens of points, m <= 5).
class LatticePolytope {
public:
    explicit LatticePolytope(std::vector<LatticePoint> points);

    int dimension() const noexcept { return dim_; }
    bool full_dimensional() const noexcept { return full_dimensional_; }
    const std::vector<LatticePoint>& points() const noexcept { return points_; }
    /// Indices into points(), ascending.
    const std::vector<std::size_t>& vertices() const noexcept { return vertices_; }
    const std::vector<Facet>& facets() const noexcept { return facets_; }
    /// Vertex indices (into points()) lying on each facet.
    const std::vector<std::vector<std::size_t>>& facet_vertices() const noexcept { return facet_vertices_; }
    /// Pairs of point indices, first < second.
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }

    bool contains_marked(const LatticePoint& p) const;
    /// Number of marked points lying on a facet (all of them, vertices or not).
    std::size_t marked_points_on(std::size_t facet) const;

private:
    int dim_ = 0;
    bool full_dimensional_ = false;
    std::vector<LatticePoint> points_;
    std::vector<std::size_t> vertices_;
    std::vector<Facet> facets_;
    std::vector<std::vector<std::size_t>> facet_vertices_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// Dehomogenize exponent vectors (all of one degree) by dropping the last
/// coordinate and take the hull.
LatticePolytope build_polytope(std::span<const ExponentVector> monomials);

/// Every vertex meets exactly dim edges. Throws DegenerateHullError.
bool is_simple(const LatticePolytope& polytope);

struct MissingEdgePoint {
    std::size_t vertex = 0;
    LatticePoint point;
};

struct SmoothnessDiagnosis {
    bool simple = false;
    bool smooth = false;
    /// Vertices whose primitive edge directions do not form a lattice basis.
    std::vector<std::size_t> non_unimodular_vertices;
    /// First lattice points along edges (vertex + primitive direction) that
    /// are not marked. This is the rule separating full from punctured faces.
    std::vector<MissingEdgePoint> missing_edge_points;
    bool edge_rule_fired() const noexcept { return !missing_edge_points.empty(); }
};

SmoothnessDiagnosis diagnose_smoothness(const LatticePolytope& polytope);

/// Simple, unimodular edge directions at every vertex, and every first
/// lattice point along each edge marked. Throws PreconditionError when the
/// polytope is not simple.
bool is_smooth(const LatticePolytope& polytope);

/// dim! times the Euclidean volume, by pulling triangulation.
std::int64_t normalized_volume(const LatticePolytope& polytope);

nlohmann::json polytope_json(const LatticePolytope& polytope);

/// polytope_json plus the smoothness diagnosis. Throws DegenerateHullError.
nlohmann::json polytope_report(const LatticePolytope& polytope);

}  // namespace lefschetz

#endif  // LEFSCHETZ_POLYTOPE_HPP
