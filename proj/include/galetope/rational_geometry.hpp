#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "galetope/comb_polytope.hpp"

namespace galetope {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using RationalPoint = std::vector<Rational>;

/// Exact rational coordinates, aligned with vertex indices.
struct Realization {
    int dim = 0;
    std::vector<RationalPoint> points;
};

enum class Side { Beyond, Beneath, On };

/// Points (i, i^2, ..., i^d) for i = 0..num_vertices-1.
Realization moment_points(int num_vertices, int dim);

/// Rank of the homogenized point set; affine dimension + 1.
int affine_rank(const std::vector<RationalPoint>& points);

RationalPoint centroid(const std::vector<RationalPoint>& points);

/// Brute-force facet enumeration over all d-subsets: a subset spanning a
/// hyperplane with no points on both sides contributes the full on-hyperplane
/// vertex set as one facet. Exact; throws InvalidInputError on duplicate
/// points, DegenerateInputError when the points do not span dimension d.
CombPolytope hull_facets(const Realization& r);

/// Orientation of `query` against the hyperplane spanned by `facet_points`,
/// normalized so that `reference_interior` is Beneath. On means the exact
/// determinant vanishes.
Side side_of(const std::vector<RationalPoint>& facet_points,
             const RationalPoint& reference_interior, const RationalPoint& query);

/// One strict inequality coeff . y > bound with integer data.
struct StrictConstraint {
    std::vector<Int> coeff;
    Int bound;
};

/// A point satisfying every constraint strictly, found by exact vertex
/// enumeration of the region clipped to |y_i| <= box, then taking the
/// barycenter of its vertices. Empty optional when the clipped region has no
/// strict interior.
std::optional<std::vector<Rational>>
strict_interior_point(const std::vector<StrictConstraint>& constraints, const Int& box);

struct ConstructionState; // construction.hpp

/// The next construction point x_n inside the affine hull of
/// {x_0, x_{n-k+1}, x_{n-k+2}, x_{n-1}}, strictly beyond the facets the
/// position rule classifies Beyond and strictly beneath the Beneath ones.
/// `facets` is the facet family of the polytope realized by `r`.
/// Throws InfeasibleError when no such point exists in the search boxes.
RationalPoint realize_next_point(const Realization& r, int n, int k,
                                 const CombPolytope& facets);

/// Candidate points for one step, all verified against the strict side
/// constraints: snapped low-denominator points first, exact barycenter last.
std::vector<RationalPoint> realize_next_point_candidates(const Realization& r, int n,
                                                         int k, const CombPolytope& facets);

/// Realizes a construction state: moment-curve start, one exact feasibility
/// solve per step, hull verified against the combinatorial facets after
/// every step.
Realization realize_construction(const ConstructionState& state);

} // namespace galetope
