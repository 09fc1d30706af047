#pragma once

#include <vector>

#include "galetope/comb_polytope.hpp"
#include "galetope/face.hpp"

namespace galetope {

enum class Family { Cyclic, Braxtope, Multiplex };

struct FamilySpec {
    Family family = Family::Cyclic;
    int dim = 0;
    int num_vertices = 0;
};

/// Facets of the dim-simplex: all dim-subsets of {0..dim}.
CombPolytope simplex_facets(int dim);

/// Cyclic polytope facets: all d-subsets of {0..num_vertices-1} satisfying
/// the Gale condition. Requires num_vertices >= d+1, d >= 2.
CombPolytope cyclic_facets(int num_vertices, int d);

/// Braxtope facets from the T/E sliding-window formulas with index clamping
/// (y_t = y_0 for t <= 0, y_t = y_m for t >= m); duplicate and dominated
/// faces removed. For e <= 2 or m == e the result is the e-simplex.
/// Requires m >= e >= 0.
CombPolytope braxtope_facets(int m, int e);

/// Braxtope edge set by the per-vertex adjacency rules, same clamping.
/// Requires m >= e >= 3.
std::vector<Face> braxtope_edges(int m, int e);

/// Multiplex facets from the clamped sliding-window formula.
/// Requires num_vertices >= d+1, d >= 2.
CombPolytope multiplex_facets(int num_vertices, int d);

CombPolytope generate(const FamilySpec& spec);

} // namespace galetope
