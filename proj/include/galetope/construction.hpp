#pragma once

#include <vector>

#include "galetope/comb_polytope.hpp"
#include "galetope/face.hpp"

namespace galetope {

enum class PositionClass { Beyond, Beneath, InAffineHull };

/// Position of a facet of P_{n-1} relative to the incoming vertex x_n under
/// the construction's membership rule: InAffineHull iff the facet contains
/// {0, n-k+1, n-k+2, n-1}; Beyond iff it contains {0, n-1} and omits n-k+1;
/// Beneath otherwise.
PositionClass classify_position(const Face& facet, int n, int k);

struct ConstructionStep {
    int new_vertex = 0; // the vertex x_j this step introduced
    std::vector<Face> beyond;
    std::vector<Face> beneath;
    std::vector<Face> affine;
    CombPolytope result; // P_j
};

/// The evolving polytope of the incremental construction, with the full
/// per-step classification log.
struct ConstructionState {
    int dim = 0;
    int period = 0;     // k
    int max_vertex = 0; // n
    CombPolytope initial;
    CombPolytope polytope;
    std::vector<ConstructionStep> steps;

    /// P_j for period-1 <= j <= max_vertex.
    const CombPolytope& polytope_at(int j) const;
};

/// One step: classifies every facet of P_n against x_{n+1}, keeps Beneath
/// facets, joins x_{n+1} onto InAffineHull facets and onto every ridge
/// between a Beneath and a Beyond facet, and discards Beyond facets.
/// Throws DegenerateStepError when the Beyond or Beneath class is empty.
ConstructionState extend(const ConstructionState& state);

/// Starts from the cyclic polytope on k vertices and extends until vertex n.
/// Requires d even >= 4 (UnsupportedParametersError otherwise), k >= d+2 and
/// n >= k-1 (InvalidInputError otherwise).
ConstructionState build(int dim, int period, int max_vertex);

} // namespace galetope
