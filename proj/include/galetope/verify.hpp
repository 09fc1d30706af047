#pragma once

#include <string>
#include <vector>

#include "galetope/comb_polytope.hpp"
#include "galetope/rational_geometry.hpp"

namespace galetope {

struct ConstructionState; // construction.hpp

/// Every facet is a Gale subset of the vertex array.
bool is_gale_polytope(const CombPolytope& p);

/// Every facet has exactly dim vertices.
bool is_simplicial(const CombPolytope& p);

/// Every facet, read in its induced order, has the ridge family of the
/// braxtope with matching parameters.
bool is_braxial(const CombPolytope& p);

/// Same with the multiplex family as the reference.
bool is_multiplicial(const CombPolytope& p);

/// Neighbors of x_i. For i >= 1, x_0 is excluded even when {x_0, x_i} is an
/// edge; V_0 collects every neighbor of x_0.
std::vector<int> vertex_star(const CombPolytope& p, int i);

enum class GaleBraxialKind {
    Cyclic,
    PeriodicallyCyclic,
    BraxtopeClass,
    NotGaleBraxial,
    HypothesisNotMet,
};

struct ClassificationResult {
    GaleBraxialKind kind = GaleBraxialKind::NotGaleBraxial;
    int s = -1;     // minimal j >= 1 with {x_j, x_n} an edge
    int period = 0; // set for PeriodicallyCyclic
    std::string note;
};

std::string to_string(GaleBraxialKind kind);
std::string to_string(const ClassificationResult& c);

/// The edge-star trichotomy: s = 1 is cyclic, 2 <= s <= n-d is
/// periodically-cyclic with period n-s+2, s = n-d+1 is a braxtope. Odd
/// dimensions classify as Cyclic exactly when simplicial and Gale. Outside
/// the theorem hypotheses (even d < 6 or n < d+1 on a nonsimplicial input)
/// the result is the explicit HypothesisNotMet marker.
ClassificationResult classify_gale_braxial(const CombPolytope& p);

/// True iff every window of k consecutive vertices spans a polytope that is
/// simplicial and Gale in the induced order, and no window of k+1 vertices
/// does. The non-cyclicity half is checked under the induced order only.
bool is_periodically_cyclic(const Realization& r, int k);

struct TheoremCheck {
    std::string name;
    bool pass = false;
    std::string witness; // offending face or vertex when failing
};

struct TheoremReport {
    std::vector<TheoremCheck> checks;
    bool all_pass() const;
};

/// The eight structure checks against a polytope p with truncation p_prev
/// and a realization r of p. s is recomputed from the edge set.
TheoremReport run_structure_checks(const CombPolytope& p, const CombPolytope& p_prev,
                                   const Realization& r);

/// Gate: r must realize state.polytope; then runs the structure checks with
/// the logged truncation.
TheoremReport check_structure_theorems(const ConstructionState& state, const Realization& r);

} // namespace galetope
