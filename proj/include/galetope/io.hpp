#pragma once

#include <string>
#include <vector>

#include "galetope/comb_polytope.hpp"
#include "galetope/construction.hpp"
#include "galetope/rational_geometry.hpp"
#include "galetope/verify.hpp"

namespace galetope {

// Polytope document: {"dim": d, "num_vertices": n, "facets": [[...], ...]},
// inner arrays strictly increasing, outer array lexicographically sorted.
std::string to_json(const CombPolytope& p);
CombPolytope polytope_from_json(const std::string& text);

// Realization document: {"dim": d, "points": [["p/q", ...], ...]} with exact
// rational strings.
std::string to_json(const Realization& r);
Realization realization_from_json(const std::string& text);

// Construction log: {"dim", "period", "vertices", "steps": [{"n", "beyond",
// "beneath", "affine"}, ...]} with facet arrays in polytope conventions.
std::string to_json(const ConstructionState& state);

// Rebuilds the state with build() and checks the logged partitions match.
ConstructionState construction_from_json(const std::string& text);

std::string render_report(const TheoremReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace galetope
