#include "galetope/construction.hpp"

#include <string>

#include "galetope/errors.hpp"
#include "galetope/families.hpp"

namespace galetope {

PositionClass classify_position(const Face& facet, int n, int k) {
    if (n < k) throw InvalidInputError("classify_position: requires n >= k");
    const bool has0 = facet.contains(0);
    const bool has_prev = facet.contains(n - 1);
    const bool has_a = facet.contains(n - k + 1);
    const bool has_b = facet.contains(n - k + 2);
    if (has0 && has_prev && has_a && has_b) return PositionClass::InAffineHull;
    if (has0 && has_prev && !has_a) return PositionClass::Beyond;
    return PositionClass::Beneath;
}

const CombPolytope& ConstructionState::polytope_at(int j) const {
    const int start = period - 1;
    if (j < start || j > max_vertex)
        throw InvalidInputError("polytope_at: vertex index outside the construction range");
    if (j == start) return initial;
    return steps[static_cast<std::size_t>(j - period)].result;
}

ConstructionState extend(const ConstructionState& state) {
    const int n_new = state.max_vertex + 1;

    ConstructionStep step;
    step.new_vertex = n_new;
    for (const Face& f : state.polytope.facets) {
        switch (classify_position(f, n_new, state.period)) {
        case PositionClass::Beyond: step.beyond.push_back(f); break;
        case PositionClass::Beneath: step.beneath.push_back(f); break;
        case PositionClass::InAffineHull: step.affine.push_back(f); break;
        }
    }
    if (step.beyond.empty())
        throw DegenerateStepError("extend: no facet is beyond x_" + std::to_string(n_new));
    if (step.beneath.empty())
        throw DegenerateStepError("extend: no facet is beneath x_" + std::to_string(n_new));

    std::vector<Face> next;
    next.reserve(state.polytope.facets.size());
    for (const Face& f : step.beneath) next.push_back(f);
    for (const Face& f : step.affine) next.push_back(f.with(n_new));
    for (const RidgeIncidence& r : ridges(state.polytope)) {
        const PositionClass ca = classify_position(state.polytope.facets[static_cast<std::size_t>(r.facet_a)],
                                                   n_new, state.period);
        const PositionClass cb = classify_position(state.polytope.facets[static_cast<std::size_t>(r.facet_b)],
                                                   n_new, state.period);
        const bool mixed = (ca == PositionClass::Beneath && cb == PositionClass::Beyond) ||
                           (ca == PositionClass::Beyond && cb == PositionClass::Beneath);
        if (mixed) next.push_back(r.ridge.with(n_new));
    }
    step.result = make_comb_polytope(state.dim, n_new + 1, std::move(next));
    validate(step.result);

    ConstructionState out = state;
    out.max_vertex = n_new;
    out.polytope = step.result;
    out.steps.push_back(std::move(step));
    return out;
}

ConstructionState build(int dim, int period, int max_vertex) {
    if (dim % 2 != 0 || dim < 4)
        throw UnsupportedParametersError(
            "build: the construction requires even dimension >= 4");
    if (period < dim + 2) throw InvalidInputError("build: requires period k >= d+2");
    if (max_vertex < period - 1) throw InvalidInputError("build: requires n >= k-1");

    ConstructionState state;
    state.dim = dim;
    state.period = period;
    state.max_vertex = period - 1;
    state.initial = cyclic_facets(period, dim);
    state.polytope = state.initial;
    while (state.max_vertex < max_vertex) state = extend(state);
    return state;
}

} // namespace galetope
