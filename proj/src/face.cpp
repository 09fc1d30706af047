#include "galetope/face.hpp"

#include <algorithm>

#include "galetope/errors.hpp"

namespace galetope {

Face::Face(std::vector<int> vertices) : v_(std::move(vertices)) {
    for (int v : v_) {
        if (v < 0) throw InvalidInputError("face vertex index must be non-negative");
    }
    std::sort(v_.begin(), v_.end());
    v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
}

Face::Face(std::initializer_list<int> vertices) : Face(std::vector<int>(vertices)) {}

int Face::max_vertex() const {
    return v_.empty() ? -1 : v_.back();
}

bool Face::contains(int vertex) const {
    return std::binary_search(v_.begin(), v_.end(), vertex);
}

bool Face::subset_of(const Face& other) const {
    return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
}

Face Face::intersect(const Face& other) const {
    std::vector<int> out;
    std::set_intersection(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                          std::back_inserter(out));
    Face f;
    f.v_ = std::move(out);
    return f;
}

Face Face::unite(const Face& other) const {
    std::vector<int> out;
    std::set_union(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                   std::back_inserter(out));
    Face f;
    f.v_ = std::move(out);
    return f;
}

Face Face::with(int vertex) const {
    return unite(Face{vertex});
}

bool is_gale_subset(const Face& subset, int num_vertices) {
    if (subset.max_vertex() >= num_vertices)
        throw InvalidInputError("is_gale_subset: vertex index out of range");
    // Checking consecutive outside indices suffices: separation counts add up
    // over intermediate outside points.
    int prev_outside = -1;
    int members_since = 0;
    for (int v = 0; v < num_vertices; ++v) {
        if (subset.contains(v)) {
            ++members_since;
            continue;
        }
        if (prev_outside >= 0 && members_since % 2 != 0) return false;
        prev_outside = v;
        members_since = 0;
    }
    return true;
}

bool is_paired_set(const Face& subset) {
    const auto& v = subset.vertices();
    if (v.size() % 2 != 0) return false;
    for (std::size_t i = 0; i + 1 < v.size(); i += 2) {
        if (v[i + 1] != v[i] + 1) return false;
    }
    return true;
}

} // namespace galetope
