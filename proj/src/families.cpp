#include "galetope/families.hpp"

#include <algorithm>
#include <set>

#include "galetope/errors.hpp"
#include "subset_iter.hpp"

namespace galetope {

using detail::for_each_subset;

namespace {

// Drops faces strictly contained in another face of the family.
std::vector<Face> drop_dominated(std::vector<Face> faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Face> kept;
    for (const Face& f : faces) {
        bool dominated = false;
        for (const Face& g : faces) {
            if (f != g && f.subset_of(g)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(f);
    }
    return kept;
}

} // namespace

CombPolytope simplex_facets(int dim) {
    if (dim < 0) throw InvalidInputError("simplex dimension must be non-negative");
    if (dim == 0) return make_comb_polytope(0, 1, {});
    std::vector<Face> facets;
    for_each_subset(dim + 1, dim, [&](const std::vector<int>& idx) { facets.emplace_back(idx); });
    return make_comb_polytope(dim, dim + 1, std::move(facets));
}

CombPolytope cyclic_facets(int num_vertices, int d) {
    if (d < 2) throw InvalidInputError("cyclic_facets: dimension must be at least 2");
    if (num_vertices < d + 1)
        throw InvalidInputError("cyclic_facets: need at least d+1 vertices");
    std::vector<Face> facets;
    for_each_subset(num_vertices, d, [&](const std::vector<int>& idx) {
        Face f(idx);
        if (is_gale_subset(f, num_vertices)) facets.push_back(std::move(f));
    });
    CombPolytope p = make_comb_polytope(d, num_vertices, std::move(facets));
    validate(p);
    return p;
}

CombPolytope braxtope_facets(int m, int e) {
    if (e < 0 || m < e) throw InvalidInputError("braxtope_facets: need m >= e >= 0");
    if (e <= 2 || m == e) return simplex_facets(e);

    const auto clamp = [m](int t) { return std::min(std::max(t, 0), m); };
    std::vector<Face> faces;
    for (int i = 0; i <= m - e + 1; ++i) {
        std::vector<int> t;
        for (int j = i; j <= i + e - 1; ++j) t.push_back(clamp(j));
        faces.emplace_back(std::move(t));
    }
    for (int j = 2; j <= m; ++j) {
        std::vector<int> f{0};
        for (int t = j - e + 2; t <= j - 1; ++t) f.push_back(clamp(t));
        for (int t = j + 1; t <= j + e - 2; ++t) f.push_back(clamp(t));
        faces.emplace_back(std::move(f));
    }
    CombPolytope p = make_comb_polytope(e, m + 1, drop_dominated(std::move(faces)));
    validate(p);
    return p;
}

std::vector<Face> braxtope_edges(int m, int e) {
    if (e < 3 || m < e) throw InvalidInputError("braxtope_edges: need m >= e >= 3");
    const auto clamp = [m](int t) { return std::min(std::max(t, 0), m); };
    std::set<Face> edges;
    const auto add = [&](int a, int b) {
        if (a != b) edges.insert(Face{a, b});
    };
    // y_0 joins every vertex.
    for (int t = 1; t <= m; ++t) add(0, t);
    // y_1 joins y_0 and y_2..y_e.
    add(1, 0);
    for (int t = 2; t <= e; ++t) add(1, clamp(t));
    // y_m joins y_0 and the previous e-1 vertices.
    add(clamp(m), 0);
    for (int t = m - e + 1; t <= m - 1; ++t) add(clamp(t), m);
    // Interior vertices join y_0 and an e-1 window on each side.
    for (int s = 2; s <= m - 1; ++s) {
        add(s, 0);
        for (int t = s - e + 1; t <= s - 1; ++t) add(s, clamp(t));
        for (int t = s + 1; t <= s + e - 1; ++t) add(s, clamp(t));
    }
    return {edges.begin(), edges.end()};
}

CombPolytope multiplex_facets(int num_vertices, int d) {
    if (d < 2) throw InvalidInputError("multiplex_facets: dimension must be at least 2");
    if (num_vertices < d + 1)
        throw InvalidInputError("multiplex_facets: need at least d+1 vertices");
    const int n = num_vertices - 1;
    const auto clamp = [n](int t) { return std::min(std::max(t, 0), n); };
    std::vector<Face> faces;
    for (int i = 0; i <= n; ++i) {
        std::vector<int> f;
        for (int t = i - d + 1; t <= i - 1; ++t) f.push_back(clamp(t));
        for (int t = i + 1; t <= i + d - 1; ++t) f.push_back(clamp(t));
        faces.emplace_back(std::move(f));
    }
    CombPolytope p = make_comb_polytope(d, num_vertices, drop_dominated(std::move(faces)));
    validate(p);
    return p;
}

CombPolytope generate(const FamilySpec& spec) {
    switch (spec.family) {
    case Family::Cyclic: return cyclic_facets(spec.num_vertices, spec.dim);
    case Family::Braxtope: return braxtope_facets(spec.num_vertices - 1, spec.dim);
    case Family::Multiplex: return multiplex_facets(spec.num_vertices, spec.dim);
    }
    throw InvalidInputError("unknown family");
}

} // namespace galetope
