#include "galetope/comb_polytope.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>

#include "galetope/errors.hpp"

namespace galetope {

namespace {

std::string face_str(const Face& f) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int v : f) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    os << '}';
    return os.str();
}

std::uint64_t to_mask(const Face& f) {
    std::uint64_t m = 0;
    for (int v : f) m |= std::uint64_t{1} << v;
    return m;
}

Face from_mask(std::uint64_t m) {
    std::vector<int> vs;
    while (m != 0) {
        const int v = std::countr_zero(m);
        vs.push_back(v);
        m &= m - 1;
    }
    return Face(std::move(vs));
}

bool mask_subset(std::uint64_t a, std::uint64_t b) {
    return (a & b) == a;
}

} // namespace

CombPolytope make_comb_polytope(int dim, int num_vertices, std::vector<Face> facets) {
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    return CombPolytope{dim, num_vertices, std::move(facets)};
}

void validate(const CombPolytope& p) {
    if (p.dim < 2) throw InvalidInputError("polytope dimension must be at least 2");
    if (p.num_vertices < p.dim + 1)
        throw InvalidInputError("polytope needs at least dim+1 vertices");
    if (!std::is_sorted(p.facets.begin(), p.facets.end()))
        throw InvalidInputError("facet family is not canonically sorted");
    std::vector<bool> covered(p.num_vertices, false);
    for (const Face& f : p.facets) {
        if (f.size() < p.dim)
            throw InvalidInputError("facet " + face_str(f) + " has fewer than dim vertices");
        if (f.max_vertex() >= p.num_vertices)
            throw InvalidInputError("facet " + face_str(f) + " uses an out-of-range vertex");
        for (int v : f) covered[v] = true;
    }
    for (int v = 0; v < p.num_vertices; ++v) {
        if (!covered[v])
            throw InvalidInputError("vertex " + std::to_string(v) + " lies in no facet");
    }
    for (std::size_t i = 0; i < p.facets.size(); ++i) {
        for (std::size_t j = 0; j < p.facets.size(); ++j) {
            if (i != j && p.facets[i].subset_of(p.facets[j]))
                throw InvalidInputError("facet " + face_str(p.facets[i]) +
                                        " is contained in facet " + face_str(p.facets[j]));
        }
    }
}

std::vector<RidgeIncidence> ridges(const CombPolytope& p) {
    validate(p);
    const auto& fs = p.facets;
    std::set<Face> ridge_set;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        std::vector<Face> cuts;
        cuts.reserve(fs.size() - 1);
        for (std::size_t j = 0; j < fs.size(); ++j) {
            if (j != i) cuts.push_back(fs[i].intersect(fs[j]));
        }
        for (const Face& c : cuts) {
            bool maximal = true;
            for (const Face& other : cuts) {
                if (c != other && c.subset_of(other)) {
                    maximal = false;
                    break;
                }
            }
            if (maximal) ridge_set.insert(c);
        }
    }
    std::vector<RidgeIncidence> out;
    out.reserve(ridge_set.size());
    for (const Face& r : ridge_set) {
        std::vector<int> hosts;
        for (std::size_t j = 0; j < fs.size(); ++j) {
            if (r.subset_of(fs[j])) hosts.push_back(static_cast<int>(j));
        }
        if (hosts.size() != 2)
            throw NotPolytopalError("ridge " + face_str(r) + " lies in " +
                                    std::to_string(hosts.size()) + " facets, expected 2");
        out.push_back(RidgeIncidence{r, hosts[0], hosts[1]});
    }
    return out;
}

const std::vector<Face>& FaceLattice::rank(int r) const {
    if (r < -1 || r > dim_) throw InvalidInputError("lattice rank out of range");
    return by_rank_[static_cast<std::size_t>(r + 1)];
}

std::vector<int> FaceLattice::f_vector() const {
    std::vector<int> f;
    f.reserve(static_cast<std::size_t>(dim_));
    for (int r = 0; r < dim_; ++r) f.push_back(static_cast<int>(rank(r).size()));
    return f;
}

const std::vector<std::vector<int>>& FaceLattice::parents_of_rank(int r) const {
    if (r < -1 || r > dim_) throw InvalidInputError("lattice rank out of range");
    return parents_[static_cast<std::size_t>(r + 1)];
}

bool FaceLattice::has_face(const Face& f) const {
    return rank_of(f) != -2;
}

int FaceLattice::rank_of(const Face& f) const {
    for (int r = -1; r <= dim_; ++r) {
        const auto& faces = by_rank_[static_cast<std::size_t>(r + 1)];
        if (std::binary_search(faces.begin(), faces.end(), f)) return r;
    }
    return -2;
}

FaceLattice face_lattice(const CombPolytope& p) {
    validate(p);
    if (p.num_vertices > 63)
        throw InvalidInputError("face_lattice supports at most 63 vertices");

    // Intersection closure of the facet family, on vertex bitmasks. Closing
    // against the generators reaches every intersection of facet subsets.
    std::vector<std::uint64_t> gen;
    gen.reserve(p.facets.size());
    for (const Face& f : p.facets) gen.push_back(to_mask(f));

    std::unordered_set<std::uint64_t> closure(gen.begin(), gen.end());
    std::vector<std::uint64_t> queue(gen.begin(), gen.end());
    while (!queue.empty()) {
        const std::uint64_t f = queue.back();
        queue.pop_back();
        for (std::uint64_t g : gen) {
            const std::uint64_t h = f & g;
            if (closure.insert(h).second) queue.push_back(h);
        }
    }
    const std::uint64_t top =
        p.num_vertices == 63 ? ~std::uint64_t{0} >> 1 : (std::uint64_t{1} << p.num_vertices) - 1;
    closure.insert(top);
    closure.insert(0);

    std::vector<std::uint64_t> faces(closure.begin(), closure.end());
    std::sort(faces.begin(), faces.end(), [](std::uint64_t a, std::uint64_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });
    const int nf = static_cast<int>(faces.size());

    // Longest-chain rank. Proper subsets always sort earlier.
    std::vector<int> rank(faces.size(), -1);
    for (int i = 1; i < nf; ++i) {
        int r = -1;
        for (int j = 0; j < i; ++j) {
            if (std::popcount(faces[j]) < std::popcount(faces[i]) &&
                mask_subset(faces[j], faces[i]))
                r = std::max(r, rank[static_cast<std::size_t>(j)] + 1);
        }
        rank[static_cast<std::size_t>(i)] = r;
    }

    const int top_rank = rank[static_cast<std::size_t>(nf - 1)];
    if (top_rank != p.dim)
        throw NotPolytopalError("face lattice has top rank " + std::to_string(top_rank) +
                                ", expected dim = " + std::to_string(p.dim));

    // Minimal nonempty faces must be the vertices.
    for (int i = 0; i < nf; ++i) {
        if (rank[static_cast<std::size_t>(i)] == 0 && std::popcount(faces[i]) != 1)
            throw NotPolytopalError("minimal face " + face_str(from_mask(faces[i])) +
                                    " is not a single vertex");
    }

    // Gradedness: any containment that skips a rank must admit a face one
    // rank up in between; otherwise that pair is a rank-jumping cover.
    std::vector<std::vector<std::uint64_t>> bucket(static_cast<std::size_t>(p.dim) + 2);
    for (int i = 0; i < nf; ++i)
        bucket[static_cast<std::size_t>(rank[static_cast<std::size_t>(i)] + 1)].push_back(faces[i]);
    for (int i = 0; i < nf; ++i) {
        const int ri = rank[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < nf; ++j) {
            if (!mask_subset(faces[i], faces[j]) || faces[i] == faces[j]) continue;
            if (rank[static_cast<std::size_t>(j)] <= ri + 1) continue;
            bool found = false;
            for (std::uint64_t h : bucket[static_cast<std::size_t>(ri + 2)]) {
                if (mask_subset(faces[i], h) && mask_subset(h, faces[j])) {
                    found = true;
                    break;
                }
            }
            if (!found)
                throw NotPolytopalError("face lattice is not graded: " +
                                        face_str(from_mask(faces[i])) + " < " +
                                        face_str(from_mask(faces[j])) + " skips a rank");
        }
    }

    // Every ridge lies in exactly two facets.
    const auto& ridge_masks = bucket[static_cast<std::size_t>(p.dim - 1)];
    const auto& facet_masks = bucket[static_cast<std::size_t>(p.dim)];
    for (std::uint64_t r : ridge_masks) {
        int hosts = 0;
        for (std::uint64_t f : facet_masks)
            if (mask_subset(r, f)) ++hosts;
        if (hosts != 2)
            throw NotPolytopalError("ridge " + face_str(from_mask(r)) + " lies in " +
                                    std::to_string(hosts) + " facets, expected 2");
    }

    FaceLattice lat;
    lat.dim_ = p.dim;
    lat.num_vertices_ = p.num_vertices;
    lat.by_rank_.assign(static_cast<std::size_t>(p.dim) + 2, {});
    for (std::size_t b = 0; b < bucket.size(); ++b) {
        auto& out = lat.by_rank_[b];
        out.reserve(bucket[b].size());
        for (std::uint64_t m : bucket[b]) out.push_back(from_mask(m));
        std::sort(out.begin(), out.end());
    }

    // Incidences between consecutive ranks; in a graded lattice these are
    // exactly the cover relations.
    lat.parents_.assign(lat.by_rank_.size(), {});
    for (int r = -1; r < p.dim; ++r) {
        const auto& lower = lat.by_rank_[static_cast<std::size_t>(r + 1)];
        const auto& upper = lat.by_rank_[static_cast<std::size_t>(r + 2)];
        auto& links = lat.parents_[static_cast<std::size_t>(r + 1)];
        links.assign(lower.size(), {});
        std::vector<std::uint64_t> um;
        um.reserve(upper.size());
        for (const Face& f : upper) um.push_back(to_mask(f));
        for (std::size_t i = 0; i < lower.size(); ++i) {
            const std::uint64_t lm = to_mask(lower[i]);
            for (std::size_t j = 0; j < um.size(); ++j)
                if (mask_subset(lm, um[j])) links[i].push_back(static_cast<int>(j));
        }
    }
    lat.parents_[static_cast<std::size_t>(p.dim) + 1].assign(1, {});
    return lat;
}

std::vector<Face> edges_of(const FaceLattice& lattice) {
    return lattice.rank(1);
}

InducedFace induce(const Face& ambient, const Face& sub) {
    if (!sub.subset_of(ambient))
        throw InvalidInputError("induce: face is not contained in the ambient face");
    std::vector<int> locals;
    locals.reserve(static_cast<std::size_t>(sub.size()));
    const auto& av = ambient.vertices();
    for (int v : sub) {
        auto it = std::lower_bound(av.begin(), av.end(), v);
        locals.push_back(static_cast<int>(it - av.begin()));
    }
    return InducedFace{sub, std::move(locals)};
}

Face localize(const Face& ambient, const Face& sub) {
    return Face(induce(ambient, sub).locals);
}

} // namespace galetope
