#pragma once

#include <vector>

#include "galetope/face.hpp"

namespace galetope {

/// A combinatorial polytope: a dimension, a vertex count, and a canonical
/// facet family (faces sorted, family sorted lexicographically). Equality of
/// polytopes is equality of these three fields.
struct CombPolytope {
    int dim = 0;
    int num_vertices = 0;
    std::vector<Face> facets;

    bool operator==(const CombPolytope&) const = default;
};

/// Canonicalizes the family (sorts, removes exact duplicates). Does not
/// validate; see validate().
CombPolytope make_comb_polytope(int dim, int num_vertices, std::vector<Face> facets);

/// Throws InvalidInputError unless: dim >= 2, num_vertices >= dim+1, every
/// facet has >= dim vertices and indices < num_vertices, no facet contains
/// another, and every vertex lies in some facet.
void validate(const CombPolytope& p);

struct RidgeIncidence {
    Face ridge;
    int facet_a = -1; // indices into p.facets, facet_a < facet_b
    int facet_b = -1;
};

/// Ridges as maximal pairwise facet intersections, each with the exactly two
/// facets containing it. Throws NotPolytopalError if some maximal
/// intersection lies in a number of facets other than two.
std::vector<RidgeIncidence> ridges(const CombPolytope& p);

/// The full face lattice: every intersection of facets, plus the empty face
/// and the whole vertex set, graded by longest chain from the bottom.
class FaceLattice {
public:
    int dim() const { return dim_; }
    int num_vertices() const { return num_vertices_; }

    /// Faces of a rank, -1 (empty face) through dim() (whole polytope).
    const std::vector<Face>& rank(int r) const;

    /// Counts of faces of rank 0 .. dim-1.
    std::vector<int> f_vector() const;

    /// For each face of rank r, indices of its covers within rank r+1.
    const std::vector<std::vector<int>>& parents_of_rank(int r) const;

    bool has_face(const Face& f) const;
    /// Rank of a face, or -2 when the face is not in the lattice.
    int rank_of(const Face& f) const;

    friend FaceLattice face_lattice(const CombPolytope& p);

private:
    int dim_ = 0;
    int num_vertices_ = 0;
    std::vector<std::vector<Face>> by_rank_;             // index 0 = rank -1
    std::vector<std::vector<std::vector<int>>> parents_; // aligned with by_rank_
};

/// Builds the lattice by intersection closure. Throws NotPolytopalError when
/// the closure is not graded with top rank dim, when some minimal nonempty
/// face is not a single vertex, or when a rank-(dim-2) face does not lie in
/// exactly two facets.
FaceLattice face_lattice(const CombPolytope& p);

/// Rank-1 faces of the lattice.
std::vector<Face> edges_of(const FaceLattice& lattice);

/// A face expressed in the local positions of an ambient face's induced
/// vertex order.
struct InducedFace {
    Face global;
    std::vector<int> locals;
};

/// Positions of `sub`'s vertices within `ambient`'s induced order.
/// Throws InvalidInputError when sub is not contained in ambient.
InducedFace induce(const Face& ambient, const Face& sub);

/// Same positions packaged as a Face over local indices.
Face localize(const Face& ambient, const Face& sub);

} // namespace galetope
