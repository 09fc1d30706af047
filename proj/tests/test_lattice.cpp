#include <doctest.h>

#include <set>

#include "galetope/comb_polytope.hpp"
#include "galetope/errors.hpp"
#include "galetope/families.hpp"

using namespace galetope;

namespace {

CombPolytope tetrahedron() {
    return simplex_facets(3);
}

// Six triangles on five vertices where the edge {0,1} lies in three facets.
CombPolytope ridge_in_three() {
    return make_comb_polytope(3, 5,
                              {Face{0, 1, 2}, Face{0, 1, 3}, Face{0, 1, 4}, Face{2, 3, 4},
                               Face{1, 3, 4}, Face{1, 2, 4}});
}

int euler_target(int dim) {
    return dim % 2 == 0 ? 0 : 2;
}

int alternating_sum(const std::vector<int>& f) {
    int s = 0;
    for (std::size_t i = 0; i < f.size(); ++i) s += (i % 2 == 0 ? f[i] : -f[i]);
    return s;
}

} // namespace

TEST_CASE("polytope invariants are enforced") {
    CHECK_THROWS_AS(validate(make_comb_polytope(3, 4, {Face{0, 1}, Face{0, 2, 3}})),
                    InvalidInputError); // facet too small
    CHECK_THROWS_AS(validate(make_comb_polytope(2, 4, {Face{0, 1}, Face{0, 1, 2}, Face{2, 3}})),
                    InvalidInputError); // containment
    CHECK_THROWS_AS(validate(make_comb_polytope(2, 5, {Face{0, 1}, Face{1, 2}, Face{2, 3}, Face{0, 3}})),
                    InvalidInputError); // vertex 4 uncovered
    CHECK_THROWS_AS(validate(make_comb_polytope(1, 2, {Face{0}, Face{1}})), InvalidInputError);
}

TEST_CASE("tetrahedron lattice") {
    const FaceLattice lat = face_lattice(tetrahedron());
    CHECK(lat.f_vector() == std::vector<int>{4, 6, 4});
    CHECK(lat.rank(-1).size() == 1);
    CHECK(lat.rank(3).size() == 1);
    CHECK(edges_of(lat).size() == 6);
    CHECK(ridges(tetrahedron()).size() == 6);
    CHECK(lat.rank_of(Face{0, 2}) == 1);
    CHECK(lat.rank_of(Face{0, 1, 2, 3}) == 3);
    CHECK_FALSE(lat.has_face(Face{0, 4}));
}

TEST_CASE("braxtope(4,3) lattice") {
    const CombPolytope p = braxtope_facets(4, 3);
    const FaceLattice lat = face_lattice(p);
    CHECK(lat.f_vector() == std::vector<int>{5, 9, 6});
    CHECK(alternating_sum(lat.f_vector()) == euler_target(3));
    CHECK(ridges(p).size() == 9);
}

TEST_CASE("cyclic(6,4) lattice") {
    const CombPolytope p = cyclic_facets(6, 4);
    const FaceLattice lat = face_lattice(p);
    CHECK(lat.f_vector() == std::vector<int>{6, 15, 18, 9});
    CHECK(alternating_sum(lat.f_vector()) == euler_target(4));
    // Neighborly: every pair of vertices is an edge.
    CHECK(edges_of(lat).size() == 15);
    const auto rs = ridges(p);
    CHECK(rs.size() == 18);
    for (const RidgeIncidence& r : rs) {
        CHECK(r.facet_a != r.facet_b);
        CHECK(r.ridge.subset_of(p.facets[static_cast<std::size_t>(r.facet_a)]));
        CHECK(r.ridge.subset_of(p.facets[static_cast<std::size_t>(r.facet_b)]));
    }
}

TEST_CASE("ridges and lattice rank d-2 coincide across generated families") {
    const std::vector<CombPolytope> ps = {cyclic_facets(7, 4), cyclic_facets(8, 5),
                                          braxtope_facets(6, 4), braxtope_facets(7, 5),
                                          multiplex_facets(7, 4), multiplex_facets(6, 3)};
    for (const CombPolytope& p : ps) {
        const FaceLattice lat = face_lattice(p);
        std::set<Face> from_lattice(lat.rank(p.dim - 2).begin(), lat.rank(p.dim - 2).end());
        std::set<Face> from_ridges;
        for (const RidgeIncidence& r : ridges(p)) from_ridges.insert(r.ridge);
        CHECK(from_lattice == from_ridges);
        CHECK(alternating_sum(lat.f_vector()) == euler_target(p.dim));
        CHECK(lat.rank(p.dim).size() == 1);
        CHECK(static_cast<int>(lat.rank(p.dim - 1).size()) ==
              static_cast<int>(p.facets.size()));
    }
}

TEST_CASE("a ridge in three facets is rejected") {
    CHECK_THROWS_AS(face_lattice(ridge_in_three()), NotPolytopalError);
    CHECK_THROWS_AS(ridges(ridge_in_three()), NotPolytopalError);
}

TEST_CASE("induced positions") {
    const Face ambient({2, 5, 7, 9});
    const InducedFace ind = induce(ambient, Face({5, 9}));
    CHECK(ind.global == Face({5, 9}));
    CHECK(ind.locals == std::vector<int>{1, 3});
    CHECK(localize(ambient, Face({2, 7})) == Face({0, 2}));
    CHECK_THROWS_AS(induce(ambient, Face({1})), InvalidInputError);
}

TEST_CASE("lattice incidences connect consecutive ranks") {
    const CombPolytope p = cyclic_facets(6, 4);
    const FaceLattice lat = face_lattice(p);
    for (int r = -1; r < p.dim; ++r) {
        const auto& lower = lat.rank(r);
        const auto& upper = lat.rank(r + 1);
        const auto& links = lat.parents_of_rank(r);
        REQUIRE(links.size() == lower.size());
        for (std::size_t i = 0; i < lower.size(); ++i) {
            CHECK_FALSE(links[i].empty());
            for (int j : links[i]) CHECK(lower[i].subset_of(upper[static_cast<std::size_t>(j)]));
        }
    }
}
