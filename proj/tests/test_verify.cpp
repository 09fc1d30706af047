#include <doctest.h>

#include "galetope/construction.hpp"
#include "galetope/errors.hpp"
#include "galetope/families.hpp"
#include "galetope/rational_geometry.hpp"
#include "galetope/verify.hpp"

using namespace galetope;

namespace {

CombPolytope natural_prism() {
    return make_comb_polytope(3, 6,
                              {Face{0, 1, 2}, Face{3, 4, 5}, Face{0, 1, 3, 4}, Face{1, 2, 4, 5},
                               Face{0, 2, 3, 5}});
}

CombPolytope relabeled_prism() {
    return make_comb_polytope(3, 6,
                              {Face{0, 1, 3}, Face{2, 4, 5}, Face{0, 1, 2, 4}, Face{1, 3, 4, 5},
                               Face{0, 2, 3, 5}});
}

} // namespace

TEST_CASE("gale polytope predicate") {
    CHECK(is_gale_polytope(simplex_facets(3)));
    CHECK(is_gale_polytope(cyclic_facets(6, 4)));
    CHECK_FALSE(is_gale_polytope(relabeled_prism())); // facet {0,1,3}: pair (2,4) is split once
}

TEST_CASE("simplicial predicate") {
    CHECK(is_simplicial(cyclic_facets(6, 4)));
    CHECK(is_simplicial(simplex_facets(3)));
    CHECK(is_simplicial(braxtope_facets(4, 3))); // every 3-braxtope is simplicial
    CHECK_FALSE(is_simplicial(multiplex_facets(5, 3)));
    CHECK_FALSE(is_simplicial(build(6, 8, 9).polytope));
}

TEST_CASE("braxial predicate") {
    CHECK(is_braxial(cyclic_facets(8, 6)));
    CHECK(is_braxial(simplex_facets(4)));
    CHECK(is_braxial(build(6, 8, 9).polytope));
    CHECK(is_braxial(braxtope_facets(8, 6))); // braxtopes are braxial
    CHECK_FALSE(is_braxial(natural_prism())); // a 2-braxtope is a triangle
}

TEST_CASE("multiplicial predicate") {
    CHECK(is_multiplicial(cyclic_facets(6, 4)));
    CHECK(is_multiplicial(multiplex_facets(5, 3)));
    // Quadrilateral facets of the prism carry the 2-multiplex edge pattern in
    // the induced order, so the prism is multiplicial (though not braxial).
    CHECK(is_multiplicial(natural_prism()));
    CHECK_FALSE(is_multiplicial(build(6, 8, 9).polytope));
}

TEST_CASE("generated braxtopes are braxial, generated multiplexes multiplicial") {
    for (int e = 3; e <= 5; ++e)
        for (int m = e; m <= e + 4; ++m) CHECK(is_braxial(braxtope_facets(m, e)));
    for (int d = 3; d <= 5; ++d)
        for (int nv = d + 1; nv <= d + 4; ++nv) CHECK(is_multiplicial(multiplex_facets(nv, d)));
}

TEST_CASE("vertex stars") {
    CHECK(vertex_star(cyclic_facets(6, 4), 0) == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(vertex_star(build(6, 8, 9).polytope, 9) == std::vector<int>{3, 4, 5, 6, 7, 8});
    CHECK(vertex_star(braxtope_facets(8, 6), 8) == std::vector<int>{3, 4, 5, 6, 7});
    // x_0 is excluded from stars of later vertices even though {0, i} is an edge
    CHECK(vertex_star(braxtope_facets(8, 6), 0) ==
          std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8});
    CHECK_THROWS_AS(vertex_star(simplex_facets(3), 9), InvalidInputError);
}

TEST_CASE("classification of the main families") {
    const ClassificationResult cyc = classify_gale_braxial(cyclic_facets(10, 6));
    CHECK(cyc.kind == GaleBraxialKind::Cyclic);
    CHECK(cyc.s == 1);

    const ClassificationResult pc = classify_gale_braxial(build(6, 8, 10).polytope);
    CHECK(pc.kind == GaleBraxialKind::PeriodicallyCyclic);
    CHECK(pc.period == 8);
    CHECK(pc.s == 4);

    const ClassificationResult bx = classify_gale_braxial(braxtope_facets(8, 6));
    CHECK(bx.kind == GaleBraxialKind::BraxtopeClass);
    CHECK(bx.s == 3);

    CHECK(classify_gale_braxial(natural_prism()).kind == GaleBraxialKind::NotGaleBraxial);
    CHECK(classify_gale_braxial(relabeled_prism()).kind == GaleBraxialKind::NotGaleBraxial);

    // Odd dimensions classify through the simplicial route.
    const ClassificationResult odd = classify_gale_braxial(cyclic_facets(8, 5));
    CHECK(odd.kind == GaleBraxialKind::Cyclic);

    // Even d=4 carries the explicit marker instead of a classification.
    const ClassificationResult d4 = classify_gale_braxial(build(4, 6, 8).polytope);
    CHECK(d4.kind == GaleBraxialKind::HypothesisNotMet);

    CHECK(to_string(pc) == "PeriodicallyCyclic period=8 s=4");
}

TEST_CASE("classification survives non-polytopal input") {
    const CombPolytope bad = make_comb_polytope(
        3, 5,
        {Face{0, 1, 2}, Face{0, 1, 3}, Face{0, 1, 4}, Face{2, 3, 4}, Face{1, 3, 4}, Face{1, 2, 4}});
    CHECK(classify_gale_braxial(bad).kind == GaleBraxialKind::NotGaleBraxial);
}

TEST_CASE("periodic cyclicity of realized constructions") {
    const Realization r = realize_construction(build(6, 8, 10));
    CHECK(is_periodically_cyclic(r, 8));
    CHECK_FALSE(is_periodically_cyclic(r, 9));
    // The whole moment curve is one window when k = n+1.
    CHECK(is_periodically_cyclic(moment_points(9, 6), 9));
    CHECK_THROWS_AS(is_periodically_cyclic(moment_points(9, 6), 7), InvalidInputError);
    CHECK_THROWS_AS(is_periodically_cyclic(moment_points(9, 6), 10), InvalidInputError);
}

TEST_CASE("structure theorem suite passes on a construction") {
    const ConstructionState st = build(6, 8, 9);
    const Realization r = realize_construction(st);
    const TheoremReport report = check_structure_theorems(st, r);
    CHECK(report.checks.size() == 8);
    for (const TheoremCheck& c : report.checks) {
        INFO(c.name << " " << c.witness);
        CHECK(c.pass);
    }
    CHECK(report.all_pass());
}

TEST_CASE("tampered state is rejected") {
    ConstructionState st = build(6, 8, 9);
    const Realization r = realize_construction(st);
    st.polytope.facets.pop_back();
    CHECK_THROWS_AS(check_structure_theorems(st, r), InvalidInputError);
}

TEST_CASE("structure checks pass vacuously on cyclic input where s=1") {
    const CombPolytope p = cyclic_facets(9, 6);
    const Realization r = moment_points(9, 6);
    Realization prev;
    prev.dim = r.dim;
    prev.points.assign(r.points.begin(), r.points.end() - 1);
    const TheoremReport rep = run_structure_checks(p, hull_facets(prev), r);
    for (const TheoremCheck& c : rep.checks) {
        INFO(c.name << " " << c.witness);
        CHECK(c.pass);
    }
    // The suite is defined by the even-dimensional theory.
    CHECK_THROWS_AS(
        run_structure_checks(cyclic_facets(8, 5), cyclic_facets(7, 5), moment_points(8, 5)),
        InvalidInputError);
}

TEST_CASE("other periods and dimensions") {
    const ConstructionState st = build(6, 10, 12);
    const ClassificationResult c = classify_gale_braxial(st.polytope);
    CHECK(c.kind == GaleBraxialKind::PeriodicallyCyclic);
    CHECK(c.period == 10);
    CHECK(c.s == 4);
    const Realization r = realize_construction(st);
    CHECK(is_periodically_cyclic(r, 10));
    CHECK_FALSE(is_periodically_cyclic(r, 11));
    CHECK(check_structure_theorems(st, r).all_pass());

    const ConstructionState st8 = build(8, 10, 10);
    CHECK(is_gale_polytope(st8.polytope));
    CHECK(is_braxial(st8.polytope));
    CHECK(hull_facets(realize_construction(st8)) == st8.polytope);

    CHECK(to_string(classify_gale_braxial(braxtope_facets(10, 6))) == "Braxtope s=5");
}
