#include "galetope/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "galetope/construction.hpp"
#include "galetope/errors.hpp"
#include "galetope/families.hpp"

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

std::string set_str(const std::vector<int>& v) {
    return face_str(Face(v));
}

// Ridges of p grouped by the facets containing them.
std::map<Face, std::vector<Face>> ridges_per_facet(const CombPolytope& p) {
    std::map<Face, std::vector<Face>> per;
    for (const Face& f : p.facets) per[f] = {};
    for (const RidgeIncidence& r : ridges(p)) {
        per[p.facets[static_cast<std::size_t>(r.facet_a)]].push_back(r.ridge);
        per[p.facets[static_cast<std::size_t>(r.facet_b)]].push_back(r.ridge);
    }
    return per;
}

// Reference facet family for a facet with m+1 vertices of a d-polytope.
CombPolytope braxtope_reference(int m, int facet_dim) {
    if (facet_dim <= 2) return simplex_facets(facet_dim);
    return braxtope_facets(m, facet_dim);
}

CombPolytope multiplex_reference(int m, int facet_dim) {
    if (facet_dim < 2) return simplex_facets(facet_dim);
    return multiplex_facets(m + 1, facet_dim);
}

bool facets_match_reference(const CombPolytope& p,
                            CombPolytope (*reference)(int, int)) {
    validate(p);
    const auto per = ridges_per_facet(p);
    for (const Face& f : p.facets) {
        const int m = f.size() - 1;
        const CombPolytope ref = reference(m, p.dim - 1);
        if (ref.num_vertices != f.size()) return false;
        std::vector<Face> local;
        local.reserve(per.at(f).size());
        for (const Face& r : per.at(f)) local.push_back(localize(f, r));
        std::sort(local.begin(), local.end());
        local.erase(std::unique(local.begin(), local.end()), local.end());
        if (local != ref.facets) return false;
    }
    return true;
}

std::set<Face> edge_set(const CombPolytope& p) {
    const auto es = edges_of(face_lattice(p));
    return {es.begin(), es.end()};
}

// All paired subsets of {lo..hi} made of `pairs` disjoint consecutive pairs.
void paired_subsets(int lo, int hi, int pairs, std::vector<int>& acc,
                    std::vector<Face>& out) {
    if (pairs == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int a = lo; a + 1 <= hi; ++a) {
        acc.push_back(a);
        acc.push_back(a + 1);
        paired_subsets(a + 2, hi, pairs - 1, acc, out);
        acc.pop_back();
        acc.pop_back();
    }
}

std::vector<int> contiguous(int lo, int hi) {
    std::vector<int> v;
    for (int i = lo; i <= hi; ++i) v.push_back(i);
    return v;
}

} // namespace

bool is_gale_polytope(const CombPolytope& p) {
    validate(p);
    return std::all_of(p.facets.begin(), p.facets.end(),
                       [&](const Face& f) { return is_gale_subset(f, p.num_vertices); });
}

bool is_simplicial(const CombPolytope& p) {
    validate(p);
    return std::all_of(p.facets.begin(), p.facets.end(),
                       [&](const Face& f) { return f.size() == p.dim; });
}

bool is_braxial(const CombPolytope& p) {
    return facets_match_reference(p, &braxtope_reference);
}

bool is_multiplicial(const CombPolytope& p) {
    return facets_match_reference(p, &multiplex_reference);
}

std::vector<int> vertex_star(const CombPolytope& p, int i) {
    validate(p);
    if (i < 0 || i >= p.num_vertices)
        throw InvalidInputError("vertex_star: vertex index out of range");
    std::vector<int> star;
    for (const Face& e : edge_set(p)) {
        if (!e.contains(i)) continue;
        const int other = e.vertices()[0] == i ? e.vertices()[1] : e.vertices()[0];
        if (i >= 1 && other == 0) continue;
        star.push_back(other);
    }
    std::sort(star.begin(), star.end());
    return star;
}

std::string to_string(GaleBraxialKind kind) {
    switch (kind) {
    case GaleBraxialKind::Cyclic: return "Cyclic";
    case GaleBraxialKind::PeriodicallyCyclic: return "PeriodicallyCyclic";
    case GaleBraxialKind::BraxtopeClass: return "Braxtope";
    case GaleBraxialKind::NotGaleBraxial: return "NotGaleBraxial";
    case GaleBraxialKind::HypothesisNotMet: return "HypothesisNotMet";
    }
    return "?";
}

std::string to_string(const ClassificationResult& c) {
    std::ostringstream os;
    os << to_string(c.kind);
    if (c.kind == GaleBraxialKind::PeriodicallyCyclic) os << " period=" << c.period;
    if (c.s >= 0) os << " s=" << c.s;
    if (!c.note.empty()) os << " (" << c.note << ")";
    return os.str();
}

ClassificationResult classify_gale_braxial(const CombPolytope& p) {
    ClassificationResult out;
    std::set<Face> edges;
    try {
        validate(p);
        edges = edge_set(p);
    } catch (const NotPolytopalError& e) {
        out.kind = GaleBraxialKind::NotGaleBraxial;
        out.note = e.what();
        return out;
    } catch (const InvalidInputError& e) {
        out.kind = GaleBraxialKind::NotGaleBraxial;
        out.note = e.what();
        return out;
    }

    const int n = p.num_vertices - 1;
    const int d = p.dim;
    for (int j = 1; j < n; ++j) {
        if (edges.count(Face{j, n}) != 0) {
            out.s = j;
            break;
        }
    }

    const bool gale = is_gale_polytope(p);
    const bool simplicial = is_simplicial(p);
    if (gale && simplicial) {
        out.kind = GaleBraxialKind::Cyclic;
        return out;
    }
    if (!gale || !is_braxial(p)) {
        out.kind = GaleBraxialKind::NotGaleBraxial;
        return out;
    }
    if (d % 2 != 0) {
        // A Gale braxial polytope of odd dimension is simplicial; reaching
        // here means the facet family is not a polytope's.
        out.kind = GaleBraxialKind::HypothesisNotMet;
        out.note = "odd-dimensional Gale braxial input that is not simplicial";
        return out;
    }
    if (d < 6 || n < d + 1) {
        out.kind = GaleBraxialKind::HypothesisNotMet;
        out.note = "classification needs even d >= 6 and n >= d+1";
        return out;
    }
    if (out.s == 1) {
        out.kind = GaleBraxialKind::Cyclic;
    } else if (2 <= out.s && out.s <= n - d) {
        out.kind = GaleBraxialKind::PeriodicallyCyclic;
        out.period = n - out.s + 2;
    } else if (out.s == n - d + 1) {
        out.kind = GaleBraxialKind::BraxtopeClass;
    } else {
        out.kind = GaleBraxialKind::NotGaleBraxial;
        out.note = "edge star of the last vertex out of range";
    }
    return out;
}

bool is_periodically_cyclic(const Realization& r, int k) {
    const int count = static_cast<int>(r.points.size());
    const int n = count - 1;
    if (k < r.dim + 2 || k > n + 1)
        throw InvalidInputError("is_periodically_cyclic: requires d+2 <= k <= n+1");

    const auto window_cyclic = [&](int first, int size) {
        Realization w;
        w.dim = r.dim;
        w.points.assign(r.points.begin() + first, r.points.begin() + first + size);
        const CombPolytope hull = hull_facets(w);
        return is_simplicial(hull) && is_gale_polytope(hull);
    };
    for (int i = -1; i <= n - k; ++i) {
        if (!window_cyclic(i + 1, k)) return false;
    }
    for (int i = -1; i <= n - k - 1; ++i) {
        if (window_cyclic(i + 1, k + 1)) return false;
    }
    return true;
}

bool TheoremReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const TheoremCheck& c) { return c.pass; });
}

TheoremReport run_structure_checks(const CombPolytope& p, const CombPolytope& p_prev,
                                   const Realization& r) {
    validate(p);
    validate(p_prev);
    const int n = p.num_vertices - 1;
    const int d = p.dim;
    if (d % 2 != 0 || d < 4)
        throw InvalidInputError("structure checks apply to even dimension >= 4");
    if (p_prev.num_vertices != n || p_prev.dim != d)
        throw InvalidInputError("structure checks: truncation does not have n vertices");
    if (static_cast<int>(r.points.size()) != n + 1 || r.dim != d)
        throw InvalidInputError("structure checks: realization does not match the polytope");

    TheoremReport report;
    const auto add = [&report](std::string name, bool pass, std::string witness) {
        report.checks.push_back(TheoremCheck{std::move(name), pass, pass ? "" : std::move(witness)});
    };

    const FaceLattice lattice = face_lattice(p);
    const std::vector<Face> edge_list = edges_of(lattice);
    const std::set<Face> edges(edge_list.begin(), edge_list.end());
    int s = -1;
    for (int j = 1; j < n; ++j) {
        if (edges.count(Face{j, n}) != 0) {
            s = j;
            break;
        }
    }

    // (a) Every facet omitting x_0 is a (d-1)-simplex.
    {
        bool pass = true;
        std::string witness;
        for (const Face& f : p.facets) {
            if (!f.contains(0) && f.size() != d) {
                pass = false;
                witness = face_str(f);
                break;
            }
        }
        add("facet-without-x0-is-simplex", pass, witness);
    }

    // (b) V_0 is every other vertex.
    {
        const std::vector<int> star = vertex_star(p, 0);
        add("star-of-x0-is-everything", star == contiguous(1, n), set_str(star));
    }

    // (c) Edges span intervals: {p,r} an edge forces {p,q} and {q,r}.
    {
        bool pass = true;
        std::string witness;
        for (int a = 1; a <= n && pass; ++a) {
            for (int b = a + 2; b <= n && pass; ++b) {
                if (edges.count(Face{a, b}) == 0) continue;
                for (int q = a + 1; q < b; ++q) {
                    if (edges.count(Face{a, q}) == 0 || edges.count(Face{q, b}) == 0) {
                        pass = false;
                        witness = "edge " + face_str(Face{a, b}) + " misses " + std::to_string(q);
                        break;
                    }
                }
            }
        }
        add("edge-interval-property", pass, witness);
    }

    // (d) V_1 and V_n are contiguous runs with the stated bounds.
    {
        const std::vector<int> v1 = vertex_star(p, 1);
        const std::vector<int> vn = vertex_star(p, n);
        bool pass = !v1.empty() && !vn.empty();
        std::string witness;
        if (pass) {
            const int rr = v1.back();
            pass = v1 == contiguous(2, rr) && d <= rr && rr <= n;
            if (!pass) witness = "V_1 = " + set_str(v1);
        }
        if (pass) {
            const int ss = vn.front();
            pass = vn == contiguous(ss, n - 1) && 1 <= ss && ss <= n - d + 1 && ss == s;
            if (!pass) witness = "V_n = " + set_str(vn);
        }
        add("end-vertex-stars-contiguous", pass, witness);
    }

    // (e) Paired d-sets in {x_s..x_n} are facets; the five-vertex set
    // {x_0, x_{s-1}, x_s, x_{n-1}, x_n} is a rank-3 face.
    {
        bool pass = s >= 1;
        std::string witness = "s=" + std::to_string(s);
        if (pass) {
            std::vector<Face> paired;
            std::vector<int> acc;
            paired_subsets(s, n, d / 2, acc, paired);
            const std::set<Face> facet_set(p.facets.begin(), p.facets.end());
            for (const Face& f : paired) {
                if (facet_set.count(f) == 0) {
                    pass = false;
                    witness = "paired set " + face_str(f) + " is not a facet";
                    break;
                }
            }
        }
        if (pass && s >= 2) {
            const Face quint({0, s - 1, s, n - 1, n});
            if (lattice.rank_of(quint) != 3) {
                pass = false;
                witness = face_str(quint) + " is not a rank-3 face";
            }
        }
        add("paired-sets-and-corner-3-face", pass, witness);
    }

    // (f) V_{n-1} = {x_{s-1} .. x_{n-2}} plus x_n; hypothesis needs s >= 2.
    {
        bool pass = s >= 1;
        std::string witness = "s=" + std::to_string(s);
        if (s >= 2) {
            std::vector<int> expect = contiguous(s - 1, n - 2);
            expect.push_back(n);
            const std::vector<int> got = vertex_star(p, n - 1);
            pass = got == expect;
            if (!pass) witness = "V_{n-1} = " + set_str(got);
        }
        add("star-of-second-last-vertex", pass, witness);
    }

    // (g) Truncation is Gale and braxial with the predicted star of x_{n-1}.
    {
        bool pass = is_gale_polytope(p_prev) && is_braxial(p_prev);
        std::string witness = "truncation fails gale/braxial";
        if (pass && s >= 2) {
            const std::vector<int> got = vertex_star(p_prev, n - 1);
            pass = got == contiguous(s - 1, n - 2);
            if (!pass) witness = "V_{n-1}(P') = " + set_str(got);
        }
        add("truncation-gale-braxial", pass, witness);
    }

    // (h) Geometric position of x_n against every truncation facet matches
    // the membership trichotomy; hypothesis needs s >= 2.
    {
        bool pass = s >= 1;
        std::string witness = "s=" + std::to_string(s);
        if (s >= 2) {
            std::vector<RationalPoint> prev_points(r.points.begin(), r.points.end() - 1);
            const RationalPoint center = centroid(prev_points);
            const RationalPoint& query = r.points.back();
            for (const Face& f : p_prev.facets) {
                Side expected;
                if (f.contains(0) && f.contains(s - 1) && f.contains(s) && f.contains(n - 1)) {
                    expected = Side::On;
                } else if (f.contains(0) && f.contains(n - 1) && !f.contains(s - 1)) {
                    expected = Side::Beyond;
                } else {
                    expected = Side::Beneath;
                }
                std::vector<RationalPoint> fpts;
                for (int v : f) fpts.push_back(r.points[static_cast<std::size_t>(v)]);
                if (side_of(fpts, center, query) != expected) {
                    pass = false;
                    witness = "facet " + face_str(f);
                    break;
                }
            }
        }
        add("new-vertex-position-trichotomy", pass, witness);
    }

    return report;
}

TheoremReport check_structure_theorems(const ConstructionState& state, const Realization& r) {
    if (static_cast<int>(r.points.size()) != state.max_vertex + 1 || r.dim != state.dim)
        throw InvalidInputError("check_structure_theorems: realization shape mismatch");
    if (hull_facets(r) != state.polytope)
        throw InvalidInputError("check_structure_theorems: realization does not realize the state");
    if (state.steps.empty())
        throw InvalidInputError("check_structure_theorems: state has no extension step");
    return run_structure_checks(state.polytope, state.polytope_at(state.max_vertex - 1), r);
}

} // namespace galetope
