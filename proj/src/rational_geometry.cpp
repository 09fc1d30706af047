#include "galetope/rational_geometry.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "galetope/construction.hpp"
#include "galetope/errors.hpp"
#include "subset_iter.hpp"

namespace galetope {

using detail::for_each_subset;

namespace {

int sign_of(const Int& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }
int sign_of(const Rational& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }

// Fraction-free Bareiss elimination; exact integer determinant.
Int bareiss_det(std::vector<std::vector<Int>> a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    Int denom = 1;
    int sgn = 1;
    for (int col = 0; col + 1 < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(col)]);
            sgn = -sgn;
        }
        auto& prow = a[static_cast<std::size_t>(col)];
        for (int r = col + 1; r < n; ++r) {
            auto& row = a[static_cast<std::size_t>(r)];
            for (int c = col + 1; c < n; ++c) {
                row[static_cast<std::size_t>(c)] =
                    (row[static_cast<std::size_t>(c)] * prow[static_cast<std::size_t>(col)] -
                     row[static_cast<std::size_t>(col)] * prow[static_cast<std::size_t>(c)]) /
                    denom;
            }
        }
        denom = prow[static_cast<std::size_t>(col)];
    }
    Int det = a[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
    return sgn > 0 ? det : -det;
}

int rational_rank(std::vector<std::vector<Rational>> a) {
    if (a.empty()) return 0;
    const int rows = static_cast<int>(a.size());
    const int cols = static_cast<int>(a[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(rank)]);
        const auto& prow = a[static_cast<std::size_t>(rank)];
        for (int r = rank + 1; r < rows; ++r) {
            auto& row = a[static_cast<std::size_t>(r)];
            if (row[static_cast<std::size_t>(col)] == 0) continue;
            const Rational factor =
                row[static_cast<std::size_t>(col)] / prow[static_cast<std::size_t>(col)];
            for (int c = col; c < cols; ++c)
                row[static_cast<std::size_t>(c)] -= factor * prow[static_cast<std::size_t>(c)];
        }
        ++rank;
    }
    return rank;
}

// (lambda*p, lambda) with lambda clearing all denominators.
std::vector<Int> lift(const RationalPoint& p) {
    Int l = 1;
    for (const Rational& q : p) l = boost::multiprecision::lcm(l, denominator(q));
    std::vector<Int> out;
    out.reserve(p.size() + 1);
    for (const Rational& q : p) out.push_back(numerator(q) * (l / denominator(q)));
    out.push_back(l);
    return out;
}

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

void divide_by_content(std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    if (g > 1)
        for (Int& x : v) x /= g;
}

// Coefficients c with sign(c . lift(x)) = sign of the orientation determinant
// whose first row is (x,1) and remaining rows are the given points. All-zero
// exactly when the points are affinely dependent.
std::vector<Int> hyperplane_coeffs(const std::vector<const RationalPoint*>& pts, int dim) {
    std::vector<std::vector<Int>> rows;
    rows.reserve(pts.size());
    for (const RationalPoint* p : pts) rows.push_back(lift(*p));
    std::vector<Int> coeffs(static_cast<std::size_t>(dim) + 1);
    std::vector<std::vector<Int>> minor(static_cast<std::size_t>(dim),
                                        std::vector<Int>(static_cast<std::size_t>(dim)));
    for (int j = 0; j <= dim; ++j) {
        for (int r = 0; r < dim; ++r) {
            int cc = 0;
            for (int c = 0; c <= dim; ++c) {
                if (c == j)
                    continue;
                minor[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc++)] =
                    rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            }
        }
        const Int det = bareiss_det(minor);
        coeffs[static_cast<std::size_t>(j)] = (j % 2 == 0) ? det : -det;
    }
    divide_by_content(coeffs);
    return coeffs;
}

bool all_zero(const std::vector<Int>& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

Rational eval_affine(const std::vector<Int>& coeffs, const RationalPoint& p) {
    Rational s = Rational(coeffs.back());
    for (std::size_t j = 0; j < p.size(); ++j) s += Rational(coeffs[j]) * p[j];
    return s;
}

std::vector<std::vector<Rational>> homogenize(const std::vector<RationalPoint>& points) {
    std::vector<std::vector<Rational>> rows;
    rows.reserve(points.size());
    for (const RationalPoint& p : points) {
        std::vector<Rational> row = p;
        row.push_back(1);
        rows.push_back(std::move(row));
    }
    return rows;
}

// Greedy affinely independent subset of the given size.
std::vector<const RationalPoint*> affine_basis(const std::vector<RationalPoint>& points,
                                               int want) {
    std::vector<const RationalPoint*> basis;
    std::vector<RationalPoint> chosen;
    for (const RationalPoint& p : points) {
        chosen.push_back(p);
        if (rational_rank(homogenize(chosen)) == static_cast<int>(chosen.size())) {
            basis.push_back(&p);
        } else {
            chosen.pop_back();
        }
        if (static_cast<int>(basis.size()) == want) break;
    }
    return basis;
}

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

} // namespace

Realization moment_points(int num_vertices, int dim) {
    if (num_vertices < 1 || dim < 1)
        throw InvalidInputError("moment_points: need at least one point and dimension 1");
    Realization r;
    r.dim = dim;
    r.points.reserve(static_cast<std::size_t>(num_vertices));
    for (int i = 0; i < num_vertices; ++i) {
        RationalPoint p;
        p.reserve(static_cast<std::size_t>(dim));
        Int power = 1;
        for (int j = 0; j < dim; ++j) {
            power *= i;
            p.emplace_back(power);
        }
        r.points.push_back(std::move(p));
    }
    return r;
}

int affine_rank(const std::vector<RationalPoint>& points) {
    return rational_rank(homogenize(points));
}

RationalPoint centroid(const std::vector<RationalPoint>& points) {
    if (points.empty()) throw InvalidInputError("centroid of no points");
    RationalPoint c(points[0].size(), Rational(0));
    for (const RationalPoint& p : points)
        for (std::size_t j = 0; j < c.size(); ++j) c[j] += p[j];
    for (Rational& x : c) x /= static_cast<int>(points.size());
    return c;
}

CombPolytope hull_facets(const Realization& r) {
    const int d = r.dim;
    const int n = static_cast<int>(r.points.size());
    if (d < 1) throw InvalidInputError("hull_facets: dimension must be at least 1");
    for (const RationalPoint& p : r.points) {
        if (static_cast<int>(p.size()) != d)
            throw InvalidInputError("hull_facets: point dimension mismatch");
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (r.points[static_cast<std::size_t>(i)] == r.points[static_cast<std::size_t>(j)])
                throw InvalidInputError("hull_facets: duplicate points " + std::to_string(i) +
                                        " and " + std::to_string(j));
        }
    }
    if (n < d + 1 || affine_rank(r.points) != d + 1)
        throw DegenerateInputError("hull_facets: points do not span dimension " +
                                   std::to_string(d));

    std::vector<std::vector<Int>> lifts;
    lifts.reserve(static_cast<std::size_t>(n));
    for (const RationalPoint& p : r.points) lifts.push_back(lift(p));

    std::set<Face> facets;
    for_each_subset(n, d, [&](const std::vector<int>& idx) {
        std::vector<const RationalPoint*> pts;
        pts.reserve(static_cast<std::size_t>(d));
        for (int i : idx) pts.push_back(&r.points[static_cast<std::size_t>(i)]);
        const std::vector<Int> coeffs = hyperplane_coeffs(pts, d);
        if (all_zero(coeffs)) return; // affinely dependent subset
        std::vector<int> on(idx.begin(), idx.end());
        bool pos = false, neg = false;
        for (int q = 0; q < n; ++q) {
            if (std::binary_search(idx.begin(), idx.end(), q)) continue;
            const int s = sign_of(dot(coeffs, lifts[static_cast<std::size_t>(q)]));
            if (s > 0)
                pos = true;
            else if (s < 0)
                neg = true;
            else
                on.push_back(q);
            if (pos && neg) return;
        }
        facets.insert(Face(std::move(on)));
    });
    return make_comb_polytope(d, n, {facets.begin(), facets.end()});
}

Side side_of(const std::vector<RationalPoint>& facet_points,
             const RationalPoint& reference_interior, const RationalPoint& query) {
    if (facet_points.empty()) throw InvalidInputError("side_of: empty facet");
    const int d = static_cast<int>(reference_interior.size());
    for (const RationalPoint& p : facet_points) {
        if (static_cast<int>(p.size()) != d)
            throw InvalidInputError("side_of: point dimension mismatch");
    }
    if (static_cast<int>(query.size()) != d)
        throw InvalidInputError("side_of: point dimension mismatch");
    if (affine_rank(facet_points) != d)
        throw DegenerateInputError("side_of: facet points do not span a hyperplane");

    const std::vector<const RationalPoint*> basis = affine_basis(facet_points, d);
    const std::vector<Int> coeffs = hyperplane_coeffs(basis, d);
    const int ref_sign = sign_of(eval_affine(coeffs, reference_interior));
    if (ref_sign == 0)
        throw DegenerateInputError("side_of: reference point lies on the facet hyperplane");
    const int q_sign = sign_of(eval_affine(coeffs, query));
    if (q_sign == 0) return Side::On;
    return q_sign == ref_sign ? Side::Beneath : Side::Beyond;
}

std::optional<std::vector<Rational>>
strict_interior_point(const std::vector<StrictConstraint>& constraints, const Int& box) {
    if (constraints.empty()) throw InvalidInputError("strict_interior_point: no constraints");
    const int vars = static_cast<int>(constraints[0].coeff.size());
    if (vars < 1) throw InvalidInputError("strict_interior_point: no variables");
    for (const StrictConstraint& c : constraints) {
        if (static_cast<int>(c.coeff.size()) != vars)
            throw InvalidInputError("strict_interior_point: inconsistent arity");
    }
    if (box <= 0) throw InvalidInputError("strict_interior_point: box must be positive");

    // Weak system: the strict constraints relaxed, plus the bounding box.
    std::vector<std::pair<std::vector<Int>, Int>> weak;
    for (const StrictConstraint& c : constraints) {
        if (all_zero(c.coeff)) {
            if (c.bound >= 0) return std::nullopt; // 0 > bound unsatisfiable
            continue;
        }
        weak.emplace_back(c.coeff, c.bound);
    }
    for (int j = 0; j < vars; ++j) {
        std::vector<Int> e(static_cast<std::size_t>(vars), Int(0));
        e[static_cast<std::size_t>(j)] = 1;
        weak.emplace_back(e, -box);
        e[static_cast<std::size_t>(j)] = -1;
        weak.emplace_back(e, -box);
    }

    const int m = static_cast<int>(weak.size());
    std::vector<std::vector<Rational>> vertices;
    std::vector<std::vector<Int>> mat(static_cast<std::size_t>(vars),
                                      std::vector<Int>(static_cast<std::size_t>(vars)));
    for_each_subset(m, vars, [&](const std::vector<int>& idx) {
        for (int r = 0; r < vars; ++r)
            mat[static_cast<std::size_t>(r)] = weak[static_cast<std::size_t>(idx[static_cast<std::size_t>(r)])].first;
        const Int den = bareiss_det(mat);
        if (den == 0) return;
        // Cramer: solve coeff * y = bound on the chosen planes.
        std::vector<Int> num(static_cast<std::size_t>(vars));
        for (int c = 0; c < vars; ++c) {
            std::vector<std::vector<Int>> mc = mat;
            for (int r = 0; r < vars; ++r)
                mc[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                    weak[static_cast<std::size_t>(idx[static_cast<std::size_t>(r)])].second;
            num[static_cast<std::size_t>(c)] = bareiss_det(mc);
        }
        Int d = den;
        if (d < 0) {
            d = -d;
            for (Int& x : num) x = -x;
        }
        for (const auto& [a, b] : weak) {
            if (dot(a, num) < b * d) return; // infeasible vertex
        }
        std::vector<Rational> y;
        y.reserve(static_cast<std::size_t>(vars));
        for (const Int& x : num) y.emplace_back(x, d);
        vertices.push_back(std::move(y));
    });
    if (vertices.empty()) return std::nullopt;

    std::vector<Rational> bary(static_cast<std::size_t>(vars), Rational(0));
    for (const auto& v : vertices)
        for (int j = 0; j < vars; ++j) bary[static_cast<std::size_t>(j)] += v[static_cast<std::size_t>(j)];
    for (Rational& x : bary) x /= static_cast<int>(vertices.size());

    for (const StrictConstraint& c : constraints) {
        Rational lhs = 0;
        for (int j = 0; j < vars; ++j)
            lhs += Rational(c.coeff[static_cast<std::size_t>(j)]) * bary[static_cast<std::size_t>(j)];
        if (!(lhs > Rational(c.bound))) return std::nullopt; // region has no interior here
    }
    return bary;
}

namespace {

struct StepSystem {
    RationalPoint origin;                 // x_0
    std::vector<RationalPoint> spans;     // x_{n-k+1}-x_0, x_{n-k+2}-x_0, x_{n-1}-x_0
    std::vector<StrictConstraint> strict; // side constraints in (a,b,c)
};

RationalPoint combine(const StepSystem& sys, const std::vector<Rational>& y) {
    RationalPoint x = sys.origin;
    for (std::size_t t = 0; t < sys.spans.size(); ++t)
        for (std::size_t j = 0; j < x.size(); ++j) x[j] += y[t] * sys.spans[t][j];
    return x;
}

bool satisfies_strict(const StepSystem& sys, const std::vector<Rational>& y) {
    for (const StrictConstraint& c : sys.strict) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < y.size(); ++j) lhs += Rational(c.coeff[j]) * y[j];
        if (!(lhs > Rational(c.bound))) return false;
    }
    return true;
}

StepSystem build_step_system(const Realization& r, int n, int k, const CombPolytope& facets) {
    const int d = r.dim;
    if (static_cast<int>(r.points.size()) != n)
        throw InvalidInputError("realize_next_point: realization must hold vertices 0..n-1");
    if (n < k) throw InvalidInputError("realize_next_point: requires n >= k");
    if (facets.num_vertices != n || facets.dim != d)
        throw InvalidInputError("realize_next_point: facet family does not match realization");

    StepSystem sys;
    sys.origin = r.points[0];
    for (int marker : {n - k + 1, n - k + 2, n - 1}) {
        RationalPoint u = r.points[static_cast<std::size_t>(marker)];
        for (std::size_t j = 0; j < u.size(); ++j) u[j] -= sys.origin[j];
        sys.spans.push_back(std::move(u));
    }

    const RationalPoint center = centroid(r.points);
    for (const Face& f : facets.facets) {
        const PositionClass cls = classify_position(f, n, k);
        if (cls == PositionClass::InAffineHull) continue; // hyperplane contains all four markers
        std::vector<RationalPoint> fpts;
        fpts.reserve(static_cast<std::size_t>(f.size()));
        for (int v : f) fpts.push_back(r.points[static_cast<std::size_t>(v)]);
        if (affine_rank(fpts) != d)
            throw DegenerateInputError("facet does not span a hyperplane");
        const std::vector<Int> coeffs = hyperplane_coeffs(affine_basis(fpts, d), d);
        const int ref_sign = sign_of(eval_affine(coeffs, center));
        if (ref_sign == 0)
            throw DegenerateInputError("centroid lies on a facet hyperplane");

        // Want sign(eval(x)) == ref_sign for Beneath, the opposite for Beyond.
        const int want = cls == PositionClass::Beneath ? ref_sign : -ref_sign;
        const Rational base = eval_affine(coeffs, sys.origin);
        std::vector<Rational> lin;
        for (const RationalPoint& u : sys.spans) {
            Rational g = 0;
            for (std::size_t j = 0; j < u.size(); ++j) g += Rational(coeffs[j]) * u[j];
            lin.push_back(g);
        }
        // want * (base + lin . y) > 0, cleared to integers.
        Int scale = 1;
        scale = boost::multiprecision::lcm(scale, denominator(base));
        for (const Rational& g : lin) scale = boost::multiprecision::lcm(scale, denominator(g));
        StrictConstraint c;
        for (const Rational& g : lin) {
            Rational s = g * scale * want;
            c.coeff.push_back(numerator(s));
        }
        {
            Rational s = base * scale * want;
            c.bound = -numerator(s);
        }
        std::vector<Int> content = c.coeff;
        content.push_back(c.bound);
        divide_by_content(content);
        for (std::size_t j = 0; j < c.coeff.size(); ++j) c.coeff[j] = content[j];
        c.bound = content.back();
        if (all_zero(c.coeff) && c.bound >= 0)
            throw InfeasibleError("a facet constraint is constant and violated");
        sys.strict.push_back(std::move(c));
    }
    return sys;
}

std::vector<Rational> snap(const std::vector<Rational>& y, const Int& den) {
    std::vector<Rational> out;
    out.reserve(y.size());
    for (const Rational& v : y) {
        // round half up: floor((2*p*den + q) / (2*q))
        const Int p = numerator(v), q = denominator(v);
        out.emplace_back(floor_div(2 * p * den + q, 2 * q), den);
    }
    return out;
}

} // namespace

std::vector<RationalPoint> realize_next_point_candidates(const Realization& r, int n, int k,
                                                         const CombPolytope& facets) {
    StepSystem sys = build_step_system(r, n, k, facets);

    std::optional<std::vector<Rational>> bary;
    for (int exp : {4, 8, 16, 32}) {
        bary = strict_interior_point(sys.strict, Int(1) << exp);
        if (bary) break;
    }
    if (!bary)
        throw InfeasibleError("realize_next_point: empty strict feasibility region for x_" +
                              std::to_string(n));

    std::vector<std::vector<Rational>> picks;
    for (int t = 0; t <= 30 && picks.size() < 2; ++t) {
        const std::vector<Rational> cand = snap(*bary, Int(1) << t);
        if (satisfies_strict(sys, cand) && (picks.empty() || cand != picks.back()))
            picks.push_back(cand);
    }
    picks.push_back(*bary);

    const RationalPoint center = centroid(r.points);
    std::vector<RationalPoint> out;
    for (const auto& y : picks) {
        RationalPoint x = combine(sys, y);
        bool ok = true;
        for (const Face& f : facets.facets) {
            std::vector<RationalPoint> fpts;
            for (int v : f) fpts.push_back(r.points[static_cast<std::size_t>(v)]);
            const Side side = side_of(fpts, center, x);
            const PositionClass cls = classify_position(f, n, k);
            const bool match = (cls == PositionClass::Beyond && side == Side::Beyond) ||
                               (cls == PositionClass::Beneath && side == Side::Beneath) ||
                               (cls == PositionClass::InAffineHull && side == Side::On);
            if (!match) {
                ok = false;
                break;
            }
        }
        if (ok && std::find(out.begin(), out.end(), x) == out.end()) out.push_back(std::move(x));
    }
    if (out.empty())
        throw InfeasibleError("realize_next_point: no candidate passes side verification for x_" +
                              std::to_string(n));
    return out;
}

RationalPoint realize_next_point(const Realization& r, int n, int k,
                                 const CombPolytope& facets) {
    return realize_next_point_candidates(r, n, k, facets).front();
}

Realization realize_construction(const ConstructionState& state) {
    Realization r = moment_points(state.period, state.dim);
    if (hull_facets(r) != state.initial)
        throw InfeasibleError("moment-curve start does not realize the initial cyclic polytope");
    for (const ConstructionStep& step : state.steps) {
        const CombPolytope& before = state.polytope_at(step.new_vertex - 1);
        const std::vector<RationalPoint> candidates =
            realize_next_point_candidates(r, step.new_vertex, state.period, before);
        bool placed = false;
        for (const RationalPoint& x : candidates) {
            Realization extended = r;
            extended.points.push_back(x);
            if (hull_facets(extended) == step.result) {
                r = std::move(extended);
                placed = true;
                break;
            }
        }
        if (!placed)
            throw InfeasibleError("no feasible point reproduces the facet family at vertex " +
                                  std::to_string(step.new_vertex));
    }
    return r;
}

} // namespace galetope
