#include "amo/newton.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "amo/elim.hpp"
#include "amo/univariate.hpp"

namespace amo {

namespace {

long idot(const std::vector<long>& a, const Exp& x) {
    long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * (long)x[i];
    return s;
}

std::vector<long> primitive(std::vector<long> v) {
    long g = 0;
    for (long x : v) g = std::gcd(g, std::abs(x));
    if (g > 1)
        for (long& x : v) x /= g;
    return v;
}

std::vector<long> cross(const std::vector<long>& a, const std::vector<long>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

std::vector<long> diff(const Exp& a, const Exp& b) {
    std::vector<long> d(a.size());
    for (size_t i = 0; i < a.size(); ++i) d[i] = (long)a[i] - (long)b[i];
    return d;
}

int affine_rank(const std::vector<Exp>& pts) {
    if (pts.size() <= 1) return 0;
    std::vector<std::vector<long>> rows;
    for (size_t i = 1; i < pts.size(); ++i) rows.push_back(diff(pts[i], pts[0]));
    return (int)lattice_row_basis(rows).size();
}

// 2-D convex hull, counterclockwise, no collinear points kept
std::vector<std::array<long, 2>> hull2d(std::vector<std::array<long, 2>> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    auto cr = [](const std::array<long, 2>& o, const std::array<long, 2>& a,
                 const std::array<long, 2>& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    std::vector<std::array<long, 2>> h(2 * pts.size());
    size_t k = 0;
    for (auto& p : pts) {
        while (k >= 2 && cr(h[k - 2], h[k - 1], p) <= 0) --k;
        h[k++] = p;
    }
    size_t lower = k + 1;
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (k >= lower && cr(h[k - 2], h[k - 1], *it) <= 0) --k;
        h[k++] = *it;
    }
    h.resize(k - 1);
    return h;
}

}  // namespace

std::vector<std::vector<long>> lattice_row_basis(
    const std::vector<std::vector<long>>& rows_in) {
    std::vector<std::vector<long>> m = rows_in;
    if (m.empty()) return {};
    size_t n = m[0].size(), r = 0;
    for (size_t col = 0; col < n && r < m.size(); ++col) {
        size_t piv = r;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        for (size_t i = r + 1; i < m.size(); ++i) {
            while (m[i][col] != 0) {
                long q = m[r][col] / m[i][col];
                for (size_t j = 0; j < n; ++j) m[r][j] -= q * m[i][j];
                std::swap(m[r], m[i]);
            }
        }
        if (m[r][col] < 0)
            for (auto& x : m[r]) x = -x;
        ++r;
    }
    m.resize(r);
    return m;
}

NewtonPolytope NewtonPolytope::of(const LaurentPoly& f) {
    if (f.is_zero()) throw std::domain_error("newton polytope of zero");
    std::vector<Exp> pts;
    for (auto& [e, c] : f.terms()) pts.push_back(e);
    return from_points(f.arity(), std::move(pts));
}

NewtonPolytope NewtonPolytope::from_points(int arity, std::vector<Exp> points) {
    if (arity < 1 || arity > 3)
        throw std::domain_error("polytopes supported in dimensions 1..3 only");
    std::sort(points.begin(), points.end(), GrlexLess{});
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.empty()) throw std::domain_error("no points");

    NewtonPolytope P;
    P.arity_ = arity;
    P.dim_ = affine_rank(points);
    const size_t n = (size_t)arity;

    auto add_eq = [&](std::vector<long> v, const Exp& through) {
        long b = idot(v, through);
        P.equalities_.push_back({std::move(v), b});
    };

    if (P.dim_ == 0) {
        P.vertices_ = {points[0]};
        for (size_t i = 0; i < n; ++i) {
            std::vector<long> e(n, 0);
            e[i] = 1;
            add_eq(e, points[0]);
        }
        return P;
    }

    if (P.dim_ == 1) {
        std::vector<long> g;
        for (size_t i = 1; i < points.size() && g.empty(); ++i) {
            auto d = diff(points[i], points[0]);
            if (std::any_of(d.begin(), d.end(), [](long x) { return x != 0; }))
                g = primitive(d);
        }
        long lo = idot(g, points[0]), hi = lo;
        Exp plo = points[0], phi = points[0];
        for (auto& p : points) {
            long v = idot(g, p);
            if (v < lo) lo = v, plo = p;
            if (v > hi) hi = v, phi = p;
        }
        P.vertices_ = {plo, phi};
        P.facets_.push_back({g, lo});
        std::vector<long> ng(g);
        for (auto& x : ng) x = -x;
        P.facets_.push_back({ng, -hi});
        // equalities: integer vectors orthogonal to g
        if (n == 2) add_eq({-g[1], g[0]}, points[0]);
        if (n == 3) {
            std::vector<std::vector<long>> cand;
            for (size_t i = 0; i < 3; ++i) {
                std::vector<long> e(3, 0);
                e[i] = 1;
                auto c = cross(e, g);
                if (std::any_of(c.begin(), c.end(),
                                [](long x) { return x != 0; }))
                    cand.push_back(primitive(c));
            }
            auto basis = lattice_row_basis(cand);
            for (auto& v : basis) add_eq(v, points[0]);
        }
        return P;
    }

    if (P.dim_ == 2 && n == 2) {
        std::vector<std::array<long, 2>> p2;
        for (auto& p : points) p2.push_back({(long)p[0], (long)p[1]});
        auto h = hull2d(p2);
        for (auto& q : h) P.vertices_.push_back({(int)q[0], (int)q[1]});
        for (size_t i = 0; i < h.size(); ++i) {
            auto& u = h[i];
            auto& v = h[(i + 1) % h.size()];
            std::vector<long> nrm = primitive({-(v[1] - u[1]), v[0] - u[0]});
            P.facets_.push_back({nrm, nrm[0] * u[0] + nrm[1] * u[1]});
        }
        return P;
    }

    if (P.dim_ == 2 && n == 3) {
        // plane normal from two independent differences
        std::vector<long> w;
        for (size_t i = 1; i < points.size() && w.empty(); ++i)
            for (size_t j = i + 1; j < points.size() && w.empty(); ++j) {
                auto c = cross(diff(points[i], points[0]),
                               diff(points[j], points[0]));
                if (std::any_of(c.begin(), c.end(),
                                [](long x) { return x != 0; }))
                    w = primitive(c);
            }
        add_eq(w, points[0]);
        // drop the axis where |w| is largest; projection is injective there
        size_t drop = 0;
        for (size_t i = 1; i < 3; ++i)
            if (std::abs(w[i]) > std::abs(w[drop])) drop = i;
        size_t a = (drop + 1) % 3, b = (drop + 2) % 3;
        std::vector<std::array<long, 2>> p2;
        for (auto& p : points) p2.push_back({(long)p[(size_t)a], (long)p[b]});
        auto h = hull2d(p2);
        auto unproject = [&](const std::array<long, 2>& q) {
            for (auto& p : points)
                if ((long)p[a] == q[0] && (long)p[b] == q[1]) return p;
            throw std::logic_error("hull point lost in projection");
        };
        for (auto& q : h) P.vertices_.push_back(unproject(q));
        for (size_t i = 0; i < P.vertices_.size(); ++i) {
            auto& u = P.vertices_[i];
            auto& v = P.vertices_[(i + 1) % P.vertices_.size()];
            auto nrm = primitive(cross(diff(v, u), w));
            long off = idot(nrm, u);
            bool ok = true;
            for (auto& p : points) ok = ok && idot(nrm, p) >= off;
            if (!ok) {
                for (auto& x : nrm) x = -x;
                off = -off;
            }
            P.facets_.push_back({nrm, off});
        }
        return P;
    }

    // full dimensional in R^3: facet candidates from all vertex triples
    std::set<std::pair<std::vector<long>, long>> seen;
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            for (size_t k = j + 1; k < points.size(); ++k) {
                auto nrm = cross(diff(points[j], points[i]),
                                 diff(points[k], points[i]));
                if (std::all_of(nrm.begin(), nrm.end(),
                                [](long x) { return x == 0; }))
                    continue;
                nrm = primitive(nrm);
                long off = idot(nrm, points[i]);
                bool all_ge = true, all_le = true;
                for (auto& p : points) {
                    long v = idot(nrm, p);
                    all_ge = all_ge && v >= off;
                    all_le = all_le && v <= off;
                }
                if (all_ge && !all_le) seen.insert({nrm, off});
                if (all_le && !all_ge) {
                    for (auto& x : nrm) x = -x;
                    seen.insert({nrm, -off});
                }
            }
    for (auto& [nrm, off] : seen) P.facets_.push_back({nrm, off});
    // vertices: points whose tight facet normals span R^3
    for (auto& p : points) {
        std::vector<std::vector<long>> tight;
        for (auto& fc : P.facets_)
            if (idot(fc.normal, p) == fc.offset) tight.push_back(fc.normal);
        if ((int)lattice_row_basis(tight).size() == 3) P.vertices_.push_back(p);
    }
    return P;
}

bool NewtonPolytope::contains(const Exp& x) const {
    for (auto& e : equalities_)
        if (idot(e.normal, x) != e.offset) return false;
    for (auto& f : facets_)
        if (idot(f.normal, x) < f.offset) return false;
    if (dim_ == 0) return x == vertices_[0];
    return true;
}

long NewtonPolytope::normalized_volume() const {
    if (dim_ < arity_) return 0;
    if (arity_ == 1)
        return (long)vertices_.back()[0] - (long)vertices_.front()[0];
    if (arity_ == 2) {
        long s = 0;
        for (size_t i = 0; i < vertices_.size(); ++i) {
            auto& u = vertices_[i];
            auto& v = vertices_[(i + 1) % vertices_.size()];
            s += (long)u[0] * v[1] - (long)u[1] * v[0];
        }
        return std::abs(s);
    }
    // 3-D: fan of tetrahedra over each facet polygon, facets oriented outward
    long s6 = 0;
    for (auto& fc : facets_) {
        std::vector<Exp> fv;
        for (auto& v : vertices_)
            if (idot(fc.normal, v) == fc.offset) fv.push_back(v);
        if (fv.size() < 3) continue;
        // order around the centroid; doubles suffice for distinct hull angles
        double cx = 0, cy = 0, cz = 0;
        for (auto& v : fv) cx += v[0], cy += v[1], cz += v[2];
        cx /= (double)fv.size();
        cy /= (double)fv.size();
        cz /= (double)fv.size();
        // frame in the facet plane
        std::vector<long> w = fc.normal;
        auto d0 = diff(fv[1], fv[0]);
        auto e2 = cross(w, d0);
        auto ang = [&](const Exp& v) {
            double px = v[0] - cx, py = v[1] - cy, pz = v[2] - cz;
            double x = px * d0[0] + py * d0[1] + pz * d0[2];
            double y = px * e2[0] + py * e2[1] + pz * e2[2];
            return std::atan2(y, x);
        };
        std::sort(fv.begin(), fv.end(),
                  [&](const Exp& p, const Exp& q) { return ang(p) < ang(q); });
        // outward orientation: triangle normal opposite the inward normal
        auto tn = cross(diff(fv[1], fv[0]), diff(fv[2], fv[0]));
        long ori = tn[0] * w[0] + tn[1] * w[1] + tn[2] * w[2];
        if (ori > 0) std::reverse(fv.begin(), fv.end());
        for (size_t i = 1; i + 1 < fv.size(); ++i) {
            auto u = fv[0], a = fv[i], b = fv[i + 1];
            long det = (long)u[0] * ((long)a[1] * b[2] - (long)a[2] * b[1]) -
                       (long)u[1] * ((long)a[0] * b[2] - (long)a[2] * b[0]) +
                       (long)u[2] * ((long)a[0] * b[1] - (long)a[1] * b[0]);
            s6 += det;
        }
    }
    return std::abs(s6);
}

std::vector<Exp> NewtonPolytope::lattice_points() const {
    Exp lo = vertices_[0], hi = vertices_[0];
    for (auto& v : vertices_)
        for (size_t i = 0; i < v.size(); ++i) {
            lo[i] = std::min(lo[i], v[i]);
            hi[i] = std::max(hi[i], v[i]);
        }
    std::vector<Exp> out;
    Exp x = lo;
    while (true) {
        if (contains(x)) out.push_back(x);
        size_t i = 0;
        while (i < x.size() && x[i] == hi[i]) x[i] = lo[i], ++i;
        if (i == x.size()) break;
        ++x[i];
    }
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

std::vector<FaceDescriptor> NewtonPolytope::faces() const {
    std::vector<FaceDescriptor> out;
    auto all_lattice = lattice_points();
    auto points_on = [&](const std::vector<size_t>& fs) {
        std::vector<Exp> pts;
        for (auto& p : all_lattice) {
            bool on = true;
            for (size_t fi : fs)
                on = on && idot(facets_[fi].normal, p) == facets_[fi].offset;
            if (on) pts.push_back(p);
        }
        return pts;
    };
    auto verts_of = [&](const std::vector<Exp>& pts) {
        std::vector<Exp> vs;
        for (auto& v : vertices_)
            if (std::find(pts.begin(), pts.end(), v) != pts.end())
                vs.push_back(v);
        return vs;
    };
    // vertices
    for (auto& v : vertices_) {
        FaceDescriptor fd;
        fd.dimension = 0;
        for (size_t i = 0; i < facets_.size(); ++i)
            if (idot(facets_[i].normal, v) == facets_[i].offset)
                fd.defining_facets.push_back(i);
        fd.vertices = {v};
        fd.lattice_points = {v};
        out.push_back(std::move(fd));
    }
    if (dim_ >= 2 || (dim_ == 1)) {
        if (dim_ <= 2) {
            // each facet of a segment is a vertex (already listed); each facet
            // of a polygon is an edge
            if (dim_ == 2)
                for (size_t i = 0; i < facets_.size(); ++i) {
                    FaceDescriptor fd;
                    fd.dimension = 1;
                    fd.defining_facets = {i};
                    fd.lattice_points = points_on({i});
                    fd.vertices = verts_of(fd.lattice_points);
                    out.push_back(std::move(fd));
                }
        } else {
            // edges: facet pairs sharing two vertices
            std::set<std::vector<Exp>> seen_edges;
            for (size_t i = 0; i < facets_.size(); ++i)
                for (size_t j = i + 1; j < facets_.size(); ++j) {
                    auto pts = points_on({i, j});
                    auto vs = verts_of(pts);
                    if (vs.size() != 2 || !seen_edges.insert(vs).second)
                        continue;
                    FaceDescriptor fd;
                    fd.dimension = 1;
                    fd.defining_facets = {i, j};
                    fd.lattice_points = pts;
                    fd.vertices = vs;
                    out.push_back(std::move(fd));
                }
            for (size_t i = 0; i < facets_.size(); ++i) {
                FaceDescriptor fd;
                fd.dimension = 2;
                fd.defining_facets = {i};
                fd.lattice_points = points_on({i});
                fd.vertices = verts_of(fd.lattice_points);
                out.push_back(std::move(fd));
            }
        }
    }
    FaceDescriptor whole;
    whole.dimension = dim_;
    whole.vertices = vertices_;
    whole.lattice_points = all_lattice;
    out.push_back(std::move(whole));
    return out;
}

FaceDescriptor NewtonPolytope::support_face(const std::vector<long>& v) const {
    long best = idot(v, vertices_[0]);
    for (auto& p : vertices_) best = std::max(best, idot(v, p));
    FaceDescriptor fd;
    for (auto& p : vertices_)
        if (idot(v, p) == best) fd.vertices.push_back(p);
    for (auto& p : lattice_points())
        if (idot(v, p) == best) fd.lattice_points.push_back(p);
    for (size_t i = 0; i < facets_.size(); ++i) {
        bool tight = true;
        for (auto& p : fd.vertices)
            tight = tight && idot(facets_[i].normal, p) == facets_[i].offset;
        if (tight) fd.defining_facets.push_back(i);
    }
    fd.dimension = affine_rank(fd.vertices);
    return fd;
}

LaurentPoly truncation(const LaurentPoly& f, const FaceDescriptor& face) {
    if (face.lattice_points.empty())
        throw std::domain_error("empty face");
    std::set<Exp> allowed(face.lattice_points.begin(),
                          face.lattice_points.end());
    LaurentPoly out(f.arity());
    for (auto& [e, c] : f.terms())
        if (allowed.count(e)) out.add_term(e, c);
    return out;
}

// ---- nondegeneracy ---------------------------------------------------------

namespace {

enum class ZeroVerdict { none_certified, none_probable, found };

struct ZeroResult {
    ZeroVerdict verdict = ZeroVerdict::none_certified;
    bool exact = false;
    std::vector<Complex> point;
};

std::vector<Rational> sample_values() {
    return {Rational(1), Rational(2), Rational(3),  Rational(1, 2),
            Rational(5), Rational(7), Rational(-3), Rational(4, 3)};
}

// torus zero of a single nonconstant polynomial: freeze all but one variable
std::optional<ZeroResult> single_poly_torus_zero(const LaurentPoly& g0) {
    LaurentPoly g = strip_monomial_units(g0);
    int n = g.arity();
    int var = -1;
    for (int i = 0; i < n; ++i)
        if (g.depends_on(i)) var = i;
    if (var < 0) return std::nullopt;  // nonzero constant
    for (auto& base : sample_values()) {
        std::vector<Complex> pt((size_t)n);
        LaurentPoly u = g;
        int uvar = var;
        for (int i = n - 1; i >= 0; --i) {
            if (i == var || !g.depends_on(i)) {
                if (i != var) pt[(size_t)i] = Complex(1.0, 0.0);
                continue;
            }
            u = substitute_rational(u, i, base);
            pt[(size_t)i] = Complex(base.get_d(), 0.0);
            if (i < uvar) --uvar;
        }
        // remaining arity may have shrunk; u is univariate in uvar
        u = strip_monomial_units(u);
        if (u.is_zero()) {
            pt[(size_t)var] = Complex(1.0, 0.0);
            ZeroResult r;
            r.verdict = ZeroVerdict::found;
            r.exact = true;
            r.point = pt;
            return r;
        }
        if (u.is_constant()) continue;
        RootSet rs = univariate_roots(u);
        for (auto& [root, mult] : rs.rational_roots)
            if (root != 0) {
                pt[(size_t)var] = Complex(root.get_d(), 0.0);
                ZeroResult r;
                r.verdict = ZeroVerdict::found;
                r.exact = true;
                r.point = pt;
                return r;
            }
        for (auto& [ca, mult] : rs.numeric_roots)
            if (std::abs(ca.value) > 1e-12) {
                pt[(size_t)var] = ca.value;
                ZeroResult r;
                r.verdict = ZeroVerdict::found;
                r.exact = false;
                r.point = pt;
                return r;
            }
    }
    return std::nullopt;
}

double eval_residual(const std::vector<LaurentPoly>& sys,
                     const std::vector<Complex>& pt) {
    double worst = 0;
    for (auto& p : sys)
        worst = std::max(worst, std::abs(eval_complex(p, pt).value));
    return worst;
}

ZeroResult torus_common_zero(std::vector<LaurentPoly> sys, int depth);

// specialize variable `var` to a rational and recurse on the smaller system
ZeroResult specialized_zero(const std::vector<LaurentPoly>& sys, int var,
                            const Rational& value, int depth) {
    std::vector<LaurentPoly> sub;
    for (auto& p : sys) {
        LaurentPoly s = (p.low_degree_in(var) < 0 && value == 0)
                            ? LaurentPoly::constant(p.arity() - 1, 1)
                            : substitute_rational(p, var, value);
        if (!s.is_zero()) sub.push_back(s);
    }
    if (sub.empty()) {
        // whole slice vanishes
        ZeroResult r;
        r.verdict = ZeroVerdict::found;
        r.exact = true;
        r.point.assign((size_t)sys[0].arity() - 1, Complex(1.0, 0.0));
        r.point.insert(r.point.begin() + var, Complex(value.get_d(), 0.0));
        return r;
    }
    ZeroResult inner = torus_common_zero(std::move(sub), depth + 1);
    if (inner.verdict == ZeroVerdict::found)
        inner.point.insert(inner.point.begin() + var,
                           Complex(value.get_d(), 0.0));
    return inner;
}

ZeroResult torus_common_zero(std::vector<LaurentPoly> sys, int depth) {
    ZeroResult none;
    none.verdict = ZeroVerdict::none_certified;
    if (depth > 8) {
        none.verdict = ZeroVerdict::none_probable;
        return none;
    }
    std::vector<LaurentPoly> s;
    for (auto& p : sys) {
        LaurentPoly q = strip_monomial_units(p);
        if (q.is_zero()) continue;
        if (q.is_constant()) return none;  // a nonzero constant kills all zeros
        s.push_back(normalize_unit(q));
    }
    if (s.empty()) {
        ZeroResult r;
        r.verdict = ZeroVerdict::found;
        r.exact = true;
        r.point.assign((size_t)sys[0].arity(), Complex(1.0, 0.0));
        return r;
    }
    int arity = s[0].arity();
    LaurentPoly g = mv_gcd_list(s);
    if (!g.is_constant()) {
        auto hit = single_poly_torus_zero(g);
        if (hit) return *hit;
        none.verdict = ZeroVerdict::none_probable;
        return none;
    }
    // branch on a common factor of the first polynomial with another one
    for (size_t i = 1; i < s.size(); ++i) {
        LaurentPoly h = mv_gcd(s[0], s[i]);
        if (h.is_constant()) continue;
        std::vector<LaurentPoly> branch = s;
        branch[0] = h;
        ZeroResult r1 = torus_common_zero(branch, depth + 1);
        if (r1.verdict == ZeroVerdict::found) return r1;
        branch = s;
        branch[0] = divide_exact(strip_monomial_units(s[0]),
                                 h);  // cofactor branch
        ZeroResult r2 = torus_common_zero(branch, depth + 1);
        if (r2.verdict == ZeroVerdict::found) return r2;
        if (r1.verdict == ZeroVerdict::none_probable ||
            r2.verdict == ZeroVerdict::none_probable)
            none.verdict = ZeroVerdict::none_probable;
        return none;
    }
    // effective variables
    std::vector<int> vars;
    for (int i = 0; i < arity; ++i)
        for (auto& p : s)
            if (p.depends_on(i)) {
                vars.push_back(i);
                break;
            }
    if (vars.empty()) return none;
    if (vars.size() == 1) {
        // univariate system with trivial gcd has no common root
        return none;
    }
    int v = vars.back();
    // order: first polynomial must depend on v with minimal degree
    std::sort(s.begin(), s.end(), [&](auto& a, auto& b) {
        int da = a.depends_on(v) ? a.degree_in(v) - a.low_degree_in(v) : 1 << 20;
        int db = b.depends_on(v) ? b.degree_in(v) - b.low_degree_in(v) : 1 << 20;
        return da < db;
    });
    if (!s[0].depends_on(v)) return none;  // cannot happen: v is effective
    std::vector<LaurentPoly> elim;
    for (size_t i = 1; i < s.size(); ++i) {
        if (!s[i].depends_on(v)) {
            elim.push_back(s[i]);
            continue;
        }
        elim.push_back(resultant(s[0], s[i], v));
        if (elim.back().is_zero())
            throw std::logic_error("vanishing resultant despite trivial gcd");
    }
    if (elim.empty()) {
        // single equation in >=2 effective variables
        auto hit = single_poly_torus_zero(s[0]);
        if (hit) return *hit;
        none.verdict = ZeroVerdict::none_probable;
        return none;
    }
    // candidates from the projected system; these are necessary conditions
    // only, so each must be verified upstairs
    std::vector<LaurentPoly> proj;
    for (auto& p : elim) {
        LaurentPoly q = strip_monomial_units(p);
        if (!q.is_constant()) proj.push_back(q);
        else return none;  // projection already inconsistent
    }
    LaurentPoly pg = mv_gcd_list(proj);
    bool probable = false;
    if (pg.is_constant()) {
        // projected equations are coprime: finitely many candidates; pick the
        // candidates from one effective variable of the first projection
        if (proj.size() >= 2) {
            // eliminate further by recursion on candidate values: freeze each
            // remaining variable pattern is expensive; instead use candidate
            // roots in each variable of the gcd-free pair via resultants
            int w = -1;
            for (int i : vars)
                if (i != v && proj[0].depends_on(i)) w = i;
            if (w >= 0 && proj.size() >= 2 && proj[1].depends_on(w)) {
                LaurentPoly r2 = resultant(proj[0], proj[1], w);
                proj.push_back(r2);
            }
        }
        // univariate candidates
        for (auto& p : proj) {
            std::vector<int> pv;
            for (int i = 0; i < arity; ++i)
                if (p.depends_on(i)) pv.push_back(i);
            if (pv.size() != 1) continue;
            int cv = pv[0];
            RootSet rs = univariate_roots(p);
            for (auto& [root, m] : rs.rational_roots) {
                if (root == 0) continue;
                ZeroResult r = specialized_zero(s, cv, root, depth);
                if (r.verdict == ZeroVerdict::found) return r;
                if (r.verdict == ZeroVerdict::none_probable) probable = true;
            }
            for (auto& [ca, m] : rs.numeric_roots) {
                if (std::abs(ca.value) < 1e-12) continue;
                probable = true;  // numeric candidate left unresolved exactly
            }
            none.verdict = probable ? ZeroVerdict::none_probable
                                    : ZeroVerdict::none_certified;
            return none;
        }
        none.verdict = ZeroVerdict::none_probable;
        return none;
    }
    // common factor in the projection: candidates form a positive dimensional
    // family; sample points on it and verify numerically
    auto hit = single_poly_torus_zero(pg);
    if (hit && hit->exact) {
        // exact candidate: verify by specializing the variable it fixes
        // (cheap route: evaluate residuals)
        double res = 0;
        std::vector<Complex> full = hit->point;
        // the candidate lives in the projected space; lift by solving s[0]=0
        // numerically in v over the candidate
        std::vector<Complex> pt = full;
        LaurentPoly u(1);
        // build the univariate slice of s[0] in v
        {
            LaurentPoly slice = s[0];
            int vv = v;
            for (int i = arity - 1; i >= 0; --i) {
                if (i == v) continue;
                Rational val;  // reconstruct rational if the point is exact
                double re = pt[(size_t)i].real();
                auto rec = reconstruct_rational(re, 1000000, 1e-9);
                val = rec ? *rec : Rational(1);
                slice = substitute_rational(slice, i, val);
                if (i < vv) --vv;
            }
            slice = strip_monomial_units(slice);
            if (!slice.is_constant() && !slice.is_zero()) {
                RootSet rs = univariate_roots(slice);
                for (auto& [root, m] : rs.rational_roots)
                    if (root != 0) pt[(size_t)v] = Complex(root.get_d(), 0);
                for (auto& [ca, m] : rs.numeric_roots)
                    if (std::abs(ca.value) > 1e-12) pt[(size_t)v] = ca.value;
            }
        }
        res = eval_residual(s, pt);
        if (res < 1e-8) {
            ZeroResult r;
            r.verdict = ZeroVerdict::found;
            r.exact = false;
            r.point = pt;
            return r;
        }
    }
    none.verdict = ZeroVerdict::none_probable;
    return none;
}

}  // namespace

DegeneracyReport is_nondegenerate(const LaurentPoly& f) {
    if (f.is_zero()) throw std::domain_error("zero polynomial");
    if (f.arity() > 3) throw std::domain_error("arity above 3 unsupported");
    DegeneracyReport rep;
    NewtonPolytope P = NewtonPolytope::of(f);
    for (auto& face : P.faces()) {
        LaurentPoly g = truncation(f, face);
        if (g.is_zero()) continue;
        if (g.term_count() == 1) continue;  // monomials never vanish on the torus
        // reduce to intrinsic coordinates of the face lattice
        std::vector<Exp> supp;
        for (auto& [e, c] : g.terms()) supp.push_back(e);
        std::vector<std::vector<long>> rows;
        for (size_t i = 1; i < supp.size(); ++i)
            rows.push_back(diff(supp[i], supp[0]));
        auto B = lattice_row_basis(rows);
        int k = (int)B.size();
        LaurentPoly ghat(k);
        for (auto& [e, c] : g.terms()) {
            std::vector<long> a = diff(e, supp[0]);
            Exp u((size_t)k, 0);
            for (int j = 0; j < k; ++j) {
                size_t piv = 0;
                while (B[(size_t)j][piv] == 0) ++piv;
                long q = a[piv] / B[(size_t)j][piv];
                if (q * B[(size_t)j][piv] != a[piv])
                    throw std::logic_error("point outside its face lattice");
                u[(size_t)j] = (int)q;
                for (size_t t = 0; t < a.size(); ++t)
                    a[t] -= q * B[(size_t)j][t];
            }
            if (std::any_of(a.begin(), a.end(), [](long x) { return x != 0; }))
                throw std::logic_error("point outside its face lattice");
            ghat.add_term(u, c);
        }
        std::vector<LaurentPoly> sys{ghat};
        for (int j = 0; j < k; ++j) sys.push_back(ghat.derivative(j));
        ZeroResult zr = torus_common_zero(sys, 0);
        if (zr.verdict == ZeroVerdict::found) {
            rep.nondegenerate = false;
            rep.certified = zr.exact;
            rep.face = face;
            // lift t back to z: log z = B^T (B B^T)^{-1} log t
            size_t n = (size_t)f.arity();
            std::vector<Complex> logt(zr.point.size());
            for (size_t j = 0; j < logt.size(); ++j)
                logt[j] = std::log(zr.point[j]);
            // solve (B B^T) x = log t over complex doubles
            size_t kk = logt.size();
            std::vector<std::vector<Complex>> M(kk,
                std::vector<Complex>(kk + 1, Complex(0, 0)));
            for (size_t i = 0; i < kk; ++i) {
                for (size_t j = 0; j < kk; ++j) {
                    long d = 0;
                    for (size_t t = 0; t < n; ++t) d += B[i][t] * B[j][t];
                    M[i][j] = Complex((double)d, 0.0);
                }
                M[i][kk] = logt[i];
            }
            for (size_t c = 0; c < kk; ++c) {
                size_t piv = c;
                for (size_t r = c + 1; r < kk; ++r)
                    if (std::abs(M[r][c]) > std::abs(M[piv][c])) piv = r;
                std::swap(M[piv], M[c]);
                for (size_t r = 0; r < kk; ++r) {
                    if (r == c || M[r][c] == Complex(0, 0)) continue;
                    Complex fct = M[r][c] / M[c][c];
                    for (size_t cc = c; cc <= kk; ++cc)
                        M[r][cc] -= fct * M[c][cc];
                }
            }
            std::vector<Complex> x(kk);
            for (size_t i = 0; i < kk; ++i) x[i] = M[i][kk] / M[i][i];
            rep.witness.assign(n, Complex(1.0, 0.0));
            for (size_t t = 0; t < n; ++t) {
                Complex lz(0, 0);
                for (size_t i = 0; i < kk; ++i)
                    lz += Complex((double)B[i][t], 0.0) * x[i];
                rep.witness[t] = std::exp(lz);
            }
            rep.detail = "face truncation has a singular torus point";
            return rep;
        }
        if (zr.verdict == ZeroVerdict::none_probable) rep.certified = false;
    }
    rep.nondegenerate = true;
    if (!rep.certified) rep.detail = "probably nondegenerate";
    return rep;
}

}  // namespace amo
