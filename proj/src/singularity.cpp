#include "amo/singularity.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "amo/elim.hpp"
#include "amo/univariate.hpp"

namespace amo {

namespace {

// d translated so that p becomes the origin; negative exponents are cleared
// first (a unit at any point with nonzero coordinates)
LaurentPoly translate_to_origin(const LaurentPoly& d,
                                const std::vector<Rational>& p) {
    int n = d.arity();
    if ((int)p.size() != n) throw std::invalid_argument("point arity mismatch");
    // clear negative exponents only: z_i^k is a unit at p iff p_i != 0, so
    // positive monomial factors must stay (they vanish at a zero coordinate)
    Exp shift((size_t)n, 0);
    for (int i = 0; i < n; ++i) {
        int low = d.low_degree_in(i);
        if (low < 0) {
            if (p[(size_t)i] == 0) throw std::domain_error("pole at the point");
            shift[(size_t)i] = -low;
        }
    }
    LaurentPoly t = d * LaurentPoly::monomial(n, shift, 1);
    for (int i = 0; i < n; ++i) {
        LaurentPoly shift =
            LaurentPoly::variable(n, i) + LaurentPoly::constant(n, p[(size_t)i]);
        t = substitute_poly(t, i, shift);
    }
    return t;
}

int min_total_degree(const LaurentPoly& p) {
    int m = -1;
    for (auto& [e, c] : p.terms()) {
        int s = 0;
        for (int x : e) s += x;
        if (m < 0 || s < m) m = s;
    }
    return m;
}

// linear unimodular change (y1, y2) -> (y1 + a y2, b y1 + (1 + a b) y2)
LaurentPoly unimodular_change(const LaurentPoly& p, int a, int b) {
    LaurentPoly l1 = parse_poly("u1", {"u1", "u2"});
    LaurentPoly l2 = parse_poly("u2", {"u1", "u2"});
    LaurentPoly n1 = l1 + l2 * Rational(a);
    LaurentPoly n2 = l1 * Rational(b) + l2 * Rational(1 + a * b);
    LaurentPoly out(2);
    for (auto& [e, c] : p.terms()) {
        LaurentPoly t = LaurentPoly::constant(2, c);
        if (e[0] != 0) t = t * n1.pow((unsigned)e[0]);
        if (e[1] != 0) t = t * n2.pow((unsigned)e[1]);
        out = out + t;
    }
    return out;
}

// exact rank by Gaussian elimination over Q; rows are consumed
int rational_rank(std::vector<std::vector<Rational>> rows, size_t cols) {
    int rank = 0;
    size_t lead = 0;
    for (size_t r = 0; r < rows.size() && lead < cols; ++lead) {
        size_t piv = r;
        while (piv < rows.size() && rows[piv][lead] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][lead] == 0) continue;
            Rational m = rows[i][lead] / rows[r][lead];
            for (size_t j = lead; j < cols; ++j)
                rows[i][j] -= m * rows[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

// dimension of Q[[y1,y2]] / (dg/dy1, dg/dy2, m^N) for a germ g at the origin
int jet_dimension(const LaurentPoly& g1, const LaurentPoly& g2, int N) {
    // column index of the monomial y1^a y2^b, a + b < N
    auto col = [&](int a, int b) { return (a + b) * (a + b + 1) / 2 + b; };
    size_t cols = (size_t)(N * (N + 1) / 2);
    std::vector<std::vector<Rational>> rows;
    for (const LaurentPoly* g : {&g1, &g2}) {
        for (int ma = 0; ma < N; ++ma)
            for (int mb = 0; ma + mb < N; ++mb) {
                std::vector<Rational> row(cols, Rational(0));
                bool nonzero = false;
                for (auto& [e, c] : g->terms()) {
                    int a = e[0] + ma, b = e[1] + mb;
                    if (a + b >= N) continue;
                    row[(size_t)col(a, b)] += c;
                    nonzero = true;
                }
                if (nonzero) rows.push_back(std::move(row));
            }
    }
    return (int)cols - rational_rank(std::move(rows), cols);
}

int jet_milnor_origin(const LaurentPoly& t) {
    LaurentPoly g1 = t.derivative(0), g2 = t.derivative(1);
    if (g1.is_zero() || g2.is_zero())
        throw std::domain_error("non-isolated singularity");
    int prev = -1;
    for (int N = 16; N <= 40; ++N) {
        int cur = jet_dimension(g1, g2, N);
        if (cur == prev) return cur;
        prev = cur;
    }
    throw std::domain_error("jet dimension did not stabilize");
}

// true when q = c * x^k (so the origin is the only root)
bool is_monomial_power(const QPoly& q) {
    if (q.is_zero()) return false;
    for (size_t i = 0; i + 1 < q.c.size(); ++i)
        if (q.c[i] != 0) return false;
    return true;
}

}  // namespace

int jet_milnor(const LaurentPoly& d, const std::vector<Rational>& p) {
    if (d.arity() != 2) throw std::invalid_argument("two variables expected");
    return jet_milnor_origin(translate_to_origin(d, p));
}

GermReport milnor_number(const LaurentPoly& d, const std::vector<Rational>& p) {
    if (d.arity() != 2) throw std::invalid_argument("two variables expected");
    LaurentPoly t = translate_to_origin(d, p);
    if (!(t.coeff({0, 0}) == 0) || !(t.derivative(0).coeff({0, 0}) == 0) ||
        !(t.derivative(1).coeff({0, 0}) == 0))
        throw std::domain_error("not a singular point of the curve");

    GermReport out;
    out.point = p;
    out.local_multiplicity = min_total_degree(t);

    std::mt19937 rng(20240517);
    std::uniform_int_distribution<int> coef(-7, 7);
    int mu = -1;
    for (int attempt = 0; attempt < 10 && mu < 0; ++attempt) {
        LaurentPoly g = attempt == 0 ? t : unimodular_change(t, coef(rng), coef(rng));
        LaurentPoly g1 = g.derivative(0), g2 = g.derivative(1);
        if (g1.is_zero() || g2.is_zero())
            throw std::domain_error("non-isolated singularity");
        if (!mv_gcd(g1, g2).is_constant())
            throw std::domain_error("non-isolated singularity");
        // no monomial factors (the resultant works modulo monomial units)
        bool clean = true;
        for (int v = 0; v < 2; ++v)
            clean = clean && g1.low_degree_in(v) == 0 && g2.low_degree_in(v) == 0;
        // finite projection: top coefficient in y2 must be constant
        clean = clean && make_univariate_view(g1, 1).lc().is_constant() &&
                make_univariate_view(g2, 1).lc().is_constant();
        if (!clean) continue;
        // the origin must be the only common zero over y1 = 0
        auto [s1, v1] = as_univariate(substitute_rational(g1, 0, 0));
        auto [s2, v2] = as_univariate(substitute_rational(g2, 0, 0));
        QPoly common = qpoly_gcd(s1, s2);
        if (!is_monomial_power(common)) continue;
        LaurentPoly R = resultant(g1, g2, 1);
        if (R.is_zero()) throw std::domain_error("non-isolated singularity");
        mu = R.low_degree_in(0);
    }
    if (mu < 0)
        throw std::domain_error(
            "separation failure after 10 coordinate changes");

    int oracle = jet_milnor_origin(t);
    if (oracle != mu)
        throw std::logic_error("intersection count disagrees with the jet "
                               "dimension: " +
                               std::to_string(mu) + " vs " +
                               std::to_string(oracle));
    out.milnor_number = mu;

    // corank of the quadratic part
    std::vector<std::vector<Rational>> q(2, std::vector<Rational>(2));
    q[0][0] = 2 * t.coeff({2, 0});
    q[1][1] = 2 * t.coeff({0, 2});
    q[0][1] = q[1][0] = t.coeff({1, 1});
    int corank = 2 - rational_rank(q, 2);
    out.label = classify_phase_point(mu, corank, 3).label;
    return out;
}

namespace {

struct ChartData {
    int c = -1;
    std::vector<Rational> fi;                // first partials at z0
    std::vector<std::vector<Rational>> fij;  // second partials at z0
    std::vector<int> local;                  // coordinate indices != c
};

ChartData chart_at(const LaurentPoly& f, const std::vector<Rational>& z0) {
    int n = f.arity();
    if ((int)z0.size() != n) throw std::invalid_argument("point arity mismatch");
    if (!(eval_rational(f, z0) == 0))
        throw std::domain_error("point is not on the hypersurface");
    ChartData d;
    d.fi.resize((size_t)n);
    for (int i = 0; i < n; ++i)
        d.fi[(size_t)i] = eval_rational(f.derivative(i), z0);
    for (int i = n - 1; i >= 0 && d.c < 0; --i)
        if (!(d.fi[(size_t)i] == 0)) d.c = i;
    if (d.c < 0)
        throw std::domain_error(
            "all partial derivatives vanish at the point (degenerate data)");
    d.fij.assign((size_t)n, std::vector<Rational>((size_t)n));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Rational v = eval_rational(f.derivative(i).derivative(j), z0);
            d.fij[(size_t)i][(size_t)j] = v;
            d.fij[(size_t)j][(size_t)i] = v;
        }
    for (int i = 0; i < n; ++i)
        if (i != d.c) d.local.push_back(i);
    return d;
}

// first and second derivatives of the implicit chart function z_c = g(z')
struct ImplicitDerivs {
    std::vector<Rational> gi;                // indexed by local position
    std::vector<std::vector<Rational>> gij;
};

ImplicitDerivs implicit_derivs(const ChartData& d) {
    size_t m = d.local.size();
    ImplicitDerivs out;
    out.gi.resize(m);
    Rational fc = d.fi[(size_t)d.c];
    for (size_t a = 0; a < m; ++a)
        out.gi[a] = -d.fi[(size_t)d.local[a]] / fc;
    out.gij.assign(m, std::vector<Rational>(m));
    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b) {
            int i = d.local[a], j = d.local[b];
            Rational v = d.fij[(size_t)i][(size_t)j] +
                         d.fij[(size_t)i][(size_t)d.c] * out.gi[b] +
                         d.fij[(size_t)d.c][(size_t)j] * out.gi[a] +
                         d.fij[(size_t)d.c][(size_t)d.c] * out.gi[a] * out.gi[b];
            out.gij[a][b] = -v / fc;
        }
    return out;
}

}  // namespace

PhaseHessian phase_hessian(const LaurentPoly& f, const ProjectiveDirection& y,
                           const std::vector<Rational>& z0) {
    ChartData d = chart_at(f, z0);
    ImplicitDerivs gd = implicit_derivs(d);
    size_t m = d.local.size();
    Rational g = z0[(size_t)d.c];
    Rational yc = y.coords[(size_t)d.c];
    PhaseHessian out;
    out.chart = d.c;
    out.h.assign(m, std::vector<Rational>(m));
    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b) {
            Rational v =
                yc * (gd.gij[a][b] / g - gd.gi[a] * gd.gi[b] / (g * g));
            if (a == b) {
                int i = d.local[a];
                v -= y.coords[(size_t)i] /
                     (z0[(size_t)i] * z0[(size_t)i]);
            }
            out.h[a][b] = v;
        }
    out.rank = rational_rank(out.h, m);
    out.corank = (int)m - out.rank;
    return out;
}

bool jacobian_hessian_identity_check(const LaurentPoly& f,
                                     const ProjectiveDirection& y,
                                     const std::vector<Rational>& z0) {
    ChartData d = chart_at(f, z0);
    ImplicitDerivs gd = implicit_derivs(d);
    size_t m = d.local.size();
    Rational g = z0[(size_t)d.c];
    Rational yc = y.coords[(size_t)d.c];
    PhaseHessian H = phase_hessian(f, y, z0);
    // affine normal map in the chart: n_a(z') = -z_a dg/dz_a / g
    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b) {
            int i = d.local[a];
            Rational zi = z0[(size_t)i];
            Rational jac =
                -zi * (gd.gij[a][b] / g - gd.gi[a] * gd.gi[b] / (g * g));
            if (a == b) jac -= gd.gi[a] / g;
            Rational lhs = H.h[a][b];
            Rational rhs = (-yc / zi) * jac;
            if (!(lhs == rhs)) return false;
        }
    return true;
}

PhaseHessianNumeric phase_hessian_numeric(const LaurentPoly& f,
                                          const ProjectiveDirection& y,
                                          const std::vector<Complex>& z0,
                                          double tol) {
    int n = f.arity();
    if ((int)z0.size() != n) throw std::invalid_argument("point arity mismatch");
    std::vector<Complex> fi((size_t)n);
    int c = -1;
    double best = 0.0;
    for (int i = 0; i < n; ++i) {
        fi[(size_t)i] = eval_complex(f.derivative(i), z0).value;
        if (std::abs(fi[(size_t)i]) > best) {
            best = std::abs(fi[(size_t)i]);
            c = i;
        }
    }
    if (c < 0 || best < 1e-12)
        throw std::domain_error(
            "all partial derivatives vanish at the point (degenerate data)");
    std::vector<int> local;
    for (int i = 0; i < n; ++i)
        if (i != c) local.push_back(i);
    size_t m = local.size();
    std::vector<std::vector<Complex>> fij((size_t)n,
                                          std::vector<Complex>((size_t)n));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Complex v = eval_complex(f.derivative(i).derivative(j), z0).value;
            fij[(size_t)i][(size_t)j] = fij[(size_t)j][(size_t)i] = v;
        }
    std::vector<Complex> gi(m);
    for (size_t a = 0; a < m; ++a)
        gi[a] = -fi[(size_t)local[a]] / fi[(size_t)c];
    PhaseHessianNumeric out;
    out.chart = c;
    out.h.assign(m, std::vector<Complex>(m));
    Complex g = z0[(size_t)c];
    double yc = y.coords[(size_t)c].get_d();
    double scale = 0.0;
    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b) {
            int i = local[a], j = local[b];
            Complex gij = -(fij[(size_t)i][(size_t)j] +
                            fij[(size_t)i][(size_t)c] * gi[b] +
                            fij[(size_t)c][(size_t)j] * gi[a] +
                            fij[(size_t)c][(size_t)c] * gi[a] * gi[b]) /
                          fi[(size_t)c];
            Complex v = yc * (gij / g - gi[a] * gi[b] / (g * g));
            if (a == b)
                v -= y.coords[(size_t)i].get_d() /
                     (z0[(size_t)i] * z0[(size_t)i]);
            out.h[a][b] = v;
            scale = std::max(scale, std::abs(v));
        }
    // singular values of a 1x1 or 2x2 matrix
    std::vector<double> sv;
    if (m == 1) {
        sv = {std::abs(out.h[0][0])};
    } else if (m == 2) {
        // eigenvalues of H^H H
        double a11 = std::norm(out.h[0][0]) + std::norm(out.h[1][0]);
        double a22 = std::norm(out.h[0][1]) + std::norm(out.h[1][1]);
        Complex a12 = std::conj(out.h[0][0]) * out.h[0][1] +
                      std::conj(out.h[1][0]) * out.h[1][1];
        double tr = a11 + a22;
        double det = a11 * a22 - std::norm(a12);
        double disc = std::sqrt(std::max(0.0, tr * tr - 4 * det));
        sv = {std::sqrt(std::max(0.0, (tr + disc) / 2)),
              std::sqrt(std::max(0.0, (tr - disc) / 2))};
    } else {
        throw std::domain_error("numeric corank only for up to 3 variables");
    }
    double cut = tol * std::max(scale, 1e-300);
    out.rank = 0;
    for (double s : sv)
        if (s > cut) ++out.rank;
    out.corank = (int)m - out.rank;
    return out;
}

PhaseLabel classify_phase_point(int mu, int corank, int n) {
    if (mu < 1 || corank < 0 || corank > n - 1)
        throw std::invalid_argument("invalid (mu, corank)");
    PhaseLabel out;
    if (corank == 0 && mu == 1) {
        out.label = "A1";
        out.classified = out.quasihomogeneous = true;
    } else if (corank == 1 && mu >= 2) {
        out.label = "A" + std::to_string(mu);
        out.classified = out.quasihomogeneous = true;
    } else if (corank == 2 && mu == 4) {
        out.label = "D4";
        out.classified = out.quasihomogeneous = true;
    } else {
        out.label = "unclassified(" + std::to_string(mu) + ", " +
                    std::to_string(corank) + ")";
    }
    return out;
}

PhaseCritReport classify_fiber_point(const LaurentPoly& f,
                                     const ProjectiveDirection& y,
                                     const FiberPoint& p) {
    PhaseCritReport out;
    out.point = p;
    out.y = y;
    out.mu = p.multiplicity;
    bool exact = true;
    for (auto& c : p.coords) exact = exact && c.exact;
    if (exact) {
        std::vector<Rational> z0;
        for (auto& c : p.coords) z0.push_back(c.rat);
        out.corank = phase_hessian(f, y, z0).corank;
        out.exact = true;
    } else {
        std::vector<Complex> z0;
        for (auto& c : p.coords) z0.push_back(c.value());
        out.corank = phase_hessian_numeric(f, y, z0).corank;
    }
    out.label = classify_phase_point(out.mu, out.corank, f.arity());
    return out;
}

int vanishing_order(const LaurentPoly& p, const std::vector<Rational>& q) {
    if (p.is_zero()) throw std::domain_error("zero polynomial");
    return min_total_degree(translate_to_origin(p, q));
}

int vanishing_order_projective(const LaurentPoly& p,
                               const std::vector<Rational>& q) {
    if (p.is_zero()) throw std::domain_error("zero polynomial");
    int n = p.arity();
    if ((int)q.size() != n) throw std::invalid_argument("point arity mismatch");
    int c = -1;
    for (int i = n - 1; i >= 0 && c < 0; --i)
        if (!(q[(size_t)i] == 0)) c = i;
    if (c < 0) throw std::invalid_argument("zero point");
    LaurentPoly chart = substitute_rational(p, c, 1);
    std::vector<Rational> pt;
    for (int i = 0; i < n; ++i)
        if (i != c) pt.push_back(q[(size_t)i] / q[(size_t)c]);
    return vanishing_order(chart, pt);
}

MultiplicityBudget check_multiplicity_budget(const LaurentPoly& f,
                                             const LaurentPoly& d0,
                                             const ProjectiveDirection& y) {
    MultiplicityBudget out;
    out.m = vanishing_order_projective(d0, y.coords);
    FiberResult fr = fiber(f, y);
    int sum = 0;
    for (auto& p : fr.points) {
        out.fiber_multiplicities.push_back(p.multiplicity);
        sum += p.multiplicity - 1;
    }
    out.slack = out.m - sum;
    out.equality = out.slack == 0;
    return out;
}

}  // namespace amo
