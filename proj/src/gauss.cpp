#include "amo/gauss.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "amo/elim.hpp"
#include "amo/univariate.hpp"

namespace amo {

namespace {

long volume_bound(const LaurentPoly& f, int n) {
    std::vector<Exp> pts;
    for (auto& [e, c] : f.terms())
        pts.push_back(Exp(e.begin(), e.begin() + n));
    return NewtonPolytope::from_points(n, pts).normalized_volume();
}

// |p| upper bound at the point, same monomial walk as the evaluation
double eval_scale(const LaurentPoly& p, const std::vector<Complex>& pt) {
    double s = 0;
    for (auto& [e, c] : p.terms()) {
        double t = std::abs(c.get_d());
        for (size_t i = 0; i < e.size(); ++i)
            t *= std::pow(std::abs(pt[i]), (double)e[i]);
        s += t;
    }
    return std::max(s, 1.0);
}

}  // namespace

ProjectiveDirection ProjectiveDirection::of(std::vector<Rational> c) {
    bool nonzero = false;
    for (auto& x : c) nonzero = nonzero || x != 0;
    if (!nonzero) throw std::domain_error("zero direction");
    // clear denominators, divide by content
    mpz_class den = 1, num = 0;
    for (auto& x : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(),
                              x.get_den().get_mpz_t());
    for (auto& x : c) {
        mpz_class v = x.get_num() * (den / x.get_den());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_mpz_t());
    }
    ProjectiveDirection d;
    int last = -1;
    for (size_t i = 0; i < c.size(); ++i) {
        mpz_class v = c[i].get_num() * (den / c[i].get_den());
        d.coords.emplace_back(v / num);
        if (d.coords.back() != 0) last = (int)i;
    }
    if (d.coords[(size_t)last] < 0)
        for (auto& x : d.coords) x = -x;
    return d;
}

int ProjectiveDirection::chart() const {
    for (int i = (int)coords.size() - 1; i >= 0; --i)
        if (coords[(size_t)i] != 0) return i;
    throw std::logic_error("zero direction");
}

FiberSystem fiber_system(const LaurentPoly& f, int n_torus) {
    int n = n_torus < 0 ? f.arity() : n_torus;
    if (n < 2 || n > 3) throw std::domain_error("2 or 3 torus variables only");
    if (n > f.arity()) throw std::domain_error("torus count above arity");
    int base = f.arity();
    int m = base + n;
    FiberSystem sys;
    sys.f = f.extend(n);
    sys.chart = n - 1;
    sys.n_torus = n;
    sys.symbolic = true;
    LaurentPoly Ec = sys.f.euler_derivative(sys.chart);
    for (int i = 0; i < n - 1; ++i) {
        LaurentPoly yc = LaurentPoly::variable(m, base + n - 1);
        LaurentPoly yi = LaurentPoly::variable(m, base + i);
        LaurentPoly h = yc * sys.f.euler_derivative(i) - yi * Ec;
        if (n == 3)  // chart y_n = 1
            h = substitute_poly(h, base + n - 1, LaurentPoly::constant(m, 1));
        sys.equations.push_back(std::move(h));
    }
    return sys;
}

FiberSystem fiber_system(const LaurentPoly& f, const ProjectiveDirection& y) {
    int n = f.arity();
    if ((int)y.coords.size() != n)
        throw std::domain_error("direction arity mismatch");
    if (n < 2 || n > 3) throw std::domain_error("2 or 3 variables only");
    FiberSystem sys;
    sys.f = f;
    sys.chart = y.chart();
    sys.n_torus = n;
    sys.symbolic = false;
    LaurentPoly Ec = f.euler_derivative(sys.chart);
    for (int i = 0; i < n; ++i) {
        if (i == sys.chart) continue;
        sys.equations.push_back(y.coords[(size_t)sys.chart] *
                                    f.euler_derivative(i) -
                                y.coords[(size_t)i] * Ec);
    }
    return sys;
}

LaurentPoly projection_polynomial(const LaurentPoly& f, int i, int n_torus,
                                  std::string* warning) {
    int n = n_torus < 0 ? f.arity() : n_torus;
    FiberSystem sys = fiber_system(f, n);
    LaurentPoly R(sys.f.arity());
    if (n == 2) {
        int other = 1 - i;
        R = resultant(sys.f, sys.equations[0], other);
    } else {
        std::vector<int> others;
        for (int j = 0; j < 3; ++j)
            if (j != i) others.push_back(j);
        LaurentPoly a = resultant(sys.f, sys.equations[0], others[1]);
        LaurentPoly b = resultant(sys.f, sys.equations[1], others[1]);
        if (a.is_zero() || b.is_zero())
            throw std::runtime_error("elimination collapsed to zero");
        if (a.depends_on(others[0]) && b.depends_on(others[0]))
            R = resultant(a, b, others[0]);
        else
            R = a.depends_on(others[0]) ? b : a;
    }
    if (R.is_zero()) throw std::runtime_error("elimination collapsed to zero");
    R = strip_monomial_units(R);
    LaurentPoly cont = content_wrt(R, i);
    if (!cont.is_constant()) R = divide_exact(R, cont);
    R = strip_monomial_units(R);
    // positive rescale only: the resultant's sign is meaningful downstream
    R = R * (Rational(1) / rational_content(R));
    if (warning) {
        long nv = volume_bound(f, n);
        int d = R.degree_in(i);
        if (d < nv)
            *warning += "projection degree " + std::to_string(d) +
                        " below the volume bound " + std::to_string(nv) +
                        "; ";
        if (d > nv)
            *warning += "projection degree " + std::to_string(d) +
                        " above the volume bound " + std::to_string(nv) +
                        " (extraneous factor present); ";
    }
    return R;
}

// ---- fiber solving ---------------------------------------------------------

namespace {

// univariate polynomial in variable j cutting out the candidates for the
// j-th coordinates of the fiber; necessary conditions only
LaurentPoly eliminate_to(const std::vector<LaurentPoly>& eqs, int n, int j) {
    if (n == 2) {
        LaurentPoly u = resultant(eqs[0], eqs[1], 1 - j);
        return strip_monomial_units(u);
    }
    std::vector<int> others;
    for (int v = 0; v < 3; ++v)
        if (v != j) others.push_back(v);
    int o1 = others[0], o2 = others[1];
    auto res_or_self = [&](const LaurentPoly& p, const LaurentPoly& q,
                           int v) -> LaurentPoly {
        if (!p.depends_on(v)) return p;
        if (!q.depends_on(v)) return q;
        return resultant(p, q, v);
    };
    LaurentPoly a = res_or_self(eqs[0], eqs[1], o2);
    LaurentPoly b = res_or_self(eqs[0], eqs[2], o2);
    if (a.is_zero() || b.is_zero())
        throw std::runtime_error("fiber elimination collapsed (shared factor)");
    LaurentPoly u = res_or_self(a, b, o1);
    if (u.is_zero())
        throw std::runtime_error("fiber elimination collapsed (shared factor)");
    return strip_monomial_units(u);
}

struct CoordRoots {
    std::vector<std::pair<Rational, int>> exact;
    std::vector<std::pair<Complex, int>> numeric;
};

CoordRoots coordinate_roots(const LaurentPoly& u) {
    CoordRoots out;
    RootSet rs = univariate_roots(u);
    out.exact = rs.rational_roots;
    for (auto& [ca, m] : rs.numeric_roots) out.numeric.push_back({ca.value, m});
    return out;
}

bool coord_close(const FiberCoord& a, const FiberCoord& b) {
    if (a.exact && b.exact) return a.rat == b.rat;
    Complex va = a.value(), vb = b.value();
    return std::abs(va - vb) < 1e-7 * (1.0 + std::abs(va));
}

}  // namespace

FiberResult fiber(const LaurentPoly& f, const ProjectiveDirection& y) {
    int n = f.arity();
    FiberResult out;
    out.degree_bound = volume_bound(f, n);  // normalized volume is n!.Vol
    FiberSystem sys = fiber_system(f, y);
    out.chart = sys.chart;
    std::vector<LaurentPoly> eqs{f};
    for (auto& h : sys.equations) {
        if (h.is_zero())
            throw std::runtime_error("degenerate direction: equation vanished");
        eqs.push_back(h);
    }
    std::vector<CoordRoots> roots((size_t)n);
    for (int j = 0; j < n; ++j)
        roots[(size_t)j] = coordinate_roots(eliminate_to(eqs, n, j));

    // candidate points: all combinations, verified against the full system
    struct Cand {
        std::vector<FiberCoord> coords;
    };
    std::vector<Cand> cands;
    std::vector<size_t> counts;
    for (auto& r : roots) counts.push_back(r.exact.size() + r.numeric.size());
    std::vector<size_t> idx((size_t)n, 0);
    auto coord_at = [&](int j, size_t k) {
        FiberCoord c;
        auto& r = roots[(size_t)j];
        if (k < r.exact.size()) {
            c.exact = true;
            c.rat = r.exact[k].first;
        } else {
            c.num.value = r.numeric[k - r.exact.size()].first;
        }
        return c;
    };
    bool done = std::any_of(counts.begin(), counts.end(),
                            [](size_t c) { return c == 0; });
    while (!done) {
        Cand c;
        bool torus = true, all_exact = true;
        for (int j = 0; j < n; ++j) {
            c.coords.push_back(coord_at(j, idx[(size_t)j]));
            auto& fc = c.coords.back();
            if (fc.exact) {
                if (fc.rat == 0) torus = false;
            } else {
                all_exact = false;
                if (std::abs(fc.num.value) < 1e-10) torus = false;
            }
        }
        bool ok = torus;
        double worst = 0;
        if (ok && all_exact) {
            std::vector<Rational> pt;
            for (auto& fc : c.coords) pt.push_back(fc.rat);
            for (auto& e : eqs) ok = ok && eval_rational(e, pt) == 0;
        } else if (ok) {
            std::vector<Complex> pt;
            for (auto& fc : c.coords) pt.push_back(fc.value());
            for (auto& e : eqs) {
                double v = std::abs(eval_complex(e, pt).value);
                worst = std::max(worst, v);
                if (v > 1e-8 * eval_scale(e, pt)) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            FiberPoint p;
            p.coords = c.coords;
            p.residual = worst;
            p.is_real = true;
            for (auto& fc : p.coords)
                if (!fc.exact && std::abs(fc.num.value.imag()) > 1e-8)
                    p.is_real = false;
            bool dup = false;
            for (auto& q : out.points) {
                bool same = true;
                for (int j = 0; j < n; ++j)
                    same = same && coord_close(q.coords[(size_t)j],
                                               p.coords[(size_t)j]);
                dup = dup || same;
            }
            if (!dup) out.points.push_back(std::move(p));
        }
        // advance
        int j = 0;
        while (j < n && ++idx[(size_t)j] == counts[(size_t)j]) {
            idx[(size_t)j] = 0;
            ++j;
        }
        done = j == n;
    }

    // multiplicity: the root multiplicity in a projection where the point's
    // coordinate is not shared with any other fiber point
    for (auto& p : out.points) {
        int best = -1;
        for (int j = 0; j < n; ++j) {
            bool separates = true;
            for (auto& q : out.points) {
                if (&q == &p) continue;
                separates = separates &&
                            !coord_close(q.coords[(size_t)j],
                                         p.coords[(size_t)j]);
            }
            if (!separates) continue;
            auto& fc = p.coords[(size_t)j];
            int m = 0;
            if (fc.exact) {
                for (auto& [r, mm] : roots[(size_t)j].exact)
                    if (r == fc.rat) m = mm;
            } else {
                double bd = 1e9;
                for (auto& [r, mm] : roots[(size_t)j].numeric) {
                    double d = std::abs(r - fc.num.value);
                    if (d < bd) bd = d, m = mm;
                }
            }
            if (m > 0) best = best < 0 ? m : std::min(best, m);
        }
        if (best < 0) {
            best = 1;
            out.warning += "no separating projection for a fiber point; ";
        }
        p.multiplicity = best;
        out.torus_total += best;
    }
    out.deficit = out.degree_bound - out.torus_total;
    std::sort(out.points.begin(), out.points.end(),
              [](const FiberPoint& a, const FiberPoint& b) {
                  Complex va = a.coords[0].value(), vb = b.coords[0].value();
                  if (va.real() != vb.real()) return va.real() < vb.real();
                  return va.imag() < vb.imag();
              });
    return out;
}

// ---- discriminant ----------------------------------------------------------

namespace {

// keep only y-exponents: maps the symbolic 2n-ring down to the n-variable
// direction ring
LaurentPoly restrict_to_y(const LaurentPoly& p, int base, int n) {
    LaurentPoly out(n);
    for (auto& [e, c] : p.terms()) {
        for (int i = 0; i < base; ++i)
            if (e[(size_t)i] != 0)
                throw std::logic_error("torus variable survived elimination");
        out.add_term(Exp(e.begin() + base, e.begin() + base + n), c);
    }
    return out;
}

std::vector<Rational> sample_grid() {
    return {Rational(1),    Rational(2),  Rational(3),  Rational(4),
            Rational(5),    Rational(6),  Rational(7),  Rational(8),
            Rational(9),    Rational(1, 3), Rational(1, 9), Rational(1, 2),
            Rational(-1),   Rational(-2), Rational(-3), Rational(2, 3),
            Rational(3, 2), Rational(5, 2), Rational(-1, 2), Rational(1, 4)};
}

// gcd-free refinement of a set of squarefree polynomials
std::vector<LaurentPoly> gcd_free_basis(std::vector<LaurentPoly> in) {
    std::vector<LaurentPoly> base;
    for (auto& p0 : in) {
        std::vector<LaurentPoly> queue{normalize_unit(strip_monomial_units(p0))};
        while (!queue.empty()) {
            LaurentPoly p = queue.back();
            queue.pop_back();
            if (p.is_constant()) continue;
            bool split = false;
            for (size_t i = 0; i < base.size() && !split; ++i) {
                LaurentPoly g = mv_gcd(p, base[i]);
                if (g.is_constant()) continue;
                if (g == base[i]) {
                    LaurentPoly rest = divide_exact(p, g);
                    queue.push_back(normalize_unit(strip_monomial_units(rest)));
                    split = true;
                } else {
                    LaurentPoly old = base[i];
                    base[i] = g;
                    base.push_back(
                        normalize_unit(divide_exact(old, g)));
                    queue.push_back(p);
                    split = true;
                }
            }
            if (!split) {
                // content splits across each variable
                for (int v = 0; v < p.arity() && !split; ++v) {
                    if (!p.depends_on(v)) continue;
                    LaurentPoly c = content_wrt(p, v);
                    if (!c.is_constant()) {
                        queue.push_back(normalize_unit(c));
                        queue.push_back(
                            normalize_unit(divide_exact(p, c)));
                        split = true;
                    }
                }
                if (!split) base.push_back(p);
            }
        }
    }
    // drop constants and duplicates
    std::vector<LaurentPoly> out;
    for (auto& p : base) {
        if (p.is_constant()) continue;
        bool dup = false;
        for (auto& q : out) dup = dup || q == p;
        if (!dup) out.push_back(p);
    }
    return out;
}

// peel rational linear factors (u - r v) off a homogeneous binary form
std::vector<LaurentPoly> split_binary_form(const LaurentPoly& p0) {
    LaurentPoly p = normalize_unit(strip_monomial_units(p0));
    std::vector<int> vars;
    for (int i = 0; i < p.arity(); ++i)
        if (p.depends_on(i)) vars.push_back(i);
    if (vars.size() != 2) return {p};
    int u = vars[0], v = vars[1];
    LaurentPoly dehom = substitute_poly(p, v, LaurentPoly::constant(p.arity(), 1));
    auto [q, var] = [&]() -> std::pair<QPoly, int> {
        try {
            return as_univariate(dehom);
        } catch (...) {
            return {QPoly{}, -1};
        }
    }();
    if (var < 0 || q.is_zero()) return {p};
    std::vector<LaurentPoly> out;
    for (auto& r : rational_roots(q)) {
        LaurentPoly lin =
            LaurentPoly::variable(p.arity(), u) * r.get_den() -
            LaurentPoly::variable(p.arity(), v) * r.get_num();
        lin = normalize_unit(lin);
        bool took = false;
        while (divides(lin, p)) {
            p = divide_exact(p, lin);
            took = true;
        }
        if (took) out.push_back(lin);
    }
    p = normalize_unit(strip_monomial_units(p));
    if (!p.is_constant()) out.push_back(p);
    return out;
}

struct ActivityOutcome {
    bool active = false;
    bool certified = true;
    std::string reason;
    std::vector<Rational> sample;
};

// numeric activity probe for a binary (n=2) factor without rational real
// zeros: pick a complex zero, count clustered torus roots of the projection
ActivityOutcome numeric_activity_n2(const LaurentPoly& factor,
                                    const LaurentPoly& f,
                                    const LaurentPoly& H, int base) {
    ActivityOutcome out;
    out.certified = false;
    LaurentPoly dehom =
        substitute_poly(factor, 1, LaurentPoly::constant(factor.arity(), 1));
    QPoly q;
    try {
        auto [qq, var] = as_univariate(dehom);
        q = qq;
    } catch (...) {
        out.reason = "factor not reducible to a binary form";
        return out;
    }
    RootSet rs = univariate_roots(q);
    std::vector<Complex> lams;
    for (auto& [r, m] : rs.rational_roots) lams.push_back(Complex(r.get_d(), 0));
    for (auto& [ca, m] : rs.numeric_roots) lams.push_back(ca.value);
    for (Complex lam : lams) {
        // specialize H(y1=lam, y2=1) to a complex univariate in z1
        int m = H.arity();
        std::vector<Complex> pt((size_t)m, Complex(1.0, 0.0));
        pt[(size_t)base] = lam;
        int dz = H.degree_in(0);
        std::vector<Complex> coeffs((size_t)dz + 1, Complex(0, 0));
        for (auto& [e, c] : H.terms()) {
            Complex t(c.get_d(), 0.0);
            for (int i = 1; i < m; ++i)
                for (int k = 0; k < e[(size_t)i]; ++k) t *= pt[(size_t)i];
            coeffs[(size_t)e[0]] += t;
        }
        std::vector<Complex> zs;
        try {
            zs = aberth_roots(coeffs);
        } catch (...) {
            continue;
        }
        for (size_t i = 0; i < zs.size(); ++i)
            for (size_t j = i + 1; j < zs.size(); ++j) {
                if (std::abs(zs[i] - zs[j]) > 1e-5) continue;
                Complex z1 = (zs[i] + zs[j]) / 2.0;
                if (std::abs(z1) < 1e-8) continue;
                // recover z2 from f(z1, z2) = 0 and check it is in the torus
                int dz2 = f.degree_in(1);
                std::vector<Complex> fc((size_t)dz2 + 1, Complex(0, 0));
                for (auto& [e, c] : f.terms()) {
                    Complex t(c.get_d(), 0.0);
                    for (int k = 0; k < e[0]; ++k) t *= z1;
                    fc[(size_t)e[1]] += t;
                }
                std::vector<Complex> z2s;
                try {
                    z2s = aberth_roots(fc);
                } catch (...) {
                    continue;
                }
                for (Complex z2 : z2s) {
                    if (std::abs(z2) < 1e-8) continue;
                    out.active = true;
                    out.reason =
                        "clustered torus root over a complex zero of the "
                        "factor";
                    return out;
                }
            }
    }
    out.reason = "no torus multiplicity over sampled zeros";
    return out;
}

}  // namespace

LaurentPoly homogenize(const LaurentPoly& p, int degree) {
    int n = p.arity();
    LaurentPoly out(n);
    for (auto& [e, c] : p.terms()) {
        int s = 0;
        for (int i = 0; i + 1 < n; ++i) s += e[(size_t)i];
        if (e[(size_t)(n - 1)] != 0)
            throw std::domain_error("last variable already present");
        if (s > degree) throw std::domain_error("degree below the support");
        Exp ne = e;
        ne[(size_t)(n - 1)] = degree - s;
        out.add_term(ne, c);
    }
    return out;
}

DiscriminantResult gauss_discriminant(const LaurentPoly& f) {
    int n = f.arity();
    if (n < 2 || n > 3) throw std::domain_error("2 or 3 variables only");
    DiscriminantResult out;
    out.n = n;
    int base = n;  // symbolic ring: z_1..z_n, y_1..y_n
    for (int i = 0; i < n; ++i) {
        LaurentPoly H = projection_polynomial(f, i, n, &out.warning);
        LaurentPoly D = resultant(H, H.derivative(i), i);
        // one copy of the leading coefficient is an artifact of using the
        // resultant instead of the discriminant proper
        auto view = make_univariate_view(H, i);
        LaurentPoly lc = view.lc();
        if (!lc.is_constant() && divides(lc, D)) D = divide_exact(D, lc);
        out.projections.push_back(H);
        if (i == 0) {
            // monomial part of the discriminant: never zero in the torus,
            // reported as rejected rather than silently stripped
            for (int j = 0; j < n; ++j) {
                int low = D.low_degree_in(base + j);
                if (low <= 0) continue;
                DiscriminantFactor df;
                df.factor = LaurentPoly::variable(n, j);
                df.multiplicity = low;
                df.active = false;
                df.reason = "monomial factor, no zeros in the torus";
                out.factors.push_back(std::move(df));
            }
        }
        out.raw_discriminants.push_back(
            normalize_unit(restrict_to_y(strip_monomial_units(D), base, n)));
    }
    // factor base: squarefree factors of every projection discriminant,
    // refined to a gcd-free family, binary forms split at rational lines
    std::vector<std::pair<LaurentPoly, int>> first_mults;
    std::vector<LaurentPoly> pool;
    for (size_t i = 0; i < out.raw_discriminants.size(); ++i) {
        auto sf = squarefree_decomposition(out.raw_discriminants[i], 0);
        for (auto& [fac, m] : sf) {
            pool.push_back(fac);
            if (i == 0) first_mults.push_back({fac, m});
        }
    }
    std::vector<LaurentPoly> basis0 = gcd_free_basis(pool);
    std::vector<LaurentPoly> basis;
    for (auto& p : basis0)
        if (n == 2)
            for (auto& q : split_binary_form(p)) basis.push_back(q);
        else
            basis.push_back(p);

    // a genuine branch of the ramification image divides every d_i
    std::vector<bool> in_all(basis.size(), true);
    for (size_t bi = 0; bi < basis.size(); ++bi)
        for (auto& d : out.raw_discriminants)
            in_all[bi] = in_all[bi] && divides(basis[bi], d);

    for (size_t bi = 0; bi < basis.size(); ++bi) {
        auto& fac = basis[bi];
        DiscriminantFactor df;
        df.factor = fac;
        df.multiplicity = 0;
        for (auto& [p, m] : first_mults)
            if (divides(fac, p)) df.multiplicity = std::max(df.multiplicity, m);
        if (df.multiplicity == 0) df.multiplicity = 1;
        if (!in_all[bi]) {
            df.active = false;
            df.reason = "absent from another coordinate projection";
            out.factors.push_back(std::move(df));
            continue;
        }
        // rational sample on the factor's zero set, off the other factors
        // that are still candidates (rejected factors are not branches of
        // the ramification image, so meeting them is harmless)
        std::optional<std::vector<Rational>> sample;
        auto off_others = [&](const std::vector<Rational>& y) {
            for (size_t bj = 0; bj < basis.size(); ++bj) {
                if (bj == bi || !in_all[bj]) continue;
                if (eval_rational(basis[bj], std::vector<Rational>(
                                                 y.begin(), y.begin() + n)) == 0)
                    return false;
            }
            return true;
        };
        if (n == 2) {
            // zero set of a binary form: rational points of the dehomogenized
            // root set, plus the two coordinate directions
            LaurentPoly dehom = substitute_poly(
                fac, 1, LaurentPoly::constant(fac.arity(), 1));
            try {
                auto [q, var] = as_univariate(dehom);
                for (auto& r : rational_roots(q)) {
                    std::vector<Rational> y{r, Rational(1)};
                    if (off_others(y)) {
                        sample = y;
                        break;
                    }
                }
            } catch (...) {
            }
            if (!sample) {
                std::vector<Rational> y{Rational(1), Rational(0)};
                if (eval_rational(fac, y) == 0 && off_others(y)) sample = y;
            }
        } else {
            int tries = 0;
            for (int fixed = 1; fixed >= 0 && !sample; --fixed) {
                int freev = 1 - fixed;
                for (auto& val : sample_grid()) {
                    if (++tries > 50) break;
                    LaurentPoly slice = substitute_poly(
                        fac, fixed, LaurentPoly::constant(n, val));
                    slice = strip_monomial_units(slice);
                    std::vector<Rational> found;
                    if (slice.is_zero()) {
                        found.push_back(Rational(1));
                    } else if (!slice.is_constant() &&
                               slice.depends_on(freev)) {
                        try {
                            auto [q, var] = as_univariate(slice);
                            found = rational_roots(q);
                        } catch (...) {
                        }
                    }
                    for (auto& r : found) {
                        std::vector<Rational> y(3, Rational(1));
                        y[(size_t)fixed] = val;
                        y[(size_t)freev] = r;
                        y[2] = 1;
                        if (eval_rational(fac, y) == 0 && off_others(y)) {
                            sample = y;
                            break;
                        }
                    }
                    if (sample) break;
                }
            }
        }
        if (sample) {
            df.sample = *sample;
            std::vector<Rational> dir = *sample;
            if (n == 3) dir.resize(3);
            FiberResult fr = fiber(f, ProjectiveDirection::of(dir));
            bool mult2 = false;
            for (auto& p : fr.points) mult2 = mult2 || p.multiplicity >= 2;
            df.active = mult2;
            df.reason = mult2
                            ? "torus point of multiplicity >= 2 over sample"
                            : "fiber over sample has simple torus points only";
            df.certified = true;
        } else if (n == 2) {
            ActivityOutcome ao = numeric_activity_n2(
                fac, f, out.projections[0], base);
            df.active = ao.active;
            df.certified = ao.certified;
            df.reason = ao.reason;
        } else {
            df.active = false;
            df.certified = false;
            df.reason = "no rational sample found on the factor";
        }
        out.factors.push_back(std::move(df));
    }

    LaurentPoly d0 = LaurentPoly::constant(n, 1);
    bool any = false;
    for (auto& df : out.factors)
        if (df.active) {
            d0 = d0 * df.factor;
            any = true;
        }
    if (!any) {
        out.warning += "all discriminant factors rejected; ";
        out.d0 = LaurentPoly(n);
        return out;
    }
    d0 = normalize_unit(d0);
    if (n == 3) d0 = homogenize(d0, d0.total_degree());
    out.d0 = d0;
    return out;
}

}  // namespace amo
