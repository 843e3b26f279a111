#include "amo/elim.hpp"

#include <algorithm>
#include <random>

namespace amo {

LaurentPoly UnivariateView::assemble() const {
    LaurentPoly acc(coeffs.empty() ? 0 : coeffs.front().arity());
    for (size_t k = 0; k < coeffs.size(); ++k) {
        Exp e(acc.arity(), 0);
        e[(size_t)var] = (int)k;
        LaurentPoly mono = LaurentPoly::monomial(acc.arity(), e, 1);
        acc = acc + coeffs[k] * mono;
    }
    return acc;
}

UnivariateView make_univariate_view(const LaurentPoly& p0, int var) {
    LaurentPoly p = strip_monomial_units(p0);
    UnivariateView v;
    v.var = var;
    if (p.is_zero()) return v;
    int d = p.degree_in(var);
    v.coeffs.assign((size_t)d + 1, LaurentPoly(p.arity()));
    for (auto& [e, c] : p.terms()) {
        Exp ne = e;
        int k = ne[(size_t)var];
        ne[(size_t)var] = 0;
        v.coeffs[(size_t)k].add_term(ne, c);
    }
    while (v.coeffs.size() > 1 && v.coeffs.back().is_zero()) v.coeffs.pop_back();
    return v;
}

LaurentPoly poly_det_bareiss(std::vector<std::vector<LaurentPoly>> m) {
    size_t n = m.size();
    if (n == 0) throw std::invalid_argument("empty matrix");
    int arity = m[0][0].arity();
    LaurentPoly prev = LaurentPoly::constant(arity, 1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) return LaurentPoly(arity);  // singular
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                LaurentPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = num.is_zero() ? num : divide_exact(num, prev);
            }
            m[i][k] = LaurentPoly(arity);
        }
        prev = m[k][k];
    }
    LaurentPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

namespace {

std::vector<std::vector<LaurentPoly>> sylvester_matrix(const UnivariateView& a,
                                                       const UnivariateView& b,
                                                       int arity) {
    int m = a.degree(), l = b.degree();
    size_t n = (size_t)(m + l);
    std::vector<std::vector<LaurentPoly>> s(n,
        std::vector<LaurentPoly>(n, LaurentPoly(arity)));
    for (int r = 0; r < l; ++r)
        for (int k = 0; k <= m; ++k) s[(size_t)r][(size_t)(r + m - k)] = a.coeffs[(size_t)k];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= l; ++k)
            s[(size_t)(l + r)][(size_t)(r + l - k)] = b.coeffs[(size_t)k];
    return s;
}

// pseudo-remainder: lc(b)^(da-db+1) * a mod b, all in variable `var`
UnivariateView pseudo_rem(UnivariateView a, const UnivariateView& b) {
    int db = b.degree();
    const LaurentPoly& lb = b.lc();
    while (a.degree() >= db && !(a.coeffs.size() == 1 && a.coeffs[0].is_zero())) {
        int da = a.degree();
        LaurentPoly la = a.coeffs.back();
        // a = lb*a - la * x^(da-db) * b
        for (auto& c : a.coeffs) c = c * lb;
        for (int k = 0; k <= db; ++k) {
            size_t idx = (size_t)(da - db + k);
            a.coeffs[idx] = a.coeffs[idx] - la * b.coeffs[(size_t)k];
        }
        while (!a.coeffs.empty() && a.coeffs.back().is_zero()) a.coeffs.pop_back();
        if (a.coeffs.empty()) break;
    }
    return a;
}

// Fully multiplied pseudo-remainder sequence with the Brown-Traub
// subresultant divisors; returns the resultant when deg(gcd)=0, else zero.
LaurentPoly resultant_subres_prs(UnivariateView A, UnivariateView B, int arity) {
    if (A.degree() < B.degree()) std::swap(A, B);  // sign fixed later by caller
    LaurentPoly one = LaurentPoly::constant(arity, 1);
    LaurentPoly g = one, h = one;
    while (true) {
        int delta = A.degree() - B.degree();
        UnivariateView R = pseudo_rem(A, B);
        bool rzero = R.coeffs.empty();
        if (rzero) {
            if (B.degree() > 0) return LaurentPoly(arity);  // common factor
            // B constant: resultant = B^{deg A} / h^{deg A - 1}
            LaurentPoly s = B.coeffs[0];
            int dA = A.degree();
            LaurentPoly num = s.pow((unsigned)dA);
            if (dA >= 1 && !(h == one)) num = divide_exact(num, h.pow((unsigned)(dA - 1)));
            return num;
        }
        LaurentPoly divisor = g * h.pow((unsigned)delta);
        A = B;
        B = std::move(R);
        for (auto& c : B.coeffs) c = divide_exact(c, divisor);
        g = A.lc();
        if (delta > 0) {
            // h = g^delta / h^{delta-1}
            LaurentPoly num = g.pow((unsigned)delta);
            h = (delta == 1) ? num : divide_exact(num, h.pow((unsigned)(delta - 1)));
        }
        if (B.degree() == 0) {
            // one more step: resultant = B^{deg A} / h^{deg A - 1}
            int dA = A.degree();
            LaurentPoly s = B.coeffs[0];
            LaurentPoly num = s.pow((unsigned)dA);
            if (dA >= 1 && !(h == one)) num = divide_exact(num, h.pow((unsigned)(dA - 1)));
            return num;
        }
    }
}

// Resultant of two exact specializations, as a scalar over Q (Bareiss on the
// numeric Sylvester matrix).
Rational scalar_resultant(const QPoly& a, const QPoly& b) {
    int m = a.degree(), l = b.degree();
    size_t n = (size_t)(m + l);
    if (n == 0) return 1;
    std::vector<std::vector<Rational>> s(n, std::vector<Rational>(n, Rational(0)));
    for (int r = 0; r < l; ++r)
        for (int k = 0; k <= m; ++k) s[(size_t)r][(size_t)(r + m - k)] = a.c[(size_t)k];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= l; ++k) s[(size_t)(l + r)][(size_t)(r + l - k)] = b.c[(size_t)k];
    // plain fraction elimination over Q is exact
    Rational det = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && s[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(s[piv], s[k]);
            det = -det;
        }
        det *= s[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            if (s[i][k] == 0) continue;
            Rational f = s[i][k] / s[k][k];
            for (size_t j = k; j < n; ++j) s[i][j] -= f * s[k][j];
        }
    }
    return det;
}

QPoly specialize(const UnivariateView& v, const std::vector<Rational>& vals) {
    QPoly q;
    q.c.reserve(v.coeffs.size());
    for (auto& c : v.coeffs) q.c.push_back(eval_rational(c, vals));
    q.trim();
    return q;
}

}  // namespace

LaurentPoly resultant(const LaurentPoly& p0, const LaurentPoly& q0, int var) {
    LaurentPoly p = strip_monomial_units(p0);
    LaurentPoly q = strip_monomial_units(q0);
    int arity = p.arity();
    UnivariateView a = make_univariate_view(p, var);
    UnivariateView b = make_univariate_view(q, var);
    if (p.is_zero() || q.is_zero())
        throw std::domain_error("resultant of zero polynomial");
    int m = a.degree(), l = b.degree();
    if (m == 0 && l == 0)
        throw std::domain_error("resultant: both inputs constant in the variable");
    if (m == 0) return a.coeffs[0].pow((unsigned)l);
    if (l == 0) return b.coeffs[0].pow((unsigned)m);

    if (m + l <= 8) return poly_det_bareiss(sylvester_matrix(a, b, arity));

    // PRS fast path, certified against the Sylvester determinant at two
    // random rational sample points.
    LaurentPoly cand = resultant_subres_prs(a, b, arity);
    if (cand.is_zero()) return cand;
    std::mt19937_64 rng(0x5eedu);
    std::uniform_int_distribution<int> dist(2, 97);
    Rational unit;
    bool have_unit = false, certified = false;
    for (int attempt = 0; attempt < 24; ++attempt) {
        std::vector<Rational> vals((size_t)arity, Rational(0));
        for (auto& v : vals) v = dist(rng);
        vals[(size_t)var] = 0;  // unused by coefficients
        QPoly sa = specialize(a, vals), sb = specialize(b, vals);
        if (sa.degree() != m || sb.degree() != l) continue;  // degree dropped
        Rational truth = scalar_resultant(sa, sb);
        Rational mine = eval_rational(cand, vals);
        if (mine == 0 || truth == 0) continue;
        Rational u = truth / mine;
        if (!have_unit) {
            unit = u;
            have_unit = true;
        } else if (u == unit) {
            certified = true;
            break;
        } else {
            have_unit = false;
            break;  // not off by a constant: PRS route unusable here
        }
    }
    if (certified) return cand * unit;
    return poly_det_bareiss(sylvester_matrix(a, b, arity));
}

LaurentPoly discriminant(const LaurentPoly& p, int var) {
    LaurentPoly d = strip_monomial_units(p).derivative(var);
    if (strip_monomial_units(p).degree_in(var) < 1)
        throw std::domain_error("discriminant: degree 0 in the variable");
    return resultant(p, d, var);
}

LaurentPoly content_wrt(const LaurentPoly& p, int var) {
    UnivariateView v = make_univariate_view(p, var);
    std::vector<LaurentPoly> cs;
    for (auto& c : v.coeffs)
        if (!c.is_zero()) cs.push_back(c);
    return mv_gcd_list(cs);
}

namespace {

// last nonzero element of the subresultant PRS, primitive wrt var
LaurentPoly prs_gcd_primitive(UnivariateView A, UnivariateView B, int var,
                              int arity) {
    if (A.degree() < B.degree()) std::swap(A, B);
    LaurentPoly one = LaurentPoly::constant(arity, 1);
    LaurentPoly g = one, h = one;
    while (true) {
        if (B.coeffs.empty()) {
            // monomial factors are units here; strip them or the content
            // computation below misses shared monomials in the coefficients
            LaurentPoly res = strip_monomial_units(A.assemble());
            return divide_exact(res, content_wrt(res, var));
        }
        if (B.degree() == 0) return one;  // coprime up to content
        int delta = A.degree() - B.degree();
        UnivariateView R = pseudo_rem(A, B);
        LaurentPoly divisor = g * h.pow((unsigned)delta);
        A = B;
        B = std::move(R);
        for (auto& c : B.coeffs) c = divide_exact(c, divisor);
        g = A.lc();
        if (delta > 0) {
            LaurentPoly num = g.pow((unsigned)delta);
            h = (delta == 1) ? num : divide_exact(num, h.pow((unsigned)(delta - 1)));
        }
    }
}

}  // namespace

LaurentPoly mv_gcd(const LaurentPoly& p0, const LaurentPoly& q0) {
    if (p0.is_zero()) return normalize_unit(strip_monomial_units(q0));
    if (q0.is_zero()) return normalize_unit(strip_monomial_units(p0));
    LaurentPoly p = strip_monomial_units(p0);
    LaurentPoly q = strip_monomial_units(q0);
    int arity = p.arity();
    if (p.is_constant() || q.is_constant())
        return LaurentPoly::constant(arity, 1);
    // main variable: present in both, minimizing the larger degree
    int var = -1;
    long best = -1;
    for (int i = 0; i < arity; ++i) {
        if (!p.depends_on(i) || !q.depends_on(i)) continue;
        long d = std::max(p.degree_in(i), q.degree_in(i));
        if (var < 0 || d < best) {
            var = i;
            best = d;
        }
    }
    if (var < 0) {
        // disjoint variable sets: common divisors sit in the contents
        for (int i = 0; i < arity; ++i)
            if (p.depends_on(i)) return mv_gcd(content_wrt(p, i), q);
        return LaurentPoly::constant(arity, 1);
    }
    LaurentPoly cp = content_wrt(p, var);
    LaurentPoly cq = content_wrt(q, var);
    LaurentPoly cont_gcd = mv_gcd(cp, cq);
    LaurentPoly pp = divide_exact(p, cp);
    LaurentPoly qq = divide_exact(q, cq);
    UnivariateView a = make_univariate_view(pp, var);
    UnivariateView b = make_univariate_view(qq, var);
    LaurentPoly pp_gcd = prs_gcd_primitive(std::move(a), std::move(b), var, arity);
    return normalize_unit(cont_gcd * pp_gcd);
}

LaurentPoly mv_gcd_list(const std::vector<LaurentPoly>& ps) {
    if (ps.empty()) throw std::invalid_argument("gcd of empty list");
    LaurentPoly g = ps[0];
    for (size_t i = 1; i < ps.size(); ++i) {
        g = mv_gcd(g, ps[i]);
        if (!g.is_zero() && g.is_constant()) break;
    }
    return normalize_unit(strip_monomial_units(g));
}

std::vector<SquarefreeFactor> squarefree_decomposition(const LaurentPoly& p0,
                                                       int start_var) {
    if (p0.is_zero()) throw std::domain_error("squarefree of zero polynomial");
    std::vector<SquarefreeFactor> out;
    int arity = p0.arity();
    // peel off monomial factors first: gcd works modulo monomial units, so
    // Yun would silently lose them (and report wrong cofactors)
    for (int i = 0; i < arity; ++i) {
        int low = p0.low_degree_in(i);
        if (low > 0) out.push_back({LaurentPoly::variable(arity, i), low});
    }
    LaurentPoly p = normalize_unit(strip_monomial_units(p0));
    if (p.is_constant()) return out;
    int var = (start_var >= 0 && start_var < arity && p.depends_on(start_var))
                  ? start_var
                  : -1;
    if (var < 0)
        for (int i = 0; i < arity; ++i)
            if (p.depends_on(i)) {
                var = i;
                break;
            }
    LaurentPoly cont = content_wrt(p, var);
    LaurentPoly pp = divide_exact(p, cont);
    if (!cont.is_constant()) {
        int next = (var + 1) % arity;
        auto sub = squarefree_decomposition(cont, next);
        out.insert(out.end(), sub.begin(), sub.end());
    }
    // Yun with respect to var on the primitive part
    LaurentPoly dp = pp.derivative(var);
    if (dp.is_zero()) throw std::domain_error("unexpected constant primitive part");
    LaurentPoly g = mv_gcd(pp, dp);
    LaurentPoly w = divide_exact(pp, g);
    LaurentPoly y = divide_exact(dp, g);
    int mult = 1;
    while (w.degree_in(var) > 0 || !w.is_constant()) {
        LaurentPoly z = y - w.derivative(var);
        LaurentPoly h = mv_gcd(w, z);
        if (!h.is_constant()) out.push_back({normalize_unit(h), mult});
        w = divide_exact(w, h);
        y = divide_exact(z, h);
        ++mult;
        if (mult > 512) throw std::runtime_error("squarefree recursion runaway");
    }
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) {
        return a.multiplicity < b.multiplicity;
    });
    return out;
}

std::vector<SquarefreeFactor> group_by_multiplicity(
    std::vector<SquarefreeFactor> factors) {
    std::vector<SquarefreeFactor> out;
    std::sort(factors.begin(), factors.end(), [](auto& a, auto& b) {
        return a.multiplicity < b.multiplicity;
    });
    for (auto& f : factors) {
        if (!out.empty() && out.back().multiplicity == f.multiplicity)
            out.back().factor = normalize_unit(out.back().factor * f.factor);
        else
            out.push_back(f);
    }
    return out;
}

}  // namespace amo
