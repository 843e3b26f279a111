#include "amo/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "amo/gauss.hpp"
#include "amo/univariate.hpp"

namespace amo {

namespace {

long dot(const Exp& l, const Exp& e) {
    long s = 0;
    for (size_t i = 0; i < l.size(); ++i) s += (long)l[i] * e[i];
    return s;
}

Exp add(const Exp& a, const Exp& b) {
    Exp r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

// ratio terms of (a z^nu - f)/(a z^nu): exponent offsets with coefficients
std::vector<std::pair<Exp, Rational>> ratio_terms(const LaurentPoly& f,
                                                  const Exp& nu) {
    Rational a = f.coeff(nu);
    if (a == 0)
        throw std::domain_error("pivot is not a term of the polynomial");
    std::vector<std::pair<Exp, Rational>> out;
    for (auto& [e, c] : f.terms()) {
        if (e == nu) continue;
        Exp d = e;
        for (size_t i = 0; i < d.size(); ++i) d[i] -= nu[i];
        out.push_back({d, -c / a});
    }
    return out;
}

Exp find_grading(const std::vector<std::pair<Exp, Rational>>& ratio, int n) {
    // smallest integer vector (max-abs, then 1-norm, then lex) strictly
    // positive on every ratio exponent
    for (int M = 1; M <= 12; ++M) {
        std::vector<Exp> cands;
        Exp l((size_t)n, -M);
        while (true) {
            int maxabs = 0, sum = 0;
            for (int v : l) {
                maxabs = std::max(maxabs, std::abs(v));
                sum += std::abs(v);
            }
            if (maxabs == M) cands.push_back(l);
            size_t i = 0;
            while (i < l.size() && l[i] == M) l[i++] = -M;
            if (i == l.size()) break;
            ++l[i];
        }
        std::sort(cands.begin(), cands.end(), [](const Exp& a, const Exp& b) {
            int sa = 0, sb = 0;
            for (int v : a) sa += std::abs(v);
            for (int v : b) sb += std::abs(v);
            if (sa != sb) return sa < sb;
            return a < b;
        });
        for (auto& cand : cands) {
            bool ok = true;
            for (auto& [d, c] : ratio) ok = ok && dot(cand, d) >= 1;
            if (ok) return cand;
        }
    }
    throw std::domain_error("no valid grading functional");
}

}  // namespace

ExpansionSpec make_expansion(const LaurentPoly& f, const Exp& nu,
                             const LaurentPoly& h) {
    if ((int)nu.size() != f.arity())
        throw std::invalid_argument("pivot arity mismatch");
    if (h.arity() != f.arity())
        throw std::invalid_argument("numerator arity mismatch");
    ExpansionSpec spec;
    spec.f = f;
    spec.h = h;
    spec.nu = nu;
    spec.ell = find_grading(ratio_terms(f, nu), f.arity());
    return spec;
}

ExpansionSpec make_expansion(const LaurentPoly& f, const Exp& nu) {
    return make_expansion(f, nu, LaurentPoly::constant(f.arity(), 1));
}

bool CoefficientTable::in_range(const Exp& alpha) const {
    return dot(ell, add(alpha, nu)) <= limit;
}

Rational CoefficientTable::at(const Exp& alpha) const {
    if (!in_range(alpha)) throw std::out_of_range("budget exceeded");
    auto it = c.find(alpha);
    return it == c.end() ? Rational(0) : it->second;
}

CoefficientTable expand(const ExpansionSpec& spec, long budget) {
    if (budget < 0) throw std::invalid_argument("negative budget");
    if (spec.h.is_zero()) {
        CoefficientTable t;
        t.nu = spec.nu;
        t.ell = spec.ell;
        t.limit = budget;
        return t;
    }
    auto ratio = ratio_terms(spec.f, spec.nu);
    for (auto& [d, c] : ratio)
        if (dot(spec.ell, d) < 1)
            throw std::domain_error("grading functional is not positive");
    Rational a = spec.f.coeff(spec.nu);

    // S = sum of ratio powers obeys S = 1 + ratio * S; propagating in
    // increasing grading order fills every entry in one pass
    struct ByEll {
        Exp ell;
        bool operator()(const Exp& x, const Exp& y) const {
            long lx = dot(ell, x), ly = dot(ell, y);
            if (lx != ly) return lx < ly;
            return GrlexLess{}(x, y);
        }
        static long dot(const Exp& l, const Exp& e) {
            long s = 0;
            for (size_t i = 0; i < l.size(); ++i) s += (long)l[i] * e[i];
            return s;
        }
    };
    std::map<Exp, Rational, ByEll> s(ByEll{spec.ell});
    s[Exp(spec.nu.size(), 0)] = 1;
    for (auto it = s.begin(); it != s.end(); ++it) {
        if (it->second == 0) continue;
        for (auto& [d, c] : ratio) {
            Exp nd = add(it->first, d);
            if (dot(spec.ell, nd) > budget) continue;
            s[nd] += c * it->second;
        }
    }

    // table = (1/a) z^-nu * h * S, kept where every numerator term has
    // contributed fully
    long hmin = 0;
    bool first = true;
    for (auto& [e, c] : spec.h.terms()) {
        long v = dot(spec.ell, e);
        hmin = first ? v : std::min(hmin, v);
        first = false;
    }
    CoefficientTable t;
    t.nu = spec.nu;
    t.ell = spec.ell;
    t.limit = budget + hmin;
    for (auto& [d, sd] : s) {
        if (sd == 0) continue;
        for (auto& [e, hc] : spec.h.terms()) {
            Exp alpha = add(d, e);
            for (size_t i = 0; i < alpha.size(); ++i) alpha[i] -= spec.nu[i];
            if (!t.in_range(alpha)) continue;
            t.c[alpha] += hc * sd / a;
        }
    }
    for (auto it = t.c.begin(); it != t.c.end();)
        it = it->second == 0 ? t.c.erase(it) : std::next(it);
    return t;
}

std::vector<Rational> diagonal(const CoefficientTable& t, const Exp& q,
                               int kmax) {
    if (q.size() != t.nu.size()) throw std::invalid_argument("arity mismatch");
    std::vector<Rational> out;
    Exp alpha(q.size(), 0);
    for (int k = 0; k <= kmax; ++k) {
        out.push_back(t.at(alpha));
        alpha = add(alpha, q);
    }
    return out;
}

namespace {

struct DiagonalRun {
    std::vector<Rational> c;
    std::vector<RateCandidate> candidates;
    int chosen = -1;
    double rate = 0.0;
    bool degenerate = false;
    int arity = 0;
};

DiagonalRun run_diagonal(const LaurentPoly& f, const Exp& nu, const Exp& q,
                         int kmax) {
    DiagonalRun run;
    run.arity = f.arity();
    ExpansionSpec spec = make_expansion(f, nu);
    Exp end(q.size(), 0);
    for (size_t i = 0; i < q.size(); ++i)
        end[i] = q[i] * kmax + nu[i];
    long budget = 0;
    for (size_t i = 0; i < q.size(); ++i)
        budget += (long)spec.ell[i] * end[i];
    CoefficientTable t = expand(spec, std::max(budget, 0L));
    run.c = diagonal(t, q, kmax);

    std::vector<FiberPoint> points;
    if (f.arity() == 1) {
        // one variable: the candidates are the roots of f itself
        auto rs = univariate_roots(f);
        for (auto& [r, m] : rs.rational_roots) {
            FiberPoint p;
            FiberCoord c;
            c.exact = true;
            c.rat = r;
            p.coords = {c};
            p.multiplicity = m;
            p.is_real = true;
            points.push_back(p);
        }
        for (auto& [r, m] : rs.numeric_roots) {
            FiberPoint p;
            FiberCoord c;
            c.num = r;
            p.coords = {c};
            p.multiplicity = m;
            p.is_real = std::abs(r.value.imag()) < 1e-10;
            points.push_back(p);
        }
    } else {
        std::vector<Rational> qr;
        for (int v : q) qr.push_back(Rational(v));
        points = fiber(f, ProjectiveDirection::of(qr)).points;
    }
    for (auto& p : points) {
        RateCandidate cand;
        cand.multiplicity = p.multiplicity;
        run.degenerate = run.degenerate || p.multiplicity >= 2;
        double dotqw = 0.0;
        bool realpos = true;
        for (size_t i = 0; i < p.coords.size(); ++i) {
            Complex w = p.coords[i].value();
            cand.log_w.push_back(std::log(std::abs(w)));
            dotqw += q[i] * cand.log_w.back();
            bool pos = p.coords[i].exact
                           ? p.coords[i].rat > 0
                           : std::abs(std::arg(w)) < 1e-8;
            realpos = realpos && p.is_real && pos;
        }
        cand.rate = std::exp(-dotqw);
        cand.real = p.is_real;
        cand.positive = realpos;
        run.candidates.push_back(cand);
    }
    // dominant saddle: the real candidate with the largest rate
    for (size_t i = 0; i < run.candidates.size(); ++i) {
        auto& cand = run.candidates[i];
        bool better =
            run.chosen < 0 ||
            (cand.real && !run.candidates[(size_t)run.chosen].real) ||
            (cand.real == run.candidates[(size_t)run.chosen].real &&
             cand.rate > run.candidates[(size_t)run.chosen].rate);
        if (better) run.chosen = (int)i;
    }
    if (run.chosen < 0) throw std::domain_error("no fiber point selectable");
    run.rate = run.candidates[(size_t)run.chosen].rate;
    return run;
}

}  // namespace

RateReport rate_check(const LaurentPoly& f, const Exp& nu, const Exp& q,
                      int kmax) {
    if (kmax < 30) throw std::invalid_argument("kmax too small");
    DiagonalRun run = run_diagonal(f, nu, q, kmax);
    RateReport rep;
    rep.candidates = run.candidates;
    rep.chosen = run.chosen;
    rep.predicted = run.rate;

    // log-difference sequence with the 1/k correction removed by
    // Richardson extrapolation, averaged over the last 10 terms
    if (run.c[(size_t)kmax] == 0 && run.c[(size_t)kmax - 1] == 0)
        throw std::domain_error(
            "diagonal tail is zero (direction outside the support cone)");
    std::vector<double> x;
    for (auto& v : run.c) x.push_back(log_abs(v));
    std::vector<double> extr;
    for (int k = kmax - 10; k <= kmax; ++k) {
        double dk = x[(size_t)k] - x[(size_t)k - 1];
        double dk1 = x[(size_t)k - 1] - x[(size_t)k - 2];
        extr.push_back(k * dk - (k - 1) * dk1);
    }
    double mean = 0.0;
    for (double v : extr) mean += v;
    mean /= extr.size();
    rep.empirical = std::exp(mean);
    double lo = *std::min_element(extr.begin(), extr.end());
    double hi = *std::max_element(extr.begin(), extr.end());
    rep.oscillatory = std::exp(hi) - std::exp(lo) >
                      0.10 * std::max(rep.empirical, 1e-300);
    rep.relative_error =
        std::abs(rep.empirical - rep.predicted) /
        std::max(std::abs(rep.predicted), 1e-300);
    return rep;
}

PrefactorReport morse_prefactor_check(const LaurentPoly& f, const Exp& nu,
                                      const Exp& q, int kmax) {
    if (kmax < 30) throw std::invalid_argument("kmax too small");
    DiagonalRun run = run_diagonal(f, nu, q, kmax);
    if (run.degenerate)
        throw std::domain_error(
            "fiber has a degenerate point; the Morse power law does not "
            "apply");
    PrefactorReport rep;
    rep.rate_used = run.rate;
    double lr = std::log(run.rate);
    double expo = (run.arity - 1) / 2.0;
    std::vector<double> p;
    for (int k = std::max(1, 2 * kmax / 3); k <= kmax; ++k)
        p.push_back(std::exp(log_abs(run.c[(size_t)k]) - k * lr +
                             expo * std::log((double)k)));
    rep.plateau = p.back();
    double lo = *std::min_element(p.begin(), p.end());
    double hi = *std::max_element(p.begin(), p.end());
    rep.spread = (hi - lo) / std::max(hi, 1e-300);
    rep.stable = rep.spread < 0.10;
    return rep;
}

}  // namespace amo
