#include "amo/univariate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace amo {

void QPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Rational QPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Complex QPoly::eval(const Complex& x) const {
    Complex acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * x + Complex(it->get_d(), 0.0);
    return acc;
}

QPoly QPoly::derivative() const {
    QPoly d;
    for (size_t k = 1; k < c.size(); ++k) d.c.push_back(c[k] * (long)k);
    d.trim();
    return d;
}

QPoly qpoly_from(const std::vector<Rational>& coeffs) {
    QPoly p{coeffs};
    p.trim();
    return p;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    QPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
}

QPoly operator-(const QPoly& a, const QPoly& b) {
    QPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    QPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
}

QPoly operator*(const QPoly& a, const Rational& s) {
    if (s == 0) return {};
    QPoly r = a;
    for (auto& x : r.c) x *= s;
    return r;
}

bool operator==(const QPoly& a, const QPoly& b) { return a.c == b.c; }

std::pair<QPoly, QPoly> qpoly_divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    QPoly r = a, q;
    if (a.degree() >= b.degree()) q.c.assign(a.degree() - b.degree() + 1, Rational(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Rational f = r.lc() / b.lc();
        int shift = r.degree() - b.degree();
        q.c[(size_t)shift] = f;
        for (int i = 0; i <= b.degree(); ++i)
            r.c[(size_t)(i + shift)] -= f * b.c[(size_t)i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

QPoly qpoly_primitive(const QPoly& a) {
    if (a.is_zero()) return a;
    mpz_class g = 0, l = 1;
    for (auto& x : a.c) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    }
    Rational scale(l, g);
    scale.canonicalize();
    if (a.lc() < 0) scale = -scale;
    return a * scale;
}

QPoly qpoly_gcd(QPoly a, QPoly b) {
    a = qpoly_primitive(a);
    b = qpoly_primitive(b);
    while (!b.is_zero()) {
        QPoly r = qpoly_divmod(a, b).second;
        a = std::move(b);
        b = qpoly_primitive(r);  // keeps coefficient growth in check
    }
    return qpoly_primitive(a);
}

std::vector<std::pair<QPoly, int>> qpoly_squarefree(const QPoly& a) {
    std::vector<std::pair<QPoly, int>> out;
    if (a.is_zero()) throw std::domain_error("squarefree of zero polynomial");
    QPoly p = qpoly_primitive(a);
    if (p.degree() == 0) return out;
    // Yun
    QPoly dp = p.derivative();
    QPoly g = qpoly_gcd(p, dp);
    QPoly w = qpoly_divmod(p, g).first;
    QPoly y = qpoly_divmod(dp, g).first;
    int mult = 1;
    while (w.degree() > 0) {
        QPoly z = y - w.derivative();
        QPoly f = qpoly_gcd(w, z);
        if (f.degree() > 0) out.emplace_back(f, mult);
        w = qpoly_divmod(w, f).first;
        y = qpoly_divmod(z, f).first;
        ++mult;
    }
    return out;
}

int sturm_real_root_count(const QPoly& a) {
    if (a.is_zero()) throw std::domain_error("Sturm of zero polynomial");
    QPoly p = qpoly_primitive(a);
    // deflate to squarefree
    QPoly g = qpoly_gcd(p, p.derivative());
    if (g.degree() > 0) p = qpoly_divmod(p, g).first;
    if (p.degree() == 0) return 0;
    std::vector<QPoly> seq{p, p.derivative()};
    while (!seq.back().is_zero()) {
        QPoly r = qpoly_divmod(seq[seq.size() - 2], seq.back()).second;
        if (r.is_zero()) break;
        for (auto& x : r.c) x = -x;
        // scale by a positive constant only; Sturm needs the sign kept
        QPoly pp = qpoly_primitive(r);
        if (sgn(r.lc()) != sgn(pp.lc())) pp = pp * Rational(-1);
        seq.push_back(pp);
    }
    auto signs_at_inf = [&](int dir) {  // dir=+1 for +inf, -1 for -inf
        int changes = 0, prev = 0;
        for (auto& s : seq) {
            if (s.is_zero()) continue;
            int sg = sgn(s.lc());
            if (dir < 0 && s.degree() % 2 == 1) sg = -sg;
            if (prev != 0 && sg != prev) ++changes;
            prev = sg;
        }
        return changes;
    };
    return signs_at_inf(-1) - signs_at_inf(+1);
}

std::pair<QPoly, int> as_univariate(const LaurentPoly& p0) {
    LaurentPoly p = strip_monomial_units(p0);
    int var = -1;
    for (int i = 0; i < p.arity(); ++i) {
        if (!p.depends_on(i)) continue;
        if (var >= 0) throw std::domain_error("polynomial is not univariate");
        var = i;
    }
    QPoly q;
    if (p.is_zero()) return {q, var};
    if (var < 0) {
        q.c.push_back(p.constant_value());
        q.trim();
        return {q, var};
    }
    q.c.assign((size_t)p.degree_in(var) + 1, Rational(0));
    for (auto& [e, c] : p.terms()) q.c[(size_t)e[var]] = c;
    q.trim();
    return {q, var};
}

std::vector<Complex> aberth_roots(const std::vector<Complex>& coeffs0) {
    // strip leading (highest-degree) zeros
    std::vector<Complex> coeffs = coeffs0;
    while (!coeffs.empty() && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
    if (coeffs.size() <= 1) return {};
    int n = (int)coeffs.size() - 1;
    // strip roots at zero
    int zero_roots = 0;
    while (zero_roots < n && std::abs(coeffs[(size_t)zero_roots]) == 0.0) ++zero_roots;
    std::vector<Complex> c(coeffs.begin() + zero_roots, coeffs.end());
    int m = (int)c.size() - 1;
    std::vector<Complex> roots((size_t)zero_roots, Complex(0.0, 0.0));
    if (m == 0) return roots;

    double bound = 0.0;  // Cauchy bound
    for (int i = 0; i < m; ++i)
        bound = std::max(bound, std::abs(c[(size_t)i] / c[(size_t)m]));
    bound = 1.0 + bound;
    // start at the geometric mean of the root moduli; the Cauchy circle
    // overflows the evaluation when the leading coefficient is tiny
    double radius = std::pow(std::abs(c[0] / c[(size_t)m]), 1.0 / m);
    if (!std::isfinite(radius) || radius <= 0.0) radius = 1.0;
    radius = std::min(radius, bound);

    std::vector<Complex> z((size_t)m);
    for (int i = 0; i < m; ++i) {
        double theta = 2.0 * M_PI * i / m + 0.4;  // offset breaks symmetry
        z[(size_t)i] = radius * Complex(std::cos(theta), std::sin(theta));
    }
    auto eval = [&](Complex x, Complex& d) {
        Complex p = 0.0;
        d = 0.0;
        for (int k = m; k >= 0; --k) {
            d = d * x + p;
            p = p * x + c[(size_t)k];
        }
        return p;
    };
    // convergence is judged relative to each root's own magnitude; scaling
    // with the Cauchy bound stops far too early when the bound is large
    auto tol_at = [](const Complex& x) { return 1e-14 * (1.0 + std::abs(x)); };
    bool converged = false;
    int near_converged = 0;  // sweeps where every correction is small-ish
    for (int iter = 0; iter < 500 && !converged; ++iter) {
        converged = true;
        bool loose = true;
        for (int i = 0; i < m; ++i) {
            Complex d;
            Complex p = eval(z[(size_t)i], d);
            if (std::abs(p) == 0.0) continue;
            Complex ratio = (std::abs(d) > 0) ? p / d : Complex(1e-3, 0);
            Complex s = 0.0;
            for (int j = 0; j < m; ++j)
                if (j != i) s += 1.0 / (z[(size_t)i] - z[(size_t)j]);
            Complex corr = ratio / (1.0 - ratio * s);
            if (!std::isfinite(corr.real()) || !std::isfinite(corr.imag())) {
                // overflow escape: restart this root on a shrunk circle
                double theta = 2.0 * M_PI * i / m + 0.9 + 0.1 * iter;
                z[(size_t)i] = radius * std::pow(0.5, 1 + iter % 8) *
                               Complex(std::cos(theta), std::sin(theta));
                converged = false;
                loose = false;
                continue;
            }
            z[(size_t)i] -= corr;
            if (!(std::abs(corr) <= tol_at(z[(size_t)i]))) converged = false;
            if (!(std::abs(corr) <= 1e8 * tol_at(z[(size_t)i]))) loose = false;
        }
        // clustered roots can oscillate at limit precision; accept a long
        // streak of near-converged sweeps and leave the rest to the polish
        if (loose && !converged && ++near_converged >= 30) converged = true;
        if (!loose) near_converged = 0;
    }
    for (auto& r : z)
        if (!std::isfinite(r.real()) || !std::isfinite(r.imag()))
            converged = false;
    if (!converged) throw std::runtime_error("Aberth iteration did not converge");
    // Newton polish in long double
    std::vector<std::complex<long double>> cl(c.size());
    for (size_t k = 0; k < c.size(); ++k)
        cl[k] = {(long double)c[k].real(), (long double)c[k].imag()};
    for (auto& r : z) {
        std::complex<long double> x{(long double)r.real(), (long double)r.imag()};
        for (int it = 0; it < 4; ++it) {
            std::complex<long double> p = 0, d = 0;
            for (int k = m; k >= 0; --k) {
                d = d * x + p;
                p = p * x + cl[(size_t)k];
            }
            if (std::abs(d) == 0.0L) break;
            x -= p / d;
        }
        r = Complex((double)x.real(), (double)x.imag());
    }
    roots.insert(roots.end(), z.begin(), z.end());
    return roots;
}

std::optional<Rational> reconstruct_rational(double x, unsigned long max_den,
                                             double tol) {
    if (!std::isfinite(x)) return std::nullopt;
    // continued fraction expansion
    double v = x;
    long long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    for (int i = 0; i < 64; ++i) {
        double fl = std::floor(v);
        if (fl > 9e17 || fl < -9e17) break;
        long long a = (long long)fl;
        long long h2 = a * h1 + h0, k2 = a * k1 + k0;
        if (k2 < 0 || (unsigned long long)std::llabs(k2) > max_den) break;
        h0 = h1; h1 = h2; k0 = k1; k1 = k2;
        if (std::fabs((double)h1 / (double)k1 - x) < tol) {
            Rational r((long)h1, (long)k1);
            r.canonicalize();
            return r;
        }
        double frac = v - fl;
        if (frac < 1e-15) break;
        v = 1.0 / frac;
    }
    return std::nullopt;
}

namespace {

// Divisors of |n| via trial division; nullopt when n is too hard to factor
// or the divisor list explodes.
std::optional<std::vector<mpz_class>> small_divisors(const mpz_class& n0,
                                                     size_t cap = 4096) {
    mpz_class n = abs(n0);
    if (n == 0) return std::nullopt;
    std::vector<std::pair<mpz_class, int>> fac;
    mpz_class d = 2;
    while (d * d <= n && d < 1000000) {
        if (n % d == 0) {
            int m = 0;
            while (n % d == 0) {
                n /= d;
                ++m;
            }
            fac.emplace_back(d, m);
        }
        d += (d == 2) ? 1 : 2;
    }
    if (n > 1) {
        if (n > mpz_class("1000000000000")) return std::nullopt;  // unfactored big cofactor
        fac.emplace_back(n, 1);
    }
    std::vector<mpz_class> divs{1};
    for (auto& [p, m] : fac) {
        size_t base = divs.size();
        mpz_class pk = 1;
        std::vector<mpz_class> next = divs;
        for (int k = 1; k <= m; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) next.push_back(divs[i] * pk);
        }
        divs = std::move(next);
        if (divs.size() > cap) return std::nullopt;
    }
    return divs;
}

}  // namespace

std::vector<Rational> rational_roots(const QPoly& p0) {
    std::vector<Rational> out;
    if (p0.is_zero()) throw std::domain_error("roots of zero polynomial");
    QPoly p = qpoly_primitive(p0);
    if (p.degree() == 0) return out;
    // strip roots at 0
    size_t low = 0;
    while (low < p.c.size() && p.c[low] == 0) ++low;
    if (low > 0) {
        out.push_back(0);
        p.c.erase(p.c.begin(), p.c.begin() + (long)low);
    }
    if (p.degree() == 0) return out;

    std::set<Rational> found;
    auto divs_lead = small_divisors(p.lc().get_num());
    auto divs_trail = small_divisors(p.c.front().get_num());
    if (divs_lead && divs_trail &&
        divs_lead->size() * divs_trail->size() <= 200000) {
        for (auto& t : *divs_trail)
            for (auto& l : *divs_lead)
                for (int s : {1, -1}) {
                    Rational cand(s * t, l);
                    cand.canonicalize();
                    if (found.count(cand)) continue;
                    if (p.eval(cand) == 0) found.insert(cand);
                }
    } else {
        // numeric route: roots of the squarefree deflation, reconstructed and
        // verified exactly
        QPoly g = qpoly_gcd(p, p.derivative());
        QPoly sf = g.degree() > 0 ? qpoly_divmod(p, g).first : p;
        double scale = 0.0;
        for (auto& x : sf.c) scale = std::max(scale, std::fabs(x.get_d()));
        std::vector<Complex> cc;
        for (auto& x : sf.c) cc.push_back(Complex(x.get_d() / scale, 0.0));
        for (auto& r : aberth_roots(cc)) {
            if (std::fabs(r.imag()) > 1e-8) continue;
            auto cand = reconstruct_rational(r.real(), 100000000UL, 1e-7);
            if (!cand || found.count(*cand)) continue;
            if (p.eval(*cand) == 0) found.insert(*cand);
        }
    }
    out.insert(out.end(), found.begin(), found.end());
    std::sort(out.begin(), out.end());
    return out;
}

RootSet univariate_roots(const QPoly& p) {
    if (p.is_zero()) throw std::domain_error("roots of zero polynomial");
    RootSet rs;
    rs.degree = p.degree();
    for (auto& [factor, mult] : qpoly_squarefree(p)) {
        QPoly f = factor;
        auto rats = rational_roots(f);
        for (auto& r : rats) {
            rs.rational_roots.emplace_back(r, mult);
            // deflate exactly
            QPoly lin = qpoly_from({-r, Rational(1)});
            f = qpoly_divmod(f, lin).first;
        }
        if (f.degree() > 0) {
            double scale = 0.0;
            for (auto& x : f.c) scale = std::max(scale, std::fabs(x.get_d()));
            std::vector<Complex> cc;
            for (auto& x : f.c) cc.push_back(Complex(x.get_d() / scale, 0.0));
            for (auto& z : aberth_roots(cc)) {
                ComplexApprox ap;
                ap.value = z;
                ap.residual_bound = std::abs(f.eval(z));
                rs.numeric_roots.emplace_back(ap, mult);
            }
        }
    }
    std::sort(rs.rational_roots.begin(), rs.rational_roots.end(),
              [](auto& a, auto& b) { return a.first < b.first; });
    return rs;
}

RootSet univariate_roots(const LaurentPoly& p) {
    auto [q, var] = as_univariate(p);
    (void)var;
    return univariate_roots(q);
}

}  // namespace amo
