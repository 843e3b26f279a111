#include "amo/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace amo {

bool GrlexLess::operator()(const Exp& a, const Exp& b) const {
    long da = 0, db = 0;
    for (int v : a) da += v;
    for (int v : b) db += v;
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

LaurentPoly LaurentPoly::constant(int arity, const Rational& c) {
    LaurentPoly p(arity);
    p.add_term(Exp(arity, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(int arity, const Exp& e, const Rational& c) {
    if ((int)e.size() != arity) throw std::invalid_argument("exponent arity mismatch");
    LaurentPoly p(arity);
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::variable(int arity, int i) {
    if (i < 0 || i >= arity) throw std::out_of_range("variable index");
    Exp e(arity, 0);
    e[i] = 1;
    return monomial(arity, e, 1);
}

Rational LaurentPoly::coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exp& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
}

Rational LaurentPoly::constant_value() const {
    if (!is_constant()) throw std::domain_error("not a constant polynomial");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

void LaurentPoly::add_term(const Exp& e, const Rational& c) {
    if ((int)e.size() != arity_) throw std::invalid_argument("exponent arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(arity_);
    for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("arity mismatch");
    LaurentPoly r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("arity mismatch");
    LaurentPoly r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("arity mismatch");
    LaurentPoly r(arity_);
    Exp e(arity_);
    for (auto& [ea, ca] : terms_)
        for (auto& [eb, cb] : o.terms_) {
            for (int k = 0; k < arity_; ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    return r;
}

LaurentPoly LaurentPoly::operator*(const Rational& c) const {
    LaurentPoly r(arity_);
    if (c == 0) return r;
    for (auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
    return r;
}

LaurentPoly operator*(const Rational& c, const LaurentPoly& p) { return p * c; }

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly acc = constant(arity_, 1);
    LaurentPoly base = *this;
    while (k) {
        if (k & 1) acc = acc * base;
        base = (k >>= 1) ? base * base : base;
    }
    return acc;
}

LaurentPoly LaurentPoly::derivative(int i) const {
    if (i < 0 || i >= arity_) throw std::out_of_range("variable index");
    LaurentPoly r(arity_);
    for (auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exp ne = e;
        ne[i] -= 1;
        r.add_term(ne, c * e[i]);
    }
    return r;
}

LaurentPoly LaurentPoly::euler_derivative(int i) const {
    if (i < 0 || i >= arity_) throw std::out_of_range("variable index");
    LaurentPoly r(arity_);
    for (auto& [e, c] : terms_)
        if (e[i] != 0) r.terms_.emplace(e, c * e[i]);
    return r;
}

int LaurentPoly::degree_in(int i) const {
    int d = 0;
    bool first = true;
    for (auto& [e, c] : terms_) {
        if (first || e[i] > d) d = e[i];
        first = false;
    }
    return d;
}

int LaurentPoly::low_degree_in(int i) const {
    int d = 0;
    bool first = true;
    for (auto& [e, c] : terms_) {
        if (first || e[i] < d) d = e[i];
        first = false;
    }
    return d;
}

int LaurentPoly::total_degree() const {
    int d = 0;
    bool first = true;
    for (auto& [e, c] : terms_) {
        int s = 0;
        for (int v : e) s += v;
        if (first || s > d) d = s;
        first = false;
    }
    return d;
}

bool LaurentPoly::depends_on(int i) const {
    for (auto& [e, c] : terms_)
        if (e[i] != 0) return true;
    return false;
}

const std::pair<const Exp, Rational>& LaurentPoly::leading() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return *terms_.rbegin();
}

LaurentPoly LaurentPoly::extend(int k) const {
    LaurentPoly r(arity_ + k);
    for (auto& [e, c] : terms_) {
        Exp ne = e;
        ne.resize(arity_ + k, 0);
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

LaurentPoly LaurentPoly::permuted(const std::vector<int>& perm) const {
    if ((int)perm.size() != arity_) throw std::invalid_argument("bad permutation");
    LaurentPoly r(arity_);
    Exp ne(arity_);
    for (auto& [e, c] : terms_) {
        for (int j = 0; j < arity_; ++j) ne[j] = e[perm[j]];
        r.add_term(ne, c);
    }
    return r;
}

// ---------------------------------------------------------------- parsing

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    const std::vector<std::string>& vars;

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    mpz_class parse_integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        size_t digits = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos == digits) throw ParseError("expected integer", start);
        return mpz_class(s.substr(start, pos - start));
    }

    int parse_exponent() {
        skip_ws();
        bool paren = false;
        if (peek() == '(') {
            paren = true;
            ++pos;
        }
        mpz_class v = parse_integer();
        if (paren) {
            if (peek() != ')') throw ParseError("expected ')'", pos);
            ++pos;
        }
        if (!v.fits_sint_p()) throw ParseError("exponent out of range", pos);
        return (int)v.get_si();
    }

    // factor := number | var [^ exponent]
    void parse_factor(Rational& coeff, Exp& e) {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (std::isdigit((unsigned char)s[pos]))) {
            mpz_class num = parse_integer();
            if (peek() == '/') {
                ++pos;
                mpz_class den = parse_integer();
                if (den == 0) throw ParseError("zero denominator", start);
                Rational q(num, den);
                q.canonicalize();
                coeff *= q;
            } else {
                coeff *= Rational(num);
            }
            return;
        }
        // variable name: longest match against the declared list
        int best = -1;
        size_t best_len = 0;
        for (size_t vi = 0; vi < vars.size(); ++vi) {
            const std::string& name = vars[vi];
            if (!name.empty() && s.compare(pos, name.size(), name) == 0 &&
                name.size() > best_len) {
                best = (int)vi;
                best_len = name.size();
            }
        }
        if (best < 0) {
            // better diagnostics: identifier-looking text means unknown variable
            size_t p = pos;
            while (p < s.size() && (std::isalnum((unsigned char)s[p]) || s[p] == '_')) ++p;
            if (p > pos)
                throw ParseError("unknown variable '" + s.substr(pos, p - pos) + "'", pos);
            throw ParseError("expected coefficient or variable", pos);
        }
        pos += best_len;
        int exp = 1;
        if (peek() == '^') {
            ++pos;
            exp = parse_exponent();
        }
        e[best] += exp;
    }

    // term := factor (* factor)*
    void parse_term(LaurentPoly& acc, int sign) {
        Rational coeff = sign;
        Exp e(vars.size(), 0);
        parse_factor(coeff, e);
        while (peek() == '*') {
            ++pos;
            parse_factor(coeff, e);
        }
        acc.add_term(e, coeff);
    }

    LaurentPoly parse() {
        LaurentPoly acc((int)vars.size());
        int sign = 1;
        if (peek() == '+') ++pos;
        else if (peek() == '-') {
            sign = -1;
            ++pos;
        }
        parse_term(acc, sign);
        while (!eof()) {
            char c = peek();
            if (c == '+') sign = 1;
            else if (c == '-') sign = -1;
            else throw ParseError("expected '+' or '-'", pos);
            ++pos;
            parse_term(acc, sign);
        }
        return acc;
    }
};

}  // namespace

LaurentPoly parse_poly(const std::string& text,
                       const std::vector<std::string>& variables) {
    Parser p{text, 0, variables};
    return p.parse();
}

std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << q.get_num();
    if (q.get_den() != 1) os << "/" << q.get_den();
    return os.str();
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    mpz_class num(slash == std::string::npos ? text : text.substr(0, slash));
    mpz_class den(slash == std::string::npos ? mpz_class(1)
                                             : mpz_class(text.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const LaurentPoly& p,
                      const std::vector<std::string>& variables) {
    if ((int)variables.size() != p.arity())
        throw std::invalid_argument("variable list arity mismatch");
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending grlex
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = abs(c);
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool any_var = std::any_of(e.begin(), e.end(), [](int v) { return v != 0; });
        bool coeff_shown = (a != 1) || !any_var;
        if (coeff_shown) os << to_string(a);
        bool need_star = coeff_shown;
        for (size_t i = 0; i < variables.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << variables[i];
            if (e[i] != 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

LaurentPoly substitute_rational(const LaurentPoly& p, int i, const Rational& value) {
    if (i < 0 || i >= p.arity()) throw std::out_of_range("variable index");
    LaurentPoly r(p.arity() - 1);
    for (auto& [e, c] : p.terms()) {
        int k = e[i];
        Rational factor;
        if (k >= 0) {
            Rational v = 1;
            for (int j = 0; j < k; ++j) v *= value;
            factor = v;
        } else {
            if (value == 0)
                throw std::domain_error("zero substituted into negative exponent");
            Rational v = 1;
            Rational inv = Rational(value.get_den(), value.get_num());
            inv.canonicalize();
            for (int j = 0; j < -k; ++j) v *= inv;
            factor = v;
        }
        Exp ne;
        ne.reserve(e.size() - 1);
        for (size_t j = 0; j < e.size(); ++j)
            if ((int)j != i) ne.push_back(e[j]);
        r.add_term(ne, c * factor);
    }
    return r;
}

LaurentPoly substitute_poly(const LaurentPoly& p, int i, const LaurentPoly& value) {
    if (i < 0 || i >= p.arity()) throw std::out_of_range("variable index");
    if (value.arity() != p.arity()) throw std::invalid_argument("arity mismatch");
    if (p.low_degree_in(i) < 0)
        throw std::domain_error("polynomial substituted into negative exponent");
    int d = p.degree_in(i);
    // Horner in z_i: collect coefficient slices.
    std::vector<LaurentPoly> slices((size_t)d + 1, LaurentPoly(p.arity()));
    for (auto& [e, c] : p.terms()) {
        Exp ne = e;
        ne[i] = 0;
        slices[(size_t)e[i]].add_term(ne, c);
    }
    LaurentPoly acc = slices[(size_t)d];
    for (int k = d - 1; k >= 0; --k) acc = acc * value + slices[(size_t)k];
    return acc;
}

ComplexApprox eval_complex(const LaurentPoly& p, const std::vector<Complex>& point) {
    if ((int)point.size() != p.arity()) throw std::invalid_argument("point arity mismatch");
    // Termwise with power cache; first-order rounding estimate accumulates
    // machine epsilon per operation on magnitudes.
    Complex sum = 0.0;
    double magsum = 0.0;
    for (auto& [e, c] : p.terms()) {
        Complex t(c.get_d(), 0.0);
        for (size_t i = 0; i < point.size(); ++i) {
            int k = e[i];
            if (k == 0) continue;
            if (point[i] == Complex(0.0, 0.0) && k < 0)
                throw std::domain_error("zero coordinate with negative exponent");
            Complex base = point[i];
            if (k < 0) {
                base = 1.0 / base;
                k = -k;
            }
            for (int j = 0; j < k; ++j) t *= base;
        }
        sum += t;
        magsum += std::abs(t);
    }
    ComplexApprox out;
    out.value = sum;
    out.residual_bound =
        magsum * std::numeric_limits<double>::epsilon() * (4.0 + p.arity() * 8.0);
    return out;
}

Rational eval_rational(const LaurentPoly& p, const std::vector<Rational>& point) {
    if ((int)point.size() != p.arity()) throw std::invalid_argument("point arity mismatch");
    Rational sum = 0;
    for (auto& [e, c] : p.terms()) {
        Rational t = c;
        for (size_t i = 0; i < point.size(); ++i) {
            int k = e[i];
            if (k == 0) continue;
            Rational base = point[i];
            if (k < 0) {
                if (base == 0)
                    throw std::domain_error("zero coordinate with negative exponent");
                base = Rational(base.get_den(), base.get_num());
                base.canonicalize();
                k = -k;
            }
            for (int j = 0; j < k; ++j) t *= base;
        }
        sum += t;
    }
    return sum;
}

LaurentPoly strip_monomial_units(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    int n = p.arity();
    Exp mins(n, 0);
    bool first = true;
    for (auto& [e, c] : p.terms()) {
        for (int i = 0; i < n; ++i)
            if (first || e[i] < mins[i]) mins[i] = e[i];
        first = false;
    }
    LaurentPoly r(n);
    Exp ne(n);
    for (auto& [e, c] : p.terms()) {
        for (int i = 0; i < n; ++i) ne[i] = e[i] - mins[i];
        r.add_term(ne, c);
    }
    return r;
}

Rational rational_content(const LaurentPoly& p) {
    if (p.is_zero()) return 0;
    mpz_class num_gcd = 0, den_lcm = 1;
    for (auto& [e, c] : p.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational r(num_gcd, den_lcm);
    r.canonicalize();
    return r;
}

LaurentPoly normalize_unit(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    Rational c = rational_content(p);
    if (p.leading().second < 0) c = -c;
    Rational inv(c.get_den(), c.get_num());
    inv.canonicalize();
    return p * inv;
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return a;
    LaurentPoly r = a;
    LaurentPoly q(a.arity());
    const auto& [lb, cb] = b.leading();
    // any true quotient monomial lies in the per-variable exponent window
    // [low(a)-low(b), deg(a)-deg(b)]: bottom and top slices of a product
    // cannot cancel
    std::vector<int> qlo(a.arity()), qhi(a.arity());
    for (int i = 0; i < a.arity(); ++i) {
        qlo[i] = a.low_degree_in(i) - b.low_degree_in(i);
        qhi[i] = a.degree_in(i) - b.degree_in(i);
    }
    size_t guard = 200000;
    while (!r.is_zero()) {
        if (guard-- == 0) throw std::domain_error("inexact polynomial division");
        const auto& [lr, cr] = r.leading();
        // leading terms strictly decrease in grlex; the window keeps them in
        // a finite box, so inexact input always exits through the check below
        Exp qe(a.arity());
        for (int i = 0; i < a.arity(); ++i) {
            qe[i] = lr[i] - lb[i];
            if (qe[i] < qlo[i] || qe[i] > qhi[i])
                throw std::domain_error("inexact polynomial division");
        }
        Rational qc = cr / cb;
        LaurentPoly m = LaurentPoly::monomial(a.arity(), qe, qc);
        q = q + m;
        r = r - m * b;
    }
    return q;
}

bool divides(const LaurentPoly& b, const LaurentPoly& a) {
    if (a.is_zero()) return true;
    if (b.is_zero()) return false;
    try {
        (void)divide_exact(a, b);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

double log_abs(const Rational& q) {
    if (q == 0) return -std::numeric_limits<double>::infinity();
    signed long en, ed;
    double mn = mpz_get_d_2exp(&en, q.get_num().get_mpz_t());
    double md = mpz_get_d_2exp(&ed, q.get_den().get_mpz_t());
    return std::log(std::fabs(mn)) - std::log(std::fabs(md)) +
           (double)(en - ed) * std::log(2.0);
}

}  // namespace amo
