#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace amo {

using Rational = mpq_class;
using Complex = std::complex<double>;

/// Exponent vector of a Laurent monomial, one signed entry per variable.
using Exp = std::vector<int>;

/// Graded lexicographic order on exponent vectors (total degree first,
/// then lex). Translation-invariant, which is what exact division needs.
struct GrlexLess {
    bool operator()(const Exp& a, const Exp& b) const;
};

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg), position(pos) {}
};

/// Numeric value with a quality certificate: residual_bound is |p| at the
/// approximate root plus a first-order rounding estimate.
struct ComplexApprox {
    Complex value{0.0, 0.0};
    double residual_bound = 0.0;
};

/// Multivariate Laurent polynomial over Q. Immutable in spirit: all
/// operations return new values. No stored coefficient is zero.
class LaurentPoly {
  public:
    using TermMap = std::map<Exp, Rational, GrlexLess>;

    explicit LaurentPoly(int arity) : arity_(arity) {
        if (arity < 0) throw std::invalid_argument("negative arity");
    }

    static LaurentPoly constant(int arity, const Rational& c);
    static LaurentPoly monomial(int arity, const Exp& e, const Rational& c);
    static LaurentPoly variable(int arity, int i);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Rational coeff(const Exp& e) const;
    bool is_constant() const;
    /// The unique coefficient of a constant polynomial (0 for the zero poly).
    Rational constant_value() const;

    /// Accumulates c*z^e, erasing the term if the sum cancels.
    void add_term(const Exp& e, const Rational& c);

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const Rational& c) const;
    bool operator==(const LaurentPoly& o) const {
        return arity_ == o.arity_ && terms_ == o.terms_;
    }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly pow(unsigned k) const;

    LaurentPoly derivative(int i) const;
    /// z_i * d/dz_i; maps c*z^a to (c*a_i)*z^a.
    LaurentPoly euler_derivative(int i) const;

    int degree_in(int i) const;      // max exponent of z_i, 0 for the zero poly
    int low_degree_in(int i) const;  // min exponent of z_i
    int total_degree() const;        // max sum of exponents
    bool depends_on(int i) const;

    /// Leading term in grlex order. Polynomial must be nonzero.
    const std::pair<const Exp, Rational>& leading() const;

    /// Appends k fresh variables (exponent 0 everywhere).
    LaurentPoly extend(int k) const;
    /// Reorders variables: result variable j is old variable perm[j].
    LaurentPoly permuted(const std::vector<int>& perm) const;

  private:
    int arity_;
    TermMap terms_;
};

LaurentPoly operator*(const Rational& c, const LaurentPoly& p);

/// Parses `text` over the given ordered variable names.
/// Grammar: sum of terms, a term is '*'-separated factors, a factor is an
/// integer, `p/q`, or `name^int` (exponent may be negative, parentheses
/// around it allowed). Throws ParseError with position.
LaurentPoly parse_poly(const std::string& text,
                       const std::vector<std::string>& variables);

/// Canonical print: terms in descending grlex order, `c*z1^e1*...`,
/// `^1` omitted. parse(print(p)) == p.
std::string to_string(const LaurentPoly& p,
                      const std::vector<std::string>& variables);

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

/// Exact substitution z_i := value; the variable is removed (arity drops).
/// Throws if value==0 while p has negative exponents in z_i.
LaurentPoly substitute_rational(const LaurentPoly& p, int i,
                                const Rational& value);

/// Exact substitution z_i := value(z). Requires all exponents of z_i
/// nonnegative. The ambient variable list is kept.
LaurentPoly substitute_poly(const LaurentPoly& p, int i,
                            const LaurentPoly& value);

/// Horner-style evaluation; the residual bound tracks accumulated rounding
/// at first order. Throws on a zero coordinate with a negative exponent.
ComplexApprox eval_complex(const LaurentPoly& p,
                           const std::vector<Complex>& point);

Rational eval_rational(const LaurentPoly& p, const std::vector<Rational>& point);

/// Divides all exponents' minima out: multiplies by the monomial unit that
/// makes every variable's minimal exponent zero.
LaurentPoly strip_monomial_units(const LaurentPoly& p);

/// Rational content (gcd of numerators / lcm of denominators), positive.
Rational rational_content(const LaurentPoly& p);

/// p scaled so the integer content is 1 and the grlex-leading coefficient
/// is positive. normalize(0) = 0.
LaurentPoly normalize_unit(const LaurentPoly& p);

/// Exact division; throws std::domain_error if b does not divide a.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

bool divides(const LaurentPoly& b, const LaurentPoly& a);

double log_abs(const Rational& q);  // log|q|, safe for huge values; -inf for 0

}  // namespace amo
