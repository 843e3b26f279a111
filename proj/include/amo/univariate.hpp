#pragma once

#include <optional>
#include <vector>

#include "amo/laurent.hpp"

namespace amo {

/// Dense univariate polynomial over Q, coefficients ascending by degree.
/// Invariant: no trailing zero coefficient (zero poly has empty vector).
struct QPoly {
    std::vector<Rational> c;

    bool is_zero() const { return c.empty(); }
    int degree() const { return (int)c.size() - 1; }  // -1 for zero
    const Rational& lc() const { return c.back(); }
    void trim();
    Rational eval(const Rational& x) const;
    Complex eval(const Complex& x) const;
    QPoly derivative() const;
};

QPoly qpoly_from(const std::vector<Rational>& coeffs);
QPoly operator+(const QPoly& a, const QPoly& b);
QPoly operator-(const QPoly& a, const QPoly& b);
QPoly operator*(const QPoly& a, const QPoly& b);
QPoly operator*(const QPoly& a, const Rational& s);
bool operator==(const QPoly& a, const QPoly& b);

/// Quotient and remainder over Q.
std::pair<QPoly, QPoly> qpoly_divmod(const QPoly& a, const QPoly& b);

/// Primitive part with positive leading coefficient.
QPoly qpoly_primitive(const QPoly& a);

/// GCD, normalized primitive with positive leading coefficient.
QPoly qpoly_gcd(QPoly a, QPoly b);

/// Yun squarefree decomposition: list of (factor, multiplicity),
/// multiplicities increasing; product of factor^mult = a up to a unit.
std::vector<std::pair<QPoly, int>> qpoly_squarefree(const QPoly& a);

/// Number of distinct real roots via a Sturm sequence (whole real line).
int sturm_real_root_count(const QPoly& a);

/// Extracts a dense univariate view of p in its single effective variable
/// (negative exponents cleared by a monomial unit first). Throws if more
/// than one variable is effective. Returns the variable index (or -1 when
/// p is constant).
std::pair<QPoly, int> as_univariate(const LaurentPoly& p);

/// Aberth-Ehrlich simultaneous iteration on complex coefficients.
/// Initialization: scaled roots of unity at the Cauchy bound; convergence at
/// step < 1e-14 * bound; at most 500 sweeps, then throws.
std::vector<Complex> aberth_roots(const std::vector<Complex>& coeffs);

struct RootSet {
    std::vector<std::pair<Rational, int>> rational_roots;
    std::vector<std::pair<ComplexApprox, int>> numeric_roots;  // non-rational
    int degree = 0;
};

/// All roots of a univariate polynomial: rational ones exactly (verified by
/// exact evaluation), the rest numerically on the squarefree deflation;
/// multiplicities from the exact squarefree structure.
RootSet univariate_roots(const QPoly& p);
RootSet univariate_roots(const LaurentPoly& p);

/// All rational roots (verified exactly), without multiplicities.
std::vector<Rational> rational_roots(const QPoly& p);

/// Best rational approximation with denominator <= max_den (continued
/// fractions); nullopt if none within tol.
std::optional<Rational> reconstruct_rational(double x, unsigned long max_den,
                                             double tol);

}  // namespace amo
