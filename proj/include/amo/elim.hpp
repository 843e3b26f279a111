#pragma once

#include <vector>

#include "amo/laurent.hpp"
#include "amo/univariate.hpp"

namespace amo {

/// View of a Laurent polynomial as univariate in one variable, negative
/// exponents cleared by a monomial unit. coeffs[k] is the coefficient of
/// z_var^k; reassembling reproduces the unit-cleared base.
struct UnivariateView {
    int var = -1;
    std::vector<LaurentPoly> coeffs;

    int degree() const { return (int)coeffs.size() - 1; }
    const LaurentPoly& lc() const { return coeffs.back(); }
    LaurentPoly assemble() const;
};

UnivariateView make_univariate_view(const LaurentPoly& p, int var);

/// Sylvester resultant of p and q with respect to z_var. Monomial units of
/// both inputs are stripped first (torus convention). Exact, including sign:
/// large instances go through a subresultant PRS certified against the
/// Sylvester determinant by evaluation; mismatches fall back to Bareiss.
LaurentPoly resultant(const LaurentPoly& p, const LaurentPoly& q, int var);

/// disc_var(p) := resultant(p, dp/dz_var, var). Raw convention, no
/// leading-coefficient division.
LaurentPoly discriminant(const LaurentPoly& p, int var);

/// Primitive multivariate GCD (recursive subresultant PRS), normalized to
/// integer content 1 and positive leading coefficient. gcd(p, 0) = |p|.
LaurentPoly mv_gcd(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mv_gcd_list(const std::vector<LaurentPoly>& ps);

/// Content of p with respect to z_var: gcd of the coefficient polynomials.
LaurentPoly content_wrt(const LaurentPoly& p, int var);

struct SquarefreeFactor {
    LaurentPoly factor;  // normalized, nonconstant
    int multiplicity;
};

/// Yun decomposition with respect to z_var, extended to full multivariate
/// squarefreeness by recursing into the content. Product of
/// factor^multiplicity equals p up to a rational unit.
std::vector<SquarefreeFactor> squarefree_decomposition(const LaurentPoly& p,
                                                       int var);

/// Groups squarefree factors: product of all factors sharing a multiplicity.
std::vector<SquarefreeFactor> group_by_multiplicity(
    std::vector<SquarefreeFactor> factors);

/// Exact determinant of a square polynomial matrix (fraction-free Bareiss
/// with row pivoting).
LaurentPoly poly_det_bareiss(std::vector<std::vector<LaurentPoly>> m);

}  // namespace amo
