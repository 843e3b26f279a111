#pragma once

#include <string>
#include <vector>

#include "amo/gauss.hpp"
#include "amo/laurent.hpp"

namespace amo {

/// Local data of a plane-curve germ at a rational point.
struct GermReport {
    std::vector<Rational> point;
    int milnor_number = 0;
    int local_multiplicity = 0;  // lowest total degree after translation
    std::string label;
};

/// Milnor number of {d = 0} at the rational point p (d in two variables).
/// Method: translate p to the origin, pick coordinates in which the origin
/// is separated from every other common zero of the two partials, and read
/// the multiplicity of the root 0 in the resultant of the partials. The
/// result is cross-checked against the jet-space dimension count; any
/// disagreement throws. Throws if p is not a singular point of the curve,
/// if the singularity is not isolated, or if no separating coordinates are
/// found after 10 random unimodular changes.
GermReport milnor_number(const LaurentPoly& d, const std::vector<Rational>& p);

/// Independent count of the same number: dimension of the truncated local
/// algebra Q[[y]]/(partials + m^N), stabilized over two consecutive
/// truncation orders starting at N = 16. Exact rational linear algebra.
int jet_milnor(const LaurentPoly& d, const std::vector<Rational>& p);

/// Exact Hessian of the phase function <y, log z> restricted to the
/// hypersurface f = 0, at a rational fiber point z0, in the local
/// coordinates that omit the chart variable (one with f_zc(z0) != 0,
/// preferring the last). Size (n-1) x (n-1).
struct PhaseHessian {
    std::vector<std::vector<Rational>> h;
    int chart = -1;  // index of the eliminated coordinate
    int rank = 0;
    int corank = 0;
};

PhaseHessian phase_hessian(const LaurentPoly& f, const ProjectiveDirection& y,
                           const std::vector<Rational>& z0);

/// Numeric counterpart for non-rational fiber points; corank counts
/// singular values below tol * (matrix scale).
struct PhaseHessianNumeric {
    std::vector<std::vector<Complex>> h;
    int chart = -1;
    int rank = 0;
    int corank = 0;
};

PhaseHessianNumeric phase_hessian_numeric(const LaurentPoly& f,
                                          const ProjectiveDirection& y,
                                          const std::vector<Complex>& z0,
                                          double tol = 1e-8);

/// Verifies, by exact computation of both sides, that the phase Hessian
/// equals diag(-y_c / z_i) times the Jacobian of the affine logarithmic
/// normal map in the same local coordinates.
bool jacobian_hessian_identity_check(const LaurentPoly& f,
                                     const ProjectiveDirection& y,
                                     const std::vector<Rational>& z0);

/// ADE label from the Milnor number and Hessian corank: corank 0 -> A1,
/// corank 1 -> A_mu, corank 2 with mu = 4 -> D4, otherwise
/// "unclassified(mu, corank)". All A/D labels are quasihomogeneous.
struct PhaseLabel {
    std::string label;
    bool classified = false;
    bool quasihomogeneous = false;
};

PhaseLabel classify_phase_point(int mu, int corank, int n);

/// Full report for one critical point of the phase function.
struct PhaseCritReport {
    FiberPoint point;
    ProjectiveDirection y;
    int mu = 1;      // = fiber multiplicity
    int corank = 0;
    PhaseLabel label;
    bool exact = false;  // Hessian computed in exact arithmetic
};

PhaseCritReport classify_fiber_point(const LaurentPoly& f,
                                     const ProjectiveDirection& y,
                                     const FiberPoint& p);

/// Multiplicity inequality at a direction y: the vanishing order m of the
/// ramification polynomial d0 at y bounds the sum of (fiber multiplicity
/// minus 1) from below; slack = m - sum >= 0, equality in all computed
/// examples.
struct MultiplicityBudget {
    int m = 0;
    std::vector<int> fiber_multiplicities;
    int slack = 0;
    bool equality = false;
};

MultiplicityBudget check_multiplicity_budget(const LaurentPoly& f,
                                             const LaurentPoly& d0,
                                             const ProjectiveDirection& y);

/// Vanishing order of p at the rational point q: lowest total degree of the
/// translate p(y + q).
int vanishing_order(const LaurentPoly& p, const std::vector<Rational>& q);

/// Same for a homogeneous p at a projective point: dehomogenizes in the
/// chart of the last nonzero coordinate of q first.
int vanishing_order_projective(const LaurentPoly& p,
                               const std::vector<Rational>& q);

}  // namespace amo
