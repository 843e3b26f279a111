#pragma once

#include <optional>
#include <string>
#include <vector>

#include "amo/laurent.hpp"
#include "amo/newton.hpp"

namespace amo {

/// Point of the real projective space of logarithmic normal directions,
/// normalized to integer entries with content 1 and positive last nonzero
/// coordinate.
struct ProjectiveDirection {
    std::vector<Rational> coords;

    static ProjectiveDirection of(std::vector<Rational> c);
    /// Index of the last nonzero coordinate (the chart used downstream).
    int chart() const;
};

/// Critical-point equations of the logarithmic normal direction y on the
/// hypersurface f = 0: h_i = y_c z_i df/dz_i - y_i z_c df/dz_c, where c is
/// the chart coordinate. With symbolic y the ring is extended by n fresh
/// y-variables after the existing ones.
struct FiberSystem {
    LaurentPoly f{0};
    std::vector<LaurentPoly> equations;
    int chart = -1;       // torus index of the chart coordinate
    int n_torus = 0;      // first n variables are torus coordinates
    bool symbolic = false;
};

/// Symbolic form: result ring is [z_1..z_n, params..., y_1..y_n]. For n = 2
/// the y stay fully homogeneous; for n = 3 the chart y_n = 1 is substituted
/// (the variable is kept in the ring with empty support).
FiberSystem fiber_system(const LaurentPoly& f, int n_torus = -1);
FiberSystem fiber_system(const LaurentPoly& f, const ProjectiveDirection& y);

/// Eliminates all torus variables except z_i from the symbolic fiber system
/// via iterated resultants; content in y removed, monomial units stripped,
/// integer-normalized. Lives in the symbolic ring of fiber_system. Appends a
/// note to `warning` when deg_{z_i} falls below n!.Vol (bad projection) or
/// exceeds it (extraneous factor carried along).
LaurentPoly projection_polynomial(const LaurentPoly& f, int i,
                                  int n_torus = -1,
                                  std::string* warning = nullptr);

/// One coordinate of a fiber point: exact rational or certified numeric.
struct FiberCoord {
    bool exact = false;
    Rational rat;
    ComplexApprox num;

    Complex value() const {
        return exact ? Complex(rat.get_d(), 0.0) : num.value;
    }
};

struct FiberPoint {
    std::vector<FiberCoord> coords;
    int multiplicity = 1;
    bool is_real = false;
    double residual = 0.0;  // worst |equation| over the system
};

struct FiberResult {
    std::vector<FiberPoint> points;
    long degree_bound = 0;  // n!.Vol of the Newton polytope
    long torus_total = 0;   // sum of multiplicities of returned points
    long deficit = 0;       // degree_bound - torus_total
    int chart = -1;
    std::string warning;
};

/// Solves the critical-point system over a rational direction y: univariate
/// elimination per coordinate, exact roots where possible, multiplicity by
/// the projection-root rule using a coordinate that separates the point.
FiberResult fiber(const LaurentPoly& f, const ProjectiveDirection& y);

struct DiscriminantFactor {
    LaurentPoly factor{0};     // squarefree, chart coordinates (y_n = 1 for n=3)
    int multiplicity = 1;   // multiplicity inside disc of the first projection
    bool active = false;
    bool certified = true;  // false when the verdict used numerics only
    std::string reason;
    std::vector<Rational> sample;  // rational sample used, when one exists
};

struct DiscriminantResult {
    int n = 0;
    std::vector<LaurentPoly> projections;       // h_i(y, z_i), symbolic ring
    std::vector<LaurentPoly> raw_discriminants; // d_i(y), y-only ring
    std::vector<DiscriminantFactor> factors;
    LaurentPoly d0;  // product of active factors, homogeneous in y
    std::string warning;

    DiscriminantResult() : d0(0) {}
};

/// Ramification image of the logarithmic normal map: discriminants of the
/// per-coordinate projections, common part, squarefree factor base, and the
/// activity filter (a factor survives iff the fiber over a generic point of
/// its zero set carries a torus point of multiplicity at least 2).
DiscriminantResult gauss_discriminant(const LaurentPoly& f);

/// deg(y) homogenization helper: p in variables y_1..y_{n-1} lifted to a
/// homogeneous polynomial in y_1..y_n of the given degree.
LaurentPoly homogenize(const LaurentPoly& p, int degree);

}  // namespace amo
