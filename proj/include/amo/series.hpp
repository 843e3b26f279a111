#pragma once

#include <map>
#include <string>
#include <vector>

#include "amo/laurent.hpp"

namespace amo {

/// Geometric expansion of h/f around the pivot term of f at the lattice
/// point nu: h/f = h * sum_k ((a z^nu - f)/(a z^nu))^k / (a z^nu). The
/// grading functional ell is a strictly positive integer form on the
/// exponents of the ratio; its existence certifies that the series is
/// graded (guaranteed when nu is a vertex of the Newton polytope).
struct ExpansionSpec {
    LaurentPoly f{0};
    LaurentPoly h{0};
    Exp nu;
    Exp ell;
};

/// Finds a minimal grading functional; throws std::domain_error when none
/// exists ("no valid grading functional").
ExpansionSpec make_expansion(const LaurentPoly& f, const Exp& nu);
ExpansionSpec make_expansion(const LaurentPoly& f, const Exp& nu,
                             const LaurentPoly& h);

/// Exact coefficients c_alpha of h/f on the range ell(alpha + nu) <= limit.
struct CoefficientTable {
    std::map<Exp, Rational, GrlexLess> c;
    Exp nu;
    Exp ell;
    long limit = 0;

    bool in_range(const Exp& alpha) const;
    /// Coefficient at alpha; zero when absent, throws std::out_of_range
    /// ("budget exceeded") outside the guaranteed range.
    Rational at(const Exp& alpha) const;
};

/// Expands up to grading budget B (bound on ell over the ratio powers).
CoefficientTable expand(const ExpansionSpec& spec, long budget);

/// Exact diagonal subsequence c_{k q}, k = 0..kmax.
std::vector<Rational> diagonal(const CoefficientTable& t, const Exp& q,
                               int kmax);

struct RateCandidate {
    std::vector<double> log_w;  // Log of the fiber point
    double rate = 0.0;          // exp(-<q, Log w>)
    bool real = false;
    bool positive = false;      // real with all coordinates positive
    int multiplicity = 1;
};

struct RateReport {
    double empirical = 0.0;   // extrapolated |c_{kq}|^(1/k)
    double predicted = 0.0;   // from the dominant saddle
    double relative_error = 0.0;
    bool oscillatory = false;  // successive estimates spread > 10%
    std::vector<RateCandidate> candidates;
    int chosen = -1;
};

/// Compares the diagonal growth rate against exp(-<q, Log w>) for the
/// dominant fiber point w of the direction q: the real candidate with the
/// largest rate (complex pairs only contribute oscillating corrections).
/// All candidates are listed. Throws when the diagonal tail is zero (q
/// outside the support cone of the expansion).
RateReport rate_check(const LaurentPoly& f, const Exp& nu, const Exp& q,
                      int kmax);

struct PrefactorReport {
    double plateau = 0.0;  // |c_{kq}| rate^-k k^((n-1)/2) at the tail
    double spread = 0.0;   // relative spread over the last third
    bool stable = false;
    double rate_used = 0.0;
};

/// Checks the power-law correction of a simple-saddle diagonal: the scaled
/// sequence must flatten over the last third. Throws when the fiber has a
/// degenerate point.
PrefactorReport morse_prefactor_check(const LaurentPoly& f, const Exp& nu,
                                      const Exp& q, int kmax);

}  // namespace amo
