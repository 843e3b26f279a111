// Seed-pinned randomized checks shared by the property suite and the
// acceptance runner. Each check returns a list of failure messages.
#pragma once

#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "amo/contour.hpp"
#include "amo/elim.hpp"
#include "amo/gauss.hpp"

namespace checks {

using namespace amo;

inline LaurentPoly random_poly(std::mt19937& rng, int arity, int nterms,
                               int lo, int hi) {
    std::uniform_int_distribution<int> e(lo, hi), c(-9, 9);
    LaurentPoly p(arity);
    for (int t = 0; t < nterms; ++t) {
        Exp ex((size_t)arity, 0);
        for (auto& v : ex) v = e(rng);
        p.add_term(ex, c(rng));
    }
    return p;
}

inline std::vector<std::string> ring_identities(unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<std::string> bad;
    for (int trial = 0; trial < 12; ++trial) {
        auto p = random_poly(rng, 2, 5, -3, 3);
        auto q = random_poly(rng, 2, 5, -3, 3);
        auto r = random_poly(rng, 2, 4, -2, 2);
        if ((p + q) * r != p * r + q * r)
            bad.push_back("distributivity failed at trial " +
                          std::to_string(trial));
        if ((p * q) * r != p * (q * r))
            bad.push_back("associativity failed at trial " +
                          std::to_string(trial));
        if (!q.is_zero() && divide_exact(p * q, q) != p)
            bad.push_back("exact division roundtrip failed at trial " +
                          std::to_string(trial));
        if (p - p != LaurentPoly(2))
            bad.push_back("additive inverse failed at trial " +
                          std::to_string(trial));
    }
    return bad;
}

inline std::vector<std::string> resultant_identities(unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<std::string> bad;
    for (int trial = 0; trial < 8; ++trial) {
        auto p = random_poly(rng, 2, 4, 0, 3);
        auto q = random_poly(rng, 2, 4, 0, 3);
        auto r = random_poly(rng, 2, 3, 0, 2);
        if (!p.depends_on(1) || !q.depends_on(1) || !r.depends_on(1)) continue;
        if (resultant(p * r, q, 1) != resultant(p, q, 1) * resultant(r, q, 1))
            bad.push_back("resultant multiplicativity failed at trial " +
                          std::to_string(trial));
        auto direct = resultant(p, q, 1);
        auto swapped = resultant(q, p, 1);
        int dp = make_univariate_view(p, 1).degree();
        int dq = make_univariate_view(q, 1).degree();
        if (swapped != ((dp * dq) % 2 == 0 ? direct : -direct))
            bad.push_back("resultant swap sign failed at trial " +
                          std::to_string(trial));
    }
    return bad;
}

inline std::vector<std::string> squarefree_reconstruction(unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<std::string> bad;
    for (int trial = 0; trial < 6; ++trial) {
        auto a = random_poly(rng, 2, 3, 0, 2);
        auto b = random_poly(rng, 2, 3, 0, 2);
        if (a.is_zero() || b.is_zero() || a.is_constant() || b.is_constant())
            continue;
        std::uniform_int_distribution<int> m(1, 3);
        unsigned ma = (unsigned)m(rng), mb = (unsigned)m(rng);
        auto p = a.pow(ma) * b.pow(mb);
        if (!p.depends_on(0)) continue;
        auto sf = squarefree_decomposition(p, 0);
        LaurentPoly prod = LaurentPoly::constant(2, 1);
        for (auto& [fac, mult] : sf) prod = prod * fac.pow((unsigned)mult);
        if (normalize_unit(prod) != normalize_unit(p))
            bad.push_back("squarefree product mismatch at trial " +
                          std::to_string(trial));
    }
    return bad;
}

/// Over random directions where d0 does not vanish and no per-coordinate
/// projection drops degree (there a fiber point escapes the torus), the
/// fiber carries exactly deg-gamma torus points, all simple, and the
/// non-real ones close under conjugation.
inline std::vector<std::string> fiber_count_check(const LaurentPoly& f,
                                                  const DiscriminantResult& disc,
                                                  unsigned seed,
                                                  int directions) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> c(-9, 9);
    int n = f.arity();
    std::vector<std::string> bad;
    long degree = NewtonPolytope::of(f).normalized_volume();
    // leading coefficients of the projections, as functions of y
    std::vector<LaurentPoly> lcs;
    for (int i = 0; i < n; ++i)
        lcs.push_back(make_univariate_view(disc.projections[(size_t)i], i).lc());
    auto generic = [&](const std::vector<Rational>& y) {
        if (eval_rational(disc.d0, y) == 0) return false;
        // chart normalization used by the symbolic projections
        std::vector<Rational> point((size_t)lcs[0].arity(), 1);
        for (int i = 0; i < n; ++i)
            point[(size_t)(lcs[0].arity() - n + i)] = y[(size_t)i] / y.back();
        for (auto& lc : lcs)
            if (eval_rational(lc, point) == 0) return false;
        return true;
    };
    for (int trial = 0; trial < directions; ++trial) {
        std::vector<Rational> y;
        while (true) {
            y.clear();
            for (int i = 0; i < n; ++i) y.push_back(c(rng));
            bool nz = true;
            for (auto& v : y) nz = nz && v != 0;
            if (!nz) continue;
            if (generic(y)) break;
        }
        auto dir = ProjectiveDirection::of(y);
        auto fr = fiber(f, dir);
        std::ostringstream tag;
        tag << "direction " << trial;
        if (fr.torus_total != degree || fr.deficit != 0)
            bad.push_back(tag.str() + ": fiber count " +
                          std::to_string(fr.torus_total) + " != degree " +
                          std::to_string(degree));
        for (auto& p : fr.points)
            if (p.multiplicity != 1)
                bad.push_back(tag.str() + ": non-simple point off the locus");
        // conjugation closure
        for (auto& p : fr.points) {
            if (p.is_real) continue;
            bool paired = false;
            for (auto& q : fr.points) {
                if (&q == &p) continue;
                double worst = 0.0;
                for (size_t i = 0; i < p.coords.size(); ++i)
                    worst = std::max(worst,
                                     std::abs(std::conj(p.coords[i].value()) -
                                              q.coords[i].value()));
                paired = paired || worst < 1e-6;
            }
            if (!paired)
                bad.push_back(tag.str() + ": unpaired non-real point");
        }
    }
    return bad;
}

/// Every contour point inside the raster box lies on an occupied cell
/// (one cell of slack for the raster boundary).
inline std::vector<std::string> contour_in_raster(const LaurentPoly& f) {
    std::vector<std::string> bad;
    auto cc = complement_components(amoeba_samples(f, {}));
    auto res = contour_points(f, circle_directions(90));
    const Raster& r = cc.raster;
    double w1 = (r.hi1 - r.lo1) / r.res, w2 = (r.hi2 - r.lo2) / r.res;
    int checked = 0;
    for (auto& p : res.points) {
        if (p.x[0] < r.lo1 || p.x[0] > r.hi1 || p.x[1] < r.lo2 ||
            p.x[1] > r.hi2)
            continue;
        ++checked;
        int a = std::min(r.res - 1, (int)((p.x[0] - r.lo1) / w1));
        int b = std::min(r.res - 1, (int)((p.x[1] - r.lo2) / w2));
        bool hit = false;
        for (int d1 = -1; d1 <= 1; ++d1)
            for (int d2 = -1; d2 <= 1; ++d2) {
                int na = a + d1, nb = b + d2;
                if (na < 0 || nb < 0 || na >= r.res || nb >= r.res) continue;
                hit = hit || r.occupied[(size_t)nb * (size_t)r.res + (size_t)na];
            }
        if (!hit) {
            std::ostringstream msg;
            msg << "contour point (" << p.x[0] << ", " << p.x[1]
                << ") outside the raster";
            bad.push_back(msg.str());
        }
    }
    if (checked < 50) bad.push_back("too few contour points inside the box");
    return bad;
}

}  // namespace checks
