#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "amo/univariate.hpp"

using namespace amo;

static QPoly from_ints(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.emplace_back(c);
    return qpoly_from(v);
}

TEST_CASE("divmod identity") {
    QPoly a = from_ints({1, -3, 0, 2, 5});
    QPoly b = from_ints({2, 0, 1});
    auto [q, r] = qpoly_divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
}

TEST_CASE("gcd of planted common factor") {
    QPoly g = from_ints({-1, 0, 3});
    QPoly a = g * from_ints({2, 1});
    QPoly b = g * from_ints({-5, 0, 0, 1});
    CHECK(qpoly_gcd(a, b) == qpoly_primitive(g));
    CHECK(qpoly_gcd(from_ints({1, 1}), from_ints({1, -1})) == from_ints({1}));
}

TEST_CASE("squarefree reconstruction") {
    // (x-1)^3 (x+2)^2 (x^2+1)
    QPoly p = from_ints({-1, 1}) * from_ints({-1, 1}) * from_ints({-1, 1}) *
              from_ints({2, 1}) * from_ints({2, 1}) * from_ints({1, 0, 1});
    auto sf = qpoly_squarefree(p);
    QPoly prod = from_ints({1});
    for (auto& [f, m] : sf)
        for (int i = 0; i < m; ++i) prod = prod * f;
    CHECK(qpoly_primitive(prod) == qpoly_primitive(p));
    bool saw3 = false;
    for (auto& [f, m] : sf)
        if (m == 3) {
            saw3 = true;
            CHECK(f == from_ints({-1, 1}));
        }
    CHECK(saw3);
}

TEST_CASE("sturm counts") {
    CHECK(sturm_real_root_count(from_ints({-2, 0, 1})) == 2);   // x^2-2
    CHECK(sturm_real_root_count(from_ints({2, 0, 1})) == 0);    // x^2+2
    CHECK(sturm_real_root_count(from_ints({0, -1, 0, 1})) == 3);
    CHECK(sturm_real_root_count(from_ints({1, 3, 3, 1})) == 1); // (x+1)^3
}

TEST_CASE("aberth recovers roots of a wilkinson-style product") {
    // (x-1)(x-2)...(x-8)
    QPoly p = from_ints({1});
    for (long k = 1; k <= 8; ++k) p = p * from_ints({-k, 1});
    std::vector<Complex> cs;
    for (auto& c : p.c) cs.emplace_back(c.get_d(), 0.0);
    auto roots = aberth_roots(cs);
    REQUIRE(roots.size() == 8);
    std::vector<double> re;
    for (auto& r : roots) {
        CHECK(std::abs(r.imag()) < 1e-8);
        re.push_back(r.real());
    }
    std::sort(re.begin(), re.end());
    for (int k = 0; k < 8; ++k) CHECK(std::abs(re[k] - (k + 1)) < 1e-8);
}

TEST_CASE("root finder separates exact and numeric parts") {
    // (x - 2/3)^2 (x^2 - 2)
    QPoly p = from_ints({-2, 3}) * from_ints({-2, 3}) * from_ints({-2, 0, 1});
    RootSet rs = univariate_roots(p);
    CHECK(rs.degree == 4);
    REQUIRE(rs.rational_roots.size() == 1);
    CHECK(rs.rational_roots[0].first == Rational(2, 3));
    CHECK(rs.rational_roots[0].second == 2);
    REQUIRE(rs.numeric_roots.size() == 2);
    for (auto& [z, m] : rs.numeric_roots) {
        CHECK(m == 1);
        CHECK(std::abs(std::abs(z.value.real()) - std::sqrt(2.0)) < 1e-12);
    }
}

TEST_CASE("planted rational roots with large denominators") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<long> num(-40, 40), den(1, 30);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rational> planted;
        QPoly p = from_ints({1});
        for (int i = 0; i < 4; ++i) {
            Rational r(num(rng), den(rng));
            r.canonicalize();
            planted.push_back(r);
            p = p * qpoly_from({-r, Rational(1)});
        }
        auto found = rational_roots(p);
        for (auto& r : planted)
            CHECK(std::count(found.begin(), found.end(), r) >= 1);
    }
}

TEST_CASE("rational reconstruction") {
    auto r = reconstruct_rational(0.333333333333333, 1000, 1e-9);
    REQUIRE(r.has_value());
    CHECK(*r == Rational(1, 3));
    CHECK(!reconstruct_rational(std::sqrt(2.0), 1000, 1e-12).has_value());
}

TEST_CASE("laurent bridge") {
    auto p = parse_poly("z2^2 - 3*z2 + 2", {"z1", "z2"});
    auto [q, var] = as_univariate(p);
    CHECK(var == 1);
    CHECK(q == from_ints({2, -3, 1}));
    CHECK_THROWS(as_univariate(parse_poly("z1 + z2", {"z1", "z2"})));
    RootSet rs = univariate_roots(p);
    CHECK(rs.rational_roots.size() == 2);
}
