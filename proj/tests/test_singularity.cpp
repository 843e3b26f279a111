#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "amo/singularity.hpp"
#include "amo/gauss.hpp"

using namespace amo;

static const std::vector<std::string> Y2 = {"y1", "y2"};
static const std::vector<std::string> Z2 = {"z1", "z2"};
static const std::vector<std::string> Z3 = {"z1", "z2", "z3"};

static LaurentPoly ex1(const Rational& a) {
    auto f = parse_poly("z1^2*z2 + z1*z2^2 - z1*z2", Z2);
    f.add_term({0, 0}, a);
    return f;
}

static LaurentPoly ex2() {
    return parse_poly(
        "1 + z1 + z2 + z3 + 3*z1*z2 + 3*z1*z3 + 3*z2*z3 + 11*z1*z2*z3", Z3);
}

static ProjectiveDirection dir(std::initializer_list<Rational> cs) {
    return ProjectiveDirection::of(std::vector<Rational>(cs));
}

TEST_CASE("quasihomogeneous germs at the origin") {
    std::vector<Rational> o = {Rational(0), Rational(0)};
    auto cusp = milnor_number(parse_poly("y2^2 - y1^3", Y2), o);
    CHECK(cusp.milnor_number == 2);
    CHECK(cusp.local_multiplicity == 2);
    CHECK(cusp.label == "A2");

    auto morse = milnor_number(parse_poly("y1^2 + y2^2", Y2), o);
    CHECK(morse.milnor_number == 1);
    CHECK(morse.label == "A1");

    auto a3 = milnor_number(parse_poly("y2^2 - y1^4", Y2), o);
    CHECK(a3.milnor_number == 3);
    CHECK(a3.label == "A3");

    auto d4 = milnor_number(parse_poly("y1^3 - y1*y2^2", Y2), o);
    CHECK(d4.milnor_number == 4);
    CHECK(d4.label == "D4");
}

TEST_CASE("translated germ") {
    auto d = parse_poly("y2^2 - 2*y2 - y1^3 + 3*y1^2 - 3*y1 + 2", Y2);
    // (y2-1)^2 - (y1-1)^3 at (1,1)
    auto g = milnor_number(d, {Rational(1), Rational(1)});
    CHECK(g.milnor_number == 2);
    CHECK(jet_milnor(d, {Rational(1), Rational(1)}) == 2);
}

TEST_CASE("germ errors") {
    std::vector<Rational> o = {Rational(0), Rational(0)};
    CHECK_THROWS(milnor_number(parse_poly("y1 + y2^2", Y2), o));
    CHECK_THROWS(milnor_number(parse_poly("y1^2 - 2*y1*y2 + y2^2", Y2), o));
    CHECK_THROWS(milnor_number(parse_poly("y1^2", Y2), o));
}

TEST_CASE("jet dimension count matches known values") {
    std::vector<Rational> o = {Rational(0), Rational(0)};
    CHECK(jet_milnor(parse_poly("y2^2 - y1^3", Y2), o) == 2);
    CHECK(jet_milnor(parse_poly("y2^2 - y1^5", Y2), o) == 4);
    CHECK(jet_milnor(parse_poly("y1^3 + y2^4", Y2), o) == 6);
}

TEST_CASE("hessian of the line's phase function") {
    auto f = parse_poly("1 + z1 + z2", Z2);
    std::vector<Rational> z0 = {Rational(-1, 2), Rational(-1, 2)};
    auto H = phase_hessian(f, dir({Rational(1), Rational(1)}), z0);
    REQUIRE(H.h.size() == 1);
    CHECK(H.h[0][0] == Rational(-8));
    CHECK(H.corank == 0);
    CHECK(jacobian_hessian_identity_check(f, dir({Rational(1), Rational(1)}),
                                          z0));
}

TEST_CASE("morse point of the plane curve") {
    auto f = ex1(Rational(3, 100));
    std::vector<Rational> z0 = {Rational(3, 10), Rational(1, 2)};
    auto y = dir({Rational(1), Rational(3)});
    auto H = phase_hessian(f, y, z0);
    REQUIRE(H.h.size() == 1);
    CHECK(H.h[0][0] != 0);
    CHECK(H.corank == 0);
    CHECK(jacobian_hessian_identity_check(f, y, z0));
}

TEST_CASE("degenerate point of the space surface") {
    auto f = ex2();
    std::vector<Rational> z0 = {Rational(-1), Rational(-1, 3), Rational(-1)};
    auto y = dir({Rational(1), Rational(3), Rational(1)});
    auto H = phase_hessian(f, y, z0);
    REQUIRE(H.h.size() == 2);
    CHECK(H.rank == 1);
    CHECK(H.corank == 1);
    CHECK(jacobian_hessian_identity_check(f, y, z0));
}

TEST_CASE("labels") {
    CHECK(classify_phase_point(1, 0, 2).label == "A1");
    CHECK(classify_phase_point(2, 1, 2).label == "A2");
    CHECK(classify_phase_point(3, 1, 3).label == "A3");
    CHECK(classify_phase_point(4, 2, 3).label == "D4");
    auto u = classify_phase_point(5, 2, 3);
    CHECK(!u.classified);
    CHECK(u.label == "unclassified(5, 2)");
    CHECK(classify_phase_point(2, 0, 2).label == "unclassified(2, 0)");
    CHECK_THROWS(classify_phase_point(0, 0, 2));
    CHECK_THROWS(classify_phase_point(1, 2, 2));
}

TEST_CASE("fiber point classification end to end") {
    auto f = ex2();
    auto y = dir({Rational(1), Rational(3), Rational(1)});
    auto fr = fiber(f, y);
    bool saw_a3 = false;
    for (auto& p : fr.points) {
        auto rep = classify_fiber_point(f, y, p);
        if (p.multiplicity == 3) {
            CHECK(rep.label.label == "A3");
            CHECK(rep.corank == 1);
            CHECK(rep.exact);
            saw_a3 = true;
        } else {
            CHECK(rep.label.label == "A1");
        }
    }
    CHECK(saw_a3);
}

TEST_CASE("vanishing order") {
    auto p = parse_poly("y1^2 - y2^2", Y2);
    CHECK(vanishing_order(p, {Rational(0), Rational(0)}) == 2);
    CHECK(vanishing_order(p, {Rational(1), Rational(1)}) == 1);
    CHECK(vanishing_order(p, {Rational(2), Rational(1)}) == 0);
    // projective version dehomogenizes at the last nonzero coordinate
    CHECK(vanishing_order_projective(p, {Rational(2), Rational(2)}) == 1);
    CHECK(vanishing_order_projective(p, {Rational(1), Rational(0)}) == 0);
}

TEST_CASE("multiplicity budget on the worked examples") {
    auto f1 = ex1(Rational(-9, 100));
    auto disc1 = gauss_discriminant(f1);
    REQUIRE(!disc1.d0.is_zero());
    auto b = check_multiplicity_budget(f1, disc1.d0,
                                       dir({Rational(3), Rational(1)}));
    CHECK(b.m == 1);
    CHECK(b.slack == 0);
    CHECK(b.equality);
    int mult2 = 0;
    for (int m : b.fiber_multiplicities)
        if (m == 2) ++mult2;
    CHECK(mult2 == 1);

    // off the ramification locus everything is simple
    auto b0 = check_multiplicity_budget(f1, disc1.d0,
                                        dir({Rational(5), Rational(1)}));
    CHECK(b0.m == 0);
    for (int m : b0.fiber_multiplicities) CHECK(m == 1);
}

TEST_CASE("space surface: six double points of the ramification curve") {
    auto f = ex2();
    auto disc = gauss_discriminant(f);
    REQUIRE(!disc.d0.is_zero());
    CHECK(disc.d0.term_count() == 91);
    auto chart = substitute_rational(disc.d0, 2, 1);
    std::vector<std::vector<Rational>> pts = {
        {Rational(1, 9), Rational(1, 9)}, {Rational(1, 3), Rational(1, 3)},
        {Rational(1), Rational(3)},       {Rational(3), Rational(1)},
        {Rational(1), Rational(9)},       {Rational(9), Rational(1)}};
    for (auto& p : pts) {
        auto g = milnor_number(chart, p);
        CHECK(g.milnor_number == 2);
        CHECK(g.label == "A2");
        CHECK(jet_milnor(chart, p) == 2);
    }
    auto b = check_multiplicity_budget(
        f, disc.d0, dir({Rational(1), Rational(3), Rational(1)}));
    CHECK(b.m == 2);
    CHECK(b.slack == 0);
    CHECK(b.equality);
}
