#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "amo/newton.hpp"

using namespace amo;

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

TEST_CASE("hull of the plane curve support") {
    auto P = NewtonPolytope::of(ex1(Rational(3, 100)));
    CHECK(P.dim() == 2);
    std::vector<Exp> expect = {{0, 0}, {2, 1}, {1, 2}};
    auto vs = P.vertices();
    std::sort(vs.begin(), vs.end(), GrlexLess{});
    std::sort(expect.begin(), expect.end(), GrlexLess{});
    CHECK(vs == expect);
    CHECK(P.normalized_volume() == 3);
    auto lp = P.lattice_points();
    std::vector<Exp> elp = {{0, 0}, {1, 1}, {2, 1}, {1, 2}};
    std::sort(elp.begin(), elp.end(), GrlexLess{});
    CHECK(lp == elp);
}

TEST_CASE("unit simplex and cube") {
    auto S = NewtonPolytope::of(parse_poly("1 + z1 + z2", Z2));
    CHECK(S.normalized_volume() == 1);
    CHECK(S.lattice_points().size() == 3);
    CHECK(S.vertices().size() == 3);

    auto C = NewtonPolytope::of(ex2());
    CHECK(C.dim() == 3);
    CHECK(C.vertices().size() == 8);
    CHECK(C.normalized_volume() == 6);
    CHECK(C.lattice_points().size() == 8);
    CHECK(C.facets().size() == 6);
}

TEST_CASE("lower dimensional hulls") {
    auto pt = NewtonPolytope::of(parse_poly("5*z1^2*z2", Z2));
    CHECK(pt.dim() == 0);
    CHECK(pt.normalized_volume() == 0);
    CHECK(pt.lattice_points() == std::vector<Exp>{{2, 1}});

    auto seg = NewtonPolytope::of(parse_poly("1 + 2*z1^2 + z1^4", {"z1", "z2"}));
    CHECK(seg.dim() == 1);
    CHECK(seg.vertices().size() == 2);
    CHECK(seg.lattice_points().size() == 5);

    auto tri = NewtonPolytope::of(parse_poly("1 + z1 + z2", Z3));
    CHECK(tri.dim() == 2);
    CHECK(tri.normalized_volume() == 0);
    CHECK(tri.lattice_points().size() == 3);
    CHECK(tri.vertices().size() == 3);
}

TEST_CASE("volume invariances") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> sh(-5, 5);
    auto f = ex1(Rational(1));
    auto P = NewtonPolytope::of(f);
    long v = P.normalized_volume();
    for (int t = 0; t < 5; ++t) {
        Exp s = {sh(rng), sh(rng)};
        LaurentPoly g(2);
        for (auto& [e, c] : f.terms())
            g.add_term({e[0] + s[0], e[1] + s[1]}, c);
        CHECK(NewtonPolytope::of(g).normalized_volume() == v);
    }
    CHECK(NewtonPolytope::of(f.permuted({1, 0})).normalized_volume() == v);
    auto Q = NewtonPolytope::of(ex2().permuted({2, 0, 1}));
    CHECK(Q.normalized_volume() == 6);
}

TEST_CASE("faces and truncations") {
    auto f = ex1(Rational(3, 100));
    auto P = NewtonPolytope::of(f);
    auto fs = P.faces();
    int nv = 0, ne = 0, nfull = 0;
    for (auto& fd : fs) {
        if (fd.dimension == 0) ++nv;
        if (fd.dimension == 1) ++ne;
        if (fd.dimension == 2) ++nfull;
    }
    CHECK(nv == 3);
    CHECK(ne == 3);
    CHECK(nfull == 1);
    for (auto& fd : fs) {
        if (fd.dimension == 1 && fd.lattice_points.size() == 2 &&
            fd.lattice_points[0][0] + fd.lattice_points[0][1] == 3) {
            CHECK(truncation(f, fd) == parse_poly("z1^2*z2 + z1*z2^2", Z2));
        }
        if (fd.dimension == 2) CHECK(truncation(f, fd) == f);
        if (fd.dimension == 0)
            CHECK(truncation(f, fd).term_count() == 1);
    }
}

TEST_CASE("support faces") {
    auto P = NewtonPolytope::of(ex1(Rational(1)));
    auto top = P.support_face({1, 1});
    CHECK(top.dimension == 1);
    CHECK(top.lattice_points.size() == 2);
    auto corner = P.support_face({-1, -1});
    CHECK(corner.dimension == 0);
    CHECK(corner.vertices == std::vector<Exp>{{0, 0}});
}

TEST_CASE("lattice basis") {
    auto B = lattice_row_basis({{2, 4}, {3, 6}});
    REQUIRE(B.size() == 1);
    CHECK(B[0] == std::vector<long>{1, 2});
    auto B2 = lattice_row_basis({{1, 0, 1}, {0, 1, 1}, {1, 1, 2}});
    CHECK(B2.size() == 2);
}

TEST_CASE("nondegeneracy of the worked curves") {
    auto r1 = is_nondegenerate(ex1(Rational(3, 100)));
    CHECK(r1.nondegenerate);
    auto r2 = is_nondegenerate(ex2());
    CHECK(r2.nondegenerate);
}

TEST_CASE("degenerate double root is caught with a witness") {
    auto f = parse_poly("z1^2 + 2*z1 + 1", Z2);  // (z1+1)^2
    auto r = is_nondegenerate(f);
    CHECK(!r.nondegenerate);
    REQUIRE(r.witness.size() == 2);
    CHECK(std::abs(r.witness[0] - Complex(-1.0, 0.0)) < 1e-9);

    auto g = parse_poly("z1^2*z2^2 - 2*z1*z2 + 1", Z2);  // (z1 z2 - 1)^2
    auto rg = is_nondegenerate(g);
    CHECK(!rg.nondegenerate);
    Complex prod = rg.witness[0] * rg.witness[1];
    CHECK(std::abs(prod - Complex(1.0, 0.0)) < 1e-9);
}
