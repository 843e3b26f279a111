#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "amo/contour.hpp"

using namespace amo;

static const std::vector<std::string> Z2 = {"z1", "z2"};

static LaurentPoly ex1(const Rational& a) {
    auto f = parse_poly("z1^2*z2 + z1*z2^2 - z1*z2", Z2);
    f.add_term({0, 0}, a);
    return f;
}

static ProjectiveDirection dir(std::initializer_list<Rational> cs) {
    return ProjectiveDirection::of(std::vector<Rational>(cs));
}

TEST_CASE("direction fan") {
    auto ds = circle_directions(8);
    CHECK(ds.size() >= 7);
    for (auto& d : ds) CHECK(d.coords.size() == 2);
    CHECK(ds[0].coords == std::vector<Rational>{Rational(1), Rational(0)});
}

TEST_CASE("contour of the line") {
    auto f = parse_poly("1 + z1 + z2", Z2);
    auto res = contour_points(f, {dir({Rational(1), Rational(1)})});
    CHECK(res.failures.empty());
    REQUIRE(res.points.size() == 1);
    CHECK(res.points[0].x[0] == doctest::Approx(-std::log(2)).epsilon(1e-12));
    CHECK(res.points[0].x[1] == doctest::Approx(-std::log(2)).epsilon(1e-12));
    CHECK(!res.points[0].pleat);
    CHECK(res.points[0].has_direction);
}

TEST_CASE("pleat tagging at a ramification direction") {
    auto f = ex1(Rational(-9, 100));
    auto res = contour_points(f, {dir({Rational(3), Rational(1)}),
                                  dir({Rational(1), Rational(1)})});
    CHECK(res.failures.empty());
    int pleats = 0;
    for (auto& p : res.points)
        if (p.pleat) ++pleats;
    CHECK(pleats == 1);  // only the ramification direction degenerates
}

TEST_CASE("three contour points per direction on the cubic") {
    auto f = ex1(Rational(3, 100));
    std::vector<ProjectiveDirection> ds = {dir({Rational(2), Rational(5)}),
                                           dir({Rational(7), Rational(4)}),
                                           dir({Rational(1), Rational(6)})};
    auto res = contour_points(f, ds);
    CHECK(res.failures.empty());
    for (auto& d : ds) {
        int count = 0;
        for (auto& p : res.points)
            if (p.dir.coords == d.coords) count += p.pleat ? 2 : 1;
        CHECK(count == 3);
    }
}

TEST_CASE("amoeba of a binomial is a line") {
    auto f = parse_poly("z1 + z2", Z2);
    AmoebaGrid g;
    g.t_steps = 40;
    g.angle_steps = 8;
    auto pts = amoeba_samples(f, g);
    CHECK(pts.size() > 100);
    for (auto& p : pts) CHECK(std::abs(p.x[0] - p.x[1]) < 1e-9);
}

TEST_CASE("complement counts across the three regimes") {
    AmoebaGrid g;
    g.t_min = -5;
    g.t_max = 5;

    auto small = complement_components(amoeba_samples(ex1(Rational(3, 100)), g));
    CHECK(small.total == 4);
    CHECK(small.bounded == 1);
    CHECK(small.stable);

    auto big = complement_components(amoeba_samples(ex1(Rational(1)), g));
    CHECK(big.total == 3);
    CHECK(big.bounded == 0);
    CHECK(big.stable);

    auto line = complement_components(
        amoeba_samples(parse_poly("z1 + z2", Z2), g));
    CHECK(line.total == 2);
    CHECK(line.bounded == 0);
    CHECK(line.stable);
}

TEST_CASE("contour lies inside the dilated amoeba raster") {
    auto f = ex1(Rational(3, 100));
    AmoebaGrid g;
    auto cc = complement_components(amoeba_samples(f, g));
    auto res = contour_points(f, circle_directions(60));
    const Raster& r = cc.raster;
    double w1 = (r.hi1 - r.lo1) / r.res, w2 = (r.hi2 - r.lo2) / r.res;
    int inside = 0, checked = 0;
    for (auto& p : res.points) {
        if (p.x[0] < r.lo1 || p.x[0] > r.hi1 || p.x[1] < r.lo2 ||
            p.x[1] > r.hi2)
            continue;
        ++checked;
        int a = std::min(r.res - 1, (int)((p.x[0] - r.lo1) / w1));
        int b = std::min(r.res - 1, (int)((p.x[1] - r.lo2) / w2));
        // on the amoeba or its raster boundary: allow one cell of slack
        bool hit = false;
        for (int d1 = -1; d1 <= 1; ++d1)
            for (int d2 = -1; d2 <= 1; ++d2) {
                int na = a + d1, nb = b + d2;
                if (na < 0 || nb < 0 || na >= r.res || nb >= r.res) continue;
                hit = hit ||
                      r.occupied[(size_t)nb * (size_t)r.res + (size_t)na];
            }
        if (hit) ++inside;
    }
    CHECK(checked > 100);
    CHECK(inside == checked);
}

TEST_CASE("emitters") {
    auto f = parse_poly("1 + z1 + z2", Z2);
    AmoebaGrid g;
    g.t_steps = 30;
    g.angle_steps = 8;
    auto pts = amoeba_samples(f, g);
    auto cc = complement_components(pts, 40);
    auto res = contour_points(f, circle_directions(12));
    auto svg = to_svg(cc.raster, res.points);
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    auto empty_svg = to_svg(Raster{}, {});
    CHECK(empty_svg.find("<svg") == 0);
    auto csv = to_csv(res.points);
    CHECK(csv.find("contour") != std::string::npos);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == (long)res.points.size());
}
