#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "property_checks.hpp"

using namespace amo;

static void require_clean(const std::vector<std::string>& bad) {
    for (auto& msg : bad) FAIL_CHECK(msg);
    CHECK(bad.empty());
}

TEST_CASE("ring identities on random polynomials") {
    require_clean(checks::ring_identities(101));
}

TEST_CASE("resultant identities on random polynomials") {
    require_clean(checks::resultant_identities(102));
}

TEST_CASE("squarefree reconstruction on random products") {
    require_clean(checks::squarefree_reconstruction(103));
}

TEST_CASE("fiber count equals the map degree off the ramification locus") {
    auto f2 = parse_poly("z1^2*z2 + z1*z2^2 - z1*z2", {"z1", "z2"});
    f2.add_term({0, 0}, Rational(3, 100));
    auto d2 = gauss_discriminant(f2);
    require_clean(checks::fiber_count_check(f2, d2, 104, 20));

    auto f3 = parse_poly(
        "1 + z1 + z2 + z3 + 3*z1*z2 + 3*z1*z3 + 3*z2*z3 + 11*z1*z2*z3",
        {"z1", "z2", "z3"});
    auto d3 = gauss_discriminant(f3);
    require_clean(checks::fiber_count_check(f3, d3, 105, 20));
}

TEST_CASE("contour points lie on the sampled amoeba") {
    auto f = parse_poly("z1^2*z2 + z1*z2^2 - z1*z2", {"z1", "z2"});
    f.add_term({0, 0}, Rational(3, 100));
    require_clean(checks::contour_in_raster(f));
}
