#include "normsurf/bogomolov.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace normsurf;

namespace {

// Cone over a smooth degree-d plane curve with conormal O(1): one
// exceptional curve with E^2 = -d, chi(O_E) = 1 - (d-1)(d-2)/2, and
// h0(R^1 f_* O) = genus = (d-1)(d-2)/2.
ResolutionProfile cone_profile(long long d) {
    ResolutionProfile profile;
    SingularPointData point;
    point.gram = {{-d}};
    point.chi = {1 - (d - 1) * (d - 2) / 2};
    profile.points.push_back(point);
    profile.h0_r1 = (d - 1) * (d - 2) / 2;
    return profile;
}

ResolutionProfile ade_chain(std::size_t n) {
    ResolutionProfile profile;
    SingularPointData point;
    point.gram.assign(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        point.gram[i][i] = -2;
        if (i + 1 < n) {
            point.gram[i][i + 1] = 1;
            point.gram[i + 1][i] = 1;
        }
    }
    point.chi.assign(n, 1);
    profile.points.push_back(point);
    return profile;
}

}  // namespace

TEST_CASE("adjunction-derived canonical pairings") {
    const auto cone = cone_profile(3);
    CHECK(cone.points[0].derived_canonical() == std::vector<Rational>{Rational(3)});
    const auto d5 = cone_profile(5);
    CHECK(d5.points[0].derived_canonical() == std::vector<Rational>{Rational(15)});
    const auto ade = ade_chain(4);
    for (const auto& k : ade.points[0].derived_canonical())
        CHECK(k == 0);
}

TEST_CASE("profile validation") {
    auto profile = cone_profile(3);
    CHECK(validate_profile(profile).ok());

    profile.points[0].canonical = std::vector<Rational>{Rational(3)};
    CHECK(validate_profile(profile).ok());
    profile.points[0].canonical = std::vector<Rational>{Rational(4)};
    CHECK(!validate_profile(profile).ok());

    profile = cone_profile(3);
    profile.points[0].gram = {{2}};
    CHECK(!validate_profile(profile).ok());

    profile = cone_profile(3);
    profile.base_constant = Rational(-1);
    CHECK(!validate_profile(profile).ok());
}

TEST_CASE("koseki base constants") {
    CHECK(koseki_base_constant(KosekiKind::minimal_general_type, 1, 1) == 6);
    CHECK(koseki_base_constant(KosekiKind::other, 0, 0) == 0);
    CHECK(koseki_base_constant(KosekiKind::quasi_elliptic_kappa1, 0, 2) == 0);
    // floored at zero
    CHECK(koseki_base_constant(KosekiKind::quasi_elliptic_kappa1, 0, 5) == 0);
    CHECK(koseki_base_constant(KosekiKind::minimal_general_type, -1, 9) == 0);
}

TEST_CASE("continuous estimate: worked cone example and family") {
    const auto estimate = cx_continuous(cone_profile(3));
    CHECK(estimate.value == Rational(19, 4));
    CHECK(estimate.method == CxMethod::continuous);

    for (long long d = 3; d <= 12; ++d) {
        const Rational expected =
            Rational(2 * (d - 1) * (d - 2)) + Rational(d * (d - 2) * (d - 2), 4);
        CHECK(cx_continuous(cone_profile(d)).value == expected);
    }
}

TEST_CASE("continuous estimate: ADE profiles vanish") {
    for (std::size_t n = 1; n <= 8; ++n)
        CHECK(cx_continuous(ade_chain(n)).value == 0);
}

TEST_CASE("integer estimate on the worked cone") {
    const auto estimate = cx_integer(cone_profile(3), 2);
    CHECK(estimate.value == Rational(14, 3));
    CHECK(estimate.method == CxMethod::integer_certified);
    REQUIRE(estimate.witness.has_value());
    CHECK(estimate.witness->r == 1);
    CHECK(estimate.witness->v == std::vector<std::vector<long long>>{{1}});
    // the paper's continuous relaxation is strictly larger here
    CHECK(estimate.value < cx_continuous(cone_profile(3)).value);

    // independent envelope value at r_cap + 1 = 3: 4/3 + (1/4)(9/3)
    CHECK(continuous_envelope(cone_profile(3), 3) == Rational(4, 3) + Rational(3, 4));
}

TEST_CASE("integer estimate: all-nonpositive search stays at the base constant") {
    ResolutionProfile profile = ade_chain(1);
    profile.base_constant = 5;
    const auto estimate = cx_integer(profile, 3);
    CHECK(estimate.value == 5);
    REQUIRE(estimate.witness.has_value());
    CHECK(estimate.witness->v == std::vector<std::vector<long long>>{{0}});

    const auto ade = cx_integer(ade_chain(2), 4);
    CHECK(ade.value == 0);
    CHECK(ade.method == CxMethod::integer_certified);
}

TEST_CASE("integer vs continuous invariants on random profiles") {
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<long long> d_dist(3, 6);
    std::uniform_int_distribution<long long> h0_dist(0, 3);
    std::uniform_int_distribution<int> base_num(0, 8);
    for (int trial = 0; trial < 25; ++trial) {
        ResolutionProfile profile = cone_profile(d_dist(rng));
        profile.h0_r1 = h0_dist(rng);
        profile.base_constant = Rational(base_num(rng), 2);
        const Rational continuous = cx_continuous(profile).value;
        Rational previous(-1);
        for (long long r_cap = 1; r_cap <= 3; ++r_cap) {
            const auto est = cx_integer(profile, r_cap);
            CHECK(est.value <= continuous);
            CHECK(est.value >= previous);  // monotone in r_cap
            CHECK(est.value >= 0);
            previous = est.value;
        }
    }
}

TEST_CASE("scaling law: doubling h0 adds exactly 8 to the continuous estimate") {
    ResolutionProfile profile = cone_profile(4);
    profile.h0_r1 = 3;
    const Rational before = cx_continuous(profile).value;
    profile.h0_r1 = 6;
    CHECK(cx_continuous(profile).value == before + 8);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(cx_integer(cone_profile(3), 0), std::invalid_argument);
    CHECK_THROWS_AS(continuous_envelope(cone_profile(3), 0), std::invalid_argument);
}
