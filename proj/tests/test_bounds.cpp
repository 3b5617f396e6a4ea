#include <catch2/catch_amalgamated.hpp>

#include "schurpow/bounds.hpp"
#include "schurpow/numeric.hpp"

using namespace schurpow;

TEST_CASE("symmetric power degrees") {
    CHECK(sym_degree(3, 2) == 6);
    CHECK(sym_degree(3, 4) == 15);
    CHECK(sym_degree(4, 3) == 20);
    CHECK(sym_degree(3, 0) == 1);
    CHECK_THROWS_AS(sym_degree(5, 2), std::invalid_argument);
    CHECK_THROWS_AS(sym_degree(3, -1), std::invalid_argument);
}

TEST_CASE("gl3 rows at the landmark values") {
    BoundsRow k7 = gl3_bounds(7);
    CHECK(k7.generic_bound == 3);
    CHECK(k7.effective_bound == 3);
    CHECK(k7.source == "formula");

    BoundsRow k19 = gl3_bounds(19);
    CHECK(k19.generic_bound == 3);
    CHECK(k19.enhanced_bound == 2);
    CHECK(k19.effective_bound == 2);

    BoundsRow k5 = gl3_bounds(5);
    CHECK(k5.generic_denominator == 5);
    CHECK(k5.generic_bound == 4);
    CHECK_FALSE(k5.enhanced_bound.has_value());  // 5 = 2 (mod 3)

    BoundsRow k4 = gl3_bounds(4);
    CHECK(k4.generic_bound == 3);
    CHECK(k4.enhanced_denominator == 4);  // ties with the generic denominator here
    CHECK(k4.effective_bound == 3);

    BoundsRow k2 = gl3_bounds(2);
    CHECK(k2.effective_bound == 4);
    CHECK(k2.source == "proposition-constant");
    CHECK_FALSE(k2.generic_bound.has_value());
    BoundsRow k3 = gl3_bounds(3);
    CHECK(k3.effective_bound == 3);
    CHECK_THROWS_AS(gl3_bounds(1), std::invalid_argument);
}

TEST_CASE("gl4 rows at the landmark values") {
    BoundsRow k15 = gl4_bounds(15);
    CHECK(k15.degree == 816);
    CHECK(k15.generic_denominator == 114);
    CHECK(k15.generic_bound == 7);
    CHECK(k15.enhanced_bound == 6);  // 15 = 7 (mod 8)
    CHECK(k15.effective_bound == 6);

    BoundsRow k21 = gl4_bounds(21);
    CHECK(k21.enhanced_bound == 5);
    CHECK(k21.effective_bound == 5);

    BoundsRow k139 = gl4_bounds(139);
    CHECK(k139.enhanced_bound == 3);
    CHECK(k139.effective_bound == 3);

    BoundsRow k3 = gl4_bounds(3);
    CHECK(k3.effective_bound == 6);
    CHECK(k3.source == "proposition-constant");
    BoundsRow k4 = gl4_bounds(4);
    CHECK(k4.generic_bound == 35);
    CHECK(k4.proposition_bound == 7);
    CHECK(k4.effective_bound == 7);
    CHECK(k4.source == "proposition-constant");
}

TEST_CASE("proposition constants") {
    CHECK(proposition_constant(BoundCase::GL3, 2) == 4);
    CHECK(proposition_constant(BoundCase::GL3, 3) == 3);
    CHECK(proposition_constant(BoundCase::GL4, 3) == 6);
    CHECK(proposition_constant(BoundCase::GL4, 4) == 7);
    CHECK_FALSE(proposition_constant(BoundCase::GL3, 10).has_value());
}

TEST_CASE("ceilings and floors agree with exact rational arithmetic") {
    for (long long k = 4; k <= 300; ++k) {
        {
            BoundsRow row = gl3_bounds(k);
            Rational gden = Rational(k * (k + 1), 6);
            Int ceil_g = rational_num(gden) / rational_den(gden) + (rational_num(gden) % rational_den(gden) != 0 ? 1 : 0);
            CHECK(Int(*row.generic_denominator) == ceil_g);
            Rational quot = Rational(row.degree, *row.generic_denominator);
            CHECK(Int(*row.generic_bound) == rational_num(quot) / rational_den(quot));
        }
        {
            BoundsRow row = gl4_bounds(k);
            Rational gden = Rational((k - 2) * (k - 1) * k, 24);
            Int ceil_g = rational_num(gden) / rational_den(gden) + (rational_num(gden) % rational_den(gden) != 0 ? 1 : 0);
            CHECK(Int(*row.generic_denominator) == ceil_g);
        }
    }
}

TEST_CASE("enhanced denominators dominate generic ones") {
    for (long long k = 4; k <= 500; ++k) {
        BoundsRow g3 = gl3_bounds(k);
        if (g3.enhanced_denominator) {
            CHECK(*g3.enhanced_denominator >= *g3.generic_denominator);
            if (k >= 7) CHECK(*g3.enhanced_denominator > *g3.generic_denominator);
            CHECK(*g3.enhanced_bound <= *g3.generic_bound);
        }
        BoundsRow g4 = gl4_bounds(k);
        if (g4.enhanced_denominator) {
            CHECK(*g4.enhanced_denominator >= *g4.generic_denominator);
            if (k >= 7) CHECK(*g4.enhanced_denominator > *g4.generic_denominator);
            CHECK(*g4.enhanced_bound <= *g4.generic_bound);
        }
    }
}

TEST_CASE("gl3 threshold scan") {
    ThresholdReport rep = threshold_scan(BoundCase::GL3, 500);
    CHECK(rep.all_hold());
    for (const auto& claim : rep.claims) CHECK(claim.violations.empty());
    CHECK(rep.row(7).effective_bound == 3);
    CHECK(rep.row(19).effective_bound == 2);
    // minimal k with effective 3 under the formulas is 4 (k = 3 comes from a
    // proposition constant instead)
    CHECK(rep.row(3).source == "proposition-constant");
    CHECK(rep.row(4).source == "formula");
    CHECK(rep.row(4).effective_bound == 3);
    for (long long k = 5; k <= 6; ++k) CHECK(rep.row(k).effective_bound == 4);

    // tail behaviour: generic settles at 3 and enhanced at 2 from k = 19 on
    for (long long k = 19; k <= 500; ++k) {
        CHECK(rep.row(k).generic_bound == 3);
        if (rep.row(k).enhanced_bound) CHECK(rep.row(k).enhanced_bound == 2);
    }
    // monotone tails beyond k = 10
    std::optional<long long> prev_g, prev_e;
    for (long long k = 10; k <= 500; ++k) {
        const BoundsRow& row = rep.row(k);
        if (prev_g) CHECK(*row.generic_bound <= *prev_g);
        prev_g = row.generic_bound;
        if (row.enhanced_bound) {
            if (prev_e) CHECK(*row.enhanced_bound <= *prev_e);
            prev_e = row.enhanced_bound;
        }
    }
}

TEST_CASE("gl4 threshold scan") {
    ThresholdReport rep = threshold_scan(BoundCase::GL4, 1000);
    CHECK(rep.all_hold());
    CHECK(rep.row(15).generic_bound == 7);
    CHECK(rep.row(15).enhanced_bound == 6);
    CHECK(rep.row(15).effective_bound == 6);
    CHECK(rep.row(21).effective_bound == 5);
    CHECK(rep.row(39).effective_bound == 4);
    CHECK(rep.row(139).effective_bound == 3);

    // asymptotes within the scan: generic settles at 4, enhanced at 3
    for (long long k = 40; k <= 1000; ++k) CHECK(rep.row(k).generic_bound == 4);
    for (long long k = 139; k <= 1000; ++k)
        if (rep.row(k).enhanced_bound) CHECK(rep.row(k).enhanced_bound == 3);

    std::optional<long long> prev_g, prev_e;
    for (long long k = 10; k <= 1000; ++k) {
        const BoundsRow& row = rep.row(k);
        if (prev_g) CHECK(*row.generic_bound <= *prev_g);
        prev_g = row.generic_bound;
        if (row.enhanced_bound) {
            if (prev_e) CHECK(*row.enhanced_bound <= *prev_e);
            prev_e = row.enhanced_bound;
        }
    }
}

TEST_CASE("scan prerequisites") {
    CHECK_THROWS_AS(threshold_scan(BoundCase::GL3, 10), std::invalid_argument);
    CHECK_THROWS_AS(threshold_scan(BoundCase::GL4, 100), std::invalid_argument);
}
