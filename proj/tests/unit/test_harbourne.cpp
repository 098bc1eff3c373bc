#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "surflines/catalog/catalog.hpp"
#include "surflines/harbourne/harbourne.hpp"
#include "surflines/incidence/incidence.hpp"

using namespace surflines;

namespace {
Rational q(std::int64_t p, std::int64_t d) { return Rational(p) / Rational(d); }
} // namespace

TEST(LineSelfIntersection, Adjunction) {
    EXPECT_EQ(line_self_intersection(3), -1);
    EXPECT_EQ(line_self_intersection(4), -2);
    EXPECT_THROW(line_self_intersection(2), InvalidInput);
}

TEST(StrictTransform, Examples) {
    EXPECT_EQ(strict_transform_sq(bauer_profile()), Rational(-64));
    EXPECT_EQ(strict_transform_sq(schur_profile()), Rational(-1024));
    EXPECT_EQ(strict_transform_sq(IncidenceProfile(4, 2)), Rational(-4));
}

TEST(HarbourneLinear, PublishedValues) {
    EXPECT_EQ(harbourne_linear(cubic_profile(18)), q(-27, 11));
    EXPECT_EQ(harbourne_linear(schur_profile()), q(-128, 51));
    EXPECT_EQ(harbourne_linear(schur_profile()).to_decimal(3), "-2.509");
    EXPECT_EQ(harbourne_linear(bauer_profile()), Rational(-8));
    EXPECT_THROW(harbourne_linear(IncidenceProfile(4, 2)), UndefinedValueError);
}

TEST(Miyaoka, Examples) {
    const auto schur = miyaoka_check(schur_profile());
    EXPECT_EQ(schur.lhs, -144);
    EXPECT_EQ(schur.rhs, 72);
    EXPECT_TRUE(schur.holds);
    const auto fermat4 = miyaoka_check(fermat_profile(4));
    EXPECT_EQ(fermat4.lhs, 0);
    EXPECT_EQ(fermat4.rhs, 72);
    EXPECT_TRUE(fermat4.holds);
    EXPECT_THROW(miyaoka_check(fermat_profile(3)), InapplicableError);
    // too many disjoint lines for a quartic
    EXPECT_FALSE(miyaoka_check(IncidenceProfile(4, 19)).holds);
}

TEST(MainTheoremBound, Examples) {
    EXPECT_EQ(main_theorem_bound(bauer_profile()), Rational(-9));
    EXPECT_EQ(main_theorem_bound(schur_profile()), q(-155, 51));
    EXPECT_GE(harbourne_linear(schur_profile()), main_theorem_bound(schur_profile()));
    EXPECT_THROW(main_theorem_bound(fermat_profile(3)), InapplicableError);
    EXPECT_THROW(main_theorem_bound(IncidenceProfile(4, 2)), UndefinedValueError);
    EXPECT_EQ(theorem_a_rhs(bauer_profile()), -4 * 8 - 72);
}

TEST(MainTheoremBound, FermatApproachesMinusElevenThirds) {
    const Rational limit = q(-11, 3);
    Rational previous_gap = abs(main_theorem_bound(fermat_profile(4)) - limit);
    for (int n = 5; n <= 60; ++n) {
        const Rational gap = abs(main_theorem_bound(fermat_profile(n)) - limit);
        EXPECT_LT(gap, previous_gap) << "n = " << n;
        previous_gap = gap;
    }
    // Convergence is only O(1/n): the gap at n = 50 is pinned exactly.
    EXPECT_EQ(abs(main_theorem_bound(fermat_profile(50)) - limit), q(248, 3753));
}

TEST(ClosedForms, Fermat) {
    EXPECT_EQ(fermat_h_closed(3), q(-27, 11));
    EXPECT_EQ(fermat_h_closed(4), q(-8, 3));
    for (int n = 3; n <= 60; ++n) EXPECT_EQ(fermat_h_closed(n), harbourne_linear(fermat_profile(n)));
    EXPECT_LT(abs(fermat_h_closed(1000) + Rational(3)), q(1, 100000));
}

TEST(ClosedForms, Rams) {
    EXPECT_EQ(rams_h_closed(6), q(-54, 13));
    EXPECT_EQ(rams_h_closed(10), q(-250, 41));
    for (int n = 6; n <= 30; ++n) {
        EXPECT_EQ(rams_h_closed(n), harbourne_linear(rams_profile(n)));
        if (n > 6) { EXPECT_LT(rams_h_closed(n), rams_h_closed(n - 1)); }
    }
    EXPECT_THROW(rams_h_closed(5), InvalidInput);
}

TEST(ClosedForms, CubicMonotone) {
    EXPECT_EQ(cubic_h(18), q(-27, 11));
    EXPECT_EQ(cubic_h(0), q(-11, 5));
    for (int t = 0; t <= 18; ++t) {
        EXPECT_EQ(cubic_h(t), harbourne_linear(cubic_profile(t)));
        if (t < 18) {
            EXPECT_LT(cubic_h(t + 1), cubic_h(t));
            // the cross-multiplied form of the same comparison
            EXPECT_GT((-297 + 3 * t) * (133 - 2 * t) - (-294 + 3 * t) * (135 - 2 * t), 0);
        }
    }
    EXPECT_THROW(cubic_h(19), InvalidInput);
}

TEST(ClosedForms, FermatMatchesGeometry) {
    for (int n = 3; n <= 8; ++n) {
        EXPECT_EQ(fermat_h_closed(n), harbourne_linear(profile_from_arrangement(fermat_lines(n)))) << "n = " << n;
    }
}

TEST(Report, CubicIsInapplicableForMiyaoka) {
    const auto r = analyze(cubic_profile(18));
    EXPECT_EQ(r.h_linear, q(-27, 11));
    EXPECT_EQ(r.miyaoka, Verdict::inapplicable);
    EXPECT_EQ(r.main_theorem, Verdict::inapplicable);
    EXPECT_FALSE(r.main_bound.has_value());
}

TEST(Report, Bauer) {
    const auto r = analyze(bauer_profile());
    EXPECT_EQ(r.s, 8);
    EXPECT_EQ(r.incidences, 96);
    EXPECT_EQ(r.h_linear, Rational(-8));
    EXPECT_EQ(r.main_bound, Rational(-9));
    EXPECT_EQ(r.miyaoka, Verdict::holds);
    EXPECT_EQ(r.miyaoka_lhs, 64);
    EXPECT_EQ(r.main_theorem, Verdict::holds);
    EXPECT_EQ(r.theorem_a, Verdict::holds);
}

TEST(Properties, StrictTransformIdentityAndBoundSoundness) {
    std::mt19937_64 rng(99);
    int checked_bounds = 0;
    for (int i = 0; i < 2000; ++i) {
        const auto p = gen::random_profile(rng);
        const std::int64_t full = line_self_intersection(p.degree()) * p.lines() + incidence_count(p) -
                                  p.squared_multiplicity();
        const std::int64_t reduced = line_self_intersection(p.degree()) * p.lines() - p.weighted_multiplicity();
        EXPECT_EQ(full, reduced);
        EXPECT_EQ(strict_transform_sq(p), Rational(full));
        if (p.degree() >= 4 && p.singular_points() > 0 && miyaoka_check(p).holds) {
            EXPECT_GE(harbourne_linear(p), main_theorem_bound(p));
            EXPECT_GT(strict_transform_sq(p), Rational(theorem_a_rhs(p)));
            ++checked_bounds;
        }
    }
    EXPECT_GT(checked_bounds, 100);
}
