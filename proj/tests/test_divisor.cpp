#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toricbunch/divisor.hpp"
#include "toricbunch/errors.hpp"
#include "toricbunch/fan.hpp"

using namespace toric;

namespace {

IntVector iv(std::initializer_list<int> xs) {
    IntVector v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

Bunch p123() {
    return bunch_from_weights(WeightSystem{1, {iv({1}), iv({2}), iv({3})}}, {{0, 1, 2}});
}

Bunch p1xp1() {
    return bunch_from_weights(WeightSystem{2, {iv({1, 0}), iv({1, 0}), iv({0, 1}), iv({0, 1})}},
                              {{0, 2}});
}

Bunch oda() {
    WeightSystem ws{3,
                    {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1}), iv({1, 1, 0}), iv({1, 0, 1}),
                     iv({0, 1, 1})}};
    return bunch_from_weights(ws, {{2, 3, 4}, {0, 3, 5}, {1, 4, 5}, {3, 4, 5}});
}

}  // namespace

TEST_CASE("class groups") {
    auto [r1, t1] = class_group(p123());
    CHECK(r1 == 1);
    CHECK(t1.empty());

    auto [r2, t2] = class_group(p1xp1());
    CHECK(r2 == 2);
    CHECK(t2.empty());

    // A fan whose ray map has cokernel Z/2.
    Fan f = make_fan(2, {iv({1, 0}), iv({-1, 0}), iv({1, 2}), iv({-1, -2})},
                     {{0, 2}, {1, 2}, {1, 3}, {0, 3}});
    auto [r3, t3] = class_group(fan_to_bunch(f));
    CHECK(r3 == 2);
    REQUIRE(t3.size() == 1);
    CHECK(t3[0] == 2);
}

TEST_CASE("rational Picard group and the ample cone of the intro example") {
    Bunch b = p123();
    CHECK(pic_q(b).size() == 1);
    CHECK(semiample_cone(b) == Cone::positive_orthant(1));
    CHECK(is_ample(b, RatVector{Rat(1)}));
    CHECK_FALSE(is_ample(b, RatVector{Rat(0)}));
    CHECK(ample_nonempty(b));
}

TEST_CASE("semiample cone of the nonprojective example is the anticanonical ray") {
    Bunch b = oda();
    Cone sa = semiample_cone(b);
    CHECK(sa ==
          Cone::from_generators(3, {RatVector{Rat(1), Rat(1), Rat(1)}}));
    CHECK_FALSE(ample_nonempty(b));

    // The anticanonical class spans that ray.
    IntVector k = canonical_class(b);
    CHECK(k == iv({-3, -3, -3}));
    RatVector anti{Rat(3), Rat(3), Rat(3)};
    CHECK(sa.contains(anti));
}

TEST_CASE("betti numbers of the prism pair differ") {
    Fan delta = make_fan(
        3,
        {iv({1, 0, 1}), iv({0, 1, 1}), iv({-1, -1, 1}), iv({1, 0, -1}), iv({0, 1, -1}),
         iv({-1, -1, -1})},
        {{0, 1, 2}, {3, 4, 5}, {0, 1, 3, 4}, {1, 2, 4, 5}, {0, 2, 3, 5}});
    Fan delta_prime = make_fan(
        3,
        {iv({1, 0, 1}), iv({1, 2, 3}), iv({-1, -1, 1}), iv({1, 0, -1}), iv({0, 1, -1}),
         iv({-1, -1, -1})},
        {{0, 1, 2}, {3, 4, 5}, {0, 1, 3, 4}, {1, 2, 4, 5}, {0, 2, 3, 5}});
    CHECK(b2(fan_to_bunch(delta)) == 1);
    CHECK(b2(fan_to_bunch(delta_prime)) == 0);
}

TEST_CASE("Picard lattices") {
    // 1Z meet 2Z meet 3Z = 6Z inside Cl = Z.
    Sublattice pic = pic_lattice_free(p123());
    CHECK(pic.basis == IntMatrix{{6}});

    CHECK(pic_lattice_free(p1xp1()).basis == IntMatrix::identity(2));

    // Simple bunches have Pic = K.
    Bunch q = p1xp1();
    REQUIRE(is_simple(q));
    CHECK(pic_lattice_free(q).basis == IntMatrix::identity(2));
}

TEST_CASE("canonical class, Gorenstein and Fano for the intro example") {
    Bunch b = p123();
    CHECK(canonical_class(b) == iv({-6}));
    CHECK(is_q_gorenstein(b));
    CHECK(is_fano(b));  // 6 lies in 6Z and in the open half line
}

TEST_CASE("Fano for Hirzebruch-type bunches") {
    // Weights (1,0) x2, (1,1), (0,1); nef cone spanned by (1,0),(1,1).
    Bunch f1 = bunch_from_weights(
        WeightSystem{2, {iv({1, 0}), iv({1, 0}), iv({1, 1}), iv({0, 1})}}, {{0, 2}});
    CHECK(dictionary(f1).smooth);
    CHECK(is_fano(f1));  // anticanonical (3,2) strictly inside

    // Weights (1,0) x2, (2,1), (0,1): anticanonical (4,2) sits on the
    // boundary ray (2,1).
    Bunch f2 = bunch_from_weights(
        WeightSystem{2, {iv({1, 0}), iv({1, 0}), iv({2, 1}), iv({0, 1})}}, {{0, 2}});
    CHECK(dictionary(f2).smooth);
    CHECK_FALSE(is_fano(f2));
    CHECK(is_q_gorenstein(f2));
}

TEST_CASE("experimental covering-interiors Fano reading agrees on the samples") {
    Bunch f1 = bunch_from_weights(
        WeightSystem{2, {iv({1, 0}), iv({1, 0}), iv({1, 1}), iv({0, 1})}}, {{0, 2}});
    Bunch f2 = bunch_from_weights(
        WeightSystem{2, {iv({1, 0}), iv({1, 0}), iv({2, 1}), iv({0, 1})}}, {{0, 2}});
    for (const Bunch& b : {p123(), p1xp1(), f1, f2})
        CHECK(is_fano_interior_reading(b) == is_fano(b));
}

TEST_CASE("Mori cones and projectivity") {
    Cone m1 = mori_cone(p123());
    CHECK(m1 == Cone::positive_orthant(1));
    CHECK(is_projective_simplicial(p123()));

    CHECK(mori_cone(p1xp1()) == Cone::positive_orthant(2));
    CHECK(is_projective_simplicial(p1xp1()));

    Cone mo = mori_cone(oda());
    CHECK_FALSE(mo.is_strictly_convex());
    CHECK_FALSE(is_projective_simplicial(oda()));

    // Hypothesis check: a non-geometric bunch is rejected.
    Bunch ray = bunch_from_weights(WeightSystem{2, {iv({1, 0}), iv({0, 1})}}, {{0}});
    CHECK_THROWS_AS(mori_cone(ray), std::exception);
}

TEST_CASE("duality consistency across the three routes") {
    for (const Bunch& b : {p123(), p1xp1(), oda()}) {
        bool amp = ample_nonempty(b);
        CHECK(mori_cone(b).is_strictly_convex() == amp);
        CHECK(fan_oracles(bunch_to_fan(b)).quasiprojective == amp);
    }
}

TEST_CASE("ample membership implies semiample membership") {
    for (const Bunch& b : {p123(), p1xp1(), oda()}) {
        Cone sa = semiample_cone(b);
        RatVector z = sa.relint_point();
        if (is_ample(b, z)) CHECK(sa.contains(z));
        // Semiample cone lies in the rational Picard subspace.
        auto basis = pic_q(b);
        for (const IntVector& r : sa.rays()) CHECK(subspace_contains(basis, rat_vector(r)));
    }
}

TEST_CASE("Q-factorial quasiprojective bunches have full rational Picard group") {
    for (const Bunch& b : {p123(), p1xp1()}) {
        REQUIRE(dictionary(b).q_factorial);
        REQUIRE(ample_nonempty(b));
        CHECK(pic_q(b).size() == b.k_rank());
    }
}

TEST_CASE("b2 is basis independent through conversion round trips") {
    for (const Bunch& b : {p123(), p1xp1(), oda()}) {
        Bunch back = fan_to_bunch(bunch_to_fan(b));
        CHECK(b2(back) == b2(b));
        CHECK(semiample_cone(back).rays().size() == semiample_cone(b).rays().size());
    }
}

TEST_CASE("divisor report aggregates consistently") {
    DivisorClassReport r = divisor_report(p123());
    CHECK(r.cl_rank == 1);
    CHECK(r.cl_torsion.empty());
    CHECK(r.betti2 == 1);
    CHECK(r.ample_nonempty);
    REQUIRE(r.canonical.has_value());
    CHECK(*r.canonical == iv({-6}));
    REQUIRE(r.fano.has_value());
    CHECK(*r.fano);
    REQUIRE(r.mori.has_value());
}
