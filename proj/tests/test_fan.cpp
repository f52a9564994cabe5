#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fan_isomorphism.hpp"
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

Fan p2_fan() {
    return make_fan(2, {iv({1, 0}), iv({0, 1}), iv({-1, -1})}, {{0, 1}, {1, 2}, {2, 0}});
}

Fan p123_fan() { return bunch_to_fan(p123()); }

ProjectedCone random_pc(std::mt19937_64& rng, std::size_t e, std::size_t k) {
    std::uniform_int_distribution<int> entry(-2, 2);
    for (;;) {
        IntMatrix q(k, e);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < e; ++j) q.at(i, j) = entry(rng);
        if (!is_surjective(q)) continue;
        std::vector<RatVector> gamma;
        for (std::size_t i = 0; i < e; ++i) {
            RatVector v(e, Rat(0));
            v[i] = 1;
            gamma.push_back(v);
        }
        return ProjectedCone(q, gamma);
    }
}

}  // namespace

TEST_CASE("fan validation") {
    CHECK_THROWS_AS(make_fan(2, {iv({2, 0})}, {{0}}), InvalidFan);          // not primitive
    CHECK_THROWS_AS(make_fan(2, {iv({1, 0}), iv({0, 1})}, {{0}}), InvalidFan);  // unused ray
    // Overlapping 2-cones are no fan.
    CHECK_THROWS_AS(make_fan(2, {iv({1, 0}), iv({0, 1}), iv({1, 1}), iv({1, -1})},
                             {{0, 1}, {2, 3}}),
                    InvalidFan);
    // A redundant generator is not an extreme ray.
    CHECK_THROWS_AS(make_fan(2, {iv({1, 0}), iv({0, 1}), iv({1, 1})}, {{0, 1, 2}}), InvalidFan);
    CHECK_NOTHROW(p2_fan());
}

TEST_CASE("the weighted projective bunch unpacks to its fan") {
    Fan f = p123_fan();
    CHECK(f.n_rank == 2);
    REQUIRE(f.rays.size() == 3);
    CHECK(f.max_cones.size() == 3);
    // All three ray pairs appear as maximal cones.
    std::set<std::vector<std::size_t>> mc(f.max_cones.begin(), f.max_cones.end());
    CHECK(mc == std::set<std::vector<std::size_t>>{{0, 1}, {0, 2}, {1, 2}});

    // Up to one unimodular change of basis the rays are e1, e2, -2e1-3e2.
    std::vector<IntVector> target{iv({1, 0}), iv({0, 1}), iv({-2, -3})};
    bool matched = false;
    for (int a = -4; a <= 4 && !matched; ++a)
        for (int b = -4; b <= 4 && !matched; ++b)
            for (int c = -4; c <= 4 && !matched; ++c)
                for (int d = -4; d <= 4 && !matched; ++d) {
                    if (a * d - b * c != 1 && a * d - b * c != -1) continue;
                    std::multiset<IntVector> mapped;
                    for (const IntVector& r : f.rays)
                        mapped.insert(iv({a * int(r[0].convert_to<long>()) +
                                              b * int(r[1].convert_to<long>()),
                                          c * int(r[0].convert_to<long>()) +
                                              d * int(r[1].convert_to<long>())}));
                    if (mapped == std::multiset<IntVector>(target.begin(), target.end()))
                        matched = true;
                }
    CHECK(matched);

    // The weights annihilate the rays: sum of w_i * v_i = 0 with (1,2,3)
    // attached by the opposite-ray pairing.
    auto [fan2, r] = quotient_fan(bunch_to_projectable_fan(p123()));
    CHECK(fan2 == f);
}

TEST_CASE("functor duality on the named examples") {
    for (const Bunch& b : {p123(), p1xp1(), oda()}) {
        ProjectableFan pf = bunch_to_projectable_fan(b);
        CHECK(is_projectable(pf));
        CHECK(is_maximal_projectable(pf));
        Bunch back = projectable_fan_to_bunch(pf);
        CHECK(back == b);
        CHECK(bunch_to_projectable_fan(back) == pf);
    }
}

TEST_CASE("the non-maximal projectable fan is rejected and its completion maps back") {
    // (F -> P N, delta): P(v) = (v1 - v3, v2 - v3), delta the orthant.
    ProjectedCone dual_side(IntMatrix{{1, 0, -1}, {0, 1, -1}},
                            {RatVector{Rat(1), Rat(0), Rat(0)}, RatVector{Rat(0), Rat(1), Rat(0)},
                             RatVector{Rat(0), Rat(0), Rat(1)}});
    ProjectedCone pc = dual_side.dualize();
    CHECK(pc.q() == IntMatrix{{1, 1, 1}});

    ProjectableFan sigma{pc, {{0, 1}, {0, 2}}};
    CHECK(is_projectable(sigma));
    CHECK_FALSE(is_maximal_projectable(sigma));
    CHECK_THROWS_AS(projectable_fan_to_bunch(sigma), NotMaximal);

    ProjectableFan sigma_prime{pc, {{0, 1}, {0, 2}, {1, 2}}};
    CHECK(is_maximal_projectable(sigma_prime));
    Bunch theta = projectable_fan_to_bunch(sigma_prime);
    REQUIRE(theta.elements().size() == 1);
    CHECK(theta.elements()[0].cone == Cone::positive_orthant(1));

    // Quotient: the plane fan with three maximal cones (the projective
    // plane for weights (1,1,1)).
    auto [fan, r] = quotient_fan(sigma_prime);
    CHECK(fan == p2_fan());
}

TEST_CASE("quotient fan divides out the minimal cone") {
    // Q: (u1,u2) -> u1+u2 with the trivial bunch {0}; the projected
    // quasifan is the whole line, the quotient lives in rank 0.
    IntMatrix q{{1, 1}};
    ProjectedCone pc(q, {RatVector{Rat(1), Rat(0)}, RatVector{Rat(0), Rat(1)}});
    Bunch b(pc, {Cone::zero(1)});
    ProjectableFan pf = bunch_to_projectable_fan(b);
    auto [fan, r] = quotient_fan(pf);
    CHECK(fan.n_rank == 0);
    CHECK(fan.rays.empty());
    REQUIRE(fan.max_cones.size() == 1);
    CHECK(fan.max_cones[0].empty());
    CHECK(r.rows() == 0);
}

TEST_CASE("functor duality on enumerated random bunches") {
    std::mt19937_64 rng(60902);
    int bunches_checked = 0;
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t e = 3 + trial % 3;
        std::size_t k = 1 + trial % 3;
        if (k >= e) k = e - 1;
        ProjectedCone pc = random_pc(rng, e, k);
        for (const Bunch& b : enumerate_bunches(pc, 64)) {
            ProjectableFan pf = bunch_to_projectable_fan(b);
            Bunch back = projectable_fan_to_bunch(pf);  // checks maximality
            CHECK(back == b);
            CHECK(bunch_to_projectable_fan(back) == pf);
            ++bunches_checked;
        }
    }
    CHECK(bunches_checked > 20);
}

TEST_CASE("all fan cones via the order-reversing bijection") {
    Bunch b = p123();
    auto cones = all_fan_cones(b);
    // A complete fan in rank 2 with 3 maximal cones: 1 + 3 + 3 cones.
    CHECK(cones.size() == 7);
    Fan f = p123_fan();
    std::set<Cone> set_cones(cones.begin(), cones.end());
    for (std::size_t i = 0; i < f.max_cones.size(); ++i)
        CHECK(set_cones.count(f.cone_of(i)) == 1);
    CHECK(set_cones.count(Cone::zero(2)) == 1);
}

TEST_CASE("fan to bunch: the intro example round trip") {
    Bunch b = fan_to_bunch(p123_fan());
    CHECK(is_standard(b));
    CHECK(is_free(b));
    auto iso = free_bunch_isomorphic(b, p123());
    CHECK(iso.has_value());
    CHECK(toric_tests::fans_isomorphic(bunch_to_fan(b), p123_fan()));
}

TEST_CASE("fan to bunch: the projective line") {
    Fan p1 = make_fan(1, {iv({1}), iv({-1})}, {{0}, {1}});
    Bunch b = fan_to_bunch(p1);
    auto weights = weight_vectors(b);
    CHECK(weights == std::vector<IntVector>{iv({1}), iv({1})});
    REQUIRE(b.elements().size() == 1);
    CHECK(b.elements()[0].cone == Cone::positive_orthant(1));
    CHECK(toric_tests::fans_isomorphic(bunch_to_fan(b), p1));
}

TEST_CASE("fan to bunch with torsion in the ray map") {
    // Rays (1,0),(-1,0),(1,2),(-1,-2): the ray map has cokernel Z/2, so
    // the reduced construction must refine the lattice.
    Fan f = make_fan(2, {iv({1, 0}), iv({-1, 0}), iv({1, 2}), iv({-1, -2})},
                     {{0, 2}, {1, 2}, {1, 3}, {0, 3}});
    Bunch b = fan_to_bunch(f);
    CHECK(is_standard(b));
    CHECK_FALSE(is_free(b));
    CHECK(toric_tests::fans_isomorphic(bunch_to_fan(b), f));
}

TEST_CASE("degenerate fans are rejected") {
    Fan half = make_fan(2, {iv({1, 0})}, {{0}});
    CHECK_THROWS_AS(fan_to_bunch(half), Degenerate);
}

TEST_CASE("fan oracles on the named fans") {
    FanOracles p123o = fan_oracles(p123_fan());
    CHECK(p123o.simplicial);
    CHECK_FALSE(p123o.smooth);
    CHECK(p123o.complete);
    CHECK(p123o.quasiprojective);
    CHECK(p123o.nondegenerate);
    CHECK(p123o.two_complete);

    FanOracles p2o = fan_oracles(p2_fan());
    CHECK(p2o.smooth);
    CHECK(p2o.complete);
    CHECK(p2o.quasiprojective);

    // A single orthant: affine space.
    Fan orthant = make_fan(2, {iv({1, 0}), iv({0, 1})}, {{0, 1}});
    FanOracles ao = fan_oracles(orthant);
    CHECK_FALSE(ao.complete);
    CHECK(ao.quasiprojective);
    CHECK(ao.two_complete);
    CHECK(ao.smooth);

    // The projective plane missing one maximal cone is not 2-complete.
    Fan punctured = make_fan(2, {iv({1, 0}), iv({0, 1}), iv({-1, -1})}, {{0, 1}, {1, 2}});
    FanOracles po = fan_oracles(punctured);
    CHECK_FALSE(po.two_complete);
    CHECK_FALSE(po.complete);

    // The Oda fan: complete, simplicial, not quasiprojective.
    Fan oda_fan = bunch_to_fan(oda());
    CHECK(oda_fan.rays.size() == 6);
    CHECK(oda_fan.max_cones.size() == 8);
    FanOracles oo = fan_oracles(oda_fan);
    CHECK(oo.simplicial);
    CHECK(oo.complete);
    CHECK_FALSE(oo.quasiprojective);
    CHECK(oo.two_complete);
}

TEST_CASE("universal reduced Cox construction") {
    // Smooth fans: the universal construction is the plain Cox lift.
    Fan p2 = p2_fan();
    auto [side_p2, pf_p2] = universal_reduced_cox(p2);
    IntMatrix c2(2, 3);
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < 2; ++i) c2.at(i, j) = p2.rays[j][i];
    CHECK(side_p2.q() == c2);  // smooth: the plain Cox construction
    CHECK(side_p2.delta_cone() == Cone::positive_orthant(3));

    Fan p1 = make_fan(1, {iv({1}), iv({-1})}, {{0}, {1}});
    auto [side_p1, pf_p1] = universal_reduced_cox(p1);
    IntMatrix c1(1, 2);
    for (std::size_t j = 0; j < 2; ++j) c1.at(0, j) = p1.rays[j][0];
    CHECK(side_p1.q() == c1);

    // Weighted projective space: a strictly finer lattice, with each
    // maximal cone mapping isomorphically (verified inside).
    Fan w = p123_fan();
    auto [side_w, pf_w] = universal_reduced_cox(w);
    CHECK(side_w.e_rank() == 3);
    // F strictly contains Z^3: some canonical base vector of Z^3 has
    // non-primitive coordinates in F, i.e. delta is no longer regular.
    CHECK_FALSE(side_w.delta_cone().is_regular());

    // Nonsimplicial input is rejected.
    Fan prism = make_fan(
        3,
        {iv({1, 0, 1}), iv({0, 1, 1}), iv({-1, -1, 1}), iv({1, 0, -1}), iv({0, 1, -1}),
         iv({-1, -1, -1})},
        {{0, 1, 2}, {3, 4, 5}, {0, 1, 3, 4}, {1, 2, 4, 5}, {0, 2, 3, 5}});
    CHECK_THROWS_AS(universal_reduced_cox(prism), NotSimplicial);
}

TEST_CASE("eikelberg prisms are valid fans and convert") {
    Fan delta = make_fan(
        3,
        {iv({1, 0, 1}), iv({0, 1, 1}), iv({-1, -1, 1}), iv({1, 0, -1}), iv({0, 1, -1}),
         iv({-1, -1, -1})},
        {{0, 1, 2}, {3, 4, 5}, {0, 1, 3, 4}, {1, 2, 4, 5}, {0, 2, 3, 5}});
    Bunch b = fan_to_bunch(delta);
    CHECK(is_standard(b));
    CHECK(b.k_rank() == 3);

    Fan delta_prime = make_fan(
        3,
        {iv({1, 0, 1}), iv({1, 2, 3}), iv({-1, -1, 1}), iv({1, 0, -1}), iv({0, 1, -1}),
         iv({-1, -1, -1})},
        {{0, 1, 2}, {3, 4, 5}, {0, 1, 3, 4}, {1, 2, 4, 5}, {0, 2, 3, 5}});
    Bunch bp = fan_to_bunch(delta_prime);
    CHECK(is_standard(bp));
}
