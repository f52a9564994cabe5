#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toricbunch/divisor.hpp"
#include "toricbunch/errors.hpp"
#include "toricbunch/fan.hpp"
#include "toricbunch/kleinschmidt.hpp"

using namespace toric;

namespace {

KleinschmidtData kd(std::initializer_list<int> b, std::initializer_list<int> mu) {
    KleinschmidtData d;
    for (int x : b) d.b.emplace_back(x);
    for (int x : mu) d.mu.emplace_back(x);
    return d;
}

}  // namespace

TEST_CASE("parameter validation") {
    CHECK_NOTHROW(validate(kd({0}, {2, 2})));
    CHECK_THROWS_AS(validate(kd({0}, {1, 2})), InvalidParameters);   // mu_1 > 1 violated
    CHECK_THROWS_AS(validate(kd({0}, {3, 1})), InvalidParameters);   // tail sum must exceed 1
    CHECK_THROWS_AS(validate(kd({1}, {2, 2})), InvalidParameters);   // b_n must be 0
    CHECK_THROWS_AS(validate(kd({1, 1, 0}, {2, 1, 1, 1})), InvalidParameters);  // not strict
}

TEST_CASE("the square datum gives the product of two lines") {
    Bunch b = kleinschmidt_to_bunch(kd({0}, {2, 2}));
    CHECK(is_free(b));
    CHECK(is_standard(b));
    DictionaryReport r = dictionary(b);
    CHECK(r.smooth);
    CHECK(r.complete);
    CHECK(ample_nonempty(b));
    CHECK(kleinschmidt_is_fano(kd({0}, {2, 2})));
    auto [rank, torsion] = class_group(b);
    CHECK(rank == 2);
    CHECK(torsion.empty());
    CHECK(b.pc().e_rank() - b.k_rank() == 2);  // a surface
}

TEST_CASE("first Hirzebruch-type datum is smooth projective Fano") {
    KleinschmidtData f1 = kd({1, 0}, {2, 1, 1});
    Bunch b = kleinschmidt_to_bunch(f1);
    DictionaryReport r = dictionary(b);
    CHECK(r.smooth);
    CHECK(r.complete);
    CHECK(ample_nonempty(b));
    CHECK(kleinschmidt_is_fano(f1));
    CHECK(kleinschmidt_inequality_literal(f1));
}

TEST_CASE("second Hirzebruch-type datum is not Fano") {
    KleinschmidtData f2 = kd({2, 0}, {2, 1, 1});
    Bunch b = kleinschmidt_to_bunch(f2);
    CHECK(dictionary(b).smooth);
    CHECK(ample_nonempty(b));
    CHECK_FALSE(kleinschmidt_is_fano(f2));
    // The printed inequality under the literal pairing disagrees here;
    // that is exactly the documented diagnostic.
    CHECK(kleinschmidt_inequality_literal(f2) != kleinschmidt_is_fano(f2));
}

TEST_CASE("enumeration for surfaces") {
    auto list = enumerate_kleinschmidt(2, 2);
    REQUIRE(list.size() == 3);
    CHECK(list[0].mu == std::vector<Int>{2, 2});
    CHECK(list[1].b == std::vector<Int>{1, 0});
    CHECK(list[1].mu == std::vector<Int>{2, 1, 1});
    CHECK(list[2].b == std::vector<Int>{2, 0});
    CHECK(list[2].mu == std::vector<Int>{2, 1, 1});

    auto only_square = enumerate_kleinschmidt(2, 0);
    REQUIRE(only_square.size() == 1);
    CHECK(only_square[0].mu == std::vector<Int>{2, 2});
}

TEST_CASE("enumeration dedups isomorphic weight systems") {
    // In dimension 3 the data (mu = (3,2)) and (mu = (2,3)) swap under the
    // coordinate exchange of K; only one survives.
    auto list = enumerate_kleinschmidt(3, 1);
    std::size_t n2 = 0;
    for (const auto& d : list)
        if (d.n() == 2) ++n2;
    CHECK(n2 == 1);
}

TEST_CASE("every enumerated datum is smooth, complete and projective") {
    for (std::size_t dim = 2; dim <= 3; ++dim)
        for (const auto& d : enumerate_kleinschmidt(dim, 2)) {
            Bunch b = kleinschmidt_to_bunch(d);
            DictionaryReport r = dictionary(b);
            CHECK(r.smooth);
            CHECK(r.complete);
            CHECK(ample_nonempty(b));
            CHECK(is_projective_simplicial(b));
            CHECK(d.dimension() == Int(dim));
        }
}

TEST_CASE("canonical extension") {
    Bunch square = kleinschmidt_to_bunch(kd({0}, {2, 2}));
    Bunch ext = canonical_extension(square, {Int(3), Int(3)});
    CHECK(ext.pc().e_rank() == 6);
    CHECK(ext.k_rank() == 2);
    CHECK(ext.element_cones() == square.element_cones());
    DictionaryReport r = dictionary(ext);
    CHECK(r.smooth);
    CHECK(r.complete);
    CHECK(ample_nonempty(ext));
    auto [rank, torsion] = class_group(ext);
    CHECK(rank == 2);

    // The identity extension returns an equal bunch.
    Bunch same = canonical_extension(square, {Int(2), Int(2)});
    CHECK(same == square);

    CHECK_THROWS_AS(canonical_extension(square, {Int(1), Int(2)}), MultiplicityDecrease);
}

TEST_CASE("extension preserves the divisor cones verbatim") {
    Bunch square = kleinschmidt_to_bunch(kd({0}, {2, 2}));
    Bunch ext = canonical_extension(square, {Int(4), Int(2)});
    CHECK(semiample_cone(ext) == semiample_cone(square));
    CHECK(pic_q(ext) == pic_q(square));
    CHECK(mori_cone(ext) == mori_cone(square));
}
