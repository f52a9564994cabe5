#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "toricbunch/linalg.hpp"

using namespace toric;

namespace {

bool is_row_hnf(const IntMatrix& h) {
    // Pivots positive, strictly right-moving, entries above a pivot in
    // [0, pivot), zero rows trailing.
    long last_pivot = -1;
    bool seen_zero_row = false;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        std::size_t p = 0;
        while (p < h.cols() && h.at(i, p) == 0) ++p;
        if (p == h.cols()) { seen_zero_row = true; continue; }
        if (seen_zero_row) return false;
        if (static_cast<long>(p) <= last_pivot) return false;
        last_pivot = static_cast<long>(p);
        if (h.at(i, p) <= 0) return false;
        for (std::size_t k = 0; k < i; ++k)
            if (h.at(k, p) < 0 || h.at(k, p) >= h.at(i, p)) return false;
    }
    return true;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = d(rng);
    return m;
}

}  // namespace

TEST_CASE("hnf identity and single-row cases") {
    IntMatrix id = IntMatrix::identity(3);
    auto r = hnf(id);
    CHECK(r.h == id);
    CHECK(r.u == id);

    IntMatrix row{{1, 2, 3}};
    auto r2 = hnf(row);
    CHECK(r2.h == row);
    CHECK(r2.u == IntMatrix::identity(1));
}

TEST_CASE("hnf of [[2,4],[1,3]] against brute-force unimodular search") {
    IntMatrix m{{2, 4}, {1, 3}};
    auto r = hnf(m);
    CHECK(r.u * m == r.h);
    Int du = determinant(r.u);
    CHECK((du == 1 || du == -1));
    CHECK(is_row_hnf(r.h));

    // Independent oracle: search all unimodular u with small entries for
    // one putting m into HNF shape; HNF is unique, so the forms must agree.
    bool found = false;
    IntMatrix expected(2, 2);
    for (int a = -4; a <= 4 && !found; ++a)
        for (int b = -4; b <= 4 && !found; ++b)
            for (int c = -4; c <= 4 && !found; ++c)
                for (int d = -4; d <= 4 && !found; ++d) {
                    if (a * d - b * c != 1 && a * d - b * c != -1) continue;
                    IntMatrix u{{a, b}, {c, d}};
                    IntMatrix h = u * m;
                    if (is_row_hnf(h) && rank(h) == rank(m)) {
                        expected = h;
                        found = true;
                    }
                }
    REQUIRE(found);
    CHECK(r.h == expected);
}

TEST_CASE("hnf randomized: transform unimodular, form canonical") {
    std::mt19937_64 rng(20240401);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + trial % 5, cols = 1 + (trial / 3) % 5;
        IntMatrix m = random_matrix(rng, rows, cols, -9, 9);
        auto r = hnf(m);
        CHECK(r.u * m == r.h);
        Int du = determinant(r.u);
        CHECK((du == 1 || du == -1));
        CHECK(is_row_hnf(r.h));
        // Canonicity: same lattice from permuted rows gives the same HNF.
        if (rows >= 2) {
            IntMatrix p = m;
            p.swap_rows(0, rows - 1);
            CHECK(hnf(p).h == r.h);
        }
    }
}

TEST_CASE("snf basics") {
    IntMatrix z(2, 3);
    auto r = snf(z);
    CHECK(r.s == z);
    CHECK(r.u == IntMatrix::identity(2));
    CHECK(r.v == IntMatrix::identity(3));

    IntMatrix d{{2, 0}, {0, 3}};
    auto r2 = snf(d);
    // Elementary divisors of diag(2,3) by direct gcd/lcm computation.
    CHECK(r2.s.at(0, 0) == int_gcd(Int(2), Int(3)));
    CHECK(r2.s.at(1, 1) == int_lcm(Int(2), Int(3)));
    CHECK(r2.u * d * r2.v == r2.s);

    IntMatrix g{{1, 2, 3}};
    auto r3 = snf(g);
    CHECK(r3.s.at(0, 0) == 1);
}

TEST_CASE("snf randomized: transforms unimodular, chain divides") {
    std::mt19937_64 rng(987654);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + trial % 4, cols = 1 + (trial / 2) % 4;
        IntMatrix m = random_matrix(rng, rows, cols, -8, 8);
        auto r = snf(m);
        CHECK(r.u * m * r.v == r.s);
        Int du = determinant(r.u), dv = determinant(r.v);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        std::size_t t = std::min(rows, cols);
        for (std::size_t i = 0; i < t; ++i) {
            CHECK(r.s.at(i, i) >= 0);
            for (std::size_t j = 0; j < cols; ++j)
                if (j != i && j < t) CHECK(r.s.at(i, j) == 0);
            if (i + 1 < t && r.s.at(i, i) != 0 && r.s.at(i + 1, i + 1) != 0)
                CHECK(r.s.at(i + 1, i + 1) % r.s.at(i, i) == 0);
            if (i + 1 < t && r.s.at(i, i) == 0) CHECK(r.s.at(i + 1, i + 1) == 0);
        }
    }
}

TEST_CASE("kernel of the (1,2,3) weight map matches the intro data") {
    IntMatrix q{{1, 2, 3}};
    Sublattice k = kernel_basis(q);
    CHECK(k.rank() == 2);
    // Row-equivalent to {(-2,1,0),(-3,0,1)}: same lattice, i.e. same HNF.
    Sublattice paper = lattice_from_rows({{Int(-2), Int(1), Int(0)}, {Int(-3), Int(0), Int(1)}}, 3);
    CHECK(hnf(paper.basis).h == k.basis);
    // Kernel rows are annihilated by q.
    for (std::size_t i = 0; i < k.rank(); ++i) {
        IntVector v = k.basis.row(i);
        CHECK(q.apply(v)[0] == 0);
    }
}

TEST_CASE("kernel: identity and all-ones") {
    CHECK(kernel_basis(IntMatrix::identity(3)).rank() == 0);
    IntMatrix ones{{1, 1, 1, 1}};
    CHECK(kernel_basis(ones).rank() == 3);
}

TEST_CASE("kernel rank plus matrix rank is the column count") {
    std::mt19937_64 rng(13579);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = 1 + trial % 4, cols = 1 + (trial / 4) % 5;
        IntMatrix m = random_matrix(rng, rows, cols, -5, 5);
        CHECK(kernel_basis(m).rank() + rank(m) == cols);
    }
}

TEST_CASE("surjectivity") {
    CHECK(is_surjective(IntMatrix{{1, 2, 3}}));
    CHECK_FALSE(is_surjective(IntMatrix{{2, 4}}));
    CHECK(is_surjective(IntMatrix::identity(4)));
    CHECK_FALSE(is_surjective(IntMatrix{{1, 0}, {0, 2}}));
}

TEST_CASE("saturation") {
    Sublattice two{2, IntMatrix{{2, 0}}};
    Sublattice sat = saturate(two);
    CHECK(sat.basis == IntMatrix{{1, 0}});
    CHECK_FALSE(is_primitive(two));

    Sublattice diag{2, IntMatrix{{1, 1}}};
    CHECK(saturate(diag) == diag);
    CHECK(is_primitive(diag));

    // span{(2,1),(0,3)}: full rank with index |det| = 6.
    Sublattice ix{2, IntMatrix{{2, 1}, {0, 3}}};
    CHECK(saturate(ix).basis == IntMatrix::identity(2));
    CHECK_FALSE(is_primitive(ix));
    CHECK(saturation_index(ix) == 6);

    // Idempotence.
    CHECK(saturate(saturate(ix)) == saturate(ix));
}

TEST_CASE("subspace intersection") {
    RatVector e1{Rat(1), Rat(0)}, e2{Rat(0), Rat(1)};
    auto same = subspace_intersection({{e1}, {e1}}, 2);
    REQUIRE(same.size() == 1);
    CHECK(primitive(same[0]) == IntVector{Int(1), Int(0)});

    auto zero = subspace_intersection({{e1}, {e2}}, 2);
    CHECK(zero.empty());
}

TEST_CASE("lattice intersection: 2Z x Z meet Z x 3Z") {
    Sublattice a{2, IntMatrix{{2, 0}, {0, 1}}};
    Sublattice b{2, IntMatrix{{1, 0}, {0, 3}}};
    Sublattice meet = lattice_intersection({a, b}, 2);
    CHECK(meet.basis == IntMatrix{{2, 0}, {0, 3}});

    // Elementwise membership oracle on a small box.
    for (int x = -6; x <= 6; ++x)
        for (int y = -6; y <= 6; ++y) {
            IntVector v{Int(x), Int(y)};
            bool in_both = lattice_contains(a, v) && lattice_contains(b, v);
            CHECK(lattice_contains(meet, v) == in_both);
        }
}

TEST_CASE("solvers") {
    IntMatrix m{{1, 2}, {3, 4}};
    auto x = solve_rational(m, {Rat(5), Rat(6)});
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == RatVector{Rat(5), Rat(6)});

    IntMatrix sing{{1, 1}, {2, 2}};
    CHECK_FALSE(solve_rational(sing, {Rat(1), Rat(3)}).has_value());

    // 2x = 3 has no integral solution, x = (1,1) solves the second system.
    CHECK_FALSE(solve_integral(IntMatrix{{2}}, {Int(3)}).has_value());
    auto y = solve_integral(IntMatrix{{1, 2}, {0, 1}}, {Int(3), Int(1)});
    REQUIRE(y.has_value());
    CHECK((*y) == IntVector{Int(1), Int(1)});
}

TEST_CASE("determinism: equal inputs give bitwise-equal outputs") {
    std::mt19937_64 rng(24681357);
    for (int trial = 0; trial < 10; ++trial) {
        IntMatrix m = random_matrix(rng, 4, 4, -20, 20);
        auto a = hnf(m), b = hnf(m);
        CHECK(a.h == b.h);
        CHECK(a.u == b.u);
        auto sa = snf(m), sb = snf(m);
        CHECK(sa.s == sb.s);
        CHECK(sa.u == sb.u);
        CHECK(sa.v == sb.v);
    }
}
