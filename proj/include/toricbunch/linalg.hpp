#ifndef TORICBUNCH_LINALG_HPP
#define TORICBUNCH_LINALG_HPP

#include <optional>
#include <vector>

#include "toricbunch/int_matrix.hpp"
#include "toricbunch/rational.hpp"

namespace toric {

// A sublattice of Z^ambient, represented by a basis whose rows are
// linearly independent lattice vectors.  Bases produced by this module are
// in row Hermite normal form, so equal lattices compare equal.
struct Sublattice {
    std::size_t ambient = 0;
    IntMatrix basis;  // rank x ambient

    std::size_t rank() const { return basis.rows(); }
    bool operator==(const Sublattice& o) const {
        return ambient == o.ambient && basis == o.basis;
    }
};

struct HnfResult {
    IntMatrix h;  // row Hermite normal form of m
    IntMatrix u;  // unimodular, h = u * m
};

struct SnfResult {
    IntMatrix s;  // diagonal, each entry divides the next
    IntMatrix u;  // unimodular, s = u * m * v
    IntMatrix v;
};

// Row-style Hermite normal form: pivots positive, entries above a pivot
// reduced into [0, pivot), zero rows at the bottom.  The transform u is
// unimodular with h = u * m.  This is the canonical form used everywhere a
// basis or section has to be chosen deterministically.
HnfResult hnf(const IntMatrix& m);

// Smith normal form s = u * m * v with divisibility d1 | d2 | ... and all
// diagonal entries nonnegative.
SnfResult snf(const IntMatrix& m);

// Elementary divisors of m (the nonzero diagonal of its Smith form).
std::vector<Int> elementary_divisors(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);
std::size_t rank(const std::vector<RatVector>& rows);

// Basis of the saturated lattice {x in Z^cols : m * x = 0}, rows in HNF.
Sublattice kernel_basis(const IntMatrix& m);

// True iff m maps Z^cols onto Z^rows.
bool is_surjective(const IntMatrix& m);

// Smallest saturated sublattice containing s: lin(s) intersected with the
// ambient lattice.
Sublattice saturate(const Sublattice& s);
bool is_primitive(const Sublattice& s);

// Index [saturate(s) : s], a positive integer (product of the elementary
// divisors of the basis).
Int saturation_index(const Sublattice& s);

// Deterministic basis (HNF, denominators cleared per row) of the
// intersection of rational subspaces, each given by spanning rows.
std::vector<RatVector> subspace_intersection(const std::vector<std::vector<RatVector>>& spaces,
                                             std::size_t ambient);

// Intersection of integral sublattices of a common Z^ambient.
Sublattice lattice_intersection(const std::vector<Sublattice>& lattices, std::size_t ambient);

// Lattice spanned by integer rows, basis in HNF (zero rows dropped).
Sublattice lattice_from_rows(const std::vector<IntVector>& rows, std::size_t ambient);

// Annihilator {y : y . x = 0 for all x in the row span}, saturated, HNF.
Sublattice annihilator(const std::vector<RatVector>& rows, std::size_t ambient);

bool subspace_contains(const std::vector<RatVector>& basis, const RatVector& v);
bool lattice_contains(const Sublattice& s, const IntVector& v);

// Particular rational solution of m * x = b, if one exists.
std::optional<RatVector> solve_rational(const IntMatrix& m, const RatVector& b);

// Integral solution of m * x = b, if one exists.
std::optional<IntVector> solve_integral(const IntMatrix& m, const IntVector& b);

// Determinant of a square matrix (fraction-free Gaussian elimination).
Int determinant(const IntMatrix& m);

// Clears denominators of a rational row to a primitive integer row.
IntMatrix rows_to_int_matrix(const std::vector<RatVector>& rows, std::size_t ambient);

}  // namespace toric

#endif
