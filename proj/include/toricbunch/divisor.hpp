#ifndef TORICBUNCH_DIVISOR_HPP
#define TORICBUNCH_DIVISOR_HPP

#include <optional>
#include <utility>
#include <vector>

#include "toricbunch/bunch.hpp"

namespace toric {

// Divisor class group of the associated variety: rank of K, plus the
// torsion of the cokernel of the ray map of the quotient fan (empty for
// free bunches).
std::pair<std::size_t, std::vector<Int>> class_group(const Bunch& b);

// Subspace of rational Cartier classes: the intersection of the linear
// spans of the elements, inside K_Q.
std::vector<RatVector> pic_q(const Bunch& b);

// Intersection of the elements: the cone of semiample classes.
Cone semiample_cone(const Bunch& b);

// w lies in every element's relative interior.
bool is_ample(const Bunch& b, const RatVector& w);

// The ample cone (intersection of the relative interiors) is nonempty.
bool ample_nonempty(const Bunch& b);

// Picard lattice of a free standard bunch: the literal intersection of the
// image lattices Q(lin(gamma0) meet E) over the covering collection.
Sublattice pic_lattice_free(const Bunch& b);

// Class of a canonical divisor: minus the sum of all weight vectors.
IntVector canonical_class(const Bunch& b);

// Some multiple of the anticanonical class is Cartier.
bool is_q_gorenstein(const Bunch& b);

// The anticanonical class is Cartier and ample.  Smooth bunches use the
// ample-membership shortcut.
bool is_fano(const Bunch& b);

// Experimental covering-interiors reading of the Fano criterion: the
// anticanonical class lies, for every covering face, in the relative
// interior of its image cone and in its image lattice.  is_fano is the
// authoritative test; this predicate exists for comparison.
bool is_fano_interior_reading(const Bunch& b);

// Mori cone: the Minkowski sum of the dual cones of the elements, living
// in the dual space of K_Q.  Requires a complete geometric bunch.
Cone mori_cone(const Bunch& b);

// Projectivity of a complete geometric bunch: strict convexity of the
// Mori cone.
bool is_projective_simplicial(const Bunch& b);

std::size_t b2(const Bunch& b);

struct DivisorClassReport {
    std::size_t cl_rank = 0;
    std::vector<Int> cl_torsion;
    std::vector<RatVector> pic_q_basis;
    Cone semiample;
    bool ample_nonempty = false;
    std::optional<Cone> mori;                  // complete geometric bunches
    std::optional<IntVector> canonical;        // free bunches
    std::optional<bool> q_gorenstein;          // free bunches
    std::optional<bool> fano;                  // free bunches
    std::size_t betti2 = 0;

    DivisorClassReport() : semiample(Cone::zero(0)) {}
};

DivisorClassReport divisor_report(const Bunch& b);

}  // namespace toric

#endif
