#ifndef TORICBUNCH_FAN_HPP
#define TORICBUNCH_FAN_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "toricbunch/bunch.hpp"

namespace toric {

// A fan, stored by its primitive ray generators and maximal cones as ray
// index sets.  Construction canonicalizes (rays sorted, index sets
// remapped) and validates the fan axioms exactly, so equal fans compare
// structurally equal.
struct Fan {
    std::size_t n_rank = 0;
    std::vector<IntVector> rays;
    std::vector<std::vector<std::size_t>> max_cones;

    Cone cone_of(std::size_t max_index) const;
    bool operator==(const Fan& o) const {
        return n_rank == o.n_rank && rays == o.rays && max_cones == o.max_cones;
    }
};

// Validates: rays primitive and pairwise distinct, each maximal cone
// strictly convex with exactly its listed rays extreme, pairwise
// separating forms exist, no containments, no unused rays.
Fan make_fan(std::size_t n_rank, const std::vector<IntVector>& rays,
             const std::vector<std::vector<std::size_t>>& max_cones);

// A projectable fan: faces of delta (in the dual projected cone of pc),
// any two maximal ones separable by ker(P)-invariant forms.  Max faces are
// sets of delta-generator indices.
struct ProjectableFan {
    ProjectedCone pc;
    std::vector<FaceSet> max_faces;

    Cone delta_face(const FaceSet& t) const { return pc.star_cone(pc.complement(t)); }
    bool operator==(const ProjectableFan& o) const {
        return pc == o.pc && max_faces == o.max_faces;
    }
};

bool is_projectable(const ProjectableFan& pf);

// Every face of delta separable from all maximal cones already lies under
// one of them.
bool is_maximal_projectable(const ProjectableFan& pf);

// The contravariant functor from bunches to maximal projectable fans: max
// faces are the stars of the covering collection.
ProjectableFan bunch_to_projectable_fan(const Bunch& b);

// Inverse functor: minimal cones among the projected stars of the maximal
// cones.  Throws NotMaximal if the fan fails the maximality condition.
Bunch projectable_fan_to_bunch(const ProjectableFan& pf);

// Quotient fan: project the maximal cones through P, divide N by the
// primitive sublattice spanning the minimal cone, and primitivize.  Also
// returns the composed projection R: F -> N'.
std::pair<Fan, IntMatrix> quotient_fan(const ProjectableFan& pf);

// Composition: the fan of the toric variety of a standard bunch.
Fan bunch_to_fan(const Bunch& b);

// All cones of that fan, via the order-reversing bijection with the faces
// whose image interior swallows some element's interior.
std::vector<Cone> all_fan_cones(const Bunch& b);

// Reduced Cox construction: lift a nondegenerate fan to a projected cone
// (with a deterministic integral section when the ray map is not
// surjective) and dualize into a standard bunch.
Bunch fan_to_bunch(const Fan& f);

// Universal reduced Cox construction for simplicial fans with full-
// dimensional maximal cones: the lattice F is generated by P^{-1}(N) over
// the support, making every maximal cone's lattice map an isomorphism.
// Returns the dual-side projected cone (P: F -> N, delta) and the lifted
// projectable fan.
std::pair<ProjectedCone, ProjectableFan> universal_reduced_cox(const Fan& f);

struct FanOracles {
    bool smooth = false;
    bool simplicial = false;
    bool complete = false;
    bool quasiprojective = false;
    bool nondegenerate = false;
    bool two_complete = false;
};

FanOracles fan_oracles(const Fan& f, std::size_t max_subsets = 1u << 16);

}  // namespace toric

#endif
