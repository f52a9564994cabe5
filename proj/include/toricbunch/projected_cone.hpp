#ifndef TORICBUNCH_PROJECTED_CONE_HPP
#define TORICBUNCH_PROJECTED_CONE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "toricbunch/cone.hpp"
#include "toricbunch/linalg.hpp"

namespace toric {

// Face of gamma, as a sorted set of generator indices.  Since gamma is
// simplicial, faces correspond exactly to index subsets.
using FaceSet = std::vector<std::size_t>;

// A projected cone (Q: E -> K, gamma): a lattice epimorphism together with
// a simplicial cone of full dimension in E_Q, spanned by exactly
// rank(E) generators.  The Gale-dual data (P: F -> N, delta) is computed
// at construction: P is the HNF kernel basis of Q read as a matrix, N is
// identified with Z^(e-k) through it, and delta = gamma^vee comes with the
// opposite-ray pairing delta[i] . gamma[j] = 0 iff i != j.
class ProjectedCone {
  public:
    ProjectedCone(IntMatrix q, const std::vector<RatVector>& gamma_generators);

    std::size_t e_rank() const { return e_rank_; }
    std::size_t k_rank() const { return k_rank_; }
    std::size_t n_rank() const { return e_rank_ - k_rank_; }

    const IntMatrix& q() const { return q_; }
    const IntMatrix& p() const { return p_; }
    const std::vector<IntVector>& gamma_generators() const { return gamma_; }
    const std::vector<IntVector>& delta_generators() const { return delta_; }

    Cone gamma_cone() const;
    Cone delta_cone() const;

    // The dual projected cone (P: F -> N, delta), again a ProjectedCone.
    // Dualizing twice recovers this one with q in canonical HNF form.
    ProjectedCone dualize() const;

    // Same projected cone with q replaced by its HNF (an isomorphic
    // repackaging of K); fixed point of dualize twice.
    ProjectedCone canonical_form() const;

    Cone face_cone(const FaceSet& s) const;       // cone(gamma_i, i in s)
    Cone star_cone(const FaceSet& s) const;       // gamma_s^perp meet delta
    Cone projected_face(const FaceSet& s) const;  // Q(gamma_s) in K_Q

    FaceSet complement(const FaceSet& s) const;

    // Q(w) for w in E_Q.
    RatVector project(const RatVector& w) const;

    // lin(gamma_s) meet E, saturated.
    Sublattice face_lattice(const FaceSet& s) const;
    // Q(lin(gamma_s) meet E) as a sublattice of K.
    Sublattice face_image_lattice(const FaceSet& s) const;

    // L-invariant separating linear form for the stars of the two faces,
    // or nullopt; the witness lies in ker(Q)_Q.
    std::optional<RatVector> invariant_separation(const FaceSet& s1, const FaceSet& s2) const;

    bool q_injective_on_face(const FaceSet& s) const;
    bool p_surjective_on_star(const FaceSet& s) const;

    // Q maps lin(gamma_s) meet E isomorphically onto a primitive sublattice.
    bool q_maps_face_lattice_primitively(const FaceSet& s) const;
    // P maps lin(star(s)) meet F onto N.
    bool p_maps_star_lattice_onto(const FaceSet& s) const;

    bool operator==(const ProjectedCone& o) const {
        return q_ == o.q_ && gamma_ == o.gamma_;
    }

  private:
    std::size_t e_rank_, k_rank_;
    IntMatrix q_;
    std::vector<IntVector> gamma_;
    IntMatrix p_;
    std::vector<IntVector> delta_;
};

// All 2^e faces of gamma in a deterministic order (by size, then lex).
std::vector<FaceSet> all_face_sets(std::size_t e_rank);

}  // namespace toric

#endif
