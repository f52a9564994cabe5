#ifndef TORICBUNCH_BUNCH_HPP
#define TORICBUNCH_BUNCH_HPP

#include <optional>
#include <string>
#include <vector>

#include "toricbunch/projected_cone.hpp"

namespace toric {

// One element of a bunch: a projected face in K_Q together with a witness
// face of gamma mapping onto it.  Element identity is cone identity;
// distinct faces may project to the same cone.
struct BunchElement {
    Cone cone;
    FaceSet witness;

    bool operator==(const BunchElement& o) const { return cone == o.cone; }
    bool operator<(const BunchElement& o) const { return cone < o.cone; }
};

// Distinct projected faces of a projected cone, with the faces realizing
// each; the table under every bunch-side computation.
struct ProjectedFaceTable {
    std::vector<FaceSet> faces;            // all 2^e faces of gamma
    std::vector<std::size_t> cone_index;   // face -> index into cones
    std::vector<Cone> cones;               // distinct projected-face cones
    std::vector<std::vector<FaceSet>> witnesses;  // per distinct cone
};

ProjectedFaceTable projected_face_table(const ProjectedCone& pc, std::size_t max_rank = 16);

struct VerifyReport {
    bool ok = false;
    std::string reason;  // name of the first violated condition, if any
};

// A bunch: a nonempty collection of projected faces satisfying the
// defining biconditional -- a projected face belongs to the collection iff
// it overlaps every other member without swallowing its relative interior.
class Bunch {
  public:
    // Verifies the biconditional; throws NotAProjectedFace or
    // ConditionViolated on failure.
    Bunch(ProjectedCone pc, const std::vector<Cone>& element_cones, std::size_t max_rank = 16);

    const ProjectedCone& pc() const { return pc_; }
    const std::vector<BunchElement>& elements() const { return elements_; }
    const ProjectedFaceTable& table() const { return table_; }
    std::size_t k_rank() const { return pc_.k_rank(); }

    std::vector<Cone> element_cones() const;
    bool has_element(const Cone& c) const;

    // Inclusion-minimal faces of gamma whose image contains some element.
    const std::vector<FaceSet>& covering_collection() const { return cov_; }

    bool operator==(const Bunch& o) const {
        return pc_ == o.pc_ && element_cones() == o.element_cones();
    }

  private:
    struct Verified {};  // tag: the caller already checked the biconditional
    Bunch(Verified, ProjectedCone pc, ProjectedFaceTable table,
          const std::vector<std::size_t>& theta);
    void finish(const std::vector<std::size_t>& theta);

    friend std::vector<Bunch> enumerate_bunches(const ProjectedCone& pc,
                                                std::size_t max_distinct_faces);

    ProjectedCone pc_;
    std::vector<BunchElement> elements_;
    ProjectedFaceTable table_;
    std::vector<FaceSet> cov_;
};

// Both directions of the defining condition, reported without throwing.
VerifyReport verify_bunch(const ProjectedCone& pc, const std::vector<Cone>& candidate,
                          std::size_t max_rank = 16);

// Weight vectors in K with repetitions; the free-bunch presentation.
struct WeightSystem {
    std::size_t k_rank = 0;
    std::vector<IntVector> weights;
};

// Builds E = Z^n with the positive orthant and Q(e_i) = w_i, then wraps
// the given weight cones (as index sets into the weights) into a verified
// free bunch.
Bunch bunch_from_weights(const WeightSystem& ws, const std::vector<std::vector<std::size_t>>& cones);

// Weight sequence of a free bunch: images of the gamma generators.
std::vector<IntVector> weight_vectors(const Bunch& b);

bool is_standard(const Bunch& b);
bool is_free(const Bunch& b);
bool is_geometric(const Bunch& b);
bool is_simple(const Bunch& b);

struct DictionaryReport {
    bool q_factorial = false;
    bool smooth = false;
    bool only_constant_functions = false;
    bool full = false;
    bool complete = false;
};

// The basic geometric dictionary, computed purely on the bunch side.
DictionaryReport dictionary(const Bunch& b);

// All bunches living in the projected cone, deterministically ordered.
std::vector<Bunch> enumerate_bunches(const ProjectedCone& pc, std::size_t max_distinct_faces = 24);

// Lattice isomorphism of K matching weight multisets and element cones of
// two free bunches, or nullopt.
std::optional<IntMatrix> free_bunch_isomorphic(const Bunch& a, const Bunch& b,
                                               std::size_t max_candidates = 100000);

}  // namespace toric

#endif
