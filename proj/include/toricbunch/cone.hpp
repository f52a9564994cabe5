#ifndef TORICBUNCH_CONE_HPP
#define TORICBUNCH_CONE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "toricbunch/errors.hpp"
#include "toricbunch/linalg.hpp"

namespace toric {

// Rational polyhedral convex cone, not necessarily strictly convex.  The
// stored data is canonical on both sides:
//
//   V-side: the lineality space as an HNF lattice basis, and the extreme
//   rays as primitive integer vectors reduced modulo the lineality space
//   and sorted, so cones compare by structural equality.
//
//   H-side: equations cutting out the linear span, plus one normal per
//   facet; together x is in the cone iff equations vanish on x and all
//   facet normals are nonnegative on x.
//
// Everything is computed eagerly at construction (two double description
// passes), after which a Cone is immutable and freely shareable.
class Cone {
  public:
    static Cone from_generators(std::size_t ambient, const std::vector<RatVector>& generators,
                                const std::vector<RatVector>& lineality_gens = {});
    static Cone from_inequalities(std::size_t ambient, const std::vector<RatVector>& inequalities,
                                  const std::vector<RatVector>& equations = {});
    static Cone zero(std::size_t ambient);
    static Cone full_space(std::size_t ambient);
    static Cone positive_orthant(std::size_t ambient);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return dim_; }

    const std::vector<IntVector>& rays() const { return rays_; }
    const IntMatrix& lineality_basis() const { return lineality_; }
    const IntMatrix& span_equations() const { return equations_; }
    const std::vector<IntVector>& facet_normals() const { return facets_; }

    bool is_zero() const { return rays_.empty() && lineality_.rows() == 0; }
    bool is_strictly_convex() const { return lineality_.rows() == 0; }
    bool is_simplicial() const;
    // Simplicial with primitive generators extending to a lattice basis.
    bool is_regular() const;

    bool contains(const RatVector& x) const;
    bool relint_contains(const RatVector& x) const;
    bool contains_cone(const Cone& other) const;

    // A point of the relative interior: the sum of all extreme rays (the
    // zero vector for linear subspaces, whose relint contains 0).
    RatVector relint_point() const;

    // Rays plus a lineality basis, as rational vectors.
    std::vector<RatVector> generators() const;

    bool operator==(const Cone& o) const {
        return ambient_ == o.ambient_ && lineality_ == o.lineality_ && rays_ == o.rays_;
    }
    bool operator!=(const Cone& o) const { return !(*this == o); }
    bool operator<(const Cone& o) const;  // deterministic ordering

  private:
    Cone() = default;

    std::size_t ambient_ = 0;
    std::size_t dim_ = 0;
    IntMatrix lineality_;             // HNF basis of the lineality lattice
    std::vector<IntVector> rays_;     // canonical extreme rays
    IntMatrix equations_;             // HNF basis of the span annihilator
    std::vector<IntVector> facets_;   // canonical facet normals
};

Cone dual_cone(const Cone& c);
Cone intersect(const Cone& a, const Cone& b);
Cone minkowski_sum(std::size_t ambient, const std::vector<Cone>& cones);

// Saturated HNF basis of lin(c).
std::vector<RatVector> linear_span(const Cone& c);

// Whether the relative interiors meet, decided by membership of a generic
// intersection point.  The relative interior of the zero cone is {0}, so
// the zero cone overlaps itself and any linear subspace; this is what the
// face-star separation lemma requires.
bool relint_overlap(const Cone& a, const Cone& b);

// Same predicate by the independent route: exact feasibility of
// sum(lambda_i u_i) = sum(mu_j w_j) with all coefficients >= 1 over the
// extreme rays (lineality coefficients free).
bool relint_overlap_feasibility(const Cone& a, const Cone& b);

// inner's relative interior lies inside outer's.
bool relint_subset(const Cone& inner, const Cone& outer);

bool is_face_of(const Cone& face, const Cone& c);

// All faces of a strictly convex cone as sets of ray indices, sorted by
// cardinality then lexicographically; includes the zero face and c itself.
std::vector<std::vector<std::size_t>> face_ray_sets(const Cone& c, std::size_t max_faces = 1u << 16);
std::vector<Cone> faces(const Cone& c, std::size_t max_faces = 1u << 16);

// Witness u with eq . u = 0, weak . u >= 0 and strict . u > 0 (all rows
// simultaneously), if one exists.  The homogeneous system is solved by ray
// enumeration; the witness is the (primitivized) sum of the extreme rays.
std::optional<RatVector> strict_feasible(std::size_t dim, const std::vector<RatVector>& eqs,
                                         const std::vector<RatVector>& weak,
                                         const std::vector<RatVector>& strict);

// Separating linear form u for a and b: u >= 0 on a, u <= 0 on b, and u = 0
// exactly on the intersection inside either cone.  Rows of `invariance`
// are additional linear conditions u must annihilate (L-invariance).
std::optional<RatVector> separating_form(const Cone& a, const Cone& b,
                                         const std::vector<RatVector>& invariance = {});

}  // namespace toric

#endif
