#include "toricbunch/projected_cone.hpp"

#include <algorithm>
#include <stdexcept>

namespace toric {

namespace {

// Inverse of a square rational matrix given by rows; throws on singular.
std::vector<RatVector> inverse_rows(const std::vector<RatVector>& rows) {
    const std::size_t n = rows.size();
    std::vector<RatVector> a(rows);
    std::vector<RatVector> inv(n, RatVector(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) throw std::invalid_argument("singular matrix");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Rat d = a[c][c];
        for (std::size_t j = 0; j < n; ++j) { a[c][j] /= d; inv[c][j] /= d; }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (std::size_t j = 0; j < n; ++j) { a[i][j] -= f * a[c][j]; inv[i][j] -= f * inv[c][j]; }
        }
    }
    return inv;
}

}  // namespace

ProjectedCone::ProjectedCone(IntMatrix q, const std::vector<RatVector>& gamma_generators)
    : e_rank_(q.cols()), k_rank_(q.rows()), q_(std::move(q)) {
    if (gamma_generators.size() != e_rank_)
        throw std::invalid_argument("gamma needs exactly rank(E) generators");
    if (!is_surjective(q_))
        throw std::invalid_argument("Q must be an epimorphism of lattices");
    for (const RatVector& g : gamma_generators) {
        if (g.size() != e_rank_) throw std::invalid_argument("generator dimension mismatch");
        gamma_.push_back(primitive(g));
    }
    std::vector<RatVector> rows;
    for (const IntVector& g : gamma_) rows.push_back(rat_vector(g));
    if (rank(rows) != e_rank_)
        throw std::invalid_argument("gamma must be simplicial of full dimension");

    p_ = kernel_basis(q_).basis;

    // delta's generators are the scaled dual basis of gamma's: the rows of
    // the inverse transpose, primitivized.  This realizes the opposite-ray
    // pairing directly.
    std::vector<RatVector> ginv = inverse_rows(rows);
    for (std::size_t i = 0; i < e_rank_; ++i) {
        RatVector col(e_rank_);
        for (std::size_t j = 0; j < e_rank_; ++j) col[j] = ginv[j][i];
        delta_.push_back(primitive(col));
    }
}

Cone ProjectedCone::gamma_cone() const {
    std::vector<RatVector> gens;
    for (const IntVector& g : gamma_) gens.push_back(rat_vector(g));
    return Cone::from_generators(e_rank_, gens);
}

Cone ProjectedCone::delta_cone() const {
    std::vector<RatVector> gens;
    for (const IntVector& g : delta_) gens.push_back(rat_vector(g));
    return Cone::from_generators(e_rank_, gens);
}

ProjectedCone ProjectedCone::dualize() const {
    std::vector<RatVector> gens;
    for (const IntVector& d : delta_) gens.push_back(rat_vector(d));
    return ProjectedCone(p_, gens);
}

ProjectedCone ProjectedCone::canonical_form() const {
    std::vector<RatVector> gens;
    for (const IntVector& g : gamma_) gens.push_back(rat_vector(g));
    return ProjectedCone(hnf(q_).h, gens);
}

FaceSet ProjectedCone::complement(const FaceSet& s) const {
    std::vector<bool> in(e_rank_, false);
    for (std::size_t i : s) in.at(i) = true;
    FaceSet c;
    for (std::size_t i = 0; i < e_rank_; ++i)
        if (!in[i]) c.push_back(i);
    return c;
}

Cone ProjectedCone::face_cone(const FaceSet& s) const {
    std::vector<RatVector> gens;
    for (std::size_t i : s) gens.push_back(rat_vector(gamma_.at(i)));
    return Cone::from_generators(e_rank_, gens);
}

Cone ProjectedCone::star_cone(const FaceSet& s) const {
    std::vector<RatVector> gens;
    for (std::size_t i : complement(s)) gens.push_back(rat_vector(delta_.at(i)));
    return Cone::from_generators(e_rank_, gens);
}

Cone ProjectedCone::projected_face(const FaceSet& s) const {
    std::vector<RatVector> gens;
    for (std::size_t i : s) gens.push_back(q_.apply(rat_vector(gamma_.at(i))));
    return Cone::from_generators(k_rank_, gens);
}

RatVector ProjectedCone::project(const RatVector& w) const { return q_.apply(w); }

Sublattice ProjectedCone::face_lattice(const FaceSet& s) const {
    std::vector<IntVector> rows;
    for (std::size_t i : s) rows.push_back(gamma_.at(i));
    return saturate(Sublattice{e_rank_, IntMatrix::from_rows(rows, e_rank_)});
}

Sublattice ProjectedCone::face_image_lattice(const FaceSet& s) const {
    Sublattice fl = face_lattice(s);
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < fl.rank(); ++i) rows.push_back(q_.apply(fl.basis.row(i)));
    return lattice_from_rows(rows, k_rank_);
}

std::optional<RatVector> ProjectedCone::invariant_separation(const FaceSet& s1,
                                                             const FaceSet& s2) const {
    // The stars are faces of the simplicial cone delta, so their
    // intersection is the face on the shared generators and the three
    // separation conditions become sign constraints on the generators:
    // zero on the shared ones, strictly positive (negative) on the rest of
    // the first (second) star.  Invariance pins the witness into ker(Q).
    FaceSet t1 = complement(s1), t2 = complement(s2);
    std::vector<bool> in1(e_rank_, false), in2(e_rank_, false);
    for (std::size_t i : t1) in1[i] = true;
    for (std::size_t i : t2) in2[i] = true;
    std::vector<RatVector> eqs, strict;
    for (std::size_t i = 0; i < q_.rows(); ++i) eqs.push_back(rat_vector(q_.row(i)));
    for (std::size_t j = 0; j < e_rank_; ++j) {
        if (in1[j] && in2[j]) eqs.push_back(rat_vector(delta_[j]));
        else if (in1[j]) strict.push_back(rat_vector(delta_[j]));
        else if (in2[j]) strict.push_back(negate(rat_vector(delta_[j])));
    }
    return strict_feasible(e_rank_, eqs, {}, strict);
}

bool ProjectedCone::q_injective_on_face(const FaceSet& s) const {
    std::vector<RatVector> images;
    for (std::size_t i : s) images.push_back(q_.apply(rat_vector(gamma_.at(i))));
    return rank(images) == s.size();
}

bool ProjectedCone::p_surjective_on_star(const FaceSet& s) const {
    std::vector<RatVector> images;
    for (std::size_t i : complement(s)) images.push_back(p_.apply(rat_vector(delta_.at(i))));
    if (n_rank() == 0) return true;
    return rank(images) == n_rank();
}

bool ProjectedCone::q_maps_face_lattice_primitively(const FaceSet& s) const {
    Sublattice fl = face_lattice(s);
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < fl.rank(); ++i) rows.push_back(q_.apply(fl.basis.row(i)));
    Sublattice image = lattice_from_rows(rows, k_rank_);
    if (image.rank() != fl.rank()) return false;  // not injective
    return is_primitive(image);
}

bool ProjectedCone::p_maps_star_lattice_onto(const FaceSet& s) const {
    std::vector<IntVector> rows;
    for (std::size_t i : complement(s)) rows.push_back(delta_.at(i));
    Sublattice sl = saturate(Sublattice{e_rank_, IntMatrix::from_rows(rows, e_rank_)});
    std::vector<IntVector> images;
    for (std::size_t i = 0; i < sl.rank(); ++i) images.push_back(p_.apply(sl.basis.row(i)));
    Sublattice image = lattice_from_rows(images, n_rank());
    return image.basis == IntMatrix::identity(n_rank());
}

std::vector<FaceSet> all_face_sets(std::size_t e_rank) {
    if (e_rank >= 8 * sizeof(unsigned long long))
        throw std::invalid_argument("rank too large for face enumeration");
    std::vector<FaceSet> out;
    out.reserve(1ull << e_rank);
    for (unsigned long long mask = 0; mask < (1ull << e_rank); ++mask) {
        FaceSet s;
        for (std::size_t i = 0; i < e_rank; ++i)
            if (mask & (1ull << i)) s.push_back(i);
        out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](const FaceSet& a, const FaceSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

}  // namespace toric
