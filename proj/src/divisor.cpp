#include "toricbunch/divisor.hpp"

#include "toricbunch/errors.hpp"
#include "toricbunch/fan.hpp"

namespace toric {

std::pair<std::size_t, std::vector<Int>> class_group(const Bunch& b) {
    Fan f = bunch_to_fan(b);
    IntMatrix c(f.n_rank, f.rays.size());
    for (std::size_t j = 0; j < f.rays.size(); ++j)
        for (std::size_t i = 0; i < f.n_rank; ++i) c.at(i, j) = f.rays[j][i];
    std::vector<Int> torsion;
    for (const Int& d : elementary_divisors(c))
        if (d > 1) torsion.push_back(d);
    return {b.k_rank(), torsion};
}

std::vector<RatVector> pic_q(const Bunch& b) {
    std::vector<std::vector<RatVector>> spans;
    for (const BunchElement& el : b.elements()) spans.push_back(linear_span(el.cone));
    return subspace_intersection(spans, b.k_rank());
}

Cone semiample_cone(const Bunch& b) {
    Cone acc = Cone::full_space(b.k_rank());
    for (const BunchElement& el : b.elements()) acc = intersect(acc, el.cone);
    return acc;
}

bool is_ample(const Bunch& b, const RatVector& w) {
    for (const BunchElement& el : b.elements())
        if (!el.cone.relint_contains(w)) return false;
    return true;
}

bool ample_nonempty(const Bunch& b) {
    // A generic point of the semiample cone witnesses the intersection of
    // the relative interiors whenever that intersection is nonempty.
    return is_ample(b, semiample_cone(b).relint_point());
}

Sublattice pic_lattice_free(const Bunch& b) {
    if (!is_free(b)) throw NotFree("Picard lattice needs a free bunch");
    std::vector<Sublattice> lattices;
    for (const FaceSet& f : b.covering_collection())
        lattices.push_back(b.pc().face_image_lattice(f));
    return lattice_intersection(lattices, b.k_rank());
}

IntVector canonical_class(const Bunch& b) {
    if (!is_free(b)) throw NotFree("canonical class needs a free bunch");
    IntVector sum(b.k_rank(), Int(0));
    for (const IntVector& w : weight_vectors(b))
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] -= w[i];
    return sum;
}

bool is_q_gorenstein(const Bunch& b) {
    IntVector anti = canonical_class(b);
    for (Int& x : anti) x = -x;
    return subspace_contains(pic_q(b), rat_vector(anti));
}

bool is_fano(const Bunch& b) {
    IntVector anti = canonical_class(b);
    for (Int& x : anti) x = -x;
    if (dictionary(b).smooth) return is_ample(b, rat_vector(anti));
    // General case: anticanonical Cartier (in the Picard lattice) and ample.
    return lattice_contains(pic_lattice_free(b), anti) && is_ample(b, rat_vector(anti));
}

bool is_fano_interior_reading(const Bunch& b) {
    IntVector anti = canonical_class(b);
    for (Int& x : anti) x = -x;
    for (const FaceSet& f : b.covering_collection()) {
        if (!b.pc().projected_face(f).relint_contains(rat_vector(anti))) return false;
        if (!lattice_contains(b.pc().face_image_lattice(f), anti)) return false;
    }
    return true;
}

Cone mori_cone(const Bunch& b) {
    DictionaryReport d = dictionary(b);
    if (!d.complete || !is_geometric(b))
        throw HypothesisViolated("Mori cone needs a complete geometric bunch");
    std::vector<Cone> duals;
    for (const BunchElement& el : b.elements()) duals.push_back(dual_cone(el.cone));
    return minkowski_sum(b.k_rank(), duals);
}

bool is_projective_simplicial(const Bunch& b) { return mori_cone(b).is_strictly_convex(); }

std::size_t b2(const Bunch& b) { return pic_q(b).size(); }

DivisorClassReport divisor_report(const Bunch& b) {
    DivisorClassReport r;
    auto [rank, torsion] = class_group(b);
    r.cl_rank = rank;
    r.cl_torsion = torsion;
    r.pic_q_basis = pic_q(b);
    r.semiample = semiample_cone(b);
    r.ample_nonempty = ample_nonempty(b);
    r.betti2 = r.pic_q_basis.size();
    if (is_free(b)) {
        r.canonical = canonical_class(b);
        r.q_gorenstein = is_q_gorenstein(b);
        if (is_standard(b)) r.fano = is_fano(b);
    }
    if (is_geometric(b) && dictionary(b).complete) r.mori = mori_cone(b);
    return r;
}

}  // namespace toric
