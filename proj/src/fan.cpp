#include "toricbunch/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toricbunch/errors.hpp"

namespace toric {

namespace {

std::vector<RatVector> ray_vectors(const Fan& f, const std::vector<std::size_t>& idxs) {
    std::vector<RatVector> v;
    for (std::size_t i : idxs) v.push_back(rat_vector(f.rays.at(i)));
    return v;
}

// HNF basis of the lattice generated by rational rows (clearing one global
// denominator).
std::vector<RatVector> rational_lattice_basis(const std::vector<RatVector>& rows,
                                              std::size_t ambient) {
    Int den = 1;
    for (const RatVector& r : rows)
        for (const Rat& x : r) den = int_lcm(den, rat_den(x));
    std::vector<IntVector> scaled;
    for (const RatVector& r : rows) {
        IntVector w(ambient);
        for (std::size_t j = 0; j < ambient; ++j) w[j] = rat_num(r[j]) * (den / rat_den(r[j]));
        scaled.push_back(w);
    }
    Sublattice l = lattice_from_rows(scaled, ambient);
    std::vector<RatVector> out;
    for (std::size_t i = 0; i < l.rank(); ++i) {
        RatVector row(ambient);
        for (std::size_t j = 0; j < ambient; ++j) row[j] = Rat(l.basis.at(i, j)) / Rat(den);
        out.push_back(row);
    }
    return out;
}

// Solve x * B = target over the rationals for square row-basis B.
RatVector coords_in_basis(const std::vector<RatVector>& basis_rows, const RatVector& target) {
    const std::size_t n = basis_rows.size();
    IntMatrix bt(n, n);
    // Work with the transpose as an integer system after clearing
    // denominators per row of the basis.
    std::vector<RatVector> cols(n, RatVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) cols[j][i] = basis_rows[i][j];
    // Gaussian elimination on [B^T | target].
    std::vector<RatVector> a(n, RatVector(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = cols[i][j];
        a[i][n] = target[i];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) throw std::invalid_argument("singular basis");
        std::swap(a[p], a[c]);
        Rat d = a[c][c];
        for (std::size_t j = c; j <= n; ++j) a[c][j] /= d;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (std::size_t j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    RatVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

// Shared tail of the reduced Cox constructions: given the dual-side data
// (P: F -> N, delta) wrap the fan's maximal cones and dualize to a bunch.
Bunch cox_to_bunch(const ProjectedCone& dual_side, const Fan& f) {
    ProjectedCone pc = dual_side.dualize();
    std::vector<Cone> images;
    for (const auto& mc : f.max_cones) {
        FaceSet t(mc.begin(), mc.end());
        images.push_back(pc.projected_face(pc.complement(t)));
    }
    // Minimal cones among the images.
    std::vector<Cone> minimal;
    for (std::size_t i = 0; i < images.size(); ++i) {
        bool is_min = true;
        for (std::size_t j = 0; j < images.size() && is_min; ++j) {
            if (i == j) continue;
            if (images[j].contains_cone(images[i]) && !(images[i] == images[j])) continue;
            if (images[i].contains_cone(images[j]) && !(images[i] == images[j])) is_min = false;
            if (images[i] == images[j] && j < i) is_min = false;  // dedup
        }
        if (is_min) minimal.push_back(images[i]);
    }
    return Bunch(pc, minimal);
}

}  // namespace

Cone Fan::cone_of(std::size_t max_index) const {
    std::vector<RatVector> gens;
    for (std::size_t i : max_cones.at(max_index)) gens.push_back(rat_vector(rays.at(i)));
    return Cone::from_generators(n_rank, gens);
}

Fan make_fan(std::size_t n_rank, const std::vector<IntVector>& rays,
             const std::vector<std::vector<std::size_t>>& max_cones) {
    // Canonicalize: primitive rays sorted lexicographically, index sets
    // remapped and sorted, cones sorted.
    std::vector<IntVector> prim;
    for (const IntVector& r : rays) {
        if (r.size() != n_rank) throw InvalidFan("ray dimension mismatch");
        IntVector p = primitive(rat_vector(r));
        bool zero = true;
        for (const Int& x : p)
            if (x != 0) zero = false;
        if (zero) throw InvalidFan("zero ray");
        if (p != r) throw InvalidFan("rays must be primitive");
        prim.push_back(p);
    }
    std::vector<std::size_t> order(prim.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return prim[a] < prim[b]; });
    std::vector<std::size_t> where(prim.size());
    Fan f;
    f.n_rank = n_rank;
    for (std::size_t i = 0; i < order.size(); ++i) {
        where[order[i]] = i;
        f.rays.push_back(prim[order[i]]);
    }
    for (std::size_t i = 0; i + 1 < f.rays.size(); ++i)
        if (f.rays[i] == f.rays[i + 1]) throw InvalidFan("duplicate ray");

    std::set<std::vector<std::size_t>> seen;
    for (const auto& mc : max_cones) {
        std::vector<std::size_t> c;
        for (std::size_t i : mc) {
            if (i >= f.rays.size()) throw InvalidFan("ray index out of range");
            c.push_back(where[i]);
        }
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        if (seen.insert(c).second) f.max_cones.push_back(c);
    }
    std::sort(f.max_cones.begin(), f.max_cones.end());

    // Axioms.
    std::vector<bool> used(f.rays.size(), false);
    std::vector<Cone> cones;
    for (const auto& mc : f.max_cones) {
        Cone c = Cone::from_generators(n_rank, ray_vectors(f, mc));
        if (!c.is_strictly_convex()) throw InvalidFan("maximal cone not strictly convex");
        std::vector<IntVector> expected;
        for (std::size_t i : mc) expected.push_back(f.rays[i]);
        std::sort(expected.begin(), expected.end());
        if (c.rays() != expected) throw InvalidFan("listed rays are not the extreme rays");
        for (std::size_t i : mc) used[i] = true;
        cones.push_back(c);
    }
    for (bool u : used)
        if (!u) throw InvalidFan("unused ray");
    for (std::size_t i = 0; i < f.max_cones.size(); ++i)
        for (std::size_t j = i + 1; j < f.max_cones.size(); ++j) {
            if (std::includes(f.max_cones[i].begin(), f.max_cones[i].end(),
                              f.max_cones[j].begin(), f.max_cones[j].end()) ||
                std::includes(f.max_cones[j].begin(), f.max_cones[j].end(),
                              f.max_cones[i].begin(), f.max_cones[i].end()))
                throw InvalidFan("nested maximal cones");
            if (!separating_form(cones[i], cones[j]).has_value())
                throw InvalidFan("maximal cones admit no separating linear form");
        }
    return f;
}

bool is_projectable(const ProjectableFan& pf) {
    for (std::size_t i = 0; i < pf.max_faces.size(); ++i)
        for (std::size_t j = i + 1; j < pf.max_faces.size(); ++j) {
            FaceSet a = pf.pc.complement(pf.max_faces[i]);
            FaceSet b = pf.pc.complement(pf.max_faces[j]);
            if (!pf.pc.invariant_separation(a, b).has_value()) return false;
        }
    return true;
}

bool is_maximal_projectable(const ProjectableFan& pf) {
    const std::size_t e = pf.pc.e_rank();
    for (const FaceSet& t : all_face_sets(e)) {
        bool under = false;
        for (const FaceSet& m : pf.max_faces)
            if (std::includes(m.begin(), m.end(), t.begin(), t.end())) { under = true; break; }
        if (under) continue;
        bool separable_from_all = true;
        for (const FaceSet& m : pf.max_faces) {
            if (!pf.pc.invariant_separation(pf.pc.complement(t), pf.pc.complement(m))
                     .has_value()) {
                separable_from_all = false;
                break;
            }
        }
        if (separable_from_all) return false;
    }
    return true;
}

ProjectableFan bunch_to_projectable_fan(const Bunch& b) {
    ProjectableFan pf{b.pc(), {}};
    for (const FaceSet& f : b.covering_collection()) pf.max_faces.push_back(b.pc().complement(f));
    std::sort(pf.max_faces.begin(), pf.max_faces.end());
    return pf;
}

Bunch projectable_fan_to_bunch(const ProjectableFan& pf) {
    if (!is_projectable(pf))
        throw InvalidFan("maximal cones admit no invariant separating forms");
    if (!is_maximal_projectable(pf))
        throw NotMaximal("projectable fan fails Def 4.1(b) maximality");
    std::vector<Cone> images;
    for (const FaceSet& t : pf.max_faces)
        images.push_back(pf.pc.projected_face(pf.pc.complement(t)));
    std::vector<Cone> minimal;
    for (std::size_t i = 0; i < images.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < images.size() && keep; ++j) {
            if (i == j) continue;
            if (images[i] == images[j]) {
                if (j < i) keep = false;
            } else if (images[i].contains_cone(images[j])) {
                keep = false;
            }
        }
        if (keep) minimal.push_back(images[i]);
    }
    return Bunch(pf.pc, minimal);
}

std::pair<Fan, IntMatrix> quotient_fan(const ProjectableFan& pf) {
    const ProjectedCone& pc = pf.pc;
    const std::size_t n = pc.n_rank();
    const IntMatrix& p = pc.p();

    std::vector<Cone> projected;
    for (const FaceSet& t : pf.max_faces) {
        std::vector<RatVector> gens;
        for (std::size_t i : t) gens.push_back(p.apply(rat_vector(pc.delta_generators()[i])));
        projected.push_back(Cone::from_generators(n, gens));
    }
    if (projected.empty()) throw InvalidFan("projectable fan has no maximal cones");

    // The minimal cone of the projected quasifan is the common lineality.
    const IntMatrix lprime = projected.front().lineality_basis();
    for (const Cone& c : projected)
        if (c.lineality_basis() != lprime)
            throw InvalidFan("projected cones do not form a quasifan");

    IntMatrix pprime = kernel_basis(lprime).basis;  // N -> N/L', surjective
    IntMatrix r = pprime * p;
    const std::size_t nq = pprime.rows();

    // Project through P' and collect primitive rays.
    std::map<IntVector, std::size_t> ray_index;
    std::vector<IntVector> rays;
    std::vector<std::vector<std::size_t>> cones;
    std::set<std::vector<std::size_t>> cone_set;
    for (const FaceSet& t : pf.max_faces) {
        std::vector<RatVector> gens;
        for (std::size_t i : t) gens.push_back(r.apply(rat_vector(pc.delta_generators()[i])));
        Cone c = Cone::from_generators(nq, gens);
        std::vector<std::size_t> idxs;
        for (const IntVector& ray : c.rays()) {
            auto it = ray_index.find(ray);
            if (it == ray_index.end()) {
                it = ray_index.emplace(ray, rays.size()).first;
                rays.push_back(ray);
            }
            idxs.push_back(it->second);
        }
        std::sort(idxs.begin(), idxs.end());
        if (cone_set.insert(idxs).second) cones.push_back(idxs);
    }
    // Drop cones contained in others (images may nest).
    std::vector<std::vector<std::size_t>> maximal;
    for (std::size_t i = 0; i < cones.size(); ++i) {
        bool nested = false;
        for (std::size_t j = 0; j < cones.size() && !nested; ++j)
            if (i != j && std::includes(cones[j].begin(), cones[j].end(), cones[i].begin(),
                                        cones[i].end()))
                nested = true;
        if (!nested) maximal.push_back(cones[i]);
    }
    return {make_fan(nq, rays, maximal), r};
}

Fan bunch_to_fan(const Bunch& b) {
    if (!is_standard(b)) throw NotStandard("fan construction requires a standard bunch");
    return quotient_fan(bunch_to_projectable_fan(b)).first;
}

std::vector<Cone> all_fan_cones(const Bunch& b) {
    if (!is_standard(b)) throw NotStandard("fan construction requires a standard bunch");
    auto [fan, r] = quotient_fan(bunch_to_projectable_fan(b));
    std::vector<Cone> out;
    std::set<Cone> seen;
    for (std::size_t fi = 0; fi < b.table().faces.size(); ++fi) {
        const FaceSet& f = b.table().faces[fi];
        const Cone& img = b.table().cones[b.table().cone_index[fi]];
        bool swallows = false;
        for (const BunchElement& el : b.elements())
            if (relint_subset(el.cone, img)) { swallows = true; break; }
        if (!swallows) continue;
        std::vector<RatVector> gens;
        for (std::size_t i : b.pc().complement(f))
            gens.push_back(r.apply(rat_vector(b.pc().delta_generators()[i])));
        Cone c = Cone::from_generators(fan.n_rank, gens);
        if (seen.insert(c).second) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Bunch fan_to_bunch(const Fan& f) {
    const std::size_t n = f.n_rank, nrays = f.rays.size();
    if (rank(IntMatrix::from_rows(f.rays, n)) != n)
        throw Degenerate("rays do not generate N as a vector space");

    IntMatrix c(n, nrays);  // ray map C: Z^R -> N
    for (std::size_t j = 0; j < nrays; ++j)
        for (std::size_t i = 0; i < n; ++i) c.at(i, j) = f.rays[j][i];

    if (is_surjective(c)) {
        std::vector<RatVector> delta;
        for (std::size_t i = 0; i < nrays; ++i) {
            RatVector e(nrays, Rat(0));
            e[i] = 1;
            delta.push_back(e);
        }
        return cox_to_bunch(ProjectedCone(c, delta), f);
    }

    // Non-surjective ray map: refine Z^R to F = s(N) + L1 with a section s
    // integral on the image lattice, so that every e_rho lies in F and
    // maps to a primitive vector.
    Sublattice im = lattice_from_rows(f.rays, n);  // image lattice of C, rank n
    std::vector<RatVector> f_basis_rows;
    {
        std::vector<IntVector> preimages;
        for (std::size_t i = 0; i < im.rank(); ++i) {
            auto a = solve_integral(c, im.basis.row(i));
            if (!a) throw Degenerate("no integral preimage for an image basis vector");
            preimages.push_back(*a);
        }
        // s sends the image basis to its preimages; extend to N_Q by the
        // basis coordinates.  Rows of M_im^{-1} * A are a basis of s(N).
        std::vector<RatVector> mim_rows;
        for (std::size_t i = 0; i < im.rank(); ++i) mim_rows.push_back(rat_vector(im.basis.row(i)));
        for (std::size_t j = 0; j < n; ++j) {
            RatVector ej(n, Rat(0));
            ej[j] = 1;
            RatVector coeff = coords_in_basis(mim_rows, ej);  // e_j in image basis
            RatVector row(nrays, Rat(0));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < nrays; ++k) row[k] += coeff[i] * Rat(preimages[i][k]);
            f_basis_rows.push_back(row);
        }
        Sublattice l1 = kernel_basis(c);
        for (std::size_t i = 0; i < l1.rank(); ++i) f_basis_rows.push_back(rat_vector(l1.basis.row(i)));
    }
    if (f_basis_rows.size() != nrays) throw Degenerate("Cox lattice has wrong rank");

    // delta generators and the projection in F-coordinates.
    std::vector<RatVector> delta;
    for (std::size_t i = 0; i < nrays; ++i) {
        RatVector e(nrays, Rat(0));
        e[i] = 1;
        RatVector xi = coords_in_basis(f_basis_rows, e);
        for (const Rat& x : xi)
            if (rat_den(x) != 1) throw Degenerate("canonical ray does not lie in the Cox lattice");
        delta.push_back(xi);
    }
    IntMatrix pf_mat(n, nrays);
    for (std::size_t j = 0; j < nrays; ++j) {
        RatVector img = c.apply(f_basis_rows[j]);  // C(b_j) in N
        for (std::size_t i = 0; i < n; ++i) {
            if (rat_den(img[i]) != 1) throw Degenerate("Cox lattice maps outside N");
            pf_mat.at(i, j) = rat_num(img[i]);
        }
    }
    return cox_to_bunch(ProjectedCone(pf_mat, delta), f);
}

std::pair<ProjectedCone, ProjectableFan> universal_reduced_cox(const Fan& f) {
    const std::size_t n = f.n_rank, nrays = f.rays.size();
    std::vector<Cone> cones;
    for (std::size_t i = 0; i < f.max_cones.size(); ++i) {
        cones.push_back(f.cone_of(i));
        if (!cones.back().is_simplicial()) throw NotSimplicial("universal construction needs a simplicial fan");
        if (cones.back().dim() != n)
            throw NotFullDimensional("universal construction needs full-dimensional maximal cones");
    }
    if (rank(IntMatrix::from_rows(f.rays, n)) != n)
        throw Degenerate("rays do not generate N as a vector space");

    // F is generated by the per-cone lattices C_S^{-1}(N) inside Q^R.
    std::vector<RatVector> gens;
    for (const auto& mc : f.max_cones) {
        // Solve C_S x = e_j for each j; embed into Q^R on the S coordinates.
        std::vector<RatVector> cs_rows(mc.size(), RatVector(n));
        for (std::size_t a = 0; a < mc.size(); ++a) cs_rows[a] = rat_vector(f.rays[mc[a]]);
        for (std::size_t j = 0; j < n; ++j) {
            RatVector ej(n, Rat(0));
            ej[j] = 1;
            RatVector x = coords_in_basis(cs_rows, ej);  // coefficients on the rays of S
            RatVector row(nrays, Rat(0));
            for (std::size_t a = 0; a < mc.size(); ++a) row[mc[a]] = x[a];
            gens.push_back(row);
        }
    }
    std::vector<RatVector> f_basis_rows = rational_lattice_basis(gens, nrays);
    if (f_basis_rows.size() != nrays) throw Degenerate("universal Cox lattice has wrong rank");

    std::vector<RatVector> delta;
    for (std::size_t i = 0; i < nrays; ++i) {
        RatVector e(nrays, Rat(0));
        e[i] = 1;
        RatVector xi = coords_in_basis(f_basis_rows, e);
        for (const Rat& x : xi)
            if (rat_den(x) != 1) throw Degenerate("canonical ray does not lie in the Cox lattice");
        delta.push_back(xi);
    }
    IntMatrix c(n, nrays);
    for (std::size_t j = 0; j < nrays; ++j)
        for (std::size_t i = 0; i < n; ++i) c.at(i, j) = f.rays[j][i];
    IntMatrix pf_mat(n, nrays);
    for (std::size_t j = 0; j < nrays; ++j) {
        RatVector img = c.apply(f_basis_rows[j]);
        for (std::size_t i = 0; i < n; ++i) {
            if (rat_den(img[i]) != 1) throw Degenerate("universal Cox lattice maps outside N");
            pf_mat.at(i, j) = rat_num(img[i]);
        }
    }
    ProjectedCone dual_side(pf_mat, delta);

    // Defining properties of the universal construction.
    std::vector<IntVector> all_rows;
    for (const auto& mc : f.max_cones) {
        FaceSet t(mc.begin(), mc.end());
        Sublattice fl = dual_side.face_lattice(t);
        if (fl.rank() != n || dual_side.face_image_lattice(t).basis != IntMatrix::identity(n))
            throw Degenerate("per-cone lattice map is not an isomorphism onto N");
        for (std::size_t i = 0; i < fl.rank(); ++i) all_rows.push_back(fl.basis.row(i));
    }
    if (lattice_from_rows(all_rows, nrays).basis != IntMatrix::identity(nrays))
        throw Degenerate("cone lattices do not sum to F");

    ProjectableFan pf{dual_side.dualize(), {}};
    for (const auto& mc : f.max_cones) pf.max_faces.push_back(FaceSet(mc.begin(), mc.end()));
    std::sort(pf.max_faces.begin(), pf.max_faces.end());
    return {dual_side, pf};
}

FanOracles fan_oracles(const Fan& f, std::size_t max_subsets) {
    FanOracles o;
    const std::size_t n = f.n_rank;
    std::vector<Cone> cones;
    for (std::size_t i = 0; i < f.max_cones.size(); ++i) cones.push_back(f.cone_of(i));

    o.simplicial = true;
    o.smooth = true;
    for (const Cone& c : cones) {
        if (!c.is_simplicial()) o.simplicial = false;
        if (!c.is_regular()) o.smooth = false;
    }

    o.nondegenerate =
        f.rays.empty() ? n == 0 : rank(IntMatrix::from_rows(f.rays, n)) == n;

    // Completeness: pure full-dimensional, two cones per wall, connected
    // wall graph.
    bool pure = true;
    for (const Cone& c : cones)
        if (c.dim() != n) pure = false;
    if (!pure || cones.empty()) {
        o.complete = false;
    } else if (n == 0) {
        o.complete = true;
    } else {
        std::map<Cone, std::vector<std::size_t>> walls;
        for (std::size_t m = 0; m < cones.size(); ++m) {
            for (const IntVector& normal : cones[m].facet_normals()) {
                std::vector<RatVector> gens;
                for (const IntVector& ray : cones[m].rays())
                    if (dot(rat_vector(normal), rat_vector(ray)) == 0)
                        gens.push_back(rat_vector(ray));
                walls[Cone::from_generators(n, gens)].push_back(m);
            }
        }
        bool two_per_wall = true;
        std::vector<std::size_t> parent(cones.size());
        for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
        std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
            return parent[x] == x ? x : parent[x] = find(parent[x]);
        };
        for (const auto& [wall, incident] : walls) {
            if (incident.size() != 2) two_per_wall = false;
            for (std::size_t i = 1; i < incident.size(); ++i)
                parent[find(incident[i])] = find(incident[0]);
        }
        bool connected = true;
        for (std::size_t i = 0; i < cones.size(); ++i)
            if (find(i) != find(0)) connected = false;
        o.complete = two_per_wall && connected;
    }

    // Quasiprojectivity: a strictly convex support function, one linear
    // form per maximal cone, agreeing on shared rays and strictly convex
    // across every pair.
    {
        const std::size_t vars = n * cones.size();
        std::vector<RatVector> eqs, strict;
        auto var = [&](std::size_t cone_idx, std::size_t coord) { return cone_idx * n + coord; };
        for (std::size_t a = 0; a < cones.size(); ++a)
            for (std::size_t b = a + 1; b < cones.size(); ++b) {
                std::vector<std::size_t> shared;
                std::set_intersection(f.max_cones[a].begin(), f.max_cones[a].end(),
                                      f.max_cones[b].begin(), f.max_cones[b].end(),
                                      std::back_inserter(shared));
                for (std::size_t ridx : shared) {
                    RatVector row(vars, Rat(0));
                    for (std::size_t j = 0; j < n; ++j) {
                        row[var(a, j)] = Rat(f.rays[ridx][j]);
                        row[var(b, j)] = -Rat(f.rays[ridx][j]);
                    }
                    eqs.push_back(row);
                }
                auto add_strict = [&](std::size_t hi, std::size_t lo) {
                    for (std::size_t ridx : f.max_cones[hi]) {
                        if (std::binary_search(f.max_cones[lo].begin(), f.max_cones[lo].end(),
                                               ridx))
                            continue;
                        RatVector row(vars, Rat(0));
                        for (std::size_t j = 0; j < n; ++j) {
                            row[var(hi, j)] = Rat(f.rays[ridx][j]);
                            row[var(lo, j)] = -Rat(f.rays[ridx][j]);
                        }
                        strict.push_back(row);
                    }
                };
                add_strict(a, b);
                add_strict(b, a);
            }
        o.quasiprojective = strict_feasible(vars, eqs, {}, strict).has_value();
    }

    // 2-completeness: no cone over existing rays can enlarge the fan.
    {
        const std::size_t nrays = f.rays.size();
        if (nrays >= 8 * sizeof(unsigned long long) || (1ull << nrays) > max_subsets)
            throw EnumerationTooLarge("2-completeness scan beyond configured bound");
        o.two_complete = true;
        std::set<Cone> tried;
        for (unsigned long long mask = 1; mask < (1ull << nrays) && o.two_complete; ++mask) {
            std::vector<RatVector> gens;
            for (std::size_t i = 0; i < nrays; ++i)
                if (mask & (1ull << i)) gens.push_back(rat_vector(f.rays[i]));
            Cone cand = Cone::from_generators(n, gens);
            if (!cand.is_strictly_convex() || cand.is_zero()) continue;
            if (!tried.insert(cand).second) continue;
            bool in_fan = false;
            for (const Cone& c : cones)
                if (is_face_of(cand, c)) { in_fan = true; break; }
            if (in_fan) continue;
            bool compatible = true;
            for (const Cone& c : cones)
                if (!separating_form(cand, c).has_value()) { compatible = false; break; }
            if (compatible) o.two_complete = false;
        }
    }
    return o;
}

}  // namespace toric
