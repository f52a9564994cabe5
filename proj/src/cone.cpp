#include "toricbunch/cone.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace toric {

namespace {

Int dot_int(const IntVector& a, const IntVector& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IntVector primitive_int(const IntVector& v) {
    Int g = 0;
    for (const Int& x : v) g = int_gcd(g, x);
    if (g <= 1) return v;
    IntVector w = v;
    for (Int& x : w) x /= g;
    return w;
}

bool is_zero_vec(const IntVector& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

struct VRepr {
    std::vector<IntVector> lineality;
    std::vector<IntVector> rays;
};

// Double description with explicit lineality handling: start from the full
// space and cut with one constraint at a time.  When some lineality vector
// b0 is not orthogonal to the new constraint, the cone splits as
// (C meet a-hyperplane) + cone(b0); otherwise the classical ray step with
// the combinatorial adjacency test applies.
VRepr dd_enumerate(std::size_t dim, const std::vector<IntVector>& ineqs,
                   const std::vector<IntVector>& eqs) {
    std::vector<IntVector> lin;
    for (std::size_t i = 0; i < dim; ++i) {
        IntVector e(dim, Int(0));
        e[i] = 1;
        lin.push_back(e);
    }
    std::vector<IntVector> rays;
    std::vector<IntVector> processed;  // inequality rows seen so far

    auto tight_set = [&](const IntVector& r) {
        std::vector<bool> t(processed.size());
        for (std::size_t i = 0; i < processed.size(); ++i) t[i] = (dot_int(processed[i], r) == 0);
        return t;
    };

    auto handle = [&](const IntVector& a, bool is_eq) {
        if (is_zero_vec(a)) return;
        // Lineality pivot first.
        std::size_t pivot = lin.size();
        for (std::size_t i = 0; i < lin.size(); ++i)
            if (dot_int(a, lin[i]) != 0) { pivot = i; break; }
        if (pivot < lin.size()) {
            IntVector b0 = lin[pivot];
            Int ab0 = dot_int(a, b0);
            if (ab0 < 0) {
                for (Int& x : b0) x = -x;
                ab0 = -ab0;
            }
            std::vector<IntVector> new_lin;
            for (std::size_t i = 0; i < lin.size(); ++i) {
                if (i == pivot) continue;
                Int c = dot_int(a, lin[i]);
                IntVector b(dim);
                for (std::size_t j = 0; j < dim; ++j) b[j] = ab0 * lin[i][j] - c * b0[j];
                new_lin.push_back(primitive_int(b));
            }
            for (IntVector& r : rays) {
                Int c = dot_int(a, r);
                if (c != 0) {
                    for (std::size_t j = 0; j < dim; ++j) r[j] = ab0 * r[j] - c * b0[j];
                    r = primitive_int(r);
                }
            }
            lin = std::move(new_lin);
            if (!is_eq) rays.push_back(b0);
        } else {
            std::vector<std::size_t> pos, neg, zero;
            std::vector<Int> val(rays.size());
            for (std::size_t i = 0; i < rays.size(); ++i) {
                val[i] = dot_int(a, rays[i]);
                if (val[i] > 0) pos.push_back(i);
                else if (val[i] < 0) neg.push_back(i);
                else zero.push_back(i);
            }
            if (neg.empty() && !is_eq) { processed.push_back(a); return; }
            std::vector<std::vector<bool>> tights(rays.size());
            for (std::size_t i = 0; i < rays.size(); ++i) tights[i] = tight_set(rays[i]);

            auto adjacent = [&](std::size_t p, std::size_t q) {
                std::vector<bool> z(processed.size());
                for (std::size_t i = 0; i < processed.size(); ++i) z[i] = tights[p][i] && tights[q][i];
                for (std::size_t r = 0; r < rays.size(); ++r) {
                    if (r == p || r == q) continue;
                    bool super = true;
                    for (std::size_t i = 0; i < processed.size() && super; ++i)
                        if (z[i] && !tights[r][i]) super = false;
                    if (super) return false;
                }
                return true;
            };

            std::vector<IntVector> next;
            std::set<IntVector> seen;
            auto push = [&](const IntVector& r) {
                IntVector p = primitive_int(r);
                if (seen.insert(p).second) next.push_back(p);
            };
            if (!is_eq)
                for (std::size_t i : pos) push(rays[i]);
            for (std::size_t i : zero) push(rays[i]);
            for (std::size_t p : pos)
                for (std::size_t n : neg) {
                    if (!adjacent(p, n)) continue;
                    IntVector w(dim);
                    for (std::size_t j = 0; j < dim; ++j)
                        w[j] = val[p] * rays[n][j] - val[n] * rays[p][j];
                    if (!is_zero_vec(w)) push(w);
                }
            rays = std::move(next);
        }
        processed.push_back(a);
    };

    for (const IntVector& e : eqs) handle(e, true);
    for (const IntVector& a : ineqs) handle(a, false);
    return {lin, rays};
}

std::vector<IntVector> int_rows(const std::vector<RatVector>& rows) {
    std::vector<IntVector> out;
    out.reserve(rows.size());
    for (const RatVector& r : rows) out.push_back(primitive(r));
    return out;
}

std::vector<RatVector> rat_rows(const std::vector<IntVector>& rows) {
    std::vector<RatVector> out;
    out.reserve(rows.size());
    for (const IntVector& r : rows) out.push_back(rat_vector(r));
    return out;
}

std::vector<RatVector> matrix_rows(const IntMatrix& m) {
    std::vector<RatVector> out;
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(rat_vector(m.row(i)));
    return out;
}

// Canonical lattice basis of the span of the given vectors.
IntMatrix span_lattice_basis(std::size_t dim, const std::vector<IntVector>& vecs) {
    if (vecs.empty()) return IntMatrix(0, dim);
    Sublattice ann = annihilator(rat_rows(vecs), dim);
    return kernel_basis(ann.basis).basis;
}

// Reduce v modulo the row span of an HNF basis, zeroing the pivot
// coordinates; the result is the canonical coset representative.
RatVector reduce_mod_span(const IntMatrix& basis, const RatVector& v) {
    RatVector r = v;
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        std::size_t p = 0;
        while (p < basis.cols() && basis.at(i, p) == 0) ++p;
        if (p == basis.cols()) continue;
        Rat c = r[p] / Rat(basis.at(i, p));
        if (c == 0) continue;
        for (std::size_t j = 0; j < basis.cols(); ++j) r[j] -= c * Rat(basis.at(i, j));
    }
    return r;
}

std::vector<IntVector> canonical_rays(const IntMatrix& lin_basis,
                                      const std::vector<IntVector>& rays) {
    std::set<IntVector> out;
    for (const IntVector& r : rays) {
        IntVector c = primitive(reduce_mod_span(lin_basis, rat_vector(r)));
        if (!is_zero_vec(c)) out.insert(c);
    }
    return std::vector<IntVector>(out.begin(), out.end());
}

}  // namespace

Cone Cone::from_generators(std::size_t ambient, const std::vector<RatVector>& generators,
                           const std::vector<RatVector>& lineality_gens) {
    // Dual cone by ray enumeration of {u : u.g >= 0, u.l = 0}, then back.
    std::vector<IntVector> gen_rows = int_rows(generators);
    std::vector<IntVector> lin_rows = int_rows(lineality_gens);
    VRepr dual = dd_enumerate(ambient, gen_rows, lin_rows);
    VRepr primal = dd_enumerate(ambient, dual.rays, dual.lineality);

    Cone c;
    c.ambient_ = ambient;
    c.lineality_ = span_lattice_basis(ambient, primal.lineality);
    c.rays_ = canonical_rays(c.lineality_, primal.rays);
    c.equations_ = span_lattice_basis(ambient, dual.lineality);
    c.facets_ = canonical_rays(c.equations_, dual.rays);
    c.dim_ = ambient - c.equations_.rows();
    return c;
}

Cone Cone::from_inequalities(std::size_t ambient, const std::vector<RatVector>& inequalities,
                             const std::vector<RatVector>& equations) {
    VRepr primal = dd_enumerate(ambient, int_rows(inequalities), int_rows(equations));
    std::vector<RatVector> gens = rat_rows(primal.rays);
    std::vector<RatVector> lins = rat_rows(primal.lineality);
    return from_generators(ambient, gens, lins);
}

Cone Cone::zero(std::size_t ambient) { return from_generators(ambient, {}); }

Cone Cone::full_space(std::size_t ambient) {
    std::vector<RatVector> lin;
    for (std::size_t i = 0; i < ambient; ++i) {
        RatVector e(ambient, Rat(0));
        e[i] = 1;
        lin.push_back(e);
    }
    return from_generators(ambient, {}, lin);
}

Cone Cone::positive_orthant(std::size_t ambient) {
    std::vector<RatVector> gens;
    for (std::size_t i = 0; i < ambient; ++i) {
        RatVector e(ambient, Rat(0));
        e[i] = 1;
        gens.push_back(e);
    }
    return from_generators(ambient, gens);
}

bool Cone::is_simplicial() const {
    return is_strictly_convex() && rays_.size() == dim_;
}

bool Cone::is_regular() const {
    if (!is_simplicial()) return false;
    std::vector<IntVector> rows(rays_.begin(), rays_.end());
    if (rows.empty()) return true;
    Sublattice s{ambient_, IntMatrix::from_rows(rows, ambient_)};
    return saturation_index(s) == 1;
}

bool Cone::contains(const RatVector& x) const {
    for (std::size_t i = 0; i < equations_.rows(); ++i)
        if (dot(rat_vector(equations_.row(i)), x) != 0) return false;
    for (const IntVector& f : facets_)
        if (dot(rat_vector(f), x) < 0) return false;
    return true;
}

bool Cone::relint_contains(const RatVector& x) const {
    for (std::size_t i = 0; i < equations_.rows(); ++i)
        if (dot(rat_vector(equations_.row(i)), x) != 0) return false;
    for (const IntVector& f : facets_)
        if (dot(rat_vector(f), x) <= 0) return false;
    return true;
}

bool Cone::contains_cone(const Cone& other) const {
    for (const IntVector& r : other.rays_)
        if (!contains(rat_vector(r))) return false;
    for (std::size_t i = 0; i < other.lineality_.rows(); ++i) {
        RatVector l = rat_vector(other.lineality_.row(i));
        if (!contains(l) || !contains(negate(l))) return false;
    }
    return true;
}

RatVector Cone::relint_point() const {
    RatVector p(ambient_, Rat(0));
    for (const IntVector& r : rays_) p = add(p, rat_vector(r));
    return p;
}

std::vector<RatVector> Cone::generators() const {
    std::vector<RatVector> g;
    for (const IntVector& r : rays_) g.push_back(rat_vector(r));
    for (std::size_t i = 0; i < lineality_.rows(); ++i) g.push_back(rat_vector(lineality_.row(i)));
    return g;
}

bool Cone::operator<(const Cone& o) const {
    if (ambient_ != o.ambient_) return ambient_ < o.ambient_;
    auto lin_rows = [](const Cone& c) {
        std::vector<IntVector> rows;
        for (std::size_t i = 0; i < c.lineality_.rows(); ++i) rows.push_back(c.lineality_.row(i));
        return rows;
    };
    std::vector<IntVector> la = lin_rows(*this), lb = lin_rows(o);
    if (la != lb) return la < lb;
    return rays_ < o.rays_;
}

Cone dual_cone(const Cone& c) {
    // Facet normals generate the dual, span equations give its lineality.
    std::vector<RatVector> gens;
    for (const IntVector& f : c.facet_normals()) gens.push_back(rat_vector(f));
    std::vector<RatVector> lin;
    for (std::size_t i = 0; i < c.span_equations().rows(); ++i)
        lin.push_back(rat_vector(c.span_equations().row(i)));
    return Cone::from_generators(c.ambient_dim(), gens, lin);
}

Cone intersect(const Cone& a, const Cone& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient mismatch");
    std::vector<RatVector> ineqs, eqs;
    for (const IntVector& f : a.facet_normals()) ineqs.push_back(rat_vector(f));
    for (const IntVector& f : b.facet_normals()) ineqs.push_back(rat_vector(f));
    for (std::size_t i = 0; i < a.span_equations().rows(); ++i)
        eqs.push_back(rat_vector(a.span_equations().row(i)));
    for (std::size_t i = 0; i < b.span_equations().rows(); ++i)
        eqs.push_back(rat_vector(b.span_equations().row(i)));
    return Cone::from_inequalities(a.ambient_dim(), ineqs, eqs);
}

Cone minkowski_sum(std::size_t ambient, const std::vector<Cone>& cones) {
    std::vector<RatVector> gens, lin;
    for (const Cone& c : cones) {
        if (c.ambient_dim() != ambient) throw std::invalid_argument("ambient mismatch");
        for (const IntVector& r : c.rays()) gens.push_back(rat_vector(r));
        for (std::size_t i = 0; i < c.lineality_basis().rows(); ++i)
            lin.push_back(rat_vector(c.lineality_basis().row(i)));
    }
    return Cone::from_generators(ambient, gens, lin);
}

std::vector<RatVector> linear_span(const Cone& c) {
    return matrix_rows(kernel_basis(c.span_equations()).basis);
}

bool relint_overlap(const Cone& a, const Cone& b) {
    // A generic relative-interior point of the intersection lies in both
    // relative interiors exactly when those meet.  The relative interior
    // of the zero cone is {0}, so the zero cone overlaps itself.
    Cone w = intersect(a, b);
    RatVector z = w.relint_point();
    return a.relint_contains(z) && b.relint_contains(z);
}

bool relint_overlap_feasibility(const Cone& a, const Cone& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient mismatch");
    const std::size_t n = a.ambient_dim();

    // Variables: lambda (rays of a), mu (rays of b), free lineality
    // coefficients for both, and the scaling t.
    const std::size_t na = a.rays().size(), nb = b.rays().size();
    const std::size_t la = a.lineality_basis().rows(), lb = b.lineality_basis().rows();
    const std::size_t vars = na + nb + la + lb + 1;

    std::vector<RatVector> eqs;
    for (std::size_t j = 0; j < n; ++j) {
        RatVector row(vars, Rat(0));
        for (std::size_t i = 0; i < na; ++i) row[i] = Rat(a.rays()[i][j]);
        for (std::size_t i = 0; i < nb; ++i) row[na + i] = -Rat(b.rays()[i][j]);
        for (std::size_t i = 0; i < la; ++i) row[na + nb + i] = Rat(a.lineality_basis().at(i, j));
        for (std::size_t i = 0; i < lb; ++i)
            row[na + nb + la + i] = -Rat(b.lineality_basis().at(i, j));
        eqs.push_back(row);
    }
    std::vector<RatVector> weak;
    for (std::size_t i = 0; i < na + nb; ++i) {
        RatVector row(vars, Rat(0));
        row[i] = 1;
        row[vars - 1] = -1;
        weak.push_back(row);
    }
    RatVector trow(vars, Rat(0));
    trow[vars - 1] = 1;
    return strict_feasible(vars, eqs, weak, {trow}).has_value();
}

bool relint_subset(const Cone& inner, const Cone& outer) {
    return outer.contains_cone(inner) && relint_overlap(inner, outer);
}

bool is_face_of(const Cone& face, const Cone& c) {
    if (face.ambient_dim() != c.ambient_dim()) return false;
    if (face.lineality_basis() != c.lineality_basis()) return false;
    if (!c.contains_cone(face)) return false;
    // The rays of a face are rays of the cone; find them and demand a
    // supporting linear form vanishing exactly there.
    std::vector<bool> in_face(c.rays().size());
    std::vector<IntVector> selected;
    for (std::size_t i = 0; i < c.rays().size(); ++i) {
        in_face[i] = face.contains(rat_vector(c.rays()[i]));
        if (in_face[i]) selected.push_back(c.rays()[i]);
    }
    if (selected != face.rays()) return false;
    std::vector<RatVector> eqs, strict;
    for (std::size_t i = 0; i < c.rays().size(); ++i)
        (in_face[i] ? eqs : strict).push_back(rat_vector(c.rays()[i]));
    for (std::size_t i = 0; i < c.lineality_basis().rows(); ++i)
        eqs.push_back(rat_vector(c.lineality_basis().row(i)));
    return strict_feasible(c.ambient_dim(), eqs, {}, strict).has_value();
}

std::vector<std::vector<std::size_t>> face_ray_sets(const Cone& c, std::size_t max_faces) {
    if (!c.is_strictly_convex())
        throw std::invalid_argument("face enumeration requires a strictly convex cone");
    const std::size_t m = c.rays().size();
    // Zero sets of the facet normals on the rays.
    std::vector<std::vector<bool>> facet_zero;
    for (const IntVector& f : c.facet_normals()) {
        std::vector<bool> z(m);
        for (std::size_t i = 0; i < m; ++i) z[i] = (dot_int(f, c.rays()[i]) == 0);
        facet_zero.push_back(z);
    }
    std::set<std::vector<std::size_t>> seen;
    std::vector<std::vector<std::size_t>> queue;
    std::vector<std::size_t> top(m);
    for (std::size_t i = 0; i < m; ++i) top[i] = i;
    seen.insert(top);
    queue.push_back(top);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        std::vector<std::size_t> cur = queue[qi];
        for (const auto& z : facet_zero) {
            std::vector<std::size_t> sub;
            for (std::size_t i : cur)
                if (z[i]) sub.push_back(i);
            if (sub.size() == cur.size()) continue;
            if (seen.insert(sub).second) {
                if (seen.size() > max_faces)
                    throw FaceEnumerationTooLarge("face lattice exceeds configured bound");
                queue.push_back(sub);
            }
        }
    }
    // The zero face is the intersection of all facets of a strictly convex
    // cone; it is reached by the sweep, except for the zero cone itself.
    std::vector<std::vector<std::size_t>> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    return out;
}

std::vector<Cone> faces(const Cone& c, std::size_t max_faces) {
    std::vector<Cone> out;
    for (const auto& s : face_ray_sets(c, max_faces)) {
        std::vector<RatVector> gens;
        for (std::size_t i : s) gens.push_back(rat_vector(c.rays()[i]));
        out.push_back(Cone::from_generators(c.ambient_dim(), gens));
    }
    return out;
}

std::optional<RatVector> strict_feasible(std::size_t dim, const std::vector<RatVector>& eqs,
                                         const std::vector<RatVector>& weak,
                                         const std::vector<RatVector>& strict) {
    std::vector<IntVector> ineq_rows = int_rows(weak);
    std::vector<IntVector> strict_rows = int_rows(strict);
    for (const IntVector& s : strict_rows) ineq_rows.push_back(s);
    VRepr sol = dd_enumerate(dim, ineq_rows, int_rows(eqs));
    // Lineality of the solution cone is orthogonal to every constraint, so
    // only extreme rays can witness strict positivity; if every strict row
    // is positive somewhere, the sum of all rays is positive everywhere.
    for (const IntVector& s : strict_rows) {
        bool covered = false;
        for (const IntVector& r : sol.rays)
            if (dot_int(s, r) > 0) { covered = true; break; }
        if (!covered) return std::nullopt;
    }
    IntVector sum(dim, Int(0));
    for (const IntVector& r : sol.rays)
        for (std::size_t j = 0; j < dim; ++j) sum[j] += r[j];
    return rat_vector(primitive_int(sum));
}

std::optional<RatVector> separating_form(const Cone& a, const Cone& b,
                                         const std::vector<RatVector>& invariance) {
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient mismatch");
    const std::size_t n = a.ambient_dim();
    Cone w = intersect(a, b);
    std::vector<RatVector> eqs = invariance;
    std::vector<RatVector> strict;
    for (const IntVector& r : a.rays()) {
        RatVector rr = rat_vector(r);
        (w.contains(rr) ? eqs : strict).push_back(rr);
    }
    for (const IntVector& r : b.rays()) {
        RatVector rr = rat_vector(r);
        if (w.contains(rr)) eqs.push_back(rr);
        else strict.push_back(negate(rr));
    }
    for (std::size_t i = 0; i < a.lineality_basis().rows(); ++i)
        eqs.push_back(rat_vector(a.lineality_basis().row(i)));
    for (std::size_t i = 0; i < b.lineality_basis().rows(); ++i)
        eqs.push_back(rat_vector(b.lineality_basis().row(i)));
    return strict_feasible(n, eqs, {}, strict);
}

}  // namespace toric
