#include "toricbunch/bunch.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "toricbunch/errors.hpp"
#include "toricbunch/parallel.hpp"

namespace toric {

namespace {

// Relations between distinct projected-face cones, precomputed once.
struct ConeRelations {
    // char, not bool: rows are written concurrently element-wise.
    std::vector<std::vector<char>> overlap;   // relint(i) meets relint(j)
    std::vector<std::vector<char>> rsubset;   // relint(i) inside relint(j)
};

ConeRelations relations(const std::vector<Cone>& cones) {
    const std::size_t n = cones.size();
    ConeRelations r;
    r.overlap.assign(n, std::vector<char>(n, 0));
    r.rsubset.assign(n, std::vector<char>(n, 0));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) pairs.emplace_back(i, j);
    parallel_for(pairs.size(), [&](std::size_t p) {
        auto [i, j] = pairs[p];
        bool ov = relint_overlap(cones[i], cones[j]);
        r.overlap[i][j] = r.overlap[j][i] = ov ? 1 : 0;
        if (ov) {
            if (cones[j].contains_cone(cones[i])) r.rsubset[i][j] = 1;
            if (cones[i].contains_cone(cones[j])) r.rsubset[j][i] = 1;
        }
    });
    return r;
}

// The defining condition (2.2) for candidate tau0 against the members,
// skipping members equal to tau0 itself.
bool bunch_condition(std::size_t tau0, const std::vector<std::size_t>& theta,
                     const ConeRelations& rel) {
    for (std::size_t t : theta) {
        if (t == tau0) continue;
        if (!rel.overlap[tau0][t]) return false;   // empty intersection of relints
        if (rel.rsubset[t][tau0]) return false;    // swallows relint(tau)
    }
    return true;
}

// Empty reason on success, otherwise the violated condition's name.
std::string check_biconditional(const std::vector<std::size_t>& theta, std::size_t n_cones,
                                const ConeRelations& rel) {
    if (theta.empty()) return "Def 2.2 nonempty";
    std::vector<bool> member(n_cones, false);
    for (std::size_t i : theta) member[i] = true;
    for (std::size_t d = 0; d < n_cones; ++d) {
        bool cond = bunch_condition(d, theta, rel);
        if (member[d] && !cond) return "Def 2.2 overlap/irredundancy";
        if (!member[d] && cond) return "Def 2.2 maximality";
    }
    return "";
}

std::vector<std::size_t> resolve_candidates(const ProjectedFaceTable& t,
                                            const std::vector<Cone>& candidate) {
    std::map<Cone, std::size_t> index;
    for (std::size_t i = 0; i < t.cones.size(); ++i) index.emplace(t.cones[i], i);
    std::set<std::size_t> theta;
    for (std::size_t i = 0; i < candidate.size(); ++i) {
        auto it = index.find(candidate[i]);
        if (it == index.end()) throw NotAProjectedFace(i);
        theta.insert(it->second);
    }
    return std::vector<std::size_t>(theta.begin(), theta.end());
}

}  // namespace

ProjectedFaceTable projected_face_table(const ProjectedCone& pc, std::size_t max_rank) {
    if (pc.e_rank() > max_rank)
        throw EnumerationTooLarge("projected-face enumeration beyond configured rank cap");
    ProjectedFaceTable t;
    t.faces = all_face_sets(pc.e_rank());
    t.cone_index.resize(t.faces.size());

    // Distinct generator sets first (cheap dedup before cone construction),
    // then dedup by canonical cone equality.
    std::map<std::vector<IntVector>, std::size_t> by_gens;
    std::map<Cone, std::size_t> by_cone;
    for (std::size_t f = 0; f < t.faces.size(); ++f) {
        std::set<IntVector> key_set;
        for (std::size_t i : t.faces[f]) {
            IntVector w = primitive(pc.project(rat_vector(pc.gamma_generators()[i])));
            bool zero = true;
            for (const Int& x : w)
                if (x != 0) { zero = false; break; }
            if (!zero) key_set.insert(w);
        }
        std::vector<IntVector> key(key_set.begin(), key_set.end());
        auto it = by_gens.find(key);
        std::size_t idx;
        if (it != by_gens.end()) {
            idx = it->second;
        } else {
            Cone c = pc.projected_face(t.faces[f]);
            auto jt = by_cone.find(c);
            if (jt != by_cone.end()) {
                idx = jt->second;
            } else {
                idx = t.cones.size();
                t.cones.push_back(c);
                t.witnesses.emplace_back();
                by_cone.emplace(c, idx);
            }
            by_gens.emplace(std::move(key), idx);
        }
        t.cone_index[f] = idx;
        t.witnesses[idx].push_back(t.faces[f]);
    }
    return t;
}

VerifyReport verify_bunch(const ProjectedCone& pc, const std::vector<Cone>& candidate,
                          std::size_t max_rank) {
    if (candidate.empty()) return {false, "Def 2.2 nonempty"};
    ProjectedFaceTable t = projected_face_table(pc, max_rank);
    std::vector<std::size_t> theta = resolve_candidates(t, candidate);
    std::string reason = check_biconditional(theta, t.cones.size(), relations(t.cones));
    return {reason.empty(), reason};
}

Bunch::Bunch(ProjectedCone pc, const std::vector<Cone>& element_cones, std::size_t max_rank)
    : pc_(std::move(pc)), table_(projected_face_table(pc_, max_rank)) {
    std::vector<std::size_t> theta = resolve_candidates(table_, element_cones);
    std::string reason = check_biconditional(theta, table_.cones.size(), relations(table_.cones));
    if (!reason.empty()) throw ConditionViolated(reason);
    finish(theta);
}

Bunch::Bunch(Verified, ProjectedCone pc, ProjectedFaceTable table,
             const std::vector<std::size_t>& theta)
    : pc_(std::move(pc)), table_(std::move(table)) {
    finish(theta);
}

void Bunch::finish(const std::vector<std::size_t>& theta) {
    for (std::size_t i : theta)
        elements_.push_back(BunchElement{table_.cones[i], table_.witnesses[i].front()});
    std::sort(elements_.begin(), elements_.end());

    // Covering collection: minimal faces whose image contains an element.
    // Containment of cones is monotone in the face, so scanning by size
    // with pruning against the minimal list is enough.
    for (std::size_t fi = 0; fi < table_.faces.size(); ++fi) {  // ordered by size then lex
        const FaceSet& f = table_.faces[fi];
        bool dominated = false;
        for (const FaceSet& m : cov_)
            if (std::includes(f.begin(), f.end(), m.begin(), m.end())) { dominated = true; break; }
        if (dominated) continue;
        const Cone& img = table_.cones[table_.cone_index[fi]];
        for (std::size_t ti : theta)
            if (img.contains_cone(table_.cones[ti])) { cov_.push_back(f); break; }
    }
    std::sort(cov_.begin(), cov_.end(), [](const FaceSet& a, const FaceSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
}

std::vector<Cone> Bunch::element_cones() const {
    std::vector<Cone> cs;
    for (const BunchElement& e : elements_) cs.push_back(e.cone);
    return cs;
}

bool Bunch::has_element(const Cone& c) const {
    for (const BunchElement& e : elements_)
        if (e.cone == c) return true;
    return false;
}

Bunch bunch_from_weights(const WeightSystem& ws,
                         const std::vector<std::vector<std::size_t>>& cones) {
    const std::size_t n = ws.weights.size();
    IntMatrix q(ws.k_rank, n);
    for (std::size_t j = 0; j < n; ++j) {
        if (ws.weights[j].size() != ws.k_rank)
            throw InvalidParameters("weight dimension mismatch");
        for (std::size_t i = 0; i < ws.k_rank; ++i) q.at(i, j) = ws.weights[j][i];
    }
    if (!is_surjective(q)) throw InvalidParameters("weights must generate K as a lattice");
    std::vector<RatVector> gamma;
    for (std::size_t i = 0; i < n; ++i) {
        RatVector e(n, Rat(0));
        e[i] = 1;
        gamma.push_back(e);
    }
    ProjectedCone pc(q, gamma);
    std::vector<Cone> element_cones;
    for (const auto& idxs : cones) {
        std::vector<RatVector> gens;
        for (std::size_t i : idxs) gens.push_back(rat_vector(ws.weights.at(i)));
        element_cones.push_back(Cone::from_generators(ws.k_rank, gens));
    }
    return Bunch(pc, element_cones);
}

std::vector<IntVector> weight_vectors(const Bunch& b) {
    std::vector<IntVector> w;
    for (const IntVector& g : b.pc().gamma_generators()) {
        RatVector img = b.pc().project(rat_vector(g));
        IntVector iw(img.size());
        for (std::size_t i = 0; i < img.size(); ++i) iw[i] = rat_num(img[i]);
        w.push_back(iw);
    }
    return w;
}

bool is_standard(const Bunch& b) {
    const ProjectedCone& pc = b.pc();
    const std::size_t e = pc.e_rank(), k = pc.k_rank();
    for (std::size_t i = 0; i < e; ++i) {
        FaceSet facet;
        for (std::size_t j = 0; j < e; ++j)
            if (j != i) facet.push_back(j);
        if (pc.face_image_lattice(facet).basis != IntMatrix::identity(k)) return false;
        Cone img = pc.projected_face(facet);
        bool covered = false;
        for (const BunchElement& el : b.elements())
            if (relint_subset(el.cone, img)) { covered = true; break; }
        if (!covered) return false;
    }
    return true;
}

bool is_free(const Bunch& b) { return b.pc().gamma_cone().is_regular(); }

bool is_geometric(const Bunch& b) {
    for (const BunchElement& el : b.elements())
        if (el.cone.dim() != b.k_rank()) return false;
    return true;
}

bool is_simple(const Bunch& b) {
    if (!is_standard(b)) return false;
    const std::size_t k = b.k_rank();
    for (const FaceSet& f : b.covering_collection()) {
        if (f.size() != k) return false;
        if (b.pc().face_image_lattice(f).basis != IntMatrix::identity(k)) return false;
    }
    return true;
}

DictionaryReport dictionary(const Bunch& b) {
    if (!is_standard(b)) throw NotStandard("dictionary requires a standard bunch");
    const ProjectedCone& pc = b.pc();
    const std::size_t k = pc.k_rank();
    DictionaryReport r;

    r.q_factorial = true;
    for (const BunchElement& el : b.elements())
        if (el.cone.dim() != k) r.q_factorial = false;

    r.smooth = true;
    r.full = true;
    for (const FaceSet& f : b.covering_collection()) {
        if (!pc.star_cone(f).is_regular() ||
            pc.face_image_lattice(f).basis != IntMatrix::identity(k))
            r.smooth = false;
        if (!pc.projected_face(f).is_simplicial()) r.full = false;
    }

    r.only_constant_functions = true;
    for (const IntVector& g : pc.gamma_generators())
        if (is_zero(pc.project(rat_vector(g)))) r.only_constant_functions = false;
    FaceSet all;
    for (std::size_t i = 0; i < pc.e_rank(); ++i) all.push_back(i);
    if (!pc.projected_face(all).is_strictly_convex()) r.only_constant_functions = false;

    // Completeness: some element is simplicial, and any face whose image
    // interior swallows some element's interior and which lies above
    // exactly one covering face must itself be covering.
    r.complete = false;
    for (const BunchElement& el : b.elements())
        if (el.cone.is_simplicial()) r.complete = true;
    if (r.complete) {
        std::set<FaceSet> cov_set(b.covering_collection().begin(), b.covering_collection().end());
        for (std::size_t fi = 0; fi < b.table().faces.size(); ++fi) {
            const FaceSet& f = b.table().faces[fi];
            const Cone& img = b.table().cones[b.table().cone_index[fi]];
            bool swallows = false;
            for (const BunchElement& el : b.elements())
                if (relint_subset(el.cone, img)) { swallows = true; break; }
            if (!swallows) continue;
            std::size_t above = 0;
            for (const FaceSet& m : b.covering_collection())
                if (std::includes(f.begin(), f.end(), m.begin(), m.end())) ++above;
            if (above == 1 && !cov_set.count(f)) { r.complete = false; break; }
        }
    }
    return r;
}

std::vector<Bunch> enumerate_bunches(const ProjectedCone& pc, std::size_t max_distinct_faces) {
    ProjectedFaceTable t = projected_face_table(pc);
    const std::size_t n = t.cones.size();
    if (n > max_distinct_faces)
        throw EnumerationTooLarge("distinct projected faces exceed the enumeration cap");
    ConeRelations rel = relations(t.cones);

    std::vector<Bunch> out;
    std::vector<std::size_t> chosen;
    // Depth-first over overlapping antichains; the member-side conditions
    // hold by construction, so only maximality needs a scan.
    auto emit = [&]() {
        if (chosen.empty()) return;
        std::vector<bool> member(n, false);
        for (std::size_t i : chosen) member[i] = true;
        for (std::size_t d = 0; d < n; ++d)
            if (!member[d] && bunch_condition(d, chosen, rel)) return;
        out.push_back(Bunch(Bunch::Verified{}, pc, t, chosen));
    };
    std::function<void(std::size_t)> dfs = [&](std::size_t start) {
        emit();
        for (std::size_t j = start; j < n; ++j) {
            bool ok = true;
            for (std::size_t i : chosen)
                if (!rel.overlap[i][j] || rel.rsubset[i][j] || rel.rsubset[j][i]) { ok = false; break; }
            if (!ok) continue;
            chosen.push_back(j);
            dfs(j + 1);
            chosen.pop_back();
        }
    };
    dfs(0);

    std::sort(out.begin(), out.end(), [](const Bunch& a, const Bunch& b) {
        return a.element_cones() < b.element_cones();
    });
    return out;
}

std::optional<IntMatrix> free_bunch_isomorphic(const Bunch& a, const Bunch& b,
                                               std::size_t max_candidates) {
    if (!is_free(a) || !is_free(b)) throw NotFree("isomorphism search requires free bunches");
    const std::size_t k = a.k_rank();
    if (k != b.k_rank()) return std::nullopt;
    std::vector<IntVector> wa = weight_vectors(a), wb = weight_vectors(b);
    if (wa.size() != wb.size()) return std::nullopt;

    std::multiset<IntVector> mb(wb.begin(), wb.end());
    auto theta_b = b.element_cones();
    std::set<Cone> theta_b_set(theta_b.begin(), theta_b.end());

    if (k == 0) return IntMatrix(0, 0);

    // Deterministic spanning tuple from a's distinct weights.
    std::set<IntVector> sa(wa.begin(), wa.end()), sb(wb.begin(), wb.end());
    std::vector<IntVector> da(sa.begin(), sa.end());
    std::vector<IntVector> db(sb.begin(), sb.end());
    std::vector<std::size_t> tuple;
    std::vector<RatVector> picked;
    for (std::size_t i = 0; i < da.size() && tuple.size() < k; ++i) {
        picked.push_back(rat_vector(da[i]));
        if (rank(picked) == tuple.size() + 1) tuple.push_back(i);
        else picked.pop_back();
    }
    if (tuple.size() < k) return std::nullopt;

    IntMatrix t1(k, k);
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t r = 0; r < k; ++r) t1.at(r, c) = da[tuple[c]][r];

    // Enumerate ordered k-tuples of b's distinct weights as candidate images.
    std::vector<std::size_t> idx(k, 0);
    std::size_t tried = 0;
    std::function<std::optional<IntMatrix>(std::size_t)> rec =
        [&](std::size_t pos) -> std::optional<IntMatrix> {
        if (pos == k) {
            if (++tried > max_candidates) throw SearchTooLarge("isomorphism search too large");
            IntMatrix t2(k, k);
            for (std::size_t c = 0; c < k; ++c)
                for (std::size_t r = 0; r < k; ++r) t2.at(r, c) = db[idx[c]][r];
            // Solve phi * t1 = t2 over the rationals, demand unimodularity.
            IntMatrix phi(k, k);
            for (std::size_t r = 0; r < k; ++r) {
                auto x = solve_rational(t1.transpose(), rat_vector(t2.row(r)));
                if (!x) return std::nullopt;
                for (std::size_t c = 0; c < k; ++c) {
                    if (rat_den((*x)[c]) != 1) return std::nullopt;
                    phi.at(r, c) = rat_num((*x)[c]);
                }
            }
            Int dp = determinant(phi);
            if (dp != 1 && dp != -1) return std::nullopt;
            // Weight multisets must match.
            std::multiset<IntVector> mapped;
            for (const IntVector& w : wa) mapped.insert(phi.apply(w));
            if (mapped != mb) return std::nullopt;
            // Element cones must map onto each other.
            std::set<Cone> mapped_theta;
            for (const Cone& c : a.element_cones()) {
                std::vector<RatVector> gens, lins;
                for (const IntVector& r : c.rays()) gens.push_back(phi.apply(rat_vector(r)));
                for (std::size_t i = 0; i < c.lineality_basis().rows(); ++i)
                    lins.push_back(phi.apply(rat_vector(c.lineality_basis().row(i))));
                mapped_theta.insert(Cone::from_generators(k, gens, lins));
            }
            if (mapped_theta != theta_b_set) return std::nullopt;
            return phi;
        }
        for (idx[pos] = 0; idx[pos] < db.size(); ++idx[pos]) {
            bool dup = false;
            for (std::size_t q = 0; q < pos; ++q)
                if (idx[q] == idx[pos]) dup = true;
            if (dup) continue;
            auto res = rec(pos + 1);
            if (res) return res;
        }
        return std::nullopt;
    };
    return rec(0);
}

}  // namespace toric
