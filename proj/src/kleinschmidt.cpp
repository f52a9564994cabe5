#include "toricbunch/kleinschmidt.hpp"

#include <algorithm>
#include <map>

#include "toricbunch/divisor.hpp"
#include "toricbunch/errors.hpp"

namespace toric {

void validate(const KleinschmidtData& d) {
    const std::size_t n = d.mu.size();
    if (n < 2) throw InvalidParameters("need at least two weight vectors");
    if (d.b.size() != n - 1) throw InvalidParameters("b must list b_2..b_n");
    if (d.b.back() != 0) throw InvalidParameters("b_n must be 0");
    for (std::size_t i = 0; i + 1 < d.b.size(); ++i)
        if (!(d.b[i] > d.b[i + 1])) throw InvalidParameters("b must decrease strictly");
    if (d.b.front() < 0) throw InvalidParameters("b must be nonnegative");
    if (d.mu[0] <= 1) throw InvalidParameters("mu_1 must exceed 1");
    Int tail = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (d.mu[i] <= 0) throw InvalidParameters("multiplicities must be positive");
        tail += d.mu[i];
    }
    if (tail <= 1) throw InvalidParameters("mu_2 + ... + mu_n must exceed 1");
}

namespace {

std::vector<IntVector> kleinschmidt_weights(const KleinschmidtData& d) {
    std::vector<IntVector> w;
    for (Int i = 0; i < d.mu[0]; ++i) w.push_back({Int(1), Int(0)});
    for (std::size_t j = 1; j < d.mu.size(); ++j)
        for (Int i = 0; i < d.mu[j]; ++i) w.push_back({d.b[j - 1], Int(1)});
    return w;
}

}  // namespace

Bunch kleinschmidt_to_bunch(const KleinschmidtData& d) {
    validate(d);
    std::vector<IntVector> w = kleinschmidt_weights(d);
    // The collection is the single cone on w1 = (1,0) and w2 = (b_2,1);
    // the first (b_2,1) sits right after the mu_1 copies of w1.
    std::size_t w2_index = static_cast<std::size_t>(d.mu[0].convert_to<long>());
    return bunch_from_weights(WeightSystem{2, w}, {{0, w2_index}});
}

bool kleinschmidt_is_fano(const KleinschmidtData& d) {
    validate(d);
    Bunch b = kleinschmidt_to_bunch(d);
    IntVector anti = canonical_class(b);
    for (Int& x : anti) x = -x;
    return is_ample(b, rat_vector(anti));
}

bool kleinschmidt_inequality_literal(const KleinschmidtData& d) {
    const std::size_t n = d.mu.size();
    Int lhs = 0;
    for (std::size_t i = 2; i < n; ++i) lhs += d.mu[i];
    lhs *= d.b[0];
    Int rhs = d.mu[0];
    for (std::size_t j = 1; j + 1 < n; ++j) rhs += d.b[j - 1] * d.mu[j + 1];
    return lhs < rhs;
}

std::vector<KleinschmidtData> enumerate_kleinschmidt(std::size_t dim, const Int& max_b) {
    if (dim < 2) throw InvalidParameters("dimension must be at least 2");
    const Int total = Int(dim) + 2;
    std::vector<KleinschmidtData> raw;

    // n ranges over the number of distinct weights; mu_1 >= 2 and the
    // others >= 1 bound it by dim + 1.
    for (std::size_t n = 2; n <= dim + 1; ++n) {
        // Strictly decreasing b_2 > ... > b_{n-1} > b_n = 0 within [0, max_b].
        std::vector<std::vector<Int>> bseqs;
        std::vector<Int> cur;
        std::function<void(Int)> pick = [&](Int low) {
            if (cur.size() == n - 2) {
                std::vector<Int> b = cur;
                b.push_back(0);
                bseqs.push_back(b);
                return;
            }
            for (Int v = low; v <= max_b; ++v) {
                cur.insert(cur.begin(), v);  // build descending
                pick(v + 1);
                cur.erase(cur.begin());
            }
        };
        pick(1);
        // Compositions of total into n parts, mu_1 >= 2, others >= 1.
        std::vector<std::vector<Int>> mus;
        std::vector<Int> m;
        std::function<void(std::size_t, Int)> comp = [&](std::size_t pos, Int left) {
            if (pos + 1 == n) {
                if (left >= 1) {
                    m.push_back(left);
                    std::vector<Int> whole = m;
                    mus.push_back(whole);
                    m.pop_back();
                }
                return;
            }
            Int lo = pos == 0 ? 2 : 1;
            for (Int v = lo; v + Int(n - pos - 1) <= left; ++v) {
                m.push_back(v);
                comp(pos + 1, left - v);
                m.pop_back();
            }
        };
        comp(0, total);
        for (const auto& b : bseqs)
            for (const auto& mu : mus) {
                KleinschmidtData d{b, mu};
                Int tail = 0;
                for (std::size_t i = 1; i < mu.size(); ++i) tail += mu[i];
                if (tail <= 1) continue;
                raw.push_back(d);
            }
    }

    std::sort(raw.begin(), raw.end(), [](const KleinschmidtData& x, const KleinschmidtData& y) {
        if (x.n() != y.n()) return x.n() < y.n();
        if (x.b != y.b) return x.b < y.b;
        return x.mu < y.mu;
    });

    // Drop isomorphism duplicates (the normal form is almost unique; the
    // remaining collisions are caught by the search).
    std::vector<KleinschmidtData> out;
    std::vector<Bunch> kept;
    for (const KleinschmidtData& d : raw) {
        Bunch b = kleinschmidt_to_bunch(d);
        bool dup = false;
        for (const Bunch& k : kept)
            if (free_bunch_isomorphic(b, k).has_value()) { dup = true; break; }
        if (!dup) {
            out.push_back(d);
            kept.push_back(b);
        }
    }
    return out;
}

Bunch canonical_extension(const Bunch& b, const std::vector<Int>& new_multiplicities) {
    if (!is_free(b)) throw NotFree("canonical extension needs a free bunch");
    // Distinct weights in sorted order with their current multiplicities.
    std::vector<IntVector> original = weight_vectors(b);
    std::map<IntVector, Int> mult;
    for (const IntVector& w : original) ++mult[w];
    if (new_multiplicities.size() != mult.size())
        throw InvalidParameters("one multiplicity per distinct weight expected");
    // Keep the original weight sequence and append the extra copies, so
    // the identity extension reproduces the bunch exactly.
    std::vector<IntVector> new_weights = original;
    std::size_t i = 0;
    for (auto& [w, m] : mult) {
        if (new_multiplicities[i] < m)
            throw MultiplicityDecrease("multiplicities may only grow");
        for (Int c = m; c < new_multiplicities[i]; ++c) new_weights.push_back(w);
        ++i;
    }
    // Elements keep their cones: generate each from the weights it
    // contains (a superset of its generators, spanning the same cone).
    std::vector<std::vector<std::size_t>> cones;
    for (const BunchElement& el : b.elements()) {
        std::vector<std::size_t> idxs;
        for (std::size_t j = 0; j < original.size(); ++j)
            if (el.cone.contains(rat_vector(original[j]))) idxs.push_back(j);
        cones.push_back(idxs);
    }
    return bunch_from_weights(WeightSystem{b.k_rank(), new_weights}, cones);
}

}  // namespace toric
