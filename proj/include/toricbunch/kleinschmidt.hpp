#ifndef TORICBUNCH_KLEINSCHMIDT_HPP
#define TORICBUNCH_KLEINSCHMIDT_HPP

#include <cstddef>
#include <vector>

#include "toricbunch/bunch.hpp"

namespace toric {

// Parameters of the rank-2 classification: weight vectors w1 = (1,0) and
// w_i = (b_i, 1) carrying multiplicities, with 0 = b_n < ... < b_2 and
// mu_1 > 1, mu_n > 0, mu_2 + ... + mu_n > 1.
struct KleinschmidtData {
    std::vector<Int> b;   // b_2, ..., b_n (strictly decreasing, last = 0)
    std::vector<Int> mu;  // mu_1, ..., mu_n

    std::size_t n() const { return mu.size(); }
    // Dimension of the associated variety: total multiplicity minus 2.
    Int dimension() const {
        Int s = 0;
        for (const Int& m : mu) s += m;
        return s - 2;
    }
};

void validate(const KleinschmidtData& d);  // throws InvalidParameters

// The free bunch {cone(w1, w2)} on the weights of d.
Bunch kleinschmidt_to_bunch(const KleinschmidtData& d);

// Fano test via ample membership of the anticanonical class (the
// authoritative semantics).
bool kleinschmidt_is_fano(const KleinschmidtData& d);

// The inequality as printed, under the reading b_j * mu_{j+1} for
// j = 2..n-1.  Its pairing is typographically ambiguous in the source;
// exposed as a diagnostic to compare against the ample route, never as
// the decision procedure.
bool kleinschmidt_inequality_literal(const KleinschmidtData& d);

// All parameter tuples of the given variety dimension with b_2 <= max_b,
// in canonical form, isomorphism duplicates removed.
std::vector<KleinschmidtData> enumerate_kleinschmidt(std::size_t dim, const Int& max_b);

// Canonical extension: same weights and collection, multiplicities raised
// pointwise.  new_multiplicities is indexed by the distinct weights of b
// in sorted order.
Bunch canonical_extension(const Bunch& b, const std::vector<Int>& new_multiplicities);

}  // namespace toric

#endif
