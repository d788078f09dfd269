#pragma once

#include "mzvkit/formal_sum.hpp"
#include "mzvkit/index.hpp"

namespace mzv {

using IndexSum = FormalSum<Index>;

// Independent classical constructions of the four objects the rewrite
// drivers compute.  The drivers never call these; they exist so that every
// derivation can be cross-checked against a second, structurally unrelated
// implementation.

// Shuffle product k ш l.  Each index is first spelled as a word in the
// letters {x,y} (an entry e becomes y x^{e-1}); the two words are shuffled
// by the standard recursion
//     u ш ε = u,   ε ш v = v,
//     au ш bv = a(u ш bv) + b(au ш v),
// and every resulting word is read back as an index.  The coefficient mass
// equals binomial(|u|+|v|, |u|).
IndexSum shuffle_oracle(const Index& k, const Index& l);

// Harmonic (quasi-shuffle) product k * l via the recursion on last entries:
//     ∅ * l = l,   k * ∅ = k,
//     (k',a) * (l',b) = (k' * (l',b), a) + ((k',a) * l', b) + (k' * l', a+b).
IndexSum harmonic_oracle(const Index& k, const Index& l);

// Dual index: spell k (admissible) as an arrow word, reverse it and swap the
// two letters, decode.  An involution on admissible indices with
// depth(k) + depth(dual(k)) = wt(k).  Throws domain_error if k is not
// admissible.
Index dual_oracle(const Index& k);

// Hoffman dual: view k (nonempty, weight w) as the set of its proper partial
// sums inside {1,...,w-1}, complement that set, and read the complement back
// as a composition of w.  A weight-preserving involution.  Throws
// domain_error on ∅.
Index hoffman_dual_oracle(const Index& k);

} // namespace mzv
