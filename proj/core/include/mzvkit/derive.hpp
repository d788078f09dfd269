#pragma once

#include <mzvkit/identity.hpp>
#include <mzvkit/oracles.hpp>
#include <mzvkit/rules.hpp>

#include <utility>

namespace mzv {

// The two formal sums of zeta indices that close the cyclic and relation
// derivations.  expand_S(k) is Σ_{j=0}^{k_a-2} (1+j, k_1, …, k_{a-1}, k_a-j),
// empty when k ends in 1.  expand_H(k,i) is
// Σ_{j=1}^{k_i-1} (k_1, …, k_{i-1}, k_i-j, 1+j, k_{i+1}, …, k_a), empty when
// k_i = 1.  Both throw domain_error on out-of-range input.
IndexSum expand_S(const Index& k);
IndexSum expand_H(const Index& k, int i);

// Run a product derivation to completion.  The start is the connected sum
// whose value is the product ζ_N(k)·ζ_N(l); rules are applied depth-first
// under a fixed precedence (stop, then unload, then swap, then the main
// transport) until every connected term is a boundary term, and the boundary
// terms are read off as a formal sum of zeta indices.  The trace's result
// expression keeps the boundary terms themselves.
std::pair<IndexSum, Trace> derive_shuffle(const Index& k, const Index& l);
std::pair<IndexSum, Trace> derive_harmonic(const Index& k, const Index& l);

// Run the two index-transport derivations: a single chain of raise/arrow
// steps that moves k into the second slot, transformed.  Exactly wt(k) steps.
// derive_dual needs k admissible; derive_hoffman_dual any nonempty k.
std::pair<Index, Trace> derive_dual(const Index& k);
std::pair<Index, Trace> derive_hoffman_dual(const Index& k);

// Run the cyclic derivation: transport around the cyclic class of k until
// the start term recurs, collect the zeta side terms, check that they cancel
// into the closed form, and return the finished identity
//   Σ_{j∈[k]} ζ(j raised at the last entry) = Σ_{j∈[k]} expand_S(j)
// (limit-only; k admissible), or its mod-p congruence analogue at N = p-1
// whose left side carries the two extra rotations per class element (any
// nonempty k).
std::pair<Identity, Trace> derive_cyclic_identity(const Index& k);
std::pair<Identity, Trace> derive_cyclic_identity_mod_p(const Index& k);

// Run the relation derivation for admissible k: transport k across the gap
// connector, expand the boundary conditions, check that the 1-prepended side
// terms cancel exactly, and return the identity
//   Σ_{i=0}^{a-1} ζ(k_(i), ↑k^(i)) = Σ_{i=1}^{a} expand_H(k,i)
// (limit-only).
std::pair<Identity, Trace> derive_hoffman_relation(const Index& k);

// Re-execute a trace from its start expression: every step's guard is
// re-evaluated, its replacement recomputed and compared against the recorded
// one, and the substitution applied to the running expression.  Returns the
// final expression, which must equal t.result.  Throws replay_error (with the
// step index) on any mismatch.
Expr replay_trace(const Trace& t);

} // namespace mzv
