#pragma once

#include <mzvkit/identity.hpp>
#include <mzvkit/index.hpp>

#include <string>

namespace mzv {

bool is_prime(long p);

struct Residue {
    long value = 0;   // in {0, ..., modulus-1}
    long modulus = 0; // prime
    bool operator==(const Residue&) const = default;
};

// ζ_{p-1}(k) in the p-element field — the same layered recurrence as the
// rational truncated sum, run with modular inverses.  Composite p is a
// domain error; entries of k may be arbitrarily large since only the bases
// 1..p-1 are inverted.
Residue zeta_mod_p(const Index& k, long p);

struct CongruenceReport {
    long p = 0;
    long lhs = 0;
    long rhs = 0;
    bool congruent = false;
    std::string instance;
};

// Product congruence: (-1)^{wt(l)}·ζ_{p-1}(k, reverse(l)) against the product
// expansion Σ a_h·ζ_{p-1}(h).  The a_h are computed twice — by the derivation
// engine and by the word-recursion oracle — and must agree before the
// congruence is adjudicated.
CongruenceReport verify_shuffle_mod_p(const Index& k, const Index& l, long p);

// Boundary congruence: the sh-family start term at N = p-1, evaluated
// entirely in modular arithmetic, against the signed concatenation value
// (-1)^{wt(l)}·ζ_{p-1}(k, reverse(l)).
CongruenceReport verify_boundary_mod_p(const Index& k, const Index& l, long p);

// Cyclic congruence: derive the congruence identity for k's rotation class
// and evaluate both sides mod p.
CongruenceReport verify_cyclic_mod_p(const Index& k, long p);

// Evaluate both sides of a congruence-class identity at N = p-1 in the
// p-element field.  The identity is a statement for every prime p, so any
// prime may be supplied.  Requires mod-p validity, plain truncated zeta
// terms, and coefficients whose denominators are prime to p.
CongruenceReport verify_identity_mod_p(const Identity& id, long p);

} // namespace mzv
