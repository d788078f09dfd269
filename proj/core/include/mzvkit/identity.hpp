#pragma once

#include <mzvkit/formal_sum.hpp>
#include <mzvkit/index.hpp>
#include <mzvkit/oracles.hpp>
#include <mzvkit/rules.hpp>
#include <mzvkit/term.hpp>

#include <compare>
#include <optional>
#include <string>

namespace mzv {

// Symbolic values allowed on the two sides of a finished identity.  How a
// value is read depends on the identity's validity class: exact-finite-N
// identities are statements about the truncated sums at every level N,
// limit-only identities about the limits, and mod-p identities about the
// truncations at N = p-1 reduced mod p.
enum class ZetaKind {
    Zeta,        // ζ(k), one multiple zeta value
    ZetaStar,    // ζ*(k), the weak-inequality variant
    HStar,       // H*(k), the alternating binomial variant
    ZetaProduct, // ζ(k)·ζ(l)
    BinomZeta,   // ζ_{n,m}(k), offset chain with a binomial tail factor
};

class ZetaTerm {
  public:
    static ZetaTerm zeta(Index k);
    static ZetaTerm zeta_star(Index k);
    static ZetaTerm h_star(Index k);
    static ZetaTerm product(Index k, Index l);
    // `tails` says which of the two offsets supplied at verification time is
    // the chain start and which feeds the binomial: NM reads as ζ_{n,m}(k),
    // MN as ζ_{m,n}(k).
    static ZetaTerm binom_zeta(Index k, TailOrder tails);

    ZetaKind kind() const { return kind_; }
    const Index& k() const { return k_; }
    const Index& l() const { return l_; } // second product factor; ∅ otherwise
    TailOrder tails() const { return tails_; }

    // Total weight of the value (both factors for products).
    int weight() const;

    auto operator<=>(const ZetaTerm&) const = default;

  private:
    ZetaTerm(ZetaKind kind, Index k, Index l, TailOrder tails);

    ZetaKind kind_;
    Index k_;
    Index l_;
    TailOrder tails_;
};

using ZetaSum = FormalSum<ZetaTerm, Rational>;

std::string format_zeta_term(const ZetaTerm& t);
std::string format_zeta_sum(const ZetaSum& s);

// A finished identity between two zeta-side sums.  `provenance` names the
// source input (an index, an index pair, or a cyclic class) in human-readable
// form; `validity` is the weakest class among the rules used to derive it and
// selects the verifier (exact rational, truncation with tolerance, or mod-p).
struct Identity {
    Family family;
    Validity validity;
    std::string provenance;
    ZetaSum lhs;
    ZetaSum rhs;

    bool operator==(const Identity&) const = default;
};

// Every identity produced by the drivers is homogeneous: all terms on both
// sides share one weight.  Throws invariant_violation otherwise.  A side with
// no terms is vacuously homogeneous.
void assert_identity_homogeneous(const Identity& id);

std::string format_identity(const Identity& id);

// Assemble the identity each family emits from the corresponding derivation
// output.  These are pure packaging: `product` is the expansion computed by a
// driver or oracle, `dual`/`hdual` the transported index.
//
// The shuffle identity is a statement about limits, so it exists only when
// both factors converge (each admissible or empty); otherwise nullopt.  The
// harmonic identity holds exactly at every truncation level and is emitted
// for all inputs.
std::optional<Identity> shuffle_identity(const Index& k, const Index& l,
                                         const IndexSum& product);
Identity harmonic_identity(const Index& k, const Index& l, const IndexSum& product);
Identity dual_identity(const Index& k, const Index& dual);
Identity hoffman_dual_identity(const Index& k, const Index& hdual);

} // namespace mzv
