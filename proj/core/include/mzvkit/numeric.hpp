#pragma once

#include <mzvkit/identity.hpp>
#include <mzvkit/index.hpp>
#include <mzvkit/rational.hpp>
#include <mzvkit/rules.hpp>
#include <mzvkit/term.hpp>

#include <optional>
#include <string>

namespace mzv {

// Truncated multiple harmonic sums: strict ascending chains for zeta_trunc,
// weakly ascending chains for zeta_star_trunc; both are 1 on the empty index.
// Computed by a depth-layered prefix-sum recurrence, O(depth·N) operations.
Rational zeta_trunc(const Index& k, long N);
Rational zeta_star_trunc(const Index& k, long N);

// Alternating binomial-weighted weak-chain sum: over 1 <= n_1 <= ... <= n_a <= N,
// each term carries (-1)^{n_a - 1}·binom(N, n_a).  Rejects the empty index.
Rational h_star(const Index& k, long N);

// Double-tailed zeta value: strict chains starting above n, each term damped
// by 1/binom(top + m, m).  The series is infinite, so it is truncated at cap;
// it converges when k is admissible.
Rational zeta_tails(const Index& k, long n, long m, long cap);

// The weight factors joining the two halves of a connected sum.
enum class ConnectorFamily { D, HD, O, H };
Rational connector_value(ConnectorFamily f, long first, long second);

struct EvalParams {
    long N = 20;              // bound for the families whose defining sums stop at N
    std::optional<long> cap;  // truncation for the families with infinite sums
    long tail_n = 0;          // tail bases for the double-tailed family
    long tail_m = 0;
};

// Exact value of a connected-sum term's defining multiple sum.  The sh, har,
// HD and O families are bounded by pr.N; the D and H families and limit-kind
// plain zetas are infinite series and need pr.cap (missing cap, or an O term
// whose entries are all 1, is a divergence error).
Rational eval_connected(const Term& t, const EvalParams& pr);
Rational eval_connected(const Term& t, long N, std::optional<long> cap = std::nullopt);

enum class Verdict { ExactPass, ExactFail, WithinTolerance, OutsideTolerance };
std::string verdict_name(Verdict v);
Verdict verdict_from_name(const std::string& name);

struct Convergence {
    long cap = 0;
    Rational doubled_diff; // |lhs - rhs| re-evaluated with the cap doubled
};

struct EvalReport {
    Rational lhs;
    Rational rhs;
    Rational diff;
    Verdict verdict = Verdict::ExactFail;
    std::optional<Convergence> convergence; // present for tolerance checks only
    bool passed() const {
        return verdict == Verdict::ExactPass || verdict == Verdict::WithinTolerance;
    }
};

// Evaluate both sides of one rule instance.  Exact-finite-N rules must match
// exactly at pr.N; limit-only rules are evaluated with every bound set to
// pr.cap and again at 2·cap, and pass iff |lhs-rhs| <= tol and the doubled-cap
// difference did not grow.  Congruence-only rules have no rational reading.
EvalReport check_transport_numeric(RuleId r, const Term& t, const EvalParams& pr,
                                   std::optional<Rational> tol = std::nullopt);
EvalReport check_transport_numeric(RuleId r, const Term& t, long N,
                                   std::optional<long> cap = std::nullopt,
                                   std::optional<Rational> tol = std::nullopt);

// Same adjudication for a finished identity: exact families at pr.N,
// limit-only families at pr.cap/2·cap with a required tolerance.  Congruence
// identities are rejected here — they are verified in modular arithmetic.
EvalReport verify_identity_numeric(const Identity& id, const EvalParams& pr,
                                   std::optional<Rational> tol = std::nullopt);

} // namespace mzv
