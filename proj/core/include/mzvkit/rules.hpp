#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mzvkit/term.hpp"

namespace mzv {

// The sixteen transport rules.  Per family: a symmetry (swap the two index
// slots), a "main"/"up" move that lowers an exponent on the left while
// feeding the connector side, and an "unload"/"arrow" move that shifts a
// trailing 1 across the connector.  The cyclic family has two rotation
// variants: one stated for the limit sums and one stated as a congruence at
// N = p-1 with extra truncated-zeta side terms.
enum class RuleId {
    ShSym,
    ShMain,
    ShUnload,
    HarSym,
    HarMain,
    HarUnload,
    DSym,
    DUp,
    DArrow,
    HdUp,
    HdArrow,
    CsUp,
    CsRotate,
    CsRotateModP,
    HUp,
    HArrow,
};

// Validity of an equality: exact at every truncation level N, exact only for
// the limit sums, or a congruence mod p at N = p-1.
enum class Validity { ExactFiniteN, LimitOnly, ModP };

std::string rule_name(RuleId r); // "sh-main", "cs-rotate-modp", ...
RuleId rule_from_name(const std::string& name);
Validity rule_validity(RuleId r);
std::string validity_name(Validity v);
Validity validity_from_name(const std::string& name);

// The weaker of two validity classes (exact < limit-only, exact < mod-p;
// limit-only and mod-p do not mix in any derivation).
Validity weaker_validity(Validity a, Validity b);

// True iff r's guard predicate holds on t.  The two symmetry rules ShSym and
// HarSym are well-defined on every term of their kind, so their guard is the
// kind check alone; the derivation drivers decide *when* to swap and record
// that driver-level condition as the guard witness.
bool guard_holds(const Term& t, RuleId r);

// Human-readable predicate text for diagnostics.
std::string guard_text(RuleId r);

// One rewrite step: `before` was replaced by the expression `after`
// (connected-sum terms plus any zeta side terms, with exact signs).
struct TraceStep {
    RuleId rule;
    Term before;
    Expr after;
    std::string guard_witness;

    bool operator==(const TraceStep&) const = default;
};

// Apply rule r to term t.  Throws rule_not_applicable if the guard fails and
// invariant_violation if the matched pattern demands an arrow operation that
// is not applicable (such states are unreachable from valid driver starts).
std::pair<Expr, TraceStep> apply_rule(const Term& t, RuleId r);

// Like apply_rule, but also lists the connected-sum output terms in the order
// the rule's equation prints them (zeta side terms excluded).  Drivers expand
// these depth-first so emitted traces read like a hand derivation.
struct RuleApplication {
    Expr after;
    TraceStep step;
    std::vector<Term> connected_children;
};
RuleApplication apply_rule_full(const Term& t, RuleId r);

// A full derivation: replaying `steps` from `start` must reproduce `result`.
struct Trace {
    Family family;
    Expr start;
    std::vector<TraceStep> steps;
    Expr result;

    bool operator==(const Trace&) const = default;
};

std::string format_trace(const Trace& t);

} // namespace mzv
