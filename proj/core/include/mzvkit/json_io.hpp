#pragma once

#include <optional>
#include <string>

#include "mzvkit/identity.hpp"
#include "mzvkit/index.hpp"
#include "mzvkit/modp.hpp"
#include "mzvkit/numeric.hpp"
#include "mzvkit/oracles.hpp"
#include "mzvkit/rules.hpp"
#include "mzvkit/sweep.hpp"
#include "mzvkit/term.hpp"

// JSON serialization for every value the command line emits or ingests.  The
// functions speak std::string so the JSON library stays an implementation
// detail of this translation unit's source file.
//
// Schemas (all JSON is UTF-8; ∅ serializes as []):
//
//   index            [2, 3]                     array of positive integers
//   index sum        [{"coeff": 3, "index": [1,1,1]}, ...]   canonical order,
//                    integer coefficients
//   term             {"family": "sh|har|D|HD|O|H|zeta", "slots": [index...]}
//                    plus "kind": "truncated"|"limit" on zeta terms and
//                    "tails": "nm"|"mn" on D terms
//   expression       [{"coeff": "p/q", "term": {...}}, ...]  canonical order,
//                    exact rational coefficient strings
//   trace            {"family", "start", "steps": [{"rule", "before",
//                    "after", "guard"}], "result"} with an optional
//                    "identity" when the derivation finished in one
//   zeta-side term   {"kind": "zeta|zeta-star|h-star|product|binom-zeta",
//                    "k": index} plus "l" on products and "tails" on
//                    binomial-tail terms
//   identity         {"family", "validity", "provenance", "lhs", "rhs"}
//                    where lhs/rhs are arrays of {"coeff": "p/q", "term":
//                    zeta-side term}
//   eval report      {"lhs", "rhs", "diff", "verdict", "convergence":
//                    {"cap", "doubled_diff"}} — rationals as exact "p/q"
//                    strings; decimal annotation fields ("lhs_decimal", ...)
//                    are emitted for readability and ignored on input
//   congruence       {"p", "lhs", "rhs", "verdict": "congruent"|
//                    "not-congruent", "instance"}
//
// Parsers throw parse_error on any malformed document: syntax errors, wrong
// shapes, unknown enum names, non-positive index entries.

namespace mzv {

// A trace as written to disk: the derivation plus the identity it proves,
// when the family produces one (product derivations of non-convergent
// factors have no shuffle identity, for example).
struct TraceDocument {
    Trace trace;
    std::optional<Identity> identity;

    bool operator==(const TraceDocument&) const = default;
};

std::string index_to_json(const Index& k);
std::string index_sum_to_json(const IndexSum& s);
std::string term_to_json(const Term& t);
std::string expr_to_json(const Expr& e);
std::string identity_to_json(const Identity& id, bool pretty = false);
std::string trace_document_to_json(const TraceDocument& doc, bool pretty = false);
std::string eval_report_to_json(const EvalReport& r, bool pretty = false);
std::string congruence_report_to_json(const CongruenceReport& r, bool pretty = false);
// {"suites": [{"name", "cases", "failures", "notes"}], totals, "passed"} —
// output only, nothing re-ingests sweep summaries.
std::string sweep_report_to_json(const SweepReport& r, bool pretty = false);

Index index_from_json(const std::string& text);
IndexSum index_sum_from_json(const std::string& text);
Term term_from_json(const std::string& text);
Expr expr_from_json(const std::string& text);
// Accepts a bare identity object or a trace document that embeds one (so a
// saved derivation can be handed straight to the verifier).
Identity identity_from_json(const std::string& text);
TraceDocument trace_document_from_json(const std::string& text);
EvalReport eval_report_from_json(const std::string& text);
CongruenceReport congruence_report_from_json(const std::string& text);

} // namespace mzv
