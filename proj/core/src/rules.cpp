#include "mzvkit/rules.hpp"

#include <sstream>

namespace mzv {

std::string rule_name(RuleId r) {
    switch (r) {
        case RuleId::ShSym: return "sh-sym";
        case RuleId::ShMain: return "sh-main";
        case RuleId::ShUnload: return "sh-unload";
        case RuleId::HarSym: return "har-sym";
        case RuleId::HarMain: return "har-main";
        case RuleId::HarUnload: return "har-unload";
        case RuleId::DSym: return "d-sym";
        case RuleId::DUp: return "d-up";
        case RuleId::DArrow: return "d-arrow";
        case RuleId::HdUp: return "hd-up";
        case RuleId::HdArrow: return "hd-arrow";
        case RuleId::CsUp: return "cs-up";
        case RuleId::CsRotate: return "cs-rotate";
        case RuleId::CsRotateModP: return "cs-rotate-modp";
        case RuleId::HUp: return "h-up";
        case RuleId::HArrow: return "h-arrow";
    }
    throw invariant_violation("unknown rule id");
}

RuleId rule_from_name(const std::string& name) {
    static const std::pair<const char*, RuleId> table[] = {
        {"sh-sym", RuleId::ShSym},       {"sh-main", RuleId::ShMain},
        {"sh-unload", RuleId::ShUnload}, {"har-sym", RuleId::HarSym},
        {"har-main", RuleId::HarMain},   {"har-unload", RuleId::HarUnload},
        {"d-sym", RuleId::DSym},         {"d-up", RuleId::DUp},
        {"d-arrow", RuleId::DArrow},     {"hd-up", RuleId::HdUp},
        {"hd-arrow", RuleId::HdArrow},   {"cs-up", RuleId::CsUp},
        {"cs-rotate", RuleId::CsRotate}, {"cs-rotate-modp", RuleId::CsRotateModP},
        {"h-up", RuleId::HUp},           {"h-arrow", RuleId::HArrow},
    };
    for (const auto& [n, r] : table)
        if (name == n) return r;
    throw parse_error("unknown rule \"" + name + "\"");
}

Validity rule_validity(RuleId r) {
    switch (r) {
        case RuleId::ShSym:
        case RuleId::ShMain:
        case RuleId::ShUnload:
        case RuleId::HarSym:
        case RuleId::HarMain:
        case RuleId::HarUnload:
        case RuleId::DSym:
        case RuleId::HdUp:
        case RuleId::HdArrow:
        case RuleId::CsUp:
            return Validity::ExactFiniteN;
        case RuleId::DUp:
        case RuleId::DArrow:
        case RuleId::CsRotate:
        case RuleId::HUp:
        case RuleId::HArrow:
            return Validity::LimitOnly;
        case RuleId::CsRotateModP:
            return Validity::ModP;
    }
    throw invariant_violation("unknown rule id");
}

std::string validity_name(Validity v) {
    switch (v) {
        case Validity::ExactFiniteN: return "exact-finite-N";
        case Validity::LimitOnly: return "limit-only";
        case Validity::ModP: return "mod-p";
    }
    throw invariant_violation("unknown validity");
}

Validity validity_from_name(const std::string& name) {
    if (name == "exact-finite-N") return Validity::ExactFiniteN;
    if (name == "limit-only") return Validity::LimitOnly;
    if (name == "mod-p") return Validity::ModP;
    throw parse_error("unknown validity class \"" + name + "\"");
}

Validity weaker_validity(Validity a, Validity b) {
    if (a == Validity::ExactFiniteN) return b;
    if (b == Validity::ExactFiniteN) return a;
    if (a != b)
        throw invariant_violation("limit-only and mod-p rules mixed in one derivation");
    return a;
}

namespace {

bool ends_in_one(const Index& k) { return !k.is_empty() && k.last() == 1; }

} // namespace

bool guard_holds(const Term& t, RuleId r) {
    const Index& k = t.slot_k();
    const Index& l = t.slot_l();
    switch (r) {
        case RuleId::ShSym:
            return t.kind() == TermKind::Sh;
        case RuleId::ShMain:
            return t.kind() == TermKind::Sh && k.admissible() && l.admissible();
        case RuleId::ShUnload:
            return t.kind() == TermKind::Sh && ends_in_one(k);
        case RuleId::HarSym:
            return t.kind() == TermKind::Har;
        case RuleId::HarMain:
            // Both reversed slots lie outside I' ∪ {(1)}: first entry 1 and
            // depth at least 2.
            return t.kind() == TermKind::Har && k.first() == 1 && k.depth() >= 2 &&
                   l.first() == 1 && l.depth() >= 2;
        case RuleId::HarUnload:
            return t.kind() == TermKind::Har && k.first() >= 2;
        case RuleId::DSym:
            return t.kind() == TermKind::D;
        case RuleId::DUp:
            return t.kind() == TermKind::D && k.admissible();
        case RuleId::DArrow:
            return t.kind() == TermKind::D && ends_in_one(k) && !l.is_empty();
        case RuleId::HdUp:
            return t.kind() == TermKind::HD && k.admissible();
        case RuleId::HdArrow:
            return t.kind() == TermKind::HD && ends_in_one(k) && k.depth() >= 2 &&
                   !l.is_empty();
        case RuleId::CsUp:
            return t.kind() == TermKind::O && k.admissible() && k.depth() >= 2;
        case RuleId::CsRotate:
        case RuleId::CsRotateModP:
            return t.kind() == TermKind::O && ends_in_one(k) && k.depth() >= 2;
        case RuleId::HUp:
            return t.kind() == TermKind::H && k.admissible() &&
                   (l.admissible() || l == Index{1});
        case RuleId::HArrow:
            return t.kind() == TermKind::H && ends_in_one(k) && k.depth() >= 2 &&
                   l.admissible();
    }
    throw invariant_violation("unknown rule id");
}

std::string guard_text(RuleId r) {
    switch (r) {
        case RuleId::ShSym: return "swap when l ∈ I0 \\ I'";
        case RuleId::ShMain: return "k and l admissible";
        case RuleId::ShUnload: return "k ends in 1";
        case RuleId::HarSym: return "swap when reverse(l) ∈ I' ∪ {(1)}";
        case RuleId::HarMain: return "k and l start with 1 and have depth ≥ 2";
        case RuleId::HarUnload: return "k starts with an entry ≥ 2";
        case RuleId::DSym: return "swap slots and tails";
        case RuleId::DUp: return "k admissible";
        case RuleId::DArrow: return "k ends in 1, l nonempty";
        case RuleId::HdUp: return "k admissible";
        case RuleId::HdArrow: return "k ends in 1, k ≠ (1), l nonempty";
        case RuleId::CsUp: return "k admissible, depth ≥ 2";
        case RuleId::CsRotate: return "k ends in 1, depth ≥ 2";
        case RuleId::CsRotateModP: return "k ends in 1, depth ≥ 2 (mod-p form)";
        case RuleId::HUp: return "k admissible, l admissible or (1)";
        case RuleId::HArrow: return "k ends in 1, k ≠ (1), l admissible";
    }
    throw invariant_violation("unknown rule id");
}

namespace {

// The rule's right-hand side in the order the equation prints its terms.
// The order is irrelevant for the final expression but makes the driver
// traverse subterms depth-first in the printed order, so that emitted
// traces can be eyeballed line by line against a hand derivation.
std::vector<std::pair<Term, Rational>> rewrite_ordered(const Term& t, RuleId r) {
    const Index& k = t.slot_k();
    const Index& l = t.slot_l();
    const Index& h = t.slot_h();
    switch (r) {
        case RuleId::ShSym:
            return {{Term::sh(l, k, h), 1}};
        case RuleId::ShMain:
            // Z(k;l;h) = Z(k_down;l;h_raised-first) + Z(k;l_down;h_raised-first)
            // with both leading slots admissible.
            return {{Term::sh(down_last(k), l, up_first(h)), 1},
                    {Term::sh(k, down_last(l), up_first(h)), 1}};
        case RuleId::ShUnload: {
            // Z(k' with trailing 1; l; h) = Z(k'_raised-last; l; 1 prepended to
            // h with first entry lowered).  The matched pattern needs h to
            // start with an entry >= 2; anything else is unreachable.
            if (h.first() < 2)
                throw invariant_violation(
                    "unload reached a third slot starting with 1: " + format_term(t));
            return {{Term::sh(up_last(drop_last(k)), l, left_prepend(down_first(h))), 1}};
        }
        case RuleId::HarSym:
            return {{Term::har(l, k, h), 1}};
        case RuleId::HarMain:
            // Both slots start with 1 (the shared junction element); the
            // junction moves into the third chain, splitting three ways by
            // whether the next chain element of one side, the other, or both
            // becomes the new junction.
            return {{Term::har(tail(k), l, right_append(h)), 1},
                    {Term::har(k, tail(l), right_append(h)), 1},
                    {Term::har(tail(k), tail(l), up_last(right_append(h))), 1}};
        case RuleId::HarUnload:
            // Z(k;l;h) with k starting >= 2 lowers that entry and raises the
            // last entry of h (a no-op on ∅, matching ∅_raise = ∅).
            return {{Term::har(down_first(k), l, up_last(h)), 1}};
        case RuleId::DSym:
            return {{Term::d(l, k,
                             t.tail_order() == TailOrder::NM ? TailOrder::MN
                                                             : TailOrder::NM),
                     1}};
        case RuleId::DUp:
            return {{Term::d(down_last(k), right_append(l), t.tail_order()), 1}};
        case RuleId::DArrow:
            return {{Term::d(drop_last(k), up_last(l), t.tail_order()), 1}};
        case RuleId::HdUp:
            return {{Term::hd(down_last(k), left_prepend(l)), 1}};
        case RuleId::HdArrow:
            return {{Term::hd(drop_last(k), up_first(l)), 1}};
        case RuleId::CsUp:
            // Z^O(k) = Z^O(k lowered at the end, raised at the front) - ζ_N(k).
            return {{Term::o(up_first(down_last(k))), 1},
                    {Term::zeta(k, ZetaTrunc::TruncatedN), -1}};
        case RuleId::CsRotate: {
            // Z^O(k',1) = Z^O(1,k') + ζ(k'_raised-last), read at the limit.
            const Index kp = drop_last(k);
            return {{Term::o(left_prepend(kp)), 1},
                    {Term::zeta(up_last(kp), ZetaTrunc::Limit), 1}};
        }
        case RuleId::CsRotateModP: {
            // Congruence form at N = p-1: three truncated zeta side terms.
            const Index kp = drop_last(k);
            return {{Term::o(left_prepend(kp)), 1},
                    {Term::zeta(up_last(kp), ZetaTrunc::TruncatedN), 1},
                    {Term::zeta(up_first(kp), ZetaTrunc::TruncatedN), 1},
                    {Term::zeta(left_prepend(kp), ZetaTrunc::TruncatedN), 1}};
        }
        case RuleId::HUp: {
            // Z^H(k;l) = Z^H(k_down; l_raised-first) + ζ(k_down, l_raised-first).
            const Index kd = down_last(k);
            const Index lu = up_first(l);
            return {{Term::h(kd, lu), 1},
                    {Term::zeta(kd.concat(lu), ZetaTrunc::Limit), 1}};
        }
        case RuleId::HArrow: {
            const Index kp = drop_last(k);
            const Index lp = left_prepend(l);
            return {{Term::h(kp, lp), 1},
                    {Term::zeta(kp.concat(lp), ZetaTrunc::Limit), 1}};
        }
    }
    throw invariant_violation("unknown rule id");
}

} // namespace

RuleApplication apply_rule_full(const Term& t, RuleId r) {
    if (!guard_holds(t, r))
        throw rule_not_applicable(guard_text(r) + " on " + format_term(t));
    Expr after;
    std::vector<Term> children;
    for (const auto& [term, coeff] : rewrite_ordered(t, r)) {
        after.add(term, coeff);
        if (term.is_connected()) children.push_back(term);
    }
    TraceStep step{r, t, after, guard_text(r)};
    return RuleApplication{std::move(after), std::move(step), std::move(children)};
}

std::pair<Expr, TraceStep> apply_rule(const Term& t, RuleId r) {
    RuleApplication app = apply_rule_full(t, r);
    return {std::move(app.after), std::move(app.step)};
}

std::string format_trace(const Trace& t) {
    std::ostringstream os;
    os << "family: " << family_name(t.family) << "\n";
    os << "start:  " << format_expr(t.start) << "\n";
    std::size_t i = 0;
    for (const TraceStep& s : t.steps) {
        os << "  [" << ++i << "] " << rule_name(s.rule) << "  (" << s.guard_witness
           << ")\n";
        os << "      " << format_term(s.before) << "  ⇒  " << format_expr(s.after)
           << "\n";
    }
    os << "result: " << format_expr(t.result) << "\n";
    return os.str();
}

} // namespace mzv
