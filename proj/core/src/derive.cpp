#include <mzvkit/derive.hpp>

#include <mzvkit/errors.hpp>

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace mzv {

IndexSum expand_S(const Index& k) {
    if (k.is_empty()) throw domain_error("expand_S needs a nonempty index");
    IndexSum out;
    const std::vector<int>& e = k.entries();
    for (int j = 0; j + 2 <= k.last(); ++j) {
        std::vector<int> t;
        t.reserve(e.size() + 1);
        t.push_back(1 + j);
        t.insert(t.end(), e.begin(), e.end());
        t.back() -= j;
        out.add(Index(std::move(t)), 1);
    }
    return out;
}

IndexSum expand_H(const Index& k, int i) {
    if (k.is_empty()) throw domain_error("expand_H needs a nonempty index");
    if (i < 1 || i > k.depth())
        throw domain_error("expand_H position " + std::to_string(i) +
                           " out of range for depth " + std::to_string(k.depth()));
    IndexSum out;
    const std::vector<int>& e = k.entries();
    for (int j = 1; j < e[static_cast<std::size_t>(i - 1)]; ++j) {
        std::vector<int> t(e.begin(), e.begin() + i);
        t.back() -= j;
        t.push_back(1 + j);
        t.insert(t.end(), e.begin() + i, e.end());
        out.add(Index(std::move(t)), 1);
    }
    return out;
}

namespace {

std::string paren(const Index& k) {
    return k.is_empty() ? "∅" : "(" + format_index(k) + ")";
}

std::string format_cyclic_class(const std::set<Index>& cls) {
    std::string out = "{";
    for (const Index& j : cls) {
        if (out.size() > 1) out += ", ";
        out += paren(j);
    }
    return out + "}";
}

bool ends_in_one(const Index& k) { return !k.is_empty() && k.last() == 1; }

// Replace c·before by c·after in the running expression.
void substitute(Expr& running, const Term& before, const Rational& c, const Expr& after) {
    running.add(before, Rational(-c));
    for (const auto& [term, coef] : after.terms()) running.add(term, Rational(c * coef));
}

std::int64_t int_coeff(const Rational& c, const char* where) {
    if (c.get_den() != 1)
        throw invariant_violation(std::string(where) + ": non-integer coefficient " +
                                  rational_to_string(c));
    if (!c.get_num().fits_slong_p())
        throw invariant_violation(std::string(where) + ": coefficient overflow");
    return c.get_num().get_si();
}

// The depth-first worklist shared by the two product derivations.  Every
// rewrite moves the popped term's full current coefficient, so a term that
// was produced along two branches is rewritten once with the merged
// coefficient (a later pop of the same term sees coefficient zero and is
// skipped).  Boundary terms are left in the running expression — they are the
// trace's result — and read off at the end.
template <typename Terminal, typename Pick, typename Decode, typename CheckState>
std::pair<IndexSum, Trace> run_product_derivation(Family family, const Term& start,
                                                  int expected_weight,
                                                  std::size_t step_bound,
                                                  Terminal terminal, Pick pick,
                                                  Decode decode,
                                                  CheckState check_state) {
    Trace trace;
    trace.family = family;
    trace.start = Expr::single(start);
    Expr running = trace.start;
    check_state(start);

    std::vector<Term> work;
    if (!terminal(start)) work.push_back(start);
    while (!work.empty()) {
        const Term t = work.back();
        work.pop_back();
        const Rational c = running.coeff(t);
        if (c == 0) continue; // duplicate of an already-rewritten merged term

        RuleApplication app = apply_rule_full(t, pick(t));
        substitute(running, t, c, app.after);
        trace.steps.push_back(std::move(app.step));
        if (trace.steps.size() > step_bound)
            throw invariant_violation("product derivation exceeded its step bound");

        // Push in reverse so the equation's first term is expanded first.
        for (auto it = app.connected_children.rbegin();
             it != app.connected_children.rend(); ++it) {
            check_state(*it);
            if (!terminal(*it)) work.push_back(*it);
        }
    }
    trace.result = running;

    IndexSum out;
    for (const auto& [term, coeff] : running.terms()) {
        if (!terminal(term))
            throw invariant_violation("non-boundary term survived the derivation: " +
                                      format_term(term));
        const Index idx = decode(term);
        if (idx.weight() != expected_weight)
            throw invariant_violation("weight not conserved: " + paren(idx) +
                                      " from " + format_term(term));
        out.add(idx, int_coeff(coeff, "product derivation"));
    }
    return {std::move(out), std::move(trace)};
}

bool shuffle_terminal(const Term& t) { return t.slot_k().is_empty(); }

RuleId pick_shuffle_rule(const Term& t) {
    if (ends_in_one(t.slot_k())) return RuleId::ShUnload;
    if (!t.slot_l().admissible()) return RuleId::ShSym; // middle slot ∅ or ending in 1
    return RuleId::ShMain;
}

// Boundary reading Z(∅; h with last raised; 1,h') = ζ_N(h, h').
Index decode_shuffle_terminal(const Term& t) {
    const Index& b = t.slot_l();
    if (ends_in_one(b))
        throw invariant_violation("boundary term with a middle slot ending in 1: " +
                                  format_term(t));
    const Index left = b.is_empty() ? Index{} : down_last(b);
    return left.concat(tail(t.slot_h()));
}

// Along any reachable state at most one of the two leading slots ends in 1.
void check_shuffle_state(const Term& t) {
    if (ends_in_one(t.slot_k()) && ends_in_one(t.slot_l()))
        throw invariant_violation("unreachable state, both leading slots end in 1: " +
                                  format_term(t));
}

bool harmonic_terminal(const Term& t) { return t.slot_k() == Index{1}; }

RuleId pick_harmonic_rule(const Term& t) {
    if (t.slot_k().first() >= 2) return RuleId::HarUnload;
    const Index& b = t.slot_l();
    if (b.first() >= 2 || b == Index{1}) return RuleId::HarSym;
    return RuleId::HarMain;
}

// Boundary reading Z((1); m; h') = ζ_N(h' with last entry raised m_1 - 1
// times, then the rest of m).  The junction variable is shared between the
// third chain's top and the second chain's bottom, so their exponents fuse.
Index decode_harmonic_terminal(const Term& t) {
    const Index& m = t.slot_l();
    Index h = t.slot_h();
    for (int i = 1; i < m.first(); ++i) h = up_last(h);
    return h.concat(tail(m));
}

std::size_t product_step_bound(const Index& k, const Index& l) {
    const std::size_t b = static_cast<std::size_t>(k.weight() + l.weight() +
                                                   k.depth() + l.depth() + 1);
    return 4 * b * b;
}

} // namespace

std::pair<IndexSum, Trace> derive_shuffle(const Index& k, const Index& l) {
    const Term start = Term::sh(up_last(k), up_last(l), Index{1});
    return run_product_derivation(Family::Shuffle, start, k.weight() + l.weight(),
                                  product_step_bound(k, l), shuffle_terminal,
                                  pick_shuffle_rule, decode_shuffle_terminal,
                                  check_shuffle_state);
}

std::pair<IndexSum, Trace> derive_harmonic(const Index& k, const Index& l) {
    const Term start = Term::har(left_prepend(k), left_prepend(l), Index{});
    return run_product_derivation(Family::Harmonic, start, k.weight() + l.weight(),
                                  product_step_bound(k, l), harmonic_terminal,
                                  pick_harmonic_rule, decode_harmonic_terminal,
                                  [](const Term&) {});
}

std::pair<Index, Trace> derive_dual(const Index& k) {
    if (!k.admissible()) throw domain_error("dual transport needs an admissible index");
    Trace trace;
    trace.family = Family::Dual;
    Term cur = Term::d(k, Index{}, TailOrder::NM);
    trace.start = Expr::single(cur);
    Expr running = trace.start;
    while (!cur.slot_k().is_empty()) {
        const RuleId r = cur.slot_k().admissible() ? RuleId::DUp : RuleId::DArrow;
        RuleApplication app = apply_rule_full(cur, r);
        substitute(running, cur, 1, app.after);
        trace.steps.push_back(std::move(app.step));
        if (trace.steps.size() > static_cast<std::size_t>(k.weight()))
            throw invariant_violation("dual transport exceeded wt(k) steps");
        cur = app.connected_children.at(0);
    }
    trace.result = running;
    if (trace.steps.size() != static_cast<std::size_t>(k.weight()))
        throw invariant_violation("dual transport did not take exactly wt(k) steps");
    return {cur.slot_l(), std::move(trace)};
}

std::pair<Index, Trace> derive_hoffman_dual(const Index& k) {
    if (k.is_empty())
        throw domain_error("reflection transport needs a nonempty index");
    Trace trace;
    trace.family = Family::HDual;
    Term cur = Term::hd(up_last(k), Index{});
    trace.start = Expr::single(cur);
    Expr running = trace.start;
    while (!(cur.slot_k() == Index{1})) {
        const RuleId r = cur.slot_k().admissible() ? RuleId::HdUp : RuleId::HdArrow;
        RuleApplication app = apply_rule_full(cur, r);
        substitute(running, cur, 1, app.after);
        trace.steps.push_back(std::move(app.step));
        if (trace.steps.size() > static_cast<std::size_t>(k.weight()))
            throw invariant_violation("reflection transport exceeded wt(k) steps");
        cur = app.connected_children.at(0);
    }
    trace.result = running;
    if (trace.steps.size() != static_cast<std::size_t>(k.weight()))
        throw invariant_violation("reflection transport did not take exactly wt(k) steps");
    return {cur.slot_l(), std::move(trace)};
}

namespace {

struct CyclicRun {
    Trace trace;
    IndexSum up_sides;     // zeta indices emitted (with sign -1) by raising steps
    IndexSum rotate_sides; // zeta indices emitted (with sign +1) by rotation steps
    Validity validity = Validity::ExactFiniteN;
};

// Transport around the cyclic class until the start term recurs.  In limit
// mode every intermediate term must keep an entry >= 2 (otherwise its
// infinite sum diverges and the derivation is meaningless); the congruence
// variant runs at N = p-1 where no such restriction exists.
CyclicRun run_cyclic(const Index& k, Family family, RuleId rotate_rule,
                     bool limit_mode) {
    CyclicRun run;
    run.trace.family = family;
    const Index start_arg = left_prepend(k);
    Term cur = Term::o(start_arg);
    run.trace.start = Expr::single(cur);
    Expr running = run.trace.start;
    const std::size_t bound =
        static_cast<std::size_t>(k.weight()) * static_cast<std::size_t>(k.depth()) +
        static_cast<std::size_t>(k.depth());
    bool first = true;
    while (true) {
        const Index arg = cur.slot_k();
        if (limit_mode && !arg.has_entry_ge2())
            throw invariant_violation("divergent term (all entries 1) in a limit derivation: " +
                                      format_term(cur));
        const RuleId r = arg.admissible() ? RuleId::CsUp : rotate_rule;
        const Rational c = running.coeff(cur);
        if (c != 1)
            throw invariant_violation("cyclic driver lost track of its running term");
        RuleApplication app = apply_rule_full(cur, r);
        substitute(running, cur, c, app.after);
        for (const auto& [term, coef] : app.after.terms()) {
            if (!term.is_zeta()) continue;
            const std::int64_t m = int_coeff(coef, "cyclic side term");
            if (r == RuleId::CsUp) {
                if (m != -1)
                    throw invariant_violation("raising step emitted an unexpected side term");
                run.up_sides.add(term.slot_k(), 1);
            } else {
                if (m < 1)
                    throw invariant_violation("rotation step emitted an unexpected side term");
                run.rotate_sides.add(term.slot_k(), m);
            }
        }
        run.trace.steps.push_back(std::move(app.step));
        run.validity = first ? rule_validity(r) : weaker_validity(run.validity, rule_validity(r));
        first = false;
        if (run.trace.steps.size() > bound)
            throw invariant_violation("cyclic derivation exceeded its step bound");
        cur = app.connected_children.at(0);
        if (cur.slot_k() == start_arg) break;
    }
    run.trace.result = running;
    return run;
}

ZetaSum zeta_sum_from_indices(const IndexSum& s) {
    ZetaSum out;
    for (const auto& [idx, c] : s.terms()) out.add(ZetaTerm::zeta(idx), Rational(c));
    return out;
}

} // namespace

std::pair<Identity, Trace> derive_cyclic_identity(const Index& k) {
    if (!k.admissible())
        throw domain_error("cyclic derivation needs an admissible index");
    CyclicRun run = run_cyclic(k, Family::Cyclic, RuleId::CsRotate, /*limit_mode=*/true);
    const std::set<Index> cls = cyclic_class(k);
    const std::string prov = format_cyclic_class(cls);

    IndexSum expected_rotate, expected_up;
    for (const Index& j : cls) {
        expected_rotate.add(up_last(j), 1);
        expected_up += expand_S(j);
    }
    if (!(run.rotate_sides == expected_rotate))
        throw invariant_violation("rotation side terms do not close into the class sum for " + prov);
    if (!(run.up_sides == expected_up))
        throw invariant_violation("raising side terms do not close into the expand_S sum for " + prov);

    Identity id;
    id.family = Family::Cyclic;
    id.validity = run.validity;
    id.provenance = prov;
    id.lhs = zeta_sum_from_indices(expected_rotate);
    id.rhs = zeta_sum_from_indices(expected_up);
    assert_identity_homogeneous(id);
    return {std::move(id), std::move(run.trace)};
}

std::pair<Identity, Trace> derive_cyclic_identity_mod_p(const Index& k) {
    if (k.is_empty())
        throw domain_error("cyclic congruence derivation needs a nonempty index");
    CyclicRun run =
        run_cyclic(k, Family::CyclicModP, RuleId::CsRotateModP, /*limit_mode=*/false);
    const std::set<Index> cls = cyclic_class(k);
    const std::string prov = format_cyclic_class(cls);

    IndexSum expected_rotate, expected_up;
    for (const Index& j : cls) {
        expected_rotate.add(up_last(j), 1);
        expected_rotate.add(up_first(j), 1);
        expected_rotate.add(left_prepend(j), 1);
        expected_up += expand_S(j);
    }
    if (!(run.rotate_sides == expected_rotate))
        throw invariant_violation("rotation side terms do not close into the class sum for " + prov);
    if (!(run.up_sides == expected_up))
        throw invariant_violation("raising side terms do not close into the expand_S sum for " + prov);

    Identity id;
    id.family = Family::CyclicModP;
    id.validity = run.validity;
    id.provenance = prov;
    id.lhs = zeta_sum_from_indices(expected_rotate);
    id.rhs = zeta_sum_from_indices(expected_up);
    assert_identity_homogeneous(id);
    return {std::move(id), std::move(run.trace)};
}

std::pair<Identity, Trace> derive_hoffman_relation(const Index& k) {
    if (!k.admissible())
        throw domain_error("relation derivation needs an admissible index");
    Trace trace;
    trace.family = Family::Hoffman;
    Term cur = Term::h(k, Index{1});
    trace.start = Expr::single(cur);
    Expr running = trace.start;
    IndexSum up_sides, arrow_sides;
    Validity validity = Validity::LimitOnly;
    bool first = true;
    while (!(cur.slot_k() == Index{1})) {
        const RuleId r = cur.slot_k().admissible() ? RuleId::HUp : RuleId::HArrow;
        RuleApplication app = apply_rule_full(cur, r);
        substitute(running, cur, 1, app.after);
        for (const auto& [term, coef] : app.after.terms()) {
            if (!term.is_zeta()) continue;
            if (int_coeff(coef, "relation side term") != 1)
                throw invariant_violation("transport step emitted an unexpected side term");
            (r == RuleId::HUp ? up_sides : arrow_sides).add(term.slot_k(), 1);
        }
        trace.steps.push_back(std::move(app.step));
        validity = first ? rule_validity(r) : weaker_validity(validity, rule_validity(r));
        first = false;
        if (trace.steps.size() > static_cast<std::size_t>(k.weight()))
            throw invariant_violation("relation derivation exceeded wt(k) steps");
        cur = app.connected_children.at(0);
    }
    trace.result = running;
    if (trace.steps.size() != static_cast<std::size_t>(k.weight()) - 1)
        throw invariant_violation("relation derivation step count is not wt(k)-1");
    if (!(cur.slot_l() == k))
        throw invariant_violation("relation transport did not rebuild its index in the second slot");

    // The terminal boundary value ζ(1,k) together with the arrow-step side
    // terms must reproduce the 1-prepended half of the direct boundary
    // expansion — this cancellation is checked, not assumed.
    const int a = k.depth();
    IndexSum arrow_chk = arrow_sides;
    arrow_chk.add(left_prepend(k), 1);
    IndexSum expected_arrow;
    for (int i = 0; i < a; ++i)
        expected_arrow.add(k.prefix(i).concat(left_prepend(k.suffix(i))), 1);
    if (!(arrow_chk == expected_arrow))
        throw invariant_violation(
            "1-prepended side terms do not cancel against the boundary expansion for " + paren(k));

    IndexSum expected_up;
    for (int i = 1; i <= a; ++i) expected_up += expand_H(k, i);
    if (!(up_sides == expected_up))
        throw invariant_violation("raising side terms do not match the expand_H sum for " + paren(k));

    Identity id;
    id.family = Family::Hoffman;
    id.validity = validity;
    id.provenance = paren(k);
    for (int i = 0; i < a; ++i)
        id.lhs.add(ZetaTerm::zeta(k.prefix(i).concat(up_first(k.suffix(i)))), 1);
    id.rhs = zeta_sum_from_indices(expected_up);
    assert_identity_homogeneous(id);
    return {std::move(id), std::move(trace)};
}

Expr replay_trace(const Trace& t) {
    Expr running = t.start;
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        const TraceStep& step = t.steps[i];
        if (!guard_holds(step.before, step.rule))
            throw replay_error(i, "guard \"" + guard_text(step.rule) +
                                      "\" does not hold on " + format_term(step.before));
        Expr recomputed;
        try {
            recomputed = apply_rule(step.before, step.rule).first;
        } catch (const error& e) {
            throw replay_error(i, e.what());
        }
        if (!(recomputed == step.after))
            throw replay_error(i, "recorded replacement differs from the rule output");
        const Rational c = running.coeff(step.before);
        if (c == 0)
            throw replay_error(i, "rewritten term is absent from the running expression");
        substitute(running, step.before, c, recomputed);
    }
    if (!(running == t.result))
        throw replay_error(t.steps.size(), "final expression differs from the recorded result");
    return running;
}

} // namespace mzv
