#include <mzvkit/numeric.hpp>

#include <mzvkit/errors.hpp>

#include <cstddef>
#include <utility>
#include <vector>

namespace mzv {

namespace {

void require_bound(long N, const char* what) {
    if (N < 1) throw domain_error(std::string(what) + " must be at least 1");
}

Rational inv_pow(long n, int e) {
    if (e == 0) return Rational(1);
    Integer d;
    mpz_ui_pow_ui(d.get_mpz_t(), static_cast<unsigned long>(n),
                  static_cast<unsigned long>(e));
    return Rational(Integer(1), d);
}

// Exponent vectors as the defining sums use them: the outer chains of the sh,
// HD and H families carry the index with its last entry lowered by one, the
// har and O chains carry the first entry lowered.  A lowered entry may be 0.
std::vector<int> lowered_last(const Index& k) {
    std::vector<int> e = k.entries();
    if (!e.empty()) e.back() -= 1;
    return e;
}

std::vector<int> lowered_first(const Index& k) {
    std::vector<int> e = k.entries();
    if (!e.empty()) e.front() -= 1;
    return e;
}

// P[v] (v = 0..N): chains base < x_1 < ... < x_d <= v with the given
// exponents; the empty exponent list gives the constant 1.
std::vector<Rational> strict_prefix(const std::vector<int>& exps, long N, long base = 0) {
    std::vector<Rational> cur(static_cast<std::size_t>(N) + 1, Rational(1));
    for (int e : exps) {
        std::vector<Rational> next(static_cast<std::size_t>(N) + 1, Rational(0));
        for (long v = base + 1; v <= N; ++v)
            next[v] = next[v - 1] + cur[v - 1] * inv_pow(v, e);
        cur = std::move(next);
    }
    return cur;
}

// T[v] (v = 0..N): chains base < x_1 < ... < x_d <= N whose top is exactly v.
// For the empty exponent list the "top" is the base itself.
std::vector<Rational> strict_top_exactly(const std::vector<int>& exps, long N, long base = 0) {
    std::vector<Rational> t(static_cast<std::size_t>(N) + 1, Rational(0));
    if (exps.empty()) {
        if (base >= 0 && base <= N) t[base] = 1;
        return t;
    }
    const std::vector<int> head(exps.begin(), exps.end() - 1);
    const std::vector<Rational> p = strict_prefix(head, N, base);
    for (long v = base + 1; v <= N; ++v) t[v] = p[v - 1] * inv_pow(v, exps.back());
    return t;
}

// U[v] (v = 0..N): chains v < x_1 < ... < x_d <= N.
std::vector<Rational> strict_suffix(const std::vector<int>& exps, long N) {
    std::vector<Rational> cur(static_cast<std::size_t>(N) + 2, Rational(1));
    for (auto it = exps.rbegin(); it != exps.rend(); ++it) {
        std::vector<Rational> next(static_cast<std::size_t>(N) + 2, Rational(0));
        for (long v = N - 1; v >= 0; --v)
            next[v] = next[v + 1] + inv_pow(v + 1, *it) * cur[v + 1];
        cur = std::move(next);
    }
    cur.resize(static_cast<std::size_t>(N) + 1);
    return cur;
}

// S[w] (w = 0..N): chains w = x_1 < x_2 < ... < x_d <= N, first pinned at w.
std::vector<Rational> strict_start_exactly(const std::vector<int>& exps, long N) {
    const std::vector<int> rest(exps.begin() + 1, exps.end());
    const std::vector<Rational> u = strict_suffix(rest, N);
    std::vector<Rational> s(static_cast<std::size_t>(N) + 1, Rational(0));
    for (long w = 1; w <= N; ++w) s[w] = inv_pow(w, exps.front()) * u[w];
    return s;
}

// W[v] (v = 0..N): weak chains 1 <= x_1 <= ... <= x_d <= v.
std::vector<Rational> weak_prefix(const std::vector<int>& exps, long N) {
    std::vector<Rational> cur(static_cast<std::size_t>(N) + 1, Rational(1));
    for (int e : exps) {
        std::vector<Rational> next(static_cast<std::size_t>(N) + 1, Rational(0));
        for (long v = 1; v <= N; ++v)
            next[v] = next[v - 1] + cur[v] * inv_pow(v, e);
        cur = std::move(next);
    }
    return cur;
}

// WT[u] (u = 0..N): weak chains with top exactly u; exps must be nonempty.
std::vector<Rational> weak_top_exactly(const std::vector<int>& exps, long N) {
    std::vector<Rational> t(static_cast<std::size_t>(N) + 1, Rational(0));
    const std::vector<int> head(exps.begin(), exps.end() - 1);
    const std::vector<Rational> w = weak_prefix(head, N);
    for (long u = 1; u <= N; ++u) t[u] = w[u] * inv_pow(u, exps.back());
    return t;
}

// WS[w] (w = 0..N): weak chains w = x_1 <= x_2 <= ... <= x_d <= N.
std::vector<Rational> weak_start_exactly(const std::vector<int>& exps, long N) {
    std::vector<Rational> cur(static_cast<std::size_t>(N) + 2, Rational(1));
    const std::vector<int> rest(exps.begin() + 1, exps.end());
    for (auto it = rest.rbegin(); it != rest.rend(); ++it) {
        std::vector<Rational> next(static_cast<std::size_t>(N) + 2, Rational(0));
        for (long v = N; v >= 1; --v)
            next[v] = next[v + 1] + inv_pow(v, *it) * cur[v];
        cur = std::move(next);
    }
    std::vector<Rational> s(static_cast<std::size_t>(N) + 1, Rational(0));
    for (long w = 1; w <= N; ++w) s[w] = inv_pow(w, exps.front()) * cur[w];
    return s;
}

// Two strict outer chains joined by the additive relation top_n + top_m = r_1,
// with the inner chain r_1 < r_2 < ... <= N.  An absent outer chain has top 0.
Rational eval_sh(const Index& k, const Index& l, const Index& h, long N) {
    const std::vector<int> eh = lowered_first(h);
    const std::vector<Rational> tk = strict_top_exactly(lowered_last(k), N);
    const std::vector<Rational> tl = strict_top_exactly(lowered_last(l), N);
    const std::vector<Rational> ru =
        strict_suffix(std::vector<int>(eh.begin() + 1, eh.end()), N);
    Rational total = 0;
    for (long s = 0; s <= N; ++s) {
        Rational conv = 0;
        for (long u = 0; u <= s; ++u) {
            if (tk[u] == 0 || tl[s - u] == 0) continue;
            conv += tk[u] * tl[s - u];
        }
        if (conv == 0) continue;
        Rational junction(1);
        if (s == 0) {
            if (eh.front() != 0)
                throw divergence_error(
                    "junction value 0 carries a positive exponent in " + format_term(Term::sh(k, l, h)));
        } else {
            junction = inv_pow(s, eh.front());
        }
        total += conv * junction * ru[s];
    }
    return total;
}

// Two strict outer chains sharing their bottom with the top of the inner
// chain (junction value v); the inner chain starts anywhere at or above 1.
// With no inner chain the two halves decouple into a product of plain sums.
Rational eval_har(const Index& k, const Index& l, const Index& h, long N) {
    if (h.is_empty()) return zeta_trunc(tail(k), N) * zeta_trunc(tail(l), N);
    const std::vector<int> ek = lowered_first(k);
    const std::vector<int> el = lowered_first(l);
    const std::vector<Rational> uk =
        strict_suffix(std::vector<int>(ek.begin() + 1, ek.end()), N);
    const std::vector<Rational> ul =
        strict_suffix(std::vector<int>(el.begin() + 1, el.end()), N);
    const std::vector<int>& ehh = h.entries();
    const std::vector<Rational> rp =
        strict_prefix(std::vector<int>(ehh.begin(), ehh.end() - 1), N);
    Rational total = 0;
    for (long v = 1; v <= N; ++v) {
        if (uk[v] == 0 || ul[v] == 0 || rp[v - 1] == 0) continue;
        total += rp[v - 1] * inv_pow(v, ehh.back() + ek.front() + el.front()) * uk[v] * ul[v];
    }
    return total;
}

// Two unbounded strict chains growing from the tail bases, joined by the
// factorial connector; truncated at cap.
Rational eval_d(const Index& k, const Index& l, long bn, long bm, long cap) {
    if (bn < 0 || bm < 0) throw domain_error("tail bases must be non-negative");
    const std::vector<Rational> tk = strict_top_exactly(k.entries(), cap, bn);
    const std::vector<Rational> tl = strict_top_exactly(l.entries(), cap, bm);
    Rational total = 0;
    for (long u = 0; u <= cap; ++u) {
        if (tk[u] == 0) continue;
        Rational conn(1); // C(u,0) = 1; C(u,w) = C(u,w-1)·w/(u+w)
        Rational inner = 0;
        for (long w = 0; w <= cap; ++w) {
            if (w > 0) {
                Rational step(Integer(w), Integer(u + w));
                step.canonicalize();
                conn *= step;
            }
            if (tl[w] == 0) continue;
            inner += tl[w] * conn;
        }
        total += tk[u] * inner;
    }
    return total;
}

// One weak chain below the junction pair (u, w), one weak chain above it,
// joined by the signed binomial connector; with no second index the
// connector's upper argument is the truncation bound itself.
Rational eval_hd(const Index& k, const Index& l, long N) {
    const std::vector<Rational> wk = weak_top_exactly(lowered_last(k), N);
    Rational total = 0;
    if (l.is_empty()) {
        for (long u = 1; u <= N; ++u) {
            if (wk[u] == 0) continue;
            total += wk[u] * connector_value(ConnectorFamily::HD, u, N);
        }
        return total;
    }
    const std::vector<Rational> vl = weak_start_exactly(l.entries(), N);
    for (long u = 1; u <= N; ++u) {
        if (wk[u] == 0) continue;
        for (long w = u; w <= N; ++w) {
            if (vl[w] == 0) continue;
            total += wk[u] * connector_value(ConnectorFamily::HD, u, w) * vl[w];
        }
    }
    return total;
}

// A single strict chain whose first and last elements are joined by the
// difference connector 1/(top - bottom).
Rational eval_o(const Index& k, long N) {
    if (k.depth() < 2)
        throw domain_error("the single-chain connected sum needs depth at least 2");
    if (!k.has_entry_ge2())
        throw divergence_error("single-chain connected sum over an all-ones index diverges");
    const std::vector<int> e = lowered_first(k);
    const std::vector<int> rest(e.begin() + 1, e.end());
    Rational total = 0;
    for (long u = 1; u < N; ++u) {
        const std::vector<Rational> tv = strict_top_exactly(rest, N, u);
        Rational inner = 0;
        for (long v = u + 1; v <= N; ++v) {
            if (tv[v] == 0) continue;
            inner += tv[v] * Rational(Integer(1), Integer(v - u));
        }
        if (inner == 0) continue;
        total += inv_pow(u, e.front()) * inner;
    }
    return total;
}

// Two strict chains, the second strictly above the first, joined by the
// difference connector; both unbounded, truncated at cap.
Rational eval_h_conn(const Index& k, const Index& l, long cap) {
    const std::vector<Rational> tk = strict_top_exactly(lowered_last(k), cap);
    const std::vector<Rational> sl = strict_start_exactly(l.entries(), cap);
    Rational total = 0;
    for (long u = 1; u <= cap; ++u) {
        if (tk[u] == 0) continue;
        for (long w = u + 1; w <= cap; ++w) {
            if (sl[w] == 0) continue;
            total += tk[u] * sl[w] * Rational(Integer(1), Integer(w - u));
        }
    }
    return total;
}

long require_cap(const EvalParams& pr, const char* what) {
    if (!pr.cap)
        throw divergence_error(std::string(what) + " is an infinite series; a cap is required");
    require_bound(*pr.cap, "truncation cap");
    return *pr.cap;
}

Rational eval_expr(const Expr& x, const EvalParams& pr) {
    Rational total = 0;
    for (const auto& [term, c] : x.terms()) total += c * eval_connected(term, pr);
    return total;
}

Rational eval_zeta_term(const ZetaTerm& zt, long bound, const EvalParams& pr) {
    switch (zt.kind()) {
    case ZetaKind::Zeta: return zeta_trunc(zt.k(), bound);
    case ZetaKind::ZetaStar: return zeta_star_trunc(zt.k(), bound);
    case ZetaKind::HStar: return h_star(zt.k(), bound);
    case ZetaKind::ZetaProduct: return zeta_trunc(zt.k(), bound) * zeta_trunc(zt.l(), bound);
    case ZetaKind::BinomZeta: {
        long n = pr.tail_n, m = pr.tail_m;
        if (zt.tails() == TailOrder::MN) std::swap(n, m);
        return zeta_tails(zt.k(), n, m, bound);
    }
    }
    throw invariant_violation("unknown zeta-term kind");
}

Rational eval_zeta_sum(const ZetaSum& s, long bound, const EvalParams& pr) {
    Rational total = 0;
    for (const auto& [zt, c] : s.terms()) total += c * eval_zeta_term(zt, bound, pr);
    return total;
}

EvalReport exact_report(Rational lhs, Rational rhs) {
    EvalReport rep;
    rep.lhs = std::move(lhs);
    rep.rhs = std::move(rhs);
    rep.diff = rational_abs(rep.lhs - rep.rhs);
    rep.verdict = rep.diff == 0 ? Verdict::ExactPass : Verdict::ExactFail;
    return rep;
}

EvalReport tolerance_report(Rational l1, Rational r1, const Rational& l2,
                            const Rational& r2, long cap, const Rational& tol) {
    if (tol <= 0) throw domain_error("tolerance must be positive");
    EvalReport rep;
    rep.lhs = std::move(l1);
    rep.rhs = std::move(r1);
    rep.diff = rational_abs(rep.lhs - rep.rhs);
    Rational dd = rational_abs(l2 - r2);
    rep.verdict = (rep.diff <= tol && dd <= rep.diff) ? Verdict::WithinTolerance
                                                      : Verdict::OutsideTolerance;
    rep.convergence = Convergence{cap, std::move(dd)};
    return rep;
}

} // namespace

Rational zeta_trunc(const Index& k, long N) {
    require_bound(N, "truncation bound");
    return strict_prefix(k.entries(), N).back();
}

Rational zeta_star_trunc(const Index& k, long N) {
    require_bound(N, "truncation bound");
    return weak_prefix(k.entries(), N).back();
}

Rational h_star(const Index& k, long N) {
    if (k.is_empty())
        throw domain_error("the alternating binomial sum needs a nonempty index");
    require_bound(N, "truncation bound");
    const std::vector<Rational> t = weak_top_exactly(k.entries(), N);
    Rational total = 0;
    for (long u = 1; u <= N; ++u) {
        if (t[u] == 0) continue;
        const Rational term = t[u] * Rational(binomial(static_cast<unsigned long>(N),
                                                       static_cast<unsigned long>(u)));
        total += (u % 2 == 1) ? term : -term;
    }
    return total;
}

Rational zeta_tails(const Index& k, long n, long m, long cap) {
    if (n < 0 || m < 0) throw domain_error("tail bases must be non-negative");
    require_bound(cap, "truncation cap");
    const std::vector<Rational> t = strict_top_exactly(k.entries(), cap, n);
    Rational total = 0;
    for (long u = 0; u <= cap; ++u) {
        if (t[u] == 0) continue;
        total += t[u] * connector_value(ConnectorFamily::D, u, m);
    }
    return total;
}

Rational connector_value(ConnectorFamily f, long first, long second) {
    switch (f) {
    case ConnectorFamily::D: {
        if (first < 0 || second < 0)
            throw domain_error("the factorial connector needs non-negative arguments");
        Rational r(factorial(static_cast<unsigned long>(first)) *
                       factorial(static_cast<unsigned long>(second)),
                   factorial(static_cast<unsigned long>(first + second)));
        r.canonicalize();
        return r;
    }
    case ConnectorFamily::HD: {
        if (first < 1 || first > second)
            throw domain_error("the binomial connector needs 1 <= first <= second");
        const Rational r(binomial(static_cast<unsigned long>(second),
                                  static_cast<unsigned long>(first)));
        return first % 2 == 1 ? r : -r;
    }
    case ConnectorFamily::O:
    case ConnectorFamily::H:
        if (first >= second)
            throw domain_error("the difference connector needs first < second");
        return Rational(Integer(1), Integer(second - first));
    }
    throw invariant_violation("unknown connector family");
}

Rational eval_connected(const Term& t, const EvalParams& pr) {
    if (t.kind() != TermKind::D && t.kind() != TermKind::H && t.kind() != TermKind::Zeta)
        require_bound(pr.N, "truncation bound");
    switch (t.kind()) {
    case TermKind::Sh: return eval_sh(t.slot_k(), t.slot_l(), t.slot_h(), pr.N);
    case TermKind::Har: return eval_har(t.slot_k(), t.slot_l(), t.slot_h(), pr.N);
    case TermKind::HD: return eval_hd(t.slot_k(), t.slot_l(), pr.N);
    case TermKind::O: return eval_o(t.slot_k(), pr.N);
    case TermKind::D: {
        long bn = pr.tail_n, bm = pr.tail_m;
        if (t.tail_order() == TailOrder::MN) std::swap(bn, bm);
        return eval_d(t.slot_k(), t.slot_l(), bn, bm,
                      require_cap(pr, "the factorial-connected sum"));
    }
    case TermKind::H:
        return eval_h_conn(t.slot_k(), t.slot_l(),
                           require_cap(pr, "the difference-connected sum"));
    case TermKind::Zeta:
        if (t.zeta_trunc_kind() == ZetaTrunc::TruncatedN) {
            require_bound(pr.N, "truncation bound");
            return zeta_trunc(t.slot_k(), pr.N);
        }
        return zeta_trunc(t.slot_k(), require_cap(pr, "a limit zeta value"));
    }
    throw invariant_violation("unknown term kind");
}

Rational eval_connected(const Term& t, long N, std::optional<long> cap) {
    EvalParams pr;
    pr.N = N;
    pr.cap = cap;
    return eval_connected(t, pr);
}

std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::ExactPass: return "exact-pass";
    case Verdict::ExactFail: return "exact-fail";
    case Verdict::WithinTolerance: return "within-tolerance";
    case Verdict::OutsideTolerance: return "outside-tolerance";
    }
    throw invariant_violation("unknown verdict");
}

Verdict verdict_from_name(const std::string& name) {
    if (name == "exact-pass") return Verdict::ExactPass;
    if (name == "exact-fail") return Verdict::ExactFail;
    if (name == "within-tolerance") return Verdict::WithinTolerance;
    if (name == "outside-tolerance") return Verdict::OutsideTolerance;
    throw parse_error("unknown verdict \"" + name + "\"");
}

EvalReport check_transport_numeric(RuleId r, const Term& t, const EvalParams& pr,
                                   std::optional<Rational> tol) {
    const Validity v = rule_validity(r);
    if (v == Validity::ModP)
        throw domain_error("a congruence-only rule has no rational evaluation");
    if (!guard_holds(t, r))
        throw rule_not_applicable(guard_text(r) + " on " + format_term(t));
    const Expr rhs = apply_rule(t, r).first;
    if (v == Validity::ExactFiniteN)
        return exact_report(eval_connected(t, pr), eval_expr(rhs, pr));
    if (!pr.cap || !tol)
        throw domain_error("a limit-only rule check needs a cap and a tolerance");
    const long cap = require_cap(pr, "a limit-only rule check");
    EvalParams p1 = pr;
    p1.N = cap;
    p1.cap = cap;
    EvalParams p2 = pr;
    p2.N = 2 * cap;
    p2.cap = 2 * cap;
    return tolerance_report(eval_connected(t, p1), eval_expr(rhs, p1),
                            eval_connected(t, p2), eval_expr(rhs, p2), cap, *tol);
}

EvalReport check_transport_numeric(RuleId r, const Term& t, long N,
                                   std::optional<long> cap, std::optional<Rational> tol) {
    EvalParams pr;
    pr.N = N;
    pr.cap = cap;
    return check_transport_numeric(r, t, pr, std::move(tol));
}

EvalReport verify_identity_numeric(const Identity& id, const EvalParams& pr,
                                   std::optional<Rational> tol) {
    if (id.validity == Validity::ModP)
        throw domain_error("congruence identities are verified in modular arithmetic, not rationally");
    if (id.validity == Validity::ExactFiniteN) {
        require_bound(pr.N, "truncation bound");
        return exact_report(eval_zeta_sum(id.lhs, pr.N, pr), eval_zeta_sum(id.rhs, pr.N, pr));
    }
    if (!pr.cap || !tol)
        throw domain_error("a limit-only identity needs a cap and a tolerance");
    const long cap = require_cap(pr, "a limit-only identity");
    return tolerance_report(eval_zeta_sum(id.lhs, cap, pr), eval_zeta_sum(id.rhs, cap, pr),
                            eval_zeta_sum(id.lhs, 2 * cap, pr), eval_zeta_sum(id.rhs, 2 * cap, pr),
                            cap, *tol);
}

} // namespace mzv
