#include <mzvkit/modp.hpp>

#include <mzvkit/derive.hpp>
#include <mzvkit/errors.hpp>
#include <mzvkit/oracles.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace mzv {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {

// Field of p elements with the 1..p-1 inverse table built once up front.
struct Field {
    long p;
    std::vector<long> inv;

    explicit Field(long p_) : p(p_) {
        if (!is_prime(p))
            throw domain_error("modulus " + std::to_string(p) + " is not prime");
        inv.assign(static_cast<std::size_t>(p), 0);
        if (p > 1) inv[1] = 1;
        for (long i = 2; i < p; ++i) inv[i] = p - (p / i) * inv[p % i] % p;
    }

    long mul(long a, long b) const { return a * b % p; }
    long add(long a, long b) const { return (a + b) % p; }

    long inv_pow(long n, int e) const {
        long r = 1;
        const long base = inv[n % p];
        for (int i = 0; i < e; ++i) r = mul(r, base);
        return r;
    }

    long reduce(std::int64_t c) const { return static_cast<long>(((c % p) + p) % p); }
};

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

// The modular mirrors of the rational chain recurrences, all at N = p-1.
std::vector<long> strict_prefix_mod(const std::vector<int>& exps, const Field& F) {
    const long N = F.p - 1;
    std::vector<long> cur(static_cast<std::size_t>(N) + 1, 1);
    for (int e : exps) {
        std::vector<long> next(static_cast<std::size_t>(N) + 1, 0);
        for (long v = 1; v <= N; ++v)
            next[v] = F.add(next[v - 1], F.mul(cur[v - 1], F.inv_pow(v, e)));
        cur = std::move(next);
    }
    return cur;
}

std::vector<long> strict_top_exactly_mod(const std::vector<int>& exps, const Field& F) {
    const long N = F.p - 1;
    std::vector<long> t(static_cast<std::size_t>(N) + 1, 0);
    if (exps.empty()) {
        t[0] = 1;
        return t;
    }
    const std::vector<int> head(exps.begin(), exps.end() - 1);
    const std::vector<long> p = strict_prefix_mod(head, F);
    for (long v = 1; v <= N; ++v) t[v] = F.mul(p[v - 1], F.inv_pow(v, exps.back()));
    return t;
}

std::vector<long> strict_suffix_mod(const std::vector<int>& exps, const Field& F) {
    const long N = F.p - 1;
    std::vector<long> cur(static_cast<std::size_t>(N) + 2, 1);
    for (auto it = exps.rbegin(); it != exps.rend(); ++it) {
        std::vector<long> next(static_cast<std::size_t>(N) + 2, 0);
        for (long v = N - 1; v >= 0; --v)
            next[v] = F.add(next[v + 1], F.mul(F.inv_pow(v + 1, *it), cur[v + 1]));
        cur = std::move(next);
    }
    cur.resize(static_cast<std::size_t>(N) + 1);
    return cur;
}

long zeta_mod(const std::vector<int>& exps, const Field& F) {
    return strict_prefix_mod(exps, F).back();
}

// Z^sh at N = p-1 in the field: two strict outer chains joined additively to
// the inner chain's bottom, identical in shape to the rational evaluator.
long sh_mod(const Index& k, const Index& l, const Index& h, const Field& F) {
    const long N = F.p - 1;
    const std::vector<int> eh = lowered_first(h);
    const std::vector<long> tk = strict_top_exactly_mod(lowered_last(k), F);
    const std::vector<long> tl = strict_top_exactly_mod(lowered_last(l), F);
    const std::vector<long> ru =
        strict_suffix_mod(std::vector<int>(eh.begin() + 1, eh.end()), F);
    long total = 0;
    for (long s = 0; s <= N; ++s) {
        long conv = 0;
        for (long u = 0; u <= s; ++u) conv = F.add(conv, F.mul(tk[u], tl[s - u]));
        if (conv == 0) continue;
        long junction = 1;
        if (s == 0) {
            if (eh.front() != 0)
                throw divergence_error("junction value 0 carries a positive exponent in "
                                       + format_term(Term::sh(k, l, h)));
        } else {
            junction = F.inv_pow(s, eh.front());
        }
        total = F.add(total, F.mul(F.mul(conv, junction), ru[s]));
    }
    return total;
}

std::string paren(const Index& k) {
    return k.is_empty() ? "∅" : "(" + format_index(k) + ")";
}

// (-1)^{wt(l)}·ζ_{p-1}(k, reverse(l)) mod p.
long signed_concat_mod(const Index& k, const Index& l, const Field& F) {
    long v = zeta_mod(k.concat(l.reversed()).entries(), F);
    if (l.weight() % 2 == 1) v = (F.p - v) % F.p;
    return v;
}

} // namespace

Residue zeta_mod_p(const Index& k, long p) {
    const Field F(p);
    return Residue{zeta_mod(k.entries(), F), p};
}

CongruenceReport verify_shuffle_mod_p(const Index& k, const Index& l, long p) {
    const Field F(p);
    const IndexSum expansion = derive_shuffle(k, l).first;
    if (!(expansion == shuffle_oracle(k, l)))
        throw invariant_violation("derivation and word-recursion expansions disagree for " +
                                  paren(k) + " x " + paren(l));
    const long lhs = signed_concat_mod(k, l, F);
    long rhs = 0;
    for (const auto& [h, c] : expansion.terms())
        rhs = F.add(rhs, F.mul(F.reduce(c), zeta_mod(h.entries(), F)));
    return CongruenceReport{p, lhs, rhs, lhs == rhs,
                            paren(k) + " x " + paren(l) + " mod " + std::to_string(p)};
}

CongruenceReport verify_boundary_mod_p(const Index& k, const Index& l, long p) {
    const Field F(p);
    const long lhs = sh_mod(up_last(k), up_last(l), Index{1}, F);
    const long rhs = signed_concat_mod(k, l, F);
    return CongruenceReport{p, lhs, rhs, lhs == rhs,
                            "start term for " + paren(k) + " x " + paren(l) + " mod " +
                                std::to_string(p)};
}

CongruenceReport verify_cyclic_mod_p(const Index& k, long p) {
    return verify_identity_mod_p(derive_cyclic_identity_mod_p(k).first, p);
}

CongruenceReport verify_identity_mod_p(const Identity& id, long p) {
    if (id.validity != Validity::ModP)
        throw domain_error("identity for " + id.provenance +
                           " is not a congruence-class identity");
    const Field F(p);
    const auto side = [&](const ZetaSum& s) {
        long total = 0;
        for (const auto& [zt, c] : s.terms()) {
            if (zt.kind() != ZetaKind::Zeta)
                throw domain_error("congruence identities may hold only plain zeta terms");
            const unsigned long up = static_cast<unsigned long>(p);
            const long num = static_cast<long>(mpz_fdiv_ui(c.get_num().get_mpz_t(), up));
            const long den = static_cast<long>(mpz_fdiv_ui(c.get_den().get_mpz_t(), up));
            if (den == 0)
                throw domain_error("coefficient denominator divisible by the modulus");
            total = F.add(total, F.mul(F.mul(num, F.inv[den]),
                                       zeta_mod(zt.k().entries(), F)));
        }
        return total;
    };
    const long lhs = side(id.lhs);
    const long rhs = side(id.rhs);
    return CongruenceReport{p, lhs, rhs, lhs == rhs,
                            id.provenance + " mod " + std::to_string(p)};
}

} // namespace mzv
