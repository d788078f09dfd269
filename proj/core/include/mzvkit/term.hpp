#pragma once

#include <map>
#include <string>

#include "mzvkit/index.hpp"
#include "mzvkit/rational.hpp"

namespace mzv {

// The six connected-sum families plus the plain zeta symbol.
//
//   Sh   Z^sh_N(k;l;h)  two strict chains joined additively (n_a+m_b = r_1)
//                       to a third strict chain; c >= 1.
//   Har  Z^*_N(k;l;h)   two strict chains sharing their lowest element with
//                       the top of a common prefix chain (n_1 = m_1 = r_c).
//   D    Z^D_{n,m}(k;l) two strict chains with tails n,m, coupled by the
//                       connector u!v!/(u+v)!.
//   HD   Z^HD_N(k;l)    one weakly increasing chain, coupled by
//                       (-1)^{u-1} binom(v,u) at u = n_a <= v = m_1, with the
//                       anchor m_{b+1} = N.
//   O    Z^O_N(k)       one strict chain with connector 1/(n_a - n_1).
//   H    Z^H(k;l)       two strict chains with connector 1/(m_1 - n_a),
//                       n_a < m_1; the defining sum is infinite.
//   Zeta ζ_N(k) / ζ(k)  the plain (truncated or limit) multiple zeta value.
enum class TermKind { Sh, Har, D, HD, O, H, Zeta };

// Whether a Zeta term means the truncated sum ζ_N(k) or the limit ζ(k).
enum class ZetaTrunc { TruncatedN, Limit };

// Order of the symbolic tail variables of a D term: (n,m) or swapped.
enum class TailOrder { NM, MN };

// An immutable symbolic term.  Use the factory functions; they enforce the
// family-specific well-formedness rules.
class Term {
public:
    // Z^sh(k;l;h): h must be nonempty.
    static Term sh(Index k, Index l, Index h);
    // Z^*(k;l;h): k and l must be nonempty.
    static Term har(Index k, Index l, Index h);
    // Z^D(k;l) with symbolic tails in the given order.
    static Term d(Index k, Index l, TailOrder tails = TailOrder::NM);
    // Z^HD(k;l): k must be nonempty.
    static Term hd(Index k, Index l);
    // Z^O(k): k must be nonempty.  (Evaluation additionally needs depth >= 2,
    // and the limit evaluation needs an entry >= 2; those are checked at the
    // point of use so that modular derivations may pass through all-ones
    // states.)
    static Term o(Index k);
    // Z^H(k;l): k and l must be nonempty.
    static Term h(Index k, Index l);
    // ζ_N(k) or ζ(k); the limit form requires k admissible or empty.
    static Term zeta(Index k, ZetaTrunc trunc = ZetaTrunc::TruncatedN);

    TermKind kind() const { return kind_; }
    const Index& slot_k() const { return k_; }
    const Index& slot_l() const { return l_; }
    const Index& slot_h() const { return h_; }
    ZetaTrunc zeta_trunc_kind() const { return ztrunc_; }
    TailOrder tail_order() const { return tails_; }

    bool is_zeta() const { return kind_ == TermKind::Zeta; }
    bool is_connected() const { return kind_ != TermKind::Zeta; }

    auto operator<=>(const Term&) const = default;

private:
    Term() = default;
    TermKind kind_ = TermKind::Zeta;
    Index k_, l_, h_;
    ZetaTrunc ztrunc_ = ZetaTrunc::TruncatedN;
    TailOrder tails_ = TailOrder::NM;
};

std::string format_term(const Term& t);
std::string term_family_name(TermKind kind); // "sh", "har", "D", "HD", "O", "H", "zeta"
TermKind term_kind_from_name(const std::string& name);

// A finite rational-coefficient combination of terms, kept canonical (no
// zero coefficients, map-ordered keys).
class Expr {
public:
    using map_type = std::map<Term, Rational>;

    Expr() = default;
    static Expr single(const Term& t, Rational c = 1);

    void add(const Term& t, const Rational& c);
    Expr& operator+=(const Expr& other);
    Expr& operator-=(const Expr& other);
    friend Expr operator+(Expr a, const Expr& b) { return a += b; }
    friend Expr operator-(Expr a, const Expr& b) { return a -= b; }
    Expr scaled(const Rational& c) const;

    Rational coeff(const Term& t) const;
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const map_type& terms() const { return terms_; }

    bool operator==(const Expr& other) const = default;

private:
    map_type terms_;
};

std::string format_expr(const Expr& e);

// Derivation families exposed by the drivers and the command line.
enum class Family { Shuffle, Harmonic, Dual, HDual, Cyclic, CyclicModP, Hoffman };
std::string family_name(Family f);
Family family_from_name(const std::string& name);

} // namespace mzv
