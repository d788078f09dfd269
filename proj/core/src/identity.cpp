#include <mzvkit/identity.hpp>

#include <mzvkit/errors.hpp>

#include <optional>

namespace mzv {

ZetaTerm::ZetaTerm(ZetaKind kind, Index k, Index l, TailOrder tails)
    : kind_(kind), k_(std::move(k)), l_(std::move(l)), tails_(tails) {}

ZetaTerm ZetaTerm::zeta(Index k) {
    return ZetaTerm(ZetaKind::Zeta, std::move(k), Index{}, TailOrder::NM);
}

ZetaTerm ZetaTerm::zeta_star(Index k) {
    return ZetaTerm(ZetaKind::ZetaStar, std::move(k), Index{}, TailOrder::NM);
}

ZetaTerm ZetaTerm::h_star(Index k) {
    if (k.is_empty()) throw domain_error("H* needs a nonempty index");
    return ZetaTerm(ZetaKind::HStar, std::move(k), Index{}, TailOrder::NM);
}

ZetaTerm ZetaTerm::product(Index k, Index l) {
    return ZetaTerm(ZetaKind::ZetaProduct, std::move(k), std::move(l), TailOrder::NM);
}

ZetaTerm ZetaTerm::binom_zeta(Index k, TailOrder tails) {
    if (k.is_empty()) throw domain_error("the binomial-tail zeta needs a nonempty index");
    return ZetaTerm(ZetaKind::BinomZeta, std::move(k), Index{}, tails);
}

int ZetaTerm::weight() const {
    return kind_ == ZetaKind::ZetaProduct ? k_.weight() + l_.weight() : k_.weight();
}

std::string format_zeta_term(const ZetaTerm& t) {
    switch (t.kind()) {
        case ZetaKind::Zeta:
            return "ζ(" + format_index(t.k()) + ")";
        case ZetaKind::ZetaStar:
            return "ζ*(" + format_index(t.k()) + ")";
        case ZetaKind::HStar:
            return "H*(" + format_index(t.k()) + ")";
        case ZetaKind::ZetaProduct:
            return "ζ(" + format_index(t.k()) + ")·ζ(" + format_index(t.l()) + ")";
        case ZetaKind::BinomZeta:
            return std::string("ζ{") +
                   (t.tails() == TailOrder::NM ? "n,m" : "m,n") + "}(" +
                   format_index(t.k()) + ")";
    }
    throw invariant_violation("unknown zeta term kind");
}

std::string format_zeta_sum(const ZetaSum& s) {
    if (s.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [term, coeff] : s.terms()) {
        const bool negative = coeff < 0;
        const Rational mag = negative ? Rational(-coeff) : coeff;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (mag != 1) out += rational_to_string(mag) + "·";
        out += format_zeta_term(term);
        first = false;
    }
    return out;
}

void assert_identity_homogeneous(const Identity& id) {
    std::optional<int> weight;
    for (const ZetaSum* side : {&id.lhs, &id.rhs}) {
        for (const auto& [term, coeff] : side->terms()) {
            (void)coeff;
            if (!weight) {
                weight = term.weight();
            } else if (term.weight() != *weight) {
                throw invariant_violation(
                    "identity is not weight-homogeneous: " + format_zeta_term(term) +
                    " has weight " + std::to_string(term.weight()) + ", expected " +
                    std::to_string(*weight) + " (" + id.provenance + ")");
            }
        }
    }
}

std::string format_identity(const Identity& id) {
    return std::string(family_name(id.family)) + " identity [" +
           validity_name(id.validity) + "] for " + id.provenance + ":\n  " +
           format_zeta_sum(id.lhs) + " = " + format_zeta_sum(id.rhs);
}

namespace {

std::string paren(const Index& k) {
    return k.is_empty() ? "∅" : "(" + format_index(k) + ")";
}

ZetaSum zeta_sum_of(const IndexSum& s) {
    ZetaSum out;
    for (const auto& [idx, c] : s.terms()) out.add(ZetaTerm::zeta(idx), Rational(c));
    return out;
}

} // namespace

std::optional<Identity> shuffle_identity(const Index& k, const Index& l,
                                         const IndexSum& product) {
    const bool k_converges = k.is_empty() || k.admissible();
    const bool l_converges = l.is_empty() || l.admissible();
    if (!k_converges || !l_converges) return std::nullopt;
    Identity id;
    id.family = Family::Shuffle;
    id.validity = Validity::LimitOnly;
    id.provenance = paren(k) + " x " + paren(l);
    id.lhs.add(ZetaTerm::product(k, l), 1);
    id.rhs = zeta_sum_of(product);
    assert_identity_homogeneous(id);
    return id;
}

Identity harmonic_identity(const Index& k, const Index& l, const IndexSum& product) {
    Identity id;
    id.family = Family::Harmonic;
    id.validity = Validity::ExactFiniteN;
    id.provenance = paren(k) + " x " + paren(l);
    id.lhs.add(ZetaTerm::product(k, l), 1);
    id.rhs = zeta_sum_of(product);
    assert_identity_homogeneous(id);
    return id;
}

Identity dual_identity(const Index& k, const Index& dual) {
    Identity id;
    id.family = Family::Dual;
    id.validity = Validity::LimitOnly;
    id.provenance = paren(k);
    id.lhs.add(ZetaTerm::binom_zeta(k, TailOrder::NM), 1);
    id.rhs.add(ZetaTerm::binom_zeta(dual, TailOrder::MN), 1);
    assert_identity_homogeneous(id);
    return id;
}

Identity hoffman_dual_identity(const Index& k, const Index& hdual) {
    Identity id;
    id.family = Family::HDual;
    id.validity = Validity::ExactFiniteN;
    id.provenance = paren(k);
    id.lhs.add(ZetaTerm::h_star(k), 1);
    id.rhs.add(ZetaTerm::zeta_star(hdual), 1);
    assert_identity_homogeneous(id);
    return id;
}

} // namespace mzv
