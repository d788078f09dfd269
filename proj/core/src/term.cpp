#include "mzvkit/term.hpp"

#include <sstream>

namespace mzv {

Term Term::sh(Index k, Index l, Index h) {
    if (h.is_empty()) throw domain_error("Zsh needs a nonempty third slot");
    Term t;
    t.kind_ = TermKind::Sh;
    t.k_ = std::move(k);
    t.l_ = std::move(l);
    t.h_ = std::move(h);
    return t;
}

Term Term::har(Index k, Index l, Index h) {
    if (k.is_empty() || l.is_empty())
        throw domain_error("Z* needs nonempty first and second slots");
    Term t;
    t.kind_ = TermKind::Har;
    t.k_ = std::move(k);
    t.l_ = std::move(l);
    t.h_ = std::move(h);
    return t;
}

Term Term::d(Index k, Index l, TailOrder tails) {
    Term t;
    t.kind_ = TermKind::D;
    t.k_ = std::move(k);
    t.l_ = std::move(l);
    t.tails_ = tails;
    return t;
}

Term Term::hd(Index k, Index l) {
    if (k.is_empty()) throw domain_error("ZHD needs a nonempty first slot");
    Term t;
    t.kind_ = TermKind::HD;
    t.k_ = std::move(k);
    t.l_ = std::move(l);
    return t;
}

Term Term::o(Index k) {
    if (k.is_empty()) throw domain_error("ZO needs a nonempty index");
    Term t;
    t.kind_ = TermKind::O;
    t.k_ = std::move(k);
    return t;
}

Term Term::h(Index k, Index l) {
    if (k.is_empty() || l.is_empty())
        throw domain_error("ZH needs nonempty first and second slots");
    Term t;
    t.kind_ = TermKind::H;
    t.k_ = std::move(k);
    t.l_ = std::move(l);
    return t;
}

Term Term::zeta(Index k, ZetaTrunc trunc) {
    if (trunc == ZetaTrunc::Limit && !k.is_empty() && !k.admissible())
        throw domain_error("limit zeta of a non-admissible index diverges");
    Term t;
    t.kind_ = TermKind::Zeta;
    t.k_ = std::move(k);
    t.ztrunc_ = trunc;
    return t;
}

std::string format_term(const Term& t) {
    std::ostringstream os;
    const auto idx = [](const Index& k) { return format_index(k); };
    switch (t.kind()) {
        case TermKind::Sh:
            os << "Zsh(" << idx(t.slot_k()) << "; " << idx(t.slot_l()) << "; "
               << idx(t.slot_h()) << ")";
            break;
        case TermKind::Har:
            os << "Z*(" << idx(t.slot_k()) << "; " << idx(t.slot_l()) << "; "
               << idx(t.slot_h()) << ")";
            break;
        case TermKind::D:
            os << "ZD{" << (t.tail_order() == TailOrder::NM ? "n,m" : "m,n") << "}("
               << idx(t.slot_k()) << "; " << idx(t.slot_l()) << ")";
            break;
        case TermKind::HD:
            os << "ZHD(" << idx(t.slot_k()) << "; " << idx(t.slot_l()) << ")";
            break;
        case TermKind::O:
            os << "ZO(" << idx(t.slot_k()) << ")";
            break;
        case TermKind::H:
            os << "ZH(" << idx(t.slot_k()) << "; " << idx(t.slot_l()) << ")";
            break;
        case TermKind::Zeta:
            os << (t.zeta_trunc_kind() == ZetaTrunc::TruncatedN ? "ζ_N(" : "ζ(")
               << idx(t.slot_k()) << ")";
            break;
    }
    return os.str();
}

std::string term_family_name(TermKind kind) {
    switch (kind) {
        case TermKind::Sh: return "sh";
        case TermKind::Har: return "har";
        case TermKind::D: return "D";
        case TermKind::HD: return "HD";
        case TermKind::O: return "O";
        case TermKind::H: return "H";
        case TermKind::Zeta: return "zeta";
    }
    throw invariant_violation("unknown term kind");
}

TermKind term_kind_from_name(const std::string& name) {
    if (name == "sh") return TermKind::Sh;
    if (name == "har") return TermKind::Har;
    if (name == "D") return TermKind::D;
    if (name == "HD") return TermKind::HD;
    if (name == "O") return TermKind::O;
    if (name == "H") return TermKind::H;
    if (name == "zeta") return TermKind::Zeta;
    throw parse_error("unknown term family \"" + name + "\"");
}

Expr Expr::single(const Term& t, Rational c) {
    Expr e;
    e.add(t, c);
    return e;
}

void Expr::add(const Term& t, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Expr& Expr::operator+=(const Expr& other) {
    for (const auto& [t, c] : other.terms_) add(t, c);
    return *this;
}

Expr& Expr::operator-=(const Expr& other) {
    for (const auto& [t, c] : other.terms_) add(t, Rational(-c));
    return *this;
}

Expr Expr::scaled(const Rational& c) const {
    Expr out;
    if (c == 0) return out;
    for (const auto& [t, v] : terms_) out.terms_.emplace(t, Rational(v * c));
    return out;
}

Rational Expr::coeff(const Term& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::string format_expr(const Expr& e) {
    if (e.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : e.terms()) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "- ";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (a != 1) os << rational_to_string(a) << "·";
        os << format_term(t);
        first = false;
    }
    return os.str();
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Shuffle: return "shuffle";
        case Family::Harmonic: return "harmonic";
        case Family::Dual: return "dual";
        case Family::HDual: return "hdual";
        case Family::Cyclic: return "cyclic";
        case Family::CyclicModP: return "cyclic-modp";
        case Family::Hoffman: return "hoffman";
    }
    throw invariant_violation("unknown family");
}

Family family_from_name(const std::string& name) {
    if (name == "shuffle") return Family::Shuffle;
    if (name == "harmonic") return Family::Harmonic;
    if (name == "dual") return Family::Dual;
    if (name == "hdual") return Family::HDual;
    if (name == "cyclic") return Family::Cyclic;
    if (name == "cyclic-modp") return Family::CyclicModP;
    if (name == "hoffman") return Family::Hoffman;
    throw parse_error("unknown family \"" + name + "\"");
}

} // namespace mzv
