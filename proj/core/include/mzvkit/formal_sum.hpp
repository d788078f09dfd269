#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>

namespace mzv {

// An integer-coefficient linear combination of keys, kept canonical: zero
// coefficients are never stored, and the underlying map order makes
// serialization deterministic.  Keys need a strict weak order.
template <typename Key, typename Coeff = std::int64_t>
class FormalSum {
public:
    using map_type = std::map<Key, Coeff>;

    FormalSum() = default;

    static FormalSum single(const Key& k, Coeff c = 1) {
        FormalSum s;
        s.add(k, c);
        return s;
    }

    void add(const Key& k, Coeff c) {
        if (c == Coeff{}) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == Coeff{}) terms_.erase(it);
        }
    }

    FormalSum& operator+=(const FormalSum& other) {
        for (const auto& [k, c] : other.terms_) add(k, c);
        return *this;
    }
    FormalSum& operator-=(const FormalSum& other) {
        for (const auto& [k, c] : other.terms_) add(k, -c);
        return *this;
    }
    friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }

    FormalSum scaled(Coeff c) const {
        FormalSum out;
        if (c == Coeff{}) return out;
        for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
        return out;
    }

    Coeff coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Coeff{} : it->second;
    }

    Coeff total_mass() const {
        Coeff m{};
        for (const auto& [k, c] : terms_) m += c;
        return m;
    }

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const map_type& terms() const { return terms_; }

    bool operator==(const FormalSum& other) const = default;

private:
    map_type terms_;
};

// Render with a key printer, e.g. "3(1,1,1) + (1,2)".
template <typename Key, typename Coeff, typename Printer>
std::string format_formal_sum(const FormalSum<Key, Coeff>& s, Printer&& print_key) {
    if (s.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : s.terms()) {
        Coeff a = c;
        if (first) {
            if (a < Coeff{}) {
                os << "- ";
                a = -a;
            }
        } else {
            os << (a < Coeff{} ? " - " : " + ");
            if (a < Coeff{}) a = -a;
        }
        if (!(a == Coeff{1})) os << a << "·";
        os << print_key(k);
        first = false;
    }
    return os.str();
}

} // namespace mzv
