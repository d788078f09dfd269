#include "mzvkit/index.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mzv {

Index::Index(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_) {
        if (e < 1) throw domain_error("index entries must be positive");
    }
}

Index::Index(std::initializer_list<int> entries)
    : Index(std::vector<int>(entries)) {}

int Index::weight() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0);
}

int Index::first() const {
    if (entries_.empty()) throw domain_error("first entry of the empty index");
    return entries_.front();
}

int Index::last() const {
    if (entries_.empty()) throw domain_error("last entry of the empty index");
    return entries_.back();
}

bool Index::all_ones() const {
    return !entries_.empty() &&
           std::all_of(entries_.begin(), entries_.end(), [](int e) { return e == 1; });
}

bool Index::has_entry_ge2() const {
    return std::any_of(entries_.begin(), entries_.end(), [](int e) { return e >= 2; });
}

Index Index::reversed() const {
    std::vector<int> v(entries_.rbegin(), entries_.rend());
    return Index(std::move(v));
}

Index Index::prefix(int i) const {
    if (i < 0 || i > depth()) throw domain_error("prefix length out of range");
    return Index(std::vector<int>(entries_.begin(), entries_.begin() + i));
}

Index Index::suffix(int i) const {
    if (i < 0 || i > depth()) throw domain_error("suffix position out of range");
    return Index(std::vector<int>(entries_.begin() + i, entries_.end()));
}

Index Index::rotated() const {
    if (entries_.empty()) throw domain_error("rotation of the empty index");
    std::vector<int> v;
    v.reserve(entries_.size());
    v.push_back(entries_.back());
    v.insert(v.end(), entries_.begin(), entries_.end() - 1);
    return Index(std::move(v));
}

Index Index::concat(const Index& other) const {
    std::vector<int> v = entries_;
    v.insert(v.end(), other.entries_.begin(), other.entries_.end());
    return Index(std::move(v));
}

IndexClass classify(const Index& k) {
    if (k.is_empty()) return IndexClass::Empty;
    return k.admissible() ? IndexClass::Admissible : IndexClass::NonAdmissible;
}

ArrowOp::ArrowOp(ArrowKind kind, int count) : kind(kind), count(count) {
    if (count < 1) throw domain_error("arrow repetition count must be >= 1");
}

namespace {

Index apply_once(const Index& k, ArrowKind kind) {
    std::vector<int> v = k.entries();
    switch (kind) {
        case ArrowKind::RightAppend:
            v.push_back(1);
            break;
        case ArrowKind::LeftPrepend:
            v.insert(v.begin(), 1);
            break;
        case ArrowKind::UpLast:
            if (v.empty()) return k;
            v.back() += 1;
            break;
        case ArrowKind::UpFirst:
            if (v.empty()) return k;
            v.front() += 1;
            break;
        case ArrowKind::DownLast:
            if (v.empty()) return k;
            if (v.back() < 2) throw domain_error("cannot lower a last entry equal to 1");
            v.back() -= 1;
            break;
        case ArrowKind::DownFirst:
            if (v.empty()) return k;
            if (v.front() < 2) throw domain_error("cannot lower a first entry equal to 1");
            v.front() -= 1;
            break;
    }
    return Index(std::move(v));
}

} // namespace

Index arrow_apply(const Index& k, const ArrowOp& op) {
    Index out = k;
    for (int i = 0; i < op.count; ++i) out = apply_once(out, op.kind);
    return out;
}

Index arrow_apply(const Index& k, ArrowKind kind, int count) {
    return arrow_apply(k, ArrowOp(kind, count));
}

Index right_append(const Index& k) { return apply_once(k, ArrowKind::RightAppend); }
Index left_prepend(const Index& k) { return apply_once(k, ArrowKind::LeftPrepend); }
Index up_last(const Index& k) { return apply_once(k, ArrowKind::UpLast); }
Index up_first(const Index& k) { return apply_once(k, ArrowKind::UpFirst); }
Index down_last(const Index& k) { return apply_once(k, ArrowKind::DownLast); }
Index down_first(const Index& k) { return apply_once(k, ArrowKind::DownFirst); }

Index drop_last(const Index& k) {
    if (k.is_empty()) throw domain_error("cannot drop the last entry of the empty index");
    std::vector<int> v = k.entries();
    v.pop_back();
    return Index(std::move(v));
}

Index tail(const Index& k) {
    if (k.is_empty()) throw domain_error("cannot take the tail of the empty index");
    return k.suffix(1);
}

ArrowWord ArrowWord::encode(const Index& k) {
    ArrowWord w;
    for (int e : k.entries()) {
        w.letters.push_back(ArrowKind::RightAppend);
        for (int i = 1; i < e; ++i) w.letters.push_back(ArrowKind::UpLast);
    }
    return w;
}

Index ArrowWord::decode() const {
    Index k;
    for (ArrowKind a : letters) {
        if (a != ArrowKind::RightAppend && a != ArrowKind::UpLast)
            throw domain_error("arrow words use only the append and raise-last letters");
        if (a == ArrowKind::UpLast && k.is_empty())
            throw domain_error("an arrow word must begin with the append letter");
        k = apply_once(k, a);
    }
    return k;
}

ArrowWord ArrowWord::reversed_swapped() const {
    ArrowWord out;
    out.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        out.letters.push_back(*it == ArrowKind::RightAppend ? ArrowKind::UpLast
                                                            : ArrowKind::RightAppend);
    }
    return out;
}

Index parse_index(const std::string& text) {
    if (text.empty() || text == "∅" || text == "()") return Index{};
    std::vector<int> entries;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
        // Trim surrounding spaces.
        std::size_t b = tok.find_first_not_of(" \t");
        std::size_t e = tok.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw parse_error("empty entry in index \"" + text + "\"");
        tok = tok.substr(b, e - b + 1);
        std::size_t used = 0;
        long value = 0;
        try {
            value = std::stol(tok, &used);
        } catch (const std::exception&) {
            throw parse_error("bad index entry \"" + tok + "\"");
        }
        if (used != tok.size()) throw parse_error("bad index entry \"" + tok + "\"");
        if (value < 1) throw parse_error("index entry \"" + tok + "\" is not positive");
        entries.push_back(static_cast<int>(value));
        if (comma == std::string::npos) break;
        pos = comma + 1;
        if (pos == text.size()) throw parse_error("trailing comma in index \"" + text + "\"");
    }
    return Index(std::move(entries));
}

std::string format_index(const Index& k) {
    if (k.is_empty()) return "∅";
    std::ostringstream os;
    for (std::size_t i = 0; i < k.entries().size(); ++i) {
        if (i) os << ',';
        os << k.entries()[i];
    }
    return os.str();
}

std::set<Index> cyclic_class(const Index& k) {
    if (k.is_empty()) throw domain_error("cyclic class of the empty index");
    std::set<Index> out;
    Index j = k;
    for (int i = 0; i < k.depth(); ++i) {
        out.insert(j);
        j = j.rotated();
    }
    return out;
}

} // namespace mzv
