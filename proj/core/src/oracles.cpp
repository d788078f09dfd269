#include "mzvkit/oracles.hpp"

#include <map>

namespace mzv {

namespace {

// Letters of the binary word encoding: 'y' opens a new entry, 'x' raises it.
using Word = std::string;
using WordSum = std::map<Word, std::int64_t>;

Word index_to_word(const Index& k) {
    Word w;
    for (int e : k.entries()) {
        w.push_back('y');
        w.append(static_cast<std::size_t>(e - 1), 'x');
    }
    return w;
}

Index word_to_index(const Word& w) {
    std::vector<int> entries;
    for (char c : w) {
        if (c == 'y') {
            entries.push_back(1);
        } else {
            // A shuffle of two index words always starts with 'y', so there
            // is an open entry to raise.
            if (entries.empty()) throw invariant_violation("shuffle word starts with x");
            entries.back() += 1;
        }
    }
    return Index(std::move(entries));
}

// Memoized word shuffle.  Depths here are tiny (total weight <= ~14 in every
// suite), so the plain exponential recursion with memoization is fine.
WordSum shuffle_words(const Word& u, const Word& v) {
    if (u.empty()) return {{v, 1}};
    if (v.empty()) return {{u, 1}};
    WordSum out;
    for (const auto& [w, c] : shuffle_words(u.substr(1), v))
        out[u.substr(0, 1) + w] += c;
    for (const auto& [w, c] : shuffle_words(u, v.substr(1)))
        out[v.substr(0, 1) + w] += c;
    return out;
}

} // namespace

IndexSum shuffle_oracle(const Index& k, const Index& l) {
    WordSum words = shuffle_words(index_to_word(k), index_to_word(l));
    IndexSum out;
    for (const auto& [w, c] : words) out.add(word_to_index(w), c);
    return out;
}

IndexSum harmonic_oracle(const Index& k, const Index& l) {
    if (k.is_empty()) return IndexSum::single(l);
    if (l.is_empty()) return IndexSum::single(k);
    const Index kp = drop_last(k);
    const Index lp = drop_last(l);
    const int a = k.last();
    const int b = l.last();
    IndexSum out;
    const auto append = [&out](const IndexSum& s, int e) {
        for (const auto& [h, c] : s.terms()) {
            std::vector<int> v = h.entries();
            v.push_back(e);
            out.add(Index(std::move(v)), c);
        }
    };
    append(harmonic_oracle(kp, l), a);
    append(harmonic_oracle(k, lp), b);
    append(harmonic_oracle(kp, lp), a + b);
    return out;
}

Index dual_oracle(const Index& k) {
    if (!k.admissible()) throw domain_error("dual of a non-admissible index");
    return ArrowWord::encode(k).reversed_swapped().decode();
}

Index hoffman_dual_oracle(const Index& k) {
    if (k.is_empty()) throw domain_error("conjugate of the empty index");
    const int w = k.weight();
    // Proper partial sums k_1, k_1+k_2, ..., k_1+...+k_{a-1} inside {1,...,w-1}.
    std::vector<bool> in_set(static_cast<std::size_t>(w), false);
    int acc = 0;
    for (std::size_t i = 0; i + 1 < k.entries().size(); ++i) {
        acc += k.entries()[i];
        in_set[static_cast<std::size_t>(acc)] = true;
    }
    // Complement within {1,...,w-1}, read back as a composition of w: the
    // entries are the gaps between consecutive chosen cut points.
    std::vector<int> entries;
    int prev = 0;
    for (int s = 1; s < w; ++s) {
        if (!in_set[static_cast<std::size_t>(s)]) {
            entries.push_back(s - prev);
            prev = s;
        }
    }
    entries.push_back(w - prev);
    return Index(std::move(entries));
}

} // namespace mzv
