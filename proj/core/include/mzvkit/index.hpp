#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "mzvkit/errors.hpp"

namespace mzv {

// A finite (possibly empty) composition of positive integers.  This is the
// universal argument of every sum in the library: for
//
//   zeta_N(k_1,...,k_a) = sum_{0 < n_1 < ... < n_a <= N} 1 / (n_1^{k_1} ... n_a^{k_a})
//
// the tuple (k_1,...,k_a) is an Index.  The empty index is written "∅" and
// has weight 0 and depth 0.
class Index {
public:
    Index() = default;
    explicit Index(std::vector<int> entries);
    Index(std::initializer_list<int> entries);

    static Index empty() { return Index{}; }

    const std::vector<int>& entries() const { return entries_; }
    int depth() const { return static_cast<int>(entries_.size()); }
    int weight() const;
    bool is_empty() const { return entries_.empty(); }

    int first() const; // throws domain_error on ∅
    int last() const;  // throws domain_error on ∅

    // True iff the index is nonempty and its last entry is >= 2 (the class
    // of indices whose limit zeta value converges).
    bool admissible() const { return !entries_.empty() && entries_.back() >= 2; }

    // True iff the index is nonempty and every entry equals 1.
    bool all_ones() const;
    // True iff some entry is >= 2.
    bool has_entry_ge2() const;

    // Reverse: (k_1,...,k_a) -> (k_a,...,k_1).
    Index reversed() const;
    // Prefix (k_1,...,k_i) and suffix (k_{i+1},...,k_a); 0 <= i <= depth.
    Index prefix(int i) const;
    Index suffix(int i) const;
    // Rotation (k_1,...,k_a) -> (k_a,k_1,...,k_{a-1}); throws on ∅.
    Index rotated() const;
    // Concatenation (k, l).
    Index concat(const Index& other) const;

    auto operator<=>(const Index&) const = default;

private:
    std::vector<int> entries_;
};

// Classification of an index by its last entry.
enum class IndexClass { Empty, NonAdmissible, Admissible };
IndexClass classify(const Index& k);

// The six arrow operations.  Conventions on the empty index:
//   ∅ with RightAppend or LeftPrepend gives (1);
//   the four up/down arrows act as the identity on ∅.
// DownLast / DownFirst on a nonempty index require the affected entry to be
// >= 2 (the result must stay a composition of positive integers); violating
// this throws domain_error.
enum class ArrowKind {
    RightAppend, // k -> (k_1,...,k_a,1)
    LeftPrepend, // k -> (1,k_1,...,k_a)
    UpLast,      // k -> (k_1,...,k_{a-1},k_a+1)
    UpFirst,     // k -> (k_1+1,k_2,...,k_a)
    DownLast,    // k -> (k_1,...,k_{a-1},k_a-1)
    DownFirst    // k -> (k_1-1,k_2,...,k_a)
};

struct ArrowOp {
    ArrowKind kind;
    int count = 1; // repetition, >= 1

    ArrowOp(ArrowKind kind, int count = 1);
};

Index arrow_apply(const Index& k, const ArrowOp& op);
Index arrow_apply(const Index& k, ArrowKind kind, int count = 1);

// Shorthands used throughout the rewrite rules.
Index right_append(const Index& k); // k with 1 appended
Index left_prepend(const Index& k); // k with 1 prepended
Index up_last(const Index& k);
Index up_first(const Index& k);
Index down_last(const Index& k);
Index down_first(const Index& k);
Index drop_last(const Index& k);  // remove the final entry; throws on ∅
Index tail(const Index& k);       // remove the first entry; throws on ∅

// A word over the letters {RightAppend, UpLast} that builds an index from ∅
// by successive arrow application.  Every nonempty index has exactly one
// such spelling: entry e contributes RightAppend followed by e-1 UpLast
// letters.  A word ends with UpLast iff the index it encodes is admissible.
struct ArrowWord {
    std::vector<ArrowKind> letters; // only RightAppend / UpLast

    static ArrowWord encode(const Index& k);
    Index decode() const;

    // Reverse the word and exchange RightAppend with UpLast.  On the word of
    // an admissible index this computes the word of its dual index.
    ArrowWord reversed_swapped() const;
};

// Parse the canonical textual form: "∅" (or the ASCII spelling "0" is NOT
// accepted; the empty string is), or comma-separated positive integers such
// as "2,1,3".  Formatting then parsing is the identity.
Index parse_index(const std::string& text);
std::string format_index(const Index& k);

// The set of distinct cyclic rotations of k; throws domain_error on ∅.
std::set<Index> cyclic_class(const Index& k);

} // namespace mzv
