#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "naive_eval.hpp"

#include <mzvkit/oracles.hpp>
#include <mzvkit/rational.hpp>
#include <mzvkit/sweep.hpp>

using namespace mzv;

namespace {

naive::IndexSum to_naive(const IndexSum& s) {
    naive::IndexSum out;
    for (const auto& [k, c] : s.terms()) out[k.entries()] += c;
    return out;
}

IndexSum sum_of(std::initializer_list<std::pair<Index, long>> parts) {
    IndexSum s;
    for (const auto& [k, c] : parts) s.add(k, c);
    return s;
}

} // namespace

TEST_CASE("shuffle product: frozen small cases") {
    CHECK(shuffle_oracle(Index{}, Index{}) == IndexSum::single(Index{}));
    CHECK(shuffle_oracle(Index{}, Index{3, 2}) == IndexSum::single(Index{3, 2}));
    CHECK(shuffle_oracle(Index{1}, Index{1}) == sum_of({{Index{1, 1}, 2}}));
    CHECK(shuffle_oracle(Index{1, 1}, Index{1}) == sum_of({{Index{1, 1, 1}, 3}}));
    // In the ascending-variable convention ζ(2)·ζ(1) = 2ζ(1,2) + ζ(2,1) and
    // ζ(2)² = 4ζ(1,3) + 2ζ(2,2) (the latter summing to π⁴/36).
    CHECK(shuffle_oracle(Index{2}, Index{1}) ==
          sum_of({{Index{1, 2}, 2}, {Index{2, 1}, 1}}));
    CHECK(shuffle_oracle(Index{2}, Index{2}) ==
          sum_of({{Index{1, 3}, 4}, {Index{2, 2}, 2}}));
}

TEST_CASE("shuffle product: symmetry, mass, weight homogeneity") {
    for (const Index& k : enumerate_indices(4, true))
        for (const Index& l : enumerate_indices(4, true)) {
            const IndexSum s = shuffle_oracle(k, l);
            CHECK(s == shuffle_oracle(l, k));
            // total coefficient = number of interleavings of the two words
            CHECK(s.total_mass() ==
                  binomial(static_cast<unsigned long>(k.weight() + l.weight()),
                           static_cast<unsigned long>(k.weight())));
            for (const auto& [h, c] : s.terms()) {
                CHECK(h.weight() == k.weight() + l.weight());
                CHECK(c > 0);
            }
        }
}

TEST_CASE("shuffle product agrees with direct interleaving enumeration") {
    for (const Index& k : enumerate_indices(4, true))
        for (const Index& l : enumerate_indices(4, true))
            CHECK(to_naive(shuffle_oracle(k, l)) ==
                  naive::shuffle(k.entries(), l.entries()));
}

TEST_CASE("harmonic product: frozen small cases") {
    CHECK(harmonic_oracle(Index{}, Index{}) == IndexSum::single(Index{}));
    CHECK(harmonic_oracle(Index{2, 1}, Index{}) == IndexSum::single(Index{2, 1}));
    CHECK(harmonic_oracle(Index{1}, Index{2}) ==
          sum_of({{Index{1, 2}, 1}, {Index{2, 1}, 1}, {Index{3}, 1}}));
    CHECK(harmonic_oracle(Index{1, 1}, Index{1}) ==
          sum_of({{Index{1, 1, 1}, 3}, {Index{1, 2}, 1}, {Index{2, 1}, 1}}));
}

TEST_CASE("harmonic product: stuffle law holds exactly at finite truncation") {
    // ζ_N(k)·ζ_N(l) = Σ c_h ζ_N(h) for every N — checked against the naive sums
    for (const Index& k : enumerate_indices(3, true))
        for (const Index& l : enumerate_indices(3, true))
            for (long N : {1L, 2L, 5L}) {
                const IndexSum expansion = harmonic_oracle(k, l);
                Rational rhs = 0;
                for (const auto& [h, c] : expansion.terms())
                    rhs += Rational(c) * naive::zeta(h.entries(), N);
                CHECK(naive::zeta(k.entries(), N) * naive::zeta(l.entries(), N) == rhs);
            }
}

TEST_CASE("harmonic product agrees with the first-entry recursion") {
    for (const Index& k : enumerate_indices(4, true))
        for (const Index& l : enumerate_indices(4, true)) {
            CHECK(harmonic_oracle(k, l) == harmonic_oracle(l, k));
            CHECK(to_naive(harmonic_oracle(k, l)) ==
                  naive::harmonic(k.entries(), l.entries()));
        }
}

TEST_CASE("dual: frozen table up to weight 4") {
    CHECK(dual_oracle(Index{2}) == Index{2});
    CHECK(dual_oracle(Index{3}) == Index{1, 2});
    CHECK(dual_oracle(Index{1, 2}) == Index{3});
    CHECK(dual_oracle(Index{4}) == Index{1, 1, 2});
    CHECK(dual_oracle(Index{1, 3}) == Index{1, 3});
    CHECK(dual_oracle(Index{2, 2}) == Index{2, 2});
    CHECK(dual_oracle(Index{1, 1, 2}) == Index{4});
    CHECK(dual_oracle(Index{3, 2}) == Index{2, 1, 2});
}

TEST_CASE("dual: involution, weight preservation, depth complement") {
    for (const Index& k : enumerate_admissible(8)) {
        const Index d = dual_oracle(k);
        CHECK(d.admissible());
        CHECK(dual_oracle(d) == k);
        CHECK(d.weight() == k.weight());
        CHECK(d.depth() + k.depth() == k.weight());
        CHECK(d == Index(naive::dual(k.entries())));
    }
}

TEST_CASE("dual rejects non-admissible input") {
    CHECK_THROWS_AS(dual_oracle(Index{}), domain_error);
    CHECK_THROWS_AS(dual_oracle(Index{1}), domain_error);
    CHECK_THROWS_AS(dual_oracle(Index{2, 1}), domain_error);
}

TEST_CASE("Hoffman dual: frozen table") {
    CHECK(hoffman_dual_oracle(Index{1}) == Index{1});
    CHECK(hoffman_dual_oracle(Index{2}) == Index{1, 1});
    CHECK(hoffman_dual_oracle(Index{1, 1}) == Index{2});
    CHECK(hoffman_dual_oracle(Index{2, 1}) == Index{1, 2});
    CHECK(hoffman_dual_oracle(Index{3, 2}) == Index{1, 1, 2, 1});
}

TEST_CASE("Hoffman dual: involution, weight and span preservation") {
    for (const Index& k : enumerate_indices(8, false)) {
        const Index d = hoffman_dual_oracle(k);
        CHECK(hoffman_dual_oracle(d) == k);
        CHECK(d.weight() == k.weight());
        // depths of the pair sum to weight + 1
        CHECK(d.depth() + k.depth() == k.weight() + 1);
        CHECK(d == Index(naive::hoffman_dual(k.entries())));
    }
    CHECK_THROWS_AS(hoffman_dual_oracle(Index{}), domain_error);
}
