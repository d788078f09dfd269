#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mzvkit/derive.hpp>
#include <mzvkit/modp.hpp>
#include <mzvkit/numeric.hpp>
#include <mzvkit/sweep.hpp>

#include <vector>

using namespace mzv;

namespace {

long pow_mod(long base, long e, long p) {
    long r = 1;
    base %= p;
    if (base < 0) base += p;
    while (e > 0) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

// Independent route: compute the truncated sum exactly as a rational, then
// reduce mod p with a Fermat inverse of the denominator.
long rational_mod_p(const Rational& r, long p) {
    const long num = static_cast<long>(
        mpz_fdiv_ui(r.get_num().get_mpz_t(), static_cast<unsigned long>(p)));
    const long den = static_cast<long>(
        mpz_fdiv_ui(r.get_den().get_mpz_t(), static_cast<unsigned long>(p)));
    REQUIRE(den != 0); // denominator must be prime to p
    return num * pow_mod(den, p - 2, p) % p;
}

ZetaSum zetas(std::initializer_list<std::pair<Index, long>> parts) {
    ZetaSum s;
    for (const auto& [k, c] : parts) s.add(ZetaTerm::zeta(k), c);
    return s;
}

} // namespace

TEST_CASE("primality gate") {
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 101L}) CHECK(is_prime(p));
    for (long n : {-7L, -1L, 0L, 1L, 4L, 9L, 15L, 21L, 25L, 91L})
        CHECK_FALSE(is_prime(n));
}

TEST_CASE("modular truncated zeta: frozen residues") {
    // Power sums Σ n^{-k} over n < p vanish unless (p-1) | k, when they
    // give -1; the depth-two value was tabulated by hand.
    CHECK(zeta_mod_p(Index{1}, 3) == Residue{0, 3});
    CHECK(zeta_mod_p(Index{1}, 5) == Residue{0, 5});
    CHECK(zeta_mod_p(Index{2}, 5) == Residue{0, 5});
    CHECK(zeta_mod_p(Index{2}, 3) == Residue{2, 3});
    CHECK(zeta_mod_p(Index{4}, 5) == Residue{4, 5});
    CHECK(zeta_mod_p(Index{1, 3}, 5) == Residue{3, 5});
    CHECK(zeta_mod_p(Index{}, 7) == Residue{1, 7});
    CHECK(zeta_mod_p(Index{1}, 2) == Residue{1, 2});
    CHECK_THROWS_AS(zeta_mod_p(Index{2}, 9), domain_error);
    CHECK_THROWS_AS(zeta_mod_p(Index{2}, 1), domain_error);
}

TEST_CASE("modular truncated zeta agrees with the reduced rational sum") {
    for (long p : {5L, 7L, 11L})
        for (const Index& k : enumerate_indices(4, true)) {
            const Residue r = zeta_mod_p(k, p);
            CHECK(r.modulus == p);
            CHECK(r.value == rational_mod_p(zeta_trunc(k, static_cast<int>(p) - 1), p));
        }
}

TEST_CASE("modular truncated zeta handles entries past the modulus") {
    // Only the bases are inverted, so entries may exceed p.
    const Residue r = zeta_mod_p(Index{9}, 5);
    CHECK(r.value == rational_mod_p(zeta_trunc(Index{9}, 4), 5));
}

TEST_CASE("product congruence holds on a small grid") {
    for (long p : {5L, 7L})
        for (const Index& k : enumerate_indices(2, true))
            for (const Index& l : enumerate_indices(2, true)) {
                const CongruenceReport rep = verify_shuffle_mod_p(k, l, p);
                CHECK(rep.p == p);
                CHECK(rep.congruent);
                CHECK(rep.lhs == rep.rhs);
                CHECK(!rep.instance.empty());
            }
    CHECK(verify_shuffle_mod_p(Index{2}, Index{3}, 11).congruent);
    CHECK(verify_shuffle_mod_p(Index{2, 1}, Index{1, 2}, 13).congruent);
    CHECK_THROWS_AS(verify_shuffle_mod_p(Index{2}, Index{1}, 8), domain_error);
}

TEST_CASE("boundary congruence holds on a small grid") {
    for (long p : {5L, 7L})
        for (const Index& k : enumerate_indices(2, true))
            for (const Index& l : enumerate_indices(2, true)) {
                const CongruenceReport rep = verify_boundary_mod_p(k, l, p);
                CHECK(rep.congruent);
            }
    CHECK(verify_boundary_mod_p(Index{1, 2}, Index{2}, 13).congruent);
}

TEST_CASE("cyclic congruence holds for small classes") {
    for (long p : {5L, 7L, 11L})
        for (const Index& k :
             {Index{1}, Index{2}, Index{1, 1}, Index{2, 1}, Index{3}, Index{1, 2}}) {
            const CongruenceReport rep = verify_cyclic_mod_p(k, p);
            CHECK(rep.p == p);
            CHECK(rep.congruent);
        }
}

TEST_CASE("congruence identities verify at any prime") {
    const Identity id = derive_cyclic_identity_mod_p(Index{3}).first;
    for (long p : {5L, 7L, 11L, 13L, 31L}) {
        const CongruenceReport rep = verify_identity_mod_p(id, p);
        CHECK(rep.congruent);
        CHECK(rep.p == p);
    }
}

TEST_CASE("congruence verifier rejects unsuitable input") {
    const Identity exact = harmonic_identity(
        Index{1}, Index{2}, harmonic_oracle(Index{1}, Index{2}));
    CHECK_THROWS_AS(verify_identity_mod_p(exact, 7), domain_error);

    const Identity id = derive_cyclic_identity_mod_p(Index{2}).first;
    CHECK_THROWS_AS(verify_identity_mod_p(id, 10), domain_error);
}

TEST_CASE("congruence verifier reports genuine failures") {
    // Σ n^{-4} over n < 5 is -1, not 0, so this made-up claim is false.
    const Identity bogus{Family::CyclicModP, Validity::ModP, "test",
                         zetas({{Index{4}, 1}}), ZetaSum{}};
    const CongruenceReport rep = verify_identity_mod_p(bogus, 5);
    CHECK_FALSE(rep.congruent);
    CHECK(rep.lhs == 4);
    CHECK(rep.rhs == 0);
}
