#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mzvkit/derive.hpp>
#include <mzvkit/sweep.hpp>

#include <string>
#include <vector>

using namespace mzv;

namespace {

IndexSum sum_of(std::initializer_list<std::pair<Index, long>> parts) {
    IndexSum s;
    for (const auto& [k, c] : parts) s.add(k, c);
    return s;
}

std::vector<std::string> rule_sequence(const Trace& t) {
    std::vector<std::string> names;
    names.reserve(t.steps.size());
    for (const auto& s : t.steps) names.emplace_back(rule_name(s.rule));
    return names;
}

ZetaSum zetas(std::initializer_list<std::pair<Index, long>> parts) {
    ZetaSum s;
    for (const auto& [k, c] : parts) s.add(ZetaTerm::zeta(k), c);
    return s;
}

} // namespace

TEST_CASE("expand_S: frozen values and the ends-in-one degeneration") {
    CHECK(expand_S(Index{2}) == sum_of({{Index{1, 2}, 1}}));
    CHECK(expand_S(Index{3}) == sum_of({{Index{1, 3}, 1}, {Index{2, 2}, 1}}));
    CHECK(expand_S(Index{1, 2}) == sum_of({{Index{1, 1, 2}, 1}}));
    CHECK(expand_S(Index{2, 1, 3}) ==
          sum_of({{Index{1, 2, 1, 3}, 1}, {Index{2, 2, 1, 2}, 1}}));
    CHECK(expand_S(Index{2, 1}).terms().empty());
    CHECK(expand_S(Index{1}).terms().empty());
    CHECK_THROWS_AS(expand_S(Index{}), domain_error);
}

TEST_CASE("expand_H: frozen values, degenerate slot, slot range") {
    CHECK(expand_H(Index{2}, 1) == sum_of({{Index{1, 2}, 1}}));
    CHECK(expand_H(Index{3}, 1) == sum_of({{Index{2, 2}, 1}, {Index{1, 3}, 1}}));
    CHECK(expand_H(Index{2, 1, 3}, 1) == sum_of({{Index{1, 2, 1, 3}, 1}}));
    CHECK(expand_H(Index{2, 1, 3}, 2).terms().empty());
    CHECK(expand_H(Index{2, 1, 3}, 3) ==
          sum_of({{Index{2, 1, 2, 2}, 1}, {Index{2, 1, 1, 3}, 1}}));
    CHECK_THROWS_AS(expand_H(Index{2, 1}, 0), domain_error);
    CHECK_THROWS_AS(expand_H(Index{2, 1}, 3), domain_error);
    CHECK_THROWS_AS(expand_H(Index{}, 1), domain_error);
}

// The worked product derivation ζ(1,1)·ζ(1): the driver starts one raise
// above the factors, and the eight rewrites below are pinned in order.
TEST_CASE("shuffle derivation: worked example trace, step by step") {
    const auto [sum, trace] = derive_shuffle(Index{1, 1}, Index{1});

    CHECK(sum == sum_of({{Index{1, 1, 1}, 3}}));
    CHECK(trace.family == Family::Shuffle);
    CHECK(trace.start ==
          Expr::single(Term::sh(Index{1, 2}, Index{2}, Index{1})));
    CHECK(rule_sequence(trace) ==
          std::vector<std::string>{"sh-main", "sh-unload", "sh-main",
                                   "sh-unload", "sh-sym", "sh-unload",
                                   "sh-sym", "sh-unload"});

    // Finished form: every connected term is a boundary term.
    Expr boundary;
    boundary.add(Term::sh(Index{}, Index{2}, Index{1, 1, 1}), 2);
    boundary.add(Term::sh(Index{}, Index{1, 2}, Index{1, 1}), 1);
    CHECK(trace.result == boundary);
    CHECK(replay_trace(trace) == trace.result);
}

TEST_CASE("shuffle derivation: agrees with the word-interleaving oracle") {
    for (const Index& k : enumerate_indices(3, true))
        for (const Index& l : enumerate_indices(2, true)) {
            const auto [sum, trace] = derive_shuffle(k, l);
            CHECK(sum == shuffle_oracle(k, l));
            CHECK(replay_trace(trace) == trace.result);
        }
}

TEST_CASE("harmonic derivation: worked example ζ(1)·ζ(2)") {
    const auto [sum, trace] = derive_harmonic(Index{1}, Index{2});

    CHECK(sum ==
          sum_of({{Index{1, 2}, 1}, {Index{2, 1}, 1}, {Index{3}, 1}}));
    CHECK(trace.family == Family::Harmonic);
    CHECK(trace.start ==
          Expr::single(Term::har(Index{1, 1}, Index{1, 2}, Index{})));
    CHECK(rule_sequence(trace) ==
          std::vector<std::string>{"har-main", "har-sym", "har-unload"});
    CHECK(replay_trace(trace) == trace.result);
}

TEST_CASE("harmonic derivation: worked example ζ(1,1)·ζ(1)") {
    const auto [sum, trace] = derive_harmonic(Index{1, 1}, Index{1});

    CHECK(sum == sum_of({{Index{1, 1, 1}, 3},
                         {Index{1, 2}, 1},
                         {Index{2, 1}, 1}}));
    CHECK(trace.start ==
          Expr::single(Term::har(Index{1, 1, 1}, Index{1, 1}, Index{})));
    CHECK(rule_sequence(trace) ==
          std::vector<std::string>{"har-main", "har-main", "har-sym",
                                   "har-sym", "har-sym"});
    CHECK(replay_trace(trace) == trace.result);
}

TEST_CASE("harmonic derivation: agrees with the first-entry oracle") {
    for (const Index& k : enumerate_indices(3, true))
        for (const Index& l : enumerate_indices(2, true)) {
            const auto [sum, trace] = derive_harmonic(k, l);
            CHECK(sum == harmonic_oracle(k, l));
            CHECK(replay_trace(trace) == trace.result);
        }
}

// The worked transport ζ_{n,m}(3,2) = ζ_{m,n}(2,1,2): five single-chain
// steps, one per unit of weight.
TEST_CASE("dual derivation: worked example (3,2)") {
    const auto [d, trace] = derive_dual(Index{3, 2});

    CHECK(d == Index{2, 1, 2});
    CHECK(trace.family == Family::Dual);
    CHECK(trace.start == Expr::single(Term::d(Index{3, 2}, Index{})));
    CHECK(rule_sequence(trace) ==
          std::vector<std::string>{"d-up", "d-arrow", "d-up", "d-up",
                                   "d-arrow"});
    CHECK(trace.result == Expr::single(Term::d(Index{}, Index{2, 1, 2})));
    CHECK(replay_trace(trace) == trace.result);
}

TEST_CASE("dual derivation: oracle agreement, involution, step count") {
    for (const Index& k : enumerate_admissible(7)) {
        const auto [d, trace] = derive_dual(k);
        CHECK(d == dual_oracle(k));
        CHECK(static_cast<int>(trace.steps.size()) == k.weight());
        CHECK(derive_dual(d).first == k);
        CHECK(replay_trace(trace) == trace.result);
    }
}

TEST_CASE("dual derivation rejects non-admissible input") {
    CHECK_THROWS_AS(derive_dual(Index{}), domain_error);
    CHECK_THROWS_AS(derive_dual(Index{2, 1}), domain_error);
}

TEST_CASE("Hoffman dual derivation: worked example (3,2)") {
    const auto [d, trace] = derive_hoffman_dual(Index{3, 2});

    CHECK(d == Index{1, 1, 2, 1});
    CHECK(trace.family == Family::HDual);
    CHECK(trace.start == Expr::single(Term::hd(Index{3, 3}, Index{})));
    CHECK(rule_sequence(trace) ==
          std::vector<std::string>{"hd-up", "hd-up", "hd-arrow", "hd-up",
                                   "hd-up"});
    CHECK(trace.result ==
          Expr::single(Term::hd(Index{1}, Index{1, 1, 2, 1})));
    CHECK(replay_trace(trace) == trace.result);
}

TEST_CASE("Hoffman dual derivation: oracle agreement, involution, steps") {
    for (const Index& k : enumerate_indices(7, false)) {
        const auto [d, trace] = derive_hoffman_dual(k);
        CHECK(d == hoffman_dual_oracle(k));
        CHECK(static_cast<int>(trace.steps.size()) == k.weight());
        CHECK(derive_hoffman_dual(d).first == k);
        CHECK(replay_trace(trace) == trace.result);
    }
    CHECK_THROWS_AS(derive_hoffman_dual(Index{}), domain_error);
}

TEST_CASE("cyclic derivation: frozen identities") {
    {
        const auto [id, trace] = derive_cyclic_identity(Index{2});
        CHECK(id.family == Family::Cyclic);
        CHECK(id.validity == Validity::LimitOnly);
        CHECK(id.lhs == zetas({{Index{3}, 1}}));
        CHECK(id.rhs == zetas({{Index{1, 2}, 1}}));
        assert_identity_homogeneous(id);
        CHECK(replay_trace(trace) == trace.result);
    }
    {
        const auto [id, trace] = derive_cyclic_identity(Index{1, 2});
        CHECK(id.lhs == zetas({{Index{1, 3}, 1}, {Index{2, 2}, 1}}));
        CHECK(id.rhs == zetas({{Index{1, 1, 2}, 1}}));
        CHECK(replay_trace(trace) == trace.result);
    }
    // The identity depends only on the cyclic class, not the admissible
    // representative it was entered from.
    CHECK(derive_cyclic_identity(Index{2, 3}).first.lhs ==
          derive_cyclic_identity(Index{3, 2}).first.lhs);
    CHECK(derive_cyclic_identity(Index{2, 3}).first.rhs ==
          derive_cyclic_identity(Index{3, 2}).first.rhs);
    CHECK_THROWS_AS(derive_cyclic_identity(Index{2, 1}), domain_error);
    CHECK_THROWS_AS(derive_cyclic_identity(Index{}), domain_error);
}

TEST_CASE("cyclic derivation, mod-p variant: frozen identities") {
    {
        const auto [id, trace] = derive_cyclic_identity_mod_p(Index{1});
        CHECK(id.family == Family::CyclicModP);
        CHECK(id.validity == Validity::ModP);
        CHECK(id.lhs == zetas({{Index{2}, 2}, {Index{1, 1}, 1}}));
        CHECK(id.rhs.terms().empty());
        CHECK(replay_trace(trace) == trace.result);
    }
    {
        const auto [id, trace] = derive_cyclic_identity_mod_p(Index{3});
        CHECK(id.lhs == zetas({{Index{4}, 2}, {Index{1, 3}, 1}}));
        CHECK(id.rhs == zetas({{Index{1, 3}, 1}, {Index{2, 2}, 1}}));
        assert_identity_homogeneous(id);
        CHECK(replay_trace(trace) == trace.result);
    }
    // The mod-p variant accepts classes that end in 1.
    const auto [id, trace] = derive_cyclic_identity_mod_p(Index{2, 1});
    CHECK(id.validity == Validity::ModP);
    CHECK(replay_trace(trace) == trace.result);
    CHECK_THROWS_AS(derive_cyclic_identity_mod_p(Index{}), domain_error);
}

TEST_CASE("gap-transport relation: frozen identities") {
    {
        const auto [id, trace] = derive_hoffman_relation(Index{2});
        CHECK(id.family == Family::Hoffman);
        CHECK(id.validity == Validity::LimitOnly);
        CHECK(id.lhs == zetas({{Index{3}, 1}}));
        CHECK(id.rhs == zetas({{Index{1, 2}, 1}}));
        CHECK(replay_trace(trace) == trace.result);
    }
    {
        const auto [id, trace] = derive_hoffman_relation(Index{3});
        CHECK(id.lhs == zetas({{Index{4}, 1}}));
        CHECK(id.rhs == zetas({{Index{1, 3}, 1}, {Index{2, 2}, 1}}));
        CHECK(replay_trace(trace) == trace.result);
    }
    {
        // Depth-three input: one raised term per cut position on the left,
        // the fully expanded sum on the right.
        const auto [id, trace] = derive_hoffman_relation(Index{2, 1, 3});
        CHECK(id.lhs == zetas({{Index{3, 1, 3}, 1},
                               {Index{2, 2, 3}, 1},
                               {Index{2, 1, 4}, 1}}));
        CHECK(id.rhs == zetas({{Index{1, 2, 1, 3}, 1},
                               {Index{2, 1, 2, 2}, 1},
                               {Index{2, 1, 1, 3}, 1}}));
        assert_identity_homogeneous(id);
        CHECK(replay_trace(trace) == trace.result);
    }
    CHECK_THROWS_AS(derive_hoffman_relation(Index{2, 1}), domain_error);
    CHECK_THROWS_AS(derive_hoffman_relation(Index{}), domain_error);
}

TEST_CASE("identity builders: sides, kinds, validity") {
    const auto sh_id = [](const Index& k, const Index& l) {
        return shuffle_identity(k, l, shuffle_oracle(k, l));
    };
    {
        const auto id = sh_id(Index{2}, Index{2});
        REQUIRE(id.has_value());
        CHECK(id->family == Family::Shuffle);
        CHECK(id->validity == Validity::LimitOnly);
        ZetaSum lhs;
        lhs.add(ZetaTerm::product(Index{2}, Index{2}), 1);
        CHECK(id->lhs == lhs);
        CHECK(id->rhs == zetas({{Index{1, 3}, 4}, {Index{2, 2}, 2}}));
    }
    // The limit statement needs each factor admissible or empty: a divergent
    // factor leaves the expansion true as combinatorics but not as numbers.
    CHECK_FALSE(sh_id(Index{1, 1}, Index{2}).has_value());
    CHECK_FALSE(sh_id(Index{1, 1}, Index{1}).has_value());
    CHECK(sh_id(Index{}, Index{2}).has_value());
    CHECK(sh_id(Index{1, 2}, Index{2}).has_value());

    {
        const auto id = harmonic_identity(Index{1}, Index{2},
                                          harmonic_oracle(Index{1}, Index{2}));
        CHECK(id.family == Family::Harmonic);
        CHECK(id.validity == Validity::ExactFiniteN);
        ZetaSum lhs;
        lhs.add(ZetaTerm::product(Index{1}, Index{2}), 1);
        CHECK(id.lhs == lhs);
        CHECK(id.rhs ==
              zetas({{Index{1, 2}, 1}, {Index{2, 1}, 1}, {Index{3}, 1}}));
        assert_identity_homogeneous(id);
    }
    {
        const auto id = dual_identity(Index{3, 2}, dual_oracle(Index{3, 2}));
        CHECK(id.family == Family::Dual);
        CHECK(id.validity == Validity::LimitOnly);
        ZetaSum lhs, rhs;
        lhs.add(ZetaTerm::binom_zeta(Index{3, 2}, TailOrder::NM), 1);
        rhs.add(ZetaTerm::binom_zeta(Index{2, 1, 2}, TailOrder::MN), 1);
        CHECK(id.lhs == lhs);
        CHECK(id.rhs == rhs);
    }
    {
        const auto id = hoffman_dual_identity(Index{3, 2},
                                              hoffman_dual_oracle(Index{3, 2}));
        CHECK(id.family == Family::HDual);
        CHECK(id.validity == Validity::ExactFiniteN);
        ZetaSum lhs, rhs;
        lhs.add(ZetaTerm::h_star(Index{3, 2}), 1);
        rhs.add(ZetaTerm::zeta_star(Index{1, 1, 2, 1}), 1);
        CHECK(id.lhs == lhs);
        CHECK(id.rhs == rhs);
        assert_identity_homogeneous(id);
    }
}

TEST_CASE("homogeneity guard rejects mixed-weight sides") {
    Identity bad{Family::Cyclic, Validity::LimitOnly, "test",
                 zetas({{Index{2}, 1}}), zetas({{Index{3}, 1}})};
    CHECK_THROWS_AS(assert_identity_homogeneous(bad), invariant_violation);
}

TEST_CASE("replay rejects tampered traces") {
    auto [sum, trace] = derive_shuffle(Index{1, 1}, Index{1});
    (void)sum;

    {
        Trace t = trace;
        t.steps[3].after = Expr::single(Term::zeta(Index{9}));
        CHECK_THROWS_AS(replay_trace(t), replay_error);
    }
    {
        Trace t = trace;
        t.steps[5].rule = RuleId::ShMain; // guard fails on that term
        CHECK_THROWS_AS(replay_trace(t), replay_error);
    }
    {
        Trace t = trace;
        t.result.add(Term::zeta(Index{2}), 1); // result no longer matches
        CHECK_THROWS_AS(replay_trace(t), replay_error);
    }
    {
        Trace t = trace;
        t.steps.pop_back(); // stops early: running expression ≠ result
        CHECK_THROWS_AS(replay_trace(t), replay_error);
    }
}
