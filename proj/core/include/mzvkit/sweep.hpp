#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mzvkit/index.hpp"

// Batch verification suites.  Each suite runs one class of check over an
// exhaustively enumerated (or seeded pseudo-random) grid and tallies
// failures; the command-line sweep and the acceptance harness are both thin
// wrappers over these functions.
//
// Suites record verification mismatches as failures and keep going.  Errors
// that indicate a broken engine rather than a false identity — guard
// violations, divergent evaluations, internal invariants — propagate as
// exceptions.

namespace mzv {

struct SuiteResult {
    std::string name;
    long cases = 0;
    long failures = 0;
    // Human-readable descriptions of the first few failing instances.
    std::vector<std::string> failure_notes;

    bool passed() const { return failures == 0; }
};

struct SweepOptions {
    // Weight budget: bounds wt(k)+wt(l) on pair grids and wt(k) on single
    // grids.  0 makes every grid empty or trivial.
    int max_weight = 7;
    // Truncation levels for the exact identity suite.
    std::vector<long> identity_levels = {1, 2, 7, 20};
    // Truncation levels for the random transport suite.
    std::vector<long> transport_levels = {5, 11, 23};
    // Moduli for the congruence suites.
    std::vector<long> primes = {5, 7, 11, 13};
    // Pseudo-random instances per exact transport rule.
    int transport_instances = 200;
    std::uint32_t seed = 20260817;
    // Subset of sweep_suite_names() to run; empty means all.
    std::vector<std::string> suites;
};

struct SweepReport {
    std::vector<SuiteResult> suites;

    bool all_passed() const;
    long total_cases() const;
    long total_failures() const;
};

// The recognized suite names, in execution order.
std::vector<std::string> sweep_suite_names();

// Grid enumeration, deterministic order: weights ascending, compositions of
// one weight in binary-split order.
std::vector<Index> enumerate_indices(int max_weight, bool include_empty);
std::vector<Index> enumerate_admissible(int max_weight);

// Product expansions from the rewrite drivers match the word-recursion
// oracles on every pair with wt(k)+wt(l) <= max_weight_sum (empty factors
// included).
SuiteResult suite_shuffle_oracle(int max_weight_sum);
SuiteResult suite_harmonic_oracle(int max_weight_sum);

// Transported indices match the combinatorial oracles, and the maps are
// involutions.  Duality runs over admissible indices, the Hoffman dual over
// all nonempty ones.
SuiteResult suite_dual_oracle(int max_weight);
SuiteResult suite_hoffman_dual_oracle(int max_weight);

// The two exact-at-every-N identity families, verified in exact rational
// arithmetic at each level: the harmonic product expansion and the
// H*/zeta-star dual pair.
SuiteResult suite_exact_identities(int max_weight, const std::vector<long>& levels);

// Each exact-finite-N transport rule on seeded pseudo-random valid instances,
// both sides evaluated exactly at each level.  Instance indices are drawn
// with weight <= weight_budget; rules whose guards are unsatisfiable within
// the budget contribute zero cases.
SuiteResult suite_transport_random(int instances_per_rule,
                                   const std::vector<long>& levels,
                                   std::uint32_t seed, int weight_budget);

// The three congruence families at every prime in `primes`: the signed
// concatenation congruence for all pairs with wt(k)+wt(l) <= max_weight, its
// start-term boundary form on the same grid, and the cyclic-class congruence
// for every class with wt <= max_weight.
SuiteResult suite_modp(int max_weight, const std::vector<long>& primes);

// Every family's traces replay exactly, and the two index-transport
// derivations take exactly wt(k) steps.  Pair grids are bounded by
// product_bound, dual/Hoffman-dual grids by single_bound, cyclic and
// relation derivations by class_bound.
SuiteResult suite_replay(int product_bound, int single_bound, int class_bound);

// Empty-index conventions: ζ_N(∅) = ζ*_N(∅) = 1, appends on ∅ give (1),
// raises and lowers fix ∅, products with an empty factor are trivial.
SuiteResult suite_degenerate();

SweepReport run_sweep(const SweepOptions& opt);

// Fixed-width table with one row per suite and a total row.
std::string format_sweep_report(const SweepReport& report);

} // namespace mzv
