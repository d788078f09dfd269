// Acceptance harness: one numbered criterion per run (or all of them),
// one PASS/FAIL line each, exit 0 iff everything requested passed.  Bounds
// and tolerances are pinned here, not taken from the command line.

#include <mzvkit/derive.hpp>
#include <mzvkit/modp.hpp>
#include <mzvkit/numeric.hpp>
#include <mzvkit/sweep.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace mzv;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string suite_detail(const SuiteResult& s) {
    std::ostringstream os;
    os << s.cases << " cases, " << s.failures << " failures";
    if (!s.failure_notes.empty()) os << "; first: " << s.failure_notes.front();
    return os.str();
}

Outcome from_suite(const SuiteResult& s, double elapsed, double budget_s) {
    Outcome o;
    o.pass = s.passed() && elapsed < budget_s;
    std::ostringstream os;
    os << suite_detail(s) << ", " << std::fixed;
    os.precision(1);
    os << elapsed << "s";
    if (elapsed >= budget_s) os << " (over the " << budget_s << "s budget)";
    o.detail = os.str();
    return o;
}

bool sequence_is(const Trace& t, const std::vector<RuleId>& rules) {
    if (t.steps.size() != rules.size()) return false;
    for (std::size_t i = 0; i < rules.size(); ++i)
        if (t.steps[i].rule != rules[i]) return false;
    return true;
}

// 1. Product expansion from the rewrite driver matches the word-interleaving
// oracle for every pair with wt(k)+wt(l) <= 6, within a minute.
Outcome criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    return from_suite(suite_shuffle_oracle(6), seconds_since(t0), 60.0);
}

// 2. Same for the harmonic driver, plus the two worked product examples.
Outcome criterion_2() {
    const auto t0 = std::chrono::steady_clock::now();
    const SuiteResult s = suite_harmonic_oracle(6);
    Outcome o = from_suite(s, seconds_since(t0), 60.0);

    IndexSum first_expected;
    first_expected.add(Index{1, 2}, 1);
    first_expected.add(Index{2, 1}, 1);
    first_expected.add(Index{3}, 1);
    const auto [first, first_trace] = derive_harmonic(Index{1}, Index{2});
    const bool first_ok =
        first == first_expected &&
        sequence_is(first_trace,
                    {RuleId::HarMain, RuleId::HarSym, RuleId::HarUnload});

    IndexSum second_expected;
    second_expected.add(Index{1, 1, 1}, 3);
    second_expected.add(Index{1, 2}, 1);
    second_expected.add(Index{2, 1}, 1);
    const auto [second, second_trace] = derive_harmonic(Index{1, 1}, Index{1});
    const bool second_ok =
        second == second_expected &&
        sequence_is(second_trace, {RuleId::HarMain, RuleId::HarMain,
                                   RuleId::HarSym, RuleId::HarSym,
                                   RuleId::HarSym});

    o.pass = o.pass && first_ok && second_ok;
    o.detail += first_ok ? "; (1)*(2) verbatim" : "; (1)*(2) MISMATCH";
    o.detail += second_ok ? ", (1,1)*(1) verbatim" : ", (1,1)*(1) MISMATCH";
    return o;
}

// 3. Duality transport matches the arrow-word oracle up to weight 9 and the
// worked (3,2) derivation takes its five recorded steps.
Outcome criterion_3() {
    const auto t0 = std::chrono::steady_clock::now();
    const SuiteResult s = suite_dual_oracle(9);
    Outcome o = from_suite(s, seconds_since(t0), 60.0);

    const auto [d, trace] = derive_dual(Index{3, 2});
    const bool example_ok =
        d == Index{2, 1, 2} &&
        sequence_is(trace, {RuleId::DUp, RuleId::DArrow, RuleId::DUp,
                            RuleId::DUp, RuleId::DArrow});
    o.pass = o.pass && example_ok;
    o.detail += example_ok ? "; (3,2)<->(2,1,2) in 5 steps"
                           : "; (3,2) example MISMATCH";
    return o;
}

// 4. Hoffman-dual transport matches the separator-complement oracle up to
// weight 9, including the worked (3,2) pair.
Outcome criterion_4() {
    const auto t0 = std::chrono::steady_clock::now();
    const SuiteResult s = suite_hoffman_dual_oracle(9);
    Outcome o = from_suite(s, seconds_since(t0), 60.0);

    const bool example_ok = derive_hoffman_dual(Index{3, 2}).first == Index{1, 1, 2, 1};
    o.pass = o.pass && example_ok;
    o.detail += example_ok ? "; (3,2)<->(1,1,2,1)" : "; (3,2) example MISMATCH";
    return o;
}

// 5. The two exact-at-every-N identity families, exhaustively to weight 5 at
// four truncation levels, exact rational equality, within two minutes.
Outcome criterion_5() {
    const auto t0 = std::chrono::steady_clock::now();
    return from_suite(suite_exact_identities(5, {1, 2, 7, 20}),
                      seconds_since(t0), 120.0);
}

// 6. The nine exact transport rules on 200 seeded random valid instances
// each, both sides evaluated exactly at N in {5, 11, 23}.
Outcome criterion_6() {
    const auto t0 = std::chrono::steady_clock::now();
    return from_suite(suite_transport_random(200, {5, 11, 23}, 20260817u, 7),
                      seconds_since(t0), 120.0);
}

// 7. The congruence suites: product, boundary and cyclic congruences for all
// inputs up to weight 5 at p in {5, 7, 11, 13}, zero failures, within two
// minutes.
Outcome criterion_7() {
    const auto t0 = std::chrono::steady_clock::now();
    return from_suite(suite_modp(5, {5, 7, 11, 13}), seconds_since(t0), 120.0);
}

// 8. Limit-only identities at tolerance.  The two worked weight-6 identities
// must verify at cap 1000 with tolerance 1/50 and a cap-doubling diagnostic
// strictly below the tolerance; the duality identities up to weight 4 are
// checked at zero tails with cap 400 and tolerance 1/100.
Outcome criterion_8() {
    Outcome o;
    o.pass = true;
    std::ostringstream os;

    const Rational tol_a(1, 50);
    struct Worked {
        const char* label;
        Identity id;
    };
    const Worked worked[] = {
        {"cyclic (2,1,3)", derive_cyclic_identity(Index{2, 1, 3}).first},
        {"relation (2,1,3)", derive_hoffman_relation(Index{2, 1, 3}).first},
    };
    for (const Worked& w : worked) {
        EvalParams pr;
        pr.cap = 1000;
        const EvalReport rep = verify_identity_numeric(w.id, pr, tol_a);
        const bool ok = rep.verdict == Verdict::WithinTolerance &&
                        rep.convergence && rep.convergence->doubled_diff < tol_a;
        o.pass = o.pass && ok;
        os << w.label << " " << (ok ? "ok" : "FAIL") << " (diff "
           << rational_to_decimal(rep.diff);
        if (rep.convergence)
            os << ", doubled " << rational_to_decimal(rep.convergence->doubled_diff);
        os << "); ";
    }

    const Rational tol_b(1, 100);
    long checked = 0, outside = 0;
    Rational worst = 0;
    std::string worst_at;
    for (const Index& k : enumerate_admissible(4)) {
        const Identity id = dual_identity(k, derive_dual(k).first);
        EvalParams pr;
        pr.cap = 400;
        pr.tail_n = 0;
        pr.tail_m = 0;
        const EvalReport rep = verify_identity_numeric(id, pr, tol_b);
        ++checked;
        if (rep.verdict != Verdict::WithinTolerance) {
            ++outside;
            if (rep.diff > worst) {
                worst = rep.diff;
                worst_at = format_index(k);
            }
        }
    }
    o.pass = o.pass && outside == 0;
    os << "duality at cap 400: " << (checked - outside) << "/" << checked
       << " within 1/100";
    if (outside > 0)
        os << " (worst |diff| " << rational_to_decimal(worst) << " at " << worst_at << ")";
    o.detail = os.str();
    return o;
}

// 9. Every emitted trace replays exactly, and the index-transport
// derivations take exactly wt(k) steps.
Outcome criterion_9() {
    const auto t0 = std::chrono::steady_clock::now();
    return from_suite(suite_replay(5, 9, 5), seconds_since(t0), 120.0);
}

// 10. Empty-index conventions hold everywhere and a weight-0 sweep passes
// vacuously.
Outcome criterion_10() {
    const auto t0 = std::chrono::steady_clock::now();
    const SuiteResult degenerate = suite_degenerate();

    SweepOptions opt;
    opt.max_weight = 0;
    const SweepReport sweep = run_sweep(opt);

    Outcome o;
    o.pass = degenerate.passed() && sweep.all_passed();
    std::ostringstream os;
    os << suite_detail(degenerate) << "; weight-0 sweep "
       << (sweep.all_passed() ? "passed" : "FAILED") << " ("
       << sweep.total_cases() << " cases), " << std::fixed;
    os.precision(1);
    os << seconds_since(t0) << "s";
    o.detail = os.str();
    return o;
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria() {
    static const std::vector<std::pair<std::string, std::function<Outcome()>>> table = {
        {"shuffle driver = oracle, wt sum <= 6", criterion_1},
        {"harmonic driver = oracle + worked examples", criterion_2},
        {"duality = oracle, wt <= 9 + worked trace", criterion_3},
        {"Hoffman dual = oracle, wt <= 9 + worked pair", criterion_4},
        {"exact identities, wt <= 5, N in {1,2,7,20}", criterion_5},
        {"exact transport rules, 200 random instances", criterion_6},
        {"congruence suites, wt <= 5, p in {5,7,11,13}", criterion_7},
        {"limit identities at tolerance", criterion_8},
        {"trace replay + step counts", criterion_9},
        {"empty-index conventions + weight-0 sweep", criterion_10},
    };
    return table;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    if (argc <= 1) {
        for (std::size_t i = 1; i <= criteria().size(); ++i)
            selected.push_back(static_cast<int>(i));
    } else {
        for (int i = 1; i < argc; ++i) {
            const int n = std::atoi(argv[i]);
            if (n < 1 || n > static_cast<int>(criteria().size())) {
                std::fprintf(stderr, "unknown criterion \"%s\" (1..%zu)\n", argv[i],
                             criteria().size());
                return 2;
            }
            selected.push_back(n);
        }
    }

    bool all_pass = true;
    for (int n : selected) {
        const auto& [label, fn] = criteria()[static_cast<std::size_t>(n - 1)];
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("criterion %d: %s — %s (%s)\n", n, o.pass ? "PASS" : "FAIL",
                    label.c_str(), o.detail.c_str());
        std::fflush(stdout);
        all_pass = all_pass && o.pass;
    }
    return all_pass ? 0 : 1;
}
