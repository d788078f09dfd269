#include "mzvkit/sweep.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include "mzvkit/derive.hpp"
#include "mzvkit/errors.hpp"
#include "mzvkit/modp.hpp"
#include "mzvkit/numeric.hpp"
#include "mzvkit/oracles.hpp"

namespace mzv {

namespace {

constexpr std::size_t kMaxNotes = 8;

SuiteResult make_suite(std::string name) {
    SuiteResult r;
    r.name = std::move(name);
    return r;
}

EvalParams at_level(long N) {
    EvalParams p;
    p.N = N;
    return p;
}

void fail(SuiteResult& r, const std::string& note) {
    ++r.failures;
    if (r.failure_notes.size() < kMaxNotes) r.failure_notes.push_back(note);
}

void check(SuiteResult& r, bool ok, const std::string& what) {
    ++r.cases;
    if (!ok) fail(r, what);
}

std::string paren(const Index& k) {
    return k.is_empty() ? "∅" : "(" + format_index(k) + ")";
}

std::string pair_label(const Index& k, const Index& l) {
    return paren(k) + " x " + paren(l);
}

// Compositions of weight w in binary-split order: bit i of the mask decides
// whether a part boundary sits between unit i and unit i+1.
std::vector<Index> compositions_of(int w) {
    std::vector<Index> out;
    if (w < 1) return out;
    for (unsigned long mask = 0; mask < (1ul << (w - 1)); ++mask) {
        std::vector<int> parts;
        int run = 1;
        for (int i = 0; i < w - 1; ++i) {
            if (mask & (1ul << i)) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        out.push_back(Index(std::move(parts)));
    }
    return out;
}

bool is_class_representative(const Index& k) {
    return k == *cyclic_class(k).begin();
}

// Replays a trace, recording a failure note instead of throwing on mismatch.
void check_replay(SuiteResult& r, const Trace& t, const std::string& label) {
    ++r.cases;
    try {
        replay_trace(t);
    } catch (const replay_error& e) {
        fail(r, label + ": " + e.what());
    }
}

} // namespace

std::vector<Index> enumerate_indices(int max_weight, bool include_empty) {
    std::vector<Index> out;
    if (include_empty) out.push_back(Index{});
    for (int w = 1; w <= max_weight; ++w)
        for (Index& k : compositions_of(w)) out.push_back(std::move(k));
    return out;
}

std::vector<Index> enumerate_admissible(int max_weight) {
    std::vector<Index> out;
    for (int w = 2; w <= max_weight; ++w)
        for (Index& k : compositions_of(w))
            if (k.admissible()) out.push_back(std::move(k));
    return out;
}

SuiteResult suite_shuffle_oracle(int max_weight_sum) {
    SuiteResult res = make_suite("shuffle-oracle");
    std::vector<Index> grid = enumerate_indices(max_weight_sum, true);
    for (const Index& k : grid)
        for (const Index& l : grid) {
            if (k.weight() + l.weight() > max_weight_sum) continue;
            ++res.cases;
            if (derive_shuffle(k, l).first != shuffle_oracle(k, l))
                fail(res, pair_label(k, l) + ": driver expansion differs from the oracle");
        }
    return res;
}

SuiteResult suite_harmonic_oracle(int max_weight_sum) {
    SuiteResult res = make_suite("harmonic-oracle");
    std::vector<Index> grid = enumerate_indices(max_weight_sum, true);
    for (const Index& k : grid)
        for (const Index& l : grid) {
            if (k.weight() + l.weight() > max_weight_sum) continue;
            ++res.cases;
            if (derive_harmonic(k, l).first != harmonic_oracle(k, l))
                fail(res, pair_label(k, l) + ": driver expansion differs from the oracle");
        }
    return res;
}

SuiteResult suite_dual_oracle(int max_weight) {
    SuiteResult res = make_suite("dual-oracle");
    for (const Index& k : enumerate_admissible(max_weight)) {
        Index d = derive_dual(k).first;
        check(res, d == dual_oracle(k),
              paren(k) + ": derived dual differs from the oracle");
        check(res, derive_dual(d).first == k,
              paren(k) + ": dual of the dual is not the original");
    }
    return res;
}

SuiteResult suite_hoffman_dual_oracle(int max_weight) {
    SuiteResult res = make_suite("hdual-oracle");
    for (const Index& k : enumerate_indices(max_weight, false)) {
        Index d = derive_hoffman_dual(k).first;
        check(res, d == hoffman_dual_oracle(k),
              paren(k) + ": derived Hoffman dual differs from the oracle");
        check(res, derive_hoffman_dual(d).first == k,
              paren(k) + ": Hoffman dual of the Hoffman dual is not the original");
    }
    return res;
}

SuiteResult suite_exact_identities(int max_weight, const std::vector<long>& levels) {
    SuiteResult res = make_suite("exact-identities");
    std::vector<Index> grid = enumerate_indices(max_weight, true);
    for (const Index& k : grid)
        for (const Index& l : grid) {
            if (k.weight() + l.weight() > max_weight) continue;
            Identity id = harmonic_identity(k, l, derive_harmonic(k, l).first);
            for (long N : levels) {
                EvalReport rep = verify_identity_numeric(id, at_level(N));
                check(res, rep.verdict == Verdict::ExactPass,
                      "product identity " + pair_label(k, l) + " at N=" +
                          std::to_string(N) + ": diff " + rational_to_string(rep.diff));
            }
        }
    for (const Index& k : enumerate_indices(max_weight, false)) {
        Identity id = hoffman_dual_identity(k, derive_hoffman_dual(k).first);
        for (long N : levels) {
            EvalReport rep = verify_identity_numeric(id, at_level(N));
            check(res, rep.verdict == Verdict::ExactPass,
                  "H*/ζ* identity " + paren(k) + " at N=" + std::to_string(N) +
                      ": diff " + rational_to_string(rep.diff));
        }
    }
    return res;
}

namespace {

// Draws structurally conforming instances for one exact transport rule.  Each
// slot is built so the rule's guard holds by construction; the draw is
// rejected only when a slot exceeds the weight budget.
class InstanceDrawer {
  public:
    InstanceDrawer(std::uint32_t seed, int budget) : rng_(seed), budget_(budget) {}

    std::optional<Term> draw(RuleId r) {
        for (int attempt = 0; attempt < 200; ++attempt) {
            std::optional<Term> t = build(r);
            if (t && guard_holds(*t, r)) return t;
        }
        return std::nullopt;
    }

  private:
    int entry(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng_);
    }

    // A random index with `depth` entries in [1,4]; nullopt over budget.
    std::optional<Index> chain(int dmin, int dmax) {
        int d = entry(dmin, dmax);
        std::vector<int> v;
        v.reserve(d);
        int w = 0;
        for (int i = 0; i < d; ++i) {
            v.push_back(entry(1, 4));
            w += v.back();
        }
        if (w > budget_) return std::nullopt;
        return Index(std::move(v));
    }

    std::optional<Index> fit(Index k) {
        if (k.weight() > budget_) return std::nullopt;
        return k;
    }

    std::optional<Term> build(RuleId r) {
        switch (r) {
        case RuleId::ShSym: {
            auto k = chain(0, 3), l = chain(0, 3), h = chain(1, 3);
            if (!k || !l || !h) return std::nullopt;
            // Both outer chains empty forces the junction variable to 0, which
            // converges only when the third slot starts with 1.
            if (k->is_empty() && l->is_empty()) {
                auto rest = chain(0, 2);
                if (!rest) return std::nullopt;
                h = fit(left_prepend(*rest));
                if (!h) return std::nullopt;
            }
            return Term::sh(*k, *l, *h);
        }
        case RuleId::ShMain: {
            auto k = chain(0, 2), l = chain(0, 2), h = chain(1, 3);
            if (!k || !l || !h) return std::nullopt;
            auto ka = fit(k->concat(Index{entry(2, 4)}));
            auto la = fit(l->concat(Index{entry(2, 4)}));
            if (!ka || !la) return std::nullopt;
            return Term::sh(*ka, *la, *h);
        }
        case RuleId::ShUnload: {
            auto k = chain(0, 2), l = chain(0, 3), h = chain(0, 2);
            if (!k || !l || !h) return std::nullopt;
            auto ka = fit(right_append(*k));
            // The matched pattern moves a unit onto the third slot's first
            // entry, so that entry must start at 2 or more.
            auto ha = fit(Index{entry(2, 4)}.concat(*h));
            if (!ka || !ha) return std::nullopt;
            return Term::sh(*ka, *l, *ha);
        }
        case RuleId::HarSym: {
            auto k = chain(1, 3), l = chain(1, 3), h = chain(0, 3);
            if (!k || !l || !h) return std::nullopt;
            return Term::har(*k, *l, *h);
        }
        case RuleId::HarMain: {
            auto k = chain(1, 2), l = chain(1, 2), h = chain(0, 3);
            if (!k || !l || !h) return std::nullopt;
            auto ka = fit(left_prepend(*k)), la = fit(left_prepend(*l));
            if (!ka || !la) return std::nullopt;
            return Term::har(*ka, *la, *h);
        }
        case RuleId::HarUnload: {
            auto k = chain(0, 2), l = chain(1, 3), h = chain(0, 3);
            if (!k || !l || !h) return std::nullopt;
            auto ka = fit(Index{entry(2, 4)}.concat(*k));
            if (!ka) return std::nullopt;
            return Term::har(*ka, *l, *h);
        }
        case RuleId::HdUp: {
            auto k = chain(0, 2), l = chain(0, 3);
            if (!k || !l) return std::nullopt;
            auto ka = fit(k->concat(Index{entry(2, 4)}));
            if (!ka) return std::nullopt;
            return Term::hd(*ka, *l);
        }
        case RuleId::HdArrow: {
            auto k = chain(1, 2), l = chain(1, 3);
            if (!k || !l) return std::nullopt;
            auto ka = fit(right_append(*k));
            if (!ka) return std::nullopt;
            return Term::hd(*ka, *l);
        }
        case RuleId::CsUp: {
            auto k = chain(1, 3);
            if (!k) return std::nullopt;
            auto ka = fit(k->concat(Index{entry(2, 4)}));
            if (!ka) return std::nullopt;
            return Term::o(*ka);
        }
        default:
            throw invariant_violation("no instance generator for rule " + rule_name(r));
        }
    }

    std::mt19937 rng_;
    int budget_;
};

} // namespace

SuiteResult suite_transport_random(int instances_per_rule,
                                   const std::vector<long>& levels,
                                   std::uint32_t seed, int weight_budget) {
    SuiteResult res = make_suite("transport-random");
    static constexpr RuleId kExactRules[] = {
        RuleId::ShSym,   RuleId::ShMain,    RuleId::ShUnload,
        RuleId::HarSym,  RuleId::HarMain,   RuleId::HarUnload,
        RuleId::HdUp,    RuleId::HdArrow,   RuleId::CsUp,
    };
    InstanceDrawer drawer(seed, weight_budget);
    for (RuleId r : kExactRules) {
        for (int i = 0; i < instances_per_rule; ++i) {
            std::optional<Term> t = drawer.draw(r);
            // Unsatisfiable within the budget: the rest of this rule's quota
            // would fail the same way, so it contributes no cases.
            if (!t) break;
            for (long N : levels) {
                EvalReport rep = check_transport_numeric(r, *t, at_level(N));
                check(res, rep.verdict == Verdict::ExactPass,
                      rule_name(r) + " on " + format_term(*t) + " at N=" +
                          std::to_string(N) + ": diff " + rational_to_string(rep.diff));
            }
        }
    }
    return res;
}

SuiteResult suite_modp(int max_weight, const std::vector<long>& primes) {
    SuiteResult res = make_suite("modp");
    std::vector<Index> grid = enumerate_indices(max_weight, true);
    for (long p : primes) {
        for (const Index& k : grid)
            for (const Index& l : grid) {
                if (k.weight() + l.weight() > max_weight) continue;
                CongruenceReport rep = verify_shuffle_mod_p(k, l, p);
                check(res, rep.congruent,
                      "concatenation congruence fails: " + rep.instance);
                rep = verify_boundary_mod_p(k, l, p);
                check(res, rep.congruent, "boundary congruence fails: " + rep.instance);
            }
        for (const Index& k : enumerate_indices(max_weight, false)) {
            if (!is_class_representative(k)) continue;
            CongruenceReport rep = verify_cyclic_mod_p(k, p);
            check(res, rep.congruent, "cyclic congruence fails: " + rep.instance);
        }
    }
    return res;
}

SuiteResult suite_replay(int product_bound, int single_bound, int class_bound) {
    SuiteResult res = make_suite("replay");
    std::vector<Index> grid = enumerate_indices(product_bound, true);
    for (const Index& k : grid)
        for (const Index& l : grid) {
            if (k.weight() + l.weight() > product_bound) continue;
            check_replay(res, derive_shuffle(k, l).second,
                         "shuffle " + pair_label(k, l));
            check_replay(res, derive_harmonic(k, l).second,
                         "harmonic " + pair_label(k, l));
        }
    for (const Index& k : enumerate_admissible(single_bound)) {
        Trace t = derive_dual(k).second;
        check_replay(res, t, "dual " + paren(k));
        check(res, t.steps.size() == static_cast<std::size_t>(k.weight()),
              "dual " + paren(k) + ": step count differs from the weight");
    }
    for (const Index& k : enumerate_indices(single_bound, false)) {
        Trace t = derive_hoffman_dual(k).second;
        check_replay(res, t, "hdual " + paren(k));
        check(res, t.steps.size() == static_cast<std::size_t>(k.weight()),
              "hdual " + paren(k) + ": step count differs from the weight");
    }
    for (const Index& k : enumerate_admissible(class_bound)) {
        if (!is_class_representative(k)) continue;
        check_replay(res, derive_cyclic_identity(k).second, "cyclic " + paren(k));
        check_replay(res, derive_hoffman_relation(k).second, "relation " + paren(k));
    }
    for (const Index& k : enumerate_indices(class_bound, false)) {
        if (!is_class_representative(k)) continue;
        check_replay(res, derive_cyclic_identity_mod_p(k).second,
                     "cyclic-modp " + paren(k));
    }
    return res;
}

SuiteResult suite_degenerate() {
    SuiteResult res = make_suite("degenerate");
    const Index empty{};
    for (long N : {1L, 2L, 20L}) {
        check(res, zeta_trunc(empty, N) == 1,
              "ζ_" + std::to_string(N) + "(∅) is not 1");
        check(res, zeta_star_trunc(empty, N) == 1,
              "ζ*_" + std::to_string(N) + "(∅) is not 1");
    }
    check(res, right_append(empty) == Index{1}, "∅ with a 1 appended is not (1)");
    check(res, left_prepend(empty) == Index{1}, "∅ with a 1 prepended is not (1)");
    check(res, up_last(empty) == empty, "raise-last does not fix ∅");
    check(res, up_first(empty) == empty, "raise-first does not fix ∅");
    check(res, down_last(empty) == empty, "lower-last does not fix ∅");
    check(res, down_first(empty) == empty, "lower-first does not fix ∅");
    check(res, empty.reversed() == empty, "reversal does not fix ∅");

    check(res, shuffle_oracle(empty, empty) == IndexSum::single(empty),
          "∅ ш ∅ is not ∅");
    check(res, derive_shuffle(empty, empty).first == IndexSum::single(empty),
          "derived ∅ ш ∅ is not ∅");
    const Index two{2};
    check(res, shuffle_oracle(empty, two) == IndexSum::single(two),
          "∅ ш (2) is not (2)");
    check(res, derive_shuffle(empty, two).first == IndexSum::single(two),
          "derived ∅ ш (2) is not (2)");
    check(res, shuffle_oracle(two, empty) == IndexSum::single(two),
          "(2) ш ∅ is not (2)");
    check(res, harmonic_oracle(empty, two) == IndexSum::single(two),
          "∅ * (2) is not (2)");
    check(res, derive_harmonic(empty, two).first == IndexSum::single(two),
          "derived ∅ * (2) is not (2)");
    check(res, harmonic_oracle(two, empty) == IndexSum::single(two),
          "(2) * ∅ is not (2)");

    Identity trivial = harmonic_identity(empty, empty, derive_harmonic(empty, empty).first);
    check(res, verify_identity_numeric(trivial, at_level(3)).verdict ==
                   Verdict::ExactPass,
          "the empty product identity 1 = 1 fails");
    return res;
}

namespace {

using SuiteRunner = std::function<SuiteResult(const SweepOptions&)>;

const std::vector<std::pair<std::string, SuiteRunner>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteRunner>> table = {
        {"shuffle-oracle",
         [](const SweepOptions& o) { return suite_shuffle_oracle(o.max_weight); }},
        {"harmonic-oracle",
         [](const SweepOptions& o) { return suite_harmonic_oracle(o.max_weight); }},
        {"dual-oracle",
         [](const SweepOptions& o) { return suite_dual_oracle(o.max_weight); }},
        {"hdual-oracle",
         [](const SweepOptions& o) { return suite_hoffman_dual_oracle(o.max_weight); }},
        {"exact-identities",
         [](const SweepOptions& o) {
             return suite_exact_identities(o.max_weight, o.identity_levels);
         }},
        {"transport-random",
         [](const SweepOptions& o) {
             return suite_transport_random(o.transport_instances, o.transport_levels,
                                           o.seed, o.max_weight);
         }},
        {"modp", [](const SweepOptions& o) { return suite_modp(o.max_weight, o.primes); }},
        {"replay",
         [](const SweepOptions& o) {
             return suite_replay(o.max_weight, o.max_weight, o.max_weight);
         }},
        {"degenerate", [](const SweepOptions&) { return suite_degenerate(); }},
    };
    return table;
}

} // namespace

std::vector<std::string> sweep_suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : suite_table()) names.push_back(name);
    return names;
}

bool SweepReport::all_passed() const {
    return std::all_of(suites.begin(), suites.end(),
                       [](const SuiteResult& s) { return s.passed(); });
}

long SweepReport::total_cases() const {
    return std::accumulate(suites.begin(), suites.end(), 0L,
                           [](long n, const SuiteResult& s) { return n + s.cases; });
}

long SweepReport::total_failures() const {
    return std::accumulate(suites.begin(), suites.end(), 0L,
                           [](long n, const SuiteResult& s) { return n + s.failures; });
}

SweepReport run_sweep(const SweepOptions& opt) {
    for (const std::string& name : opt.suites) {
        bool known = std::any_of(suite_table().begin(), suite_table().end(),
                                 [&](const auto& row) { return row.first == name; });
        if (!known) throw parse_error("unknown sweep suite \"" + name + "\"");
    }
    SweepReport report;
    for (const auto& [name, fn] : suite_table()) {
        if (!opt.suites.empty() &&
            std::find(opt.suites.begin(), opt.suites.end(), name) == opt.suites.end())
            continue;
        report.suites.push_back(fn(opt));
    }
    return report;
}

std::string format_sweep_report(const SweepReport& report) {
    std::ostringstream os;
    os << std::left << std::setw(20) << "suite" << std::right << std::setw(8)
       << "cases" << std::setw(10) << "failures" << "  status\n";
    for (const SuiteResult& s : report.suites) {
        os << std::left << std::setw(20) << s.name << std::right << std::setw(8)
           << s.cases << std::setw(10) << s.failures << "  "
           << (s.passed() ? "pass" : "FAIL") << "\n";
        for (const std::string& note : s.failure_notes) os << "    " << note << "\n";
        if (static_cast<std::size_t>(s.failures) > s.failure_notes.size() &&
            !s.failure_notes.empty())
            os << "    ... and " << (s.failures - static_cast<long>(s.failure_notes.size()))
               << " more\n";
    }
    os << std::left << std::setw(20) << "total" << std::right << std::setw(8)
       << report.total_cases() << std::setw(10) << report.total_failures() << "  "
       << (report.all_passed() ? "pass" : "FAIL") << "\n";
    return os.str();
}

} // namespace mzv
