// mzv — derive, verify, and sweep connected-sum identities between multiple
// zeta values.
//
// Exit codes: 0 verified/success, 1 verification failure, 2 usage or parse
// error, 3 internal invariant violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <mzvkit/derive.hpp>
#include <mzvkit/errors.hpp>
#include <mzvkit/identity.hpp>
#include <mzvkit/json_io.hpp>
#include <mzvkit/modp.hpp>
#include <mzvkit/numeric.hpp>
#include <mzvkit/oracles.hpp>
#include <mzvkit/sweep.hpp>

using namespace mzv;

namespace {

std::string paren(const Index& k) {
    return k.is_empty() ? "∅" : "(" + format_index(k) + ")";
}

std::string fmt_sum(const IndexSum& s) {
    return format_formal_sum(s, [](const Index& k) { return paren(k); });
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string decorate(const Rational& r) {
    return rational_to_string(r) + " ≈ " + rational_to_decimal(r);
}

void print_eval_report(const EvalReport& rep) {
    std::cout << "lhs     = " << decorate(rep.lhs) << "\n";
    std::cout << "rhs     = " << decorate(rep.rhs) << "\n";
    std::cout << "diff    = " << decorate(rep.diff) << "\n";
    if (rep.convergence)
        std::cout << "doubled = " << decorate(rep.convergence->doubled_diff)
                  << "  (cap " << rep.convergence->cap << " → "
                  << 2 * rep.convergence->cap << ")\n";
    std::cout << "verdict: " << verdict_name(rep.verdict) << "\n";
}

void print_congruence_report(const CongruenceReport& rep) {
    std::cout << "instance: " << rep.instance << "\n";
    std::cout << "lhs ≡ " << rep.lhs << "   rhs ≡ " << rep.rhs << "   (mod "
              << rep.p << ")\n";
    std::cout << "verdict: " << (rep.congruent ? "congruent" : "not-congruent")
              << "\n";
}

// ---- derive ----------------------------------------------------------------

struct DeriveOpts {
    std::string family;
    std::string k_text;
    std::string l_text;
    bool json = false;
};

int run_derive(const DeriveOpts& o) {
    const Family fam = family_from_name(o.family);
    const Index k = parse_index(o.k_text);
    const Index l = parse_index(o.l_text);
    TraceDocument doc;
    std::string summary;
    switch (fam) {
        case Family::Shuffle: {
            auto [sum, tr] = derive_shuffle(k, l);
            doc = TraceDocument{std::move(tr), shuffle_identity(k, l, sum)};
            summary = paren(k) + " ш " + paren(l) + " = " + fmt_sum(sum);
            break;
        }
        case Family::Harmonic: {
            auto [sum, tr] = derive_harmonic(k, l);
            doc = TraceDocument{std::move(tr), harmonic_identity(k, l, sum)};
            summary = paren(k) + " * " + paren(l) + " = " + fmt_sum(sum);
            break;
        }
        case Family::Dual: {
            auto [d, tr] = derive_dual(k);
            doc = TraceDocument{std::move(tr), dual_identity(k, d)};
            summary = "dual: " + paren(k) + " ↦ " + paren(d);
            break;
        }
        case Family::HDual: {
            auto [d, tr] = derive_hoffman_dual(k);
            doc = TraceDocument{std::move(tr), hoffman_dual_identity(k, d)};
            summary = "Hoffman dual: " + paren(k) + " ↦ " + paren(d);
            break;
        }
        case Family::Cyclic: {
            auto [id, tr] = derive_cyclic_identity(k);
            doc = TraceDocument{std::move(tr), std::move(id)};
            break;
        }
        case Family::CyclicModP: {
            auto [id, tr] = derive_cyclic_identity_mod_p(k);
            doc = TraceDocument{std::move(tr), std::move(id)};
            break;
        }
        case Family::Hoffman: {
            auto [id, tr] = derive_hoffman_relation(k);
            doc = TraceDocument{std::move(tr), std::move(id)};
            break;
        }
    }
    if (o.json) {
        std::cout << trace_document_to_json(doc, true) << "\n";
    } else {
        std::cout << format_trace(doc.trace);
        if (!summary.empty()) std::cout << summary << "\n";
        if (doc.identity) std::cout << format_identity(*doc.identity) << "\n";
    }
    return 0;
}

// ---- product / dual / hdual ------------------------------------------------

struct ProductOpts {
    std::string family;
    std::string k_text;
    std::string l_text;
    bool json = false;
};

int run_product(const ProductOpts& o) {
    const Index k = parse_index(o.k_text);
    const Index l = parse_index(o.l_text);
    IndexSum sum;
    std::string op;
    if (o.family == "shuffle") {
        sum = shuffle_oracle(k, l);
        op = " ш ";
    } else if (o.family == "harmonic") {
        sum = harmonic_oracle(k, l);
        op = " * ";
    } else {
        throw parse_error("product family must be \"shuffle\" or \"harmonic\"");
    }
    if (o.json) std::cout << index_sum_to_json(sum) << "\n";
    else std::cout << paren(k) << op << paren(l) << " = " << fmt_sum(sum) << "\n";
    return 0;
}

int run_transport(const std::string& k_text, bool json, bool hoffman) {
    const Index k = parse_index(k_text);
    const Index d = hoffman ? hoffman_dual_oracle(k) : dual_oracle(k);
    if (json) std::cout << index_to_json(d) << "\n";
    else std::cout << format_index(d) << "\n";
    return 0;
}

// ---- verify ----------------------------------------------------------------

struct VerifyOpts {
    std::string family;
    std::string k_text;
    std::string l_text;
    std::string identity_file;
    long N = 20;
    long cap = 1000;
    std::string tol_text;
    long tail_n = 0;
    long tail_m = 0;
    bool json = false;

    Rational tolerance() const {
        if (!tol_text.empty()) return rational_from_string(tol_text);
        Rational t(10, cap);
        t.canonicalize();
        return t;
    }
};

Identity identity_for(const Family fam, const Index& k, const Index& l) {
    switch (fam) {
        case Family::Shuffle: {
            auto id = shuffle_identity(k, l, derive_shuffle(k, l).first);
            if (!id)
                throw domain_error(
                    "the shuffle limit identity needs each factor admissible or empty");
            return *id;
        }
        case Family::Harmonic:
            return harmonic_identity(k, l, derive_harmonic(k, l).first);
        case Family::Dual:
            return dual_identity(k, derive_dual(k).first);
        case Family::HDual:
            return hoffman_dual_identity(k, derive_hoffman_dual(k).first);
        case Family::Cyclic:
            return derive_cyclic_identity(k).first;
        case Family::Hoffman:
            return derive_hoffman_relation(k).first;
        case Family::CyclicModP:
            throw domain_error("congruence families are checked with verify-modp");
    }
    throw invariant_violation("unhandled family");
}

int run_verify(const VerifyOpts& o) {
    Identity id = o.identity_file.empty()
                      ? identity_for(family_from_name(o.family), parse_index(o.k_text),
                                     parse_index(o.l_text))
                      : identity_from_json(read_file(o.identity_file));
    assert_identity_homogeneous(id);
    if (id.validity == Validity::ModP)
        throw domain_error("congruence identities are checked with verify-modp");
    EvalParams pr;
    pr.N = o.N;
    pr.cap = o.cap;
    pr.tail_n = o.tail_n;
    pr.tail_m = o.tail_m;
    EvalReport rep = verify_identity_numeric(id, pr, o.tolerance());
    if (o.json) {
        std::cout << eval_report_to_json(rep, true) << "\n";
    } else {
        std::cout << format_identity(id) << "\n";
        print_eval_report(rep);
    }
    return rep.passed() ? 0 : 1;
}

// ---- verify-modp -----------------------------------------------------------

struct VerifyModPOpts {
    std::string family;
    std::string k_text;
    std::string l_text;
    std::string identity_file;
    long p = 13;
    bool json = false;
};

int run_verify_modp(const VerifyModPOpts& o) {
    CongruenceReport rep;
    if (!o.identity_file.empty()) {
        Identity id = identity_from_json(read_file(o.identity_file));
        assert_identity_homogeneous(id);
        rep = verify_identity_mod_p(id, o.p);
    } else if (o.family == "shuffle") {
        rep = verify_shuffle_mod_p(parse_index(o.k_text), parse_index(o.l_text), o.p);
    } else if (o.family == "boundary") {
        rep = verify_boundary_mod_p(parse_index(o.k_text), parse_index(o.l_text), o.p);
    } else if (o.family == "cyclic") {
        rep = verify_cyclic_mod_p(parse_index(o.k_text), o.p);
    } else {
        throw parse_error(
            "verify-modp family must be \"shuffle\", \"boundary\", or \"cyclic\"");
    }
    if (o.json) std::cout << congruence_report_to_json(rep, true) << "\n";
    else print_congruence_report(rep);
    return rep.congruent ? 0 : 1;
}

// ---- sweep -------------------------------------------------------------------

struct SweepOpts {
    SweepOptions options;
    int safety_bound = 7;
    bool json = false;
};

int run_sweep_cmd(const SweepOpts& o) {
    if (o.options.max_weight > o.safety_bound)
        throw parse_error("max weight " + std::to_string(o.options.max_weight) +
                          " exceeds the safety bound " + std::to_string(o.safety_bound) +
                          " (raise it with --max-weight-bound)");
    SweepReport report = run_sweep(o.options);
    if (o.json) std::cout << sweep_report_to_json(report, true) << "\n";
    else std::cout << format_sweep_report(report);
    return report.all_passed() ? 0 : 1;
}

// ---- replay ----------------------------------------------------------------

struct ReplayOpts {
    std::string trace_file;
    long N = 20;
    long cap = 1000;
    std::string tol_text;
    long p = 13;
    bool json = false;

    Rational tolerance() const {
        if (!tol_text.empty()) return rational_from_string(tol_text);
        Rational t(10, cap);
        t.canonicalize();
        return t;
    }
};

int run_replay(const ReplayOpts& o) {
    TraceDocument doc = trace_document_from_json(read_file(o.trace_file));
    if (doc.identity) assert_identity_homogeneous(*doc.identity);
    replay_trace(doc.trace); // throws replay_error (exit 1) on any mismatch
    std::optional<EvalReport> erep;
    std::optional<CongruenceReport> crep;
    int rc = 0;
    if (doc.identity) {
        if (doc.identity->validity == Validity::ModP) {
            crep = verify_identity_mod_p(*doc.identity, o.p);
            rc = crep->congruent ? 0 : 1;
        } else {
            EvalParams pr;
            pr.N = o.N;
            pr.cap = o.cap;
            erep = verify_identity_numeric(*doc.identity, pr, o.tolerance());
            rc = erep->passed() ? 0 : 1;
        }
    }
    if (o.json) {
        nlohmann::ordered_json out{
            {"steps", doc.trace.steps.size()},
            {"replay", "ok"},
        };
        if (erep) out["report"] = nlohmann::ordered_json::parse(eval_report_to_json(*erep));
        if (crep)
            out["report"] = nlohmann::ordered_json::parse(congruence_report_to_json(*crep));
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "replayed " << doc.trace.steps.size()
                  << " steps: result matches\n";
        if (!doc.identity) {
            std::cout << "no identity attached; structural replay only\n";
        } else {
            std::cout << format_identity(*doc.identity) << "\n";
            if (erep) print_eval_report(*erep);
            if (crep) print_congruence_report(*crep);
        }
    }
    return rc;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"connected-sum derivations and verification for multiple zeta values"};
    app.require_subcommand(1);

    DeriveOpts derive_o;
    CLI::App* derive = app.add_subcommand("derive", "run a derivation and print its trace");
    derive->add_option("--family", derive_o.family,
                       "shuffle|harmonic|dual|hdual|cyclic|cyclic-modp|hoffman")
        ->required();
    derive->add_option("--k", derive_o.k_text, "index, e.g. 3,2 (empty for ∅)")->required();
    derive->add_option("--l", derive_o.l_text, "second index for the product families");
    derive->add_flag("--json", derive_o.json, "emit the trace document as JSON");

    ProductOpts product_o;
    CLI::App* product =
        app.add_subcommand("product", "expand a product via the word-recursion oracles");
    product->add_option("--family", product_o.family, "shuffle|harmonic")->required();
    product->add_option("--k", product_o.k_text, "first factor")->required();
    product->add_option("--l", product_o.l_text, "second factor");
    product->add_flag("--json", product_o.json, "emit the expansion as JSON");

    std::string dual_k;
    bool dual_json = false;
    CLI::App* dual = app.add_subcommand("dual", "print the dual index");
    dual->add_option("--k", dual_k, "admissible index")->required();
    dual->add_flag("--json", dual_json, "emit as JSON");

    std::string hdual_k;
    bool hdual_json = false;
    CLI::App* hdual = app.add_subcommand("hdual", "print the Hoffman dual index");
    hdual->add_option("--k", hdual_k, "nonempty index")->required();
    hdual->add_flag("--json", hdual_json, "emit as JSON");

    VerifyOpts verify_o;
    CLI::App* verify =
        app.add_subcommand("verify", "verify an identity exactly or at tolerance");
    verify->add_option("--family", verify_o.family,
                       "shuffle|harmonic|dual|hdual|cyclic|hoffman");
    verify->add_option("--k", verify_o.k_text, "index");
    verify->add_option("--l", verify_o.l_text, "second index for the product families");
    verify->add_option("--identity-file", verify_o.identity_file,
                       "JSON identity or trace document to verify instead");
    verify->add_option("--N", verify_o.N, "truncation level for exact identities");
    verify->add_option("--cap", verify_o.cap, "partial-sum cap for limit identities");
    verify->add_option("--tol", verify_o.tol_text,
                       "tolerance for limit identities, e.g. 1/50 (default 10/cap)");
    verify->add_option("--tail-n", verify_o.tail_n, "first tail offset (dual identities)");
    verify->add_option("--tail-m", verify_o.tail_m, "second tail offset (dual identities)");
    verify->add_flag("--json", verify_o.json, "emit the report as JSON");

    VerifyModPOpts modp_o;
    CLI::App* vmodp =
        app.add_subcommand("verify-modp", "verify a congruence at N = p-1 mod p");
    vmodp->add_option("--family", modp_o.family, "shuffle|boundary|cyclic");
    vmodp->add_option("--k", modp_o.k_text, "index");
    vmodp->add_option("--l", modp_o.l_text, "second index for shuffle/boundary");
    vmodp->add_option("--identity-file", modp_o.identity_file,
                      "JSON congruence identity or trace document to verify instead");
    vmodp->add_option("--p", modp_o.p, "prime modulus");
    vmodp->add_flag("--json", modp_o.json, "emit the report as JSON");

    SweepOpts sweep_o;
    CLI::App* sweep = app.add_subcommand("sweep", "run the batch verification suites");
    sweep->add_option("--max-weight", sweep_o.options.max_weight,
                      "weight budget for the grids");
    sweep->add_option("--N", sweep_o.options.identity_levels,
                      "truncation levels for the exact identity suite")
        ->delimiter(',');
    sweep->add_option("--transport-N", sweep_o.options.transport_levels,
                      "truncation levels for the random transport suite")
        ->delimiter(',');
    sweep->add_option("--p", sweep_o.options.primes, "primes for the congruence suites")
        ->delimiter(',');
    sweep->add_option("--instances", sweep_o.options.transport_instances,
                      "random instances per transport rule");
    sweep->add_option("--seed", sweep_o.options.seed, "seed for the random suites");
    sweep->add_option("--suite", sweep_o.options.suites, "run only the named suites")
        ->delimiter(',');
    sweep->add_option("--max-weight-bound", sweep_o.safety_bound,
                      "safety bound on --max-weight");
    sweep->add_flag("--json", sweep_o.json, "emit the summary as JSON");

    ReplayOpts replay_o;
    CLI::App* replay =
        app.add_subcommand("replay", "re-execute a trace document and re-verify it");
    replay->add_option("--trace-file", replay_o.trace_file, "trace document JSON")
        ->required();
    replay->add_option("--N", replay_o.N, "truncation level for exact identities");
    replay->add_option("--cap", replay_o.cap, "partial-sum cap for limit identities");
    replay->add_option("--tol", replay_o.tol_text, "tolerance (default 10/cap)");
    replay->add_option("--p", replay_o.p, "prime modulus for congruence identities");
    replay->add_flag("--json", replay_o.json, "emit the result as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (derive->parsed()) return run_derive(derive_o);
        if (product->parsed()) return run_product(product_o);
        if (dual->parsed()) return run_transport(dual_k, dual_json, false);
        if (hdual->parsed()) return run_transport(hdual_k, hdual_json, true);
        if (verify->parsed()) {
            if (verify_o.identity_file.empty() && verify_o.family.empty())
                throw parse_error("verify needs --family (with --k) or --identity-file");
            return run_verify(verify_o);
        }
        if (vmodp->parsed()) {
            if (modp_o.identity_file.empty() && modp_o.family.empty())
                throw parse_error("verify-modp needs --family (with --k) or --identity-file");
            return run_verify_modp(modp_o);
        }
        if (sweep->parsed()) return run_sweep_cmd(sweep_o);
        if (replay->parsed()) return run_replay(replay_o);
    } catch (const invariant_violation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const replay_error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
