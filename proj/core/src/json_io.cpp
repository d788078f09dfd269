#include "mzvkit/json_io.hpp"

#include <json.hpp>

#include <cstdint>
#include <utility>

#include "mzvkit/errors.hpp"

namespace mzv {

namespace {

// Insertion-ordered documents so emitted JSON reads in schema order rather
// than alphabetically.
using json = nlohmann::ordered_json;

// ---- enum name maps local to the wire format ------------------------------

std::string zeta_kind_name(ZetaKind k) {
    switch (k) {
    case ZetaKind::Zeta: return "zeta";
    case ZetaKind::ZetaStar: return "zeta-star";
    case ZetaKind::HStar: return "h-star";
    case ZetaKind::ZetaProduct: return "product";
    case ZetaKind::BinomZeta: return "binom-zeta";
    }
    throw invariant_violation("unknown zeta-side term kind");
}

std::string tail_order_name(TailOrder t) {
    return t == TailOrder::NM ? "nm" : "mn";
}

TailOrder tail_order_from_name(const std::string& name) {
    if (name == "nm") return TailOrder::NM;
    if (name == "mn") return TailOrder::MN;
    throw parse_error("unknown tail order \"" + name + "\"");
}

std::string zeta_trunc_name(ZetaTrunc t) {
    return t == ZetaTrunc::TruncatedN ? "truncated" : "limit";
}

ZetaTrunc zeta_trunc_from_name(const std::string& name) {
    if (name == "truncated") return ZetaTrunc::TruncatedN;
    if (name == "limit") return ZetaTrunc::Limit;
    throw parse_error("unknown zeta truncation kind \"" + name + "\"");
}

// ---- shape helpers ---------------------------------------------------------

const json& require_field(const json& j, const char* key, const char* what) {
    auto it = j.find(key);
    if (it == j.end())
        throw parse_error(std::string(what) + " is missing field \"" + key + "\"");
    return *it;
}

void require_object(const json& j, const char* what) {
    if (!j.is_object())
        throw parse_error(std::string(what) + " must be a JSON object");
}

void require_array(const json& j, const char* what) {
    if (!j.is_array())
        throw parse_error(std::string(what) + " must be a JSON array");
}

std::string read_string(const json& j, const char* what) {
    if (!j.is_string())
        throw parse_error(std::string(what) + " must be a JSON string");
    return j.get<std::string>();
}

long read_long(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw parse_error(std::string(what) + " must be a JSON integer");
    return j.get<long>();
}

// ---- builders (value -> json) ---------------------------------------------

json index_json(const Index& k) {
    json a = json::array();
    for (int e : k.entries()) a.push_back(e);
    return a;
}

json index_sum_json(const IndexSum& s) {
    json a = json::array();
    for (const auto& [k, c] : s.terms())
        a.push_back(json{{"coeff", c}, {"index", index_json(k)}});
    return a;
}

json term_json(const Term& t) {
    json slots = json::array();
    switch (t.kind()) {
    case TermKind::Sh:
    case TermKind::Har:
        slots = {index_json(t.slot_k()), index_json(t.slot_l()), index_json(t.slot_h())};
        break;
    case TermKind::D:
    case TermKind::HD:
    case TermKind::H:
        slots = {index_json(t.slot_k()), index_json(t.slot_l())};
        break;
    case TermKind::O:
    case TermKind::Zeta:
        slots = {index_json(t.slot_k())};
        break;
    }
    json j{{"family", term_family_name(t.kind())}, {"slots", std::move(slots)}};
    if (t.kind() == TermKind::Zeta) j["kind"] = zeta_trunc_name(t.zeta_trunc_kind());
    if (t.kind() == TermKind::D) j["tails"] = tail_order_name(t.tail_order());
    return j;
}

json expr_json(const Expr& e) {
    json a = json::array();
    for (const auto& [t, c] : e.terms())
        a.push_back(json{{"coeff", rational_to_string(c)}, {"term", term_json(t)}});
    return a;
}

json zeta_term_json(const ZetaTerm& t) {
    json j{{"kind", zeta_kind_name(t.kind())}, {"k", index_json(t.k())}};
    if (t.kind() == ZetaKind::ZetaProduct) j["l"] = index_json(t.l());
    if (t.kind() == ZetaKind::BinomZeta) j["tails"] = tail_order_name(t.tails());
    return j;
}

json zeta_sum_json(const ZetaSum& s) {
    json a = json::array();
    for (const auto& [t, c] : s.terms())
        a.push_back(json{{"coeff", rational_to_string(c)}, {"term", zeta_term_json(t)}});
    return a;
}

json identity_json(const Identity& id) {
    return json{{"family", family_name(id.family)},
                {"validity", validity_name(id.validity)},
                {"provenance", id.provenance},
                {"lhs", zeta_sum_json(id.lhs)},
                {"rhs", zeta_sum_json(id.rhs)}};
}

json trace_document_json(const TraceDocument& doc) {
    json steps = json::array();
    for (const TraceStep& s : doc.trace.steps)
        steps.push_back(json{{"rule", rule_name(s.rule)},
                             {"before", term_json(s.before)},
                             {"after", expr_json(s.after)},
                             {"guard", s.guard_witness}});
    json j{{"family", family_name(doc.trace.family)},
           {"start", expr_json(doc.trace.start)},
           {"steps", std::move(steps)},
           {"result", expr_json(doc.trace.result)}};
    if (doc.identity) j["identity"] = identity_json(*doc.identity);
    return j;
}

json eval_report_json(const EvalReport& r) {
    json j{{"lhs", rational_to_string(r.lhs)},
           {"rhs", rational_to_string(r.rhs)},
           {"diff", rational_to_string(r.diff)},
           {"verdict", verdict_name(r.verdict)}};
    if (r.convergence)
        j["convergence"] = json{
            {"cap", r.convergence->cap},
            {"doubled_diff", rational_to_string(r.convergence->doubled_diff)}};
    // Decimal renderings for human readers; the exact strings above are the
    // record and the only values the parsers look at.
    j["lhs_decimal"] = rational_to_decimal(r.lhs);
    j["rhs_decimal"] = rational_to_decimal(r.rhs);
    j["diff_decimal"] = rational_to_decimal(r.diff);
    return j;
}

json congruence_report_json(const CongruenceReport& r) {
    return json{{"p", r.p},
                {"lhs", r.lhs},
                {"rhs", r.rhs},
                {"verdict", r.congruent ? "congruent" : "not-congruent"},
                {"instance", r.instance}};
}

// ---- readers (json -> value) -----------------------------------------------

Index read_index(const json& j) {
    require_array(j, "an index");
    std::vector<int> entries;
    entries.reserve(j.size());
    for (const json& e : j) {
        if (!e.is_number_integer() || e.get<long>() < 1)
            throw parse_error("index entries must be positive integers");
        entries.push_back(e.get<int>());
    }
    return Index(std::move(entries));
}

IndexSum read_index_sum(const json& j) {
    require_array(j, "an index sum");
    IndexSum s;
    for (const json& item : j) {
        require_object(item, "an index-sum entry");
        const json& c = require_field(item, "coeff", "an index-sum entry");
        if (!c.is_number_integer())
            throw parse_error("index-sum coefficients must be JSON integers");
        s.add(read_index(require_field(item, "index", "an index-sum entry")),
              c.get<std::int64_t>());
    }
    return s;
}

Term read_term(const json& j) {
    require_object(j, "a term");
    TermKind kind =
        term_kind_from_name(read_string(require_field(j, "family", "a term"), "term family"));
    const json& slots = require_field(j, "slots", "a term");
    require_array(slots, "term slots");
    std::size_t expected;
    switch (kind) {
    case TermKind::Sh:
    case TermKind::Har: expected = 3; break;
    case TermKind::D:
    case TermKind::HD:
    case TermKind::H: expected = 2; break;
    default: expected = 1; break;
    }
    if (slots.size() != expected)
        throw parse_error("a " + term_family_name(kind) + " term takes " +
                          std::to_string(expected) + " slots, got " +
                          std::to_string(slots.size()));
    std::vector<Index> idx;
    for (const json& s : slots) idx.push_back(read_index(s));
    try {
        switch (kind) {
        case TermKind::Sh: return Term::sh(idx[0], idx[1], idx[2]);
        case TermKind::Har: return Term::har(idx[0], idx[1], idx[2]);
        case TermKind::D: {
            TailOrder tails = TailOrder::NM;
            if (auto it = j.find("tails"); it != j.end())
                tails = tail_order_from_name(read_string(*it, "term tail order"));
            return Term::d(idx[0], idx[1], tails);
        }
        case TermKind::HD: return Term::hd(idx[0], idx[1]);
        case TermKind::O: return Term::o(idx[0]);
        case TermKind::H: return Term::h(idx[0], idx[1]);
        case TermKind::Zeta: {
            ZetaTrunc trunc = ZetaTrunc::TruncatedN;
            if (auto it = j.find("kind"); it != j.end())
                trunc = zeta_trunc_from_name(read_string(*it, "zeta truncation kind"));
            return Term::zeta(idx[0], trunc);
        }
        }
    } catch (const domain_error& e) {
        // A structurally valid document describing an ill-formed term is a
        // document problem, not a caller bug.
        throw parse_error(e.what());
    }
    throw parse_error("unhandled term family");
}

Rational read_coeff(const json& j) {
    return rational_from_string(read_string(j, "a coefficient"));
}

Expr read_expr(const json& j) {
    require_array(j, "an expression");
    Expr e;
    for (const json& item : j) {
        require_object(item, "an expression entry");
        Rational c = read_coeff(require_field(item, "coeff", "an expression entry"));
        e.add(read_term(require_field(item, "term", "an expression entry")), c);
    }
    return e;
}

ZetaTerm read_zeta_term(const json& j) {
    require_object(j, "a zeta-side term");
    std::string kind =
        read_string(require_field(j, "kind", "a zeta-side term"), "zeta-side term kind");
    Index k = read_index(require_field(j, "k", "a zeta-side term"));
    try {
        if (kind == "zeta") return ZetaTerm::zeta(std::move(k));
        if (kind == "zeta-star") return ZetaTerm::zeta_star(std::move(k));
        if (kind == "h-star") return ZetaTerm::h_star(std::move(k));
        if (kind == "product")
            return ZetaTerm::product(
                std::move(k), read_index(require_field(j, "l", "a product term")));
        if (kind == "binom-zeta")
            return ZetaTerm::binom_zeta(
                std::move(k),
                tail_order_from_name(read_string(
                    require_field(j, "tails", "a binomial-tail term"), "tail order")));
    } catch (const domain_error& e) {
        throw parse_error(e.what());
    }
    throw parse_error("unknown zeta-side term kind \"" + kind + "\"");
}

ZetaSum read_zeta_sum(const json& j) {
    require_array(j, "a zeta-side sum");
    ZetaSum s;
    for (const json& item : j) {
        require_object(item, "a zeta-sum entry");
        Rational c = read_coeff(require_field(item, "coeff", "a zeta-sum entry"));
        s.add(read_zeta_term(require_field(item, "term", "a zeta-sum entry")), c);
    }
    return s;
}

Identity read_identity(const json& j) {
    require_object(j, "an identity");
    Identity id{
        family_from_name(
            read_string(require_field(j, "family", "an identity"), "identity family")),
        validity_from_name(
            read_string(require_field(j, "validity", "an identity"), "identity validity")),
        read_string(require_field(j, "provenance", "an identity"), "identity provenance"),
        read_zeta_sum(require_field(j, "lhs", "an identity")),
        read_zeta_sum(require_field(j, "rhs", "an identity"))};
    return id;
}

TraceDocument read_trace_document(const json& j) {
    require_object(j, "a trace");
    TraceDocument doc;
    doc.trace.family = family_from_name(
        read_string(require_field(j, "family", "a trace"), "trace family"));
    doc.trace.start = read_expr(require_field(j, "start", "a trace"));
    const json& steps = require_field(j, "steps", "a trace");
    require_array(steps, "trace steps");
    for (const json& s : steps) {
        require_object(s, "a trace step");
        doc.trace.steps.push_back(TraceStep{
            rule_from_name(read_string(require_field(s, "rule", "a trace step"), "rule name")),
            read_term(require_field(s, "before", "a trace step")),
            read_expr(require_field(s, "after", "a trace step")),
            read_string(require_field(s, "guard", "a trace step"), "guard witness")});
    }
    doc.trace.result = read_expr(require_field(j, "result", "a trace"));
    if (auto it = j.find("identity"); it != j.end()) doc.identity = read_identity(*it);
    return doc;
}

EvalReport read_eval_report(const json& j) {
    require_object(j, "an evaluation report");
    EvalReport r;
    r.lhs = read_coeff(require_field(j, "lhs", "an evaluation report"));
    r.rhs = read_coeff(require_field(j, "rhs", "an evaluation report"));
    r.diff = read_coeff(require_field(j, "diff", "an evaluation report"));
    r.verdict = verdict_from_name(read_string(
        require_field(j, "verdict", "an evaluation report"), "verdict"));
    if (auto it = j.find("convergence"); it != j.end()) {
        require_object(*it, "a convergence record");
        Convergence c;
        c.cap = read_long(require_field(*it, "cap", "a convergence record"),
                          "convergence cap");
        c.doubled_diff =
            read_coeff(require_field(*it, "doubled_diff", "a convergence record"));
        r.convergence = std::move(c);
    }
    return r;
}

CongruenceReport read_congruence_report(const json& j) {
    require_object(j, "a congruence report");
    CongruenceReport r;
    r.p = read_long(require_field(j, "p", "a congruence report"), "modulus p");
    r.lhs = read_long(require_field(j, "lhs", "a congruence report"), "lhs residue");
    r.rhs = read_long(require_field(j, "rhs", "a congruence report"), "rhs residue");
    std::string verdict = read_string(
        require_field(j, "verdict", "a congruence report"), "congruence verdict");
    if (verdict == "congruent") r.congruent = true;
    else if (verdict == "not-congruent") r.congruent = false;
    else throw parse_error("unknown congruence verdict \"" + verdict + "\"");
    r.instance =
        read_string(require_field(j, "instance", "a congruence report"), "instance");
    return r;
}

std::string dump(const json& j, bool pretty) { return j.dump(pretty ? 2 : -1); }

// Runs a parse entry point with JSON-library exceptions translated to the
// library's own parse_error.
template <typename F>
auto parsing(const std::string& text, F&& read) {
    try {
        return read(json::parse(text));
    } catch (const json::exception& e) {
        throw parse_error(e.what());
    }
}

} // namespace

std::string index_to_json(const Index& k) { return dump(index_json(k), false); }

std::string index_sum_to_json(const IndexSum& s) { return dump(index_sum_json(s), false); }

std::string term_to_json(const Term& t) { return dump(term_json(t), false); }

std::string expr_to_json(const Expr& e) { return dump(expr_json(e), false); }

std::string identity_to_json(const Identity& id, bool pretty) {
    return dump(identity_json(id), pretty);
}

std::string trace_document_to_json(const TraceDocument& doc, bool pretty) {
    return dump(trace_document_json(doc), pretty);
}

std::string eval_report_to_json(const EvalReport& r, bool pretty) {
    return dump(eval_report_json(r), pretty);
}

std::string congruence_report_to_json(const CongruenceReport& r, bool pretty) {
    return dump(congruence_report_json(r), pretty);
}

std::string sweep_report_to_json(const SweepReport& r, bool pretty) {
    json suites = json::array();
    for (const SuiteResult& s : r.suites)
        suites.push_back(json{{"name", s.name},
                              {"cases", s.cases},
                              {"failures", s.failures},
                              {"notes", s.failure_notes}});
    return dump(json{{"suites", std::move(suites)},
                     {"cases", r.total_cases()},
                     {"failures", r.total_failures()},
                     {"passed", r.all_passed()}},
                pretty);
}

Index index_from_json(const std::string& text) {
    return parsing(text, [](const json& j) { return read_index(j); });
}

IndexSum index_sum_from_json(const std::string& text) {
    return parsing(text, [](const json& j) { return read_index_sum(j); });
}

Term term_from_json(const std::string& text) {
    return parsing(text, [](const json& j) { return read_term(j); });
}

Expr expr_from_json(const std::string& text) {
    return parsing(text, [](const json& j) { return read_expr(j); });
}

Identity identity_from_json(const std::string& text) {
    return parsing(text, [](const json& j) {
        if (j.is_object() && j.contains("steps")) {
            TraceDocument doc = read_trace_document(j);
            if (!doc.identity)
                throw parse_error("trace document carries no identity to verify");
            return *std::move(doc.identity);
        }
        return read_identity(j);
    });
}

TraceDocument trace_document_from_json(const std::string& text) {
    return parsing(text, [](const json& j) { return read_trace_document(j); });
}

EvalReport eval_report_from_json(const std::string& text) {
    return parsing(text, [](const json& j) { return read_eval_report(j); });
}

CongruenceReport congruence_report_from_json(const std::string& text) {
    return parsing(text, [](const json& j) { return read_congruence_report(j); });
}

} // namespace mzv
