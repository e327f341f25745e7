#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qspectra/audit.hpp"
#include "qspectra/certify.hpp"
#include "qspectra/enumerate.hpp"
#include "qspectra/errors.hpp"
#include "qspectra/graph.hpp"
#include "qspectra/report.hpp"
#include "qspectra/search.hpp"
#include "qspectra/theorems.hpp"

namespace {

using qspectra::Json;

enum class Format { human, json, jsonl };

struct CommonOptions {
    std::string format = "human";
    std::string out_path;
    std::string exponent_variant = "lemma";
    long long budget = 10'000'000;
    int workers = 0;

    Format format_kind() const {
        if (format == "json") return Format::json;
        if (format == "jsonl") return Format::jsonl;
        return Format::human;
    }
    qspectra::ExponentRule rule() const {
        return exponent_variant == "intro" ? qspectra::ExponentRule::intro
                                           : qspectra::ExponentRule::lemma;
    }
    qspectra::FactorBudget factor_budget() const { return {budget}; }
};

void add_common_options(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"human", "json", "jsonl"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.out_path,
                    "Write results to this file instead of standard output");
    cmd->add_option("--exponent-variant", opts.exponent_variant,
                    "Criterion exponent: lemma = floor((3n-2)/2), "
                    "intro = floor((n-3)/2)")
        ->check(CLI::IsMember({"lemma", "intro"}))
        ->capture_default_str();
    cmd->add_option("--budget", opts.budget,
                    "Factorization budget in Pollard-rho iterations")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--workers", opts.workers,
                    "Worker threads (default: QSPECTRA_WORKERS or all cores)")
        ->check(CLI::PositiveNumber);
}

void apply_workers(const CommonOptions& opts) {
    if (opts.workers >= 1)
        setenv("QSPECTRA_WORKERS", std::to_string(opts.workers).c_str(), 1);
}

// Results go to --out or stdout; the manifest goes with them in structured
// formats and to stderr in human format so stdout stays pipeable.
class OutputSink {
  public:
    explicit OutputSink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::trunc);
            if (!file_)
                throw std::runtime_error("cannot write output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

qspectra::Manifest make_manifest(const std::string& subcommand,
                                 const CommonOptions& opts,
                                 std::vector<std::string> inputs,
                                 std::map<std::string, std::string> extra) {
    qspectra::Manifest m;
    m.subcommand = subcommand;
    m.inputs = std::move(inputs);
    m.parameters["exponent_variant"] = opts.exponent_variant;
    m.parameters["exponent_rule"] =
        qspectra::exponent_rule_name(opts.rule());
    m.parameters["budget"] = std::to_string(opts.budget);
    m.parameters["format"] = opts.format;
    for (auto& [k, v] : extra) m.parameters[k] = std::move(v);
    return m;
}

void emit_manifest_human(const qspectra::Manifest& m) {
    std::cerr << "# " << qspectra::kToolName << " " << qspectra::kToolVersion
              << " " << m.subcommand;
    for (const auto& [k, v] : m.parameters) std::cerr << " " << k << "=" << v;
    for (const auto& in : m.inputs) std::cerr << " input=" << in;
    std::cerr << "\n";
}

void emit_jsonl_manifest(std::ostream& os, const qspectra::Manifest& m,
                         const std::string& ref) {
    os << Json{{"key", qspectra::JsonlStore::make_key(
                           "", "manifest", Json::object())},
               {"value", qspectra::to_json(m)},
               {"manifest_ref", ref}}
              .dump()
       << "\n";
}

std::string factorization_text(const qspectra::FactorResult& f) {
    std::ostringstream os;
    bool first = true;
    for (const auto& e : f.factors) {
        if (!first) os << " * ";
        first = false;
        os << qspectra::dec(e.prime);
        if (e.multiplicity > 1) os << "^" << e.multiplicity;
    }
    if (!f.complete()) {
        if (!first) os << " * ";
        os << "[composite " << qspectra::dec(f.residual) << "]";
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

void print_certificate_human(std::ostream& os,
                             const qspectra::SpectralCertificate& c) {
    os << "graph " << c.graph_id << "  n=" << c.order
       << "  det W_Q=" << qspectra::dec(c.det_wq) << "  exponent "
       << qspectra::exponent_rule_name(c.rule) << "=" << c.exponent;
    if (c.reduced_integral) {
        os << "  reduced=" << qspectra::dec(c.reduced);
        if (c.reduced != 0)
            os << "  factors=" << factorization_text(c.factorization);
    }
    os << "  a0=" << qspectra::dec(c.a0_q) << "  verdict="
       << qspectra::verdict_name(c.verdict) << "\n    " << c.note << "\n";
}

int cmd_certify(const CommonOptions& opts, const std::string& in_path,
                const std::vector<std::string>& inline_graphs) {
    apply_workers(opts);
    std::vector<std::string> lines = inline_graphs;
    std::vector<std::string> inputs;
    if (!inline_graphs.empty()) inputs.push_back("inline");
    if (!in_path.empty()) {
        inputs.push_back(in_path == "-" ? "stdin" : in_path);
        if (in_path == "-") {
            std::string line;
            while (std::getline(std::cin, line)) lines.push_back(line);
        } else {
            std::ifstream in(in_path);
            if (!in) {
                std::cerr << "error: cannot read input file: " << in_path
                          << "\n";
                return 1;
            }
            std::string line;
            while (std::getline(in, line)) lines.push_back(line);
        }
    }
    if (lines.empty()) {
        std::cerr << "error: no input graphs; use --g or --in\n";
        return 1;
    }

    const qspectra::Manifest manifest =
        make_manifest("certify", opts, inputs, {});
    const std::string ref = qspectra::manifest_ref(manifest);

    std::vector<qspectra::SpectralCertificate> certs;
    std::vector<std::pair<long, std::string>> errors;
    long line_no = 0;
    for (const std::string& raw : lines) {
        ++line_no;
        std::string text = raw;
        while (!text.empty() &&
               (text.back() == '\r' || text.back() == ' '))
            text.pop_back();
        if (text.empty()) continue;
        try {
            const qspectra::Graph g = qspectra::parse_graph6(text);
            certs.push_back(qspectra::certify_dgqs(g, opts.factor_budget(),
                                                   opts.rule()));
        } catch (const qspectra::ParseError& e) {
            errors.emplace_back(line_no, e.what());
        } catch (const qspectra::SizeError& e) {
            errors.emplace_back(line_no, e.what());
        }
    }

    OutputSink sink(opts.out_path);
    std::ostream& os = sink.stream();
    switch (opts.format_kind()) {
    case Format::human: {
        emit_manifest_human(manifest);
        for (const auto& c : certs) print_certificate_human(os, c);
        for (const auto& [line, message] : errors)
            os << "input " << line << ": MALFORMED (" << message << ")\n";
        break;
    }
    case Format::json: {
        Json bundle{{"manifest", qspectra::to_json(manifest)}};
        Json arr = Json::array();
        for (const auto& c : certs) arr.push_back(qspectra::to_json(c));
        bundle["certificates"] = std::move(arr);
        Json errs = Json::array();
        for (const auto& [line, message] : errors)
            errs.push_back(Json{{"input", line}, {"message", message}});
        bundle["errors"] = std::move(errs);
        os << bundle.dump(2) << "\n";
        break;
    }
    case Format::jsonl: {
        emit_jsonl_manifest(os, manifest, ref);
        for (const auto& c : certs) {
            const Json key = qspectra::JsonlStore::make_key(
                c.graph_id, "certify",
                Json{{"exponent_rule",
                      qspectra::exponent_rule_name(c.rule)}});
            os << Json{{"key", key},
                       {"value", qspectra::to_json(c)},
                       {"manifest_ref", ref}}
                      .dump()
               << "\n";
        }
        for (const auto& [line, message] : errors) {
            const Json key = qspectra::JsonlStore::make_key(
                "", "certify-error", Json{{"input", line}});
            os << Json{{"key", key},
                       {"value", Json{{"message", message}}},
                       {"manifest_ref", ref}}
                      .dump()
               << "\n";
        }
        break;
    }
    }
    return errors.empty() ? 0 : 2;
}

int cmd_rooted_product(const CommonOptions& opts, const std::string& g_text,
                       int k, int t) {
    apply_workers(opts);
    qspectra::Graph result(1);
    std::string subject_id;
    try {
        const qspectra::Graph g = qspectra::parse_graph6(g_text);
        subject_id = g_text;
        result = t == 1 ? qspectra::rooted_product(g, k)
                        : qspectra::rooted_tower(g, k, t);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    const qspectra::Manifest manifest = make_manifest(
        "rooted-product", opts, {g_text},
        {{"k", std::to_string(k)}, {"t", std::to_string(t)}});
    const std::string text = qspectra::to_graph6(result);

    OutputSink sink(opts.out_path);
    std::ostream& os = sink.stream();
    switch (opts.format_kind()) {
    case Format::human:
        emit_manifest_human(manifest);
        os << text << "\n";
        break;
    case Format::json: {
        Json bundle{{"manifest", qspectra::to_json(manifest)},
                    {"result", Json{{"graph6", text},
                                    {"order", result.order()},
                                    {"edges", result.edge_count()}}}};
        os << bundle.dump(2) << "\n";
        break;
    }
    case Format::jsonl: {
        const std::string ref = qspectra::manifest_ref(manifest);
        emit_jsonl_manifest(os, manifest, ref);
        const Json key = qspectra::JsonlStore::make_key(
            subject_id, "rooted-product",
            Json{{"k", k}, {"t", t}});
        os << Json{{"key", key},
                   {"value", Json{{"graph6", text}}},
                   {"manifest_ref", ref}}
                  .dump()
           << "\n";
        break;
    }
    }
    return 0;
}

std::optional<qspectra::GraphCatalog> resolve_catalog(
    int n, const std::string& in_path, std::string& diagnostic) {
    try {
        if (!in_path.empty())
            return qspectra::GraphCatalog::from_graph6_file(in_path);
        return qspectra::GraphCatalog::built_in(n);
    } catch (const std::exception& e) {
        diagnostic = e.what();
        return std::nullopt;
    }
}

int cmd_find_seeds(const CommonOptions& opts, int n,
                   const std::string& in_path) {
    apply_workers(opts);
    std::string diagnostic;
    const auto catalog = resolve_catalog(n, in_path, diagnostic);
    if (!catalog) {
        std::cerr << "error: " << diagnostic << "\n";
        return 1;
    }
    const qspectra::SeedScanReport report =
        qspectra::find_seeds(*catalog, opts.rule());
    const qspectra::Manifest manifest = make_manifest(
        "find-seeds", opts,
        {in_path.empty() ? "built-in" : in_path},
        {{"order", std::to_string(catalog->order())},
         {"catalog_hash", catalog->content_hash()}});

    OutputSink sink(opts.out_path);
    std::ostream& os = sink.stream();
    switch (opts.format_kind()) {
    case Format::human: {
        emit_manifest_human(manifest);
        os << report.catalog_description << "\n";
        if (!report.applicable) {
            os << "not applicable: " << report.precondition_note << "\n";
            break;
        }
        os << "seeds satisfying both hypothesis clauses: "
           << report.seeds.size() << " (exhaustive over "
           << report.classes_scanned << " classes)\n";
        for (const auto& cert : report.seeds)
            print_certificate_human(os, cert);
        for (const auto& near : report.near_misses) {
            os << "near miss " << near.graph_id << "  det W_Q="
               << qspectra::dec(near.det_wq) << " ["
               << (near.det_clause ? "meets" : "misses")
               << "]  a0=" << qspectra::dec(near.a0) << " ["
               << (near.a0_clause ? "meets" : "misses") << "]\n";
        }
        break;
    }
    case Format::json: {
        Json bundle{{"manifest", qspectra::to_json(manifest)},
                    {"result", qspectra::to_json(report)}};
        os << bundle.dump(2) << "\n";
        break;
    }
    case Format::jsonl: {
        const std::string ref = qspectra::manifest_ref(manifest);
        emit_jsonl_manifest(os, manifest, ref);
        const Json key = qspectra::JsonlStore::make_key(
            "", "find-seeds",
            Json{{"order", report.order},
                 {"catalog_hash", report.catalog_hash}});
        os << Json{{"key", key},
                   {"value", qspectra::to_json(report)},
                   {"manifest_ref", ref}}
                  .dump()
           << "\n";
        break;
    }
    }
    return 0;
}

int cmd_survey(const CommonOptions& opts, int n, const std::string& in_path) {
    apply_workers(opts);
    std::string diagnostic;
    const auto catalog = resolve_catalog(n, in_path, diagnostic);
    if (!catalog) {
        std::cerr << "error: " << diagnostic << "\n";
        return 1;
    }
    const qspectra::TwoAdicSurvey survey = qspectra::two_adic_survey(*catalog);
    const qspectra::Manifest manifest = make_manifest(
        "survey", opts,
        {in_path.empty() ? "built-in" : in_path},
        {{"order", std::to_string(catalog->order())},
         {"catalog_hash", catalog->content_hash()}});

    OutputSink sink(opts.out_path);
    std::ostream& os = sink.stream();
    switch (opts.format_kind()) {
    case Format::human: {
        emit_manifest_human(manifest);
        os << survey.catalog_description << "\n";
        os << "det W_Q = 0 (infinite valuation): " << survey.infinite_count
           << " classes\n";
        for (const auto& [v, count] : survey.valuation_histogram)
            os << "nu_2(det W_Q) = " << v << ": " << count << " classes\n";
        if (survey.min_valuation)
            os << "minimum finite valuation: " << *survey.min_valuation
               << "\n";
        else
            os << "no nonzero determinant in this catalog\n";
        os << "distinct a0 values: " << survey.a0_histogram.size() << "\n";
        for (const auto& [value, count] : survey.a0_histogram)
            os << "a0 = " << qspectra::dec(value) << ": " << count
               << " classes\n";
        break;
    }
    case Format::json: {
        Json bundle{{"manifest", qspectra::to_json(manifest)},
                    {"result", qspectra::to_json(survey)}};
        os << bundle.dump(2) << "\n";
        break;
    }
    case Format::jsonl: {
        const std::string ref = qspectra::manifest_ref(manifest);
        emit_jsonl_manifest(os, manifest, ref);
        const Json key = qspectra::JsonlStore::make_key(
            "", "two-adic-survey",
            Json{{"order", survey.order},
                 {"catalog_hash", survey.catalog_hash}});
        os << Json{{"key", key},
                   {"value", qspectra::to_json(survey)},
                   {"manifest_ref", ref}}
                  .dump()
           << "\n";
        break;
    }
    }
    return 0;
}

int cmd_mates(const CommonOptions& opts, const std::string& g_text,
              const std::string& catalog_path) {
    apply_workers(opts);
    qspectra::MateReport report;
    try {
        const qspectra::Graph g = qspectra::parse_graph6(g_text);
        if (catalog_path.empty()) {
            report = qspectra::brute_force_dgqs(g);
        } else {
            report = qspectra::find_q_cospectral_mates(
                g, qspectra::GraphCatalog::from_graph6_file(catalog_path));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    const qspectra::Manifest manifest = make_manifest(
        "mates", opts,
        {catalog_path.empty() ? "built-in" : catalog_path},
        {{"subject", report.subject_id},
         {"catalog_hash", report.catalog_hash}});

    OutputSink sink(opts.out_path);
    std::ostream& os = sink.stream();
    switch (opts.format_kind()) {
    case Format::human: {
        emit_manifest_human(manifest);
        os << "subject " << report.subject_id << "  n=" << report.order
           << "\nscope: " << report.scope << "\n";
        if (report.mates.empty()) {
            os << "no generalized-Q-cospectral mate; DGQS within scope\n";
        } else {
            os << "mates:";
            for (const auto& id : report.mates) os << " " << id;
            os << "\nnot determined by the generalized Q-spectrum within "
                  "scope\n";
        }
        break;
    }
    case Format::json: {
        Json bundle{{"manifest", qspectra::to_json(manifest)},
                    {"result", qspectra::to_json(report)}};
        os << bundle.dump(2) << "\n";
        break;
    }
    case Format::jsonl: {
        const std::string ref = qspectra::manifest_ref(manifest);
        emit_jsonl_manifest(os, manifest, ref);
        const Json key = qspectra::JsonlStore::make_key(
            report.subject_id, "mates",
            Json{{"catalog_hash", report.catalog_hash}});
        os << Json{{"key", key},
                   {"value", qspectra::to_json(report)},
                   {"manifest_ref", ref}}
                  .dump()
           << "\n";
        break;
    }
    }
    return 0;
}

Json audit_to_json(const qspectra::AuditReport& report,
                   const qspectra::Manifest& manifest) {
    Json items = Json::array();
    for (const auto& item : report.items)
        items.push_back(Json{{"id", item.id},
                             {"must_pass", item.must_pass},
                             {"passed", item.passed},
                             {"summary", item.summary}});
    Json verdicts = Json::array();
    for (const auto& v : report.identity_verdicts)
        verdicts.push_back(qspectra::to_json(v));
    Json scans = Json::array();
    for (const auto& s : report.seed_scans)
        scans.push_back(qspectra::to_json(s));
    Json surveys = Json::array();
    for (const auto& s : report.surveys) surveys.push_back(qspectra::to_json(s));
    Json towers = Json::array();
    for (const auto& t : report.tower_checks)
        towers.push_back(qspectra::to_json(t));
    return Json{{"manifest", qspectra::to_json(manifest)},
                {"quick", report.quick},
                {"all_must_pass", report.all_must_pass()},
                {"items", std::move(items)},
                {"identity_verdicts", std::move(verdicts)},
                {"seed_scans", std::move(scans)},
                {"surveys", std::move(surveys)},
                {"tower_checks", std::move(towers)}};
}

void store_audit(const qspectra::AuditReport& report,
                 const qspectra::Manifest& manifest,
                 const std::string& store_path) {
    qspectra::JsonlStore store;
    store.load(store_path);
    const std::string ref = qspectra::manifest_ref(manifest);
    const std::string scope = report.quick ? "quick" : "full";
    store.upsert(
        qspectra::JsonlStore::make_key("", "manifest",
                                       Json{{"scope", scope}}),
        qspectra::to_json(manifest), ref);
    for (const auto& item : report.items) {
        store.upsert(qspectra::JsonlStore::make_key(
                         "", "audit-item:" + item.id,
                         Json{{"scope", scope}}),
                     Json{{"must_pass", item.must_pass},
                          {"passed", item.passed},
                          {"summary", item.summary}},
                     ref);
    }
    for (const auto& v : report.identity_verdicts) {
        store.upsert(qspectra::JsonlStore::make_key(
                         "", "identity:" + v.identity,
                         Json{{"scope", scope},
                              {"index_begin", v.index_begin},
                              {"index_end", v.index_end}}),
                     qspectra::to_json(v), ref);
    }
    for (const auto& s : report.seed_scans) {
        store.upsert(qspectra::JsonlStore::make_key(
                         "", "seed-scan",
                         Json{{"order", s.order}, {"scope", scope}}),
                     qspectra::to_json(s), ref);
    }
    for (const auto& s : report.surveys) {
        store.upsert(qspectra::JsonlStore::make_key(
                         "", "two-adic-survey",
                         Json{{"order", s.order}, {"scope", scope}}),
                     qspectra::to_json(s), ref);
    }
    for (const auto& t : report.tower_checks) {
        store.upsert(qspectra::JsonlStore::make_key(
                         t.graph_id, t.theorem,
                         Json{{"k", t.k}, {"t", t.t}, {"scope", scope}}),
                     qspectra::to_json(t), ref);
    }
    store.write(store_path);
}

int cmd_audit(const CommonOptions& opts, bool quick,
                     const std::string& store_path) {
    apply_workers(opts);
    const qspectra::AuditReport report = qspectra::run_audit(quick);
    const qspectra::Manifest manifest = make_manifest(
        "audit", opts, {},
        {{"scope", quick ? "quick" : "full"}});

    if (!store_path.empty()) {
        try {
            store_audit(report, manifest, store_path);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 1;
        }
    }

    OutputSink sink(opts.out_path);
    std::ostream& os = sink.stream();
    switch (opts.format_kind()) {
    case Format::human: {
        emit_manifest_human(manifest);
        for (const auto& item : report.items) {
            os << (item.passed ? "PASS" : "FAIL") << "  "
               << (item.must_pass ? "[must-pass] " : "[report]    ")
               << item.id << ": " << item.summary << "\n";
        }
        os << (report.all_must_pass()
                   ? "all must-pass checks hold\n"
                   : "at least one must-pass check FAILED\n");
        break;
    }
    case Format::json:
        os << audit_to_json(report, manifest).dump(2) << "\n";
        break;
    case Format::jsonl: {
        const std::string ref = qspectra::manifest_ref(manifest);
        emit_jsonl_manifest(os, manifest, ref);
        const std::string scope = report.quick ? "quick" : "full";
        for (const auto& item : report.items) {
            const Json key = qspectra::JsonlStore::make_key(
                "", "audit-item:" + item.id, Json{{"scope", scope}});
            os << Json{{"key", key},
                       {"value", Json{{"must_pass", item.must_pass},
                                      {"passed", item.passed},
                                      {"summary", item.summary}}},
                       {"manifest_ref", ref}}
                      .dump()
               << "\n";
        }
        break;
    }
    }
    return report.all_must_pass() ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic laboratory for signless-Laplacian walk "
                 "matrices, rooted products, and generalized Q-spectrum "
                 "certification"};
    app.require_subcommand(1);

    CommonOptions opts;

    auto* certify = app.add_subcommand(
        "certify", "Certify graphs against the determinant criterion");
    std::string certify_in;
    std::vector<std::string> certify_inline;
    certify->add_option("--in", certify_in,
                        "graph6 file, one graph per line ('-' for stdin)");
    certify->add_option("--g", certify_inline, "Inline graph6 text");
    add_common_options(certify, opts);

    auto* rooted = app.add_subcommand(
        "rooted-product", "Build the rooted product of a graph with a path");
    std::string rooted_g;
    int rooted_k = 2;
    int rooted_t = 1;
    rooted->add_option("--g", rooted_g, "Base graph in graph6")->required();
    rooted->add_option("--k", rooted_k, "Path length")
        ->required()
        ->check(CLI::PositiveNumber);
    rooted->add_option("--t", rooted_t, "Tower iterations")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_common_options(rooted, opts);

    auto* seeds = app.add_subcommand(
        "find-seeds", "Scan a catalog for tower seed-hypothesis graphs");
    int seeds_n = 4;
    std::string seeds_in;
    seeds->add_option("--n", seeds_n, "Order of the built-in catalog")
        ->check(CLI::Range(1, 8));
    seeds->add_option("--in", seeds_in, "External graph6 catalog file");
    add_common_options(seeds, opts);

    auto* survey = app.add_subcommand(
        "survey", "Two-adic survey of walk determinants over a catalog");
    int survey_n = 4;
    std::string survey_in;
    survey->add_option("--n", survey_n, "Order of the built-in catalog")
        ->check(CLI::Range(1, 8));
    survey->add_option("--in", survey_in, "External graph6 catalog file");
    add_common_options(survey, opts);

    auto* mates = app.add_subcommand(
        "mates", "Search a catalog for generalized-Q-cospectral mates");
    std::string mates_g;
    std::string mates_catalog;
    mates->add_option("--g", mates_g, "Subject graph in graph6")->required();
    mates->add_option("--catalog", mates_catalog,
                      "External graph6 catalog (default: built-in, "
                      "exhaustive for n <= 8)");
    add_common_options(mates, opts);

    auto* verify = app.add_subcommand(
        "audit", "Run the complete verification bundle");
    bool verify_quick = false;
    std::string verify_store;
    verify->add_flag("--quick", verify_quick, "Reduced sweep scales");
    verify->add_option("--store", verify_store,
                       "Merge results into this keyed JSONL store");
    add_common_options(verify, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (certify->parsed())
            return cmd_certify(opts, certify_in, certify_inline);
        if (rooted->parsed())
            return cmd_rooted_product(opts, rooted_g, rooted_k, rooted_t);
        if (seeds->parsed()) return cmd_find_seeds(opts, seeds_n, seeds_in);
        if (survey->parsed()) return cmd_survey(opts, survey_n, survey_in);
        if (mates->parsed()) return cmd_mates(opts, mates_g, mates_catalog);
        if (verify->parsed())
            return cmd_audit(opts, verify_quick, verify_store);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
