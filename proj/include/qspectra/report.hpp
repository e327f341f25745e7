#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qspectra/bigint.hpp"
#include "qspectra/certify.hpp"
#include "qspectra/enumerate.hpp"
#include "qspectra/errors.hpp"
#include "qspectra/factor.hpp"
#include "qspectra/identities.hpp"
#include "qspectra/polynomial.hpp"
#include "qspectra/search.hpp"
#include "qspectra/theorems.hpp"

namespace qspectra {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "qspectra";
inline constexpr const char* kToolVersion = "1.0.0";

// Integers of arbitrary size travel as decimal strings; nothing in the
// output path may round.
inline Json json_big(const BigInt& x) { return Json(dec(x)); }

// Constant-first coefficient array, decimal strings.
inline Json json_poly(const IntPolynomial& p) {
    Json arr = Json::array();
    for (const BigInt& c : p.coefficients()) arr.push_back(dec(c));
    return Json{{"coefficients", std::move(arr)}, {"text", p.str()}};
}

inline Json json_value(const std::variant<BigInt, IntPolynomial>& v) {
    if (std::holds_alternative<BigInt>(v)) return json_big(std::get<BigInt>(v));
    return json_poly(std::get<IntPolynomial>(v));
}

inline Json to_json(const FactorResult& f) {
    Json factors = Json::array();
    for (const FactorEntry& e : f.factors) {
        factors.push_back(Json{{"prime", json_big(e.prime)},
                               {"multiplicity", e.multiplicity}});
    }
    return Json{{"factors", std::move(factors)},
                {"residual", json_big(f.residual)},
                {"complete", f.complete()},
                {"repeated_factor", f.has_repeated_factor()}};
}

inline Json to_json(const SpectralCertificate& c) {
    return Json{{"graph", c.graph_id},
                {"order", c.order},
                {"det_walk_matrix", json_big(c.det_wq)},
                {"exponent_rule", exponent_rule_name(c.rule)},
                {"exponent", c.exponent},
                {"reduced_integral", c.reduced_integral},
                {"reduced", json_big(c.reduced)},
                {"factorization", to_json(c.factorization)},
                {"verdict", verdict_name(c.verdict)},
                {"a0_q", json_big(c.a0_q)},
                {"a0_adjacency", json_big(c.a0_adjacency)},
                {"note", c.note}};
}

inline Json to_json(const IdentityRecord& r) {
    return Json{{"index", r.index},
                {"aux", r.aux},
                {"holds", r.holds},
                {"lhs", json_value(r.lhs)},
                {"rhs", json_value(r.rhs)}};
}

inline Json to_json(const VerdictReport& v) {
    Json records = Json::array();
    for (const IdentityRecord& r : v.records) records.push_back(to_json(r));
    return Json{{"identity", v.identity},
                {"index_begin", v.index_begin},
                {"index_end", v.index_end},
                {"all_hold", v.all_hold},
                {"records", std::move(records)}};
}

inline Json to_json(const TheoremCheck& t) {
    return Json{{"theorem", t.theorem},
                {"graph", t.graph_id},
                {"k", t.k},
                {"t", t.t},
                {"applicable", t.applicable},
                {"precondition_note", t.precondition_note},
                {"holds", t.holds},
                {"sign", t.sign},
                {"lhs", json_value(t.lhs)},
                {"rhs", json_value(t.rhs)}};
}

inline Json to_json(const SeedCandidate& c) {
    return Json{{"graph", c.graph_id},
                {"det_walk_matrix", json_big(c.det_wq)},
                {"a0", json_big(c.a0)},
                {"det_clause", c.det_clause},
                {"a0_clause", c.a0_clause}};
}

inline Json to_json(const SeedScanReport& r) {
    Json seeds = Json::array();
    for (const SpectralCertificate& c : r.seeds) seeds.push_back(to_json(c));
    Json misses = Json::array();
    for (const SeedCandidate& c : r.near_misses) misses.push_back(to_json(c));
    return Json{{"order", r.order},
                {"applicable", r.applicable},
                {"precondition_note", r.precondition_note},
                {"catalog", r.catalog_description},
                {"catalog_hash", r.catalog_hash},
                {"classes_scanned", r.classes_scanned},
                {"seeds", std::move(seeds)},
                {"near_misses", std::move(misses)}};
}

inline Json to_json(const TwoAdicSurvey& s) {
    Json hist = Json::object();
    for (const auto& [v, count] : s.valuation_histogram)
        hist[std::to_string(v)] = count;
    Json a0s = Json::object();
    for (const auto& [value, count] : s.a0_histogram) a0s[dec(value)] = count;
    Json j{{"order", s.order},
           {"catalog", s.catalog_description},
           {"catalog_hash", s.catalog_hash},
           {"classes_scanned", s.classes_scanned},
           {"valuation_histogram", std::move(hist)},
           {"infinite_valuation_count", s.infinite_count},
           {"a0_histogram", std::move(a0s)}};
    if (s.min_valuation)
        j["min_valuation"] = *s.min_valuation;
    else
        j["min_valuation"] = nullptr;
    return j;
}

inline Json to_json(const MateReport& m) {
    return Json{{"subject", m.subject_id},
                {"order", m.order},
                {"scope", m.scope},
                {"catalog_hash", m.catalog_hash},
                {"catalog_exhaustive", m.catalog_exhaustive},
                {"mates", m.mates},
                {"dgqs_within_scope", m.dgqs_within_scope()}};
}

// Every run publishes one of these next to its results. Inputs, parameters,
// and versions only; deliberately no timestamps or host details, so equal
// inputs give byte-identical bundles.
struct Manifest {
    std::string subcommand;
    std::vector<std::string> inputs;
    std::map<std::string, std::string> parameters;

    bool operator==(const Manifest&) const = default;
};

inline Json to_json(const Manifest& m) {
    Json params = Json::object();
    for (const auto& [key, value] : m.parameters) params[key] = value;
    return Json{{"tool", kToolName},
                {"version", kToolVersion},
                {"subcommand", m.subcommand},
                {"inputs", m.inputs},
                {"parameters", std::move(params)}};
}

// Short content address for manifest references inside JSONL records.
inline std::string manifest_ref(const Manifest& m) {
    return detail::hash_to_hex(
        detail::fnv1a64(14695981039346656037ull, to_json(m).dump()));
}

// Keyed JSONL store with load-merge-rewrite semantics: reruns replace the
// records whose keys they regenerate and leave everything else in place.
// Lines hold {"key": {...}, "value": ..., "manifest_ref": "..."} and the file
// is rewritten sorted by serialized key, so equal content means equal bytes.
class JsonlStore {
  public:
    static Json make_key(const std::string& graph, const std::string& check,
                         Json params) {
        // Canonical key layout; nlohmann::json objects sort their members,
        // which keeps the serialized key stable.
        nlohmann::json key;
        key["graph"] = graph;
        key["check"] = check;
        key["params"] = nlohmann::json::parse(params.dump());
        return Json::parse(key.dump());
    }

    void upsert(const Json& key, Json value, const std::string& ref) {
        records_[nlohmann::json::parse(key.dump()).dump()] =
            Json{{"key", key}, {"value", std::move(value)},
                 {"manifest_ref", ref}};
    }

    void load(const std::string& path) {
        std::ifstream in(path);
        if (!in) return; // a missing store is an empty store
        std::string line;
        long line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty()) continue;
            Json rec;
            try {
                rec = Json::parse(line);
            } catch (const nlohmann::json::parse_error&) {
                throw ParseError(path + " line " + std::to_string(line_no) +
                                     ": not a JSON record",
                                 0);
            }
            if (!rec.contains("key"))
                throw ParseError(path + " line " + std::to_string(line_no) +
                                     ": record has no key",
                                 0);
            records_[nlohmann::json::parse(rec["key"].dump()).dump()] = rec;
        }
    }

    void write(const std::string& path) const {
        std::ofstream out(path, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write store: " + path);
        for (const auto& [key, rec] : records_) out << rec.dump() << "\n";
    }

    std::size_t size() const { return records_.size(); }
    const std::map<std::string, Json>& records() const { return records_; }

  private:
    // Sorted-key map: iteration order is the file order.
    std::map<std::string, Json> records_;
};

} // namespace qspectra
