#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qspectra/bigint.hpp"
#include "qspectra/canonical.hpp"
#include "qspectra/certify.hpp"
#include "qspectra/enumerate.hpp"
#include "qspectra/errors.hpp"
#include "qspectra/graph.hpp"
#include "qspectra/matrix.hpp"
#include "qspectra/parallel.hpp"
#include "qspectra/polynomial.hpp"

namespace qspectra {

namespace detail {

// (det W_Q, constant term of the Q-characteristic polynomial); the pair every
// scan in this header keys on.
inline std::pair<BigInt, BigInt> walk_det_and_a0(const Graph& g) {
    const ExactMatrix q = q_matrix(g);
    const BigInt det = determinant(walk_matrix(q));
    const IntPolynomial chi = char_poly(q);
    return {det, chi.coeff(0)};
}

inline std::string graph_identifier(const Graph& g) {
    return g.order() <= kCanonicalMaxOrder ? canonical_form(g) : to_graph6(g);
}

} // namespace detail

// One catalog entry that met part of the seed hypothesis. records the clause
// outcome so near-misses stay visible in diagnostics.
struct SeedCandidate {
    std::string graph_id;
    BigInt det_wq;
    BigInt a0;
    bool det_clause = false; // |det W_Q| == 2^((3n-2)/2)
    bool a0_clause = false;  // |a_0| == 2

    bool operator==(const SeedCandidate&) const = default;
};

struct SeedScanReport {
    int order = 0;
    bool applicable = false;
    std::string precondition_note;
    std::string catalog_description;
    std::string catalog_hash;
    long classes_scanned = 0;
    // Both clauses met, with a full certificate each.
    std::vector<SpectralCertificate> seeds;
    // Exactly one clause met; diagnostics for why the hypothesis stays empty.
    std::vector<SeedCandidate> near_misses;

    bool operator==(const SeedScanReport&) const = default;
};

// Scans a catalog for seeds of the tower determinant pattern: even order,
// |det W_Q| = 2^((3n-2)/2) and |a_0| = 2. An empty seed list is a legitimate
// finding, not a failure; near-misses document how close the catalog comes.
inline SeedScanReport find_seeds(const GraphCatalog& catalog,
                                 ExponentRule rule = ExponentRule::lemma) {
    SeedScanReport report;
    report.order = catalog.order();
    report.catalog_description = catalog.description();
    report.catalog_hash = catalog.content_hash();
    report.classes_scanned = static_cast<long>(catalog.size());
    if (catalog.order() % 2 != 0) {
        report.applicable = false;
        report.precondition_note =
            "seed hypothesis requires even order so that (3n-2)/2 is an "
            "integer; order " +
            std::to_string(catalog.order()) + " is odd";
        return report;
    }
    report.applicable = true;
    const long exponent = (3L * catalog.order() - 2) / 2;
    const BigInt target = pow2(static_cast<unsigned long>(exponent));

    const std::size_t count = catalog.size();
    std::vector<std::pair<BigInt, BigInt>> stats(count);
    parallel_for(count, [&](std::size_t i) {
        stats[i] = detail::walk_det_and_a0(catalog.graph(i));
    });
    for (std::size_t i = 0; i < count; ++i) {
        const auto& [det, a0] = stats[i];
        const bool det_clause = abs(det) == target;
        const bool a0_clause = abs(a0) == 2;
        if (det_clause && a0_clause) {
            report.seeds.push_back(certify_dgqs(catalog.graph(i),
                                                FactorBudget{}, rule));
        } else if (det_clause || a0_clause) {
            report.near_misses.push_back(
                {catalog.id(i), det, a0, det_clause, a0_clause});
        }
    }
    return report;
}

inline SeedScanReport find_seeds(int n,
                                 ExponentRule rule = ExponentRule::lemma) {
    return find_seeds(GraphCatalog::built_in(n), rule);
}

struct TwoAdicSurvey {
    int order = 0;
    std::string catalog_description;
    std::string catalog_hash;
    long classes_scanned = 0;
    // nu_2(det W_Q) -> class count, for the nonzero determinants.
    std::map<long, long> valuation_histogram;
    // det W_Q = 0 has infinite valuation; bucketed separately.
    long infinite_count = 0;
    std::map<BigInt, long> a0_histogram;
    std::optional<long> min_valuation;

    bool operator==(const TwoAdicSurvey&) const = default;
};

// Histogram of 2-adic valuations of det W_Q across a catalog, alongside the
// distribution of Q-characteristic constant terms. The minimum valuation is
// the quantity the seed hypothesis bounds from below.
inline TwoAdicSurvey two_adic_survey(const GraphCatalog& catalog) {
    TwoAdicSurvey survey;
    survey.order = catalog.order();
    survey.catalog_description = catalog.description();
    survey.catalog_hash = catalog.content_hash();
    survey.classes_scanned = static_cast<long>(catalog.size());

    const std::size_t count = catalog.size();
    std::vector<std::pair<BigInt, BigInt>> stats(count);
    parallel_for(count, [&](std::size_t i) {
        stats[i] = detail::walk_det_and_a0(catalog.graph(i));
    });
    for (const auto& [det, a0] : stats) {
        if (const auto val = v2(det)) {
            const long v = static_cast<long>(*val);
            ++survey.valuation_histogram[v];
            if (!survey.min_valuation || v < *survey.min_valuation)
                survey.min_valuation = v;
        } else {
            ++survey.infinite_count;
        }
        ++survey.a0_histogram[a0];
    }
    return survey;
}

inline TwoAdicSurvey two_adic_survey(int n) {
    return two_adic_survey(GraphCatalog::built_in(n));
}

struct MateReport {
    std::string subject_id;
    int order = 0;
    // What the mate search actually covered; "DGQS" below is always relative
    // to this scope.
    std::string scope;
    std::string catalog_hash;
    bool catalog_exhaustive = false;
    std::vector<std::string> mates;

    bool dgqs_within_scope() const { return mates.empty(); }

    bool operator==(const MateReport&) const = default;
};

// Finds every catalog member sharing the generalized Q-spectrum of g: equal
// Q-characteristic polynomial and equal Q-characteristic polynomial of the
// complement. Isomorphic copies of g itself never count as mates.
inline MateReport find_q_cospectral_mates(const Graph& g,
                                          const GraphCatalog& catalog) {
    if (g.order() != catalog.order()) {
        throw DomainError("mate search needs matching orders: subject has " +
                          std::to_string(g.order()) + ", catalog has " +
                          std::to_string(catalog.order()));
    }
    MateReport report;
    report.subject_id = detail::graph_identifier(g);
    report.order = g.order();
    report.scope = catalog.description();
    report.catalog_hash = catalog.content_hash();
    report.catalog_exhaustive = catalog.is_exhaustive();

    const IntPolynomial chi = char_poly(q_matrix(g));
    const IntPolynomial chi_co = char_poly(q_matrix(g.complement()));

    const std::size_t count = catalog.size();
    std::vector<char> matches(count, 0);
    parallel_for(count, [&](std::size_t i) {
        const Graph& h = catalog.graph(i);
        if (char_poly(q_matrix(h)) != chi) return;
        if (char_poly(q_matrix(h.complement())) != chi_co) return;
        matches[i] = 1;
    });
    for (std::size_t i = 0; i < count; ++i) {
        if (!matches[i]) continue;
        const Graph& h = catalog.graph(i);
        const bool same_class = g.order() <= kCanonicalMaxOrder
                                    ? is_isomorphic(g, h)
                                    : catalog.id(i) == report.subject_id;
        if (!same_class) report.mates.push_back(catalog.id(i));
    }
    return report;
}

// Exhaustive DGQS decision over the built-in catalog of g's order. The
// verdict is definitive for that order because the catalog is complete.
inline MateReport brute_force_dgqs(const Graph& g) {
    return find_q_cospectral_mates(g, GraphCatalog::built_in(g.order()));
}

// Groups an entire catalog by generalized Q-spectrum and returns the groups
// with at least two members (each group lists mutually cospectral mates).
// Groups come back sorted by their first id; ids inside keep catalog order.
inline std::vector<std::vector<std::string>> find_all_mate_groups(
    const GraphCatalog& catalog) {
    const std::size_t count = catalog.size();
    std::vector<std::pair<std::string, std::string>> keys(count);
    parallel_for(count, [&](std::size_t i) {
        const Graph& h = catalog.graph(i);
        keys[i].first = char_poly(q_matrix(h)).str();
        keys[i].second = char_poly(q_matrix(h.complement())).str();
    });
    std::map<std::pair<std::string, std::string>, std::vector<std::string>>
        groups;
    for (std::size_t i = 0; i < count; ++i)
        groups[keys[i]].push_back(catalog.id(i));
    std::vector<std::vector<std::string>> result;
    for (auto& [key, ids] : groups) {
        if (ids.size() >= 2) result.push_back(std::move(ids));
    }
    std::sort(result.begin(), result.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return result;
}

} // namespace qspectra
