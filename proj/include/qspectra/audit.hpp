#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qspectra/bigint.hpp"
#include "qspectra/canonical.hpp"
#include "qspectra/certify.hpp"
#include "qspectra/enumerate.hpp"
#include "qspectra/errors.hpp"
#include "qspectra/families.hpp"
#include "qspectra/graph.hpp"
#include "qspectra/identities.hpp"
#include "qspectra/matrix.hpp"
#include "qspectra/oracles.hpp"
#include "qspectra/polynomial.hpp"
#include "qspectra/search.hpp"
#include "qspectra/theorems.hpp"

namespace qspectra {

struct AuditItem {
    std::string id;
    bool must_pass = true;
    bool passed = false;
    std::string summary;

    bool operator==(const AuditItem&) const = default;
};

// The full verification bundle: pass/fail items plus the raw reports they
// were judged from, so a reader can re-adjudicate every call.
struct AuditReport {
    bool quick = false;
    std::vector<AuditItem> items;
    std::vector<VerdictReport> identity_verdicts;
    std::vector<SeedScanReport> seed_scans;
    std::vector<TwoAdicSurvey> surveys;
    std::vector<TheoremCheck> tower_checks;

    bool all_must_pass() const {
        for (const AuditItem& item : items)
            if (item.must_pass && !item.passed) return false;
        return true;
    }

    const AuditItem* find(const std::string& id) const {
        for (const AuditItem& item : items)
            if (item.id == id) return &item;
        return nullptr;
    }

    bool operator==(const AuditReport&) const = default;
};

namespace detail {

inline void audit_det_formula(AuditReport& out, int n_max) {
    long checks = 0;
    long failures = 0;
    std::string first_failure;
    for (int n = 1; n <= n_max; ++n) {
        for (const Graph& g : GraphCatalog::built_in(n).graphs()) {
            for (int k : {2, 3}) {
                const TheoremCheck c = verify_det_formula(g, k);
                ++checks;
                if (!c.holds) {
                    ++failures;
                    if (first_failure.empty()) {
                        first_failure = " first failure: graph " + c.graph_id +
                                        " k=" + std::to_string(k);
                    }
                }
            }
        }
    }
    std::ostringstream s;
    s << "walk-determinant product formula exact on every class with n <= "
      << n_max << ", k in {2,3}: " << checks << " checks, " << failures
      << " failures" << first_failure;
    out.items.push_back(
        {"det-formula-sweep", true, failures == 0, s.str()});
}

inline void audit_qcharpoly(AuditReport& out, int n_max, int k_max) {
    long checks = 0;
    long failures = 0;
    for (int n = 1; n <= n_max; ++n) {
        for (const Graph& g : GraphCatalog::built_in(n).graphs()) {
            for (int k = 2; k <= k_max; ++k) {
                ++checks;
                if (!verify_qcharpoly_factorization(g, k).holds) ++failures;
            }
        }
    }
    std::ostringstream s;
    s << "Q-characteristic polynomial factorization exact on every class "
         "with n <= "
      << n_max << ", k in {2.." << k_max << "}: " << checks << " checks, "
      << failures << " failures";
    out.items.push_back(
        {"qcharpoly-factorization", true, failures == 0, s.str()});
}

inline void audit_path_charpoly(AuditReport& out, int k_max) {
    // k = 1 is the known boundary where the composition degenerates: the
    // one-vertex path has chi_Q = t while b_1 = t - 1.
    long failures = 0;
    for (int k = 2; k <= k_max; ++k) {
        if (char_poly(q_matrix(path_graph(k))) != gen_b(k)) ++failures;
    }
    std::ostringstream s;
    s << "chi_Q(P_k) = b_k for 2 <= k <= " << k_max << ": " << failures
      << " failures";
    out.items.push_back({"path-charpoly-b", true, failures == 0, s.str()});
}

// The identity audit is an adjudication: the items pass when the machine
// verdicts match the established readings, including the two checks that are
// expected to fail as printed.
inline void audit_identities(AuditReport& out, int s_max, int i_max,
                             int k_max) {
    auto fs = check_fs(1, s_max);
    auto cp = check_cp(2, std::max(2, s_max / 2));
    auto zero = check_zero(2, i_max);
    auto shift = check_shift_claim(i_max);
    auto ap = check_ap(2, k_max, {-3, -2, -1, 0, 1, 2, 3});
    auto fp = check_fp(2, k_max);

    const VerdictReport& fs_odd = fs[0];
    const VerdictReport& fs_even = fs[1];
    const VerdictReport& cp_left = cp[0];
    const VerdictReport& cp_right = cp[1];

    out.items.push_back(
        {"identities-fs", true, fs_odd.all_hold,
         "f_{2k+1} = a_k^2 holds for every odd index through " +
             std::to_string(s_max) + "; even case adjudicated separately"});

    bool even_all_fail = !fs_even.records.empty();
    for (const IdentityRecord& r : fs_even.records)
        even_all_fail = even_all_fail && !r.holds;
    out.items.push_back(
        {"identities-fs-even", true, even_all_fail,
         "f_{2k} = t*c_k fails at every even index in range, as the hand "
         "expansion of f_6 predicts; witnesses recorded"});

    bool cp_pattern = cp_right.all_hold && !cp_left.records.empty();
    for (const IdentityRecord& r : cp_left.records)
        cp_pattern = cp_pattern && (r.holds == (r.index == 2));
    out.items.push_back(
        {"identities-cp", true, cp_pattern,
         "t*c_{s-1} = b_s holds only at s = 2; the defining right-hand "
         "recurrence holds everywhere"});

    out.items.push_back({"identities-zero", true, zero[0].all_hold,
                         "squarefree part of f_i divides b_i for 2 <= i <= " +
                             std::to_string(i_max)});

    out.items.push_back(
        {"identities-shift", true, shift[0].all_hold,
         "shifted-index product identity holds for k <= " +
             std::to_string(i_max) + " including the boundary i = k+1"});

    out.items.push_back(
        {"identities-ap", true, ap[0].all_hold,
         "res(b_k - lambda*a_{k-1}, a_{k-1}) = (-1)^{k(k-1)/2} independent "
         "of lambda, k <= " +
             std::to_string(k_max)});

    const VerdictReport& fp_printed = fp[0];
    const VerdictReport& fp_alt = fp[1];
    bool printed_all_fail = !fp_printed.records.empty();
    for (const IdentityRecord& r : fp_printed.records)
        printed_all_fail = printed_all_fail && !r.holds;
    out.items.push_back(
        {"identities-fp", true, printed_all_fail && fp_alt.all_hold,
         "res(f_k, a_{k-1}) matches (-1)^{k-1} uniformly for k <= " +
             std::to_string(k_max) +
             " and never the printed (-1)^k; the sign is adjudicated to "
             "(-1)^{k-1}"});

    for (auto& v : fs) out.identity_verdicts.push_back(std::move(v));
    for (auto& v : cp) out.identity_verdicts.push_back(std::move(v));
    for (auto& v : zero) out.identity_verdicts.push_back(std::move(v));
    for (auto& v : shift) out.identity_verdicts.push_back(std::move(v));
    for (auto& v : ap) out.identity_verdicts.push_back(std::move(v));
    for (auto& v : fp) out.identity_verdicts.push_back(std::move(v));
}

inline void audit_cross_validation(AuditReport& out, int n) {
    const GraphCatalog cat = GraphCatalog::built_in(n);
    const auto groups = find_all_mate_groups(cat);
    long certified = 0;
    long violations = 0;
    for (std::size_t i = 0; i < cat.size(); ++i) {
        if (certify_dgqs(cat.graph(i)).verdict != DgqsVerdict::certified)
            continue;
        ++certified;
        for (const auto& group : groups) {
            for (const std::string& id : group) {
                if (id == cat.id(i)) ++violations;
            }
        }
    }
    std::ostringstream s;
    s << "of " << cat.size() << " classes at n = " << n << ", " << certified
      << " are certified and none sits in any of the " << groups.size()
      << " generalized-Q-cospectral groups (" << violations << " violations)";
    out.items.push_back(
        {"dgqs-cross-validation", true, violations == 0, s.str()});
}

inline void audit_known_mate(AuditReport& out) {
    const MateReport r = brute_force_dgqs(star_graph(4));
    const std::string expected =
        canonical_form(disjoint_union(complete_graph(3), Graph(1)));
    const bool ok = r.mates.size() == 1 && r.mates.front() == expected;
    out.items.push_back(
        {"known-mate-k13", true, ok,
         "the claw's only generalized-Q-cospectral mate among all 11 classes "
         "on 4 vertices is the triangle plus an isolated vertex"});
}

inline void audit_enumeration(AuditReport& out, bool quick) {
    const std::vector<int> orders = quick ? std::vector<int>{4}
                                          : std::vector<int>{4, 5, 6};
    bool ok = true;
    std::ostringstream s;
    s << "augmentation vs labeled-scan class counts:";
    for (int n : orders) {
        const long scan = labeled_scan_class_count(n);
        const long built = static_cast<long>(GraphCatalog::built_in(n).size());
        ok = ok && scan == built && scan == kClassCounts[n - 1];
        s << " n=" << n << ":" << scan << "/" << built;
    }
    out.items.push_back({"enumeration-oracle", true, ok, s.str()});
}

inline void audit_seed_scan(AuditReport& out, int n_max) {
    bool ok = true;
    long seeds_found = 0;
    std::ostringstream s;
    for (int n = 2; n <= n_max; n += 2) {
        SeedScanReport scan = find_seeds(n);
        TwoAdicSurvey survey = two_adic_survey(n);
        ok = ok && scan.applicable &&
             scan.classes_scanned == static_cast<long>(kClassCounts[n - 1]);
        seeds_found += static_cast<long>(scan.seeds.size());
        s << " n=" << n << ": " << scan.seeds.size() << " seeds, "
          << scan.near_misses.size() << " near misses, min valuation ";
        if (survey.min_valuation)
            s << *survey.min_valuation;
        else
            s << "infinite";
        s << ";";
        // Any seed must carry the tower consequences exactly while the tower
        // stays within exact-arithmetic range.
        for (const SpectralCertificate& cert : scan.seeds) {
            const Graph g = parse_graph6(cert.graph_id);
            for (int t = 1; n * (1 << t) <= 24; ++t) {
                TheoremCheck td = verify_tower_det(g, 2, t);
                TheoremCheck ct = verify_constant_term(g, 2, t);
                ok = ok && td.applicable && td.holds && ct.applicable &&
                     ct.holds;
                out.tower_checks.push_back(std::move(td));
                out.tower_checks.push_back(std::move(ct));
            }
        }
        out.seed_scans.push_back(std::move(scan));
        out.surveys.push_back(std::move(survey));
    }
    std::ostringstream head;
    if (seeds_found == 0) {
        head << "exhaustive over all even orders up to " << n_max
             << ": no graph satisfies the seed hypothesis;";
    } else {
        head << "exhaustive over all even orders up to " << n_max << ": "
             << seeds_found
             << " seed(s) found and their towers check out exactly;";
    }
    out.items.push_back(
        {"seed-scan", true, ok, head.str() + s.str()});
}

inline void audit_determinant_oracle(AuditReport& out, int rounds) {
    std::mt19937_64 rng(0x5eed0001ull);
    std::uniform_int_distribution<int> size_dist(2, 6);
    std::uniform_int_distribution<int> entry_dist(-9, 9);
    long failures = 0;
    for (int round = 0; round < rounds; ++round) {
        const int n = size_dist(rng);
        ExactMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = entry_dist(rng);
        if (determinant(m) != cofactor_determinant(m)) ++failures;
    }
    std::ostringstream s;
    s << rounds
      << " random matrices: fraction-free elimination agrees with the "
         "cofactor oracle ("
      << failures << " disagreements)";
    out.items.push_back(
        {"determinant-oracle", true, failures == 0, s.str()});
}

inline IntPolynomial random_poly(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg_dist(1, max_deg);
    std::uniform_int_distribution<long> coeff_dist(-9, 9);
    const int deg = deg_dist(rng);
    std::vector<BigInt> cs(static_cast<std::size_t>(deg) + 1);
    for (auto& c : cs) c = coeff_dist(rng);
    while (cs.back() == 0) cs.back() = coeff_dist(rng);
    return IntPolynomial(cs);
}

inline void audit_resultant_oracle(AuditReport& out, int rounds) {
    std::mt19937_64 rng(0x5eed0002ull);
    long failures = 0;
    for (int round = 0; round < rounds; ++round) {
        if (round % 2 == 0) {
            // Sylvester agreement plus swap antisymmetry.
            const IntPolynomial f = random_poly(rng, 5);
            const IntPolynomial g = random_poly(rng, 5);
            const BigInt r = resultant(f, g);
            if (r != sylvester_resultant(f, g)) ++failures;
            BigInt swapped = resultant(g, f);
            if ((f.degree() * g.degree()) % 2 != 0) swapped = -swapped;
            if (r != swapped) ++failures;
        } else {
            // Multiplicativity in the second argument.
            const IntPolynomial f = random_poly(rng, 4);
            const IntPolynomial g = random_poly(rng, 3);
            const IntPolynomial h = random_poly(rng, 3);
            if (resultant(f, g * h) != resultant(f, g) * resultant(f, h))
                ++failures;
        }
    }
    std::ostringstream s;
    s << rounds
      << " random pairs: subresultant value matches the Sylvester oracle, "
         "swap antisymmetry, and product law ("
      << failures << " disagreements)";
    out.items.push_back({"resultant-oracle", true, failures == 0, s.str()});
}

inline void audit_graph6_roundtrip(AuditReport& out, int n_max) {
    long checks = 0;
    long failures = 0;
    for (int n = 1; n <= n_max; ++n) {
        for (const std::string& id : GraphCatalog::built_in(n).ids()) {
            ++checks;
            if (to_graph6(parse_graph6(id)) != id) ++failures;
        }
    }
    std::ostringstream s;
    s << "graph6 decode/encode round trip over all " << checks
      << " classes with n <= " << n_max << " (" << failures << " failures)";
    out.items.push_back({"graph6-roundtrip", true, failures == 0, s.str()});
}

} // namespace detail

// Runs the complete verification bundle. quick mode keeps every item but
// shrinks the sweeps; scopes are recorded in the item summaries.
inline AuditReport run_audit(bool quick = false) {
    AuditReport report;
    report.quick = quick;
    detail::audit_det_formula(report, quick ? 4 : 6);
    detail::audit_qcharpoly(report, quick ? 3 : 5, quick ? 3 : 4);
    detail::audit_path_charpoly(report, quick ? 6 : 12);
    detail::audit_identities(report, quick ? 11 : 41, quick ? 8 : 16,
                             quick ? 6 : 15);
    detail::audit_cross_validation(report, quick ? 4 : 6);
    detail::audit_known_mate(report);
    detail::audit_enumeration(report, quick);
    detail::audit_seed_scan(report, quick ? 4 : 8);
    detail::audit_determinant_oracle(report, quick ? 50 : 200);
    detail::audit_resultant_oracle(report, quick ? 30 : 100);
    detail::audit_graph6_roundtrip(report, quick ? 4 : 6);
    return report;
}

} // namespace qspectra
