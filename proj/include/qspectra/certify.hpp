#pragma once

#include <string>

#include "qspectra/bigint.hpp"
#include "qspectra/canonical.hpp"
#include "qspectra/factor.hpp"
#include "qspectra/graph.hpp"
#include "qspectra/matrix.hpp"

namespace qspectra {

enum class ExponentRule {
    // floor((3n-2)/2), the form the determinant arithmetic coheres with.
    lemma,
    // floor((n-3)/2), the competing printed form; selectable for comparison.
    intro,
};

inline int floor_div2(int a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); }

inline int criterion_exponent(ExponentRule rule, int n) {
    return rule == ExponentRule::lemma ? floor_div2(3 * n - 2) : floor_div2(n - 3);
}

inline std::string exponent_rule_name(ExponentRule rule) {
    return rule == ExponentRule::lemma ? "floor((3n-2)/2)" : "floor((n-3)/2)";
}

enum class DgqsVerdict { certified, not_certified, unknown };

inline std::string verdict_name(DgqsVerdict v) {
    switch (v) {
        case DgqsVerdict::certified: return "certified-DGQS";
        case DgqsVerdict::not_certified: return "not-certified";
        default: return "unknown";
    }
}

struct SpectralCertificate {
    std::string graph_id;
    int order = 0;
    BigInt det_wq;
    ExponentRule rule = ExponentRule::lemma;
    int exponent = 0;
    bool reduced_integral = false;
    // reduced * 2^exponent = det_wq whenever reduced_integral.
    BigInt reduced;
    FactorResult factorization;
    DgqsVerdict verdict = DgqsVerdict::not_certified;
    // Diagnostics: constant terms of the signless-Laplacian and adjacency
    // characteristic polynomials.
    BigInt a0_q;
    BigInt a0_adjacency;
    std::string note;

    bool operator==(const SpectralCertificate&) const = default;
};

// Reduction-and-verdict arithmetic, starting from a given determinant. The
// graph fields are left for the caller.
inline SpectralCertificate certify_from_determinant(const BigInt& det, int n,
                                                    const FactorBudget& budget = {},
                                                    ExponentRule rule = ExponentRule::lemma) {
    SpectralCertificate cert;
    cert.order = n;
    cert.det_wq = det;
    cert.rule = rule;
    cert.exponent = criterion_exponent(rule, n);
    cert.note = "criterion exponent " + exponent_rule_name(rule) +
                "; the two printed variants floor((3n-2)/2) and floor((n-3)/2) disagree and "
                "both are selectable";

    if (det == 0) {
        cert.reduced_integral = true;
        cert.reduced = 0;
        cert.verdict = DgqsVerdict::not_certified;
        return cert;
    }
    if (cert.exponent >= 0) {
        const auto val = v2(det);
        if (val.value() < static_cast<unsigned long>(cert.exponent)) {
            cert.reduced_integral = false;
            cert.verdict = DgqsVerdict::not_certified;
            return cert;
        }
        cert.reduced = shift_right(det, static_cast<unsigned long>(cert.exponent));
    } else {
        cert.reduced = det * pow2(static_cast<unsigned long>(-cert.exponent));
    }
    cert.reduced_integral = true;

    if (!is_odd(cert.reduced)) {
        cert.verdict = DgqsVerdict::not_certified;
        return cert;
    }
    cert.factorization = factorize(abs(cert.reduced), budget);
    if (cert.factorization.has_repeated_factor())
        cert.verdict = DgqsVerdict::not_certified;
    else if (cert.factorization.complete())
        cert.verdict = DgqsVerdict::certified;
    else
        cert.verdict = DgqsVerdict::unknown;
    return cert;
}

inline SpectralCertificate certify_dgqs(const Graph& g, const FactorBudget& budget = {},
                                        ExponentRule rule = ExponentRule::lemma) {
    const ExactMatrix q = q_matrix(g);
    const BigInt det = determinant(walk_matrix(q));
    SpectralCertificate cert = certify_from_determinant(det, g.order(), budget, rule);
    cert.graph_id = g.order() <= kCanonicalMaxOrder ? canonical_form(g) : to_graph6(g);
    cert.a0_q = char_poly(q).coeff(0);
    cert.a0_adjacency = char_poly(a_matrix(g)).coeff(0);
    return cert;
}

} // namespace qspectra
