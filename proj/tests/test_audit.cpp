#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>

#include "qspectra/audit.hpp"

using namespace qspectra;

TEST_CASE("quick audit passes every item", "[audit]") {
    const AuditReport report = run_audit(true);
    CHECK(report.quick);
    CHECK(report.all_must_pass());
    for (const AuditItem& item : report.items) {
        INFO(item.id << ": " << item.summary);
        CHECK(item.passed);
        CHECK(item.must_pass);
        CHECK_FALSE(item.summary.empty());
    }
}

TEST_CASE("audit covers the full checklist", "[audit]") {
    const AuditReport report = run_audit(true);
    const std::set<std::string> expected = {
        "det-formula-sweep",  "qcharpoly-factorization",
        "path-charpoly-b",    "identities-fs",
        "identities-fs-even", "identities-cp",
        "identities-zero",    "identities-shift",
        "identities-ap",      "identities-fp",
        "dgqs-cross-validation", "known-mate-k13",
        "enumeration-oracle", "seed-scan",
        "determinant-oracle", "resultant-oracle",
        "graph6-roundtrip"};
    std::set<std::string> seen;
    for (const AuditItem& item : report.items) seen.insert(item.id);
    CHECK(seen == expected);
    CHECK(report.items.size() == expected.size());

    CHECK(report.find("known-mate-k13") != nullptr);
    CHECK(report.find("no-such-item") == nullptr);

    // The raw evidence rides along: identity verdicts for all six families,
    // one scan and one survey per even order in scope.
    CHECK(report.identity_verdicts.size() == 9);
    CHECK(report.seed_scans.size() == 2);
    CHECK(report.surveys.size() == 2);
}

TEST_CASE("audit runs are deterministic", "[audit]") {
    const AuditReport a = run_audit(true);
    const AuditReport b = run_audit(true);
    CHECK(a == b);
}

TEST_CASE("adjudicated items describe their findings", "[audit]") {
    const AuditReport report = run_audit(true);
    const AuditItem* fp = report.find("identities-fp");
    REQUIRE(fp != nullptr);
    CHECK(fp->summary.find("(-1)^{k-1}") != std::string::npos);
    const AuditItem* seeds = report.find("seed-scan");
    REQUIRE(seeds != nullptr);
    CHECK(seeds->summary.find("no graph satisfies") != std::string::npos);
}
