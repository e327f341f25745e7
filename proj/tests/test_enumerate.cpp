#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "qspectra/canonical.hpp"
#include "qspectra/enumerate.hpp"
#include "qspectra/errors.hpp"
#include "qspectra/graph.hpp"

using namespace qspectra;

namespace {

long catalog_count_with_degrees(const GraphCatalog& cat,
                                const std::vector<int>& degs) {
    long count = 0;
    for (const Graph& g : cat.graphs())
        if (g.degree_sequence() == degs) ++count;
    return count;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path("/tmp/" + name) {
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("built-in catalogs carry the known class counts", "[enumerate]") {
    const long expected[] = {1, 2, 4, 11, 34, 156};
    for (int n = 1; n <= 6; ++n) {
        const GraphCatalog cat = GraphCatalog::built_in(n);
        CHECK(cat.order() == n);
        CHECK(cat.source() == CatalogSource::built_in);
        CHECK(cat.is_exhaustive());
        CHECK(static_cast<long>(cat.size()) == expected[n - 1]);
    }
}

TEST_CASE("built-in catalogs at orders 7 and 8", "[enumerate]") {
    CHECK(GraphCatalog::built_in(7).size() == 1044);
    CHECK(GraphCatalog::built_in(8).size() == 12346);
}

TEST_CASE("catalog entries are canonical, sorted, and self-consistent",
          "[enumerate]") {
    const GraphCatalog cat = GraphCatalog::built_in(5);
    REQUIRE(cat.size() == 34);
    for (std::size_t i = 0; i < cat.size(); ++i) {
        CHECK(to_graph6(cat.graph(i)) == cat.id(i));
        CHECK(canonical_form(cat.graph(i)) == cat.id(i));
        if (i > 0) CHECK(cat.id(i - 1) < cat.id(i));
    }
    // Same order and hash on every call.
    const GraphCatalog again = GraphCatalog::built_in(5);
    CHECK(again.ids() == cat.ids());
    CHECK(again.content_hash() == cat.content_hash());
    CHECK(cat.content_hash().size() == 16);
    CHECK(cat.content_hash() != GraphCatalog::built_in(4).content_hash());
}

TEST_CASE("labeled scan oracle agrees with augmentation up to order 6",
          "[enumerate][oracle]") {
    const long expected[] = {1, 2, 4, 11, 34, 156};
    for (int n = 1; n <= 6; ++n) {
        CHECK(labeled_scan_class_count(n) == expected[n - 1]);
        CHECK(labeled_scan_class_count(n) ==
              static_cast<long>(GraphCatalog::built_in(n).size()));
    }
    CHECK_THROWS_AS(labeled_scan_class_count(7), SizeError);
    CHECK_THROWS_AS(labeled_scan_class_count(0), DomainError);
}

TEST_CASE("stratified labeled scan validates orders 7 and 8",
          "[enumerate][oracle]") {
    // 2-regular graphs are disjoint unions of cycles, so the class counts
    // follow from the partitions of n into parts of size at least 3.
    const std::vector<int> two_reg7(7, 2);
    CHECK(labeled_scan_classes_with_degree_sequence(7, two_reg7) == 2);
    CHECK(catalog_count_with_degrees(GraphCatalog::built_in(7), two_reg7) == 2);

    const std::vector<int> two_reg8(8, 2);
    CHECK(labeled_scan_classes_with_degree_sequence(8, two_reg8) == 3);
    CHECK(catalog_count_with_degrees(GraphCatalog::built_in(8), two_reg8) == 3);

    // Stars are unique for their degree sequence.
    const std::vector<int> star8 = {7, 1, 1, 1, 1, 1, 1, 1};
    CHECK(labeled_scan_classes_with_degree_sequence(8, star8) == 1);
    CHECK(catalog_count_with_degrees(GraphCatalog::built_in(8), star8) == 1);

    // Cubic stratum: no independent literal here, only the cross-check
    // between the two enumeration strategies.
    const std::vector<int> cubic8(8, 3);
    const long by_scan = labeled_scan_classes_with_degree_sequence(8, cubic8);
    CHECK(by_scan ==
          catalog_count_with_degrees(GraphCatalog::built_in(8), cubic8));
    CHECK(by_scan > 0);

    // Odd degree sum or impossible degrees give empty strata.
    CHECK(labeled_scan_classes_with_degree_sequence(
              7, {2, 2, 2, 2, 2, 2, 1}) == 0);
    CHECK_THROWS_AS(
        labeled_scan_classes_with_degree_sequence(7, {7, 1, 1, 1, 1, 1, 1}),
        DomainError);
}

TEST_CASE("catalog order bounds", "[enumerate]") {
    CHECK_THROWS_AS(GraphCatalog::built_in(0), DomainError);
    CHECK_THROWS_AS(GraphCatalog::built_in(9), SizeError);
    CHECK_THROWS_WITH(GraphCatalog::built_in(9),
                      Catch::Matchers::ContainsSubstring("external catalog"));
}

TEST_CASE("external catalogs load, dedupe, and reject mixed orders",
          "[enumerate]") {
    // The star K_{1,3} centered at 3 instead of 0 must collapse onto the
    // canonical class; Cs appears twice on purpose.
    Graph relabeled_star(4);
    relabeled_star.add_edge(0, 3);
    relabeled_star.add_edge(1, 3);
    relabeled_star.add_edge(2, 3);
    const std::string star_text = to_graph6(relabeled_star);
    const std::string claw = canonical_form(star_graph(4));
    const std::string k4_text = to_graph6(complete_graph(4));

    TempFile file("qspectra_cat_ok.g6",
                  "Cs\n\n>>graph6<<Cs\r\n" + star_text + "\n" + k4_text + "\n");
    const GraphCatalog cat = GraphCatalog::from_graph6_file(file.path);
    CHECK(cat.order() == 4);
    CHECK(cat.source() == CatalogSource::external_file);
    CHECK_FALSE(cat.is_exhaustive());
    REQUIRE(cat.size() == 2);
    CHECK(cat.id(0) == claw);
    CHECK(cat.id(1) == canonical_form(complete_graph(4)));
    CHECK(cat.description().find(file.path) != std::string::npos);

    TempFile mixed("qspectra_cat_mixed.g6", "Cs\nA_\n");
    CHECK_THROWS_AS(GraphCatalog::from_graph6_file(mixed.path), DomainError);
    CHECK_THROWS_WITH(GraphCatalog::from_graph6_file(mixed.path),
                      Catch::Matchers::ContainsSubstring("line 2"));

    TempFile broken("qspectra_cat_broken.g6", "Cs\nC\n");
    CHECK_THROWS_AS(GraphCatalog::from_graph6_file(broken.path), ParseError);

    TempFile empty("qspectra_cat_empty.g6", "\n\n");
    CHECK_THROWS_AS(GraphCatalog::from_graph6_file(empty.path), DomainError);

    CHECK_THROWS_AS(GraphCatalog::from_graph6_file("/tmp/qspectra_no_such.g6"),
                    std::runtime_error);
}

TEST_CASE("frozen triangle text matches the canonical cycle id",
          "[enumerate]") {
    CHECK(canonical_form(parse_graph6("Bw")) == canonical_form(cycle_graph(3)));
}
