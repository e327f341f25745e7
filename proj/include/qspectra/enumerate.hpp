#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "qspectra/canonical.hpp"
#include "qspectra/errors.hpp"
#include "qspectra/graph.hpp"
#include "qspectra/parallel.hpp"

namespace qspectra {

enum class CatalogSource { built_in, external_file };

// Largest order for which the built-in exhaustive catalog is available.
inline constexpr int kCatalogMaxOrder = 8;

// Isomorphism class counts for orders 1..8, used as a sanity gate after
// enumeration. Any mismatch is a hard failure: it would mean the augmentation
// search or the canonicalizer dropped or duplicated a class.
inline constexpr long kClassCounts[kCatalogMaxOrder] = {1,    2,    4,    11,
                                                        34,   156,  1044, 12346};

namespace detail {

struct CatalogData {
    int order = 0;
    CatalogSource source = CatalogSource::built_in;
    std::string description;
    std::vector<std::string> ids;
    std::vector<Graph> graphs;
};

inline std::uint64_t fnv1a64(std::uint64_t h, const std::string& s) {
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hash_to_hex(std::uint64_t h) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

// Extends every representative of order m-1 by one new vertex attached along
// each of the 2^(m-1) possible neighborhoods, then dedupes canonically. Every
// class on m vertices shows up this way: delete any vertex of a candidate and
// the remainder is isomorphic to some parent representative.
inline std::vector<std::string> augment_level(const std::vector<Graph>& parents,
                                              int m) {
    const std::size_t masks = std::size_t{1} << (m - 1);
    const std::size_t total = parents.size() * masks;
    std::vector<std::string> texts(total);
    parallel_for(total, [&](std::size_t idx) {
        const Graph& parent = parents[idx / masks];
        const std::size_t mask = idx % masks;
        Graph g(m);
        for (int i = 0; i < m - 1; ++i) {
            const std::uint64_t nb = parent.neighbors(i);
            for (int j = i + 1; j < m - 1; ++j)
                if (nb >> j & 1ull) g.add_edge(i, j);
            if (mask >> i & 1u) g.add_edge(i, m - 1);
        }
        texts[idx] = canonical_form(g);
    });
    std::set<std::string> unique(texts.begin(), texts.end());
    return {unique.begin(), unique.end()};
}

inline std::shared_ptr<const CatalogData> built_in_data(int n) {
    static std::mutex guard;
    static std::map<int, std::shared_ptr<const CatalogData>> cache;
    {
        std::lock_guard<std::mutex> lock(guard);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    // Build every level up to n outside the lock; levels below n land in the
    // cache too, so repeated calls at mixed orders share the work.
    std::vector<std::vector<std::string>> levels(static_cast<std::size_t>(n));
    levels[0] = {to_graph6(Graph(1))};
    std::vector<Graph> parents = {Graph(1)};
    for (int m = 2; m <= n; ++m) {
        levels[static_cast<std::size_t>(m - 1)] = augment_level(parents, m);
        parents.clear();
        for (const std::string& text : levels[static_cast<std::size_t>(m - 1)])
            parents.push_back(parse_graph6(text));
    }
    std::lock_guard<std::mutex> lock(guard);
    for (int m = 1; m <= n; ++m) {
        if (cache.count(m)) continue;
        auto data = std::make_shared<CatalogData>();
        data->order = m;
        data->source = CatalogSource::built_in;
        data->ids = levels[static_cast<std::size_t>(m - 1)];
        if (data->ids.size() !=
            static_cast<std::size_t>(kClassCounts[m - 1])) {
            throw DomainError("built-in enumeration produced " +
                              std::to_string(data->ids.size()) +
                              " classes at order " + std::to_string(m) +
                              ", expected " +
                              std::to_string(kClassCounts[m - 1]));
        }
        data->graphs.reserve(data->ids.size());
        for (const std::string& text : data->ids)
            data->graphs.push_back(parse_graph6(text));
        std::ostringstream desc;
        desc << "built-in catalog of all " << data->ids.size()
             << " isomorphism classes on " << m << " vertices";
        data->description = desc.str();
        cache.emplace(m, std::move(data));
    }
    return cache.at(n);
}

} // namespace detail

// A deduplicated list of isomorphism class representatives sharing one order.
// Built-in catalogs are exhaustive for orders up to kCatalogMaxOrder; external
// catalogs come from graph6 line files and carry no completeness promise.
class GraphCatalog {
  public:
    static GraphCatalog built_in(int n) {
        if (n < 1) throw DomainError("catalog order must be at least 1");
        if (n > kCatalogMaxOrder) {
            throw SizeError("built-in enumeration stops at order " +
                            std::to_string(kCatalogMaxOrder) +
                            "; supply an external catalog file instead");
        }
        return GraphCatalog(detail::built_in_data(n));
    }

    static GraphCatalog from_graph6_lines(const std::vector<std::string>& lines,
                                          const std::string& source_name) {
        auto data = std::make_shared<detail::CatalogData>();
        data->source = CatalogSource::external_file;
        std::unordered_set<std::string> seen;
        long line_no = 0;
        for (const std::string& raw : lines) {
            ++line_no;
            std::string line = raw;
            while (!line.empty() && (line.back() == '\r' || line.back() == '\n' ||
                                     line.back() == ' '))
                line.pop_back();
            if (line.empty()) continue;
            Graph g(1);
            try {
                g = parse_graph6(line);
            } catch (const ParseError& e) {
                throw ParseError(source_name + " line " +
                                     std::to_string(line_no) + ": " + e.what(),
                                 e.offset());
            }
            if (data->order == 0) {
                data->order = g.order();
            } else if (g.order() != data->order) {
                throw DomainError(source_name + " line " +
                                  std::to_string(line_no) +
                                  ": order " + std::to_string(g.order()) +
                                  " differs from catalog order " +
                                  std::to_string(data->order));
            }
            // Canonical dedup where the canonicalizer reaches; textual dedup
            // beyond that (isomorphic duplicates may then survive).
            const std::string id = g.order() <= kCanonicalMaxOrder
                                       ? canonical_form(g)
                                       : to_graph6(g);
            if (!seen.insert(id).second) continue;
            data->ids.push_back(id);
            data->graphs.push_back(parse_graph6(id));
        }
        if (data->ids.empty())
            throw DomainError(source_name + ": no graphs found");
        std::ostringstream desc;
        desc << "external catalog " << source_name << " with "
             << data->ids.size() << " classes on " << data->order
             << " vertices";
        data->description = desc.str();
        return GraphCatalog(std::move(data));
    }

    static GraphCatalog from_graph6_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open catalog file: " + path);
        std::vector<std::string> lines;
        std::string line;
        while (std::getline(in, line)) lines.push_back(line);
        return from_graph6_lines(lines, path);
    }

    int order() const { return data_->order; }
    CatalogSource source() const { return data_->source; }
    const std::string& description() const { return data_->description; }
    std::size_t size() const { return data_->ids.size(); }
    const std::vector<Graph>& graphs() const { return data_->graphs; }
    const std::vector<std::string>& ids() const { return data_->ids; }
    const Graph& graph(std::size_t i) const { return data_->graphs.at(i); }
    const std::string& id(std::size_t i) const { return data_->ids.at(i); }

    bool is_exhaustive() const {
        return data_->source == CatalogSource::built_in;
    }

    // FNV-1a over the id lines; pins the exact catalog content in manifests.
    std::string content_hash() const {
        std::uint64_t h = 14695981039346656037ull;
        for (const std::string& id : data_->ids) {
            h = detail::fnv1a64(h, id);
            h = detail::fnv1a64(h, "\n");
        }
        return detail::hash_to_hex(h);
    }

  private:
    explicit GraphCatalog(std::shared_ptr<const detail::CatalogData> data)
        : data_(std::move(data)) {}

    std::shared_ptr<const detail::CatalogData> data_;
};

inline GraphCatalog enumerate_graphs(int n) { return GraphCatalog::built_in(n); }

namespace detail {

inline std::vector<std::pair<int, int>> edge_slots(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    return slots;
}

inline Graph graph_from_edge_mask(int n,
                                  const std::vector<std::pair<int, int>>& slots,
                                  std::uint64_t mask) {
    Graph g(n);
    for (std::size_t b = 0; b < slots.size(); ++b)
        if (mask >> b & 1ull) g.add_edge(slots[b].first, slots[b].second);
    return g;
}

} // namespace detail

// Brute-force class count: canonicalize every one of the 2^(n(n-1)/2) labeled
// graphs and count distinct forms. Independent of the augmentation search, so
// it serves as its oracle. Practical up to n = 6.
inline long labeled_scan_class_count(int n) {
    if (n < 1) throw DomainError("labeled scan needs order at least 1");
    if (n > 6) throw SizeError("labeled scan oracle is limited to order 6");
    const auto slots = detail::edge_slots(n);
    const std::uint64_t total = 1ull << slots.size();
    std::vector<std::string> texts(static_cast<std::size_t>(total));
    parallel_for(static_cast<std::size_t>(total), [&](std::size_t mask) {
        texts[mask] = canonical_form(
            detail::graph_from_edge_mask(n, slots, mask));
    });
    std::unordered_set<std::string> unique(texts.begin(), texts.end());
    return static_cast<long>(unique.size());
}

// Stratified oracle for orders where the full scan is out of reach: count
// classes with one fixed degree sequence by walking only the edge masks of
// the right popcount (Gosper's hack) and filtering on degrees.
inline long labeled_scan_classes_with_degree_sequence(
    int n, const std::vector<int>& sorted_degrees) {
    if (n < 1 || n > kCatalogMaxOrder)
        throw DomainError("stratified scan supports orders 1 through 8");
    if (static_cast<int>(sorted_degrees.size()) != n)
        throw DomainError("degree sequence length must equal the order");
    std::vector<int> want = sorted_degrees;
    std::sort(want.begin(), want.end(), std::greater<int>());
    for (int d : want)
        if (d < 0 || d >= n)
            throw DomainError("degree out of range for the given order");
    long sum = 0;
    for (int d : want) sum += d;
    if (sum % 2 != 0) return 0;
    const int edges = static_cast<int>(sum / 2);
    const auto slots = detail::edge_slots(n);
    if (edges > static_cast<int>(slots.size())) return 0;

    // The degree multiset is compared through per-degree counts; cheaper per
    // candidate than sorting inside the Gosper walk.
    std::array<int, kCatalogMaxOrder> want_counts{};
    for (int d : want) ++want_counts[static_cast<std::size_t>(d)];

    std::vector<std::uint64_t> hits;
    if (edges == 0) {
        hits.push_back(0);
    } else {
        const std::uint64_t limit = 1ull << slots.size();
        std::uint64_t mask = (1ull << edges) - 1;
        while (mask < limit) {
            std::array<int, kCatalogMaxOrder> deg{};
            for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
                const int b = std::countr_zero(rest);
                ++deg[static_cast<std::size_t>(slots[static_cast<std::size_t>(b)].first)];
                ++deg[static_cast<std::size_t>(slots[static_cast<std::size_t>(b)].second)];
            }
            std::array<int, kCatalogMaxOrder> counts{};
            for (int v = 0; v < n; ++v)
                ++counts[static_cast<std::size_t>(deg[static_cast<std::size_t>(v)])];
            if (counts == want_counts) hits.push_back(mask);
            // Gosper's hack: next mask with the same popcount.
            const std::uint64_t c = mask & -mask;
            const std::uint64_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }

    std::vector<std::string> texts(hits.size());
    parallel_for(hits.size(), [&](std::size_t i) {
        texts[i] =
            canonical_form(detail::graph_from_edge_mask(n, slots, hits[i]));
    });
    std::unordered_set<std::string> unique(texts.begin(), texts.end());
    return static_cast<long>(unique.size());
}

} // namespace qspectra
