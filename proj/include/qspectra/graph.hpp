#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qspectra/errors.hpp"

namespace qspectra {

// Simple undirected graph on at most 64 vertices, adjacency kept as one
// 64-bit neighborhood mask per vertex.
class Graph {
public:
    static constexpr int kMaxOrder = 64;

    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
        if (n < 0 || n > kMaxOrder)
            throw SizeError("graph order " + std::to_string(n) + " outside [0, 64]");
    }

    int order() const noexcept { return n_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw DomainError("self-loops are not supported");
        adj_[static_cast<std::size_t>(u)] |= bit(v);
        adj_[static_cast<std::size_t>(v)] |= bit(u);
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[static_cast<std::size_t>(u)] & bit(v)) != 0;
    }

    std::uint64_t neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return std::popcount(neighbors(v)); }

    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (std::uint64_t row : adj_) twice += static_cast<std::size_t>(std::popcount(row));
        return twice / 2;
    }

    Graph complement() const {
        Graph c(n_);
        const std::uint64_t all = (n_ == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_) - 1);
        for (int v = 0; v < n_; ++v)
            c.adj_[static_cast<std::size_t>(v)] = (~adj_[static_cast<std::size_t>(v)] & all) & ~bit(v);
        return c;
    }

    // Subgraph induced on `verts`; vertex i of the result is verts[i].
    Graph induced(const std::vector<int>& verts) const {
        Graph h(static_cast<int>(verts.size()));
        for (std::size_t a = 0; a < verts.size(); ++a)
            for (std::size_t b = a + 1; b < verts.size(); ++b)
                if (has_edge(verts[a], verts[b]))
                    h.add_edge(static_cast<int>(a), static_cast<int>(b));
        return h;
    }

    // Non-increasing.
    std::vector<int> degree_sequence() const {
        std::vector<int> ds(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) ds[static_cast<std::size_t>(v)] = degree(v);
        std::sort(ds.begin(), ds.end(), std::greater<int>());
        return ds;
    }

    bool operator==(const Graph&) const = default;

private:
    static std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("vertex " + std::to_string(v) + " outside graph of order " +
                                    std::to_string(n_));
    }

    int n_;
    std::vector<std::uint64_t> adj_;
};

inline Graph path_graph(int k) {
    Graph g(k);
    for (int v = 0; v + 1 < k; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw DomainError("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

// K_{1,n-1}; vertex 0 is the center.
inline Graph star_graph(int n) {
    if (n < 1) throw DomainError("star needs at least 1 vertex");
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    if (a.order() + b.order() > Graph::kMaxOrder)
        throw SizeError("disjoint union exceeds 64 vertices");
    Graph g(a.order() + b.order());
    for (int u = 0; u < a.order(); ++u)
        for (int v = u + 1; v < a.order(); ++v)
            if (a.has_edge(u, v)) g.add_edge(u, v);
    for (int u = 0; u < b.order(); ++u)
        for (int v = u + 1; v < b.order(); ++v)
            if (b.has_edge(u, v)) g.add_edge(a.order() + u, a.order() + v);
    return g;
}

// Rooted product G(P_k): every vertex of G becomes the endpoint of its own
// k-vertex path. Layout is layer-major, vertex (i, s) of the product sits at
// flat index s * n + i; layer s = 0 is the copy of G itself.
inline int rooted_index(int i, int s, int n) { return s * n + i; }

inline Graph rooted_product(const Graph& g, int k) {
    if (k < 1) throw DomainError("rooted product needs k >= 1");
    const int n = g.order();
    if (n < 1) throw DomainError("rooted product needs a nonempty base graph");
    if (n > Graph::kMaxOrder / k)
        throw SizeError("rooted product order " + std::to_string(static_cast<long long>(n) * k) +
                        " exceeds 64");
    Graph h(n * k);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v)) h.add_edge(rooted_index(u, 0, n), rooted_index(v, 0, n));
    for (int i = 0; i < n; ++i)
        for (int s = 0; s + 1 < k; ++s)
            h.add_edge(rooted_index(i, s, n), rooted_index(i, s + 1, n));
    return h;
}

// t-fold iterate G(P_k)(P_k)... with t applications.
inline Graph rooted_tower(const Graph& g, int k, int t) {
    if (t < 0) throw DomainError("tower height must be nonnegative");
    Graph h = g;
    for (int step = 0; step < t; ++step) h = rooted_product(h, k);
    return h;
}

namespace detail {

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

} // namespace detail

// Strict graph6 reader for orders 1..62. Accepts an optional ">>graph6<<"
// prefix; all reported byte offsets refer to the original input string.
inline Graph parse_graph6(std::string_view line) {
    std::size_t base = 0;
    if (line.substr(0, detail::kGraph6Header.size()) == detail::kGraph6Header) {
        base = detail::kGraph6Header.size();
        line.remove_prefix(base);
    }
    if (line.empty()) throw ParseError("empty graph6 string", base);

    const unsigned char c0 = static_cast<unsigned char>(line[0]);
    if (c0 < 63 || c0 > 126)
        throw ParseError("graph6 byte out of printable range", base);
    if (c0 == 126)
        throw ParseError("multi-byte graph6 order not supported (order > 62)", base);
    const int n = c0 - 63;
    if (n == 0) throw ParseError("graph6 order 0 outside supported range [1, 62]", base);

    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (line.size() < 1 + nbytes)
        throw ParseError("truncated graph6 string, expected " + std::to_string(1 + nbytes) +
                             " bytes, got " + std::to_string(line.size()),
                         base + line.size());
    if (line.size() > 1 + nbytes)
        throw ParseError("trailing bytes after graph6 payload", base + 1 + nbytes);

    std::vector<unsigned> groups(nbytes);
    for (std::size_t b = 0; b < nbytes; ++b) {
        const unsigned char c = static_cast<unsigned char>(line[1 + b]);
        if (c < 63 || c > 126)
            throw ParseError("graph6 byte out of printable range", base + 1 + b);
        groups[b] = static_cast<unsigned>(c - 63);
    }

    Graph g(n);
    std::size_t idx = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++idx) {
            const unsigned group = groups[idx / 6];
            const unsigned bitpos = 5 - static_cast<unsigned>(idx % 6);
            if ((group >> bitpos) & 1u) g.add_edge(i, j);
        }
    }
    if (nbits % 6 != 0) {
        const unsigned pad_mask = (1u << (6 - nbits % 6)) - 1u;
        if ((groups.back() & pad_mask) != 0)
            throw ParseError("nonzero padding bits in final graph6 byte", base + nbytes);
    }
    return g;
}

inline std::string to_graph6(const Graph& g) {
    const int n = g.order();
    if (n < 1 || n > 62)
        throw SizeError("graph6 encoding supports orders 1..62, got " + std::to_string(n));
    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    std::vector<unsigned> groups(nbytes, 0);
    std::size_t idx = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++idx) {
            if (g.has_edge(i, j)) groups[idx / 6] |= 1u << (5 - idx % 6);
        }
    }
    std::string out(1 + nbytes, ' ');
    out[0] = static_cast<char>(63 + n);
    for (std::size_t b = 0; b < nbytes; ++b) out[1 + b] = static_cast<char>(63 + groups[b]);
    return out;
}

} // namespace qspectra
