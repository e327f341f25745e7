#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "qspectra/errors.hpp"
#include "qspectra/graph.hpp"

namespace qspectra {

namespace detail {

// Backtracking canonical labeling: equitable refinement of an ordered cell
// partition, individualization on the first non-singleton cell, and orbit
// pruning driven by automorphisms discovered at equal-encoding leaves. The
// refinement and all tie-breaking depend only on cell order and neighbor
// counts, so relabeling a graph permutes the search tree without changing
// the minimal leaf encoding.
class CanonSearcher {
public:
    explicit CanonSearcher(const Graph& g) : g_(g), n_(g.order()) {}

    std::vector<int> run() {
        std::vector<std::vector<int>> cells(1);
        cells[0].resize(static_cast<std::size_t>(n_));
        std::iota(cells[0].begin(), cells[0].end(), 0);
        std::vector<int> prefix;
        search(std::move(cells), prefix);
        return best_label_;
    }

private:
    using Encoding = std::array<std::uint64_t, 2>;

    std::uint64_t cell_mask(const std::vector<int>& cell) const {
        std::uint64_t m = 0;
        for (int v : cell) m |= std::uint64_t{1} << v;
        return m;
    }

    void refine(std::vector<std::vector<int>>& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t ci = 0; ci < cells.size() && !changed; ++ci) {
                const std::uint64_t splitter = cell_mask(cells[ci]);
                for (std::size_t di = 0; di < cells.size() && !changed; ++di) {
                    if (cells[di].size() <= 1) continue;
                    const int c0 = std::popcount(g_.neighbors(cells[di][0]) & splitter);
                    bool uniform = true;
                    for (int v : cells[di])
                        if (std::popcount(g_.neighbors(v) & splitter) != c0) {
                            uniform = false;
                            break;
                        }
                    if (uniform) continue;
                    std::vector<std::vector<int>> parts(static_cast<std::size_t>(n_) + 1);
                    for (int v : cells[di])
                        parts[static_cast<std::size_t>(
                                  std::popcount(g_.neighbors(v) & splitter))]
                            .push_back(v);
                    std::vector<std::vector<int>> next;
                    next.reserve(cells.size() + 2);
                    for (std::size_t i = 0; i < cells.size(); ++i) {
                        if (i != di) {
                            next.push_back(std::move(cells[i]));
                            continue;
                        }
                        for (auto& sub : parts)
                            if (!sub.empty()) next.push_back(std::move(sub));
                    }
                    cells = std::move(next);
                    changed = true;
                }
            }
        }
    }

    Encoding encode(const std::vector<int>& label) const {
        Encoding bits{0, 0};
        std::size_t idx = 0;
        for (int j = 1; j < n_; ++j)
            for (int i = 0; i < j; ++i, ++idx)
                if (g_.has_edge(label[static_cast<std::size_t>(i)],
                                label[static_cast<std::size_t>(j)]))
                    bits[idx >> 6] |= std::uint64_t{1} << (63 - (idx & 63));
        return bits;
    }

    bool fixes_prefix(const std::vector<int>& gamma, const std::vector<int>& prefix) const {
        for (int v : prefix)
            if (gamma[static_cast<std::size_t>(v)] != v) return false;
        return true;
    }

    void search(std::vector<std::vector<int>> cells, std::vector<int>& prefix) {
        refine(cells);
        std::size_t target = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1) {
                target = i;
                break;
            }

        if (target == cells.size()) {
            std::vector<int> label(static_cast<std::size_t>(n_));
            for (std::size_t p = 0; p < cells.size(); ++p) label[p] = cells[p][0];
            const Encoding enc = encode(label);
            if (!have_best_ || enc < best_enc_) {
                best_enc_ = enc;
                best_label_ = label;
                have_best_ = true;
            } else if (enc == best_enc_) {
                // Equal encodings mean position-wise edge agreement, so the
                // map label[p] -> best_label[p] preserves adjacency.
                std::vector<int> gamma(static_cast<std::size_t>(n_));
                bool identity = true;
                for (std::size_t p = 0; p < label.size(); ++p) {
                    gamma[static_cast<std::size_t>(label[p])] = best_label_[p];
                    if (label[p] != best_label_[p]) identity = false;
                }
                if (!identity) autos_.push_back(std::move(gamma));
            }
            return;
        }

        const std::vector<int> candidates = cells[target];
        std::vector<int> done;
        for (int v : candidates) {
            if (!done.empty() && covered(v, done, prefix)) continue;
            std::vector<std::vector<int>> child;
            child.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i != target) {
                    child.push_back(cells[i]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> rest;
                for (int w : cells[i])
                    if (w != v) rest.push_back(w);
                child.push_back(std::move(rest));
            }
            prefix.push_back(v);
            search(std::move(child), prefix);
            prefix.pop_back();
            done.push_back(v);
        }
    }

    // True when some automorphism subgroup generated by prefix-fixing
    // generators carries an already-explored candidate to v.
    bool covered(int v, const std::vector<int>& done, const std::vector<int>& prefix) const {
        std::vector<int> parent(static_cast<std::size_t>(n_));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&parent](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        bool any = false;
        for (const auto& gamma : autos_) {
            if (!fixes_prefix(gamma, prefix)) continue;
            any = true;
            for (int x = 0; x < n_; ++x) {
                int a = find(x), b = find(gamma[static_cast<std::size_t>(x)]);
                if (a != b) parent[static_cast<std::size_t>(a)] = b;
            }
        }
        if (!any) return false;
        const int rv = find(v);
        for (int d : done)
            if (find(d) == rv) return true;
        return false;
    }

    const Graph& g_;
    int n_;
    Encoding best_enc_{};
    std::vector<int> best_label_;
    bool have_best_ = false;
    std::vector<std::vector<int>> autos_;
};

} // namespace detail

inline constexpr int kCanonicalMaxOrder = 12;

// Labeling achieving the minimal upper-triangle encoding; entry p is the
// original vertex placed at position p.
inline std::vector<int> canonical_labeling(const Graph& g) {
    if (g.order() < 1 || g.order() > kCanonicalMaxOrder)
        throw SizeError("canonical labeling supports orders 1..12, got " +
                        std::to_string(g.order()));
    return detail::CanonSearcher(g).run();
}

inline Graph canonical_graph(const Graph& g) {
    const std::vector<int> label = canonical_labeling(g);
    const int n = g.order();
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) pos[static_cast<std::size_t>(label[static_cast<std::size_t>(p)])] = p;
    Graph h(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v))
                h.add_edge(pos[static_cast<std::size_t>(u)], pos[static_cast<std::size_t>(v)]);
    return h;
}

inline std::string canonical_form(const Graph& g) { return to_graph6(canonical_graph(g)); }

inline bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    if (a.degree_sequence() != b.degree_sequence()) return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace qspectra
