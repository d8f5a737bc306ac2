#pragma once

// Independent brute-force machinery: the GF(2) cycle space of a multigraph,
// enumeration of its elements (the even subgraphs), and an exhaustive search
// for k-even-subgraph double covers. Deliberately simple and auditable; the
// constructive pipeline is cross-validated against this, never the reverse.

#include <cstdint>
#include <limits>

#include "kotzig/cdc.hpp"
#include "kotzig/multigraph.hpp"

namespace kotzig {

struct CycleSpaceBasis {
    int dimension = 0;
    std::vector<EdgeSet> fundamental_circuits;  // one per non-tree edge
};

/// Fundamental circuits with respect to a BFS spanning forest.
inline CycleSpaceBasis cycle_space_basis(const MultiGraph& g) {
    const int n = g.vertex_count();
    auto adj = g.adjacency();
    std::vector<int> parent_vertex(n, -1);
    std::vector<EdgeId> parent_edge(n, -1);
    std::vector<int> depth(n, -1);
    std::set<EdgeId> tree;
    for (int s = 0; s < n; ++s) {
        if (depth[s] != -1) continue;
        depth[s] = 0;
        std::vector<int> queue{s};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (const auto& [id, w] : adj[v]) {
                if (depth[w] != -1 || w == v) continue;
                depth[w] = depth[v] + 1;
                parent_vertex[w] = v;
                parent_edge[w] = id;
                tree.insert(id);
                queue.push_back(w);
            }
        }
    }
    CycleSpaceBasis basis;
    for (const auto& e : g.edges()) {
        if (tree.count(e.id)) continue;
        EdgeSet circ{e.id};
        if (!e.is_loop()) {
            int a = e.u, b = e.v;
            auto toggle = [&](EdgeId id) {
                if (circ.count(id))
                    circ.erase(id);
                else
                    circ.insert(id);
            };
            while (a != b) {
                if (depth[a] < depth[b]) std::swap(a, b);
                toggle(parent_edge[a]);
                a = parent_vertex[a];
            }
        }
        basis.fundamental_circuits.push_back(std::move(circ));
    }
    basis.dimension = static_cast<int>(basis.fundamental_circuits.size());
    return basis;
}

namespace detail {

struct EdgeBits {
    std::vector<std::uint64_t> w;

    explicit EdgeBits(std::size_t bits = 0) : w((bits + 63) / 64, 0) {}
    void flip(std::size_t i) { w[i / 64] ^= 1ull << (i % 64); }
    bool test(std::size_t i) const { return (w[i / 64] >> (i % 64)) & 1; }
    void operator^=(const EdgeBits& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] ^= o.w[i];
    }
    bool intersects(const EdgeBits& o) const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] & o.w[i]) return true;
        return false;
    }
    bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }
    bool operator==(const EdgeBits& o) const { return w == o.w; }
};

}  // namespace detail

/// Visit every element of the cycle space exactly once (the empty set
/// included), in Gray-code order over the fundamental basis. Graphs of
/// cyclomatic dimension above 20 are rejected unless an explicit limit is
/// given; at most `limit` elements are emitted when it is.
inline void enumerate_even_subgraphs(const MultiGraph& g,
                                     const std::function<bool(const EdgeSet&)>& visit,
                                     std::optional<long long> limit = std::nullopt) {
    auto basis = cycle_space_basis(g);
    if (!limit && basis.dimension > 20)
        throw std::invalid_argument("cycle space dimension " + std::to_string(basis.dimension) +
                                    " exceeds 20; pass an explicit limit");
    long long total = basis.dimension >= 62 ? std::numeric_limits<long long>::max()
                                            : (1ll << basis.dimension);
    if (limit) total = std::min(total, *limit);
    EdgeSet current;
    long long emitted = 0;
    if (emitted < total) {
        if (!visit(current)) return;
        ++emitted;
    }
    auto toggle = [&](const EdgeSet& circ) {
        for (EdgeId id : circ) {
            if (current.count(id))
                current.erase(id);
            else
                current.insert(id);
        }
    };
    for (long long k = 1; emitted < total; ++k) {
        int bit = 0;
        while (!((k >> bit) & 1)) ++bit;  // Gray code: flip the lowest set bit position
        toggle(basis.fundamental_circuits[bit]);
        if (!visit(current)) return;
        ++emitted;
    }
}

inline std::vector<EdgeSet> all_even_subgraphs(const MultiGraph& g,
                                               std::optional<long long> limit = std::nullopt) {
    std::vector<EdgeSet> out;
    enumerate_even_subgraphs(
        g,
        [&](const EdgeSet& s) {
            out.push_back(s);
            return true;
        },
        limit);
    return out;
}

/// Exhaustive search for a multiset of at most k nonempty even subgraphs
/// covering every edge exactly twice. Depth-first over edges in id order:
/// each member is introduced at its least edge, the two members covering that
/// edge are chosen in nondecreasing index order, so every multiset is visited
/// once. Definitive none when the search space is exhausted.
inline SearchResult<std::vector<EvenSubgraph>> brute_force_kcdc(const MultiGraph& g, int k,
                                                                StepBudget& budget) {
    auto basis = cycle_space_basis(g);
    if (basis.dimension > 20)
        throw std::invalid_argument("cycle space dimension " + std::to_string(basis.dimension) +
                                    " exceeds 20");
    const int m = g.edge_count();
    std::vector<EdgeId> edge_of_index;
    std::map<EdgeId, int> index_of_edge;
    for (const auto& e : g.edges()) {
        index_of_edge[e.id] = static_cast<int>(edge_of_index.size());
        edge_of_index.push_back(e.id);
    }

    std::vector<detail::EdgeBits> members;
    std::vector<EdgeSet> member_sets;
    enumerate_even_subgraphs(g, [&](const EdgeSet& s) {
        if (s.empty()) return true;
        detail::EdgeBits b(m);
        for (EdgeId id : s) b.flip(index_of_edge[id]);
        members.push_back(std::move(b));
        member_sets.push_back(s);
        return true;
    });
    std::vector<std::vector<int>> containing(m);
    for (std::size_t i = 0; i < members.size(); ++i)
        for (int e = 0; e < m; ++e)
            if (members[i].test(e)) containing[e].push_back(static_cast<int>(i));

    detail::EdgeBits once(m), twice(m);
    std::vector<int> chosen;
    bool out_of_budget = false;

    auto add = [&](int i) {
        // callers guarantee no overflow
        for (std::size_t wi = 0; wi < once.w.size(); ++wi) {
            std::uint64_t mw = members[i].w[wi];
            twice.w[wi] |= once.w[wi] & mw;
            once.w[wi] ^= mw;
        }
        chosen.push_back(i);
    };
    auto remove = [&](int i) {
        chosen.pop_back();
        for (std::size_t wi = 0; wi < once.w.size(); ++wi) {
            std::uint64_t mw = members[i].w[wi];
            once.w[wi] ^= mw;
            twice.w[wi] &= ~(once.w[wi] & mw);
        }
    };
    auto overflows = [&](int i) { return members[i].intersects(twice); };

    std::optional<std::vector<EvenSubgraph>> found;
    std::function<bool(void)> rec = [&]() -> bool {
        int e = -1;
        for (int i = 0; i < m; ++i)
            if (!twice.test(i)) {
                e = i;
                break;
            }
        if (e < 0) {
            std::vector<EvenSubgraph> sol;
            for (int i : chosen) sol.push_back(member_sets[i]);
            found = std::move(sol);
            return true;
        }
        int need = once.test(e) ? 1 : 2;
        int slots = k - static_cast<int>(chosen.size());
        if (slots < need) return false;
        if (need == 1) {
            for (int i : containing[e]) {
                if (!budget.take()) {
                    out_of_budget = true;
                    return false;
                }
                if (overflows(i)) continue;
                add(i);
                if (rec()) return true;
                remove(i);
                if (out_of_budget) return false;
            }
            return false;
        }
        const auto& cand = containing[e];
        for (std::size_t x = 0; x < cand.size(); ++x) {
            if (overflows(cand[x])) continue;
            add(cand[x]);
            for (std::size_t y = x; y < cand.size(); ++y) {
                if (!budget.take()) {
                    out_of_budget = true;
                    break;
                }
                if (overflows(cand[y])) continue;
                add(cand[y]);
                if (rec()) return true;
                remove(cand[y]);
                if (out_of_budget) break;
            }
            remove(cand[x]);
            if (out_of_budget) return false;
        }
        return false;
    };
    rec();
    if (found) return {SearchStatus::found, std::move(found), ""};
    if (out_of_budget) return {SearchStatus::out_of_budget, std::nullopt, "search budget exhausted"};
    return {SearchStatus::exhausted, std::nullopt,
            "no double cover with at most " + std::to_string(k) + " even subgraphs exists"};
}

}  // namespace kotzig
