#pragma once

// Named graph fixtures, the default catalog of small semi-Kotzig graphs used
// by the frame search and the instance generator, and an exhaustive
// enumeration of tiny cubic multigraphs for property tests.

#include "kotzig/coloring.hpp"
#include "kotzig/frame.hpp"
#include "kotzig/multigraph.hpp"

namespace kotzig {

/// Two vertices joined by three parallel edges; the smallest cubic multigraph.
inline const CubicGraph& theta_graph() {
    static const CubicGraph fixture = [] {
        MultiGraph g(2);
        g.add_edge(0, 1);
        g.add_edge(0, 1);
        g.add_edge(0, 1);
        return CubicGraph(std::move(g));
    }();
    return fixture;
}

inline const CubicGraph& k4() {
    static const CubicGraph fixture{
        MultiGraph::from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})};
    return fixture;
}

/// 4-circuit with two opposite edges doubled.
inline const CubicGraph& domino_graph() {
    static const CubicGraph fixture{
        MultiGraph::from_pairs(4, {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {2, 3}, {3, 0}})};
    return fixture;
}

inline const CubicGraph& k33() {
    static const CubicGraph fixture{MultiGraph::from_pairs(
        6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}})};
    return fixture;
}

/// Triangular prism: two triangles 0-1-2 and 3-4-5 plus the matching i, i+3.
inline const CubicGraph& prism() {
    static const CubicGraph fixture{MultiGraph::from_pairs(
        6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}})};
    return fixture;
}

/// k-gonal prism, k >= 3.
inline CubicGraph prism_graph(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) {
        edges.emplace_back(i, (i + 1) % k);
        edges.emplace_back(k + i, k + (i + 1) % k);
        edges.emplace_back(i, k + i);
    }
    return CubicGraph(MultiGraph::from_pairs(2 * k, edges));
}

inline const CubicGraph& cube_q3() {
    static const CubicGraph fixture = prism_graph(4);
    return fixture;
}

/// Moebius ladder on 2k vertices: a 2k-circuit plus all diameters.
inline CubicGraph moebius_ladder(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 2 * k; ++i) edges.emplace_back(i, (i + 1) % (2 * k));
    for (int i = 0; i < k; ++i) edges.emplace_back(i, i + k);
    return CubicGraph(MultiGraph::from_pairs(2 * k, edges));
}

inline const CubicGraph& wagner_v8() {
    static const CubicGraph fixture = moebius_ladder(4);
    return fixture;
}

inline const CubicGraph& petersen() {
    static const CubicGraph fixture = [] {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < 5; ++i) {
            edges.emplace_back(i, (i + 1) % 5);
            edges.emplace_back(i, i + 5);
            edges.emplace_back(i + 5, (i + 2) % 5 + 5);
        }
        return CubicGraph(MultiGraph::from_pairs(10, edges));
    }();
    return fixture;
}

/// Petersen with vertex 0 expanded into a triangle {0, 10, 11}; class 2.
inline const CubicGraph& tietze() {
    static const CubicGraph fixture = [] {
        const MultiGraph& p = petersen().graph();
        MultiGraph g(12);
        for (const auto& e : p.edges()) {
            if (e.u != 0 && e.v != 0) g.add_edge(e.u, e.v);
        }
        g.add_edge(0, 1);
        g.add_edge(10, 4);
        g.add_edge(11, 5);
        g.add_edge(0, 10);
        g.add_edge(10, 11);
        g.add_edge(11, 0);
        return CubicGraph(std::move(g));
    }();
    return fixture;
}

/// Heawood graph via LCF [5,-5]^7: 14-circuit plus chords (i, i+5) for even i.
inline const CubicGraph& heawood() {
    static const CubicGraph fixture = [] {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < 14; ++i) edges.emplace_back(i, (i + 1) % 14);
        for (int i = 0; i < 14; i += 2) edges.emplace_back(i, (i + 5) % 14);
        return CubicGraph(MultiGraph::from_pairs(14, edges));
    }();
    return fixture;
}

/// Two triangles joined by a single edge; degree-2-and-3 graph with a bridge.
inline MultiGraph two_triangles_bridged() {
    return MultiGraph::from_pairs(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
}

/// The canonical Kotzig coloring of K4 with edge ids as produced by k4():
/// 0:01, 1:02, 2:03, 3:12, 4:13, 5:23.
inline ColorMap k4_kotzig_coloring() {
    return ColorMap{{0, 0}, {1, 1}, {2, 2}, {3, 2}, {4, 1}, {5, 0}};
}

/// K4 and the iterated joins of two and three K4's, each with a verified
/// semi-Kotzig witness. This is the default catalog for the frame search and
/// the planted-instance generator.
inline const std::vector<FrameCatalogEntry>& semi_kotzig_catalog() {
    static const std::vector<FrameCatalogEntry> catalog = [] {
        std::vector<FrameCatalogEntry> out;
        auto add = [&](const std::string& name, const CubicGraph& g, const ColorMap& c) {
            std::string why;
            if (!is_semi_kotzig(g, c, &why))
                throw std::logic_error("catalog entry " + name + " is not semi-Kotzig: " + why);
            out.push_back({name, g, SemiKotzigWitness{c, f_circuits(g.graph(), c)}});
        };
        CubicGraph g4 = k4();
        ColorMap c4 = k4_kotzig_coloring();
        add("K4", g4, c4);
        auto [j8, c8] = iterated_kotzig_join(g4, c4, 0, g4, c4, 0);
        add("J8", j8, c8);
        auto [j12, c12] = iterated_kotzig_join(j8, c8, *color_class(c8, 0).begin(), g4, c4, 0);
        add("J12", j12, c12);
        return out;
    }();
    return catalog;
}

/// Named cubic fixtures with at most max_vertices vertices, multigraphs
/// included.
inline std::vector<std::pair<std::string, CubicGraph>> cubic_fixtures(int max_vertices) {
    std::vector<std::pair<std::string, CubicGraph>> all;
    all.emplace_back("theta", theta_graph());
    all.emplace_back("K4", k4());
    all.emplace_back("domino", domino_graph());
    all.emplace_back("K3,3", k33());
    all.emplace_back("prism", prism());
    all.emplace_back("cube", cube_q3());
    all.emplace_back("Wagner", wagner_v8());
    all.emplace_back("J8", semi_kotzig_catalog()[1].graph);
    all.emplace_back("Petersen", petersen());
    all.emplace_back("pentagonal prism", prism_graph(5));
    all.emplace_back("Moebius ladder 10", moebius_ladder(5));
    all.emplace_back("J12", semi_kotzig_catalog()[2].graph);
    all.emplace_back("hexagonal prism", prism_graph(6));
    all.emplace_back("Tietze", tietze());
    all.emplace_back("Heawood", heawood());
    std::erase_if(all, [&](const auto& p) { return p.second.vertex_count() > max_vertices; });
    return all;
}

/// Minimum over all vertex permutations of the sorted edge-pair list; an
/// exact isomorphism invariant, usable only for tiny graphs.
inline std::vector<std::pair<int, int>> exact_canonical_form(const MultiGraph& g) {
    const int n = g.vertex_count();
    if (n > 8) throw std::invalid_argument("exact_canonical_form: too many vertices");
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::vector<std::pair<int, int>> best;
    do {
        std::vector<std::pair<int, int>> key;
        for (const auto& e : g.edges()) {
            int a = perm[e.u], b = perm[e.v];
            key.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(key.begin(), key.end());
        if (best.empty() || key < best) best = key;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// All connected loopless cubic multigraphs on n vertices, one per
/// isomorphism class. Exhaustive; intended for n in {2, 4, 6}.
inline std::vector<CubicGraph> all_cubic_multigraphs(int n) {
    if (n <= 0 || n % 2 != 0 || n > 6)
        throw std::invalid_argument("all_cubic_multigraphs: n must be 2, 4 or 6");
    std::vector<CubicGraph> out;
    std::set<std::vector<std::pair<int, int>>> seen;
    std::vector<int> residual(n, 3);
    std::vector<std::pair<int, int>> edges;

    std::function<void(int, int)> rec = [&](int last_u, int last_v) {
        int u = -1;
        for (int v = 0; v < n; ++v)
            if (residual[v] > 0) {
                u = v;
                break;
            }
        if (u < 0) {
            MultiGraph g = MultiGraph::from_pairs(n, edges);
            if (!is_connected(g)) return;
            auto key = exact_canonical_form(g);
            if (seen.insert(key).second) out.emplace_back(std::move(g));
            return;
        }
        // next edge must not precede the previous one lexicographically
        for (int v = u + 1; v < n; ++v) {
            if (residual[v] == 0) continue;
            if (u < last_u || (u == last_u && v < last_v)) continue;
            residual[u]--;
            residual[v]--;
            edges.emplace_back(u, v);
            rec(u, v);
            edges.pop_back();
            residual[u]++;
            residual[v]++;
        }
    };
    rec(0, 0);
    return out;
}

}  // namespace kotzig
