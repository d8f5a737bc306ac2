#pragma once

// Frames of cubic graphs: spanning subgraphs H with G/H even, classified into
// circuit components plus at most one non-circuit component H0, and the
// semi-Kotzig variant where the suppressed H0 carries a semi-Kotzig coloring.
//
// Verification is exact. Search is best effort under an explicit budget:
// phase (a) enumerates perfect matchings looking for an even 2-factor, phase
// (b) backtracks over spanning subdivisions of a small catalog of semi-Kotzig
// graphs combined with disjoint even circuits.

#include "kotzig/coloring.hpp"
#include "kotzig/multigraph.hpp"

namespace kotzig {

/// The non-circuit component of a frame together with its suppressed graph.
/// The suppressed graph's edge ids are host edge ids (least id of each path),
/// so witness colorings transfer through `map.paths` directly.
struct NonCircuitPart {
    EdgeSet edges;               // H0 as host edge ids
    std::set<int> vertices;      // V(H0) in host numbering
    MultiGraph suppressed;       // H0 with degree-2 vertices smoothed, standalone
    SuppressionMap map;          // suppressed edge -> ordered host path
};

struct Frame {
    EdgeSet h_edges;
    EdgeSet m_edges;                            // E(G) - E(H), always a matching
    std::vector<EdgeSet> circuit_components;    // H_1..H_t
    std::optional<NonCircuitPart> non_circuit;  // H_0
};

struct SemiKotzigFrame {
    Frame frame;
    std::optional<SemiKotzigWitness> witness;  // on the suppressed H0; absent iff no H0
};

/// Check the frame conditions for H = h in G and classify the components.
/// Requires H to span with degree 2 or 3 at every vertex (so M is a
/// matching), G/H even, every circuit component of even length, and at most
/// one non-circuit component. Each violation is reported distinctly.
inline std::optional<Frame> verify_frame(const CubicGraph& g, const EdgeSet& h,
                                         std::string* why = nullptr) {
    const MultiGraph& mg = g.graph();
    require_subset(mg, h, "verify_frame");
    auto fail = [&](const std::string& msg) -> std::optional<Frame> {
        if (why) *why = msg;
        return std::nullopt;
    };

    auto hdeg = subgraph_degrees(mg, h);
    for (int v = 0; v < mg.vertex_count(); ++v) {
        if (hdeg[v] == 0) return fail("H is not spanning: vertex " + std::to_string(v) + " is uncovered");
        if (hdeg[v] == 1)
            return fail("vertex " + std::to_string(v) +
                        " has H-degree 1; every vertex must lie on a circuit or on H0");
    }

    std::vector<int> comp_of;
    MultiGraph quotient = contract(mg, h, &comp_of);
    for (int w = 0; w < quotient.vertex_count(); ++w)
        if (quotient.degree(w) % 2 != 0)
            return fail("G/H is not even: contracted vertex " + std::to_string(w) + " has degree " +
                        std::to_string(quotient.degree(w)));

    Frame frame;
    frame.h_edges = h;
    for (const auto& e : mg.edges())
        if (!h.count(e.id)) frame.m_edges.insert(e.id);

    auto comps = classify_components(mg, h);
    int non_circuit_count = 0;
    for (const auto& c : comps) {
        if (c.is_circuit) {
            if (c.edges.size() % 2 != 0)
                return fail("circuit component through vertex " + std::to_string(c.vertices.front()) +
                            " has odd length " + std::to_string(c.edges.size()));
            frame.circuit_components.push_back(c.edges);
        } else {
            ++non_circuit_count;
            if (non_circuit_count > 1) return fail("more than one non-circuit component");
            NonCircuitPart part;
            part.edges = c.edges;
            part.vertices.insert(c.vertices.begin(), c.vertices.end());
            MultiGraph sub = extract_subgraph(mg, c.edges);
            auto [sup, smap] = suppress(sub);
            part.suppressed = std::move(sup);
            part.map = std::move(smap);
            if (!part.map.circuit_components.empty())
                throw std::logic_error("verify_frame: non-circuit component suppressed to a circuit");
            for (int v = 0; v < part.suppressed.vertex_count(); ++v)
                if (part.suppressed.degree(v) != 3)
                    return fail("H0 does not suppress to a cubic graph (degree " +
                                std::to_string(part.suppressed.degree(v)) + " vertex)");
            if (part.suppressed.has_loop())
                return fail("H0 suppresses to a graph with a loop");
            frame.non_circuit = std::move(part);
        }
    }
    return frame;
}

/// Pull a coloring of H0's host edges back to the suppressed graph. Every
/// path must be mono-colored.
inline std::optional<ColorMap> colors_to_suppressed(const NonCircuitPart& part,
                                                    const ColorMap& host_colors,
                                                    std::string* why = nullptr) {
    ColorMap out;
    for (const auto& [sid, path] : part.map.paths) {
        auto it = host_colors.find(path.front());
        if (it == host_colors.end()) {
            if (why) *why = "H0 edge " + std::to_string(path.front()) + " is uncolored";
            return std::nullopt;
        }
        int col = it->second;
        for (EdgeId id : path) {
            auto jt = host_colors.find(id);
            if (jt == host_colors.end() || jt->second != col) {
                if (why)
                    *why = "induced path of suppressed edge " + std::to_string(sid) +
                           " is not mono-colored";
                return std::nullopt;
            }
        }
        out[sid] = col;
    }
    return out;
}

/// Frame check plus the semi-Kotzig condition on the suppressed H0. With
/// seed_colors (host edge ids, at least covering H0) the given coloring is
/// validated first; otherwise an exhaustive coloring search runs under the
/// budget.
inline SearchResult<SemiKotzigFrame> verify_semi_kotzig_frame(
    const CubicGraph& g, const EdgeSet& h, StepBudget& budget,
    const ColorMap* seed_colors = nullptr) {
    std::string why;
    auto frame = verify_frame(g, h, &why);
    if (!frame) return {SearchStatus::exhausted, std::nullopt, why};

    if (!frame->non_circuit)
        return {SearchStatus::found, SemiKotzigFrame{std::move(*frame), std::nullopt}, ""};

    CubicGraph h0bar(frame->non_circuit->suppressed);
    if (seed_colors) {
        ColorMap restricted;
        for (EdgeId id : frame->non_circuit->edges) {
            auto it = seed_colors->find(id);
            if (it != seed_colors->end()) restricted[id] = it->second;
        }
        auto pulled = colors_to_suppressed(*frame->non_circuit, restricted, &why);
        if (pulled && is_semi_kotzig(h0bar, *pulled, &why)) {
            SemiKotzigWitness w{*pulled, f_circuits(h0bar.graph(), *pulled)};
            return {SearchStatus::found, SemiKotzigFrame{std::move(*frame), std::move(w)}, ""};
        }
        // fall through to the search; the seed was only a hint
    }
    auto res = find_semi_kotzig_coloring(h0bar, budget);
    if (res.status == SearchStatus::found)
        return {SearchStatus::found, SemiKotzigFrame{std::move(*frame), std::move(res.value)}, ""};
    if (res.status == SearchStatus::out_of_budget)
        return {SearchStatus::out_of_budget, std::nullopt,
                "budget exhausted while searching a semi-Kotzig coloring of the suppressed H0"};
    return {SearchStatus::exhausted, std::nullopt, "H0 does not suppress to a semi-Kotzig graph"};
}

/// One catalog member for the phase (b) frame search.
struct FrameCatalogEntry {
    std::string name;
    CubicGraph graph;
    SemiKotzigWitness witness;
};

namespace detail {

/// Enumerate perfect matchings of g, calling visit for each; visit returning
/// false stops. Same status convention as enumerate_proper_colorings.
inline SearchStatus enumerate_perfect_matchings(const MultiGraph& g, StepBudget& budget,
                                                const std::function<bool(const EdgeSet&)>& visit) {
    const int n = g.vertex_count();
    if (n % 2 != 0) return SearchStatus::exhausted;
    auto adj = g.adjacency();
    std::vector<bool> matched(n, false);
    EdgeSet current;
    bool stopped = false;

    std::function<bool()> rec = [&]() -> bool {
        if (stopped) return false;
        int v = -1;
        for (int u = 0; u < n; ++u)
            if (!matched[u]) {
                v = u;
                break;
            }
        if (v < 0) {
            if (!visit(current)) stopped = true;
            return !stopped;
        }
        for (const auto& [id, w] : adj[v]) {
            if (w == v || matched[w]) continue;
            if (!budget.take()) return false;
            matched[v] = matched[w] = true;
            current.insert(id);
            bool cont = rec();
            current.erase(id);
            matched[v] = matched[w] = false;
            if (!cont) return false;
        }
        return true;
    };
    bool complete = rec();
    if (stopped) return SearchStatus::found;
    return complete ? SearchStatus::exhausted : SearchStatus::out_of_budget;
}

struct EmbeddingState {
    const MultiGraph* host = nullptr;
    std::vector<std::vector<std::pair<EdgeId, int>>> adj;
    std::vector<bool> vertex_used;
    std::set<EdgeId> edge_used;
    std::vector<int> branch_map;                  // catalog vertex -> host vertex, -1 unset
    std::vector<std::vector<EdgeId>> edge_paths;  // per catalog edge, host path
    std::vector<EdgeSet> circuits;                // even circuits covering the rest
    std::function<bool()> accept;                 // full candidate; true stops the search
    bool out_of_budget = false;
};

/// Cover every remaining host vertex by vertex-disjoint even circuits, then
/// call accept. Backtracks through all covers until accept returns true.
inline bool cover_by_even_circuits(EmbeddingState& st, StepBudget& budget) {
    if (st.out_of_budget) return false;
    int v0 = -1;
    for (int v = 0; v < st.host->vertex_count(); ++v)
        if (!st.vertex_used[v]) {
            v0 = v;
            break;
        }
    if (v0 < 0) return st.accept();

    std::vector<EdgeId> path_edges;
    std::vector<int> path_verts;  // internal vertices, v0 excluded
    std::function<bool(int)> walk = [&](int cur) -> bool {
        for (const auto& [id, w] : st.adj[cur]) {
            if (st.edge_used.count(id)) continue;
            if (!budget.take()) {
                st.out_of_budget = true;
                return false;
            }
            if (w == v0) {
                if (path_edges.size() % 2 == 1) {  // closing edge makes even length
                    path_edges.push_back(id);
                    st.edge_used.insert(id);
                    for (int pv : path_verts) st.vertex_used[pv] = true;
                    st.vertex_used[v0] = true;
                    st.circuits.emplace_back(path_edges.begin(), path_edges.end());
                    if (cover_by_even_circuits(st, budget)) return true;
                    st.circuits.pop_back();
                    st.vertex_used[v0] = false;
                    for (int pv : path_verts) st.vertex_used[pv] = false;
                    st.edge_used.erase(id);
                    path_edges.pop_back();
                    if (st.out_of_budget) return false;
                }
                continue;
            }
            if (st.vertex_used[w]) continue;
            if (std::find(path_verts.begin(), path_verts.end(), w) != path_verts.end()) continue;
            path_edges.push_back(id);
            path_verts.push_back(w);
            st.edge_used.insert(id);
            bool done = walk(w);
            if (done) return true;
            st.edge_used.erase(id);
            path_verts.pop_back();
            path_edges.pop_back();
            if (st.out_of_budget) return false;
        }
        return false;
    };
    return walk(v0);
}

/// Place catalog edge `idx` and onward as internally disjoint host paths.
/// Catalog edges are pre-oriented so .u is always mapped when placed.
inline bool embed_edges(EmbeddingState& st, StepBudget& budget,
                        const std::vector<Edge>& cat_edges, std::size_t idx) {
    if (st.out_of_budget) return false;
    if (idx == cat_edges.size()) return cover_by_even_circuits(st, budget);

    const Edge& ce = cat_edges[idx];
    int start = st.branch_map[ce.u];

    std::function<bool(int, std::vector<EdgeId>&, std::vector<int>&)> extend =
        [&](int cur, std::vector<EdgeId>& pedges, std::vector<int>& pverts) -> bool {
        int target = st.branch_map[ce.v];  // may be fixed by a sibling branch mid-search
        for (const auto& [id, w] : st.adj[cur]) {
            if (st.edge_used.count(id) || w == cur) continue;
            if (!budget.take()) {
                st.out_of_budget = true;
                return false;
            }
            if (target >= 0 && w == target) {
                pedges.push_back(id);
                st.edge_used.insert(id);
                st.edge_paths[idx] = pedges;
                for (int pv : pverts) st.vertex_used[pv] = true;
                if (embed_edges(st, budget, cat_edges, idx + 1)) return true;
                for (int pv : pverts) st.vertex_used[pv] = false;
                st.edge_paths[idx].clear();
                st.edge_used.erase(id);
                pedges.pop_back();
                if (st.out_of_budget) return false;
                continue;
            }
            if (st.vertex_used[w]) continue;
            if (std::find(pverts.begin(), pverts.end(), w) != pverts.end()) continue;
            if (target < 0) {
                // w as the image of the not yet mapped branch vertex
                pedges.push_back(id);
                st.edge_used.insert(id);
                st.branch_map[ce.v] = w;
                st.vertex_used[w] = true;
                st.edge_paths[idx] = pedges;
                for (int pv : pverts) st.vertex_used[pv] = true;
                if (embed_edges(st, budget, cat_edges, idx + 1)) return true;
                for (int pv : pverts) st.vertex_used[pv] = false;
                st.edge_paths[idx].clear();
                st.vertex_used[w] = false;
                st.branch_map[ce.v] = -1;
                st.edge_used.erase(id);
                pedges.pop_back();
                if (st.out_of_budget) return false;
            }
            // ... or as an internal path vertex
            pedges.push_back(id);
            pverts.push_back(w);
            st.edge_used.insert(id);
            if (extend(w, pedges, pverts)) return true;
            st.edge_used.erase(id);
            pverts.pop_back();
            pedges.pop_back();
            if (st.out_of_budget) return false;
        }
        return false;
    };
    std::vector<EdgeId> pedges;
    std::vector<int> pverts;
    return extend(start, pedges, pverts);
}

}  // namespace detail

/// Two-phase search for a semi-Kotzig frame with at most one non-circuit
/// component. Phase (a): even 2-factors found through perfect matchings
/// (H = G - N). Phase (b): a spanning subdivision of a catalog semi-Kotzig
/// graph plus disjoint even circuits. The search is best effort: the
/// exhausted status means "none found within the catalog", not "none exists".
inline SearchResult<SemiKotzigFrame> find_semi_kotzig_frame(
    const CubicGraph& g, StepBudget& budget, const std::vector<FrameCatalogEntry>& catalog) {
    const MultiGraph& mg = g.graph();

    // phase (a): even 2-factor
    std::optional<SemiKotzigFrame> hit;
    auto pm_status = detail::enumerate_perfect_matchings(mg, budget, [&](const EdgeSet& pm) {
        EdgeSet h;
        for (const auto& e : mg.edges())
            if (!pm.count(e.id)) h.insert(e.id);
        auto comps = classify_components(mg, h);
        for (const auto& c : comps)
            if (!c.is_circuit || c.edges.size() % 2 != 0) return true;
        StepBudget sub = StepBudget::unlimited();
        auto res = verify_semi_kotzig_frame(g, h, sub);
        if (res.status == SearchStatus::found) {
            hit = std::move(res.value);
            return false;
        }
        return true;
    });
    if (hit) return {SearchStatus::found, std::move(hit), "even 2-factor frame"};
    if (pm_status == SearchStatus::out_of_budget)
        return {SearchStatus::out_of_budget, std::nullopt, "budget exhausted during 2-factor phase"};

    // phase (b): spanning subdivision of a catalog graph + even circuits
    for (const auto& entry : catalog) {
        const MultiGraph& cg = entry.graph.graph();
        if (cg.vertex_count() > mg.vertex_count()) continue;

        // orient catalog edges so each is placed from an already mapped endpoint
        std::vector<Edge> cat_edges;
        {
            std::set<int> mapped{0};
            std::vector<Edge> pool(cg.edges().begin(), cg.edges().end());
            while (!pool.empty()) {
                bool advanced = false;
                for (auto it = pool.begin(); it != pool.end(); ++it) {
                    if (mapped.count(it->u)) {
                        cat_edges.push_back(*it);
                        mapped.insert(it->v);
                        pool.erase(it);
                        advanced = true;
                        break;
                    }
                    if (mapped.count(it->v)) {
                        cat_edges.push_back(Edge{it->id, it->v, it->u});
                        mapped.insert(it->u);
                        pool.erase(it);
                        advanced = true;
                        break;
                    }
                }
                if (!advanced) throw std::logic_error("catalog graph is disconnected");
            }
        }

        detail::EmbeddingState st;
        st.host = &mg;
        st.adj = mg.adjacency();
        st.vertex_used.assign(mg.vertex_count(), false);
        st.branch_map.assign(cg.vertex_count(), -1);
        st.edge_paths.assign(cat_edges.size(), {});

        std::optional<SemiKotzigFrame> found;
        st.accept = [&]() {
            EdgeSet h;
            ColorMap seed;
            for (std::size_t i = 0; i < cat_edges.size(); ++i) {
                int col = entry.witness.colors.at(cat_edges[i].id);
                for (EdgeId id : st.edge_paths[i]) {
                    h.insert(id);
                    seed[id] = col;
                }
            }
            for (const auto& c : st.circuits) h.insert(c.begin(), c.end());
            StepBudget sub = StepBudget::unlimited();
            auto res = verify_semi_kotzig_frame(g, h, sub, &seed);
            if (res.status != SearchStatus::found) return false;  // keep searching
            found = std::move(res.value);
            return true;
        };

        for (int root = 0; root < mg.vertex_count(); ++root) {
            if (!budget.take())
                return {SearchStatus::out_of_budget, std::nullopt, "budget exhausted"};
            st.branch_map[0] = root;
            st.vertex_used[root] = true;
            bool done = detail::embed_edges(st, budget, cat_edges, 0);
            if (done && found)
                return {SearchStatus::found, std::move(found),
                        "spanning subdivision of " + entry.name};
            st.vertex_used[root] = false;
            st.branch_map[0] = -1;
            if (st.out_of_budget)
                return {SearchStatus::out_of_budget, std::nullopt,
                        "budget exhausted during embedding phase"};
        }
    }
    return {SearchStatus::exhausted, std::nullopt,
            "no even 2-factor and no spanning subdivision of a catalog semi-Kotzig graph found "
            "(the catalog is not exhaustive, so this is not a nonexistence proof)"};
}

}  // namespace kotzig
