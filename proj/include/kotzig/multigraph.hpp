#pragma once

// Loopless-or-not multigraphs with stable edge identities, plus the structural
// operations everything else is built from: suppression of degree-2 vertices,
// contraction, circuit decomposition, bridge detection and component
// classification. All values are immutable once built; operations are pure.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kotzig {

using EdgeId = int;
using EdgeSet = std::set<EdgeId>;

struct Edge {
    EdgeId id;
    int u;
    int v;

    bool is_loop() const { return u == v; }
    int other(int w) const { return w == u ? v : u; }
};

/// Undirected multigraph. Parallel edges and loops are permitted; edge ids are
/// unique within one instance and are never reused or renumbered by any
/// operation, so subsets survive extraction, suppression and contraction.
class MultiGraph {
public:
    MultiGraph() = default;

    explicit MultiGraph(int vertex_count) : n_(vertex_count) {
        if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    }

    static MultiGraph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
        MultiGraph g(n);
        for (const auto& [u, v] : pairs) g.add_edge(u, v);
        return g;
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    EdgeId add_edge(int u, int v) {
        EdgeId id = next_id_;
        add_edge_with_id(id, u, v);
        return id;
    }

    void add_edge_with_id(EdgeId id, int u, int v) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (index_.count(id)) throw std::invalid_argument("duplicate edge id");
        index_[id] = edges_.size();
        edges_.push_back(Edge{id, u, v});
        next_id_ = std::max(next_id_, id + 1);
    }

    bool has_edge(EdgeId id) const { return index_.count(id) > 0; }

    const Edge& edge(EdgeId id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw std::out_of_range("unknown edge id " + std::to_string(id));
        return edges_[it->second];
    }

    /// Degree of v; a loop contributes 2.
    int degree(int v) const {
        int d = 0;
        for (const auto& e : edges_) {
            if (e.u == v) ++d;
            if (e.v == v) ++d;
        }
        return d;
    }

    /// Incident edge ids in ascending id order; a loop is listed once.
    std::vector<EdgeId> incident_edges(int v) const {
        std::vector<EdgeId> out;
        for (const auto& e : edges_)
            if (e.u == v || e.v == v) out.push_back(e.id);
        std::sort(out.begin(), out.end());
        return out;
    }

    EdgeSet edge_ids() const {
        EdgeSet s;
        for (const auto& e : edges_) s.insert(e.id);
        return s;
    }

    bool has_loop() const {
        for (const auto& e : edges_)
            if (e.is_loop()) return true;
        return false;
    }

    /// vertex -> list of (edge id, other endpoint), ascending edge id; loops
    /// appear once with other == v.
    std::vector<std::vector<std::pair<EdgeId, int>>> adjacency() const {
        std::vector<std::vector<std::pair<EdgeId, int>>> adj(n_);
        for (const auto& e : edges_) {
            adj[e.u].emplace_back(e.id, e.v);
            if (!e.is_loop()) adj[e.v].emplace_back(e.id, e.u);
        }
        for (auto& lst : adj) std::sort(lst.begin(), lst.end());
        return adj;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::map<EdgeId, std::size_t> index_;
    EdgeId next_id_ = 0;
};

/// Cubic multigraph: every vertex of degree exactly 3, no loops. Bridgeless-
/// ness is a separate check, not part of the type.
class CubicGraph {
public:
    explicit CubicGraph(MultiGraph g) : g_(std::move(g)) {
        for (const auto& e : g_.edges())
            if (e.is_loop())
                throw std::invalid_argument("cubic graph may not contain loops");
        for (int v = 0; v < g_.vertex_count(); ++v)
            if (g_.degree(v) != 3)
                throw std::invalid_argument("vertex " + std::to_string(v) + " has degree " +
                                            std::to_string(g_.degree(v)) + ", expected 3");
    }

    const MultiGraph& graph() const { return g_; }
    int vertex_count() const { return g_.vertex_count(); }
    int edge_count() const { return g_.edge_count(); }

private:
    MultiGraph g_;
};

inline void require_subset(const MultiGraph& g, const EdgeSet& s, const char* what) {
    for (EdgeId id : s)
        if (!g.has_edge(id))
            throw std::invalid_argument(std::string(what) + ": unknown edge id " + std::to_string(id));
}

/// Degree of v in the subgraph (V(g), s); loops count 2.
inline int subgraph_degree(const MultiGraph& g, const EdgeSet& s, int v) {
    int d = 0;
    for (EdgeId id : s) {
        const Edge& e = g.edge(id);
        if (e.u == v) ++d;
        if (e.v == v) ++d;
    }
    return d;
}

inline std::vector<int> subgraph_degrees(const MultiGraph& g, const EdgeSet& s) {
    std::vector<int> deg(g.vertex_count(), 0);
    for (EdgeId id : s) {
        const Edge& e = g.edge(id);
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

/// Every vertex incident with an even number of s-edges (loops count 2)?
inline bool is_even_subgraph(const MultiGraph& g, const EdgeSet& s) {
    for (int d : subgraph_degrees(g, s))
        if (d % 2 != 0) return false;
    return true;
}

struct Component {
    EdgeSet edges;
    std::vector<int> vertices;  // ascending, non-isolated only
    bool is_circuit = false;    // connected and 2-regular
};

/// Connected components of the subgraph spanned by h, restricted to
/// non-isolated vertices, each classified as circuit (2-regular) or other.
/// Ordered by least contained vertex.
inline std::vector<Component> classify_components(const MultiGraph& g, const EdgeSet& h) {
    require_subset(g, h, "classify_components");
    std::map<int, std::vector<std::pair<EdgeId, int>>> adj;
    for (EdgeId id : h) {
        const Edge& e = g.edge(id);
        adj[e.u].emplace_back(id, e.v);
        if (!e.is_loop()) adj[e.v].emplace_back(id, e.u);
    }
    std::set<int> seen;
    std::vector<Component> out;
    for (const auto& [start, _] : adj) {
        if (seen.count(start)) continue;
        Component comp;
        std::vector<int> stack{start};
        seen.insert(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.vertices.push_back(v);
            for (const auto& [id, w] : adj[v]) {
                comp.edges.insert(id);
                if (!seen.count(w)) {
                    seen.insert(w);
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.vertices.begin(), comp.vertices.end());
        comp.is_circuit = true;
        for (int v : comp.vertices)
            if (subgraph_degree(g, comp.edges, v) != 2) comp.is_circuit = false;
        out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end(),
              [](const Component& a, const Component& b) { return a.vertices.front() < b.vertices.front(); });
    return out;
}

/// Records how a suppressed graph maps back onto the original: each suppressed
/// edge id names the ordered path of original edge ids it replaced. Circuit
/// components carry no degree != 2 anchor; they are returned unchanged and
/// flagged here instead.
struct SuppressionMap {
    std::map<EdgeId, std::vector<EdgeId>> paths;
    std::vector<int> retained_vertices;          // original vertex ids kept
    std::vector<int> new_vertex_of_old;          // -1 when smoothed away
    std::vector<EdgeSet> circuit_components;

    EdgeSet expand(const EdgeSet& suppressed) const {
        EdgeSet out;
        for (EdgeId id : suppressed) {
            auto it = paths.find(id);
            if (it == paths.end()) throw std::out_of_range("suppression map: unknown edge");
            out.insert(it->second.begin(), it->second.end());
        }
        return out;
    }
};

/// Smooth every degree-2 vertex, replacing each maximal induced path by a
/// single edge whose id is the least id on the path. Components that are
/// circuits have no anchor and are kept unchanged (flagged in the map);
/// isolated vertices are rejected.
inline std::pair<MultiGraph, SuppressionMap> suppress(const MultiGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);

    auto comps = classify_components(g, g.edge_ids());
    std::vector<bool> on_edge(n, false);
    for (const auto& c : comps)
        for (int v : c.vertices) on_edge[v] = true;
    for (int v = 0; v < n; ++v)
        if (!on_edge[v]) throw std::invalid_argument("suppress: isolated vertex " + std::to_string(v));

    SuppressionMap map;
    map.new_vertex_of_old.assign(n, -1);
    std::vector<bool> keep(n, false);
    for (int v = 0; v < n; ++v)
        if (deg[v] != 2) keep[v] = true;
    for (const auto& c : comps)
        if (c.is_circuit)
            for (int v : c.vertices) keep[v] = true;

    for (int v = 0; v < n; ++v)
        if (keep[v]) {
            map.new_vertex_of_old[v] = static_cast<int>(map.retained_vertices.size());
            map.retained_vertices.push_back(v);
        }

    MultiGraph out(static_cast<int>(map.retained_vertices.size()));
    auto adj = g.adjacency();

    for (const auto& c : comps) {
        if (c.is_circuit) {
            map.circuit_components.push_back(c.edges);
            for (EdgeId id : c.edges) {
                const Edge& e = g.edge(id);
                out.add_edge_with_id(id, map.new_vertex_of_old[e.u], map.new_vertex_of_old[e.v]);
                map.paths[id] = {id};
            }
        }
    }

    std::set<EdgeId> visited;
    for (int a = 0; a < n; ++a) {
        if (deg[a] == 2 || !on_edge[a]) continue;  // walk only from anchors
        for (const auto& [first_edge, first_next] : adj[a]) {
            if (visited.count(first_edge)) continue;
            std::vector<EdgeId> path{first_edge};
            visited.insert(first_edge);
            int cur = first_next;
            while (cur != a && deg[cur] == 2) {
                EdgeId next_edge = -1;
                int next_v = -1;
                for (const auto& [id, w] : adj[cur]) {
                    if (visited.count(id)) continue;
                    next_edge = id;
                    next_v = w;
                    break;
                }
                if (next_edge < 0) break;  // closes back on an already walked edge
                path.push_back(next_edge);
                visited.insert(next_edge);
                cur = next_v;
            }
            if (deg[cur] == 2 && cur != a)
                throw std::logic_error("suppress: path walk ended mid-chain");
            EdgeId new_id = *std::min_element(path.begin(), path.end());
            out.add_edge_with_id(new_id, map.new_vertex_of_old[a], map.new_vertex_of_old[cur]);
            map.paths[new_id] = path;
        }
    }
    return {std::move(out), std::move(map)};
}

/// Contract the spanning subgraph (V(g), h): one vertex per component, every
/// edge of g - h kept with its id, endpoints remapped. Loops and parallel
/// edges in the result are preserved. component_of, when given, receives the
/// vertex -> contracted-vertex assignment.
inline MultiGraph contract(const MultiGraph& g, const EdgeSet& h,
                           std::vector<int>* component_of = nullptr) {
    require_subset(g, h, "contract");
    const int n = g.vertex_count();
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (EdgeId id : h) {
        const Edge& e = g.edge(id);
        parent[find(e.u)] = find(e.v);
    }
    // renumber by least original vertex per component
    std::map<int, int> least_of_root;
    for (int v = n - 1; v >= 0; --v) least_of_root[find(v)] = v;
    std::vector<std::pair<int, int>> order;  // (least vertex, root)
    for (const auto& [r, least] : least_of_root) order.emplace_back(least, r);
    std::sort(order.begin(), order.end());
    std::map<int, int> root_new;
    for (std::size_t i = 0; i < order.size(); ++i) root_new[order[i].second] = static_cast<int>(i);

    MultiGraph out(static_cast<int>(order.size()));
    for (const auto& e : g.edges()) {
        if (h.count(e.id)) continue;
        out.add_edge_with_id(e.id, root_new[find(e.u)], root_new[find(e.v)]);
    }
    if (component_of) {
        component_of->assign(n, -1);
        for (int v = 0; v < n; ++v) (*component_of)[v] = root_new[find(v)];
    }
    return out;
}

/// Split an even subgraph into edge-disjoint circuits. Deterministic: walks
/// always take the least unused edge from the least active vertex.
inline std::vector<EdgeSet> circuit_decompose(const MultiGraph& g, const EdgeSet& s) {
    require_subset(g, s, "circuit_decompose");
    if (!is_even_subgraph(g, s))
        throw std::invalid_argument("circuit_decompose: subgraph is not even");

    std::map<int, std::vector<std::pair<EdgeId, int>>> adj;
    for (EdgeId id : s) {
        const Edge& e = g.edge(id);
        adj[e.u].emplace_back(id, e.v);
        if (!e.is_loop()) adj[e.v].emplace_back(id, e.u);
    }
    for (auto& [v, lst] : adj) std::sort(lst.begin(), lst.end());

    std::set<EdgeId> used;
    std::vector<EdgeSet> circuits;

    auto next_unused = [&](int v) -> std::optional<std::pair<EdgeId, int>> {
        for (const auto& [id, w] : adj[v])
            if (!used.count(id)) return std::make_pair(id, w);
        return std::nullopt;
    };

    for (const auto& [start, _] : adj) {
        while (next_unused(start)) {
            // walk, splicing out a circuit whenever the walk returns to a
            // vertex already on it
            std::vector<std::pair<int, EdgeId>> walk;  // (vertex, incoming edge)
            std::map<int, int> pos_of;
            walk.emplace_back(start, -1);
            pos_of[start] = 0;
            int cur = start;
            while (true) {
                auto step = next_unused(cur);
                if (!step) {
                    if (walk.size() > 1) throw std::logic_error("circuit_decompose: stuck mid-walk");
                    break;
                }
                auto [id, w] = *step;
                used.insert(id);
                auto hit = pos_of.find(w);
                if (hit != pos_of.end()) {
                    EdgeSet circ{id};
                    while (static_cast<int>(walk.size()) > hit->second + 1) {
                        circ.insert(walk.back().second);
                        pos_of.erase(walk.back().first);
                        walk.pop_back();
                    }
                    circuits.push_back(std::move(circ));
                    cur = w;
                } else {
                    walk.emplace_back(w, id);
                    pos_of[w] = static_cast<int>(walk.size()) - 1;
                    cur = w;
                }
            }
        }
    }
    return circuits;
}

/// True iff g has no cut edge. A parallel edge or loop is never a bridge.
inline bool is_bridgeless(const MultiGraph& g) {
    const int n = g.vertex_count();
    auto adj = g.adjacency();
    std::vector<int> disc(n, -1), low(n, 0);
    int timer = 0;

    struct Item {
        int v;
        EdgeId via;
        std::size_t next = 0;
    };
    for (int s = 0; s < n; ++s) {
        if (disc[s] != -1) continue;
        std::vector<Item> stack;
        disc[s] = low[s] = timer++;
        stack.push_back({s, -1});
        while (!stack.empty()) {
            Item& it = stack.back();
            if (it.next < adj[it.v].size()) {
                auto [id, w] = adj[it.v][it.next++];
                if (id == it.via || w == it.v) continue;  // skip tree edge back and loops
                if (disc[w] == -1) {
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, id});
                } else {
                    low[it.v] = std::min(low[it.v], disc[w]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    Item& par = stack.back();
                    low[par.v] = std::min(low[par.v], low[it.v]);
                    if (low[it.v] > disc[par.v]) return false;  // tree edge is a bridge
                }
            }
        }
    }
    return true;
}

inline bool is_connected(const MultiGraph& g) {
    const int n = g.vertex_count();
    if (n == 0) return true;
    auto adj = g.adjacency();
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& [id, w] : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                ++cnt;
                stack.push_back(w);
            }
    }
    return cnt == n;
}

/// Standalone copy of the subgraph spanned by an edge set. Edge ids are
/// preserved; vertices are the edge endpoints, renumbered in ascending order.
inline MultiGraph extract_subgraph(const MultiGraph& g, const EdgeSet& s,
                                   std::vector<int>* old_vertex_of_new = nullptr) {
    require_subset(g, s, "extract_subgraph");
    std::set<int> verts;
    for (EdgeId id : s) {
        verts.insert(g.edge(id).u);
        verts.insert(g.edge(id).v);
    }
    std::map<int, int> new_of_old;
    std::vector<int> old_of_new;
    for (int v : verts) {
        new_of_old[v] = static_cast<int>(old_of_new.size());
        old_of_new.push_back(v);
    }
    MultiGraph out(static_cast<int>(old_of_new.size()));
    for (EdgeId id : s) {
        const Edge& e = g.edge(id);
        out.add_edge_with_id(id, new_of_old[e.u], new_of_old[e.v]);
    }
    if (old_vertex_of_new) *old_vertex_of_new = old_of_new;
    return out;
}

/// Replace selected edges by paths; times maps edge id -> number of new
/// vertices placed on it. Untouched edges keep their ids, path edges get
/// fresh ids. Inverse of suppress up to renumbering.
inline MultiGraph subdivide_edges(const MultiGraph& g, const std::map<EdgeId, int>& times) {
    int extra = 0;
    for (const auto& [id, k] : times) {
        if (!g.has_edge(id)) throw std::invalid_argument("subdivide_edges: unknown edge");
        if (k < 0) throw std::invalid_argument("subdivide_edges: negative count");
        extra += k;
    }
    MultiGraph out(g.vertex_count() + extra);
    int next_vertex = g.vertex_count();
    EdgeId next_id = 0;
    for (const auto& e : g.edges()) next_id = std::max(next_id, e.id + 1);
    for (const auto& e : g.edges()) {
        auto it = times.find(e.id);
        int k = it == times.end() ? 0 : it->second;
        if (k == 0) {
            out.add_edge_with_id(e.id, e.u, e.v);
            continue;
        }
        int prev = e.u;
        for (int i = 0; i < k; ++i) {
            out.add_edge_with_id(next_id++, prev, next_vertex);
            prev = next_vertex++;
        }
        out.add_edge_with_id(next_id++, prev, e.v);
    }
    return out;
}

/// Same labeled multigraph up to edge ids: vertex counts equal and the edge
/// multisets {min(u,v), max(u,v)} coincide.
inline bool identical_graphs(const MultiGraph& a, const MultiGraph& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    auto key = [](const MultiGraph& g) {
        std::vector<std::pair<int, int>> k;
        for (const auto& e : g.edges()) k.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
        std::sort(k.begin(), k.end());
        return k;
    };
    return key(a) == key(b);
}

/// Degree-refined adjacency certificate for test comparisons. Isomorphic
/// graphs share it; sharing it does not prove isomorphism.
inline std::string canonical_certificate(const MultiGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = g.degree(v);
    auto adj = g.adjacency();
    for (int round = 0; round < n; ++round) {
        std::vector<std::string> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            for (const auto& [id, w] : adj[v]) {
                nb.push_back(color[w]);
                if (w == v) nb.push_back(color[w]);  // loop counts twice
            }
            std::sort(nb.begin(), nb.end());
            std::ostringstream os;
            os << color[v] << ':';
            for (int c : nb) os << c << ',';
            sig[v] = os.str();
        }
        std::vector<std::string> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v)
            next[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) -
                                       sorted.begin());
        if (next == color) break;
        color = next;
    }
    std::vector<std::string> parts;
    for (int v = 0; v < n; ++v) {
        std::vector<int> nb;
        for (const auto& [id, w] : adj[v]) {
            nb.push_back(color[w]);
            if (w == v) nb.push_back(color[w]);
        }
        std::sort(nb.begin(), nb.end());
        std::ostringstream os;
        os << color[v] << '(';
        for (int c : nb) os << c << ' ';
        os << ')';
        parts.push_back(os.str());
    }
    std::sort(parts.begin(), parts.end());
    std::ostringstream os;
    os << "n=" << n << ";m=" << g.edge_count() << ';';
    for (const auto& p : parts) os << p << '|';
    return os.str();
}

}  // namespace kotzig
