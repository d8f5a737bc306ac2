#pragma once

// Parity and proper 3-edge-colorings of cubic multigraphs; verification and
// exhaustive search of Kotzig, switchable-CDC and semi-Kotzig colorings; the
// 1<->2 switching operation; the iterated join construction.
//
// Colors are canonically {0, 1, 2}. Color 0 is the structurally distinguished
// one: switching only ever exchanges 1 and 2, so every witness returned here
// is normalized with the unswitched color in position 0.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>

#include "kotzig/multigraph.hpp"

namespace kotzig {

using ColorMap = std::map<EdgeId, int>;

/// Deterministic step allowance for the exhaustive searches. remaining < 0
/// means unlimited.
struct StepBudget {
    long long remaining = -1;

    static StepBudget unlimited() { return StepBudget{-1}; }
    static StepBudget of(long long steps) { return StepBudget{steps}; }

    bool take(long long k = 1) {
        if (remaining < 0) return true;
        if (remaining < k) {
            remaining = 0;
            return false;
        }
        remaining -= k;
        return true;
    }
};

enum class SearchStatus {
    found,          // witness in hand
    exhausted,      // search space fully explored, definitively none
    out_of_budget,  // indeterminate
};

template <typename T>
struct SearchResult {
    SearchStatus status;
    std::optional<T> value;
    std::string note;
};

inline EdgeSet color_class(const ColorMap& c, int color) {
    EdgeSet s;
    for (const auto& [id, col] : c)
        if (col == color) s.insert(id);
    return s;
}

inline EdgeSet color_pair(const ColorMap& c, int a, int b) {
    EdgeSet s;
    for (const auto& [id, col] : c)
        if (col == a || col == b) s.insert(id);
    return s;
}

/// Parity 3-edge-coloring of the subgraph h: at every vertex v and for every
/// color, the number of incident h-edges of that color is congruent mod 2 to
/// the h-degree of v. On a cubic h this is exactly a proper 3-edge-coloring.
inline bool is_parity_coloring(const MultiGraph& g, const EdgeSet& host, const ColorMap& c,
                               std::string* why = nullptr) {
    require_subset(g, host, "is_parity_coloring");
    for (EdgeId id : host)
        if (!c.count(id))
            throw std::invalid_argument("is_parity_coloring: coloring not total on host (edge " +
                                        std::to_string(id) + " uncolored)");
    for (const auto& [id, col] : c) {
        if (!host.count(id))
            throw std::invalid_argument("is_parity_coloring: colored edge outside host");
        if (col < 0 || col > 2) throw std::invalid_argument("is_parity_coloring: color out of range");
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        int count[3] = {0, 0, 0};
        int hdeg = 0;
        for (EdgeId id : host) {
            const Edge& e = g.edge(id);
            int inc = (e.u == v) + (e.v == v);
            if (inc == 0) continue;
            hdeg += inc;
            count[c.at(id)] += inc;
        }
        for (int col = 0; col < 3; ++col) {
            if ((count[col] - hdeg) % 2 != 0) {
                if (why)
                    *why = "parity fails at vertex " + std::to_string(v) + " for color " +
                           std::to_string(col) + " (" + std::to_string(count[col]) + " vs H-degree " +
                           std::to_string(hdeg) + ")";
                return false;
            }
        }
    }
    return true;
}

/// Proper 3-edge-coloring of a cubic graph: total, and all three colors
/// distinct at every vertex.
inline bool is_proper_coloring(const CubicGraph& g, const ColorMap& c) {
    for (const auto& e : g.graph().edges()) {
        auto it = c.find(e.id);
        if (it == c.end() || it->second < 0 || it->second > 2) return false;
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        int seen = 0;
        for (EdgeId id : g.graph().incident_edges(v)) seen |= 1 << c.at(id);
        if (seen != 7) return false;
    }
    return true;
}

/// Do the classes of colors a and b form a Hamilton circuit? For a proper
/// coloring the union is automatically 2-regular and spanning, so this
/// reduces to a connectivity check; evaluated literally for any coloring.
inline bool pair_is_hamilton(const CubicGraph& g, const ColorMap& c, int a, int b) {
    EdgeSet s = color_pair(c, a, b);
    auto deg = subgraph_degrees(g.graph(), s);
    for (int d : deg)
        if (d != 2) return false;
    auto comps = classify_components(g.graph(), s);
    return comps.size() == 1 &&
           static_cast<int>(comps[0].vertices.size()) == g.vertex_count();
}

/// Kotzig coloring: proper and every pair of color classes is Hamilton.
inline bool is_kotzig(const CubicGraph& g, const ColorMap& c) {
    if (!is_proper_coloring(g, c)) return false;
    return pair_is_hamilton(g, c, 0, 1) && pair_is_hamilton(g, c, 0, 2) &&
           pair_is_hamilton(g, c, 1, 2);
}

/// Circuits of F = c^-1(1) u c^-1(2).
inline std::vector<EdgeSet> f_circuits(const MultiGraph& g, const ColorMap& c) {
    return circuit_decompose(g, color_pair(c, 1, 2));
}

/// Exchange colors 1 and 2 on the given circuits of F; color 0 untouched.
/// Every element of s must be exactly a circuit of F.
inline ColorMap switch_circuits(const MultiGraph& g, const ColorMap& c,
                                const std::vector<EdgeSet>& s) {
    auto circs = f_circuits(g, c);
    for (const auto& chosen : s) {
        bool ok = false;
        for (const auto& circ : circs)
            if (circ == chosen) {
                ok = true;
                break;
            }
        if (!ok) throw std::invalid_argument("switch_circuits: set is not a circuit of F");
    }
    ColorMap out = c;
    for (const auto& chosen : s)
        for (EdgeId id : chosen) out[id] = 3 - out[id];
    return out;
}

namespace detail {

inline bool star_property(const CubicGraph& g, const ColorMap& c) {
    return pair_is_hamilton(g, c, 0, 1) && pair_is_hamilton(g, c, 0, 2);
}

}  // namespace detail

/// Semi-Kotzig coloring check, color 0 in the distinguished role: the pairs
/// (0,1) and (0,2) must induce Hamilton circuits under every one of the 2^t
/// switchings of F-circuit subsets. Non-proper colorings are rejected.
inline bool is_semi_kotzig(const CubicGraph& g, const ColorMap& c, std::string* why = nullptr) {
    if (!is_proper_coloring(g, c)) {
        if (why) *why = "not a proper 3-edge-coloring";
        return false;
    }
    auto circs = f_circuits(g.graph(), c);
    int t = static_cast<int>(circs.size());
    if (t > 30) throw std::invalid_argument("is_semi_kotzig: too many F-circuits");
    for (std::uint32_t mask = 0; mask < (1u << t); ++mask) {
        ColorMap switched = c;
        for (int i = 0; i < t; ++i)
            if (mask & (1u << i))
                for (EdgeId id : circs[i]) switched[id] = 3 - switched[id];
        if (!detail::star_property(g, switched)) {
            if (why)
                *why = "switching subset mask " + std::to_string(mask) +
                       " breaks a Hamilton pair";
            return false;
        }
    }
    return true;
}

/// Switchable-CDC coloring: semi-Kotzig with at most two F-circuits.
inline bool is_switchable_cdc(const CubicGraph& g, const ColorMap& c) {
    if (!is_proper_coloring(g, c)) return false;
    if (f_circuits(g.graph(), c).size() > 2) return false;
    return is_semi_kotzig(g, c);
}

struct SemiKotzigWitness {
    ColorMap colors;                   // normalized: color 0 is the unswitched role
    std::vector<EdgeSet> f_circuits;   // circuits of c^-1(1) u c^-1(2)

    int t() const { return static_cast<int>(f_circuits.size()); }
};

/// Enumerate proper 3-edge-colorings by backtracking over edges in BFS order.
/// With fix_first_vertex the three edges at the lowest vertex get colors
/// 0, 1, 2 in edge-id order, breaking color symmetry. visit returning false
/// stops the enumeration. Returns exhausted or out_of_budget (found is
/// reported by the caller through its own state).
inline SearchStatus enumerate_proper_colorings(const CubicGraph& g, StepBudget& budget,
                                               bool fix_first_vertex,
                                               const std::function<bool(const ColorMap&)>& visit) {
    const MultiGraph& mg = g.graph();
    const int n = mg.vertex_count();
    if (n == 0) {
        visit({});
        return SearchStatus::exhausted;
    }
    // BFS edge order from vertex 0
    auto adj = mg.adjacency();
    std::vector<EdgeId> order;
    std::set<EdgeId> ordered;
    std::vector<int> queue;
    std::vector<bool> seen(n, false);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        seen[s] = true;
        queue.push_back(s);
        for (std::size_t qi = queue.size() - 1; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (const auto& [id, w] : adj[v]) {
                if (!ordered.count(id)) {
                    ordered.insert(id);
                    order.push_back(id);
                }
                if (!seen[w]) {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }

    ColorMap colors;
    std::vector<int> used_at(n, 0);  // bitmask of colors present at each vertex

    auto can_place = [&](const Edge& e, int col) {
        return !(used_at[e.u] & (1 << col)) && !(used_at[e.v] & (1 << col));
    };
    auto place = [&](const Edge& e, int col) {
        colors[e.id] = col;
        used_at[e.u] |= 1 << col;
        used_at[e.v] |= 1 << col;
    };
    auto unplace = [&](const Edge& e, int col) {
        colors.erase(e.id);
        used_at[e.u] &= ~(1 << col);
        used_at[e.v] &= ~(1 << col);
    };

    std::size_t fixed = 0;
    if (fix_first_vertex) {
        auto first = mg.incident_edges(0);
        // the BFS order starts with exactly these edges
        for (std::size_t i = 0; i < first.size(); ++i) {
            const Edge& e = mg.edge(order[i]);
            if (!can_place(e, static_cast<int>(i))) return SearchStatus::exhausted;  // parallel pair at v0
            place(e, static_cast<int>(i));
        }
        fixed = first.size();
    }

    bool stopped = false;
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        // returns false when the budget ran out or visit stopped us
        if (stopped) return false;
        if (i == order.size()) {
            if (!visit(colors)) stopped = true;
            return !stopped;
        }
        const Edge& e = mg.edge(order[i]);
        for (int col = 0; col < 3; ++col) {
            if (!can_place(e, col)) continue;
            if (!budget.take()) return false;
            place(e, col);
            bool cont = rec(i + 1);
            unplace(e, col);
            if (!cont) return false;
        }
        return true;
    };
    bool complete = rec(fixed);
    if (stopped) return SearchStatus::found;  // caller stopped early
    return complete ? SearchStatus::exhausted : SearchStatus::out_of_budget;
}

namespace detail {

/// Remap colors so that `role` becomes 0; the other two keep relative order.
inline ColorMap normalize_role(const ColorMap& c, int role) {
    int lo = role == 0 ? 1 : 0;
    int hi = role == 2 ? 1 : 2;
    ColorMap out;
    for (const auto& [id, col] : c)
        out[id] = col == role ? 0 : (col == lo ? 1 : 2);
    return out;
}

}  // namespace detail

/// Exhaustive search for a semi-Kotzig coloring: enumerate proper colorings
/// (color symmetry broken at the first vertex), try each color in the
/// distinguished role, filter with is_semi_kotzig. Definitive none when the
/// enumeration completes.
inline SearchResult<SemiKotzigWitness> find_semi_kotzig_coloring(const CubicGraph& g,
                                                                 StepBudget& budget) {
    std::optional<SemiKotzigWitness> found;
    auto status = enumerate_proper_colorings(g, budget, true, [&](const ColorMap& c) {
        for (int role = 0; role < 3; ++role) {
            ColorMap norm = detail::normalize_role(c, role);
            if (is_semi_kotzig(g, norm)) {
                found = SemiKotzigWitness{norm, f_circuits(g.graph(), norm)};
                return false;
            }
        }
        return true;
    });
    if (found) return {SearchStatus::found, std::move(found), ""};
    if (status == SearchStatus::out_of_budget)
        return {SearchStatus::out_of_budget, std::nullopt, "search budget exhausted"};
    return {SearchStatus::exhausted, std::nullopt, "no semi-Kotzig coloring exists"};
}

/// Exhaustive search for a Kotzig coloring.
inline SearchResult<ColorMap> find_kotzig_coloring(const CubicGraph& g, StepBudget& budget) {
    std::optional<ColorMap> found;
    auto status = enumerate_proper_colorings(g, budget, true, [&](const ColorMap& c) {
        if (is_kotzig(g, c)) {
            found = c;
            return false;
        }
        return true;
    });
    if (found) return {SearchStatus::found, std::move(found), ""};
    if (status == SearchStatus::out_of_budget)
        return {SearchStatus::out_of_budget, std::nullopt, "search budget exhausted"};
    return {SearchStatus::exhausted, std::nullopt, "no Kotzig coloring exists"};
}

/// Join two colored cubic graphs in the iterated-Kotzig manner: delete one
/// 0-colored edge from each and reconnect the four degree-2 stubs with two
/// new 0-colored edges. pairing selects which stubs meet: false joins
/// (first.u, second.u) and (first.v, second.v), true crosses them. Vertices
/// of the second graph are shifted past the first; edge ids are renumbered
/// 0..m-1 in the result.
inline std::pair<CubicGraph, ColorMap> iterated_kotzig_join(const CubicGraph& a, const ColorMap& ca,
                                                            EdgeId ea, const CubicGraph& b,
                                                            const ColorMap& cb, EdgeId eb,
                                                            bool pairing = false) {
    if (!is_proper_coloring(a, ca) || !is_proper_coloring(b, cb))
        throw std::invalid_argument("iterated_kotzig_join: colorings must be proper");
    if (ca.at(ea) != 0 || cb.at(eb) != 0)
        throw std::invalid_argument("iterated_kotzig_join: chosen edges must be colored 0");

    const int na = a.vertex_count();
    MultiGraph out(na + b.vertex_count());
    ColorMap colors;
    EdgeId next = 0;
    for (const auto& e : a.graph().edges()) {
        if (e.id == ea) continue;
        out.add_edge_with_id(next, e.u, e.v);
        colors[next] = ca.at(e.id);
        ++next;
    }
    for (const auto& e : b.graph().edges()) {
        if (e.id == eb) continue;
        out.add_edge_with_id(next, e.u + na, e.v + na);
        colors[next] = cb.at(e.id);
        ++next;
    }
    const Edge& da = a.graph().edge(ea);
    const Edge& db = b.graph().edge(eb);
    int x = pairing ? db.v : db.u;
    int y = pairing ? db.u : db.v;
    out.add_edge_with_id(next, da.u, x + na);
    colors[next] = 0;
    ++next;
    out.add_edge_with_id(next, da.v, y + na);
    colors[next] = 0;
    return {CubicGraph(std::move(out)), std::move(colors)};
}

}  // namespace kotzig
