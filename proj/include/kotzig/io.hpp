#pragma once

// File formats and instance generation. Multigraphs travel as edge-list
// documents (graph6 handles simple graphs only), frames as component lists
// with optional witness colors, covers as member lists. All three formats
// round-trip bit-exactly through parse/serialize.

#include <random>
#include <sstream>

#include "kotzig/catalog.hpp"
#include "kotzig/cdc.hpp"
#include "kotzig/frame.hpp"

namespace kotzig {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// ---------------------------------------------------------------------------
// EdgeListDocument:  cubic-multigraph <n> <m>  /  edge <id> <u> <v>  lines

inline MultiGraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1, m = -1;
    MultiGraph g;
    int edges_seen = 0;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok.empty() || tok[0] == '#') continue;
        if (tok == "cubic-multigraph") {
            if (n >= 0) throw ParseError("line " + std::to_string(lineno) + ": duplicate header");
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw ParseError("line " + std::to_string(lineno) + ": bad header counts");
            g = MultiGraph(n);
        } else if (tok == "edge") {
            if (n < 0) throw ParseError("line " + std::to_string(lineno) + ": edge before header");
            long long id, u, v;
            if (!(ls >> id >> u >> v))
                throw ParseError("line " + std::to_string(lineno) + ": bad edge line");
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw ParseError("line " + std::to_string(lineno) + ": endpoint out of range");
            if (u == v) throw ParseError("line " + std::to_string(lineno) + ": loops are not allowed");
            if (g.has_edge(static_cast<EdgeId>(id)))
                throw ParseError("line " + std::to_string(lineno) + ": duplicate edge id");
            g.add_edge_with_id(static_cast<EdgeId>(id), static_cast<int>(u), static_cast<int>(v));
            ++edges_seen;
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown directive '" + tok + "'");
        }
    }
    if (n < 0) throw ParseError("missing 'cubic-multigraph' header");
    if (edges_seen != m)
        throw ParseError("header announces " + std::to_string(m) + " edges, found " +
                         std::to_string(edges_seen));
    return g;
}

inline std::string serialize_edge_list(const MultiGraph& g) {
    std::ostringstream out;
    out << "cubic-multigraph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) out << "edge " << e.id << ' ' << e.u << ' ' << e.v << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// FrameDocument

struct FrameDocument {
    std::optional<std::string> graph_ref;
    std::vector<EdgeSet> circuits;
    std::optional<EdgeSet> h0;
    ColorMap colors;  // optional witness seed on H0 edges

    EdgeSet h_edges() const {
        EdgeSet h;
        for (const auto& c : circuits) h.insert(c.begin(), c.end());
        if (h0) h.insert(h0->begin(), h0->end());
        return h;
    }
};

inline FrameDocument parse_frame_document(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    FrameDocument doc;
    int lineno = 0;
    std::set<EdgeId> used;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok.empty() || tok[0] == '#') continue;
        if (tok == "graph") {
            std::string ref;
            ls >> ref;
            doc.graph_ref = ref;
        } else if (tok == "component") {
            std::string kind;
            if (!(ls >> kind)) throw ParseError("line " + std::to_string(lineno) + ": missing kind");
            EdgeSet ids;
            long long id;
            while (ls >> id) {
                if (!ids.insert(static_cast<EdgeId>(id)).second || used.count(static_cast<EdgeId>(id)))
                    throw ParseError("line " + std::to_string(lineno) + ": edge " + std::to_string(id) +
                                     " listed twice");
            }
            used.insert(ids.begin(), ids.end());
            if (ids.empty()) throw ParseError("line " + std::to_string(lineno) + ": empty component");
            if (kind == "circuit") {
                doc.circuits.push_back(std::move(ids));
            } else if (kind == "h0") {
                if (doc.h0) throw ParseError("line " + std::to_string(lineno) + ": second h0 component");
                doc.h0 = std::move(ids);
            } else {
                throw ParseError("line " + std::to_string(lineno) + ": unknown component kind '" + kind + "'");
            }
        } else if (tok == "color") {
            long long id;
            int c;
            if (!(ls >> id >> c) || c < 0 || c > 2)
                throw ParseError("line " + std::to_string(lineno) + ": bad color line");
            doc.colors[static_cast<EdgeId>(id)] = c;
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown directive '" + tok + "'");
        }
    }
    return doc;
}

inline std::string serialize_frame_document(const FrameDocument& doc) {
    std::ostringstream out;
    if (doc.graph_ref) out << "graph " << *doc.graph_ref << '\n';
    for (const auto& c : doc.circuits) {
        out << "component circuit";
        for (EdgeId id : c) out << ' ' << id;
        out << '\n';
    }
    if (doc.h0) {
        out << "component h0";
        for (EdgeId id : *doc.h0) out << ' ' << id;
        out << '\n';
    }
    for (const auto& [id, c] : doc.colors) out << "color " << id << ' ' << c << '\n';
    return out.str();
}

inline FrameDocument frame_to_document(const SemiKotzigFrame& sf,
                                       std::optional<std::string> graph_ref = std::nullopt) {
    FrameDocument doc;
    doc.graph_ref = std::move(graph_ref);
    doc.circuits = sf.frame.circuit_components;
    if (sf.frame.non_circuit) {
        doc.h0 = sf.frame.non_circuit->edges;
        if (sf.witness)
            for (const auto& [sid, path] : sf.frame.non_circuit->map.paths)
                for (EdgeId id : path) doc.colors[id] = sf.witness->colors.at(sid);
    }
    return doc;
}

// ---------------------------------------------------------------------------
// CoverDocument:  cover <count>  /  even <edge ids...>

inline DoubleCover parse_cover_document(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long long announced = -1;
    DoubleCover cover;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok.empty() || tok[0] == '#') continue;
        if (tok == "cover") {
            if (announced >= 0) throw ParseError("line " + std::to_string(lineno) + ": duplicate header");
            if (!(ls >> announced) || announced < 0)
                throw ParseError("line " + std::to_string(lineno) + ": bad cover count");
        } else if (tok == "even") {
            if (announced < 0) throw ParseError("line " + std::to_string(lineno) + ": member before header");
            EdgeSet ids;
            long long id;
            while (ls >> id) ids.insert(static_cast<EdgeId>(id));
            cover.push_back(std::move(ids));
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown directive '" + tok + "'");
        }
    }
    if (announced < 0) throw ParseError("missing 'cover' header");
    if (static_cast<long long>(cover.size()) != announced)
        throw ParseError("header announces " + std::to_string(announced) + " members, found " +
                         std::to_string(cover.size()));
    return cover;
}

inline std::string serialize_cover_document(const DoubleCover& cover) {
    std::ostringstream out;
    out << "cover " << cover.size() << '\n';
    for (const auto& member : cover) {
        out << "even";
        for (EdgeId id : member) out << ' ' << id;
        out << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// graph6 (simple graphs only)

inline MultiGraph parse_graph6(const std::string& line_in) {
    std::string line = line_in;
    const std::string header = ">>graph6<<";
    if (line.rfind(header, 0) == 0) line = line.substr(header.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    if (line.empty()) throw ParseError("graph6: empty input");
    for (char ch : line)
        if (ch < 63 || ch > 126) throw ParseError("graph6: byte out of printable range");

    std::size_t pos = 0;
    long long n;
    if (line[0] != 126) {
        n = line[0] - 63;
        pos = 1;
    } else if (line.size() >= 4 && line[1] != 126) {
        n = 0;
        for (int i = 1; i <= 3; ++i) n = (n << 6) | (line[i] - 63);
        pos = 4;
    } else if (line.size() >= 8) {
        n = 0;
        for (int i = 2; i <= 7; ++i) n = (n << 6) | (line[i] - 63);
        pos = 8;
    } else {
        throw ParseError("graph6: malformed length prefix");
    }
    if (n > 100000) throw ParseError("graph6: implausible vertex count");
    long long bits = n * (n - 1) / 2;
    std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
    if (line.size() - pos != bytes)
        throw ParseError("graph6: expected " + std::to_string(bytes) + " data bytes, found " +
                         std::to_string(line.size() - pos));

    MultiGraph g(static_cast<int>(n));
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = line[pos + bit / 6] - 63;
            if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    // padding bits must be zero
    for (long long b = bits; b < static_cast<long long>(bytes) * 6; ++b) {
        int byte = line[pos + b / 6] - 63;
        if ((byte >> (5 - b % 6)) & 1) throw ParseError("graph6: nonzero padding");
    }
    return g;
}

inline std::string to_graph6(const MultiGraph& g) {
    const int n = g.vertex_count();
    std::set<std::pair<int, int>> present;
    for (const auto& e : g.edges()) {
        if (e.is_loop()) throw std::invalid_argument("graph6 cannot encode loops");
        auto key = std::minmax(e.u, e.v);
        if (!present.insert({key.first, key.second}).second)
            throw std::invalid_argument("graph6 cannot encode parallel edges");
    }
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        throw std::invalid_argument("graph6: too many vertices");
    }
    long long bits = static_cast<long long>(n) * (n - 1) / 2;
    std::vector<int> data((bits + 5) / 6, 0);
    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (present.count({i, j})) data[bit / 6] |= 1 << (5 - bit % 6);
    for (int byte : data) out.push_back(static_cast<char>(63 + byte));
    return out;
}

// ---------------------------------------------------------------------------
// Planted instances

struct PlantedInstance {
    CubicGraph graph;
    EdgeSet h_edges;
    FrameDocument frame_doc;
    int h0_catalog_index;
};

/// Manufacture a cubic graph with a known semi-Kotzig frame: subdivide the
/// chosen catalog graph's edges, add disjoint even circuits, and wire a
/// random perfect matching over all degree-2 vertices. Retries the wiring
/// deterministically until the result is connected, bridgeless and passes
/// verify_semi_kotzig_frame; the generator's output is never trusted without
/// that final check.
inline PlantedInstance generate_planted_instance(unsigned seed, int h0_catalog_index,
                                                 const std::vector<int>& circuit_lengths) {
    const auto& catalog = semi_kotzig_catalog();
    if (h0_catalog_index < 0 || h0_catalog_index >= static_cast<int>(catalog.size()))
        throw std::invalid_argument("h0 catalog index out of range");
    for (int len : circuit_lengths)
        if (len < 4 || len % 2 != 0)
            throw std::invalid_argument("circuit lengths must be even and at least 4");

    const FrameCatalogEntry& entry = catalog[h0_catalog_index];
    const MultiGraph& base = entry.graph.graph();
    std::mt19937 rng(seed * 2654435761u + 97u);

    for (int attempt = 0; attempt < 400; ++attempt) {
        // subdivision counts, even total so that G/H stays even at H0
        std::vector<int> sub_count;
        int total_subs = 0;
        for (int i = 0; i < base.edge_count(); ++i) {
            int k = std::uniform_int_distribution<int>(0, 2)(rng);
            sub_count.push_back(k);
            total_subs += k;
        }
        if (total_subs % 2 != 0) {
            ++sub_count.back();
            ++total_subs;
        }

        int n = base.vertex_count() + total_subs;
        for (int len : circuit_lengths) n += len;
        MultiGraph g(n);
        EdgeSet h;
        ColorMap seed_colors;
        std::vector<int> stubs;
        int next_vertex = base.vertex_count();
        EdgeId next_edge = 0;

        for (const auto& be : base.edges()) {
            int col = entry.witness.colors.at(be.id);
            int prev = be.u;
            for (int i = 0; i < sub_count[be.id]; ++i) {
                g.add_edge_with_id(next_edge, prev, next_vertex);
                h.insert(next_edge);
                seed_colors[next_edge] = col;
                ++next_edge;
                stubs.push_back(next_vertex);
                prev = next_vertex++;
            }
            g.add_edge_with_id(next_edge, prev, be.v);
            h.insert(next_edge);
            seed_colors[next_edge] = col;
            ++next_edge;
        }

        std::vector<EdgeSet> circuit_sets;
        for (int len : circuit_lengths) {
            EdgeSet circ;
            int first = next_vertex;
            for (int i = 0; i < len; ++i) {
                int a = next_vertex + i;
                int b = i + 1 == len ? first : a + 1;
                g.add_edge_with_id(next_edge, a, b);
                circ.insert(next_edge);
                h.insert(next_edge);
                ++next_edge;
                stubs.push_back(a);
            }
            next_vertex += len;
            circuit_sets.push_back(std::move(circ));
        }

        std::shuffle(stubs.begin(), stubs.end(), rng);
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            if (stubs[i] == stubs[i + 1]) {
                ok = false;
                break;
            }
            g.add_edge_with_id(next_edge++, stubs[i], stubs[i + 1]);
        }
        if (!ok || stubs.size() % 2 != 0) continue;

        if (!is_connected(g) || !is_bridgeless(g)) continue;
        CubicGraph cubic(std::move(g));
        StepBudget budget = StepBudget::unlimited();
        auto res = verify_semi_kotzig_frame(cubic, h, budget, &seed_colors);
        if (res.status != SearchStatus::found) continue;

        FrameDocument doc = frame_to_document(*res.value);
        return PlantedInstance{std::move(cubic), std::move(h), std::move(doc), h0_catalog_index};
    }
    throw std::runtime_error("generate_planted_instance: no feasible wiring found");
}

}  // namespace kotzig
