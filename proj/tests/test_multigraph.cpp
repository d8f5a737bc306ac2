#include <catch2/catch_amalgamated.hpp>

#include "kotzig/catalog.hpp"
#include "kotzig/multigraph.hpp"
#include "test_util.hpp"

using namespace kotzig;

TEST_CASE("multigraph basics", "[multigraph]") {
    MultiGraph g(3);
    EdgeId a = g.add_edge(0, 1);
    EdgeId b = g.add_edge(0, 1);
    EdgeId l = g.add_edge(2, 2);
    CHECK(g.degree(0) == 2);
    CHECK(g.degree(2) == 2);  // loop counts twice
    CHECK(a != b);
    CHECK(g.edge(l).is_loop());
    CHECK_THROWS_AS(g.add_edge_with_id(a, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
}

TEST_CASE("cubic graph validation", "[multigraph]") {
    CHECK_NOTHROW(k4());
    CHECK_NOTHROW(theta_graph());
    MultiGraph bad(2);
    bad.add_edge(0, 1);
    CHECK_THROWS_AS(CubicGraph(bad), std::invalid_argument);
    MultiGraph looped(2);
    looped.add_edge(0, 1);
    looped.add_edge(0, 0);
    looped.add_edge(1, 1);
    CHECK_THROWS_AS(CubicGraph(looped), std::invalid_argument);
}

TEST_CASE("suppress inverts subdivision", "[multigraph][suppress]") {
    SECTION("K4 with one edge subdivided once") {
        const MultiGraph& g = k4().graph();
        MultiGraph sub = subdivide_edges(g, {{0, 1}});
        REQUIRE(sub.vertex_count() == 5);
        auto [back, map] = suppress(sub);
        CHECK(identical_graphs(back, g));
        CHECK(map.circuit_components.empty());
        // the merged path has two edges, everything else is a singleton
        int two_paths = 0;
        for (const auto& [id, path] : map.paths)
            if (path.size() == 2) ++two_paths;
        CHECK(two_paths == 1);
    }

    SECTION("join of two K4's, every edge subdivided twice") {
        const MultiGraph& j8 = semi_kotzig_catalog()[1].graph.graph();
        MultiGraph sub = testutil::subdivide_all(j8, 2);
        REQUIRE(sub.vertex_count() == j8.vertex_count() + 24);
        auto [back, map] = suppress(sub);
        CHECK(identical_graphs(back, j8));
        CHECK(canonical_certificate(back) == canonical_certificate(j8));
    }

    SECTION("a 6-circuit is returned unchanged and flagged") {
        MultiGraph c6 = MultiGraph::from_pairs(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
        auto [out, map] = suppress(c6);
        CHECK(identical_graphs(out, c6));
        REQUIRE(map.circuit_components.size() == 1);
        CHECK(map.circuit_components[0].size() == 6);
    }

    SECTION("isolated vertex is rejected") {
        MultiGraph g(3);
        g.add_edge(0, 1);
        g.add_edge(0, 1);
        CHECK_THROWS_AS(suppress(g), std::invalid_argument);
    }
}

TEST_CASE("suppress and re-expansion are inverse on random subdivisions", "[multigraph][suppress]") {
    for (unsigned seed = 0; seed < 12; ++seed) {
        const MultiGraph& base = seed % 2 ? petersen().graph() : k33().graph();
        MultiGraph sub = testutil::subdivide_random(base, seed, 3);
        auto [out, map] = suppress(sub);
        // paths partition the original edge set
        EdgeSet expanded = map.expand(out.edge_ids());
        CHECK(expanded == sub.edge_ids());
        std::size_t total = 0;
        for (const auto& [id, path] : map.paths) total += path.size();
        CHECK(total == sub.edge_ids().size());
        CHECK(identical_graphs(out, base));
        // internal path vertices had degree 2
        for (const auto& [id, path] : map.paths)
            for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                const Edge& e1 = sub.edge(path[i]);
                const Edge& e2 = sub.edge(path[i + 1]);
                int shared = (e1.u == e2.u || e1.u == e2.v) ? e1.u : e1.v;
                CHECK(sub.degree(shared) == 2);
            }
    }
}

TEST_CASE("contract", "[multigraph][contract]") {
    const MultiGraph& g = k4().graph();

    SECTION("perfect matching of K4 gives four parallel edges") {
        // matching {01, 23} leaves the four cross edges, each joining the two
        // contracted vertices; no loops arise
        EdgeSet matching{0, 5};  // edges (0,1) and (2,3)
        std::vector<int> comp;
        MultiGraph q = contract(g, matching, &comp);
        REQUIRE(q.vertex_count() == 2);
        REQUIRE(q.edge_count() == 4);
        for (const auto& e : q.edges()) {
            CHECK_FALSE(e.is_loop());
            CHECK(std::min(e.u, e.v) == 0);
            CHECK(std::max(e.u, e.v) == 1);
        }
        CHECK(q.degree(0) == 4);
        CHECK(q.degree(1) == 4);
    }

    SECTION("contracting nothing is the identity with singleton components") {
        std::vector<int> comp;
        MultiGraph q = contract(g, {}, &comp);
        CHECK(identical_graphs(q, g));
        for (int v = 0; v < 4; ++v) CHECK(comp[v] == v);
    }

    SECTION("contracting everything leaves a single bare vertex") {
        MultiGraph q = contract(g, g.edge_ids());
        CHECK(q.vertex_count() == 1);
        CHECK(q.edge_count() == 0);
    }

    SECTION("vertex count equals component count of (V, h)") {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 20; ++trial) {
            const MultiGraph& host = trial % 2 ? petersen().graph() : prism().graph();
            EdgeSet h;
            for (const auto& e : host.edges())
                if (rng() % 2) h.insert(e.id);
            std::vector<int> comp;
            MultiGraph q = contract(host, h, &comp);
            auto edge_comps = classify_components(host, h);
            std::set<int> isolated;
            std::set<int> covered;
            for (const auto& c : edge_comps) covered.insert(c.vertices.begin(), c.vertices.end());
            int expected = static_cast<int>(edge_comps.size()) +
                           (host.vertex_count() - static_cast<int>(covered.size()));
            CHECK(q.vertex_count() == expected);
        }
    }

    SECTION("loops arise from intra-component edges") {
        // contract one triangle of the prism: its third edge is gone with it,
        // but contracting only two triangle edges leaves the third as a loop
        const MultiGraph& pr = prism().graph();
        EdgeSet two{0, 1};  // (0,1), (1,2)
        MultiGraph q = contract(pr, two);
        int loops = 0;
        for (const auto& e : q.edges()) loops += e.is_loop();
        CHECK(loops == 1);
    }
}

TEST_CASE("circuit_decompose", "[multigraph][circuits]") {
    SECTION("a 4-circuit of K4 decomposes to itself") {
        const MultiGraph& g = k4().graph();
        EdgeSet c4{0, 3, 5, 2};  // 01, 12, 23, 30
        auto circs = circuit_decompose(g, c4);
        REQUIRE(circs.size() == 1);
        CHECK(circs[0] == c4);
    }

    SECTION("two vertex-disjoint 4-circuits") {
        MultiGraph g = MultiGraph::from_pairs(
            8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}});
        auto circs = circuit_decompose(g, g.edge_ids());
        REQUIRE(circs.size() == 2);
        CHECK(circs[0].size() == 4);
        CHECK(circs[1].size() == 4);
    }

    SECTION("symmetric difference of two Hamilton circuits of K3,3") {
        const MultiGraph& g = k33().graph();
        // vertices 0,1,2 vs 3,4,5; edge id for (i, j) with j>=3: 3*i + (j-3)
        EdgeSet ham1{0, 4, 8, 5, 7, 3};   // 0-3-1-4-2-5-0
        EdgeSet ham2{1, 3, 5, 6, 8, 2};   // hamilton 0-4-1-5-2-3-0... recomputed below
        // build the second circuit by walking 0-4-1-5-2-3-0:
        // (0,4)=1, (1,4)=4? careful: use explicit pairs
        auto edge_id = [&](int u, int v) {
            for (const auto& e : g.edges())
                if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return e.id;
            FAIL("edge not found");
            return -1;
        };
        ham1 = {edge_id(0, 3), edge_id(3, 1), edge_id(1, 4), edge_id(4, 2), edge_id(2, 5), edge_id(5, 0)};
        ham2 = {edge_id(0, 4), edge_id(4, 1), edge_id(1, 5), edge_id(5, 2), edge_id(2, 3), edge_id(3, 0)};
        EdgeSet sym;
        for (EdgeId id : ham1)
            if (!ham2.count(id)) sym.insert(id);
        for (EdgeId id : ham2)
            if (!ham1.count(id)) sym.insert(id);
        REQUIRE(is_even_subgraph(g, sym));
        auto circs = circuit_decompose(g, sym);
        // partition into connected 2-regular pieces covering everything
        std::size_t total = 0;
        for (const auto& c : circs) {
            total += c.size();
            auto comps = classify_components(g, c);
            REQUIRE(comps.size() == 1);
            CHECK(comps[0].is_circuit);
        }
        CHECK(total == sym.size());
    }

    SECTION("odd subgraph is rejected") {
        const MultiGraph& g = k4().graph();
        CHECK_THROWS_AS(circuit_decompose(g, EdgeSet{0}), std::invalid_argument);
    }

    SECTION("loops are single-edge circuits") {
        MultiGraph g(1);
        EdgeId l = g.add_edge(0, 0);
        auto circs = circuit_decompose(g, {l});
        REQUIRE(circs.size() == 1);
        CHECK(circs[0] == EdgeSet{l});
    }
}

TEST_CASE("is_bridgeless", "[multigraph][bridges]") {
    CHECK(is_bridgeless(k4().graph()));
    CHECK_FALSE(is_bridgeless(two_triangles_bridged()));
    CHECK(is_bridgeless(petersen().graph()));
    CHECK(is_bridgeless(theta_graph().graph()));

    SECTION("agrees with edge-deletion connectivity on fixtures and subdivisions") {
        std::vector<MultiGraph> cases;
        cases.push_back(k4().graph());
        cases.push_back(two_triangles_bridged());
        cases.push_back(petersen().graph());
        cases.push_back(testutil::subdivide_random(prism().graph(), 3, 2));
        MultiGraph path = MultiGraph::from_pairs(3, {{0, 1}, {1, 2}});
        cases.push_back(path);
        for (const auto& g : cases)
            CHECK(is_bridgeless(g) == !testutil::has_bridge_by_deletion(g));
    }
}

TEST_CASE("classify_components", "[multigraph]") {
    SECTION("a 2-factor of the prism made of two triangles") {
        const MultiGraph& g = prism().graph();
        EdgeSet triangles{0, 1, 2, 3, 4, 5};
        auto comps = classify_components(g, triangles);
        REQUIRE(comps.size() == 2);
        CHECK(comps[0].is_circuit);
        CHECK(comps[1].is_circuit);
    }

    SECTION("K4 inside a larger host is one non-circuit component") {
        MultiGraph host(6);
        std::vector<EdgeId> k4edges;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) k4edges.push_back(host.add_edge(i, j));
        host.add_edge(4, 5);
        EdgeSet s(k4edges.begin(), k4edges.end());
        auto comps = classify_components(host, s);
        REQUIRE(comps.size() == 1);
        CHECK_FALSE(comps[0].is_circuit);
        CHECK(comps[0].vertices == std::vector<int>{0, 1, 2, 3});
    }

    SECTION("empty set gives no components") {
        CHECK(classify_components(k4().graph(), {}).empty());
    }
}

TEST_CASE("even 2-factor contraction is even", "[multigraph][property]") {
    // for every even 2-factor F of a cubic fixture, contract(g, F) is even
    for (const auto& [name, g] : cubic_fixtures(10)) {
        const MultiGraph& mg = g.graph();
        auto comps = classify_components(mg, mg.edge_ids());
        // build 2-factors as complements of perfect matchings, filter even
        std::function<void(int, std::vector<bool>&, EdgeSet&)> search = [&](int v,
                                                                            std::vector<bool>& used,
                                                                            EdgeSet& pm) {
            while (v < mg.vertex_count() && used[v]) ++v;
            if (v == mg.vertex_count()) {
                EdgeSet f;
                for (const auto& e : mg.edges())
                    if (!pm.count(e.id)) f.insert(e.id);
                bool even_factor = true;
                for (const auto& c : classify_components(mg, f))
                    if (!c.is_circuit || c.edges.size() % 2 != 0) even_factor = false;
                if (even_factor) {
                    MultiGraph q = contract(mg, f);
                    for (int w = 0; w < q.vertex_count(); ++w) CHECK(q.degree(w) % 2 == 0);
                }
                return;
            }
            for (const auto& e : mg.edges()) {
                int other = -1;
                if (e.u == v) other = e.v;
                if (e.v == v) other = e.u;
                if (other < 0 || used[other] || other == v) continue;
                used[v] = used[other] = true;
                pm.insert(e.id);
                search(v + 1, used, pm);
                pm.erase(e.id);
                used[v] = used[other] = false;
            }
        };
        std::vector<bool> used(mg.vertex_count(), false);
        EdgeSet pm;
        search(0, used, pm);
    }
}

TEST_CASE("extract_subgraph preserves ids", "[multigraph]") {
    const MultiGraph& g = petersen().graph();
    EdgeSet s{0, 3, 7, 11};
    std::vector<int> old_of_new;
    MultiGraph sub = extract_subgraph(g, s, &old_of_new);
    CHECK(sub.edge_ids() == s);
    for (const auto& e : sub.edges()) {
        const Edge& orig = g.edge(e.id);
        CHECK(old_of_new[e.u] + old_of_new[e.v] == orig.u + orig.v);
    }
}

TEST_CASE("exhaustive tiny cubic multigraph catalog", "[multigraph][catalog]") {
    // connected loopless cubic multigraphs up to isomorphism
    CHECK(all_cubic_multigraphs(2).size() == 1);
    CHECK(all_cubic_multigraphs(4).size() == 2);
    auto six = all_cubic_multigraphs(6);
    CHECK(six.size() == 6);
    // the two simple ones are the prism and K3,3
    std::set<std::vector<std::pair<int, int>>> simple_forms;
    for (const auto& g : six) {
        std::set<std::pair<int, int>> seen;
        bool simple = true;
        for (const auto& e : g.graph().edges()) {
            auto k = std::minmax(e.u, e.v);
            if (!seen.insert({k.first, k.second}).second) simple = false;
        }
        if (simple) simple_forms.insert(exact_canonical_form(g.graph()));
    }
    CHECK(simple_forms == std::set{exact_canonical_form(prism().graph()),
                                   exact_canonical_form(k33().graph())});
}

TEST_CASE("canonical comparison helpers", "[multigraph]") {
    // degree refinement separates graphs with different degree data but not
    // regular graphs of the same order; the exact form handles tiny cases
    CHECK(canonical_certificate(k4().graph()) != canonical_certificate(k33().graph()));
    CHECK(canonical_certificate(k4().graph()) != canonical_certificate(two_triangles_bridged()));
    CHECK(canonical_certificate(k4().graph()) ==
          canonical_certificate(extract_subgraph(k4().graph(), k4().graph().edge_ids())));
    CHECK(exact_canonical_form(prism().graph()) != exact_canonical_form(k33().graph()));
    CHECK(exact_canonical_form(prism().graph()) == exact_canonical_form(prism().graph()));
}
