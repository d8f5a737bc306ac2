#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "kotzig/io.hpp"
#include "kotzig/catalog.hpp"

using namespace kotzig;

TEST_CASE("edge list documents", "[io]") {
    SECTION("round trip") {
        const MultiGraph& g = petersen().graph();
        std::string text = serialize_edge_list(g);
        MultiGraph back = parse_edge_list(text);
        CHECK(identical_graphs(back, g));
        CHECK(serialize_edge_list(back) == text);
    }

    SECTION("parse errors are specific") {
        CHECK_THROWS_AS(parse_edge_list("edge 0 0 1\n"), ParseError);
        CHECK_THROWS_AS(parse_edge_list("cubic-multigraph 2 1\nedge 0 0 0\n"), ParseError);  // loop
        CHECK_THROWS_AS(parse_edge_list("cubic-multigraph 2 2\nedge 0 0 1\n"), ParseError);  // count
        CHECK_THROWS_AS(parse_edge_list("cubic-multigraph 2 1\nedge 0 0 5\n"), ParseError);  // range
        CHECK_THROWS_AS(parse_edge_list("cubic-multigraph 2 2\nedge 0 0 1\nedge 0 0 1\n"), ParseError);
    }

    SECTION("comments and blank lines are tolerated") {
        MultiGraph g = parse_edge_list("# a theta graph\ncubic-multigraph 2 3\n\nedge 0 0 1\nedge 1 0 1\nedge 2 0 1\n");
        CHECK(g.vertex_count() == 2);
        CHECK(g.edge_count() == 3);
    }
}

TEST_CASE("frame documents", "[io]") {
    auto inst = generate_planted_instance(7, 1, {4, 6});

    SECTION("round trip") {
        std::string text = serialize_frame_document(inst.frame_doc);
        FrameDocument back = parse_frame_document(text);
        CHECK(back.h_edges() == inst.frame_doc.h_edges());
        CHECK(back.circuits.size() == inst.frame_doc.circuits.size());
        CHECK(back.h0 == inst.frame_doc.h0);
        CHECK(back.colors == inst.frame_doc.colors);
        CHECK(serialize_frame_document(back) == text);
    }

    SECTION("duplicate edges across components are rejected") {
        CHECK_THROWS_AS(parse_frame_document("component circuit 1 2\ncomponent h0 2 3\n"), ParseError);
    }

    SECTION("a second h0 component is rejected") {
        CHECK_THROWS_AS(parse_frame_document("component h0 1 2\ncomponent h0 3 4\n"), ParseError);
    }
}

TEST_CASE("cover documents", "[io]") {
    SECTION("round trip") {
        DoubleCover cover{{0, 3, 5, 2}, {0, 4, 5, 1}, {1, 3, 4, 2}};
        std::string text = serialize_cover_document(cover);
        DoubleCover back = parse_cover_document(text);
        CHECK(back == cover);
        CHECK(serialize_cover_document(back) == text);
    }

    SECTION("member count must match the header") {
        CHECK_THROWS_AS(parse_cover_document("cover 2\neven 0 1\n"), ParseError);
    }
}

TEST_CASE("graph6", "[io][graph6]") {
    SECTION("C~ decodes to K4") {
        MultiGraph g = parse_graph6("C~");
        CHECK(identical_graphs(g, k4().graph()));
    }

    SECTION("D?? decodes to five isolated vertices") {
        MultiGraph g = parse_graph6("D??");
        CHECK(g.vertex_count() == 5);
        CHECK(g.edge_count() == 0);
    }

    SECTION("the optional >>graph6<< header is accepted") {
        CHECK(identical_graphs(parse_graph6(">>graph6<<C~"), k4().graph()));
    }

    SECTION("encode-decode round trips on simple fixtures") {
        for (const auto& [name, g] : cubic_fixtures(14)) {
            bool simple = true;
            std::set<std::pair<int, int>> seen;
            for (const auto& e : g.graph().edges()) {
                auto key = std::minmax(e.u, e.v);
                if (!seen.insert({key.first, key.second}).second) simple = false;
            }
            if (!simple) continue;
            std::string code = to_graph6(g.graph());
            CHECK(identical_graphs(parse_graph6(code), g.graph()));
            CHECK(to_graph6(parse_graph6(code)) == code);
        }
    }

    SECTION("round trips on random simple graphs") {
        std::mt19937 rng(42);
        for (int trial = 0; trial < 30; ++trial) {
            int n = std::uniform_int_distribution<int>(1, 20)(rng);
            MultiGraph g(n);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (rng() % 2) g.add_edge(i, j);
            std::string code = to_graph6(g);
            MultiGraph back = parse_graph6(code);
            CHECK(identical_graphs(back, g));
            CHECK(to_graph6(back) == code);
        }
    }

    SECTION("malformed inputs are rejected") {
        CHECK_THROWS_AS(parse_graph6(""), ParseError);
        CHECK_THROWS_AS(parse_graph6("C"), ParseError);          // missing data bytes
        CHECK_THROWS_AS(parse_graph6("C~~"), ParseError);        // trailing bytes
        CHECK_THROWS_AS(parse_graph6("C\x07"), ParseError);      // non-printable
        CHECK_THROWS_AS(to_graph6(theta_graph().graph()), std::invalid_argument);  // parallel edges
    }
}

TEST_CASE("generate_planted_instance", "[io][generator]") {
    SECTION("outputs verify for every catalog entry") {
        for (int idx = 0; idx < 3; ++idx) {
            auto inst = generate_planted_instance(10 + idx, idx, {4});
            StepBudget budget = StepBudget::unlimited();
            auto res = verify_semi_kotzig_frame(inst.graph, inst.h_edges, budget,
                                                &inst.frame_doc.colors);
            CHECK(res.status == SearchStatus::found);
            CHECK(is_connected(inst.graph.graph()));
            CHECK(is_bridgeless(inst.graph.graph()));
        }
    }

    SECTION("odd circuit lengths are rejected before anything is emitted") {
        CHECK_THROWS_AS(generate_planted_instance(0, 0, {3}), std::invalid_argument);
        CHECK_THROWS_AS(generate_planted_instance(0, 0, {2}), std::invalid_argument);
    }

    SECTION("the same seed reproduces the same instance") {
        auto a = generate_planted_instance(21, 2, {4, 4});
        auto b = generate_planted_instance(21, 2, {4, 4});
        CHECK(identical_graphs(a.graph.graph(), b.graph.graph()));
        CHECK(a.h_edges == b.h_edges);
        CHECK(serialize_frame_document(a.frame_doc) == serialize_frame_document(b.frame_doc));
    }

    SECTION("an out-of-range catalog index is rejected") {
        CHECK_THROWS_AS(generate_planted_instance(0, 9, {4}), std::invalid_argument);
    }
}
