#pragma once

// Command-line surface. Every subcommand produces a Report carrying the
// status, diagnostics, any result documents and per-stage timings; the text
// and JSON renderings carry identical information. Exit codes: 0 verified or
// found, 1 definitively no, 2 indeterminate (budget), 3 input error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "kotzig/io.hpp"
#include "kotzig/oracle.hpp"

namespace kotzig::cli {

constexpr long long kDefaultBudget = 50'000'000;

struct Report {
    std::string command;
    std::string status;  // verified | found | none | indeterminate | error
    int exit_code = 0;
    std::vector<std::string> details;
    std::map<std::string, std::string> documents;
    std::vector<std::pair<std::string, double>> timings_ms;

    std::string to_text() const {
        std::ostringstream out;
        out << "command: " << command << '\n';
        out << "status: " << status << '\n';
        out << "exit: " << exit_code << '\n';
        for (const auto& d : details) out << "detail: " << d << '\n';
        for (const auto& [name, ms] : timings_ms) out << "timing: " << name << ' ' << ms << " ms\n";
        for (const auto& [name, doc] : documents) {
            out << "document " << name << ":\n" << doc;
            if (!doc.empty() && doc.back() != '\n') out << '\n';
        }
        return out.str();
    }

    std::string to_json() const {
        nlohmann::json j;
        j["command"] = command;
        j["status"] = status;
        j["exit"] = exit_code;
        j["details"] = details;
        nlohmann::json docs = nlohmann::json::object();
        for (const auto& [name, doc] : documents) docs[name] = doc;
        j["documents"] = docs;
        nlohmann::json times = nlohmann::json::object();
        for (const auto& [name, ms] : timings_ms) times[name] = ms;
        j["timings_ms"] = times;
        return j.dump(2) + "\n";
    }
};

namespace detail {

class StageTimer {
public:
    explicit StageTimer(Report& report) : report_(report), last_(clock::now()), start_(last_) {}

    void stage(const std::string& name) {
        auto now = clock::now();
        report_.timings_ms.emplace_back(name, ms(last_, now));
        last_ = now;
    }

    void total() { report_.timings_ms.emplace_back("total", ms(start_, clock::now())); }

private:
    using clock = std::chrono::steady_clock;
    static double ms(clock::time_point a, clock::time_point b) {
        return std::chrono::duration<double, std::milli>(b - a).count();
    }
    Report& report_;
    clock::time_point last_;
    clock::time_point start_;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline MultiGraph load_graph(const std::string& path) {
    std::string text = read_file(path);
    std::istringstream in(text);
    std::string first;
    in >> first;
    if (first == "cubic-multigraph") return parse_edge_list(text);
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line))
        if (!line.empty()) return parse_graph6(line);
    throw ParseError(path + ": empty graph file");
}

inline ColorMap witness_colors_document(const ColorMap& colors) {
    FrameDocument doc;
    doc.colors = colors;
    (void)doc;
    return colors;
}

inline std::string colors_to_lines(const ColorMap& colors) {
    std::ostringstream out;
    for (const auto& [id, c] : colors) out << "color " << id << ' ' << c << '\n';
    return out.str();
}

}  // namespace detail

struct CommonArgs {
    std::string graph_path;
    std::string frame_path;
    std::string cover_path;
    std::string format = "text";
    long long budget = -2;  // -2: unset, fall back to env/default
    unsigned seed = 0;
    int k = 6;
    int h0_index = 0;
    std::string circuits = "4";
    std::string out_graph;
    std::string out_frame;

    StepBudget make_budget() const {
        long long b = budget;
        if (b == -2) {
            if (const char* env = std::getenv("KOTZIG_CDC_BUDGET"))
                b = std::strtoll(env, nullptr, 10);
            else
                b = kDefaultBudget;
        }
        return b < 0 ? StepBudget::unlimited() : StepBudget::of(b);
    }
};

namespace detail {

inline Report cmd_verify_kotzig(const CommonArgs& args) {
    Report rep;
    rep.command = "verify-kotzig";
    StageTimer timer(rep);
    CubicGraph g(load_graph(args.graph_path));
    timer.stage("parse");
    StepBudget budget = args.make_budget();
    auto res = find_kotzig_coloring(g, budget);
    timer.stage("search");
    if (res.status == SearchStatus::found) {
        rep.status = "found";
        rep.exit_code = 0;
        rep.details.push_back("Kotzig coloring found; all three color pairs are Hamilton circuits");
        rep.documents["witness"] = colors_to_lines(*res.value);
    } else if (res.status == SearchStatus::exhausted) {
        rep.status = "none";
        rep.exit_code = 1;
        rep.details.push_back(res.note);
    } else {
        rep.status = "indeterminate";
        rep.exit_code = 2;
        rep.details.push_back(res.note);
    }
    timer.total();
    return rep;
}

inline Report cmd_verify_semi_kotzig(const CommonArgs& args) {
    Report rep;
    rep.command = "verify-semi-kotzig";
    StageTimer timer(rep);
    CubicGraph g(load_graph(args.graph_path));
    timer.stage("parse");
    StepBudget budget = args.make_budget();
    auto res = find_semi_kotzig_coloring(g, budget);
    timer.stage("search");
    if (res.status == SearchStatus::found) {
        rep.status = "found";
        rep.exit_code = 0;
        rep.details.push_back("semi-Kotzig coloring found with " +
                              std::to_string(res.value->t()) + " F-circuits");
        rep.documents["witness"] = colors_to_lines(res.value->colors);
    } else if (res.status == SearchStatus::exhausted) {
        rep.status = "none";
        rep.exit_code = 1;
        rep.details.push_back(res.note);
    } else {
        rep.status = "indeterminate";
        rep.exit_code = 2;
        rep.details.push_back(res.note);
    }
    timer.total();
    return rep;
}

inline Report cmd_verify_frame(const CommonArgs& args) {
    Report rep;
    rep.command = "verify-frame";
    StageTimer timer(rep);
    CubicGraph g(load_graph(args.graph_path));
    FrameDocument doc = parse_frame_document(read_file(args.frame_path));
    timer.stage("parse");

    EdgeSet h = doc.h_edges();
    require_subset(g.graph(), h, "frame document");
    StepBudget budget = args.make_budget();
    auto res = verify_semi_kotzig_frame(g, h, budget, doc.colors.empty() ? nullptr : &doc.colors);
    timer.stage("verify");
    if (res.status == SearchStatus::found) {
        // cross-check the document's declared classification
        const Frame& frame = res.value->frame;
        std::set<EdgeSet> declared(doc.circuits.begin(), doc.circuits.end());
        std::set<EdgeSet> computed(frame.circuit_components.begin(), frame.circuit_components.end());
        bool h0_match = frame.non_circuit.has_value() == doc.h0.has_value() &&
                        (!doc.h0 || frame.non_circuit->edges == *doc.h0);
        if (declared != computed || !h0_match) {
            rep.status = "none";
            rep.exit_code = 1;
            rep.details.push_back("declared components disagree with the computed classification");
        } else {
            rep.status = "verified";
            rep.exit_code = 0;
            rep.details.push_back("semi-Kotzig frame with " +
                                  std::to_string(frame.circuit_components.size()) +
                                  " circuit component(s)" +
                                  (frame.non_circuit ? " and one non-circuit component" : ""));
            rep.documents["frame"] = serialize_frame_document(frame_to_document(*res.value, doc.graph_ref));
        }
    } else if (res.status == SearchStatus::exhausted) {
        rep.status = "none";
        rep.exit_code = 1;
        rep.details.push_back(res.note);
    } else {
        rep.status = "indeterminate";
        rep.exit_code = 2;
        rep.details.push_back(res.note);
    }
    timer.total();
    return rep;
}

inline Report cmd_find_frame(const CommonArgs& args) {
    Report rep;
    rep.command = "find-frame";
    StageTimer timer(rep);
    CubicGraph g(load_graph(args.graph_path));
    timer.stage("parse");
    StepBudget budget = args.make_budget();
    auto res = find_semi_kotzig_frame(g, budget, semi_kotzig_catalog());
    timer.stage("search");
    if (res.status == SearchStatus::found) {
        rep.status = "found";
        rep.exit_code = 0;
        rep.details.push_back(res.note);
        rep.documents["frame"] = serialize_frame_document(frame_to_document(*res.value));
    } else {
        // the catalog search is not exhaustive over all semi-Kotzig graphs,
        // so a miss is never a nonexistence proof
        rep.status = "indeterminate";
        rep.exit_code = 2;
        rep.details.push_back(res.note);
    }
    timer.total();
    return rep;
}

inline Report cmd_build_cdc(const CommonArgs& args) {
    Report rep;
    rep.command = "build-cdc";
    StageTimer timer(rep);
    CubicGraph g(load_graph(args.graph_path));
    FrameDocument doc = parse_frame_document(read_file(args.frame_path));
    timer.stage("parse");
    EdgeSet h = doc.h_edges();
    require_subset(g.graph(), h, "frame document");
    if (!is_bridgeless(g.graph())) {
        rep.status = "none";
        rep.exit_code = 1;
        rep.details.push_back("graph has a bridge; the construction requires bridgeless input");
        timer.total();
        return rep;
    }
    StepBudget budget = args.make_budget();
    auto res = verify_semi_kotzig_frame(g, h, budget, doc.colors.empty() ? nullptr : &doc.colors);
    timer.stage("verify-frame");
    if (res.status != SearchStatus::found) {
        rep.status = res.status == SearchStatus::exhausted ? "none" : "indeterminate";
        rep.exit_code = res.status == SearchStatus::exhausted ? 1 : 2;
        rep.details.push_back(res.note);
        timer.total();
        return rep;
    }
    SolveStats stats;
    DoubleCover cover = build_6cdc(g, *res.value, &stats);
    timer.stage("build");
    std::string why;
    if (!verify_double_cover(g.graph(), cover, &why))
        throw std::logic_error("constructed cover failed re-verification: " + why);
    timer.stage("recheck");
    rep.status = "verified";
    rep.exit_code = 0;
    rep.details.push_back("double cover with " + std::to_string(cover.size()) +
                          " even subgraphs, re-checked in process");
    rep.details.push_back("reductions: " + std::to_string(stats.claim1_removals) + " claim-1 edges, " +
                          std::to_string(stats.claim2_circuits) + " claim-2 circuits, " +
                          std::to_string(stats.switches) + " circuit switches");
    rep.documents["cover"] = serialize_cover_document(cover);
    timer.total();
    return rep;
}

inline Report cmd_verify_cdc(const CommonArgs& args) {
    Report rep;
    rep.command = "verify-cdc";
    StageTimer timer(rep);
    MultiGraph g = load_graph(args.graph_path);
    DoubleCover cover = parse_cover_document(read_file(args.cover_path));
    timer.stage("parse");
    std::string why;
    bool ok = verify_double_cover(g, cover, &why);
    timer.stage("verify");
    if (ok) {
        rep.status = "verified";
        rep.exit_code = 0;
        rep.details.push_back("every edge is covered exactly twice by even subgraphs");
    } else {
        rep.status = "none";
        rep.exit_code = 1;
        rep.details.push_back(why);
    }
    timer.total();
    return rep;
}

inline Report cmd_oracle_cdc(const CommonArgs& args) {
    Report rep;
    rep.command = "oracle-cdc";
    StageTimer timer(rep);
    MultiGraph g = load_graph(args.graph_path);
    timer.stage("parse");
    StepBudget budget = args.make_budget();
    auto res = brute_force_kcdc(g, args.k, budget);
    timer.stage("search");
    if (res.status == SearchStatus::found) {
        std::string why;
        if (!verify_double_cover(g, *res.value, &why))
            throw std::logic_error("oracle produced an invalid cover: " + why);
        rep.status = "found";
        rep.exit_code = 0;
        rep.details.push_back("double cover with " + std::to_string(res.value->size()) +
                              " even subgraphs (k = " + std::to_string(args.k) + ")");
        rep.documents["cover"] = serialize_cover_document(*res.value);
    } else if (res.status == SearchStatus::exhausted) {
        rep.status = "none";
        rep.exit_code = 1;
        rep.details.push_back(res.note);
    } else {
        rep.status = "indeterminate";
        rep.exit_code = 2;
        rep.details.push_back(res.note);
    }
    timer.total();
    return rep;
}

inline Report cmd_gen(const CommonArgs& args) {
    Report rep;
    rep.command = "gen";
    StageTimer timer(rep);
    std::vector<int> lengths;
    {
        std::istringstream ls(args.circuits);
        std::string tok;
        while (std::getline(ls, tok, ','))
            if (!tok.empty()) lengths.push_back(std::stoi(tok));
    }
    PlantedInstance inst = generate_planted_instance(args.seed, args.h0_index, lengths);
    timer.stage("generate");
    std::string gname = args.out_graph.empty() ? "planted.graph" : args.out_graph;
    FrameDocument doc = inst.frame_doc;
    doc.graph_ref = gname;
    std::string graph_text = serialize_edge_list(inst.graph.graph());
    std::string frame_text = serialize_frame_document(doc);
    if (!args.out_graph.empty()) {
        std::ofstream out(args.out_graph, std::ios::binary);
        out << graph_text;
    }
    if (!args.out_frame.empty()) {
        std::ofstream out(args.out_frame, std::ios::binary);
        out << frame_text;
    }
    timer.stage("write");
    rep.status = "found";
    rep.exit_code = 0;
    rep.details.push_back("planted instance with " + std::to_string(inst.graph.vertex_count()) +
                          " vertices and " + std::to_string(inst.graph.edge_count()) +
                          " edges; frame verified");
    rep.documents["graph"] = graph_text;
    rep.documents["frame"] = frame_text;
    timer.total();
    return rep;
}

}  // namespace detail

/// Parse and run one invocation. Never throws: malformed input and usage
/// errors come back as an error report with exit code 3.
inline Report run_command(const std::vector<std::string>& args) {
    CommonArgs common;
    CLI::App app{"construct and verify 6-even-subgraph double covers of cubic graphs"};
    app.name("kotzig-cdc");
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--format", common.format, "report format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--budget", common.budget, "step budget for searches (default env KOTZIG_CDC_BUDGET)");

    auto* vk = app.add_subcommand("verify-kotzig", "search for a Kotzig coloring");
    vk->add_option("--graph", common.graph_path, "graph file")->required();
    auto* vs = app.add_subcommand("verify-semi-kotzig", "search for a semi-Kotzig coloring");
    vs->add_option("--graph", common.graph_path, "graph file")->required();
    auto* vf = app.add_subcommand("verify-frame", "verify a semi-Kotzig frame");
    vf->add_option("--graph", common.graph_path, "graph file")->required();
    vf->add_option("--frame", common.frame_path, "frame file")->required();
    auto* ff = app.add_subcommand("find-frame", "search for a semi-Kotzig frame");
    ff->add_option("--graph", common.graph_path, "graph file")->required();
    auto* bc = app.add_subcommand("build-cdc", "build a double cover from a frame");
    bc->add_option("--graph", common.graph_path, "graph file")->required();
    bc->add_option("--frame", common.frame_path, "frame file")->required();
    auto* vc = app.add_subcommand("verify-cdc", "verify a double cover document");
    vc->add_option("--graph", common.graph_path, "graph file")->required();
    vc->add_option("--cover", common.cover_path, "cover file")->required();
    auto* oc = app.add_subcommand("oracle-cdc", "brute-force search for a k-even-subgraph double cover");
    oc->add_option("--graph", common.graph_path, "graph file")->required();
    oc->add_option("--k", common.k, "maximum number of members");
    auto* gen = app.add_subcommand("gen", "generate a planted instance with a verified frame");
    gen->add_option("--seed", common.seed, "generator seed");
    gen->add_option("--h0", common.h0_index, "catalog index of the non-circuit component");
    gen->add_option("--circuits", common.circuits, "comma list of even circuit lengths");
    gen->add_option("--out-graph", common.out_graph, "write the graph document here");
    gen->add_option("--out-frame", common.out_frame, "write the frame document here");

    std::vector<const char*> argv;
    argv.push_back("kotzig-cdc");
    for (const auto& a : args) argv.push_back(a.c_str());

    auto error_report = [&](const std::string& cmd, const std::string& msg) {
        Report rep;
        rep.command = cmd;
        rep.status = "error";
        rep.exit_code = 3;
        rep.details.push_back(msg);
        return rep;
    };

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return error_report(args.empty() ? "" : args.front(), std::string("usage: ") + e.what());
    }

    std::string cmd;
    try {
        if (vk->parsed()) return detail::cmd_verify_kotzig(common);
        if (vs->parsed()) return detail::cmd_verify_semi_kotzig(common);
        if (vf->parsed()) return detail::cmd_verify_frame(common);
        if (ff->parsed()) return detail::cmd_find_frame(common);
        if (bc->parsed()) return detail::cmd_build_cdc(common);
        if (vc->parsed()) return detail::cmd_verify_cdc(common);
        if (oc->parsed()) return detail::cmd_oracle_cdc(common);
        if (gen->parsed()) return detail::cmd_gen(common);
        return error_report("", "no subcommand given");
    } catch (const ParseError& e) {
        return error_report(cmd, e.what());
    } catch (const std::invalid_argument& e) {
        return error_report(cmd, e.what());
    } catch (const std::exception& e) {
        return error_report(cmd, std::string("internal error: ") + e.what());
    }
}

/// run_command plus printing; returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out) {
    Report rep = run_command(args);
    std::string format = "text";
    for (std::size_t i = 0; i + 1 < args.size(); ++i)
        if (args[i] == "--format") format = args[i + 1];
    out << (format == "json" ? rep.to_json() : rep.to_text());
    return rep.exit_code;
}

}  // namespace kotzig::cli
