#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <regex>

#include "json.hpp"
#include "kotzig/cli.hpp"

using namespace kotzig;
namespace fs = std::filesystem;

namespace {

fs::path tmp_dir() {
    fs::path dir = fs::temp_directory_path() / "kotzig-cli-tests";
    fs::create_directories(dir);
    return dir;
}

std::string write_tmp(const std::string& name, const std::string& content) {
    fs::path p = tmp_dir() / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p.string();
}

std::string k4_graph_file() { return write_tmp("k4.graph", serialize_edge_list(k4().graph())); }

/// Timings vary run to run; replace their values before comparisons.
std::string normalize_text(std::string s) {
    return std::regex_replace(s, std::regex(R"(timing: (\S+) [0-9.e+-]+ ms)"), "timing: $1 X ms");
}

nlohmann::json normalize_json(const std::string& s) {
    nlohmann::json j = nlohmann::json::parse(s);
    for (auto& [key, value] : j["timings_ms"].items()) value = "X";
    return j;
}

}  // namespace

TEST_CASE("cli end to end: gen, build-cdc, verify-cdc", "[cli]") {
    auto dir = tmp_dir();
    std::string graph_path = (dir / "planted.graph").string();
    std::string frame_path = (dir / "planted.frame").string();

    auto gen = cli::run_command({"gen", "--seed", "5", "--h0", "1", "--circuits", "4,6",
                                 "--out-graph", graph_path, "--out-frame", frame_path});
    REQUIRE(gen.exit_code == 0);
    REQUIRE(fs::exists(graph_path));
    REQUIRE(fs::exists(frame_path));

    auto build = cli::run_command({"build-cdc", "--graph", graph_path, "--frame", frame_path});
    REQUIRE(build.exit_code == 0);
    CHECK(build.status == "verified");
    REQUIRE(build.documents.count("cover"));
    std::string cover_path = write_tmp("planted.cover", build.documents.at("cover"));

    auto verify = cli::run_command({"verify-cdc", "--graph", graph_path, "--cover", cover_path});
    CHECK(verify.exit_code == 0);
    CHECK(verify.status == "verified");

    SECTION("a tampered cover is rejected with the offending edge") {
        DoubleCover cover = parse_cover_document(build.documents.at("cover"));
        REQUIRE(cover.size() >= 2);
        cover.pop_back();
        std::string bad_path = write_tmp("bad.cover", serialize_cover_document(cover));
        auto rejected = cli::run_command({"verify-cdc", "--graph", graph_path, "--cover", bad_path});
        CHECK(rejected.exit_code == 1);
        CHECK(rejected.status == "none");
        REQUIRE_FALSE(rejected.details.empty());
        CHECK(rejected.details[0].find("edge") != std::string::npos);
    }
}

TEST_CASE("cli oracle-cdc", "[cli]") {
    auto rep = cli::run_command({"oracle-cdc", "--graph", k4_graph_file(), "--k", "3"});
    CHECK(rep.exit_code == 0);
    CHECK(rep.status == "found");
    DoubleCover cover = parse_cover_document(rep.documents.at("cover"));
    CHECK(cover.size() == 3);

    auto none = cli::run_command({"oracle-cdc", "--graph", k4_graph_file(), "--k", "1"});
    CHECK(none.exit_code == 1);
    CHECK(none.status == "none");
}

TEST_CASE("cli coloring searches", "[cli]") {
    std::string k4_path = k4_graph_file();
    auto kotzig_rep = cli::run_command({"verify-kotzig", "--graph", k4_path});
    CHECK(kotzig_rep.exit_code == 0);

    std::string pet_path = write_tmp("petersen.graph", serialize_edge_list(petersen().graph()));
    auto pet_rep = cli::run_command({"verify-semi-kotzig", "--graph", pet_path});
    CHECK(pet_rep.exit_code == 1);  // definitively none

    auto tiny = cli::run_command({"--budget", "2", "verify-semi-kotzig", "--graph", pet_path});
    CHECK(tiny.exit_code == 2);  // indeterminate under budget
}

TEST_CASE("cli find-frame and verify-frame", "[cli]") {
    std::string k33_path = write_tmp("k33.graph", serialize_edge_list(k33().graph()));
    auto found = cli::run_command({"find-frame", "--graph", k33_path});
    REQUIRE(found.exit_code == 0);
    std::string frame_path = write_tmp("k33.frame", found.documents.at("frame"));

    auto verified = cli::run_command({"verify-frame", "--graph", k33_path, "--frame", frame_path});
    CHECK(verified.exit_code == 0);
    CHECK(verified.status == "verified");

    auto built = cli::run_command({"build-cdc", "--graph", k33_path, "--frame", frame_path});
    CHECK(built.exit_code == 0);

    SECTION("a frame document with a wrong classification is rejected") {
        // declare the Hamilton circuit as h0 instead of a circuit component
        FrameDocument doc = parse_frame_document(found.documents.at("frame"));
        REQUIRE_FALSE(doc.circuits.empty());
        FrameDocument wrong;
        wrong.h0 = doc.circuits[0];
        std::string wrong_path = write_tmp("wrong.frame", serialize_frame_document(wrong));
        auto rejected = cli::run_command({"verify-frame", "--graph", k33_path, "--frame", wrong_path});
        CHECK(rejected.exit_code == 1);
    }
}

TEST_CASE("cli input errors give exit 3", "[cli]") {
    auto missing = cli::run_command({"verify-kotzig", "--graph", "/nonexistent/file"});
    CHECK(missing.exit_code == 3);
    CHECK(missing.status == "error");

    std::string garbage = write_tmp("garbage.graph", "cubic-multigraph 2 1\nedge 0 0 0\n");
    auto bad = cli::run_command({"verify-kotzig", "--graph", garbage});
    CHECK(bad.exit_code == 3);

    auto usage = cli::run_command({"no-such-command"});
    CHECK(usage.exit_code == 3);

    auto odd = cli::run_command({"gen", "--circuits", "3"});
    CHECK(odd.exit_code == 3);
}

TEST_CASE("text and json reports carry identical information", "[cli][golden]") {
    std::string k4_path = k4_graph_file();
    DoubleCover cover{{0, 3, 5, 2}, {0, 4, 5, 1}, {1, 3, 4, 2}};
    std::string cover_path = write_tmp("k4.cover", serialize_cover_document(cover));

    auto rep = cli::run_command({"verify-cdc", "--graph", k4_path, "--cover", cover_path});
    std::string text = normalize_text(rep.to_text());
    nlohmann::json j = normalize_json(rep.to_json());

    // same fields both ways
    CHECK(j["command"] == rep.command);
    CHECK(j["status"] == rep.status);
    CHECK(j["exit"] == rep.exit_code);
    for (const auto& d : rep.details) CHECK(text.find("detail: " + d) != std::string::npos);
    CHECK(j["details"].size() == rep.details.size());
    for (const auto& [name, doc] : rep.documents) {
        CHECK(j["documents"][name] == doc);
        CHECK(text.find("document " + name + ":") != std::string::npos);
    }
    CHECK(j["timings_ms"].size() == rep.timings_ms.size());

    SECTION("golden files") {
        auto read_golden = [](const std::string& name) {
            std::ifstream in(std::string(KOTZIG_GOLDEN_DIR) + "/" + name, std::ios::binary);
            REQUIRE(in.good());
            std::ostringstream ss;
            ss << in.rdbuf();
            return ss.str();
        };
        CHECK(text == normalize_text(read_golden("verify_cdc_k4.txt")));
        CHECK(normalize_json(rep.to_json()) == normalize_json(read_golden("verify_cdc_k4.json")));
    }
}
