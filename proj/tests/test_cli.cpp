#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "girthlab/graph6.hpp"
#include "girthlab/named_graphs.hpp"
#include "oracles/boost_iso.hpp"
#include "oracles/networkx_frozen.hpp"

using namespace girthlab;
using nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
    json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    Run r;
    r.code = cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

/// Runs the installed binary, capturing stdout only; stderr goes to a file.
Run run_binary(const std::string& args) {
    const auto err_path = std::filesystem::temp_directory_path() / "girthlab_cli_stderr.txt";
    const std::string cmd = std::string(GIRTHLAB_CLI_PATH) + " " + args + " 2>" + err_path.string();
    Run r;
    std::FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream e(err_path);
    std::stringstream ss;
    ss << e.rdbuf();
    r.err = ss.str();
    std::filesystem::remove(err_path);
    return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
    const auto path = (std::filesystem::temp_directory_path() / name).string();
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST_CASE("analyze petersen") {
    const Run r = run({"analyze", "named:petersen"});
    REQUIRE(r.code == 0);
    const json c = r.report()["entries"][0]["classification"];
    CHECK(c["vgr"] == true);
    CHECK(c["lambda"] == 6);
    CHECK(c["egr"] == true);
    CHECK(c["lambda_edge"] == 4);
    CHECK(c["two_epsilon"] == 0);
    CHECK(c["epsilon"] == "0");
    CHECK(c["signature"] == json::array({4, 4, 4}));
    CHECK(r.report()["summary"]["graphs"] == 1);
    CHECK(r.report()["tool_version"] == "0.1.0");
    const json checks = r.report()["entries"][0]["bound_checks"];
    for (const auto& b : checks) CHECK(b["holds"] == true);
}

TEST_CASE("analyze dodecahedron") {
    const Run r = run({"analyze", "named:dodecahedron"});
    REQUIRE(r.code == 0);
    const json c = r.report()["entries"][0]["classification"];
    CHECK(c["lambda"] == 3);
    CHECK(c["two_epsilon"] == 6);
    CHECK(c["epsilon"] == "3");
    CHECK(c["total_girth_cycles"] == frozen::kNamed[2].cycles);
}

TEST_CASE("analyze a file with a malformed third line") {
    const std::string path =
        temp_file("girthlab_corrupt.g6", std::string(frozen::kNamed[0].graph6) + "\n" + std::string(frozen::kNamed[1].graph6) + "\nI?a!b\n");
    const Run r = run({"analyze", path});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 3") != std::string::npos);
    CHECK(r.out.empty());
    std::filesystem::remove(path);
}

TEST_CASE("analyze reads several files, stdin markers and sparse6") {
    const std::string path = temp_file("girthlab_mixed.txt", std::string(frozen::kPetersenSparse6) + "\n\n" +
                                                                  std::string(frozen::kNamed[4].graph6) + "\n");
    const Run r = run({"analyze", path, "named:heawood"});
    REQUIRE(r.code == 0);
    const json j = r.report();
    REQUIRE(j["entries"].size() == 3);
    CHECK(j["entries"][0]["source"] == path + ":1");
    CHECK(j["entries"][1]["source"] == path + ":3");
    CHECK(j["entries"][1]["classification"]["lambda"] == 6);
    CHECK(j["entries"][2]["classification"]["lambda"] == 12);
    std::filesystem::remove(path);
}

TEST_CASE("analyze flags disconnected input and unknown names") {
    CHECK(run({"analyze", "named:path(4)"}).code == 2);
    CHECK(run({"analyze", "named:nonsense"}).code == 2);
    CHECK(run({"analyze", "/nonexistent/file.g6"}).code == 2);
    CHECK(run({"analyze", "named:petersen", "--engine", "warp"}).code == 2);
    CHECK(run({"analyze", "named:cycle(6)", "--engine", "girth5"}).code == 2);
    CHECK(run({"analyze", "named:petersen", "--engine", "girth5"}).code == 0);
}

TEST_CASE("analyze csv") {
    const Run r = run({"analyze", "named:petersen", "--csv"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "source,vertex,lambda,signature");
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        CHECK(line.rfind("named:petersen,", 0) == 0);
        CHECK(line.find(",6,") != std::string::npos);
    }
    CHECK(rows == 10);
}

TEST_CASE("audit exit codes") {
    CHECK(run({"audit", "named:petersen"}).code == 0);
    const Run d = run({"audit", "named:dodecahedron", "--scope", "all"});
    REQUIRE(d.code == 0);
    CHECK(d.report()["summary"]["all_pass"] == true);
    const json a = d.report()["entries"][0]["audit"];
    CHECK(a["summary"]["case_b_pairs"] == 120);
    for (const auto& o : a["outer_edges"]) CHECK(o["outer_edges"] == 6);

    const Run forged = run({"audit", "named:dodecahedron", "--lambda", "4"});
    CHECK(forged.code == 1);
    const json outer = forged.report()["entries"][0]["audit"]["outer_edges"];
    CHECK(outer.size() == 20);
    for (const auto& o : outer) CHECK(o["pass"] == false);
    CHECK(run({"audit", "named:dodecahedron", "--lambda", "2"}).code == 1);
    CHECK(run({"audit", "named:petersen", "--lambda", "5"}).code == 1);
}

TEST_CASE("audit lists ineligible graphs and keeps going") {
    const Run r = run({"audit", "named:heawood", "named:petersen"});
    CHECK(r.code == 0);
    const json j = r.report();
    CHECK(j["entries"][0]["eligible"] == false);
    CHECK(j["entries"][1]["eligible"] == true);
    CHECK(r.err.find("named:heawood") != std::string::npos);
    CHECK(run({"audit", "named:heawood"}).code == 2);
    CHECK(run({"audit", "named:petersen", "--scope", "some"}).code == 2);
    const Run s = run({"audit", "named:dodecahedron", "--scope", "sample:10,3"});
    CHECK(s.code == 0);
    CHECK(s.report()["entries"][0]["audit"]["summary"]["case_b_audited"] == 10);
}

TEST_CASE("audit details list vertex sets") {
    const Run r = run({"audit", "named:dodecahedron", "--scope", "sample:1,0", "--details"});
    REQUIRE(r.code == 0);
    const json b = r.report()["entries"][0]["audit"]["case_b"][0];
    CHECK(b.contains("VOut"));
    CHECK(b["L"].size() == 2);
}

TEST_CASE("search examples") {
    const Run p = run({"search", "--k", "3", "--g", "5", "--max-n", "10", "--lambda", "6"});
    REQUIRE(p.code == 0);
    const json j = p.report();
    CHECK(j["mode"] == "find_vgr");
    REQUIRE(j["search"]["hits"].size() == 1);
    CHECK(oracle::boost_isomorphic(parse_graph6(j["search"]["hits"][0].get<std::string>()),
                                   named_graph(NamedGraphId::petersen())));
    CHECK(j["hit_reports"][0]["classification"]["lambda"] == 6);

    const Run c = run({"search", "--k", "3", "--g", "5", "--max-n", "14", "--epsilon2", "2"});
    REQUIRE(c.code == 0);
    CHECK(c.report()["mode"] == "confirm_nonexistence");
    CHECK(c.report()["search"]["hit_count"] == 0);
    CHECK(c.report()["search"]["enumerated"] == 11);

    const Run e = run({"search", "--k", "3", "--g", "5", "--max-n", "3"});
    CHECK(e.code == 0);
    CHECK(e.report()["search"]["enumerated"] == 0);
}

TEST_CASE("search range errors exit 2") {
    CHECK(run({"search", "--k", "3", "--g", "5", "--min-n", "11", "--max-n", "11"}).code == 2);
    CHECK(run({"search", "--k", "3", "--g", "5", "--max-n", "14", "--epsilon2", "0"}).code == 2);
    CHECK(run({"search", "--k", "3", "--g", "5", "--max-n", "14", "--epsilon2", "1"}).code == 2);
    CHECK(run({"search", "--k", "3", "--g", "5", "--max-n", "14", "--lambda", "7"}).code == 2);
    CHECK(run({"search", "--k", "3", "--g", "5", "--max-n", "40"}).code == 2);
    CHECK(run({"search", "--k", "3", "--g", "5", "--max-n", "12", "--budget", "10"}).code == 2);
    CHECK(run({"search", "--k", "3", "--g", "5", "--lambda", "6", "--epsilon2", "2"}).code == 2);
    CHECK(run({"search", "--k", "3", "--g", "5", "--girth-mode", "roughly"}).code == 2);
    CHECK(run({"search", "--k", "3", "--g", "5", "--lambda", "6", "--girth-mode", "at-least"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("search suspends with a checkpoint and resumes") {
    const auto path = (std::filesystem::temp_directory_path() / "girthlab_cli_frontier.txt").string();
    const Run full = run({"search", "--k", "3", "--g", "5", "--max-n", "16"});
    REQUIRE(full.code == 0);
    Run r = run({"search", "--k", "3", "--g", "5", "--max-n", "16", "--budget", "30000", "--checkpoint", path});
    CHECK(r.code == 4);
    CHECK(std::filesystem::exists(path));
    int rounds = 0;
    while (r.code == 4 && rounds++ < 200) r = run({"search", "--resume", path, "--budget", "30000"});
    REQUIRE(r.code == 0);
    CHECK(r.report()["search"]["per_order"] == full.report()["search"]["per_order"]);
    CHECK(r.report()["search"]["hits"] == full.report()["search"]["hits"]);
    std::filesystem::remove(path);
}

TEST_CASE("oracle verdicts") {
    const Run a = run({"oracle", "--k", "3", "--g", "5", "--lambda", "5"});
    CHECK(a.code == 0);
    CHECK(a.out.rfind("ExcludedByTheorem(Girth5)", 0) == 0);
    CHECK(run({"oracle", "--k", "3", "--g", "5", "--lambda", "6"}).out.rfind("KnownToExist(MooreCase)", 0) == 0);
    CHECK(run({"oracle", "--k", "4", "--g", "9", "--lambda", "161"}).out.rfind("ExcludedByTheorem(OddGirthGe7)", 0) == 0);
    const Run j = run({"oracle", "--k", "3", "--g", "5", "--lambda", "5", "--json"});
    CHECK(j.report()["rule"] == "Girth5");
    CHECK(run({"oracle", "--k", "3", "--g", "5", "--lambda", "7"}).code == 2);
    CHECK(run({"oracle", "--k", "2", "--g", "5", "--lambda", "1"}).code == 2);
    CHECK(run({"oracle", "--k", "3", "--g", "5"}).code == 2);
    CHECK(run({"oracle", "--k", "3", "--g", "6", "--signature", "3,x,4"}).code == 2);
}

TEST_CASE("convert round trip") {
    const Run s = run({"convert", "named:petersen", "--to", "sparse6"});
    REQUIRE(s.code == 0);
    CHECK(s.out.front() == ':');
    const std::string path = temp_file("girthlab_conv.s6", s.out);
    const Run g = run({"convert", path, "--to", "graph6"});
    REQUIRE(g.code == 0);
    CHECK(oracle::boost_isomorphic(parse_graph6(g.out.substr(0, g.out.size() - 1)), named_graph(NamedGraphId::petersen())));
    CHECK(run({"convert", path, "--to", "dot"}).code == 2);
    std::filesystem::remove(path);
}

TEST_CASE("binary: byte-identical reports and clean stdout") {
    const Run a = run_binary("analyze named:petersen named:dodecahedron");
    const Run b = run_binary("analyze named:petersen named:dodecahedron");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.err.empty());
    const Run s1 = run_binary("search --k 3 --g 5 --max-n 14 --workers 1");
    const Run s4 = run_binary("search --k 3 --g 5 --max-n 14 --workers 1");
    CHECK(s1.out == s4.out);
    CHECK(a.out.find("generated_at") == std::string::npos);
    CHECK(run_binary("analyze named:petersen --timestamps").out.find("generated_at") != std::string::npos);

    const Run bad = run_binary("audit named:heawood");
    CHECK(bad.code == 2);
    CHECK_NOTHROW(json::parse(bad.out));
    CHECK(bad.err.find("not audited") != std::string::npos);
    CHECK(run_binary("--version").out == "0.1.0\n");
}

TEST_CASE("binary: vertex cap from the environment") {
    const Run r = run_binary("analyze named:dodecahedron");
    CHECK(r.code == 0);
    const std::string cmd = "GIRTHLAB_MAX_N=12 " + std::string(GIRTHLAB_CLI_PATH) + " analyze named:dodecahedron >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 2);
}
