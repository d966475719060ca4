#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string fixture(const std::string& name) { return std::string(SEPCOVER_FIXTURES) + "/" + name; }

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "sepcover_cli_tests";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "sepcover");
  std::ostringstream out;
  std::ostringstream err;
  const int status = sepcover::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("hierarchy on the path fixture") {
    const Run r = run({"hierarchy", "--graph", fixture("path.graph")});
    REQUIRE(r.status == 0);
    const json report = json::parse(r.out);
    CHECK(report["command"] == "hierarchy");
    CHECK(report["formats"]["graph"] == "graphseq v1");
    CHECK(report["config"]["graph"] == fixture("path.graph"));
    CHECK(report["result"]["diameter_violations"] == 0);
    CHECK(report["result"]["capture"]["horizon_uncaptured"] == 0);
    for (const auto& s : report["result"]["stages"]) {
      const std::string f = s["f"];
      CHECK(s["max_diameter"].get<std::uint64_t>() <= std::stoull(f));
    }
    CHECK(report["result"]["stages"][2]["max_diameter"] == 2);

    const fs::path csv = scratch() / "path.csv";
    const Run with_covers = run({"--csv", csv.string(), "hierarchy", "--graph", fixture("path.graph"), "--covers",
                                 fixture("path.covers"), "--certificates"});
    REQUIRE(with_covers.status == 0);
    const json rc = json::parse(with_covers.out);
    CHECK(rc["formats"]["covers"] == "cover-lines v1");
    CHECK(rc["result"]["stages"][1]["edges"] == 2);
    CHECK(rc["result"]["stages"][1]["components_detail"][0]["members"] == json::array({0, 1, 2}));
    const std::string series = slurp(csv);
    CHECK(series.rfind("stage,f,components,max_diameter,captured,uncaptured\n", 0) == 0);
    CHECK(series.find("\n1,2,1,2,2,0\n") != std::string::npos);
  }

  TEST_CASE("input errors exit with status 2") {
    const Run bad = run({"hierarchy", "--graph", fixture("malformed.graph")});
    CHECK(bad.status == 2);
    CHECK(bad.err.find(":6:") != std::string::npos);
    CHECK(run({"hierarchy", "--graph", fixture("missing.graph")}).status == 2);
    CHECK(run({"hierarchy"}).status == 2);
    CHECK(run({"nonsense"}).status == 2);
  }

  TEST_CASE("invariant and configuration errors exit with status 3") {
    const fs::path bad = scratch() / "bad.covers";
    std::ofstream(bad) << "cover 0:\ncover 1: 0 2\ncover 2: 1\n";
    CHECK(run({"hierarchy", "--graph", fixture("path.graph"), "--covers", bad.string()}).status == 3);
    const Run verify = run({"verify", "--graph", fixture("path.graph"), "--covers", bad.string()});
    CHECK(verify.status == 3);
    CHECK(json::parse(verify.out)["result"]["checks"]["unique_cover_point"]["pass"] == false);
    CHECK(verify.err.find("[hierarchy]") != std::string::npos);
    CHECK(run({"gen", "--vertices", "4", "--degree", "1", "--stages", "1", "--edges", "3"}).status == 3);
  }

  TEST_CASE("reduce on an empty graph") {
    const fs::path codes = scratch() / "codes.txt";
    const Run r = run({"reduce", "--graph", fixture("empty.graph"), "--out", codes.string()});
    REQUIRE(r.status == 0);
    const json report = json::parse(r.out);
    CHECK(report["result"]["injective"] == true);
    CHECK(report["result"]["verification"]["ok"] == true);
    const std::string text = slurp(codes);
    CHECK(text.rfind("code 0: ", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 6);
  }

  TEST_CASE("verify passes on generated instances") {
    const fs::path graph = scratch() / "gen.graph";
    REQUIRE(run({"--seed", "5", "gen", "--vertices", "60", "--degree", "3", "--stages", "4", "--out", graph.string()})
                .status == 0);
    const Run v = run({"verify", "--graph", graph.string()});
    CHECK(v.status == 0);
    CHECK(json::parse(v.out)["result"]["all_passed"] == true);
  }

  TEST_CASE("gen output") {
    const Run a = run({"--seed", "9", "gen", "--vertices", "30", "--degree", "2", "--stages", "3"});
    const Run b = run({"--seed", "9", "gen", "--vertices", "30", "--degree", "2", "--stages", "3"});
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("graphseq v1\n", 0) == 0);

    const Run empty = run({"gen", "--vertices", "0", "--degree", "1", "--stages", "1"});
    CHECK(empty.status == 0);
    CHECK(empty.out == "graphseq v1\nvertices 0\ndegree 1\nhorizon 0\n");

    const fs::path report = scratch() / "gen.json";
    CHECK(run({"--report", report.string(), "gen", "--vertices", "10", "--degree", "1", "--stages", "1"}).status == 0);
    CHECK(json::parse(slurp(report))["result"]["edges"] == 2);
  }

  TEST_CASE("colour and cover commands") {
    const fs::path classes = scratch() / "classes.txt";
    const Run c = run({"color", "--graph", fixture("path.graph"), "--stage", "0", "--k", "1", "--out", classes.string()});
    REQUIRE(c.status == 0);
    CHECK(json::parse(c.out)["result"]["colors"] == 2);
    CHECK(slurp(classes) == "class 0: 0 2\nclass 1: 1\n");

    const fs::path csv = scratch() / "coverage.csv";
    const Run cycle = run({"--csv", csv.string(), "covers", "--graph", fixture("path.graph"), "--sweeps", "1"});
    REQUIRE(cycle.status == 0);
    CHECK(json::parse(cycle.out)["result"]["min_coverage"] == 1);
    CHECK(slurp(csv) == "coverage,vertices\n1,3\n");

    const fs::path six = scratch() / "six.graph";
    std::ofstream(six) << "graphseq v1\nvertices 6\ndegree 1\nhorizon 6\nedge 0 1 0\nedge 3 4 0\n";
    const Run sweep = run({"covers", "--graph", six.string(), "--mode", "sweep", "--regions",
                           fixture("halves.regions"), "--stages", "4"});
    REQUIRE(sweep.status == 0);
    const json rs = json::parse(sweep.out);
    CHECK(rs["result"]["all_nonempty_regions_touched"] == true);
    CHECK(rs["result"]["pairing_prefix_ok"] == true);
    CHECK(rs["formats"]["regions"] == "region-lines v1");
  }

  TEST_CASE("ellentuck commands") {
    const fs::path trace = scratch() / "trace.json";
    const Run p = run({"ellentuck", "pipeline", "--invs", fixture("invfam_m2_n14_k3.txt"), "--target", "6", "--trace",
                       trace.string()});
    REQUIRE(p.status == 0);
    const json report = json::parse(p.out);
    CHECK(report["result"]["outcome"] == "FOUND");
    CHECK(report["result"]["verification"]["violations"] == 0);
    CHECK(report["formats"]["involutions"] == "invfam v1");
    CHECK(json::parse(slurp(trace))["format"] == "fusion-trace v1");

    const Run fail = run({"ellentuck", "pipeline", "--invs", fixture("invfam_m2_n14_k3_fail.txt"), "--target", "6"});
    CHECK(fail.status == 0);
    CHECK(json::parse(fail.out)["result"]["outcome"] == "NOT-FOUND");

    CHECK(run({"ellentuck", "pipeline", "--invs", fixture("invfam_m2_n14_k3.txt"), "--target", "0"}).status == 3);

    const Run book = run({"ellentuck", "bookkeeping", "--stages", "4", "--show-stage", "2"});
    REQUIRE(book.status == 0);
    const json b = json::parse(book.out);
    CHECK(b["result"]["k"] == json::array({0, 1, 3, 7, 15}));
    CHECK(b["result"]["stages"][2]["enumeration"].size() == 4);
  }

  TEST_CASE("reports are byte-identical across runs") {
    const fs::path a = scratch() / "det_a.json";
    const fs::path b = scratch() / "det_b.json";
    const fs::path graph = scratch() / "det.graph";
    REQUIRE(run({"--seed", "77", "gen", "--vertices", "80", "--degree", "4", "--stages", "5", "--out", graph.string()})
                .status == 0);
    REQUIRE(run({"--report", a.string(), "verify", "--graph", graph.string()}).status == 0);
    REQUIRE(run({"--report", b.string(), "verify", "--graph", graph.string()}).status == 0);
    CHECK(slurp(a) == slurp(b));
  }
}
