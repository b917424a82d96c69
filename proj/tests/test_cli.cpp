#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "graphflag_cli/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = graphflag::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

int count_lines_with(const std::string& text, const std::string& needle) {
  std::istringstream in(text);
  std::string line;
  int count = 0;
  while (std::getline(in, line)) count += line.find(needle) != std::string::npos;
  return count;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("flagvec verbose") {
    const Result r = run({"flagvec", "--form", "verbose", "--graph", "3:0-1"});
    CHECK(r.code == 0);
    CHECK(r.out == "aaa:6 aba:2 baa:4\n");
    CHECK(run({"flagvec", "--graph", "3:0-1", "--method", "shelling"}).out == r.out);
  }

  TEST_CASE("flagvec concise and subgraph") {
    CHECK(run({"flagvec", "--form", "concise", "--graph", "4:0-1,1-2,2-3"}).out ==
          "[1+1+1+1]:1 [2+1+1]:3 [3+1]:2 [2+2]:1 [4]:2\n");
    CHECK(run({"flagvec", "--form", "subgraph", "--graph", "2:0-1"}).out == "[1+1]:2 [2]:2\n");
    CHECK(run({"flagvec", "--form", "concise", "--graph", "3:?0-1,?1-2,?0-2"}).out == "0\n");
    CHECK(run({"flagvec", "--form", "concise", "--graph", "3:0-1", "--method", "shelling"}).code == 1);
  }

  TEST_CASE("flagvec json") {
    const Result r = run({"--format", "json", "flagvec", "--form", "concise", "--graph", "3:0-1"});
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["command"] == "flagvec");
    CHECK(doc["results"][0]["vector"][1]["partition"] == nlohmann::json::array({2, 1}));
    CHECK(doc["results"][0]["vector"][1]["coefficient"] == 1);
    // format accepted after the command as well, byte-identical output
    CHECK(run({"flagvec", "--form", "concise", "--graph", "3:0-1", "--format", "json"}).out == r.out);
  }

  TEST_CASE("graph file") {
    const std::string path = "cli_test_graphs.txt";
    {
      std::ofstream f(path);
      f << "# three graphs\n3:\n\n3:0-1  # an edge\n3:?0-1,?1-2,?0-2\n";
    }
    const Result r = run({"flagvec", "--graph-file", path});
    CHECK(r.code == 0);
    CHECK(r.out == "3:\taaa:6\n3:0-1\taaa:6 aba:2 baa:4\n3:?0-1,?0-2,?1-2\t0\n");
    CHECK(run({"flagvec", "--graph-file", "does-not-exist.txt"}).code == 1);
    CHECK(run({"flagvec", "--graph", "3:", "--graph-file", path}).code == 1);
    CHECK(run({"flagvec"}).code == 1);
    std::remove(path.c_str());
  }

  TEST_CASE("hull vertices") {
    const Result r = run({"hull", "--n", "4", "--mode", "vertices"});
    CHECK(r.code == 0);
    CHECK(count_lines_with(r.out, " vertex") == 11);
    CHECK(r.out.find("interior") == std::string::npos);
    const auto doc = nlohmann::json::parse(run({"--format", "json", "hull", "--n", "4"}).out);
    CHECK(doc["vertices"] == 11);
    CHECK(doc["point_list"].size() == 11);
  }

  TEST_CASE("hull facets") {
    const Result r = run({"hull", "--n", "4", "--mode", "facets"});
    CHECK(r.code == 0);
    CHECK(r.out.find("facets: 20\n") != std::string::npos);
    CHECK(count_lines_with(r.out, ">= 0") == 20);
  }

  TEST_CASE("average") {
    const Result r = run({"average", "--n", "3", "--word", "baa"});
    CHECK(r.code == 0);
    CHECK(r.out.find("total: 48\n") != std::string::npos);
    CHECK(r.out.find("mean: 6\n") != std::string::npos);
    CHECK(run({"average", "--n", "3", "--word", "ba"}).code == 1);
    const auto doc = nlohmann::json::parse(run({"--format", "json", "average", "--n", "20"}).out);
    CHECK(doc["words"][0]["total"].is_string());
    CHECK(run({"average", "--n", "21"}).code == 2);
  }

  TEST_CASE("rank, nullspace, enumerate") {
    CHECK(run({"rank", "--n", "4"}).out == "n: 4\nclasses: 11\npartitions: 5\nrank: 5\n");
    const Result ns = run({"nullspace", "--n", "3"});
    CHECK(ns.out.find("kernel_dim: 1\n") != std::string::npos);
    const Result en = run({"enumerate", "--n", "4"});
    CHECK(en.out.find("count: 11\n") != std::string::npos);
    CHECK(count_lines_with(en.out, "[") == 11);
    const auto doc = nlohmann::json::parse(run({"--format", "json", "enumerate", "--n", "3"}).out);
    CHECK(doc["classes"].size() == 4);
  }

  TEST_CASE("complement, basis, edgeflag") {
    const Result c = run({"complement", "--graph", "3:", "--transform"});
    CHECK(c.out.find("complement: 3:0-1,0-2,1-2\n") != std::string::npos);
    CHECK(c.out.find("transformed: aaa:6 aba:6 baa:12 bba:12\n") != std::string::npos);
    CHECK(c.out.find("matches: true\n") != std::string::npos);
    CHECK(run({"complement", "--graph", "3:?0-1"}).code == 1);
    const Result b = run({"basis", "--partition", "[3+1]"});
    CHECK(b.out.find("concise: [3+1]:1\n") != std::string::npos);
    CHECK(b.out.find("anchor_word: abba\n") != std::string::npos);
    CHECK(run({"basis", "--partition", "[10]"}).code == 2);
    CHECK(run({"edgeflag", "--graph", "3:0-1,1-2"}).out == "aa:2 ca:2\n");
    CHECK(run({"edgeflag", "--graph", "5:0-1,0-2,0-3,0-4,1-2,1-3,1-4,2-3"}).code == 2);
  }

  TEST_CASE("usage errors name the flag") {
    const Result r = run({"flagvec", "--graph", "3:", "--bogus"});
    CHECK(r.code == 1);
    CHECK(r.err.find("--bogus") != std::string::npos);
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"--format", "xml", "rank", "--n", "3"}).code == 1);
    CHECK(run({"rank"}).code == 1);
    CHECK(run({"rank", "--n", "-1"}).code == 1);
    CHECK(run({"flagvec", "--graph", "3:0-5"}).code == 1);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("size-limit refusals name the bound") {
    for (const auto& args : std::vector<std::vector<std::string>>{{"rank", "--n", "7"},
                                                                  {"hull", "--n", "7"},
                                                                  {"hull", "--n", "6", "--mode", "facets"},
                                                                  {"nullspace", "--n", "7"},
                                                                  {"enumerate", "--n", "8"},
                                                                  {"flagvec", "--graph", "9:"}}) {
      const Result r = run(args);
      CHECK(r.code == 2);
      CHECK(r.err.find("limit") != std::string::npos);
    }
  }

  TEST_CASE("deterministic output") {
    const std::vector<std::string> args{"--format", "json", "nullspace", "--n", "4"};
    CHECK(run(args).out == run(args).out);
  }

  TEST_CASE("selftest single criterion and mutation") {
    const Result ok = run({"selftest", "--criterion", "1"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("[PASS] criterion 1") != std::string::npos);
    const Result bad = run({"selftest", "--criterion", "11", "--factors", "1,3,4"});
    CHECK(bad.code == graphflag::cli::kExitSelftestFailed);
    CHECK(bad.out.find("[FAIL] criterion 11") != std::string::npos);
    CHECK(run({"selftest", "--factors", "1,2"}).code == 1);
    CHECK(run({"selftest", "--criterion", "14"}).code == 1);
  }
}
