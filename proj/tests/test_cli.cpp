#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "linarb/graph.hpp"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "linarb");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = linarb::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name)
      : path(fs::temp_directory_path() / ("linarb_cli_" + name)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& f) const { return (path / f).string(); }
};

}  // namespace

TEST_CASE("gen, girth, decompose, verify on C_7") {
  TempDir dir("c7");
  REQUIRE(run({"gen", "--family", "cycle", "-n", "7", "-o", dir / "c7.txt"}).code == 0);
  const auto g = run({"girth", dir / "c7.txt"});
  CHECK(g.code == 0);
  CHECK(g.out == "7\n");

  const auto d = run({"decompose", dir / "c7.txt", "-k", "1", "-o", dir / "c7.cert"});
  CHECK(d.code == 0);
  CHECK(d.out == "claimed ≤ 2, achieved 2, verified yes\n");

  const auto v = run({"verify", dir / "c7.txt", dir / "c7.cert"});
  CHECK(v.code == 0);
  CHECK(v.out.find("certificate verified") != std::string::npos);
}

TEST_CASE("oracle-la on K_5 prints 3") {
  TempDir dir("k5");
  REQUIRE(run({"gen", "--family", "complete", "-n", "5", "-o", dir / "k5.txt"}).code == 0);
  const auto r = run({"oracle-la", dir / "k5.txt"});
  CHECK(r.code == 0);
  CHECK(r.out == "3\n");
  const auto cached = run({"oracle-la", dir / "k5.txt", "--cache", dir / "cache.json"});
  CHECK(cached.out == "3\n");
  CHECK(fs::exists(dir / "cache.json"));
  CHECK(run({"oracle-la", dir / "k5.txt", "--cache", dir / "cache.json"}).out == "3\n");
}

TEST_CASE("verify rejects a tampered certificate with exit 1") {
  TempDir dir("bad");
  run({"gen", "--family", "named", "--name", "k44", "-o", dir / "k44.txt"});
  REQUIRE(run({"decompose", dir / "k44.txt", "-o", dir / "cert.json"}).code == 0);
  auto text = linarb::read_text_file(dir / "cert.json");
  const auto pos = text.find("\"achieved_count\": 3");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 19, "\"achieved_count\": 2");
  linarb::write_text_file(dir / "bad.json", text);
  const auto r = run({"verify", dir / "k44.txt", dir / "bad.json"});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL count") != std::string::npos);

  linarb::write_text_file(dir / "junk.json", "{\"version\": 1}");
  CHECK(run({"verify", dir / "k44.txt", dir / "junk.json"}).code == 1);
}

TEST_CASE("usage and domain errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"girth"}).code == 2);
  CHECK(run({"decompose", "x.txt", "--time-budget", "-5"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  const auto missing = run({"girth", "/nonexistent/graph.txt"});
  CHECK(missing.code == 1);
  CHECK(missing.err.rfind("error: ", 0) == 0);
  CHECK(std::count(missing.err.begin(), missing.err.end(), '\n') == 1);

  TempDir dir("err");
  linarb::write_text_file(dir / "loop.txt", "2 1\n0 0\n");
  const auto loop = run({"girth", dir / "loop.txt"});
  CHECK(loop.code == 1);
  CHECK(loop.err.find("self-loop") != std::string::npos);

  run({"gen", "--family", "complete", "-n", "6", "-o", dir / "k6.txt"});
  CHECK(run({"decompose", dir / "k6.txt"}).code == 1);
  CHECK(run({"gen", "--family", "random_regular", "-n", "6", "-k", "3", "--g-min", "6",
             "--retries", "10"})
            .code == 1);
}

TEST_CASE("factorize and hint round trip") {
  TempDir dir("hint");
  REQUIRE(run({"gen", "--family", "random_regular", "-n", "24", "-k", "2", "--g-min", "4",
               "--seed", "9", "-o", dir / "g.txt", "--hint-out", dir / "hint.json"})
              .code == 0);
  const auto f = run({"factorize", dir / "g.txt", "-o", dir / "f.json"});
  CHECK(f.code == 0);
  CHECK(f.out.rfind("2 factors", 0) == 0);
  const auto d = run({"decompose", dir / "g.txt", "--hint", dir / "hint.json", "--dump-network",
                      dir / "net.txt", "-o", dir / "c.json"});
  CHECK(d.code == 0);
  CHECK(linarb::read_text_file(dir / "net.txt").rfind("p circ ", 0) == 0);
  CHECK(run({"verify", dir / "g.txt", dir / "c.json"}).code == 0);
}

TEST_CASE("embed writes the graph and its sidecar") {
  TempDir dir("embed");
  linarb::write_text_file(dir / "p3.txt", "3 2\n0 1\n1 2\n");
  const auto r = run({"embed", dir / "p3.txt", "--delta", "2", "--girth", "4", "-o",
                      dir / "out.txt"});
  CHECK(r.code == 0);
  const auto g = linarb::read_graph_file(dir / "out.txt");
  CHECK(linarb::is_regular(g, 2));
  const auto side = nlohmann::json::parse(linarb::read_text_file(dir / "out.txt.json"));
  CHECK(side.at("layer_count").get<int>() * 3 == g.vertex_count());
  CHECK(run({"embed", dir / "p3.txt", "--delta", "1", "--girth", "4"}).code == 1);
}

TEST_CASE("every subcommand is byte-for-byte repeatable") {
  TempDir dir("det");
  const std::vector<std::vector<std::string>> commands = {
      {"gen", "--family", "random_regular", "-n", "30", "-k", "3", "--seed", "5", "-o", "@"},
      {"gen", "--family", "circulant", "-n", "13", "--shifts", "1,5", "-o", "@"},
  };
  for (const auto& cmd : commands) {
    auto a = cmd, b = cmd;
    std::replace(a.begin(), a.end(), std::string("@"), dir / "a");
    std::replace(b.begin(), b.end(), std::string("@"), dir / "b");
    REQUIRE(run(a).code == 0);
    REQUIRE(run(b).code == 0);
    CHECK(linarb::read_text_file(dir / "a") == linarb::read_text_file(dir / "b"));
  }
  run({"gen", "--family", "random_regular", "-n", "30", "-k", "2", "--seed", "5", "-o",
       dir / "g.txt"});
  for (auto sub : {std::vector<std::string>{"decompose", dir / "g.txt", "-o"},
                   std::vector<std::string>{"factorize", dir / "g.txt", "-o"},
                   std::vector<std::string>{"embed", dir / "g.txt", "--delta", "5", "--girth",
                                            "3", "--sidecar", dir / "side", "-o"}}) {
    auto a = sub, b = sub;
    a.push_back(dir / "a");
    b.push_back(dir / "b");
    REQUIRE(run(a).code == 0);
    REQUIRE(run(b).code == 0);
    CHECK(linarb::read_text_file(dir / "a") == linarb::read_text_file(dir / "b"));
  }
}

TEST_CASE("sweep writes the versioned record list") {
  TempDir dir("sweep");
  linarb::write_text_file(dir / "spec.json",
                          R"({"version": 1, "cells": [{"n": 12, "k": 1}, {"n": 16, "k": 2}],
                              "seeds": 2})");
  const auto r = run({"sweep", "--spec", dir / "spec.json", "-o", dir / "out.json", "--jobs", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "4 records, 0 flagged\n");
  const auto j = nlohmann::json::parse(linarb::read_text_file(dir / "out.json"));
  CHECK(j.at("version") == 1);
  CHECK(j.at("records").size() == 4);
  run({"sweep", "--spec", dir / "spec.json", "-o", dir / "again.json"});
  CHECK(linarb::read_text_file(dir / "out.json") == linarb::read_text_file(dir / "again.json"));
  CHECK(run({"sweep", "--spec", dir / "missing.json"}).code == 1);
}
