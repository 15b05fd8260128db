#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "operad/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = operad::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("dims of Xplus") {
  const auto r = run({"dims", "builtins", "Xplus", "--max", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "1, 4, 16\n");
  const auto j = run({"--format", "json", "dims", "builtins", "Xplus", "--max", "3"});
  CHECK(j.code == 0);
  CHECK(nlohmann::json::parse(j.out)["dims"] == nlohmann::json({1, 4, 16}));
}

TEST_CASE("iso of Xplus with its dual") {
  const auto r = run({"iso", "builtins", "Xplus", "dual:Xplus"});
  CHECK(r.code == 0);
  CHECK(r.out == "↖ -> ↖*\n↗ -> ↙*\n↙ -> ↗*\n↘ -> ↘*\n");
  const auto none = run({"iso", "builtins", "DendSquareDias", "dual:DendSquareDias"});
  CHECK(none.code == 0);
  CHECK(none.out == "none\n");
}

TEST_CASE("verify-paper") {
  const auto path = std::filesystem::temp_directory_path() / "operad_cli_report.json";
  const auto r = run({"verify-paper", "--report", path.string()});
  CHECK(r.code == 0);
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  CHECK(j["checks"].size() > 20);
  for (const auto& c : j["checks"]) CHECK(c["status"] != "fail");
  std::filesystem::remove(path);
}

TEST_CASE("dual, square, quotient and expand") {
  const auto d = run({"dual", "builtins", "Dend"});
  CHECK(d.code == 0);
  CHECK(d.out.find("ops: ") != std::string::npos);
  const auto s = run({"square", "builtins", "Dend", "Dias"});
  CHECK(s.code == 0);
  const auto q = run({"--format", "json", "quotient", "builtins", "DendSquareDias", "--rel",
                      "(x ne y) se z - (x nw y) se z = x nw (y sw z) - x nw (y se z)"});
  CHECK(q.code == 0);
  CHECK(nlohmann::json::parse(q.out)["relation_dim"] == 16);
  const auto e = run({"expand", "builtins", "Dias", "--weight", "3", "--basis"});
  CHECK(e.code == 0);
  CHECK(e.out.rfind("arity 3: free 8, ideal 5, dim 3\n", 0) == 0);
}

TEST_CASE("gk-check") {
  const auto r = run({"gk-check", "builtins", "Dend", "--max", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0 + O(t^5)") != std::string::npos);
}

TEST_CASE("files and errors") {
  const auto ok = temp_file("operad_cli_ok.op", "operad A { ops: m; rel: (x m y) m z = x m (y m z); }\n");
  const auto r = run({"dims", ok.string(), "A", "--max", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "1, 1, 1, 1\n");

  const auto bad = temp_file("operad_cli_bad.op", "operad P {\n  ops: a;\n  rel: (x q y) a z = 0;\n}\n");
  const auto b = run({"dual", bad.string(), "P"});
  CHECK(b.code == 2);
  CHECK(b.err.find(":3:11: error: undeclared operation q") != std::string::npos);

  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"dims", "builtins", "Nope", "--max", "3"}).code == 2);
  CHECK(run({"--max-weight", "6", "dims", "builtins", "As", "--max", "6"}).code == 2);
  CHECK(run({"--max-weight", "6", "--allow-large", "dims", "builtins", "As", "--max", "6"}).code == 0);
  CHECK(run({"dims", "builtins", "As", "--max", "6"}).code == 2);
  std::filesystem::remove(ok);
  std::filesystem::remove(bad);
}

TEST_CASE("verify-paper at arity 5") {
  const auto r = run({"--format", "json", "verify-paper", "--x-weight", "5"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  bool seen = false;
  for (const auto& c : j["checks"]) {
    if (c["check_id"] == "gk.xplus") {
      CHECK(c["status"] == "finding");
      CHECK(c["actual"] == "54*t^5 + O(t^6)");
      seen = true;
    }
  }
  CHECK(seen);
  CHECK(run({"verify-paper", "--x-weight", "6"}).code == 2);
}
