#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

std::string env(const char* name) {
  const char* v = std::getenv(name);
  REQUIRE_MESSAGE(v != nullptr, "environment variable " << name << " is not set");
  return v;
}

Run staut(const std::string& args) {
  const std::string cmd = env("STAUT_BIN") + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& file) { return env("STAUT_DATA") + "/" + file; }

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("quantale check on a builtin") {
  Run r = staut("quantale check rel:3");
  CHECK(r.code == 0);
  CHECK(r.out.find("elements = 512") != std::string::npos);
  CHECK(r.out.find("all verdicts pass") != std::string::npos);
}

TEST_CASE("a table that is not a quantale fails its axioms without crashing") {
  Run r = staut("quantale check " + data("nonunital.quantale"));
  CHECK(r.code == 1);
  CHECK(r.out.find("unit law fails at b") != std::string::npos);
  CHECK(r.out.find("later suites skipped") != std::string::npos);
}

TEST_CASE("a thin backend over a non-quantale is an input error") {
  Run r = staut("zang suite thin:" + data("nonunital.quantale"));
  CHECK(r.code == 2);
  CHECK(r.out.find("not a quantale") != std::string::npos);
}

TEST_CASE("degenerate scalars are input errors") {
  for (const char* be : {"vec:0", "vec:1/0", "vec:2/-0", "vec:x"}) {
    CAPTURE(be);
    CHECK(staut(std::string("zang suite ") + be).code == 2);
  }
}

TEST_CASE("quantale check on a file") {
  Run r = staut("quantale check " + data("l3.quantale"));
  CHECK(r.code == 0);
  CHECK(r.out.find("cyclic = 1") != std::string::npos);
}

TEST_CASE("a non-cyclic quantale still validates") {
  Run r = staut("quantale check 's3:(01)'");
  CHECK(r.code == 0);
  CHECK(r.out.find("not cyclic") != std::string::npos);
}

TEST_CASE("input errors exit 2 with positions or alternatives") {
  Run bad = staut("quantale check " + data("bad.quantale"));
  CHECK(bad.code == 2);
  CHECK(bad.out.find("4:10") != std::string::npos);
  Run unknown = staut("quantale check nosuch:3");
  CHECK(unknown.code == 2);
  CHECK(unknown.out.find("rel:") != std::string::npos);
  Run vbad = staut("prof check " + data("bad.vcat"));
  CHECK(vbad.code == 2);
  CHECK(vbad.out.find("3:10") != std::string::npos);
  CHECK(staut("prof check /nonexistent.vcat").code == 2);
  CHECK(staut("zang suite nosuch").code == 2);
  CHECK(staut("frobnicate").code == 2);
  CHECK(staut("--format yaml vec scalar-table").code == 2);
}

TEST_CASE("scalar table") {
  Run r = staut("vec scalar-table");
  CHECK(r.code == 0);
  CHECK(r.out.find("quasicycle") != std::string::npos);
  CHECK(r.out.find("1/2") != std::string::npos);
}

TEST_CASE("verdict failures exit 1") {
  Run r = staut("zang suite vec:-1");
  CHECK(r.code == 1);
  CHECK(r.out.find("needs a cycle") != std::string::npos);
}

TEST_CASE("prof and braided suites") {
  CHECK(staut("prof check " + data("l3two.vcat")).code == 0);
  CHECK(staut("braided d2-suite").code == 0);
  CHECK(staut("zang suite thin:rel:2 --window 2").code == 0);
}

TEST_CASE("structured reports are versioned and byte-identical across runs") {
  Run a = staut("--seed 5 --format structured quantale check rel:3");
  Run b = staut("quantale check rel:3 --seed 5 --format structured");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto doc = nlohmann::json::parse(a.out);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["seed"] == 5);
  CHECK(doc["pass"] == true);
  auto checks = doc["suites"][0]["checks"];
  for (std::size_t i = 1; i < checks.size(); ++i) CHECK(checks[i - 1]["key"] <= checks[i]["key"]);
  CHECK(doc["suites"][0]["window"][0] == -3);
}

TEST_CASE("report file matches the structured output") {
  const std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/staut_cli_report.json";
  Run r = staut("braided d2-suite --format structured --report " + path);
  CHECK(r.code == 0);
  CHECK(slurp(path) == r.out);
}
