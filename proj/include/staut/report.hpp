#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "staut/canonical.hpp"

namespace staut {

constexpr int kReportSchemaVersion = 1;

struct CheckVerdict {
  std::string key;  // stable sort key, e.g. "triangles/Rel(3)"
  bool pass = true;
  long checks = 0;
  std::string witness;
};

// One named suite run against one model. Checks are emitted sorted by key so
// assembly order never leaks into the output.
struct SuiteReport {
  std::string suite;
  std::string model;
  std::uint64_t seed = 1;
  int window = 3;
  int depth = 2;
  std::map<std::string, long> stats;  // probe-universe sizes and sampling caps
  std::vector<std::string> notes;     // resolutions recorded for the reader
  std::vector<CheckVerdict> checks;
  double seconds = 0;

  bool pass() const;
  void add(const std::string& prefix, const SuiteResult& r);
  void add(const std::string& key, bool pass, long checks, const std::string& witness = {});
  void sort();
};

struct RunReport {
  std::string command;
  std::uint64_t seed = 1;
  std::vector<SuiteReport> suites;
  bool pass() const;
};

// The structured document; durations only with `timings` so that identical
// invocations yield byte-identical output.
std::string to_json(const RunReport& r, bool timings = false);
std::string to_text(const RunReport& r);

}  // namespace staut
