#include "staut/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace staut {

bool SuiteReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckVerdict& c) { return c.pass; });
}

void SuiteReport::add(const std::string& prefix, const SuiteResult& r) {
  checks.push_back({prefix.empty() ? r.name : prefix + "/" + r.name, r.pass, r.checks, r.witness});
}

void SuiteReport::add(const std::string& key, bool ok, long n, const std::string& witness) {
  checks.push_back({key, ok, n, witness});
}

void SuiteReport::sort() {
  std::stable_sort(checks.begin(), checks.end(), [](const CheckVerdict& a, const CheckVerdict& b) { return a.key < b.key; });
}

bool RunReport::pass() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteReport& s) { return s.pass(); });
}

std::string to_json(const RunReport& r, bool timings) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["schema"] = "staut-report";
  doc["schema_version"] = kReportSchemaVersion;
  doc["command"] = r.command;
  doc["seed"] = r.seed;
  doc["pass"] = r.pass();
  ordered_json suites = ordered_json::array();
  for (SuiteReport s : r.suites) {
    s.sort();
    ordered_json js;
    js["suite"] = s.suite;
    js["model"] = s.model;
    js["seed"] = s.seed;
    js["window"] = {-s.window, s.window};
    js["depth"] = s.depth;
    js["pass"] = s.pass();
    js["stats"] = ordered_json::object();
    for (const auto& [k, v] : s.stats) js["stats"][k] = v;
    js["notes"] = s.notes;
    ordered_json checks = ordered_json::array();
    for (const CheckVerdict& c : s.checks)
      checks.push_back({{"key", c.key}, {"pass", c.pass}, {"checks", c.checks}, {"witness", c.witness}});
    js["checks"] = std::move(checks);
    if (timings) js["seconds"] = s.seconds;
    suites.push_back(std::move(js));
  }
  doc["suites"] = std::move(suites);
  return doc.dump(2) + "\n";
}

std::string to_text(const RunReport& r) {
  std::ostringstream os;
  for (SuiteReport s : r.suites) {
    s.sort();
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", s.seconds);
    os << (s.pass() ? "PASS " : "FAIL ") << s.suite << " on " << s.model << " (seed " << s.seed << ", window [-"
       << s.window << "," << s.window << "], depth " << s.depth << ", " << secs << ")\n";
    for (const auto& [k, v] : s.stats) os << "    " << k << " = " << v << "\n";
    for (const std::string& n : s.notes) os << "    note: " << n << "\n";
    for (const CheckVerdict& c : s.checks) {
      os << "  " << (c.pass ? "ok   " : "FAIL ") << c.key << " (" << c.checks << ")";
      if (!c.witness.empty()) os << ": " << c.witness;
      os << "\n";
    }
  }
  os << (r.pass() ? "all verdicts pass\n" : "some verdicts fail\n");
  return os.str();
}

}  // namespace staut
