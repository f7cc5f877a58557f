// One pass/fail line per acceptance criterion, with its time limit.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "staut/suites.hpp"

using namespace staut;

namespace {

struct Limit {
  int criterion;
  double seconds;  // 0: runs implicitly with another criterion
};

// Criterion 4 runs after the others so that it sees every profile they computed.
constexpr Limit kLimits[] = {{1, 5}, {2, 1}, {3, 5}, {5, 30}, {6, 20}, {7, 20}, {8, 10}, {4, 0}, {9, 90}};

std::string first_failure(const SuiteReport& r) {
  for (const CheckVerdict& c : r.checks)
    if (!c.pass) return c.key + ": " + c.witness;
  return {};
}

bool line(int k, bool pass, double secs, double limit, const std::string& why) {
  const bool in_time = limit <= 0 || secs < limit;
  const bool ok = pass && in_time;
  std::printf("criterion %d: %s (%.2fs", k, ok ? "PASS" : "FAIL", secs);
  if (limit > 0) std::printf(", limit %.0fs", limit);
  std::printf(")");
  if (!pass) std::printf(" %s", why.c_str());
  if (!in_time) std::printf(" over the time limit");
  std::printf("\n");
  std::fflush(stdout);
  return ok;
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  const RunOptions opt;
  std::vector<AxiomProfile> profiles;
  bool all = true;
  for (const Limit& l : kLimits) {
    if (l.criterion == 4) {
      SuiteReport r = dependency_suite(profiles, opt);
      all &= line(4, r.pass(), r.seconds, l.seconds, first_failure(r));
    } else if (l.criterion == 9) {
      auto t0 = std::chrono::steady_clock::now();
      RunReport a = paper_all(opt);
      const double secs = since(t0);
      RunReport b = paper_all(opt);
      const bool same = to_json(a) == to_json(b);
      std::string why;
      for (const SuiteReport& s : a.suites)
        if (!s.pass()) why = s.suite + ": " + first_failure(s);
      if (!same) why += " structured reports differ between identical runs";
      all &= line(9, a.pass() && same, secs, l.seconds, why);
    } else {
      SuiteReport r = acceptance_criterion(l.criterion, opt, &profiles);
      all &= line(l.criterion, r.pass(), r.seconds, l.seconds, first_failure(r));
    }
  }
  return all ? 0 : 1;
}
