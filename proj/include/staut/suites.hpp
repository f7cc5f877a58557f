#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "staut/cyclicity.hpp"
#include "staut/report.hpp"

namespace staut {

// Bad command-line input: unknown backend, unreadable file and the like.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunOptions {
  int window = 3;  // Z-string window [-window, window]
  int depth = 2;   // probe-universe depth
  std::uint64_t seed = 1;
};

// The model's probes closed to the given depth: duals of everything at the
// previous level and ⊗/⅋ of the first two generators' level objects.
std::vector<ObjRef> probe_universe(const Model& m, int depth);

// ⊥ω = ¬ω^rev = ᵖω for every relation on n points.
SuiteResult check_rel_negation(int n);

// Parity oracle for the scalar cycle λ·id: each axiom compares λ^k with 1.
// Returns k; the axiom holds at λ exactly when λ^k = 1.
int scalar_exponent(Axiom a);

struct ScalarRow {
  Rational lambda;
  AxiomProfile profile;
};

SuiteReport quantale_check(const std::string& spec, const RunOptions& opt);
SuiteReport vec_scalar_table(const RunOptions& opt, std::vector<ScalarRow>* rows = nullptr);
std::string format_scalar_table(const std::vector<ScalarRow>& rows);
SuiteReport prof_check(const std::string& vcat_path, const RunOptions& opt);
SuiteReport braided_d2_suite(const RunOptions& opt);
// Backends: "vec" or "vec:<λ>" (scalar cycle on Vec), "thin:<quantale>" (identity cycle).
SuiteReport zang_suite(const std::string& backend, const RunOptions& opt);
std::vector<std::string> zang_backend_names();

// Acceptance criteria 1..8; profiles computed along the way are appended to
// `profiles` when given.
SuiteReport acceptance_criterion(int k, const RunOptions& opt, std::vector<AxiomProfile>* profiles = nullptr);
constexpr int kCriterionCount = 8;
// Criterion 4 over a set of profiles.
SuiteReport dependency_suite(const std::vector<AxiomProfile>& profiles, const RunOptions& opt);
// Every criterion, with criterion 4 run over all profiles seen by the others.
RunReport paper_all(const RunOptions& opt);

}  // namespace staut
