#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "staut/canonical.hpp"

namespace staut {

class LinearModel;

class CycleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A candidate cyclicity ν_p: ⊥p → ᵖp, computed on demand and memoized.
// Copies share the memo, so a CycleData can be captured by value.
class CycleData {
 public:
  using Family = std::function<Mor(ObjRef)>;
  CycleData(const Model& m, std::string label, Family nu);

  const Model& model() const { return *model_; }
  const std::string& label() const;
  Mor nu(ObjRef p) const;
  Mor nu_inv(ObjRef p) const;

 private:
  struct State;
  const Model* model_;
  std::shared_ptr<State> state_;
};

// Hom-level form: N_{p,t}: Hom(p⊗t, d) → Hom(t⊗p, d). The object p and t are
// read off the domain of ω.
class BigCycle {
 public:
  using Fn = std::function<Mor(const Mor&)>;
  BigCycle(const Model& m, std::string label, Fn apply, Fn unapply);

  const Model& model() const { return *model_; }
  const std::string& label() const { return label_; }
  Mor apply(const Mor& omega) const { return apply_(omega); }
  Mor unapply(const Mor& psi) const { return unapply_(psi); }

 private:
  const Model* model_;
  std::string label_;
  Fn apply_, unapply_;
};

// N(ω) = rcurry⁻¹(lcurry(ω) ; ν_p) and ν_p = rcurry(N_{p,⊥p}(γ_p)).
BigCycle to_upper(const CycleData& c);
CycleData to_lower(const BigCycle& n);

// ν_p = λ·id on the shared dual space; requires ⊥p and ᵖp to carry equal reps.
CycleData scalar_cycle(const LinearModel& m, const Rational& lambda);
// The identity family where both duals are literally the same space or
// element (linear and thin backends).
CycleData identity_cycle(const Model& m);

enum class Axiom { Pnul, K, T0, Pbin, Tbin, BLR0, M0, Kp, BLR2, E2, E2p, M2, M2p };
constexpr std::size_t kAxiomCount = 13;
std::string to_string(Axiom a);
const std::array<Axiom, kAxiomCount>& all_axioms();
bool is_uppercase(Axiom a);

struct AxiomOptions {
  std::vector<ObjRef> objects;      // quantified objects; empty means the model's probes
  std::vector<ObjRef> hom_objects;  // objects for the hom-level axioms; empty means `objects`
  long max_tuples = 0;              // 0: every tuple; otherwise a seeded sample of this many
  std::uint64_t seed = 1;
};

SuiteResult check_axiom(const CycleData& c, const BigCycle& n, Axiom a, const AxiomOptions& opt = {});
SuiteResult check_axiom(const CycleData& c, Axiom a, const AxiomOptions& opt = {});

struct AxiomProfile {
  std::string label;
  std::array<SuiteResult, kAxiomCount> verdicts;
  bool holds(Axiom a) const { return verdicts[static_cast<std::size_t>(a)].pass; }
  const SuiteResult& at(Axiom a) const { return verdicts[static_cast<std::size_t>(a)]; }
};

struct Classification {
  bool par_semicycle = false;     // Pbin
  bool quasicycle = false;        // K
  bool tensor_semicycle = false;  // Tbin
  bool cycle = false;             // Tbin and Pbin
};

AxiomProfile profile(const CycleData& c, const AxiomOptions& opt = {});
Classification classify(const AxiomProfile& p);
std::string describe(const Classification& c);

// Implication rows and the four equivalent pairs relating the diagram axioms;
// each returned string names a violated row.
std::vector<std::string> dependency_violations(const AxiomProfile& p);
SuiteResult check_dependency_table(const std::vector<AxiomProfile>& profiles);
// Tbin ⇔ E2 ⇔ M2′, BLR2 ⇔ K′∧E2, Pnul ⇔ M0, Pbin ⇔ M2 ⇔ E2′.
SuiteResult check_upper_lower_equivalences(const AxiomProfile& p);

// Every ν_p invertible and natural over hom spans between the objects.
SuiteResult check_cycle_valid(const CycleData& c, const std::vector<ObjRef>& objs);
// to_lower ∘ to_upper = id on objects and to_upper ∘ to_lower = id on hom spans.
SuiteResult check_case_roundtrip(const CycleData& c, const std::vector<ObjRef>& objs);
// N⁻¹ ∘ N = id and, on linear backends, N(aω + bω′) = aN(ω) + bN(ω′).
SuiteResult check_bigcycle_bijective(const BigCycle& n, const std::vector<ObjRef>& objs);
SuiteResult check_bigcycle_linear(const BigCycle& n, const std::vector<ObjRef>& objs);

}  // namespace staut
