#include <doctest.h>

#include <map>

#include "staut/braided.hpp"
#include "staut/linear.hpp"
#include "staut/quantale.hpp"
#include "staut/suites.hpp"
#include "staut/thin_model.hpp"

using namespace staut;

namespace {

// For ν = λ·id each diagram compares two scalars; the difference in the
// number of ν strands decides it. A diagram with one ν against none holds
// iff λ = 1; ν against ⊥ν (two strands, with ⊥ν = λ) iff λ² = 1.
const std::map<Axiom, int>& strand_difference() {
  static const std::map<Axiom, int> table{
      {Axiom::Pnul, 1}, {Axiom::K, 2},  {Axiom::T0, 1}, {Axiom::Pbin, 1}, {Axiom::Tbin, 1}, {Axiom::BLR0, 1}, {Axiom::M0, 1},
      {Axiom::Kp, 2},   {Axiom::BLR2, 1}, {Axiom::E2, 1}, {Axiom::E2p, 1}, {Axiom::M2, 1}, {Axiom::M2p, 1}};
  return table;
}

bool oracle(Axiom a, const Rational& lambda) {
  Rational power(1);
  for (int i = 0; i < strand_difference().at(a); ++i) power *= lambda;
  return power == 1;
}

}  // namespace

TEST_CASE("scalar cycles on Vec match the strand-count oracle") {
  auto vec = build_vec_model(2);
  for (Rational lambda : {Rational(1), Rational(-1), Rational(2), Rational(1, 2), Rational(-1, 3)}) {
    CAPTURE(lambda.get_str());
    AxiomProfile p = profile(scalar_cycle(*vec, lambda));
    for (Axiom a : all_axioms()) {
      CAPTURE(to_string(a));
      CHECK(p.holds(a) == oracle(a, lambda));
      CHECK(p.at(a).checks > 0);
    }
    CHECK(check_upper_lower_equivalences(p).pass);
    CHECK(dependency_violations(p).empty());
  }
}

TEST_CASE("the suite's exponent table agrees with the oracle") {
  for (Axiom a : all_axioms()) CHECK(scalar_exponent(a) == strand_difference().at(a));
}

TEST_CASE("λ = -1 is a quasicycle but not a cycle") {
  auto vec = build_vec_model(2);
  Classification c = classify(profile(scalar_cycle(*vec, Rational(-1))));
  CHECK(c.quasicycle);
  CHECK_FALSE(c.cycle);
  CHECK_FALSE(c.tensor_semicycle);
  CHECK_FALSE(c.par_semicycle);
}

TEST_CASE("case change is a bijection and N is linear") {
  auto vec = build_vec_model(2);
  for (Rational lambda : {Rational(1), Rational(3)}) {
    CycleData c = scalar_cycle(*vec, lambda);
    CHECK(check_case_roundtrip(c, vec->probes()).pass);
    CHECK(check_bigcycle_bijective(to_upper(c), vec->probes()).pass);
    CHECK(check_bigcycle_linear(to_upper(c), vec->probes()).pass);
    CHECK(check_cycle_valid(c, vec->probes()).pass);
  }
}

TEST_CASE("dependency rows hold on every profile seen") {
  std::vector<AxiomProfile> seen;
  auto vec = build_vec_model(2);
  for (Rational l : {Rational(1), Rational(-1), Rational(2), Rational(1, 2), Rational(3), Rational(-2)})
    seen.push_back(profile(scalar_cycle(*vec, l)));
  AxiomOptions ao;
  ao.max_tuples = 2000;
  for (const char* spec : {"rel:2", "l3", "z4:1", "2prof:chain2"}) {
    auto thin = make_thin_model(load_quantale(spec), 4, 5);
    seen.push_back(profile(identity_cycle(*thin), ao));
    CHECK(classify(seen.back()).cycle);
  }
  auto d2 = build_drinfeld_z2();
  seen.push_back(profile(braided_identity_cycle(*d2)));
  seen.push_back(profile(identity_cycle(*d2)));
  auto gm = build_graded_model({0, 1, -1}, Rational(2));
  seen.push_back(profile(braided_identity_cycle(*gm)));
  SuiteResult t = check_dependency_table(seen);
  CAPTURE(t.witness);
  CHECK(t.pass);
  for (const AxiomProfile& p : seen) {
    CAPTURE(p.label);
    CHECK(check_upper_lower_equivalences(p).pass);
  }
}

TEST_CASE("a forged profile violating an implication row is reported") {
  auto vec = build_vec_model(2);
  AxiomProfile p = profile(scalar_cycle(*vec, Rational(1)));
  p.verdicts[static_cast<std::size_t>(Axiom::K)].pass = false;
  CHECK_FALSE(dependency_violations(p).empty());
  CHECK_FALSE(check_dependency_table({p}).pass);
}

TEST_CASE("sampled axiom checks are reproducible") {
  auto thin = make_thin_model(load_quantale("rel:2"), 6, 1);
  AxiomOptions ao;
  ao.max_tuples = 300;
  ao.seed = 42;
  SuiteResult a = check_axiom(identity_cycle(*thin), Axiom::M2, ao);
  SuiteResult b = check_axiom(identity_cycle(*thin), Axiom::M2, ao);
  CHECK(a.checks == b.checks);
  CHECK(a.checks <= 300);
  CHECK(a.pass);
}
