#include <doctest.h>

#include "staut/braided.hpp"
#include "staut/linear.hpp"
#include "staut/thin_model.hpp"

using namespace staut;

namespace {

std::vector<ObjRef> simples(const LinearModel& m) { return {m.generators().begin(), m.generators().begin() + 4}; }

}  // namespace

TEST_CASE("D(Z2) hexagons, non-planar distributions and degenerate braidings") {
  auto d2 = build_drinfeld_z2();
  auto s = simples(*d2);
  CHECK(check_hexagons(*d2, s).pass);
  CHECK(check_nonplanar_distributions(*d2, s).pass);
  CHECK(check_degenerate_braidings(*d2, s).pass);
}

TEST_CASE("stitch is the identity on D(Z2) and natural") {
  auto d2 = build_drinfeld_z2();
  SuiteResult r = check_stitch_identity(*d2, d2->generators());
  CHECK(r.pass);
  CHECK(r.checks == 5);
  CHECK(check_stitch_natural(*d2, simples(*d2)).pass);
}

TEST_CASE("stitch on the graded model is λ^{2g²}") {
  auto gm = build_graded_model({0, 1, -1, 2}, Rational(2));
  const std::vector<Rational> want{Rational(1), Rational(4), Rational(4), Rational(256)};
  for (std::size_t i = 0; i < 4; ++i) {
    CAPTURE(i);
    CHECK(gm->matrix(stitch(*gm, gm->generator(i))) == QMatrix::identity(1).scaled(want[i]));
  }
  CHECK_FALSE(check_stitch_identity(*gm, gm->generators()).pass);
}

TEST_CASE("the braiding-induced cycle is a quasicycle but not a cycle on D(Z2)") {
  auto d2 = build_drinfeld_z2();
  AxiomProfile p = profile(braided_identity_cycle(*d2));
  Classification c = classify(p);
  CHECK(c.quasicycle);
  CHECK_FALSE(c.cycle);
  CHECK_FALSE(p.holds(Axiom::Tbin));
  CHECK(check_identity_cycle_symmetry(*d2).pass);
}

TEST_CASE("the ribbon twist of D(Z2)") {
  auto d2 = build_drinfeld_z2();
  Balance t = d2_ribbon_twist(*d2);
  const auto s = simples(*d2);
  // θ acts by -1 on the fermion and by 1 on the other simples.
  CHECK(d2->matrix(t.theta(s[3])) == QMatrix::identity(1).scaled(-1));
  for (int i = 0; i < 3; ++i) CHECK(d2->matrix(t.theta(s[i])) == QMatrix::identity(1));
  CHECK(check_balance_valid(t, d2->probes()).pass);
  CHECK(check_semibalance(t, true, s).pass);
  CHECK(check_semibalance(t, false, s).pass);
  CHECK(check_balance_roundtrip(t, d2->probes()).pass);
  CHECK(check_quasibalance(t, d2->probes()).pass);
  CHECK(check_balance_double(t, d2->probes()).pass);
  CHECK(classify(profile(to_lower(cycle_from_balance(t)))).cycle);
}

TEST_CASE("the identity is not a balance on a non-symmetric model") {
  auto d2 = build_drinfeld_z2();
  Balance id = identity_balance(*d2);
  CHECK_FALSE(check_semibalance(id, true, simples(*d2)).pass);
  CHECK(check_cycle_roundtrip(identity_cycle(*d2), d2->probes()).pass);
}

TEST_CASE("quasibalance matches the quasicycle axiom of the induced cycle") {
  auto gm = build_graded_model({0, 1, -1, 2}, Rational(2));
  int quasi_seen = 0, non_quasi_seen = 0;
  for (Rational l : {Rational(1), Rational(2), Rational(-1), Rational(1, 2)})
    for (const Balance& b : {graded_twist(*gm, l), scalar_balance(*gm, l), identity_balance(*gm)}) {
      CAPTURE(b.label());
      const bool quasi = check_quasibalance(b, gm->probes()).pass;
      CHECK(quasi == check_axiom(to_lower(cycle_from_balance(b)), Axiom::K).pass);
      (quasi ? quasi_seen : non_quasi_seen)++;
    }
  CHECK(quasi_seen > 0);
  CHECK(non_quasi_seen > 0);
}

TEST_CASE("symmetric thin models have symmetric braidings and cycle") {
  auto thin = make_thin_model(load_quantale("z4:1"), 4, 1);
  REQUIRE(thin->braided());
  CHECK(check_symmetry(*thin, thin->generators()).pass);
  CHECK(check_identity_cycle_symmetry(*thin).pass);
}

TEST_CASE("vector spaces: flip braiding is a symmetry with trivial stitch") {
  auto vec = build_vec_model(2);
  CHECK(check_symmetry(*vec, vec->generators()).pass);
  CHECK(check_stitch_identity(*vec, vec->probes()).pass);
  CHECK(classify(profile(braided_identity_cycle(*vec))).cycle);
}
