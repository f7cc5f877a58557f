#include <doctest.h>

#include "staut/linear.hpp"
#include "staut/profunctors.hpp"
#include "staut/thin_model.hpp"

using namespace staut;

namespace {

// Profunctors c ⇸ c over a poset-as-Bool-category: value matrices that are
// down-closed in the first argument and up-closed in the second.
long count_bool_profs(const Poset& p) {
  const int n = static_cast<int>(p.size());
  long count = 0;
  for (unsigned m = 0; m < (1u << (n * n)); ++m) {
    auto v = [&](int q, int r) { return (m >> (q * n + r) & 1u) != 0; };
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        for (int c = 0; c < n && ok; ++c) {
          if (p[a][b] && v(b, c) && !v(a, c)) ok = false;
          if (v(a, b) && p[b][c] && !v(a, c)) ok = false;
        }
    count += ok;
  }
  return count;
}

}  // namespace

TEST_CASE("enumeration counts match a direct count") {
  Poset chain2{{true, true}, {false, true}};
  Poset discrete2{{true, false}, {false, true}};
  CHECK(static_cast<long>(enumerate_profs(poset_vcat(chain2)).profs.size()) == count_bool_profs(chain2));
  CHECK(static_cast<long>(enumerate_profs(poset_vcat(discrete2)).profs.size()) == count_bool_profs(discrete2));
  CHECK(count_bool_profs(discrete2) == 16);
  for (const Poset& p : all_posets(3)) {
    ProfEnumeration e = enumerate_profs(poset_vcat(p));
    CHECK(e.exhaustive);
    CHECK(static_cast<long>(e.profs.size()) == count_bool_profs(p));
  }
}

TEST_CASE("composition is matrix multiplication over the quantale") {
  VCatRef c = discrete_vcat(build_bool(), 2);
  VProf f{c, c, {{0, 1}, {0, 0}}};
  VProf g{c, c, {{0, 0}, {1, 0}}};
  CHECK(compose_prof(f, g).val == std::vector<std::vector<int>>{{1, 0}, {0, 0}});
  CHECK(compose_prof(id_prof(c), f) == f);
  CHECK(compose_prof(f, id_prof(c)) == f);
  CHECK(d_prof(c).val == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
}

TEST_CASE("Prof over discrete 2 is Rel(2) and passes every suite") {
  SuiteResult iso = check_rel2_isomorphism();
  CHECK(iso.pass);
  ProfStautReport r = check_prof_staut(discrete_vcat(build_bool(), 2));
  for (const SuiteResult& s : r.suites) {
    CAPTURE(s.name);
    CAPTURE(s.witness);
    CHECK(s.pass);
  }
  REQUIRE(r.cycle_profile);
  CHECK(classify(*r.cycle_profile).cycle);
  CHECK(r.enumeration.profs.size() == 16);
}

TEST_CASE("Prof over a two-object Lukasiewicz category") {
  VCatRef c = load_vcat(std::string(STAUT_TEST_DATA) + "/l3two.vcat");
  CHECK(check_vcat(*c).pass);
  ProfStautReport r = check_prof_staut(c);
  CHECK(r.pass());
  CHECK(r.enumeration.exhaustive);
  REQUIRE(r.cycle_profile);
  CHECK(classify(*r.cycle_profile).cycle);
}

TEST_CASE("capped enumeration beyond the exhaustive limit") {
  VCatRef c = discrete_vcat(build_lukasiewicz3(), 4);
  ProfEnumeration e = enumerate_profs(c, 500, 9);
  CHECK_FALSE(e.exhaustive);
  CHECK(e.cap == 500);
  for (const VProf& f : e.profs) CHECK(check_prof_actions(f).pass);
  ProfEnumeration again = enumerate_profs(c, 500, 9);
  CHECK(again.profs.size() == e.profs.size());
}

TEST_CASE("duals agree over a cyclic base and incomplete bases are refused") {
  VCatRef c = discrete_vcat(build_lukasiewicz3(), 2);
  for (const VProf& f : enumerate_profs(c).profs) CHECK(dual_prof(f, Side::Right) == dual_prof(f, Side::Left));
  // A discretely ordered group has no joins of distinct elements.
  CHECK_THROWS_AS(enumerate_profs(discrete_vcat(build_s3(1), 2)), ProfError);
}

TEST_CASE("two-valued profunctor negations over posets") {
  CHECK(check_bool_profunctor_negation(3).pass);
}

TEST_CASE("contraposition agreement depends on the cycle") {
  auto vec = build_vec_model(2);
  ObjRef v1 = vec->generator(0), v2 = vec->generator(1);
  auto acts = random_actions(*vec, v2, v1, v2, 20, 3);
  CHECK(acts.size() == 20);
  CHECK(check_contraposition_agreement(scalar_cycle(*vec, Rational(1)), acts).pass);
  CHECK_FALSE(check_contraposition_agreement(scalar_cycle(*vec, Rational(2)), acts).pass);
  auto thin = make_thin_model(build_rel_quantale(2), 4, 1);
  std::vector<Mor> thin_acts;
  for (ObjRef a : thin->generators())
    for (ObjRef x : thin->generators())
      for (ObjRef y : thin->generators()) {
        try {
          thin_acts.push_back(thin->arrow(thin->tensor_obj(a, x), y));
        } catch (const NoSuchArrow&) {
        }
      }
  CHECK_FALSE(thin_acts.empty());
  CHECK(check_contraposition_agreement(identity_cycle(*thin), thin_acts).pass);
}

TEST_CASE("VCat parse errors carry positions") {
  try {
    parse_vcat("quantale l3\nobjects a b\nrow a: 1 zz\n", "bad");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(e.column == 10);
  }
  CHECK_THROWS_AS(parse_vcat("quantale nosuch\nobjects a\nrow a: 1\n", "bad"), ParseError);
}
