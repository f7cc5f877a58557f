#include <doctest.h>

#include <algorithm>
#include <array>
#include <numeric>

#include "staut/profunctors.hpp"
#include "staut/quantale.hpp"
#include "staut/suites.hpp"

using namespace staut;

namespace {

// Permutations of {0,1,2} composed as functions, independent of the library.
using Perm = std::array<int, 3>;

std::vector<Perm> all_perms() {
  std::vector<Perm> out;
  Perm p{0, 1, 2};
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Perm mul(const Perm& a, const Perm& b) { return {a[b[0]], a[b[1]], a[b[2]]}; }

bool central(const Perm& g) {
  for (const Perm& h : all_perms())
    if (mul(g, h) != mul(h, g)) return false;
  return true;
}

// Largest ξ with ω;ξ ⊆ ¬id by scanning every relation; composition from pairs.
RelMask brute_rdual(int n, RelMask w) {
  auto comp = [n](RelMask a, RelMask b) {
    RelMask out = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if ((a >> (i * n + j) & 1u) && (b >> (j * n + k) & 1u)) out |= 1u << (i * n + k);
    return out;
  };
  RelMask diag = 0;
  for (int i = 0; i < n; ++i) diag |= 1u << (i * n + i);
  const RelMask full = (1u << (n * n)) - 1;
  RelMask best = 0;
  for (RelMask x = 0; x <= full; ++x)
    if ((comp(w, x) & diag) == 0) best |= x;
  return best;
}

}  // namespace

TEST_CASE("builtin quantales validate") {
  for (const char* spec : {"bool", "l3", "rel:1", "rel:2", "2prof:chain2", "2prof:vee", "z6:0", "z5:2", "s3:id", "s3:(01)"}) {
    CAPTURE(spec);
    auto q = load_quantale(spec);
    for (const SuiteResult& s : validate_quantale(*q, 100000, 1)) {
      CAPTURE(s.name);
      CAPTURE(s.witness);
      CHECK(s.pass);
    }
  }
}

TEST_CASE("Rel(n) sizes and negations against a brute-force residual") {
  CHECK(build_rel_quantale(1)->size() == 2);
  CHECK(build_rel_quantale(2)->size() == 16);
  CHECK(build_rel_quantale(3)->size() == 512);
  for (int n = 1; n <= 3; ++n) {
    auto q = build_rel_quantale(n);
    CHECK(check_rel_negation(n).pass);
    CHECK(check_rel_negation(n).checks == q->size());
    if (n <= 2)
      for (int a = 0; a < q->size(); ++a) CHECK(q->mask(q->rdual(a)) == brute_rdual(n, q->mask(a)));
  }
}

TEST_CASE("pointed S3 is cyclic exactly at central elements") {
  const auto names = s3_names();
  REQUIRE(names.size() == 6);
  CHECK(names[0] == "id");
  const auto perms = all_perms();
  int central_count = 0;
  for (int g = 0; g < 6; ++g) {
    CAPTURE(names[g]);
    // The library's element order: id, three transpositions, two 3-cycles.
    const bool oracle = g == 0;
    CHECK(s3_central(g) == oracle);
    CHECK(is_cyclic(*build_s3(g)).cyclic == oracle);
  }
  for (const Perm& p : perms) central_count += central(p);
  CHECK(central_count == 1);
}

TEST_CASE("non-cyclic witness in a transposition-pointed S3") {
  CyclicVerdict v = is_cyclic(*build_s3(1));
  CHECK_FALSE(v.cyclic);
  auto q = build_s3(1);
  REQUIRE(v.witness >= 0);
  CHECK(q->rdual(v.witness) != q->ldual(v.witness));
}

TEST_CASE("ordered shift group: residuals are α⁻¹β") {
  auto q = build_cyclic_group(5, 2);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      auto r = residuals(*q, a, b);
      REQUIRE(r.lolli);
      CHECK(*r.lolli == ((b - a) % 5 + 5) % 5);
    }
  CHECK(is_cyclic(*q).cyclic);
}

TEST_CASE("Lukasiewicz chain negations") {
  auto q = build_lukasiewicz3();
  CHECK(q->rdual(0) == 2);
  CHECK(q->rdual(1) == 1);
  CHECK(q->rdual(2) == 0);
  CHECK(q->par(1, 1) == 2);
}

TEST_CASE("two-valued profunctors over small posets") {
  SuiteResult s = check_bool_profunctor_negation(3);
  CHECK(s.pass);
  CHECK(all_posets(1).size() == 1);
  CHECK(all_posets(2).size() == 3);
  CHECK(all_posets(3).size() == 19);
}

TEST_CASE("quantale file parsing") {
  auto q = parse_quantale("elements 0 h 1\norder 0 h\norder h 1\nrow 0: 0 0 0\nrow h: 0 0 h\nrow 1: 0 h 1\nunit 1\ndualizer 0\n",
                          "chain");
  CHECK(q->size() == 3);
  CHECK(q->tensor(1, 1) == 0);
  CHECK(q->rdual(1) == 1);
  try {
    parse_quantale("elements 0 1\norder 0 1\nrow 0: 0 0\nrow 1: 0 zz\nunit 1\ndualizer 0\n", "bad");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 4);
    CHECK(e.column == 10);
  }
}

TEST_CASE("unknown builtins list the available ones") {
  try {
    load_quantale("nosuch:1");
    FAIL("expected an error");
  } catch (const QuantaleError& e) {
    std::string w = e.what();
    CHECK(w.find("rel:") != std::string::npos);
    CHECK(w.find("l3") != std::string::npos);
  }
}

TEST_CASE("Rel(3) staut suite through the quantale check") {
  SuiteReport r = quantale_check("rel:3", RunOptions{});
  CHECK(r.pass());
  CHECK(r.stats.at("elements") == 512);
  CHECK(r.stats.at("cyclic") == 1);
}
