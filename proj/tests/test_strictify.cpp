#include <doctest.h>

#include "staut/linear.hpp"
#include "staut/quantale.hpp"
#include "staut/strictify.hpp"
#include "staut/suites.hpp"
#include "staut/thin_model.hpp"

using namespace staut;

TEST_CASE("Z-strings over Vec with λ = 1") {
  auto vec = build_vec_model(2);
  CycleData c = scalar_cycle(*vec, Rational(1));
  ZangModel z(*vec, -3, 3);
  ObjRef v1 = vec->generator(0), v2 = vec->generator(1);
  ObjRef p = z.zangify(v2);
  ObjRef f = z.add_period2(v1, c);
  ObjRef g = z.add_period2(v2, c);

  SUBCASE("components shift under negation") {
    CHECK(z.component(p, 0) == v2);
    CHECK(z.component(p, 1) == vec->rdual_obj(v2));
    CHECK(z.component(p, -1) == vec->ldual_obj(v2));
    CHECK(z.component(z.rdual_obj(p), 0) == z.component(p, 1));
    CHECK(z.rdual_obj(z.ldual_obj(p)) == p);
    CHECK(z.rdual_obj(z.tensor_obj(p, f)) == z.par_obj(z.rdual_obj(f), z.rdual_obj(p)));
    CHECK(z.component(f, 2) == v1);
    CHECK(z.component(f, -1) == vec->rdual_obj(v1));
  }
  SUBCASE("suites") {
    for (const SuiteResult& s : {check_zstring_triangles(z, {p, f, g, z.tensor_obj(p, f), z.par_obj(g, p), z.e(), z.d()}),
                                 check_structural_mates(z, {p, f, z.e()}), check_strict_negations(z, {p, f}),
                                 check_equivalence(z, {p, f})}) {
      CAPTURE(s.name);
      CAPTURE(s.witness);
      CHECK(s.pass);
      CHECK(s.checks > 0);
    }
  }
  SUBCASE("F-strings and the extended cycle") {
    SuiteResult s = fang_check(z, {f, g}, c);
    CAPTURE(s.witness);
    CHECK(s.pass);
    CHECK(is_fang(z, z.tensor_obj(f, g), c));
    CHECK_FALSE(is_fang(z, p, c));
    CycleData ext = zangcycle(z, c);
    CHECK(is_mate_string(z, ext.nu(p)));
    CHECK(is_mate_string(z, ext.nu(z.par_obj(p, f))));
  }
  SUBCASE("a tampered string is not a string of mates") {
    Mor id = z.id(p);
    Mor bad = z.from_components(p, p, [&](int n) {
      Mor m = z.component(id, n);
      return n == 2 ? vec->scaled(m, Rational(2)) : m;
    });
    std::string why;
    CHECK_FALSE(is_mate_string(z, bad, &why));
    CHECK(why.find("component 2") != std::string::npos);
    CHECK_FALSE(z.equal(bad, id));
  }
  SUBCASE("zangify is a functor") {
    for (const Mor& a : vec->hom_span(v2, v2))
      for (const Mor& b : vec->hom_span(v2, v2))
        CHECK(z.equal(z.zangify_mor(vec->then(a, b)), z.then(z.zangify_mor(a), z.zangify_mor(b))));
  }
}

TEST_CASE("Z-strings over a thin cyclic base") {
  auto thin = make_thin_model(load_quantale("rel:2"), 3, 1);
  CycleData c = identity_cycle(*thin);
  ZangModel z(*thin, -3, 3);
  ObjRef p = z.zangify(thin->generator(0));
  ObjRef f = z.add_period2(thin->generator(1), c);
  CHECK(check_strict_negations(z, {p, f}).pass);
  CHECK(check_equivalence(z, {p, f}).pass);
  CHECK(fang_check(z, {f}, c).pass);
}

TEST_CASE("F-strings require a cycle") {
  auto vec = build_vec_model(2);
  CycleData bad = scalar_cycle(*vec, Rational(-1));
  ZangModel z(*vec, -3, 3);
  ObjRef f = z.add_period2(vec->generator(0), bad);
  CHECK_THROWS_AS(fang_check(z, {f}, bad), CycleError);
}

TEST_CASE("wider windows still pass") {
  RunOptions opt;
  opt.window = 5;
  SuiteReport r = zang_suite("vec", opt);
  for (const CheckVerdict& v : r.checks) {
    CAPTURE(v.key);
    CAPTURE(v.witness);
    CHECK(v.pass);
  }
}

TEST_CASE("unknown Zang backends list the available ones") {
  try {
    zang_suite("nosuch", RunOptions{});
    FAIL("expected an input error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("thin:") != std::string::npos);
  }
  CHECK_THROWS_AS(zang_suite("thin:s3:(01)", RunOptions{}), InputError);
}

TEST_CASE("window must contain zero") { CHECK_THROWS(ZangModel(*build_vec_model(1), 1, 3)); }
