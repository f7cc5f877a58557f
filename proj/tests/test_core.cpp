#include <doctest.h>

#include <random>
#include <set>
#include <utility>

#include "staut/canonical.hpp"
#include "staut/linear.hpp"
#include "staut/quantale.hpp"
#include "staut/thin_model.hpp"

using namespace staut;

namespace {

using Pairs = std::set<std::pair<int, int>>;

Pairs to_pairs(int n, RelMask m) {
  Pairs out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m >> (i * n + j) & 1u) out.insert({i, j});
  return out;
}

// Relational composition straight from the definition: first a, then b.
Pairs compose_pairs(const Pairs& a, const Pairs& b) {
  Pairs out;
  for (auto [i, j] : a)
    for (auto [k, l] : b)
      if (j == k) out.insert({i, l});
  return out;
}

QMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> d(-3, 3);
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, Rational(d(rng)));
  return m;
}

}  // namespace

TEST_CASE("object descriptors are hash-consed") {
  ObjectTable t;
  int g = t.add_generator("p");
  int h = t.add_generator("q");
  ObjRef p = t.gen(g), q = t.gen(h);
  CHECK(t.tensor(p, q) == t.tensor(p, q));
  CHECK(t.tensor(p, q) != t.tensor(q, p));
  CHECK(t.tensor(p, q) != t.par(p, q));
  CHECK(t.rdual(t.tensor(p, q)) == t.rdual(t.tensor(p, q)));
  CHECK(t.rdual(p) != t.ldual(p));
  CHECK(t.unit_e() != t.unit_d());
  CHECK(t.depth(p) == 0);
  CHECK(t.depth(t.rdual(t.tensor(p, q))) == 2);
  CHECK(t.term(t.par(p, q)).kind == Kind::Par);
}

TEST_CASE("nesting beyond the universe bound is refused") {
  ObjectTable t(2);
  ObjRef p = t.gen(t.add_generator("p"));
  ObjRef x = t.rdual(t.rdual(p));
  CHECK_THROWS_AS(t.rdual(x), UniverseError);
}

TEST_CASE("composition checks types and names both objects") {
  auto vec = build_vec_model(2);
  ObjRef v1 = vec->generator(0), v2 = vec->generator(1);
  Mor f = vec->id(v1);
  Mor g = vec->id(v2);
  CHECK_THROWS_AS(vec->then(f, g), CompositionError);
  try {
    vec->then(f, g);
  } catch (const CompositionError& e) {
    std::string w = e.what();
    CHECK(w.find(vec->name(v1)) != std::string::npos);
    CHECK(w.find(vec->name(v2)) != std::string::npos);
  }
}

TEST_CASE("identities are neutral and composition is a matrix product") {
  auto vec = build_vec_model(2);
  ObjRef v2 = vec->generator(1);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    QMatrix a = random_matrix(rng, 2, 2), b = random_matrix(rng, 2, 2);
    Mor f = vec->make(v2, v2, a), g = vec->make(v2, v2, b);
    CHECK(vec->equal(vec->then(vec->id(v2), f), f));
    CHECK(vec->equal(vec->then(f, vec->id(v2)), f));
    CHECK(vec->matrix(vec->then(f, g)) == b * a);
  }
}

TEST_CASE("relation composition matches the pair definition") {
  const int n = 2;
  CHECK(to_pairs(n, rel_compose(n, 1u << 1, 1u << 2)) == Pairs{{0, 0}});
  for (RelMask a = 0; a < 16; ++a)
    for (RelMask b = 0; b < 16; ++b) CHECK(to_pairs(n, rel_compose(n, a, b)) == compose_pairs(to_pairs(n, a), to_pairs(n, b)));
}

TEST_CASE("exact matrix algebra laws") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    QMatrix a = random_matrix(rng, 2, 3), b = random_matrix(rng, 3, 2), c = random_matrix(rng, 2, 2);
    CHECK((a * b) * c == a * (b * c));
    QMatrix d = random_matrix(rng, 2, 2), e = random_matrix(rng, 2, 2);
    CHECK(a.kron(c) * b.kron(d) == (a * b).kron(c * d));
    if (auto inv = e.inverse()) CHECK(*inv * e == QMatrix::identity(2));
    else CHECK(e.rank() < 2);
  }
  CHECK(QMatrix::flip(2, 3) * QMatrix::flip(3, 2) == QMatrix::identity(6));
}

TEST_CASE("curry maps are bijections on the vector backend") {
  auto vec = build_vec_model(2);
  const Model& m = *vec;
  for (ObjRef p : vec->generators())
    for (ObjRef t : vec->generators()) {
      for (const Mor& f : m.hom_span(m.tensor_obj(p, t), m.d())) {
        Mor g = lcurry(m, p, f);
        CHECK(g.dom == t);
        CHECK(g.cod == m.rdual_obj(p));
        CHECK(m.equal(lcurry_inv(m, p, g), f));
      }
      for (const Mor& f : m.hom_span(m.tensor_obj(t, p), m.d())) CHECK(m.equal(rcurry_inv(m, p, rcurry(m, p, f)), f));
    }
}

TEST_CASE("staut invariant suites on the linear backends") {
  auto vec = build_vec_model(2);
  auto d2 = build_drinfeld_z2();
  for (const LinearModel* m : {vec.get(), d2.get()}) {
    CAPTURE(m->describe());
    const auto probes = m->probes();
    for (const SuiteResult& s :
         {check_triangles(*m, probes), check_monoidal_coherence(*m, m->generators()), check_distributivity(*m, m->generators()),
          check_curry_bijection(*m, probes), check_canonical_invertible(*m, probes)}) {
      CAPTURE(s.name);
      CAPTURE(s.witness);
      CHECK(s.pass);
      CHECK(s.checks > 0);
    }
  }
}

TEST_CASE("staut invariant suites on thin models") {
  for (const char* spec : {"rel:2", "l3", "2prof:chain2", "s3:(01)"}) {
    CAPTURE(spec);
    auto thin = make_thin_model(load_quantale(spec), 5, 3);
    const auto probes = thin->probes();
    for (const SuiteResult& s : {check_triangles(*thin, probes), check_monoidal_coherence(*thin, thin->generators()),
                                 check_distributivity(*thin, thin->generators()), check_canonical_invertible(*thin, probes)}) {
      CAPTURE(s.name);
      CAPTURE(s.witness);
      CHECK(s.pass);
    }
  }
}

TEST_CASE("thin arrows exist exactly along the order") {
  auto q = build_lukasiewicz3();
  ThinModel m(q, {0, 1, 2});
  ObjRef zero = m.generator(0), half = m.generator(1), one = m.generator(2);
  CHECK_NOTHROW(m.arrow(zero, half));
  CHECK_NOTHROW(m.arrow(half, one));
  CHECK_THROWS_AS(m.arrow(one, half), NoSuchArrow);
  // h ⊗ h = 0 in the chain, so h⊗h → 0 exists.
  CHECK_NOTHROW(m.arrow(m.tensor_obj(half, half), zero));
  CHECK(m.eval(m.rdual_obj(half)) == 1);
}

TEST_CASE("de Morgan maps have the documented types") {
  auto vec = build_vec_model(2);
  const Model& m = *vec;
  ObjRef p = vec->generator(0), q = vec->generator(1);
  Mor t = demorgan(m, DeMorgan::TensorR, p, q);
  CHECK(t.dom == m.rdual_obj(m.tensor_obj(p, q)));
  CHECK(t.cod == m.par_obj(m.rdual_obj(q), m.rdual_obj(p)));
  Mor u = demorgan(m, DeMorgan::UnitER);
  CHECK(u.dom == m.e());
  CHECK(u.cod == m.rdual_obj(m.d()));
  CHECK(all_demorgan().size() == 8);
  Mor c = canon_rl(m, p);
  CHECK(c.cod == m.rdual_obj(m.ldual_obj(p)));
}
