#include "staut/canonical.hpp"

#include <algorithm>

namespace staut {

ObjRef left_of(const Model& m, ObjRef x, Kind k) {
  Term t = m.objects().term(x);
  if (t.kind != k) throw ShapeError("expected a binary object, got " + m.name(x));
  return t.a;
}

ObjRef right_of(const Model& m, ObjRef x, Kind k) {
  Term t = m.objects().term(x);
  if (t.kind != k) throw ShapeError("expected a binary object, got " + m.name(x));
  return t.b;
}

ObjRef dual_arg(const Model& m, ObjRef x, Kind k) {
  Term t = m.objects().term(x);
  if (t.kind != k) throw ShapeError("expected a dual object, got " + m.name(x));
  return t.a;
}

Adjunction right_dual_adj(const Model& m, ObjRef p) {
  return {p, m.rdual_obj(p), m.tau_r(p), m.gamma_r(p)};
}

Adjunction left_dual_adj(const Model& m, ObjRef p) {
  return {m.ldual_obj(p), p, m.tau_l(p), m.gamma_l(p)};
}

namespace {

void expect_cod(const Model& m, const Mor& f, ObjRef cod, const char* what) {
  if (f.cod != cod) throw ShapeError(std::string(what) + ": codomain " + m.name(f.cod) + " should be " + m.name(cod));
}

}  // namespace

Mor curry_left_into(const Model& m, const Adjunction& adj, const Mor& h) {
  // t → e⊗t → (B⅋A)⊗t → B⅋(A⊗t) → B⅋y
  if (left_of(m, h.dom, Kind::Tensor) != adj.left) throw ShapeError("curry: domain must start with " + m.name(adj.left));
  ObjRef t = right_of(m, h.dom, Kind::Tensor);
  Mor f = m.lunit_inv(t);
  f = m.then(f, m.tensor(adj.unit, m.id(t)));
  f = m.then(f, m.dist_r(adj.right, adj.left, t));
  return m.then(f, m.par(m.id(adj.right), h));
}

Mor curry_right_into(const Model& m, const Adjunction& adj, const Mor& h) {
  // t → t⊗e → t⊗(B⅋A) → (t⊗B)⅋A → y⅋A
  if (right_of(m, h.dom, Kind::Tensor) != adj.right) throw ShapeError("curry: domain must end with " + m.name(adj.right));
  ObjRef t = left_of(m, h.dom, Kind::Tensor);
  Mor f = m.runit_inv(t);
  f = m.then(f, m.tensor(m.id(t), adj.unit));
  f = m.then(f, m.dist_l(t, adj.right, adj.left));
  return m.then(f, m.par(h, m.id(adj.left)));
}

Mor curry_left(const Model& m, const Adjunction& adj, const Mor& f) {
  expect_cod(m, f, m.d(), "curry");
  return m.then(curry_left_into(m, adj, f), m.prunit(adj.right));
}

Mor curry_right(const Model& m, const Adjunction& adj, const Mor& f) {
  expect_cod(m, f, m.d(), "curry");
  return m.then(curry_right_into(m, adj, f), m.plunit(adj.left));
}

Mor uncurry_left(const Model& m, const Adjunction& adj, const Mor& g) {
  expect_cod(m, g, adj.right, "uncurry");
  return m.then(m.tensor(m.id(adj.left), g), adj.counit);
}

Mor uncurry_right(const Model& m, const Adjunction& adj, const Mor& g) {
  expect_cod(m, g, adj.left, "uncurry");
  return m.then(m.tensor(g, m.id(adj.right)), adj.counit);
}

Mor lcurry(const Model& m, ObjRef p, const Mor& f) { return curry_left(m, right_dual_adj(m, p), f); }
Mor rcurry(const Model& m, ObjRef p, const Mor& f) { return curry_right(m, left_dual_adj(m, p), f); }
Mor lcurry_inv(const Model& m, ObjRef p, const Mor& g) { return uncurry_left(m, right_dual_adj(m, p), g); }
Mor rcurry_inv(const Model& m, ObjRef p, const Mor& g) { return uncurry_right(m, left_dual_adj(m, p), g); }

Mor rdual_mor(const Model& m, const Mor& f) {
  ObjRef y = f.cod;
  return lcurry(m, f.dom, m.then(m.tensor(f, m.id(m.rdual_obj(y))), m.gamma_r(y)));
}

Mor ldual_mor(const Model& m, const Mor& f) {
  ObjRef y = f.cod;
  return rcurry(m, f.dom, m.then(m.tensor(m.id(m.ldual_obj(y)), f), m.gamma_l(y)));
}

std::string to_string(DeMorgan v) {
  switch (v) {
    case DeMorgan::TensorR: return "⊥(p⊗q)→⊥q⅋⊥p";
    case DeMorgan::TensorL: return "ᵖ(p⊗q)→ᵖq⅋ᵖp";
    case DeMorgan::ParR: return "⊥q⊗⊥p→⊥(p⅋q)";
    case DeMorgan::ParL: return "ᵖq⊗ᵖp→ᵖ(p⅋q)";
    case DeMorgan::UnitER: return "e→⊥d";
    case DeMorgan::UnitEL: return "e→ᵖd";
    case DeMorgan::UnitDR: return "⊥e→d";
    case DeMorgan::UnitDL: return "ᵖe→d";
  }
  return "?";
}

std::vector<DeMorgan> all_demorgan() {
  return {DeMorgan::TensorR, DeMorgan::TensorL, DeMorgan::ParR,   DeMorgan::ParL,
          DeMorgan::UnitER,  DeMorgan::UnitEL,  DeMorgan::UnitDR, DeMorgan::UnitDL};
}

bool demorgan_is_binary(DeMorgan v) {
  return v == DeMorgan::TensorR || v == DeMorgan::TensorL || v == DeMorgan::ParR || v == DeMorgan::ParL;
}

Mor demorgan(const Model& m, DeMorgan v, ObjRef p, ObjRef q) {
  switch (v) {
    case DeMorgan::TensorR: {
      ObjRef pq = m.tensor_obj(p, q);
      ObjRef npq = m.rdual_obj(pq);
      ObjRef t = m.tensor_obj(q, npq);
      Mor f = m.then(m.assoc_inv(p, q, npq), m.gamma_r(pq));  // p⊗(q⊗⊥(p⊗q)) → d
      Mor h = lcurry(m, p, f);                               // q⊗⊥(p⊗q) → ⊥p
      (void)t;
      return curry_left_into(m, right_dual_adj(m, q), h);
    }
    case DeMorgan::TensorL: {
      ObjRef pq = m.tensor_obj(p, q);
      ObjRef npq = m.ldual_obj(pq);
      Mor f = m.then(m.assoc(npq, p, q), m.gamma_l(pq));  // (ᵖ(p⊗q)⊗p)⊗q → d
      Mor h = rcurry(m, q, f);                           // ᵖ(p⊗q)⊗p → ᵖq
      return curry_right_into(m, left_dual_adj(m, p), h);
    }
    case DeMorgan::ParR: {
      ObjRef pp = m.par_obj(p, q);
      return lcurry(m, pp, lbind(m, m.gamma_r(p), m.gamma_r(q)));
    }
    case DeMorgan::ParL: {
      ObjRef pp = m.par_obj(p, q);
      return rcurry(m, pp, rbind(m, m.gamma_l(q), m.gamma_l(p)));
    }
    case DeMorgan::UnitER: return lcurry(m, m.d(), m.runit(m.d()));
    case DeMorgan::UnitEL: return rcurry(m, m.d(), m.lunit(m.d()));
    case DeMorgan::UnitDR: {
      ObjRef ne = m.rdual_obj(m.e());
      return m.then(m.lunit_inv(ne), m.gamma_r(m.e()));
    }
    case DeMorgan::UnitDL: {
      ObjRef ne = m.ldual_obj(m.e());
      return m.then(m.runit_inv(ne), m.gamma_l(m.e()));
    }
  }
  throw ShapeError("unknown de Morgan variant");
}

Mor canon_rl(const Model& m, ObjRef p) { return lcurry(m, m.ldual_obj(p), m.gamma_l(p)); }
Mor canon_lr(const Model& m, ObjRef p) { return rcurry(m, m.rdual_obj(p), m.gamma_r(p)); }

Mor lbind(const Model& m, const Mor& omega, const Mor& psi) {
  ObjRef p = left_of(m, omega.dom, Kind::Tensor);
  ObjRef t = right_of(m, omega.dom, Kind::Tensor);
  ObjRef q = left_of(m, psi.dom, Kind::Tensor);
  ObjRef s = right_of(m, psi.dom, Kind::Tensor);
  ObjRef pq = m.par_obj(p, q);
  // (p⅋q)⊗(s⊗t) → ((p⅋q)⊗s)⊗t → (p⅋(q⊗s))⊗t → (p⅋d)⊗t → p⊗t → d
  Mor f = m.assoc_inv(pq, s, t);
  f = m.then(f, m.tensor(m.dist_r(p, q, s), m.id(t)));
  f = m.then(f, m.tensor(m.par(m.id(p), psi), m.id(t)));
  f = m.then(f, m.tensor(m.prunit(p), m.id(t)));
  return m.then(f, omega);
}

Mor rbind(const Model& m, const Mor& omega, const Mor& psi) {
  ObjRef p = left_of(m, omega.dom, Kind::Tensor);
  ObjRef t = right_of(m, omega.dom, Kind::Tensor);
  ObjRef q = left_of(m, psi.dom, Kind::Tensor);
  ObjRef s = right_of(m, psi.dom, Kind::Tensor);
  ObjRef st = m.par_obj(s, t);
  // (p⊗q)⊗(s⅋t) → p⊗(q⊗(s⅋t)) → p⊗((q⊗s)⅋t) → p⊗(d⅋t) → p⊗t → d
  Mor f = m.assoc(p, q, st);
  f = m.then(f, m.tensor(m.id(p), m.dist_l(q, s, t)));
  f = m.then(f, m.tensor(m.id(p), m.par(psi, m.id(t))));
  f = m.then(f, m.tensor(m.id(p), m.plunit(t)));
  return m.then(f, omega);
}

ResidualObjects residual_objects(const Model& m, ObjRef x, ObjRef z) {
  return {m.par_obj(m.rdual_obj(x), z), m.par_obj(z, m.ldual_obj(x))};
}

Mor name_of(const Model& m, const Mor& f) {
  return m.then(m.tau_r(f.dom), m.par(m.id(m.rdual_obj(f.dom)), f));
}

Mor unname(const Model& m, ObjRef p, const Mor& n) {
  // p → p⊗e → p⊗(⊥p⅋q) → (p⊗⊥p)⅋q → d⅋q → q
  ObjRef np = m.rdual_obj(p);
  ObjRef q = right_of(m, n.cod, Kind::Par);
  Mor f = m.runit_inv(p);
  f = m.then(f, m.tensor(m.id(p), n));
  f = m.then(f, m.dist_l(p, np, q));
  f = m.then(f, m.par(m.gamma_r(p), m.id(q)));
  return m.then(f, m.plunit(q));
}

bool adjunction_triangles(const Model& m, const Adjunction& adj) {
  ObjRef a = adj.left, b = adj.right;
  Mor t1 = m.runit_inv(a);
  t1 = m.then(t1, m.tensor(m.id(a), adj.unit));
  t1 = m.then(t1, m.dist_l(a, b, a));
  t1 = m.then(t1, m.par(adj.counit, m.id(a)));
  t1 = m.then(t1, m.plunit(a));
  if (!m.equal(t1, m.id(a))) return false;
  Mor t2 = m.lunit_inv(b);
  t2 = m.then(t2, m.tensor(adj.unit, m.id(b)));
  t2 = m.then(t2, m.dist_r(b, a, b));
  t2 = m.then(t2, m.par(m.id(b), adj.counit));
  t2 = m.then(t2, m.prunit(b));
  return m.equal(t2, m.id(b));
}

SuiteResult check_triangles(const Model& m, const std::vector<ObjRef>& objs) {
  SuiteResult r{"triangle identities"};
  for (ObjRef p : objs) {
    r.checks += 2;
    if (!adjunction_triangles(m, right_dual_adj(m, p))) r.fail("right dual of " + m.name(p));
    if (!adjunction_triangles(m, left_dual_adj(m, p))) r.fail("left dual of " + m.name(p));
  }
  return r;
}

namespace {

template <class F>
void for_triples(const std::vector<ObjRef>& objs, F&& f) {
  for (ObjRef x : objs)
    for (ObjRef y : objs)
      for (ObjRef z : objs) f(x, y, z);
}

}  // namespace

SuiteResult check_monoidal_coherence(const Model& m, const std::vector<ObjRef>& objs) {
  SuiteResult r{"monoidal coherence"};
  auto T = [&](ObjRef a, ObjRef b) { return m.tensor_obj(a, b); };
  auto P = [&](ObjRef a, ObjRef b) { return m.par_obj(a, b); };
  for (ObjRef x : objs)
    for (ObjRef y : objs) {
      // triangle: (x⊗e)⊗y → x⊗(e⊗y) → x⊗y equals ρ⊗id
      r.checks += 2;
      Mor lhs = m.then(m.assoc(x, m.e(), y), m.tensor(m.id(x), m.lunit(y)));
      if (!m.equal(lhs, m.tensor(m.runit(x), m.id(y)))) r.fail("⊗ unit triangle at " + m.name(x) + ", " + m.name(y));
      Mor plhs = m.then(m.passoc(x, m.d(), y), m.par(m.id(x), m.plunit(y)));
      if (!m.equal(plhs, m.par(m.prunit(x), m.id(y)))) r.fail("⅋ unit triangle at " + m.name(x) + ", " + m.name(y));
      for (ObjRef z : objs)
        for (ObjRef w : objs) {
          r.checks += 2;
          Mor a1 = m.then(m.assoc(T(x, y), z, w), m.assoc(x, y, T(z, w)));
          Mor a2 = m.then(m.then(m.tensor(m.assoc(x, y, z), m.id(w)), m.assoc(x, T(y, z), w)),
                          m.tensor(m.id(x), m.assoc(y, z, w)));
          if (!m.equal(a1, a2)) r.fail("⊗ pentagon at " + m.name(x) + "," + m.name(y) + "," + m.name(z) + "," + m.name(w));
          Mor b1 = m.then(m.passoc(P(x, y), z, w), m.passoc(x, y, P(z, w)));
          Mor b2 = m.then(m.then(m.par(m.passoc(x, y, z), m.id(w)), m.passoc(x, P(y, z), w)),
                          m.par(m.id(x), m.passoc(y, z, w)));
          if (!m.equal(b1, b2)) r.fail("⅋ pentagon at " + m.name(x) + "," + m.name(y) + "," + m.name(z) + "," + m.name(w));
        }
    }
  return r;
}

SuiteResult check_distributivity(const Model& m, const std::vector<ObjRef>& objs) {
  SuiteResult r{"linear distribution coherence"};
  auto T = [&](ObjRef a, ObjRef b) { return m.tensor_obj(a, b); };
  auto P = [&](ObjRef a, ObjRef b) { return m.par_obj(a, b); };
  for (ObjRef x : objs)
    for (ObjRef y : objs) {
      r.checks += 2;
      // e⊗(x⅋y) → (e⊗x)⅋y → x⅋y  equals λ
      Mor u1 = m.then(m.dist_l(m.e(), x, y), m.par(m.lunit(x), m.id(y)));
      if (!m.equal(u1, m.lunit(P(x, y)))) r.fail("δL unit at " + m.name(x) + "," + m.name(y));
      // (x⅋y)⊗e → x⅋(y⊗e) → x⅋y  equals ρ
      Mor u2 = m.then(m.dist_r(x, y, m.e()), m.par(m.id(x), m.runit(y)));
      if (!m.equal(u2, m.runit(P(x, y)))) r.fail("δR unit at " + m.name(x) + "," + m.name(y));
    }
  for (ObjRef x : objs)
    for_triples(objs, [&](ObjRef y, ObjRef z, ObjRef w) {
      std::string at = m.name(x) + "," + m.name(y) + "," + m.name(z) + "," + m.name(w);
      r.checks += 4;
      // (x⊗y)⊗(z⅋w): δL against ⊗-associativity
      Mor a1 = m.dist_l(T(x, y), z, w);
      Mor a2 = m.assoc(x, y, P(z, w));
      a2 = m.then(a2, m.tensor(m.id(x), m.dist_l(y, z, w)));
      a2 = m.then(a2, m.dist_l(x, T(y, z), w));
      a2 = m.then(a2, m.par(m.assoc_inv(x, y, z), m.id(w)));
      if (!m.equal(a1, a2)) r.fail("δL/⊗-assoc at " + at);
      // x⊗((y⅋z)⅋w): δL against ⅋-associativity
      Mor b1 = m.then(m.dist_l(x, P(y, z), w), m.par(m.dist_l(x, y, z), m.id(w)));
      Mor b2 = m.then(m.then(m.tensor(m.id(x), m.passoc(y, z, w)), m.dist_l(x, y, P(z, w))),
                      m.passoc_inv(T(x, y), z, w));
      if (!m.equal(b1, b2)) r.fail("δL/⅋-assoc at " + at);
      // (x⅋y)⊗(z⊗w): δR against ⊗-associativity
      Mor c1 = m.dist_r(x, y, T(z, w));
      Mor c2 = m.assoc_inv(P(x, y), z, w);
      c2 = m.then(c2, m.tensor(m.dist_r(x, y, z), m.id(w)));
      c2 = m.then(c2, m.dist_r(x, T(y, z), w));
      c2 = m.then(c2, m.par(m.id(x), m.assoc(y, z, w)));
      if (!m.equal(c1, c2)) r.fail("δR/⊗-assoc at " + at);
      // (x⅋y)⊗(z⅋w): the two routes to x⅋((y⊗z)⅋w)
      Mor d1 = m.then(m.then(m.dist_l(P(x, y), z, w), m.par(m.dist_r(x, y, z), m.id(w))),
                      m.passoc(x, T(y, z), w));
      Mor d2 = m.then(m.dist_r(x, y, P(z, w)), m.par(m.id(x), m.dist_l(y, z, w)));
      if (!m.equal(d1, d2)) r.fail("δL/δR interchange at " + at);
    });
  return r;
}

SuiteResult check_curry_bijection(const Model& m, const std::vector<ObjRef>& objs) {
  SuiteResult r{"curry bijections"};
  for (ObjRef p : objs)
    for (ObjRef t : objs) {
      for (const Mor& f : m.hom_span(m.tensor_obj(p, t), m.d())) {
        ++r.checks;
        if (!m.equal(lcurry_inv(m, p, lcurry(m, p, f)), f)) r.fail("lcurry round trip at " + m.name(p) + "," + m.name(t));
      }
      for (const Mor& f : m.hom_span(m.tensor_obj(t, p), m.d())) {
        ++r.checks;
        if (!m.equal(rcurry_inv(m, p, rcurry(m, p, f)), f)) r.fail("rcurry round trip at " + m.name(p) + "," + m.name(t));
      }
      for (const Mor& g : m.hom_span(t, m.rdual_obj(p))) {
        ++r.checks;
        if (!m.equal(lcurry(m, p, lcurry_inv(m, p, g)), g)) r.fail("lcurry inverse round trip at " + m.name(p) + "," + m.name(t));
      }
    }
  for (ObjRef p : objs) {
    ++r.checks;
    if (!m.equal(lcurry(m, p, m.gamma_r(p)), m.id(m.rdual_obj(p)))) r.fail("lcurry(γ) ≠ id at " + m.name(p));
  }
  return r;
}

SuiteResult check_canonical_invertible(const Model& m, const std::vector<ObjRef>& objs) {
  SuiteResult r{"canonical isomorphisms"};
  auto inv_ok = [&](const Mor& f, const std::string& what) {
    ++r.checks;
    try {
      Mor g = m.inverse(f);
      if (!m.equal(m.then(f, g), m.id(f.dom)) || !m.equal(m.then(g, f), m.id(f.cod))) r.fail(what);
    } catch (const NoSuchArrow&) {
      r.fail(what + " is not invertible");
    }
  };
  for (DeMorgan v : all_demorgan())
    if (!demorgan_is_binary(v)) inv_ok(demorgan(m, v), to_string(v));
  for (ObjRef p : objs) {
    inv_ok(canon_rl(m, p), "ι at " + m.name(p));
    inv_ok(canon_lr(m, p), "ι′ at " + m.name(p));
    for (ObjRef q : objs)
      for (DeMorgan v : all_demorgan())
        if (demorgan_is_binary(v)) inv_ok(demorgan(m, v, p, q), to_string(v) + " at " + m.name(p) + "," + m.name(q));
  }
  return r;
}

bool base_identity_holds(const Model& m, const Mor& psi, const Mor& omega2, ObjRef s, ObjRef t) {
  ObjRef q = left_of(m, psi.dom, Kind::Tensor);
  ObjRef p = right_of(m, omega2.dom, Kind::Tensor);
  ObjRef st = m.par_obj(s, t);
  // q⊗((s⅋t)⊗p) → (q⊗(s⅋t))⊗p → t⊗p → d
  Mor inner = m.then(m.then(m.dist_l(q, s, t), m.par(psi, m.id(t))), m.plunit(t));
  Mor lhs = m.then(m.then(m.assoc_inv(q, st, p), m.tensor(inner, m.id(p))), omega2);
  // q⊗((s⅋t)⊗p) → q⊗s → d
  Mor inner2 = m.then(m.then(m.dist_r(s, t, p), m.par(m.id(s), omega2)), m.prunit(s));
  Mor rhs = m.then(m.tensor(m.id(q), inner2), psi);
  return m.equal(lhs, rhs);
}

SuiteResult check_base_identity(const Model& m, const std::vector<ObjRef>& objs, long max_samples) {
  SuiteResult r{"base identity"};
  for (ObjRef q : objs)
    for (ObjRef s : objs)
      for (ObjRef t : objs)
        for (ObjRef p : objs) {
          auto psis = m.hom_span(m.tensor_obj(q, s), m.d());
          auto omegas = m.hom_span(m.tensor_obj(t, p), m.d());
          for (const Mor& psi : psis)
            for (const Mor& om : omegas) {
              if (r.checks >= max_samples) return r;
              ++r.checks;
              if (!base_identity_holds(m, psi, om, s, t))
                r.fail("q,s,t,p = " + m.name(q) + "," + m.name(s) + "," + m.name(t) + "," + m.name(p));
            }
        }
  return r;
}

}  // namespace staut
