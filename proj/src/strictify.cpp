#include "staut/strictify.hpp"

#include <sstream>

namespace staut {

namespace {

struct ZMate : MorData {
  std::function<Mor(int)> fn;
  mutable std::mutex mu;
  mutable std::map<int, Mor> memo;
  explicit ZMate(std::function<Mor(int)> f) : fn(std::move(f)) {}
};

bool odd(int n) { return (n % 2 + 2) % 2 == 1; }

}  // namespace

ZangModel::ZangModel(const Model& base, int lo, int hi) : base_(base), lo_(lo), hi_(hi) {
  if (lo > 0 || hi < 0 || lo >= hi) throw std::invalid_argument("window must contain 0 and at least two indices");
}

std::string ZangModel::describe() const {
  return "Z-strings over " + base_.describe() + ", window [" + std::to_string(lo_) + "," + std::to_string(hi_) + "]";
}

ObjRef ZangModel::zangify(ObjRef p) const {
  std::lock_guard lock(mu_);
  auto it = canonical_.find(p);
  if (it != canonical_.end()) return it->second;
  int g = objects().add_generator("⟦" + base_.name(p) + "⟧");
  atoms_[g] = Atom{true, p, nullptr};
  ObjRef x = objects().gen(g);
  canonical_[p] = x;
  return x;
}

ObjRef ZangModel::add_period2(ObjRef p, const CycleData& c) {
  if (&c.model() != &base_) throw std::invalid_argument("period-two string needs a cycle on the base model");
  std::lock_guard lock(mu_);
  std::string label = "⟨" + base_.name(p) + "⟩";
  if (!period2_.empty()) label += std::to_string(period2_.size());
  int g = objects().add_generator(label);
  atoms_[g] = Atom{false, p, std::make_shared<CycleData>(c)};
  ObjRef x = objects().gen(g);
  period2_.push_back(x);
  return x;
}

// γ_0 = γ_p; above 0 apply N, below 0 apply N⁻¹.
Mor ZangModel::period2_counit(int gen, const Atom& a, int n) const {
  {
    std::lock_guard lock(mu_);
    auto it = p2_counits_.find({gen, n});
    if (it != p2_counits_.end()) return it->second;
  }
  Mor g;
  if (n == 0) {
    g = base_.gamma_r(a.base_obj);
  } else {
    BigCycle big = to_upper(*a.cycle);
    g = n > 0 ? big.apply(period2_counit(gen, a, n - 1)) : big.unapply(period2_counit(gen, a, n + 1));
  }
  std::lock_guard lock(mu_);
  return p2_counits_.emplace(std::make_pair(gen, n), g).first->second;
}

ZangModel::Comp ZangModel::atom_comp(int gen, const Atom& a, int n) const {
  const Model& b = base_;
  if (a.canonical) {
    if (n >= 0) {
      ObjRef z = a.base_obj;
      for (int k = 0; k < n; ++k) z = b.rdual_obj(z);
      return {z, b.tau_r(z), b.gamma_r(z)};
    }
    ObjRef above = a.base_obj;  // P_{n+1}
    for (int k = -1; k > n; --k) above = b.ldual_obj(above);
    return {b.ldual_obj(above), b.tau_l(above), b.gamma_l(above)};
  }
  const ObjRef z = odd(n) ? b.rdual_obj(a.base_obj) : a.base_obj;
  Mor gamma = period2_counit(gen, a, n);
  // The unit is fixed by the counit: compare P_{n+1} with ⊥P_n through γ_n.
  Mor to_dual = lcurry(b, z, gamma);
  Mor tau = b.then(b.tau_r(z), b.par(b.inverse(to_dual), b.id(z)));
  return {z, tau, gamma};
}

// The ⊗ formulas at even n (tensor_form) and odd n; P⅋Q at n uses the
// ⊗ formulas of (Q, P) with the opposite parity.
ZangModel::Comp ZangModel::binary_comp(ObjRef p, ObjRef q, int n, bool tensor_form) const {
  const Model& b = base_;
  const Comp &p0 = comp(p, n), &p1 = comp(p, n + 1), &q0 = comp(q, n), &q1 = comp(q, n + 1);
  if (tensor_form) {
    // P_n⊗Q_n with γ = rbind(γP, γQ) and τ: e → (Q'⅋P')⅋(P⊗Q).
    Mor tau = q0.tau;
    tau = b.then(tau, b.par(b.id(q1.z), b.lunit_inv(q0.z)));
    tau = b.then(tau, b.par(b.id(q1.z), b.tensor(p0.tau, b.id(q0.z))));
    tau = b.then(tau, b.par(b.id(q1.z), b.dist_r(p1.z, p0.z, q0.z)));
    tau = b.then(tau, b.passoc_inv(q1.z, p1.z, b.tensor_obj(p0.z, q0.z)));
    return {b.tensor_obj(p0.z, q0.z), tau, rbind(b, p0.gamma, q0.gamma)};
  }
  // Q_n⅋P_n with γ = lbind(γQ, γP) and τ: e → (P'⊗Q')⅋(Q⅋P).
  Mor tau = p0.tau;
  tau = b.then(tau, b.par(b.runit_inv(p1.z), b.id(p0.z)));
  tau = b.then(tau, b.par(b.tensor(b.id(p1.z), q0.tau), b.id(p0.z)));
  tau = b.then(tau, b.par(b.dist_l(p1.z, q1.z, q0.z), b.id(p0.z)));
  tau = b.then(tau, b.passoc(b.tensor_obj(p1.z, q1.z), q0.z, p0.z));
  return {b.par_obj(q0.z, p0.z), tau, lbind(b, q0.gamma, p0.gamma)};
}

ZangModel::Comp ZangModel::compute(ObjRef x, int n) const {
  const Model& b = base_;
  Term t = objects().term(x);
  switch (t.kind) {
    case Kind::Gen: {
      Atom a;
      {
        std::lock_guard lock(mu_);
        auto it = atoms_.find(t.a);
        if (it == atoms_.end()) throw ShapeError("not a Z-string atom: " + name(x));
        a = it->second;
      }
      return atom_comp(t.a, a, n);
    }
    case Kind::RDual: return comp(t.a, n + 1);
    case Kind::LDual: return comp(t.a, n - 1);
    case Kind::Tensor: return binary_comp(t.a, t.b, n, !odd(n));
    case Kind::Par: return binary_comp(t.b, t.a, n, odd(n));
    case Kind::UnitE:
    case Kind::UnitD: {
      const bool unit_like = (t.kind == Kind::UnitE) != odd(n);  // component is e
      const ObjRef e = b.e(), d = b.d();
      if (unit_like) return {e, b.plunit_inv(e), b.lunit(d)};
      return {d, b.prunit_inv(e), b.runit(d)};
    }
  }
  throw ShapeError("unreachable object kind");
}

const ZangModel::Comp& ZangModel::comp(ObjRef x, int n) const {
  {
    std::lock_guard lock(mu_);
    auto it = memo_.find({x, n});
    if (it != memo_.end()) return *it->second;
  }
  std::shared_ptr<Comp> c;
  try {
    c = std::make_shared<Comp>(compute(x, n));
  } catch (const UniverseError& e) {
    throw UniverseError(std::string(e.what()) + " (component " + std::to_string(n) + " of " + name(x) +
                        "; raise the base nesting depth or narrow the window)");
  }
  std::lock_guard lock(mu_);
  return *memo_.emplace(std::make_pair(x, n), std::move(c)).first->second;
}

ObjRef ZangModel::component(ObjRef x, int n) const { return comp(x, n).z; }
Mor ZangModel::unit_at(ObjRef x, int n) const { return comp(x, n).tau; }
Mor ZangModel::counit_at(ObjRef x, int n) const { return comp(x, n).gamma; }

Mor ZangModel::component(const Mor& f, int n) const {
  auto* z = dynamic_cast<const ZMate*>(f.data.get());
  if (!z) throw ShapeError("not a string of mates");
  {
    std::lock_guard lock(z->mu);
    auto it = z->memo.find(n);
    if (it != z->memo.end()) return it->second;
  }
  Mor v = z->fn(n);
  const bool flip = odd(n);
  ObjRef want_dom = component(flip ? f.cod : f.dom, n), want_cod = component(flip ? f.dom : f.cod, n);
  if (v.dom != want_dom || v.cod != want_cod)
    throw ShapeError("component " + std::to_string(n) + " of a mate " + name(f.dom) + " → " + name(f.cod) + " has type " +
                     base_.name(v.dom) + " → " + base_.name(v.cod));
  std::lock_guard lock(z->mu);
  return z->memo.emplace(n, v).first->second;
}

Mor ZangModel::mor(ObjRef dom, ObjRef cod, std::function<Mor(int)> fn) const {
  return Mor{dom, cod, std::make_shared<ZMate>(std::move(fn))};
}

Mor ZangModel::from_components(ObjRef dom, ObjRef cod, std::function<Mor(int)> fn) const {
  return mor(dom, cod, std::move(fn));
}

Mor ZangModel::mate_up(ObjRef a, ObjRef b, const Mor& g, int n) const {
  const Model& m = base_;
  const Comp &a0 = comp(a, n), &a1 = comp(a, n + 1), &b0 = comp(b, n), &b1 = comp(b, n + 1);
  Mor f = m.then(m.lunit_inv(b1.z), m.tensor(a0.tau, m.id(b1.z)));
  f = m.then(f, m.dist_r(a1.z, a0.z, b1.z));
  f = m.then(f, m.par(m.id(a1.z), m.then(m.tensor(g, m.id(b1.z)), b0.gamma)));
  return m.then(f, m.prunit(a1.z));
}

Mor ZangModel::mate_down(ObjRef a, ObjRef b, const Mor& g, int n) const {
  const Model& m = base_;
  const Comp &a0 = comp(a, n), &a1 = comp(a, n + 1), &b0 = comp(b, n);
  Mor f = m.then(m.runit_inv(b0.z), m.tensor(m.id(b0.z), a0.tau));
  f = m.then(f, m.dist_l(b0.z, a1.z, a0.z));
  f = m.then(f, m.par(m.then(m.tensor(m.id(b0.z), g), b0.gamma), m.id(a0.z)));
  return m.then(f, m.plunit(a0.z));
}

Mor ZangModel::mate_extension(ObjRef p, ObjRef q, const Mor& m0) const {
  // A cell shared by the recursion so each component is computed once.
  auto self = std::make_shared<std::function<Mor(int)>>();
  auto memo = std::make_shared<std::map<int, Mor>>();
  auto mu = std::make_shared<std::recursive_mutex>();
  *self = [this, p, q, m0, self_w = std::weak_ptr<std::function<Mor(int)>>(self), memo, mu](int n) -> Mor {
    std::lock_guard lock(*mu);
    if (auto it = memo->find(n); it != memo->end()) return it->second;
    auto rec = self_w.lock();
    Mor v;
    if (n == 0) {
      v = m0;
    } else if (n > 0) {
      const bool was_odd = odd(n - 1);
      v = mate_up(was_odd ? q : p, was_odd ? p : q, (*rec)(n - 1), n - 1);
    } else {
      const bool above_odd = odd(n + 1);
      v = mate_down(above_odd ? q : p, above_odd ? p : q, (*rec)(n + 1), n);
    }
    return memo->emplace(n, v).first->second;
  };
  return mor(p, q, [self](int n) { return (*self)(n); });
}

Mor ZangModel::zangify_mor(const Mor& f) const {
  const Model& b = base_;
  ObjRef dom = zangify(f.dom), cod = zangify(f.cod);
  return mor(dom, cod, [&b, f](int n) {
    Mor g = f;
    for (int k = 0; k < n; ++k) g = rdual_mor(b, g);
    for (int k = 0; k > n; --k) g = ldual_mor(b, g);
    return g;
  });
}

ObjRef ZangModel::rdual_obj(ObjRef x) const {
  Term t = objects().term(x);
  switch (t.kind) {
    case Kind::LDual: return t.a;
    case Kind::Tensor: return par_obj(rdual_obj(t.b), rdual_obj(t.a));
    case Kind::Par: return tensor_obj(rdual_obj(t.b), rdual_obj(t.a));
    case Kind::UnitE: return d();
    case Kind::UnitD: return e();
    default: return objects().rdual(x);
  }
}

ObjRef ZangModel::ldual_obj(ObjRef x) const {
  Term t = objects().term(x);
  switch (t.kind) {
    case Kind::RDual: return t.a;
    case Kind::Tensor: return par_obj(ldual_obj(t.b), ldual_obj(t.a));
    case Kind::Par: return tensor_obj(ldual_obj(t.b), ldual_obj(t.a));
    case Kind::UnitE: return d();
    case Kind::UnitD: return e();
    default: return objects().ldual(x);
  }
}

Mor ZangModel::id(ObjRef x) const {
  return mor(x, x, [this, x](int n) { return base_.id(component(x, n)); });
}

Mor ZangModel::compose(const Mor& f, const Mor& g) const {
  return mor(f.dom, g.cod, [this, f, g](int n) {
    return odd(n) ? base_.then(component(g, n), component(f, n)) : base_.then(component(f, n), component(g, n));
  });
}

Mor ZangModel::tensor(const Mor& f, const Mor& g) const {
  return mor(tensor_obj(f.dom, g.dom), tensor_obj(f.cod, g.cod), [this, f, g](int n) {
    return odd(n) ? base_.par(component(g, n), component(f, n)) : base_.tensor(component(f, n), component(g, n));
  });
}

Mor ZangModel::par(const Mor& f, const Mor& g) const {
  return mor(par_obj(f.dom, g.dom), par_obj(f.cod, g.cod), [this, f, g](int n) {
    return odd(n) ? base_.tensor(component(g, n), component(f, n)) : base_.par(component(f, n), component(g, n));
  });
}

bool ZangModel::equal(const Mor& f, const Mor& g) const {
  if (f.dom != g.dom || f.cod != g.cod) return false;
  for (int n = lo_; n <= hi_; ++n)
    if (!base_.equal(component(f, n), component(g, n))) return false;
  return true;
}

Mor ZangModel::inverse(const Mor& f) const {
  return mor(f.cod, f.dom, [this, f](int n) { return base_.inverse(component(f, n)); });
}

std::string ZangModel::show(const Mor& f) const {
  std::ostringstream os;
  os << name(f.dom) << " → " << name(f.cod) << " {";
  for (int n = lo_; n <= hi_; ++n) {
    if (n != lo_) os << ", ";
    os << n << ": " << base_.show(component(f, n));
  }
  os << "}";
  return os.str();
}

Mor ZangModel::assoc(ObjRef x, ObjRef y, ObjRef z) const {
  return mor(tensor_obj(tensor_obj(x, y), z), tensor_obj(x, tensor_obj(y, z)), [this, x, y, z](int n) {
    ObjRef a = component(x, n), b = component(y, n), c = component(z, n);
    return odd(n) ? base_.passoc(c, b, a) : base_.assoc(a, b, c);
  });
}

Mor ZangModel::passoc(ObjRef x, ObjRef y, ObjRef z) const {
  return mor(par_obj(par_obj(x, y), z), par_obj(x, par_obj(y, z)), [this, x, y, z](int n) {
    ObjRef a = component(x, n), b = component(y, n), c = component(z, n);
    return odd(n) ? base_.assoc(c, b, a) : base_.passoc(a, b, c);
  });
}

Mor ZangModel::lunit(ObjRef x) const {
  return mor(tensor_obj(e(), x), x, [this, x](int n) {
    ObjRef a = component(x, n);
    return odd(n) ? base_.prunit_inv(a) : base_.lunit(a);
  });
}

Mor ZangModel::runit(ObjRef x) const {
  return mor(tensor_obj(x, e()), x, [this, x](int n) {
    ObjRef a = component(x, n);
    return odd(n) ? base_.plunit_inv(a) : base_.runit(a);
  });
}

Mor ZangModel::plunit(ObjRef x) const {
  return mor(par_obj(d(), x), x, [this, x](int n) {
    ObjRef a = component(x, n);
    return odd(n) ? base_.runit_inv(a) : base_.plunit(a);
  });
}

Mor ZangModel::prunit(ObjRef x) const {
  return mor(par_obj(x, d()), x, [this, x](int n) {
    ObjRef a = component(x, n);
    return odd(n) ? base_.lunit_inv(a) : base_.prunit(a);
  });
}

Mor ZangModel::dist_l(ObjRef q, ObjRef s, ObjRef t) const {
  return mor(tensor_obj(q, par_obj(s, t)), par_obj(tensor_obj(q, s), t), [this, q, s, t](int n) {
    ObjRef a = component(q, n), b = component(s, n), c = component(t, n);
    return odd(n) ? base_.dist_l(c, b, a) : base_.dist_l(a, b, c);
  });
}

Mor ZangModel::dist_r(ObjRef p, ObjRef q, ObjRef s) const {
  return mor(tensor_obj(par_obj(p, q), s), par_obj(p, tensor_obj(q, s)), [this, p, q, s](int n) {
    ObjRef a = component(p, n), b = component(q, n), c = component(s, n);
    return odd(n) ? base_.dist_r(c, b, a) : base_.dist_r(a, b, c);
  });
}

Mor ZangModel::tau_r(ObjRef p) const {
  return mor(e(), par_obj(rdual_obj(p), p), [this, p](int n) { return odd(n) ? counit_at(p, n) : unit_at(p, n); });
}

Mor ZangModel::gamma_r(ObjRef p) const {
  return mor(tensor_obj(p, rdual_obj(p)), d(), [this, p](int n) { return odd(n) ? unit_at(p, n) : counit_at(p, n); });
}

Mor ZangModel::tau_l(ObjRef p) const {
  return mor(e(), par_obj(p, ldual_obj(p)), [this, p](int n) { return odd(n) ? counit_at(p, n - 1) : unit_at(p, n - 1); });
}

Mor ZangModel::gamma_l(ObjRef p) const {
  return mor(tensor_obj(ldual_obj(p), p), d(), [this, p](int n) { return odd(n) ? unit_at(p, n - 1) : counit_at(p, n - 1); });
}

std::vector<Mor> ZangModel::hom_span(ObjRef x, ObjRef y) const {
  std::vector<Mor> out;
  for (const Mor& m0 : base_.hom_span(component(x, 0), component(y, 0))) out.push_back(mate_extension(x, y, m0));
  return out;
}

Mor ZangModel::combine(const Rational& a, const Mor& f, const Rational& b, const Mor& g) const {
  if (!base_.is_linear()) return f;
  return mor(f.dom, f.cod, [this, a, f, b, g](int n) { return base_.combine(a, component(f, n), b, component(g, n)); });
}

std::vector<ObjRef> ZangModel::probes() const {
  if (!probes_.empty()) return probes_;
  std::vector<ObjRef> out;
  for (ObjRef p : base_.probes()) {
    if (base_.objects().term(p).kind != Kind::Gen) continue;
    out.push_back(zangify(p));
    if (out.size() == 2) break;
  }
  out.push_back(e());
  out.push_back(d());
  for (ObjRef p : period2_) out.push_back(p);
  return out;
}

// ---------------------------------------------------------------------------

SuiteResult check_zstring_triangles(const ZangModel& z, const std::vector<ObjRef>& objs) {
  SuiteResult r("Z-string triangle identities");
  for (ObjRef x : objs)
    for (int n = z.lo(); n < z.hi(); ++n) {
      ++r.checks;
      Adjunction adj{z.component(x, n), z.component(x, n + 1), z.unit_at(x, n), z.counit_at(x, n)};
      try {
        if (!adjunction_triangles(z.base(), adj)) r.fail("triangles fail for " + z.name(x) + " at n=" + std::to_string(n));
      } catch (const std::exception& e) {
        r.fail("at " + z.name(x) + ", n=" + std::to_string(n) + ": " + e.what());
      }
    }
  return r;
}

bool is_mate_string(const ZangModel& z, const Mor& f, std::string* why) {
  for (int n = z.lo(); n < z.hi(); ++n) {
    const bool o = odd(n);
    ObjRef a = o ? f.cod : f.dom, b = o ? f.dom : f.cod;
    Mor expect = z.mate_up(a, b, z.component(f, n), n);
    if (!z.base().equal(expect, z.component(f, n + 1))) {
      if (why)
        *why = "component " + std::to_string(n + 1) + " of " + z.name(f.dom) + " → " + z.name(f.cod) +
               " is not the mate of component " + std::to_string(n) + ": " + z.base().show(z.component(f, n + 1)) +
               " vs " + z.base().show(expect);
      return false;
    }
  }
  return true;
}

SuiteResult check_structural_mates(const ZangModel& z, const std::vector<ObjRef>& objs) {
  SuiteResult r("structural maps are strings of mates");
  auto test = [&](const Mor& f) {
    ++r.checks;
    std::string why;
    if (!is_mate_string(z, f, &why)) r.fail(why);
  };
  for (ObjRef x : objs) {
    for (const Mor& f : {z.lunit(x), z.runit(x), z.plunit(x), z.prunit(x), z.tau_r(x), z.gamma_r(x), z.tau_l(x),
                         z.gamma_l(x), z.id(x)})
      test(f);
    for (ObjRef y : objs)
      for (ObjRef w : objs) {
        test(z.assoc(x, y, w));
        test(z.passoc(x, y, w));
        test(z.dist_l(x, y, w));
        test(z.dist_r(x, y, w));
      }
  }
  return r;
}

SuiteResult check_strict_negations(const ZangModel& z, const std::vector<ObjRef>& objs) {
  SuiteResult r("strict negations");
  const Model& b = z.base();
  auto same_string = [&](ObjRef x, ObjRef shifted_from, int shift, const std::string& what) {
    for (int n = z.lo(); n <= z.hi(); ++n) {
      r.checks += 3;
      if (z.component(x, n) != z.component(shifted_from, n + shift) ||
          !b.equal(z.unit_at(x, n), z.unit_at(shifted_from, n + shift)) ||
          !b.equal(z.counit_at(x, n), z.counit_at(shifted_from, n + shift))) {
        r.fail(what + " differs from the shifted string at n=" + std::to_string(n));
        return;
      }
    }
  };
  auto is_identity = [&](const Mor& f, const std::string& what) {
    ++r.checks;
    if (f.dom != f.cod || !z.equal(f, z.id(f.dom))) r.fail(what + " is not the identity: " + z.show(f));
  };
  std::vector<ObjRef> all = objs;
  for (ObjRef x : objs)
    for (ObjRef y : objs) {
      all.push_back(z.tensor_obj(x, y));
      all.push_back(z.par_obj(x, y));
    }
  for (ObjRef x : all) {
    r.checks += 2;
    if (z.rdual_obj(z.ldual_obj(x)) != x || z.ldual_obj(z.rdual_obj(x)) != x)
      r.fail("negations are not mutually inverse on " + z.name(x));
    same_string(z.rdual_obj(x), x, 1, "⊥" + z.name(x));
    same_string(z.ldual_obj(x), x, -1, "ᵖ" + z.name(x));
  }
  for (ObjRef x : objs) {
    is_identity(canon_rl(z, x), "p → ⊥ᵖp at " + z.name(x));
    is_identity(canon_lr(z, x), "p → ᵖ⊥p at " + z.name(x));
    for (ObjRef y : objs)
      for (DeMorgan v : all_demorgan())
        if (demorgan_is_binary(v)) is_identity(demorgan(z, v, x, y), to_string(v) + " at " + z.name(x) + ", " + z.name(y));
  }
  for (DeMorgan v : all_demorgan())
    if (!demorgan_is_binary(v)) is_identity(demorgan(z, v), to_string(v));
  return r;
}

SuiteResult check_equivalence(const ZangModel& z, const std::vector<ObjRef>& objs) {
  SuiteResult r("equivalence with the base");
  const Model& b = z.base();
  std::vector<ObjRef> base_objs;
  for (ObjRef p : b.probes()) {
    ++r.checks;
    if (z.project0(z.zangify(p)) != p) r.fail("(zangify " + b.name(p) + ")_0 ≠ " + b.name(p));
    base_objs.push_back(p);
  }
  for (ObjRef p : base_objs)
    for (ObjRef q : base_objs)
      for (const Mor& f : b.hom_span(p, q)) {
        r.checks += 2;
        Mor zf = z.zangify_mor(f);
        std::string why;
        if (!is_mate_string(z, zf, &why)) r.fail("zangify(f) for f=" + b.show(f) + ": " + why);
        if (!z.equal(z.then(zf, z.id(zf.cod)), zf) || !b.equal(z.component(zf, 0), f))
          r.fail("zangify is not functorial at f=" + b.show(f));
        for (ObjRef s : base_objs)
          for (const Mor& g : b.hom_span(q, s)) {
            ++r.checks;
            if (!z.equal(z.zangify_mor(b.then(f, g)), z.then(zf, z.zangify_mor(g))))
              r.fail("zangify does not preserve composition at " + b.show(f) + ", " + b.show(g));
          }
      }
  for (ObjRef x : objs) {
    ObjRef target = z.zangify(z.project0(x));
    Mor iso = z.mate_extension(x, target, b.id(z.project0(x)));
    r.checks += 2;
    std::string why;
    if (!is_mate_string(z, iso, &why)) r.fail("comparison " + z.name(x) + " ≅ zangify(P_0): " + why);
    try {
      Mor back = z.inverse(iso);
      if (!z.equal(z.then(iso, back), z.id(x))) r.fail("comparison at " + z.name(x) + " is not invertible");
    } catch (const NoSuchArrow& e) {
      r.fail("comparison at " + z.name(x) + " is not invertible: " + e.what());
    }
  }
  return r;
}

CycleData zangcycle(const ZangModel& z, const CycleData& c) {
  const Model& b = z.base();
  return CycleData(z, "extended " + c.label(), [&z, &b, c](ObjRef p) {
    return z.from_components(z.rdual_obj(p), z.ldual_obj(p), [&z, &b, c, p](int n) {
      ObjRef pn = z.component(p, n);
      Mor into_dual = lcurry(b, pn, z.counit_at(p, n));      // P_{n+1} → ⊥P_n
      Mor from_dual = b.inverse(rcurry(b, pn, z.counit_at(p, n - 1)));  // ᵖP_n → P_{n−1}
      Mor f = b.then(b.then(into_dual, c.nu(pn)), from_dual);
      return odd(n) ? b.inverse(f) : f;
    });
  });
}

bool is_fang(const ZangModel& z, ObjRef p, const CycleData& c, std::string* why) {
  const Model& b = z.base();
  BigCycle big = to_upper(c);
  for (int n = z.lo() + 1; n <= z.hi(); ++n) {
    if (z.component(p, n + 1) != z.component(p, n - 1)) {
      if (why) *why = z.name(p) + ": components " + std::to_string(n + 1) + " and " + std::to_string(n - 1) + " differ";
      return false;
    }
    Mor expect = big.apply(z.counit_at(p, n - 1));
    if (!b.equal(z.counit_at(p, n), expect)) {
      if (why) *why = z.name(p) + ": γ_" + std::to_string(n) + " ≠ N(γ_" + std::to_string(n - 1) + ")";
      return false;
    }
  }
  return true;
}

SuiteResult fang_check(const ZangModel& z, const std::vector<ObjRef>& strings, const CycleData& c,
                       const AxiomOptions& base_opt) {
  AxiomProfile prof = profile(c, base_opt);
  if (!classify(prof).cycle) {
    for (Axiom a : {Axiom::Tbin, Axiom::Pbin})
      if (!prof.holds(a)) throw CycleError("fang_check needs a cycle: " + prof.at(a).witness);
    throw CycleError("fang_check needs a cycle");
  }
  SuiteResult r("F-strings");
  const Model& b = z.base();
  std::vector<ObjRef> members;
  auto member = [&](ObjRef x, const std::string& how) {
    ++r.checks;
    std::string why;
    if (is_fang(z, x, c, &why)) {
      members.push_back(x);
    } else {
      r.fail(how + ": " + why);
    }
  };
  for (ObjRef x : strings) member(x, "given string");
  member(z.e(), "e");
  member(z.d(), "d");
  for (ObjRef x : strings) {
    member(z.rdual_obj(x), "⊥" + z.name(x));
    member(z.ldual_obj(x), "ᵖ" + z.name(x));
    for (ObjRef y : strings) {
      member(z.tensor_obj(x, y), z.name(x) + "⊗" + z.name(y));
      member(z.par_obj(x, y), z.name(x) + "⅋" + z.name(y));
    }
  }
  // The closure argument at even n: rbind(N γP, N γQ) = N(lbind(γQ, γP)).
  BigCycle big = to_upper(c);
  for (ObjRef x : strings)
    for (ObjRef y : strings)
      for (int n = z.lo() + 1; n <= z.hi(); ++n) {
        if (odd(n)) continue;
        ++r.checks;
        Mor gp = z.counit_at(x, n - 1), gq = z.counit_at(y, n - 1);
        Mor lhs = rbind(b, big.apply(gp), big.apply(gq));
        Mor rhs = big.apply(lbind(b, gq, gp));
        if (!b.equal(lhs, rhs) || !b.equal(lhs, z.counit_at(z.tensor_obj(x, y), n)))
          r.fail("counit chain fails for " + z.name(x) + "⊗" + z.name(y) + " at n=" + std::to_string(n));
      }
  CycleData ext = zangcycle(z, c);
  for (ObjRef x : members) {
    for (int n = z.lo(); n <= z.hi(); ++n) {
      ++r.checks;
      Mor f = z.component(ext.nu(x), n);
      if (f.dom != f.cod || !b.equal(f, b.id(f.dom)))
        r.fail("extended cycle is not the identity on " + z.name(x) + " at n=" + std::to_string(n) + ": " + b.show(f));
    }
  }
  return r;
}

}  // namespace staut
