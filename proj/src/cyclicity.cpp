#include "staut/cyclicity.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>

#include "staut/linear.hpp"
#include "staut/thin_model.hpp"

namespace staut {

struct CycleData::State {
  std::string label;
  Family family;
  std::mutex mu;
  std::map<ObjRef, Mor> memo, memo_inv;
};

CycleData::CycleData(const Model& m, std::string label, Family nu) : model_(&m), state_(std::make_shared<State>()) {
  state_->label = std::move(label);
  state_->family = std::move(nu);
}

const std::string& CycleData::label() const { return state_->label; }

Mor CycleData::nu(ObjRef p) const {
  {
    std::lock_guard lock(state_->mu);
    auto it = state_->memo.find(p);
    if (it != state_->memo.end()) return it->second;
  }
  Mor v = state_->family(p);
  if (v.dom != model_->rdual_obj(p) || v.cod != model_->ldual_obj(p))
    throw CycleError("cycle component at " + model_->name(p) + " has type " + model_->name(v.dom) + " → " +
                     model_->name(v.cod));
  std::lock_guard lock(state_->mu);
  return state_->memo.emplace(p, v).first->second;
}

Mor CycleData::nu_inv(ObjRef p) const {
  {
    std::lock_guard lock(state_->mu);
    auto it = state_->memo_inv.find(p);
    if (it != state_->memo_inv.end()) return it->second;
  }
  Mor v;
  try {
    v = model_->inverse(nu(p));
  } catch (const NoSuchArrow&) {
    throw CycleError("cycle component at " + model_->name(p) + " is not invertible");
  }
  std::lock_guard lock(state_->mu);
  return state_->memo_inv.emplace(p, v).first->second;
}

BigCycle::BigCycle(const Model& m, std::string label, Fn apply, Fn unapply)
    : model_(&m), label_(std::move(label)), apply_(std::move(apply)), unapply_(std::move(unapply)) {}

BigCycle to_upper(const CycleData& c) {
  const Model& m = c.model();
  auto apply = [c, &m](const Mor& omega) {
    ObjRef p = left_of(m, omega.dom, Kind::Tensor);
    return rcurry_inv(m, p, m.then(lcurry(m, p, omega), c.nu(p)));
  };
  auto unapply = [c, &m](const Mor& psi) {
    ObjRef p = right_of(m, psi.dom, Kind::Tensor);
    return lcurry_inv(m, p, m.then(rcurry(m, p, psi), c.nu_inv(p)));
  };
  return BigCycle(m, c.label(), apply, unapply);
}

CycleData to_lower(const BigCycle& n) {
  const Model& m = n.model();
  return CycleData(m, n.label(), [n, &m](ObjRef p) { return rcurry(m, p, n.apply(m.gamma_r(p))); });
}

CycleData scalar_cycle(const LinearModel& m, const Rational& lambda) {
  if (sgn(lambda) == 0) throw CycleError("scalar cycle needs a nonzero scalar");
  return CycleData(m, "λ=" + lambda.get_str(), [&m, lambda](ObjRef p) {
    return m.make(m.rdual_obj(p), m.ldual_obj(p), QMatrix::identity(m.dim(p)).scaled(lambda));
  });
}

CycleData identity_cycle(const Model& m) {
  if (auto lin = dynamic_cast<const LinearModel*>(&m)) return scalar_cycle(*lin, 1);
  if (auto thin = dynamic_cast<const ThinModel*>(&m)) {
    return CycleData(m, "identity", [thin](ObjRef p) {
      try {
        return thin->arrow(thin->rdual_obj(p), thin->ldual_obj(p));
      } catch (const NoSuchArrow&) {
        throw CycleError("the two duals of " + thin->name(p) + " differ, so there is no identity cycle");
      }
    });
  }
  throw CycleError("identity cycle is only defined on linear and thin backends");
}

std::string to_string(Axiom a) {
  switch (a) {
    case Axiom::Pnul: return "Pnul";
    case Axiom::K: return "K";
    case Axiom::T0: return "T0";
    case Axiom::Pbin: return "Pbin";
    case Axiom::Tbin: return "Tbin";
    case Axiom::BLR0: return "BLR0";
    case Axiom::M0: return "M0";
    case Axiom::Kp: return "K'";
    case Axiom::BLR2: return "BLR2";
    case Axiom::E2: return "E2";
    case Axiom::E2p: return "E2'";
    case Axiom::M2: return "M2";
    case Axiom::M2p: return "M2'";
  }
  return "?";
}

const std::array<Axiom, kAxiomCount>& all_axioms() {
  static const std::array<Axiom, kAxiomCount> all = {Axiom::Pnul, Axiom::K,  Axiom::T0,   Axiom::Pbin, Axiom::Tbin,
                                                     Axiom::BLR0, Axiom::M0, Axiom::Kp,   Axiom::BLR2, Axiom::E2,
                                                     Axiom::E2p,  Axiom::M2, Axiom::M2p};
  return all;
}

bool is_uppercase(Axiom a) {
  switch (a) {
    case Axiom::Pnul:
    case Axiom::K:
    case Axiom::T0:
    case Axiom::Pbin:
    case Axiom::Tbin: return false;
    default: return true;
  }
}

namespace {

// All k-tuples of indices below n, or a deterministic sample of `max` of them.
std::vector<std::vector<int>> index_tuples(int n, int k, long max, std::uint64_t seed) {
  long total = 1;
  for (int i = 0; i < k; ++i) total *= n;
  std::vector<std::vector<int>> out;
  auto decode = [&](long code) {
    std::vector<int> t(static_cast<std::size_t>(k));
    for (int i = k - 1; i >= 0; --i) {
      t[static_cast<std::size_t>(i)] = static_cast<int>(code % n);
      code /= n;
    }
    return t;
  };
  if (max <= 0 || total <= max) {
    for (long c = 0; c < total; ++c) out.push_back(decode(c));
    return out;
  }
  std::mt19937_64 rng(seed);
  std::vector<long> codes(static_cast<std::size_t>(total));
  std::iota(codes.begin(), codes.end(), 0L);
  std::shuffle(codes.begin(), codes.end(), rng);
  codes.resize(static_cast<std::size_t>(max));
  std::sort(codes.begin(), codes.end());
  for (long c : codes) out.push_back(decode(c));
  return out;
}

std::string objs_label(const Model& m, const std::vector<std::pair<const char*, ObjRef>>& named) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : named) {
    os << (first ? "" : ", ") << k << "=" << m.name(v);
    first = false;
  }
  return os.str();
}

struct Checker {
  const CycleData& c;
  const BigCycle& n;
  const Model& m;
  std::vector<ObjRef> objs, homs;
  long max_tuples;
  std::uint64_t seed;

  ObjRef T(ObjRef a, ObjRef b) const { return m.tensor_obj(a, b); }
  ObjRef P(ObjRef a, ObjRef b) const { return m.par_obj(a, b); }
  Mor N(const Mor& w) const { return n.apply(w); }

  void compare(SuiteResult& r, const Mor& lhs, const Mor& rhs, const std::string& where) const {
    ++r.checks;
    if (!m.equal(lhs, rhs)) r.fail(r.name + " fails at " + where + ": " + m.show(lhs) + " vs " + m.show(rhs));
  }

  std::string with_arrow(const std::string& where, const char* label, const Mor& f) const {
    return where + ", " + label + "=" + m.show(f);
  }

  void run(Axiom a, SuiteResult& r) const {
    const ObjRef e = m.e(), d = m.d();
    switch (a) {
      case Axiom::Pnul:
        compare(r, m.then(demorgan(m, DeMorgan::UnitER), c.nu(d)), demorgan(m, DeMorgan::UnitEL), "the unit d");
        return;
      case Axiom::T0:
        compare(r, m.then(c.nu(e), demorgan(m, DeMorgan::UnitDL)), demorgan(m, DeMorgan::UnitDR), "the unit e");
        return;
      case Axiom::K:
        for (ObjRef x : objs) {
          Mor lhs = m.then(m.then(canon_rl(m, x), rdual_mor(m, c.nu(x))), c.nu(m.rdual_obj(x)));
          compare(r, lhs, canon_lr(m, x), objs_label(m, {{"r", x}}));
        }
        return;
      case Axiom::Tbin:
      case Axiom::Pbin:
        for (const auto& t : index_tuples(static_cast<int>(objs.size()), 2, max_tuples, seed)) {
          ObjRef p = objs[static_cast<std::size_t>(t[0])], q = objs[static_cast<std::size_t>(t[1])];
          std::string where = objs_label(m, {{"p", p}, {"q", q}});
          if (a == Axiom::Tbin) {
            Mor lhs = m.then(c.nu(T(p, q)), demorgan(m, DeMorgan::TensorL, p, q));
            Mor rhs = m.then(demorgan(m, DeMorgan::TensorR, p, q), m.par(c.nu(q), c.nu(p)));
            compare(r, lhs, rhs, where);
          } else {
            Mor lhs = m.then(demorgan(m, DeMorgan::ParR, p, q), c.nu(P(p, q)));
            Mor rhs = m.then(m.tensor(c.nu(q), c.nu(p)), demorgan(m, DeMorgan::ParL, p, q));
            compare(r, lhs, rhs, where);
          }
        }
        return;
      case Axiom::BLR0:
      case Axiom::M0:
        for (ObjRef t : homs) {
          bool left = a == Axiom::BLR0;
          ObjRef dom = left ? T(e, t) : T(t, e);
          for (const Mor& w : m.hom_span(dom, d)) {
            Mor rhs = left ? m.then(m.then(m.runit(t), m.lunit_inv(t)), w) : m.then(m.then(m.lunit(t), m.runit_inv(t)), w);
            compare(r, N(w), rhs, with_arrow(objs_label(m, {{"t", t}}), "ω", w));
          }
        }
        return;
      case Axiom::Kp:
        for (const auto& tu : index_tuples(static_cast<int>(homs.size()), 2, max_tuples, seed)) {
          ObjRef p = homs[static_cast<std::size_t>(tu[0])], t = homs[static_cast<std::size_t>(tu[1])];
          for (const Mor& w : m.hom_span(T(p, t), d))
            compare(r, N(N(w)), w, with_arrow(objs_label(m, {{"p", p}, {"t", t}}), "ω", w));
        }
        return;
      case Axiom::BLR2:
      case Axiom::E2:
      case Axiom::E2p:
        for (const auto& tu : index_tuples(static_cast<int>(homs.size()), 3, max_tuples, seed)) {
          ObjRef x = homs[static_cast<std::size_t>(tu[0])], y = homs[static_cast<std::size_t>(tu[1])],
                 z = homs[static_cast<std::size_t>(tu[2])];
          if (a == Axiom::E2p) {
            // x, y, z play p, s, t; ω: p⊗(s⊗t) → d.
            std::string where = objs_label(m, {{"p", x}, {"s", y}, {"t", z}});
            for (const Mor& w : m.hom_span(T(x, T(y, z)), d)) {
              Mor step = N(m.then(m.assoc(x, y, z), w));
              step = N(m.then(m.assoc(z, x, y), step));
              Mor rhs = m.then(m.assoc(y, z, x), step);
              compare(r, N(w), rhs, with_arrow(where, "ω", w));
            }
            continue;
          }
          // x, y, z play p, q, t; ω: (p⊗q)⊗t → d.
          std::string where = objs_label(m, {{"p", x}, {"q", y}, {"t", z}});
          for (const Mor& w : m.hom_span(T(T(x, y), z), d)) {
            if (a == Axiom::BLR2) {
              Mor lhs = N(m.then(m.assoc(z, x, y), N(w)));
              Mor rhs = m.then(m.assoc_inv(y, z, x), N(m.then(m.assoc_inv(x, y, z), w)));
              compare(r, lhs, rhs, with_arrow(where, "ω", w));
            } else {
              Mor step = N(m.then(m.assoc_inv(x, y, z), w));
              step = N(m.then(m.assoc_inv(y, z, x), step));
              Mor rhs = m.then(m.assoc_inv(z, x, y), step);
              compare(r, N(w), rhs, with_arrow(where, "ω", w));
            }
          }
        }
        return;
      case Axiom::M2:
      case Axiom::M2p:
        for (const auto& tu : index_tuples(static_cast<int>(homs.size()), 4, max_tuples, seed)) {
          ObjRef p = homs[static_cast<std::size_t>(tu[0])], q = homs[static_cast<std::size_t>(tu[1])],
                 s = homs[static_cast<std::size_t>(tu[2])], t = homs[static_cast<std::size_t>(tu[3])];
          auto omegas = m.hom_span(T(p, t), d);
          if (omegas.empty()) continue;
          auto psis = m.hom_span(T(q, s), d);
          std::string where = objs_label(m, {{"p", p}, {"q", q}, {"s", s}, {"t", t}});
          for (const Mor& w : omegas)
            for (const Mor& psi : psis) {
              Mor lhs = a == Axiom::M2 ? N(lbind(m, w, psi)) : N(rbind(m, w, psi));
              Mor rhs = a == Axiom::M2 ? rbind(m, N(psi), N(w)) : lbind(m, N(psi), N(w));
              compare(r, lhs, rhs, with_arrow(with_arrow(where, "ω", w), "ψ", psi));
            }
        }
        return;
    }
  }
};

}  // namespace

SuiteResult check_axiom(const CycleData& c, const BigCycle& n, Axiom a, const AxiomOptions& opt) {
  const Model& m = c.model();
  Checker ch{c, n, m, opt.objects.empty() ? m.probes() : opt.objects, {}, opt.max_tuples, opt.seed};
  ch.homs = opt.hom_objects.empty() ? ch.objs : opt.hom_objects;
  SuiteResult r(to_string(a));
  try {
    ch.run(a, r);
  } catch (const NoSuchArrow& ex) {
    r.fail(to_string(a) + ": required arrow missing: " + ex.what());
  }
  return r;
}

SuiteResult check_axiom(const CycleData& c, Axiom a, const AxiomOptions& opt) {
  return check_axiom(c, to_upper(c), a, opt);
}

AxiomProfile profile(const CycleData& c, const AxiomOptions& opt) {
  AxiomProfile p;
  p.label = c.label();
  BigCycle n = to_upper(c);
  for (Axiom a : all_axioms()) p.verdicts[static_cast<std::size_t>(a)] = check_axiom(c, n, a, opt);
  return p;
}

Classification classify(const AxiomProfile& p) {
  Classification c;
  c.par_semicycle = p.holds(Axiom::Pbin);
  c.quasicycle = p.holds(Axiom::K);
  c.tensor_semicycle = p.holds(Axiom::Tbin);
  c.cycle = c.tensor_semicycle && c.par_semicycle;
  return c;
}

std::string describe(const Classification& c) {
  if (c.cycle) return "cycle";
  std::vector<std::string> kinds;
  if (c.tensor_semicycle) kinds.push_back("⊗-semicycle");
  if (c.par_semicycle) kinds.push_back("⅋-semicycle");
  if (c.quasicycle) kinds.push_back("quasicycle");
  if (kinds.empty()) return "none";
  std::string out;
  for (const auto& k : kinds) out += (out.empty() ? "" : ", ") + k;
  return out;
}

std::vector<std::string> dependency_violations(const AxiomProfile& p) {
  const bool pnul = p.holds(Axiom::Pnul), k = p.holds(Axiom::K), t0 = p.holds(Axiom::T0);
  const bool pbin = p.holds(Axiom::Pbin), tbin = p.holds(Axiom::Tbin);
  const bool cycle = tbin && pbin;
  std::vector<std::string> out;
  auto row = [&](bool premise, bool conclusion, const char* text) {
    if (premise && !conclusion) out.push_back(text);
  };
  row(tbin, t0, "Tbin ⇒ T0");
  row(tbin, pnul == k, "Tbin ⇒ (Pnul ⇔ K)");
  row(pbin, pnul, "Pbin ⇒ Pnul");
  row(pbin, t0 == k, "Pbin ⇒ (T0 ⇔ K)");
  row(k, t0 == pnul, "K ⇒ (T0 ⇔ Pnul)");
  row(k, tbin == pbin, "K ⇒ (Tbin ⇔ Pbin)");
  row(true, (pnul && tbin) == cycle, "{Pnul, Tbin} ⇔ cycle");
  row(true, (k && tbin) == cycle, "{K, Tbin} ⇔ cycle");
  row(true, (pbin && k) == cycle, "{Pbin, K} ⇔ cycle");
  row(true, (pbin && t0) == cycle, "{Pbin, T0} ⇔ cycle");
  row(cycle, k, "cycle ⇒ K");
  return out;
}

SuiteResult check_dependency_table(const std::vector<AxiomProfile>& profiles) {
  SuiteResult r("dependency table");
  for (const auto& p : profiles) {
    ++r.checks;
    for (const auto& v : dependency_violations(p)) r.fail(p.label + ": " + v);
  }
  return r;
}

SuiteResult check_upper_lower_equivalences(const AxiomProfile& p) {
  SuiteResult r("upper/lower equivalences");
  auto eq = [&](bool a, bool b, const char* text) {
    ++r.checks;
    if (a != b) r.fail(p.label + ": " + text);
  };
  const bool tbin = p.holds(Axiom::Tbin), e2 = p.holds(Axiom::E2), m2p = p.holds(Axiom::M2p);
  eq(tbin, e2, "Tbin ⇔ E2");
  eq(e2, m2p, "E2 ⇔ M2'");
  eq(p.holds(Axiom::BLR2), p.holds(Axiom::Kp) && e2, "BLR2 ⇔ K' ∧ E2");
  eq(p.holds(Axiom::Pnul), p.holds(Axiom::M0), "Pnul ⇔ M0");
  eq(p.holds(Axiom::Pbin), p.holds(Axiom::M2), "Pbin ⇔ M2");
  eq(p.holds(Axiom::M2), p.holds(Axiom::E2p), "M2 ⇔ E2'");
  eq(p.holds(Axiom::T0), p.holds(Axiom::BLR0), "T0 ⇔ BLR0");
  eq(p.holds(Axiom::K), p.holds(Axiom::Kp), "K ⇔ K'");
  return r;
}

SuiteResult check_cycle_valid(const CycleData& c, const std::vector<ObjRef>& objs) {
  const Model& m = c.model();
  SuiteResult r("cycle invertible and natural");
  for (ObjRef p : objs) {
    ++r.checks;
    try {
      Mor inv = c.nu_inv(p);
      if (!m.equal(m.then(c.nu(p), inv), m.id(m.rdual_obj(p)))) r.fail("ν⁻¹ is not inverse at " + m.name(p));
    } catch (const CycleError& ex) {
      r.fail(ex.what());
    }
  }
  for (ObjRef x : objs)
    for (ObjRef y : objs)
      for (const Mor& f : m.hom_span(x, y)) {
        ++r.checks;
        Mor lhs = m.then(c.nu(y), ldual_mor(m, f));
        Mor rhs = m.then(rdual_mor(m, f), c.nu(x));
        if (!m.equal(lhs, rhs)) r.fail("naturality fails for f=" + m.show(f) + ": " + m.name(x) + " → " + m.name(y));
      }
  return r;
}

SuiteResult check_case_roundtrip(const CycleData& c, const std::vector<ObjRef>& objs) {
  const Model& m = c.model();
  SuiteResult r("case-change roundtrip");
  BigCycle up = to_upper(c);
  CycleData back = to_lower(up);
  for (ObjRef p : objs) {
    ++r.checks;
    if (!m.equal(back.nu(p), c.nu(p))) r.fail("ν changes under the roundtrip at " + m.name(p));
  }
  BigCycle again = to_upper(back);
  for (ObjRef p : objs)
    for (ObjRef t : objs)
      for (const Mor& w : m.hom_span(m.tensor_obj(p, t), m.d())) {
        ++r.checks;
        if (!m.equal(again.apply(w), up.apply(w)))
          r.fail("N changes under the roundtrip at p=" + m.name(p) + ", t=" + m.name(t) + ", ω=" + m.show(w));
      }
  return r;
}

SuiteResult check_bigcycle_bijective(const BigCycle& n, const std::vector<ObjRef>& objs) {
  const Model& m = n.model();
  SuiteResult r("N bijective");
  for (ObjRef p : objs)
    for (ObjRef t : objs) {
      for (const Mor& w : m.hom_span(m.tensor_obj(p, t), m.d())) {
        ++r.checks;
        if (!m.equal(n.unapply(n.apply(w)), w)) r.fail("N⁻¹N ≠ id at p=" + m.name(p) + ", t=" + m.name(t));
      }
      for (const Mor& psi : m.hom_span(m.tensor_obj(t, p), m.d())) {
        ++r.checks;
        if (!m.equal(n.apply(n.unapply(psi)), psi)) r.fail("NN⁻¹ ≠ id at p=" + m.name(p) + ", t=" + m.name(t));
      }
    }
  return r;
}

SuiteResult check_bigcycle_linear(const BigCycle& n, const std::vector<ObjRef>& objs) {
  const Model& m = n.model();
  SuiteResult r("N linear");
  if (!m.is_linear()) return r;
  const Rational a(2), b(-3, 5);
  for (ObjRef p : objs)
    for (ObjRef t : objs) {
      auto span = m.hom_span(m.tensor_obj(p, t), m.d());
      for (std::size_t i = 0; i < span.size(); ++i)
        for (std::size_t j = i; j < span.size(); ++j) {
          ++r.checks;
          Mor lhs = n.apply(m.combine(a, span[i], b, span[j]));
          Mor rhs = m.combine(a, n.apply(span[i]), b, n.apply(span[j]));
          if (!m.equal(lhs, rhs)) r.fail("N not linear at p=" + m.name(p) + ", t=" + m.name(t));
        }
    }
  return r;
}

}  // namespace staut
