#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "staut/cyclicity.hpp"

namespace staut {

// Z-strings of adjoints over a base model, with Z-strings of mates as arrows.
//
// Objects are terms over two kinds of atoms: the canonical string of a base
// object p (iterated right duals above 0, left duals below) and period-two
// strings p, ⊥p, p, ... whose counits are generated by a cycle. Negations
// are pushed onto atoms, so ⊥(ᵖP) = P and ⊥(P⊗Q) = ⊥Q⅋⊥P hold as handles;
// (⊥P)_n = P_{n+1} and (ᵖP)_n = P_{n−1}. A mate f: P → Q has components
// f_n: P_n → Q_n for even n and f_n: Q_n → P_n for odd n. Equality and every
// check run over the window [lo, hi].
class ZangModel : public Model {
 public:
  ZangModel(const Model& base, int lo = -3, int hi = 3);

  const Model& base() const { return base_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  std::string describe() const override;

  ObjRef zangify(ObjRef p) const;
  // F-string candidate: P_even = p, P_odd = ⊥p, γ_0 = γ_p and γ_n = N(γ_{n−1}).
  ObjRef add_period2(ObjRef p, const CycleData& c);
  Mor zangify_mor(const Mor& f) const;

  // Base data of a string: P_n, τ_n: e → P_{n+1}⅋P_n, γ_n: P_n⊗P_{n+1} → d.
  ObjRef component(ObjRef x, int n) const;
  Mor unit_at(ObjRef x, int n) const;
  Mor counit_at(ObjRef x, int n) const;
  Mor component(const Mor& f, int n) const;
  ObjRef project0(ObjRef x) const { return component(x, 0); }

  // The mate of g: A_n → B_n at level n+1 (B_{n+1} → A_{n+1}) and the mate of
  // g: A_{n+1} → B_{n+1} at level n (B_n → A_n).
  Mor mate_up(ObjRef a, ObjRef b, const Mor& g, int n) const;
  Mor mate_down(ObjRef a, ObjRef b, const Mor& g, int n) const;
  // The unique string of mates P → Q with the given component at 0.
  Mor mate_extension(ObjRef p, ObjRef q, const Mor& m0) const;
  // A string of mates from explicit components.
  Mor from_components(ObjRef dom, ObjRef cod, std::function<Mor(int)> fn) const;

  ObjRef rdual_obj(ObjRef x) const override;
  ObjRef ldual_obj(ObjRef x) const override;

  Mor id(ObjRef x) const override;
  Mor tensor(const Mor& f, const Mor& g) const override;
  Mor par(const Mor& f, const Mor& g) const override;
  bool equal(const Mor& f, const Mor& g) const override;
  Mor inverse(const Mor& f) const override;
  std::string show(const Mor& f) const override;

  Mor assoc(ObjRef x, ObjRef y, ObjRef z) const override;
  Mor lunit(ObjRef x) const override;
  Mor runit(ObjRef x) const override;
  Mor passoc(ObjRef x, ObjRef y, ObjRef z) const override;
  Mor plunit(ObjRef x) const override;
  Mor prunit(ObjRef x) const override;
  Mor dist_l(ObjRef q, ObjRef s, ObjRef t) const override;
  Mor dist_r(ObjRef p, ObjRef q, ObjRef s) const override;
  Mor tau_r(ObjRef p) const override;
  Mor gamma_r(ObjRef p) const override;
  Mor tau_l(ObjRef p) const override;
  Mor gamma_l(ObjRef p) const override;

  std::vector<Mor> hom_span(ObjRef x, ObjRef y) const override;
  Mor combine(const Rational& a, const Mor& f, const Rational& b, const Mor& g) const override;
  bool is_linear() const override { return base_.is_linear(); }

  // Canonical strings of up to two base generators, the units and every
  // registered period-two string, unless overridden.
  std::vector<ObjRef> probes() const override;
  void set_probes(std::vector<ObjRef> p) { probes_ = std::move(p); }
  const std::vector<ObjRef>& period2_atoms() const { return period2_; }

 protected:
  Mor compose(const Mor& f, const Mor& g) const override;

 private:
  struct Atom {
    bool canonical = true;
    ObjRef base_obj = -1;
    std::shared_ptr<CycleData> cycle;  // period-two atoms only
  };
  struct Comp {
    ObjRef z;
    Mor tau, gamma;
  };
  const Comp& comp(ObjRef x, int n) const;
  Comp compute(ObjRef x, int n) const;
  Comp atom_comp(int gen, const Atom& a, int n) const;
  Comp binary_comp(ObjRef p, ObjRef q, int n, bool tensor_form) const;
  Mor period2_counit(int gen, const Atom& a, int n) const;
  Mor mor(ObjRef dom, ObjRef cod, std::function<Mor(int)> fn) const;

  const Model& base_;
  int lo_, hi_;
  mutable std::mutex mu_;
  mutable std::map<int, Atom> atoms_;  // generator index → atom
  mutable std::map<ObjRef, ObjRef> canonical_;
  mutable std::map<std::pair<ObjRef, int>, std::shared_ptr<Comp>> memo_;
  mutable std::map<std::pair<int, int>, Mor> p2_counits_;
  std::vector<ObjRef> period2_;
  std::vector<ObjRef> probes_;
};

// Each adjacent pair (P_n, P_{n+1}, τ_n, γ_n) satisfies the linear triangle identities.
SuiteResult check_zstring_triangles(const ZangModel& z, const std::vector<ObjRef>& objs);
// f_{n+1} is the mate of f_n across the window.
bool is_mate_string(const ZangModel& z, const Mor& f, std::string* why = nullptr);
// Structural mates (associators, unitors, distributions, units and counits) are mate strings.
SuiteResult check_structural_mates(const ZangModel& z, const std::vector<ObjRef>& objs);
// ⊥ and ᵖ shift components exactly; de Morgan and cancellation maps are identities.
SuiteResult check_strict_negations(const ZangModel& z, const std::vector<ObjRef>& objs);
// zangify is functorial with (zangify p)_0 = p. Every P is isomorphic to zangify(P_0)
// through the mate string extending id.
SuiteResult check_equivalence(const ZangModel& z, const std::vector<ObjRef>& objs);

// The extended cycle: component n is P_{n+1} ≅ ⊥(P_n) → ᵖ(P_n) ≅ P_{n−1},
// inverted at odd n to match the direction of a mate.
CycleData zangcycle(const ZangModel& z, const CycleData& c);

// P_{n+1} = P_{n−1} and γ_n = N(γ_{n−1}) on the window.
bool is_fang(const ZangModel& z, ObjRef p, const CycleData& c, std::string* why = nullptr);
// Membership of the given strings, closure under ⊗, ⅋, ⊥, ᵖ, e and d, the
// counit chain of the closure proof, and zangcycle = id on members. Throws
// CycleError when c is not a cycle on the base.
SuiteResult fang_check(const ZangModel& z, const std::vector<ObjRef>& strings, const CycleData& c,
                       const AxiomOptions& base_opt = {});

}  // namespace staut
