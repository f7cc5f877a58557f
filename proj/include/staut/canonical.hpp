#pragma once

#include <string>
#include <vector>

#include "staut/model.hpp"

namespace staut {

// A linear adjunction A ⊣ B: unit e → B⅋A and counit A⊗B → d.
struct Adjunction {
  ObjRef left = -1;   // A
  ObjRef right = -1;  // B
  Mor unit;           // e → B⅋A
  Mor counit;         // A⊗B → d
};

Adjunction right_dual_adj(const Model& m, ObjRef p);  // p ⊣ ⊥p
Adjunction left_dual_adj(const Model& m, ObjRef p);   // ᵖp ⊣ p

// Hom(A⊗t, y) ≅ Hom(t, B⅋y) and Hom(t⊗B, y) ≅ Hom(t, y⅋A).
Mor curry_left_into(const Model& m, const Adjunction& adj, const Mor& h);
Mor curry_right_into(const Model& m, const Adjunction& adj, const Mor& h);

// Hom(A⊗t, d) ≅ Hom(t, B) and Hom(t⊗B, d) ≅ Hom(t, A), with inverses.
Mor curry_left(const Model& m, const Adjunction& adj, const Mor& f);
Mor curry_right(const Model& m, const Adjunction& adj, const Mor& f);
Mor uncurry_left(const Model& m, const Adjunction& adj, const Mor& g);
Mor uncurry_right(const Model& m, const Adjunction& adj, const Mor& g);

// f: p⊗t → d  ↦  t → ⊥p, and f: t⊗p → d  ↦  t → ᵖp.
Mor lcurry(const Model& m, ObjRef p, const Mor& f);
Mor rcurry(const Model& m, ObjRef p, const Mor& f);
Mor lcurry_inv(const Model& m, ObjRef p, const Mor& g);
Mor rcurry_inv(const Model& m, ObjRef p, const Mor& g);

// Contravariant actions of the two negations on arrows.
Mor rdual_mor(const Model& m, const Mor& f);  // f: x → y  ↦  ⊥y → ⊥x
Mor ldual_mor(const Model& m, const Mor& f);  // f: x → y  ↦  ᵖy → ᵖx

enum class DeMorgan {
  TensorR,  // ⊥(p⊗q) → ⊥q⅋⊥p
  TensorL,  // ᵖ(p⊗q) → ᵖq⅋ᵖp
  ParR,     // ⊥q⊗⊥p → ⊥(p⅋q)
  ParL,     // ᵖq⊗ᵖp → ᵖ(p⅋q)
  UnitER,   // e → ⊥d
  UnitEL,   // e → ᵖd
  UnitDR,   // ⊥e → d
  UnitDL,   // ᵖe → d
};
std::string to_string(DeMorgan v);
std::vector<DeMorgan> all_demorgan();
bool demorgan_is_binary(DeMorgan v);

Mor demorgan(const Model& m, DeMorgan v, ObjRef p = -1, ObjRef q = -1);
Mor canon_rl(const Model& m, ObjRef p);  // p → ⊥(ᵖp)
Mor canon_lr(const Model& m, ObjRef p);  // p → ᵖ(⊥p)

// lbind(ω, ψ): (p⅋q)⊗(s⊗t) → d for ω: p⊗t → d, ψ: q⊗s → d.
Mor lbind(const Model& m, const Mor& omega, const Mor& psi);
// rbind(ω, ψ): (p⊗q)⊗(s⅋t) → d for ω: p⊗t → d, ψ: q⊗s → d.
Mor rbind(const Model& m, const Mor& omega, const Mor& psi);

struct ResidualObjects {
  ObjRef lolli;  // x⊸z encoded as ⊥x⅋z
  ObjRef llol;   // z⟜x encoded as z⅋ᵖx
};
ResidualObjects residual_objects(const Model& m, ObjRef x, ObjRef z);

// Global element e → ⊥p⅋q naming f: p → q, and back.
Mor name_of(const Model& m, const Mor& f);
Mor unname(const Model& m, ObjRef p, const Mor& n);

// Operand objects of binary terms; throws ShapeError on mismatch.
ObjRef left_of(const Model& m, ObjRef x, Kind k);
ObjRef right_of(const Model& m, ObjRef x, Kind k);
ObjRef dual_arg(const Model& m, ObjRef x, Kind k);

struct SuiteResult {
  SuiteResult() = default;
  explicit SuiteResult(std::string n) : name(std::move(n)) {}
  std::string name;
  bool pass = true;
  long checks = 0;
  std::string witness;  // first failure, replayable description
  void fail(const std::string& w) {
    if (pass) witness = w;
    pass = false;
  }
};

// Staut invariant suites over the model's probe universe.
SuiteResult check_triangles(const Model& m, const std::vector<ObjRef>& objs);
bool adjunction_triangles(const Model& m, const Adjunction& adj);
SuiteResult check_monoidal_coherence(const Model& m, const std::vector<ObjRef>& objs);
SuiteResult check_distributivity(const Model& m, const std::vector<ObjRef>& objs);
SuiteResult check_curry_bijection(const Model& m, const std::vector<ObjRef>& objs);
SuiteResult check_canonical_invertible(const Model& m, const std::vector<ObjRef>& objs);
// The base identity relating both bind composites, checked for all spanning ψ, ω′.
SuiteResult check_base_identity(const Model& m, const std::vector<ObjRef>& objs, long max_samples);
bool base_identity_holds(const Model& m, const Mor& psi, const Mor& omega2, ObjRef s, ObjRef t);

}  // namespace staut
