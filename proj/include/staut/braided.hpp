#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "staut/cyclicity.hpp"

namespace staut {

class LinearModel;

// Crossings typed by their source. `inverse` selects the opposite handedness:
// tcross(x, y, false) = σ̂_{x,y}: x⊗y → y⊗x and tcross(x, y, true) = σ̂_{y,x}⁻¹.
Mor tcross(const Model& m, ObjRef x, ObjRef y, bool inverse);
// The ⅋-braiding induced by duality: σ̌_{p,q}: p⅋q → q⅋p, and pcross as above.
Mor par_braid(const Model& m, ObjRef p, ObjRef q);
Mor pcross(const Model& m, ObjRef x, ObjRef y, bool inverse);

// Natural automorphism of the identity, computed on demand and memoized.
class Balance {
 public:
  using Family = std::function<Mor(ObjRef)>;
  Balance(const Model& m, std::string label, Family theta);

  const Model& model() const { return *model_; }
  const std::string& label() const;
  Mor theta(ObjRef p) const;
  Mor theta_inv(ObjRef p) const;

 private:
  struct State;
  const Model* model_;
  std::shared_ptr<State> state_;
};

Balance identity_balance(const Model& m);
Balance scalar_balance(const LinearModel& m, const Rational& lambda);
// Ribbon twist of the D(Z2) model: the central element P0 + P1·X.
Balance d2_ribbon_twist(const LinearModel& m);
// λ^{G²} on the graded model.
Balance graded_twist(const LinearModel& m, const Rational& lambda);

// p → p⊗e → p⊗(⊥p⅋p) → (p⊗ᵖp)⅋p → (ᵖp⊗p)⅋p → d⅋p → p, through ν and an inverse crossing.
Balance balance_from_cycle(const CycleData& c);
// N(ω) = σ_{t,p} ; (θ_p ⊗ id_t) ; ω.
BigCycle cycle_from_balance(const Balance& b);
// The cycle induced by the braiding alone: to_lower(cycle_from_balance(id)).
CycleData braided_identity_cycle(const Model& m);

// p → p⊗e → p⊗(⊥p⅋p) → (p⊗⊥p)⅋p, two inverse crossings on p⊗⊥p, then γ_p⅋id → d⅋p → p.
Mor stitch(const Model& m, ObjRef p);

SuiteResult check_hexagons(const Model& m, const std::vector<ObjRef>& objs);
SuiteResult check_symmetry(const Model& m, const std::vector<ObjRef>& objs);
// σ̌ = σ̂ as matrices when ⅋ and ⊗ coincide (linear backends only).
SuiteResult check_degenerate_braidings(const LinearModel& m, const std::vector<ObjRef>& objs);
// The two hexagons and two naturality-extended squares relating σ̂, σ̌, δL, δR.
SuiteResult check_nonplanar_distributions(const Model& m, const std::vector<ObjRef>& objs);

SuiteResult check_balance_valid(const Balance& b, const std::vector<ObjRef>& objs);
// (B̂) θ_{p⊗q} = σ_{p,q};(θ_q⊗θ_p);σ_{q,p}, which also forces θ_e = id; (B̌) likewise for ⅋ and σ̌.
SuiteResult check_semibalance(const Balance& b, bool tensor_side, const std::vector<ObjRef>& objs);
SuiteResult check_balance_roundtrip(const Balance& b, const std::vector<ObjRef>& objs);
SuiteResult check_cycle_roundtrip(const CycleData& c, const std::vector<ObjRef>& objs);
SuiteResult check_stitch_identity(const Model& m, const std::vector<ObjRef>& objs);
SuiteResult check_stitch_natural(const Model& m, const std::vector<ObjRef>& objs);
// θ_p ; ι_p ; ᵖ(θ_{⊥p}) ; ι_p⁻¹ = stitch_p with ι the cancellation p → ᵖ(⊥p).
SuiteResult check_quasibalance(const Balance& b, const std::vector<ObjRef>& objs);
// θ_{⊥p} = ⊥(θ_p) exactly when stitch_p = θ_p², per object; `detail` reports each side.
SuiteResult check_balance_double(const Balance& b, const std::vector<ObjRef>& objs, std::string* detail = nullptr);
// The braiding-induced cycle is a cycle exactly when σ̂ is a symmetry.
SuiteResult check_identity_cycle_symmetry(const Model& m, const AxiomOptions& opt = {});

}  // namespace staut
