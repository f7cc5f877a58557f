#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "staut/model.hpp"

namespace staut {

// Hopf-algebra generators acting on modules. Grouplike: Δh = h⊗h, S(h) = h⁻¹.
// Primitive: Δh = h⊗1 + 1⊗h, S(h) = −h.
enum class GenType { Grouplike, Primitive };

struct Algebra {
  std::vector<std::string> names;
  std::vector<GenType> types;
  std::size_t size() const { return names.size(); }
};

struct Rep {
  std::size_t dim = 0;
  std::vector<QMatrix> act;  // one dim×dim matrix per algebra generator
};

struct LinearData : MorData {
  QMatrix m;
  explicit LinearData(QMatrix x) : m(std::move(x)) {}
};

// Finite-dimensional modules over exact rationals. Both monoidal products are
// the Kronecker product (row-major over the left factor), e = d is the
// trivial 1-dim module, and ⊥p = ᵖp is the contragredient module, so all
// associators, unitors and distributions are identity matrices while units
// and counits are the standard coevaluation and evaluation.
class LinearModel : public Model {
 public:
  // R acting on V⊗W; the braiding is flip ∘ R.
  using RAction = std::function<QMatrix(const Rep&, const Rep&)>;

  LinearModel(std::string description, Algebra algebra, std::vector<std::pair<std::string, Rep>> generators,
              std::optional<RAction> r_action, std::optional<RAction> r_inverse = std::nullopt,
              int max_nesting = 16);

  std::string describe() const override { return description_; }
  const Algebra& algebra() const { return algebra_; }
  const Rep& rep(ObjRef x) const;
  std::size_t dim(ObjRef x) const { return rep(x).dim; }
  ObjRef generator(std::size_t i) const { return gens_.at(i); }
  const std::vector<ObjRef>& generators() const { return gens_; }

  Mor make(ObjRef dom, ObjRef cod, QMatrix m) const;
  const QMatrix& matrix(const Mor& f) const;
  Mor scaled(const Mor& f, const Rational& s) const;
  bool is_module_map(const Mor& f) const;

  Mor id(ObjRef x) const override;
  Mor tensor(const Mor& f, const Mor& g) const override;
  Mor par(const Mor& f, const Mor& g) const override { return tensor_like(par_obj(f.dom, g.dom), par_obj(f.cod, g.cod), f, g); }
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
  bool is_linear() const override { return true; }

  std::vector<ObjRef> probes() const override;
  void set_probes(std::vector<ObjRef> p) { probes_ = std::move(p); }

  bool braided() const override { return true; }
  Mor braid(ObjRef x, ObjRef y) const override;
  Mor braid_inv(ObjRef x, ObjRef y) const override;

 protected:
  Mor compose(const Mor& f, const Mor& g) const override;

 private:
  Mor tensor_like(ObjRef dom, ObjRef cod, const Mor& f, const Mor& g) const;
  Mor identity_between(ObjRef dom, ObjRef cod) const;
  Rep tensor_rep(const Rep& a, const Rep& b) const;
  Rep dual_rep(const Rep& a) const;
  Rep trivial_rep() const;

  std::string description_;
  Algebra algebra_;
  std::optional<RAction> r_action_;
  std::optional<RAction> r_inverse_;
  std::vector<ObjRef> gens_;
  std::vector<ObjRef> probes_;
  mutable std::mutex mu_;
  mutable std::map<ObjRef, std::shared_ptr<const Rep>> reps_;
  mutable std::map<std::pair<ObjRef, ObjRef>, std::vector<Mor>> spans_;
};

// Plain vector spaces: generators V1..Vn of dimensions 1..n, symmetric flip braiding.
std::shared_ptr<LinearModel> build_vec_model(int max_dim);

// Modules over D(Z2) = k[Z2×Z2] with generators X (charge) and Y (flux sign),
// R = P0⊗1 + P1⊗X with P0 = (1+Y)/2, P1 = (1−Y)/2. Generators: the simples
// "one","elec","mag","ferm" and the regular module "reg" in its group basis. Algebra
// relations, the module-map property of σ and both hexagons are verified at
// construction; a failure throws std::logic_error naming the axiom.
std::shared_ptr<LinearModel> build_drinfeld_z2();

// 1-dim modules graded by the given integers (one primitive generator acting
// by the grade), braided by λ^{g·h} ∘ flip. Braided but not symmetric for
// λ² ≠ 1; used to exercise the failing branch of the quasibalance checks.
std::shared_ptr<LinearModel> build_graded_model(const std::vector<int>& grades, const Rational& lambda);

// Matrix of an algebra element's action; helpers for the built-in algebras.
QMatrix d2_projector(const Rep& r, int flux);  // P0 or P1 on r
Rational rational_pow(const Rational& x, long k);

}  // namespace staut
