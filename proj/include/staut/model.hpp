#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "staut/object.hpp"
#include "staut/qmatrix.hpp"

namespace staut {

struct MorData {
  virtual ~MorData() = default;
};

// An arrow dom -> cod; the payload is backend specific (none for thin
// models, a rational matrix for linear ones, a component family for Zang).
struct Mor {
  ObjRef dom = -1;
  ObjRef cod = -1;
  std::shared_ptr<const MorData> data;
};

class CompositionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ShapeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Thrown when a thin backend is asked for an arrow whose order relation fails,
// or a linear backend for an inverse of a singular map.
class NoSuchArrow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Finite star-autonomous category: objects are hash-consed descriptors,
// arrows compose in diagrammatic order (f then g).
class Model {
 public:
  explicit Model(int max_nesting = 16) : objs_(max_nesting) {}
  virtual ~Model() = default;
  Model(const Model&) = delete;
  Model& operator=(const Model&) = delete;

  virtual std::string describe() const = 0;
  ObjectTable& objects() const { return objs_; }
  std::string name(ObjRef x) const { return objs_.name(x); }

  // Object formers. Zang overrides the duals to keep negation strict.
  virtual ObjRef tensor_obj(ObjRef x, ObjRef y) const { return objs_.tensor(x, y); }
  virtual ObjRef par_obj(ObjRef x, ObjRef y) const { return objs_.par(x, y); }
  virtual ObjRef rdual_obj(ObjRef x) const { return objs_.rdual(x); }
  virtual ObjRef ldual_obj(ObjRef x) const { return objs_.ldual(x); }
  ObjRef e() const { return objs_.unit_e(); }
  ObjRef d() const { return objs_.unit_d(); }

  // Arrow algebra.
  virtual Mor id(ObjRef x) const = 0;
  Mor then(const Mor& f, const Mor& g) const;
  virtual Mor tensor(const Mor& f, const Mor& g) const = 0;
  virtual Mor par(const Mor& f, const Mor& g) const = 0;
  virtual bool equal(const Mor& f, const Mor& g) const = 0;
  virtual Mor inverse(const Mor& f) const = 0;
  virtual std::string show(const Mor& f) const;

  // Structural maps.
  virtual Mor assoc(ObjRef x, ObjRef y, ObjRef z) const = 0;   // (x⊗y)⊗z → x⊗(y⊗z)
  virtual Mor lunit(ObjRef x) const = 0;                       // e⊗x → x
  virtual Mor runit(ObjRef x) const = 0;                       // x⊗e → x
  virtual Mor passoc(ObjRef x, ObjRef y, ObjRef z) const = 0;  // (x⅋y)⅋z → x⅋(y⅋z)
  virtual Mor plunit(ObjRef x) const = 0;                      // d⅋x → x
  virtual Mor prunit(ObjRef x) const = 0;                      // x⅋d → x
  virtual Mor dist_l(ObjRef q, ObjRef s, ObjRef t) const = 0;  // q⊗(s⅋t) → (q⊗s)⅋t
  virtual Mor dist_r(ObjRef p, ObjRef q, ObjRef s) const = 0;  // (p⅋q)⊗s → p⅋(q⊗s)
  virtual Mor tau_r(ObjRef p) const = 0;                       // e → ⊥p⅋p
  virtual Mor gamma_r(ObjRef p) const = 0;                     // p⊗⊥p → d
  virtual Mor tau_l(ObjRef p) const = 0;                       // e → p⅋ᵖp
  virtual Mor gamma_l(ObjRef p) const = 0;                     // ᵖp⊗p → d

  virtual Mor assoc_inv(ObjRef x, ObjRef y, ObjRef z) const { return inverse(assoc(x, y, z)); }
  virtual Mor lunit_inv(ObjRef x) const { return inverse(lunit(x)); }
  virtual Mor runit_inv(ObjRef x) const { return inverse(runit(x)); }
  virtual Mor passoc_inv(ObjRef x, ObjRef y, ObjRef z) const { return inverse(passoc(x, y, z)); }
  virtual Mor plunit_inv(ObjRef x) const { return inverse(plunit(x)); }
  virtual Mor prunit_inv(ObjRef x) const { return inverse(prunit(x)); }

  // Finite spanning set of Hom(x, y); every hom-level axiom is linear in the
  // arrow (or trivial when thin), so checking a spanning set suffices.
  virtual std::vector<Mor> hom_span(ObjRef x, ObjRef y) const = 0;
  // Linear combination a*f + b*g where the backend is linear; thin and other
  // backends may return f.
  virtual Mor combine(const Rational& a, const Mor& f, const Rational& b, const Mor& g) const;
  virtual bool is_linear() const { return false; }

  // Probe universe: the objects quantified over by invariant and axiom suites.
  virtual std::vector<ObjRef> probes() const = 0;

  // Braiding σ_{x,y}: x⊗y → y⊗x, when present.
  virtual bool braided() const { return false; }
  virtual Mor braid(ObjRef x, ObjRef y) const;
  // σ⁻¹_{x,y}: y⊗x → x⊗y.
  virtual Mor braid_inv(ObjRef x, ObjRef y) const { return inverse(braid(x, y)); }

 protected:
  virtual Mor compose(const Mor& f, const Mor& g) const = 0;

 private:
  mutable ObjectTable objs_;
};

}  // namespace staut
