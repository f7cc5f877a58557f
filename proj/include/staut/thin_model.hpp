#pragma once

#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "staut/model.hpp"
#include "staut/quantale.hpp"

namespace staut {

// A quantale viewed as a posetal star-autonomous category. Objects are terms
// over chosen generator elements and evaluate to elements; an arrow x → y
// exists exactly when eval(x) ≤ eval(y), and building one that does not
// exist throws NoSuchArrow. Every structural map therefore checks the
// corresponding inequality in the quantale.
class ThinModel : public Model {
 public:
  ThinModel(std::shared_ptr<const Quantale> q, const std::vector<int>& generator_elements, int max_nesting = 16);

  std::string describe() const override;
  const Quantale& quantale() const { return *q_; }
  int eval(ObjRef x) const;
  ObjRef generator(std::size_t i) const { return gens_.at(i); }
  const std::vector<ObjRef>& generators() const { return gens_; }

  Mor arrow(ObjRef x, ObjRef y) const;

  Mor id(ObjRef x) const override { return arrow(x, x); }
  Mor tensor(const Mor& f, const Mor& g) const override;
  Mor par(const Mor& f, const Mor& g) const override;
  bool equal(const Mor& f, const Mor& g) const override { return f.dom == g.dom && f.cod == g.cod; }
  Mor inverse(const Mor& f) const override { return arrow(f.cod, f.dom); }
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
  std::vector<ObjRef> probes() const override;

  // Commutative quantales are symmetric: σ is the equality a⊗b = b⊗a.
  bool braided() const override;
  Mor braid(ObjRef x, ObjRef y) const override { return arrow(tensor_obj(x, y), tensor_obj(y, x)); }

 protected:
  Mor compose(const Mor& f, const Mor& g) const override { return Mor{f.dom, g.cod, nullptr}; }

 private:
  std::shared_ptr<const Quantale> q_;
  std::vector<ObjRef> gens_;
  mutable std::mutex mu_;
  mutable std::unordered_map<ObjRef, int> memo_;
};

// One generator per quantale element when small, else a seeded sample of
// `max_generators` elements that always includes e and d0.
std::shared_ptr<ThinModel> make_thin_model(std::shared_ptr<const Quantale> q, int max_generators = 6,
                                           std::uint64_t seed = 1);

}  // namespace staut
