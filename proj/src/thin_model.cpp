#include "staut/thin_model.hpp"

#include <algorithm>
#include <random>

namespace staut {

ThinModel::ThinModel(std::shared_ptr<const Quantale> q, const std::vector<int>& generator_elements, int max_nesting)
    : Model(max_nesting), q_(std::move(q)) {
  for (int a : generator_elements) {
    if (a < 0 || a >= q_->size()) throw ShapeError("generator element out of range");
    int g = objects().add_generator(q_->element_name(a));
    ObjRef x = objects().gen(g);
    gens_.push_back(x);
    memo_[x] = a;
  }
}

std::string ThinModel::describe() const { return "thin model of " + q_->describe(); }

int ThinModel::eval(ObjRef x) const {
  {
    std::lock_guard lock(mu_);
    auto it = memo_.find(x);
    if (it != memo_.end()) return it->second;
  }
  Term t = objects().term(x);
  int v = 0;
  switch (t.kind) {
    case Kind::Gen: throw ShapeError("unknown generator in thin model");
    case Kind::Tensor: v = q_->tensor(eval(t.a), eval(t.b)); break;
    case Kind::Par: v = q_->par(eval(t.a), eval(t.b)); break;
    case Kind::UnitE: v = q_->unit(); break;
    case Kind::UnitD: v = q_->dualizer(); break;
    case Kind::RDual: v = q_->rdual(eval(t.a)); break;
    case Kind::LDual: v = q_->ldual(eval(t.a)); break;
  }
  std::lock_guard lock(mu_);
  memo_[x] = v;
  return v;
}

Mor ThinModel::arrow(ObjRef x, ObjRef y) const {
  int a = eval(x), b = eval(y);
  if (!q_->leq(a, b))
    throw NoSuchArrow("no arrow " + name(x) + " → " + name(y) + ": " + q_->element_name(a) + " ≰ " +
                      q_->element_name(b));
  return Mor{x, y, nullptr};
}

std::string ThinModel::show(const Mor& f) const {
  return name(f.dom) + " ≤ " + name(f.cod) + " [" + q_->element_name(eval(f.dom)) + " ≤ " +
         q_->element_name(eval(f.cod)) + "]";
}

Mor ThinModel::tensor(const Mor& f, const Mor& g) const {
  return arrow(tensor_obj(f.dom, g.dom), tensor_obj(f.cod, g.cod));
}
Mor ThinModel::par(const Mor& f, const Mor& g) const { return arrow(par_obj(f.dom, g.dom), par_obj(f.cod, g.cod)); }

Mor ThinModel::assoc(ObjRef x, ObjRef y, ObjRef z) const {
  return arrow(tensor_obj(tensor_obj(x, y), z), tensor_obj(x, tensor_obj(y, z)));
}
Mor ThinModel::lunit(ObjRef x) const { return arrow(tensor_obj(e(), x), x); }
Mor ThinModel::runit(ObjRef x) const { return arrow(tensor_obj(x, e()), x); }
Mor ThinModel::passoc(ObjRef x, ObjRef y, ObjRef z) const {
  return arrow(par_obj(par_obj(x, y), z), par_obj(x, par_obj(y, z)));
}
Mor ThinModel::plunit(ObjRef x) const { return arrow(par_obj(d(), x), x); }
Mor ThinModel::prunit(ObjRef x) const { return arrow(par_obj(x, d()), x); }
Mor ThinModel::dist_l(ObjRef q, ObjRef s, ObjRef t) const {
  return arrow(tensor_obj(q, par_obj(s, t)), par_obj(tensor_obj(q, s), t));
}
Mor ThinModel::dist_r(ObjRef p, ObjRef q, ObjRef s) const {
  return arrow(tensor_obj(par_obj(p, q), s), par_obj(p, tensor_obj(q, s)));
}
Mor ThinModel::tau_r(ObjRef p) const { return arrow(e(), par_obj(rdual_obj(p), p)); }
Mor ThinModel::gamma_r(ObjRef p) const { return arrow(tensor_obj(p, rdual_obj(p)), d()); }
Mor ThinModel::tau_l(ObjRef p) const { return arrow(e(), par_obj(p, ldual_obj(p))); }
Mor ThinModel::gamma_l(ObjRef p) const { return arrow(tensor_obj(ldual_obj(p), p), d()); }

std::vector<Mor> ThinModel::hom_span(ObjRef x, ObjRef y) const {
  if (!q_->leq(eval(x), eval(y))) return {};
  return {Mor{x, y, nullptr}};
}

std::vector<ObjRef> ThinModel::probes() const {
  std::vector<ObjRef> out = gens_;
  out.push_back(e());
  out.push_back(d());
  for (ObjRef g : gens_) {
    out.push_back(rdual_obj(g));
    out.push_back(ldual_obj(g));
  }
  return out;
}

bool ThinModel::braided() const {
  for (int a = 0; a < q_->size(); ++a)
    for (int b = 0; b < q_->size(); ++b)
      if (q_->tensor(a, b) != q_->tensor(b, a)) return false;
  return true;
}

std::shared_ptr<ThinModel> make_thin_model(std::shared_ptr<const Quantale> q, int max_generators, std::uint64_t seed) {
  std::vector<int> elems;
  if (q->size() <= max_generators) {
    for (int a = 0; a < q->size(); ++a) elems.push_back(a);
  } else {
    elems = {q->unit(), q->dualizer()};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, q->size() - 1);
    while (static_cast<int>(elems.size()) < max_generators) {
      int a = pick(rng);
      if (std::find(elems.begin(), elems.end(), a) == elems.end()) elems.push_back(a);
    }
    std::sort(elems.begin(), elems.end());
  }
  return std::make_shared<ThinModel>(std::move(q), elems);
}

}  // namespace staut
