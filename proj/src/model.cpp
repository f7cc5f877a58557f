#include "staut/model.hpp"

namespace staut {

Mor Model::then(const Mor& f, const Mor& g) const {
  if (f.cod != g.dom)
    throw CompositionError("cannot compose " + name(f.dom) + " → " + name(f.cod) + " with " +
                           name(g.dom) + " → " + name(g.cod) + ": " + name(f.cod) +
                           " ≠ " + name(g.dom));
  return compose(f, g);
}

std::string Model::show(const Mor& f) const { return name(f.dom) + " → " + name(f.cod); }

Mor Model::combine(const Rational&, const Mor& f, const Rational&, const Mor&) const { return f; }

Mor Model::braid(ObjRef x, ObjRef y) const {
  throw ShapeError("model " + describe() + " has no braiding (asked for σ at " + name(x) + ", " +
                   name(y) + ")");
}

}  // namespace staut
