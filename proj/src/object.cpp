#include "staut/object.hpp"

#include <algorithm>

namespace staut {

ObjectTable::ObjectTable(int max_nesting) : max_nesting_(max_nesting) {}

int ObjectTable::add_generator(const std::string& name) {
  std::unique_lock lock(mu_);
  gen_names_.push_back(name);
  return static_cast<int>(gen_names_.size()) - 1;
}

int ObjectTable::generator_count() const {
  std::shared_lock lock(mu_);
  return static_cast<int>(gen_names_.size());
}

const std::string& ObjectTable::generator_name(int g) const {
  std::shared_lock lock(mu_);
  return gen_names_.at(static_cast<std::size_t>(g));
}

ObjRef ObjectTable::intern(const Term& t, int depth) {
  if (depth > max_nesting_)
    throw UniverseError("object nesting " + std::to_string(depth) + " exceeds the universe bound " +
                        std::to_string(max_nesting_) + "; raise --depth or shrink --window");
  auto key = std::make_tuple(static_cast<int>(t.kind), t.a, t.b);
  {
    std::shared_lock lock(mu_);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
  }
  std::unique_lock lock(mu_);
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  ObjRef id = static_cast<ObjRef>(terms_.size());
  terms_.push_back(t);
  depths_.push_back(depth);
  index_.emplace(key, id);
  return id;
}

ObjRef ObjectTable::gen(int g) {
  if (g < 0 || g >= generator_count()) throw UniverseError("unknown generator " + std::to_string(g));
  return intern({Kind::Gen, g, -1}, 0);
}

ObjRef ObjectTable::tensor(ObjRef x, ObjRef y) {
  return intern({Kind::Tensor, x, y}, 1 + std::max(depth(x), depth(y)));
}

ObjRef ObjectTable::par(ObjRef x, ObjRef y) {
  return intern({Kind::Par, x, y}, 1 + std::max(depth(x), depth(y)));
}

ObjRef ObjectTable::unit_e() { return intern({Kind::UnitE, -1, -1}, 0); }
ObjRef ObjectTable::unit_d() { return intern({Kind::UnitD, -1, -1}, 0); }
ObjRef ObjectTable::rdual(ObjRef x) { return intern({Kind::RDual, x, -1}, 1 + depth(x)); }
ObjRef ObjectTable::ldual(ObjRef x) { return intern({Kind::LDual, x, -1}, 1 + depth(x)); }

Term ObjectTable::term(ObjRef x) const {
  std::shared_lock lock(mu_);
  return terms_.at(static_cast<std::size_t>(x));
}

int ObjectTable::depth(ObjRef x) const {
  std::shared_lock lock(mu_);
  return depths_.at(static_cast<std::size_t>(x));
}

std::size_t ObjectTable::size() const {
  std::shared_lock lock(mu_);
  return terms_.size();
}

std::string ObjectTable::name(ObjRef x) const {
  Term t = term(x);
  auto wrap = [this](ObjRef y) {
    Term u = term(y);
    std::string s = name(y);
    return (u.kind == Kind::Tensor || u.kind == Kind::Par) ? "(" + s + ")" : s;
  };
  switch (t.kind) {
    case Kind::Gen: return generator_name(t.a);
    case Kind::Tensor: return wrap(t.a) + "⊗" + wrap(t.b);
    case Kind::Par: return wrap(t.a) + "⅋" + wrap(t.b);
    case Kind::UnitE: return "e";
    case Kind::UnitD: return "d";
    case Kind::RDual: return "⊥" + wrap(t.a);
    case Kind::LDual: return "ᵖ" + wrap(t.a);
  }
  return "?";
}

}  // namespace staut
