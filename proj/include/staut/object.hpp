#pragma once

#include <cstddef>
#include <deque>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace staut {

using ObjRef = int;

enum class Kind { Gen, Tensor, Par, UnitE, UnitD, RDual, LDual };

struct Term {
  Kind kind = Kind::Gen;
  int a = -1;  // generator index, or left operand / dual argument
  int b = -1;  // right operand for tensor and par
};

class UniverseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Hash-consed object descriptors: structurally equal terms share one handle.
// Interning is internally synchronised so read-only checks may run in
// parallel while lazily naming new composites.
class ObjectTable {
 public:
  explicit ObjectTable(int max_nesting = 16);

  int add_generator(const std::string& name);
  int generator_count() const;
  const std::string& generator_name(int g) const;

  ObjRef gen(int g);
  ObjRef tensor(ObjRef x, ObjRef y);
  ObjRef par(ObjRef x, ObjRef y);
  ObjRef unit_e();
  ObjRef unit_d();
  ObjRef rdual(ObjRef x);  // right dual, written ⊥x
  ObjRef ldual(ObjRef x);  // left dual, written ᵖx

  Term term(ObjRef x) const;
  // Nesting depth of the descriptor tree (generators and units are 0).
  int depth(ObjRef x) const;
  std::size_t size() const;
  std::string name(ObjRef x) const;

 private:
  ObjRef intern(const Term& t, int depth);

  int max_nesting_;
  mutable std::shared_mutex mu_;
  std::deque<Term> terms_;
  std::deque<int> depths_;
  std::map<std::tuple<int, int, int>, ObjRef> index_;
  std::deque<std::string> gen_names_;
};

}  // namespace staut
