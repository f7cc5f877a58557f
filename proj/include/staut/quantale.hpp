#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "staut/canonical.hpp"

namespace staut {

class QuantaleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A finite ordered monoid with a dualizing element, elements indexed 0..n-1.
// Residuals are found by brute force as the largest solution of the defining
// inequality; they need not exist (e.g. discrete orders), in which case the
// structure is reported as invalid by validate().
class Quantale {
 public:
  virtual ~Quantale() = default;
  virtual std::string describe() const = 0;
  virtual int size() const = 0;
  virtual std::string element_name(int a) const = 0;
  virtual bool leq(int a, int b) const = 0;
  virtual int tensor(int a, int b) const = 0;
  virtual int unit() const = 0;
  virtual int dualizer() const = 0;

  // a⊸b: largest ξ with a⊗ξ ≤ b.  b⟜a: largest ξ with ξ⊗a ≤ b.
  virtual std::optional<int> lres(int a, int b) const;
  virtual std::optional<int> rres(int b, int a) const;

  // ⊥a = a⊸d0 and ᵖa = d0⟜a, tabulated by prepare().
  int rdual(int a) const;
  int ldual(int a) const;
  // a⅋b = ⊥(ᵖb⊗ᵖa).
  int par(int a, int b) const { return rdual(tensor(ldual(b), ldual(a))); }
  bool prepared() const { return !rdual_.empty(); }
  std::optional<int> find(const std::string& name) const;

 protected:
  // Tabulates both negations; throws QuantaleError if a residual is missing.
  void prepare();

 private:
  std::vector<int> rdual_, ldual_;
};

// Explicit tables; used for pointed groups, the Łukasiewicz chain and files.
class TableQuantale : public Quantale {
 public:
  TableQuantale(std::string description, std::vector<std::string> names, std::vector<std::vector<bool>> leq,
                std::vector<std::vector<int>> table, int unit, int dualizer);
  std::string describe() const override { return description_; }
  int size() const override { return static_cast<int>(names_.size()); }
  std::string element_name(int a) const override { return names_.at(static_cast<std::size_t>(a)); }
  bool leq(int a, int b) const override { return leq_[a][b]; }
  int tensor(int a, int b) const override { return table_[a][b]; }
  int unit() const override { return unit_; }
  int dualizer() const override { return dualizer_; }

 private:
  std::string description_;
  std::vector<std::string> names_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<int>> table_;
  int unit_, dualizer_;
};

using RelMask = std::uint32_t;

// Relations on {0..n-1} as n²-bit masks; bit i*n+j encodes the pair (i,j).
RelMask rel_compose(int n, RelMask a, RelMask b);
RelMask rel_reverse(int n, RelMask a);
RelMask rel_complement(int n, RelMask a);
RelMask rel_diagonal(int n);
std::string rel_name(int n, RelMask a);

// Sub-quantale of relations closed under unions and composition; either all
// relations (Rel(n)) or a filtered family such as 2-valued profunctors.
class RelQuantale : public Quantale {
 public:
  RelQuantale(std::string description, int n, std::vector<RelMask> elements, RelMask unit, RelMask dualizer,
              bool all_relations);
  std::string describe() const override { return description_; }
  int size() const override { return static_cast<int>(masks_.size()); }
  std::string element_name(int a) const override { return rel_name(n_, mask(a)); }
  bool leq(int a, int b) const override { return (mask(a) & ~mask(b)) == 0; }
  int tensor(int a, int b) const override { return index(rel_compose(n_, mask(a), mask(b))); }
  int unit() const override { return unit_; }
  int dualizer() const override { return dualizer_; }
  std::optional<int> lres(int a, int b) const override;
  std::optional<int> rres(int b, int a) const override;

  int points() const { return n_; }
  RelMask mask(int a) const { return masks_[static_cast<std::size_t>(a)]; }
  int index(RelMask m) const;

 private:
  std::string description_;
  int n_;
  bool all_;
  std::vector<RelMask> masks_;
  std::vector<int> index_;  // mask → element index, -1 when absent
  int unit_ = -1, dualizer_ = -1;
};

std::shared_ptr<RelQuantale> build_rel_quantale(int n);

// Poset on {0..n-1} as a leq matrix.
using Poset = std::vector<std::vector<bool>>;
std::vector<Poset> all_posets(int n);
std::string poset_name(const Poset& p);
std::shared_ptr<RelQuantale> build_two_profunctor_quantale(const Poset& p);

std::shared_ptr<TableQuantale> build_pointed_group(std::string description, std::vector<std::string> names,
                                                   std::vector<std::vector<int>> mul, std::optional<Poset> order,
                                                   int dualizer);
std::shared_ptr<TableQuantale> build_cyclic_group(int n, int dualizer);
std::shared_ptr<TableQuantale> build_s3(int dualizer);
// Names of the S3 elements in index order: id, three transpositions, two 3-cycles.
std::vector<std::string> s3_names();
// Whether g commutes with every element of S3 (brute force, independent of the quantale).
bool s3_central(int g);
// Łukasiewicz chain 0 < 1/2 < 1 with truncated addition.
std::shared_ptr<TableQuantale> build_lukasiewicz3();
// Two-element Boolean quantale.
std::shared_ptr<TableQuantale> build_bool();

struct CyclicVerdict {
  bool cyclic = true;
  int witness = -1;  // an α with ⊥α ≠ ᵖα
};
CyclicVerdict is_cyclic(const Quantale& q);

// Residual objects in the quantale: x⊸z and z⟜x.
struct QuantaleResiduals {
  std::optional<int> lolli, llol;
};
QuantaleResiduals residuals(const Quantale& q, int x, int z);

// Exhaustive (or sampled when n³ exceeds the budget) axiom checks: partial
// order, monotone associative unital tensor, residuals, dualizing element and
// both linear distributivity inequalities.
std::vector<SuiteResult> validate_quantale(const Quantale& q, long triple_budget, std::uint64_t seed);

// Resolve builtin shorthands: rel:N, 2prof:chain2|chain3|discrete2|discrete3|vee|wedge,
// z:N[:d], s3:<element>, l3, bool.
std::shared_ptr<Quantale> builtin_quantale(const std::string& spec);
std::vector<std::string> builtin_quantale_names();

struct ParseError : std::runtime_error {
  int line, column;
  ParseError(int l, int c, const std::string& msg)
      : std::runtime_error(std::to_string(l) + ":" + std::to_string(c) + ": " + msg), line(l), column(c) {}
};

// Line-oriented quantale description:
//   elements a b c ...
//   order a b          (a ≤ b; reflexive-transitive closure is taken)
//   row a: x y z ...   (a⊗b for b in element order)
//   unit a
//   dualizer a
// '#' starts a comment.
std::shared_ptr<TableQuantale> parse_quantale(const std::string& text, const std::string& source_name);
std::shared_ptr<Quantale> load_quantale(const std::string& spec_or_path);

}  // namespace staut
