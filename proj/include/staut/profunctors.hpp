#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "staut/cyclicity.hpp"
#include "staut/quantale.hpp"

namespace staut {

class ProfError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A category enriched in a finite quantale: hom[a][b] is an element of V.
struct VCat {
  std::shared_ptr<const Quantale> v;
  std::string name;
  std::vector<std::string> objects;
  std::vector<std::vector<int>> hom;
  int size() const { return static_cast<int>(objects.size()); }
};
using VCatRef = std::shared_ptr<const VCat>;

// Identity homs are the unit and all others the bottom element.
VCatRef discrete_vcat(std::shared_ptr<const Quantale> v, int n);
// A poset viewed as a Bool-category.
VCatRef poset_vcat(const Poset& p);
// e ≤ hom(a,a) and hom(a,b)⊗hom(b,c) ≤ hom(a,c).
SuiteResult check_vcat(const VCat& c);

// A profunctor src ⇸ dst with values val[q][r] for q in src, r in dst.
struct VProf {
  VCatRef src, dst;
  std::vector<std::vector<int>> val;
  bool operator==(const VProf& o) const { return src == o.src && dst == o.dst && val == o.val; }
};

// Least upper / greatest lower bound of a family in V, by brute force. The
// empty join is the bottom and the empty meet the top.
int v_join(const Quantale& v, const std::vector<int>& xs);
int v_meet(const Quantale& v, const std::vector<int>& xs);

VProf id_prof(const VCatRef& c);
// The dualizer d(q,r) = ⊥hom(r,q).
VProf d_prof(const VCatRef& c);
// hom_src(p,q)⊗f(q,r) ≤ f(p,r) and f(q,r)⊗hom_dst(r,s) ≤ f(q,s).
SuiteResult check_prof_actions(const VProf& f);
bool prof_leq(const VProf& f, const VProf& g);

// (f⊗g)(q,s) = ⋁_r f(q,r)⊗g(r,s); (f⅋g)(q,s) = ⋀_r f(q,r)⅋g(r,s).
VProf compose_prof(const VProf& f, const VProf& g);
VProf par_prof(const VProf& f, const VProf& g);

enum class Side { Right, Left };
// (⊥f)(q,r) = ⊥f(r,q) and (ᵖf)(q,r) = ᵖf(r,q). Throws ProfError naming a
// non-cyclic element of V when the result fails an action inequality.
VProf dual_prof(const VProf& f, Side side);

struct ProfEnumeration {
  std::vector<VProf> profs;
  bool exhaustive = true;
  std::uint64_t candidates = 0;  // value matrices examined
  long cap = 0;
};
// Every valid profunctor c ⇸ c when |V|^(|c|²) ≤ 65536, otherwise valid
// profunctors among `cap` seeded random value matrices.
ProfEnumeration enumerate_profs(const VCatRef& c, long cap = 4096, std::uint64_t seed = 1);
constexpr std::uint64_t kExhaustiveProfLimit = 65536;

// Prof_V(c,c) as a quantale under compose_prof, id_prof and d_prof; its
// negations are computed by residuation and compared with dual_prof.
struct ProfQuantale {
  std::shared_ptr<TableQuantale> quantale;
  std::vector<VProf> elements;
  int index_of(const VProf& f) const;
};
ProfQuantale build_prof_quantale(const VCatRef& c);

struct ProfStautReport {
  std::string label;
  ProfEnumeration enumeration;
  std::vector<SuiteResult> suites;
  std::optional<AxiomProfile> cycle_profile;  // exhaustive case: identity cycle on the thin model
  bool pass() const;
};
// Pointwise staut laws over enumerated profunctors (triples sampled beyond
// `triple_budget`) and, when exhaustive with at most kTabulateProfLimit
// profunctors, the full thin-model suites on the tabulated quantale.
constexpr std::size_t kTabulateProfLimit = 512;
ProfStautReport check_prof_staut(const VCatRef& c, long cap = 4096, long triple_budget = 20000,
                                 std::uint64_t seed = 1);

// Prof_2(c,c) for c discrete of size 2 is isomorphic to Rel(2).
SuiteResult check_rel2_isomorphism();
// ⊥f = ¬f^rev = ᵖf for every Bool-profunctor over every poset with at most max_n points.
SuiteResult check_bool_profunctor_negation(int max_n);

// The two arrows ⊥y ⊗ a → ⊥x built from an action α: a⊗x → y, one through
// ν_y and ν_x⁻¹ and one through ν_a, compared exactly; also checks the
// equivalent single-strand form ν_y;ᵖα;φ = ⊥α;φ;(ν_x⅋ν_a).
SuiteResult check_contraposition_agreement(const CycleData& c, const std::vector<Mor>& actions);
Mor contraposition_via_ends(const CycleData& c, const Mor& alpha, ObjRef a, ObjRef x);
Mor contraposition_via_action(const CycleData& c, const Mor& alpha, ObjRef a, ObjRef x);
// Random integer matrices a⊗x → y on a linear backend without module constraints.
std::vector<Mor> random_actions(const LinearModel& m, ObjRef a, ObjRef x, ObjRef y, int count, std::uint64_t seed);

// Line-oriented VCat description:
//   quantale <builtin or path>
//   objects a b ...
//   row a: h(a,a) h(a,b) ...   (element names of V)
VCatRef parse_vcat(const std::string& text, const std::string& source_name);
VCatRef load_vcat(const std::string& path);

}  // namespace staut
