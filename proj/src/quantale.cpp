#include "staut/quantale.hpp"

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace staut {

std::optional<int> Quantale::lres(int a, int b) const {
  std::vector<int> sols;
  for (int x = 0; x < size(); ++x)
    if (leq(tensor(a, x), b)) sols.push_back(x);
  for (int x : sols)
    if (std::all_of(sols.begin(), sols.end(), [&](int y) { return leq(y, x); })) return x;
  return std::nullopt;
}

std::optional<int> Quantale::rres(int b, int a) const {
  std::vector<int> sols;
  for (int x = 0; x < size(); ++x)
    if (leq(tensor(x, a), b)) sols.push_back(x);
  for (int x : sols)
    if (std::all_of(sols.begin(), sols.end(), [&](int y) { return leq(y, x); })) return x;
  return std::nullopt;
}

void Quantale::prepare() {
  const int n = size();
  rdual_.assign(static_cast<std::size_t>(n), -1);
  ldual_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    rdual_[static_cast<std::size_t>(a)] = lres(a, dualizer()).value_or(-1);
    ldual_[static_cast<std::size_t>(a)] = rres(dualizer(), a).value_or(-1);
  }
}

int Quantale::rdual(int a) const {
  int r = rdual_.at(static_cast<std::size_t>(a));
  if (r < 0) throw QuantaleError(describe() + ": no largest ξ with " + element_name(a) + "⊗ξ ≤ d0");
  return r;
}

int Quantale::ldual(int a) const {
  int r = ldual_.at(static_cast<std::size_t>(a));
  if (r < 0) throw QuantaleError(describe() + ": no largest ξ with ξ⊗" + element_name(a) + " ≤ d0");
  return r;
}

std::optional<int> Quantale::find(const std::string& name) const {
  for (int a = 0; a < size(); ++a)
    if (element_name(a) == name) return a;
  return std::nullopt;
}

TableQuantale::TableQuantale(std::string description, std::vector<std::string> names,
                             std::vector<std::vector<bool>> leq, std::vector<std::vector<int>> table, int unit,
                             int dualizer)
    : description_(std::move(description)),
      names_(std::move(names)),
      leq_(std::move(leq)),
      table_(std::move(table)),
      unit_(unit),
      dualizer_(dualizer) {
  const std::size_t n = names_.size();
  if (n == 0) throw QuantaleError(description_ + ": no elements");
  if (leq_.size() != n || table_.size() != n) throw QuantaleError(description_ + ": table shape mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (leq_[i].size() != n || table_[i].size() != n) throw QuantaleError(description_ + ": table shape mismatch");
    for (int v : table_[i])
      if (v < 0 || v >= static_cast<int>(n)) throw QuantaleError(description_ + ": tensor value out of range");
  }
  if (unit_ < 0 || unit_ >= static_cast<int>(n) || dualizer_ < 0 || dualizer_ >= static_cast<int>(n))
    throw QuantaleError(description_ + ": unit or dualizer out of range");
  prepare();
}

// ---------------------------------------------------------------------------
// Relations

RelMask rel_compose(int n, RelMask a, RelMask b) {
  const RelMask row = (RelMask{1} << n) - 1;
  RelMask out = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a >> (i * n + j) & 1) out |= ((b >> (j * n)) & row) << (i * n);
  return out;
}

RelMask rel_reverse(int n, RelMask a) {
  RelMask out = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a >> (i * n + j) & 1) out |= RelMask{1} << (j * n + i);
  return out;
}

RelMask rel_complement(int n, RelMask a) {
  const RelMask full = n * n == 32 ? ~RelMask{0} : (RelMask{1} << (n * n)) - 1;
  return ~a & full;
}

RelMask rel_diagonal(int n) {
  RelMask out = 0;
  for (int i = 0; i < n; ++i) out |= RelMask{1} << (i * n + i);
  return out;
}

std::string rel_name(int n, RelMask a) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a >> (i * n + j) & 1) {
        if (!first) s += ",";
        s += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        first = false;
      }
  return s + "}";
}

RelQuantale::RelQuantale(std::string description, int n, std::vector<RelMask> elements, RelMask unit,
                         RelMask dualizer, bool all_relations)
    : description_(std::move(description)), n_(n), all_(all_relations), masks_(std::move(elements)) {
  std::sort(masks_.begin(), masks_.end());
  index_.assign(std::size_t{1} << (n * n), -1);
  for (std::size_t i = 0; i < masks_.size(); ++i) index_[masks_[i]] = static_cast<int>(i);
  unit_ = index(unit);
  dualizer_ = index(dualizer);
  prepare();
}

int RelQuantale::index(RelMask m) const {
  int i = index_.at(m);
  if (i < 0) throw QuantaleError(description_ + ": relation " + rel_name(n_, m) + " is not an element");
  return i;
}

// Composition distributes over unions, so the largest solution is the union
// of all solutions among a join-generating family: atoms for Rel(n), the
// whole carrier for filtered families.
std::optional<int> RelQuantale::lres(int a, int b) const {
  const RelMask ma = mask(a), mb = mask(b);
  RelMask u = 0;
  if (all_) {
    for (int k = 0; k < n_ * n_; ++k)
      if ((rel_compose(n_, ma, RelMask{1} << k) & ~mb) == 0) u |= RelMask{1} << k;
  } else {
    for (RelMask x : masks_)
      if ((rel_compose(n_, ma, x) & ~mb) == 0) u |= x;
  }
  if (index_.at(u) < 0 || (rel_compose(n_, ma, u) & ~mb) != 0) return std::nullopt;
  return index_.at(u);
}

std::optional<int> RelQuantale::rres(int b, int a) const {
  const RelMask ma = mask(a), mb = mask(b);
  RelMask u = 0;
  if (all_) {
    for (int k = 0; k < n_ * n_; ++k)
      if ((rel_compose(n_, RelMask{1} << k, ma) & ~mb) == 0) u |= RelMask{1} << k;
  } else {
    for (RelMask x : masks_)
      if ((rel_compose(n_, x, ma) & ~mb) == 0) u |= x;
  }
  if (index_.at(u) < 0 || (rel_compose(n_, u, ma) & ~mb) != 0) return std::nullopt;
  return index_.at(u);
}

std::shared_ptr<RelQuantale> build_rel_quantale(int n) {
  if (n < 1 || n > 4) throw QuantaleError("rel:" + std::to_string(n) + ": set size must be in 1..4");
  std::vector<RelMask> all(std::size_t{1} << (n * n));
  std::iota(all.begin(), all.end(), RelMask{0});
  RelMask diag = rel_diagonal(n);
  return std::make_shared<RelQuantale>("Rel(" + std::to_string(n) + ")", n, std::move(all), diag,
                                       rel_complement(n, diag), true);
}

namespace {

RelMask poset_mask(const Poset& p) {
  int n = static_cast<int>(p.size());
  RelMask m = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p[i][j]) m |= RelMask{1} << (i * n + j);
  return m;
}

}  // namespace

std::vector<Poset> all_posets(int n) {
  std::vector<Poset> out;
  const int pairs = n * (n - 1);
  std::vector<std::pair<int, int>> offdiag;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) offdiag.emplace_back(i, j);
  for (long bits = 0; bits < (1L << pairs); ++bits) {
    Poset p(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int i = 0; i < n; ++i) p[i][i] = true;
    for (int k = 0; k < pairs; ++k)
      if (bits >> k & 1) p[offdiag[k].first][offdiag[k].second] = true;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        if (i != j && p[i][j] && p[j][i]) ok = false;
        for (int k = 0; k < n && ok; ++k)
          if (p[i][j] && p[j][k] && !p[i][k]) ok = false;
      }
    if (ok) out.push_back(std::move(p));
  }
  return out;
}

std::string poset_name(const Poset& p) {
  std::string s = "P" + std::to_string(p.size()) + "[";
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (i != j && p[i][j]) {
        if (!first) s += ",";
        s += std::to_string(i) + "<" + std::to_string(j);
        first = false;
      }
  return s + "]";
}

std::shared_ptr<RelQuantale> build_two_profunctor_quantale(const Poset& p) {
  const int n = static_cast<int>(p.size());
  if (n < 1 || n > 3) throw QuantaleError("2-valued profunctors: poset size must be in 1..3");
  const RelMask le = poset_mask(p);
  std::vector<RelMask> elems;
  for (RelMask w = 0; w < (RelMask{1} << (n * n)); ++w)
    if ((rel_compose(n, rel_compose(n, le, w), le) & ~w) == 0) elems.push_back(w);
  // dualizer ≱: (i,j) with not j ≤ i
  RelMask d0 = rel_complement(n, rel_reverse(n, le));
  return std::make_shared<RelQuantale>("2Prof(" + poset_name(p) + ")", n, std::move(elems), le, d0, false);
}

// ---------------------------------------------------------------------------
// Pointed groups and small tables

std::shared_ptr<TableQuantale> build_pointed_group(std::string description, std::vector<std::string> names,
                                                   std::vector<std::vector<int>> mul, std::optional<Poset> order,
                                                   int dualizer) {
  const std::size_t n = names.size();
  Poset le = order.value_or(Poset(n, std::vector<bool>(n, false)));
  if (!order)
    for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
  int unit = -1;
  for (std::size_t u = 0; u < n && unit < 0; ++u) {
    bool ok = true;
    for (std::size_t x = 0; x < n; ++x) ok = ok && mul[u][x] == static_cast<int>(x) && mul[x][u] == static_cast<int>(x);
    if (ok) unit = static_cast<int>(u);
  }
  if (unit < 0) throw QuantaleError(description + ": multiplication has no neutral element");
  // Compatibility: a ≤ b implies ca ≤ cb and ac ≤ bc.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (le[a][b])
        for (std::size_t c = 0; c < n; ++c)
          if (!le[mul[c][a]][mul[c][b]] || !le[mul[a][c]][mul[b][c]])
            throw QuantaleError(description + ": order is not compatible with multiplication at " + names[a] +
                                " ≤ " + names[b] + " and " + names[c]);
  return std::make_shared<TableQuantale>(std::move(description), std::move(names), std::move(le), std::move(mul),
                                         unit, dualizer);
}

std::shared_ptr<TableQuantale> build_cyclic_group(int n, int dualizer) {
  if (n < 1 || dualizer < 0 || dualizer >= n) throw QuantaleError("cyclic group: bad order or dualizer");
  std::vector<std::string> names;
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    for (int j = 0; j < n; ++j) mul[i][j] = (i + j) % n;
  }
  return build_pointed_group("Z" + std::to_string(n) + " pointed at " + std::to_string(dualizer), names, mul,
                             std::nullopt, dualizer);
}

namespace {

using Perm = std::array<int, 3>;

const std::vector<Perm>& s3_perms() {
  static const std::vector<Perm> perms = {
      Perm{0, 1, 2}, Perm{1, 0, 2}, Perm{2, 1, 0}, Perm{0, 2, 1}, Perm{1, 2, 0}, Perm{2, 0, 1}};
  return perms;
}

int s3_index(const Perm& p) {
  const auto& ps = s3_perms();
  return static_cast<int>(std::find(ps.begin(), ps.end(), p) - ps.begin());
}

// (g·h)(x) = g(h(x))
Perm s3_mul(const Perm& g, const Perm& h) { return {g[h[0]], g[h[1]], g[h[2]]}; }

}  // namespace

std::vector<std::string> s3_names() { return {"id", "(01)", "(02)", "(12)", "(012)", "(021)"}; }

bool s3_central(int g) {
  const auto& ps = s3_perms();
  for (const Perm& h : ps)
    if (s3_mul(ps[g], h) != s3_mul(h, ps[g])) return false;
  return true;
}

std::shared_ptr<TableQuantale> build_s3(int dualizer) {
  const auto& ps = s3_perms();
  std::vector<std::vector<int>> mul(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) mul[i][j] = s3_index(s3_mul(ps[i], ps[j]));
  auto names = s3_names();
  return build_pointed_group("S3 pointed at " + names.at(static_cast<std::size_t>(dualizer)), names, mul, std::nullopt,
                             dualizer);
}

std::shared_ptr<TableQuantale> build_lukasiewicz3() {
  std::vector<std::vector<bool>> le(3, std::vector<bool>(3));
  std::vector<std::vector<int>> t(3, std::vector<int>(3));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      le[a][b] = a <= b;
      t[a][b] = std::max(0, a + b - 2);
    }
  return std::make_shared<TableQuantale>("Lukasiewicz 3-chain", std::vector<std::string>{"0", "1/2", "1"}, le, t, 2,
                                         0);
}

std::shared_ptr<TableQuantale> build_bool() {
  return std::make_shared<TableQuantale>("Bool", std::vector<std::string>{"0", "1"},
                                         std::vector<std::vector<bool>>{{true, true}, {false, true}},
                                         std::vector<std::vector<int>>{{0, 0}, {0, 1}}, 1, 0);
}

CyclicVerdict is_cyclic(const Quantale& q) {
  for (int a = 0; a < q.size(); ++a)
    if (q.rdual(a) != q.ldual(a)) return {false, a};
  return {};
}

QuantaleResiduals residuals(const Quantale& q, int x, int z) { return {q.lres(x, z), q.rres(z, x)}; }

// ---------------------------------------------------------------------------
// Validation

std::vector<SuiteResult> validate_quantale(const Quantale& q, long triple_budget, std::uint64_t seed) {
  const int n = q.size();
  const long cube = static_cast<long>(n) * n * n;
  const bool exhaustive = cube <= triple_budget;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  auto each_triple = [&](auto&& f) {
    if (exhaustive) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) f(a, b, c);
    } else {
      for (long k = 0; k < triple_budget; ++k) {
        int a = pick(rng), b = pick(rng), c = pick(rng);
        f(a, b, c);
      }
    }
  };
  auto nm = [&](int a) { return q.element_name(a); };
  std::string scope = exhaustive ? " (exhaustive)" : " (sampled)";

  std::vector<SuiteResult> out;
  SuiteResult order{"partial order" + scope};
  for (int a = 0; a < n; ++a) {
    ++order.checks;
    if (!q.leq(a, a)) order.fail("not reflexive at " + nm(a));
  }
  each_triple([&](int a, int b, int c) {
    ++order.checks;
    if (a != b && q.leq(a, b) && q.leq(b, a)) order.fail("not antisymmetric at " + nm(a) + ", " + nm(b));
    if (q.leq(a, b) && q.leq(b, c) && !q.leq(a, c)) order.fail("not transitive at " + nm(a) + ", " + nm(b) + ", " + nm(c));
  });
  out.push_back(order);

  SuiteResult mono{"tensor monotone, associative, unital" + scope};
  for (int a = 0; a < n; ++a) {
    ++mono.checks;
    if (q.tensor(q.unit(), a) != a || q.tensor(a, q.unit()) != a) mono.fail("unit law fails at " + nm(a));
  }
  each_triple([&](int a, int b, int c) {
    ++mono.checks;
    if (q.tensor(q.tensor(a, b), c) != q.tensor(a, q.tensor(b, c)))
      mono.fail("associativity fails at " + nm(a) + ", " + nm(b) + ", " + nm(c));
    if (q.leq(a, b) && (!q.leq(q.tensor(a, c), q.tensor(b, c)) || !q.leq(q.tensor(c, a), q.tensor(c, b))))
      mono.fail("monotonicity fails at " + nm(a) + " ≤ " + nm(b) + " with " + nm(c));
  });
  out.push_back(mono);

  SuiteResult dual{"negations exist and are involutive"};
  bool have_duals = true;
  for (int a = 0; a < n; ++a) {
    ++dual.checks;
    try {
      if (q.rdual(q.ldual(a)) != a || q.ldual(q.rdual(a)) != a) dual.fail("⊥ᵖα = α = ᵖ⊥α fails at " + nm(a));
      if (!q.leq(q.tensor(a, q.rdual(a)), q.dualizer()) || !q.leq(q.tensor(q.ldual(a), a), q.dualizer()))
        dual.fail("counit inequality fails at " + nm(a));
    } catch (const QuantaleError& e) {
      dual.fail(e.what());
      have_duals = false;
    }
  }
  out.push_back(dual);

  // Residual search is linear in n, so pairs get a smaller budget.
  const long pair_budget = std::max(1L, triple_budget / 64);
  const bool all_pairs = static_cast<long>(n) * n <= pair_budget;
  SuiteResult res{std::string("residuals") + (all_pairs ? " (exhaustive)" : " (sampled)")};
  auto res_check = [&](int a, int b) {
    ++res.checks;
    if (!q.lres(a, b) || !q.rres(b, a)) res.fail("no residual for " + nm(a) + " into " + nm(b));
  };
  if (all_pairs) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) res_check(a, b);
  } else {
    for (long k = 0; k < pair_budget; ++k) {
      int a = pick(rng), b = pick(rng);
      res_check(a, b);
    }
  }
  out.push_back(res);

  SuiteResult dist{"linear distributivity" + scope};
  if (have_duals) {
    each_triple([&](int a, int b, int c) {
      ++dist.checks;
      if (!q.leq(q.tensor(a, q.par(b, c)), q.par(q.tensor(a, b), c)))
        dist.fail("a⊗(b⅋c) ≰ (a⊗b)⅋c at " + nm(a) + ", " + nm(b) + ", " + nm(c));
      if (!q.leq(q.tensor(q.par(a, b), c), q.par(a, q.tensor(b, c))))
        dist.fail("(a⅋b)⊗c ≰ a⅋(b⊗c) at " + nm(a) + ", " + nm(b) + ", " + nm(c));
    });
  } else {
    dist.fail("skipped: negations missing");
  }
  out.push_back(dist);
  return out;
}

// ---------------------------------------------------------------------------
// Builtins and files

namespace {

Poset named_poset(const std::string& name) {
  auto chain = [](int n) {
    Poset p(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) p[i][j] = i <= j;
    return p;
  };
  auto discrete = [](int n) {
    Poset p(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) p[i][i] = true;
    return p;
  };
  if (name == "chain1" || name == "discrete1") return discrete(1);
  if (name == "chain2") return chain(2);
  if (name == "chain3") return chain(3);
  if (name == "discrete2") return discrete(2);
  if (name == "discrete3") return discrete(3);
  if (name == "vee") {
    Poset p = discrete(3);
    p[0][1] = p[0][2] = true;
    return p;
  }
  if (name == "wedge") {
    Poset p = discrete(3);
    p[1][0] = p[2][0] = true;
    return p;
  }
  throw QuantaleError("unknown poset '" + name + "'");
}

int parse_int(const std::string& s, const std::string& ctx) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw QuantaleError(ctx + ": expected an integer, got '" + s + "'");
}

}  // namespace

std::vector<std::string> builtin_quantale_names() {
  return {"bool",          "l3",           "rel:1",         "rel:2",       "rel:3",      "rel:4",
          "2prof:chain2",  "2prof:chain3", "2prof:discrete2", "2prof:discrete3", "2prof:vee", "2prof:wedge",
          "z6:0",          "zN:k",         "s3:id",         "s3:t",        "s3:c",       "s3:<element>"};
}

std::shared_ptr<Quantale> builtin_quantale(const std::string& spec) {
  auto unknown = [&]() {
    std::string list;
    for (const auto& n : builtin_quantale_names()) list += (list.empty() ? "" : ", ") + n;
    return QuantaleError("unknown builtin quantale '" + spec + "'; available: " + list);
  };
  if (spec == "bool" || spec == "2") return build_bool();
  if (spec == "l3") return build_lukasiewicz3();
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw unknown();
  std::string head = spec.substr(0, colon), arg = spec.substr(colon + 1);
  if (head == "rel") return build_rel_quantale(parse_int(arg, spec));
  if (head == "2prof") {
    try {
      return build_two_profunctor_quantale(named_poset(arg));
    } catch (const QuantaleError&) {
      throw unknown();
    }
  }
  if (head == "s3") {
    auto names = s3_names();
    if (arg == "e" || arg == "id") return build_s3(0);
    if (arg == "t") return build_s3(1);
    if (arg == "c") return build_s3(4);
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == arg) return build_s3(static_cast<int>(i));
    throw unknown();
  }
  if (head.size() > 1 && head[0] == 'z') return build_cyclic_group(parse_int(head.substr(1), spec), parse_int(arg, spec));
  throw unknown();
}

std::shared_ptr<TableQuantale> parse_quantale(const std::string& text, const std::string& source_name) {
  struct Tok {
    std::string s;
    int col;
  };
  std::vector<std::string> names;
  std::map<std::string, int> idx;
  std::vector<std::pair<int, int>> order_pairs;
  std::map<int, std::vector<int>> rows;
  std::optional<int> unit, dualizer;
  int elements_line = 0;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto lookup = [&](const Tok& t, int ln) {
    auto it = idx.find(t.s);
    if (it == idx.end()) throw ParseError(ln, t.col, "unknown element '" + t.s + "'");
    return it->second;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::vector<Tok> toks;
    for (std::size_t i = 0; i < line.size();) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      toks.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
      i = j;
    }
    if (toks.empty()) continue;
    const std::string& kw = toks[0].s;
    auto expect_args = [&](std::size_t k) {
      if (toks.size() != k + 1)
        throw ParseError(lineno, toks.size() > k + 1 ? toks[k + 1].col : static_cast<int>(line.size()) + 1,
                         "'" + kw + "' takes " + std::to_string(k) + " argument(s)");
    };
    if (kw == "elements") {
      if (elements_line) throw ParseError(lineno, toks[0].col, "elements already declared on line " + std::to_string(elements_line));
      if (toks.size() < 2) throw ParseError(lineno, static_cast<int>(line.size()) + 1, "expected element names");
      elements_line = lineno;
      for (std::size_t k = 1; k < toks.size(); ++k) {
        if (idx.count(toks[k].s)) throw ParseError(lineno, toks[k].col, "duplicate element '" + toks[k].s + "'");
        idx[toks[k].s] = static_cast<int>(names.size());
        names.push_back(toks[k].s);
      }
      continue;
    }
    if (!elements_line) throw ParseError(lineno, toks[0].col, "'elements' must come first");
    if (kw == "order") {
      expect_args(2);
      order_pairs.emplace_back(lookup(toks[1], lineno), lookup(toks[2], lineno));
    } else if (kw == "row") {
      if (toks.size() < 2 || toks[1].s.empty() || toks[1].s.back() != ':')
        throw ParseError(lineno, toks.size() > 1 ? toks[1].col : static_cast<int>(line.size()) + 1,
                         "expected 'row <element>:'");
      Tok head{toks[1].s.substr(0, toks[1].s.size() - 1), toks[1].col};
      int a = lookup(head, lineno);
      if (rows.count(a)) throw ParseError(lineno, toks[1].col, "duplicate row for '" + head.s + "'");
      if (toks.size() - 2 != names.size())
        throw ParseError(lineno, toks.back().col, "row has " + std::to_string(toks.size() - 2) + " entries, expected " +
                                                      std::to_string(names.size()));
      std::vector<int> r;
      for (std::size_t k = 2; k < toks.size(); ++k) r.push_back(lookup(toks[k], lineno));
      rows[a] = std::move(r);
    } else if (kw == "unit") {
      expect_args(1);
      unit = lookup(toks[1], lineno);
    } else if (kw == "dualizer") {
      expect_args(1);
      dualizer = lookup(toks[1], lineno);
    } else {
      throw ParseError(lineno, toks[0].col, "unknown directive '" + kw + "'");
    }
  }
  const int end_line = lineno + 1;
  if (!elements_line) throw ParseError(end_line, 1, "missing 'elements'");
  if (!unit) throw ParseError(end_line, 1, "missing 'unit'");
  if (!dualizer) throw ParseError(end_line, 1, "missing 'dualizer'");
  const std::size_t n = names.size();
  for (std::size_t a = 0; a < n; ++a)
    if (!rows.count(static_cast<int>(a))) throw ParseError(end_line, 1, "missing row for '" + names[a] + "'");
  Poset le(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
  for (auto [a, b] : order_pairs) le[a][b] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (le[i][k] && le[k][j]) le[i][j] = true;
  std::vector<std::vector<int>> table;
  for (std::size_t a = 0; a < n; ++a) table.push_back(rows[static_cast<int>(a)]);
  return std::make_shared<TableQuantale>(source_name, names, le, table, *unit, *dualizer);
}

std::shared_ptr<Quantale> load_quantale(const std::string& spec_or_path) {
  namespace fs = std::filesystem;
  if (fs::is_regular_file(spec_or_path)) {
    std::ifstream f(spec_or_path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_quantale(ss.str(), fs::path(spec_or_path).filename().string());
  }
  return builtin_quantale(spec_or_path);
}

}  // namespace staut
