#include "staut/profunctors.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "staut/linear.hpp"
#include "staut/thin_model.hpp"

namespace staut {

namespace {

int bottom(const Quantale& v) { return v_join(v, {}); }

std::string prof_str(const VProf& f) {
  const Quantale& v = *f.src->v;
  std::ostringstream os;
  os << "[";
  for (std::size_t q = 0; q < f.val.size(); ++q) {
    if (q) os << "; ";
    for (std::size_t r = 0; r < f.val[q].size(); ++r) os << (r ? " " : "") << v.element_name(f.val[q][r]);
  }
  os << "]";
  return os.str();
}

void require_composable(const VProf& f, const VProf& g, const char* what) {
  if (f.dst != g.src) throw ProfError(std::string(what) + ": target of the first profunctor is not the source of the second");
}

}  // namespace

int v_join(const Quantale& v, const std::vector<int>& xs) {
  for (int u = 0; u < v.size(); ++u) {
    bool upper = std::all_of(xs.begin(), xs.end(), [&](int x) { return v.leq(x, u); });
    if (!upper) continue;
    bool least = true;
    for (int w = 0; w < v.size() && least; ++w)
      if (std::all_of(xs.begin(), xs.end(), [&](int x) { return v.leq(x, w); }) && !v.leq(u, w)) least = false;
    if (least) return u;
  }
  throw ProfError("V has no join for a family; it is not a complete lattice");
}

int v_meet(const Quantale& v, const std::vector<int>& xs) {
  for (int l = 0; l < v.size(); ++l) {
    bool lower = std::all_of(xs.begin(), xs.end(), [&](int x) { return v.leq(l, x); });
    if (!lower) continue;
    bool greatest = true;
    for (int w = 0; w < v.size() && greatest; ++w)
      if (std::all_of(xs.begin(), xs.end(), [&](int x) { return v.leq(w, x); }) && !v.leq(w, l)) greatest = false;
    if (greatest) return l;
  }
  throw ProfError("V has no meet for a family; it is not a complete lattice");
}

VCatRef discrete_vcat(std::shared_ptr<const Quantale> v, int n) {
  auto c = std::make_shared<VCat>();
  c->name = "discrete " + std::to_string(n) + " over " + v->describe();
  const int bot = bottom(*v);
  for (int a = 0; a < n; ++a) c->objects.push_back(std::string(1, static_cast<char>('a' + a)));
  c->hom.assign(n, std::vector<int>(n, bot));
  for (int a = 0; a < n; ++a) c->hom[a][a] = v->unit();
  c->v = std::move(v);
  return c;
}

VCatRef poset_vcat(const Poset& p) {
  auto c = std::make_shared<VCat>();
  auto b = build_bool();
  c->name = "poset " + poset_name(p);
  const int n = static_cast<int>(p.size());
  for (int a = 0; a < n; ++a) c->objects.push_back(std::to_string(a));
  c->hom.assign(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x) c->hom[a][x] = p[a][x] ? b->unit() : bottom(*b);
  c->v = std::move(b);
  return c;
}

SuiteResult check_vcat(const VCat& c) {
  SuiteResult r("enriched category laws");
  const Quantale& v = *c.v;
  const int n = c.size();
  for (int a = 0; a < n; ++a) {
    ++r.checks;
    if (!v.leq(v.unit(), c.hom[a][a])) r.fail("e ≰ hom(" + c.objects[a] + "," + c.objects[a] + ")");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int x = 0; x < n; ++x) {
        ++r.checks;
        if (!v.leq(v.tensor(c.hom[a][b], c.hom[b][x]), c.hom[a][x]))
          r.fail("composition fails at " + c.objects[a] + "," + c.objects[b] + "," + c.objects[x]);
      }
  return r;
}

VProf id_prof(const VCatRef& c) { return VProf{c, c, c->hom}; }

VProf d_prof(const VCatRef& c) {
  VProf f{c, c, c->hom};
  for (int q = 0; q < c->size(); ++q)
    for (int r = 0; r < c->size(); ++r) f.val[q][r] = c->v->rdual(c->hom[r][q]);
  return f;
}

SuiteResult check_prof_actions(const VProf& f) {
  SuiteResult r("profunctor actions");
  const Quantale& v = *f.src->v;
  const int ns = f.src->size(), nd = f.dst->size();
  for (int p = 0; p < ns; ++p)
    for (int q = 0; q < ns; ++q)
      for (int x = 0; x < nd; ++x) {
        ++r.checks;
        if (!v.leq(v.tensor(f.src->hom[p][q], f.val[q][x]), f.val[p][x]))
          r.fail("left action fails for " + prof_str(f) + " at " + f.src->objects[p] + "," + f.src->objects[q] + "," +
                 f.dst->objects[x]);
      }
  for (int q = 0; q < ns; ++q)
    for (int x = 0; x < nd; ++x)
      for (int s = 0; s < nd; ++s) {
        ++r.checks;
        if (!v.leq(v.tensor(f.val[q][x], f.dst->hom[x][s]), f.val[q][s]))
          r.fail("right action fails for " + prof_str(f) + " at " + f.src->objects[q] + "," + f.dst->objects[x] + "," +
                 f.dst->objects[s]);
      }
  return r;
}

bool prof_leq(const VProf& f, const VProf& g) {
  const Quantale& v = *f.src->v;
  for (std::size_t q = 0; q < f.val.size(); ++q)
    for (std::size_t r = 0; r < f.val[q].size(); ++r)
      if (!v.leq(f.val[q][r], g.val[q][r])) return false;
  return true;
}

VProf compose_prof(const VProf& f, const VProf& g) {
  require_composable(f, g, "compose");
  const Quantale& v = *f.src->v;
  VProf out{f.src, g.dst, std::vector<std::vector<int>>(f.src->size(), std::vector<int>(g.dst->size()))};
  std::vector<int> terms;
  for (int q = 0; q < f.src->size(); ++q)
    for (int s = 0; s < g.dst->size(); ++s) {
      terms.clear();
      for (int r = 0; r < f.dst->size(); ++r) terms.push_back(v.tensor(f.val[q][r], g.val[r][s]));
      out.val[q][s] = v_join(v, terms);
    }
  return out;
}

VProf par_prof(const VProf& f, const VProf& g) {
  require_composable(f, g, "par");
  const Quantale& v = *f.src->v;
  VProf out{f.src, g.dst, std::vector<std::vector<int>>(f.src->size(), std::vector<int>(g.dst->size()))};
  std::vector<int> terms;
  for (int q = 0; q < f.src->size(); ++q)
    for (int s = 0; s < g.dst->size(); ++s) {
      terms.clear();
      for (int r = 0; r < f.dst->size(); ++r) terms.push_back(v.par(f.val[q][r], g.val[r][s]));
      out.val[q][s] = v_meet(v, terms);
    }
  return out;
}

VProf dual_prof(const VProf& f, Side side) {
  const Quantale& v = *f.src->v;
  VProf out{f.dst, f.src, std::vector<std::vector<int>>(f.dst->size(), std::vector<int>(f.src->size()))};
  for (int q = 0; q < f.dst->size(); ++q)
    for (int r = 0; r < f.src->size(); ++r)
      out.val[q][r] = side == Side::Right ? v.rdual(f.val[r][q]) : v.ldual(f.val[r][q]);
  SuiteResult acts = check_prof_actions(out);
  if (!acts.pass) {
    CyclicVerdict cv = is_cyclic(v);
    std::string why = cv.cyclic ? "" : "; V is not cyclic at " + v.element_name(cv.witness);
    throw ProfError(std::string(side == Side::Right ? "⊥" : "ᵖ") + prof_str(f) + " is not a profunctor: " +
                    acts.witness + why);
  }
  return out;
}

ProfEnumeration enumerate_profs(const VCatRef& c, long cap, std::uint64_t seed) {
  ProfEnumeration out;
  out.cap = cap;
  const int n = c->size();
  const std::size_t cells = static_cast<std::size_t>(n) * n;
  const int vs = c->v->size();
  std::uint64_t total = 1;
  bool small = true;
  for (std::size_t k = 0; k < cells && small; ++k) {
    total *= static_cast<std::uint64_t>(vs);
    if (total > kExhaustiveProfLimit) small = false;
  }
  auto unflatten = [&](const std::vector<int>& cellv) {
    VProf f{c, c, std::vector<std::vector<int>>(n, std::vector<int>(n))};
    for (std::size_t k = 0; k < cells; ++k) f.val[k / n][k % n] = cellv[k];
    return f;
  };
  if (small) {
    out.exhaustive = true;
    std::vector<int> digits(cells, 0);
    for (std::uint64_t i = 0; i < total; ++i) {
      std::uint64_t x = i;
      for (std::size_t k = 0; k < cells; ++k) {
        digits[cells - 1 - k] = static_cast<int>(x % vs);
        x /= vs;
      }
      ++out.candidates;
      VProf f = unflatten(digits);
      if (check_prof_actions(f).pass) out.profs.push_back(std::move(f));
    }
    return out;
  }
  // Saturating a random matrix as hom ∘ f ∘ hom gives the least profunctor above it.
  out.exhaustive = false;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, vs - 1);
  std::set<std::vector<std::vector<int>>> seen;
  VProf id = id_prof(c);
  for (long i = 0; i < cap; ++i) {
    std::vector<int> digits(cells);
    for (auto& d : digits) d = pick(rng);
    ++out.candidates;
    VProf f = compose_prof(compose_prof(id, unflatten(digits)), id);
    if (seen.insert(f.val).second) out.profs.push_back(std::move(f));
  }
  std::sort(out.profs.begin(), out.profs.end(), [](const VProf& a, const VProf& b) { return a.val < b.val; });
  return out;
}

int ProfQuantale::index_of(const VProf& f) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i].val == f.val) return static_cast<int>(i);
  return -1;
}

ProfQuantale build_prof_quantale(const VCatRef& c) {
  ProfEnumeration en = enumerate_profs(c);
  if (!en.exhaustive || en.profs.size() > kTabulateProfLimit)
    throw ProfError("Prof_V(c,c) is too large to tabulate; use check_prof_staut with sampling");
  ProfQuantale pq;
  pq.elements = std::move(en.profs);
  const std::size_t n = pq.elements.size();
  std::map<std::vector<std::vector<int>>, int> idx;
  for (std::size_t i = 0; i < n; ++i) idx[pq.elements[i].val] = static_cast<int>(i);
  auto find = [&](const VProf& f) {
    auto it = idx.find(f.val);
    if (it == idx.end()) throw ProfError("composite " + prof_str(f) + " is not a profunctor");
    return it->second;
  };
  std::vector<std::string> names;
  Poset le(n, std::vector<bool>(n));
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(prof_str(pq.elements[i]));
    for (std::size_t j = 0; j < n; ++j) {
      le[i][j] = prof_leq(pq.elements[i], pq.elements[j]);
      table[i][j] = find(compose_prof(pq.elements[i], pq.elements[j]));
    }
  }
  pq.quantale = std::make_shared<TableQuantale>("Prof over " + c->name, names, le, table, find(id_prof(c)),
                                                find(d_prof(c)));
  return pq;
}

bool ProfStautReport::pass() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.pass; });
}

namespace {

// Triples of indices into n items: all of them when n³ fits the budget, else a seeded sample.
std::vector<std::array<std::size_t, 3>> triples(std::size_t n, long budget, std::uint64_t seed) {
  std::vector<std::array<std::size_t, 3>> out;
  if (n == 0) return out;
  if (static_cast<double>(n) * n * n <= static_cast<double>(budget)) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) out.push_back({i, j, k});
    return out;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (long t = 0; t < budget; ++t) out.push_back({pick(rng), pick(rng), pick(rng)});
  std::sort(out.begin(), out.end());
  return out;
}

void pointwise_suites(const VCatRef& c, const std::vector<VProf>& fs, long budget, std::uint64_t seed,
                      std::vector<SuiteResult>& out) {
  const VProf id = id_prof(c), dual = d_prof(c);
  SuiteResult neg("negations, units and counits");
  SuiteResult cyc("⊥f = ᵖf");
  SuiteResult dualizer("⊥id = dualizer");
  ++dualizer.checks;
  try {
    if (!(dual_prof(id, Side::Right) == dual)) dualizer.fail("⊥id = " + prof_str(dual_prof(id, Side::Right)));
  } catch (const ProfError& e) {
    dualizer.fail(e.what());
  }
  std::vector<VProf> rd, ld;
  for (const VProf& f : fs) {
    neg.checks += 6;
    ++cyc.checks;
    try {
      VProf r = dual_prof(f, Side::Right), l = dual_prof(f, Side::Left);
      if (!(r == l)) cyc.fail("⊥f ≠ ᵖf at f=" + prof_str(f) + ": " + prof_str(r) + " vs " + prof_str(l));
      if (!prof_leq(id, par_prof(r, f))) neg.fail("id ≰ ⊥f⅋f at f=" + prof_str(f));
      if (!prof_leq(compose_prof(f, r), dual)) neg.fail("f⊗⊥f ≰ d at f=" + prof_str(f));
      if (!prof_leq(id, par_prof(f, l))) neg.fail("id ≰ f⅋ᵖf at f=" + prof_str(f));
      if (!prof_leq(compose_prof(l, f), dual)) neg.fail("ᵖf⊗f ≰ d at f=" + prof_str(f));
      if (!(dual_prof(l, Side::Right) == f)) neg.fail("⊥ᵖf ≠ f at f=" + prof_str(f));
      if (!(dual_prof(r, Side::Left) == f)) neg.fail("ᵖ⊥f ≠ f at f=" + prof_str(f));
      rd.push_back(std::move(r));
    } catch (const ProfError& e) {
      neg.fail(e.what());
      cyc.fail(e.what());
      rd.push_back(f);
    }
  }

  SuiteResult closed("composites are profunctors");
  SuiteResult monoid("composition associative and unital");
  SuiteResult dist("linear distributions");
  SuiteResult dm("de Morgan");
  for (const VProf& f : fs) {
    monoid.checks += 2;
    if (!(compose_prof(id, f) == f) || !(compose_prof(f, id) == f)) monoid.fail("id is not neutral for " + prof_str(f));
    if (!(par_prof(dual, f) == f) || !(par_prof(f, dual) == f)) monoid.fail("d is not neutral for ⅋ at " + prof_str(f));
  }
  for (const auto& [i, j, k] : triples(fs.size(), budget, seed)) {
    const VProf &f = fs[i], &g = fs[j], &h = fs[k];
    VProf fg = compose_prof(f, g), gh = par_prof(g, h);
    closed.checks += 2;
    if (auto a = check_prof_actions(fg); !a.pass) closed.fail("f⊗g: " + a.witness);
    if (auto a = check_prof_actions(gh); !a.pass) closed.fail("g⅋h: " + a.witness);
    ++monoid.checks;
    if (!(compose_prof(fg, h) == compose_prof(f, compose_prof(g, h))))
      monoid.fail("associativity fails at " + prof_str(f) + ", " + prof_str(g) + ", " + prof_str(h));
    dist.checks += 2;
    if (!prof_leq(compose_prof(f, gh), par_prof(fg, h)))
      dist.fail("f⊗(g⅋h) ≰ (f⊗g)⅋h at " + prof_str(f) + ", " + prof_str(g) + ", " + prof_str(h));
    if (!prof_leq(compose_prof(par_prof(f, g), h), par_prof(f, compose_prof(g, h))))
      dist.fail("(f⅋g)⊗h ≰ f⅋(g⊗h) at " + prof_str(f) + ", " + prof_str(g) + ", " + prof_str(h));
    ++dm.checks;
    try {
      if (!(dual_prof(fg, Side::Right) == par_prof(rd[j], rd[i])))
        dm.fail("⊥(f⊗g) ≠ ⊥g⅋⊥f at " + prof_str(f) + ", " + prof_str(g));
    } catch (const ProfError& e) {
      dm.fail(e.what());
    }
  }
  for (auto* s : {&closed, &monoid, &dist, &neg, &dm, &dualizer, &cyc}) out.push_back(std::move(*s));
}

}  // namespace

ProfStautReport check_prof_staut(const VCatRef& c, long cap, long triple_budget, std::uint64_t seed) {
  ProfStautReport rep;
  rep.label = "Prof over " + c->name;
  rep.suites.push_back(check_vcat(*c));
  if (!rep.suites.back().pass) return rep;
  rep.enumeration = enumerate_profs(c, cap, seed);
  SuiteResult nonempty("enumeration");
  nonempty.checks = static_cast<long>(rep.enumeration.candidates);
  if (rep.enumeration.profs.empty()) nonempty.fail("no profunctors found");
  rep.suites.push_back(nonempty);
  pointwise_suites(c, rep.enumeration.profs, triple_budget, seed, rep.suites);
  if (!rep.enumeration.exhaustive || rep.enumeration.profs.size() > kTabulateProfLimit) return rep;

  ProfQuantale pq;
  try {
    pq = build_prof_quantale(c);
  } catch (const std::exception& e) {
    SuiteResult s("Prof as a quantale");
    s.fail(e.what());
    rep.suites.push_back(s);
    return rep;
  }
  for (SuiteResult& s : validate_quantale(*pq.quantale, triple_budget * 10, seed)) rep.suites.push_back(std::move(s));
  SuiteResult agree("residual negations match the pointwise duals");
  for (std::size_t i = 0; i < pq.elements.size(); ++i) {
    agree.checks += 2;
    const int a = static_cast<int>(i);
    try {
      int r = pq.index_of(dual_prof(pq.elements[i], Side::Right));
      int l = pq.index_of(dual_prof(pq.elements[i], Side::Left));
      if (pq.quantale->rdual(a) != r) agree.fail("⊥ differs at " + pq.quantale->element_name(a));
      if (pq.quantale->ldual(a) != l) agree.fail("ᵖ differs at " + pq.quantale->element_name(a));
    } catch (const ProfError& e) {
      agree.fail(e.what());
    }
  }
  rep.suites.push_back(agree);

  auto thin = make_thin_model(pq.quantale, 6, seed);
  auto probes = thin->probes();
  rep.suites.push_back(check_triangles(*thin, probes));
  rep.suites.push_back(check_monoidal_coherence(*thin, thin->generators()));
  rep.suites.push_back(check_distributivity(*thin, thin->generators()));
  rep.suites.push_back(check_curry_bijection(*thin, probes));
  rep.suites.push_back(check_canonical_invertible(*thin, probes));
  SuiteResult cyclic("identity is a cycle on Prof");
  cyclic.checks = 1;
  try {
    AxiomOptions opt;
    opt.seed = seed;
    opt.max_tuples = 4000;
    AxiomProfile prof = profile(identity_cycle(*thin), opt);
    if (!classify(prof).cycle) cyclic.fail(describe(classify(prof)));
    for (Axiom a : all_axioms())
      if (!prof.holds(a)) cyclic.fail(prof.at(a).witness);
    rep.cycle_profile = std::move(prof);
  } catch (const CycleError& e) {
    cyclic.fail(e.what());
  }
  rep.suites.push_back(cyclic);
  return rep;
}

SuiteResult check_rel2_isomorphism() {
  SuiteResult r("Prof_2(discrete 2) ≅ Rel(2)");
  auto c = discrete_vcat(build_bool(), 2);
  ProfQuantale pq = build_prof_quantale(c);
  auto rel = build_rel_quantale(2);
  const Quantale& p = *pq.quantale;
  ++r.checks;
  if (p.size() != rel->size()) {
    r.fail("sizes differ: " + std::to_string(p.size()) + " vs " + std::to_string(rel->size()));
    return r;
  }
  // f ↦ the relation {(q,r) : f(q,r) is true}.
  std::vector<int> to_rel(p.size());
  std::set<int> hit;
  for (int a = 0; a < p.size(); ++a) {
    RelMask m = 0;
    for (int q = 0; q < 2; ++q)
      for (int x = 0; x < 2; ++x)
        if (pq.elements[a].val[q][x] == c->v->unit()) m |= RelMask(1) << (q * 2 + x);
    to_rel[a] = rel->index(m);
    hit.insert(to_rel[a]);
  }
  ++r.checks;
  if (static_cast<int>(hit.size()) != p.size()) r.fail("the map to relations is not injective");
  r.checks += 3;
  if (to_rel[p.unit()] != rel->unit()) r.fail("identity profunctor is not the diagonal");
  if (to_rel[p.dualizer()] != rel->dualizer()) r.fail("dualizer is not the complement of the diagonal");
  if (!is_cyclic(p).cyclic) r.fail("Prof is not cyclic");
  for (int a = 0; a < p.size(); ++a) {
    r.checks += 2;
    if (to_rel[p.rdual(a)] != rel->rdual(to_rel[a])) r.fail("⊥ not preserved at " + p.element_name(a));
    if (to_rel[p.ldual(a)] != rel->ldual(to_rel[a])) r.fail("ᵖ not preserved at " + p.element_name(a));
    for (int b = 0; b < p.size(); ++b) {
      r.checks += 2;
      if (p.leq(a, b) != rel->leq(to_rel[a], to_rel[b])) r.fail("order not preserved at " + p.element_name(a));
      if (to_rel[p.tensor(a, b)] != rel->tensor(to_rel[a], to_rel[b]))
        r.fail("composition not preserved at " + p.element_name(a) + ", " + p.element_name(b));
    }
  }
  return r;
}

SuiteResult check_bool_profunctor_negation(int max_n) {
  SuiteResult r("⊥f = ¬f^rev = ᵖf over posets");
  for (int n = 1; n <= max_n; ++n)
    for (const Poset& p : all_posets(n)) {
      auto c = poset_vcat(p);
      for (const VProf& f : enumerate_profs(c).profs) {
        ++r.checks;
        VProf neg{c, c, f.val};
        for (int q = 0; q < n; ++q)
          for (int x = 0; x < n; ++x) neg.val[q][x] = f.val[x][q] == c->v->unit() ? 0 : c->v->unit();
        try {
          VProf rd = dual_prof(f, Side::Right), ld = dual_prof(f, Side::Left);
          if (!(rd == neg) || !(ld == neg))
            r.fail("at poset " + poset_name(p) + ", f=" + prof_str(f) + ": ⊥f=" + prof_str(rd) + " ᵖf=" + prof_str(ld));
        } catch (const ProfError& e) {
          r.fail(e.what());
        }
      }
    }
  return r;
}

Mor contraposition_via_ends(const CycleData& c, const Mor& alpha, ObjRef a, ObjRef x) {
  const Model& m = c.model();
  const ObjRef y = alpha.cod, ly = m.ldual_obj(y);
  Mor pairing = m.then(m.then(m.assoc(ly, a, x), m.tensor(m.id(ly), alpha)), m.gamma_l(y));
  return m.then(m.then(m.tensor(c.nu(y), m.id(a)), rcurry(m, x, pairing)), c.nu_inv(x));
}

Mor contraposition_via_action(const CycleData& c, const Mor& alpha, ObjRef a, ObjRef x) {
  const Model& m = c.model();
  const ObjRef y = alpha.cod, ry = m.rdual_obj(y);
  Mor h = m.then(m.then(m.assoc_inv(a, x, ry), m.tensor(alpha, m.id(ry))), m.gamma_r(y));
  Mor moved = to_upper(c).apply(h);
  return lcurry(m, x, m.then(m.assoc_inv(x, ry, a), moved));
}

SuiteResult check_contraposition_agreement(const CycleData& c, const std::vector<Mor>& actions) {
  const Model& m = c.model();
  SuiteResult r("contraposition agreement");
  for (const Mor& alpha : actions) {
    const ObjRef a = left_of(m, alpha.dom, Kind::Tensor), x = right_of(m, alpha.dom, Kind::Tensor), y = alpha.cod;
    r.checks += 2;
    bool arrows = false;
    try {
      Mor u = contraposition_via_ends(c, alpha, a, x), v = contraposition_via_action(c, alpha, a, x);
      arrows = m.equal(u, v);
      if (!arrows) r.fail("arrows differ for α=" + m.show(alpha) + ": " + m.show(u) + " vs " + m.show(v));
    } catch (const NoSuchArrow& e) {
      r.fail(std::string("arrow missing: ") + e.what());
    }
    Mor lhs = m.then(m.then(c.nu(y), ldual_mor(m, alpha)), demorgan(m, DeMorgan::TensorL, a, x));
    Mor rhs = m.then(m.then(rdual_mor(m, alpha), demorgan(m, DeMorgan::TensorR, a, x)), m.par(c.nu(x), c.nu(a)));
    if (m.equal(lhs, rhs) != arrows) r.fail("single-strand form disagrees with the arrows for α=" + m.show(alpha));
  }
  return r;
}

std::vector<Mor> random_actions(const LinearModel& m, ObjRef a, ObjRef x, ObjRef y, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(-3, 3);
  const ObjRef dom = m.tensor_obj(a, x);
  std::vector<Mor> out;
  for (int i = 0; i < count; ++i) {
    QMatrix q(m.dim(y), m.dim(dom));
    for (std::size_t r = 0; r < q.rows(); ++r)
      for (std::size_t k = 0; k < q.cols(); ++k)
        if (int v = pick(rng)) q.set(r, k, v);
    out.push_back(m.make(dom, y, std::move(q)));
  }
  return out;
}

VCatRef parse_vcat(const std::string& text, const std::string& source_name) {
  struct Tok {
    std::string s;
    int col;
  };
  auto c = std::make_shared<VCat>();
  c->name = source_name;
  std::map<std::string, int> idx;
  std::map<int, std::vector<int>> rows;
  int lineno = 0, objects_line = 0;
  std::istringstream in(text);
  std::string line;
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
    const int eol = static_cast<int>(line.size()) + 1;
    if (kw == "quantale") {
      if (c->v) throw ParseError(lineno, toks[0].col, "quantale already given");
      if (toks.size() != 2) throw ParseError(lineno, toks.size() > 2 ? toks[2].col : eol, "'quantale' takes 1 argument");
      try {
        c->v = load_quantale(toks[1].s);
      } catch (const std::exception& e) {
        throw ParseError(lineno, toks[1].col, e.what());
      }
    } else if (kw == "objects") {
      if (objects_line) throw ParseError(lineno, toks[0].col, "objects already declared on line " + std::to_string(objects_line));
      if (toks.size() < 2) throw ParseError(lineno, eol, "expected object names");
      objects_line = lineno;
      for (std::size_t k = 1; k < toks.size(); ++k) {
        if (idx.count(toks[k].s)) throw ParseError(lineno, toks[k].col, "duplicate object '" + toks[k].s + "'");
        idx[toks[k].s] = static_cast<int>(c->objects.size());
        c->objects.push_back(toks[k].s);
      }
    } else if (kw == "row") {
      if (!c->v || !objects_line) throw ParseError(lineno, toks[0].col, "'quantale' and 'objects' must precede rows");
      if (toks.size() < 2 || toks[1].s.empty() || toks[1].s.back() != ':')
        throw ParseError(lineno, toks.size() > 1 ? toks[1].col : eol, "expected 'row <object>:'");
      std::string head = toks[1].s.substr(0, toks[1].s.size() - 1);
      auto it = idx.find(head);
      if (it == idx.end()) throw ParseError(lineno, toks[1].col, "unknown object '" + head + "'");
      if (rows.count(it->second)) throw ParseError(lineno, toks[1].col, "duplicate row for '" + head + "'");
      if (toks.size() - 2 != c->objects.size())
        throw ParseError(lineno, toks.back().col, "row has " + std::to_string(toks.size() - 2) + " entries, expected " +
                                                      std::to_string(c->objects.size()));
      std::vector<int> r;
      for (std::size_t k = 2; k < toks.size(); ++k) {
        auto e = c->v->find(toks[k].s);
        if (!e) throw ParseError(lineno, toks[k].col, "unknown element '" + toks[k].s + "' of " + c->v->describe());
        r.push_back(*e);
      }
      rows[it->second] = std::move(r);
    } else {
      throw ParseError(lineno, toks[0].col, "unknown directive '" + kw + "'");
    }
  }
  const int end_line = lineno + 1;
  if (!c->v) throw ParseError(end_line, 1, "missing 'quantale'");
  if (!objects_line) throw ParseError(end_line, 1, "missing 'objects'");
  for (int a = 0; a < c->size(); ++a) {
    if (!rows.count(a)) throw ParseError(end_line, 1, "missing row for '" + c->objects[a] + "'");
    c->hom.push_back(rows[a]);
  }
  return c;
}

VCatRef load_vcat(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_vcat(ss.str(), std::filesystem::path(path).filename().string());
}

}  // namespace staut
