#include "staut/linear.hpp"

#include <stdexcept>

namespace staut {

LinearModel::LinearModel(std::string description, Algebra algebra,
                         std::vector<std::pair<std::string, Rep>> generators, std::optional<RAction> r_action,
                         std::optional<RAction> r_inverse, int max_nesting)
    : Model(max_nesting),
      description_(std::move(description)),
      algebra_(std::move(algebra)),
      r_action_(std::move(r_action)),
      r_inverse_(std::move(r_inverse)) {
  for (auto& [name, r] : generators) {
    if (r.act.size() != algebra_.size()) throw ShapeError(name + ": wrong number of action matrices");
    for (const auto& a : r.act)
      if (a.rows() != r.dim || a.cols() != r.dim) throw ShapeError(name + ": action matrix has the wrong shape");
    int g = objects().add_generator(name);
    ObjRef x = objects().gen(g);
    gens_.push_back(x);
    reps_[x] = std::make_shared<const Rep>(std::move(r));
  }
}

Rep LinearModel::trivial_rep() const {
  Rep r{1, {}};
  for (GenType t : algebra_.types) r.act.push_back(QMatrix::identity(1).scaled(t == GenType::Grouplike ? 1 : 0));
  return r;
}

Rep LinearModel::tensor_rep(const Rep& a, const Rep& b) const {
  Rep r{a.dim * b.dim, {}};
  for (std::size_t k = 0; k < algebra_.size(); ++k) {
    if (algebra_.types[k] == GenType::Grouplike)
      r.act.push_back(a.act[k].kron(b.act[k]));
    else
      r.act.push_back(a.act[k].kron(QMatrix::identity(b.dim)) + QMatrix::identity(a.dim).kron(b.act[k]));
  }
  return r;
}

// Contragredient action ρ(S h)ᵀ.
Rep LinearModel::dual_rep(const Rep& a) const {
  Rep r{a.dim, {}};
  for (std::size_t k = 0; k < algebra_.size(); ++k) {
    if (algebra_.types[k] == GenType::Grouplike) {
      auto inv = a.act[k].inverse();
      if (!inv) throw ShapeError("grouplike generator " + algebra_.names[k] + " acts singularly");
      r.act.push_back(inv->transpose());
    } else {
      r.act.push_back(a.act[k].transpose().scaled(-1));
    }
  }
  return r;
}

const Rep& LinearModel::rep(ObjRef x) const {
  {
    std::lock_guard lock(mu_);
    auto it = reps_.find(x);
    if (it != reps_.end()) return *it->second;
  }
  Term t = objects().term(x);
  Rep r;
  switch (t.kind) {
    case Kind::Gen: throw ShapeError("unknown generator");
    case Kind::Tensor:
    case Kind::Par: r = tensor_rep(rep(t.a), rep(t.b)); break;
    case Kind::UnitE:
    case Kind::UnitD: r = trivial_rep(); break;
    case Kind::RDual:
    case Kind::LDual: r = dual_rep(rep(t.a)); break;
  }
  std::lock_guard lock(mu_);
  auto [it, inserted] = reps_.emplace(x, std::make_shared<const Rep>(std::move(r)));
  return *it->second;
}

Mor LinearModel::make(ObjRef dom, ObjRef cod, QMatrix m) const {
  if (m.rows() != dim(cod) || m.cols() != dim(dom))
    throw ShapeError("matrix of shape " + std::to_string(m.rows()) + "×" + std::to_string(m.cols()) +
                     " does not fit " + name(dom) + " → " + name(cod));
  return Mor{dom, cod, std::make_shared<const LinearData>(std::move(m))};
}

const QMatrix& LinearModel::matrix(const Mor& f) const {
  auto* d = dynamic_cast<const LinearData*>(f.data.get());
  if (!d) throw ShapeError("arrow does not belong to a linear model");
  return d->m;
}

Mor LinearModel::scaled(const Mor& f, const Rational& s) const { return make(f.dom, f.cod, matrix(f).scaled(s)); }

bool LinearModel::is_module_map(const Mor& f) const {
  const Rep& a = rep(f.dom);
  const Rep& b = rep(f.cod);
  const QMatrix& m = matrix(f);
  for (std::size_t k = 0; k < algebra_.size(); ++k)
    if (b.act[k] * m != m * a.act[k]) return false;
  return true;
}

Mor LinearModel::id(ObjRef x) const { return make(x, x, QMatrix::identity(dim(x))); }

Mor LinearModel::compose(const Mor& f, const Mor& g) const { return make(f.dom, g.cod, matrix(g) * matrix(f)); }

Mor LinearModel::tensor_like(ObjRef dom, ObjRef cod, const Mor& f, const Mor& g) const {
  return make(dom, cod, matrix(f).kron(matrix(g)));
}

Mor LinearModel::tensor(const Mor& f, const Mor& g) const {
  return tensor_like(tensor_obj(f.dom, g.dom), tensor_obj(f.cod, g.cod), f, g);
}

bool LinearModel::equal(const Mor& f, const Mor& g) const {
  return f.dom == g.dom && f.cod == g.cod && matrix(f) == matrix(g);
}

Mor LinearModel::inverse(const Mor& f) const {
  auto inv = matrix(f).inverse();
  if (!inv) throw NoSuchArrow("arrow " + name(f.dom) + " → " + name(f.cod) + " is not invertible");
  return make(f.cod, f.dom, std::move(*inv));
}

std::string LinearModel::show(const Mor& f) const {
  return name(f.dom) + " → " + name(f.cod) + " " + matrix(f).str();
}

Mor LinearModel::identity_between(ObjRef dom, ObjRef cod) const {
  if (dim(dom) != dim(cod)) throw ShapeError("structural map between objects of different dimension");
  return make(dom, cod, QMatrix::identity(dim(dom)));
}

Mor LinearModel::assoc(ObjRef x, ObjRef y, ObjRef z) const {
  return identity_between(tensor_obj(tensor_obj(x, y), z), tensor_obj(x, tensor_obj(y, z)));
}
Mor LinearModel::lunit(ObjRef x) const { return identity_between(tensor_obj(e(), x), x); }
Mor LinearModel::runit(ObjRef x) const { return identity_between(tensor_obj(x, e()), x); }
Mor LinearModel::passoc(ObjRef x, ObjRef y, ObjRef z) const {
  return identity_between(par_obj(par_obj(x, y), z), par_obj(x, par_obj(y, z)));
}
Mor LinearModel::plunit(ObjRef x) const { return identity_between(par_obj(d(), x), x); }
Mor LinearModel::prunit(ObjRef x) const { return identity_between(par_obj(x, d()), x); }
Mor LinearModel::dist_l(ObjRef q, ObjRef s, ObjRef t) const {
  return identity_between(tensor_obj(q, par_obj(s, t)), par_obj(tensor_obj(q, s), t));
}
Mor LinearModel::dist_r(ObjRef p, ObjRef q, ObjRef s) const {
  return identity_between(tensor_obj(par_obj(p, q), s), par_obj(p, tensor_obj(q, s)));
}

namespace {

// Σ_i e_i ⊗ e_i as a column (coevaluation) or row (evaluation).
QMatrix pairing(std::size_t n, bool column) {
  QMatrix m = column ? QMatrix(n * n, 1) : QMatrix(1, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (column)
      m.at(i * n + i, 0) = 1;
    else
      m.at(0, i * n + i) = 1;
  }
  return m;
}

}  // namespace

Mor LinearModel::tau_r(ObjRef p) const { return make(e(), par_obj(rdual_obj(p), p), pairing(dim(p), true)); }
Mor LinearModel::gamma_r(ObjRef p) const { return make(tensor_obj(p, rdual_obj(p)), d(), pairing(dim(p), false)); }
Mor LinearModel::tau_l(ObjRef p) const { return make(e(), par_obj(p, ldual_obj(p)), pairing(dim(p), true)); }
Mor LinearModel::gamma_l(ObjRef p) const { return make(tensor_obj(ldual_obj(p), p), d(), pairing(dim(p), false)); }

std::vector<Mor> LinearModel::hom_span(ObjRef x, ObjRef y) const {
  {
    std::lock_guard lock(mu_);
    auto it = spans_.find({x, y});
    if (it != spans_.end()) return it->second;
  }
  const std::size_t m = dim(x), n = dim(y);
  std::vector<Mor> out;
  if (algebra_.size() == 0) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        QMatrix e(n, m);
        e.at(i, j) = 1;
        out.push_back(make(x, y, std::move(e)));
      }
  } else {
    // Unknown M (n×m), flattened row-major; ρ_y(h) M − M ρ_x(h) = 0 for each h.
    const Rep& a = rep(x);
    const Rep& b = rep(y);
    QMatrix eqs(algebra_.size() * n * m, n * m);
    std::size_t row = 0;
    for (std::size_t k = 0; k < algebra_.size(); ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j, ++row) {
          for (std::size_t l = 0; l < n; ++l)
            if (sgn(b.act[k].at(i, l)) != 0) eqs.at(row, l * m + j) += b.act[k].at(i, l);
          for (std::size_t l = 0; l < m; ++l)
            if (sgn(a.act[k].at(l, j)) != 0) eqs.at(row, i * m + l) -= a.act[k].at(l, j);
        }
    for (const auto& v : nullspace(eqs)) {
      QMatrix mm(n, m);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) mm.at(i, j) = v[i * m + j];
      out.push_back(make(x, y, std::move(mm)));
    }
  }
  std::lock_guard lock(mu_);
  spans_.emplace(std::make_pair(x, y), out);
  return out;
}

Mor LinearModel::combine(const Rational& a, const Mor& f, const Rational& b, const Mor& g) const {
  if (f.dom != g.dom || f.cod != g.cod) throw CompositionError("linear combination of arrows with different types");
  return make(f.dom, f.cod, matrix(f).scaled(a) + matrix(g).scaled(b));
}

std::vector<ObjRef> LinearModel::probes() const {
  if (!probes_.empty()) return probes_;
  std::vector<ObjRef> out = gens_;
  out.push_back(e());
  for (ObjRef g : gens_) out.push_back(rdual_obj(g));
  return out;
}

Mor LinearModel::braid(ObjRef x, ObjRef y) const {
  const Rep& a = rep(x);
  const Rep& b = rep(y);
  QMatrix r = r_action_ ? (*r_action_)(a, b) : QMatrix::identity(a.dim * b.dim);
  return make(tensor_obj(x, y), tensor_obj(y, x), QMatrix::flip(a.dim, b.dim) * r);
}

Mor LinearModel::braid_inv(ObjRef x, ObjRef y) const {
  if (!r_action_) return make(tensor_obj(y, x), tensor_obj(x, y), QMatrix::flip(dim(y), dim(x)));
  if (!r_inverse_) return Model::braid_inv(x, y);
  const Rep& a = rep(x);
  const Rep& b = rep(y);
  return make(tensor_obj(y, x), tensor_obj(x, y), (*r_inverse_)(a, b) * QMatrix::flip(b.dim, a.dim));
}

// ---------------------------------------------------------------------------

Rational rational_pow(const Rational& x, long k) {
  Rational base = k < 0 ? Rational(1) / x : x;
  Rational out = 1;
  for (long i = 0; i < (k < 0 ? -k : k); ++i) out *= base;
  return out;
}

namespace {

// Module-map property of σ and both hexagons on the given objects.
void verify_braiding(const LinearModel& m, const std::vector<ObjRef>& objs) {
  auto fail = [&](const std::string& axiom, const std::string& at) {
    throw std::logic_error(m.describe() + ": braiding violates " + axiom + " at " + at);
  };
  for (ObjRef a : objs)
    for (ObjRef b : objs) {
      Mor s = m.braid(a, b);
      if (!m.is_module_map(s)) fail("module-map property", m.name(a) + ", " + m.name(b));
      if (!m.matrix(s).inverse()) fail("invertibility", m.name(a) + ", " + m.name(b));
      for (ObjRef c : objs) {
        std::string at = m.name(a) + ", " + m.name(b) + ", " + m.name(c);
        // σ_{a,b⊗c} = (σ_{a,b}⊗1);(1⊗σ_{a,c}) up to the identity associators
        QMatrix h1 = m.matrix(m.tensor(m.id(b), m.braid(a, c))) * m.matrix(m.tensor(m.braid(a, b), m.id(c)));
        if (h1 != m.matrix(m.braid(a, m.tensor_obj(b, c)))) fail("the first hexagon", at);
        QMatrix h2 = m.matrix(m.tensor(m.braid(a, c), m.id(b))) * m.matrix(m.tensor(m.id(a), m.braid(b, c)));
        if (h2 != m.matrix(m.braid(m.tensor_obj(a, b), c))) fail("the second hexagon", at);
      }
    }
}

}  // namespace

std::shared_ptr<LinearModel> build_vec_model(int max_dim) {
  if (max_dim < 1 || max_dim > 3) throw ShapeError("vec model: max_dim must be in 1..3");
  std::vector<std::pair<std::string, Rep>> gens;
  for (int k = 1; k <= max_dim; ++k) gens.push_back({"V" + std::to_string(k), Rep{static_cast<std::size_t>(k), {}}});
  return std::make_shared<LinearModel>("Vec(dim ≤ " + std::to_string(max_dim) + ")", Algebra{}, std::move(gens),
                                       std::nullopt);
}

QMatrix d2_projector(const Rep& r, int flux) {
  const QMatrix& y = r.act.at(1);
  QMatrix id = QMatrix::identity(r.dim);
  return (flux == 0 ? id + y : id - y).scaled(Rational(1, 2));
}

std::shared_ptr<LinearModel> build_drinfeld_z2() {
  Algebra alg{{"X", "Y"}, {GenType::Grouplike, GenType::Grouplike}};
  auto one_dim = [](int x, int y) {
    return Rep{1, {QMatrix::identity(1).scaled(x), QMatrix::identity(1).scaled(y)}};
  };
  // Regular module, basis X^i Y^j at index 2i + j; left multiplication.
  QMatrix rx(4, 4), ry(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      rx.at(((i + 1) % 2) * 2 + j, i * 2 + j) = 1;
      ry.at(i * 2 + (j + 1) % 2, i * 2 + j) = 1;
    }
  std::vector<std::pair<std::string, Rep>> gens = {
      {"one", one_dim(1, 1)}, {"elec", one_dim(-1, 1)}, {"mag", one_dim(1, -1)}, {"ferm", one_dim(-1, -1)}, {"reg", Rep{4, {rx, ry}}}};
  for (const auto& [name, r] : gens) {
    const QMatrix& x = r.act[0];
    const QMatrix& y = r.act[1];
    if (!(x * x).is_identity() || !(y * y).is_identity() || x * y != y * x)
      throw std::logic_error("D(Z2): algebra relations fail on " + name);
  }
  LinearModel::RAction r = [](const Rep& v, const Rep& w) {
    return d2_projector(v, 0).kron(QMatrix::identity(w.dim)) + d2_projector(v, 1).kron(w.act[0]);
  };
  // R is an involution because X² = 1.
  auto m = std::make_shared<LinearModel>("D(Z2)-modules", alg, gens, r, r);
  std::vector<ObjRef> check = m->generators();
  check.push_back(m->e());
  check.push_back(m->rdual_obj(m->generator(4)));
  verify_braiding(*m, check);
  std::vector<ObjRef> probes = m->generators();
  probes.push_back(m->e());
  m->set_probes(probes);
  return m;
}

std::shared_ptr<LinearModel> build_graded_model(const std::vector<int>& grades, const Rational& lambda) {
  if (sgn(lambda) == 0) throw ShapeError("graded model: λ must be nonzero");
  Algebra alg{{"G"}, {GenType::Primitive}};
  std::vector<std::pair<std::string, Rep>> gens;
  for (int g : grades) gens.push_back({"g" + std::to_string(g), Rep{1, {QMatrix::identity(1).scaled(g)}}});
  auto r_power = [lambda](long sign) {
    return [lambda, sign](const Rep& v, const Rep& w) {
    std::vector<Rational> diag;
    for (std::size_t i = 0; i < v.dim; ++i)
      for (std::size_t j = 0; j < w.dim; ++j) {
        Rational gv = v.act[0].at(i, i), gw = w.act[0].at(j, j);
        Rational prod = gv * gw;
        if (prod.get_den() != 1) throw ShapeError("graded model: non-integral grade");
        diag.push_back(rational_pow(lambda, sign * prod.get_num().get_si()));
      }
    return QMatrix::diagonal(diag);
    };
  };
  auto m = std::make_shared<LinearModel>("graded lines, λ = " + lambda.get_str(), alg, gens,
                                         LinearModel::RAction(r_power(1)), LinearModel::RAction(r_power(-1)));
  std::vector<ObjRef> check = m->generators();
  check.push_back(m->e());
  verify_braiding(*m, check);
  return m;
}

}  // namespace staut
