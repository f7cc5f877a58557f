#include "staut/qmatrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace staut {

namespace {

const Rational& zero_value() {
  static const Rational z(0);
  return z;
}

template <class RowT>
auto find_col(RowT& row, std::uint32_t c) {
  return std::lower_bound(row.begin(), row.end(), c, [](const QMatrix::Entry& e, std::uint32_t k) { return e.first < k; });
}

// a + s*b over sorted rows, dropping zeros.
QMatrix::Row axpy(const QMatrix::Row& a, const Rational& s, const QMatrix::Row& b) {
  QMatrix::Row out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, s * j->second);
      ++j;
    } else {
      Rational v = i->second + s * j->second;
      if (sgn(v) != 0) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(static_cast<std::uint32_t>(i), Rational(1));
  return m;
}

QMatrix QMatrix::flip(std::size_t m, std::size_t n) {
  QMatrix out(m * n, m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.data_[j * m + i].emplace_back(static_cast<std::uint32_t>(i * n + j), Rational(1));
  return out;
}

QMatrix QMatrix::diagonal(const std::vector<Rational>& d) {
  QMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    if (sgn(d[i]) != 0) m.data_[i].emplace_back(static_cast<std::uint32_t>(i), d[i]);
  return m;
}

std::size_t QMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

const Rational& QMatrix::at(std::size_t r, std::size_t c) const {
  const Row& row = data_.at(r);
  auto it = find_col(row, static_cast<std::uint32_t>(c));
  return (it != row.end() && it->first == c) ? it->second : zero_value();
}

Rational& QMatrix::at(std::size_t r, std::size_t c) {
  if (c >= cols_) throw std::out_of_range("matrix column out of range");
  Row& row = data_.at(r);
  auto it = find_col(row, static_cast<std::uint32_t>(c));
  if (it != row.end() && it->first == c) return it->second;
  return row.insert(it, Entry(static_cast<std::uint32_t>(c), Rational(0)))->second;
}

void QMatrix::set(std::size_t r, std::size_t c, const Rational& v) { at(r, c) = v; }

void QMatrix::prune() {
  for (auto& row : data_)
    row.erase(std::remove_if(row.begin(), row.end(), [](const Entry& e) { return sgn(e.second) == 0; }), row.end());
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  QMatrix out(rows_, o.cols_);
  std::vector<Rational> acc(o.cols_);
  std::vector<char> used(o.cols_, 0);
  std::vector<std::uint32_t> touched;
  for (std::size_t i = 0; i < rows_; ++i) {
    touched.clear();
    for (const auto& [k, a] : data_[i])
      for (const auto& [j, b] : o.data_[k]) {
        if (!used[j]) {
          used[j] = 1;
          touched.push_back(j);
          acc[j] = a * b;
        } else {
          acc[j] += a * b;
        }
      }
    std::sort(touched.begin(), touched.end());
    Row& r = out.data_[i];
    for (std::uint32_t j : touched) {
      if (sgn(acc[j]) != 0) r.emplace_back(j, acc[j]);
      used[j] = 0;
    }
  }
  return out;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  QMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) out.data_[i] = axpy(data_[i], 1, o.data_[i]);
  return out;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  QMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) out.data_[i] = axpy(data_[i], -1, o.data_[i]);
  return out;
}

QMatrix QMatrix::scaled(const Rational& s) const {
  QMatrix out(rows_, cols_);
  if (sgn(s) == 0) return out;
  for (std::size_t i = 0; i < rows_; ++i) {
    out.data_[i].reserve(data_[i].size());
    for (const auto& [c, v] : data_[i]) out.data_[i].emplace_back(c, v * s);
  }
  return out;
}

QMatrix QMatrix::transpose() const {
  QMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& [c, v] : data_[i]) out.data_[c].emplace_back(static_cast<std::uint32_t>(i), v);
  return out;
}

QMatrix QMatrix::kron(const QMatrix& o) const {
  QMatrix out(rows_ * o.rows_, cols_ * o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < o.rows_; ++k) {
      Row& r = out.data_[i * o.rows_ + k];
      r.reserve(data_[i].size() * o.data_[k].size());
      for (const auto& [j, a] : data_[i])
        for (const auto& [l, b] : o.data_[k])
          r.emplace_back(static_cast<std::uint32_t>(j * o.cols_ + l), a * b);
    }
  return out;
}

bool QMatrix::operator==(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    const Row& a = data_[i];
    const Row& b = o.data_[i];
    auto x = a.begin();
    auto y = b.begin();
    while (true) {
      while (x != a.end() && sgn(x->second) == 0) ++x;
      while (y != b.end() && sgn(y->second) == 0) ++y;
      if (x == a.end() || y == b.end()) {
        if (x != a.end() || y != b.end()) return false;
        break;
      }
      if (x->first != y->first || x->second != y->second) return false;
      ++x;
      ++y;
    }
  }
  return true;
}

bool QMatrix::is_identity() const { return rows_ == cols_ && *this == identity(rows_); }

bool QMatrix::is_zero() const {
  for (const auto& r : data_)
    for (const auto& e : r)
      if (sgn(e.second) != 0) return false;
  return true;
}

namespace {

// Sparse Gauss-Jordan in place. Returns pivot (row, column) pairs; pivot rows
// are normalised and every other row is zero in pivot columns.
std::vector<std::pair<std::size_t, std::uint32_t>> rref_rows(std::vector<QMatrix::Row>& rows) {
  std::vector<std::pair<std::size_t, std::uint32_t>> pivots;
  std::vector<char> done(rows.size(), 0);
  while (true) {
    std::size_t best = rows.size();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (done[r] || rows[r].empty()) continue;
      if (best == rows.size() || rows[r].front().first < rows[best].front().first ||
          (rows[r].front().first == rows[best].front().first && rows[r].size() < rows[best].size()))
        best = r;
    }
    if (best == rows.size()) break;
    done[best] = 1;
    const std::uint32_t c = rows[best].front().first;
    Rational inv = 1 / rows[best].front().second;
    for (auto& e : rows[best]) e.second *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == best) continue;
      auto it = find_col(rows[r], c);
      if (it == rows[r].end() || it->first != c) continue;
      Rational f = -it->second;
      rows[r] = axpy(rows[r], f, rows[best]);
    }
    pivots.emplace_back(best, c);
  }
  std::sort(pivots.begin(), pivots.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  return pivots;
}

bool is_signed_permutation(const QMatrix& m) {
  if (m.rows() != m.cols()) return false;
  std::vector<char> seen(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    int nz = 0;
    for (const auto& [c, v] : m.row(i)) {
      if (sgn(v) == 0) continue;
      if (v != 1 && v != -1) return false;
      if (++nz > 1 || seen[c]++) return false;
    }
    if (nz != 1) return false;
  }
  return true;
}

}  // namespace

std::optional<QMatrix> QMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  if (is_signed_permutation(*this)) return transpose();
  const std::size_t n = rows_;
  std::vector<Row> aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& e : data_[i])
      if (sgn(e.second) != 0) aug[i].push_back(e);
    aug[i].emplace_back(static_cast<std::uint32_t>(n + i), Rational(1));
  }
  auto piv = rref_rows(aug);
  if (piv.size() < n || piv[n - 1].second != n - 1) return std::nullopt;
  QMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const Row& r = aug[piv[k].first];
    Row& dst = out.data_[k];
    for (const auto& [c, v] : r)
      if (c >= n) dst.emplace_back(static_cast<std::uint32_t>(c - n), v);
  }
  return out;
}

std::size_t QMatrix::rank() const {
  std::vector<Row> rows = data_;
  for (auto& r : rows)
    r.erase(std::remove_if(r.begin(), r.end(), [](const Entry& e) { return sgn(e.second) == 0; }), r.end());
  return rref_rows(rows).size();
}

std::string QMatrix::str() const {
  std::ostringstream os;
  if (rows_ * cols_ > 256) {
    os << "<" << rows_ << "×" << cols_ << ", " << nonzeros() << " nonzero>";
    return os.str();
  }
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << at(i, j).get_str();
    }
  }
  os << "]";
  return os.str();
}

std::vector<std::vector<Rational>> nullspace(const QMatrix& a) {
  std::vector<QMatrix::Row> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    QMatrix::Row r;
    for (const auto& e : a.row(i))
      if (sgn(e.second) != 0) r.push_back(e);
    rows.push_back(std::move(r));
  }
  auto piv = rref_rows(rows);
  std::vector<char> is_pivot(a.cols(), 0);
  for (const auto& p : piv) is_pivot[p.second] = 1;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(a.cols());
    v[free] = 1;
    for (const auto& [r, c] : piv) {
      const auto& row = rows[r];
      auto it = find_col(row, static_cast<std::uint32_t>(free));
      if (it != row.end() && it->first == free) v[c] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace staut
