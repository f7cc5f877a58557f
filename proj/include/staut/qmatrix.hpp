#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace staut {

using Rational = mpq_class;

// Sparse rational matrix with sorted rows. Structural maps of the linear
// backend are permutations or 0/1 pairings on Kronecker-flattened spaces, so
// dense storage would grow with the cube of small dimensions. Kronecker
// products flatten (i, j) of a left factor of width n and a right factor as
// i * n + j.
class QMatrix {
 public:
  using Entry = std::pair<std::uint32_t, Rational>;
  using Row = std::vector<Entry>;

  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);

  static QMatrix identity(std::size_t n);
  static QMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  // f_j (x) e_i  <-  e_i (x) f_j  for dim(e)=m, dim(f)=n.
  static QMatrix flip(std::size_t m, std::size_t n);
  static QMatrix diagonal(const std::vector<Rational>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;
  const Row& row(std::size_t r) const { return data_[r]; }

  // Read access; absent entries are zero.
  const Rational& at(std::size_t r, std::size_t c) const;
  // Write access; inserts an entry when absent.
  Rational& at(std::size_t r, std::size_t c);
  void set(std::size_t r, std::size_t c, const Rational& v);

  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix scaled(const Rational& s) const;
  QMatrix transpose() const;
  QMatrix kron(const QMatrix& o) const;

  bool operator==(const QMatrix& o) const;
  bool operator!=(const QMatrix& o) const { return !(*this == o); }
  bool is_identity() const;
  bool is_zero() const;

  // Exact inverse by Gauss-Jordan; nullopt when singular or non-square.
  std::optional<QMatrix> inverse() const;
  std::size_t rank() const;

  std::string str() const;

 private:
  void prune();

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

// Basis of {x : A x = 0}, one column vector per basis element.
std::vector<std::vector<Rational>> nullspace(const QMatrix& a);

}  // namespace staut
