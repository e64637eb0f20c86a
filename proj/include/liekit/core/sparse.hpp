#pragma once

#include "liekit/core/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

namespace liekit {

/// Fixed-length vector of exact rationals.
class DenseVector {
public:
  DenseVector() = default;
  explicit DenseVector(std::size_t n) : c_(n) {}
  DenseVector(std::initializer_list<Rational> init) : c_(init) {}
  explicit DenseVector(std::vector<Rational> c) : c_(std::move(c)) {}

  std::size_t size() const { return c_.size(); }
  Rational& operator[](std::size_t i) { return c_[i]; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  bool is_zero() const;

  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }

  friend bool operator==(const DenseVector&, const DenseVector&) = default;

private:
  std::vector<Rational> c_;
};

/// Sparse matrix keyed by (row, col); iteration order is row-major.
/// Zero entries are never stored.
class SparseMatrix {
public:
  using Key = std::pair<std::size_t, std::size_t>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  static SparseMatrix identity(std::size_t n);
  static SparseMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return e_.size(); }
  bool is_square() const { return rows_ == cols_; }

  Rational at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& v);
  void add(std::size_t r, std::size_t c, const Rational& v);

  const std::map<Key, Rational>& entries() const { return e_; }

  SparseMatrix transpose() const;
  SparseMatrix operator*(const SparseMatrix& o) const;
  SparseMatrix operator+(const SparseMatrix& o) const;
  SparseMatrix operator-(const SparseMatrix& o) const;
  SparseMatrix scaled(const Rational& s) const;
  DenseVector apply(const DenseVector& x) const;
  Rational trace() const;

  bool is_symmetric() const;
  bool is_zero() const { return e_.empty(); }

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

private:
  void check(std::size_t r, std::size_t c) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::map<Key, Rational> e_;
};

/// Commutator AB - BA.
SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace liekit
