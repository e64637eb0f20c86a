#include "liekit/core/sparse.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace liekit {

bool DenseVector::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.e_.emplace(Key{i, i}, Rational(1));
  return m;
}

SparseMatrix SparseMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  SparseMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("SparseMatrix: ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

void SparseMatrix::check(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_)
    throw std::out_of_range("SparseMatrix index (" + std::to_string(r) + "," + std::to_string(c) +
                            ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
  check(r, c);
  auto it = e_.find({r, c});
  return it == e_.end() ? Rational() : it->second;
}

void SparseMatrix::set(std::size_t r, std::size_t c, const Rational& v) {
  check(r, c);
  if (v.is_zero())
    e_.erase({r, c});
  else
    e_[{r, c}] = v;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& v) {
  check(r, c);
  if (v.is_zero()) return;
  auto [it, inserted] = e_.try_emplace({r, c}, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) e_.erase(it);
  }
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (const auto& [k, v] : e_) t.e_.emplace(Key{k.second, k.first}, v);
  return t;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("SparseMatrix: shape mismatch in product");
  // Bucket the right factor by row for the inner join.
  std::vector<std::vector<std::pair<std::size_t, const Rational*>>> by_row(o.rows_);
  for (const auto& [k, v] : o.e_) by_row[k.first].emplace_back(k.second, &v);
  SparseMatrix p(rows_, o.cols_);
  for (const auto& [k, v] : e_)
    for (const auto& [c, w] : by_row[k.second]) p.add(k.first, c, v * *w);
  return p;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("SparseMatrix: shape mismatch");
  SparseMatrix s = *this;
  for (const auto& [k, v] : o.e_) s.add(k.first, k.second, v);
  return s;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const { return *this + o.scaled(-1); }

SparseMatrix SparseMatrix::scaled(const Rational& s) const {
  SparseMatrix r(rows_, cols_);
  if (s.is_zero()) return r;
  for (const auto& [k, v] : e_) r.e_.emplace(k, v * s);
  return r;
}

DenseVector SparseMatrix::apply(const DenseVector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("SparseMatrix: vector length mismatch");
  DenseVector y(rows_);
  for (const auto& [k, v] : e_) y[k.first] += v * x[k.second];
  return y;
}

Rational SparseMatrix::trace() const {
  Rational t;
  for (const auto& [k, v] : e_)
    if (k.first == k.second) t += v;
  return t;
}

bool SparseMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (const auto& [k, v] : e_) {
    auto it = e_.find({k.second, k.first});
    if (it == e_.end() || it->second != v) return false;
  }
  return true;
}

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) { return a * b - b * a; }

}  // namespace liekit
