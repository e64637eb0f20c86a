#include "liekit/core/linalg.hpp"

#include <utility>

namespace liekit {

namespace {

using IntRows = std::vector<std::vector<BigInt>>;

// Scales each row by the lcm of its denominators; positive factors only, so
// ranks, solutions and minor signs are unchanged.
IntRows integer_rows(const SparseMatrix& m, const DenseVector* rhs = nullptr) {
  const std::size_t width = m.cols() + (rhs ? 1 : 0);
  std::vector<std::vector<Rational>> q(m.rows(), std::vector<Rational>(width));
  for (const auto& [k, v] : m.entries()) q[k.first][k.second] = v;
  if (rhs)
    for (std::size_t r = 0; r < m.rows(); ++r) q[r][m.cols()] = (*rhs)[r];

  IntRows out(m.rows(), std::vector<BigInt>(width));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BigInt l = 1;
    for (const auto& x : q[r])
      if (!x.is_zero()) l = lcm(l, x.den());
    for (std::size_t c = 0; c < width; ++c)
      if (!q[r][c].is_zero()) out[r][c] = q[r][c].num() * (l / q[r][c].den());
  }
  return out;
}

struct Echelon {
  IntRows rows;
  std::vector<std::size_t> pivot_cols;  // pivot column of row i, i < rank
};

// Fraction-free row echelon form. Pivot: first nonzero entry scanning rows
// downward in the current column. Division by the previous pivot is exact.
Echelon bareiss(IntRows a, std::size_t ncols) {
  Echelon e;
  const std::size_t nrows = a.size();
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < nrows; ++col) {
    std::size_t p = r;
    while (p < nrows && sgn(a[p][col]) == 0) ++p;
    if (p == nrows) continue;
    std::swap(a[p], a[r]);
    const BigInt& piv = a[r][col];
    for (std::size_t i = r + 1; i < nrows; ++i) {
      const bool lead = sgn(a[i][col]) != 0;
      for (std::size_t j = col + 1; j < ncols; ++j) {
        if (lead) {
          if (sgn(a[r][j]) == 0 && sgn(a[i][j]) == 0) continue;
          BigInt t = piv * a[i][j] - a[i][col] * a[r][j];
          mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        } else if (sgn(a[i][j]) != 0) {
          BigInt t = piv * a[i][j];
          mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        }
      }
      a[i][col] = 0;
    }
    prev = a[r][col];
    e.pivot_cols.push_back(col);
    ++r;
  }
  e.rows = std::move(a);
  return e;
}

// Back substitution on an echelon form; free columns take the given values.
std::vector<Rational> back_substitute(const Echelon& e, std::size_t ncols,
                                      std::vector<Rational> x, bool with_rhs) {
  for (std::size_t i = e.pivot_cols.size(); i-- > 0;) {
    const auto& row = e.rows[i];
    const std::size_t pc = e.pivot_cols[i];
    Rational acc = with_rhs ? Rational(row[ncols]) : Rational();
    for (std::size_t j = pc + 1; j < ncols; ++j)
      if (sgn(row[j]) != 0) acc -= Rational(row[j]) * x[j];
    x[pc] = acc / Rational(row[pc]);
  }
  return x;
}

}  // namespace

std::size_t rank(const SparseMatrix& m) {
  if (m.is_zero()) return 0;
  return bareiss(integer_rows(m), m.cols()).pivot_cols.size();
}

bool is_negative_definite(const SparseMatrix& m) {
  if (!m.is_symmetric()) throw NonSymmetric();
  const std::size_t n = m.rows();
  if (n == 0) return true;
  IntRows a = integer_rows(m);
  // Bareiss without row exchanges: after step k the pivot a[k][k] is the
  // (k+1)-th leading principal minor up to a positive row scaling.
  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const int s = sgn(a[k][k]);
    if (s == 0) return false;
    if ((k % 2 == 0 && s > 0) || (k % 2 == 1 && s < 0)) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      const bool lead = sgn(a[i][k]) != 0;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (lead) {
          if (sgn(a[k][j]) == 0 && sgn(a[i][j]) == 0) continue;
          BigInt t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
          mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        } else if (sgn(a[i][j]) != 0) {
          BigInt t = a[k][k] * a[i][j];
          mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        }
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return true;
}

std::optional<DenseVector> solve_linear(const SparseMatrix& a, const DenseVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_linear: rhs length mismatch");
  const std::size_t n = a.cols();
  Echelon e = bareiss(integer_rows(a, &b), n + 1);
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == n) return std::nullopt;
  return DenseVector(back_substitute(e, n, std::vector<Rational>(n), true));
}

std::vector<DenseVector> null_space(const SparseMatrix& m) {
  const std::size_t n = m.cols();
  Echelon e = bareiss(integer_rows(m), n);
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<DenseVector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(n);
    x[f] = 1;
    basis.emplace_back(back_substitute(e, n, std::move(x), false));
  }
  return basis;
}

}  // namespace liekit
