#include "liekit/builder/classical.hpp"

#include <array>
#include <stdexcept>

namespace liekit::builder {

namespace {

std::vector<std::string> t_labels(std::size_t d) {
  std::vector<std::string> out;
  for (std::size_t k = 1; k <= d; ++k) out.push_back("T_" + std::to_string(k));
  return out;
}

// Complex scalar a + ib written at complex position (r, c) of a real 2n x 2n matrix.
void put_complex(SparseMatrix& m, std::size_t r, std::size_t c, const Rational& a, const Rational& b) {
  m.add(2 * r, 2 * c, a);
  m.add(2 * r, 2 * c + 1, -b);
  m.add(2 * r + 1, 2 * c, b);
  m.add(2 * r + 1, 2 * c + 1, a);
}

// Quaternion units 1, i, j, k as indices 0..3; unit_mul(a, b) = sign * unit.
std::pair<int, int> unit_mul(int a, int b) {
  static constexpr std::array<std::array<std::pair<int, int>, 4>, 4> t{{
      {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
      {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
      {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
      {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
  }};
  return t[a][b];
}

// sign * (unit q) at quaternionic position (r, c), acting by left multiplication.
void put_quaternion(SparseMatrix& m, std::size_t r, std::size_t c, int q, int sign) {
  for (int x = 0; x < 4; ++x) {
    const auto [s, y] = unit_mul(q, x);
    m.add(4 * r + y, 4 * c + x, sign * s);
  }
}

void check_standard(const StructureTable& given, const StructureTable& expected, const char* what) {
  if (!(given == expected))
    throw std::invalid_argument(std::string(what) + ": input is not the standard table in the expected basis");
}

// Action of the even elements on the odd ones by commutators in the big algebra.
GradedSpec graded_from_matrices(std::string name, StructureTable even, std::vector<Summand> summands,
                                const MatrixBasis& big, std::size_t even_count) {
  GradedSpec spec;
  spec.name = std::move(name);
  spec.even = std::move(even);
  spec.summands = std::move(summands);
  std::vector<SparseMatrix> odd(big.elements.begin() + static_cast<std::ptrdiff_t>(even_count), big.elements.end());
  spec.odd_labels.assign(big.labels.begin() + static_cast<std::ptrdiff_t>(even_count), big.labels.end());
  const MatrixDecomposer dec(odd);
  spec.odd_norms = dec.norms();
  for (std::size_t a = 0; a < even_count; ++a) {
    SparseMatrix act(odd.size(), odd.size());
    for (std::size_t i = 0; i < odd.size(); ++i) {
      const auto terms = dec.decompose(commutator(big.elements[a], odd[i]));
      if (!terms) throw std::logic_error(spec.name + ": even part does not preserve the odd part");
      for (const auto& t : *terms) act.set(t.index, i, t.coeff);
    }
    spec.action.push_back(std::move(act));
  }
  return spec;
}

Summand summand_of(std::string role, std::size_t offset, std::size_t count, const MatrixBasis& big) {
  std::vector<SparseMatrix> part(big.elements.begin() + static_cast<std::ptrdiff_t>(offset),
                                 big.elements.begin() + static_cast<std::ptrdiff_t>(offset + count));
  return {std::move(role), offset, count, MatrixDecomposer(part).norms()};
}

BuildResult finish(const GradedSpec& spec, BuildRecipe recipe, unsigned workers) {
  auto sol = solve_graded(spec, workers);
  recipe.free_coefficients = spec.coefficient_names();
  return {std::move(recipe), std::move(sol.table), std::move(sol.coefficients), std::move(sol.jacobi)};
}

}  // namespace

MatrixBasis orthogonal_matrices(int n) {
  if (n < 2) throw std::invalid_argument("orthogonal_matrices: n >= 2");
  MatrixBasis b;
  const auto un = static_cast<std::size_t>(n);
  for (std::size_t j = 1; j < un; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      SparseMatrix m(un, un);
      m.set(j, i, 1);
      m.set(i, j, -1);
      b.elements.push_back(std::move(m));
      b.labels.push_back("L_" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    }
  return b;
}

MatrixBasis unitary_matrices(int n) {
  if (n < 1) throw std::invalid_argument("unitary_matrices: n >= 1");
  const auto un = static_cast<std::size_t>(n);
  MatrixBasis b;
  if (n == 1) return b;
  const MatrixBasis prev = unitary_matrices(n - 1);
  for (const auto& m : prev.elements) {
    SparseMatrix e(2 * un, 2 * un);
    for (const auto& [key, v] : m.entries()) e.set(key.first, key.second, v);
    b.elements.push_back(std::move(e));
  }
  const std::size_t last = un - 1;
  SparseMatrix z(2 * un, 2 * un);
  for (std::size_t r = 0; r < last; ++r) put_complex(z, r, r, 0, 1);
  put_complex(z, last, last, 0, -static_cast<long>(last));
  b.elements.push_back(std::move(z));
  for (std::size_t k = 0; k < last; ++k) {
    SparseMatrix re(2 * un, 2 * un), im(2 * un, 2 * un);
    put_complex(re, k, last, 1, 0);
    put_complex(re, last, k, -1, 0);
    put_complex(im, k, last, 0, 1);
    put_complex(im, last, k, 0, 1);
    b.elements.push_back(std::move(re));
    b.elements.push_back(std::move(im));
  }
  b.labels = t_labels(b.elements.size());
  return b;
}

MatrixBasis symplectic_matrices(int n) {
  if (n < 1) throw std::invalid_argument("symplectic_matrices: n >= 1");
  const auto un = static_cast<std::size_t>(n);
  MatrixBasis b;
  if (n > 1) {
    for (const auto& m : symplectic_matrices(n - 1).elements) {
      SparseMatrix e(4 * un, 4 * un);
      for (const auto& [key, v] : m.entries()) e.set(key.first, key.second, v);
      b.elements.push_back(std::move(e));
    }
  }
  const std::size_t last = un - 1;
  for (int q = 1; q < 4; ++q) {
    SparseMatrix m(4 * un, 4 * un);
    put_quaternion(m, last, last, q, 1);
    b.elements.push_back(std::move(m));
  }
  for (std::size_t k = 0; k < last; ++k)
    for (int q = 0; q < 4; ++q) {
      // M(e_k q): q at (k, last), -conj(q) at (last, k)
      SparseMatrix m(4 * un, 4 * un);
      put_quaternion(m, k, last, q, 1);
      put_quaternion(m, last, k, q, q == 0 ? -1 : 1);
      b.elements.push_back(std::move(m));
    }
  b.labels = t_labels(b.elements.size());
  return b;
}

MatrixDecomposer::MatrixDecomposer(const std::vector<SparseMatrix>& basis) : basis_(basis) {
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    Rational norm;
    for (const auto& [key, v] : basis_[b].entries()) {
      norm += v * v;
      by_entry_[key].emplace_back(b, v);
    }
    if (norm.is_zero()) throw std::invalid_argument("MatrixDecomposer: zero basis element");
    norms_.push_back(norm);
  }
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    const auto t = decompose(basis_[b]);
    if (!t || t->size() != 1 || (*t)[0].index != b)
      throw std::invalid_argument("MatrixDecomposer: basis is not orthogonal");
  }
}

std::optional<Terms> MatrixDecomposer::decompose(const SparseMatrix& m) const {
  std::map<std::size_t, Rational> acc;
  for (const auto& [key, v] : m.entries()) {
    auto it = by_entry_.find(key);
    if (it == by_entry_.end()) return std::nullopt;
    for (const auto& [b, w] : it->second) acc[b] += v * w;
  }
  Terms out;
  SparseMatrix rebuilt(m.rows(), m.cols());
  for (auto& [b, s] : acc) {
    if (s.is_zero()) continue;
    const Rational c = s / norms_[b];
    for (const auto& [key, w] : basis_[b].entries()) rebuilt.add(key.first, key.second, c * w);
    out.push_back({b, c});
  }
  if (!(rebuilt == m)) return std::nullopt;
  return out;
}

StructureTable table_from_matrices(const MatrixBasis& basis, std::string name) {
  const MatrixDecomposer dec(basis.elements);
  StructureTable t(std::move(name), basis.labels);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      auto terms = dec.decompose(commutator(basis.elements[i], basis.elements[j]));
      if (!terms) throw std::logic_error(t.name() + ": matrices are not closed under commutators");
      t.set_bracket(i, j, std::move(*terms));
    }
  return t;
}

StructureTable so_table(int n) { return table_from_matrices(orthogonal_matrices(n), "so(" + std::to_string(n) + ")"); }
StructureTable su_table(int n) { return table_from_matrices(unitary_matrices(n), "su(" + std::to_string(n) + ")"); }
StructureTable sp_table(int n) { return table_from_matrices(symplectic_matrices(n), "sp(" + std::to_string(n) + ")"); }

BuildResult extend_orthogonal(const StructureTable& so_n, int n, unsigned workers) {
  check_standard(so_n, so_table(n), "extend_orthogonal");
  const MatrixBasis big = orthogonal_matrices(n + 1);
  const std::size_t h = so_n.dim();
  auto spec = graded_from_matrices("so(" + std::to_string(n + 1) + ")", so_n,
                                   {summand_of("adjoint", 0, h, big)}, big, h);
  BuildRecipe recipe{"O(" + std::to_string(n + 1) + ")-step", {{"adjoint", h}, {"vector", static_cast<std::size_t>(n)}}, {}};
  return finish(spec, std::move(recipe), workers);
}

BuildResult extend_unitary(const StructureTable& su_n, int n, unsigned workers) {
  check_standard(su_n, su_table(n), "extend_unitary");
  const MatrixBasis big = unitary_matrices(n + 1);
  const std::size_t h = su_n.dim();
  StructureTable u1("u(1)", {big.labels[h]});
  auto spec = graded_from_matrices("su(" + std::to_string(n + 1) + ")", direct_sum(su_n, u1, "s(u(n)+u(1))"),
                                   {summand_of("adjoint", 0, h, big), summand_of("u1", h, 1, big)}, big, h + 1);
  const auto un = static_cast<std::size_t>(n);
  BuildRecipe recipe{"SU(" + std::to_string(n + 1) + ")-step", {{"adjoint", h}, {"u1", 1}, {"vector", un}, {"covector", un}}, {}};
  return finish(spec, std::move(recipe), workers);
}

BuildResult extend_symplectic(const StructureTable& sp_n, int n, unsigned workers) {
  check_standard(sp_n, sp_table(n), "extend_symplectic");
  const MatrixBasis big = symplectic_matrices(n + 1);
  const std::size_t h = sp_n.dim();
  MatrixBasis corner;
  corner.elements.assign(big.elements.begin() + static_cast<std::ptrdiff_t>(h), big.elements.begin() + static_cast<std::ptrdiff_t>(h + 3));
  corner.labels.assign(big.labels.begin() + static_cast<std::ptrdiff_t>(h), big.labels.begin() + static_cast<std::ptrdiff_t>(h + 3));
  auto spec = graded_from_matrices("sp(" + std::to_string(n + 1) + ")",
                                   direct_sum(sp_n, table_from_matrices(corner, "sp(1)"), "sp(n)+sp(1)"),
                                   {summand_of("adjoint", 0, h, big), summand_of("sp1", h, 3, big)}, big, h + 3);
  BuildRecipe recipe{"Sp(" + std::to_string(n + 1) + ")-step",
                     {{"adjoint", h}, {"sp1", 3}, {"vector_pair", 4 * static_cast<std::size_t>(n)}}, {}};
  return finish(spec, std::move(recipe), workers);
}

StructureTable orthogonal_by_steps(int n, unsigned workers) {
  if (n < 2) throw std::invalid_argument("orthogonal_by_steps: n >= 2");
  StructureTable t = so_table(2);
  for (int k = 2; k < n; ++k) t = extend_orthogonal(t, k, workers).table;
  return t;
}

StructureTable unitary_by_steps(int n, unsigned workers) {
  if (n < 1) throw std::invalid_argument("unitary_by_steps: n >= 1");
  StructureTable t = su_table(1);
  for (int k = 1; k < n; ++k) t = extend_unitary(t, k, workers).table;
  return t;
}

StructureTable symplectic_by_steps(int n, unsigned workers) {
  if (n < 1) throw std::invalid_argument("symplectic_by_steps: n >= 1");
  StructureTable t = sp_table(1);
  for (int k = 1; k < n; ++k) t = extend_symplectic(t, k, workers).table;
  return t;
}

}  // namespace liekit::builder
