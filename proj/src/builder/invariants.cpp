#include "liekit/builder/invariants.hpp"

#include "liekit/builder/lattice.hpp"
#include "liekit/core/linalg.hpp"

#include <algorithm>
#include <random>

namespace liekit::builder {

namespace {

std::int64_t coefficient(const std::vector<IntegerTable::IntTerm>& terms, std::size_t k) {
  auto it = std::lower_bound(terms.begin(), terms.end(), k,
                             [](const IntegerTable::IntTerm& t, std::size_t idx) { return t.index < idx; });
  return it != terms.end() && it->index == k ? it->coeff : 0;
}

}  // namespace

SparseMatrix killing_form(const StructureTable& t) {
  const IntegerTable it(t);
  const std::size_t n = it.dim();
  const Rational inv_scale2 = Rational(BigInt(1), it.scale() * it.scale());
  SparseMatrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      // sum_{k,l} c_ik^l c_jl^k; products stay below 2^56 and the sum has at most n^2 terms
      BigInt acc = 0;
      std::int64_t partial = 0;
      for (std::size_t m = 0; m < n; ++m)
        for (const auto& term : it.bracket(i, m)) {
          const std::int64_t c = coefficient(it.bracket(j, term.index), m);
          if (c == 0) continue;
          partial += term.coeff * c;
          if (partial > (std::int64_t{1} << 60) || partial < -(std::int64_t{1} << 60)) {
            acc += static_cast<long>(partial);
            partial = 0;
          }
        }
      acc += static_cast<long>(partial);
      if (acc != 0) {
        const Rational v = Rational(acc) * inv_scale2;
        k.set(i, j, v);
        k.set(j, i, v);
      }
    }
  return k;
}

KillingSummary killing_summary(const StructureTable& t) {
  const SparseMatrix k = killing_form(t);
  return {rank(k), is_negative_definite(k)};
}

std::optional<std::size_t> torus_rank(const StructureTable& t, std::uint64_t seed) {
  const std::size_t n = t.dim();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(-9, 9);
  DenseVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = pick(rng);

  SparseMatrix adx(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    adx = adx + t.ad(i).scaled(x[i]);
  }
  const auto centralizer = null_space(adx);
  for (std::size_t a = 0; a < centralizer.size(); ++a)
    for (std::size_t b = a + 1; b < centralizer.size(); ++b)
      if (!t.bracket(centralizer[a], centralizer[b]).is_zero()) return std::nullopt;
  return centralizer.size();
}

}  // namespace liekit::builder
