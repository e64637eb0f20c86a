#include "liekit/builder/jacobi.hpp"

#include "liekit/builder/lattice.hpp"

#include <algorithm>
#include <thread>
#include <tuple>

namespace liekit::builder {

std::uint64_t triple_count(std::size_t n) {
  if (n < 3) return 0;
  const std::uint64_t m = n;
  return m * (m - 1) * (m - 2) / 6;
}

namespace {

struct Partial {
  std::uint64_t triples = 0;
  std::uint64_t violations = 0;
  std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> first;
  std::vector<std::pair<std::size_t, std::int64_t>> first_defect;
};

void sweep_block(const IntegerTable& t, std::size_t i_begin, std::size_t i_end, Partial& out) {
  const std::size_t n = t.dim();
  std::vector<std::int64_t> acc(n, 0);
  std::vector<std::uint32_t> touched;
  touched.reserve(n);

  // acc += [e_a, [e_b, e_c]]
  auto nested = [&](std::size_t a, std::size_t b, std::size_t c) {
    for (const auto& inner : t.bracket(b, c))
      for (const auto& outer : t.bracket(a, inner.index)) {
        if (acc[outer.index] == 0) touched.push_back(outer.index);
        acc[outer.index] += inner.coeff * outer.coeff;
      }
  };

  for (std::size_t i = i_begin; i < i_end; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        nested(i, j, k);
        nested(j, k, i);
        nested(k, i, j);
        ++out.triples;
        bool bad = false;
        for (auto idx : touched)
          if (acc[idx] != 0) {
            bad = true;
            break;
          }
        if (bad) {
          ++out.violations;
          if (!out.first) {
            out.first = {i, j, k};
            for (auto idx : touched)
              if (acc[idx] != 0) out.first_defect.emplace_back(idx, acc[idx]);
            std::sort(out.first_defect.begin(), out.first_defect.end());
            out.first_defect.erase(std::unique(out.first_defect.begin(), out.first_defect.end()),
                                   out.first_defect.end());
          }
        }
        for (auto idx : touched) acc[idx] = 0;
        touched.clear();
      }
}

}  // namespace

JacobiReport verify_jacobi(const StructureTable& table, unsigned workers) {
  const IntegerTable t(table);
  const std::size_t n = t.dim();
  workers = std::max(1u, workers);

  // Contiguous blocks of outer index with balanced triple counts.
  std::vector<std::size_t> cuts{0};
  const std::uint64_t total = triple_count(n);
  std::uint64_t running = 0;
  for (std::size_t i = 0; i < n && cuts.size() < workers; ++i) {
    const std::uint64_t rest = n - 1 - i;
    running += rest * (rest - (rest > 0 ? 1 : 0)) / 2;
    if (running * workers >= total * cuts.size()) cuts.push_back(i + 1);
  }
  while (cuts.back() < n) cuts.push_back(n);
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<Partial> partials(cuts.size() - 1);
  if (partials.size() == 1) {
    sweep_block(t, cuts[0], cuts[1], partials[0]);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t b = 0; b + 1 < cuts.size(); ++b)
      pool.emplace_back(sweep_block, std::cref(t), cuts[b], cuts[b + 1], std::ref(partials[b]));
    for (auto& th : pool) th.join();
  }

  JacobiReport r;
  r.dim = n;
  const Partial* first = nullptr;
  for (const auto& p : partials) {
    r.triples_checked += p.triples;
    r.violations += p.violations;
    if (p.first && (!first || *p.first < *first->first)) first = &p;
  }
  if (first) {
    const auto [i, j, k] = *first->first;
    JacobiViolation v{i, j, k, {}};
    const Rational denom(BigInt(t.scale() * t.scale()));
    for (const auto& [idx, val] : first->first_defect) v.defect.push_back({idx, Rational(BigInt(val)) / denom});
    r.first_violation = std::move(v);
  }
  return r;
}

Terms jacobi_defect(const StructureTable& t, std::size_t i, std::size_t j, std::size_t k) {
  Terms acc;
  auto nested = [&](std::size_t a, std::size_t b, std::size_t c) {
    for (const auto& inner : t.bracket(b, c))
      for (const auto& outer : t.bracket(a, inner.index)) acc.push_back({outer.index, inner.coeff * outer.coeff});
  };
  nested(i, j, k);
  nested(j, k, i);
  nested(k, i, j);
  return canonical_terms(std::move(acc));
}

}  // namespace liekit::builder
