#include "liekit/builder/graded.hpp"

#include "liekit/core/linalg.hpp"

#include <algorithm>
#include <tuple>

namespace liekit::builder {

std::size_t GradedSpec::gauge_index() const {
  if (cubic) return summands.size();
  for (std::size_t s = 0; s < summands.size(); ++s)
    if (summands[s].count > 0) return s;
  throw std::invalid_argument("GradedSpec: no nonempty summand to fix the scale");
}

std::vector<std::string> GradedSpec::coefficient_names() const {
  std::vector<std::string> names;
  for (const auto& s : summands) names.push_back("c_" + s.role);
  if (cubic) names.push_back("mu_cubic");
  return names;
}

namespace {

void check_spec(const GradedSpec& spec) {
  std::size_t covered = 0;
  for (const auto& s : spec.summands) {
    if (s.offset != covered || s.norms.size() != s.count)
      throw std::invalid_argument("GradedSpec: summands must tile the even basis in order");
    covered += s.count;
  }
  if (covered != spec.even_dim()) throw std::invalid_argument("GradedSpec: summands do not cover the even part");
  if (spec.action.size() != spec.even_dim()) throw std::invalid_argument("GradedSpec: one action matrix per even element");
  for (const auto& m : spec.action)
    if (m.rows() != spec.odd_dim() || m.cols() != spec.odd_dim())
      throw std::invalid_argument("GradedSpec: action matrix has wrong shape");
  if (spec.odd_norms.size() != spec.odd_dim()) throw std::invalid_argument("GradedSpec: odd norms length");
}

}  // namespace

StructureTable assemble(const GradedSpec& spec, const std::vector<Rational>& coefficients) {
  check_spec(spec);
  if (coefficients.size() != spec.coefficient_count()) throw std::invalid_argument("assemble: coefficient count");
  const std::size_t h = spec.even_dim();
  std::vector<std::string> labels = spec.even.labels();
  labels.insert(labels.end(), spec.odd_labels.begin(), spec.odd_labels.end());
  StructureTable t(spec.name, std::move(labels));

  for (const auto& [key, terms] : spec.even.brackets()) t.set_bracket(key.first, key.second, terms);

  std::map<std::pair<std::size_t, std::size_t>, Terms> acc;
  for (std::size_t s = 0; s < spec.summands.size(); ++s) {
    const auto& sm = spec.summands[s];
    for (std::size_t a = sm.offset; a < sm.offset + sm.count; ++a) {
      for (const auto& [key, val] : spec.action[a].entries()) {
        const auto [row, col] = key;  // action[a] v_col has component val on v_row
        acc[{a, h + col}].push_back({h + row, val});
        if (col < row) {
          // <action[a] v_col, v_row> = val * |v_row|^2
          const Rational c = coefficients[s] * val * spec.odd_norms[row] / sm.norms[a - sm.offset];
          acc[{h + col, h + row}].push_back({a, c});
        }
      }
    }
  }
  if (spec.cubic) {
    const Rational& mu = coefficients.back();
    for (const auto& [key, terms] : *spec.cubic)
      for (const auto& term : terms) acc[{h + key.first, h + key.second}].push_back({h + term.index, mu * term.coeff});
  }
  for (auto& [key, terms] : acc) t.set_bracket(key.first, key.second, std::move(terms));
  return t;
}

namespace {

using Triple = std::tuple<std::size_t, std::size_t, std::size_t>;

// Deterministic constraint sample: odd-odd-odd triples anchored at the first
// odd element, one even-odd-odd triple per summand, and every even-odd-odd
// triple touching a summand after the first.
std::vector<Triple> sample_triples(const GradedSpec& spec) {
  const std::size_t h = spec.even_dim();
  const std::size_t v = spec.odd_dim();
  std::vector<Triple> out;
  if (v >= 3)
    for (std::size_t j = 1; j < std::min<std::size_t>(v, 13); ++j)
      for (std::size_t k = j + 1; k < v; ++k) out.emplace_back(h, h + j, h + k);
  if (v >= 2) {
    for (std::size_t s = 0; s < spec.summands.size(); ++s) {
      const auto& sm = spec.summands[s];
      if (sm.count == 0) continue;
      if (s == 0) {
        out.emplace_back(sm.offset, h, h + 1);
        continue;
      }
      for (std::size_t a = sm.offset; a < sm.offset + sm.count; ++a)
        for (std::size_t i = 0; i < v; ++i)
          for (std::size_t j = i + 1; j < v; ++j) out.emplace_back(a, h + i, h + j);
    }
  }
  return out;
}

std::vector<Terms> defects(const StructureTable& t, const std::vector<Triple>& triples) {
  std::vector<Terms> d;
  d.reserve(triples.size());
  for (const auto& [i, j, k] : triples) d.push_back(jacobi_defect(t, i, j, k));
  return d;
}

}  // namespace

GradedSolution solve_graded(const GradedSpec& spec, unsigned workers) {
  const std::size_t ncoef = spec.coefficient_count();
  const std::size_t gauge = spec.gauge_index();
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < ncoef; ++c)
    if (c != gauge) free.push_back(c);

  std::vector<Rational> base(ncoef);
  base[gauge] = 1;
  const auto triples = sample_triples(spec);

  // Jacobi defects on the sample are affine in the free coefficients once the
  // gauge is fixed; recover the affine map from 1 + |free| evaluations.
  const auto d0 = defects(assemble(spec, base), triples);
  std::vector<std::vector<Terms>> slopes;
  for (auto f : free) {
    auto x = base;
    x[f] = 1;
    slopes.push_back(defects(assemble(spec, x), triples));
  }

  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (std::size_t t = 0; t < triples.size(); ++t) {
    std::map<std::size_t, std::vector<Rational>> by_component;
    auto slot = [&](std::size_t comp) -> std::vector<Rational>& {
      auto it = by_component.find(comp);
      if (it == by_component.end()) it = by_component.emplace(comp, std::vector<Rational>(free.size() + 1)).first;
      return it->second;
    };
    for (const auto& term : d0[t]) slot(term.index)[free.size()] += term.coeff;
    for (std::size_t f = 0; f < free.size(); ++f) {
      for (const auto& term : slopes[f][t]) slot(term.index)[f] += term.coeff;
      for (const auto& term : d0[t]) slot(term.index)[f] -= term.coeff;
    }
    for (auto& [comp, row] : by_component) {
      if (std::all_of(row.begin(), row.end(), [](const Rational& r) { return r.is_zero(); })) continue;
      rhs.push_back(-row.back());
      row.pop_back();
      rows.push_back(std::move(row));
    }
  }

  SparseMatrix a(rows.size(), free.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t f = 0; f < free.size(); ++f) a.set(r, f, rows[r][f]);
  const auto sol = solve_linear(a, DenseVector(rhs));
  if (!sol)
    throw NormalizationUnsolvable(spec.name + ": no coefficient assignment satisfies the sampled Jacobi constraints (" +
                                  std::to_string(rows.size()) + " equations)");

  std::vector<Rational> coeffs = base;
  for (std::size_t f = 0; f < free.size(); ++f) coeffs[free[f]] = (*sol)[f];

  GradedSolution out;
  out.table = assemble(spec, coeffs);
  out.constraint_rows = rows.size();
  const auto names = spec.coefficient_names();
  for (std::size_t c = 0; c < ncoef; ++c) out.coefficients.emplace_back(names[c], coeffs[c]);
  out.jacobi = verify_jacobi(out.table, workers);
  if (!out.jacobi.ok())
    throw JacobiFailure(spec.name + ": sampled normalization solved but the full sweep found " +
                            std::to_string(out.jacobi.violations) + " violations",
                        out.jacobi);
  return out;
}

}  // namespace liekit::builder
