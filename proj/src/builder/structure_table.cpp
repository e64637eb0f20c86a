#include "liekit/builder/structure_table.hpp"

#include <algorithm>
#include <stdexcept>

namespace liekit::builder {

Terms canonical_terms(Terms t) {
  std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
  Terms out;
  for (auto& term : t) {
    if (!out.empty() && out.back().index == term.index)
      out.back().coeff += term.coeff;
    else
      out.push_back(std::move(term));
    if (out.back().coeff.is_zero()) out.pop_back();
  }
  return out;
}

StructureTable::StructureTable(std::string name, std::vector<std::string> labels)
    : name_(std::move(name)), labels_(std::move(labels)) {}

void StructureTable::check_index(std::size_t i) const {
  if (i >= dim()) throw std::out_of_range("StructureTable: basis index " + std::to_string(i) + " >= dim " + std::to_string(dim()));
}

void StructureTable::set_bracket(std::size_t i, std::size_t j, Terms terms) {
  check_index(i);
  check_index(j);
  for (const auto& t : terms) check_index(t.index);
  terms = canonical_terms(std::move(terms));
  if (i == j) {
    if (!terms.empty()) throw std::invalid_argument("StructureTable: [e_i, e_i] must vanish");
    return;
  }
  if (i > j) {
    for (auto& t : terms) t.coeff = -t.coeff;
    std::swap(i, j);
  }
  if (terms.empty())
    br_.erase({i, j});
  else
    br_[{i, j}] = std::move(terms);
}

void StructureTable::add_to_bracket(std::size_t i, std::size_t j, std::size_t k, const Rational& coeff) {
  check_index(k);
  if (coeff.is_zero()) return;
  if (i == j) throw std::invalid_argument("StructureTable: [e_i, e_i] must vanish");
  Terms t = bracket(i, j);
  t.push_back({k, coeff});
  set_bracket(i, j, std::move(t));
}

Terms StructureTable::bracket(std::size_t i, std::size_t j) const {
  check_index(i);
  check_index(j);
  if (i == j) return {};
  const bool flip = i > j;
  auto it = br_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
  if (it == br_.end()) return {};
  Terms t = it->second;
  if (flip)
    for (auto& term : t) term.coeff = -term.coeff;
  return t;
}

DenseVector StructureTable::bracket(const DenseVector& x, const DenseVector& y) const {
  if (x.size() != dim() || y.size() != dim()) throw std::invalid_argument("StructureTable: vector length mismatch");
  DenseVector out(dim());
  for (const auto& [key, terms] : br_) {
    const auto [i, j] = key;
    // x_i y_j [e_i,e_j] + x_j y_i [e_j,e_i]
    Rational w = x[i] * y[j] - x[j] * y[i];
    if (w.is_zero()) continue;
    for (const auto& t : terms) out[t.index] += w * t.coeff;
  }
  return out;
}

std::size_t StructureTable::stored_coefficients() const {
  std::size_t n = 0;
  for (const auto& [key, terms] : br_) n += terms.size();
  return n;
}

SparseMatrix StructureTable::ad(std::size_t i) const {
  check_index(i);
  SparseMatrix m(dim(), dim());
  for (std::size_t k = 0; k < dim(); ++k)
    for (const auto& t : bracket(i, k)) m.set(t.index, k, t.coeff);
  return m;
}

StructureTable direct_sum(const StructureTable& a, const StructureTable& b, std::string name) {
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  StructureTable s(std::move(name), std::move(labels));
  for (const auto& [key, terms] : a.brackets()) s.set_bracket(key.first, key.second, terms);
  const std::size_t off = a.dim();
  for (const auto& [key, terms] : b.brackets()) {
    Terms shifted = terms;
    for (auto& t : shifted) t.index += off;
    s.set_bracket(key.first + off, key.second + off, std::move(shifted));
  }
  return s;
}

}  // namespace liekit::builder
