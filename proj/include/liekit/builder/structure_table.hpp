#pragma once

#include "liekit/core/sparse.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace liekit::builder {

/// One term coeff * e_index of a bracket expansion.
struct Term {
  std::size_t index;
  Rational coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse vector in the table's basis, sorted by index, no zero terms.
using Terms = std::vector<Term>;

/// Structure constants [e_i, e_j] = sum_k c_ij^k e_k on an indexed basis.
///
/// Only i < j is stored; [e_j, e_i] is the negation and [e_i, e_i] = 0.
class StructureTable {
public:
  StructureTable() = default;
  StructureTable(std::string name, std::vector<std::string> labels);

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Sets [e_i, e_j]; i > j stores the negation under (j, i). i == j requires empty terms.
  void set_bracket(std::size_t i, std::size_t j, Terms terms);
  /// Adds coeff * e_k to [e_i, e_j].
  void add_to_bracket(std::size_t i, std::size_t j, std::size_t k, const Rational& coeff);

  /// [e_i, e_j] for any ordered pair.
  Terms bracket(std::size_t i, std::size_t j) const;
  /// Bracket of two arbitrary vectors given in basis coordinates.
  DenseVector bracket(const DenseVector& x, const DenseVector& y) const;

  const std::map<std::pair<std::size_t, std::size_t>, Terms>& brackets() const { return br_; }
  std::size_t stored_coefficients() const;

  /// Matrix of ad e_i: column k holds the coordinates of [e_i, e_k].
  SparseMatrix ad(std::size_t i) const;

  friend bool operator==(const StructureTable& a, const StructureTable& b) { return a.br_ == b.br_ && a.labels_ == b.labels_; }

private:
  void check_index(std::size_t i) const;

  std::string name_;
  std::vector<std::string> labels_;
  std::map<std::pair<std::size_t, std::size_t>, Terms> br_;
};

/// Normalizes a term list: merges duplicate indices, drops zeros, sorts.
Terms canonical_terms(Terms t);

/// Direct sum of two tables; the second table's indices are shifted by a.dim().
StructureTable direct_sum(const StructureTable& a, const StructureTable& b, std::string name);

}  // namespace liekit::builder
