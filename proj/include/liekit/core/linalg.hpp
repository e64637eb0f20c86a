#pragma once

#include "liekit/core/sparse.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace liekit {

struct NonSymmetric : std::invalid_argument {
  NonSymmetric() : std::invalid_argument("matrix is not symmetric") {}
};

/// Exact rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank(const SparseMatrix& m);

/// Sylvester criterion: leading principal minors alternate in sign starting
/// negative. Throws NonSymmetric when m != m^T.
bool is_negative_definite(const SparseMatrix& m);

/// One exact solution of a*x = b (free variables set to zero), or nullopt
/// when the system is inconsistent.
std::optional<DenseVector> solve_linear(const SparseMatrix& a, const DenseVector& b);

/// Basis of {x : m*x = 0}. Each basis vector has a 1 in its free column.
std::vector<DenseVector> null_space(const SparseMatrix& m);

}  // namespace liekit
