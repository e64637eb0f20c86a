#pragma once

#include "liekit/builder/graded.hpp"

#include <optional>
#include <string>
#include <vector>

namespace liekit::builder {

/// Real antisymmetric matrices spanning a compact classical algebra in its
/// defining representation, mutually orthogonal under <X, Y> = -tr(XY).
struct MatrixBasis {
  std::vector<SparseMatrix> elements;
  std::vector<std::string> labels;
  std::size_t size() const { return elements.size(); }
};

/// so(n), n >= 2: L_i_j = E_ji - E_ij, ordered by j then i (L_1_2, L_1_3, L_2_3, L_1_4, ...),
/// so the first dim so(n-1) elements span so(n-1).
MatrixBasis orthogonal_matrices(int n);

/// su(n), n >= 1, acting on C^n = R^2n (complex a+ib as the block [[a,-b],[b,a]]).
/// Order: su(n-1) block, Z = i diag(1,..,1,-(n-1)), then for each k < n-1 the pair
/// M(e_k), M(i e_k) with M(w) = [[0, w], [-w^H, 0]] in the last column. Labels T_1..T_d.
MatrixBasis unitary_matrices(int n);

/// sp(n), n >= 1, acting on H^n = R^4n by left multiplication. Order: sp(n-1)
/// block, the corner sp(1) (i, j, k), then M(e_k q) for q in 1, i, j, k. Labels T_1..T_d.
MatrixBasis symplectic_matrices(int n);

/// Coordinates in an orthogonal matrix basis via the Frobenius pairing
/// (which equals -tr(XY) on antisymmetric matrices).
class MatrixDecomposer {
public:
  explicit MatrixDecomposer(const std::vector<SparseMatrix>& basis);
  /// nullopt when m is not in the span.
  std::optional<Terms> decompose(const SparseMatrix& m) const;
  const std::vector<Rational>& norms() const { return norms_; }

private:
  std::vector<SparseMatrix> basis_;
  std::vector<Rational> norms_;
  std::map<SparseMatrix::Key, std::vector<std::pair<std::size_t, Rational>>> by_entry_;
};

/// Structure constants of a matrix algebra from its commutators.
StructureTable table_from_matrices(const MatrixBasis& basis, std::string name);

StructureTable so_table(int n);
StructureTable su_table(int n);
StructureTable sp_table(int n);

/// so(n) -> so(n+1): adds x_k = L_k_{n+1}. The input must be the standard
/// so(n) table (as produced by so_table or a previous step).
BuildResult extend_orthogonal(const StructureTable& so_n, int n, unsigned workers = 1);
/// su(n) -> su(n+1): adds the central direction Z and the complex vector pair n + n*.
BuildResult extend_unitary(const StructureTable& su_n, int n, unsigned workers = 1);
/// sp(n) -> sp(n+1): adds a commuting sp(1) and the quaternionic vector 2(n + n*).
BuildResult extend_symplectic(const StructureTable& sp_n, int n, unsigned workers = 1);

/// Iterated steps from the smallest case: so(2), su(1), sp(1).
StructureTable orthogonal_by_steps(int n, unsigned workers = 1);
StructureTable unitary_by_steps(int n, unsigned workers = 1);
StructureTable symplectic_by_steps(int n, unsigned workers = 1);

}  // namespace liekit::builder
