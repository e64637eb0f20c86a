#pragma once

#include "liekit/core/sparse.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liekit::builder {

/// Square matrix with exactly one entry +-1 per row and column:
/// column c maps e_c to sign[c] * e_{target[c]}.
class SignedPerm {
public:
  SignedPerm() = default;
  static SignedPerm identity(std::size_t n);
  /// Tensor product of 2x2 letters: 'I' identity, 'X' swap, 'Z' diag(1,-1),
  /// 'E' the antisymmetric [[0,1],[-1,0]]. Leftmost letter is the most significant factor.
  static SignedPerm word(const std::string& letters);

  std::size_t size() const { return target_.size(); }
  std::size_t target(std::size_t c) const { return target_[c]; }
  int sign(std::size_t c) const { return sign_[c]; }
  int at(std::size_t r, std::size_t c) const { return target_[c] == r ? sign_[c] : 0; }

  SignedPerm operator*(const SignedPerm& o) const;
  SignedPerm operator-() const;
  SignedPerm transpose() const;
  bool is_symmetric() const { return *this == transpose(); }
  bool is_antisymmetric() const { return *this == -transpose(); }
  SparseMatrix to_sparse() const;

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;

private:
  std::vector<std::uint32_t> target_;
  std::vector<std::int8_t> sign_;
};

struct Unsupported : std::invalid_argument {
  explicit Unsupported(const std::string& w) : std::invalid_argument(w) {}
};

/// Invariant subspace of a spinor module, spanned by mutually orthogonal
/// vectors of equal squared norm.
struct SpinorSubspace {
  std::vector<DenseVector> basis;
  Rational norm;  // common squared length of the basis vectors
  std::size_t dim() const { return basis.size(); }
};

/// Real irreducible module of the Clifford algebra with n generators squaring to +1.
struct CliffordRep {
  int n = 0;
  std::size_t dim_spinor = 0;
  std::vector<std::string> words;   // tensor word of each gamma
  std::vector<SignedPerm> gammas;   // symmetric, pairwise anticommuting, square to identity
  std::optional<SignedPerm> chirality;  // gamma_1 ... gamma_n for even n
  bool chirality_is_complex_structure = false;  // chirality^2 = -1 (n = 2 mod 4)
  /// For n = 0 mod 4: chirality eigenspaces +1 and -1 with projectors (1 +- chirality)/2.
  std::optional<std::pair<SpinorSubspace, SpinorSubspace>> half_spinors;
  std::optional<std::pair<SparseMatrix, SparseMatrix>> half_projectors;
};

/// Real gamma matrices for 1 <= n <= 16 from a deterministic search over
/// tensor words (n <= 8) and the mod-8 periodicity (n > 8). Throws Unsupported otherwise.
CliffordRep clifford(int n);

/// Spin generator (1/2) gamma_a gamma_b for 0 <= a < b < n.
SparseMatrix spin_generator(const CliffordRep& c, int a, int b);

/// Words commuting with every gamma, excluding the identity. For n = 4 mod 8
/// these are three anticommuting complex structures (right quaternion action).
std::vector<SignedPerm> clifford_commutant(const CliffordRep& c);

/// Matrix of an operator preserving `sub`, in the subspace basis.
SparseMatrix restrict_to(const SparseMatrix& op, const SpinorSubspace& sub);

/// Whole module as a subspace (standard basis, norm 1).
SpinorSubspace full_module(const CliffordRep& c);

/// Antisymmetric square of the spinor space decomposed into p-form pieces:
/// returns (p, dimension of the image of Lambda^2 S -> Lambda^p R^n) for
/// every p with nonzero image. Uses the (+) half-spinor for n = 0 mod 4.
/// Degrees p and n - p give the same piece when the chirality acts as a
/// scalar; only p <= n/2 is reported then.
std::vector<std::pair<int, std::size_t>> spin_wedge_decomposition(int n);

}  // namespace liekit::builder
