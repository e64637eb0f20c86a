#pragma once

#include "liekit/core/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace liekit::rootsys {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct InvalidGroupId : std::invalid_argument {
  explicit InvalidGroupId(const std::string& what) : std::invalid_argument("invalid group id: " + what) {}
};

struct NonIntegerResult : std::logic_error {
  explicit NonIntegerResult(const std::string& what) : std::logic_error(what) {}
};

/// A simple type in Cartan notation, e.g. {E, 8}.
struct GroupId {
  Family family = Family::A;
  int rank = 1;

  std::string str() const;
  /// Accepts Cartan labels ("F4", "D8") only; see names.hpp for SU(n)/SO(n)/Sp(n).
  static GroupId parse(const std::string& s);

  friend bool operator==(const GroupId&, const GroupId&) = default;
};

/// Throws InvalidGroupId for non-simple or nonexistent ids (D2, E5, F3, ...).
void validate(const GroupId& id);

/// Dimension of the simple algebra, from closed formulas (no root enumeration).
int known_dimension(const GroupId& id);

using IntMatrix = std::vector<std::vector<int>>;
using Root = std::vector<int>;  // coordinates in the simple-root basis

/// Dynkin labels in the fundamental-weight basis.
struct Weight {
  std::vector<int> labels;
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// Tag recorded in every report that lists per-node data.
inline constexpr const char* kNodeOrdering = "bourbaki";

struct RootSystem {
  std::optional<GroupId> id;      // empty for subsystems built from a Cartan matrix
  IntMatrix cartan;               // a_ij = <alpha_i^vee, alpha_j>
  std::vector<int> half_norms;    // (alpha_i, alpha_i)/2, minimal positive integers per component
  std::vector<Root> positive_roots;  // ordered by height, then lexicographically
  Weight rho;
  std::vector<int> exponents;
  std::vector<int> degrees;
  std::uint64_t weyl_order = 1;
  std::optional<int> coxeter_number;  // only for simple systems

  int rank() const { return static_cast<int>(cartan.size()); }
  int dim() const { return rank() + 2 * static_cast<int>(positive_roots.size()); }

  /// Symmetrized inner product of two roots given in simple-root coordinates.
  long inner(const Root& a, const Root& b) const;
  /// Pairing (lambda, beta) of a weight with a root.
  long pair(const Weight& w, const Root& beta) const;
  /// Highest root (last positive root).
  const Root& highest_root() const { return positive_roots.back(); }
};

IntMatrix cartan_matrix(const GroupId& id);

RootSystem build_root_system(const GroupId& id);

/// Root system of an arbitrary (possibly decomposable) Cartan matrix.
RootSystem root_system_from_cartan(const IntMatrix& cartan);

/// Exponents by duality with the partition of positive roots by height.
std::vector<int> exponents_of(const RootSystem& rs);

/// Product of the degrees m_i + 1.
std::uint64_t weyl_order_of(const RootSystem& rs);

/// Weyl dimension formula, exact.
BigInt weyl_dim(const RootSystem& rs, const Weight& w);

/// Dimensions of the fundamental irreps in Bourbaki node order.
std::vector<BigInt> fundamental_dims(const GroupId& id);

Weight fundamental_weight(const RootSystem& rs, int node);
/// Simple reflection s_i on Dynkin labels.
Weight reflect(const RootSystem& rs, const Weight& w, int i);

struct OrbitCapExceeded : std::runtime_error {
  explicit OrbitCapExceeded(std::uint64_t cap)
      : std::runtime_error("Weyl orbit exceeds cap of " + std::to_string(cap) + " points") {}
};

/// Breadth-first orbit of a dominant weight under simple reflections. The
/// callback receives each orbit point with its BFS depth, which equals the
/// length of the shortest Weyl element reaching it. Returns the orbit size.
std::uint64_t weyl_orbit(const RootSystem& rs, const Weight& dominant, std::uint64_t cap,
                         const std::function<void(const Weight&, int depth)>& visit);

}  // namespace liekit::rootsys
