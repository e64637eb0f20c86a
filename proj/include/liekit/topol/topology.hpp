#pragma once

#include "liekit/rootsys/root_system.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace liekit::topol {

using rootsys::GroupId;

/// Integer polynomial, coefficient k is the Betti number b_k.
using Polynomial = std::vector<long>;

/// prod_i (1 + t^(2 m_i + 1)) over the exponents.
Polynomial poincare_poly(const GroupId& id);
Polynomial multiply(const Polynomial& a, const Polynomial& b);
std::string to_string(const Polynomial& p);

struct Capicua {
  std::vector<int> diffs;
  bool is_palindrome = true;
};
Capicua capicua(const GroupId& id);

/// Primes p with p-torsion in the integral cohomology of the simply connected
/// compact group. Reference data, not computed.
std::set<int> torsion_primes(const GroupId& id);
inline constexpr const char* kTorsionProvenance = "paper-reference-data";

struct DimensionMismatch : std::runtime_error {
  explicit DimensionMismatch(const std::string& w) : std::runtime_error(w) {}
};

/// A group expression: factors joined by 'x' or '.', each a classical or
/// Cartan name (SU(5), Spin(10), U(1), F4, O(3), ...).
int group_expression_dim(const std::string& expr);

struct CosetEntry {
  std::string big;
  std::string small;
  std::string space_name;
  int space_dim = 0;
};

/// dim(big) - dim(small), checked against space_dim. Throws DimensionMismatch.
int coset_dim(const CosetEntry& e);

/// Coset bookkeeping table: projective planes, the E6 coset, and the
/// neighbouring rows.
const std::vector<CosetEntry>& coset_table();
std::optional<CosetEntry> find_coset(const std::string& name);

struct FibrationNote {
  std::string subject;
  std::string text;
};

struct TopologyReport {
  GroupId id;
  int dim = 0;
  std::vector<int> exponents;
  std::vector<int> sphere_dims;
  Polynomial poincare;
  std::set<int> torsion_primes;
  Capicua capicua;
  std::optional<int> coxeter_number;
  std::vector<FibrationNote> fibration_notes;
};

TopologyReport sphere_structure_report(const GroupId& id);

/// Static notes on the low-rank coincidences and twisted sphere products.
const std::vector<std::pair<GroupId, FibrationNote>>& fibration_table();

}  // namespace liekit::topol
