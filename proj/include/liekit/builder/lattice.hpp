#pragma once

#include "liekit/builder/structure_table.hpp"

#include <cstdint>
#include <vector>

namespace liekit::builder {

/// Structure constants multiplied by the lcm of their denominators, stored
/// densely by ordered pair for the hot loops (Jacobi sweep, Killing form).
class IntegerTable {
public:
  struct IntTerm {
    std::uint32_t index;
    std::int64_t coeff;
  };

  explicit IntegerTable(const StructureTable& t);

  std::size_t dim() const { return dim_; }
  /// Every stored coefficient is the true one times scale().
  const BigInt& scale() const { return scale_; }
  const std::vector<IntTerm>& bracket(std::size_t i, std::size_t j) const { return br_[i * dim_ + j]; }

private:
  std::size_t dim_;
  BigInt scale_;
  std::vector<std::vector<IntTerm>> br_;
};

}  // namespace liekit::builder
