#pragma once

#include "liekit/builder/structure_table.hpp"

#include <cstdint>
#include <optional>

namespace liekit::builder {

/// K(i, j) = tr(ad e_i ad e_j).
SparseMatrix killing_form(const StructureTable& t);

struct KillingSummary {
  std::size_t rank = 0;
  bool negative_definite = false;
  bool compact_semisimple() const { return negative_definite; }
};

/// Rank and Sylvester test of the Killing form.
KillingSummary killing_summary(const StructureTable& t);

/// Centralizer of a pseudo-random integral element. For a compact semisimple
/// algebra a generic element is regular, so the centralizer is a maximal
/// torus; returns its dimension, or nullopt if the centralizer is not abelian
/// (the element was not regular).
std::optional<std::size_t> torus_rank(const StructureTable& t, std::uint64_t seed = 1);

}  // namespace liekit::builder
