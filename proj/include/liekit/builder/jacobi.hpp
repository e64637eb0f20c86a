#pragma once

#include "liekit/builder/structure_table.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace liekit::builder {

struct JacobiViolation {
  std::size_t i, j, k;
  Terms defect;  // [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]
  friend bool operator==(const JacobiViolation&, const JacobiViolation&) = default;
};

struct JacobiReport {
  std::size_t dim = 0;
  std::uint64_t triples_checked = 0;
  std::uint64_t violations = 0;
  std::optional<JacobiViolation> first_violation;  // lexicographically smallest (i, j, k)

  bool ok() const { return violations == 0; }
  friend bool operator==(const JacobiReport&, const JacobiReport&) = default;
};

struct JacobiFailure : std::runtime_error {
  JacobiFailure(const std::string& what, JacobiReport r) : std::runtime_error(what), report(std::move(r)) {}
  JacobiReport report;
};

/// Exhaustive Jacobi sweep over all triples i < j < k.
///
/// The triple space is split by outer index i into contiguous blocks of
/// roughly equal size, one per worker. Each worker owns its partial report;
/// partials merge by summing counts and keeping the smallest violating
/// triple, so the result does not depend on the worker count.
JacobiReport verify_jacobi(const StructureTable& t, unsigned workers = 1);

/// Jacobi defect of a single triple, in exact arithmetic.
Terms jacobi_defect(const StructureTable& t, std::size_t i, std::size_t j, std::size_t k);

/// Number of unordered triples, C(n, 3).
std::uint64_t triple_count(std::size_t n);

}  // namespace liekit::builder
