#pragma once

#include "liekit/builder/jacobi.hpp"
#include "liekit/builder/structure_table.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liekit::builder {

/// A block of the even part carrying its own invariant form.
struct Summand {
  std::string role;
  std::size_t offset = 0;
  std::size_t count = 0;
  std::vector<Rational> norms;  // squared norm of each basis element under the summand's invariant form
};

/// Data for an algebra g = h + V where h acts on V orthogonally.
///
/// Brackets:
///   [h, h]  from `even`
///   [x, v]  = action[x] v
///   [u, v]  = sum_s c_s sum_{a in s} <action[a] u, v> / norm_a  e_a   (+ mu * cubic(u, v))
/// The c_s (one per summand) and mu are the free coefficients; Jacobi fixes
/// their ratios. With a cubic term mu is the gauge (mu = 1); otherwise the
/// first nonempty summand's c is.
struct GradedSpec {
  std::string name;
  StructureTable even;
  std::vector<Summand> summands;
  std::vector<std::string> odd_labels;
  std::vector<SparseMatrix> action;  // one odd x odd matrix per even basis element
  std::vector<Rational> odd_norms;   // diagonal inner product on V (basis is orthogonal)
  std::optional<std::map<std::pair<std::size_t, std::size_t>, Terms>> cubic;  // (i < j) in V -> terms in V

  std::size_t even_dim() const { return even.dim(); }
  std::size_t odd_dim() const { return odd_labels.size(); }
  std::size_t coefficient_count() const { return summands.size() + (cubic ? 1 : 0); }
  std::size_t gauge_index() const;
  std::vector<std::string> coefficient_names() const;
};

struct NormalizationUnsolvable : std::runtime_error {
  explicit NormalizationUnsolvable(const std::string& w) : std::runtime_error(w) {}
};

/// Builds the table for a given coefficient vector (summands in order, then mu).
StructureTable assemble(const GradedSpec& spec, const std::vector<Rational>& coefficients);

struct GradedSolution {
  StructureTable table;
  std::vector<std::pair<std::string, Rational>> coefficients;
  std::size_t constraint_rows = 0;
  JacobiReport jacobi;
};

/// Summary of a construction: target, (role, dimension) of each piece, and
/// the names of the scalars Jacobi had to fix.
struct BuildRecipe {
  std::string target;
  std::vector<std::pair<std::string, std::size_t>> summands;
  std::vector<std::string> free_coefficients;
  std::size_t dim() const {
    std::size_t d = 0;
    for (const auto& s : summands) d += s.second;
    return d;
  }
};

struct BuildResult {
  BuildRecipe recipe;
  StructureTable table;
  std::vector<std::pair<std::string, Rational>> coefficients;
  JacobiReport jacobi;
};

/// Solves the free coefficients from a deterministic sample of Jacobi
/// triples, then runs the full sweep. Throws NormalizationUnsolvable when the
/// sampled constraints are inconsistent and JacobiFailure when the sweep
/// finds a violation.
GradedSolution solve_graded(const GradedSpec& spec, unsigned workers = 1);

}  // namespace liekit::builder
