#pragma once

#include "liekit/builder/graded.hpp"

#include <optional>
#include <string>

namespace liekit::builder {

enum class Exceptional { G2, F4, E6, E7, E8 };

std::optional<Exceptional> parse_exceptional(const std::string& name);
std::string to_string(Exceptional e);

/// Recipes (even part + odd part):
///   G2 = su(3) + C^3           (3 + 3*, with a cubic [3,3] -> 3* term)
///   F4 = so(9) + Delta_16
///   E6 = so(10) + u(1) + Delta_32    (u(1) acts by the chirality, which squares to -1)
///   E7 = so(12) + sp(1) + Delta_64   (one chirality half, quaternionic via the Clifford commutant)
///   E8 = so(16) + Delta_128          (one chirality half)
GradedSpec exceptional_spec(Exceptional e);
BuildRecipe exceptional_recipe(Exceptional e);

/// Solves the free bracket coefficients and runs the full Jacobi sweep.
BuildResult build_exceptional(Exceptional e, unsigned workers = 1);

/// so(n) + spinor with the same bracket ansatz (one chirality half when n = 0 mod 4).
/// Closes for n = 8 (so(9) by triality), 9 (F4) and 16 (E8); other n throw
/// NormalizationUnsolvable.
GradedSpec spin_extension_spec(int n);
BuildResult build_spin_extension(int n, unsigned workers = 1);

}  // namespace liekit::builder
