#pragma once

#include "liekit/rootsys/root_system.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace liekit::kostant {

using rootsys::Root;
using rootsys::RootSystem;
using rootsys::Weight;

struct NotEqualRank : std::invalid_argument {
  explicit NotEqualRank(const std::string& w) : std::invalid_argument(w) {}
};
struct NotDivisible : std::logic_error {
  explicit NotDivisible(const std::string& w) : std::logic_error(w) {}
};
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& w) : std::runtime_error(w) {}
};
struct InvalidSubgroup : std::invalid_argument {
  explicit InvalidSubgroup(const std::string& w) : std::invalid_argument(w) {}
};

/// H inside G given by roots of G (simple-root coordinates of G, negative
/// roots allowed) forming a simple system of H, plus torus factors making up
/// the rest of the rank.
struct EqualRankPair {
  std::string name;
  RootSystem big;
  std::vector<Root> small_simple_roots;
  int torus = 0;
  RootSystem small;                        // built from the inner products of small_simple_roots
  std::vector<std::vector<Rational>> torus_directions;  // in G simple-root coordinates, orthogonal to H
};

/// Validates the roots (each a root of G, independent, pairwise angles of a
/// simple system) and the rank count. Throws InvalidSubgroup / NotEqualRank.
EqualRankPair make_pair(const rootsys::GroupId& big, std::vector<Root> small_simple_roots, int torus,
                        std::string name = "");

/// |W(G)| / |W(H)|.
std::uint64_t euler_number(const EqualRankPair& p);

struct MultipletEntry {
  int sign = 1;     // (-1)^length
  int length = 0;   // Weyl length relative to the reference entry (see multiplets)
  Weight weight;    // H highest weight w(rho_G) - rho_H, labels in the order of small_simple_roots
  BigInt dim;
  std::vector<Rational> torus_charges;  // (w(rho_G), t) per torus direction
};

struct Multiplet {
  std::vector<MultipletEntry> entries;  // by descending torus charge, then descending length
  BigInt signed_sum() const;
  BigInt unsigned_sum() const;
};

inline constexpr std::uint64_t kDefaultOrbitCap = 5'000'000;

/// Weyl-orbit points w(rho_G) that are H-dominant, one H-irrep each.
///
/// Each such point is the Weyl vector of a positive system of G containing
/// H's positive roots. Lengths are measured in the one nearest to G's own
/// (smallest standard length); that entry has length 0 and sign +.
Multiplet multiplets(const EqualRankPair& p, std::uint64_t cap = kDefaultOrbitCap);

struct SpinSplitTerm {
  int degree;
  BigInt dim;
  int sign;
};

/// Spin module of Spin(2n) restricted to U(n): Lambda^p C^n with sign (-1)^p.
std::vector<SpinSplitTerm> spin_split_under_u(int n);

/// Built-in pairs: "F4/B4", "A4/A3+t", "C3/C1xC2".
std::vector<std::string> preset_names();
EqualRankPair preset(const std::string& name);

/// Resolves a (G, H) pair from command-line spellings: the presets (also as
/// "F4 B4", "SU(5) U(4)", "Sp(3) Sp(1)xSp(2)"), H = G, and A_n with U(n).
EqualRankPair resolve_pair(const std::string& big, const std::string& small);

}  // namespace liekit::kostant
