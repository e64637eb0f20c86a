#pragma once

#include "liekit/rootsys/root_system.hpp"

#include <string>

namespace liekit::rootsys {

/// A group named on the command line. U(n) resolves to A_{n-1} with one
/// torus factor; SU/SO/Spin/Sp resolve to their Cartan type.
struct NamedGroup {
  GroupId id;
  int torus = 0;
  std::string display;  // canonical spelling, e.g. "SU(5)" or "F4"
};

/// Name table:
///   A_n = SU(n+1)   B_n = SO(2n+1) = Spin(2n+1)   C_n = Sp(n)
///   D_n = SO(2n) = Spin(2n)   U(n) = A_{n-1} + torus
/// Cartan labels (F4, D8) are accepted directly; matching is case-insensitive.
NamedGroup parse_group_name(const std::string& s);

/// Classical spelling for a Cartan id, e.g. B4 -> "SO(9)"; exceptional ids map to themselves.
std::string classical_name(const GroupId& id);

}  // namespace liekit::rootsys
