#include "liekit/rootsys/names.hpp"

#include <algorithm>
#include <cctype>
#include <regex>

namespace liekit::rootsys {

NamedGroup parse_group_name(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));

  static const std::regex classical(R"(^(su|so|spin|sp|u)\((\d{1,3})\)$)");
  std::smatch m;
  if (std::regex_match(s, m, classical)) {
    const std::string kind = m[1];
    const int n = std::stoi(m[2]);
    NamedGroup g;
    if (kind == "su") {
      g.id = {Family::A, n - 1};
      g.display = "SU(" + std::to_string(n) + ")";
    } else if (kind == "u") {
      g.id = {Family::A, n - 1};
      g.torus = 1;
      g.display = "U(" + std::to_string(n) + ")";
    } else if (kind == "sp") {
      g.id = {Family::C, n};
      g.display = "Sp(" + std::to_string(n) + ")";
    } else {
      g.id = n % 2 == 1 ? GroupId{Family::B, (n - 1) / 2} : GroupId{Family::D, n / 2};
      g.display = (kind == "so" ? "SO(" : "Spin(") + std::to_string(n) + ")";
    }
    validate(g.id);
    return g;
  }
  const GroupId id = GroupId::parse(s);
  return {id, 0, id.str()};
}

std::string classical_name(const GroupId& id) {
  const int n = id.rank;
  switch (id.family) {
    case Family::A: return "SU(" + std::to_string(n + 1) + ")";
    case Family::B: return "SO(" + std::to_string(2 * n + 1) + ")";
    case Family::C: return "Sp(" + std::to_string(n) + ")";
    case Family::D: return "SO(" + std::to_string(2 * n) + ")";
    default: return id.str();
  }
}

}  // namespace liekit::rootsys
