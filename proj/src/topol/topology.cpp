#include "liekit/topol/topology.hpp"

#include "liekit/rootsys/names.hpp"

#include <cctype>
#include <regex>
#include <sstream>

namespace liekit::topol {

using rootsys::Family;

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  if (a.empty() || b.empty()) return {};
  Polynomial c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

Polynomial poincare_poly(const GroupId& id) {
  const auto rs = rootsys::build_root_system(id);
  Polynomial p{1};
  for (int m : rs.exponents) {
    Polynomial sphere(static_cast<std::size_t>(2 * m + 2), 0);
    sphere.front() = 1;
    sphere.back() = 1;
    p = multiply(p, sphere);
  }
  return p;
}

std::string to_string(const Polynomial& p) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (k == 0 || p[k] != 1) out << p[k];
    if (k >= 1) out << "t";
    if (k >= 2) out << "^" << k;
  }
  return first ? "0" : out.str();
}

Capicua capicua(const GroupId& id) {
  const auto ex = rootsys::build_root_system(id).exponents;
  Capicua c;
  for (std::size_t i = 1; i < ex.size(); ++i) c.diffs.push_back(ex[i] - ex[i - 1]);
  c.is_palindrome = std::equal(c.diffs.begin(), c.diffs.end(), c.diffs.rbegin());
  return c;
}

std::set<int> torsion_primes(const GroupId& id) {
  rootsys::validate(id);
  switch (id.family) {
    case Family::A:
    case Family::C: return {};
    case Family::B: return id.rank >= 3 ? std::set<int>{2} : std::set<int>{};  // Spin(7) and up
    case Family::D: return id.rank >= 4 ? std::set<int>{2} : std::set<int>{};  // Spin(8) and up; Spin(6) = SU(4)
    case Family::G: return {2};
    case Family::F: return {2, 3};
    case Family::E: return id.rank == 8 ? std::set<int>{2, 3, 5} : std::set<int>{2, 3};
  }
  return {};
}

namespace {

int factor_dim(const std::string& f) {
  static const std::regex classical(R"(^(SU|SO|SPIN|SP|U|O)\((\d{1,3})\)$)");
  std::smatch m;
  if (std::regex_match(f, m, classical)) {
    const std::string kind = m[1];
    const int n = std::stoi(m[2]);
    if (kind == "U") return n * n;
    if (kind == "SU") return n * n - 1;
    if (kind == "SP") return n * (2 * n + 1);
    return n * (n - 1) / 2;  // O, SO, Spin
  }
  return rootsys::known_dimension(rootsys::GroupId::parse(f));
}

std::string upper_nospace(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

// Splits on 'X', '.', '*' at parenthesis depth zero.
std::vector<std::string> split_factors(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth == 0 && (c == 'X' || c == '.' || c == '*')) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

int expression_dim(const std::string& e) {
  if (e.empty()) throw std::invalid_argument("empty group expression");
  // S[...]: determinant-one part of a product of unitary groups
  if (e.size() > 3 && e.rfind("S[", 0) == 0 && e.back() == ']') return expression_dim(e.substr(2, e.size() - 3)) - 1;
  int total = 0;
  for (auto f : split_factors(e)) {
    int power = 1;
    static const std::regex pow(R"(^(.*)\^(\d+)$)");
    std::smatch m;
    if (std::regex_match(f, m, pow)) {
      power = std::stoi(m[2]);
      f = m[1];
    }
    if (f.size() >= 2 && f.front() == '(' && f.back() == ')') {
      total += power * expression_dim(f.substr(1, f.size() - 2));
      continue;
    }
    if (f.size() >= 2 && f.front() == '[' && f.back() == ']') {
      total += power * expression_dim(f.substr(1, f.size() - 2));
      continue;
    }
    total += power * factor_dim(f);
  }
  return total;
}

}  // namespace

int group_expression_dim(const std::string& expr) {
  std::string s = upper_nospace(expr);
  // accept the unicode multiplication and middle dot signs
  for (const std::string sym : {"×", "·", "⋅"}) {
    for (auto pos = s.find(sym); pos != std::string::npos; pos = s.find(sym)) s.replace(pos, sym.size(), "X");
  }
  return expression_dim(s);
}

int coset_dim(const CosetEntry& e) {
  const int d = group_expression_dim(e.big) - group_expression_dim(e.small);
  if (d != e.space_dim)
    throw DimensionMismatch(e.space_name + ": dim " + e.big + " - dim " + e.small + " = " + std::to_string(d) +
                            ", declared " + std::to_string(e.space_dim));
  return d;
}

const std::vector<CosetEntry>& coset_table() {
  static const std::vector<CosetEntry> table{
      {"O(3)", "O(1)xO(2)", "RP2", 2},
      {"U(3)", "U(2)xU(1)", "CP2", 4},
      {"Sp(3)", "Sp(2)xSp(1)", "HP2", 8},
      {"F4", "Spin(9)", "OP2", 16},
      {"SU(3)", "U(2)", "CP2 (isotropy U(2))", 4},
      {"SU(3).SU(3)", "(U(2))^2", "(CP2)^2", 8},
      {"SU(6)", "S[U(2).U(4)]", "Gr(2,C6)", 16},
      {"E6", "Spin(10).U(1)", "X", 32},
  };
  return table;
}

std::optional<CosetEntry> find_coset(const std::string& name) {
  const std::string key = upper_nospace(name);
  for (const auto& e : coset_table())
    if (upper_nospace(e.space_name) == key) return e;
  return std::nullopt;
}

const std::vector<std::pair<GroupId, FibrationNote>>& fibration_table() {
  static const std::vector<std::pair<GroupId, FibrationNote>> table{
      {{Family::A, 1}, {"SU(2)", "SU(2) = Sp(1) = Spin(3) is exactly S^3"}},
      {{Family::B, 1}, {"Spin(3)", "Spin(3) coincides with Sp(1) = SU(2) = S^3; no torsion"}},
      {{Family::C, 1}, {"Sp(1)", "Sp(1) = SU(2) = Spin(3) is exactly S^3"}},
      {{Family::A, 2},
       {"SU(3)",
        "SU(2) -> SU(3) -> S^5 is a principal bundle; pi_4(S^3) = Z_2 classifies SU(2)-bundles over S^5, so SU(3) is "
        "the unique non-trivial SU(2)-bundle over S^5, a twisted product S^3 (x S^5"}},
      {{Family::B, 2}, {"Spin(5)", "Spin(5) coincides with Sp(2); no torsion"}},
      {{Family::C, 2}, {"Sp(2)", "Sp(2) coincides with Spin(5); no torsion"}},
      {{Family::A, 3}, {"SU(4)", "SU(4) coincides with Spin(6); no torsion"}},
      {{Family::D, 3}, {"Spin(6)", "Spin(6) coincides with SU(4); no torsion"}},
      {{Family::G, 2},
       {"G2",
        "SU(3) -> G2 -> S^6 with S^5 -> M11 -> S^6; M11 is a Stiefel manifold with the real homology of S^11 and "
        "2-torsion, so H*(G2;R) = H*(S^3 x S^11;R)"}},
      {{Family::F, 4},
       {"F4",
        "no irrep yields the sphere structure; 2- and 3-torsion; Euler number of F4/Spin(9) (the Moufang plane) is 3"}},
  };
  return table;
}

TopologyReport sphere_structure_report(const GroupId& id) {
  const auto rs = rootsys::build_root_system(id);
  TopologyReport r;
  r.id = id;
  r.dim = rs.dim();
  r.exponents = rs.exponents;
  for (int m : rs.exponents) r.sphere_dims.push_back(2 * m + 1);
  r.poincare = poincare_poly(id);
  r.torsion_primes = torsion_primes(id);
  r.capicua = capicua(id);
  r.coxeter_number = rs.coxeter_number;
  for (const auto& [gid, note] : fibration_table())
    if (gid == id) r.fibration_notes.push_back(note);
  return r;
}

}  // namespace liekit::topol
