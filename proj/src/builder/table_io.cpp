#include "liekit/builder/table_io.hpp"

#include <regex>
#include <sstream>
#include <tuple>

namespace liekit::builder {

std::string export_table(const StructureTable& t) {
  std::ostringstream out;
  out << "# lie-structure v1 " << (t.name().empty() ? "unnamed" : t.name()) << " dim=" << t.dim() << "\n";
  // brackets() iterates (i, j) in order and each term list is sorted by k
  for (const auto& [key, terms] : t.brackets())
    for (const auto& term : terms)
      out << key.first << ' ' << key.second << ' ' << term.index << ' ' << term.coeff.num() << ' ' << term.coeff.den()
          << "\n";
  return out.str();
}

StructureTable import_table(std::istream& in) {
  static const std::regex header(R"(^# lie-structure v1 (\S+) dim=(\d+)\s*$)");
  std::string line;
  std::size_t lineno = 1;
  std::smatch m;
  if (!std::getline(in, line) || !std::regex_match(line, m, header))
    throw TableFormatError(1, "expected '# lie-structure v1 <name> dim=<d>' header");
  const std::string name = m[1];
  const std::size_t dim = std::stoul(m[2]);

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) labels.push_back("e_" + std::to_string(i));
  StructureTable t(name, std::move(labels));

  std::tuple<std::size_t, std::size_t, std::size_t> prev{0, 0, 0};
  bool first = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    long long i = -1, j = -1, k = -1;
    std::string num, den, extra;
    if (!(fields >> i >> j >> k >> num >> den) || (fields >> extra))
      throw TableFormatError(lineno, "expected 'i j k num den'");
    if (i < 0 || j < 0 || k < 0 || static_cast<std::size_t>(j) >= dim || static_cast<std::size_t>(k) >= dim)
      throw TableFormatError(lineno, "index out of range");
    if (i >= j) throw TableFormatError(lineno, "requires i < j");
    const std::tuple<std::size_t, std::size_t, std::size_t> cur{i, j, k};
    if (!first && cur <= prev) throw TableFormatError(lineno, "lines must be strictly sorted by (i, j, k)");
    first = false;
    prev = cur;
    Rational c;
    try {
      c = Rational::parse(num + "/" + den);
    } catch (const std::exception& e) {
      throw TableFormatError(lineno, std::string("bad coefficient: ") + e.what());
    }
    if (c.is_zero()) throw TableFormatError(lineno, "zero coefficients are not stored");
    t.add_to_bracket(static_cast<std::size_t>(i), static_cast<std::size_t>(j), static_cast<std::size_t>(k), c);
  }
  return t;
}

StructureTable import_table_string(const std::string& text) {
  std::istringstream in(text);
  return import_table(in);
}

}  // namespace liekit::builder
