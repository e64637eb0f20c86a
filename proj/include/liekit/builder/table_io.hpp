#pragma once

#include "liekit/builder/structure_table.hpp"

#include <istream>
#include <stdexcept>
#include <string>

namespace liekit::builder {

struct TableFormatError : std::runtime_error {
  TableFormatError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
  std::size_t line;
};

/// Text format:
///   # lie-structure v1 <name> dim=<d>
///   i j k num den        (one line per coefficient of [e_i, e_j] on e_k; 0-based, i < j, sorted)
std::string export_table(const StructureTable& t);

/// Parses the text format. Labels are e_0 .. e_{d-1}; the caller re-verifies Jacobi.
StructureTable import_table(std::istream& in);
StructureTable import_table_string(const std::string& text);

}  // namespace liekit::builder
