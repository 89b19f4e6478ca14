#ifndef CFORGE_TABLE_HPP
#define CFORGE_TABLE_HPP

#include <string>
#include <vector>

#include "cforge/gd.hpp"

namespace cforge {

/// Finite-dimensional algebra given by explicit product tables over a named
/// basis. The lie table is not required to be skew at ingestion; the axiom
/// checkers report that lazily.
struct FiniteTable {
  std::vector<std::string> basis;
  std::vector<std::vector<Element>> novikov;  // basis.size() x basis.size()
  std::vector<std::vector<Element>> lie;
};

/// JSON document {"basis": [names], "novikov": [[{name: scalar}]],
/// "lie": [[...]]}; coefficients in the Scalar text syntax. Either table key
/// may be omitted (treated as all-zero). Throws std::invalid_argument with
/// a position hint on malformed input.
FiniteTable parse_table_json(const std::string& text);
FiniteTable load_table_file(const std::string& path);

GDStructure table_structure(const FiniteTable& t, const std::string& description);
/// All basis symbols, in table order.
Window table_window(const FiniteTable& t);

}  // namespace cforge

#endif
