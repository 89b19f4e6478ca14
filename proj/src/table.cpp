#include "cforge/table.hpp"

#include <fstream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cforge {

namespace {

std::vector<std::vector<Element>> parse_product_table(const nlohmann::json& j,
                                                      const std::vector<std::string>& basis,
                                                      const char* which) {
  size_t n = basis.size();
  std::set<std::string> names(basis.begin(), basis.end());
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  if (j.is_null()) return table;
  if (!j.is_array() || j.size() != n)
    throw std::invalid_argument(std::string(which) + ": expected " + std::to_string(n) +
                                " rows");
  for (size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n)
      throw std::invalid_argument(std::string(which) + " row " + std::to_string(r) +
                                  ": expected " + std::to_string(n) + " entries");
    for (size_t c = 0; c < n; ++c) {
      const auto& cell = j[r][c];
      if (!cell.is_object())
        throw std::invalid_argument(std::string(which) + "[" + std::to_string(r) + "][" +
                                    std::to_string(c) + "]: expected an object");
      for (const auto& [name, coeff] : cell.items()) {
        if (!names.count(name))
          throw std::invalid_argument(std::string(which) + ": unknown basis name '" + name +
                                      "'");
        if (!coeff.is_string())
          throw std::invalid_argument(std::string(which) + ": coefficient for '" + name +
                                      "' must be a Scalar string");
        table[r][c].add_term(SymIndex{name}, parse_scalar(coeff.get<std::string>()));
      }
    }
  }
  return table;
}

}  // namespace

FiniteTable parse_table_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("table: JSON parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("basis") || !j["basis"].is_array())
    throw std::invalid_argument("table: missing \"basis\" array");
  FiniteTable t;
  for (const auto& name : j["basis"]) {
    if (!name.is_string()) throw std::invalid_argument("table: basis names must be strings");
    t.basis.push_back(name.get<std::string>());
  }
  if (std::set<std::string>(t.basis.begin(), t.basis.end()).size() != t.basis.size())
    throw std::invalid_argument("table: duplicate basis names");
  t.novikov = parse_product_table(j.value("novikov", nlohmann::json()), t.basis, "novikov");
  t.lie = parse_product_table(j.value("lie", nlohmann::json()), t.basis, "lie");
  return t;
}

FiniteTable load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("table: cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return parse_table_json(os.str());
}

GDStructure table_structure(const FiniteTable& t, const std::string& description) {
  auto names = std::make_shared<std::set<std::string>>(t.basis.begin(), t.basis.end());
  auto pos = std::make_shared<std::map<std::string, size_t>>();
  for (size_t k = 0; k < t.basis.size(); ++k) (*pos)[t.basis[k]] = k;
  auto novikov = std::make_shared<std::vector<std::vector<Element>>>(t.novikov);
  auto lie = std::make_shared<std::vector<std::vector<Element>>>(t.lie);

  GDStructure g;
  g.description = description;
  g.valid = [names](const BasisIndex& idx) {
    const auto* s = std::get_if<SymIndex>(&idx);
    return s && names->count(s->name) > 0;
  };
  auto lookup = [pos](const std::shared_ptr<std::vector<std::vector<Element>>>& table,
                      const BasisIndex& a, const BasisIndex& b) {
    size_t i = pos->at(std::get<SymIndex>(a).name);
    size_t j = pos->at(std::get<SymIndex>(b).name);
    return (*table)[i][j];
  };
  g.novikov_rule = [novikov, lookup](const BasisIndex& a, const BasisIndex& b) {
    return lookup(novikov, a, b);
  };
  g.lie_rule = [lie, lookup](const BasisIndex& a, const BasisIndex& b) {
    return lookup(lie, a, b);
  };
  return g;
}

Window table_window(const FiniteTable& t) {
  std::vector<BasisIndex> idx;
  for (const auto& name : t.basis) idx.push_back(SymIndex{name});
  return make_window(std::move(idx));
}

}  // namespace cforge
