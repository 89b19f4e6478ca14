#include "cforge/basis.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace cforge {

namespace {

std::string coords_str(const DeltaVector& v) {
  std::ostringstream os;
  for (size_t k = 0; k < v.coords.size(); ++k) {
    if (k) os << ",";
    os << v.coords[k];
  }
  return os.str();
}

std::vector<long long> parse_coords(const std::string& body) {
  std::vector<long long> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw std::invalid_argument("BasisIndex: empty coordinate");
    out.push_back(std::stoll(cur));
    cur.clear();
  };
  for (char c : body) {
    if (c == ',') {
      flush();
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
      cur += c;
    } else {
      throw std::invalid_argument("BasisIndex: bad coordinate character");
    }
  }
  flush();
  return out;
}

}  // namespace

std::string to_string(const BasisIndex& idx) {
  struct V {
    std::string operator()(const IntIndex& x) const {
      return "L[" + std::to_string(x.i) + "]";
    }
    std::string operator()(const VecIndex& x) const { return "x[" + coords_str(x.v) + "]"; }
    std::string operator()(const VecNatIndex& x) const {
      return "x[" + coords_str(x.v) + ";" + std::to_string(x.n) + "]";
    }
    std::string operator()(const SymIndex& x) const { return x.name; }
  };
  return std::visit(V{}, idx);
}

BasisIndex parse_basis_index(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("BasisIndex: empty");
  if (text.rfind("L[", 0) == 0 && text.back() == ']') {
    auto coords = parse_coords(text.substr(2, text.size() - 3));
    if (coords.size() != 1) throw std::invalid_argument("BasisIndex: L takes one integer");
    return IntIndex{coords[0]};
  }
  if (text.rfind("x[", 0) == 0 && text.back() == ']') {
    std::string body = text.substr(2, text.size() - 3);
    auto semi = body.find(';');
    if (semi == std::string::npos) return VecIndex{DeltaVector{parse_coords(body)}};
    auto nat = parse_coords(body.substr(semi + 1));
    if (nat.size() != 1) throw std::invalid_argument("BasisIndex: one value after ';'");
    return VecNatIndex{DeltaVector{parse_coords(body.substr(0, semi))}, nat[0]};
  }
  if (std::isalpha(static_cast<unsigned char>(text[0])) || text[0] == '_') {
    for (char c : text)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        throw std::invalid_argument("BasisIndex: bad symbol name '" + text + "'");
    return SymIndex{text};
  }
  throw std::invalid_argument("BasisIndex: cannot parse '" + text + "'");
}

}  // namespace cforge
