#include "cforge/config.hpp"

#include <sstream>
#include <stdexcept>

namespace cforge {

IndexShape family_shape(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::A1:
    case FamilyTag::CL1:
      return IndexShape::Int;
    case FamilyTag::A2:
    case FamilyTag::CL2:
      return IndexShape::Vec;
    case FamilyTag::A3:
    case FamilyTag::CL3:
    case FamilyTag::CL3_b0:
    case FamilyTag::OsbornA:
      return IndexShape::VecNat;
    case FamilyTag::Vir:
    case FamilyTag::Cur:
      return IndexShape::Sym;
  }
  return IndexShape::Sym;
}

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::pair<long long, long long> parse_range(const std::string& spec) {
  std::string s = strip(spec);
  auto dots = s.find("..");
  if (dots == std::string::npos)
    throw std::invalid_argument("range: expected \"a..b\", got '" + spec + "'");
  long long lo = std::stoll(strip(s.substr(0, dots)));
  long long hi = std::stoll(strip(s.substr(dots + 2)));
  if (lo > hi) throw std::invalid_argument("range: lo > hi in '" + spec + "'");
  return {lo, hi};
}

Window parse_window_spec(const std::string& spec, IndexShape shape, size_t rank,
                         const FiniteTable* table) {
  if (shape == IndexShape::Sym) {
    if (!table) throw std::invalid_argument("window: Sym shape needs a table");
    if (strip(spec).empty()) return table_window(*table);
    std::vector<BasisIndex> idx;
    for (const auto& name : split(spec, ',')) idx.push_back(SymIndex{strip(name)});
    return make_window(std::move(idx));
  }
  std::vector<std::pair<long long, long long>> ranges;
  for (const auto& piece : split(spec, 'x')) ranges.push_back(parse_range(piece));
  switch (shape) {
    case IndexShape::Int: {
      if (ranges.size() != 1)
        throw std::invalid_argument("window: Int shape takes exactly one range");
      return int_window(ranges[0].first, ranges[0].second);
    }
    case IndexShape::Vec: {
      if (ranges.size() != rank)
        throw std::invalid_argument("window: expected " + std::to_string(rank) +
                                    " ranges (one per Delta generator)");
      return vec_window(ranges);
    }
    case IndexShape::VecNat: {
      if (ranges.size() != rank + 1)
        throw std::invalid_argument("window: expected " + std::to_string(rank) +
                                    " coordinate ranges plus one nat range");
      auto nat = ranges.back();
      ranges.pop_back();
      return vecnat_window(ranges, nat.first, nat.second);
    }
    case IndexShape::Sym:
      break;
  }
  throw std::invalid_argument("window: unsupported shape");
}

std::vector<Scalar> parse_scalar_csv(const std::string& text) {
  std::vector<Scalar> out;
  for (const auto& piece : split(text, ',')) out.push_back(parse_scalar(piece));
  return out;
}

std::vector<std::vector<Scalar>> parse_scalar_matrix(const std::string& text) {
  std::vector<std::vector<Scalar>> out;
  for (const auto& row : split(text, ';')) out.push_back(parse_scalar_csv(row));
  return out;
}

DeltaGroup parse_delta(const std::string& text) { return DeltaGroup(parse_scalar_csv(text)); }

}  // namespace cforge
