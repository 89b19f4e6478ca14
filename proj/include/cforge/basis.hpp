#ifndef CFORGE_BASIS_HPP
#define CFORGE_BASIS_HPP

#include <compare>
#include <string>
#include <variant>
#include <vector>

#include "cforge/delta.hpp"

namespace cforge {

/// Basis label shapes. Int for L_i towers, Vec for x_alpha over a Delta
/// group, VecNat for x_{alpha,n}, Sym for finite tables.
struct IntIndex {
  long long i = 0;
  friend bool operator==(const IntIndex&, const IntIndex&) = default;
  friend auto operator<=>(const IntIndex&, const IntIndex&) = default;
};

struct VecIndex {
  DeltaVector v;
  friend bool operator==(const VecIndex&, const VecIndex&) = default;
  friend auto operator<=>(const VecIndex&, const VecIndex&) = default;
};

struct VecNatIndex {
  DeltaVector v;
  long long n = 0;
  friend bool operator==(const VecNatIndex&, const VecNatIndex&) = default;
  friend auto operator<=>(const VecNatIndex&, const VecNatIndex&) = default;
};

struct SymIndex {
  std::string name;
  friend bool operator==(const SymIndex&, const SymIndex&) = default;
  friend auto operator<=>(const SymIndex&, const SymIndex&) = default;
};

using BasisIndex = std::variant<IntIndex, VecIndex, VecNatIndex, SymIndex>;

inline BasisIndex L(long long i) { return IntIndex{i}; }
inline BasisIndex xv(std::vector<long long> coords) { return VecIndex{DeltaVector{std::move(coords)}}; }
inline BasisIndex xvn(std::vector<long long> coords, long long n) {
  return VecNatIndex{DeltaVector{std::move(coords)}, n};
}
inline BasisIndex sym(std::string name) { return SymIndex{std::move(name)}; }

/// "L[3]", "x[2,-1]", "x[0;2]", or the bare symbol name.
std::string to_string(const BasisIndex& idx);

/// Inverse of to_string (symbol names must start with a letter or '_').
BasisIndex parse_basis_index(const std::string& text);

}  // namespace cforge

#endif
