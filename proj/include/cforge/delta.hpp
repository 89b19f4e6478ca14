#ifndef CFORGE_DELTA_HPP
#define CFORGE_DELTA_HPP

#include <optional>
#include <string>
#include <vector>

#include "cforge/scalar.hpp"

namespace cforge {

/// Integer coordinates with respect to a DeltaGroup's generators.
struct DeltaVector {
  std::vector<long long> coords;

  friend bool operator==(const DeltaVector& a, const DeltaVector& b) = default;
  friend auto operator<=>(const DeltaVector& a, const DeltaVector& b) = default;
  friend DeltaVector operator+(const DeltaVector& a, const DeltaVector& b);
};

std::string to_string(const DeltaVector& v);

/// Finitely generated additive subgroup of Q(i), presented as a free
/// abelian group on Q-linearly independent generators. Independence is
/// verified exactly at construction, which makes membership decidable.
class DeltaGroup {
public:
  /// Throws std::invalid_argument if the generators are Q-linearly dependent.
  explicit DeltaGroup(std::vector<Scalar> generators);

  size_t rank() const { return gens_.size(); }
  const std::vector<Scalar>& generators() const { return gens_; }

  /// sum_k v_k * generator_k; additive in v. Throws on rank mismatch.
  Scalar eval(const DeltaVector& v) const;

  /// The unique coordinates of s if s lies in the group, else nullopt.
  std::optional<DeltaVector> membership(const Scalar& s) const;

  friend bool operator==(const DeltaGroup& a, const DeltaGroup& b) {
    return a.gens_ == b.gens_;
  }

private:
  std::vector<Scalar> gens_;
};

}  // namespace cforge

#endif
