#ifndef CFORGE_CONFIG_HPP
#define CFORGE_CONFIG_HPP

#include "cforge/families.hpp"

namespace cforge {

enum class IndexShape { Int, Vec, VecNat, Sym };
IndexShape family_shape(FamilyTag tag);

/// "a..b" with integer endpoints, lo <= hi.
std::pair<long long, long long> parse_range(const std::string& spec);

/// Cross-product window syntax: one "a..b" range per integer component,
/// components separated by 'x' ("-2..2 x 0..3" for a rank-1 VecNat shape).
/// Sym shapes take a comma list of names ("" = every table symbol).
Window parse_window_spec(const std::string& spec, IndexShape shape, size_t rank,
                         const FiniteTable* table);

std::vector<Scalar> parse_scalar_csv(const std::string& text);
/// Rows separated by ';', entries by ','.
std::vector<std::vector<Scalar>> parse_scalar_matrix(const std::string& text);
DeltaGroup parse_delta(const std::string& text);

}  // namespace cforge

#endif
