#ifndef CFORGE_GD_HPP
#define CFORGE_GD_HPP

#include <functional>
#include <string>
#include <vector>

#include "cforge/element.hpp"

namespace cforge {

/// Finite list of valid basis indices; duplicates forbidden. Window checks
/// are evidence on a truncation, not proofs about the infinite algebra.
struct Window {
  std::vector<BasisIndex> indices;
  size_t size() const { return indices.size(); }
  bool empty() const { return indices.empty(); }
};

/// Throws on duplicate indices.
Window make_window(std::vector<BasisIndex> indices);
Window int_window(long long lo, long long hi);
/// Cross product of coordinate ranges, one per Delta generator.
Window vec_window(const std::vector<std::pair<long long, long long>>& ranges);
Window vecnat_window(const std::vector<std::pair<long long, long long>>& ranges,
                     long long nat_lo, long long nat_hi);
std::string to_string(const Window& w);

/// Indexed basis plus closed-form bilinear rules for the Novikov product
/// and the Lie bracket. Rules are total on valid index pairs and must emit
/// only valid indices (zero-coefficient boundary terms are dropped before
/// the validity check, so formulas like (j+1)L_{i+j} at j=-1 are fine).
struct GDStructure {
  std::string description;
  std::function<bool(const BasisIndex&)> valid;
  std::function<Element(const BasisIndex&, const BasisIndex&)> novikov_rule;
  std::function<Element(const BasisIndex&, const BasisIndex&)> lie_rule;
};

/// Rule-building helper: drops zero coefficients first, then insists the
/// index is valid (a nonzero coefficient on an invalid index is a rule bug).
void add_rule_term(Element& out, const Scalar& coeff, BasisIndex idx,
                   const std::function<bool(const BasisIndex&)>& valid);

/// Bilinear extensions. Throw std::invalid_argument when an input carries an
/// index the structure does not consider valid.
Element novikov_product(const GDStructure& a, const Element& x, const Element& y);
Element lie_bracket(const GDStructure& a, const Element& x, const Element& y);
/// x*y = x∘y + y∘x; commutative by construction.
Element star_product(const GDStructure& a, const Element& x, const Element& y);

/// GD structure with the k-scaled commutator bracket [x,y] = k(x∘y - y∘x)
/// over the given Novikov rules; compatible for every Novikov algebra.
GDStructure gd_from_novikov(const GDStructure& novikov_only, const Scalar& k);

}  // namespace cforge

#endif
