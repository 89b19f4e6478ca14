#ifndef CFORGE_ELEMENT_HPP
#define CFORGE_ELEMENT_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cforge/basis.hpp"
#include "cforge/scalar.hpp"

namespace cforge {

/// Finitely supported Scalar-linear combination of basis indices.
/// Zero coefficients are never stored; equality is support equality.
struct Element {
  std::map<BasisIndex, Scalar> terms;

  bool is_zero() const { return terms.empty(); }
  Scalar coeff(const BasisIndex& idx) const {
    auto it = terms.find(idx);
    return it == terms.end() ? Scalar(0) : it->second;
  }
  /// Adds c * idx, erasing the entry if the sum cancels.
  void add_term(const BasisIndex& idx, const Scalar& c);

  friend bool operator==(const Element&, const Element&) = default;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Scalar& c, const Element& e);
  Element operator-() const { return Scalar(-1) * *this; }
};

Element unit_element(const BasisIndex& idx);

/// "3/2*L[1] - x[0;2] + (1+2i)*e" style; see parse_element for the grammar.
std::string to_string(const Element& e);

/// Terms joined by top-level +/-; each term is [scalar '*'] index, with the
/// scalar parenthesized when it mixes real and imaginary parts.
Element parse_element(const std::string& text);

namespace detail {
// Shared term rendering/parsing used by Element, PolyElement, CoeffElement.
std::pair<std::string, bool> render_coeff(const Scalar& c);
std::string join_terms(const std::vector<std::pair<std::string, bool>>& parts);
std::vector<std::pair<int, std::string>> split_signed(const std::string& text);
std::pair<Scalar, std::string> split_coeff(const std::string& term);
}  // namespace detail

}  // namespace cforge

#endif
