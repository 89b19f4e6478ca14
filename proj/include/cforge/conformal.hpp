#ifndef CFORGE_CONFORMAL_HPP
#define CFORGE_CONFORMAL_HPP

#include <array>
#include <map>

#include "cforge/gd.hpp"
#include "cforge/report.hpp"

namespace cforge {

/// Element of the free C[d]-module: finite sum of c * d^dpow (basis index),
/// with d the translation generator (written ∂ in reports).
struct PolyElement {
  std::map<std::pair<BasisIndex, unsigned>, Scalar> terms;

  bool is_zero() const { return terms.empty(); }
  void add_term(const BasisIndex& idx, unsigned dpow, const Scalar& c);
  unsigned max_dpow() const;

  friend bool operator==(const PolyElement&, const PolyElement&) = default;
  PolyElement& operator+=(const PolyElement& o);
  PolyElement& operator-=(const PolyElement& o);
  friend PolyElement operator+(PolyElement a, const PolyElement& b) { return a += b; }
  friend PolyElement operator-(PolyElement a, const PolyElement& b) { return a -= b; }
  friend PolyElement operator*(const Scalar& c, const PolyElement& e);
};

PolyElement from_element(const Element& e);
PolyElement unit_poly(const BasisIndex& idx, unsigned dpow = 0);
/// Multiplies by d^k.
PolyElement dmul(const PolyElement& e, unsigned k);
std::string to_string(const PolyElement& e);
PolyElement parse_poly_element(const std::string& text);

/// Polynomial in the commuting formal variables lambda and mu with
/// PolyElement coefficients; d-powers live inside the coefficients.
/// Key = (lambda exponent, mu exponent).
struct BracketPoly {
  std::map<std::array<unsigned, 2>, PolyElement> terms;

  bool is_zero() const { return terms.empty(); }
  void add(unsigned lam, unsigned mu, const PolyElement& p);
  unsigned lambda_degree() const;
  PolyElement coefficient(unsigned lam, unsigned mu) const;

  friend bool operator==(const BracketPoly&, const BracketPoly&) = default;
  BracketPoly& operator+=(const BracketPoly& o);
  BracketPoly& operator-=(const BracketPoly& o);
  friend BracketPoly operator+(BracketPoly a, const BracketPoly& b) { return a += b; }
  friend BracketPoly operator-(BracketPoly a, const BracketPoly& b) { return a -= b; }
  friend BracketPoly operator*(const Scalar& c, const BracketPoly& e);
};

/// Shifts exponents by (lam, mu) and multiplies coefficients by d^dpow.
BracketPoly shift(const BracketPoly& b, unsigned lam, unsigned mu, unsigned dpow);
std::string to_string(const BracketPoly& b);

enum class Var { lambda, mu };

/// Quadratic Lie conformal algebra presented by its GD data; the bracket on
/// basis pairs is d(b∘a) + [b,a] + lambda(a*b), so it always has lambda
/// degree <= 1 and d degree <= 1.
struct ConformalAlgebra {
  GDStructure gd;
  /// Basis-pair bracket in the requested variable slot.
  BracketPoly basis_bracket(const BasisIndex& a, const BasisIndex& b,
                            Var v = Var::lambda) const;
};

/// The correspondence sending GD data to its quadratic conformal algebra.
/// The caller is responsible for the GD axioms holding on the windows it
/// intends to probe; they are not re-verified here.
ConformalAlgebra quadratic_from_gd(GDStructure gd);

/// Sesquilinear extension: d^m on the left contributes (-v)^m, d^n on the
/// right contributes (v+d)^n expanded binomially.
BracketPoly lambda_bracket(const ConformalAlgebra& ca, const PolyElement& p,
                           const PolyElement& q, Var v = Var::lambda);

/// n! times the lambda^n coefficient of the bracket; zero beyond the degree.
PolyElement nth_product(const ConformalAlgebra& ca, const PolyElement& p,
                        const PolyElement& q, unsigned n);

/// mu^e -> (-lambda-d)^e, pushing d powers into the coefficients.
BracketPoly substitute_mu_neg_lambda_d(const BracketPoly& b);
/// lambda^e -> (lambda+mu)^e; input must be mu-free.
BracketPoly substitute_lambda_sum(const BracketPoly& b);

/// Skew-symmetry [a λ b] = -[b_{-λ-d} a] on window pairs and the conformal
/// Jacobi identity on window triples, both as exact polynomial identities.
Report check_conformal_axioms(const ConformalAlgebra& ca, const Window& w);

/// Jacobi residual [a λ [b μ c]] - [[a λ b]_{λ+μ} c] - [b μ [a λ c]].
BracketPoly conformal_jacobi_residual(const ConformalAlgebra& ca, const BasisIndex& a,
                                      const BasisIndex& b, const BasisIndex& c);

}  // namespace cforge

#endif
