#ifndef CFORGE_COEFF_HPP
#define CFORGE_COEFF_HPP

#include <functional>

#include "cforge/conformal.hpp"

namespace cforge {

/// Element of the coefficient Lie algebra on the reduced basis x_n
/// (basis index, integer mode); all d's eliminated via (d a)_n = -n a_{n-1}.
struct CoeffElement {
  std::map<std::pair<BasisIndex, long long>, Scalar> terms;

  bool is_zero() const { return terms.empty(); }
  void add_term(const BasisIndex& idx, long long mode, const Scalar& c);

  friend bool operator==(const CoeffElement&, const CoeffElement&) = default;
  CoeffElement& operator+=(const CoeffElement& o);
  CoeffElement& operator-=(const CoeffElement& o);
  friend CoeffElement operator+(CoeffElement a, const CoeffElement& b) { return a += b; }
  friend CoeffElement operator-(CoeffElement a, const CoeffElement& b) { return a -= b; }
  friend CoeffElement operator*(const Scalar& c, const CoeffElement& e);
};

std::string to_string(const CoeffElement& e);

/// (d^k x)_n = (-1)^k n(n-1)...(n-k+1) x_{n-k}, extended linearly.
CoeffElement coeff_canonicalize(const PolyElement& p, long long mode);

/// [a_m, b_n] = sum_j C(m,j) (a_(j) b)_{m+n-j}; for quadratic algebras only
/// j in {0,1} contributes.
CoeffElement coeff_bracket(const ConformalAlgebra& ca, const BasisIndex& a, long long m,
                           const BasisIndex& b, long long n);
/// Bilinear extension.
CoeffElement coeff_bracket(const ConformalAlgebra& ca, const CoeffElement& x,
                           const CoeffElement& y);

struct CoeffSample {
  BasisIndex a;
  long long m;
  BasisIndex b;
  long long n;
};

struct CoeffTriple {
  BasisIndex a;
  long long m;
  BasisIndex b;
  long long n;
  BasisIndex c;
  long long p;
};

/// Skew-symmetry and the classical Jacobi identity on the sampled triples.
Report check_coeff_jacobi(const ConformalAlgebra& ca, const std::vector<CoeffTriple>& samples);

using CoeffClosedForm =
    std::function<CoeffElement(const BasisIndex&, long long, const BasisIndex&, long long)>;

/// Exact equality of coeff_bracket against an independently coded closed
/// form, per sample.
Report coeff_closed_form_crosscheck(const ConformalAlgebra& ca, const CoeffClosedForm& closed,
                                    const std::vector<CoeffSample>& samples,
                                    const std::string& family_name);

}  // namespace cforge

#endif
