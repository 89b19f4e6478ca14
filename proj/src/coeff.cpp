#include "cforge/coeff.hpp"

namespace cforge {

void CoeffElement::add_term(const BasisIndex& idx, long long mode, const Scalar& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(idx, mode);
  auto [it, inserted] = terms.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

CoeffElement& CoeffElement::operator+=(const CoeffElement& o) {
  for (const auto& [key, c] : o.terms) add_term(key.first, key.second, c);
  return *this;
}

CoeffElement& CoeffElement::operator-=(const CoeffElement& o) {
  for (const auto& [key, c] : o.terms) add_term(key.first, key.second, -c);
  return *this;
}

CoeffElement operator*(const Scalar& c, const CoeffElement& e) {
  CoeffElement r;
  if (c.is_zero()) return r;
  for (const auto& [key, v] : e.terms) r.terms.emplace(key, c * v);
  return r;
}

std::string to_string(const CoeffElement& e) {
  if (e.is_zero()) return "0";
  std::vector<std::pair<std::string, bool>> parts;
  for (const auto& [key, c] : e.terms) {
    auto [prefix, neg] = detail::render_coeff(c);
    parts.emplace_back(prefix + to_string(key.first) + "@" + std::to_string(key.second), neg);
  }
  return detail::join_terms(parts);
}

CoeffElement coeff_canonicalize(const PolyElement& p, long long mode) {
  CoeffElement out;
  for (const auto& [key, c] : p.terms) {
    const auto& [idx, k] = key;
    mpz_class ff = falling_factorial(mpz_class(static_cast<long>(mode)), k);
    if (k % 2 == 1) ff = -ff;
    out.add_term(idx, mode - static_cast<long long>(k), c * Scalar(mpq_class(ff)));
  }
  return out;
}

CoeffElement coeff_bracket(const ConformalAlgebra& ca, const BasisIndex& a, long long m,
                           const BasisIndex& b, long long n) {
  BracketPoly br = ca.basis_bracket(a, b, Var::lambda);
  CoeffElement out;
  for (unsigned j = 0; j <= br.lambda_degree(); ++j) {
    PolyElement nth = Scalar(mpq_class(factorial(j))) * br.coefficient(j, 0);
    if (nth.is_zero()) continue;
    // C(m, j) with integer m, falling-factorial definition.
    Scalar binom(mpq_class(binomial(mpz_class(static_cast<long>(m)), j)));
    out += binom * coeff_canonicalize(nth, m + n - static_cast<long long>(j));
  }
  return out;
}

CoeffElement coeff_bracket(const ConformalAlgebra& ca, const CoeffElement& x,
                           const CoeffElement& y) {
  CoeffElement out;
  for (const auto& [xk, xc] : x.terms)
    for (const auto& [yk, yc] : y.terms)
      out += (xc * yc) * coeff_bracket(ca, xk.first, xk.second, yk.first, yk.second);
  return out;
}

namespace {

std::string mode_str(const BasisIndex& idx, long long mode) {
  return to_string(idx) + "@" + std::to_string(mode);
}

}  // namespace

Report check_coeff_jacobi(const ConformalAlgebra& ca, const std::vector<CoeffTriple>& samples) {
  Report r;
  r.check = "coeff-jacobi";
  r.params["structure"] = ca.gd.description;
  r.params["samples"] = std::to_string(samples.size());
  for (const auto& s : samples) {
    CoeffElement ab = coeff_bracket(ca, s.a, s.m, s.b, s.n);
    CoeffElement ba = coeff_bracket(ca, s.b, s.n, s.a, s.m);
    CoeffElement skew = ab + ba;
    if (!skew.is_zero())
      r.fail({mode_str(s.a, s.m), mode_str(s.b, s.n)}, to_string(skew), "skew-symmetry");
    CoeffElement ua, ub, uc;
    ua.add_term(s.a, s.m, Scalar(1));
    ub.add_term(s.b, s.n, Scalar(1));
    uc.add_term(s.c, s.p, Scalar(1));
    CoeffElement jac = coeff_bracket(ca, coeff_bracket(ca, ua, ub), uc) +
                       coeff_bracket(ca, coeff_bracket(ca, ub, uc), ua) +
                       coeff_bracket(ca, coeff_bracket(ca, uc, ua), ub);
    if (!jac.is_zero())
      r.fail({mode_str(s.a, s.m), mode_str(s.b, s.n), mode_str(s.c, s.p)}, to_string(jac),
             "jacobi");
  }
  return r;
}

Report coeff_closed_form_crosscheck(const ConformalAlgebra& ca, const CoeffClosedForm& closed,
                                    const std::vector<CoeffSample>& samples,
                                    const std::string& family_name) {
  Report r;
  r.check = "coeff-crosscheck";
  r.params["family"] = family_name;
  r.params["samples"] = std::to_string(samples.size());
  for (const auto& s : samples) {
    CoeffElement via_bracket = coeff_bracket(ca, s.a, s.m, s.b, s.n);
    CoeffElement via_closed = closed(s.a, s.m, s.b, s.n);
    if (via_bracket != via_closed)
      r.fail({mode_str(s.a, s.m), mode_str(s.b, s.n)},
             to_string(via_bracket - via_closed), "bracket minus closed form");
  }
  return r;
}

}  // namespace cforge
