#include "cforge/conformal.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace cforge {

void PolyElement::add_term(const BasisIndex& idx, unsigned dpow, const Scalar& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(idx, dpow);
  auto [it, inserted] = terms.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

unsigned PolyElement::max_dpow() const {
  unsigned m = 0;
  for (const auto& [key, c] : terms) m = std::max(m, key.second);
  return m;
}

PolyElement& PolyElement::operator+=(const PolyElement& o) {
  for (const auto& [key, c] : o.terms) add_term(key.first, key.second, c);
  return *this;
}

PolyElement& PolyElement::operator-=(const PolyElement& o) {
  for (const auto& [key, c] : o.terms) add_term(key.first, key.second, -c);
  return *this;
}

PolyElement operator*(const Scalar& c, const PolyElement& e) {
  PolyElement r;
  if (c.is_zero()) return r;
  for (const auto& [key, v] : e.terms) r.terms.emplace(key, c * v);
  return r;
}

PolyElement from_element(const Element& e) {
  PolyElement r;
  for (const auto& [idx, c] : e.terms) r.terms.emplace(std::make_pair(idx, 0u), c);
  return r;
}

PolyElement unit_poly(const BasisIndex& idx, unsigned dpow) {
  PolyElement r;
  r.terms.emplace(std::make_pair(idx, dpow), Scalar(1));
  return r;
}

PolyElement dmul(const PolyElement& e, unsigned k) {
  if (k == 0) return e;
  PolyElement r;
  for (const auto& [key, c] : e.terms) r.terms.emplace(std::make_pair(key.first, key.second + k), c);
  return r;
}

void BracketPoly::add(unsigned lam, unsigned mu, const PolyElement& p) {
  if (p.is_zero()) return;
  std::array<unsigned, 2> key{lam, mu};
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, p);
    return;
  }
  it->second += p;
  if (it->second.is_zero()) terms.erase(it);
}

unsigned BracketPoly::lambda_degree() const {
  unsigned m = 0;
  for (const auto& [key, p] : terms) m = std::max(m, key[0]);
  return m;
}

PolyElement BracketPoly::coefficient(unsigned lam, unsigned mu) const {
  auto it = terms.find(std::array<unsigned, 2>{lam, mu});
  return it == terms.end() ? PolyElement{} : it->second;
}

BracketPoly& BracketPoly::operator+=(const BracketPoly& o) {
  for (const auto& [key, p] : o.terms) add(key[0], key[1], p);
  return *this;
}

BracketPoly& BracketPoly::operator-=(const BracketPoly& o) {
  for (const auto& [key, p] : o.terms) add(key[0], key[1], Scalar(-1) * p);
  return *this;
}

BracketPoly operator*(const Scalar& c, const BracketPoly& e) {
  BracketPoly r;
  if (c.is_zero()) return r;
  for (const auto& [key, p] : e.terms) r.terms.emplace(key, c * p);
  return r;
}

BracketPoly shift(const BracketPoly& b, unsigned lam, unsigned mu, unsigned dpow) {
  BracketPoly r;
  for (const auto& [key, p] : b.terms)
    r.terms.emplace(std::array<unsigned, 2>{key[0] + lam, key[1] + mu}, dmul(p, dpow));
  return r;
}

ConformalAlgebra quadratic_from_gd(GDStructure gd) { return ConformalAlgebra{std::move(gd)}; }

BracketPoly ConformalAlgebra::basis_bracket(const BasisIndex& a, const BasisIndex& b,
                                            Var v) const {
  Element ba = gd.novikov_rule(b, a);
  Element ab = gd.novikov_rule(a, b);
  Element lie = gd.lie_rule(b, a);
  BracketPoly out;
  out.add(0, 0, dmul(from_element(ba), 1) + from_element(lie));
  PolyElement star = from_element(ab + ba);
  if (v == Var::lambda)
    out.add(1, 0, star);
  else
    out.add(0, 1, star);
  return out;
}

BracketPoly lambda_bracket(const ConformalAlgebra& ca, const PolyElement& p,
                           const PolyElement& q, Var v) {
  BracketPoly out;
  for (const auto& [pk, pc] : p.terms) {
    const auto& [x, m] = pk;
    for (const auto& [qk, qc] : q.terms) {
      const auto& [y, n] = qk;
      BracketPoly base = ca.basis_bracket(x, y, v);
      Scalar c = pc * qc;
      if (m % 2 == 1) c = -c;  // (-v)^m
      // (v+d)^n = sum_k C(n,k) v^(n-k) d^k
      for (unsigned k = 0; k <= n; ++k) {
        Scalar coeff = c * Scalar(mpq_class(binomial(mpz_class(n), k)));
        unsigned vexp = m + (n - k);
        BracketPoly piece = shift(base, v == Var::lambda ? vexp : 0,
                                  v == Var::mu ? vexp : 0, k);
        out += coeff * piece;
      }
    }
  }
  return out;
}

PolyElement nth_product(const ConformalAlgebra& ca, const PolyElement& p,
                        const PolyElement& q, unsigned n) {
  BracketPoly b = lambda_bracket(ca, p, q, Var::lambda);
  return Scalar(mpq_class(factorial(n))) * b.coefficient(n, 0);
}

BracketPoly substitute_mu_neg_lambda_d(const BracketPoly& b) {
  BracketPoly out;
  for (const auto& [key, p] : b.terms) {
    unsigned lam = key[0], e = key[1];
    // mu^e -> (-1)^e sum_k C(e,k) lambda^(e-k) d^k
    for (unsigned k = 0; k <= e; ++k) {
      Scalar c(mpq_class(binomial(mpz_class(e), k)));
      if (e % 2 == 1) c = -c;
      out.add(lam + (e - k), 0, c * dmul(p, k));
    }
  }
  return out;
}

BracketPoly substitute_lambda_sum(const BracketPoly& b) {
  BracketPoly out;
  for (const auto& [key, p] : b.terms) {
    unsigned t = key[0];
    if (key[1] != 0)
      throw std::invalid_argument("substitute_lambda_sum: input must be mu-free");
    for (unsigned r = 0; r <= t; ++r) {
      Scalar c(mpq_class(binomial(mpz_class(t), r)));
      out.add(r, t - r, c * p);
    }
  }
  return out;
}

BracketPoly conformal_jacobi_residual(const ConformalAlgebra& ca, const BasisIndex& a,
                                      const BasisIndex& b, const BasisIndex& c) {
  PolyElement pa = unit_poly(a), pb = unit_poly(b), pc = unit_poly(c);

  // [a λ [b μ c]]
  BracketPoly lhs;
  for (const auto& [key, p] : lambda_bracket(ca, pb, pc, Var::mu).terms)
    lhs += shift(lambda_bracket(ca, pa, p, Var::lambda), 0, key[1], 0);

  // [[a λ b]_{λ+μ} c]: inner λ powers stay, the outer variable is ν = λ+μ.
  BracketPoly rhs1;
  for (const auto& [key, p] : lambda_bracket(ca, pa, pb, Var::lambda).terms) {
    BracketPoly outer = substitute_lambda_sum(lambda_bracket(ca, p, pc, Var::lambda));
    rhs1 += shift(outer, key[0], 0, 0);
  }

  // [b μ [a λ c]]
  BracketPoly rhs2;
  for (const auto& [key, p] : lambda_bracket(ca, pa, pc, Var::lambda).terms)
    rhs2 += shift(lambda_bracket(ca, pb, p, Var::mu), key[0], 0, 0);

  return lhs - rhs1 - rhs2;
}

Report check_conformal_axioms(const ConformalAlgebra& ca, const Window& w) {
  Report r;
  r.check = "conformal-axioms";
  r.params["structure"] = ca.gd.description;
  r.window = to_string(w);
  for (const auto& ai : w.indices) {
    for (const auto& bi : w.indices) {
      BracketPoly lab = lambda_bracket(ca, unit_poly(ai), unit_poly(bi), Var::lambda);
      BracketPoly rba = lambda_bracket(ca, unit_poly(bi), unit_poly(ai), Var::mu);
      BracketPoly res = lab + substitute_mu_neg_lambda_d(rba);
      if (!res.is_zero())
        r.fail({to_string(ai), to_string(bi)}, to_string(res), "skew-symmetry");
    }
  }
  for (const auto& ai : w.indices)
    for (const auto& bi : w.indices)
      for (const auto& ci : w.indices) {
        BracketPoly res = conformal_jacobi_residual(ca, ai, bi, ci);
        if (!res.is_zero())
          r.fail({to_string(ai), to_string(bi), to_string(ci)}, to_string(res), "jacobi");
      }
  return r;
}

namespace {

std::string poly_term_body(const BasisIndex& idx, unsigned dpow) {
  std::string out;
  if (dpow == 1) out += "\xE2\x88\x82 ";           // ∂
  if (dpow > 1) out += "\xE2\x88\x82^" + std::to_string(dpow) + " ";
  out += to_string(idx);
  return out;
}

}  // namespace

std::string to_string(const PolyElement& e) {
  if (e.is_zero()) return "0";
  std::vector<std::pair<std::string, bool>> parts;
  for (const auto& [key, c] : e.terms) {
    auto [prefix, neg] = detail::render_coeff(c);
    parts.emplace_back(prefix + poly_term_body(key.first, key.second), neg);
  }
  return detail::join_terms(parts);
}

PolyElement parse_poly_element(const std::string& text) {
  PolyElement e;
  std::string t;
  for (char c : text)
    if (c != ' ' && c != '\t') t += c;
  if (t == "0" || t.empty()) return e;
  for (const auto& [sign, term] : detail::split_signed(text)) {
    auto [coeff, rest] = detail::split_coeff(term);
    unsigned dpow = 0;
    for (;;) {
      bool ate = false;
      if (rest.rfind("\xE2\x88\x82", 0) == 0) {
        rest.erase(0, 3);
        ate = true;
      } else if (!rest.empty() && rest[0] == 'd' &&
                 (rest.size() > 1 &&
                  (rest[1] == '^' || rest.rfind("dL[", 0) == 0 || rest.rfind("dx[", 0) == 0 ||
                   rest.rfind("d\xE2\x88\x82", 0) == 0 || rest[1] == 'd'))) {
        rest.erase(0, 1);
        ate = true;
      }
      if (!ate) break;
      if (!rest.empty() && rest[0] == '^') {
        size_t k = 1;
        while (k < rest.size() && std::isdigit(static_cast<unsigned char>(rest[k]))) ++k;
        if (k == 1) throw std::invalid_argument("poly element: bad d exponent");
        dpow += static_cast<unsigned>(std::stoul(rest.substr(1, k - 1)));
        rest.erase(0, k);
      } else {
        dpow += 1;
      }
    }
    e.add_term(parse_basis_index(rest), dpow, sign < 0 ? -coeff : coeff);
  }
  return e;
}

std::string to_string(const BracketPoly& b) {
  if (b.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, p] : b.terms) {
    if (!first) os << "  +  ";
    first = false;
    std::string vars;
    if (key[0] == 1) vars += "\xCE\xBB ";                                  // λ
    if (key[0] > 1) vars += "\xCE\xBB^" + std::to_string(key[0]) + " ";
    if (key[1] == 1) vars += "\xCE\xBC ";                                  // μ
    if (key[1] > 1) vars += "\xCE\xBC^" + std::to_string(key[1]) + " ";
    os << vars << "(" << to_string(p) << ")";
  }
  return os.str();
}

}  // namespace cforge
