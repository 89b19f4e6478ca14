#include "cforge/element.hpp"

#include <stdexcept>

namespace cforge {

void Element::add_term(const BasisIndex& idx, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [idx, c] : o.terms) add_term(idx, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [idx, c] : o.terms) add_term(idx, -c);
  return *this;
}

Element operator*(const Scalar& c, const Element& e) {
  Element r;
  if (c.is_zero()) return r;
  for (const auto& [idx, v] : e.terms) r.terms.emplace(idx, c * v);
  return r;
}

Element unit_element(const BasisIndex& idx) {
  Element e;
  e.terms.emplace(idx, Scalar(1));
  return e;
}

namespace detail {

// Shared term renderer: "" / "-" lead handling is done by the caller.
// Returns {magnitude-rendering, is-negative-display}.
std::pair<std::string, bool> render_coeff(const Scalar& c) {
  bool mixed = c.re() != 0 && c.im() != 0;
  if (mixed) return {"(" + to_string(c) + ")*", false};
  Scalar a = c;
  bool neg = (c.re() < 0) || (c.re() == 0 && c.im() < 0);
  if (neg) a = -a;
  if (a == Scalar(1)) return {"", neg};
  return {to_string(a) + "*", neg};
}

std::string join_terms(const std::vector<std::pair<std::string, bool>>& parts) {
  std::string out;
  for (size_t k = 0; k < parts.size(); ++k) {
    const auto& [body, neg] = parts[k];
    if (k == 0)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    out += body;
  }
  return out;
}

// Splits at top-level '+'/'-', returning (sign, chunk) pairs.
std::vector<std::pair<int, std::string>> split_signed(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  int depth = 0;
  int sign = 1;
  std::string cur;
  auto flush = [&](int next_sign) {
    std::string t;
    for (char c : cur)
      if (c != ' ' && c != '\t') t += c;
    if (!t.empty()) out.emplace_back(sign, t);
    else if (!out.empty() || !cur.empty())
      throw std::invalid_argument("element: empty term");
    cur.clear();
    sign = next_sign;
  };
  for (char c : text) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth == 0 && (c == '+' || c == '-') && !cur.empty()) {
      flush(c == '-' ? -1 : 1);
      continue;
    }
    if (depth == 0 && (c == '+' || c == '-') && cur.empty() && out.empty() && c == '-') {
      sign = -sign;
      continue;
    }
    cur += c;
  }
  flush(1);
  if (out.empty()) throw std::invalid_argument("element: empty expression");
  return out;
}

// "coeff*rest" split at top-level '*'; coeff may be parenthesized.
std::pair<Scalar, std::string> split_coeff(const std::string& term) {
  int depth = 0;
  for (size_t k = 0; k < term.size(); ++k) {
    char c = term[k];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth == 0 && c == '*') {
      std::string coeff = term.substr(0, k);
      if (coeff.size() >= 2 && coeff.front() == '(' && coeff.back() == ')')
        coeff = coeff.substr(1, coeff.size() - 2);
      return {parse_scalar(coeff), term.substr(k + 1)};
    }
  }
  return {Scalar(1), term};
}

}  // namespace detail

std::string to_string(const Element& e) {
  if (e.is_zero()) return "0";
  std::vector<std::pair<std::string, bool>> parts;
  for (const auto& [idx, c] : e.terms) {
    auto [prefix, neg] = detail::render_coeff(c);
    parts.emplace_back(prefix + to_string(idx), neg);
  }
  return detail::join_terms(parts);
}

Element parse_element(const std::string& text) {
  Element e;
  std::string t;
  for (char c : text)
    if (c != ' ' && c != '\t') t += c;
  if (t == "0" || t.empty()) return e;
  for (const auto& [sign, term] : detail::split_signed(text)) {
    auto [coeff, rest] = detail::split_coeff(term);
    e.add_term(parse_basis_index(rest), sign < 0 ? -coeff : coeff);
  }
  return e;
}

}  // namespace cforge
