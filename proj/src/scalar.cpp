#include "cforge/scalar.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace cforge {

Scalar Scalar::rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("Scalar: zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = re;
  im_ = im;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
  mpq_class n = o.norm2();
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / n;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = re;
  im_ = im;
  return *this;
}

Scalar inverse(const Scalar& s) { return Scalar(1) / s; }

namespace {

// Strips whitespace, maps U+2212 to '-'.
std::string preclean(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (size_t k = 0; k < text.size(); ++k) {
    unsigned char c = static_cast<unsigned char>(text[k]);
    if (std::isspace(c)) continue;
    if (c == 0xE2 && k + 2 < text.size() &&
        static_cast<unsigned char>(text[k + 1]) == 0x88 &&
        static_cast<unsigned char>(text[k + 2]) == 0x92) {
      out += '-';
      k += 2;
      continue;
    }
    out += text[k];
  }
  return out;
}

mpz_class parse_int(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Scalar: empty integer");
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("Scalar: bad integer '" + s + "'");
  return mpz_class(s);
}

// "p" or "p/q", no sign.
mpq_class parse_fraction(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return mpq_class(parse_int(s));
  mpz_class num = parse_int(s.substr(0, slash));
  mpz_class den = parse_int(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("Scalar: zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string s = preclean(text);
  if (s.empty()) throw std::invalid_argument("Scalar: empty literal");

  // Split into at most two signed parts at top-level +/-.
  std::vector<std::string> parts;
  size_t start = 0;
  for (size_t k = 1; k < s.size(); ++k) {
    if (s[k] == '+' || s[k] == '-') {
      parts.push_back(s.substr(start, k - start));
      start = k;
    }
  }
  parts.push_back(s.substr(start));
  if (parts.size() > 2) throw std::invalid_argument("Scalar: too many terms in '" + s + "'");

  mpq_class re(0), im(0);
  bool saw_re = false, saw_im = false;
  for (auto part : parts) {
    bool neg = false;
    if (!part.empty() && (part[0] == '+' || part[0] == '-')) {
      neg = part[0] == '-';
      part.erase(0, 1);
    }
    if (part.empty()) throw std::invalid_argument("Scalar: dangling sign");
    bool imag = part.back() == 'i';
    if (imag) part.pop_back();
    mpq_class v = (imag && part.empty()) ? mpq_class(1) : parse_fraction(part);
    if (neg) v = -v;
    if (imag) {
      if (saw_im) throw std::invalid_argument("Scalar: two imaginary parts");
      im = v;
      saw_im = true;
    } else {
      if (saw_re) throw std::invalid_argument("Scalar: two real parts");
      re = v;
      saw_re = true;
    }
  }
  return Scalar(re, im);
}

std::optional<Scalar> try_parse_scalar(std::string_view text) {
  try {
    return parse_scalar(text);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::string to_string(const Scalar& s) {
  if (s.is_zero()) return "0";
  std::string out;
  if (s.re() != 0) out += s.re().get_str();
  if (s.im() != 0) {
    mpq_class a = s.im();
    bool neg = a < 0;
    if (neg) a = -a;
    if (!out.empty())
      out += neg ? "-" : "+";
    else if (neg)
      out += "-";
    if (a != 1) out += a.get_str();
    out += "i";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << to_string(s); }

mpz_class falling_factorial(const mpz_class& n, unsigned k) {
  mpz_class r = 1;
  for (unsigned t = 0; t < k; ++t) r *= n - t;
  return r;
}

mpz_class factorial(unsigned k) {
  mpz_class r = 1;
  for (unsigned t = 2; t <= k; ++t) r *= t;
  return r;
}

mpz_class binomial(const mpz_class& n, unsigned k) {
  mpz_class num = falling_factorial(n, k);
  mpz_class den = factorial(k);
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace cforge
