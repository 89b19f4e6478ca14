#ifndef CFORGE_SCALAR_HPP
#define CFORGE_SCALAR_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace cforge {

/// Exact Gaussian rational re + im*i with re, im in Q. The coefficient
/// field for everything in this library; arithmetic never rounds.
class Scalar {
public:
  Scalar() : re_(0), im_(0) {}
  Scalar(long v) : re_(v), im_(0) {}         // NOLINT: implicit by design
  Scalar(int v) : re_(v), im_(0) {}          // NOLINT
  Scalar(long long v) : re_(static_cast<long>(v)), im_(0) {}  // NOLINT
  explicit Scalar(const mpq_class& re) : re_(re), im_(0) { normalize(); }
  Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) { normalize(); }

  /// p/q as a real Scalar; q must be nonzero.
  static Scalar rational(const mpz_class& num, const mpz_class& den);
  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }
  mpz_class re_num() const { return re_.get_num(); }
  mpz_class re_den() const { return re_.get_den(); }
  mpz_class im_num() const { return im_.get_num(); }
  mpz_class im_den() const { return im_.get_den(); }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// re^2 + im^2, zero iff the Scalar is zero.
  mpq_class norm2() const { return re_ * re_ + im_ * im_; }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);  // throws std::domain_error on zero divisor

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  /// Lexicographic (re, im); a total order used only for canonical output.
  friend bool operator<(const Scalar& a, const Scalar& b) {
    int c = cmp(a.re_, b.re_);
    if (c != 0) return c < 0;
    return cmp(a.im_, b.im_) < 0;
  }

private:
  void normalize() {
    re_.canonicalize();
    im_.canonicalize();
  }
  mpq_class re_, im_;
};

Scalar inverse(const Scalar& s);

/// "p/q" or "p/q+r/si" with optional signs; whitespace ignored; both ASCII
/// '-' and U+2212 accepted. Throws std::invalid_argument on garbage.
Scalar parse_scalar(std::string_view text);
std::optional<Scalar> try_parse_scalar(std::string_view text);

/// Canonical exact rendering, e.g. "0", "5/6", "-1/3+2i", "i", "1-2/5i".
/// parse_scalar round-trips it.
std::string to_string(const Scalar& s);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

inline mpz_class to_mpz(long long v) { return mpz_class(static_cast<long>(v)); }

/// n(n-1)...(n-k+1), the falling factorial; empty product is 1.
mpz_class falling_factorial(const mpz_class& n, unsigned k);
mpz_class factorial(unsigned k);
/// Binomial coefficient for any integer n (falling-factorial definition),
/// always an integer.
mpz_class binomial(const mpz_class& n, unsigned k);

}  // namespace cforge

#endif
