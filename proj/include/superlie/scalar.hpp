#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace superlie {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Renders a rational as "p" or "p/q" with q > 1, decimal integers.
std::string rational_str(const Rational& r);

/// Parses "p" or "p/q" (optional leading '-', q > 0). Throws
/// std::invalid_argument on anything else.
Rational rational_parse(std::string_view text);

/// Exact complex number with rational real and imaginary parts.
///
/// Components are kept individually reduced (gcd 1, positive denominator),
/// so equality is plain component-wise comparison.
class GaussScalar {
 public:
  GaussScalar() = default;
  GaussScalar(long v) : re_(v) {}  // NOLINT: implicit for integer literals
  GaussScalar(Rational re, Rational im = Rational(0))
      : re_(std::move(re)), im_(std::move(im)) {}

  static GaussScalar i() { return GaussScalar(Rational(0), Rational(1)); }

  /// (2i)^m, exactly.
  static GaussScalar pow_two_i(unsigned m);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  GaussScalar operator-() const { return GaussScalar(-re_, -im_); }
  GaussScalar operator+(const GaussScalar& o) const {
    return GaussScalar(re_ + o.re_, im_ + o.im_);
  }
  GaussScalar operator-(const GaussScalar& o) const {
    return GaussScalar(re_ - o.re_, im_ - o.im_);
  }
  GaussScalar operator*(const GaussScalar& o) const {
    return GaussScalar(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
  }
  /// Throws std::domain_error when dividing by zero.
  GaussScalar operator/(const GaussScalar& o) const;

  GaussScalar& operator+=(const GaussScalar& o) { return *this = *this + o; }
  GaussScalar& operator-=(const GaussScalar& o) { return *this = *this - o; }
  GaussScalar& operator*=(const GaussScalar& o) { return *this = *this * o; }

  bool operator==(const GaussScalar& o) const = default;

  /// Structural order (lexicographic on re, im) so scalars can key ordered
  /// containers; carries no arithmetic meaning.
  bool operator<(const GaussScalar& o) const {
    if (re_ != o.re_) return re_ < o.re_;
    return im_ < o.im_;
  }

  /// Compact text form: "0", "-3/4", "i", "2i", "1-2/3i".
  std::string str() const;

  /// Inverse of str(); also the grammar for CLI scalar arguments.
  static GaussScalar parse(std::string_view text);

 private:
  Rational re_{};
  Rational im_{};
};

std::ostream& operator<<(std::ostream& os, const GaussScalar& s);

}  // namespace superlie
