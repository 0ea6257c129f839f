#include "superlie/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace superlie {

namespace {

bool is_plain_integer(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// cpp_int reads a leading 0 as octal; force decimal.
BigInt decimal_int(std::string_view s) {
  bool negative = false;
  if (!s.empty() && s.front() == '-') {
    negative = true;
    s.remove_prefix(1);
  }
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  BigInt v{std::string(s)};
  if (negative) v = -v;
  return v;
}

}  // namespace

std::string rational_str(const Rational& r) {
  std::string out = numerator(r).str();
  if (denominator(r) != 1) {
    out += '/';
    out += denominator(r).str();
  }
  return out;
}

Rational rational_parse(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_plain_integer(num))
    throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(decimal_int(num));
  std::string_view den = text.substr(slash + 1);
  if (!is_plain_integer(den) || den.front() == '-' || den == "0")
    throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
  return Rational(decimal_int(num), decimal_int(den));
}

GaussScalar GaussScalar::pow_two_i(unsigned m) {
  const BigInt mag = boost::multiprecision::pow(BigInt(2), m);
  switch (m % 4) {
    case 0: return GaussScalar(Rational(mag), Rational(0));
    case 1: return GaussScalar(Rational(0), Rational(mag));
    case 2: return GaussScalar(Rational(-mag), Rational(0));
    default: return GaussScalar(Rational(0), Rational(-mag));
  }
}

GaussScalar GaussScalar::operator/(const GaussScalar& o) const {
  if (o.is_zero()) throw std::domain_error("GaussScalar: division by zero");
  const Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
  return GaussScalar((re_ * o.re_ + im_ * o.im_) / norm,
                     (im_ * o.re_ - re_ * o.im_) / norm);
}

std::string GaussScalar::str() const {
  if (is_zero()) return "0";
  if (im_.is_zero()) return rational_str(re_);
  std::string imag;
  if (im_ == 1)
    imag = "i";
  else if (im_ == -1)
    imag = "-i";
  else
    imag = rational_str(im_) + "i";
  if (re_.is_zero()) return imag;
  if (imag.front() != '-') imag.insert(imag.begin(), '+');
  return rational_str(re_) + imag;
}

GaussScalar GaussScalar::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty scalar");
  // Split an "a+bi"/"a-bi" form at the sign separating the two parts; any
  // sign at position 0 belongs to the first part.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = 1; k < text.size(); ++k) {
    if (text[k] == '+' || text[k] == '-') {
      if (split != std::string_view::npos)
        throw std::invalid_argument("bad scalar: '" + std::string(text) + "'");
      split = k;
    }
  }
  auto parse_imag_part = [](std::string_view part) {
    // part ends with 'i'; "i" and "-i" mean +/-1, "+..." allowed after split
    part.remove_suffix(1);
    if (!part.empty() && part.front() == '+') part.remove_prefix(1);
    if (part.empty()) return Rational(1);
    if (part == "-") return Rational(-1);
    return rational_parse(part);
  };
  if (split == std::string_view::npos) {
    if (text.back() == 'i') return GaussScalar(Rational(0), parse_imag_part(text));
    return GaussScalar(rational_parse(text));
  }
  std::string_view first = text.substr(0, split);
  std::string_view second = text.substr(split);
  if (second.back() != 'i' || first.back() == 'i')
    throw std::invalid_argument("bad scalar: '" + std::string(text) + "'");
  return GaussScalar(rational_parse(first), parse_imag_part(second));
}

std::ostream& operator<<(std::ostream& os, const GaussScalar& s) {
  return os << s.str();
}

}  // namespace superlie
