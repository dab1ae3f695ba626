#include "calab/scalar.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>

namespace calab {

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  if (b.is_zero()) throw std::domain_error("division by zero Gaussian rational");
  // (a * conj b) / |b|^2 stays inside Q(i).
  Rational n = b.norm();
  GaussianRational p = a * b.conj();
  return {p.re / n, p.im / n};
}

Scalar::Scalar(Complex64 z) : v_(z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::domain_error("non-finite float scalar component");
}

const GaussianRational& Scalar::exact() const {
  if (!is_exact()) throw ModeError("expected exact scalar, got float");
  return std::get<GaussianRational>(v_);
}

Complex64 Scalar::floating() const {
  if (is_exact()) throw ModeError("expected float scalar, got exact");
  return std::get<Complex64>(v_);
}

bool Scalar::is_zero() const {
  if (is_exact()) return exact().is_zero();
  Complex64 z = std::get<Complex64>(v_);
  return z.real() == 0.0 && z.imag() == 0.0;
}

namespace {

[[noreturn]] void mixed_modes(const char* op) {
  throw ModeError(std::string("mixed exact/float operands in '") + op +
                  "'; convert explicitly with to_float");
}

}  // namespace

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(-exact());
  return Scalar(-std::get<Complex64>(v_));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_exact() != b.is_exact()) mixed_modes("+");
  if (a.is_exact()) return Scalar(a.exact() + b.exact());
  return Scalar(a.floating() + b.floating());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (a.is_exact() != b.is_exact()) mixed_modes("-");
  if (a.is_exact()) return Scalar(a.exact() - b.exact());
  return Scalar(a.floating() - b.floating());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_exact() != b.is_exact()) mixed_modes("*");
  if (a.is_exact()) return Scalar(a.exact() * b.exact());
  return Scalar(a.floating() * b.floating());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (a.is_exact() != b.is_exact()) mixed_modes("/");
  if (a.is_exact()) return Scalar(a.exact() / b.exact());
  Complex64 d = b.floating();
  if (d.real() == 0.0 && d.imag() == 0.0)
    throw std::domain_error("division by zero float scalar");
  return Scalar(a.floating() / d);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_exact() != b.is_exact()) return false;
  if (a.is_exact()) return a.exact() == b.exact();
  return a.floating() == b.floating();
}

double rational_to_double(const Rational& q) {
  using boost::multiprecision::numerator;
  using boost::multiprecision::denominator;
  BigInt num = numerator(q);
  BigInt den = denominator(q);
  if (num == 0) return 0.0;
  bool neg = num < 0;
  if (neg) num = -num;

  // Scale num/den so the integer quotient carries 55 bits, divide with
  // remainder, then round to nearest (ties to even) and reassemble with ldexp.
  long nb = static_cast<long>(boost::multiprecision::msb(num));
  long db = static_cast<long>(boost::multiprecision::msb(den));
  long shift = 55 - (nb - db);
  if (shift > 0)
    num <<= shift;
  else if (shift < 0)
    den <<= -shift;
  BigInt quot, rem;
  boost::multiprecision::divide_qr(num, den, quot, rem);
  // quot has 55 or 56 bits; round the low bits away to 53 significant bits.
  long qb = static_cast<long>(boost::multiprecision::msb(quot));
  long drop = qb - 52;
  std::int64_t mant;
  long exp2 = -static_cast<long>(shift);
  if (drop > 0) {
    BigInt half = BigInt(1) << (drop - 1);
    BigInt low = quot & ((BigInt(1) << drop) - 1);
    quot >>= drop;
    exp2 += drop;
    bool round_up;
    if (low > half)
      round_up = true;
    else if (low < half)
      round_up = false;
    else if (rem != 0)
      round_up = true;  // sticky bits below the quotient
    else
      round_up = (quot & 1) != 0;  // exact tie: to even
    if (round_up) {
      ++quot;
      if (boost::multiprecision::msb(quot) > 52) {
        quot >>= 1;
        ++exp2;
      }
    }
    mant = quot.convert_to<std::int64_t>();
  } else {
    // Quotient already fits; remainder-based rounding.
    mant = quot.convert_to<std::int64_t>();
    BigInt twice = rem * 2;
    if (twice > den || (twice == den && (mant & 1)))
      ++mant;
  }
  double result = std::ldexp(static_cast<double>(mant), static_cast<int>(exp2));
  if (!std::isfinite(result))
    throw std::overflow_error("rational magnitude overflows binary64");
  return neg ? -result : result;
}

Complex64 to_float(const Scalar& x) {
  if (!x.is_exact()) return x.floating();
  const GaussianRational& g = x.exact();
  return {rational_to_double(g.re), rational_to_double(g.im)};
}

bool approx_eq(const Scalar& a, const Scalar& b, const Tolerance& tol) {
  if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
  Complex64 fa = to_float(a), fb = to_float(b);
  double dist = std::abs(fa - fb);
  double scale = std::max(std::abs(fa), std::abs(fb));
  return tol.within(dist, scale);
}

double abs_value(const Scalar& x) { return std::abs(to_float(x)); }

namespace {

bool is_decimal_form(const std::string& s) {
  return s.find_first_of(".eE") != std::string::npos;
}

Rational parse_rational_text(const std::string& text) {
  auto bad = [&](const char* why) {
    throw std::invalid_argument(std::string("malformed scalar '") + text + "': " + why);
  };
  std::size_t slash = text.find('/');
  std::string num = text.substr(0, slash);
  if (num.empty()) bad("empty numerator");
  std::size_t start = (num[0] == '+' || num[0] == '-') ? 1 : 0;
  if (start == num.size()) bad("sign with no digits");
  for (std::size_t i = start; i < num.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(num[i]))) bad("non-digit in numerator");
  if (slash == std::string::npos) return Rational(BigInt(num));
  std::string den = text.substr(slash + 1);
  if (den.empty()) bad("empty denominator");
  for (char c : den)
    if (!std::isdigit(static_cast<unsigned char>(c))) bad("denominator must be a positive integer");
  BigInt d(den);
  if (d == 0) throw std::domain_error("zero denominator in '" + text + "'");
  return Rational(BigInt(num), d);
}

// one real component: exact rational or binary64
Scalar parse_component(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty scalar text");
  if (is_decimal_form(s)) {
    std::size_t pos = 0;
    double v;
    try {
      v = std::stod(s, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed scalar '" + raw + "': not a decimal");
    }
    if (pos != s.size())
      throw std::invalid_argument("malformed scalar '" + raw + "': trailing characters after '" +
                                  s.substr(0, pos) + "'");
    if (!std::isfinite(v)) throw std::domain_error("non-finite decimal '" + raw + "'");
    return Scalar(Complex64(v, 0.0));
  }
  return Scalar(GaussianRational{parse_rational_text(s)});
}

}  // namespace

Scalar parse_scalar(const std::string& text) {
  std::size_t comma = text.find(',');
  if (comma == std::string::npos) return parse_component(text);
  Scalar re = parse_component(text.substr(0, comma));
  Scalar im = parse_component(text.substr(comma + 1));
  if (re.is_exact() && im.is_exact())
    return Scalar(GaussianRational{re.exact().re, im.exact().re});
  // a decimal component forces the whole value to the float pathway
  return Scalar(Complex64(to_float(re).real(), to_float(im).real()));
}

std::string render_rational(const Rational& q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

std::string render_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string render_scalar(const Scalar& x) {
  if (x.is_exact()) {
    const GaussianRational& g = x.exact();
    std::string s = render_rational(g.re);
    if (g.im != 0) s += "," + render_rational(g.im);
    return s;
  }
  Complex64 z = x.floating();
  std::string s = render_double(z.real());
  if (z.imag() != 0.0) s += "," + render_double(z.imag());
  return s;
}

}  // namespace calab

namespace calab {

Scalar pow_int(const Scalar& base, int exponent) {
  if (exponent < 0) throw std::domain_error("pow_int exponent must be >= 0");
  Scalar acc = Scalar::one_like(base);
  Scalar b = base;
  unsigned e = static_cast<unsigned>(exponent);
  while (e > 0) {
    if (e & 1u) acc *= b;
    e >>= 1u;
    if (e > 0) b *= b;
  }
  return acc;
}

}  // namespace calab

namespace calab {

namespace {

// Integer square root with an exactness check via boost's floor-sqrt.
std::optional<BigInt> exact_sqrt_int(const BigInt& n) {
  if (n < 0) return std::nullopt;
  BigInt r = boost::multiprecision::sqrt(n);
  if (r * r != n) return std::nullopt;
  return r;
}

}  // namespace

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  auto num = exact_sqrt_int(boost::multiprecision::numerator(q));
  if (!num) return std::nullopt;
  auto den = exact_sqrt_int(boost::multiprecision::denominator(q));
  if (!den) return std::nullopt;
  return Rational(*num, *den);
}

std::optional<GaussianRational> exact_sqrt(const GaussianRational& g) {
  if (g.im == 0) {
    if (g.re >= 0) {
      auto r = exact_sqrt(g.re);
      if (!r) return std::nullopt;
      return GaussianRational{*r, Rational(0)};
    }
    auto r = exact_sqrt(Rational(-g.re));
    if (!r) return std::nullopt;
    return GaussianRational{Rational(0), *r};
  }
  // sqrt(x+iy) = u + iv with u = sqrt((x+|g|)/2), v = y/(2u); both the
  // modulus and u must be rational for the root to be representable.
  auto mod = exact_sqrt(Rational(g.re * g.re + g.im * g.im));
  if (!mod) return std::nullopt;
  auto u = exact_sqrt(Rational((g.re + *mod) / 2));
  if (!u || *u == 0) return std::nullopt;
  Rational v = g.im / (2 * *u);
  return GaussianRational{*u, v};
}

}  // namespace calab
