#pragma once

// Scalar arithmetic for the toolkit: exact Gaussian rationals (Q(i)) and
// complex binary64 floats behind one tagged type.  The exact and floating
// pathways never mix implicitly; crossing over requires an explicit,
// lossy to_float().

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace calab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex64 = std::complex<double>;

/// Thrown when exact and floating operands meet without an explicit conversion.
class ModeError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Numeric-path failure (e.g. root iteration did not reach the residual
/// target); carries the worst residual seen.
class NumericError : public std::runtime_error {
public:
  NumericError(const std::string& what, double worst_residual)
      : std::runtime_error(what), worst_residual_(worst_residual) {}
  double worst_residual() const { return worst_residual_; }

private:
  double worst_residual_;
};

/// Correctly rounded (nearest, ties to even) conversion.  Throws
/// std::overflow_error if the magnitude exceeds binary64 range.
double rational_to_double(const Rational& q);

/// Element of Q(i).  Closed under +, -, *, and / by nonzero values.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long r) : re(r) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  /// |z|^2 = re^2 + im^2, exact.
  Rational norm() const { return re * re + im * im; }
  GaussianRational conj() const { return {re, -im}; }

  GaussianRational operator-() const { return {-re, -im}; }
  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);

  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
  GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// Which of the two scalar representations a container is committed to.
enum class ScalarMode { exact, floating };

/// Tagged scalar: exact GaussianRational or complex binary64.  Arithmetic
/// between the two alternatives throws ModeError; the exact path never
/// silently degrades.  Float components are validated finite at construction.
class Scalar {
public:
  Scalar() : v_(GaussianRational{}) {}
  Scalar(GaussianRational g) : v_(std::move(g)) {}
  Scalar(Rational r) : v_(GaussianRational{std::move(r)}) {}
  Scalar(long n) : v_(GaussianRational{Rational(n)}) {}
  Scalar(int n) : v_(GaussianRational{Rational(n)}) {}
  Scalar(Complex64 z);  // throws std::domain_error on NaN/Inf
  Scalar(double x) : Scalar(Complex64(x, 0.0)) {}

  bool is_exact() const { return std::holds_alternative<GaussianRational>(v_); }

  const GaussianRational& exact() const;  // ModeError if floating
  Complex64 floating() const;             // ModeError if exact

  static Scalar exact_zero() { return Scalar(GaussianRational{}); }
  static Scalar exact_one() { return Scalar(GaussianRational{Rational(1)}); }
  static Scalar float_zero() { return Scalar(Complex64(0.0, 0.0)); }
  static Scalar zero_like(const Scalar& s) {
    return s.is_exact() ? exact_zero() : float_zero();
  }
  static Scalar one_like(const Scalar& s) {
    return s.is_exact() ? exact_one() : Scalar(Complex64(1.0, 0.0));
  }
  static Scalar zero_of(ScalarMode m) {
    return m == ScalarMode::exact ? exact_zero() : float_zero();
  }
  static Scalar one_of(ScalarMode m) {
    return m == ScalarMode::exact ? exact_one() : Scalar(Complex64(1.0, 0.0));
  }
  static Scalar from_int(long long n, ScalarMode m) {
    return m == ScalarMode::exact
               ? Scalar(GaussianRational{Rational(n)})
               : Scalar(Complex64(static_cast<double>(n), 0.0));
  }

  ScalarMode mode() const {
    return is_exact() ? ScalarMode::exact : ScalarMode::floating;
  }

  bool is_zero() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);  // domain_error on /0
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  /// Identity on the same mode; exact vs float is never equal.
  friend bool operator==(const Scalar& a, const Scalar& b);

private:
  std::variant<GaussianRational, Complex64> v_;
};

/// Approximate-equality policy: |a-b| <= absolute + relative*max(|a|,|b|).
struct Tolerance {
  double absolute = 1e-10;
  double relative = 1e-10;

  bool within(double distance, double scale) const {
    return distance <= absolute + relative * scale;
  }
};

/// Nearest binary64 pair; idempotent on floats.  Throws std::overflow_error
/// when a component overflows binary64.
Complex64 to_float(const Scalar& x);

/// base^k for k >= 0 by binary exponentiation; pow_int(x, 0) = 1 of x's mode.
Scalar pow_int(const Scalar& base, int exponent);

/// Exact square root when one exists in the rationals (resp. Gaussian
/// rationals with rational components); nullopt otherwise.  Rational roots
/// are the nonnegative branch; Gaussian roots take the principal branch.
std::optional<Rational> exact_sqrt(const Rational& q);
std::optional<GaussianRational> exact_sqrt(const GaussianRational& g);

/// Exact operands compare exactly (tolerance ignored); any float operand
/// uses the Tolerance formula on |a-b|.  Reflexive and symmetric; NOT
/// transitive in float mode.
bool approx_eq(const Scalar& a, const Scalar& b, const Tolerance& tol);

double abs_value(const Scalar& x);

/// Parses "p", "p/q", a decimal, or a comma pair "re,im" of those forms.
/// Exact forms produce GaussianRational, decimal forms ComplexFloat; a pair
/// mixing the two is promoted to float.  Malformed text ->
/// std::invalid_argument naming the token; zero denominator ->
/// std::domain_error.
Scalar parse_scalar(const std::string& text);

/// Inverse of parse_scalar on exact scalars: "p/q" or "p", with a ",im"
/// suffix when the imaginary part is nonzero.  Floats render with 17
/// significant digits.
std::string render_scalar(const Scalar& x);

/// Renders one real component: exact "p/q" / "p", or float with 17
/// significant digits.
std::string render_rational(const Rational& q);
std::string render_double(double x);

}  // namespace calab
