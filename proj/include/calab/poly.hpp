#pragma once

// Dense univariate polynomials over Scalar, coefficients stored ascending
// (index = exponent).  A polynomial is mode-homogeneous: all coefficients
// exact or all float.  The zero polynomial has an empty coefficient list and
// still remembers its mode.

#include <optional>
#include <vector>

#include "calab/scalar.hpp"

namespace calab {

class Poly {
public:
  /// Zero polynomial of the given mode.
  explicit Poly(ScalarMode mode = ScalarMode::exact) : mode_(mode) {}

  /// From ascending coefficients; trailing zeros are trimmed.  Mixed modes
  /// throw ModeError.
  explicit Poly(std::vector<Scalar> ascending_coeffs);

  static Poly zero(ScalarMode mode = ScalarMode::exact) { return Poly(mode); }
  static Poly one(ScalarMode mode = ScalarMode::exact);
  static Poly constant(Scalar c);
  /// The monomial c * z^k.
  static Poly monomial(Scalar c, int k);
  /// Monic product (z - r_1)...(z - r_k); all roots one mode.
  static Poly from_roots(const std::vector<Scalar>& roots,
                         ScalarMode mode_if_empty = ScalarMode::exact);

  bool is_zero() const { return coeffs_.empty(); }
  /// deg 0 for nonzero constants; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  ScalarMode mode() const { return mode_; }
  bool is_exact() const { return mode_ == ScalarMode::exact; }

  /// Coefficient of z^k (zero of the right mode when k > degree).
  Scalar coeff(int k) const;
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  Scalar leading() const;  // domain_error on the zero polynomial
  bool is_monic() const;

  /// Horner evaluation, fixed order for float reproducibility.  The point
  /// must match the polynomial's mode (ModeError otherwise); evaluating the
  /// zero polynomial returns zero of the polynomial's mode.
  Scalar eval(const Scalar& z) const;

  /// m-fold formal derivative; zero polynomial when m > degree.
  Poly derivative(int m = 1) const;

  /// F with F' = *this and F(a) = 0 (the single integration step of the
  /// iterated-integral construction).
  Poly antiderivative_from(const Scalar& a) const;

  /// f(alpha*z + beta) expanded; alpha = 0 -> domain_error.
  Poly affine_compose(const Scalar& alpha, const Scalar& beta) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  friend Poly operator*(const Scalar& c, const Poly& p);
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  /// Coefficient-wise identity (mode-sensitive, exact).
  friend bool operator==(const Poly& a, const Poly& b);

  /// Lossy conversion of every coefficient.
  Poly to_float_poly() const;
  /// Ascending coefficients as complex doubles.
  std::vector<Complex64> complex_coeffs() const;

private:
  void normalize();

  std::vector<Scalar> coeffs_;  // ascending, highest nonzero
  ScalarMode mode_;
};

/// Exact division: returns (quotient, remainder) with deg r < deg divisor.
/// Both operands must be exact; zero divisor -> domain_error.
std::pair<Poly, Poly> divmod_exact(const Poly& num, const Poly& den);

/// Quotient of an exact division known to be remainder-free; throws
/// std::domain_error if a nonzero remainder shows up.
Poly divide_exact(const Poly& num, const Poly& den);

/// Monic GCD over Q(i) by the Euclidean algorithm.  Float input ->
/// ModeError; both zero -> domain_error.
Poly exact_gcd(const Poly& f, const Poly& g);

}  // namespace calab
