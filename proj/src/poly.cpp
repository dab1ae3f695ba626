#include "calab/poly.hpp"

#include <stdexcept>
#include <utility>

namespace calab {

Poly::Poly(std::vector<Scalar> ascending_coeffs) : mode_(ScalarMode::exact) {
  if (ascending_coeffs.empty()) return;
  mode_ = ascending_coeffs.front().mode();
  for (const Scalar& c : ascending_coeffs)
    if (c.mode() != mode_)
      throw ModeError("polynomial coefficients mix exact and float scalars");
  coeffs_ = std::move(ascending_coeffs);
  normalize();
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::one(ScalarMode mode) { return constant(Scalar::one_of(mode)); }

Poly Poly::constant(Scalar c) {
  Poly p(c.mode());
  if (!c.is_zero()) p.coeffs_.push_back(std::move(c));
  return p;
}

Poly Poly::monomial(Scalar c, int k) {
  if (k < 0) throw std::domain_error("monomial exponent must be >= 0");
  Poly p(c.mode());
  if (c.is_zero()) return p;
  p.coeffs_.assign(static_cast<size_t>(k) + 1, Scalar::zero_like(c));
  p.coeffs_.back() = std::move(c);
  return p;
}

Poly Poly::from_roots(const std::vector<Scalar>& roots,
                      ScalarMode mode_if_empty) {
  Poly p = roots.empty() ? Poly::one(mode_if_empty)
                         : Poly::one(roots.front().mode());
  for (const Scalar& r : roots) {
    // multiply by (z - r)
    Poly factor(std::vector<Scalar>{-r, Scalar::one_like(r)});
    p *= factor;
  }
  return p;
}

Scalar Poly::coeff(int k) const {
  if (k < 0) throw std::domain_error("coefficient index must be >= 0");
  if (static_cast<size_t>(k) < coeffs_.size()) return coeffs_[k];
  return Scalar::zero_of(mode_);
}

Scalar Poly::leading() const {
  if (coeffs_.empty())
    throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

bool Poly::is_monic() const {
  return !coeffs_.empty() && coeffs_.back() == Scalar::one_of(mode_);
}

Scalar Poly::eval(const Scalar& z) const {
  if (z.mode() != mode_)
    throw ModeError("evaluation point mode differs from polynomial mode");
  Scalar acc = Scalar::zero_of(mode_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * z + *it;
  return acc;
}

Poly Poly::derivative(int m) const {
  if (m < 0) throw std::domain_error("derivative order must be >= 0");
  if (m == 0) return *this;
  if (degree() < m) return Poly(mode_);
  Poly d(mode_);
  d.coeffs_.reserve(coeffs_.size() - static_cast<size_t>(m));
  for (size_t k = static_cast<size_t>(m); k < coeffs_.size(); ++k) {
    // falling factorial k(k-1)...(k-m+1)
    Scalar factor = Scalar::one_of(mode_);
    for (size_t j = 0; j < static_cast<size_t>(m); ++j)
      factor = factor * Scalar::from_int(static_cast<long long>(k - j), mode_);
    d.coeffs_.push_back(factor * coeffs_[k]);
  }
  d.normalize();
  return d;
}

Poly Poly::antiderivative_from(const Scalar& a) const {
  if (a.mode() != mode_)
    throw ModeError("integration base point mode differs from polynomial mode");
  Poly F(mode_);
  F.coeffs_.assign(coeffs_.size() + 1, Scalar::zero_of(mode_));
  for (size_t k = 0; k < coeffs_.size(); ++k)
    F.coeffs_[k + 1] =
        coeffs_[k] / Scalar::from_int(static_cast<long long>(k + 1), mode_);
  F.normalize();
  // fix the constant so that F(a) = 0
  Scalar c = F.eval(a);
  if (!c.is_zero()) F -= Poly::constant(c);
  return F;
}

Poly Poly::affine_compose(const Scalar& alpha, const Scalar& beta) const {
  if (alpha.mode() != mode_ || beta.mode() != mode_)
    throw ModeError("affine parameters mode differs from polynomial mode");
  if (alpha.is_zero())
    throw std::domain_error("affine substitution requires alpha != 0");
  // Horner in the argument (alpha z + beta)
  Poly arg(std::vector<Scalar>{beta, alpha});
  Poly acc(mode_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * arg + Poly::constant(*it);
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.mode_ != b.mode_)
    throw ModeError("cannot add exact and float polynomials");
  Poly r(a.mode_);
  const size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  r.coeffs_.reserve(n);
  for (size_t k = 0; k < n; ++k) {
    Scalar s = Scalar::zero_of(a.mode_);
    if (k < a.coeffs_.size()) s = s + a.coeffs_[k];
    if (k < b.coeffs_.size()) s = s + b.coeffs_[k];
    r.coeffs_.push_back(std::move(s));
  }
  r.normalize();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly Poly::operator-() const {
  Poly r(mode_);
  r.coeffs_.reserve(coeffs_.size());
  for (const Scalar& c : coeffs_) r.coeffs_.push_back(-c);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero())
    return Poly(a.is_zero() ? a.mode_ : b.mode_);
  if (a.mode_ != b.mode_)
    throw ModeError("cannot multiply exact and float polynomials");
  Poly r(a.mode_);
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1,
                   Scalar::zero_of(a.mode_));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
  }
  r.normalize();
  return r;
}

Poly operator*(const Scalar& c, const Poly& p) {
  return Poly::constant(c) * p;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.mode_ != b.mode_ || a.coeffs_.size() != b.coeffs_.size()) return false;
  for (size_t k = 0; k < a.coeffs_.size(); ++k)
    if (!(a.coeffs_[k] == b.coeffs_[k])) return false;
  return true;
}

Poly Poly::to_float_poly() const {
  if (mode_ == ScalarMode::floating) return *this;
  Poly r(ScalarMode::floating);
  r.coeffs_.reserve(coeffs_.size());
  for (const Scalar& c : coeffs_) r.coeffs_.push_back(Scalar(to_float(c)));
  r.normalize();  // exact nonzero can round to 0.0 only if subnormal underflow
  return r;
}

std::vector<Complex64> Poly::complex_coeffs() const {
  std::vector<Complex64> out;
  out.reserve(coeffs_.size());
  for (const Scalar& c : coeffs_) out.push_back(to_float(c));
  return out;
}

std::pair<Poly, Poly> divmod_exact(const Poly& num, const Poly& den) {
  if (!num.is_exact() || !den.is_exact())
    throw ModeError("exact division requires exact polynomials");
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly q(ScalarMode::exact);
  Poly r = num;
  const Scalar lead = den.leading();
  while (!r.is_zero() && r.degree() >= den.degree()) {
    const int shift = r.degree() - den.degree();
    const Scalar factor = r.leading() / lead;
    q += Poly::monomial(factor, shift);
    r -= Poly::monomial(factor, shift) * den;
  }
  return {std::move(q), std::move(r)};
}

Poly divide_exact(const Poly& num, const Poly& den) {
  auto [q, r] = divmod_exact(num, den);
  if (!r.is_zero())
    throw std::domain_error("polynomial division left a nonzero remainder");
  return q;
}

Poly exact_gcd(const Poly& f, const Poly& g) {
  if (!f.is_exact() || !g.is_exact())
    throw ModeError("exact gcd requires exact polynomials");
  if (f.is_zero() && g.is_zero())
    throw std::domain_error("gcd(0, 0) is undefined");
  Poly a = f, b = g;
  while (!b.is_zero()) {
    auto [q, r] = divmod_exact(a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  // monic normalization
  return (Scalar::one_like(a.leading()) / a.leading()) * a;
}

}  // namespace calab
