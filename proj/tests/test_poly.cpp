#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <stdexcept>
#include <vector>

#include "calab/explorer.hpp"
#include "calab/poly.hpp"
#include "support/test_support.hpp"

using namespace calab;
using calab_test::rand_rational;
using calab_test::rand_rational_nonzero;

static Scalar exq(long long nr, long long dr, long long ni = 0, long long di = 1) {
  return Scalar(GaussianRational{Rational(nr, dr), Rational(ni, di)});
}

static Poly rand_exact_poly(SplitMix64& g, int deg) {
  std::vector<Scalar> cs;
  for (int i = 0; i < deg; ++i) cs.push_back(rand_rational(g));
  cs.push_back(rand_rational_nonzero(g));
  return Poly(std::move(cs));
}

TEST_CASE("construction, normalization, degree conventions") {
  Poly z(ScalarMode::exact);
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK(z.mode() == ScalarMode::exact);

  // trailing zeros trim; degree 0 for nonzero constants
  Poly p(std::vector<Scalar>{exq(2, 1), exq(0, 1), exq(0, 1)});
  CHECK(p.degree() == 0);
  CHECK(p.coeff(0) == exq(2, 1));
  CHECK(p.coeff(5) == Scalar::exact_zero());  // past the degree

  Poly all_zero(std::vector<Scalar>{exq(0, 1), exq(0, 1)});
  CHECK(all_zero.is_zero());

  CHECK_THROWS_AS(
      Poly(std::vector<Scalar>{Scalar::exact_one(), Scalar(Complex64(1.0, 0.0))}),
      ModeError);
  CHECK_THROWS_AS(z.leading(), std::domain_error);

  Poly m = Poly::monomial(exq(3, 2), 4);
  CHECK(m.degree() == 4);
  CHECK(m.leading() == exq(3, 2));
  CHECK_FALSE(m.is_monic());
  CHECK(Poly::one().is_monic());
}

TEST_CASE("from_roots expands the expected product") {
  Poly p = Poly::from_roots({exq(1, 1), exq(2, 1), exq(3, 1)});
  // (z-1)(z-2)(z-3) = z^3 - 6 z^2 + 11 z - 6
  CHECK(p.degree() == 3);
  CHECK(p.is_monic());
  CHECK(p.coeff(0) == exq(-6, 1));
  CHECK(p.coeff(1) == exq(11, 1));
  CHECK(p.coeff(2) == exq(-6, 1));

  Poly empty = Poly::from_roots({}, ScalarMode::floating);
  CHECK(empty.degree() == 0);
  CHECK(empty.mode() == ScalarMode::floating);

  SplitMix64 g(31);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<Scalar> roots;
    for (int i = 0; i < 5; ++i) roots.push_back(rand_rational(g));
    Poly f = Poly::from_roots(roots);
    for (const Scalar& r : roots) CHECK(f.eval(r) == Scalar::exact_zero());
  }
}

TEST_CASE("eval matches an independent Horner on std::complex") {
  SplitMix64 g(47);
  for (int rep = 0; rep < 100; ++rep) {
    int deg = 1 + static_cast<int>(g.next() % 8);
    std::vector<Scalar> cs;
    for (int i = 0; i <= deg; ++i) cs.push_back(Scalar(g.unit_disk()));
    Poly f(cs);
    Complex64 z = g.unit_disk();
    std::complex<double> acc(0.0, 0.0);
    for (int i = static_cast<int>(cs.size()) - 1; i >= 0; --i)
      acc = acc * z + to_float(cs[static_cast<std::size_t>(i)]);
    Complex64 got = to_float(f.eval(Scalar(z)));
    CHECK(std::abs(got - acc) <= 1e-12);
  }
  // mode mismatch between point and polynomial
  CHECK_THROWS_AS(Poly::one().eval(Scalar(Complex64(1.0, 0.0))), ModeError);
}

TEST_CASE("derivative coefficients and the product rule") {
  Poly p(std::vector<Scalar>{exq(1, 1), exq(2, 1), exq(3, 1), exq(4, 1)});
  Poly d = p.derivative();
  CHECK(d.coeff(0) == exq(2, 1));
  CHECK(d.coeff(1) == exq(6, 1));
  CHECK(d.coeff(2) == exq(12, 1));
  CHECK(p.derivative(4).is_zero());
  CHECK(p.derivative(0) == p);

  SplitMix64 g(59);
  for (int rep = 0; rep < 60; ++rep) {
    Poly f = rand_exact_poly(g, 4);
    Poly h = rand_exact_poly(g, 3);
    CHECK((f * h).derivative() == f.derivative() * h + f * h.derivative());
    CHECK(f.derivative(2) == f.derivative().derivative());
  }
}

TEST_CASE("antiderivative_from inverts the derivative and hits its base point") {
  SplitMix64 g(61);
  for (int rep = 0; rep < 60; ++rep) {
    Poly f = rand_exact_poly(g, 5);
    Scalar a = rand_rational(g);
    Poly F = f.antiderivative_from(a);
    CHECK(F.derivative() == f);
    CHECK(F.eval(a) == Scalar::exact_zero());
  }
}

TEST_CASE("ring operations satisfy spot-checked axioms") {
  SplitMix64 g(73);
  for (int rep = 0; rep < 60; ++rep) {
    Poly a = rand_exact_poly(g, 3), b = rand_exact_poly(g, 4), c = rand_exact_poly(g, 2);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Poly::zero());
    CHECK((-a) + a == Poly::zero());
    CHECK((a * b).degree() == a.degree() + b.degree());
    CHECK(exq(2, 1) * a == a + a);
  }
}

TEST_CASE("affine_compose agrees with evaluation and inverts") {
  SplitMix64 g(83);
  for (int rep = 0; rep < 50; ++rep) {
    Poly f = rand_exact_poly(g, 4);
    Scalar alpha = rand_rational_nonzero(g);
    Scalar beta = rand_rational(g);
    Poly comp = f.affine_compose(alpha, beta);
    for (int k = 0; k < 4; ++k) {
      Scalar z = rand_rational(g);
      CHECK(comp.eval(z) == f.eval(alpha * z + beta));
    }
    Poly back = comp.affine_compose(Scalar::exact_one() / alpha, -beta / alpha);
    CHECK(back == f);
  }
  CHECK_THROWS_AS(Poly::one().affine_compose(Scalar::exact_zero(), exq(1, 1)),
                  std::domain_error);
}

TEST_CASE("divmod_exact division identity") {
  SplitMix64 g(97);
  for (int rep = 0; rep < 80; ++rep) {
    Poly num = rand_exact_poly(g, 2 + static_cast<int>(g.next() % 5));
    Poly den = rand_exact_poly(g, 1 + static_cast<int>(g.next() % 3));
    auto [q, r] = divmod_exact(num, den);
    CHECK(num == q * den + r);
    CHECK(r.degree() < den.degree());
  }
  CHECK_THROWS_AS(divmod_exact(Poly::one(), Poly::zero()), std::domain_error);
}

TEST_CASE("divide_exact accepts clean quotients and rejects remainders") {
  SplitMix64 g(103);
  for (int rep = 0; rep < 50; ++rep) {
    Poly a = rand_exact_poly(g, 3);
    Poly b = rand_exact_poly(g, 2);
    CHECK(divide_exact(a * b, b) == a);
  }
  Poly num(std::vector<Scalar>{exq(1, 1), exq(1, 1)});  // z + 1
  Poly den(std::vector<Scalar>{exq(-1, 1), exq(1, 1)});  // z - 1
  CHECK_THROWS_AS(divide_exact(num, den), std::domain_error);
}

TEST_CASE("exact_gcd is a monic common divisor of maximal degree") {
  SplitMix64 g(113);
  for (int rep = 0; rep < 40; ++rep) {
    Poly h = Poly::from_roots({rand_rational(g), rand_rational(g)});
    Poly a = rand_exact_poly(g, 2);
    Poly b = rand_exact_poly(g, 2);
    Poly d = exact_gcd(a * h, b * h);
    CHECK(d.is_monic());
    CHECK(d.degree() >= h.degree());
    auto [qa, ra] = divmod_exact(a * h, d);
    auto [qb, rb] = divmod_exact(b * h, d);
    CHECK(ra.is_zero());
    CHECK(rb.is_zero());
  }
  // gcd with a derivative isolates a multiple root
  Poly f = Poly::from_roots({exq(1, 1), exq(1, 1), exq(-2, 1)});
  Poly d = exact_gcd(f, f.derivative());
  CHECK(d == Poly::from_roots({exq(1, 1)}));
  CHECK_THROWS_AS(exact_gcd(Poly::zero(), Poly::zero()), std::domain_error);
  CHECK_THROWS_AS(
      exact_gcd(Poly::one(ScalarMode::floating), Poly::one(ScalarMode::floating)),
      ModeError);
}

TEST_CASE("float conversion preserves coefficients") {
  Poly p(std::vector<Scalar>{exq(1, 4), exq(-3, 8, 1, 2), exq(2, 1)});
  Poly q = p.to_float_poly();
  CHECK(q.mode() == ScalarMode::floating);
  CHECK(q.degree() == p.degree());
  std::vector<Complex64> cc = q.complex_coeffs();
  CHECK(cc[0] == Complex64(0.25, 0.0));
  CHECK(cc[1] == Complex64(-0.375, 0.5));
  CHECK(cc[2] == Complex64(2.0, 0.0));
}
