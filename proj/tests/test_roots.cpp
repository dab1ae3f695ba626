#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "calab/explorer.hpp"
#include "calab/roots.hpp"
#include "support/test_support.hpp"

using namespace calab;
using calab_test::rand_disk_poly;

static Scalar exq(long long nr, long long dr, long long ni = 0, long long di = 1) {
  return Scalar(GaussianRational{Rational(nr, dr), Rational(ni, di)});
}

// smallest distance from z to any member of pts
static double nearest(const Complex64& z, const std::vector<Complex64>& pts) {
  double best = 1e300;
  for (const auto& p : pts) best = std::min(best, std::abs(z - p));
  return best;
}

TEST_CASE("roots of simple known polynomials") {
  // z^2 + 1 -> +/- i
  Poly p(std::vector<Scalar>{Scalar(Complex64(1, 0)), Scalar(Complex64(0, 0)),
                             Scalar(Complex64(1, 0))});
  DerivativeRootSet rs = roots_numeric(p);
  REQUIRE(rs.roots.size() == 2);
  std::vector<Complex64> expect = {Complex64(0, 1), Complex64(0, -1)};
  for (const Scalar& r : rs.roots) CHECK(nearest(to_float(r), expect) <= 1e-12);

  // (z-1)(z-2)...(z-6), all roots within 1e-8
  std::vector<Scalar> rts;
  for (int k = 1; k <= 6; ++k) rts.push_back(Scalar(Complex64(k, 0)));
  DerivativeRootSet w = roots_numeric(Poly::from_roots(rts, ScalarMode::floating));
  std::vector<Complex64> goal;
  for (int k = 1; k <= 6; ++k) goal.push_back(Complex64(k, 0));
  for (const Scalar& r : w.roots) CHECK(nearest(to_float(r), goal) <= 1e-8);
}

TEST_CASE("every returned root achieves the residual guarantee") {
  SplitMix64 g(17);
  for (int rep = 0; rep < 60; ++rep) {
    int n = 2 + static_cast<int>(g.next() % 11);  // degrees 2..12
    Poly f = rand_disk_poly(g, n);
    double cmax = 0.0;
    for (const Scalar& c : f.coeffs()) cmax = std::max(cmax, abs_value(c));
    DerivativeRootSet rs = roots_numeric(f);
    CHECK(static_cast<int>(rs.roots.size()) == n);
    for (const Scalar& r : rs.roots)
      CHECK(abs_value(f.eval(r)) <= 1e-10 * (1 + cmax));
  }
}

TEST_CASE("root extraction is reproducible") {
  SplitMix64 g(23);
  Poly f = rand_disk_poly(g, 9);
  DerivativeRootSet a = roots_numeric(f);
  DerivativeRootSet b = roots_numeric(f);
  REQUIRE(a.roots.size() == b.roots.size());
  for (std::size_t i = 0; i < a.roots.size(); ++i)
    CHECK(to_float(a.roots[i]) == to_float(b.roots[i]));
}

TEST_CASE("reconstruction: roots of from_roots recover the inputs") {
  SplitMix64 g(29);
  for (int rep = 0; rep < 40; ++rep) {
    int n = 2 + static_cast<int>(g.next() % 7);
    std::vector<Complex64> pts;
    std::vector<Scalar> roots;
    for (int i = 0; i < n; ++i) {
      Complex64 z = g.unit_disk();
      pts.push_back(z);
      roots.push_back(Scalar(z));
    }
    DerivativeRootSet rs = roots_numeric(Poly::from_roots(roots, ScalarMode::floating));
    for (const Scalar& r : rs.roots) CHECK(nearest(to_float(r), pts) <= 1e-8);
  }
}

TEST_CASE("derivative_roots records order and count") {
  SplitMix64 g(41);
  Poly f = rand_disk_poly(g, 7);
  for (int m = 1; m <= 6; ++m) {
    DerivativeRootSet rs = derivative_roots(f, m);
    CHECK(rs.order == m);
    CHECK(static_cast<int>(rs.roots.size()) == 7 - m);
  }
}

TEST_CASE("degenerate inputs throw") {
  CHECK_THROWS_AS(roots_numeric(Poly::one(ScalarMode::floating)),
                  std::domain_error);
  CHECK_THROWS_AS(roots_numeric(Poly(ScalarMode::floating)), std::domain_error);
  // leading coefficient negligible next to the others
  Poly bad(std::vector<Scalar>{Scalar(Complex64(1.0, 0)),
                               Scalar(Complex64(1.0, 0)),
                               Scalar(Complex64(1e-300, 0))});
  CHECK_THROWS_AS(roots_numeric(bad), std::domain_error);
}

TEST_CASE("clustering groups numerically split multiple roots") {
  // (z-1)^3 (z+2): a numeric triple root scatters ~ eps^(1/3) ~ 6e-6, above
  // the default 1e-7 clustering distance, so cluster at a matched tolerance.
  std::vector<Scalar> rts = {Scalar(Complex64(1, 0)), Scalar(Complex64(1, 0)),
                             Scalar(Complex64(1, 0)), Scalar(Complex64(-2, 0))};
  Poly f = Poly::from_roots(rts, ScalarMode::floating);
  RootMultiset ms = cluster_roots(roots_numeric(f), Tolerance{1e-3, 0.0});
  CHECK(ms.degree == 4);
  CHECK(ms.distinct_count() == 2);
  CHECK(ms.max_multiplicity() == 3);
  CHECK(ms.multiplicity_total() == 4);

  // a numeric double root scatters ~ sqrt(eps) and the default distance
  // catches it
  std::vector<Scalar> d2 = {Scalar(Complex64(0.5, 0.25)), Scalar(Complex64(0.5, 0.25)),
                            Scalar(Complex64(-0.75, 0))};
  RootMultiset ms2 = cluster_roots(
      roots_numeric(Poly::from_roots(d2, ScalarMode::floating)),
      cluster_default_tolerance());
  CHECK(ms2.distinct_count() == 2);
  CHECK(ms2.max_multiplicity() == 2);

  // well-separated roots never merge at the default distance
  SplitMix64 g(43);
  for (int rep = 0; rep < 30; ++rep) {
    Poly p = rand_disk_poly(g, 6);
    RootMultiset m = cluster_roots(roots_numeric(p), cluster_default_tolerance());
    CHECK(m.multiplicity_total() == 6);
    CHECK(m.distinct_count() == 6);
  }
}

TEST_CASE("make_root_multiset and the multiset accessors") {
  RootMultiset ms = make_root_multiset({{exq(1, 2), 2}, {exq(-3, 1), 1}});
  CHECK(ms.degree == 3);
  CHECK(ms.distinct_count() == 2);
  CHECK(ms.max_multiplicity() == 2);
  CHECK(ms.multiplicity_total() == 3);
  std::vector<Scalar> flat = ms.expanded();
  REQUIRE(flat.size() == 3);
  CHECK(flat[0] == exq(1, 2));
  CHECK(flat[1] == exq(1, 2));
  CHECK(flat[2] == exq(-3, 1));
}

TEST_CASE("exact squarefree part strips multiplicities") {
  Poly f = Poly::from_roots({exq(1, 1), exq(1, 1), exq(1, 1), exq(-2, 1)});
  Poly sf = exact_squarefree_part(f);
  CHECK(sf.degree() == 2);
  CHECK(sf.eval(exq(1, 1)) == Scalar::exact_zero());
  CHECK(sf.eval(exq(-2, 1)) == Scalar::exact_zero());
  CHECK(exact_max_multiplicity(sf) == 1);
}

TEST_CASE("exact_max_multiplicity via the gcd chain") {
  CHECK(exact_max_multiplicity(Poly::from_roots({exq(5, 1)})) == 1);
  Poly f5 = Poly::from_roots(std::vector<Scalar>(5, exq(1, 3)));
  CHECK(exact_max_multiplicity(f5) == 5);
  // complex exact double pair (z-i)^2 (z+i)^2
  Poly g = Poly::from_roots({exq(0, 1, 1, 1), exq(0, 1, 1, 1), exq(0, 1, -1, 1),
                             exq(0, 1, -1, 1)});
  CHECK(exact_max_multiplicity(g) == 2);
}
