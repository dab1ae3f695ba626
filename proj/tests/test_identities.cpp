#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "calab/explorer.hpp"
#include "calab/identities.hpp"
#include "support/test_support.hpp"

using namespace calab;
using calab_test::rand_disk_poly;
using calab_test::rand_real_rooted_poly;

static Scalar exq(long long nr, long long dr, long long ni = 0, long long di = 1) {
  return Scalar(GaussianRational{Rational(nr, dr), Rational(ni, di)});
}

TEST_CASE("identity names are stable and distinct") {
  const IdentityId all[] = {IdentityId::EQ19, IdentityId::EQ20, IdentityId::EQ21,
                            IdentityId::EQ22, IdentityId::EQ24, IdentityId::EQ25,
                            IdentityId::EQ26, IdentityId::EQ27, IdentityId::EQ28,
                            IdentityId::EQ30, IdentityId::EQ31, IdentityId::EQ33,
                            IdentityId::EQ34};
  std::vector<std::string> seen;
  for (IdentityId id : all) {
    std::string name = identity_name(id);
    CHECK(name.size() == 4);
    CHECK(name.substr(0, 2) == "EQ");
    for (const auto& s : seen) CHECK(s != name);
    seen.push_back(name);
  }
  CHECK(std::string(identity_name(IdentityId::EQ21)) == "EQ21");
}

TEST_CASE("power sums match direct summation over the roots") {
  SplitMix64 g(211);
  for (int rep = 0; rep < 40; ++rep) {
    int n = 2 + static_cast<int>(g.next() % 7);
    std::vector<Scalar> roots;
    Complex64 s1(0, 0), s2(0, 0);
    for (int i = 0; i < n; ++i) {
      Complex64 w = g.unit_disk();
      roots.push_back(Scalar(w));
      s1 += w;
      s2 += w * w;
    }
    Poly f = Poly::from_roots(roots, ScalarMode::floating);
    CHECK(std::abs(to_float(power_sum_1(f)) - s1) <= 1e-10);
    CHECK(std::abs(to_float(power_sum_2(f)) - s2) <= 1e-10);
    Scalar z(g.unit_disk());
    Complex64 m2(0, 0);
    for (const Scalar& r : roots) {
      Complex64 d = to_float(r) - to_float(z);
      m2 += d * d;
    }
    CHECK(std::abs(to_float(second_moment(f, z)) - m2) <= 1e-9);
  }
  // exact path: roots 1/2, -3/2 -> p1 = -1, p2 = 5/2
  Poly f = Poly::from_roots({exq(1, 2), exq(-3, 2)});
  CHECK(power_sum_1(f) == exq(-1, 1));
  CHECK(power_sum_2(f) == exq(5, 2));
  CHECK_THROWS_AS(power_sum_1(Poly::zero()), std::domain_error);
}

TEST_CASE("centroid equals the root mean at every derivative order") {
  SplitMix64 g(223);
  for (int rep = 0; rep < 30; ++rep) {
    Poly f = rand_disk_poly(g, 6);
    Scalar c = centroid_value(f);
    for (int m = 1; m <= 4; ++m) {
      CHECK(std::abs(to_float(centroid_value(f.derivative(m))) - to_float(c)) <=
            1e-9);
    }
    CentroidData data = centroid(f);
    CHECK(to_float(data.centroid) == to_float(c));
  }
  // exact: mean of 1/2, -3/2, 3/4 is -1/12
  Poly f = Poly::from_roots({exq(1, 2), exq(-3, 2), exq(3, 4)});
  CHECK(centroid_value(f) == exq(-1, 12));
}

TEST_CASE("subcentroid gap in closed form for depressed cubics") {
  // f = z^3 + p z + q has f' = 3z^2 + p, so the squared half-gap is -p/3
  for (long long p : {-3LL, -1LL, 2LL, 6LL}) {
    Poly f(std::vector<Scalar>{exq(5, 7), exq(p, 1), exq(0, 1), exq(1, 1)});
    CHECK(subcentroid_gap_sq(f) == exq(-p, 3));
  }
  // both subcentroid roots are centroid +/- the same square root
  Poly f(std::vector<Scalar>{exq(1, 1), exq(-3, 1), exq(0, 1), exq(1, 1)});
  CentroidData d = centroid(f);
  CHECK(d.subcentroid_roots.first + d.subcentroid_roots.second ==
        exq(2, 1) * d.centroid);
}

TEST_CASE("sz_nagy exact path has residual exactly zero for both choices") {
  Poly f = Poly::from_roots({exq(0, 1), exq(1, 2), exq(-3, 2), exq(1, 3, 1, 2)});
  for (SubcentroidChoice ch : {SubcentroidChoice::plus, SubcentroidChoice::minus}) {
    for (int m = 1; m <= 2; ++m) {
      IdentityReport r = sz_nagy_check(f, m, exq(2, 3), ch, Tolerance{});
      CHECK(r.residual == 0.0);
      CHECK(r.passed);
      CHECK(r.id == IdentityId::EQ21);
    }
  }
  CHECK_THROWS_AS(sz_nagy_check(f, 0, exq(0, 1), SubcentroidChoice::plus,
                                Tolerance{}),
                  std::domain_error);
  CHECK_THROWS_AS(sz_nagy_check(f, 3, exq(0, 1), SubcentroidChoice::plus,
                                Tolerance{}),
                  std::domain_error);
}

TEST_CASE("sz_nagy float sweep stays within the residual budget") {
  SplitMix64 g(227);
  for (int rep = 0; rep < 120; ++rep) {
    int n = 3 + static_cast<int>(g.next() % 8);  // 3..10
    Poly f = rand_disk_poly(g, n);
    int m = 1 + static_cast<int>(g.next() % (n - 2));
    Scalar z(g.unit_disk());
    SubcentroidChoice ch =
        rep % 2 ? SubcentroidChoice::minus : SubcentroidChoice::plus;
    IdentityReport r = sz_nagy_check(f, m, z, ch, Tolerance{});
    CHECK(r.passed);
    CHECK(r.residual <= 1e-9 * (1 + r.scale));
  }
}

TEST_CASE("moment identities are exactly zero on rational-root corpora") {
  // two distinct rational roots with multiplicities: every root quantity
  // involved stays rational
  RootMultiset k2 = make_root_multiset({{exq(1, 2), 2}, {exq(-3, 2), 1}});
  Poly f2 = Poly::from_roots(k2.expanded());
  for (IdentityId id : {IdentityId::EQ22, IdentityId::EQ24, IdentityId::EQ25,
                        IdentityId::EQ26, IdentityId::EQ27, IdentityId::EQ28}) {
    IdentityReport r = moment_identity(f2, id, k2, MomentParams{}, Tolerance{});
    CHECK(r.residual == 0.0);
    CHECK(r.passed);
  }

  // simple rational roots for the order-m family
  RootMultiset simp = make_root_multiset(
      {{exq(1, 2), 1}, {exq(-3, 2), 1}, {exq(3, 4), 1}});
  Poly f3 = Poly::from_roots(simp.expanded());
  for (int m = 0; m <= 3; ++m) {
    MomentParams p;
    p.m = m;
    IdentityReport r = moment_identity(f3, IdentityId::EQ30, p, Tolerance{});
    CHECK(r.residual == 0.0);
    CHECK(r.passed);
  }
  MomentParams p34;
  p34.s = 2;
  p34.m = 0;
  IdentityReport r34 = moment_identity(f3, IdentityId::EQ34, p34, Tolerance{});
  CHECK(r34.residual == 0.0);
  CHECK(r34.passed);
}

TEST_CASE("moment identities hold within budget on float corpora") {
  SplitMix64 g(229);
  for (int rep = 0; rep < 60; ++rep) {
    int n = 3 + static_cast<int>(g.next() % 6);
    // disk-root corpus for the unconstrained kinds
    Poly f = rand_disk_poly(g, n);
    IdentityReport r22 =
        moment_identity(f, IdentityId::EQ22, MomentParams{}, Tolerance{});
    CHECK(r22.passed);
    CHECK(r22.residual <= 1e-9 * (1 + r22.scale));
    MomentParams pm;
    pm.m = static_cast<int>(g.next() % (n + 1));
    IdentityReport r30 = moment_identity(f, IdentityId::EQ30, pm, Tolerance{});
    CHECK(r30.passed);
    CHECK(r30.residual <= 1e-9 * (1 + r30.scale));

    // real-interval corpus for the collinear-through-origin kinds
    Poly h = rand_real_rooted_poly(g, n);
    for (IdentityId id : {IdentityId::EQ26, IdentityId::EQ27}) {
      IdentityReport r = moment_identity(h, id, MomentParams{}, Tolerance{});
      CHECK(r.passed);
      CHECK(r.residual <= 1e-9 * (1 + r.scale));
    }
  }
}

TEST_CASE("moment identity hypothesis violations throw") {
  RootMultiset multi = make_root_multiset({{exq(1, 2), 2}, {exq(-3, 2), 1}});
  Poly f = Poly::from_roots(multi.expanded());
  MomentParams p;
  p.m = 1;
  // the order-m family needs simple roots
  CHECK_THROWS_AS(moment_identity(f, IdentityId::EQ30, p, Tolerance{}),
                  std::domain_error);
  // EQ34 needs s >= 2
  MomentParams bad;
  bad.s = 1;
  bad.m = 0;
  Poly simp = Poly::from_roots({exq(1, 2), exq(-3, 2), exq(3, 4), exq(2, 1)});
  CHECK_THROWS_AS(moment_identity(simp, IdentityId::EQ34, bad, Tolerance{}),
                  std::domain_error);
}

TEST_CASE("newton-like aggregate is exactly zero on exact input") {
  std::vector<Scalar> nodes = {Scalar::exact_zero(), exq(1, 2), exq(-1, 3, 1, 4),
                               exq(1, 1)};
  std::vector<Scalar> pts = {exq(1, 3), exq(0, 1, 1, 2), exq(-2, 3)};
  IdentityReport r = newton_like_aggregate(NodeSequence(nodes), pts, Tolerance{});
  CHECK(r.residual == 0.0);
  CHECK(r.passed);
  CHECK(r.id == IdentityId::EQ19);

  SplitMix64 g(233);
  for (int rep = 0; rep < 40; ++rep) {
    int n = 2 + static_cast<int>(g.next() % 6);
    std::vector<Scalar> ns = {Scalar::float_zero()};
    for (int i = 1; i < n; ++i) ns.push_back(Scalar(g.unit_disk()));
    std::vector<Scalar> ps;
    for (int i = 0; i < 3; ++i) ps.push_back(Scalar(g.unit_disk()));
    IdentityReport fr = newton_like_aggregate(NodeSequence(ns), ps, Tolerance{});
    CHECK(fr.passed);
    CHECK(fr.residual <= 1e-9 * (1 + fr.scale));
  }
}

TEST_CASE("viete check needs the centroid among the roots") {
  RootMultiset ms = make_root_multiset({{exq(1, 2, 1, 3), 1},
                                        {exq(-1, 2, -1, 3), 1},
                                        {exq(3, 4), 1},
                                        {exq(-3, 4), 1},
                                        {exq(0, 1), 1}});
  IdentityReport r = viete_check(ms, exq(0, 1), Tolerance{});
  CHECK(r.residual == 0.0);
  CHECK(r.passed);
  CHECK(r.id == IdentityId::EQ20);
  CHECK_THROWS_AS(viete_check(ms, exq(3, 4), Tolerance{}), std::domain_error);
}

TEST_CASE("hoppe formula: exact grid and float poles") {
  Poly f = Poly::from_roots({exq(1, 2), exq(-1, 3), exq(0, 1, 1, 1)});
  for (int m = 0; m <= 5; ++m) {
    IdentityReport r = hoppe_log_derivative(f, m, exq(5, 4), Tolerance{});
    CHECK(r.residual == 0.0);
    CHECK(r.passed);
    CHECK(r.id == IdentityId::EQ31);
  }
  // evaluation at a root is a pole
  CHECK_THROWS_AS(
      hoppe_log_derivative(f.to_float_poly(), 2, Scalar(Complex64(0.5, 0.0)),
                           Tolerance{}),
      std::domain_error);
  CHECK_THROWS_AS(hoppe_log_derivative(f, 1, exq(1, 2), Tolerance{}),
                  std::domain_error);

  SplitMix64 g(239);
  for (int rep = 0; rep < 40; ++rep) {
    Poly h = rand_disk_poly(g, 5);
    Scalar z(2.0 * g.unit_disk() + Complex64(3.0, 0.0));  // far from the roots
    int m = static_cast<int>(g.next() % 5);
    IdentityReport r = hoppe_log_derivative(h, m, z, Tolerance{});
    CHECK(r.passed);
  }
}

TEST_CASE("laguerre inequality semantics") {
  // real-rooted squarefree: strictly positive
  Poly f(std::vector<Scalar>{Scalar(Complex64(-1, 0)), Scalar(Complex64(0, 0)),
                             Scalar(Complex64(1, 0))});  // z^2 - 1
  IdentityReport pos = laguerre_check(f, Scalar(Complex64(0, 0)), Tolerance{});
  CHECK(pos.passed);
  CHECK_FALSE(pos.outside_hypothesis);
  CHECK(to_float(pos.lhs - pos.rhs).real() == doctest::Approx(2.0));

  // complex roots: the inequality itself fails and the flag says the
  // hypothesis was missed
  Poly g(std::vector<Scalar>{Scalar(Complex64(1, 0)), Scalar(Complex64(0, 0)),
                             Scalar(Complex64(1, 0))});  // z^2 + 1
  IdentityReport neg = laguerre_check(g, Scalar(Complex64(0, 0)), Tolerance{});
  CHECK_FALSE(neg.passed);
  CHECK(neg.outside_hypothesis);

  // complex coefficients are rejected outright
  Poly c(std::vector<Scalar>{Scalar(Complex64(0, 1)), Scalar(Complex64(1, 0))});
  CHECK_THROWS_AS(laguerre_check(c, Scalar(Complex64(0, 0)), Tolerance{}),
                  std::domain_error);

  SplitMix64 rng(241);
  for (int rep = 0; rep < 60; ++rep) {
    Poly h = rand_real_rooted_poly(rng, 2 + static_cast<int>(rng.next() % 5));
    IdentityReport r =
        laguerre_check(h, Scalar(Complex64(rng.uniform(-2.0, 2.0), 0.0)),
                       Tolerance{});
    CHECK(r.passed);
  }
}

TEST_CASE("log-derivative numerator and its roots") {
  // 2 at 1 and 3 at -2: numerator 2(z+2) + 3(z-1) = 5z + 1, root -1/5
  RootMultiset ms = make_root_multiset({{exq(1, 1), 2}, {exq(-2, 1), 3}});
  Poly num = log_deriv_numerator(ms);
  CHECK(num.degree() == 1);
  std::vector<Scalar> xs = log_deriv_roots(ms);
  REQUIRE(xs.size() == 1);
  CHECK(xs[0] == exq(-1, 5));
  RootMultiset empty;
  CHECK_THROWS_AS(log_deriv_roots(empty), std::domain_error);
}

TEST_CASE("schoenberg gap values") {
  // real root sets are collinear through the origin: gap exactly at zero
  CHECK(schoenberg_gap(Poly::from_roots({exq(0, 1), exq(1, 1)}).to_float_poly()) ==
        doctest::Approx(0.0).epsilon(1e-12));
  std::vector<Scalar> z3 = {Scalar(Complex64(0, 0)), Scalar(Complex64(1, 0)),
                            Scalar(Complex64(-1, 0))};
  CHECK(schoenberg_gap(Poly::from_roots(z3, ScalarMode::floating)) ==
        doctest::Approx(0.0).epsilon(1e-12));
  // z^2 + 1: roots on the imaginary axis, still through the origin
  Poly i2(std::vector<Scalar>{Scalar(Complex64(1, 0)), Scalar(Complex64(0, 0)),
                              Scalar(Complex64(1, 0))});
  CHECK(schoenberg_gap(i2) == doctest::Approx(0.0).epsilon(1e-12));
  // a genuinely two-dimensional root set keeps a positive gap
  std::vector<Scalar> tri = {Scalar(Complex64(1.0, 0.0)),
                             Scalar(Complex64(-0.5, 0.8)),
                             Scalar(Complex64(-0.5, -0.8))};
  Poly ftri = Poly::from_roots(tri, ScalarMode::floating);
  CHECK(schoenberg_gap(ftri) == doctest::Approx(0.8533333333333335));
  // the root-multiset entry point agrees with the coefficient entry point
  RootMultiset ms;
  ms.degree = 3;
  for (const Scalar& r : tri) ms.entries.push_back({r, 1});
  CHECK(schoenberg_gap_from_roots(ms) ==
        doctest::Approx(schoenberg_gap(ftri)).epsilon(1e-10));
  CHECK_THROWS_AS(schoenberg_gap(Poly::one(ScalarMode::floating)),
                  std::domain_error);
}

TEST_CASE("rectilinearity through the origin") {
  std::vector<Scalar> line = {Scalar(Complex64(1, 1)), Scalar(Complex64(-2, -2)),
                              Scalar(Complex64(3, 3))};
  RectilinearityResult a = rectilinearity(line, Tolerance{});
  CHECK(a.collinear_through_origin);
  CHECK(a.angle == doctest::Approx(0.78539816339744828));
  REQUIRE(a.sign_vector.size() == 3);
  CHECK(a.sign_vector[0] == 1);
  CHECK(a.sign_vector[1] == -1);
  CHECK(a.sign_vector[2] == 1);

  std::vector<Scalar> tri = {Scalar(Complex64(1, 0)), Scalar(Complex64(0, 1)),
                             Scalar(Complex64(1, 1))};
  CHECK_FALSE(rectilinearity(tri, Tolerance{}).collinear_through_origin);

  // vertical line through the origin
  std::vector<Scalar> vert = {Scalar(Complex64(0, 2)), Scalar(Complex64(0, -5))};
  RectilinearityResult v = rectilinearity(vert, Tolerance{});
  CHECK(v.collinear_through_origin);
  CHECK(v.angle == doctest::Approx(1.5707963267948966));
}
