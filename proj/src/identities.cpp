#include "calab/identities.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace calab {

namespace {

double mag(const Scalar& x) { return abs_value(x); }

/// Report builder: residual and the pass verdict follow one rule everywhere.
IdentityReport finish(IdentityId id, const Scalar& lhs, const Scalar& rhs,
                      double scale, const Tolerance& tol, bool outside = false) {
  IdentityReport rep;
  rep.id = id;
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.residual = std::abs(to_float(lhs) - to_float(rhs));
  rep.scale = scale;
  rep.passed = rep.residual <= tol.absolute * (1.0 + scale);
  rep.outside_hypothesis = outside;
  return rep;
}

Scalar to_mode(const Scalar& x, ScalarMode m) {
  if (x.mode() == m) return x;
  if (m == ScalarMode::floating) return Scalar(to_float(x));
  throw ModeError("cannot promote a float scalar to exact");
}

bool is_real_scalar(const Scalar& x) {
  return x.is_exact() ? x.exact().is_real() : x.floating().imag() == 0.0;
}

}  // namespace

const char* identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::EQ19: return "EQ19";
    case IdentityId::EQ20: return "EQ20";
    case IdentityId::EQ21: return "EQ21";
    case IdentityId::EQ22: return "EQ22";
    case IdentityId::EQ24: return "EQ24";
    case IdentityId::EQ25: return "EQ25";
    case IdentityId::EQ26: return "EQ26";
    case IdentityId::EQ27: return "EQ27";
    case IdentityId::EQ28: return "EQ28";
    case IdentityId::EQ30: return "EQ30";
    case IdentityId::EQ31: return "EQ31";
    case IdentityId::EQ33: return "EQ33";
    case IdentityId::EQ34: return "EQ34";
  }
  return "EQ??";
}

Scalar power_sum_1(const Poly& f) {
  int d = f.degree();
  if (d < 0) throw std::domain_error("power sums need a nonzero polynomial");
  if (d == 0) return Scalar::zero_of(f.mode());
  return -(f.coeff(d - 1) / f.coeff(d));
}

Scalar power_sum_2(const Poly& f) {
  int d = f.degree();
  if (d < 0) throw std::domain_error("power sums need a nonzero polynomial");
  if (d == 0) return Scalar::zero_of(f.mode());
  Scalar r = f.coeff(d - 1) / f.coeff(d);
  Scalar p2 = r * r;
  if (d >= 2)
    p2 -= Scalar::from_int(2, f.mode()) * (f.coeff(d - 2) / f.coeff(d));
  return p2;
}

Scalar second_moment(const Poly& f, const Scalar& z) {
  if (f.mode() != z.mode())
    throw ModeError("second_moment point mode differs from the polynomial");
  int d = f.degree();
  if (d < 0) throw std::domain_error("power sums need a nonzero polynomial");
  return power_sum_2(f) - Scalar::from_int(2, f.mode()) * z * power_sum_1(f) +
         Scalar::from_int(d, f.mode()) * z * z;
}

Scalar centroid_value(const Poly& f) {
  int d = f.degree();
  if (d < 1) throw std::domain_error("the centroid needs degree >= 1");
  return -(f.coeff(d - 1) / (Scalar::from_int(d, f.mode()) * f.coeff(d)));
}

Scalar subcentroid_gap_sq(const Poly& f) {
  int n = f.degree();
  if (n < 2) throw std::domain_error("the subcentroid gap needs degree >= 2");
  Poly q = f.derivative(n - 2);
  Scalar a = q.coeff(2);
  Scalar b = q.coeff(1);
  Scalar c = q.coeff(0);
  Scalar four = Scalar::from_int(4, f.mode());
  return (b * b - four * a * c) / (four * a * a);
}

CentroidData centroid(const Poly& f, const Tolerance& tol) {
  int n = f.degree();
  if (n < 2) throw std::domain_error("centroid data needs degree >= 2");
  Scalar c = centroid_value(f);

  // Every derivative order shares the same root mean; verify before use.
  for (int m = 1; m <= n - 1; ++m) {
    Scalar mean = centroid_value(f.derivative(m));
    if (f.is_exact()) {
      if (!(mean == c))
        throw NumericError("derivative root mean disagrees with the centroid",
                           std::abs(to_float(mean) - to_float(c)));
    } else {
      double drift = std::abs(to_float(mean) - to_float(c));
      if (!tol.within(drift, std::abs(to_float(c))))
        throw NumericError("derivative root mean disagrees with the centroid",
                           drift);
    }
  }

  Scalar g = subcentroid_gap_sq(f);
  if (f.is_exact()) {
    auto root = exact_sqrt(g.exact());
    if (root) {
      Scalar s(*root);
      return CentroidData{c, {c + s, c - s}};
    }
  }
  Complex64 cf = to_float(c);
  Complex64 sf = std::sqrt(to_float(g));
  return CentroidData{c, {Scalar(cf + sf), Scalar(cf - sf)}};
}

IdentityReport sz_nagy_check(const Poly& f, int m, const Scalar& z,
                             SubcentroidChoice choice, const Tolerance& tol) {
  int n = f.degree();
  if (n < 2) throw std::domain_error("sz_nagy_check needs degree >= 2");
  if (m < 1 || m > n - 2)
    throw std::domain_error("derivative order must satisfy 1 <= m <= n-2");
  if (f.mode() != z.mode())
    throw ModeError("evaluation point mode differs from the polynomial");

  CentroidData cd = centroid(f, tol);
  const Scalar& c = cd.centroid;
  Scalar g = subcentroid_gap_sq(f);

  // Both subcentroid roots must give the same squared gap before either is
  // trusted; a disagreement means the quadratic solve went wrong.
  {
    auto bracket = [&](const Scalar& r) {
      Complex64 d = to_float(c) - to_float(r);
      return d * d;
    };
    double drift = std::abs(bracket(cd.subcentroid_roots.first) -
                            bracket(cd.subcentroid_roots.second));
    if (!tol.within(drift, std::abs(to_float(g))))
      throw NumericError("subcentroid root choices disagree", drift);
  }

  ScalarMode mode = f.mode();
  Scalar gap = g;
  if (mode == ScalarMode::floating) {
    // Honor the caller's explicit choice on the float path (the two agree up
    // to rounding; the exact path keeps the choice-independent closed form).
    const Scalar& r = choice == SubcentroidChoice::plus
                          ? cd.subcentroid_roots.first
                          : cd.subcentroid_roots.second;
    Complex64 d = to_float(c) - to_float(r);
    gap = Scalar(d * d);
  }

  Scalar cz2 = (c - z) * (c - z);
  auto weight = [&](long long w) { return Scalar::from_int(w, mode); };
  Scalar smf = second_moment(f, z);
  Scalar smd = second_moment(f.derivative(m), z);
  Scalar mid = (smf - weight(n) * cz2) / weight(static_cast<long long>(n) * (n - 1));
  Scalar der = (smd - weight(n - m) * cz2) /
               weight(static_cast<long long>(n - m) * (n - m - 1));

  double scale =
      mag(gap) +
      (mag(smf) + n * mag(cz2)) / (static_cast<double>(n) * (n - 1)) +
      (mag(smd) + (n - m) * mag(cz2)) /
          (static_cast<double>(n - m) * (n - m - 1));

  // Three expressions, one report: carry the worst-agreeing pair so that
  // passed certifies all three agree.
  const Scalar* exprs[3] = {&gap, &mid, &der};
  int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  int worst = 0;
  double worst_diff = -1.0;
  for (int i = 0; i < 3; ++i) {
    double d = std::abs(to_float(*exprs[pairs[i][0]]) -
                        to_float(*exprs[pairs[i][1]]));
    if (d > worst_diff) {
      worst_diff = d;
      worst = i;
    }
  }
  return finish(IdentityId::EQ21, *exprs[pairs[worst][0]],
                *exprs[pairs[worst][1]], scale, tol);
}

Poly log_deriv_numerator(const RootMultiset& roots) {
  if (roots.entries.empty())
    throw std::domain_error("log-derivative numerator needs at least one root");
  ScalarMode mode = roots.entries.front().root.mode();
  Poly sum(mode);
  for (size_t j = 0; j < roots.entries.size(); ++j) {
    Poly term = Poly::constant(
        Scalar::from_int(roots.entries[j].multiplicity, mode));
    for (size_t i = 0; i < roots.entries.size(); ++i) {
      if (i == j) continue;
      term *= Poly({-roots.entries[i].root, Scalar::one_of(mode)});
    }
    sum += term;
  }
  return sum;
}

std::vector<Scalar> log_deriv_roots(const RootMultiset& roots) {
  Poly num = log_deriv_numerator(roots);
  int k = static_cast<int>(roots.entries.size());
  if (num.degree() != k - 1)
    throw NumericError("log-derivative numerator has the wrong degree",
                       static_cast<double>(k - 1 - num.degree()));
  if (k == 1) return {};
  if (num.degree() == 1) return {-(num.coeff(0) / num.coeff(1))};
  DerivativeRootSet rs = roots_numeric(num);
  return rs.roots;
}

RectilinearityResult rectilinearity(const std::vector<Scalar>& points,
                                    const Tolerance& tol) {
  if (points.empty())
    throw std::domain_error("rectilinearity needs at least one point");
  std::vector<Complex64> p(points.size());
  for (size_t i = 0; i < points.size(); ++i) p[i] = to_float(points[i]);

  // Principal axis through the origin: maximize sum Re((p e^{-i phi})^2).
  double sxx = 0.0, sxy = 0.0;
  for (const Complex64& z : p) {
    sxx += z.real() * z.real() - z.imag() * z.imag();
    sxy += 2.0 * z.real() * z.imag();
  }
  double phi = 0.5 * std::atan2(sxy, sxx);
  if (phi < 0.0) phi += std::acos(-1.0);

  RectilinearityResult out;
  out.angle = phi;
  out.collinear_through_origin = true;
  Complex64 spin = std::polar(1.0, -phi);
  out.sign_vector.reserve(p.size());
  for (const Complex64& z : p) {
    Complex64 t = z * spin;
    if (!tol.within(std::abs(t.imag()), std::abs(z)))
      out.collinear_through_origin = false;
    out.sign_vector.push_back(t.real() < 0.0 ? -1 : 1);
  }
  return out;
}

namespace {

/// Common direction squared (u^2 with |u| = 1) of exact roots collinear
/// through the origin; nullopt when some root leaves the line.  All-zero
/// root sets report the real axis.
std::optional<GaussianRational> exact_direction_sq(const RootMultiset& roots) {
  GaussianRational u2{Rational(1), Rational(0)};
  bool found = false;
  for (const auto& e : roots.entries) {
    if (e.root.is_zero()) continue;
    const GaussianRational& lam = e.root.exact();
    GaussianRational cand =
        (lam * lam) / GaussianRational{lam.norm(), Rational(0)};
    if (!found) {
      u2 = cand;
      found = true;
    } else if (!(cand == u2)) {
      return std::nullopt;
    }
  }
  return u2;
}

struct MomentContext {
  const Poly& f;
  int n;
  std::optional<RootMultiset> ms;  // lazily filled
  const std::optional<RootMultiset>& known;

  const RootMultiset& multiset() {
    if (!ms) {
      if (known) {
        ms = *known;
      } else {
        ms = cluster_roots(roots_numeric(f), cluster_default_tolerance());
      }
    }
    return *ms;
  }

  int max_multiplicity() {
    if (known) return known->max_multiplicity();
    if (f.is_exact()) return exact_max_multiplicity(f);
    return multiset().max_multiplicity();
  }
};

bool roots_all_exact(const RootMultiset& m) {
  for (const auto& e : m.entries)
    if (!e.root.is_exact()) return false;
  return true;
}

IdentityReport moment_eq22(MomentContext& ctx, const Tolerance& tol) {
  const Poly& f = ctx.f;
  int n = ctx.n;
  ScalarMode mode = f.mode();
  Scalar lhs = power_sum_2(f.derivative(1));
  Scalar c = centroid_value(f);
  Scalar weighted = (Scalar::from_int(n - 2, mode) * power_sum_2(f)) /
                    Scalar::from_int(n, mode);
  Scalar rhs = weighted + c * c;
  double scale = mag(lhs) + mag(weighted) + mag(c * c);
  return finish(IdentityId::EQ22, lhs, rhs, scale, tol);
}

IdentityReport moment_eq24_25(MomentContext& ctx, IdentityId kind,
                              const Tolerance& tol) {
  const Poly& f = ctx.f;
  int n = ctx.n;
  const RootMultiset& m = ctx.multiset();
  if (m.distinct_count() < 2)
    throw std::domain_error("identity needs at least two distinct roots");
  std::vector<Scalar> xihat = log_deriv_roots(m);

  bool exact = f.is_exact() && roots_all_exact(m);
  for (const Scalar& x : xihat) exact = exact && x.is_exact();
  ScalarMode wm = exact ? ScalarMode::exact : ScalarMode::floating;
  auto cv = [&](const Scalar& s) { return to_mode(s, wm); };

  if (kind == IdentityId::EQ24) {
    Scalar lhs = Scalar::zero_of(wm);
    double lscale = 0.0;
    for (const auto& e : m.entries) {
      lhs += cv(e.root);
      lscale += mag(e.root);
    }
    Scalar rhs = Scalar::zero_of(wm);
    double rscale = 0.0;
    for (const Scalar& x : xihat) {
      rhs += cv(x);
      rscale += mag(x);
    }
    Scalar c = cv(centroid_value(f));
    rhs += c;
    rscale += mag(c);
    return finish(IdentityId::EQ24, lhs, rhs, lscale + rscale, tol);
  }

  // EQ25: squared version, with the squared-gap correction.
  Scalar lhs = Scalar::zero_of(wm);
  double lscale = 0.0;
  for (const Scalar& x : xihat) {
    Scalar sq = cv(x) * cv(x);
    lhs += sq;
    lscale += mag(sq);
  }
  Scalar lam2 = Scalar::zero_of(wm);
  double lam2scale = 0.0;
  for (const auto& e : m.entries) {
    Scalar sq = cv(e.root) * cv(e.root);
    lam2 += sq;
    lam2scale += mag(sq);
  }
  Scalar gap = cv(subcentroid_gap_sq(f));
  Scalar c = cv(centroid_value(f));
  Scalar gap_term = Scalar::from_int(2 * (n - 1), wm) * gap;
  Scalar rhs = lam2 - gap_term - c * c;
  double scale = lscale + lam2scale + mag(gap_term) + mag(c * c);
  bool outside = ctx.max_multiplicity() >= 2;
  return finish(IdentityId::EQ25, lhs, rhs, scale, tol, outside);
}

IdentityReport moment_eq26_27_28(MomentContext& ctx, IdentityId kind,
                                 const Tolerance& tol) {
  const Poly& f = ctx.f;
  int n = ctx.n;
  const RootMultiset& m = ctx.multiset();

  // Gate on the roots alone: collinearity through the origin carries over
  // to every derivative's roots, and numeric multiple roots of f' scatter
  // too widely to gate on directly.
  RectilinearityResult rect = rectilinearity(m.expanded(), tol);
  if (!rect.collinear_through_origin)
    throw std::domain_error(
        "roots are not collinear through the origin");

  bool exact = f.is_exact() && roots_all_exact(m);
  bool outside = kind != IdentityId::EQ26 && ctx.max_multiplicity() >= 2;

  if (exact) {
    auto u2 = exact_direction_sq(m);
    if (!u2)
      throw std::domain_error("roots are not collinear through the origin");
    GaussianRational c = centroid_value(f).exact();
    Rational c_norm = c.norm();

    if (kind == IdentityId::EQ26) {
      GaussianRational l = power_sum_2(f.derivative(1)).exact() / *u2;
      if (l.im != 0)
        throw NumericError("derivative roots left the common line",
                           std::abs(to_float(Scalar(l))));
      Rational weighted_lam = 0;
      for (const auto& e : m.entries)
        weighted_lam += e.multiplicity * e.root.exact().norm();
      Scalar lhs{Rational(l.re)};
      Scalar wterm{Rational(n - 2) * weighted_lam / n};
      Scalar rhs = wterm + Scalar(c_norm);
      double scale = mag(lhs) + mag(wterm) + rational_to_double(c_norm);
      return finish(IdentityId::EQ26, lhs, rhs, scale, tol);
    }

    if (m.distinct_count() < 2)
      throw std::domain_error("identity needs at least two distinct roots");
    GaussianRational gap = subcentroid_gap_sq(f).exact() / *u2;
    if (gap.im != 0 || gap.re < 0)
      throw NumericError("subcentroid roots left the common line",
                         std::abs(to_float(Scalar(gap))));
    if (kind == IdentityId::EQ28 && gap.re < c_norm)
      throw std::domain_error(
          "no opposite-sign subcentroid root exists for this root set");

    Poly num = log_deriv_numerator(m);
    GaussianRational l = power_sum_2(num).exact() / *u2;
    if (l.im != 0)
      throw NumericError("log-derivative roots left the common line",
                         std::abs(to_float(Scalar(l))));
    Rational lam2 = 0;
    for (const auto& e : m.entries)
      lam2 += e.root.exact().norm();
    Scalar lhs{Rational(l.re)};
    Scalar gap_term{Rational(2 * (n - 1)) * gap.re};
    Scalar rhs = Scalar(lam2) - gap_term - Scalar(c_norm);
    double scale = mag(lhs) + rational_to_double(lam2) + mag(gap_term) +
                   rational_to_double(c_norm);
    return finish(kind, lhs, rhs, scale, tol, outside);
  }

  // Float path: measure moduli directly and resolve the subcentroid sign
  // by projecting onto the fitted line.
  Complex64 c = to_float(centroid_value(f));
  double c_norm = std::norm(c);

  if (kind == IdentityId::EQ26) {
    DerivativeRootSet xi = derivative_roots(f, 1);
    double lhs = 0.0;
    for (const Scalar& x : xi.roots) lhs += std::norm(to_float(x));
    double weighted_lam = 0.0;
    for (const auto& e : m.entries)
      weighted_lam += e.multiplicity * std::norm(to_float(e.root));
    double wterm = (n - 2) * weighted_lam / n;
    double rhs = wterm + c_norm;
    return finish(IdentityId::EQ26, Scalar(lhs), Scalar(rhs),
                  std::abs(lhs) + std::abs(wterm) + c_norm, tol);
  }

  if (m.distinct_count() < 2)
    throw std::domain_error("identity needs at least two distinct roots");
  CentroidData cd = centroid(f.is_exact() ? f.to_float_poly() : f, tol);
  Complex64 spin = std::polar(1.0, -rect.angle);
  double tc = (c * spin).real();
  Complex64 r1 = to_float(cd.subcentroid_roots.first);
  Complex64 r2 = to_float(cd.subcentroid_roots.second);
  double t1 = (r1 * spin).real();
  double t2 = (r2 * spin).real();
  Complex64 sub;
  bool have = false;
  if (kind == IdentityId::EQ27) {
    // Same-sign (or vanishing) subcentroid root; one always exists.
    if (t1 * tc >= 0.0) {
      sub = r1;
      have = true;
    } else if (t2 * tc >= 0.0) {
      sub = r2;
      have = true;
    }
  } else {
    if (t1 * tc <= 0.0) {
      sub = r1;
      have = true;
    } else if (t2 * tc <= 0.0) {
      sub = r2;
      have = true;
    }
  }
  if (!have)
    throw std::domain_error(
        kind == IdentityId::EQ28
            ? "no opposite-sign subcentroid root exists for this root set"
            : "no same-sign subcentroid root exists for this root set");

  double bracket = kind == IdentityId::EQ27
                       ? (std::abs(c) - std::abs(sub)) * (std::abs(c) - std::abs(sub))
                       : (std::abs(c) + std::abs(sub)) * (std::abs(c) + std::abs(sub));
  std::vector<Scalar> xihat = log_deriv_roots(m);
  double lhs = 0.0;
  for (const Scalar& x : xihat) lhs += std::norm(to_float(x));
  double lam2 = 0.0;
  for (const auto& e : m.entries) lam2 += std::norm(to_float(e.root));
  double gap_term = 2.0 * (n - 1) * bracket;
  double rhs = lam2 - gap_term - c_norm;
  double scale = std::abs(lhs) + lam2 + gap_term + c_norm;
  return finish(kind, Scalar(lhs), Scalar(rhs), scale, tol, outside);
}

IdentityReport moment_eq30(MomentContext& ctx, const MomentParams& params,
                           const Tolerance& tol) {
  const Poly& f = ctx.f;
  int n = ctx.n;
  if (!params.m)
    throw std::domain_error("this identity needs the derivative order m");
  int m = *params.m;
  if (m < 0 || m > n)
    throw std::domain_error("derivative order must satisfy 0 <= m <= n");
  if (ctx.max_multiplicity() != 1)
    throw std::domain_error("identity needs all roots simple");

  ScalarMode mode = f.mode();
  Scalar lhs = power_sum_2(f.derivative(m));
  Scalar gap = subcentroid_gap_sq(f);
  Scalar c = centroid_value(f);
  Scalar p2 = power_sum_2(f);
  Scalar gap_term =
      Scalar::from_int(static_cast<long long>(m) * (2 * n - m - 1), mode) * gap;
  Scalar c_term = Scalar::from_int(m, mode) * c * c;
  Scalar rhs = p2 - gap_term - c_term;
  double scale = mag(lhs) + mag(p2) + mag(gap_term) + mag(c_term);
  return finish(IdentityId::EQ30, lhs, rhs, scale, tol);
}

IdentityReport moment_eq34(MomentContext& ctx, const MomentParams& params,
                           const Tolerance& tol) {
  const Poly& f = ctx.f;
  int n = ctx.n;
  if (!params.m || !params.s)
    throw std::domain_error("this identity needs both m and s");
  int m = *params.m;
  int s = *params.s;
  int r = ctx.max_multiplicity();
  if (s < 2 || s > n - r)
    throw std::domain_error("step must satisfy 2 <= s <= n - r");
  if (m < r - 1 || m > n - s - 1)
    throw std::domain_error("order must satisfy r-1 <= m <= n-s-1");

  ScalarMode mode = f.mode();
  Scalar pm = power_sum_2(f.derivative(m));
  Scalar pms = power_sum_2(f.derivative(m + s));
  Scalar lhs = pm - pms;
  Scalar gap = subcentroid_gap_sq(f);
  Scalar c = centroid_value(f);
  Scalar gap_term = Scalar::from_int(
                        static_cast<long long>(s) * (2 * (n - m) - s - 1),
                        mode) *
                    gap;
  Scalar c_term = Scalar::from_int(s, mode) * c * c;
  Scalar rhs = gap_term + c_term;
  double scale = mag(pm) + mag(pms) + mag(gap_term) + mag(c_term);
  return finish(IdentityId::EQ34, lhs, rhs, scale, tol);
}

IdentityReport moment_identity_impl(const Poly& f, IdentityId kind,
                                    const std::optional<RootMultiset>& known,
                                    const MomentParams& params,
                                    const Tolerance& tol) {
  int n = f.degree();
  if (n < 2) throw std::domain_error("moment identities need degree >= 2");
  if (known && known->degree != n)
    throw std::invalid_argument(
        "known root multiset does not match the polynomial degree");
  MomentContext ctx{f, n, std::nullopt, known};
  switch (kind) {
    case IdentityId::EQ22:
      return moment_eq22(ctx, tol);
    case IdentityId::EQ24:
    case IdentityId::EQ25:
      return moment_eq24_25(ctx, kind, tol);
    case IdentityId::EQ26:
    case IdentityId::EQ27:
    case IdentityId::EQ28:
      return moment_eq26_27_28(ctx, kind, tol);
    case IdentityId::EQ30:
      return moment_eq30(ctx, params, tol);
    case IdentityId::EQ34:
      return moment_eq34(ctx, params, tol);
    default:
      throw std::invalid_argument(
          "moment_identity does not handle this identity id");
  }
}

}  // namespace

IdentityReport moment_identity(const Poly& f, IdentityId kind,
                               const MomentParams& params,
                               const Tolerance& tol) {
  return moment_identity_impl(f, kind, std::nullopt, params, tol);
}

IdentityReport moment_identity(const Poly& f, IdentityId kind,
                               const RootMultiset& known_roots,
                               const MomentParams& params,
                               const Tolerance& tol) {
  return moment_identity_impl(f, kind, known_roots, params, tol);
}

IdentityReport newton_like_aggregate(const NodeSequence& nodes,
                                     const std::vector<Scalar>& points,
                                     const Tolerance& tol) {
  int n = nodes.degree();
  if (n < 1) throw std::domain_error("the aggregate needs degree >= 1");
  if (!nodes[0].is_zero())
    throw std::domain_error("the first node must be zero");
  if (points.empty())
    throw std::domain_error("the aggregate needs at least one point");
  ScalarMode mode = nodes.mode();
  for (const Scalar& w : points)
    if (w.mode() != mode)
      throw ModeError("point mode differs from the node sequence");

  Poly g = goncharov_recurrence(nodes);
  Scalar lhs = Scalar::zero_of(mode);
  double lscale = 0.0;
  for (const Scalar& w : points) {
    Scalar v = g.eval(w);
    lhs += v;
    lscale += mag(v);
  }

  // Right side from power sums and the tail values, with the determinant
  // engine so the two sides share no polynomial machinery.
  std::vector<Scalar> tail(nodes.values().begin() + 1, nodes.values().end());
  Scalar rhs = Scalar::zero_of(mode);
  double rscale = 0.0;
  for (int k = 1; k <= n; ++k) {
    Scalar pk = Scalar::zero_of(mode);
    for (const Scalar& w : points) pk += pow_int(w, k);
    std::vector<Scalar> args(tail.begin() + (k == n ? tail.size() : k - 1),
                             tail.end());
    Scalar h = k == n ? Scalar::one_of(mode)
                      : levinson_H(args, HMethod::det_factorial);
    Scalar term = binomial_scalar(n, k, mode) * pk * h;
    rhs += term;
    rscale += mag(term);
  }
  return finish(IdentityId::EQ19, lhs, rhs, lscale + rscale, tol);
}

IdentityReport viete_check(const RootMultiset& roots, const Scalar& shared,
                           const Tolerance& tol) {
  if (roots.entries.empty())
    throw std::domain_error("viete_check needs at least one root");
  ScalarMode mode = roots.entries.front().root.mode();
  if (shared.mode() != mode)
    throw ModeError("shared root mode differs from the multiset");
  int n = roots.multiplicity_total();

  Scalar cen = Scalar::zero_of(mode);
  for (const auto& e : roots.entries)
    cen += Scalar::from_int(e.multiplicity, mode) * e.root;
  cen /= Scalar::from_int(n, mode);
  if (!approx_eq(shared, cen, tol))
    throw std::domain_error("shared root is not the centroid");

  int shared_at = -1;
  for (size_t j = 0; j < roots.entries.size(); ++j) {
    if (approx_eq(roots.entries[j].root, shared, tol)) {
      shared_at = static_cast<int>(j);
      break;
    }
  }
  if (shared_at < 0)
    throw std::domain_error("shared value is not a root of the multiset");

  const Scalar& lam1 = roots.entries[shared_at].root;
  Scalar lhs = Scalar::zero_of(mode);
  double scale = 0.0;
  for (size_t j = 0; j < roots.entries.size(); ++j) {
    if (static_cast<int>(j) == shared_at) continue;
    Scalar term = Scalar::from_int(roots.entries[j].multiplicity, mode) *
                  (roots.entries[j].root - lam1);
    lhs += term;
    scale += mag(term);
  }
  return finish(IdentityId::EQ20, lhs, Scalar::zero_of(mode), scale, tol);
}

IdentityReport hoppe_log_derivative(const Poly& f, int m, const Scalar& z,
                                    const Tolerance& tol) {
  if (f.degree() < 1)
    throw std::domain_error("hoppe_log_derivative needs degree >= 1");
  if (m < 0) throw std::domain_error("derivative order must be >= 0");
  if (f.mode() != z.mode())
    throw ModeError("evaluation point mode differs from the polynomial");

  // Pole check before any division.
  Scalar fz = f.eval(z);
  if (f.is_exact()) {
    if (fz.is_zero())
      throw std::domain_error("evaluation point is a root of the polynomial");
  } else {
    double coeff_scale = 0.0;
    double zp = 1.0;
    for (int k = 0; k <= f.degree(); ++k) {
      coeff_scale += mag(f.coeff(k)) * zp;
      zp *= std::abs(to_float(z));
    }
    if (tol.within(std::abs(to_float(fz)), coeff_scale))
      throw std::domain_error("evaluation point is a root of the polynomial");
  }
  ScalarMode mode = f.mode();

  // Left side: m-th derivative of f'/f by the quotient-rule recurrence with
  // the denominator kept as an implicit power of f; (num/f^k)' =
  // (num' f - k num f') / f^{k+1}, so no root extraction and no
  // cancellation along the way.
  Poly num = f.derivative(1);
  Poly fprime = num;
  for (int k = 1; k <= m; ++k) {
    num = num.derivative(1) * f - Scalar::from_int(k, mode) * (num * fprime);
  }
  Scalar lhs = num.eval(z) / pow_int(fz, m + 1);

  // Right side: the alternating binomial sum over powers of f.
  Scalar rhs = Scalar::zero_of(mode);
  double rscale = 0.0;
  Poly fpow = f;
  for (int j = 0; j <= m; ++j) {
    // fpow holds f^{j+1} here.
    Scalar dval = fpow.derivative(m + 1).eval(z);
    Scalar denom = pow_int(fz, j + 1) * Scalar::from_int(j + 1, mode);
    Scalar term = binomial_scalar(m + 1, j + 1, mode) * dval / denom;
    if (j % 2 == 1) term = -term;
    rhs += term;
    rscale += mag(term);
    if (j < m) fpow *= f;
  }
  return finish(IdentityId::EQ31, lhs, rhs, mag(lhs) + rscale, tol);
}

IdentityReport laguerre_check(const Poly& f, const Scalar& x,
                              const Tolerance& tol) {
  int n = f.degree();
  if (n < 1) throw std::domain_error("laguerre_check needs degree >= 1");
  if (f.mode() != x.mode())
    throw ModeError("evaluation point mode differs from the polynomial");
  for (const Scalar& c : f.coeffs())
    if (!is_real_scalar(c))
      throw std::domain_error("laguerre_check needs real coefficients");
  if (!is_real_scalar(x))
    throw std::domain_error("laguerre_check needs a real evaluation point");

  Scalar fp = f.derivative(1).eval(x);
  Scalar lhs = fp * fp;
  Scalar rhs = f.eval(x) * f.derivative(2).eval(x);
  double scale = mag(lhs) + mag(rhs);
  double value = (to_float(lhs) - to_float(rhs)).real();

  // The positivity claim holds for squarefree real-rooted polynomials;
  // everything else is reported as informational.
  bool squarefree;
  if (f.is_exact()) {
    squarefree = exact_max_multiplicity(f) == 1;
  } else {
    squarefree =
        cluster_roots(roots_numeric(f), cluster_default_tolerance())
            .max_multiplicity() == 1;
  }
  bool all_real = true;
  {
    DerivativeRootSet rs = roots_numeric(f);
    for (const Scalar& r : rs.roots) {
      Complex64 v = to_float(r);
      if (!tol.within(std::abs(v.imag()), std::abs(v))) all_real = false;
    }
  }
  bool outside = !(squarefree && all_real);

  IdentityReport rep;
  rep.id = IdentityId::EQ33;
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.residual = std::abs(to_float(lhs) - to_float(rhs));
  rep.scale = scale;
  rep.outside_hypothesis = outside;
  rep.passed = value > 0.0;
  return rep;
}

double schoenberg_gap(const Poly& f) {
  int n = f.degree();
  if (n < 2) throw std::domain_error("the gap needs degree >= 2");
  DerivativeRootSet w = roots_numeric(f);
  DerivativeRootSet xi = derivative_roots(f, 1);
  double lam2 = 0.0;
  for (const Scalar& r : w.roots) lam2 += std::norm(to_float(r));
  double xi2 = 0.0;
  for (const Scalar& r : xi.roots) xi2 += std::norm(to_float(r));
  double c = std::norm(to_float(centroid_value(f)));
  return (n - 2) * lam2 / n + c - xi2;
}

double schoenberg_gap_from_roots(const RootMultiset& roots) {
  int n = roots.multiplicity_total();
  if (n < 2) throw std::domain_error("the gap needs degree >= 2");
  std::vector<Scalar> expanded = roots.expanded();
  std::vector<Scalar> as_float;
  as_float.reserve(expanded.size());
  double lam2 = 0.0;
  Complex64 mean(0.0, 0.0);
  for (const Scalar& r : expanded) {
    Complex64 v = to_float(r);
    as_float.push_back(Scalar(v));
    lam2 += std::norm(v);
    mean += v;
  }
  mean /= static_cast<double>(n);
  Poly f = Poly::from_roots(as_float, ScalarMode::floating);
  DerivativeRootSet xi = derivative_roots(f, 1);
  double xi2 = 0.0;
  for (const Scalar& r : xi.roots) xi2 += std::norm(to_float(r));
  return (n - 2) * lam2 / n + std::norm(mean) - xi2;
}

}  // namespace calab
