#include "calab/roots.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace calab {

namespace {

// Rotation of the initial-guess circle, in radians.  Irrational so the
// guesses never land on a symmetry axis of a real-coefficient polynomial.
constexpr double kGuessRotation = 0.70710678118654752;  // 1/sqrt(2)
constexpr int kAberthCap = 200;

double max_abs(const std::vector<Complex64>& v) {
  double m = 0.0;
  for (const Complex64& z : v) m = std::max(m, std::abs(z));
  return m;
}

// Horner value and derivative value in one sweep.
std::pair<Complex64, Complex64> eval_with_derivative(
    const std::vector<Complex64>& c, Complex64 z) {
  Complex64 p(0.0, 0.0), dp(0.0, 0.0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
  return {p, dp};
}

bool aberth(const std::vector<Complex64>& c, std::vector<Complex64>& z) {
  const size_t n = z.size();
  for (int iter = 0; iter < kAberthCap; ++iter) {
    double max_step = 0.0;
    bool finite = true;
    for (size_t j = 0; j < n; ++j) {
      auto [p, dp] = eval_with_derivative(c, z[j]);
      if (p == Complex64(0.0, 0.0)) continue;
      if (dp == Complex64(0.0, 0.0)) {
        // derivative vanished at the iterate: nudge off the critical point
        z[j] += Complex64(1e-8, 1e-8) * (1.0 + std::abs(z[j]));
        max_step = 1.0;
        continue;
      }
      const Complex64 newton = p / dp;
      Complex64 repulsion(0.0, 0.0);
      for (size_t k = 0; k < n; ++k) {
        if (k == j) continue;
        const Complex64 d = z[j] - z[k];
        if (d == Complex64(0.0, 0.0)) continue;
        repulsion += 1.0 / d;
      }
      const Complex64 denom = 1.0 - newton * repulsion;
      const Complex64 step =
          denom == Complex64(0.0, 0.0) ? newton : newton / denom;
      z[j] -= step;
      if (!std::isfinite(z[j].real()) || !std::isfinite(z[j].imag())) {
        finite = false;
        break;
      }
      max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(z[j])));
    }
    if (!finite) return false;
    if (max_step <= 1e-15) return true;
  }
  return false;
}

std::vector<Complex64> companion_eigenvalues(const std::vector<Complex64>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) m(i, i - 1) = Complex64(1.0, 0.0);
  for (int i = 0; i < n; ++i) m(i, n - 1) = -c[i] / c[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  std::vector<Complex64> roots(n);
  for (int i = 0; i < n; ++i) roots[i] = solver.eigenvalues()[i];
  return roots;
}

void newton_polish(const std::vector<Complex64>& c,
                   std::vector<Complex64>& roots) {
  for (Complex64& z : roots) {
    for (int it = 0; it < 8; ++it) {
      auto [p, dp] = eval_with_derivative(c, z);
      if (p == Complex64(0.0, 0.0) || dp == Complex64(0.0, 0.0)) break;
      const Complex64 step = p / dp;
      const Complex64 next = z - step;
      if (!std::isfinite(next.real()) || !std::isfinite(next.imag())) break;
      auto [p2, dp2] = eval_with_derivative(c, next);
      (void)dp2;
      if (std::abs(p2) >= std::abs(p)) break;  // keep the better iterate
      z = next;
    }
  }
}

void sort_roots(std::vector<Complex64>& roots) {
  std::sort(roots.begin(), roots.end(), [](Complex64 a, Complex64 b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

}  // namespace

int RootMultiset::max_multiplicity() const {
  int r = 0;
  for (const Entry& e : entries) r = std::max(r, e.multiplicity);
  return r;
}

int RootMultiset::multiplicity_total() const {
  int total = 0;
  for (const Entry& e : entries) total += e.multiplicity;
  return total;
}

std::vector<Scalar> RootMultiset::expanded() const {
  std::vector<Scalar> out;
  out.reserve(static_cast<size_t>(multiplicity_total()));
  for (const Entry& e : entries)
    for (int i = 0; i < e.multiplicity; ++i) out.push_back(e.root);
  return out;
}

DerivativeRootSet roots_numeric(const Poly& f) {
  if (f.degree() < 1)
    throw std::domain_error("root extraction needs degree >= 1");
  std::vector<Complex64> c = f.complex_coeffs();
  const double scale = max_abs(c);
  if (std::abs(c.back()) < 1e-12 * scale)
    throw std::domain_error(
        "leading coefficient is numerically negligible; deflate first");

  // exact deflation of roots at the origin
  std::vector<Complex64> roots;
  size_t low = 0;
  while (low < c.size() - 1 && c[low] == Complex64(0.0, 0.0)) {
    roots.emplace_back(0.0, 0.0);
    ++low;
  }
  std::vector<Complex64> work(c.begin() + static_cast<long>(low), c.end());

  const int n = static_cast<int>(work.size()) - 1;
  if (n == 1) {
    roots.push_back(-work[0] / work[1]);
  } else if (n >= 2) {
    // Cauchy bound radius, guesses spread on one circle
    double radius = 0.0;
    for (int k = 0; k < n; ++k)
      radius = std::max(radius, std::abs(work[k] / work[n]));
    radius = 1.0 + radius;
    std::vector<Complex64> z(n);
    for (int j = 0; j < n; ++j) {
      const double angle =
          kGuessRotation + 2.0 * M_PI * static_cast<double>(j) / n;
      z[j] = radius * Complex64(std::cos(angle), std::sin(angle));
    }
    const bool converged = aberth(work, z);
    const double bound = 1e-10 * (1.0 + scale);
    auto residual_of = [&](const std::vector<Complex64>& cand) {
      double worst = 0.0;
      for (const Complex64& r : cand) {
        Complex64 p(0.0, 0.0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) p = p * r + *it;
        worst = std::max(worst, std::abs(p));
      }
      return worst;
    };
    if (!converged || residual_of(z) > bound) {
      z = companion_eigenvalues(work);
      newton_polish(work, z);
      const double worst = residual_of(z);
      if (worst > bound)
        throw NumericError("root iteration failed to meet the residual bound",
                           worst);
    }
    roots.insert(roots.end(), z.begin(), z.end());
  }

  sort_roots(roots);
  DerivativeRootSet out;
  out.order = 0;
  out.roots.reserve(roots.size());
  for (const Complex64& r : roots) out.roots.emplace_back(r);
  return out;
}

DerivativeRootSet derivative_roots(const Poly& f, int m) {
  DerivativeRootSet rs = roots_numeric(f.derivative(m));
  rs.order = m;
  return rs;
}

RootMultiset cluster_roots(const DerivativeRootSet& rs, const Tolerance& tol) {
  const size_t n = rs.roots.size();
  // union-find over the single-linkage graph
  std::vector<size_t> parent(n);
  std::iota(parent.begin(), parent.end(), size_t{0});
  std::function<size_t(size_t)> find = [&](size_t i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (approx_eq(rs.roots[i], rs.roots[j], tol))
        parent[find(i)] = find(j);

  std::vector<std::vector<size_t>> groups;
  std::vector<long> group_of(n, -1);
  for (size_t i = 0; i < n; ++i) {
    const size_t r = find(i);
    if (group_of[r] < 0) {
      group_of[r] = static_cast<long>(groups.size());
      groups.emplace_back();
    }
    groups[static_cast<size_t>(group_of[r])].push_back(i);
  }

  RootMultiset out;
  out.degree = static_cast<int>(n);
  for (const auto& g : groups) {
    bool all_exact = true;
    for (size_t i : g) all_exact = all_exact && rs.roots[i].is_exact();
    Scalar mean = Scalar::zero_of(all_exact ? ScalarMode::exact
                                            : ScalarMode::floating);
    for (size_t i : g) {
      Scalar term = rs.roots[i];
      if (!all_exact && term.is_exact()) term = Scalar(to_float(term));
      mean += term;
    }
    mean /= Scalar::from_int(static_cast<long long>(g.size()),
                             all_exact ? ScalarMode::exact
                                       : ScalarMode::floating);
    out.entries.push_back({mean, static_cast<int>(g.size())});
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](const RootMultiset::Entry& a, const RootMultiset::Entry& b) {
              const Complex64 x = to_float(a.root), y = to_float(b.root);
              if (x.real() != y.real()) return x.real() < y.real();
              return x.imag() < y.imag();
            });
  return out;
}

RootMultiset make_root_multiset(
    const std::vector<std::pair<Scalar, int>>& entries) {
  RootMultiset out;
  for (const auto& [root, mult] : entries) {
    if (mult <= 0)
      throw std::domain_error("root multiplicity must be positive");
    out.entries.push_back({root, mult});
    out.degree += mult;
  }
  return out;
}

Poly exact_squarefree_part(const Poly& f) {
  if (!f.is_exact())
    throw ModeError("squarefree part requires an exact polynomial");
  if (f.degree() < 1)
    throw std::domain_error("squarefree part needs degree >= 1");
  const Poly g = exact_gcd(f, f.derivative());
  return divide_exact(f, g);
}

int exact_max_multiplicity(const Poly& f) {
  if (!f.is_exact())
    throw ModeError("multiplicity analysis requires an exact polynomial");
  if (f.degree() < 1)
    throw std::domain_error("multiplicity analysis needs degree >= 1");
  Poly g = f;
  int r = 0;
  while (g.degree() >= 1) {
    g = exact_gcd(g, g.derivative());
    ++r;
  }
  return r;
}

}  // namespace calab
