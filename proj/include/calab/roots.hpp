#pragma once

// Numeric root extraction and multiplicity clustering.  The solver is
// Aberth-Ehrlich simultaneous iteration with a deterministic initial guess
// (Cauchy-bound circle rotated by a fixed irrational angle) and a
// companion-matrix eigenvalue fallback, so the same input always yields the
// same output.

#include <vector>

#include "calab/poly.hpp"

namespace calab {

/// Roots of the m-th derivative of some polynomial, repeats allowed.
struct DerivativeRootSet {
  int order = 0;               // which derivative these annihilate
  std::vector<Scalar> roots;   // length (deg f) - order
};

/// Distinct roots with multiplicities; multiplicities sum to the degree.
struct RootMultiset {
  struct Entry {
    Scalar root;
    int multiplicity = 1;
  };

  std::vector<Entry> entries;
  int degree = 0;  // n = sum of multiplicities

  int distinct_count() const { return static_cast<int>(entries.size()); }
  int max_multiplicity() const;
  int multiplicity_total() const;
  /// Flattened list, each root repeated by its multiplicity.
  std::vector<Scalar> expanded() const;
};

/// All deg(f) roots as float scalars.  Requires deg f >= 1 and a leading
/// coefficient that is not numerically negligible next to the others
/// (std::domain_error otherwise).  Throws NumericError with the worst
/// residual when neither the iteration nor the fallback reaches
/// |f(root)| <= 1e-10 * (1 + max |coefficient|).
DerivativeRootSet roots_numeric(const Poly& f);

/// roots_numeric applied to the m-th derivative, with the order recorded.
DerivativeRootSet derivative_roots(const Poly& f, int m);

/// Default clustering distance: 1e-7 absolute.  Numerically computed double
/// roots separate at about sqrt(machine epsilon), well below this, while
/// genuinely distinct roots in the working range sit far above it.
inline Tolerance cluster_default_tolerance() { return Tolerance{1e-7, 0.0}; }

/// Single-linkage clustering: roots linked whenever approx_eq at tol; each
/// cluster is represented by its mean and carries its size as multiplicity.
RootMultiset cluster_roots(const DerivativeRootSet& rs, const Tolerance& tol);

/// Convenience: exact scalars with stated multiplicities (no clustering).
RootMultiset make_root_multiset(
    const std::vector<std::pair<Scalar, int>>& entries);

/// f / gcd(f, f'): same distinct roots, all simple.  Exact input only.
Poly exact_squarefree_part(const Poly& f);

/// Largest root multiplicity of an exact nonconstant polynomial, via the
/// gcd chain f, gcd(f, f'), gcd(gcd(f, f'), ...) until constant.
int exact_max_multiplicity(const Poly& f);

}  // namespace calab
