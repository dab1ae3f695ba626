#pragma once

// Root-sharing analysis: which derivative orders share a root with the
// polynomial, triviality criteria for rectilinear root sets, the
// disk-exclusion lower bound, and the excluded-sum inequality between
// derivative orders.

#include <vector>

#include "calab/identities.hpp"
#include "calab/poly.hpp"
#include "calab/roots.hpp"

namespace calab {

enum class AnalysisMode { exact, numeric };
enum class CAVerdict { trivial, non_CA, CA_candidate };

const char* verdict_name(CAVerdict v);

/// Per-order sharing record: all roots of f^{(order)} and the subset shared
/// with f.
struct CAOrderRecord {
  int order = 0;
  std::vector<Scalar> derivative_roots;  // every root of f^{(order)}
  std::vector<Scalar> shared_set;        // distinct shared values
  int shared_count = 0;                  // = shared_set.size()
};

/// Full sharing analysis.  verdict: trivial means a single n-fold root;
/// CA_candidate means every order 1..n-1 shares a root and the polynomial
/// is not trivial; non_CA otherwise.
struct CAReport {
  int degree = 0;
  std::vector<CAOrderRecord> orders;  // order = 1..n-1
  CAVerdict verdict = CAVerdict::non_CA;
  AnalysisMode method = AnalysisMode::numeric;
};

/// Lower bound certifying that not all remaining roots can sit inside the
/// unit-radius-mu disk around lambda1 + 1 while the first Viete sum
/// vanishes.
struct DiskExclusionReport {
  double mu = 0.0;
  Scalar lambda1;
  bool all_inside = false;
  double lower_bound_value = 0.0;
  bool contradiction = false;
};

/// Excluded-sum inequality between the squared roots of f^{(m)} and
/// f^{(m+s)}: members of the shared-set intersection are removed (one copy
/// per membership) from both sides before summing.  identity_residual
/// cross-checks the full (unexcluded) difference against its closed form.
struct Prop9Report {
  int m = 0;
  int s = 0;
  double lhs_sum = 0.0;
  double rhs_sum = 0.0;
  std::vector<Scalar> excluded;
  bool satisfied = false;
  double identity_residual = 0.0;
};

/// Shared roots of f and f^{(j)}, 1 <= j <= n-1.  Exact mode (exact input
/// only, ModeError otherwise) takes the roots of exact_gcd(f, f^{(j)}),
/// extracting them from the squarefree part so every value is a simple
/// root; numeric mode matches the two numeric root lists within
/// tol.absolute * (1 + max root magnitude).
std::vector<Scalar> shared_roots(const Poly& f, int j, AnalysisMode mode,
                                 const Tolerance& tol = Tolerance{});

/// Full analysis across orders 1..n-1.  deg f >= 2 required.  Asserts two
/// structural facts about any candidate verdict (a shared root at order 1
/// forces a multiple root; equal multiplicities everywhere are
/// incompatible with sharing at every order) and throws std::logic_error
/// if either is ever contradicted.
CAReport ca_check(const Poly& f, AnalysisMode mode,
                  const Tolerance& tol = Tolerance{});

enum class TrivialityCriterion { prop7, prop8_vertical, prop8_horizontal };

/// Triviality criteria for constrained root sets: for roots collinear
/// through the origin (prop7), a double root of f^{(n-2)} at 0 forces
/// f = c z^n; for roots on a common vertical/horizontal line (prop8), any
/// double root of f^{(n-2)} forces a single n-fold root.  Returns whether
/// the double-root condition holds; when it does, the conclusion is
/// re-verified directly and a mismatch throws std::logic_error (it would
/// falsify the criterion).  Hypothesis violations throw std::domain_error.
bool triviality_check(const Poly& f, TrivialityCriterion criterion,
                      const Tolerance& tol = Tolerance{});

/// The displayed lower bound phi(mu) e^{1-phi(mu)} prod |lambda_j -
/// lambda1|^{r_j/(n-r_1)} with phi(mu) = ((1-mu)/(2mu)) log((1+mu)/(1-mu)),
/// plus the disk-membership and Viete-sum flags.  0 < mu < 1; lambda1 must
/// be one of the distinct roots and distinct from all others.
DiskExclusionReport prop6_bound(double mu, const RootMultiset& roots,
                                const Scalar& lambda1,
                                const Tolerance& tol = Tolerance{});

/// The order-(m) vs order-(m+s) excluded-sum inequality for real-rooted f
/// under the closed-form hypotheses (r-1 <= m <= n-s-1, 2 <= s <= n-r).
Prop9Report prop9_report(const Poly& f, int m, int s,
                         const Tolerance& tol = Tolerance{});

}  // namespace calab
