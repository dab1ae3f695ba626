#pragma once

// Machine checks for the root identities and inequalities: the Sz.-Nagy
// family, centroid relations, Viete and Newton-like sums, the log-derivative
// (Hoppe) formula, the Laguerre inequality, and the Schoenberg-style gap.
//
// Identity checks are computed from coefficients wherever a power-sum
// aggregate exists (keeping the exact path exactly zero-residual) and from
// explicitly extracted roots where an identity genuinely needs them.

#include <optional>
#include <utility>
#include <vector>

#include "calab/goncharov.hpp"
#include "calab/poly.hpp"
#include "calab/roots.hpp"

namespace calab {

enum class IdentityId {
  EQ19, EQ20, EQ21, EQ22, EQ24, EQ25, EQ26, EQ27, EQ28, EQ30, EQ31, EQ33, EQ34
};

/// Stable text tag for CSV/CLI output ("EQ21", ...).
const char* identity_name(IdentityId id);

/// Outcome of one identity check.  residual = |lhs - rhs| always; passed
/// means residual <= tol.absolute * (1 + scale), where scale adds up the
/// magnitudes of the top-level summands on both sides (so cancellation-heavy
/// inputs do not mask failures).  For inequality checks (EQ33) the fields
/// keep their meanings except that passed reports the inequality itself.
/// outside_hypothesis marks inputs accepted but not covered by the verified
/// hypothesis (e.g. EQ25 with multiple roots); such reports stay passed
/// unless the computed relation itself fails.
struct IdentityReport {
  IdentityId id;
  Scalar lhs;
  Scalar rhs;
  double residual = 0.0;
  double scale = 0.0;
  bool passed = false;
  bool outside_hypothesis = false;
};

/// Power sums of the full root multiset, straight from coefficients:
/// p1 = sum of roots, p2 = sum of squared roots.  Constants have no roots
/// (both sums zero); the zero polynomial -> std::domain_error.
Scalar power_sum_1(const Poly& f);
Scalar power_sum_2(const Poly& f);
/// sum over all roots w (with multiplicity) of (w - z)^2
///   = p2 - 2 z p1 + deg(f) z^2.
Scalar second_moment(const Poly& f, const Scalar& z);

/// Mean of the roots, -c_{d-1} / (d c_d); the same value for every
/// derivative order.  deg f >= 1 required.
Scalar centroid_value(const Poly& f);

/// (z_{n-1} - z_{n-2})^2 for either root z_{n-2} of f^{(n-2)}: with
/// f^{(n-2)} = A z^2 + B z + C this is (B^2 - 4AC) / (4A^2), exact on the
/// exact path and identical for both root choices.  deg f >= 2 required.
Scalar subcentroid_gap_sq(const Poly& f);

/// Centroid plus the two roots of f^{(n-2)} (centroid +/- sqrt of the gap).
/// On the exact path the square root stays exact when representable and
/// falls back to float scalars otherwise.
struct CentroidData {
  Scalar centroid;
  std::pair<Scalar, Scalar> subcentroid_roots;
};

/// Computes CentroidData and verifies that every derivative's root mean
/// equals the centroid (exactly when exact, within tol otherwise; a failed
/// verification throws NumericError).  deg f >= 2 required.
CentroidData centroid(const Poly& f, const Tolerance& tol = Tolerance{});

enum class SubcentroidChoice { plus, minus };

/// The two-bracket identity linking (z_{n-1} - z_{n-2})^2 to the second
/// moments of the roots of f and of f^{(m)}, any z.  All three expressions
/// are evaluated; the report carries the worst-agreeing pair, so passed
/// means all three agree.  Requires 1 <= m <= n-2.
IdentityReport sz_nagy_check(const Poly& f, int m, const Scalar& z,
                             SubcentroidChoice choice,
                             const Tolerance& tol = Tolerance{});

/// Parameters for moment_identity kinds that need them: EQ30 and EQ34 take
/// m, EQ34 also takes s.
struct MomentParams {
  std::optional<int> m;
  std::optional<int> s;
};

/// Moment identities over roots of f and its derivatives:
///   EQ22  sum xi^2 = (n-2)/n sum r lambda^2 + centroid^2
///   EQ24  sum_distinct lambda = sum xi-hat + centroid
///   EQ25  sum xi-hat^2 = sum_distinct lambda^2 - 2(n-1) gap - centroid^2
///   EQ26..EQ28  the |.|^2 variants for root sets collinear through the
///               origin (EQ28 with the opposite-sign subcentroid root)
///   EQ30  sum [xi^(m)]^2 = sum w^2 - m(2n-m-1) gap - m centroid^2
///   EQ34  the order-(m) vs order-(m+s) difference form
/// Root-dependent kinds extract roots numerically; the overload with a
/// known RootMultiset keeps the exact path exact.  Precondition violations
/// throw std::domain_error naming the failed hypothesis.
IdentityReport moment_identity(const Poly& f, IdentityId kind,
                               const MomentParams& params = MomentParams{},
                               const Tolerance& tol = Tolerance{});
IdentityReport moment_identity(const Poly& f, IdentityId kind,
                               const RootMultiset& known_roots,
                               const MomentParams& params = MomentParams{},
                               const Tolerance& tol = Tolerance{});

/// Numerator of (log f)' over the distinct roots:
/// sum_j r_j prod_{i != j} (z - lambda_i).
Poly log_deriv_numerator(const RootMultiset& roots);

/// The k-1 roots of that numerator (exact when it is linear, numeric
/// otherwise).  k = 0 -> std::domain_error.
std::vector<Scalar> log_deriv_roots(const RootMultiset& roots);

/// Least-squares line through the origin over the nonzero points; collinear
/// when every point sits within tol of the line (perpendicular distance
/// measured against |point|).  angle is normalized to [0, pi); sign_vector
/// holds the side (+1/-1) of each point along the line.
struct RectilinearityResult {
  bool collinear_through_origin = false;
  double angle = 0.0;
  std::vector<int> sign_vector;
};
RectilinearityResult rectilinearity(const std::vector<Scalar>& points,
                                    const Tolerance& tol = Tolerance{});

/// Aggregated interpolation-value identity: for nodes with z_0 = 0 and any
/// points w_j, sum_j G_n(w_j) = sum_k C(n,k) p_k H_{n-k} with
/// p_k = sum_j w_j^k.  Exactly zero residual on exact input.
IdentityReport newton_like_aggregate(const NodeSequence& nodes,
                                     const std::vector<Scalar>& points,
                                     const Tolerance& tol = Tolerance{});

/// First-Viete identity sum_{j>=2} r_j (lambda_j - lambda_1) = 0 for a root
/// multiset whose centroid lambda_1 is itself a root ("shared").  Hypothesis
/// violations throw std::domain_error naming the failed condition.
IdentityReport viete_check(const RootMultiset& roots, const Scalar& shared,
                           const Tolerance& tol = Tolerance{});

/// (f'/f)^{(m)}(z) computed two ways: by the quotient-rule recurrence on a
/// (numerator, denominator) pair, and by the power-sum formula
/// sum_j ((-1)^j/(j+1)) C(m+1, j+1) (f^{j+1})^{(m+1)}(z) / f(z)^{j+1}.
/// Exact equality on the exact path.  f(z) = 0 -> std::domain_error (pole).
IdentityReport hoppe_log_derivative(const Poly& f, int m, const Scalar& z,
                                    const Tolerance& tol = Tolerance{});

/// Laguerre quantity [f'(x)]^2 - f(x) f''(x) at a real point of a
/// real-coefficient polynomial.  Must be positive when f is squarefree with
/// all-real roots; reports are informational (outside_hypothesis) otherwise.
IdentityReport laguerre_check(const Poly& f, const Scalar& x,
                              const Tolerance& tol = Tolerance{});

/// Schoenberg-style gap
///   (n-2)/n sum r |lambda|^2 + |centroid|^2 - sum |xi^{(1)}|^2,
/// conjecturally >= 0 with equality iff the roots are collinear through the
/// origin.  Reported, never asserted.  deg f >= 2 required.
double schoenberg_gap(const Poly& f);
/// Same gap for a known root multiset (reconstructs the monic polynomial).
double schoenberg_gap_from_roots(const RootMultiset& roots);

}  // namespace calab
