#pragma once

// Abel-Goncharov interpolation polynomials: three independent constructions
// (recurrence, iterated integration, binomial expansion over Levinson
// values), Hessenberg determinant forms, the compressed determinant with its
// single-nonzero-root specialization, and two upper bounds on |G_n|.

#include <vector>

#include "calab/poly.hpp"

namespace calab {

/// Interpolation nodes z_0, ..., z_{n-1}; node k belongs to the k-th
/// derivative.  Mode-homogeneous, length >= 1.
class NodeSequence {
public:
  explicit NodeSequence(std::vector<Scalar> nodes);

  int degree() const { return static_cast<int>(nodes_.size()); }
  ScalarMode mode() const { return mode_; }
  const Scalar& operator[](int k) const { return nodes_.at(static_cast<size_t>(k)); }
  const std::vector<Scalar>& values() const { return nodes_; }

private:
  std::vector<Scalar> nodes_;
  ScalarMode mode_;
};

/// Square matrix with ones on the first subdiagonal and zeros below it;
/// only the upper triangle is stored.  Indices are 1-based.
class HessenbergMatrix {
public:
  HessenbergMatrix(int size, ScalarMode mode);

  /// Full s x s rows; validates the unit subdiagonal and the zero block
  /// below it (std::invalid_argument otherwise).
  static HessenbergMatrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  int size() const { return size_; }
  ScalarMode mode() const { return mode_; }

  /// Entry (i, j) of the full matrix: stored value for i <= j, one on the
  /// subdiagonal, zero below it.
  Scalar at(int i, int j) const;
  /// Upper-triangle assignment (requires i <= j and matching mode).
  void set(int i, int j, Scalar v);

private:
  size_t upper_index(int i, int j) const;

  int size_;
  ScalarMode mode_;
  std::vector<Scalar> upper_;
};

/// Determinant by the leading-principal-minor recurrence
/// p_k = sum_{i=1..k} (-1)^{k-i} M[i,k] p_{i-1}, p_0 = 1.
Scalar hessenberg_det(const HessenbergMatrix& m);

enum class HMethod { integral, det_factorial, det_binomial };

/// Levinson value H_m(a_1, ..., a_m).  The three methods agree exactly on
/// exact input: the integral method chains antiderivatives, the determinant
/// methods evaluate (-1)^m m! det(a_i^{j-i+1}/(j-i+1)!) and
/// (-1)^m det(C(j, i-1) a_i^{j-i+1}) respectively.
Scalar levinson_H(const std::vector<Scalar>& args, HMethod method);

/// H_{m+1}(z, a_1, ..., a_m) as a polynomial in its first argument,
/// recovered by evaluating at m+2 distinct points and interpolating.
Poly levinson_H_poly(const std::vector<Scalar>& tail, HMethod method);

/// Monic degree-n interpolation polynomial via
/// G_n = z^n - sum_{k<n} C(n,k) z_k^{n-k} G_k.
Poly goncharov_recurrence(const NodeSequence& nodes);

/// n! times the n-fold antiderivative chain of 1 with base points
/// z_{n-1}, ..., z_0; equals the recurrence construction exactly.
Poly goncharov_integral(const NodeSequence& nodes);

/// For node sequences with z_0 = 0 (std::domain_error otherwise):
/// G_n = sum_{k=1..n} C(n,k) H_{n-k}(z_k, ..., z_{n-1}) z^k.
Poly goncharov_expand(const NodeSequence& nodes);

/// Strictly increasing indices i_1 < ... < i_s inside {1, ..., n-1},
/// marking which nodes are nonzero.
class SupportPattern {
public:
  SupportPattern(std::vector<int> indices, int n);

  /// Indices of the nonzero nodes among z_1..z_{n-1} (z_0 is ignored);
  /// std::invalid_argument when all of them vanish.
  static SupportPattern nonzero_support(const NodeSequence& nodes);

  int degree() const { return n_; }
  int s() const { return static_cast<int>(indices_.size()); }
  const std::vector<int>& indices() const { return indices_; }

private:
  std::vector<int> indices_;
  int n_;
};

/// Determinant of the compressed (s+1) x (s+1) matrix: column t carries
/// index j_t from (i_1, ..., i_s, n); row 1 holds z^{j_t - i_1}, the row of
/// node z_{i_r} holds C(j_t, i_r) z_{i_r}^{j_t - i_r} above a unit
/// subdiagonal.  Satisfies det = (-1)^s z^{-i_1} G_n(z) for node sequences
/// vanishing exactly off the pattern (consistency-checked; z_0 counts as
/// off-pattern and must be zero).  z = 0 -> std::domain_error.
Scalar compressed_det(const NodeSequence& nodes, const SupportPattern& pattern,
                      const Scalar& z);

/// The s = 1 compressed determinant in closed form: (C(n, i1) - 1) z^{n-i1}.
/// Nonzero for every admissible input, which rules the s = 1 case out.
Scalar s1_nonvanishing(int n, int i1, const Scalar& z);

/// Nested multinomial-sum upper bound on |G_n(z)| (the sharper one).
double bound_tight(const NodeSequence& nodes, const Scalar& z);

/// (|z - z_0| + sum |z_{s+1} - z_s|)^n, the classical upper bound.
double bound_classical(const NodeSequence& nodes, const Scalar& z);

/// Lagrange interpolation through (xs[i], ys[i]); the xs must be pairwise
/// distinct and everything mode-homogeneous.
Poly interpolate_points(const std::vector<Scalar>& xs,
                        const std::vector<Scalar>& ys);

/// Exact integer helpers (Pascal / product recurrences, never floats).
BigInt factorial_big(int n);
BigInt binomial_big(int n, int k);
Scalar factorial_scalar(int n, ScalarMode mode);
Scalar binomial_scalar(int n, int k, ScalarMode mode);

}  // namespace calab
