#include "calab/goncharov.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace calab {

NodeSequence::NodeSequence(std::vector<Scalar> nodes)
    : nodes_(std::move(nodes)) {
  if (nodes_.empty())
    throw std::invalid_argument("node sequence must contain at least one node");
  mode_ = nodes_.front().mode();
  for (const Scalar& z : nodes_)
    if (z.mode() != mode_)
      throw ModeError("node sequence mixes exact and float scalars");
}

HessenbergMatrix::HessenbergMatrix(int size, ScalarMode mode)
    : size_(size), mode_(mode) {
  if (size < 1) throw std::invalid_argument("matrix size must be >= 1");
  const size_t s = static_cast<size_t>(size);
  upper_.assign(s * (s + 1) / 2, Scalar::zero_of(mode));
}

HessenbergMatrix HessenbergMatrix::from_rows(
    const std::vector<std::vector<Scalar>>& rows) {
  const int s = static_cast<int>(rows.size());
  if (s < 1) throw std::invalid_argument("matrix size must be >= 1");
  for (const auto& row : rows)
    if (static_cast<int>(row.size()) != s)
      throw std::invalid_argument("matrix rows must all have length " +
                                  std::to_string(s));
  const ScalarMode mode = rows[0][0].mode();
  HessenbergMatrix m(s, mode);
  for (int i = 1; i <= s; ++i) {
    for (int j = 1; j <= s; ++j) {
      const Scalar& v = rows[i - 1][j - 1];
      if (v.mode() != mode)
        throw ModeError("matrix entries mix exact and float scalars");
      if (j >= i) {
        m.set(i, j, v);
      } else if (j == i - 1) {
        if (!(v == Scalar::one_of(mode)))
          throw std::invalid_argument("subdiagonal entries must all be one");
      } else if (!v.is_zero()) {
        throw std::invalid_argument(
            "entries below the first subdiagonal must be zero");
      }
    }
  }
  return m;
}

size_t HessenbergMatrix::upper_index(int i, int j) const {
  // row i holds columns i..size_, packed row-major
  const size_t r = static_cast<size_t>(i - 1);
  const size_t n = static_cast<size_t>(size_);
  return r * n - r * (r - 1) / 2 + static_cast<size_t>(j - i);
}

Scalar HessenbergMatrix::at(int i, int j) const {
  if (i < 1 || j < 1 || i > size_ || j > size_)
    throw std::out_of_range("matrix index out of range");
  if (i <= j) return upper_[upper_index(i, j)];
  if (i == j + 1) return Scalar::one_of(mode_);
  return Scalar::zero_of(mode_);
}

void HessenbergMatrix::set(int i, int j, Scalar v) {
  if (i < 1 || j < 1 || i > size_ || j > size_)
    throw std::out_of_range("matrix index out of range");
  if (i > j)
    throw std::domain_error("only upper-triangle entries are assignable");
  if (v.mode() != mode_)
    throw ModeError("matrix entry mode differs from matrix mode");
  upper_[upper_index(i, j)] = std::move(v);
}

Scalar hessenberg_det(const HessenbergMatrix& m) {
  const int s = m.size();
  std::vector<Scalar> p;
  p.reserve(static_cast<size_t>(s) + 1);
  p.push_back(Scalar::one_of(m.mode()));
  for (int k = 1; k <= s; ++k) {
    Scalar acc = Scalar::zero_of(m.mode());
    for (int i = 1; i <= k; ++i) {
      const Scalar term = m.at(i, k) * p[static_cast<size_t>(i - 1)];
      acc = ((k - i) % 2 == 0) ? acc + term : acc - term;
    }
    p.push_back(std::move(acc));
  }
  return p.back();
}

BigInt factorial_big(int n) {
  if (n < 0) throw std::domain_error("factorial of a negative integer");
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binomial_big(int n, int k) {
  if (n < 0) throw std::domain_error("binomial with negative upper index");
  if (k < 0 || k > n) return 0;
  // Pascal recurrence along row n
  std::vector<BigInt> row(static_cast<size_t>(n) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j >= 1; --j) row[static_cast<size_t>(j)] += row[static_cast<size_t>(j - 1)];
  return row[static_cast<size_t>(k)];
}

Scalar factorial_scalar(int n, ScalarMode mode) {
  const BigInt f = factorial_big(n);
  if (mode == ScalarMode::exact) return Scalar(Rational(f));
  return Scalar(Complex64(f.convert_to<double>(), 0.0));
}

Scalar binomial_scalar(int n, int k, ScalarMode mode) {
  const BigInt b = binomial_big(n, k);
  if (mode == ScalarMode::exact) return Scalar(Rational(b));
  return Scalar(Complex64(b.convert_to<double>(), 0.0));
}

namespace {

Scalar levinson_H_integral(const std::vector<Scalar>& a) {
  const int m = static_cast<int>(a.size());
  const ScalarMode mode = a.front().mode();
  Poly p = Poly::one(mode);
  for (int k = m - 1; k >= 0; --k)
    p = p.antiderivative_from(a[static_cast<size_t>(k)]);
  return factorial_scalar(m, mode) * p.eval(Scalar::zero_of(mode));
}

Scalar levinson_H_det(const std::vector<Scalar>& a, bool binomial) {
  const int m = static_cast<int>(a.size());
  const ScalarMode mode = a.front().mode();
  HessenbergMatrix mat(m, mode);
  for (int i = 1; i <= m; ++i) {
    const Scalar& ai = a[static_cast<size_t>(i - 1)];
    for (int j = i; j <= m; ++j) {
      const int power = j - i + 1;
      Scalar entry = pow_int(ai, power);
      if (binomial)
        entry *= binomial_scalar(j, i - 1, mode);
      else
        entry /= factorial_scalar(power, mode);
      mat.set(i, j, std::move(entry));
    }
  }
  Scalar det = hessenberg_det(mat);
  Scalar prefactor = Scalar::from_int(m % 2 == 0 ? 1 : -1, mode);
  if (!binomial) prefactor *= factorial_scalar(m, mode);
  return prefactor * det;
}

}  // namespace

Scalar levinson_H(const std::vector<Scalar>& args, HMethod method) {
  if (args.empty())
    throw std::domain_error("Levinson value needs at least one argument");
  const ScalarMode mode = args.front().mode();
  for (const Scalar& x : args)
    if (x.mode() != mode)
      throw ModeError("Levinson arguments mix exact and float scalars");
  switch (method) {
    case HMethod::integral:
      return levinson_H_integral(args);
    case HMethod::det_factorial:
      return levinson_H_det(args, false);
    case HMethod::det_binomial:
      return levinson_H_det(args, true);
  }
  throw std::logic_error("unknown Levinson method");
}

Poly levinson_H_poly(const std::vector<Scalar>& tail, HMethod method) {
  const ScalarMode mode = tail.empty() ? ScalarMode::exact : tail.front().mode();
  const int m = static_cast<int>(tail.size()) + 1;  // degree in z
  std::vector<Scalar> xs, ys;
  xs.reserve(static_cast<size_t>(m) + 1);
  ys.reserve(static_cast<size_t>(m) + 1);
  for (int t = 0; t <= m; ++t) {
    std::vector<Scalar> args;
    args.reserve(static_cast<size_t>(m));
    args.push_back(Scalar::from_int(t, mode));
    args.insert(args.end(), tail.begin(), tail.end());
    xs.push_back(args.front());
    ys.push_back(levinson_H(args, method));
  }
  return interpolate_points(xs, ys);
}

Poly goncharov_recurrence(const NodeSequence& nodes) {
  const int n = nodes.degree();
  const ScalarMode mode = nodes.mode();
  std::vector<Poly> g;
  g.reserve(static_cast<size_t>(n) + 1);
  g.push_back(Poly::one(mode));
  for (int m = 1; m <= n; ++m) {
    Poly gm = Poly::monomial(Scalar::one_of(mode), m);
    for (int k = 0; k < m; ++k) {
      const Scalar factor =
          binomial_scalar(m, k, mode) * pow_int(nodes[k], m - k);
      gm -= Poly::constant(factor) * g[static_cast<size_t>(k)];
    }
    g.push_back(std::move(gm));
  }
  return g.back();
}

Poly goncharov_integral(const NodeSequence& nodes) {
  const int n = nodes.degree();
  const ScalarMode mode = nodes.mode();
  Poly p = Poly::one(mode);
  for (int k = n - 1; k >= 0; --k) p = p.antiderivative_from(nodes[k]);
  return Poly::constant(factorial_scalar(n, mode)) * p;
}

Poly goncharov_expand(const NodeSequence& nodes) {
  if (!nodes[0].is_zero())
    throw std::domain_error("binomial expansion requires z_0 = 0");
  const int n = nodes.degree();
  const ScalarMode mode = nodes.mode();
  Poly g(mode);
  for (int k = 1; k <= n; ++k) {
    Scalar h = Scalar::one_of(mode);  // H_0 = 1
    if (k < n) {
      std::vector<Scalar> args(nodes.values().begin() + k,
                               nodes.values().end());
      h = levinson_H(args, HMethod::det_binomial);
    }
    g += Poly::monomial(binomial_scalar(n, k, mode) * h, k);
  }
  return g;
}

SupportPattern::SupportPattern(std::vector<int> indices, int n)
    : indices_(std::move(indices)), n_(n) {
  if (n_ < 2)
    throw std::invalid_argument("support pattern needs degree >= 2");
  if (indices_.empty())
    throw std::invalid_argument("support pattern must contain an index");
  int prev = 0;
  for (int i : indices_) {
    if (i <= prev)
      throw std::invalid_argument("support indices must strictly increase");
    if (i < 1 || i > n_ - 1)
      throw std::invalid_argument("support index " + std::to_string(i) +
                                  " outside 1.." + std::to_string(n_ - 1));
    prev = i;
  }
}

SupportPattern SupportPattern::nonzero_support(const NodeSequence& nodes) {
  std::vector<int> idx;
  for (int k = 1; k < nodes.degree(); ++k)
    if (!nodes[k].is_zero()) idx.push_back(k);
  return SupportPattern(std::move(idx), nodes.degree());
}

Scalar compressed_det(const NodeSequence& nodes, const SupportPattern& pattern,
                      const Scalar& z) {
  const int n = nodes.degree();
  if (pattern.degree() != n)
    throw std::invalid_argument("pattern degree differs from node count");
  if (z.mode() != nodes.mode())
    throw ModeError("evaluation point mode differs from node mode");
  if (z.is_zero())
    throw std::domain_error("compressed determinant requires z != 0");
  // the nodes must vanish exactly off the pattern (z_0 is always off it)
  {
    std::vector<bool> on(static_cast<size_t>(n), false);
    for (int i : pattern.indices()) on[static_cast<size_t>(i)] = true;
    for (int k = 0; k < n; ++k) {
      const bool nonzero = !nodes[k].is_zero();
      if (nonzero && !on[static_cast<size_t>(k)])
        throw std::invalid_argument("node z_" + std::to_string(k) +
                                    " is nonzero off the support pattern");
      if (!nonzero && on[static_cast<size_t>(k)])
        throw std::invalid_argument("node z_" + std::to_string(k) +
                                    " vanishes on the support pattern");
    }
  }

  const int s = pattern.s();
  const ScalarMode mode = nodes.mode();
  // column indices j_1..j_{s+1} = i_1, ..., i_s, n
  std::vector<int> cols = pattern.indices();
  cols.push_back(n);
  const int i1 = cols.front();

  HessenbergMatrix m(s + 1, mode);
  for (int t = 1; t <= s + 1; ++t)
    m.set(1, t, pow_int(z, cols[static_cast<size_t>(t - 1)] - i1));
  for (int r = 2; r <= s + 1; ++r) {
    const int ir = cols[static_cast<size_t>(r - 2)];
    const Scalar& w = nodes[ir];
    for (int t = r; t <= s + 1; ++t) {
      const int jt = cols[static_cast<size_t>(t - 1)];
      m.set(r, t, binomial_scalar(jt, ir, mode) * pow_int(w, jt - ir));
    }
  }
  return hessenberg_det(m);
}

Scalar s1_nonvanishing(int n, int i1, const Scalar& z) {
  if (i1 < 1 || i1 >= n)
    throw std::domain_error("index must satisfy 1 <= i1 < n");
  if (z.is_zero())
    throw std::domain_error("closed form requires z != 0");
  const ScalarMode mode = z.mode();
  const Scalar coefficient =
      binomial_scalar(n, i1, mode) - Scalar::one_of(mode);
  return coefficient * pow_int(z, n - i1);
}

double bound_classical(const NodeSequence& nodes, const Scalar& z) {
  const int n = nodes.degree();
  double sum = std::abs(to_float(z) - to_float(nodes[0]));
  for (int s = 0; s + 1 < n; ++s)
    sum += std::abs(to_float(nodes[s + 1]) - to_float(nodes[s]));
  return std::pow(sum, n);
}

double bound_tight(const NodeSequence& nodes, const Scalar& z) {
  const int n = nodes.degree();
  // d[s] = |z_{n-2-s} - z_{n-1-s}|, with z_{-1} standing for z
  std::vector<double> d(static_cast<size_t>(n));
  for (int s = 0; s < n; ++s) {
    const int a = n - 2 - s, b = n - 1 - s;
    const Complex64 za = a < 0 ? to_float(z) : to_float(nodes[a]);
    d[static_cast<size_t>(s)] = std::abs(za - to_float(nodes[b]));
  }
  std::vector<BigInt> fact(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) fact[static_cast<size_t>(i)] = factorial_big(i);

  double total = 0.0;
  // depth-first walk over k_0..k_{n-2} with partial sums <= depth+1;
  // the last exponent k_{n-1} = n - sum is forced
  std::vector<int> k(static_cast<size_t>(n), 0);
  auto walk = [&](auto&& self, int depth, int partial) -> void {
    if (depth == n - 1) {
      k[static_cast<size_t>(depth)] = n - partial;
      BigInt denom = 1;
      double prod = 1.0;
      for (int s = 0; s < n; ++s) {
        const int ks = k[static_cast<size_t>(s)];
        denom *= fact[static_cast<size_t>(ks)];
        prod *= std::pow(d[static_cast<size_t>(s)], ks);
      }
      const BigInt multinomial = fact[static_cast<size_t>(n)] / denom;
      total += multinomial.convert_to<double>() * prod;
      return;
    }
    for (int ks = 0; partial + ks <= depth + 1; ++ks) {
      k[static_cast<size_t>(depth)] = ks;
      self(self, depth + 1, partial + ks);
    }
  };
  walk(walk, 0, 0);
  return total;
}

Poly interpolate_points(const std::vector<Scalar>& xs,
                        const std::vector<Scalar>& ys) {
  if (xs.size() != ys.size())
    throw std::invalid_argument("point and value counts differ");
  if (xs.empty()) throw std::invalid_argument("interpolation needs points");
  const ScalarMode mode = xs.front().mode();
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = i + 1; j < xs.size(); ++j)
      if (xs[i] == xs[j])
        throw std::invalid_argument("interpolation points must be distinct");
  Poly acc(mode);
  for (size_t j = 0; j < xs.size(); ++j) {
    Poly basis = Poly::one(mode);
    Scalar denom = Scalar::one_of(mode);
    for (size_t i = 0; i < xs.size(); ++i) {
      if (i == j) continue;
      basis *= Poly(std::vector<Scalar>{-xs[i], Scalar::one_like(xs[i])});
      denom *= xs[j] - xs[i];
    }
    acc += Poly::constant(ys[j] / denom) * basis;
  }
  return acc;
}

}  // namespace calab
