#pragma once

// Randomized falsification experiments for the gap inequality and a
// multistart derivative-free search for non-trivial root-sharing
// configurations.  Everything here is reproducible: streams are keyed by
// (seed, trial), parallel execution changes timing only.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "calab/ca.hpp"
#include "calab/roots.hpp"
#include "calab/scalar.hpp"

namespace calab {

/// Keyed splitmix64 generator: 64-bit state, one mix per draw.  Identical
/// construction gives bit-identical streams on every platform (no library
/// distributions are involved anywhere downstream).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : s_(state) {}
  std::uint64_t next();
  double uniform01();                    // [0, 1)
  double uniform(double lo, double hi);  // [lo, hi)
  Complex64 unit_disk();                 // |z| <= 1, rejection sampled
  Complex64 gaussian_pair();             // independent N(0,1) components
 private:
  std::uint64_t s_;
};

/// Sub-generator for one trial; trials are independent and order-free.
SplitMix64 trial_generator(std::uint64_t seed, std::uint64_t trial);

enum class SampleLaw { uniform_unit_disk, gaussian, real_interval };

struct SampleConfig {
  int degree = 2;
  long long trials = 1;
  std::uint64_t seed = 0;
  SampleLaw law = SampleLaw::uniform_unit_disk;
};

/// The multiset for one trial (degree simple float roots).  Pure in
/// (cfg, trial): any subset of trials can be regenerated independently.
RootMultiset sample_at(const SampleConfig& cfg, long long trial);

/// All trials materialized in order.
std::vector<RootMultiset> sample_roots(const SampleConfig& cfg);

/// Runs fn(i) for i in [0, count); thread count only affects scheduling.
/// Callers write results into per-index slots so merges are deterministic.
void parallel_for(long long count, int threads,
                  const std::function<void(long long)>& fn);

/// Gap-inequality survey.  Violations are gaps below -1e-9; equality cases
/// (|gap| <= 1e-9) additionally record whether the sampled roots are
/// collinear through the origin, the inequality's claimed equality regime.
struct SchoenbergSummary {
  SampleConfig config;
  double min_gap = 0.0;
  long long min_gap_trial = -1;
  long long violation_count = 0;
  long long equality_count = 0;
  struct EqualityCase {
    long long trial = 0;
    double gap = 0.0;
    bool collinear = false;
  };
  std::vector<EqualityCase> equality_cases;
};

SchoenbergSummary schoenberg_experiment(const SampleConfig& cfg,
                                        int threads = 1);

/// Root-sharing residual of the monic polynomial with the given roots:
/// sum over derivative orders j = 1..n-1 of min over roots w of f^{(j)} of
/// |f(w)|^2 (product form), normalized by (1 + max coefficient magnitude)^2.
/// Exactly zero when all roots coincide.  Root-finder failures score as a
/// huge finite value rather than throwing, so search loops stay total.
double ca_objective(const std::vector<Scalar>& roots);

struct SearchConfig {
  int degree = 4;
  int restarts = 10;
  int max_iterations = 2000;
  double objective_tolerance = 1e-10;
  double dispersion_threshold = 1e-6;
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
  double simplex_edge = 0.3;
  std::uint64_t seed = 0;
};

enum class BasinClass { trivial_basin, candidate, non_converged };
const char* basin_name(BasinClass c);

struct RestartSummary {
  int restart = 0;
  double best_objective = 0.0;
  double dispersion = 0.0;
  int iterations = 0;
  BasinClass classification = BasinClass::non_converged;
  /// Best-so-far objective per iteration of the primary descent (monotone
  /// non-increasing); the confirmation/collapse follow-up reports through
  /// the summary fields only.
  std::vector<double> best_history;
};

/// classification is a function of (best_objective, dispersion):
/// candidate when best_objective < objective_tolerance and dispersion >
/// dispersion_threshold, trivial_basin when best_objective <
/// objective_tolerance and dispersion <= dispersion_threshold,
/// non_converged otherwise.
struct SearchResult {
  double best_objective = 0.0;
  std::vector<Scalar> argmin_roots;
  double dispersion = 0.0;
  BasinClass classification = BasinClass::non_converged;
  std::vector<RestartSummary> trace;
  std::uint64_t seed = 0;
  int best_restart = -1;
  bool exact_confirmed = false;
};

/// Multistart Nelder-Mead over the 2(degree-1) real coordinates of the
/// movable roots (the first root is pinned at 0 by shift freedom).  A
/// restart that drops below tolerance is restated at max|root| = 1 and
/// polished there; a shape whose conditions survive at unit scale is
/// rounded to small rationals and re-checked exactly, and only an exact
/// verdict keeps it a sighting.  Everything else follows the objective's
/// own strict descent into the all-roots-equal basin and reports
/// trivial_basin once its dispersion clears the threshold.
SearchResult ca_search(const SearchConfig& cfg, int threads = 1);

/// Nearest rational with denominator <= max_denominator (continued
/// fractions); nullopt for non-finite input.
std::optional<Rational> rationalize(double x, long long max_denominator);

}  // namespace calab
