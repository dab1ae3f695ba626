// Command-line entry point: construction, identity verification, shared-root
// analysis, bounds, the gap experiment, and the root-sharing search, all with
// file-based reproducible I/O.  Exit codes: 0 = all checks passed, 1 = at
// least one failed check or a flagged verdict, 2 = usage or I/O error.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "calab/ca.hpp"
#include "calab/explorer.hpp"
#include "calab/goncharov.hpp"
#include "calab/identities.hpp"
#include "calab/io.hpp"
#include "calab/poly.hpp"
#include "calab/roots.hpp"

namespace {

using namespace calab;

struct Globals {
  double tol_abs = 1e-10;
  double tol_rel = 1e-10;
  bool force_exact = false;
  bool force_float = false;
  std::uint64_t seed = 0;
  std::string out_dir = ".";
  int threads = 1;
  std::vector<std::string> invocation;

  Tolerance tol() const { return Tolerance{tol_abs, tol_rel}; }
};

std::string out_path(const Globals& g, const std::string& name) {
  std::filesystem::create_directories(g.out_dir);
  return (std::filesystem::path(g.out_dir) / name).string();
}

/// Collects the manifest while a command runs; written once with outputs.
struct ManifestScope {
  RunManifest m;
  const Globals* g;

  ManifestScope(const std::string& command, const Globals& globals)
      : g(&globals) {
    m.command = command;
    m.invocation = globals.invocation;
    m.seed = globals.seed;
    m.started_at = utc_timestamp_now();
  }
  void config(const std::string& flag, const std::string& value) {
    m.config.emplace_back(flag, value);
  }
  void input(const std::string& path, const std::string& content) {
    m.inputs.emplace_back(path, hex64(fnv1a64(content)));
  }
  void write() {
    m.finished_at = utc_timestamp_now();
    write_text_atomic(out_path(*g, "run_manifest.json"), manifest_to_json(m));
  }
};

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
}

Poly coerce_mode(const Poly& f, const Globals& g) {
  if (g.force_float && f.is_exact()) return f.to_float_poly();
  if (g.force_exact && !f.is_exact())
    throw ModeError("--exact requested but the input is floating point");
  return f;
}

NodeSequence coerce_mode(const NodeSequence& nodes, const Globals& g) {
  if (g.force_float && nodes.mode() == ScalarMode::exact) {
    std::vector<Scalar> vals;
    vals.reserve(nodes.values().size());
    for (const auto& v : nodes.values()) vals.push_back(Scalar(to_float(v)));
    return NodeSequence(std::move(vals));
  }
  if (g.force_exact && nodes.mode() != ScalarMode::exact)
    throw ModeError("--exact requested but the input is floating point");
  return nodes;
}

// ---------------------------------------------------------------- goncharov

int run_goncharov(const Globals& g, const std::string& nodes_path,
                  const std::string& method) {
  ManifestScope manifest("goncharov", g);
  manifest.config("--nodes", nodes_path);
  manifest.config("--method", method);

  std::string text = read_text_file(nodes_path);
  manifest.input(nodes_path, text);
  ParsedNodes parsed = parse_nodes_json(text, nodes_path);
  print_warnings(parsed.warnings);
  NodeSequence nodes = coerce_mode(parsed.nodes, g);

  struct Entry {
    const char* name;
    Poly poly;
  };
  std::vector<Entry> built;
  bool expand_skipped = false;
  const bool want_all = method == "all";
  if (want_all || method == "recurrence")
    built.push_back({"recurrence", goncharov_recurrence(nodes)});
  if (want_all || method == "integral")
    built.push_back({"integral", goncharov_integral(nodes)});
  if (want_all || method == "determinant" || method == "expand") {
    if (nodes.values().front().is_zero()) {
      built.push_back({"determinant", goncharov_expand(nodes)});
    } else if (want_all) {
      expand_skipped = true;  // that construction needs the first node at 0
    } else {
      throw std::domain_error(
          "the determinant construction needs the first node equal to 0");
    }
  }

  double max_residual = 0.0;
  bool agree = true;
  const Tolerance tol = g.tol();
  for (std::size_t a = 0; a < built.size(); ++a)
    for (std::size_t b = a + 1; b < built.size(); ++b) {
      const Poly& pa = built[a].poly;
      const Poly& pb = built[b].poly;
      if (pa.is_exact() && pb.is_exact()) {
        if (!(pa == pb)) agree = false;
        continue;
      }
      double scale = 0.0;
      for (const auto& c : pa.coeffs()) scale = std::max(scale, abs_value(c));
      int top = std::max(pa.degree(), pb.degree());
      for (int k = 0; k <= top; ++k) {
        double d = std::abs(to_float(pa.coeff(k)) - to_float(pb.coeff(k)));
        max_residual = std::max(max_residual, d);
        if (!tol.within(d, scale)) agree = false;
      }
    }

  const Poly& result = built.front().poly;
  write_text_atomic(out_path(g, "goncharov_poly.json"), poly_to_json(result));
  std::string report = "{\"degree\":" + std::to_string(nodes.degree());
  report += ",\"methods\":[";
  for (std::size_t i = 0; i < built.size(); ++i) {
    if (i) report += ",";
    report += "\"" + std::string(built[i].name) + "\"";
  }
  report += "]";
  report += std::string(",\"determinant_skipped\":") +
            (expand_skipped ? "true" : "false");
  report += std::string(",\"agree\":") + (agree ? "true" : "false");
  report += ",\"max_residual\":" + render_double(max_residual) + "}\n";
  write_text_atomic(out_path(g, "goncharov_agreement.json"), report);
  manifest.write();

  std::printf("degree %d, methods %zu%s, agreement %s (max residual %.3g)\n",
              nodes.degree(), built.size(),
              expand_skipped ? " (determinant skipped: first node != 0)" : "",
              agree ? "yes" : "NO", max_residual);
  return agree ? 0 : 1;
}

// ------------------------------------------------------------------- verify

std::optional<IdentityId> id_from_name(const std::string& name) {
  static const IdentityId all[] = {
      IdentityId::EQ19, IdentityId::EQ20, IdentityId::EQ21, IdentityId::EQ22,
      IdentityId::EQ24, IdentityId::EQ25, IdentityId::EQ26, IdentityId::EQ27,
      IdentityId::EQ28, IdentityId::EQ30, IdentityId::EQ31, IdentityId::EQ33,
      IdentityId::EQ34};
  for (IdentityId id : all)
    if (name == identity_name(id)) return id;
  return std::nullopt;
}

Poly poly_from_points(const std::vector<Complex64>& pts) {
  std::vector<Scalar> roots;
  roots.reserve(pts.size());
  for (const auto& p : pts) roots.push_back(Scalar(p));
  return Poly::from_roots(roots, ScalarMode::floating);
}

RootMultiset multiset_from_points(const std::vector<Complex64>& pts) {
  RootMultiset ms;
  ms.degree = static_cast<int>(pts.size());
  for (const auto& p : pts)
    ms.entries.push_back(RootMultiset::Entry{Scalar(p), 1});
  return ms;
}

std::vector<Complex64> draw_points(SplitMix64& g, int n, bool real_line) {
  std::vector<Complex64> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    pts.push_back(real_line ? Complex64(g.uniform(-1.0, 1.0), 0.0)
                            : g.unit_disk());
  return pts;
}

/// One sweep attempt; nullopt when the drawn sample misses the identity's
/// hypothesis (the sweep draws a replacement).
std::optional<IdentityReport> verify_trial(IdentityId id, int n, long long t,
                                           std::uint64_t seed,
                                           const Tolerance& tol) {
  SplitMix64 g = trial_generator(seed, static_cast<std::uint64_t>(t));
  switch (id) {
    case IdentityId::EQ19: {
      std::vector<Scalar> vals;
      vals.push_back(Scalar(Complex64(0.0, 0.0)));
      for (int i = 1; i < n; ++i) vals.push_back(Scalar(g.unit_disk()));
      NodeSequence nodes(std::move(vals));
      std::vector<Scalar> points;
      for (int i = 0; i < 3; ++i) points.push_back(Scalar(g.unit_disk()));
      return newton_like_aggregate(nodes, points, tol);
    }
    case IdentityId::EQ20: {
      // Paired roots plus zeros make the mean land on the zero entry.
      RootMultiset ms;
      ms.degree = n;
      int pairs = (n - 1) / 2;
      for (int i = 0; i < pairs; ++i) {
        Complex64 w = g.unit_disk();
        ms.entries.push_back(RootMultiset::Entry{Scalar(w), 1});
        ms.entries.push_back(RootMultiset::Entry{Scalar(-w), 1});
      }
      ms.entries.push_back(
          RootMultiset::Entry{Scalar(Complex64(0.0, 0.0)), n - 2 * pairs});
      return viete_check(ms, Scalar(Complex64(0.0, 0.0)), tol);
    }
    case IdentityId::EQ21: {
      Poly f = poly_from_points(draw_points(g, n, false));
      int m = 1 + static_cast<int>(t % (n - 2));
      Scalar z(g.unit_disk());
      SubcentroidChoice choice =
          t % 2 == 0 ? SubcentroidChoice::plus : SubcentroidChoice::minus;
      return sz_nagy_check(f, m, z, choice, tol);
    }
    case IdentityId::EQ22:
      return moment_identity(poly_from_points(draw_points(g, n, false)),
                             IdentityId::EQ22, MomentParams{}, tol);
    case IdentityId::EQ24:
    case IdentityId::EQ25: {
      std::vector<Complex64> pts = draw_points(g, n, false);
      return moment_identity(poly_from_points(pts), id,
                             multiset_from_points(pts), MomentParams{}, tol);
    }
    case IdentityId::EQ26:
    case IdentityId::EQ27: {
      std::vector<Complex64> pts = draw_points(g, n, true);
      return moment_identity(poly_from_points(pts), id,
                             multiset_from_points(pts), MomentParams{}, tol);
    }
    case IdentityId::EQ28: {
      std::vector<Complex64> pts = draw_points(g, n, true);
      try {
        return moment_identity(poly_from_points(pts), id,
                               multiset_from_points(pts), MomentParams{}, tol);
      } catch (const std::domain_error&) {
        return std::nullopt;  // no opposite-sign subcentroid root this draw
      }
    }
    case IdentityId::EQ30: {
      MomentParams p;
      p.m = static_cast<int>(t % (n + 1));
      return moment_identity(poly_from_points(draw_points(g, n, false)),
                             IdentityId::EQ30, p, tol);
    }
    case IdentityId::EQ31: {
      Poly f = poly_from_points(draw_points(g, n, false));
      Scalar z(2.0 * g.unit_disk());
      int m = static_cast<int>(t % 6);
      try {
        return hoppe_log_derivative(f, m, z, tol);
      } catch (const std::domain_error&) {
        return std::nullopt;  // z fell on a root
      }
    }
    case IdentityId::EQ33: {
      Poly f = poly_from_points(draw_points(g, n, true));
      Scalar x(g.uniform(-2.0, 2.0));
      return laguerre_check(f, x, tol);
    }
    case IdentityId::EQ34: {
      MomentParams p;
      int s = 2 + static_cast<int>(t % (n - 2));
      p.s = s;
      p.m = static_cast<int>(t % (n - s));
      return moment_identity(poly_from_points(draw_points(g, n, false)),
                             IdentityId::EQ34, p, tol);
    }
    default:
      throw std::domain_error("identity not supported by the sweep");
  }
}

int run_verify(const Globals& g, const std::string& identity, long long trials,
               int degree) {
  std::optional<IdentityId> id = id_from_name(identity);
  if (!id) throw std::domain_error("unknown identity id: " + identity);
  int min_degree = 2;
  if (*id == IdentityId::EQ21 || *id == IdentityId::EQ34) min_degree = 3;
  if (degree < min_degree)
    throw std::domain_error(identity + " needs degree >= " +
                            std::to_string(min_degree));

  ManifestScope manifest("verify", g);
  manifest.config("--identity", identity);
  manifest.config("--trials", std::to_string(trials));
  manifest.config("--degree", std::to_string(degree));

  std::string csv =
      csv_row({"identity_id", "degree", "seed", "residual", "scale", "passed"});
  long long rows = 0, failures = 0, skipped = 0;
  double max_residual = 0.0;
  const long long max_attempts = 20 * trials + 100;
  for (long long t = 0; rows < trials && t < max_attempts; ++t) {
    std::optional<IdentityReport> rep =
        verify_trial(*id, degree, t, g.seed, g.tol());
    if (!rep) {
      ++skipped;
      continue;
    }
    ++rows;
    if (!rep->passed) ++failures;
    if (!rep->outside_hypothesis)
      max_residual = std::max(max_residual, rep->residual);
    csv += csv_row({identity, std::to_string(degree), std::to_string(g.seed),
                    render_double(rep->residual), render_double(rep->scale),
                    rep->passed ? "true" : "false"});
  }
  std::string csv_name = "verify_" + identity + ".csv";
  write_text_atomic(out_path(g, csv_name), csv);
  manifest.write();

  std::string skip_note =
      skipped ? " (" + std::to_string(skipped) + " draws outside hypothesis)"
              : std::string();
  std::printf("%s degree %d: %lld/%lld passed, max residual %.3g%s\n",
              identity.c_str(), degree, rows - failures, rows, max_residual,
              skip_note.c_str());
  if (rows < trials) {
    std::fprintf(stderr, "error: only %lld of %lld applicable samples found\n",
                 rows, trials);
    return 2;
  }
  return failures == 0 ? 0 : 1;
}

// -------------------------------------------------------------------- check

int run_check(const Globals& g, const std::string& poly_path) {
  ManifestScope manifest("check", g);
  manifest.config("--poly", poly_path);

  std::string text = read_text_file(poly_path);
  manifest.input(poly_path, text);
  ParsedPoly parsed = parse_poly_json(text, poly_path);
  print_warnings(parsed.warnings);
  Poly f = coerce_mode(parsed.poly, g);

  AnalysisMode mode =
      f.is_exact() && !g.force_float ? AnalysisMode::exact : AnalysisMode::numeric;
  CAReport report = ca_check(f, mode, g.tol());

  std::printf("degree %d, %s analysis, verdict: %s\n", report.degree,
              mode == AnalysisMode::exact ? "exact" : "numeric",
              verdict_name(report.verdict));
  std::printf("%-6s %-7s %-7s %s\n", "order", "#roots", "#shared", "shared values");
  for (const auto& o : report.orders) {
    std::string shared;
    for (std::size_t i = 0; i < o.shared_set.size(); ++i) {
      if (i) shared += "  ";
      shared += render_scalar(o.shared_set[i]);
    }
    std::printf("%-6d %-7zu %-7d %s\n", o.order, o.derivative_roots.size(),
                o.shared_count, shared.c_str());
  }
  write_text_atomic(out_path(g, "ca_report.json"), ca_report_json(report));
  manifest.write();

  // A non-trivial full-sharing verdict is the result that demands attention.
  return report.verdict == CAVerdict::CA_candidate ? 1 : 0;
}

// ------------------------------------------------------------------- bounds

int run_bounds(const Globals& g, const std::string& nodes_path,
               long long samples, double radius) {
  ManifestScope manifest("bounds", g);
  manifest.config("--nodes", nodes_path);
  manifest.config("--samples", std::to_string(samples));
  manifest.config("--radius", render_double(radius));

  std::string text = read_text_file(nodes_path);
  manifest.input(nodes_path, text);
  ParsedNodes parsed = parse_nodes_json(text, nodes_path);
  print_warnings(parsed.warnings);

  std::vector<Scalar> vals;
  for (const auto& v : parsed.nodes.values()) vals.push_back(Scalar(to_float(v)));
  NodeSequence nodes(std::move(vals));
  Poly gpoly = goncharov_recurrence(nodes);

  std::string csv = csv_row({"sample", "z_re", "z_im", "g_abs", "bound_tight",
                             "bound_classical", "ordered"});
  long long violations = 0, strict_middle = 0;
  for (long long i = 0; i < samples; ++i) {
    SplitMix64 rng = trial_generator(g.seed, static_cast<std::uint64_t>(i));
    Complex64 z = radius * rng.unit_disk();
    Scalar zs{z};
    double ga = abs_value(gpoly.eval(zs));
    double bt = bound_tight(nodes, zs);
    double bc = bound_classical(nodes, zs);
    double slack = g.tol_abs + 1e-9 * std::max(bt, bc);
    bool ordered = ga <= bt + slack && bt <= bc + slack;
    if (!ordered) ++violations;
    if (bt < bc - slack) ++strict_middle;
    csv += csv_row({std::to_string(i), render_double(z.real()),
                    render_double(z.imag()), render_double(ga),
                    render_double(bt), render_double(bc),
                    ordered ? "true" : "false"});
  }
  write_text_atomic(out_path(g, "bounds.csv"), csv);
  manifest.write();

  std::printf(
      "%lld samples: %lld ordering violations, strict middle inequality in "
      "%lld (%.1f%%)\n",
      samples, violations, strict_middle,
      samples ? 100.0 * static_cast<double>(strict_middle) /
                    static_cast<double>(samples)
              : 0.0);
  return violations == 0 ? 0 : 1;
}

// --------------------------------------------------------------- schoenberg

SampleLaw law_from_name(const std::string& name) {
  if (name == "uniform-unit-disk") return SampleLaw::uniform_unit_disk;
  if (name == "gaussian") return SampleLaw::gaussian;
  if (name == "real-interval") return SampleLaw::real_interval;
  throw std::domain_error("unknown distribution: " + name);
}

int run_schoenberg(const Globals& g, int degree, long long trials,
                   const std::string& law) {
  ManifestScope manifest("schoenberg", g);
  manifest.config("--degree", std::to_string(degree));
  manifest.config("--trials", std::to_string(trials));
  manifest.config("--law", law);

  SampleConfig cfg;
  cfg.degree = degree;
  cfg.trials = trials;
  cfg.seed = g.seed;
  cfg.law = law_from_name(law);
  SchoenbergSummary summary = schoenberg_experiment(cfg, g.threads);

  std::vector<double> gaps(static_cast<std::size_t>(trials));
  parallel_for(trials, g.threads, [&](long long t) {
    gaps[static_cast<std::size_t>(t)] =
        schoenberg_gap_from_roots(sample_at(cfg, t));
  });
  std::string csv = csv_row({"trial", "seed", "gap"});
  for (long long t = 0; t < trials; ++t)
    csv += csv_row({std::to_string(t), std::to_string(g.seed),
                    render_double(gaps[static_cast<std::size_t>(t)])});
  write_text_atomic(out_path(g, "schoenberg_trials.csv"), csv);
  write_text_atomic(out_path(g, "schoenberg_summary.json"),
                    schoenberg_summary_json(summary));
  manifest.write();

  std::printf(
      "%lld trials at degree %d: min gap %.6g (trial %lld), %lld violations, "
      "%lld equality cases\n",
      trials, degree, summary.min_gap, summary.min_gap_trial,
      summary.violation_count, summary.equality_count);
  return summary.violation_count == 0 ? 0 : 1;
}

// ------------------------------------------------------------------- search

int run_search(const Globals& g, int degree, int restarts, int max_iter,
               double obj_tol, double disp_threshold) {
  ManifestScope manifest("search", g);
  manifest.config("--degree", std::to_string(degree));
  manifest.config("--restarts", std::to_string(restarts));
  manifest.config("--max-iter", std::to_string(max_iter));

  SearchConfig cfg;
  cfg.degree = degree;
  cfg.restarts = restarts;
  cfg.max_iterations = max_iter;
  cfg.objective_tolerance = obj_tol;
  cfg.dispersion_threshold = disp_threshold;
  cfg.seed = g.seed;
  SearchResult result = ca_search(cfg, g.threads);

  std::string csv = csv_row({"restart", "seed", "objective", "dispersion",
                             "iterations", "classification"});
  for (const auto& r : result.trace)
    csv += csv_row({std::to_string(r.restart), std::to_string(g.seed),
                    render_double(r.best_objective),
                    render_double(r.dispersion), std::to_string(r.iterations),
                    basin_name(r.classification)});
  write_text_atomic(out_path(g, "search_restarts.csv"), csv);
  write_text_atomic(out_path(g, "search_result.json"),
                    search_result_json(result));

  if (result.classification == BasinClass::candidate) {
    // Full reproduction bundle for anything that survived confirmation.
    std::filesystem::create_directories(
        std::filesystem::path(g.out_dir) / "findings");
    std::string name = "findings/candidate_seed" + std::to_string(g.seed) +
                       "_restart" + std::to_string(result.best_restart) +
                       ".json";
    write_text_atomic(out_path(g, name), search_result_json(result));
  }
  manifest.write();

  std::printf(
      "degree %d, %d restarts: best objective %.6g, dispersion %.6g, "
      "classification %s%s\n",
      degree, restarts, result.best_objective, result.dispersion,
      basin_name(result.classification),
      result.classification == BasinClass::candidate
          ? (result.exact_confirmed ? " (exactly confirmed)"
                                    : " (exact confirmation failed)")
          : "");
  return result.classification == BasinClass::candidate ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  Globals g;
  if (const char* env = std::getenv("CALAB_THREADS")) g.threads = std::atoi(env);
  for (int i = 0; i < argc; ++i) g.invocation.emplace_back(argv[i]);

  CLI::App app{"Abel-Goncharov interpolation, derivative root-sharing "
               "analysis, and conjecture surveillance"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--tol-abs", g.tol_abs, "absolute tolerance");
  app.add_option("--tol-rel", g.tol_rel, "relative tolerance");
  auto* exact_flag = app.add_flag("--exact", g.force_exact, "require exact arithmetic");
  app.add_flag("--float", g.force_float, "force floating-point arithmetic")
      ->excludes(exact_flag);
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--out", g.out_dir, "output directory");
  app.add_option("--threads", g.threads, "worker thread count");

  std::string nodes_path, method = "all", identity, poly_path;
  std::string law = "uniform-unit-disk";
  long long trials = 100, samples = 100;
  int degree = 6, restarts = 10, max_iter = 2000;
  double radius = 1.0, obj_tol = 1e-10, disp_threshold = 1e-6;

  CLI::App* c_gon = app.add_subcommand("goncharov", "construct interpolation polynomials");
  c_gon->add_option("--nodes", nodes_path, "nodes JSON file")->required();
  c_gon->add_option("--method", method, "recurrence|integral|determinant|all")
      ->check(CLI::IsMember({"recurrence", "integral", "determinant", "expand", "all"}));

  CLI::App* c_ver = app.add_subcommand("verify", "randomized identity sweeps");
  c_ver->add_option("--identity", identity, "identity id (e.g. EQ21)")->required();
  c_ver->add_option("--trials", trials, "number of samples");
  c_ver->add_option("--degree", degree, "polynomial degree");

  CLI::App* c_chk = app.add_subcommand("check", "derivative root-sharing analysis");
  c_chk->add_option("--poly", poly_path, "polynomial JSON file")->required();

  CLI::App* c_bnd = app.add_subcommand("bounds", "evaluate both magnitude bounds");
  c_bnd->add_option("--nodes", nodes_path, "nodes JSON file")->required();
  c_bnd->add_option("--samples", samples, "number of z samples");
  c_bnd->add_option("--radius", radius, "sampling disk radius");

  CLI::App* c_sch = app.add_subcommand("schoenberg", "gap inequality experiment");
  c_sch->add_option("--degree", degree, "polynomial degree");
  c_sch->add_option("--trials", trials, "number of samples");
  c_sch->add_option("--law", law, "uniform-unit-disk|gaussian|real-interval");

  CLI::App* c_sea = app.add_subcommand("search", "multistart root-sharing search");
  c_sea->add_option("--degree", degree, "polynomial degree");
  c_sea->add_option("--restarts", restarts, "number of restarts");
  c_sea->add_option("--max-iter", max_iter, "iteration cap per restart");
  c_sea->add_option("--obj-tol", obj_tol, "objective tolerance");
  c_sea->add_option("--disp-threshold", disp_threshold, "dispersion threshold");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // help goes to stdout, exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the usage message
    return 2;
  }

  try {
    if (c_gon->parsed()) return run_goncharov(g, nodes_path, method);
    if (c_ver->parsed()) return run_verify(g, identity, trials, degree);
    if (c_chk->parsed()) return run_check(g, poly_path);
    if (c_bnd->parsed()) return run_bounds(g, nodes_path, samples, radius);
    if (c_sch->parsed()) return run_schoenberg(g, degree, trials, law);
    if (c_sea->parsed()) return run_search(g, degree, restarts, max_iter,
                                           obj_tol, disp_threshold);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;  // no subcommand matched (require_subcommand should prevent this)
}
