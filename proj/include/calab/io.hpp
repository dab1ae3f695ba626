#pragma once

// File-based I/O: the JSON schemas for polynomials and node lists, report
// serialization to JSON and CSV, atomic file writes, and the per-run
// manifest.  Writers format floats with 17 significant digits (lossless
// binary64 round-trip) and keep exact values as rational strings, so
// exact-mode outputs are byte-identical across reruns.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "calab/ca.hpp"
#include "calab/explorer.hpp"
#include "calab/goncharov.hpp"
#include "calab/identities.hpp"
#include "calab/poly.hpp"

namespace calab {

inline constexpr const char* kToolVersion = "0.1.0";

/// Whole file as bytes; failures throw std::runtime_error naming the path
/// and the OS detail.
std::string read_text_file(const std::string& path);

/// Writes via a sibling temp file and rename, so readers never observe a
/// partial file; failures throw std::runtime_error with path + OS detail.
void write_text_atomic(const std::string& path, const std::string& content);

/// FNV-1a 64-bit content digest (manifest bookkeeping, not cryptographic).
std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t value);

struct ParsedPoly {
  Poly poly;
  std::vector<std::string> warnings;
};
/// Schema {"coeffs": [{"re": r, "im": i}, ...]} ascending; parts are exact
/// rational strings or JSON numbers (floats).  A file mixing both promotes
/// everything to float with a warning; a trimmed leading zero warns; "1/0"
/// or any malformed field throws std::domain_error naming the field.
/// origin labels error messages (typically the file path).
ParsedPoly parse_poly_json(const std::string& text, const std::string& origin);
ParsedPoly load_poly_json(const std::string& path);

struct ParsedNodes {
  NodeSequence nodes;
  std::vector<std::string> warnings;
};
/// Schema {"nodes": [<complex>, ...]} with the same element grammar.
ParsedNodes parse_nodes_json(const std::string& text,
                             const std::string& origin);
ParsedNodes load_nodes_json(const std::string& path);

std::string poly_to_json(const Poly& f);
std::string nodes_to_json(const NodeSequence& nodes);
std::string identity_report_json(const IdentityReport& rep);
std::string ca_report_json(const CAReport& rep);
std::string schoenberg_summary_json(const SchoenbergSummary& s);
std::string search_result_json(const SearchResult& r);

/// One CSV line with RFC-4180 quoting, terminated by '\n'.
std::string csv_row(const std::vector<std::string>& cells);

/// Reproducibility record written alongside every command's outputs.
struct RunManifest {
  std::string command;
  std::vector<std::string> invocation;  // argv echo
  std::string version = kToolVersion;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> config;  // flag, value
  std::vector<std::pair<std::string, std::string>> inputs;  // path, digest
  std::string started_at;   // UTC, ISO 8601
  std::string finished_at;
};
std::string manifest_to_json(const RunManifest& m);
std::string utc_timestamp_now();

}  // namespace calab
