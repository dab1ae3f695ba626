#include "calab/io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace calab {

namespace {

using nlohmann::json;

[[noreturn]] void io_fail(const std::string& what, const std::string& path) {
  throw std::runtime_error(what + ": " + path + ": " + std::strerror(errno));
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  return out;
}

std::string quoted(const std::string& s) { return "\"" + json_escape(s) + "\""; }

/// One real component parsed from a JSON value: exact rational from a
/// strict "p" / "p/q" string, float from a number.
struct Part {
  bool exact = false;
  Rational q;
  double d = 0.0;
};

Part parse_part(const json& v, const std::string& origin,
                const std::string& field) {
  Part part;
  if (v.is_number()) {
    part.exact = false;
    part.d = v.get<double>();
    return part;
  }
  if (!v.is_string())
    throw std::domain_error(origin + ": " + field +
                            ": expected a rational string or a number");
  const std::string s = v.get<std::string>();
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) negative = s[i++] == '-';
  std::size_t digits_start = i;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
  if (i == digits_start)
    throw std::domain_error(origin + ": " + field + ": malformed rational \"" +
                            s + "\"");
  const std::string num = s.substr(digits_start, i - digits_start);
  std::string den = "1";
  if (i < s.size()) {
    if (s[i] != '/')
      throw std::domain_error(origin + ": " + field + ": malformed rational \"" +
                              s + "\"");
    std::size_t den_start = ++i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i != s.size() || i == den_start)
      throw std::domain_error(origin + ": " + field + ": malformed rational \"" +
                              s + "\"");
    den = s.substr(den_start);
  }
  boost::multiprecision::cpp_int d_int(den);
  if (d_int == 0)
    throw std::domain_error(origin + ": " + field + ": zero denominator in \"" +
                            s + "\"");
  boost::multiprecision::cpp_int n_int(num);
  if (negative) n_int = -n_int;
  part.exact = true;
  part.q = Rational(n_int, d_int);
  return part;
}

struct ParsedList {
  std::vector<Scalar> values;
  std::vector<std::string> warnings;
};

/// Shared element grammar for coefficient and node arrays.
ParsedList parse_complex_array(const json& arr, const std::string& origin,
                               const std::string& array_name) {
  struct Pair {
    Part re, im;
  };
  std::vector<Pair> raw;
  raw.reserve(arr.size());
  bool any_exact = false, any_float = false;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const std::string base = array_name + "[" + std::to_string(k) + "]";
    const json& e = arr[k];
    if (!e.is_object() || !e.contains("re") || !e.contains("im"))
      throw std::domain_error(origin + ": " + base +
                              ": expected an object with re and im");
    Pair p{parse_part(e["re"], origin, base + ".re"),
           parse_part(e["im"], origin, base + ".im")};
    any_exact |= p.re.exact || p.im.exact;
    any_float |= !p.re.exact || !p.im.exact;
    raw.push_back(std::move(p));
  }
  ParsedList out;
  if (any_exact && any_float)
    out.warnings.push_back(origin + ": " + array_name +
                           ": mixed exact and float entries; all promoted to "
                           "float");
  const bool as_exact = any_exact && !any_float;
  out.values.reserve(raw.size());
  for (const auto& p : raw) {
    if (as_exact) {
      out.values.push_back(Scalar(GaussianRational{p.re.q, p.im.q}));
    } else {
      double re = p.re.exact ? rational_to_double(p.re.q) : p.re.d;
      double im = p.im.exact ? rational_to_double(p.im.q) : p.im.d;
      out.values.push_back(Scalar(Complex64(re, im)));
    }
  }
  return out;
}

json parse_document(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::domain_error(origin + ": malformed JSON: " + e.what());
  }
}

std::string complex_json(const Scalar& s) {
  std::string re, im;
  if (s.is_exact()) {
    const GaussianRational& g = s.exact();
    re = quoted(render_rational(g.re));
    im = quoted(render_rational(g.im));
  } else {
    Complex64 z = to_float(s);
    re = render_double(z.real());
    im = render_double(z.imag());
  }
  return "{\"re\":" + re + ",\"im\":" + im + "}";
}

std::string complex_array_json(const std::vector<Scalar>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += complex_json(values[i]);
  }
  return out + "]";
}

const char* law_label(SampleLaw law) {
  switch (law) {
    case SampleLaw::uniform_unit_disk: return "uniform-unit-disk";
    case SampleLaw::gaussian: return "gaussian";
    case SampleLaw::real_interval: return "real-interval";
  }
  return "unknown";
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) io_fail("cannot open", path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) io_fail("cannot read", path);
  return std::move(buf).str();
}

void write_text_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) io_fail("cannot create", tmp);
    out.write(content.data(),
              static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::remove(tmp.c_str());
      io_fail("cannot write", tmp);
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    io_fail("cannot rename into place", path);
  }
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(value));
  return std::string(buf);
}

ParsedPoly parse_poly_json(const std::string& text, const std::string& origin) {
  json doc = parse_document(text, origin);
  if (!doc.is_object() || !doc.contains("coeffs") || !doc["coeffs"].is_array())
    throw std::domain_error(origin + ": coeffs: expected an object with a "
                            "coeffs array");
  ParsedList list = parse_complex_array(doc["coeffs"], origin, "coeffs");
  ParsedPoly out;
  out.warnings = std::move(list.warnings);
  if (!list.values.empty() && list.values.back().is_zero())
    out.warnings.push_back(origin +
                           ": coeffs: leading zero coefficient trimmed");
  out.poly = Poly(std::move(list.values));
  return out;
}

ParsedPoly load_poly_json(const std::string& path) {
  return parse_poly_json(read_text_file(path), path);
}

ParsedNodes parse_nodes_json(const std::string& text,
                             const std::string& origin) {
  json doc = parse_document(text, origin);
  if (!doc.is_object() || !doc.contains("nodes") || !doc["nodes"].is_array())
    throw std::domain_error(origin + ": nodes: expected an object with a "
                            "nodes array");
  ParsedList list = parse_complex_array(doc["nodes"], origin, "nodes");
  if (list.values.empty())
    throw std::domain_error(origin + ": nodes: must not be empty");
  ParsedNodes out{NodeSequence(std::move(list.values)),
                  std::move(list.warnings)};
  return out;
}

ParsedNodes load_nodes_json(const std::string& path) {
  return parse_nodes_json(read_text_file(path), path);
}

std::string poly_to_json(const Poly& f) {
  return "{\"coeffs\":" + complex_array_json(f.coeffs()) + "}\n";
}

std::string nodes_to_json(const NodeSequence& nodes) {
  return "{\"nodes\":" + complex_array_json(nodes.values()) + "}\n";
}

std::string identity_report_json(const IdentityReport& rep) {
  std::string out = "{";
  out += "\"identity\":" + quoted(identity_name(rep.id));
  out += ",\"lhs\":" + complex_json(rep.lhs);
  out += ",\"rhs\":" + complex_json(rep.rhs);
  out += ",\"residual\":" + render_double(rep.residual);
  out += ",\"scale\":" + render_double(rep.scale);
  out += std::string(",\"passed\":") + (rep.passed ? "true" : "false");
  out += std::string(",\"outside_hypothesis\":") +
         (rep.outside_hypothesis ? "true" : "false");
  return out + "}\n";
}

std::string ca_report_json(const CAReport& rep) {
  std::string out = "{";
  out += "\"degree\":" + std::to_string(rep.degree);
  out += std::string(",\"method\":") +
         (rep.method == AnalysisMode::exact ? "\"exact\"" : "\"numeric\"");
  out += ",\"verdict\":" + quoted(verdict_name(rep.verdict));
  out += ",\"orders\":[";
  for (std::size_t i = 0; i < rep.orders.size(); ++i) {
    const auto& o = rep.orders[i];
    if (i) out += ",";
    out += "{\"order\":" + std::to_string(o.order);
    out += ",\"derivative_roots\":" + complex_array_json(o.derivative_roots);
    out += ",\"shared\":" + complex_array_json(o.shared_set);
    out += ",\"shared_count\":" + std::to_string(o.shared_count) + "}";
  }
  return out + "]}\n";
}

std::string schoenberg_summary_json(const SchoenbergSummary& s) {
  std::string out = "{";
  out += "\"degree\":" + std::to_string(s.config.degree);
  out += ",\"trials\":" + std::to_string(s.config.trials);
  out += ",\"seed\":" + std::to_string(s.config.seed);
  out += ",\"law\":" + quoted(law_label(s.config.law));
  out += ",\"min_gap\":" + render_double(s.min_gap);
  out += ",\"min_gap_trial\":" + std::to_string(s.min_gap_trial);
  out += ",\"violation_count\":" + std::to_string(s.violation_count);
  out += ",\"equality_count\":" + std::to_string(s.equality_count);
  out += ",\"equality_cases\":[";
  for (std::size_t i = 0; i < s.equality_cases.size(); ++i) {
    const auto& e = s.equality_cases[i];
    if (i) out += ",";
    out += "{\"trial\":" + std::to_string(e.trial);
    out += ",\"gap\":" + render_double(e.gap);
    out += std::string(",\"collinear\":") + (e.collinear ? "true" : "false");
    out += "}";
  }
  return out + "]}\n";
}

std::string search_result_json(const SearchResult& r) {
  std::string out = "{";
  out += "\"best_objective\":" + render_double(r.best_objective);
  out += ",\"dispersion\":" + render_double(r.dispersion);
  out += ",\"classification\":" + quoted(basin_name(r.classification));
  out += ",\"seed\":" + std::to_string(r.seed);
  out += ",\"best_restart\":" + std::to_string(r.best_restart);
  out += std::string(",\"exact_confirmed\":") +
         (r.exact_confirmed ? "true" : "false");
  out += ",\"argmin_roots\":" + complex_array_json(r.argmin_roots);
  out += ",\"restarts\":[";
  for (std::size_t i = 0; i < r.trace.size(); ++i) {
    const auto& t = r.trace[i];
    if (i) out += ",";
    out += "{\"restart\":" + std::to_string(t.restart);
    out += ",\"best_objective\":" + render_double(t.best_objective);
    out += ",\"dispersion\":" + render_double(t.dispersion);
    out += ",\"iterations\":" + std::to_string(t.iterations);
    out += ",\"classification\":" + quoted(basin_name(t.classification)) + "}";
  }
  return out + "]}\n";
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ",";
    const std::string& c = cells[i];
    if (c.find_first_of(",\"\n\r") != std::string::npos) {
      out += '"';
      for (char ch : c) {
        if (ch == '"') out += '"';
        out += ch;
      }
      out += '"';
    } else {
      out += c;
    }
  }
  return out + "\n";
}

std::string manifest_to_json(const RunManifest& m) {
  std::string out = "{";
  out += "\"command\":" + quoted(m.command);
  out += ",\"invocation\":[";
  for (std::size_t i = 0; i < m.invocation.size(); ++i) {
    if (i) out += ",";
    out += quoted(m.invocation[i]);
  }
  out += "]";
  out += ",\"version\":" + quoted(m.version);
  out += ",\"seed\":" + std::to_string(m.seed);
  out += ",\"config\":[";
  for (std::size_t i = 0; i < m.config.size(); ++i) {
    if (i) out += ",";
    out += "{\"flag\":" + quoted(m.config[i].first) +
           ",\"value\":" + quoted(m.config[i].second) + "}";
  }
  out += "]";
  out += ",\"inputs\":[";
  for (std::size_t i = 0; i < m.inputs.size(); ++i) {
    if (i) out += ",";
    out += "{\"path\":" + quoted(m.inputs[i].first) +
           ",\"fnv1a64\":" + quoted(m.inputs[i].second) + "}";
  }
  out += "]";
  out += ",\"started_at\":" + quoted(m.started_at);
  out += ",\"finished_at\":" + quoted(m.finished_at);
  return out + "}\n";
}

std::string utc_timestamp_now() {
  std::time_t now = std::time(nullptr);
  std::tm tm_utc;
  gmtime_r(&now, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return std::string(buf);
}

}  // namespace calab
