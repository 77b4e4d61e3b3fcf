#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nee/bounds.hpp"
#include "nee/decimation.hpp"
#include "nee/fractal.hpp"
#include "nee/graph.hpp"

namespace nee {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Shortest general-notation rendering with `digits` significant digits.
// Locale-independent.
inline std::string format_significant(double x, int digits) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, digits);
  return std::string(buf, res.ptr);
}

// Spectra are printed with 15 significant digits; magnitudes below this are
// solver noise around an exact zero and print as "0".
inline constexpr double kPrintZero = 1e-13;

inline std::string format_eigenvalue(double x) {
  return format_significant(std::abs(x) < kPrintZero ? 0.0 : x, 15);
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::size_t parse_count(std::string_view tok, std::size_t line) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  return v;
}

}  // namespace detail

// Edge-list text format:
//   # comment lines anywhere; blank lines ignored
//   N <count>
//   <u> <v>        one edge per line, 0-based
inline Graph read_edge_list(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::size_t> order;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto tok = detail::split_ws(line);
    if (!order) {
      if (tok.size() != 2 || tok[0] != "N") throw ParseError(line_no, "expected header 'N <count>'");
      order = detail::parse_count(tok[1], line_no);
      continue;
    }
    if (tok.size() != 2) throw ParseError(line_no, "expected '<u> <v>'");
    pairs.emplace_back(detail::parse_count(tok[0], line_no), detail::parse_count(tok[1], line_no));
  }
  if (!order) throw ParseError(line_no, "missing header 'N <count>'");
  try {
    return Graph(*order, pairs);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << "N " << g.order() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline void write_fractal(std::ostream& out, const FractalGraph& f) {
  out << "# fractal G_n(m) m=" << f.m << " n=" << f.n << '\n';
  out << "# inmost ";
  if (f.inmost) out << *f.inmost;
  else out << "none";
  out << '\n' << "# outmost";
  for (auto v : f.outmost) out << ' ' << v;
  out << '\n';
  write_edge_list(out, f.graph);
}

// One eigenvalue per line, in the order given (descending for Spectrum).
inline void write_spectrum(std::ostream& out, const std::vector<double>& values) {
  for (double v : values) out << format_eigenvalue(v) << '\n';
}

// "value multiplicity" per line, ascending by value.
inline void write_multiset(std::ostream& out, const SpectrumMultiset& ms) {
  for (const auto& p : ms.pairs) out << format_eigenvalue(p.value) << ' ' << p.multiplicity << '\n';
}

namespace detail {

inline std::string opt_value(const std::optional<double>& v) {
  return v ? format_significant(*v, 12) : std::string("NA");
}

inline const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace detail

// Flat "key=value" block, one per line.
inline void write_bound_report(std::ostream& out, const BoundReport& r) {
  using detail::flag;
  using detail::opt_value;
  out << "N=" << r.order << '\n'
      << "E=" << r.edges << '\n'
      << "c=" << r.components << '\n'
      << "r=" << r.isolated << '\n'
      << "max_degree=" << r.max_degree << '\n'
      << "min_degree=" << r.min_degree << '\n'
      << "connected=" << flag(r.connected) << '\n'
      << "bipartite=" << flag(r.bipartite) << '\n'
      << "tol=" << format_significant(r.tol, 12) << '\n'
      << "NEE=" << format_significant(r.nee, 12) << '\n'
      << "thm1_lower=" << opt_value(r.thm1_lower) << '\n';
  if (!r.thm1_lower) out << "thm1_reason=" << r.thm1_reason << '\n';
  out << "thm1_equality=" << flag(r.thm1_equality) << '\n'
      << "thm2_lower=" << opt_value(r.thm2_lower) << '\n'
      << "thm2_upper=" << opt_value(r.thm2_upper) << '\n';
  if (!r.thm2_lower) out << "thm2_reason=" << r.thm2_reason << '\n';
  out << "thm2_lower_equality=" << flag(r.thm2_lower_equality) << '\n'
      << "thm2_upper_equality=" << flag(r.thm2_upper_equality) << '\n'
      << "thm3_lower=" << format_significant(r.thm3_lower, 12) << '\n'
      << "thm3_gap=" << format_significant(r.nee - r.thm3_lower, 12) << '\n'
      << "thm3_equality=" << flag(r.thm3_equality) << '\n'
      << "extremal_s=" << (r.extremal_s ? std::to_string(*r.extremal_s) : std::string("NA")) << '\n'
      << "thm3_detector_agrees=" << flag(r.thm3_detector_agrees) << '\n'
      << "violation=" << flag(r.violation) << '\n';
}

inline constexpr std::string_view kBoundCsvHeader =
    "N,E,c,r,connected,bipartite,NEE,thm1_lower,thm2_lower,thm2_upper,thm3_lower,"
    "thm1_equality,thm2_lower_equality,thm2_upper_equality,thm3_equality,violation";

inline std::string bound_report_csv_row(const BoundReport& r) {
  using detail::flag;
  using detail::opt_value;
  std::ostringstream s;
  s << r.order << ',' << r.edges << ',' << r.components << ',' << r.isolated << ','
    << flag(r.connected) << ',' << flag(r.bipartite) << ',' << format_significant(r.nee, 12) << ','
    << opt_value(r.thm1_lower) << ',' << opt_value(r.thm2_lower) << ',' << opt_value(r.thm2_upper)
    << ',' << format_significant(r.thm3_lower, 12) << ',' << flag(r.thm1_equality) << ','
    << flag(r.thm2_lower_equality) << ',' << flag(r.thm2_upper_equality) << ','
    << flag(r.thm3_equality) << ',' << flag(r.violation);
  return s.str();
}

}  // namespace nee
