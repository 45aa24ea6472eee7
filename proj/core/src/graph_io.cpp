#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "graphfb/error.hpp"
#include "graphfb/graph.hpp"

namespace graphfb {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

Index parse_index(std::string_view token) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::ParseError, "bad integer '" + std::string(token) + "'");
  }
  return static_cast<Index>(v);
}

Index parse_header(std::istream& in, std::string_view magic) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::ParseError, "missing header");
  const auto tok = split_ws(line);
  if (tok.size() != 3 || tok[0] != magic || tok[1] != "v1") {
    throw Error(ErrorCode::ParseError,
                "expected header '" + std::string(magic) + " v1 <n>', got '" + line + "'");
  }
  const Index n = parse_index(tok[2]);
  if (n < 0) throw Error(ErrorCode::ParseError, "negative size in header");
  return n;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw Error(ErrorCode::InvalidParam, "cannot format value");
  return std::string(buf, ptr);
}

double parse_double(std::string_view token) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::ParseError, "bad number '" + std::string(token) + "'");
  }
  return v;
}

Graph parse_graph(std::istream& in) {
  const Index n = parse_header(in, "graphfb-graph");
  std::vector<Edge> edges;
  std::string line;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tok = split_ws(line);
    if (tok.empty()) continue;
    if (tok.size() != 3) {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(lineno) + ": expected 'i j w'");
    }
    edges.push_back({parse_index(tok[0]), parse_index(tok[1]), parse_double(tok[2])});
  }
  return build_graph(n, edges);
}

void format_graph(std::ostream& out, const Graph& g) {
  out << "graphfb-graph v1 " << g.n() << '\n';
  for (const Edge& e : g.edges()) {
    out << e.i << ' ' << e.j << ' ' << format_double(e.w) << '\n';
  }
}

Signal parse_signal(std::istream& in) {
  const Index n = parse_header(in, "graphfb-signal");
  std::vector<double> values;
  std::string line;
  while (std::getline(in, line)) {
    const auto tok = split_ws(line);
    if (tok.empty()) continue;
    if (tok.size() != 1) throw Error(ErrorCode::ParseError, "expected one value per line");
    values.push_back(parse_double(tok[0]));
  }
  if (static_cast<Index>(values.size()) != n) {
    throw Error(ErrorCode::ParseError, "header says " + std::to_string(n) + " values, found " +
                                           std::to_string(values.size()));
  }
  return Eigen::Map<const Vector>(values.data(), n);
}

void format_signal(std::ostream& out, const Signal& x) {
  out << "graphfb-signal v1 " << x.size() << '\n';
  for (Index i = 0; i < x.size(); ++i) out << format_double(x(i)) << '\n';
}

Graph read_graph(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_graph(in);
}

void write_graph(const Graph& g, const std::filesystem::path& path) {
  auto out = open_out(path);
  format_graph(out, g);
}

Signal read_signal(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_signal(in);
}

void write_signal(const Signal& x, const std::filesystem::path& path) {
  auto out = open_out(path);
  format_signal(out, x);
}

}  // namespace graphfb
