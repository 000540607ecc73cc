#pragma once

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "peakset/errors.hpp"
#include "peakset/graph.hpp"
#include "peakset/oracle.hpp"
#include "peakset/vertex_set.hpp"

namespace peakset {

// Parsed form of the edge-list text format:
//
//   # optional comment; "# name: <text>" names the graph
//   n 5
//   e 1 2
//   e 2 3
//
// Vertices are 1-based.  The header line must precede every edge line.
struct GraphDocument {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // normalized: u < v, sorted
  std::string name;

  Graph to_graph() const { return Graph(n, edges); }

  static GraphDocument from_graph(const Graph& g, std::string name = "") {
    return GraphDocument{g.vertex_count(), g.edges(), std::move(name)};
  }
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline int parse_int_token(const std::string& tok, int line, const std::string& what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, "bad " + what + " '" + tok + "'");
  return value;
}

inline std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

}  // namespace detail

inline GraphDocument parse_graph_document(const std::string& text) {
  GraphDocument doc;
  bool have_header = false;
  std::set<std::pair<int, int>> seen;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = detail::trim(raw);
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string body = detail::trim(line.substr(1));
      if (body.rfind("name:", 0) == 0 && doc.name.empty())
        doc.name = detail::trim(body.substr(5));
      continue;
    }
    auto toks = detail::split_ws(line);
    if (toks[0] == "n") {
      if (have_header) throw ParseError(lineno, "duplicate vertex-count line");
      if (toks.size() != 2) throw ParseError(lineno, "expected 'n <count>'");
      doc.n = detail::parse_int_token(toks[1], lineno, "vertex count");
      if (doc.n < 1) throw ParseError(lineno, "vertex count must be at least 1");
      if (doc.n > VertexSet::max_vertices)
        throw ParseError(lineno, "vertex count " + std::to_string(doc.n) + " exceeds " +
                                     std::to_string(VertexSet::max_vertices));
      have_header = true;
      continue;
    }
    if (toks[0] == "e") {
      if (!have_header) throw ParseError(lineno, "edge before the vertex-count line");
      if (toks.size() != 3) throw ParseError(lineno, "expected 'e <u> <v>'");
      int u = detail::parse_int_token(toks[1], lineno, "vertex");
      int v = detail::parse_int_token(toks[2], lineno, "vertex");
      if (u < 1 || u > doc.n || v < 1 || v > doc.n)
        throw ParseError(lineno, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                     ") out of range for n = " + std::to_string(doc.n));
      if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
      auto norm = std::minmax(u, v);
      if (!seen.insert({norm.first, norm.second}).second)
        throw ParseError(lineno, "duplicate edge (" + std::to_string(norm.first) + "," +
                                     std::to_string(norm.second) + ")");
      doc.edges.emplace_back(norm.first, norm.second);
      continue;
    }
    throw ParseError(lineno, "unrecognized line '" + line + "'");
  }
  if (!have_header) throw ParseError(lineno == 0 ? 1 : lineno, "missing 'n <count>' line");
  std::sort(doc.edges.begin(), doc.edges.end());
  return doc;
}

inline Graph parse_graph(const std::string& text) {
  return parse_graph_document(text).to_graph();
}

// Inverse of parse_graph_document up to the (n, sorted edges, name) triple.
inline std::string render_graph(const GraphDocument& doc) {
  std::string out;
  if (!doc.name.empty()) out += "# name: " + doc.name + "\n";
  out += "n " + std::to_string(doc.n) + "\n";
  auto edges = doc.edges;
  std::sort(edges.begin(), edges.end());
  for (auto [u, v] : edges) out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

// Comma-separated 1-based vertex list, e.g. "1,3"; empty or blank means the
// empty set.  Rejects out-of-range and repeated vertices.
inline VertexSet parse_vertex_set(const std::string& text, int n) {
  VertexSet out;
  std::string body = detail::trim(text);
  if (body.empty()) return out;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t comma = body.find(',', start);
    std::string tok = detail::trim(
        comma == std::string::npos ? body.substr(start) : body.substr(start, comma - start));
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw InputError("bad vertex '" + tok + "' in set '" + text + "'");
    if (v < 1 || v > n)
      throw InputError("vertex " + std::to_string(v) + " out of range for n = " +
                       std::to_string(n));
    if (out.contains(v)) throw InputError("vertex " + std::to_string(v) + " repeated in set");
    out = out.with(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// "1,3" form used in output payloads (no braces, empty string for the empty
// set).
inline std::string format_vertex_set(VertexSet s) {
  std::string out;
  for (int v : s) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

enum class OutputFormat { json, csv, text };

inline OutputFormat parse_output_format(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "text") return OutputFormat::text;
  throw InputError("unknown output format '" + name + "' (expected json, csv, or text)");
}

struct CountPayload {
  GraphDocument graph;
  VertexSet peaks;
  BigInt count;
};

struct EnumerationPayload {
  GraphDocument graph;
  VertexSet peaks;
  std::vector<Labeling> labelings;
  bool truncated = false;
};

struct DistributionPayload {
  GraphDocument graph;
  PeakDistribution distribution;
};

namespace detail {

using json = nlohmann::ordered_json;

inline json graph_json(const GraphDocument& doc) {
  json g;
  g["n"] = doc.n;
  g["edges"] = json::array();
  for (auto [u, v] : doc.edges) g["edges"].push_back({u, v});
  return g;
}

inline json peaks_json(VertexSet s) {
  json a = json::array();
  for (int v : s) a.push_back(v);
  return a;
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline std::string labels_joined(const Labeling& l, char sep) {
  std::string row;
  for (int i = 0; i < l.size(); ++i) {
    if (i) row += sep;
    row += std::to_string(l.labels()[static_cast<std::size_t>(i)]);
  }
  return row;
}

}  // namespace detail

// Counts are serialized as decimal strings in JSON: they routinely exceed
// anything a JSON number can carry exactly.
inline std::string render_results(const CountPayload& p, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: {
      detail::json j;
      j["graph"] = detail::graph_json(p.graph);
      j["peaks"] = detail::peaks_json(p.peaks);
      j["count"] = p.count.str();
      return detail::dump(j);
    }
    case OutputFormat::csv:
    case OutputFormat::text:
      return p.count.str() + "\n";
  }
  throw InputError("unknown output format");
}

inline std::string render_results(const EnumerationPayload& p, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: {
      detail::json j;
      j["graph"] = detail::graph_json(p.graph);
      j["peaks"] = detail::peaks_json(p.peaks);
      j["count"] = std::to_string(p.labelings.size());
      j["labelings"] = detail::json::array();
      for (const Labeling& l : p.labelings) j["labelings"].push_back(l.labels());
      j["truncated"] = p.truncated;
      return detail::dump(j);
    }
    case OutputFormat::csv: {
      std::string out;
      for (const Labeling& l : p.labelings) out += detail::labels_joined(l, ',') + "\n";
      return out;
    }
    case OutputFormat::text: {
      std::string out;
      for (const Labeling& l : p.labelings) out += detail::labels_joined(l, ' ') + "\n";
      out += std::to_string(p.labelings.size()) + " labelings";
      if (p.truncated) out += " (truncated)";
      out += "\n";
      return out;
    }
  }
  throw InputError("unknown output format");
}

inline std::string render_results(const DistributionPayload& p, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: {
      detail::json j;
      j["graph"] = detail::graph_json(p.graph);
      j["distribution"] = detail::json::array();
      for (const auto& [s, c] : p.distribution.counts) {
        detail::json row;
        row["peaks"] = detail::peaks_json(s);
        row["count"] = c.str();
        j["distribution"].push_back(row);
      }
      j["total"] = p.distribution.total().str();
      return detail::dump(j);
    }
    case OutputFormat::csv: {
      std::string out = "peaks,count\n";
      for (const auto& [s, c] : p.distribution.counts) {
        std::string peaks;
        for (int v : s) {
          if (!peaks.empty()) peaks += ' ';
          peaks += std::to_string(v);
        }
        out += peaks + "," + c.str() + "\n";
      }
      return out;
    }
    case OutputFormat::text: {
      std::string out;
      for (const auto& [s, c] : p.distribution.counts)
        out += to_string(s) + ": " + c.str() + "\n";
      out += "total: " + p.distribution.total().str() + "\n";
      return out;
    }
  }
  throw InputError("unknown output format");
}

}  // namespace peakset
