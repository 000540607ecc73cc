#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "peakset/errors.hpp"
#include "peakset/graph.hpp"

namespace peakset {

// Named graph families with fixed vertex numbering conventions:
//
//   path:n               vertices 1..n, edges (i, i+1)
//   cycle:n              path:n plus edge (n, 1); n >= 3
//   complete:n           all pairs adjacent
//   null:n               no edges
//   star:n               one center joined to n-1 leaves; center = 1, n >= 2
//   ternary_star:n,k     complete graph on 1..k joined to isolated vertices
//                        k+1..n; 1 <= k < n
//   complete_bipartite:a,b   sides 1..a and a+1..a+b, all cross edges
//   fan:n,m              path:n (vertices 1..n) joined to null:m (n+1..n+m)
//   wheel:n              cycle:n (rim 1..n) joined to one hub n+1; n >= 3
//   cone:m,n             cycle:n (rim 1..n) joined to null:m (n+1..n+m); n >= 3
//   windmill:k           k disjoint edges (2i-1, 2i) joined to one center
//                        2k+1
//   join:A+B             join of two sub-specs; B's vertices are shifted up
//                        by |V(A)|.  Nested joins take parentheses, e.g.
//                        join:(join:null:2+null:2)+path:3.
enum class FamilyKind {
  path,
  cycle,
  complete,
  null_graph,
  star,
  ternary_star,
  complete_bipartite,
  fan,
  wheel,
  cone,
  windmill,
  join,
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::path;
  int a = 0;                            // first parameter
  int b = 0;                            // second parameter, if the kind takes one
  std::vector<FamilySpec> parts;        // the two sides of a join

  static FamilySpec path(int n) { return {FamilyKind::path, n, 0, {}}; }
  static FamilySpec cycle(int n) { return {FamilyKind::cycle, n, 0, {}}; }
  static FamilySpec complete(int n) { return {FamilyKind::complete, n, 0, {}}; }
  static FamilySpec null_graph(int n) { return {FamilyKind::null_graph, n, 0, {}}; }
  static FamilySpec star(int n) { return {FamilyKind::star, n, 0, {}}; }
  static FamilySpec ternary_star(int n, int k) { return {FamilyKind::ternary_star, n, k, {}}; }
  static FamilySpec complete_bipartite(int a, int b) {
    return {FamilyKind::complete_bipartite, a, b, {}};
  }
  static FamilySpec fan(int n, int m) { return {FamilyKind::fan, n, m, {}}; }
  static FamilySpec wheel(int n) { return {FamilyKind::wheel, n, 0, {}}; }
  static FamilySpec cone(int m, int n) { return {FamilyKind::cone, m, n, {}}; }
  static FamilySpec windmill(int k) { return {FamilyKind::windmill, k, 0, {}}; }
  static FamilySpec join(FamilySpec left, FamilySpec right) {
    FamilySpec s{FamilyKind::join, 0, 0, {}};
    s.parts.push_back(std::move(left));
    s.parts.push_back(std::move(right));
    return s;
  }
};

namespace detail {

inline std::vector<std::pair<int, int>> path_edges(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return edges;
}

inline void require(bool ok, const std::string& message) {
  if (!ok) throw InputError(message);
}

}  // namespace detail

inline Graph path_graph(int n) {
  detail::require(n >= 1, "path needs n >= 1");
  return Graph(n, detail::path_edges(n));
}

inline Graph cycle_graph(int n) {
  detail::require(n >= 3, "cycle needs n >= 3");
  auto edges = detail::path_edges(n);
  edges.emplace_back(1, n);
  return Graph(n, std::move(edges));
}

inline Graph complete_graph(int n) {
  detail::require(n >= 1, "complete graph needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

inline Graph null_graph(int n) {
  detail::require(n >= 1, "null graph needs n >= 1");
  return Graph(n, {});
}

inline Graph build_family(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::path:
      return path_graph(spec.a);
    case FamilyKind::cycle:
      return cycle_graph(spec.a);
    case FamilyKind::complete:
      return complete_graph(spec.a);
    case FamilyKind::null_graph:
      return null_graph(spec.a);
    case FamilyKind::star:
      detail::require(spec.a >= 2, "star needs n >= 2");
      return join_graphs(complete_graph(1), null_graph(spec.a - 1));
    case FamilyKind::ternary_star:
      detail::require(spec.b >= 1 && spec.b < spec.a,
                      "ternary star needs 1 <= k < n");
      return join_graphs(complete_graph(spec.b), null_graph(spec.a - spec.b));
    case FamilyKind::complete_bipartite:
      detail::require(spec.a >= 1 && spec.b >= 1, "complete bipartite needs a, b >= 1");
      return join_graphs(null_graph(spec.a), null_graph(spec.b));
    case FamilyKind::fan:
      detail::require(spec.a >= 1 && spec.b >= 1, "fan needs n, m >= 1");
      return join_graphs(path_graph(spec.a), null_graph(spec.b));
    case FamilyKind::wheel:
      return join_graphs(cycle_graph(spec.a), null_graph(1));
    case FamilyKind::cone:
      detail::require(spec.a >= 1, "cone needs m >= 1");
      return join_graphs(cycle_graph(spec.b), null_graph(spec.a));
    case FamilyKind::windmill: {
      detail::require(spec.a >= 1, "windmill needs k >= 1");
      std::vector<std::pair<int, int>> edges;
      for (int i = 1; i <= spec.a; ++i) edges.emplace_back(2 * i - 1, 2 * i);
      return join_graphs(Graph(2 * spec.a, std::move(edges)), null_graph(1));
    }
    case FamilyKind::join:
      return join_graphs(build_family(spec.parts[0]), build_family(spec.parts[1]));
  }
  throw InputError("unknown family kind");
}

// Canonical spec string, the inverse of parse_family_spec.
inline std::string to_string(const FamilySpec& spec) {
  auto two = [](const char* name, int a, int b) {
    return std::string(name) + ":" + std::to_string(a) + "," + std::to_string(b);
  };
  switch (spec.kind) {
    case FamilyKind::path: return "path:" + std::to_string(spec.a);
    case FamilyKind::cycle: return "cycle:" + std::to_string(spec.a);
    case FamilyKind::complete: return "complete:" + std::to_string(spec.a);
    case FamilyKind::null_graph: return "null:" + std::to_string(spec.a);
    case FamilyKind::star: return "star:" + std::to_string(spec.a);
    case FamilyKind::ternary_star: return two("ternary_star", spec.a, spec.b);
    case FamilyKind::complete_bipartite: return two("complete_bipartite", spec.a, spec.b);
    case FamilyKind::fan: return two("fan", spec.a, spec.b);
    case FamilyKind::wheel: return "wheel:" + std::to_string(spec.a);
    case FamilyKind::cone: return two("cone", spec.a, spec.b);
    case FamilyKind::windmill: return "windmill:" + std::to_string(spec.a);
    case FamilyKind::join: {
      auto side = [](const FamilySpec& part) {
        std::string s = to_string(part);
        return part.kind == FamilyKind::join ? "(" + s + ")" : s;
      };
      return "join:" + side(spec.parts[0]) + "+" + side(spec.parts[1]);
    }
  }
  throw InputError("unknown family kind");
}

namespace detail {

inline int parse_positive_int(const std::string& text, const std::string& what) {
  if (text.empty() || text.size() > 9) throw InputError("bad " + what + ": '" + text + "'");
  int value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw InputError("bad " + what + ": '" + text + "'");
    value = value * 10 + (c - '0');
  }
  return value;
}

inline std::vector<int> parse_int_params(const std::string& text) {
  std::vector<int> params;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string tok =
        comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
    params.push_back(parse_positive_int(tok, "family parameter"));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return params;
}

// Strips one layer of balanced surrounding parentheses, if present.
inline std::string strip_parens(std::string s) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') return s;
  int depth = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth == 0) return s;  // closes before the end
  }
  return s.substr(1, s.size() - 2);
}

}  // namespace detail

// Parses the --family grammar: "name:p1[,p2]" or "join:specA+specB" where a
// nested join side is parenthesized.
inline FamilySpec parse_family_spec(const std::string& text) {
  if (text.rfind("join:", 0) == 0) {
    std::string rest = text.substr(5);
    int depth = 0;
    std::size_t split = std::string::npos;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (rest[i] == '(') ++depth;
      else if (rest[i] == ')') --depth;
      else if (rest[i] == '+' && depth == 0) {
        split = i;
        break;
      }
    }
    if (split == std::string::npos || split == 0 || split + 1 == rest.size())
      throw InputError("join spec needs two '+'-separated sides: '" + text + "'");
    return FamilySpec::join(
        parse_family_spec(detail::strip_parens(rest.substr(0, split))),
        parse_family_spec(detail::strip_parens(rest.substr(split + 1))));
  }

  std::size_t colon = text.find(':');
  std::string name = colon == std::string::npos ? text : text.substr(0, colon);
  std::vector<int> params =
      colon == std::string::npos ? std::vector<int>{} : detail::parse_int_params(text.substr(colon + 1));

  auto arity = [&](std::size_t want) {
    if (params.size() != want)
      throw InputError("family '" + name + "' takes " + std::to_string(want) +
                       " parameter(s), got " + std::to_string(params.size()));
  };

  if (name == "path") { arity(1); return FamilySpec::path(params[0]); }
  if (name == "cycle") { arity(1); return FamilySpec::cycle(params[0]); }
  if (name == "complete") { arity(1); return FamilySpec::complete(params[0]); }
  if (name == "null") { arity(1); return FamilySpec::null_graph(params[0]); }
  if (name == "star") { arity(1); return FamilySpec::star(params[0]); }
  if (name == "ternary_star") { arity(2); return FamilySpec::ternary_star(params[0], params[1]); }
  if (name == "complete_bipartite") {
    arity(2);
    return FamilySpec::complete_bipartite(params[0], params[1]);
  }
  if (name == "fan") { arity(2); return FamilySpec::fan(params[0], params[1]); }
  if (name == "wheel") { arity(1); return FamilySpec::wheel(params[0]); }
  if (name == "cone") { arity(2); return FamilySpec::cone(params[0], params[1]); }
  if (name == "windmill") { arity(1); return FamilySpec::windmill(params[0]); }
  throw InputError("unknown family '" + name + "'");
}

}  // namespace peakset
