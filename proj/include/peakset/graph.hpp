#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "peakset/errors.hpp"
#include "peakset/vertex_set.hpp"

namespace peakset {

// Finite simple undirected graph on vertices {1, ..., n}, n <= 64.
// Adjacency is stored as one VertexSet per vertex; the edge list is kept in
// normalized form (u < v, sorted lexicographically) for rendering.
class Graph {
public:
  Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 1) throw InputError("graph needs at least one vertex");
    if (n > VertexSet::max_vertices)
      throw ResourceLimitError("graph has " + std::to_string(n) + " vertices; limit is " +
                               std::to_string(VertexSet::max_vertices));
    adj_.assign(static_cast<std::size_t>(n) + 1, VertexSet{});
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
      if (u < 1 || u > n || v < 1 || v > n)
        throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") out of range for n = " + std::to_string(n));
      if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
      if (adj_[u].contains(v))
        throw InputError("duplicate edge (" + std::to_string(std::min(u, v)) + "," +
                         std::to_string(std::max(u, v)) + ")");
      adj_[u] = adj_[u].with(v);
      adj_[v] = adj_[v].with(u);
      edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
  }

  int vertex_count() const { return n_; }
  VertexSet vertices() const { return VertexSet::full(n_); }

  VertexSet neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  int degree(int v) const { return neighbors(v).size(); }

  // Normalized edge list: each pair has u < v, pairs sorted ascending.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

private:
  void check_vertex(int v) const {
    if (v < 1 || v > n_)
      throw InputError("vertex " + std::to_string(v) + " out of range for n = " +
                       std::to_string(n_));
  }

  int n_;
  std::vector<VertexSet> adj_;
  std::vector<std::pair<int, int>> edges_;
};

inline Graph build_graph(int n, std::vector<std::pair<int, int>> edges) {
  return Graph(n, std::move(edges));
}

// A bijection from vertices {1..n} to labels {1..n}; labels()[i] is the label
// of vertex i+1.
class Labeling {
public:
  explicit Labeling(std::vector<int> labels) : labels_(std::move(labels)) {
    int n = static_cast<int>(labels_.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int x : labels_) {
      if (x < 1 || x > n || seen[x])
        throw InputError("labeling is not a bijection onto 1.." + std::to_string(n));
      seen[x] = true;
    }
  }

  // Fast path for labels already known to form a bijection.
  static Labeling unchecked(std::vector<int> labels) {
    Labeling l;
    l.labels_ = std::move(labels);
    return l;
  }

  int size() const { return static_cast<int>(labels_.size()); }

  int label_of(int v) const {
    if (v < 1 || v > size())
      throw InputError("vertex " + std::to_string(v) + " out of range for n = " +
                       std::to_string(size()));
    return labels_[v - 1];
  }

  const std::vector<int>& labels() const { return labels_; }

  friend bool operator==(const Labeling& a, const Labeling& b) = default;
  friend auto operator<=>(const Labeling& a, const Labeling& b) {
    return a.labels_ <=> b.labels_;
  }

private:
  Labeling() = default;

  std::vector<int> labels_;
};

// Compact display form: digits concatenated when n <= 9 ("4321"), otherwise
// comma separated ("10,9,...").
inline std::string to_string(const Labeling& l) {
  std::string out;
  for (int i = 0; i < l.size(); ++i) {
    if (i > 0 && l.size() > 9) out += ',';
    out += std::to_string(l.labels()[i]);
  }
  return out;
}

// Union of the neighborhoods of all vertices in s, restricted to mask.
inline VertexSet neighborhood(const Graph& g, VertexSet s, VertexSet mask) {
  VertexSet out;
  for (int v : s) out = out | (g.neighbors(v) & mask);
  return out;
}

inline VertexSet neighborhood(const Graph& g, VertexSet s) {
  return neighborhood(g, s, g.vertices());
}

// Vertices of the induced subgraph on active whose degree within active is
// less than two.
inline VertexSet low_degree_vertices(const Graph& g, VertexSet active) {
  VertexSet out;
  for (int v : active)
    if ((g.neighbors(v) & active).size() < 2) out = out.with(v);
  return out;
}

inline bool is_independent(const Graph& g, VertexSet s) {
  for (int v : s)
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

// Peaks of a labeling: vertices of degree at least two whose label exceeds
// the labels of all their neighbors.  The span is indexed by vertex - 1.
inline VertexSet peak_set(const Graph& g, std::span<const int> labels) {
  if (static_cast<int>(labels.size()) != g.vertex_count())
    throw InputError("labeling size does not match vertex count");
  VertexSet peaks;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    VertexSet nb = g.neighbors(v);
    if (nb.size() < 2) continue;
    int lv = labels[static_cast<std::size_t>(v) - 1];
    bool top = true;
    for (int u : nb) {
      if (labels[static_cast<std::size_t>(u) - 1] > lv) {
        top = false;
        break;
      }
    }
    if (top) peaks = peaks.with(v);
  }
  return peaks;
}

inline VertexSet peak_set(const Graph& g, const Labeling& l) {
  return peak_set(g, std::span<const int>(l.labels()));
}

// Join of two graphs: disjoint union plus every cross edge.  Vertices of a
// keep their numbers; vertices of b are shifted up by a.vertex_count().
inline Graph join_graphs(const Graph& a, const Graph& b) {
  int na = a.vertex_count();
  int nb = b.vertex_count();
  std::vector<std::pair<int, int>> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + na, v + na);
  for (int u = 1; u <= na; ++u)
    for (int v = 1; v <= nb; ++v) edges.emplace_back(u, v + na);
  return Graph(na + nb, std::move(edges));
}

}  // namespace peakset
