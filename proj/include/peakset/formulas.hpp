#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "peakset/bigint.hpp"
#include "peakset/enumerate.hpp"
#include "peakset/errors.hpp"
#include "peakset/families.hpp"
#include "peakset/graph.hpp"
#include "peakset/polynomial.hpp"

namespace peakset {

// Closed-form counts for specific graph shapes.  Everything here is
// cross-checked against the recursive engine and the brute-force oracle in
// the test suite; shapes without a trustworthy closed form return nullopt so
// callers fall back to the engine.

// Cutting a cycle of size n at vertex `removed` leaves a path on n-1
// vertices; cycle position j (j != removed) lands at path position
// (j - removed) mod n.  Applied to a peak set with removed in the set, this
// gives the path peak sets whose counts sum to the cycle count.
inline VertexSet cycle_path_projection(int n, int removed, VertexSet s) {
  if (n < 3) throw InputError("cycle needs n >= 3");
  if (!s.subset_of(VertexSet::full(n)))
    throw InputError("peak set " + to_string(s) + " is not a subset of the cycle vertices");
  if (!s.contains(removed))
    throw InputError("projection vertex " + std::to_string(removed) + " must lie in the set");
  VertexSet out;
  for (int j : s) {
    if (j == removed) continue;
    out = out.with(((j - removed) % n + n) % n);
  }
  return out;
}

// Cycle count by path decomposition: the labeling with top label at peak
// i in S corresponds to a labeling of the cut-open path, so
// |P(S; C_n)| = sum over i in S of |P(proj_i(S); P_{n-1})|.
inline BigInt cycle_count(int n, VertexSet s) {
  if (n < 3) throw InputError("cycle needs n >= 3");
  if (!s.subset_of(VertexSet::full(n)))
    throw InputError("peak set " + to_string(s) + " is not a subset of the cycle vertices");
  if (s.empty()) return 0;  // the top label on a cycle is always a peak
  Graph path = path_graph(n - 1);
  CountCache cache;
  BigInt total = 0;
  for (int i : s)
    total += count_labelings(path, cycle_path_projection(n, i, s), {.cache = &cache});
  return total;
}

// Same decomposition, but with each path count evaluated through its peak
// polynomial.  Each projection drops one element of S, so every path count
// carries the same power of two and
// |P(S; C_n)| = 2^(n-|S|-1) * sum over i of p_{proj_i(S)}(n-1).
inline BigInt cycle_count_poly(int n, VertexSet s) {
  if (n < 3) throw InputError("cycle needs n >= 3");
  if (!s.subset_of(VertexSet::full(n)))
    throw InputError("peak set " + to_string(s) + " is not a subset of the cycle vertices");
  if (s.empty()) return 0;
  // Adjacent cycle vertices, or any pair on a triangle, can never both be
  // peaks; the projections of such sets are not valid path peak sets, so
  // handle them up front.
  for (int v : s) {
    int succ = v % n + 1;
    int pred = (v + n - 2) % n + 1;
    if (s.contains(succ) || s.contains(pred)) return 0;
  }
  std::map<VertexSet, PeakPolynomial> memo;
  Rational sum = 0;
  for (int i : s) {
    VertexSet proj = cycle_path_projection(n, i, s);
    auto it = memo.find(proj);
    if (it == memo.end()) it = memo.emplace(proj, path_peak_polynomial(proj)).first;
    sum += it->second.evaluate(n - 1);
  }
  Rational value = sum * Rational(pow2(n - s.size() - 1));
  if (boost::multiprecision::denominator(value) != 1)
    throw Error("cycle polynomial formula produced a non-integer");
  return boost::multiprecision::numerator(value);
}

// Count for the join of an edgeless graph on null_size vertices with an
// arbitrary graph on g_size >= 2 vertices, for a peak set of s_size vertices
// taken from the edgeless side: the peaks must hold the top s_size labels
// (s_size! orders), the next label down must land in the other side (g_size
// places), and the rest is free.
inline BigInt null_join_count(int null_size, int g_size, int s_size) {
  if (s_size < 1 || s_size > null_size)
    throw InputError("peak-set size must be between 1 and the edgeless side size");
  if (g_size < 2) throw InputError("the joined graph needs at least two vertices");
  return factorial(s_size) * g_size * factorial(null_size + g_size - s_size - 1);
}

// Count for the join of a complete graph on complete_size vertices with an
// arbitrary graph, peak set taken from the complete side: only singletons
// are achievable (clique vertices are pairwise adjacent), and a singleton
// pins the top label, leaving (total - 1)! labelings.  Needs at least three
// vertices overall; on one or two the formula overcounts.
inline BigInt complete_join_count(int complete_size, int g_size, int s_size) {
  if (s_size < 1 || s_size > complete_size)
    throw InputError("peak-set size must be between 1 and the complete side size");
  if (complete_size + g_size < 3)
    throw InputError("join formula needs at least three vertices overall");
  if (s_size >= 2) return 0;
  return factorial(complete_size + g_size - 1);
}

// Dispatch for a join of two explicit graphs (right side's vertices shifted
// up by left.vertex_count(), as join_graphs numbers them).  Returns the
// closed-form count when one of the null/complete join rules applies,
// 0 when the peak set is structurally impossible, and nullopt when no rule
// covers the query.
inline std::optional<BigInt> join_count(const Graph& left, const Graph& right, VertexSet s) {
  int na = left.vertex_count();
  int nb = right.vertex_count();
  Graph joined = join_graphs(left, right);
  if (!s.subset_of(joined.vertices()))
    throw InputError("peak set " + to_string(s) + " is not a subset of the join's vertices");
  if (s.empty()) return std::nullopt;
  // Cross-side pairs are always adjacent and degree-deficient vertices can
  // never be peaks, so failing the precheck means the count is zero.
  if (!peak_set_precheck(joined, s)) return 0;

  VertexSet left_range = VertexSet::full(na);
  const Graph& side = s.subset_of(left_range) ? left : right;
  int other = s.subset_of(left_range) ? nb : na;

  int side_n = side.vertex_count();
  std::size_t complete_edges = static_cast<std::size_t>(side_n) * (side_n - 1) / 2;
  if (side.edges().empty()) return null_join_count(side_n, other, s.size());
  if (side.edges().size() == complete_edges)
    return complete_join_count(side_n, other, s.size());
  return std::nullopt;
}

namespace detail {

inline int family_order(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::path:
    case FamilyKind::cycle:
    case FamilyKind::complete:
    case FamilyKind::null_graph:
    case FamilyKind::star:
    case FamilyKind::ternary_star:
      return spec.a;
    case FamilyKind::complete_bipartite:
    case FamilyKind::fan:
    case FamilyKind::cone:
      return spec.a + spec.b;
    case FamilyKind::wheel:
      return spec.a + 1;
    case FamilyKind::windmill:
      return 2 * spec.a + 1;
    case FamilyKind::join:
      return family_order(spec.parts[0]) + family_order(spec.parts[1]);
  }
  throw InputError("unknown family kind");
}

// Star on n vertices, center 1: peaks can only be empty or the center.
inline std::optional<BigInt> star_count(int n, VertexSet s) {
  if (s.empty()) {
    if (n < 3) return std::nullopt;  // on two vertices the peak set is always empty
    return factorial(n - 1) * (n - 1);
  }
  if (n >= 3 && s == VertexSet::single(1)) return factorial(n - 1);
  return 0;
}

}  // namespace detail

// Closed-form count for a family graph, or nullopt when the family (or this
// particular peak set within it) has no formula and the engine should be
// used instead.  Conventions follow build_family's vertex numbering.
inline std::optional<BigInt> family_count(const FamilySpec& spec, VertexSet s) {
  int n = detail::family_order(spec);
  if (!s.subset_of(VertexSet::full(n)))
    throw InputError("peak set " + to_string(s) + " is not a subset of the family's vertices");

  switch (spec.kind) {
    case FamilyKind::star:
      return detail::star_count(spec.a, s);

    case FamilyKind::ternary_star: {
      int k = spec.b;
      if (k == 1) return detail::star_count(n, s);
      VertexSet clique = VertexSet::full(k);
      // Every labeling puts its top label on a vertex adjacent only to
      // smaller labels, so the empty peak set is unreachable.
      if (s.empty()) return 0;
      if (s.subset_of(clique))
        return s.size() == 1 ? factorial(n - 1) : BigInt(0);
      if (!s.intersects(clique)) return null_join_count(n - k, k, s.size());
      return 0;  // mixed sets hit a cross edge
    }

    case FamilyKind::complete_bipartite: {
      int a = spec.a, b = spec.b;
      if (a == 1 && b == 1) return s.empty() ? std::nullopt : std::optional<BigInt>(BigInt(0));
      if (a == 1 || b == 1) {
        // A star up to renumbering; map the center accordingly.
        int center = a == 1 ? 1 : a + 1;
        if (s.empty()) return factorial(n - 1) * (n - 1);
        if (s == VertexSet::single(center)) return factorial(n - 1);
        return 0;
      }
      VertexSet side_a = VertexSet::full(a);
      if (s.empty()) return 0;
      if (s.subset_of(side_a)) return null_join_count(a, b, s.size());
      if (!s.intersects(side_a)) return null_join_count(b, a, s.size());
      return 0;
    }

    case FamilyKind::wheel: {
      int center = n;  // hub is the last vertex
      if (s.empty()) return 0;  // minimum degree 3, so the top label is a peak
      if (s == VertexSet::single(center)) return factorial(n - 1);
      if (s.contains(center)) return 0;  // hub is adjacent to everything
      return std::nullopt;  // rim peak sets have no closed form here
    }

    case FamilyKind::fan: {
      int path_n = spec.a, null_m = spec.b;
      if (path_n == 1) {
        if (null_m == 1) return s.empty() ? std::nullopt : std::optional<BigInt>(BigInt(0));
        if (s.empty()) return factorial(n - 1) * (n - 1);
        if (s == VertexSet::single(1)) return factorial(n - 1);
        return 0;
      }
      VertexSet path_side = VertexSet::full(path_n);
      if (s.empty()) return 0;  // minimum degree is at least 2
      if (!s.intersects(path_side)) return null_join_count(null_m, path_n, s.size());
      if (s.subset_of(path_side)) return std::nullopt;
      return 0;
    }

    case FamilyKind::cone: {
      int null_m = spec.a, cycle_n = spec.b;
      VertexSet rim = VertexSet::full(cycle_n);
      if (s.empty()) return 0;
      if (!s.intersects(rim)) return null_join_count(null_m, cycle_n, s.size());
      if (s.subset_of(rim)) return std::nullopt;
      return 0;
    }

    // The windmill has no reliable closed form; counts come from the engine.
    case FamilyKind::windmill:
      return std::nullopt;

    case FamilyKind::path:
    case FamilyKind::cycle:
    case FamilyKind::complete:
    case FamilyKind::null_graph:
    case FamilyKind::join:
      return std::nullopt;
  }
  throw InputError("unknown family kind");
}

}  // namespace peakset
