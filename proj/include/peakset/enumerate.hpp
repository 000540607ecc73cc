#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "peakset/bigint.hpp"
#include "peakset/errors.hpp"
#include "peakset/graph.hpp"

namespace peakset {

// The enumerator assigns labels from largest to smallest.  A state captures
// the still-unlabeled induced subgraph together with the two sets that drive
// the branching:
//
//   remaining      unlabeled vertices; the next label handed out is
//                  |remaining|, so every assigned label exceeds every
//                  pending one
//   pending_peaks  vertices that still owe a peak: each must receive a label
//                  larger than all its currently unlabeled neighbors, which
//                  the descending order guarantees exactly when it is chosen
//                  before all of them
//   eligible       vertices allowed to take the next label without becoming
//                  a peak; a vertex enters this set once it has a labeled
//                  (hence larger) neighbor, and vertices whose degree in the
//                  remaining subgraph is below two are always here because
//                  they cannot be peaks at all
//
// eligible is kept disjoint from pending_peaks; members of pending_peaks are
// always choosable and tracking them twice would only split memoization
// states that behave identically.
struct SearchState {
  VertexSet remaining;
  VertexSet pending_peaks;
  VertexSet eligible;
  int next_label = 0;

  friend bool operator==(const SearchState&, const SearchState&) = default;
};

namespace detail {

inline SearchState advance(const Graph& g, const SearchState& st, int v) {
  VertexSet peaks = st.pending_peaks.without(v);
  VertexSet freed = g.neighbors(v) & st.remaining;
  SearchState next{st.remaining.without(v), peaks,
                   ((st.eligible | freed) - peaks).without(v), st.next_label - 1};
#ifndef NDEBUG
  // Vertices that cannot be peaks of the remaining subgraph must stay
  // choosable, otherwise a branch could strand them.
  assert(low_degree_vertices(g, next.remaining).subset_of(next.eligible | next.pending_peaks));
#endif
  return next;
}

}  // namespace detail

// True when peaks can possibly be a peak set of g: peaks must be independent
// and contain only vertices of degree at least two.
inline bool peak_set_precheck(const Graph& g, VertexSet peaks) {
  for (int v : peaks)
    if (g.degree(v) < 2) return false;
  return is_independent(g, peaks);
}

// Vertices that may take the current (largest outstanding) label: every
// pending peak, plus every eligible vertex that is not adjacent to a pending
// peak in the remaining subgraph.  Labeling a remaining neighbor of a pending
// peak above it would break that peak, so such vertices are frozen until the
// peak is placed.
inline VertexSet branch_choices(const Graph& g, const SearchState& st) {
  VertexSet frozen = neighborhood(g, st.pending_peaks, st.remaining);
  return st.pending_peaks | (st.eligible - frozen);
}

// State transition that validates the choice first.  The recursion itself
// uses the unchecked form since it only picks from branch_choices.
inline SearchState apply_choice(const Graph& g, const SearchState& st, int v) {
  if (!branch_choices(g, st).contains(v))
    throw InputError("vertex " + std::to_string(v) + " is not a legal choice in this state");
  return detail::advance(g, st, v);
}

// Root state for a search over g with target peak set peaks.  By default the
// initially eligible vertices are those of degree below two (they can never
// be peaks); eligible_override widens that set, which extends the search to
// every labeling whose peak set lies between peaks and peaks plus the
// non-frozen extra eligible vertices.
inline SearchState initial_state(const Graph& g, VertexSet peaks,
                                 std::optional<VertexSet> eligible_override = {}) {
  if (!peaks.subset_of(g.vertices()))
    throw InputError("peak set " + to_string(peaks) + " is not a subset of the vertices");
  VertexSet low = low_degree_vertices(g, g.vertices());
  VertexSet eligible = low;
  if (eligible_override) {
    if (!eligible_override->subset_of(g.vertices()))
      throw InputError("eligible set " + to_string(*eligible_override) +
                       " is not a subset of the vertices");
    if (!low.subset_of(*eligible_override))
      throw InputError("eligible set " + to_string(*eligible_override) +
                       " must contain every vertex of degree below two");
    eligible = *eligible_override;
  }
  return SearchState{g.vertices(), peaks, eligible - peaks, g.vertex_count()};
}

namespace detail {

template <typename Sink>
bool enumerate_rec(const Graph& g, const SearchState& st, std::vector<int>& labels, Sink& sink) {
  if (st.remaining.empty()) {
    return sink(Labeling::unchecked(
        std::vector<int>(labels.begin() + 1, labels.end())));
  }
  for (int v : branch_choices(g, st)) {
    labels[static_cast<std::size_t>(v)] = st.next_label;
    if (!enumerate_rec(g, advance(g, st, v), labels, sink)) return false;
  }
  return true;
}

}  // namespace detail

struct EnumerateOptions {
  std::optional<VertexSet> eligible_override;
};

// Streams every labeling of g whose peak set is exactly peaks (or, with an
// eligible override, every labeling the widened search admits) to sink, in a
// fixed depth-first order.  sink returns false to stop early.  Memory use is
// independent of the number of labelings produced.
template <typename Sink>
void enumerate_labelings(const Graph& g, VertexSet peaks, Sink&& sink,
                         const EnumerateOptions& opts = {}) {
  SearchState root = initial_state(g, peaks, opts.eligible_override);
  if (!peak_set_precheck(g, peaks)) return;
  std::vector<int> labels(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  detail::enumerate_rec(g, root, labels, sink);
}

// Memoization cache for count_labelings, keyed by search state.  A cache is
// tied to the graph it was filled for; reusing it across different peak-set
// queries on the same graph is safe and effective, reusing it across graphs
// is not.  Once max_entries is reached new results are recomputed rather
// than stored; lookups continue to be served.
class CountCache {
public:
  explicit CountCache(std::size_t max_entries = std::numeric_limits<std::size_t>::max())
      : max_entries_(max_entries) {}

  const BigInt* find(const SearchState& st) const {
    auto it = map_.find(key_of(st));
    return it == map_.end() ? nullptr : &it->second;
  }

  void store(const SearchState& st, BigInt value) {
    if (map_.size() >= max_entries_) return;
    map_.emplace(key_of(st), std::move(value));
  }

  std::size_t size() const { return map_.size(); }
  std::size_t max_entries() const { return max_entries_; }

private:
  struct Key {
    std::uint64_t remaining, pending, eligible;
    friend bool operator==(const Key&, const Key&) = default;
  };

  struct KeyHash {
    static std::uint64_t mix(std::uint64_t x) {
      x += 0x9e3779b97f4a7c15ULL;
      x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
      x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
      return x ^ (x >> 31);
    }
    std::size_t operator()(const Key& k) const {
      return static_cast<std::size_t>(mix(k.remaining ^ mix(k.pending ^ mix(k.eligible))));
    }
  };

  // next_label is determined by remaining, so the key omits it.
  static Key key_of(const SearchState& st) {
    return Key{st.remaining.bits(), st.pending_peaks.bits(), st.eligible.bits()};
  }

  std::unordered_map<Key, BigInt, KeyHash> map_;
  std::size_t max_entries_;
};

namespace detail {

inline BigInt count_rec(const Graph& g, const SearchState& st, CountCache* cache) {
  if (st.remaining.empty()) return 1;
  if (cache)
    if (const BigInt* hit = cache->find(st)) return *hit;
  BigInt total = 0;
  for (int v : branch_choices(g, st)) total += count_rec(g, advance(g, st, v), cache);
  if (cache) cache->store(st, total);
  return total;
}

// Work item for deterministic parallel runs: a search state plus the label
// assignments made on the way to it.
struct FrontierItem {
  SearchState state;
  std::vector<int> labels;
};

// Expands the root breadth-first, one full level at a time, until at least
// target items exist or nothing is left to expand.  Within a level children
// are emitted in branch_choices order, so concatenating the subtree results
// of the items in vector order reproduces the sequential depth-first order
// exactly.
inline std::vector<FrontierItem> expand_frontier(const Graph& g, const SearchState& root,
                                                 std::size_t target) {
  std::vector<FrontierItem> items;
  items.push_back({root, std::vector<int>(static_cast<std::size_t>(g.vertex_count()) + 1, 0)});
  bool expandable = !root.remaining.empty();
  while (expandable && items.size() < target) {
    expandable = false;
    std::vector<FrontierItem> next;
    next.reserve(items.size() * 2);
    for (FrontierItem& item : items) {
      if (item.state.remaining.empty()) {
        next.push_back(std::move(item));
        continue;
      }
      for (int v : branch_choices(g, item.state)) {
        FrontierItem child{advance(g, item.state, v), item.labels};
        child.labels[static_cast<std::size_t>(v)] = item.state.next_label;
        expandable = expandable || !child.state.remaining.empty();
        next.push_back(std::move(child));
      }
    }
    items = std::move(next);
    if (items.empty()) break;
  }
  return items;
}

// Runs fn(i) for every index in [0, count), statically interleaved across
// workers.  Results must be written to per-index slots so the outcome is
// independent of scheduling.
template <typename Fn>
void parallel_for_interleaved(std::size_t count, unsigned threads, Fn&& fn) {
  unsigned workers = threads == 0 ? 1 : threads;
  if (workers == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  auto run = [&](unsigned w) {
    for (std::size_t i = w; i < count; i += workers) fn(i);
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run, w);
  run(0);
  for (std::thread& t : pool) t.join();
}

}  // namespace detail

struct CountOptions {
  std::optional<VertexSet> eligible_override;
  // External cache to fill and reuse across queries on the same graph.
  CountCache* cache = nullptr;
  bool memoize = true;
  unsigned threads = 1;
  // Capacity for caches created internally (per call, or per worker when
  // threads > 1).
  std::size_t cache_capacity = std::numeric_limits<std::size_t>::max();
};

// Number of labelings of g with peak set exactly peaks (or the widened-search
// count under an eligible override).  Memoized on the search state by
// default; results are identical with memoization off, any thread count, or
// any cache capacity.
inline BigInt count_labelings(const Graph& g, VertexSet peaks, const CountOptions& opts = {}) {
  SearchState root = initial_state(g, peaks, opts.eligible_override);
  if (!peak_set_precheck(g, peaks)) return 0;
  unsigned threads = opts.threads == 0 ? 1 : opts.threads;
  if (threads > 1) {
    auto items = detail::expand_frontier(g, root, std::size_t{threads} * 8);
    std::vector<BigInt> partial(items.size());
    detail::parallel_for_interleaved(items.size(), threads, [&](std::size_t i) {
      if (!opts.memoize) {
        partial[i] = detail::count_rec(g, items[i].state, nullptr);
      } else {
        CountCache local(opts.cache_capacity);
        partial[i] = detail::count_rec(g, items[i].state, &local);
      }
    });
    BigInt total = 0;
    for (const BigInt& p : partial) total += p;
    return total;
  }
  if (!opts.memoize) return detail::count_rec(g, root, nullptr);
  if (opts.cache) return detail::count_rec(g, root, opts.cache);
  CountCache local(opts.cache_capacity);
  return detail::count_rec(g, root, &local);
}

struct CollectOptions {
  std::optional<VertexSet> eligible_override;
  // Stop collecting once this many labelings are held; truncated reports
  // whether more exist.
  std::optional<std::size_t> max_output;
  unsigned threads = 1;
};

struct EnumerationBatch {
  std::vector<Labeling> labelings;
  bool truncated = false;
};

// Materializes the enumeration in its deterministic order, optionally capped.
inline EnumerationBatch collect_labelings(const Graph& g, VertexSet peaks,
                                          const CollectOptions& opts = {}) {
  EnumerationBatch batch;
  std::size_t cap = opts.max_output.value_or(std::numeric_limits<std::size_t>::max());
  unsigned threads = opts.threads == 0 ? 1 : opts.threads;

  if (threads <= 1) {
    enumerate_labelings(
        g, peaks,
        [&](Labeling l) {
          if (batch.labelings.size() == cap) {
            batch.truncated = true;
            return false;
          }
          batch.labelings.push_back(std::move(l));
          return true;
        },
        {opts.eligible_override});
    return batch;
  }

  SearchState root = initial_state(g, peaks, opts.eligible_override);
  if (!peak_set_precheck(g, peaks)) return batch;
  auto items = detail::expand_frontier(g, root, std::size_t{threads} * 8);
  std::vector<std::vector<Labeling>> partial(items.size());
  // Each item keeps at most cap+1 labelings: anything past the first cap of
  // the ordered concatenation can only ever signal truncation.
  std::size_t keep = cap == std::numeric_limits<std::size_t>::max() ? cap : cap + 1;
  detail::parallel_for_interleaved(items.size(), threads, [&](std::size_t i) {
    std::vector<int> labels = items[i].labels;
    auto sink = [&](Labeling l) {
      if (partial[i].size() == keep) return false;
      partial[i].push_back(std::move(l));
      return true;
    };
    detail::enumerate_rec(g, items[i].state, labels, sink);
  });
  for (std::vector<Labeling>& vec : partial) {
    for (Labeling& l : vec) {
      if (batch.labelings.size() == cap) {
        batch.truncated = true;
        return batch;
      }
      batch.labelings.push_back(std::move(l));
    }
  }
  return batch;
}

// Whether at least one labeling of g has peak set exactly peaks.  Stops at
// the first witness.
inline bool is_admissible(const Graph& g, VertexSet peaks) {
  bool found = false;
  enumerate_labelings(g, peaks, [&](const Labeling&) {
    found = true;
    return false;
  });
  return found;
}

// Every admissible peak set of g with its count, ordered by ascending set
// bitmask.  Candidates are the independent sets of degree->=2 vertices;
// counts share one cache.  Guarded by an explicit vertex bound because the
// candidate space is exponential.
inline std::vector<std::pair<VertexSet, BigInt>> admissible_sets(const Graph& g,
                                                                 int max_vertices = 16) {
  if (g.vertex_count() > max_vertices)
    throw ResourceLimitError("admissible-set sweep over " + std::to_string(g.vertex_count()) +
                             " vertices exceeds the limit of " + std::to_string(max_vertices));
  VertexSet high;
  for (int v : g.vertices())
    if (g.degree(v) >= 2) high = high.with(v);

  std::vector<VertexSet> candidates;
  auto grow = [&](auto&& self, int min_vertex, VertexSet current) -> void {
    candidates.push_back(current);
    for (int v : high) {
      if (v < min_vertex) continue;
      if (g.neighbors(v).intersects(current)) continue;
      self(self, v + 1, current.with(v));
    }
  };
  grow(grow, 1, VertexSet{});
  std::sort(candidates.begin(), candidates.end());

  CountCache cache;
  std::vector<std::pair<VertexSet, BigInt>> out;
  for (VertexSet s : candidates) {
    BigInt c = count_labelings(g, s, {.cache = &cache});
    if (c != 0) out.emplace_back(s, std::move(c));
  }
  return out;
}

}  // namespace peakset
