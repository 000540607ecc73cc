#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "peakset/bigint.hpp"
#include "peakset/enumerate.hpp"
#include "peakset/errors.hpp"
#include "peakset/graph.hpp"

namespace peakset {

// Everything in this header answers queries by scanning all n! labelings and
// applying the peak-set definition directly.  It shares no logic with the
// recursive enumerator, which makes it a meaningful cross-check; the price is
// factorial time, hence the hard vertex limit.

namespace detail {

inline void check_oracle_limit(const Graph& g, int limit) {
  if (g.vertex_count() > limit)
    throw ResourceLimitError("brute force over " + std::to_string(g.vertex_count()) +
                             "! labelings exceeds the limit of n = " + std::to_string(limit));
}

// Visits every labeling whose first entry (the label of vertex 1) equals
// first_label, in lexicographic order of the label tuple.  The blocks for
// first_label = 1..n partition all n! labelings and concatenating them in
// that order yields the full lexicographic order, which is what makes
// block-parallel scans deterministic.
template <typename Fn>
void scan_labeling_block(int n, int first_label, Fn&& fn) {
  std::vector<int> labels;
  labels.reserve(static_cast<std::size_t>(n));
  labels.push_back(first_label);
  for (int x = 1; x <= n; ++x)
    if (x != first_label) labels.push_back(x);
  do {
    fn(static_cast<const std::vector<int>&>(labels));
  } while (std::next_permutation(labels.begin() + 1, labels.end()));
}

// Runs one collector per block, in parallel, then folds them in block order.
template <typename Collector>
std::vector<Collector> scan_blocks(const Graph& g, unsigned threads, Collector prototype) {
  int n = g.vertex_count();
  std::vector<Collector> per_block(static_cast<std::size_t>(n), prototype);
  parallel_for_interleaved(static_cast<std::size_t>(n), threads, [&](std::size_t i) {
    scan_labeling_block(n, static_cast<int>(i) + 1,
                        [&](const std::vector<int>& labels) { per_block[i].visit(g, labels); });
  });
  return per_block;
}

struct MatchCollector {
  VertexSet peaks;
  std::vector<Labeling> out;
  void visit(const Graph& g, const std::vector<int>& labels) {
    if (peak_set(g, labels) == peaks) out.push_back(Labeling::unchecked(labels));
  }
};

struct DistributionCollector {
  std::map<VertexSet, BigInt> counts;
  void visit(const Graph& g, const std::vector<int>& labels) {
    counts[peak_set(g, labels)] += 1;
  }
};

}  // namespace detail

// All labelings of g with peak set exactly peaks, in lexicographic order of
// the label tuple.
inline std::vector<Labeling> brute_force_labelings(const Graph& g, VertexSet peaks,
                                                   int limit = 10, unsigned threads = 1) {
  detail::check_oracle_limit(g, limit);
  if (!peaks.subset_of(g.vertices()))
    throw InputError("peak set " + to_string(peaks) + " is not a subset of the vertices");
  auto blocks = detail::scan_blocks(g, threads, detail::MatchCollector{peaks, {}});
  std::vector<Labeling> out;
  for (auto& b : blocks)
    for (Labeling& l : b.out) out.push_back(std::move(l));
  return out;
}

// Counts of every realized peak set, keyed in ascending bitmask order.
struct PeakDistribution {
  std::map<VertexSet, BigInt> counts;

  BigInt total() const {
    BigInt t = 0;
    for (const auto& [s, c] : counts) t += c;
    return t;
  }
};

inline PeakDistribution peak_distribution(const Graph& g, int limit = 10, unsigned threads = 1) {
  detail::check_oracle_limit(g, limit);
  auto blocks = detail::scan_blocks(g, threads, detail::DistributionCollector{});
  PeakDistribution dist;
  for (auto& b : blocks)
    for (auto& [s, c] : b.counts) dist.counts[s] += c;
  return dist;
}

// All labelings whose peak set S' satisfies peaks <= S' <= peaks + extra,
// where extra is the eligible-override surplus minus neighbors of peaks.
// This is the reference semantics for enumerate_labelings with an
// eligible_override, evaluated by direct scan.
inline std::vector<Labeling> brute_force_widened(const Graph& g, VertexSet peaks,
                                                 VertexSet eligible, int limit = 10) {
  detail::check_oracle_limit(g, limit);
  VertexSet low = low_degree_vertices(g, g.vertices());
  if (!low.subset_of(eligible))
    throw InputError("eligible set must contain every vertex of degree below two");
  if (!eligible.subset_of(g.vertices()) || !peaks.subset_of(g.vertices()))
    throw InputError("peak or eligible set out of range");
  VertexSet extra = (eligible - peaks) - neighborhood(g, peaks);
  std::vector<Labeling> out;
  for (int first = 1; first <= g.vertex_count(); ++first) {
    detail::scan_labeling_block(g.vertex_count(), first, [&](const std::vector<int>& labels) {
      VertexSet s = peak_set(g, labels);
      if (peaks.subset_of(s) && s.subset_of(peaks | extra)) out.push_back(Labeling::unchecked(labels));
    });
  }
  return out;
}

// Result of replaying every peak-set query on one graph against the oracle.
struct CrossValidation {
  struct Mismatch {
    VertexSet peaks;
    BigInt oracle_count;
    BigInt engine_count;
    bool sets_match = false;
  };

  int n = 0;
  int subsets_checked = 0;
  bool completeness_ok = false;  // engine counts over all subsets sum to n!
  std::vector<Mismatch> mismatches;

  bool ok() const { return completeness_ok && mismatches.empty(); }
};

namespace detail {

// Labelings pack into one word (5 bits per label) for cheap set comparison.
inline std::uint64_t pack_labels(const std::vector<int>& labels) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < labels.size(); ++i)
    key |= static_cast<std::uint64_t>(labels[i] - 1) << (5 * i);
  return key;
}

struct GroupCollector {
  std::vector<std::vector<std::uint64_t>> by_mask;
  void visit(const Graph& g, const std::vector<int>& labels) {
    by_mask[peak_set(g, labels).bits()].push_back(pack_labels(labels));
  }
};

}  // namespace detail

// For every subset S of the vertices, compares the recursive enumerator and
// the memoized counter against the brute-force scan: the labeling sets must
// match exactly (no omissions, no duplicates) and the counts must agree.
// Packing restricts this to n <= 12; the limit argument is the binding one
// in practice.
inline CrossValidation cross_validate(const Graph& g, int limit = 10, unsigned threads = 1) {
  detail::check_oracle_limit(g, limit);
  int n = g.vertex_count();
  if (n > 12) throw ResourceLimitError("cross-validation supports at most 12 vertices");

  detail::GroupCollector proto;
  proto.by_mask.resize(std::size_t{1} << n);
  auto blocks = detail::scan_blocks(g, threads, std::move(proto));
  std::vector<std::vector<std::uint64_t>> oracle(std::size_t{1} << n);
  for (auto& b : blocks)
    for (std::size_t m = 0; m < oracle.size(); ++m)
      oracle[m].insert(oracle[m].end(), b.by_mask[m].begin(), b.by_mask[m].end());

  CrossValidation report;
  report.n = n;
  CountCache cache;
  BigInt engine_total = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    VertexSet s = VertexSet::from_bits(m);
    ++report.subsets_checked;

    EnumerationBatch batch = collect_labelings(g, s, {.threads = threads});
    std::vector<std::uint64_t> engine;
    engine.reserve(batch.labelings.size());
    for (const Labeling& l : batch.labelings) engine.push_back(detail::pack_labels(l.labels()));
    std::sort(engine.begin(), engine.end());
    std::sort(oracle[m].begin(), oracle[m].end());
    bool unique = std::adjacent_find(engine.begin(), engine.end()) == engine.end();

    BigInt count = count_labelings(g, s, {.cache = &cache, .threads = threads});
    engine_total += count;

    BigInt oracle_count = static_cast<BigInt>(oracle[m].size());
    bool sets_match = unique && engine == oracle[m];
    if (!sets_match || count != oracle_count ||
        count != static_cast<BigInt>(engine.size())) {
      report.mismatches.push_back({s, oracle_count, count, sets_match});
    }
  }
  report.completeness_ok = engine_total == factorial(n);
  return report;
}

}  // namespace peakset
