#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "peakset/families.hpp"
#include "peakset/graph.hpp"
#include "peakset/graphio.hpp"
#include "peakset/oracle.hpp"

namespace peakset {

// One graph to be replayed against the brute-force oracle.  join_left > 0
// marks a join of two sides both larger than one vertex (left side being
// vertices 1..join_left); for those the realized peak sets must each lie
// entirely within one side.
struct CorpusEntry {
  std::string name;
  Graph graph;
  int join_left = 0;
};

// Fixed mix of family graphs plus seeded random graphs (each possible edge
// tossed with an unbiased coin from one shared mt19937 stream, so the corpus
// is reproducible from the seed alone).
inline std::vector<CorpusEntry> verification_corpus(std::uint64_t seed = 12345) {
  std::vector<CorpusEntry> corpus;
  auto add = [&](std::string name, Graph g, int join_left = 0) {
    corpus.push_back({std::move(name), std::move(g), join_left});
  };

  for (int n = 2; n <= 7; ++n) add("path_" + std::to_string(n), path_graph(n));
  for (int n = 3; n <= 7; ++n) add("cycle_" + std::to_string(n), cycle_graph(n));
  for (int n = 2; n <= 6; ++n) add("complete_" + std::to_string(n), complete_graph(n));
  for (int n = 1; n <= 6; ++n) add("null_" + std::to_string(n), null_graph(n));
  for (int n = 3; n <= 7; ++n)
    add("star_" + std::to_string(n), build_family(FamilySpec::star(n)));
  for (int n = 3; n <= 6; ++n)
    add("wheel_" + std::to_string(n), build_family(FamilySpec::wheel(n)));
  for (int a = 1; a <= 3; ++a)
    for (int b = a; a + b <= 7; ++b)
      add("complete_bipartite_" + std::to_string(a) + "_" + std::to_string(b),
          build_family(FamilySpec::complete_bipartite(a, b)),
          a >= 2 ? a : 0);
  for (int k = 2; k <= 3; ++k)
    add("windmill_" + std::to_string(k), build_family(FamilySpec::windmill(k)));

  add("fan_2_3", build_family(FamilySpec::fan(2, 3)), 2);
  add("cone_2_3", build_family(FamilySpec::cone(2, 3)), 3);
  add("ternary_star_6_3", build_family(FamilySpec::ternary_star(6, 3)), 3);
  add("join_null3_path2", join_graphs(null_graph(3), path_graph(2)), 3);
  add("join_complete2_path3", join_graphs(complete_graph(2), path_graph(3)), 2);

  std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
  for (int idx = 0; idx < 20; ++idx) {
    int n = 5 + idx % 3;
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (rng() & 1u) edges.emplace_back(u, v);
    std::string tag = std::to_string(idx);
    if (tag.size() < 2) tag = "0" + tag;
    add("random_" + std::to_string(n) + "_" + tag, Graph(n, std::move(edges)));
  }
  return corpus;
}

struct VerificationReport {
  struct Entry {
    std::string name;
    int n = 0;
    int subsets_checked = 0;
    bool completeness_ok = false;
    bool sidedness_ok = true;
    std::vector<CrossValidation::Mismatch> mismatches;

    bool ok() const { return completeness_ok && sidedness_ok && mismatches.empty(); }
  };

  int oracle_limit = 0;
  std::vector<Entry> entries;

  bool ok() const {
    for (const Entry& e : entries)
      if (!e.ok()) return false;
    return true;
  }
};

// Replays every corpus entry against the oracle: exact labeling sets and
// counts for every vertex subset, count completeness (sum over all subsets
// is n!), and one-sidedness of realized peak sets on two-sided joins.
inline VerificationReport run_verification(const std::vector<CorpusEntry>& corpus,
                                           int oracle_limit = 10, unsigned threads = 1) {
  VerificationReport report;
  report.oracle_limit = oracle_limit;
  for (const CorpusEntry& entry : corpus) {
    CrossValidation cv = cross_validate(entry.graph, oracle_limit, threads);
    VerificationReport::Entry out;
    out.name = entry.name;
    out.n = cv.n;
    out.subsets_checked = cv.subsets_checked;
    out.completeness_ok = cv.completeness_ok;
    out.mismatches = std::move(cv.mismatches);
    if (entry.join_left > 0) {
      VertexSet left = VertexSet::full(entry.join_left);
      PeakDistribution dist = peak_distribution(entry.graph, oracle_limit, threads);
      for (const auto& [s, c] : dist.counts) {
        if (s.empty()) continue;
        if (!s.subset_of(left) && s.intersects(left)) out.sidedness_ok = false;
      }
    }
    report.entries.push_back(std::move(out));
  }
  return report;
}

inline std::string render_results(const VerificationReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: {
      detail::json j;
      j["oracle_limit"] = report.oracle_limit;
      j["graphs"] = detail::json::array();
      for (const auto& e : report.entries) {
        detail::json row;
        row["name"] = e.name;
        row["n"] = e.n;
        row["subsets_checked"] = e.subsets_checked;
        row["completeness_ok"] = e.completeness_ok;
        row["sidedness_ok"] = e.sidedness_ok;
        row["mismatches"] = detail::json::array();
        for (const auto& m : e.mismatches) {
          detail::json mm;
          mm["peaks"] = detail::peaks_json(m.peaks);
          mm["oracle_count"] = m.oracle_count.str();
          mm["engine_count"] = m.engine_count.str();
          mm["sets_match"] = m.sets_match;
          row["mismatches"].push_back(mm);
        }
        row["ok"] = e.ok();
        j["graphs"].push_back(row);
      }
      j["ok"] = report.ok();
      return detail::dump(j);
    }
    case OutputFormat::csv: {
      std::string out = "name,n,subsets_checked,ok\n";
      for (const auto& e : report.entries)
        out += e.name + "," + std::to_string(e.n) + "," + std::to_string(e.subsets_checked) +
               "," + (e.ok() ? "true" : "false") + "\n";
      return out;
    }
    case OutputFormat::text: {
      std::string out = "verifying " + std::to_string(report.entries.size()) +
                        " graphs against the brute-force oracle (limit n = " +
                        std::to_string(report.oracle_limit) + ")\n";
      for (const auto& e : report.entries) {
        if (e.ok()) {
          out += "ok   " + e.name + " (n=" + std::to_string(e.n) + ", " +
                 std::to_string(e.subsets_checked) + " peak sets)\n";
          continue;
        }
        out += "FAIL " + e.name + " (n=" + std::to_string(e.n) + ")";
        if (!e.completeness_ok) out += " counts do not sum to n!;";
        if (!e.sidedness_ok) out += " two-sided peak set realized on a join;";
        for (const auto& m : e.mismatches)
          out += " " + to_string(m.peaks) + " oracle=" + m.oracle_count.str() +
                 " engine=" + m.engine_count.str() + (m.sets_match ? "" : " (sets differ)") +
                 ";";
        out += "\n";
      }
      out += report.ok() ? "result: all graphs consistent\n" : "result: FAILURES FOUND\n";
      return out;
    }
  }
  throw InputError("unknown output format");
}

}  // namespace peakset
