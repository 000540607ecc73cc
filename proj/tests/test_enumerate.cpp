#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "peakset/enumerate.hpp"
#include "peakset/families.hpp"
#include "peakset/oracle.hpp"
#include "test_util.hpp"

using namespace peakset;

namespace {

// Frozen by brute force: all labelings of the triangle-with-pendant graph
// whose only peak is vertex 1, sorted.
const std::vector<std::string> kTrianglePendantPeak1 = {
    "3124", "3214", "4123", "4132", "4213", "4231", "4312", "4321"};

// Frozen by brute force: all labelings of the 5-cycle with peak set {1,3},
// sorted.
const std::vector<std::string> kCycle5Peaks13 = {
    "31542", "32541", "41523", "41532", "42513", "42531", "43512", "43521",
    "51324", "51423", "51432", "52314", "52413", "52431", "53412", "53421"};

std::vector<std::vector<int>> collect_sorted(const Graph& g, VertexSet s,
                                             const CollectOptions& opts = {}) {
  return test_util::sorted_labels(collect_labelings(g, s, opts).labelings);
}

}  // namespace

TEST_CASE("search state mechanics") {
  Graph g = test_util::triangle_pendant();
  SearchState root = initial_state(g, VertexSet::of({1}));
  CHECK(root.remaining == g.vertices());
  CHECK(root.pending_peaks == VertexSet::of({1}));
  CHECK(root.eligible == VertexSet::of({4}));
  CHECK(root.next_label == 4);

  // Vertex 4 can take label 4 without becoming a peak; 2 and 3 are frozen
  // under the pending peak at 1.
  CHECK(branch_choices(g, root) == VertexSet::of({1, 4}));

  SearchState after1 = apply_choice(g, root, 1);
  CHECK(after1.remaining == VertexSet::of({2, 3, 4}));
  CHECK(after1.pending_peaks.empty());
  CHECK(after1.eligible == VertexSet::of({2, 3, 4}));
  CHECK(after1.next_label == 3);
  CHECK(branch_choices(g, after1) == VertexSet::of({2, 3, 4}));

  CHECK_THROWS_AS(apply_choice(g, root, 2), InputError);
  CHECK_THROWS_AS(apply_choice(g, root, 7), InputError);
  CHECK_THROWS_AS(initial_state(g, VertexSet::of({6})), InputError);

  // A pending peak is only choosable; once chosen it never returns.
  SearchState after4 = apply_choice(g, root, 4);
  CHECK(after4.pending_peaks == VertexSet::of({1}));
  CHECK(after4.eligible == VertexSet::of({3}));
  CHECK(branch_choices(g, after4) == VertexSet::of({1}));
}

TEST_CASE("precheck rejects impossible peak sets") {
  Graph g = test_util::triangle_pendant();
  CHECK(peak_set_precheck(g, VertexSet::of({1})));
  CHECK(peak_set_precheck(g, VertexSet{}));
  CHECK_FALSE(peak_set_precheck(g, VertexSet::of({4})));      // degree 1
  CHECK_FALSE(peak_set_precheck(g, VertexSet::of({1, 2})));   // adjacent
  CHECK(count_labelings(g, VertexSet::of({4})) == 0);
  CHECK(count_labelings(g, VertexSet::of({1, 2})) == 0);
  CHECK(collect_labelings(g, VertexSet::of({4})).labelings.empty());
}

TEST_CASE("frozen enumerations") {
  Graph g = test_util::triangle_pendant();
  CHECK(collect_sorted(g, VertexSet::of({1})) ==
        test_util::digit_rows(kTrianglePendantPeak1));
  CHECK(count_labelings(g, VertexSet::of({1})) == 8);

  Graph c5 = cycle_graph(5);
  CHECK(collect_sorted(c5, VertexSet::of({1, 3})) == test_util::digit_rows(kCycle5Peaks13));
  CHECK(count_labelings(c5, VertexSet::of({1, 3})) == 16);

  // Emitted labelings really do have the requested peak set, and are unique.
  auto batch = collect_labelings(c5, VertexSet::of({1, 3}));
  std::set<std::vector<int>> seen;
  for (const Labeling& l : batch.labelings) {
    CHECK(peak_set(c5, l) == VertexSet::of({1, 3}));
    CHECK(seen.insert(l.labels()).second);
  }
}

TEST_CASE("frozen counts across small families") {
  CHECK(count_labelings(path_graph(3), VertexSet{}) == 4);
  CHECK(count_labelings(path_graph(3), VertexSet::of({2})) == 2);
  CHECK(count_labelings(null_graph(2), VertexSet{}) == 2);
  CHECK(count_labelings(cycle_graph(3), VertexSet::of({1})) == 2);
  CHECK(count_labelings(cycle_graph(3), VertexSet{}) == 0);

  Graph star4 = build_family(FamilySpec::star(4));
  CHECK(count_labelings(star4, VertexSet{}) == 18);
  CHECK(count_labelings(star4, VertexSet::of({1})) == 6);
  CHECK(count_labelings(star4, VertexSet::of({2})) == 0);

  Graph star5 = build_family(FamilySpec::star(5));
  CHECK(count_labelings(star5, VertexSet{}) == 96);
  CHECK(count_labelings(star5, VertexSet::of({1})) == 24);

  Graph wm2 = build_family(FamilySpec::windmill(2));
  CHECK(count_labelings(wm2, VertexSet::of({1})) == 8);
  CHECK(count_labelings(wm2, VertexSet::of({5})) == 24);
  CHECK(count_labelings(wm2, VertexSet::of({1, 3})) == 16);
}

TEST_CASE("counts sum to n! over all subsets") {
  std::mt19937 rng(3);
  std::vector<Graph> graphs = {path_graph(4), cycle_graph(5),
                               build_family(FamilySpec::star(5)),
                               build_family(FamilySpec::windmill(2))};
  for (int trial = 0; trial < 3; ++trial) {
    int n = 6;
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (rng() & 1u) edges.emplace_back(u, v);
    graphs.emplace_back(n, edges);
  }
  for (const Graph& g : graphs) {
    CountCache cache;
    BigInt total = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.vertex_count()); ++m)
      total += count_labelings(g, VertexSet::from_bits(m), {.cache = &cache});
    CHECK(total == factorial(g.vertex_count()));
  }
}

TEST_CASE("memoization does not change results") {
  Graph g = build_family(FamilySpec::windmill(2));
  CountCache shared;
  for (std::uint64_t m = 0; m < 32; ++m) {
    VertexSet s = VertexSet::from_bits(m);
    BigInt plain = count_labelings(g, s, {.memoize = false});
    CHECK(count_labelings(g, s) == plain);
    CHECK(count_labelings(g, s, {.cache = &shared}) == plain);
    CHECK(count_labelings(g, s, {.threads = 4}) == plain);
    CHECK(count_labelings(g, s, {.cache_capacity = 3}) == plain);
  }
  CHECK(shared.size() > 0);
}

TEST_CASE("cache capacity caps insertion but not correctness") {
  Graph p = path_graph(12);
  VertexSet s = VertexSet::of({2, 6});
  BigInt reference = count_labelings(p, s);
  CountCache tiny(4);
  CHECK(count_labelings(p, s, {.cache = &tiny}) == reference);
  CHECK(tiny.size() <= 4);
  CountCache roomy;
  CHECK(count_labelings(p, s, {.cache = &roomy}) == reference);
  CHECK(roomy.size() > 4);
}

TEST_CASE("streaming enumeration stops on demand") {
  Graph c5 = cycle_graph(5);
  int seen = 0;
  enumerate_labelings(c5, VertexSet::of({1, 3}), [&](const Labeling&) {
    return ++seen < 3;
  });
  CHECK(seen == 3);
}

TEST_CASE("collect honors max_output and reports truncation") {
  Graph c5 = cycle_graph(5);
  auto full = collect_labelings(c5, VertexSet::of({1, 3}));
  CHECK(full.labelings.size() == 16);
  CHECK_FALSE(full.truncated);

  auto cut = collect_labelings(c5, VertexSet::of({1, 3}), {.max_output = 5});
  CHECK(cut.labelings.size() == 5);
  CHECK(cut.truncated);
  for (int i = 0; i < 5; ++i) CHECK(cut.labelings[i] == full.labelings[i]);

  auto exact = collect_labelings(c5, VertexSet::of({1, 3}), {.max_output = 16});
  CHECK_FALSE(exact.truncated);
  CHECK(exact.labelings == full.labelings);
}

TEST_CASE("thread count never changes output") {
  Graph c5 = cycle_graph(5);
  auto seq = collect_labelings(c5, VertexSet::of({1, 3}));
  for (unsigned t : {2u, 4u, 7u}) {
    auto par = collect_labelings(c5, VertexSet::of({1, 3}), {.threads = t});
    CHECK(par.labelings == seq.labelings);
    CHECK(par.truncated == seq.truncated);
  }

  auto cut_seq = collect_labelings(c5, VertexSet::of({1, 3}), {.max_output = 7});
  auto cut_par = collect_labelings(c5, VertexSet::of({1, 3}), {.max_output = 7, .threads = 4});
  CHECK(cut_seq.labelings == cut_par.labelings);
  CHECK(cut_par.truncated);

  Graph p12 = path_graph(12);
  CHECK(count_labelings(p12, VertexSet::of({2, 6}), {.threads = 4}) ==
        count_labelings(p12, VertexSet::of({2, 6})));

  Graph wm3 = build_family(FamilySpec::windmill(3));
  for (std::uint64_t m = 0; m < 128; m += 13) {
    VertexSet s = VertexSet::from_bits(m);
    CHECK(count_labelings(wm3, s, {.threads = 4}) == count_labelings(wm3, s));
  }
}

TEST_CASE("widened eligible set reproduces the between-sets semantics") {
  // With eligible = low-degree plus extras, the enumeration covers exactly
  // the labelings whose peak set lies between the target and target+extras
  // (minus frozen neighbors).  The oracle computes that set by scanning.
  std::vector<Graph> graphs = {path_graph(4), test_util::triangle_pendant(), cycle_graph(4)};
  for (const Graph& g : graphs) {
    int n = g.vertex_count();
    VertexSet low = low_degree_vertices(g, g.vertices());
    VertexSet rest = g.vertices() - low;
    for (std::uint64_t sm = 0; sm < (std::uint64_t{1} << n); ++sm) {
      VertexSet s = VertexSet::from_bits(sm);
      if (!peak_set_precheck(g, s)) continue;
      for (std::uint64_t em = 0; em < (std::uint64_t{1} << rest.size()); ++em) {
        // Spread the bits of em over the non-low vertices.
        VertexSet extra;
        int bit = 0;
        for (int v : rest) {
          if ((em >> bit) & 1) extra = extra.with(v);
          ++bit;
        }
        VertexSet eligible = low | extra;
        auto engine = collect_labelings(g, s, {.eligible_override = eligible});
        auto expected = brute_force_widened(g, s, eligible);
        CHECK(test_util::sorted_labels(engine.labelings) ==
              test_util::sorted_labels(expected));
        CHECK(count_labelings(g, s, {.eligible_override = eligible}) ==
              static_cast<BigInt>(expected.size()));
      }
    }
  }
}

TEST_CASE("eligible override validation") {
  Graph p4 = path_graph(4);
  // Low-degree vertices are 1 and 4; omitting one is an error.
  CHECK_THROWS_AS(count_labelings(p4, VertexSet::of({2}),
                                  {.eligible_override = VertexSet::of({1})}),
                  InputError);
  CHECK_THROWS_AS(count_labelings(p4, VertexSet::of({2}),
                                  {.eligible_override = VertexSet::of({1, 4, 5})}),
                  InputError);
  CHECK_NOTHROW(count_labelings(p4, VertexSet::of({2}),
                                {.eligible_override = VertexSet::of({1, 4})}));
}

TEST_CASE("admissibility queries") {
  Graph c4 = cycle_graph(4);
  CHECK(is_admissible(c4, VertexSet::of({1, 3})));
  CHECK(is_admissible(c4, VertexSet::of({1})));
  CHECK_FALSE(is_admissible(c4, VertexSet::of({1, 2})));
  CHECK_FALSE(is_admissible(c4, VertexSet{}));

  Graph star4 = build_family(FamilySpec::star(4));
  CHECK(is_admissible(star4, VertexSet::of({1})));
  CHECK_FALSE(is_admissible(star4, VertexSet::of({2})));
  CHECK(is_admissible(star4, VertexSet{}));

  auto sets = admissible_sets(path_graph(3));
  REQUIRE(sets.size() == 2);
  CHECK(sets[0].first == VertexSet{});
  CHECK(sets[0].second == 4);
  CHECK(sets[1].first == VertexSet::of({2}));
  CHECK(sets[1].second == 2);

  auto null_sets = admissible_sets(null_graph(3));
  REQUIRE(null_sets.size() == 1);
  CHECK(null_sets[0].first == VertexSet{});
  CHECK(null_sets[0].second == 6);

  // Ascending bitmask order, and the counts sum to n!.
  auto c5_sets = admissible_sets(cycle_graph(5));
  BigInt total = 0;
  for (std::size_t i = 1; i < c5_sets.size(); ++i) CHECK(c5_sets[i - 1].first < c5_sets[i].first);
  for (const auto& [s, c] : c5_sets) total += c;
  CHECK(total == factorial(5));

  CHECK_THROWS_AS(admissible_sets(path_graph(17)), ResourceLimitError);
  CHECK_NOTHROW(admissible_sets(path_graph(17), 17));
}
