#include <catch2/catch_amalgamated.hpp>

#include "peakset/families.hpp"
#include "peakset/oracle.hpp"
#include "test_util.hpp"

using namespace peakset;

TEST_CASE("brute force emits matching labelings in lexicographic order") {
  // Frozen by hand for the 4-path with peak set {2}.
  auto expected = test_util::digit_rows(
      {"1324", "1423", "1432", "2314", "2413", "2431", "3412", "3421"});
  auto got = brute_force_labelings(path_graph(4), VertexSet::of({2}));
  REQUIRE(got.size() == expected.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].labels() == expected[i]);

  // Same result when scanned with several workers.
  auto par = brute_force_labelings(path_graph(4), VertexSet::of({2}), 10, 4);
  CHECK(par == got);
}

TEST_CASE("brute force respects the factorial limit") {
  CHECK_THROWS_AS(brute_force_labelings(path_graph(4), VertexSet::of({2}), 3),
                  ResourceLimitError);
  CHECK_THROWS_AS(peak_distribution(path_graph(11)), ResourceLimitError);
  CHECK_THROWS_AS(brute_force_labelings(path_graph(4), VertexSet::of({9})), InputError);
}

TEST_CASE("peak distributions") {
  PeakDistribution c3 = peak_distribution(cycle_graph(3));
  REQUIRE(c3.counts.size() == 3);
  CHECK(c3.counts.at(VertexSet::of({1})) == 2);
  CHECK(c3.counts.at(VertexSet::of({2})) == 2);
  CHECK(c3.counts.at(VertexSet::of({3})) == 2);
  CHECK(c3.total() == 6);

  PeakDistribution n2 = peak_distribution(null_graph(2));
  REQUIRE(n2.counts.size() == 1);
  CHECK(n2.counts.at(VertexSet{}) == 2);

  PeakDistribution wm2 = peak_distribution(build_family(FamilySpec::windmill(2)));
  CHECK(wm2.total() == 120);
  CHECK(wm2.counts.at(VertexSet::of({1})) == 8);
  CHECK(wm2.counts.at(VertexSet::of({5})) == 24);
  CHECK(wm2.counts.at(VertexSet::of({1, 3})) == 16);
  CHECK(wm2.counts.at(VertexSet::of({2, 4})) == 16);
  CHECK(wm2.counts.size() == 9);

  PeakDistribution par = peak_distribution(build_family(FamilySpec::windmill(2)), 10, 4);
  CHECK(par.counts == wm2.counts);
}

TEST_CASE("widened brute force") {
  Graph p4 = path_graph(4);
  VertexSet low = VertexSet::of({1, 4});

  // No extras: plain peak-set matching.
  auto exact = brute_force_widened(p4, VertexSet::of({2}), low);
  auto plain = brute_force_labelings(p4, VertexSet::of({2}));
  CHECK(test_util::sorted_labels(exact) == test_util::sorted_labels(plain));

  // Everything eligible and no required peaks: every labeling qualifies.
  auto all = brute_force_widened(p4, VertexSet{}, p4.vertices());
  CHECK(all.size() == 24);

  // Degree-one vertices cannot be peaks, so extras there change nothing.
  auto still_exact = brute_force_widened(p4, VertexSet{}, low);
  CHECK(still_exact.size() == 8);  // labelings with no peak at 2 or 3

  CHECK_THROWS_AS(brute_force_widened(p4, VertexSet{}, VertexSet::of({1})), InputError);
}

TEST_CASE("cross validation passes on healthy graphs") {
  for (const Graph& g : {test_util::triangle_pendant(), cycle_graph(4),
                         build_family(FamilySpec::complete_bipartite(2, 2))}) {
    CrossValidation report = cross_validate(g);
    CHECK(report.ok());
    CHECK(report.subsets_checked == (1 << g.vertex_count()));
    CHECK(report.completeness_ok);
    CHECK(report.mismatches.empty());
  }
  CrossValidation par = cross_validate(cycle_graph(5), 10, 4);
  CHECK(par.ok());
}
