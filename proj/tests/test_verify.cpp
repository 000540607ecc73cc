#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "json.hpp"
#include "peakset/verify.hpp"

using namespace peakset;

TEST_CASE("corpus composition") {
  auto corpus = verification_corpus();
  // 6 paths + 5 cycles + 5 complete + 6 null + 5 stars + 4 wheels
  // + 12 complete bipartite + 2 windmills + 5 join extras + 20 random.
  CHECK(corpus.size() == 70);

  std::set<std::string> names;
  for (const auto& e : corpus) {
    CHECK(names.insert(e.name).second);
    CHECK(e.graph.vertex_count() >= 1);
    CHECK(e.graph.vertex_count() <= 7);
    if (e.join_left > 0) {
      CHECK(e.join_left >= 2);
      CHECK(e.graph.vertex_count() - e.join_left >= 2);
    }
  }
  CHECK(names.count("path_2") == 1);
  CHECK(names.count("cycle_7") == 1);
  CHECK(names.count("complete_bipartite_3_4") == 1);
  CHECK(names.count("windmill_3") == 1);
  CHECK(names.count("random_7_02") == 1);
  CHECK(names.count("random_6_19") == 1);
}

TEST_CASE("corpus is reproducible from its seed") {
  auto a = verification_corpus(777);
  auto b = verification_corpus(777);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].graph.edges() == b[i].graph.edges());
  }
}

TEST_CASE("verification over a slice of the corpus") {
  auto corpus = verification_corpus();
  std::vector<CorpusEntry> slice;
  for (const auto& e : corpus)
    if (e.name == "path_4" || e.name == "cycle_4" || e.name == "windmill_2" ||
        e.name == "complete_bipartite_2_2" || e.name == "random_5_00")
      slice.push_back(e);
  REQUIRE(slice.size() == 5);

  VerificationReport report = run_verification(slice);
  CHECK(report.ok());
  REQUIRE(report.entries.size() == 5);
  for (const auto& e : report.entries) {
    CHECK(e.ok());
    CHECK(e.completeness_ok);
    CHECK(e.sidedness_ok);
    CHECK(e.subsets_checked == (1 << e.n));
  }

  std::string text = render_results(report, OutputFormat::text);
  CHECK(text.find("result: all graphs consistent") != std::string::npos);
  CHECK(text.find("ok   path_4") != std::string::npos);
  CHECK(render_results(report, OutputFormat::text) == text);

  std::string csv = render_results(report, OutputFormat::csv);
  CHECK(csv.find("name,n,subsets_checked,ok") == 0);
  CHECK(csv.find("path_4,4,16,true") != std::string::npos);

  auto parsed = nlohmann::json::parse(render_results(report, OutputFormat::json));
  CHECK(parsed["ok"] == true);
  CHECK(parsed["graphs"].size() == 5);
  CHECK(parsed["graphs"][0]["name"] == "path_4");
  CHECK(parsed["graphs"][0]["mismatches"].empty());
}

TEST_CASE("report flags a fabricated mismatch") {
  VerificationReport report;
  report.oracle_limit = 10;
  VerificationReport::Entry bad;
  bad.name = "made_up";
  bad.n = 3;
  bad.subsets_checked = 8;
  bad.completeness_ok = true;
  bad.mismatches.push_back({VertexSet::of({2}), BigInt(2), BigInt(3), false});
  report.entries.push_back(bad);

  CHECK_FALSE(report.ok());
  std::string text = render_results(report, OutputFormat::text);
  CHECK(text.find("FAIL made_up") != std::string::npos);
  CHECK(text.find("oracle=2") != std::string::npos);
  CHECK(text.find("engine=3") != std::string::npos);
  CHECK(text.find("result: FAILURES FOUND") != std::string::npos);
  auto parsed = nlohmann::json::parse(render_results(report, OutputFormat::json));
  CHECK(parsed["ok"] == false);
  CHECK(parsed["graphs"][0]["mismatches"].size() == 1);
}
