#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "json.hpp"
#include "peakset/families.hpp"
#include "peakset/graphio.hpp"
#include "test_util.hpp"

using namespace peakset;

TEST_CASE("edge list parsing") {
  GraphDocument doc = parse_graph_document(
      "# name: sample\n"
      "# anything else is a plain comment\n"
      "n 4\n"
      "\n"
      "e 1 2\n"
      "e 3 1\n"
      "  e 2 3  \n"
      "e 3 4\n");
  CHECK(doc.n == 4);
  CHECK(doc.name == "sample");
  CHECK(doc.edges == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}, {3, 4}});
  CHECK(doc.to_graph().degree(3) == 3);
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      parse_graph_document(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("e 1 2\n") == 1);                       // edge before header
  CHECK(line_of("n 3\nn 4\n") == 2);                    // duplicate header
  CHECK(line_of("n 3\ne 1 9\n") == 2);                  // out of range
  CHECK(line_of("n 3\ne 1 1\n") == 2);                  // self-loop
  CHECK(line_of("n 3\ne 1 2\ne 2 1\n") == 3);           // duplicate edge
  CHECK(line_of("n 3\nq 1 2\n") == 2);                  // unknown directive
  CHECK(line_of("n 3\ne 1\n") == 2);                    // missing endpoint
  CHECK(line_of("n zero\n") == 1);                      // bad integer
  CHECK(line_of("n 0\n") == 1);                         // empty graph
  CHECK(line_of("n 65\n") == 1);                        // over the limit
  CHECK(line_of("# only a comment\n") == 1);            // missing header
  CHECK(line_of("") == 1);                              // empty input
}

TEST_CASE("render and reparse is the identity") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + static_cast<int>(rng() % 10);
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (rng() & 1u) edges.emplace_back(u, v);
    GraphDocument doc = GraphDocument::from_graph(Graph(n, edges),
                                                  trial % 2 ? "g" + std::to_string(trial) : "");
    GraphDocument back = parse_graph_document(render_graph(doc));
    CHECK(back.n == doc.n);
    CHECK(back.edges == doc.edges);
    CHECK(back.name == doc.name);
    CHECK(render_graph(back) == render_graph(doc));
  }
}

TEST_CASE("vertex set parsing and formatting") {
  CHECK(parse_vertex_set("", 5) == VertexSet{});
  CHECK(parse_vertex_set("  ", 5) == VertexSet{});
  CHECK(parse_vertex_set("1,3", 5) == VertexSet::of({1, 3}));
  CHECK(parse_vertex_set(" 3 , 1 ", 5) == VertexSet::of({1, 3}));
  CHECK(parse_vertex_set("5", 5) == VertexSet::of({5}));
  CHECK_THROWS_AS(parse_vertex_set("0", 5), InputError);
  CHECK_THROWS_AS(parse_vertex_set("6", 5), InputError);
  CHECK_THROWS_AS(parse_vertex_set("2,2", 5), InputError);
  CHECK_THROWS_AS(parse_vertex_set("a", 5), InputError);
  CHECK_THROWS_AS(parse_vertex_set("1,,3", 5), InputError);

  CHECK(format_vertex_set(VertexSet::of({1, 3})) == "1,3");
  CHECK(format_vertex_set(VertexSet{}) == "");

  CHECK(parse_output_format("json") == OutputFormat::json);
  CHECK_THROWS_AS(parse_output_format("xml"), InputError);
}

TEST_CASE("count payload rendering") {
  GraphDocument doc = GraphDocument::from_graph(cycle_graph(5), "cycle5");
  CountPayload payload{doc, VertexSet::of({1, 3}), BigInt(16)};

  std::string text = render_results(payload, OutputFormat::text);
  CHECK(text == "16\n");
  CHECK(render_results(payload, OutputFormat::csv) == "16\n");

  std::string js = render_results(payload, OutputFormat::json);
  CHECK(render_results(payload, OutputFormat::json) == js);  // stable bytes

  auto parsed = nlohmann::json::parse(js);
  CHECK(parsed["graph"]["n"] == 5);
  CHECK(parsed["graph"]["edges"].size() == 5);
  CHECK(parsed["graph"]["edges"][0] == nlohmann::json::array({1, 2}));
  CHECK(parsed["peaks"] == nlohmann::json::array({1, 3}));
  CHECK(parsed["count"] == "16");

  // Fixed field order in the emitted bytes.
  CHECK(js.find("\"graph\"") != std::string::npos);
  CHECK(js.find("\"graph\"") < js.find("\"peaks\""));
  CHECK(js.find("\"peaks\"") < js.find("\"count\""));
}

TEST_CASE("enumeration payload rendering") {
  GraphDocument doc = GraphDocument::from_graph(path_graph(3), "path3");
  std::vector<Labeling> ls = {Labeling({1, 3, 2}), Labeling({2, 3, 1})};
  EnumerationPayload payload{doc, VertexSet::of({2}), ls, false};

  CHECK(render_results(payload, OutputFormat::csv) == "1,3,2\n2,3,1\n");
  CHECK(render_results(payload, OutputFormat::text) == "1 3 2\n2 3 1\n2 labelings\n");

  auto parsed = nlohmann::json::parse(render_results(payload, OutputFormat::json));
  CHECK(parsed["count"] == "2");
  CHECK(parsed["labelings"] == nlohmann::json::array({{1, 3, 2}, {2, 3, 1}}));
  CHECK(parsed["truncated"] == false);

  EnumerationPayload cut{doc, VertexSet::of({2}), {Labeling({1, 3, 2})}, true};
  CHECK(render_results(cut, OutputFormat::text) == "1 3 2\n1 labelings (truncated)\n");
  auto parsed_cut = nlohmann::json::parse(render_results(cut, OutputFormat::json));
  CHECK(parsed_cut["truncated"] == true);

  std::string js = render_results(payload, OutputFormat::json);
  CHECK(js.find("\"peaks\"") < js.find("\"count\""));
  CHECK(js.find("\"count\"") < js.find("\"labelings\""));
  CHECK(js.find("\"labelings\"") < js.find("\"truncated\""));
}

TEST_CASE("distribution payload rendering") {
  GraphDocument doc = GraphDocument::from_graph(path_graph(3), "path3");
  PeakDistribution dist;
  dist.counts[VertexSet{}] = 4;
  dist.counts[VertexSet::of({2})] = 2;
  DistributionPayload payload{doc, dist};

  CHECK(render_results(payload, OutputFormat::csv) == "peaks,count\n,4\n2,2\n");
  CHECK(render_results(payload, OutputFormat::text) == "{}: 4\n{2}: 2\ntotal: 6\n");

  auto parsed = nlohmann::json::parse(render_results(payload, OutputFormat::json));
  CHECK(parsed["distribution"].size() == 2);
  CHECK(parsed["distribution"][0]["peaks"] == nlohmann::json::array());
  CHECK(parsed["distribution"][0]["count"] == "4");
  CHECK(parsed["distribution"][1]["peaks"] == nlohmann::json::array({2}));
  CHECK(parsed["total"] == "6");
}
