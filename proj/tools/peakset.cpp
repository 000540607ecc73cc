// Command-line front end for the peak-set labeling library.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 input
// parse error, 4 resource-limit refusal.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "peakset/peakset.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitResource = 4;

struct GraphSource {
  std::string file;
  std::string inline_text;
  std::string family;

  void add_options(CLI::App* cmd) {
    cmd->add_option("--graph", file, "read the graph from an edge-list file");
    cmd->add_option("--inline", inline_text,
                    "edge-list text on the command line; ';' separates lines");
    cmd->add_option("--family", family, "family spec such as cycle:5 or join:path:3+null:2");
  }

  // Builds the graph and a document describing it for output payloads.
  peakset::GraphDocument resolve() const {
    int given = (!file.empty()) + (!inline_text.empty()) + (!family.empty());
    if (given != 1)
      throw CLI::ValidationError("graph source",
                                 "give exactly one of --graph, --inline, --family");
    if (!family.empty()) {
      peakset::FamilySpec spec = peakset::parse_family_spec(family);
      return peakset::GraphDocument::from_graph(peakset::build_family(spec),
                                                peakset::to_string(spec));
    }
    if (!inline_text.empty()) {
      std::string text = inline_text;
      for (char& c : text)
        if (c == ';') c = '\n';
      return peakset::GraphDocument::from_graph(peakset::parse_graph(text), "inline");
    }
    std::ifstream in(file);
    if (!in) throw peakset::InputError("cannot open graph file '" + file + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    peakset::GraphDocument doc = peakset::parse_graph_document(buffer.str());
    if (doc.name.empty()) doc.name = file;
    return doc;
  }
};

struct CommonOptions {
  std::string peaks;
  std::string format = "json";
  unsigned threads = 1;

  void add_peaks(CLI::App* cmd) {
    cmd->add_option("--peaks", peaks, "peak set as a comma-separated vertex list (default empty)");
  }
  void add_format(CLI::App* cmd) {
    cmd->add_option("--format", format, "output format: json, csv, or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
  }
  void add_threads(CLI::App* cmd) {
    cmd->add_option("--threads", threads, "worker threads (results are identical for any value)")
        ->check(CLI::Range(1u, 64u));
  }
};

void emit(const std::string& s) { std::fputs(s.c_str(), stdout); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact enumeration and counting of graph labelings by peak set"};
  app.require_subcommand(1);

  GraphSource source;
  CommonOptions common;

  std::size_t max_output = 10000;
  int oracle_limit = 10;
  int admissible_limit = 16;
  bool no_memo = false;
  bool check_formula = false;
  std::string family_only;
  std::string positions;
  std::uint64_t seed = 12345;

  CLI::App* count = app.add_subcommand("count", "count labelings with the given peak set");
  source.add_options(count);
  common.add_peaks(count);
  common.add_format(count);
  common.add_threads(count);
  count->add_flag("--no-memo", no_memo, "disable memoization (for timing comparisons)");

  CLI::App* enumerate = app.add_subcommand("enumerate", "list labelings with the given peak set");
  source.add_options(enumerate);
  common.add_peaks(enumerate);
  common.add_format(enumerate);
  common.add_threads(enumerate);
  enumerate->add_option("--max-output", max_output, "cap on emitted labelings");

  CLI::App* distribution =
      app.add_subcommand("distribution", "count labelings for every realized peak set");
  source.add_options(distribution);
  common.add_format(distribution);
  common.add_threads(distribution);
  distribution->add_option("--oracle-limit", oracle_limit,
                           "largest n the factorial scan will accept");

  CLI::App* admissible =
      app.add_subcommand("admissible", "list every peak set with at least one labeling");
  source.add_options(admissible);
  common.add_format(admissible);
  admissible->add_option("--admissible-limit", admissible_limit,
                         "largest n the subset sweep will accept");

  CLI::App* oracle = app.add_subcommand(
      "oracle", "brute-force reference: scan all n! labelings for the given peak set");
  source.add_options(oracle);
  common.add_peaks(oracle);
  common.add_format(oracle);
  common.add_threads(oracle);
  oracle->add_option("--oracle-limit", oracle_limit, "largest n the factorial scan will accept");
  oracle->add_option("--max-output", max_output, "cap on emitted labelings");

  CLI::App* formula = app.add_subcommand(
      "formula", "closed-form count for cycles, joins, and covered family shapes");
  formula->add_option("--family", family_only, "family spec (required)")->required();
  common.add_peaks(formula);
  common.add_format(formula);
  common.add_threads(formula);
  formula->add_flag("--check", check_formula,
                    "also run the recursive engine and compare (exit 1 on disagreement)");

  CLI::App* polynomial = app.add_subcommand(
      "polynomial", "reconstruct the path peak polynomial for a set of positions");
  polynomial->add_option("--peaks", positions, "peak positions on the path, e.g. 2,5")
      ->required();
  common.add_format(polynomial);

  CLI::App* verify = app.add_subcommand(
      "verify", "replay the engine against the brute-force oracle over a corpus");
  verify->add_option("--graph", source.file, "verify this graph instead of the built-in corpus");
  verify->add_option("--inline", source.inline_text, "verify this inline graph instead");
  verify->add_option("--seed", seed, "seed for the corpus random graphs");
  verify->add_option("--oracle-limit", oracle_limit, "largest n the factorial scan will accept");
  common.add_format(verify);
  common.add_threads(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    peakset::OutputFormat format = peakset::parse_output_format(common.format);

    if (count->parsed()) {
      peakset::GraphDocument doc = source.resolve();
      peakset::Graph g = doc.to_graph();
      peakset::VertexSet s = peakset::parse_vertex_set(common.peaks, g.vertex_count());
      peakset::BigInt c = peakset::count_labelings(
          g, s, {.memoize = !no_memo, .threads = common.threads});
      emit(peakset::render_results(peakset::CountPayload{doc, s, std::move(c)}, format));
      return kExitOk;
    }

    if (enumerate->parsed()) {
      peakset::GraphDocument doc = source.resolve();
      peakset::Graph g = doc.to_graph();
      peakset::VertexSet s = peakset::parse_vertex_set(common.peaks, g.vertex_count());
      peakset::EnumerationBatch batch = peakset::collect_labelings(
          g, s, {.max_output = max_output, .threads = common.threads});
      emit(peakset::render_results(
          peakset::EnumerationPayload{doc, s, std::move(batch.labelings), batch.truncated},
          format));
      return kExitOk;
    }

    if (distribution->parsed()) {
      peakset::GraphDocument doc = source.resolve();
      peakset::Graph g = doc.to_graph();
      peakset::PeakDistribution dist =
          peakset::peak_distribution(g, oracle_limit, common.threads);
      emit(peakset::render_results(peakset::DistributionPayload{doc, std::move(dist)}, format));
      return kExitOk;
    }

    if (admissible->parsed()) {
      peakset::GraphDocument doc = source.resolve();
      peakset::Graph g = doc.to_graph();
      peakset::PeakDistribution dist;
      for (auto& [s, c] : peakset::admissible_sets(g, admissible_limit))
        dist.counts[s] = std::move(c);
      emit(peakset::render_results(peakset::DistributionPayload{doc, std::move(dist)}, format));
      return kExitOk;
    }

    if (oracle->parsed()) {
      peakset::GraphDocument doc = source.resolve();
      peakset::Graph g = doc.to_graph();
      peakset::VertexSet s = peakset::parse_vertex_set(common.peaks, g.vertex_count());
      std::vector<peakset::Labeling> all =
          peakset::brute_force_labelings(g, s, oracle_limit, common.threads);
      bool truncated = all.size() > max_output;
      if (truncated) all.erase(all.begin() + static_cast<std::ptrdiff_t>(max_output), all.end());
      emit(peakset::render_results(
          peakset::EnumerationPayload{doc, s, std::move(all), truncated}, format));
      return kExitOk;
    }

    if (formula->parsed()) {
      peakset::FamilySpec spec = peakset::parse_family_spec(family_only);
      peakset::Graph g = peakset::build_family(spec);
      peakset::VertexSet s = peakset::parse_vertex_set(common.peaks, g.vertex_count());

      std::optional<peakset::BigInt> value;
      std::string route;
      if (spec.kind == peakset::FamilyKind::cycle) {
        value = peakset::cycle_count_poly(spec.a, s);
        route = "cycle";
      } else if (spec.kind == peakset::FamilyKind::join) {
        value = peakset::join_count(peakset::build_family(spec.parts[0]),
                                    peakset::build_family(spec.parts[1]), s);
        route = "join";
      } else {
        value = peakset::family_count(spec, s);
        route = "family";
      }

      peakset::detail::json j;
      j["family"] = peakset::to_string(spec);
      j["peaks"] = peakset::detail::peaks_json(s);
      j["route"] = route;
      j["covered"] = value.has_value();
      if (value) j["count"] = value->str();

      if (check_formula && value) {
        peakset::BigInt engine = peakset::count_labelings(g, s, {.threads = common.threads});
        j["engine_count"] = engine.str();
        j["agrees"] = (*value == engine);
        if (format == peakset::OutputFormat::json) {
          emit(peakset::detail::dump(j));
        } else {
          emit("formula " + (value ? value->str() : "uncovered") + ", engine " + engine.str() +
               (*value == engine ? " (agree)\n" : " (DISAGREE)\n"));
        }
        return *value == engine ? kExitOk : kExitMismatch;
      }

      if (format == peakset::OutputFormat::json) {
        emit(peakset::detail::dump(j));
      } else if (value) {
        emit(value->str() + "\n");
      } else {
        emit("not covered by a closed form; use 'count'\n");
      }
      return kExitOk;
    }

    if (polynomial->parsed()) {
      peakset::VertexSet s =
          peakset::parse_vertex_set(positions, peakset::VertexSet::max_vertices);
      peakset::PeakPolynomial p = peakset::path_peak_polynomial(s);
      if (format == peakset::OutputFormat::json) {
        peakset::detail::json j;
        j["peaks"] = peakset::detail::peaks_json(s);
        j["degree"] = p.degree();
        j["coefficients"] = peakset::detail::json::array();
        for (const peakset::Rational& c : p.coefficients()) j["coefficients"].push_back(c.str());
        j["polynomial"] = peakset::to_string(p);
        emit(peakset::detail::dump(j));
      } else {
        emit(peakset::to_string(p) + "\n");
      }
      return kExitOk;
    }

    if (verify->parsed()) {
      std::vector<peakset::CorpusEntry> corpus;
      if (!source.file.empty() || !source.inline_text.empty()) {
        peakset::GraphDocument doc = source.resolve();
        corpus.push_back({doc.name.empty() ? "input" : doc.name, doc.to_graph(), 0});
      } else {
        corpus = peakset::verification_corpus(seed);
      }
      peakset::VerificationReport report =
          peakset::run_verification(corpus, oracle_limit, common.threads);
      emit(peakset::render_results(report, format));
      return report.ok() ? kExitOk : kExitMismatch;
    }

    throw CLI::ValidationError("subcommand", "no subcommand given");
  } catch (const peakset::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const peakset::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const peakset::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.get_name() << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const peakset::Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitMismatch;
  }
}
