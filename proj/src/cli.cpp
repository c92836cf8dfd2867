#include "citemetrics/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "citemetrics/corpus.hpp"
#include "citemetrics/errors.hpp"
#include "citemetrics/field_compare.hpp"
#include "citemetrics/report.hpp"

namespace citemetrics {

namespace {

// Thrown for problems with the command line itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown once corpus diagnostics have been written to the error stream.
struct CorpusRejected {};

std::vector<Metric> parse_metric_list(const std::string& text) {
  std::vector<Metric> metrics;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    const auto first = token.find_first_not_of(" \t");
    const auto last = token.find_last_not_of(" \t");
    token = first == std::string::npos ? std::string{} : token.substr(first, last - first + 1);
    const auto metric = parse_metric(token);
    if (!metric) {
      throw UsageError("unknown metric '" + token + "' (expected a comma-separated subset of h,hr,c,e,g,m,o,s,i10)");
    }
    if (std::find(metrics.begin(), metrics.end(), *metric) == metrics.end()) metrics.push_back(*metric);
  }
  if (metrics.empty()) throw UsageError("--metrics needs at least one metric");
  return metrics;
}

Metric parse_single_metric(const std::string& text) {
  const auto metric = parse_metric(text);
  if (!metric) throw UsageError("unsupported metric '" + text + "' (expected one of h,hr,c,e,g,m,o,s,i10)");
  return *metric;
}

Corpus load_or_reject(const std::string& dir, std::ostream& err) {
  auto result = load_corpus(dir);
  if (!result.corpus) {
    for (const auto& e : result.diagnostics.errors) err << "error: " << to_string(e) << '\n';
    err << result.diagnostics.errors.size() << " errors\n";
    throw CorpusRejected{};
  }
  return std::move(*result.corpus);
}

// Renders into a buffer first so a failed computation never leaves a partial file.
template <typename Render>
void emit(const std::string& out_path, std::ostream& out, Render render) {
  std::ostringstream buffer;
  render(buffer);
  if (out_path.empty()) {
    out << buffer.str();
    return;
  }
  std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
  if (!file || !(file << buffer.str())) throw std::runtime_error("cannot write output file '" + out_path + "'");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Citation indices, relative h and field comparisons over a corpus directory", "citemetrics"};
  app.require_subcommand(1);

  const std::vector<std::string> formats{"table", "json", "csv"};

  std::string corpus_dir;
  std::string metrics_text = "h,hr,c,e,g,m,o,s,i10";
  std::optional<Year> ref_year;
  std::string format = "table";
  std::string out_path;
  std::string field_id;
  std::string metric_text;
  std::string researcher_a;
  std::string researcher_b;
  SynthParams synth;

  auto* compute = app.add_subcommand("compute", "Metric report for every researcher");
  compute->add_option("--corpus", corpus_dir, "Corpus directory")->required();
  compute->add_option("--metrics", metrics_text, "Comma-separated metrics (default: all)");
  compute->add_option("--ref-year", ref_year, "Reference year for m (default: latest publication year)");
  compute->add_option("--format", format, "table|json|csv")->check(CLI::IsMember(formats));
  compute->add_option("--out", out_path, "Write the report to this file");

  auto* rank = app.add_subcommand("rank", "Rank one field by a metric");
  rank->add_option("--corpus", corpus_dir, "Corpus directory")->required();
  rank->add_option("--field", field_id, "Field id")->required();
  rank->add_option("--metric", metric_text, "Metric to rank by")->required();
  rank->add_option("--ref-year", ref_year, "Reference year for m");
  rank->add_option("--format", format, "table|json|csv")->check(CLI::IsMember(formats));
  rank->add_option("--out", out_path, "Write the ranking to this file");

  auto* compare = app.add_subcommand("compare", "Compare two researchers by relative h");
  compare->add_option("--corpus", corpus_dir, "Corpus directory")->required();
  compare->add_option("left", researcher_a, "First researcher id")->required();
  compare->add_option("right", researcher_b, "Second researcher id")->required();
  compare->add_option("--format", format, "table|json")->check(CLI::IsMember({"table", "json"}));
  compare->add_option("--out", out_path, "Write the verdict to this file");

  auto* validate = app.add_subcommand("validate", "Check a corpus directory");
  validate->add_option("--corpus", corpus_dir, "Corpus directory")->required();

  auto* synth_cmd = app.add_subcommand("synth", "Write a deterministic synthetic corpus");
  synth_cmd->add_option("--fields", synth.num_fields, "Number of fields")->capture_default_str();
  synth_cmd->add_option("--researchers", synth.researchers_per_field, "Researchers per field")->capture_default_str();
  synth_cmd->add_option("--pubs-mean", synth.pubs_mean, "Mean publications per researcher")->capture_default_str();
  synth_cmd->add_option("--exponent", synth.citation_exponent, "Citation power-law exponent (> 1)")
      ->capture_default_str();
  synth_cmd->add_option("--seed", synth.seed, "Random seed")->capture_default_str();
  synth_cmd->add_option("--out", out_path, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (compute->parsed()) {
      const auto metrics = parse_metric_list(metrics_text);
      const auto fmt = *parse_format(format);
      const auto corpus = load_or_reject(corpus_dir, err);
      const Evaluator evaluator(corpus, EvalOptions{ref_year, {}});
      const auto reports = build_reports(evaluator, metrics);
      emit(out_path, out, [&](std::ostream& s) { render_reports(s, reports, fmt, evaluator.reference_year()); });
    } else if (rank->parsed()) {
      const auto metric = parse_single_metric(metric_text);
      const auto fmt = *parse_format(format);
      const auto corpus = load_or_reject(corpus_dir, err);
      const Evaluator evaluator(corpus, EvalOptions{ref_year, {}});
      const auto list = rank_field(evaluator, field_id, metric);
      emit(out_path, out, [&](std::ostream& s) { render_ranking(s, list, fmt); });
    } else if (compare->parsed()) {
      const auto fmt = *parse_format(format);
      const auto corpus = load_or_reject(corpus_dir, err);
      const auto verdict = cross_field_compare(corpus, researcher_a, researcher_b);
      emit(out_path, out, [&](std::ostream& s) { render_verdict(s, verdict, fmt); });
    } else if (validate->parsed()) {
      auto result = load_corpus(corpus_dir);
      auto diagnostics = std::move(result.diagnostics);
      if (result.corpus) {
        auto warnings = validate_corpus(*result.corpus);
        diagnostics.warnings.insert(diagnostics.warnings.end(), warnings.warnings.begin(), warnings.warnings.end());
      }
      for (const auto& e : diagnostics.errors) err << "error: " << to_string(e) << '\n';
      for (const auto& w : diagnostics.warnings) out << "warning: " << to_string(w) << '\n';
      out << diagnostics.errors.size() << " errors, " << diagnostics.warnings.size() << " warnings\n";
      return diagnostics.ok() ? kExitOk : kExitData;
    } else if (synth_cmd->parsed()) {
      Corpus corpus;
      try {
        corpus = synth_corpus(synth);
      } catch (const InvalidInputError& e) {
        throw UsageError(e.what());
      }
      write_corpus(corpus, out_path);
      out << "wrote " << corpus.fields().size() << " fields, " << corpus.researchers().size() << " researchers, "
          << corpus.publications().size() << " publications, " << corpus.citations().size() << " citations to "
          << out_path << '\n';
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CorpusRejected&) {
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

}  // namespace citemetrics
