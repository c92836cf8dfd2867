#include "citemetrics/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <tuple>

#include <json.hpp>

#include "citemetrics/csv.hpp"

namespace citemetrics {

namespace {

using ordered_json = nlohmann::ordered_json;

class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& out) const {
    std::vector<std::size_t> widths;
    for (const auto& row : rows_) {
      widths.resize(std::max(widths.size(), row.size()), 0);
      for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
    }
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) line += "  ";
        line += row[i];
        if (i + 1 < row.size()) line.append(widths[i] - row[i].size(), ' ');
      }
      out << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

const char* winner_name(Winner w) {
  switch (w) {
    case Winner::left: return "left";
    case Winner::right: return "right";
    case Winner::tie: return "tie";
  }
  return "tie";
}

}  // namespace

std::string shortest_repr(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::optional<Format> parse_format(std::string_view name) noexcept {
  if (name == "table") return Format::table;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  return std::nullopt;
}

std::vector<MetricReport> build_reports(const Evaluator& evaluator, const std::vector<Metric>& metrics) {
  const auto& corpus = evaluator.corpus();
  std::vector<const ResearcherProfile*> order;
  for (const auto& [id, r] : corpus.researchers()) order.push_back(&r);
  std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    return std::tie(a->field, a->id) < std::tie(b->field, b->id);
  });

  const bool wants_c = std::find(metrics.begin(), metrics.end(), Metric::c) != metrics.end();
  std::vector<MetricReport> reports;
  reports.reserve(order.size());
  for (const auto* r : order) {
    MetricReport report{r->id, r->field, {}, 0};
    for (const Metric m : metrics) report.values.push_back(evaluator.evaluate(r->id, m));
    if (wants_c) report.unknown_distance_citations = evaluator.collaboration(r->id).unknown_excluded;
    reports.push_back(std::move(report));
  }
  return reports;
}

void render_reports(std::ostream& out, const std::vector<MetricReport>& reports, Format format,
                    Year reference_year) {
  switch (format) {
    case Format::json: {
      ordered_json doc;
      doc["reference_year"] = reference_year;
      doc["reports"] = ordered_json::array();
      for (const auto& report : reports) {
        ordered_json entry;
        entry["researcher_id"] = report.researcher_id;
        entry["field_id"] = report.field_id;
        ordered_json values = ordered_json::object();
        for (const auto& v : report.values) {
          const std::string name(metric_name(v.metric));
          if (v.available()) {
            values[name] = {{"available", true}, {"value", v.value->value}, {"display", v.value->display}};
          } else {
            values[name] = {{"available", false}, {"note", v.note}};
          }
        }
        entry["metrics"] = std::move(values);
        entry["diagnostics"] = {{"excluded_unknown_citations", report.unknown_distance_citations}};
        doc["reports"].push_back(std::move(entry));
      }
      out << doc.dump(2) << '\n';
      return;
    }
    case Format::csv: {
      out << csv::format_row({"researcher_id", "field_id", "metric", "value", "display"});
      for (const auto& report : reports) {
        for (const auto& v : report.values) {
          out << csv::format_row({report.researcher_id, report.field_id, std::string(metric_name(v.metric)),
                                  v.available() ? shortest_repr(v.value->value) : std::string{},
                                  v.available() ? v.value->display : std::string("n/a")});
        }
      }
      return;
    }
    case Format::table: {
      std::vector<std::string> header{"researcher", "field"};
      bool has_c = false;
      if (!reports.empty()) {
        for (const auto& v : reports.front().values) {
          header.emplace_back(metric_name(v.metric));
          has_c = has_c || v.metric == Metric::c;
        }
      }
      if (has_c) header.emplace_back("c_excluded");
      TextTable table(header);
      std::vector<std::string> notes;
      for (const auto& report : reports) {
        std::vector<std::string> row{report.researcher_id, report.field_id};
        for (const auto& v : report.values) {
          row.push_back(v.available() ? v.value->display : "n/a");
          if (!v.available()) {
            notes.push_back(report.researcher_id + " " + std::string(metric_name(v.metric)) + ": " + v.note);
          }
        }
        if (has_c) row.push_back(std::to_string(report.unknown_distance_citations));
        table.add(std::move(row));
      }
      table.print(out);
      out << "reference year: " << reference_year << '\n';
      for (const auto& note : notes) out << "note: " << note << '\n';
      return;
    }
  }
}

void render_ranking(std::ostream& out, const RankedList& list, Format format) {
  const std::string metric(metric_name(list.metric));
  switch (format) {
    case Format::json: {
      ordered_json doc;
      doc["field_id"] = list.field_id;
      doc["metric"] = metric;
      doc["entries"] = ordered_json::array();
      for (const auto& e : list.entries) {
        doc["entries"].push_back(
            {{"rank", e.rank}, {"researcher_id", e.researcher_id}, {"value", e.value}, {"display", e.display}});
      }
      out << doc.dump(2) << '\n';
      return;
    }
    case Format::csv: {
      out << csv::format_row({"rank", "researcher_id", "value", "display"});
      for (const auto& e : list.entries) {
        out << csv::format_row({std::to_string(e.rank), e.researcher_id, shortest_repr(e.value), e.display});
      }
      return;
    }
    case Format::table: {
      out << "field " << list.field_id << " ranked by " << metric << '\n';
      TextTable table({"rank", "researcher", metric});
      for (const auto& e : list.entries) table.add({std::to_string(e.rank), e.researcher_id, e.display});
      table.print(out);
      return;
    }
  }
}

void render_verdict(std::ostream& out, const ComparisonVerdict& verdict, Format format) {
  if (format == Format::json) {
    auto side = [](const ComparisonSide& s) {
      return ordered_json{{"researcher_id", s.researcher_id}, {"field_id", s.field_id},   {"h", s.h},
                          {"field_max_h", s.field_max_h},   {"hr", s.hr},             {"hr_display", s.hr_display}};
    };
    ordered_json doc;
    doc["left"] = side(verdict.left);
    doc["right"] = side(verdict.right);
    doc["winner"] = winner_name(verdict.winner);
    out << doc.dump(2) << '\n';
    return;
  }
  TextTable table({"researcher", "field", "h", "field max h", "hr"});
  for (const auto* s : {&verdict.left, &verdict.right}) {
    table.add({s->researcher_id, s->field_id, std::to_string(s->h), std::to_string(s->field_max_h), s->hr_display});
  }
  table.print(out);
  switch (verdict.winner) {
    case Winner::left:
      out << "verdict: " << verdict.left.researcher_id << " is relatively better\n";
      break;
    case Winner::right:
      out << "verdict: " << verdict.right.researcher_id << " is relatively better\n";
      break;
    case Winner::tie:
      out << "verdict: tie at " << verdict.left.hr_display << '\n';
      break;
  }
}

}  // namespace citemetrics
