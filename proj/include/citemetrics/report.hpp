#pragma once

// Per-researcher metric reports and their table / JSON / CSV renderings.
// The JSON and CSV layouts are stable; the table layout is for people.

#include <ostream>
#include <string>
#include <vector>

#include "citemetrics/field_compare.hpp"

namespace citemetrics {

struct MetricReport {
  ResearcherId researcher_id;
  FieldId field_id;
  std::vector<MetricOutcome> values;  // in requested order
  std::size_t unknown_distance_citations = 0;  // events excluded from c
};

enum class Format { table, json, csv };

std::optional<Format> parse_format(std::string_view name) noexcept;

// One report per researcher, ordered by (field_id, researcher_id).
std::vector<MetricReport> build_reports(const Evaluator& evaluator, const std::vector<Metric>& metrics);

// CSV columns: researcher_id,field_id,metric,value,display. Values use the
// shortest representation that parses back to the same double; unavailable
// metrics leave value empty and put "n/a" in display.
void render_reports(std::ostream& out, const std::vector<MetricReport>& reports, Format format,
                    Year reference_year);

void render_ranking(std::ostream& out, const RankedList& list, Format format);

void render_verdict(std::ostream& out, const ComparisonVerdict& verdict, Format format);

std::string shortest_repr(double value);

}  // namespace citemetrics
