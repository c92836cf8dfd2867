#pragma once

// Field-level aggregation: per-field maximum h, relative h, rankings and
// cross-field comparison of two researchers.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "citemetrics/corpus.hpp"
#include "citemetrics/metrics.hpp"

namespace citemetrics {

struct FieldSummary {
  FieldId field_id;
  std::int64_t max_h = 0;
  std::vector<ResearcherId> leaders;  // members whose h equals max_h; empty when max_h == 0
  std::size_t member_count = 0;
};

FieldSummary field_max_h(const Corpus& corpus, const FieldId& field_id);

std::map<ResearcherId, IndexValue> assign_relative_h(const Corpus& corpus);

// Outcome of one metric for one researcher: a value, or a reason it could
// not be computed.
struct MetricOutcome {
  Metric metric;
  std::optional<IndexValue> value;
  std::string note;  // set when value is empty

  bool available() const noexcept { return value.has_value(); }
};

struct EvalOptions {
  std::optional<Year> reference_year;  // default: corpus max publication year
  SIndexConfig s_index;
};

// Caches per-researcher h and per-field maxima over one corpus. The corpus
// must outlive the evaluator. Const member functions are safe to call
// concurrently.
class Evaluator {
 public:
  explicit Evaluator(const Corpus& corpus, EvalOptions options = {});

  const Corpus& corpus() const noexcept { return *corpus_; }
  Year reference_year() const noexcept { return reference_year_; }

  std::int64_t h(const ResearcherId& id) const;
  const FieldSummary& summary(const FieldId& field) const;

  MetricOutcome evaluate(const ResearcherId& id, Metric metric) const;

  struct CollabResult {
    std::int64_t c = 0;
    std::size_t unknown_excluded = 0;  // events without citing authors
    Count count_only = 0;              // citations with no events at all
  };
  CollabResult collaboration(const ResearcherId& id) const;

 private:
  const Corpus* corpus_;
  EvalOptions options_;
  Year reference_year_;
  std::map<ResearcherId, std::int64_t> h_;
  std::map<FieldId, FieldSummary> summaries_;
};

struct RankedEntry {
  std::size_t rank;  // competition ranking: 1, 1, 3
  ResearcherId researcher_id;
  double value;
  std::string display;
};

struct RankedList {
  FieldId field_id;
  Metric metric;
  std::vector<RankedEntry> entries;  // value descending, then id ascending
};

// Throws UnknownIdError for an unknown field and InconsistentDataError when
// the metric cannot be computed for some member (e.g. c without citing-author
// data).
RankedList rank_field(const Evaluator& evaluator, const FieldId& field_id, Metric metric);
RankedList rank_field(const Corpus& corpus, const FieldId& field_id, Metric metric);

// Competition ranks for values already sorted in descending order.
std::vector<std::size_t> competition_ranks(std::span<const double> descending);

enum class Winner { left, right, tie };

struct ComparisonSide {
  ResearcherId researcher_id;
  FieldId field_id;
  std::int64_t h = 0;
  std::int64_t field_max_h = 0;
  double hr = 0.0;
  std::string hr_display;
};

struct ComparisonVerdict {
  ComparisonSide left;
  ComparisonSide right;
  Winner winner = Winner::tie;
};

// Decided on full-precision relative h only.
ComparisonVerdict cross_field_compare(const Corpus& corpus, const ResearcherId& a, const ResearcherId& b);

}  // namespace citemetrics
