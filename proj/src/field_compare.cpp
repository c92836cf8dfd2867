#include "citemetrics/field_compare.hpp"

#include <algorithm>

#include "citemetrics/collab_graph.hpp"
#include "citemetrics/errors.hpp"

namespace citemetrics {

FieldSummary field_max_h(const Corpus& corpus, const FieldId& field_id) {
  FieldSummary summary{field_id, 0, {}, 0};
  for (const auto* member : corpus.members(field_id)) {
    ++summary.member_count;
    const auto h = h_index(corpus.profile(member->id));
    if (h > summary.max_h) {
      summary.max_h = h;
      summary.leaders.clear();
    }
    if (h == summary.max_h && h > 0) summary.leaders.push_back(member->id);
  }
  return summary;
}

std::map<ResearcherId, IndexValue> assign_relative_h(const Corpus& corpus) {
  const Evaluator evaluator(corpus);
  std::map<ResearcherId, IndexValue> out;
  for (const auto& [id, r] : corpus.researchers()) {
    out.emplace(id, *evaluator.evaluate(id, Metric::hr).value);
  }
  return out;
}

// --- Evaluator ---------------------------------------------------------------

Evaluator::Evaluator(const Corpus& corpus, EvalOptions options)
    : corpus_(&corpus),
      options_(options),
      reference_year_(options.reference_year.value_or(corpus.max_publication_year())) {
  for (const auto& [id, r] : corpus.researchers()) h_.emplace(id, h_index(corpus.profile(id)));
  for (const auto& [fid, f] : corpus.fields()) summaries_.emplace(fid, FieldSummary{fid, 0, {}, 0});
  for (const auto& [id, r] : corpus.researchers()) {
    auto& s = summaries_.at(r.field);
    const auto h = h_.at(id);
    ++s.member_count;
    if (h > s.max_h) {
      s.max_h = h;
      s.leaders.clear();
    }
    if (h == s.max_h && h > 0) s.leaders.push_back(id);
  }
}

std::int64_t Evaluator::h(const ResearcherId& id) const {
  const auto it = h_.find(id);
  if (it == h_.end()) throw UnknownIdError("unknown researcher '" + id + "'");
  return it->second;
}

const FieldSummary& Evaluator::summary(const FieldId& field) const {
  const auto it = summaries_.find(field);
  if (it == summaries_.end()) throw UnknownIdError("unknown field '" + field + "'");
  return it->second;
}

Evaluator::CollabResult Evaluator::collaboration(const ResearcherId& id) const {
  CollabResult result;
  result.count_only = corpus_->count_only_citations(id);
  const DistanceMap distances(corpus_->graph(), id);
  std::vector<CitationDistance> known;
  for (const auto* event : corpus_->events_for(id)) {
    auto d = citation_distance(distances, event->citing_authors, event->id());
    if (d.kind == DistanceKind::unknown) {
      ++result.unknown_excluded;
      continue;
    }
    known.push_back(std::move(d));
  }
  result.c = c_index(known);
  return result;
}

MetricOutcome Evaluator::evaluate(const ResearcherId& id, Metric metric) const {
  const auto& researcher = corpus_->researcher(id);
  const auto h_value = h(id);
  auto value = [&](double v) { return MetricOutcome{metric, make_index_value(metric, v), {}}; };

  switch (metric) {
    case Metric::h:
      return value(static_cast<double>(h_value));
    case Metric::hr:
      return value(relative_h(h_value, summary(researcher.field).max_h));
    case Metric::c: {
      const auto collab = collaboration(id);
      if (collab.count_only > 0) {
        return {metric, std::nullopt,
                std::to_string(collab.count_only) + " citations have no citation events; c needs citing authors"};
      }
      return value(static_cast<double>(collab.c));
    }
    case Metric::m:
      if (reference_year_ < researcher.first_pub_year) {
        return {metric, std::nullopt,
                "reference year " + std::to_string(reference_year_) + " precedes first publication year " +
                    std::to_string(researcher.first_pub_year)};
      }
      return value(m_quotient(h_value, researcher.first_pub_year, reference_year_));
    default:
      break;
  }

  const auto profile = corpus_->profile(id);
  switch (metric) {
    case Metric::e: return value(e_index(profile));
    case Metric::g: return value(static_cast<double>(g_index(profile)));
    case Metric::o: return value(o_index(profile));
    case Metric::s: return value(s_index(profile, options_.s_index));
    case Metric::i10: return value(static_cast<double>(i_k_index(profile, 10)));
    default: break;
  }
  throw InvalidInputError("unsupported metric");
}

// --- Ranking -----------------------------------------------------------------

std::vector<std::size_t> competition_ranks(std::span<const double> descending) {
  std::vector<std::size_t> ranks(descending.size());
  for (std::size_t i = 0; i < descending.size(); ++i) {
    ranks[i] = (i > 0 && descending[i] == descending[i - 1]) ? ranks[i - 1] : i + 1;
  }
  return ranks;
}

RankedList rank_field(const Evaluator& evaluator, const FieldId& field_id, Metric metric) {
  const auto& corpus = evaluator.corpus();
  const auto members = corpus.members(field_id);

  if (metric == Metric::c) {
    bool any_citation = false;
    bool any_authored = false;
    for (const auto* r : members) {
      for (const auto* e : corpus.events_for(r->id)) {
        any_citation = true;
        any_authored = any_authored || !e->citing_authors.empty();
      }
      any_citation = any_citation || corpus.count_only_citations(r->id) > 0;
    }
    if (any_citation && !any_authored) {
      throw InconsistentDataError("cannot rank field '" + field_id +
                                  "' by c: no citation events with citing authors");
    }
  }

  RankedList list{field_id, metric, {}};
  for (const auto* r : members) {
    auto outcome = evaluator.evaluate(r->id, metric);
    if (!outcome.available()) {
      throw InconsistentDataError("cannot rank field '" + field_id + "' by " + std::string(metric_name(metric)) +
                                  ": researcher '" + r->id + "': " + outcome.note);
    }
    list.entries.push_back({0, r->id, outcome.value->value, outcome.value->display});
  }
  std::sort(list.entries.begin(), list.entries.end(), [](const RankedEntry& a, const RankedEntry& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.researcher_id < b.researcher_id;
  });
  std::vector<double> values;
  values.reserve(list.entries.size());
  for (const auto& e : list.entries) values.push_back(e.value);
  const auto ranks = competition_ranks(values);
  for (std::size_t i = 0; i < ranks.size(); ++i) list.entries[i].rank = ranks[i];
  return list;
}

RankedList rank_field(const Corpus& corpus, const FieldId& field_id, Metric metric) {
  return rank_field(Evaluator(corpus), field_id, metric);
}

// --- Comparison --------------------------------------------------------------

ComparisonVerdict cross_field_compare(const Corpus& corpus, const ResearcherId& a, const ResearcherId& b) {
  const Evaluator evaluator(corpus);
  auto side = [&](const ResearcherId& id) {
    const auto& r = corpus.researcher(id);
    ComparisonSide s;
    s.researcher_id = id;
    s.field_id = r.field;
    s.h = evaluator.h(id);
    s.field_max_h = evaluator.summary(r.field).max_h;
    const auto hr = make_index_value(Metric::hr, relative_h(s.h, s.field_max_h));
    s.hr = hr.value;
    s.hr_display = hr.display;
    return s;
  };
  ComparisonVerdict verdict{side(a), side(b), Winner::tie};
  if (verdict.left.hr > verdict.right.hr) {
    verdict.winner = Winner::left;
  } else if (verdict.right.hr > verdict.left.hr) {
    verdict.winner = Winner::right;
  }
  return verdict;
}

}  // namespace citemetrics
