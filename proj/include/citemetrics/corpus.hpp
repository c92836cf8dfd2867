#pragma once

// Corpus snapshot: fields, researchers, publications, citation events and
// coauthorship links, loaded from a directory of CSV files.
//
// Directory layout (header row required, columns in this exact order):
//   fields.csv         field_id,name
//   researchers.csv    researcher_id,name,field_id,first_pub_year
//   publications.csv   pub_id,researcher_id,year,citation_count
//   citations.csv      cited_pub_id,citing_pub_id,citing_author_ids,year   (optional)
//   coauthorships.csv  author_id_a,author_id_b                              (optional)
//
// citation_count may be left empty when citation events supply the count.
// citing_author_ids is a semicolon-separated list and may be empty.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "citemetrics/collab_graph.hpp"
#include "citemetrics/metrics.hpp"

namespace citemetrics {

using FieldId = std::string;
using ResearcherId = std::string;
using PubId = std::string;

struct Field {
  FieldId id;
  std::string name;

  friend bool operator==(const Field&, const Field&) = default;
};

struct ResearcherProfile {
  ResearcherId id;
  std::string name;
  FieldId field;
  Year first_pub_year = 0;
  std::vector<PubId> publications;  // sorted by id

  friend bool operator==(const ResearcherProfile&, const ResearcherProfile&) = default;
};

struct Publication {
  PubId id;
  ResearcherId owner;
  Year year = 0;
  std::optional<Count> explicit_count;  // the citation_count column, when filled
  Count citations = 0;                  // effective count: events, else explicit, else 0
  Count event_count = 0;

  // Citations known only as a number, with no events behind them.
  bool count_only() const noexcept { return event_count == 0 && citations > 0; }

  friend bool operator==(const Publication&, const Publication&) = default;
};

struct CitationEvent {
  PubId cited_pub;
  std::string citing_pub;
  std::vector<AuthorId> citing_authors;
  Year year = 0;

  std::string id() const { return cited_pub + "<-" + citing_pub; }

  friend bool operator==(const CitationEvent&, const CitationEvent&) = default;
};

struct Diagnostic {
  std::string file;  // or the subject, for warnings
  std::size_t line = 0;  // 0 when not tied to a line
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

struct Diagnostics {
  std::vector<Diagnostic> errors;
  std::vector<Diagnostic> warnings;

  bool ok() const noexcept { return errors.empty(); }
  bool empty() const noexcept { return errors.empty() && warnings.empty(); }
};

std::string to_string(const Diagnostic& d);

// Immutable once built; all accessors are const and safe for concurrent readers.
class Corpus {
 public:
  struct Parts {
    std::vector<Field> fields;
    std::vector<ResearcherProfile> researchers;
    std::vector<Publication> publications;
    std::vector<CitationEvent> citations;
    std::vector<AuthorPair> coauthorships;
  };

  // Cross-references the parts. Throws InconsistentDataError on a dangling
  // reference, duplicate key or count/event disagreement; load_corpus reports
  // the same problems with file and line before this is reached.
  static Corpus assemble(Parts parts);

  const std::map<FieldId, Field>& fields() const noexcept { return fields_; }
  const std::map<ResearcherId, ResearcherProfile>& researchers() const noexcept { return researchers_; }
  const std::map<PubId, Publication>& publications() const noexcept { return publications_; }
  // Sorted by (cited_pub, citing_pub).
  const std::vector<CitationEvent>& citations() const noexcept { return citations_; }
  // Normalised (a < b), deduplicated, sorted.
  const std::vector<AuthorPair>& coauthorships() const noexcept { return coauthorships_; }
  const CoauthorshipGraph& graph() const noexcept { return graph_; }

  const Field& field(const FieldId& id) const;
  const ResearcherProfile& researcher(const ResearcherId& id) const;
  // Researchers of one field, ordered by id.
  std::vector<const ResearcherProfile*> members(const FieldId& id) const;

  CitationProfile profile(const ResearcherId& id) const;
  // Citation events against the researcher's publications, in corpus order.
  std::vector<const CitationEvent*> events_for(const ResearcherId& id) const;
  // Citations of the researcher that exist only as counts.
  Count count_only_citations(const ResearcherId& id) const;

  // Latest publication year; falls back to the latest first_pub_year when the
  // corpus has no publications, and to 0 for an empty corpus.
  Year max_publication_year() const;

  friend bool operator==(const Corpus& a, const Corpus& b) {
    return a.fields_ == b.fields_ && a.researchers_ == b.researchers_ &&
           a.publications_ == b.publications_ && a.citations_ == b.citations_ &&
           a.coauthorships_ == b.coauthorships_;
  }

 private:
  std::map<FieldId, Field> fields_;
  std::map<ResearcherId, ResearcherProfile> researchers_;
  std::map<PubId, Publication> publications_;
  std::vector<CitationEvent> citations_;
  std::map<PubId, std::vector<std::size_t>> events_by_pub_;
  std::vector<AuthorPair> coauthorships_;
  CoauthorshipGraph graph_;
};

struct LoadResult {
  std::optional<Corpus> corpus;  // empty whenever diagnostics holds an error
  Diagnostics diagnostics;
};

// Never throws on malformed content; every problem becomes an error entry
// naming the file and line.
LoadResult load_corpus(const std::filesystem::path& directory);

// Warnings only: researchers without publications, citation events without
// citing authors, fields without researchers.
Diagnostics validate_corpus(const Corpus& corpus);

// Writes the five CSV files. Output is canonical: rows sorted by key.
void write_corpus(const Corpus& corpus, const std::filesystem::path& directory);

struct SynthParams {
  std::int64_t num_fields = 1;
  std::int64_t researchers_per_field = 1;
  double pubs_mean = 1.0;
  double citation_exponent = 2.5;
  std::uint64_t seed = 0;
};

// Deterministic pseudo-random corpus: Poisson publication counts, power-law
// citation counts realised as citation events, sparse random coauthorships.
// Throws InvalidInputError on out-of-range parameters.
Corpus synth_corpus(const SynthParams& params);

}  // namespace citemetrics
