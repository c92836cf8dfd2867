#include "citemetrics/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "citemetrics/csv.hpp"
#include "citemetrics/errors.hpp"

namespace citemetrics {

namespace fs = std::filesystem;

std::string to_string(const Diagnostic& d) {
  if (d.line == 0) return d.file + ": " + d.message;
  return d.file + ":" + std::to_string(d.line) + ": " + d.message;
}

// --- Corpus ------------------------------------------------------------------

Corpus Corpus::assemble(Parts parts) {
  Corpus corpus;
  for (auto& f : parts.fields) {
    const auto id = f.id;
    if (!corpus.fields_.emplace(id, std::move(f)).second) {
      throw InconsistentDataError("duplicate field id '" + id + "'");
    }
  }
  for (auto& r : parts.researchers) {
    if (!corpus.fields_.contains(r.field)) {
      throw InconsistentDataError("researcher '" + r.id + "' references unknown field '" + r.field + "'");
    }
    r.publications.clear();
    const auto id = r.id;
    if (!corpus.researchers_.emplace(id, std::move(r)).second) {
      throw InconsistentDataError("duplicate researcher id '" + id + "'");
    }
  }
  for (auto& p : parts.publications) {
    const auto owner = corpus.researchers_.find(p.owner);
    if (owner == corpus.researchers_.end()) {
      throw InconsistentDataError("publication '" + p.id + "' references unknown researcher '" + p.owner + "'");
    }
    owner->second.publications.push_back(p.id);
    p.event_count = 0;
    const auto id = p.id;
    if (!corpus.publications_.emplace(id, std::move(p)).second) {
      throw InconsistentDataError("duplicate publication id '" + id + "'");
    }
  }
  for (auto& [id, r] : corpus.researchers_) std::sort(r.publications.begin(), r.publications.end());

  for (auto& e : parts.citations) {
    for (const auto& author : e.citing_authors) {
      if (author.empty() || author.find(';') != std::string::npos) {
        throw InconsistentDataError("citation '" + e.id() + "' has an invalid citing author id '" + author + "'");
      }
    }
    std::sort(e.citing_authors.begin(), e.citing_authors.end());
    e.citing_authors.erase(std::unique(e.citing_authors.begin(), e.citing_authors.end()),
                           e.citing_authors.end());
  }
  std::sort(parts.citations.begin(), parts.citations.end(), [](const auto& a, const auto& b) {
    return std::tie(a.cited_pub, a.citing_pub) < std::tie(b.cited_pub, b.citing_pub);
  });
  for (std::size_t i = 0; i < parts.citations.size(); ++i) {
    const auto& e = parts.citations[i];
    const auto pub = corpus.publications_.find(e.cited_pub);
    if (pub == corpus.publications_.end()) {
      throw InconsistentDataError("citation references unknown publication '" + e.cited_pub + "'");
    }
    if (i > 0 && parts.citations[i - 1].cited_pub == e.cited_pub &&
        parts.citations[i - 1].citing_pub == e.citing_pub) {
      throw InconsistentDataError("duplicate citation '" + e.id() + "'");
    }
    ++pub->second.event_count;
    corpus.events_by_pub_[e.cited_pub].push_back(i);
  }
  corpus.citations_ = std::move(parts.citations);

  for (auto& [id, p] : corpus.publications_) {
    if (p.explicit_count && p.event_count > 0 && *p.explicit_count != p.event_count) {
      throw InconsistentDataError("publication '" + id + "' states " + std::to_string(*p.explicit_count) +
                                  " citations but has " + std::to_string(p.event_count) + " citation events");
    }
    if (p.explicit_count && *p.explicit_count < 0) {
      throw InconsistentDataError("publication '" + id + "' has a negative citation count");
    }
    p.citations = p.event_count > 0 ? p.event_count : p.explicit_count.value_or(0);
  }

  for (auto& [a, b] : parts.coauthorships) {
    if (b < a) std::swap(a, b);
  }
  std::sort(parts.coauthorships.begin(), parts.coauthorships.end());
  parts.coauthorships.erase(std::unique(parts.coauthorships.begin(), parts.coauthorships.end()),
                            parts.coauthorships.end());
  std::vector<AuthorId> researcher_nodes;
  researcher_nodes.reserve(corpus.researchers_.size());
  for (const auto& [id, r] : corpus.researchers_) researcher_nodes.push_back(id);
  try {
    corpus.graph_ = build_graph(parts.coauthorships, researcher_nodes);
  } catch (const InvalidInputError& e) {
    throw InconsistentDataError(e.what());
  }
  corpus.coauthorships_ = std::move(parts.coauthorships);
  return corpus;
}

const Field& Corpus::field(const FieldId& id) const {
  const auto it = fields_.find(id);
  if (it == fields_.end()) throw UnknownIdError("unknown field '" + id + "'");
  return it->second;
}

const ResearcherProfile& Corpus::researcher(const ResearcherId& id) const {
  const auto it = researchers_.find(id);
  if (it == researchers_.end()) throw UnknownIdError("unknown researcher '" + id + "'");
  return it->second;
}

std::vector<const ResearcherProfile*> Corpus::members(const FieldId& id) const {
  field(id);
  std::vector<const ResearcherProfile*> out;
  for (const auto& [rid, r] : researchers_) {
    if (r.field == id) out.push_back(&r);
  }
  return out;
}

CitationProfile Corpus::profile(const ResearcherId& id) const {
  const auto& r = researcher(id);
  std::vector<Count> counts;
  counts.reserve(r.publications.size());
  for (const auto& pid : r.publications) counts.push_back(publications_.at(pid).citations);
  return sorted_profile(counts, id);
}

std::vector<const CitationEvent*> Corpus::events_for(const ResearcherId& id) const {
  std::vector<const CitationEvent*> out;
  for (const auto& pid : researcher(id).publications) {
    const auto it = events_by_pub_.find(pid);
    if (it == events_by_pub_.end()) continue;
    for (const auto idx : it->second) out.push_back(&citations_[idx]);
  }
  return out;
}

Count Corpus::count_only_citations(const ResearcherId& id) const {
  Count total = 0;
  for (const auto& pid : researcher(id).publications) {
    const auto& p = publications_.at(pid);
    if (p.count_only()) total += p.citations;
  }
  return total;
}

Year Corpus::max_publication_year() const {
  std::optional<Year> best;
  for (const auto& [id, p] : publications_) best = std::max(best.value_or(p.year), p.year);
  if (best) return *best;
  for (const auto& [id, r] : researchers_) best = std::max(best.value_or(r.first_pub_year), r.first_pub_year);
  return best.value_or(0);
}

// --- Loading -----------------------------------------------------------------

namespace {

struct FileLayout {
  const char* name;
  std::vector<std::string> header;
  bool mandatory;
};

const FileLayout kFields{"fields.csv", {"field_id", "name"}, true};
const FileLayout kResearchers{"researchers.csv", {"researcher_id", "name", "field_id", "first_pub_year"}, true};
const FileLayout kPublications{"publications.csv", {"pub_id", "researcher_id", "year", "citation_count"}, true};
const FileLayout kCitations{"citations.csv", {"cited_pub_id", "citing_pub_id", "citing_author_ids", "year"}, false};
const FileLayout kCoauthorships{"coauthorships.csv", {"author_id_a", "author_id_b"}, false};

template <typename Int>
std::optional<Int> parse_int(std::string_view text) {
  Int value{};
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) return std::nullopt;
  return value;
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out.push_back(sep);
    out += parts[i];
  }
  return out;
}

class Loader {
 public:
  explicit Loader(fs::path dir) : dir_(std::move(dir)) {}

  // Rows of a file without the header, or nullopt when absent/unreadable.
  std::optional<std::vector<csv::Record>> rows(const FileLayout& layout) {
    const fs::path path = dir_ / layout.name;
    std::error_code ec;
    if (!fs::is_regular_file(path, ec)) {
      if (layout.mandatory) error(layout, 0, "missing mandatory file");
      return std::nullopt;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      error(layout, 0, "cannot open file");
      return std::nullopt;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    auto table = csv::parse(buffer.str());
    if (table.error) {
      error(layout, table.error->line, table.error->message);
      return std::nullopt;
    }
    if (table.records.empty()) {
      error(layout, 1, "missing header row, expected '" + join(layout.header, ',') + "'");
      return std::nullopt;
    }
    if (table.records.front().fields != layout.header) {
      error(layout, table.records.front().line, "bad header, expected '" + join(layout.header, ',') + "'");
      return std::nullopt;
    }
    table.records.erase(table.records.begin());
    std::vector<csv::Record> good;
    for (auto& rec : table.records) {
      if (rec.fields.size() != layout.header.size()) {
        error(layout, rec.line, "expected " + std::to_string(layout.header.size()) + " columns, found " +
                                  std::to_string(rec.fields.size()));
        continue;
      }
      good.push_back(std::move(rec));
    }
    return good;
  }

  void error(const FileLayout& layout, std::size_t line, std::string message) {
    diagnostics_.errors.push_back({layout.name, line, std::move(message)});
  }

  LoadResult run();

 private:
  bool require_id(const FileLayout& layout, const csv::Record& rec, std::size_t col) {
    if (!rec.fields[col].empty()) return true;
    error(layout, rec.line, "empty " + layout.header[col]);
    return false;
  }

  template <typename Int>
  std::optional<Int> integer(const FileLayout& layout, const csv::Record& rec, std::size_t col) {
    auto v = parse_int<Int>(rec.fields[col]);
    if (!v) error(layout, rec.line, layout.header[col] + " is not an integer: '" + rec.fields[col] + "'");
    return v;
  }

  fs::path dir_;
  Diagnostics diagnostics_;
};

LoadResult Loader::run() {
  Corpus::Parts parts;
  const auto field_rows = rows(kFields);
  const auto researcher_rows = rows(kResearchers);
  const auto publication_rows = rows(kPublications);
  const auto citation_rows = rows(kCitations);
  const auto coauthor_rows = rows(kCoauthorships);

  std::unordered_map<std::string, std::size_t> field_lines;
  if (field_rows) {
    for (const auto& rec : *field_rows) {
      if (!require_id(kFields, rec, 0)) continue;
      const auto [it, fresh] = field_lines.emplace(rec.fields[0], rec.line);
      if (!fresh) {
        error(kFields, rec.line, "duplicate field_id '" + rec.fields[0] + "' (first on line " +
                                     std::to_string(it->second) + ")");
        continue;
      }
      parts.fields.push_back({rec.fields[0], rec.fields[1]});
    }
  }

  std::unordered_map<std::string, std::size_t> researcher_lines;
  if (researcher_rows) {
    for (const auto& rec : *researcher_rows) {
      bool ok = require_id(kResearchers, rec, 0) && require_id(kResearchers, rec, 2);
      const auto year = integer<Year>(kResearchers, rec, 3);
      ok = ok && year.has_value();
      if (!ok) continue;
      const auto [it, fresh] = researcher_lines.emplace(rec.fields[0], rec.line);
      if (!fresh) {
        error(kResearchers, rec.line, "duplicate researcher_id '" + rec.fields[0] + "' (first on line " +
                                          std::to_string(it->second) + ")");
        continue;
      }
      if (field_rows && !field_lines.contains(rec.fields[2])) {
        error(kResearchers, rec.line, "unknown field_id '" + rec.fields[2] + "'");
      }
      parts.researchers.push_back({rec.fields[0], rec.fields[1], rec.fields[2], *year, {}});
    }
  }

  struct PubInfo {
    std::size_t line;
    std::optional<Count> explicit_count;
    Count events = 0;
  };
  std::unordered_map<std::string, PubInfo> pubs;
  if (publication_rows) {
    for (const auto& rec : *publication_rows) {
      bool ok = require_id(kPublications, rec, 0) && require_id(kPublications, rec, 1);
      const auto year = integer<Year>(kPublications, rec, 2);
      std::optional<Count> count;
      if (!rec.fields[3].empty()) {
        count = integer<Count>(kPublications, rec, 3);
        if (!count) {
          ok = false;
        } else if (*count < 0) {
          error(kPublications, rec.line, "negative citation_count " + rec.fields[3]);
          ok = false;
        }
      }
      if (!ok || !year) continue;
      const auto [it, fresh] = pubs.emplace(rec.fields[0], PubInfo{rec.line, count});
      if (!fresh) {
        error(kPublications, rec.line, "duplicate pub_id '" + rec.fields[0] + "' (first on line " +
                                           std::to_string(it->second.line) + ")");
        continue;
      }
      if (researcher_rows && !researcher_lines.contains(rec.fields[1])) {
        error(kPublications, rec.line, "unknown researcher_id '" + rec.fields[1] + "'");
      }
      parts.publications.push_back({rec.fields[0], rec.fields[1], *year, count, 0, 0});
    }
  }

  if (citation_rows) {
    std::map<std::pair<std::string, std::string>, std::size_t> seen;
    for (const auto& rec : *citation_rows) {
      bool ok = require_id(kCitations, rec, 0) && require_id(kCitations, rec, 1);
      const auto year = integer<Year>(kCitations, rec, 3);
      std::vector<AuthorId> authors;
      if (!rec.fields[2].empty()) {
        std::string_view rest = rec.fields[2];
        for (;;) {
          const auto semi = rest.find(';');
          const auto token = rest.substr(0, semi);
          if (token.empty()) {
            error(kCitations, rec.line, "empty author id in citing_author_ids '" + rec.fields[2] + "'");
            ok = false;
            break;
          }
          authors.emplace_back(token);
          if (semi == std::string_view::npos) break;
          rest.remove_prefix(semi + 1);
        }
      }
      if (!ok || !year) continue;
      const auto [it, fresh] = seen.emplace(std::pair{rec.fields[0], rec.fields[1]}, rec.line);
      if (!fresh) {
        error(kCitations, rec.line, "duplicate citation of '" + rec.fields[0] + "' by '" + rec.fields[1] +
                                        "' (first on line " + std::to_string(it->second) + ")");
        continue;
      }
      if (publication_rows) {
        const auto pub = pubs.find(rec.fields[0]);
        if (pub == pubs.end()) {
          error(kCitations, rec.line, "unknown cited_pub_id '" + rec.fields[0] + "'");
          continue;
        }
        ++pub->second.events;
      }
      parts.citations.push_back({rec.fields[0], rec.fields[1], std::move(authors), *year});
    }
  }

  for (const auto& p : parts.publications) {
    const auto& info = pubs.at(p.id);
    if (info.explicit_count && info.events > 0 && *info.explicit_count != info.events) {
      error(kPublications, info.line, "citation_count " + std::to_string(*info.explicit_count) + " for '" + p.id +
                                          "' disagrees with " + std::to_string(info.events) +
                                          " citation events");
    }
  }

  if (coauthor_rows) {
    for (const auto& rec : *coauthor_rows) {
      if (!require_id(kCoauthorships, rec, 0) || !require_id(kCoauthorships, rec, 1)) continue;
      if (rec.fields[0] == rec.fields[1]) {
        error(kCoauthorships, rec.line, "self-loop for author '" + rec.fields[0] + "'");
        continue;
      }
      parts.coauthorships.emplace_back(rec.fields[0], rec.fields[1]);
    }
  }

  LoadResult result;
  if (diagnostics_.ok()) {
    try {
      result.corpus = Corpus::assemble(std::move(parts));
    } catch (const std::exception& e) {
      diagnostics_.errors.push_back({dir_.string(), 0, e.what()});
    }
  }
  result.diagnostics = std::move(diagnostics_);
  return result;
}

}  // namespace

LoadResult load_corpus(const fs::path& directory) {
  std::error_code ec;
  if (!fs::is_directory(directory, ec)) {
    LoadResult result;
    result.diagnostics.errors.push_back({directory.string(), 0, "not a directory"});
    return result;
  }
  return Loader(directory).run();
}

Diagnostics validate_corpus(const Corpus& corpus) {
  Diagnostics d;
  for (const auto& [id, r] : corpus.researchers()) {
    if (r.publications.empty()) d.warnings.push_back({"researcher '" + id + "'", 0, "has no publications"});
  }
  for (const auto& e : corpus.citations()) {
    if (e.citing_authors.empty()) {
      d.warnings.push_back({"citation '" + e.id() + "'", 0, "lists no citing authors; excluded from c-index"});
    }
  }
  for (const auto& [id, f] : corpus.fields()) {
    if (corpus.members(id).empty()) d.warnings.push_back({"field '" + id + "'", 0, "has no researchers"});
  }
  return d;
}

void write_corpus(const Corpus& corpus, const fs::path& directory) {
  fs::create_directories(directory);
  auto open = [&](const FileLayout& layout) {
    std::ofstream out(directory / layout.name, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + (directory / layout.name).string());
    out << csv::format_row(layout.header);
    return out;
  };
  {
    auto out = open(kFields);
    for (const auto& [id, f] : corpus.fields()) out << csv::format_row({f.id, f.name});
  }
  {
    auto out = open(kResearchers);
    for (const auto& [id, r] : corpus.researchers()) {
      out << csv::format_row({r.id, r.name, r.field, std::to_string(r.first_pub_year)});
    }
  }
  {
    auto out = open(kPublications);
    for (const auto& [id, p] : corpus.publications()) {
      out << csv::format_row({p.id, p.owner, std::to_string(p.year),
                              p.explicit_count ? std::to_string(*p.explicit_count) : std::string{}});
    }
  }
  {
    auto out = open(kCitations);
    for (const auto& e : corpus.citations()) {
      out << csv::format_row({e.cited_pub, e.citing_pub, join(e.citing_authors, ';'), std::to_string(e.year)});
    }
  }
  {
    auto out = open(kCoauthorships);
    for (const auto& [a, b] : corpus.coauthorships()) out << csv::format_row({a, b});
  }
}

}  // namespace citemetrics
