#pragma once

// Per-researcher citation indices computed from a sorted citation profile.
//
// Every function here is pure: it reads only its arguments, so any number of
// threads may call them concurrently.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace citemetrics {

using Count = std::int64_t;
using Year = std::int32_t;

class CitationProfile;

// The only way to build a profile. Throws InvalidInputError on a negative count.
CitationProfile sorted_profile(std::span<const Count> raw_counts, std::string researcher = {});

// Citation counts of one researcher's publications, highest first. Papers
// with zero citations are kept; they count towards the publication total.
class CitationProfile {
 public:
  CitationProfile() = default;

  const std::vector<Count>& counts() const noexcept { return counts_; }
  const std::string& researcher() const noexcept { return researcher_; }

  std::size_t publication_count() const noexcept { return counts_.size(); }
  Count total_citations() const noexcept;
  Count most_cited() const noexcept { return counts_.empty() ? 0 : counts_.front(); }

  friend bool operator==(const CitationProfile&, const CitationProfile&) = default;

 private:
  friend CitationProfile sorted_profile(std::span<const Count>, std::string);

  std::vector<Count> counts_;
  std::string researcher_;
};

inline CitationProfile sorted_profile(std::initializer_list<Count> raw_counts,
                                      std::string researcher = {}) {
  return sorted_profile(std::span<const Count>(raw_counts.begin(), raw_counts.size()),
                        std::move(researcher));
}

// Largest k such that values[k-1] >= k, for a non-increasing sequence. This is
// the shared max-min rule behind both h and c.
std::uint64_t max_min_rank(std::span<const std::uint64_t> non_increasing);

std::int64_t h_index(const CitationProfile& profile);

// h / field_max_h; 0 when the field maximum is 0. Throws InconsistentDataError
// when h exceeds the maximum it is supposed to be drawn from.
double relative_h(std::int64_t h, std::int64_t field_max_h);

double e_index(const CitationProfile& profile);

// Largest g with the top-g citation sum >= g^2, padding with zero-citation
// papers so g may exceed the publication count.
std::int64_t g_index(const CitationProfile& profile);

// h / career years, counting the first publication year inclusively.
// Throws InvalidInputError when reference_year < first_pub_year.
double m_quotient(std::int64_t h, Year first_pub_year, Year reference_year);

double o_index(const CitationProfile& profile);

// Number of publications with at least k citations. Throws on k == 0.
std::int64_t i_k_index(const CitationProfile& profile, std::int64_t k = 10);

// Citation-entropy index: (sqrt(N) * scale) * exp(H / ln P+), where H is the
// Shannon entropy of the citation shares of the cited papers. With fewer than
// two cited papers the entropy term is taken as 0.
struct SIndexConfig {
  double scale = 0.25;
  bool normalize_entropy = true;
};
inline constexpr SIndexConfig kDefaultSIndex{};

double s_index(const CitationProfile& profile, const SIndexConfig& config = kDefaultSIndex);

enum class Metric { h, hr, c, e, g, m, o, s, i10 };

inline constexpr std::array<Metric, 9> kAllMetrics{Metric::h, Metric::hr, Metric::c,
                                                   Metric::e, Metric::g,  Metric::m,
                                                   Metric::o, Metric::s,  Metric::i10};

std::string_view metric_name(Metric metric) noexcept;
std::optional<Metric> parse_metric(std::string_view name) noexcept;
bool is_integer_metric(Metric metric) noexcept;

// Two decimals, half rounded up, applied to the shortest decimal that
// round-trips the double (so 0.375 -> "0.38" and 1.005 -> "1.01").
std::string format_two_decimals(double value);

struct IndexValue {
  Metric metric;
  double value;
  std::string display;

  friend bool operator==(const IndexValue&, const IndexValue&) = default;
};

// Integer metrics display as plain integers, real ones via format_two_decimals.
IndexValue make_index_value(Metric metric, double value);

}  // namespace citemetrics
