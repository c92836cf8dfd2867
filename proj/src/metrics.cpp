#include "citemetrics/metrics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <numeric>

#include "citemetrics/errors.hpp"

namespace citemetrics {

Count CitationProfile::total_citations() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), Count{0});
}

CitationProfile sorted_profile(std::span<const Count> raw_counts, std::string researcher) {
  for (const Count c : raw_counts) {
    if (c < 0) {
      throw InvalidInputError("negative citation count " + std::to_string(c));
    }
  }
  CitationProfile profile;
  profile.counts_.assign(raw_counts.begin(), raw_counts.end());
  std::sort(profile.counts_.begin(), profile.counts_.end(), std::greater<>());
  profile.researcher_ = std::move(researcher);
  return profile;
}

std::uint64_t max_min_rank(std::span<const std::uint64_t> non_increasing) {
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < non_increasing.size(); ++i) {
    const std::uint64_t position = i + 1;
    if (non_increasing[i] < position) break;
    rank = position;
  }
  return rank;
}

std::int64_t h_index(const CitationProfile& profile) {
  const auto& counts = profile.counts();
  std::vector<std::uint64_t> seq(counts.begin(), counts.end());
  return static_cast<std::int64_t>(max_min_rank(seq));
}

double relative_h(std::int64_t h, std::int64_t field_max_h) {
  if (h < 0 || field_max_h < 0) {
    throw InvalidInputError("h values must be non-negative");
  }
  if (h > field_max_h) {
    throw InconsistentDataError("h = " + std::to_string(h) + " exceeds field maximum " +
                                std::to_string(field_max_h));
  }
  if (field_max_h == 0) return 0.0;
  return static_cast<double>(h) / static_cast<double>(field_max_h);
}

double e_index(const CitationProfile& profile) {
  const std::int64_t h = h_index(profile);
  if (h == 0) return 0.0;
  const auto& counts = profile.counts();
  const Count core = std::accumulate(counts.begin(), counts.begin() + h, Count{0});
  return std::sqrt(static_cast<double>(core - h * h));
}

std::int64_t g_index(const CitationProfile& profile) {
  const auto& counts = profile.counts();
  // top-g sum minus g^2 is concave in g and starts at 0, so the first failure
  // ends the search.
  std::int64_t g = 0;
  Count cumulative = 0;
  for (;;) {
    const std::int64_t next = g + 1;
    if (static_cast<std::size_t>(g) < counts.size()) cumulative += counts[g];
    if (cumulative < next * next) break;
    g = next;
  }
  return g;
}

double m_quotient(std::int64_t h, Year first_pub_year, Year reference_year) {
  if (reference_year < first_pub_year) {
    throw InvalidInputError("reference year " + std::to_string(reference_year) +
                            " precedes first publication year " +
                            std::to_string(first_pub_year));
  }
  const std::int64_t years =
      std::max<std::int64_t>(1, std::int64_t{reference_year} - first_pub_year + 1);
  return static_cast<double>(h) / static_cast<double>(years);
}

double o_index(const CitationProfile& profile) {
  const std::int64_t h = h_index(profile);
  return std::sqrt(static_cast<double>(h) * static_cast<double>(profile.most_cited()));
}

std::int64_t i_k_index(const CitationProfile& profile, std::int64_t k) {
  if (k < 1) {
    throw InvalidInputError("i_k threshold must be at least 1, got " + std::to_string(k));
  }
  const auto& counts = profile.counts();
  return std::count_if(counts.begin(), counts.end(), [k](Count c) { return c >= k; });
}

double s_index(const CitationProfile& profile, const SIndexConfig& config) {
  const Count total = profile.total_citations();
  if (total == 0) return 0.0;
  const double n = static_cast<double>(total);

  double entropy = 0.0;
  std::int64_t cited = 0;
  for (const Count c : profile.counts()) {
    if (c == 0) continue;
    ++cited;
    const double p = static_cast<double>(c) / n;
    entropy -= p * std::log(p);
  }
  double exponent = 0.0;
  if (cited >= 2) {
    exponent = config.normalize_entropy ? entropy / std::log(static_cast<double>(cited)) : entropy;
  }
  return std::sqrt(n) * config.scale * std::exp(exponent);
}

std::string_view metric_name(Metric metric) noexcept {
  switch (metric) {
    case Metric::h: return "h";
    case Metric::hr: return "hr";
    case Metric::c: return "c";
    case Metric::e: return "e";
    case Metric::g: return "g";
    case Metric::m: return "m";
    case Metric::o: return "o";
    case Metric::s: return "s";
    case Metric::i10: return "i10";
  }
  return "?";
}

std::optional<Metric> parse_metric(std::string_view name) noexcept {
  for (const Metric m : kAllMetrics) {
    if (metric_name(m) == name) return m;
  }
  return std::nullopt;
}

bool is_integer_metric(Metric metric) noexcept {
  return metric == Metric::h || metric == Metric::c || metric == Metric::g ||
         metric == Metric::i10;
}

std::string format_two_decimals(double value) {
  if (!std::isfinite(value)) {
    if (std::isnan(value)) return "nan";
    return value > 0 ? "inf" : "-inf";
  }
  const bool negative = std::signbit(value) && value != 0.0;
  char buf[512];
  const auto res = std::to_chars(buf, buf + sizeof buf, std::fabs(value), std::chars_format::fixed);
  const std::string_view text(buf, static_cast<std::size_t>(res.ptr - buf));

  const auto dot = text.find('.');
  std::string digits(text.substr(0, dot));
  std::string_view fraction = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  for (std::size_t i = 0; i < 2; ++i) digits.push_back(i < fraction.size() ? fraction[i] : '0');

  if (fraction.size() > 2 && fraction[2] >= '5') {
    std::size_t i = digits.size();
    while (i > 0) {
      --i;
      if (digits[i] == '9') {
        digits[i] = '0';
      } else {
        ++digits[i];
        break;
      }
      if (i == 0) digits.insert(digits.begin(), '1');
    }
  }
  std::string out = negative ? "-" : "";
  out.append(digits, 0, digits.size() - 2);
  out.push_back('.');
  out.append(digits, digits.size() - 2, 2);
  if (out == "-0.00") out = "0.00";
  return out;
}

IndexValue make_index_value(Metric metric, double value) {
  std::string display;
  if (is_integer_metric(metric)) {
    display = std::to_string(static_cast<std::int64_t>(std::llround(value)));
  } else {
    display = format_two_decimals(value);
  }
  return IndexValue{metric, value, std::move(display)};
}

}  // namespace citemetrics
