#pragma once

// Test-only oracles and generators. The oracles deliberately avoid the
// library's code paths: plain scans, an adjacency-matrix Floyd-Warshall, and
// long-double arithmetic.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace testsupport {

using Counts = std::vector<std::int64_t>;

// Largest k in 0..P with at least k entries >= k.
inline std::int64_t brute_h(const Counts& counts) {
  std::int64_t best = 0;
  for (std::int64_t k = 0; k <= static_cast<std::int64_t>(counts.size()); ++k) {
    std::int64_t qualifying = 0;
    for (const auto c : counts) qualifying += c >= k ? 1 : 0;
    if (qualifying >= k) best = k;
  }
  return best;
}

// Largest g in 0..isqrt(N)+1 (no larger g can pass) with (sum of the top min(g, P) counts) >= g^2.
inline std::int64_t brute_g(Counts counts) {
  std::sort(counts.rbegin(), counts.rend());
  std::int64_t total = 0;
  for (const auto c : counts) total += c;
  std::int64_t best = 0;
  const auto limit = static_cast<std::int64_t>(std::sqrt(static_cast<double>(total))) + 2;
  for (std::int64_t g = 0; g <= limit; ++g) {
    std::int64_t top = 0;
    for (std::int64_t i = 0; i < std::min<std::int64_t>(g, std::ssize(counts)); ++i) top += counts[i];
    if (top >= g * g) best = g;
  }
  return best;
}

inline std::int64_t core_sum(Counts counts, std::int64_t h) {
  std::sort(counts.rbegin(), counts.rend());
  std::int64_t s = 0;
  for (std::int64_t i = 0; i < h; ++i) s += counts[i];
  return s;
}

// Distances as unsigned with max() meaning "never collaborated".
inline constexpr std::uint64_t kFar = std::numeric_limits<std::uint64_t>::max();

// Largest n in 0..len with at least n distances >= n.
inline std::int64_t brute_c(const std::vector<std::uint64_t>& distances) {
  std::int64_t best = 0;
  for (std::uint64_t n = 0; n <= distances.size(); ++n) {
    std::uint64_t qualifying = 0;
    for (const auto d : distances) qualifying += d >= n ? 1 : 0;
    if (qualifying >= n) best = static_cast<std::int64_t>(n);
  }
  return best;
}

// All-pairs shortest paths on an unweighted graph of named nodes.
class FloydWarshall {
 public:
  FloydWarshall(const std::vector<std::string>& nodes,
                const std::vector<std::pair<std::string, std::string>>& edges)
      : nodes_(nodes) {
    for (std::size_t i = 0; i < nodes.size(); ++i) index_[nodes[i]] = i;
    const auto n = nodes.size();
    dist_.assign(n, std::vector<std::uint64_t>(n, kFar));
    for (std::size_t i = 0; i < n; ++i) dist_[i][i] = 0;
    for (const auto& [a, b] : edges) {
      dist_[index_.at(a)][index_.at(b)] = 1;
      dist_[index_.at(b)][index_.at(a)] = 1;
    }
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (dist_[i][k] != kFar && dist_[k][j] != kFar && dist_[i][k] + dist_[k][j] < dist_[i][j])
            dist_[i][j] = dist_[i][k] + dist_[k][j];
  }

  std::uint64_t distance(const std::string& a, const std::string& b) const {
    if (a == b) return 0;
    const auto ia = index_.find(a);
    const auto ib = index_.find(b);
    if (ia == index_.end() || ib == index_.end()) return kFar;
    return dist_[ia->second][ib->second];
  }

 private:
  std::vector<std::string> nodes_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::vector<std::uint64_t>> dist_;
};

// (sqrt(N)/4) * exp(H / ln P+) evaluated in long double, independent of the
// order or representation the library uses.
inline long double oracle_s(const Counts& counts) {
  long double n = 0;
  std::int64_t cited = 0;
  for (const auto c : counts) {
    n += static_cast<long double>(c);
    cited += c > 0 ? 1 : 0;
  }
  if (n == 0) return 0;
  long double h = 0;
  for (const auto c : counts) {
    if (c == 0) continue;
    h += static_cast<long double>(c) * std::log(static_cast<long double>(c));
  }
  h = std::log(n) - h / n;
  const long double normalized = cited >= 2 ? h / std::log(static_cast<long double>(cited)) : 0.0L;
  return std::sqrt(n) / 4.0L * std::exp(normalized);
}

// Profiles of length 0..max_len with either uniform or power-law counts.
class ProfileGen {
 public:
  explicit ProfileGen(std::uint64_t seed) : rng_(seed) {}

  Counts uniform(std::size_t max_len, std::int64_t max_count) {
    Counts out(std::uniform_int_distribution<std::size_t>(0, max_len)(rng_));
    std::uniform_int_distribution<std::int64_t> count(0, max_count);
    for (auto& c : out) c = count(rng_);
    return out;
  }

  Counts power_law(std::size_t max_len, double exponent) {
    Counts out(std::uniform_int_distribution<std::size_t>(0, max_len)(rng_));
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (auto& c : out) {
      const double x = std::pow(1.0 - u(rng_), -1.0 / (exponent - 1.0));
      c = std::min<std::int64_t>(100000, static_cast<std::int64_t>(x) - 1);
    }
    return out;
  }

  Counts any(std::size_t max_len) {
    if (coin()) return uniform(max_len, std::uniform_int_distribution<std::int64_t>(1, 300)(rng_));
    return power_law(max_len, std::uniform_real_distribution<double>(1.5, 3.5)(rng_));
  }

  bool coin() { return std::uniform_int_distribution<int>(0, 1)(rng_) == 1; }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

class TempDir {
 public:
  TempDir() {
    static std::uint64_t serial = 0;
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("citemetrics-test-" + std::to_string(rd()) + "-" + std::to_string(++serial));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

  void write(const std::string& name, const std::string& content) const {
    std::ofstream(path_ / name, std::ios::binary) << content;
  }

 private:
  std::filesystem::path path_;
};

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace testsupport
