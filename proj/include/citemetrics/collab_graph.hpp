#pragma once

// Undirected coauthorship graph, shortest-path collaboration distances, and
// the collaboration-distance citation index (c).

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace citemetrics {

using AuthorId = std::string;
using AuthorPair = std::pair<AuthorId, AuthorId>;

// Hop count between two authors; infinite when no path exists.
class Hops {
 public:
  constexpr explicit Hops(std::uint32_t n) : value_(n) {}
  static constexpr Hops infinite() { return Hops(kInfinite); }

  constexpr bool is_infinite() const noexcept { return value_ == kInfinite; }
  // Meaningful only when finite.
  constexpr std::uint32_t value() const noexcept { return value_; }

  friend constexpr auto operator<=>(Hops, Hops) = default;

 private:
  static constexpr std::uint32_t kInfinite = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t value_;
};

class CoauthorshipGraph {
 public:
  CoauthorshipGraph() = default;

  std::size_t node_count() const noexcept { return ids_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool contains(const AuthorId& id) const { return index_.contains(id); }
  bool has_edge(const AuthorId& a, const AuthorId& b) const;
  const std::vector<AuthorId>& nodes() const noexcept { return ids_; }

  std::optional<std::uint32_t> index_of(const AuthorId& id) const;
  std::span<const std::uint32_t> neighbours(std::uint32_t node) const { return adjacency_[node]; }

 private:
  friend CoauthorshipGraph build_graph(std::span<const AuthorPair>, std::span<const AuthorId>);

  std::uint32_t intern(const AuthorId& id);

  std::vector<AuthorId> ids_;
  std::unordered_map<AuthorId, std::uint32_t> index_;
  std::vector<std::vector<std::uint32_t>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Deduplicates symmetric pairs. Authors in `isolated` are registered as nodes
// even without edges. Throws InvalidInputError on a self-loop or empty id.
CoauthorshipGraph build_graph(std::span<const AuthorPair> edges,
                              std::span<const AuthorId> isolated = {});

// One BFS from a source author, queried for many targets.
class DistanceMap {
 public:
  DistanceMap(const CoauthorshipGraph& graph, AuthorId source);

  const AuthorId& source() const noexcept { return source_; }
  // Unregistered targets are infinitely far away; the source is at 0.
  Hops to(const AuthorId& target) const;

 private:
  const CoauthorshipGraph* graph_;
  AuthorId source_;
  std::vector<std::uint32_t> hops_;
};

Hops collab_distance(const CoauthorshipGraph& graph, const AuthorId& from, const AuthorId& to);

enum class DistanceKind { finite, infinite, unknown };

struct CitationDistance {
  std::string event;
  DistanceKind kind = DistanceKind::unknown;
  std::uint32_t hops = 0;  // set when kind == finite

  static CitationDistance of(std::string event, Hops h);
  static CitationDistance unknown(std::string event) { return {std::move(event), DistanceKind::unknown, 0}; }

  friend bool operator==(const CitationDistance&, const CitationDistance&) = default;
};

// Minimum distance from the researcher to any citing author; unknown when
// the citation lists no authors.
CitationDistance citation_distance(const DistanceMap& from_researcher,
                                   std::span<const AuthorId> citing_authors,
                                   std::string event = {});
CitationDistance citation_distance(const CoauthorshipGraph& graph, const AuthorId& researcher,
                                   std::span<const AuthorId> citing_authors,
                                   std::string event = {});

// Largest n such that at least n citations come from distance >= n. Unknown
// distances never count (callers are expected to filter and report them).
std::int64_t c_index(std::span<const CitationDistance> distances);

}  // namespace citemetrics
