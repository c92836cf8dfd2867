#include "citemetrics/collab_graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "citemetrics/errors.hpp"
#include "citemetrics/metrics.hpp"

namespace citemetrics {

namespace {
constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();
}

std::optional<std::uint32_t> CoauthorshipGraph::index_of(const AuthorId& id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool CoauthorshipGraph::has_edge(const AuthorId& a, const AuthorId& b) const {
  const auto ia = index_of(a);
  const auto ib = index_of(b);
  if (!ia || !ib) return false;
  const auto& adj = adjacency_[*ia];
  return std::binary_search(adj.begin(), adj.end(), *ib);
}

std::uint32_t CoauthorshipGraph::intern(const AuthorId& id) {
  if (id.empty()) throw InvalidInputError("empty author id");
  const auto [it, inserted] = index_.try_emplace(id, static_cast<std::uint32_t>(ids_.size()));
  if (inserted) {
    ids_.push_back(id);
    adjacency_.emplace_back();
  }
  return it->second;
}

CoauthorshipGraph build_graph(std::span<const AuthorPair> edges, std::span<const AuthorId> isolated) {
  CoauthorshipGraph graph;
  for (const auto& [a, b] : edges) {
    if (a == b) throw InvalidInputError("self-loop coauthorship for author '" + a + "'");
    const auto ia = graph.intern(a);
    const auto ib = graph.intern(b);
    graph.adjacency_[ia].push_back(ib);
    graph.adjacency_[ib].push_back(ia);
  }
  for (const auto& id : isolated) graph.intern(id);

  std::size_t half_edges = 0;
  for (auto& adj : graph.adjacency_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    half_edges += adj.size();
  }
  graph.edge_count_ = half_edges / 2;
  return graph;
}

DistanceMap::DistanceMap(const CoauthorshipGraph& graph, AuthorId source)
    : graph_(&graph), source_(std::move(source)) {
  const auto start = graph.index_of(source_);
  if (!start) return;
  hops_.assign(graph.node_count(), kUnreached);
  hops_[*start] = 0;
  std::deque<std::uint32_t> frontier{*start};
  while (!frontier.empty()) {
    const auto node = frontier.front();
    frontier.pop_front();
    for (const auto next : graph.neighbours(node)) {
      if (hops_[next] != kUnreached) continue;
      hops_[next] = hops_[node] + 1;
      frontier.push_back(next);
    }
  }
}

Hops DistanceMap::to(const AuthorId& target) const {
  if (target == source_) return Hops(0);
  if (hops_.empty()) return Hops::infinite();
  const auto idx = graph_->index_of(target);
  if (!idx || hops_[*idx] == kUnreached) return Hops::infinite();
  return Hops(hops_[*idx]);
}

Hops collab_distance(const CoauthorshipGraph& graph, const AuthorId& from, const AuthorId& to) {
  if (from == to) return Hops(0);
  return DistanceMap(graph, from).to(to);
}

CitationDistance CitationDistance::of(std::string event, Hops h) {
  if (h.is_infinite()) return {std::move(event), DistanceKind::infinite, 0};
  return {std::move(event), DistanceKind::finite, h.value()};
}

CitationDistance citation_distance(const DistanceMap& from_researcher,
                                   std::span<const AuthorId> citing_authors, std::string event) {
  if (citing_authors.empty()) return CitationDistance::unknown(std::move(event));
  Hops best = Hops::infinite();
  for (const auto& author : citing_authors) best = std::min(best, from_researcher.to(author));
  return CitationDistance::of(std::move(event), best);
}

CitationDistance citation_distance(const CoauthorshipGraph& graph, const AuthorId& researcher,
                                   std::span<const AuthorId> citing_authors, std::string event) {
  return citation_distance(DistanceMap(graph, researcher), citing_authors, std::move(event));
}

std::int64_t c_index(std::span<const CitationDistance> distances) {
  std::vector<std::uint64_t> seq;
  seq.reserve(distances.size());
  for (const auto& d : distances) {
    switch (d.kind) {
      case DistanceKind::finite: seq.push_back(d.hops); break;
      case DistanceKind::infinite: seq.push_back(std::numeric_limits<std::uint64_t>::max()); break;
      case DistanceKind::unknown: break;
    }
  }
  std::sort(seq.begin(), seq.end(), std::greater<>());
  return static_cast<std::int64_t>(max_min_rank(seq));
}

}  // namespace citemetrics
