#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace btlab {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

inline constexpr unsigned kUnreachable = std::numeric_limits<unsigned>::max();

/// Simple undirected graph in compressed adjacency form. Neighbour lists are
/// sorted; edges are stored once with u < v.
class Graph {
 public:
  Graph() = default;

  /// Throws InvalidInput on self-loops, repeated edges or out-of-range ids.
  static Graph from_edges(std::size_t vertex_count, std::vector<Edge> edges, std::vector<int> labels = {});

  std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(VertexId u, VertexId v) const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  int label(VertexId v) const { return labels_.empty() ? 0 : labels_[v]; }
  const std::vector<int>& labels() const noexcept { return labels_; }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> targets_;
  std::vector<Edge> edges_;
  std::vector<int> labels_;
};

/// BFS distances from `source`; vertices beyond `max_depth` (or unreachable)
/// get kUnreachable.
std::vector<unsigned> bfs_distances(const Graph& g, VertexId source, unsigned max_depth = kUnreachable);

std::size_t connected_components(const Graph& g);

/// Edge-list text: one "u v" pair per line, 0-based ids; blank lines and
/// lines starting with '#' ignored. Vertex count is max id + 1 unless given.
Graph read_edge_list(std::istream& in, std::optional<std::size_t> vertex_count = std::nullopt);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace btlab
