#include "btlab/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "btlab/error.hpp"

namespace btlab {

Graph Graph::from_edges(std::size_t vertex_count, std::vector<Edge> edges, std::vector<int> labels) {
  if (!labels.empty() && labels.size() != vertex_count) {
    throw Error(ErrorKind::InvalidInput, "label count differs from vertex count");
  }
  for (Edge& e : edges) {
    if (e.first >= vertex_count || e.second >= vertex_count) {
      throw Error(ErrorKind::InvalidInput, "edge endpoint out of range");
    }
    if (e.first == e.second) throw Error(ErrorKind::InvalidInput, "self-loop at " + std::to_string(e.first));
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw Error(ErrorKind::InvalidInput, "repeated edge");
  }

  Graph g;
  g.offsets_.assign(vertex_count + 1, 0);
  for (const Edge& e : edges) {
    ++g.offsets_[e.first + 1];
    ++g.offsets_[e.second + 1];
  }
  for (std::size_t v = 0; v < vertex_count; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.targets_.resize(2 * edges.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : edges) {
    g.targets_[fill[e.first]++] = e.second;
    g.targets_[fill[e.second]++] = e.first;
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    std::sort(g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  }
  g.edges_ = std::move(edges);
  g.labels_ = std::move(labels);
  return g;
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<unsigned> bfs_distances(const Graph& g, VertexId source, unsigned max_depth) {
  std::vector<unsigned> dist(g.vertex_count(), kUnreachable);
  std::vector<VertexId> queue;
  queue.reserve(64);
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId v = queue[head];
    if (dist[v] >= max_depth) continue;
    for (VertexId w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::size_t connected_components(const Graph& g) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::size_t components = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    ++components;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

Graph read_edge_list(std::istream& in, std::optional<std::size_t> vertex_count) {
  std::vector<Edge> edges;
  std::size_t max_id = 0;
  bool any = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long long u = -1;
    long long v = -1;
    std::string rest;
    if (!(fields >> u >> v) || (fields >> rest) || u < 0 || v < 0) {
      throw Error(ErrorKind::InvalidInput, "edge list line " + std::to_string(line_no) + ": expected \"u v\"");
    }
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    max_id = std::max<std::size_t>(max_id, static_cast<std::size_t>(std::max(u, v)));
    any = true;
  }
  std::size_t count = any ? max_id + 1 : 0;
  if (vertex_count) {
    if (*vertex_count < count) throw Error(ErrorKind::InvalidInput, "edge list references more vertices than declared");
    count = *vertex_count;
  }
  return Graph::from_edges(count, std::move(edges));
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (const Edge& e : g.edges()) out << e.first << ' ' << e.second << '\n';
}

}  // namespace btlab
