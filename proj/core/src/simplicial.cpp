#include "btlab/simplicial.hpp"

#include <algorithm>
#include <string>

#include "btlab/error.hpp"
#include "btlab/smith.hpp"

namespace btlab {
namespace {

class CycleSearch {
 public:
  CycleSearch(const Graph& g, unsigned k, std::size_t cap, std::vector<std::vector<VertexId>>& out)
      : g_(g), k_(k), cap_(cap), out_(out), on_path_(g.vertex_count(), false) {}

  void run(VertexId anchor) {
    anchor_ = anchor;
    path_.assign(1, anchor);
    on_path_[anchor] = true;
    extend();
    on_path_[anchor] = false;
  }

 private:
  void extend() {
    const VertexId last = path_.back();
    for (VertexId w : g_.neighbors(last)) {
      if (w == anchor_) {
        if (path_.size() >= 3 && path_[1] < path_.back()) {
          if (out_.size() >= cap_) {
            throw Error(ErrorKind::ResourceBudgetExceeded, "cell count exceeds " + std::to_string(cap_));
          }
          out_.push_back(path_);
        }
        continue;
      }
      if (w < anchor_ || on_path_[w] || path_.size() >= k_) continue;
      path_.push_back(w);
      on_path_[w] = true;
      extend();
      on_path_[w] = false;
      path_.pop_back();
    }
  }

  const Graph& g_;
  unsigned k_;
  std::size_t cap_;
  std::vector<std::vector<VertexId>>& out_;
  std::vector<bool> on_path_;
  std::vector<VertexId> path_;
  VertexId anchor_ = 0;
};

std::size_t edge_index(const Graph& g, VertexId a, VertexId b) {
  const Edge e = a < b ? Edge{a, b} : Edge{b, a};
  const auto& edges = g.edges();
  return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
}

}  // namespace

TwoComplex pk_complex(const Graph& g, unsigned k, std::size_t cell_cap) {
  if (k < 3) throw Error(ErrorKind::InvalidInput, "cell length bound must be at least 3");
  TwoComplex c;
  c.graph = g;
  c.max_length = k;
  CycleSearch search(g, k, cell_cap, c.cells);
  for (VertexId v = 0; v < g.vertex_count(); ++v) search.run(v);
  std::sort(c.cells.begin(), c.cells.end());
  return c;
}

Homology homology_h1(const TwoComplex& c) {
  const Graph& g = c.graph;
  SparseIntMatrix d1{g.edge_count(), g.vertex_count(), {}};
  d1.entries.reserve(g.edge_count());
  for (const auto& [u, v] : g.edges()) d1.entries.push_back({{u, -1}, {v, 1}});

  SparseIntMatrix d2{c.cells.size(), g.edge_count(), {}};
  d2.entries.reserve(c.cells.size());
  for (const auto& cell : c.cells) {
    std::vector<std::pair<std::uint32_t, std::int64_t>> row;
    for (std::size_t i = 0; i < cell.size(); ++i) {
      const VertexId a = cell[i];
      const VertexId b = cell[(i + 1) % cell.size()];
      row.emplace_back(static_cast<std::uint32_t>(edge_index(g, a, b)), a < b ? 1 : -1);
    }
    d2.entries.push_back(std::move(row));
  }

  const SmithInvariants s1 = smith_invariants(d1);
  const SmithInvariants s2 = smith_invariants(d2);
  Homology h;
  h.components = connected_components(g);
  h.rank_d1 = s1.rank;
  h.rank_d2 = s2.rank;
  h.h1_rank = g.edge_count() - s1.rank - s2.rank;
  h.h1_torsion = s2.torsion;
  h.h2_rank = c.cells.size() - s2.rank;

  const auto chi = static_cast<long long>(g.vertex_count()) - static_cast<long long>(g.edge_count()) +
                   static_cast<long long>(c.cells.size());
  const auto betti = static_cast<long long>(g.vertex_count() - s1.rank) - static_cast<long long>(h.h1_rank) +
                     static_cast<long long>(h.h2_rank);
  if (chi != betti || g.vertex_count() - s1.rank != h.components) {
    throw Error(ErrorKind::InvalidInput, "Euler characteristic does not match the Betti numbers");
  }
  return h;
}

Presentation edge_path_presentation(const TwoComplex& c) {
  const Graph& g = c.graph;
  Presentation p;
  if (g.vertex_count() == 0) return p;
  if (connected_components(g) != 1) throw Error(ErrorKind::InvalidInput, "complex is not connected");

  std::vector<bool> tree(g.edge_count(), false);
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexId> queue{0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId v = queue[head];
    for (VertexId w : g.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = true;
      tree[edge_index(g, v, w)] = true;
      queue.push_back(w);
    }
  }
  std::vector<int> generator(g.edge_count(), -1);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!tree[e]) generator[e] = static_cast<int>(p.generators++);
  }
  for (const auto& cell : c.cells) {
    std::vector<int> word;
    for (std::size_t i = 0; i < cell.size(); ++i) {
      const VertexId a = cell[i];
      const VertexId b = cell[(i + 1) % cell.size()];
      const int gen = generator[edge_index(g, a, b)];
      if (gen < 0) continue;
      word.push_back(a < b ? gen + 1 : -(gen + 1));
    }
    p.relators.push_back(std::move(word));
  }
  return p;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "yes";
    case Verdict::No:
      return "no";
    case Verdict::Unknown:
      return "unknown";
  }
  return "unknown";
}

SimpleConnectivity bounded_simply_connected(const TwoComplex& c, std::size_t coset_budget) {
  SimpleConnectivity result;
  const Presentation raw = edge_path_presentation(c);
  result.homology = homology_h1(c);
  result.generators_before = raw.generators;
  if (result.homology.h1_rank > 0 || !result.homology.h1_torsion.empty()) {
    result.verdict = Verdict::No;
    return result;
  }
  const Presentation reduced = simplify(raw);
  result.generators_after = reduced.generators;
  result.relators_after = reduced.relators.size();
  result.cosets = enumerate_cosets(reduced, coset_budget);
  if (!result.cosets.complete) {
    result.verdict = Verdict::Unknown;
  } else {
    result.verdict = result.cosets.index == 1 ? Verdict::Yes : Verdict::No;
  }
  return result;
}

}  // namespace btlab
