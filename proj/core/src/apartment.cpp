#include "btlab/apartment.hpp"

#include <algorithm>
#include <unordered_map>

#include "btlab/error.hpp"

namespace btlab {

ExponentTuple normalize_exponents(ExponentTuple t) {
  if (t.empty()) return t;
  const long long low = *std::min_element(t.begin(), t.end());
  for (long long& k : t) k -= low;
  return t;
}

int tuple_type(const ExponentTuple& t) {
  const auto n = static_cast<long long>(t.size());
  long long sum = 0;
  for (long long k : t) sum += k;
  return static_cast<int>(((sum % n) + n) % n);
}

unsigned subset_increment(const ExponentTuple& a, const ExponentTuple& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::InvalidInput, "tuple length mismatch");
  const std::size_t n = a.size();
  // b ~ a + 1_S means b - a is constant c on S and c - 1 off S, for some c.
  std::vector<long long> diff(n);
  for (std::size_t i = 0; i < n; ++i) diff[i] = b[i] - a[i];
  const long long hi = *std::max_element(diff.begin(), diff.end());
  const long long lo = *std::min_element(diff.begin(), diff.end());
  if (hi - lo != 1) return 0;
  return static_cast<unsigned>(std::count(diff.begin(), diff.end(), hi));
}

ApartmentSlice apartment_slice(const BuildingParams& params, unsigned radius) {
  const unsigned n = params.n();
  ApartmentSlice slice(params);
  slice.radius_ = radius;

  ExponentTuple t(n, 0);
  while (true) {
    if (*std::min_element(t.begin(), t.end()) == 0) slice.tuples_.push_back(t);
    std::size_t pos = 0;
    while (pos < n && ++t[pos] > static_cast<long long>(radius)) t[pos++] = 0;
    if (pos == n) break;
  }
  std::sort(slice.tuples_.begin(), slice.tuples_.end(), [](const ExponentTuple& a, const ExponentTuple& b) {
    const long long ma = *std::max_element(a.begin(), a.end());
    const long long mb = *std::max_element(b.begin(), b.end());
    return ma != mb ? ma < mb : a < b;
  });

  std::unordered_map<LatticeClass, VertexId, LatticeClassHash> index;
  for (const ExponentTuple& tuple : slice.tuples_) {
    slice.classes_.push_back(diagonal_class(params, tuple));
    index.emplace(slice.classes_.back(), static_cast<VertexId>(slice.classes_.size() - 1));
  }

  const NeighborGenerator generator(params);
  std::vector<Edge> edges;
  for (VertexId v = 0; v < slice.classes_.size(); ++v) {
    for (const LatticeClass& w : generator.neighbors(slice.classes_[v])) {
      auto it = index.find(w);
      if (it != index.end() && it->second > v) edges.emplace_back(v, it->second);
    }
  }
  std::vector<int> types;
  for (const LatticeClass& l : slice.classes_) types.push_back(lattice_type(l));
  slice.graph_ = Graph::from_edges(slice.classes_.size(), std::move(edges), std::move(types));
  return slice;
}

}  // namespace btlab
