#include "btlab/covering.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "btlab/error.hpp"

namespace btlab {

VertexMap compose(const VertexMap& f, const VertexMap& g) {
  VertexMap out;
  out.image.reserve(f.image.size());
  for (VertexId v : f.image) {
    if (v >= g.image.size()) throw Error(ErrorKind::InvalidInput, "composition out of range");
    out.image.push_back(g.image[v]);
  }
  return out;
}

VertexMap read_vertex_map(std::istream& in, std::size_t source_count) {
  constexpr VertexId kUnset = static_cast<VertexId>(-1);
  VertexMap f{std::vector<VertexId>(source_count, kUnset)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long long src = -1;
    long long dst = -1;
    std::string rest;
    if (!(fields >> src >> dst) || (fields >> rest) || src < 0 || dst < 0) {
      throw Error(ErrorKind::InvalidInput, "map line " + std::to_string(line_no) + ": expected \"src dst\"");
    }
    if (static_cast<std::size_t>(src) >= source_count) throw Error(ErrorKind::InvalidInput, "map source out of range");
    if (f.image[src] != kUnset) throw Error(ErrorKind::InvalidInput, "vertex mapped twice: " + std::to_string(src));
    f.image[src] = static_cast<VertexId>(dst);
  }
  for (std::size_t v = 0; v < source_count; ++v) {
    if (f.image[v] == kUnset) throw Error(ErrorKind::InvalidInput, "map is not total: vertex " + std::to_string(v));
  }
  return f;
}

std::string_view to_string(CoveringViolationKind kind) {
  switch (kind) {
    case CoveringViolationKind::ImageOutOfRange: return "image-out-of-range";
    case CoveringViolationKind::EdgeNotPreserved: return "edge-not-preserved";
    case CoveringViolationKind::NotLocallyInjective: return "not-locally-injective";
    case CoveringViolationKind::NotLocallySurjective: return "not-locally-surjective";
  }
  return "unknown";
}

CoveringReport is_covering(const VertexMap& f, const Graph& g, const Graph& h, const std::vector<bool>& boundary) {
  if (f.image.size() != g.vertex_count()) throw Error(ErrorKind::InvalidInput, "map is not total on G");
  if (!boundary.empty() && boundary.size() != g.vertex_count()) {
    throw Error(ErrorKind::InvalidInput, "boundary flags do not match G");
  }
  CoveringReport report;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (f.image[v] >= h.vertex_count()) {
      report.violations.push_back({v, CoveringViolationKind::ImageOutOfRange, "image " + std::to_string(f.image[v]) + " is not a vertex of H"});
    }
  }
  if (!report.ok()) return report;

  for (const Edge& e : g.edges()) {
    if (!h.adjacent(f.image[e.first], f.image[e.second])) {
      report.violations.push_back({e.first, CoveringViolationKind::EdgeNotPreserved,
                                   "edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                                       " maps to a non-edge"});
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::vector<VertexId> images;
    for (VertexId w : g.neighbors(v)) images.push_back(f.image[w]);
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
      report.violations.push_back({v, CoveringViolationKind::NotLocallyInjective,
                                   "two neighbours of " + std::to_string(v) + " share an image"});
      continue;
    }
    const bool is_boundary = !boundary.empty() && boundary[v];
    if (is_boundary) continue;
    const auto target = h.neighbors(f.image[v]);
    if (!std::equal(images.begin(), images.end(), target.begin(), target.end())) {
      report.violations.push_back({v, CoveringViolationKind::NotLocallySurjective,
                                   "N(" + std::to_string(v) + ") does not map onto N(" + std::to_string(f.image[v]) + ")"});
    }
  }
  return report;
}

}  // namespace btlab
