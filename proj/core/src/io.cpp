#include "btlab/io.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "btlab/error.hpp"

namespace btlab {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::array<std::string_view, 8> kPalette{"#4e79a7", "#f28e2b", "#59a14f", "#e15759",
                                                   "#b07aa1", "#76b7b2", "#edc948", "#9c755f"};

std::string_view colour(int type) { return kPalette[static_cast<std::size_t>(type) % kPalette.size()]; }

Json edges_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return edges;
}

std::string dump(const Json& j, int indent) { return j.dump(indent) + "\n"; }

}  // namespace

std::string ball_to_json(const BuildingBall& ball, int indent) {
  Json doc;
  doc["n"] = ball.params().n();
  doc["p"] = ball.params().p();
  doc["radius"] = ball.radius();
  Json vertices = Json::array();
  for (VertexId v = 0; v < ball.size(); ++v) {
    const IntMatrix& b = ball.vertex(v).basis();
    Json hnf = Json::array();
    for (std::size_t r = 0; r < b.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < b.cols(); ++c) row.push_back(to_string(b(r, c)));
      hnf.push_back(std::move(row));
    }
    vertices.push_back({{"id", v}, {"hnf", std::move(hnf)}, {"type", ball.type(v)}, {"dist_root", ball.dist_root(v)}});
  }
  doc["vertices"] = std::move(vertices);
  doc["edges"] = edges_json(ball.graph());
  return dump(doc, indent);
}

BuildingBall ball_from_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("ball JSON: ") + e.what());
  }
  try {
    const auto params = BuildingParams::make(doc.at("p").get<std::uint64_t>(), doc.at("n").get<unsigned>());
    const auto radius = doc.at("radius").get<unsigned>();
    const std::size_t n = params.n();
    std::vector<LatticeClass> vertices;
    std::vector<unsigned> dist_root;
    const auto& list = doc.at("vertices");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto& item = list[i];
      if (item.at("id").get<std::size_t>() != i) throw Error(ErrorKind::InvalidInput, "vertex ids must be 0..N-1 in order");
      const auto& hnf = item.at("hnf");
      if (hnf.size() != n) throw Error(ErrorKind::InvalidInput, "hnf must be n x n");
      IntMatrix basis(n, n);
      for (std::size_t r = 0; r < n; ++r) {
        if (hnf[r].size() != n) throw Error(ErrorKind::InvalidInput, "hnf must be n x n");
        for (std::size_t c = 0; c < n; ++c) basis(r, c) = parse_bigint(hnf[r][c].get<std::string>());
      }
      LatticeClass l = canonicalize(params, basis);
      if (!(l.basis() == basis)) throw Error(ErrorKind::InvalidInput, "vertex " + std::to_string(i) + " is not canonical");
      if (lattice_type(l) != item.at("type").get<int>()) {
        throw Error(ErrorKind::InvalidInput, "vertex " + std::to_string(i) + " has the wrong type");
      }
      vertices.push_back(std::move(l));
      dist_root.push_back(item.at("dist_root").get<unsigned>());
    }
    std::vector<Edge> edges;
    for (const auto& e : doc.at("edges")) {
      if (e.size() != 2) throw Error(ErrorKind::InvalidInput, "edges are [u, v] pairs");
      edges.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
    }
    return BuildingBall::assemble(params, radius, std::move(vertices), std::move(dist_root), std::move(edges));
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("ball JSON: ") + e.what());
  }
}

std::string ball_to_dot(const BuildingBall& ball) {
  std::ostringstream out;
  out << "graph building {\n  node [style=filled, label=\"\"];\n";
  for (VertexId v = 0; v < ball.size(); ++v) {
    out << "  " << v << " [fillcolor=\"" << colour(ball.type(v)) << "\", tooltip=\"type " << ball.type(v) << "\"";
    if (v == ball.root()) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (const auto& [u, v] : ball.graph().edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string apartment_to_json(const ApartmentSlice& slice, int indent) {
  Json doc;
  doc["n"] = slice.params().n();
  doc["p"] = slice.params().p();
  doc["radius"] = slice.radius();
  Json vertices = Json::array();
  for (VertexId v = 0; v < slice.size(); ++v) {
    vertices.push_back({{"id", v}, {"exponents", slice.tuples()[v]}, {"type", slice.graph().label(v)}});
  }
  doc["vertices"] = std::move(vertices);
  doc["edges"] = edges_json(slice.graph());
  return dump(doc, indent);
}

std::string apartment_to_dot(const ApartmentSlice& slice) {
  std::ostringstream out;
  out << "graph apartment {\n  node [style=filled];\n";
  for (VertexId v = 0; v < slice.size(); ++v) {
    out << "  " << v << " [fillcolor=\"" << colour(slice.graph().label(v)) << "\", label=\"";
    const auto& t = slice.tuples()[v];
    for (std::size_t i = 0; i < t.size(); ++i) out << (i ? "," : "") << t[i];
    out << "\"";
    if (v == 0) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (const auto& [u, v] : slice.graph().edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string replica_to_json(const ReplicaGraph& replica, int indent) {
  Json doc;
  doc["kept"] = replica.kept_ids;
  Json prints = Json::array();
  for (std::size_t k = 0; k < replica.prints.size(); ++k) {
    prints.push_back({{"members", replica.prints[k].members}, {"source", replica.print_sources[k]}});
  }
  doc["prints"] = std::move(prints);
  doc["edges"] = edges_json(replica.graph);
  return dump(doc, indent);
}

std::string replica_to_dot(const ReplicaGraph& replica) {
  std::ostringstream out;
  out << "graph replica {\n  node [style=filled, label=\"\"];\n";
  for (VertexId a = 0; a < replica.node_count(); ++a) {
    out << "  " << a << " [fillcolor=\"" << colour(replica.graph.label(a)) << "\"";
    if (replica.kind(a) == ReplicaNodeKind::Print) out << ", shape=square";
    out << "];\n";
  }
  for (const auto& [u, v] : replica.graph.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string pk_to_json(const TwoComplex& complex, const SimpleConnectivity& result, int indent) {
  Json doc;
  doc["h1_rank"] = result.homology.h1_rank;
  Json torsion = Json::array();
  for (const BigInt& d : result.homology.h1_torsion) torsion.push_back(to_string(d));
  doc["h1_torsion"] = std::move(torsion);
  doc["verdict"] = std::string(to_string(result.verdict));
  doc["cells"] = complex.cells;
  return dump(doc, indent);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return ball_from_json(text).graph();
  std::istringstream lines(text);
  return read_edge_list(lines);
}

}  // namespace btlab
