#include "commands.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "btlab/apartment.hpp"
#include "btlab/building.hpp"
#include "btlab/covering.hpp"
#include "btlab/error.hpp"
#include "btlab/io.hpp"
#include "btlab/isometry.hpp"
#include "btlab/prints.hpp"
#include "btlab/replica.hpp"
#include "btlab/simplicial.hpp"
#include "conformance.hpp"

namespace btlab::cli {
namespace {

using Json = nlohmann::ordered_json;

BuildingParams params_of(const RunConfig& cfg) { return BuildingParams::make(cfg.p, cfg.n); }

BuildingBall ball_of(const RunConfig& cfg) {
  return generate_ball(params_of(cfg), cfg.radius, BallOptions{cfg.vertex_cap});
}

std::vector<VertexId> read_ids(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  std::vector<VertexId> ids;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      const unsigned long value = std::stoul(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      ids.push_back(static_cast<VertexId>(value));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "not a vertex id: " + token);
    }
  }
  return ids;
}

void check_vertex(const BuildingBall& ball, VertexId v) {
  if (v >= ball.size()) throw Error(ErrorKind::InvalidInput, "vertex " + std::to_string(v) + " is not in the ball");
}

std::string types_summary(const std::map<int, std::size_t>& hist) {
  std::ostringstream out;
  out << "types {";
  bool first = true;
  for (const auto& [t, count] : hist) {
    out << (first ? "" : ", ") << t << ":" << count;
    first = false;
  }
  out << "}";
  return out.str();
}

std::string join(const std::vector<VertexId>& ids) {
  std::ostringstream out;
  for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? " " : "") << ids[i];
  return out.str();
}

int cmd_generate(const RunConfig& cfg, std::ostream& out) {
  const BuildingBall ball = ball_of(cfg);
  if (cfg.format == "json") {
    out << ball_to_json(ball);
  } else if (cfg.format == "dot") {
    out << ball_to_dot(ball);
  } else {
    out << ball.size() << " vertices, " << ball.graph().edge_count() << " edges, "
        << types_summary(types_histogram(ball)) << "\n";
  }
  return kOk;
}

int cmd_apartment(const RunConfig& cfg, std::ostream& out) {
  const ApartmentSlice slice = apartment_slice(params_of(cfg), cfg.radius);
  if (cfg.format == "json") {
    out << apartment_to_json(slice);
  } else if (cfg.format == "dot") {
    out << apartment_to_dot(slice);
  } else {
    std::map<int, std::size_t> hist;
    for (VertexId v = 0; v < slice.size(); ++v) ++hist[slice.graph().label(v)];
    out << slice.size() << " vertices, " << slice.graph().edge_count() << " edges, " << types_summary(hist) << "\n";
  }
  return kOk;
}

int cmd_histogram(const RunConfig& cfg, std::ostream& out) {
  const BuildingBall ball = ball_of(cfg);
  const auto hist = types_histogram(ball);
  if (cfg.format == "json") {
    Json types = Json::object();
    for (const auto& [t, count] : hist) types[std::to_string(t)] = count;
    out << Json{{"n", cfg.n}, {"p", cfg.p}, {"radius", cfg.radius}, {"types", types}}.dump() << "\n";
  } else {
    out << types_summary(hist) << "\n";
  }
  return kOk;
}

int cmd_print(const RunConfig& cfg, std::ostream& out) {
  const BuildingBall ball = ball_of(cfg);
  const VertexId v = *cfg.vertex;
  check_vertex(ball, v);
  const Print print = print_of(ball, v);
  if (cfg.format == "json") {
    out << Json{{"vertex", v}, {"type", ball.type(v)}, {"members", print.members}}.dump() << "\n";
  } else {
    out << "vertex " << v << " (type " << ball.type(v) << "): " << print.members.size() << " members: "
        << join(print.members) << "\n";
  }
  return kOk;
}

int cmd_source(const RunConfig& cfg, std::ostream& out) {
  const BuildingBall ball = ball_of(cfg);
  std::vector<VertexId> members = read_ids(cfg.members_file);
  for (VertexId m : members) check_vertex(ball, m);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  const VertexId s = source_of(ball, members);
  if (cfg.format == "json") {
    out << Json{{"source", s}, {"type", ball.type(s)}}.dump() << "\n";
  } else {
    out << s << "\n";
  }
  return kOk;
}

int cmd_replica(const RunConfig& cfg, std::ostream& out) {
  const BuildingBall ball = ball_of(cfg);
  const ReplicaGraph replica = build_replica(ball, cfg.kept_types);
  const ReplicaVerification v = verify_replica(ball, replica);
  if (cfg.format == "json") {
    Json doc = Json::parse(replica_to_json(replica));
    Json verification{{"ok", v.ok},
                      {"bijective", v.bijective},
                      {"adjacency_faithful", v.adjacency_faithful},
                      {"print_member_distance_one", v.print_member_distance_one},
                      {"certified_radius", v.certified_radius},
                      {"certified_nodes", v.certified_nodes},
                      {"pairs_checked", v.pairs_checked}};
    if (v.counterexample) {
      verification["counterexample"] = {{"nodes", {v.counterexample->node_a, v.counterexample->node_b}},
                                        {"replica_distance", v.counterexample->replica_distance},
                                        {"building_distance", v.counterexample->building_distance}};
    }
    doc["verification"] = std::move(verification);
    out << doc.dump() << "\n";
  } else if (cfg.format == "dot") {
    out << replica_to_dot(replica);
  } else {
    out << replica.kept_ids.size() << " kept, " << replica.prints.size() << " prints, "
        << replica.graph.edge_count() << " edges (" << replica.kept_kept_edges << " kept-kept, "
        << replica.kept_print_edges << " kept-print, " << replica.print_print_edges << " print-print)\n"
        << (v.ok ? "verified" : "FAILED") << ": certified radius " << v.certified_radius << ", "
        << v.certified_nodes << " nodes, " << v.pairs_checked << " pairs";
    if (!v.ok) out << "; " << v.failure;
    out << "\n";
  }
  return v.ok ? kOk : kCounterexample;
}

struct HostGraph {
  Graph graph;
  std::optional<Horizon> horizon;
};

HostGraph host_of(const RunConfig& cfg, const std::string& file) {
  if (!file.empty()) return {read_graph_file(file), std::nullopt};
  BuildingBall ball = ball_of(cfg);
  return {ball.graph(), ball.horizon()};
}

RootedBall exact_ball(const HostGraph& host, VertexId root, unsigned r) {
  if (root >= host.graph.vertex_count()) {
    throw Error(ErrorKind::InvalidInput, "vertex " + std::to_string(root) + " is not in the graph");
  }
  RootedBall ball = extract_rooted_ball(host.graph, root, r);
  if (host.horizon && !metric_is_exact(ball, *host.horizon)) {
    throw Error(ErrorKind::InexactMetric, "ball at " + std::to_string(root) + " reaches past the truncation horizon");
  }
  return ball;
}

int cmd_isocheck(const RunConfig& cfg, std::ostream& out) {
  const HostGraph first = host_of(cfg, cfg.graph_file);
  const HostGraph second = cfg.other_graph_file.empty() ? first : host_of(cfg, cfg.other_graph_file);
  const RootedBall a = exact_ball(first, cfg.root, cfg.ball_radius);
  const RootedBall b = exact_ball(second, cfg.other_root, cfg.ball_radius);
  const auto map = ball_isometry(a, b, IsometryOptions{cfg.labels});
  if (cfg.format == "json") {
    Json pairs = Json::array();
    if (map) {
      for (std::size_t i = 0; i < map->size(); ++i) pairs.push_back({a.members()[i], b.members()[(*map)[i]]});
    }
    out << Json{{"isometric", map.has_value()}, {"sizes", {a.size(), b.size()}}, {"map", pairs}}.dump() << "\n";
  } else {
    out << (map ? "isometric" : "not isometric") << " (" << a.size() << " and " << b.size() << " vertices)\n";
  }
  return map ? kOk : kCounterexample;
}

int cmd_locally(const RunConfig& cfg, std::ostream& out) {
  const HostGraph host = host_of(cfg, cfg.graph_file);
  const unsigned r = cfg.ball_radius;
  // Reference balls of the building at the root and at one vertex per type.
  const BuildingBall ref = generate_ball(params_of(cfg), 2 * r + 1, BallOptions{cfg.vertex_cap});
  std::vector<RootedBall> reference{extract_rooted_ball(ref.graph(), ref.root(), r)};
  std::set<int> seen{ref.type(ref.root())};
  for (VertexId v : ref.graph().neighbors(ref.root())) {
    if (seen.insert(ref.type(v)).second) reference.push_back(extract_rooted_ball(ref.graph(), v, r));
  }
  const LocallyReport report = is_r_locally(host.graph, reference, r, host.horizon ? &*host.horizon : nullptr,
                                            IsometryOptions{cfg.labels});
  if (cfg.format == "json") {
    out << Json{{"passed", report.passed}, {"failed", report.failed}, {"inexact", report.inexact}}.dump() << "\n";
  } else {
    out << report.passed.size() << " passed, " << report.failed.size() << " failed, " << report.inexact.size()
        << " skipped (inexact metric)\n";
    if (!report.failed.empty()) out << "failed: " << join(report.failed) << "\n";
  }
  return report.ok() ? kOk : kCounterexample;
}

int cmd_cover(const RunConfig& cfg, std::ostream& out) {
  const Graph g = read_graph_file(cfg.graph_file);
  const Graph h = read_graph_file(cfg.target_file);
  std::ifstream map_in(cfg.map_file);
  if (!map_in) throw Error(ErrorKind::InvalidInput, "cannot open " + cfg.map_file);
  const VertexMap f = read_vertex_map(map_in, g.vertex_count());
  std::vector<bool> boundary(g.vertex_count(), false);
  if (!cfg.boundary_file.empty()) {
    for (VertexId v : read_ids(cfg.boundary_file)) {
      if (v >= g.vertex_count()) throw Error(ErrorKind::InvalidInput, "boundary vertex out of range");
      boundary[v] = true;
    }
  }
  const CoveringReport report = is_covering(f, g, h, boundary);
  if (cfg.format == "json") {
    Json violations = Json::array();
    for (const auto& v : report.violations) {
      violations.push_back({{"vertex", v.vertex}, {"kind", std::string(to_string(v.kind))}, {"detail", v.detail}});
    }
    out << Json{{"covering", report.ok()}, {"violations", violations}}.dump() << "\n";
  } else {
    out << (report.ok() ? "covering" : "not a covering") << "\n";
    for (const auto& v : report.violations) {
      out << "  vertex " << v.vertex << ": " << to_string(v.kind) << " (" << v.detail << ")\n";
    }
  }
  return report.ok() ? kOk : kCounterexample;
}

int cmd_pk(const RunConfig& cfg, std::ostream& out) {
  const Graph g = cfg.graph_file.empty() ? ball_of(cfg).graph() : read_graph_file(cfg.graph_file);
  const TwoComplex complex = pk_complex(g, cfg.k);
  const SimpleConnectivity result = bounded_simply_connected(complex, cfg.coset_cap);
  if (cfg.format == "json") {
    out << pk_to_json(complex, result);
  } else {
    out << complex.cells.size() << " cells, H1 rank " << result.homology.h1_rank << ", torsion [";
    for (std::size_t i = 0; i < result.homology.h1_torsion.size(); ++i) {
      out << (i ? ", " : "") << to_string(result.homology.h1_torsion[i]);
    }
    out << "], simply connected: " << to_string(result.verdict) << "\n";
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const BuildingBall ball = ball_of(cfg);
  conformance::SuiteOptions options;
  options.seed = cfg.seed;
  const auto results = conformance::run_suite(ball, options);
  out << "building n=" << cfg.n << " p=" << cfg.p << " radius=" << cfg.radius << " seed=" << cfg.seed << ": "
      << ball.size() << " vertices\n";
  std::size_t failed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS  " : "FAIL  ") << r.name << "  [" << r.detail << "]\n";
    failed += r.passed ? 0 : 1;
  }
  out << results.size() - failed << "/" << results.size() << " checks passed\n";
  return failed == 0 ? kOk : kCounterexample;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out) {
  if (cfg.command == "generate") return cmd_generate(cfg, out);
  if (cfg.command == "apartment") return cmd_apartment(cfg, out);
  if (cfg.command == "histogram") return cmd_histogram(cfg, out);
  if (cfg.command == "print") return cmd_print(cfg, out);
  if (cfg.command == "source") return cmd_source(cfg, out);
  if (cfg.command == "replica") return cmd_replica(cfg, out);
  if (cfg.command == "isocheck") return cmd_isocheck(cfg, out);
  if (cfg.command == "locally") return cmd_locally(cfg, out);
  if (cfg.command == "cover") return cmd_cover(cfg, out);
  if (cfg.command == "pk") return cmd_pk(cfg, out);
  if (cfg.command == "verify-paper") return cmd_verify(cfg, out);
  throw Error(ErrorKind::InvalidInput, "unknown command " + cfg.command);
}

}  // namespace btlab::cli
