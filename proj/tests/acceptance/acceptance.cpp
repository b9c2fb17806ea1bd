// Acceptance suite: one line per criterion, PASS only when the check holds
// and finishes inside its time limit.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "btlab/apartment.hpp"
#include "btlab/building.hpp"
#include "btlab/covering.hpp"
#include "btlab/error.hpp"
#include "btlab/group.hpp"
#include "btlab/isometry.hpp"
#include "btlab/prints.hpp"
#include "btlab/replica.hpp"
#include "btlab/simplicial.hpp"

using namespace btlab;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> body;
};

std::vector<VertexId> interior_of(const BuildingBall& b) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < b.size(); ++v) {
    if (b.is_interior(v)) out.push_back(v);
  }
  return out;
}

Graph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < n; ++i) edges.emplace_back(i, static_cast<VertexId>((i + 1) % n));
  return Graph::from_edges(n, edges);
}

Outcome tree_case() {
  std::ostringstream detail;
  bool ok = true;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
    const BuildingBall b = generate_ball(BuildingParams::make(p, 2), 4);
    const bool tree = connected_components(b.graph()) == 1 && b.graph().edge_count() + 1 == b.size();
    std::size_t bad_degree = 0;
    std::size_t bad_type = 0;
    for (VertexId v = 0; v < b.size(); ++v) {
      if (b.is_interior(v) && b.graph().degree(v) != p + 1) ++bad_degree;
      if (b.type(v) != static_cast<int>(b.dist_root(v) % 2)) ++bad_type;
    }
    ok &= tree && bad_degree == 0 && bad_type == 0;
    detail << "p=" << p << ": " << b.size() << " vertices, tree=" << tree << ", degree mismatches " << bad_degree
           << ", parity mismatches " << bad_type << "; ";
  }
  return {ok, detail.str()};
}

Outcome fourteen_seven() {
  const BuildingBall b = generate_ball(BuildingParams::make(2, 3), 2);
  std::size_t interior = 0;
  std::size_t bad_degree = 0;
  std::size_t bad_seven = 0;
  for (VertexId v : interior_of(b)) {
    ++interior;
    if (b.graph().degree(v) != 14) ++bad_degree;
    if (b.type(v) == 0) continue;
    std::size_t type0 = 0;
    for (VertexId w : b.graph().neighbors(v)) type0 += b.type(w) == 0 ? 1 : 0;
    if (type0 != 7) ++bad_seven;
  }
  return {bad_degree == 0 && bad_seven == 0,
          std::to_string(interior) + " interior vertices, degree-14 mismatches " + std::to_string(bad_degree) +
              ", seven-type-0 mismatches " + std::to_string(bad_seven)};
}

Outcome type_shift() {
  std::ostringstream detail;
  bool ok = true;
  for (unsigned n : {2U, 3U, 4U}) {
    const ApartmentSlice s = apartment_slice(BuildingParams::make(2, n), 3);
    std::size_t bad = 0;
    for (VertexId a = 0; a < s.size(); ++a) {
      if (s.graph().label(a) != tuple_type(s.tuples()[a])) ++bad;
      for (VertexId b = 0; b < s.size(); ++b) {
        if (a == b) continue;
        const unsigned j = subset_increment(s.tuples()[a], s.tuples()[b]);
        if ((j != 0) != s.graph().adjacent(a, b)) ++bad;
        if (j != 0 && s.graph().label(b) != static_cast<int>((s.graph().label(a) + j) % n)) ++bad;
      }
    }
    ok &= bad == 0;
    detail << "n=" << n << ": " << s.size() << " vertices, " << s.graph().edge_count() << " edges, " << bad
           << " mismatches; ";
  }
  return {ok, detail.str()};
}

Outcome print_injectivity() {
  std::ostringstream detail;
  bool ok = true;
  for (auto [n, p, rho] : {std::tuple{2U, 2ULL, 4U}, std::tuple{2U, 3ULL, 3U}, std::tuple{3U, 2ULL, 2U},
                           std::tuple{3U, 3ULL, 2U}, std::tuple{4U, 2ULL, 2U}}) {
    const BuildingBall b = generate_ball(BuildingParams::make(p, n), rho);
    const auto interior = interior_of(b);
    std::vector<Print> prints;
    for (VertexId v : interior) prints.push_back(print_of(b, v));
    std::size_t collisions = 0;
    for (std::size_t i = 0; i < prints.size(); ++i) {
      for (std::size_t j = i + 1; j < prints.size(); ++j) collisions += prints[i] == prints[j] ? 1 : 0;
    }
    std::size_t bad_source = 0;
    for (std::size_t i = 0; i < interior.size(); ++i) bad_source += source_of(b, prints[i].members) != interior[i];
    ok &= collisions == 0 && bad_source == 0;
    detail << "(" << n << "," << p << "," << rho << "): " << interior.size() << " prints, " << collisions
           << " collisions, " << bad_source << " round-trip failures; ";
  }
  return {ok, detail.str()};
}

Outcome equivariance() {
  std::ostringstream detail;
  bool ok = true;
  std::mt19937_64 rng(20240601);
  for (auto [n, p] : {std::pair{2U, 2ULL}, std::pair{3U, 2ULL}, std::pair{3U, 3ULL}}) {
    const auto params = BuildingParams::make(p, n);
    const BuildingBall b = generate_ball(params, 2);
    const auto interior = interior_of(b);
    std::size_t failures = 0;
    for (int s = 0; s < 50; ++s) {
      const GroupElement g = random_sl_word(params, 1 + rng() % 10, rng);
      const VertexId x[] = {interior[rng() % interior.size()]};
      failures += equivariance_check(b, g, x).failures.size();
    }
    ok &= failures == 0;
    detail << "(" << n << "," << p << "): 50 pairs, " << failures << " failures; ";
  }
  return {ok, detail.str()};
}

Outcome replica_fidelity() {
  std::ostringstream detail;
  bool ok = true;
  for (auto [n, rho, kept] : {std::tuple{2U, 5U, std::set<int>{0}}, std::tuple{3U, 3U, std::set<int>{0}},
                              std::tuple{4U, 3U, std::set<int>{0, 2}}}) {
    const BuildingBall b = generate_ball(BuildingParams::make(2, n), rho);
    const ReplicaGraph r = build_replica(b, kept);
    const ReplicaVerification v = verify_replica(b, r);
    ok &= v.ok && v.print_member_distance_one;
    detail << "(n=" << n << ",rho=" << rho << "): " << r.kept_ids.size() << " kept + " << r.prints.size()
           << " prints, certified radius " << v.certified_radius << " (" << v.certified_nodes << " nodes, "
           << v.pairs_checked << " pairs), "
           << (v.counterexample ? "counterexample found" : "no counterexample");
    if (!v.ok) detail << " [" << v.failure << "]";
    detail << "; ";
  }
  return {ok, detail.str()};
}

Outcome transitivity() {
  const BuildingBall b = generate_ball(BuildingParams::make(2, 3), 3);
  const RootedBall root = extract_rooted_ball(b.graph(), b.root(), 1);
  std::size_t found = 0;
  const auto interior = interior_of(b);
  for (VertexId v : interior) found += ball_isometry(root, extract_rooted_ball(b.graph(), v, 1)).has_value();
  return {found == interior.size(), std::to_string(found) + "/" + std::to_string(interior.size()) + " isometries"};
}

Outcome simple_connectedness() {
  std::ostringstream detail;
  bool ok = true;
  for (unsigned n : {3U, 4U}) {
    const BuildingBall b = generate_ball(BuildingParams::make(2, n), 2);
    const TwoComplex c = pk_complex(b.graph(), 3);
    const SimpleConnectivity sc = bounded_simply_connected(c);
    const bool h1_zero = sc.homology.h1_rank == 0 && sc.homology.h1_torsion.empty();
    ok &= h1_zero && sc.verdict == Verdict::Yes;
    detail << "n=" << n << ": " << c.cells.size() << " triangles, H1 " << (h1_zero ? "0" : "nonzero") << ", "
           << to_string(sc.verdict) << "; ";
  }
  const SimpleConnectivity hexagon = bounded_simply_connected(pk_complex(cycle(6), 3));
  ok &= hexagon.verdict == Verdict::No;
  detail << "6-cycle: " << to_string(hexagon.verdict);
  return {ok, detail.str()};
}

Outcome covering_sanity() {
  bool ok = true;
  std::ostringstream detail;
  const BuildingBall b = generate_ball(BuildingParams::make(2, 3), 2);
  VertexMap id;
  for (VertexId v = 0; v < b.size(); ++v) id.image.push_back(v);
  const bool identity = is_covering(id, b.graph(), b.graph()).ok();

  std::vector<Edge> path_edges;
  for (VertexId i = 0; i < 6; ++i) path_edges.emplace_back(i, i + 1);
  const Graph path = Graph::from_edges(7, path_edges);
  VertexMap wrap;
  for (VertexId v = 0; v < 7; ++v) wrap.image.push_back(v % 3);
  std::vector<bool> ends(7, false);
  ends[0] = ends[6] = true;
  const bool wrapped = is_covering(wrap, path, cycle(3), ends).ok();

  const Graph star = Graph::from_edges(3, {{0, 1}, {0, 2}});
  const CoveringReport collapsed = is_covering(VertexMap{{0, 1, 1}}, star, Graph::from_edges(2, {{0, 1}}));
  const bool rejected = !collapsed.ok() && collapsed.violations.front().vertex == 0 &&
                        collapsed.violations.front().kind == CoveringViolationKind::NotLocallyInjective;
  ok = identity && wrapped && rejected;
  detail << "identity " << (identity ? "accepted" : "rejected") << ", wrap " << (wrapped ? "accepted" : "rejected")
         << ", collapse " << (rejected ? "rejected at vertex 0" : "not rejected at vertex 0");
  return {ok, detail.str()};
}

std::string run_cli(const std::string& args, int& status) {
  const std::string cmd = std::string(BTLAB_CLI_PATH) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  if (pipe == nullptr) {
    status = -1;
    return out;
  }
  std::array<char, 1 << 14> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int raw = pclose(pipe);
  status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return out;
}

Outcome determinism() {
  std::ostringstream detail;
  bool ok = true;
  for (const std::string args : {"generate --n 3 --p 2 --radius 2 --format json",
                                 "generate --n 3 --p 3 --radius 2 --format dot",
                                 "verify-paper --n 2 --p 2 --radius 4 --seed 7",
                                 "verify-paper --n 3 --p 2 --radius 3 --seed 7"}) {
    int s1 = 0;
    int s2 = 0;
    const std::string a = run_cli(args, s1);
    const std::string b = run_cli(args, s2);
    const bool same = s1 == 0 && s2 == 0 && !a.empty() && a == b;
    ok &= same;
    detail << "'" << args << "': " << a.size() << " bytes " << (same ? "identical" : "DIFFER or failed") << "; ";
  }
  return {ok, detail.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "tree case: n=2 balls are (p+1)-regular trees with alternating types", 1.0, tree_case},
      {2, "n=3 p=2: interior degree 14, seven type-0 neighbours for types 1 and 2", 5.0, fourteen_seven},
      {3, "apartment type-shift law for n=2,3,4", 1.0, type_shift},
      {4, "print injectivity and source round trip", 300.0, print_injectivity},
      {5, "print equivariance under seeded SL_n(Z) words", 30.0, equivariance},
      {6, "replica fidelity on the certified sub-ball", 300.0, replica_fidelity},
      {7, "vertex-transitivity witness at radius 1", 60.0, transitivity},
      {8, "triangle complexes have H1 = 0 and are simply connected", 120.0, simple_connectedness},
      {9, "covering checker sanity", 1.0, covering_sanity},
      {10, "byte-identical CLI output across runs", 120.0, determinism},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.body();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = elapsed <= c.limit_seconds;
    const bool pass = outcome.ok && in_time;
    failed += pass ? 0 : 1;
    std::printf("%s  [%2d] %s  (%.3fs, limit %.0fs%s)\n      %s\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                elapsed, c.limit_seconds, in_time ? "" : ", OVER LIMIT", outcome.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
