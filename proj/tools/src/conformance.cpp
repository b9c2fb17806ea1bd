#include "conformance.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "btlab/apartment.hpp"
#include "btlab/error.hpp"
#include "btlab/group.hpp"
#include "btlab/isometry.hpp"
#include "btlab/prints.hpp"
#include "btlab/replica.hpp"
#include "btlab/simplicial.hpp"

namespace btlab::conformance {
namespace {

std::vector<VertexId> interior_vertices(const BuildingBall& ball) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < ball.size(); ++v) {
    if (ball.is_interior(v)) out.push_back(v);
  }
  return out;
}

CheckResult check(std::string name, const std::function<std::string(bool&)>& body) {
  CheckResult result{std::move(name), false, {}};
  try {
    result.detail = body(result.passed);
  } catch (const Error& e) {
    result.passed = false;
    result.detail = e.what();
  }
  return result;
}

std::string str(std::size_t v) { return std::to_string(v); }

}  // namespace

std::vector<CheckResult> run_suite(const BuildingBall& ball, const SuiteOptions& options) {
  const BuildingParams& params = ball.params();
  const unsigned n = params.n();
  const auto interior = interior_vertices(ball);
  std::vector<CheckResult> results;

  results.push_back(check("interior vertices have full building degree", [&](bool& ok) {
    std::size_t bad = 0;
    for (VertexId v : interior) bad += ball.graph().degree(v) != ball.full_degree() ? 1 : 0;
    ok = bad == 0;
    return str(interior.size()) + " interior vertices, degree " + str(ball.full_degree()) + ", " + str(bad) +
           " mismatches";
  }));

  if (n == 2) {
    results.push_back(check("n=2 ball is a tree with types alternating by layer", [&](bool& ok) {
      bool alternating = true;
      for (VertexId v = 0; v < ball.size(); ++v) alternating &= ball.type(v) == static_cast<int>(ball.dist_root(v) % 2);
      const bool tree = connected_components(ball.graph()) == 1 && ball.graph().edge_count() + 1 == ball.size();
      ok = tree && alternating;
      return str(ball.size()) + " vertices, " + str(ball.graph().edge_count()) + " edges";
    }));
  }

  results.push_back(check("neighbour type shift matches subspace dimension", [&](bool& ok) {
    const NeighborGenerator gen(params);
    std::size_t checked = 0;
    std::size_t bad = 0;
    for (VertexId v : interior) {
      const int t = ball.type(v);
      for (const auto& [l, j] : gen.neighbors_with_dimension(ball.vertex(v))) {
        ++checked;
        bad += lattice_type(l) != static_cast<int>((t + n - j) % n) ? 1 : 0;
      }
    }
    ok = bad == 0;
    return str(checked) + " neighbour pairs, " + str(bad) + " mismatches";
  }));

  results.push_back(check("apartment types are exponent sums; adjacency is subset increment", [&](bool& ok) {
    const ApartmentSlice slice = apartment_slice(params, ball.radius());
    const auto& tuples = slice.tuples();
    std::size_t bad = 0;
    for (VertexId a = 0; a < slice.size(); ++a) {
      bad += slice.graph().label(a) != tuple_type(tuples[a]) ? 1 : 0;
      bad += slice.graph().label(a) != lattice_type(slice.classes()[a]) ? 1 : 0;
      for (VertexId b = 0; b < slice.size(); ++b) {
        if (a == b) continue;
        const unsigned j = subset_increment(tuples[a], tuples[b]);
        if ((j != 0) != slice.graph().adjacent(a, b)) ++bad;
        if (j != 0 && slice.graph().label(b) != static_cast<int>((slice.graph().label(a) + j) % n)) ++bad;
      }
    }
    ok = bad == 0;
    return str(slice.size()) + " apartment vertices, " + str(slice.graph().edge_count()) + " edges, " + str(bad) +
           " mismatches";
  }));

  std::vector<Print> prints;
  for (VertexId v : interior) prints.push_back(print_of(ball, v));

  results.push_back(check("print sizes follow the Gaussian binomial law", [&](bool& ok) {
    std::size_t bad = 0;
    for (std::size_t i = 0; i < interior.size(); ++i) {
      bad += prints[i].members.size() != expected_print_size(params, ball.type(interior[i])) ? 1 : 0;
    }
    ok = bad == 0;
    return str(interior.size()) + " prints, " + str(bad) + " mismatches";
  }));

  results.push_back(check("prints are injective on interior vertices", [&](bool& ok) {
    std::set<std::vector<VertexId>> distinct;
    for (const Print& p : prints) distinct.insert(p.members);
    ok = distinct.size() == prints.size();
    return str(prints.size()) + " prints, " + str(distinct.size()) + " distinct";
  }));

  results.push_back(check("source of each print recovers its vertex", [&](bool& ok) {
    std::size_t bad = 0;
    for (std::size_t i = 0; i < interior.size(); ++i) bad += source_of(ball, prints[i].members) != interior[i] ? 1 : 0;
    ok = bad == 0;
    return str(interior.size()) + " round trips, " + str(bad) + " failures";
  }));

  if (!interior.empty()) {
    results.push_back(check("prints are equivariant under random SL_n(Z) words", [&](bool& ok) {
      std::mt19937_64 rng(options.seed);
      std::size_t failures = 0;
      for (std::size_t s = 0; s < options.equivariance_samples; ++s) {
        const std::size_t length = 1 + rng() % 8;
        const GroupElement g = random_sl_word(params, length, rng);
        const VertexId x = interior[rng() % interior.size()];
        const VertexId sample[] = {x};
        failures += equivariance_check(ball, g, sample).failures.size();
      }
      ok = failures == 0;
      return str(options.equivariance_samples) + " samples, seed " + std::to_string(options.seed) + ", " +
             str(failures) + " failures";
    }));
  }

  if (ball.radius() >= 3) {
    results.push_back(check("replica with kept types {0} is faithful", [&](bool& ok) {
      const ReplicaVerification v = verify_replica(ball, std::set<int>{0});
      ok = v.ok;
      std::string detail = "certified radius " + std::to_string(v.certified_radius) + ", " + str(v.certified_nodes) +
                           " nodes, " + str(v.pairs_checked) + " pairs";
      if (!v.ok) detail += "; " + v.failure;
      return detail;
    }));
  }

  results.push_back(check("radius-1 balls are isometric to the root ball", [&](bool& ok) {
    const RootedBall root = extract_rooted_ball(ball.graph(), ball.root(), 1);
    const Horizon horizon = ball.horizon();
    std::size_t checked = 0;
    std::size_t bad = 0;
    for (VertexId v : interior) {
      const RootedBall other = extract_rooted_ball(ball.graph(), v, 1);
      if (!metric_is_exact(other, horizon)) continue;
      ++checked;
      bad += ball_isometry(root, other) ? 0 : 1;
    }
    ok = bad == 0 && checked == interior.size();
    return str(checked) + " balls, " + str(bad) + " failures";
  }));

  if (ball.size() <= options.pk_vertex_limit) {
    results.push_back(check("triangle complex is simply connected", [&](bool& ok) {
      const TwoComplex complex = pk_complex(ball.graph(), 3);
      const SimpleConnectivity sc = bounded_simply_connected(complex);
      ok = sc.verdict == Verdict::Yes && sc.homology.h1_rank == 0 && sc.homology.h1_torsion.empty();
      return str(complex.cells.size()) + " triangles, H1 rank " + str(sc.homology.h1_rank) + ", verdict " +
             std::string(to_string(sc.verdict));
    }));
  }
  return results;
}

}  // namespace btlab::conformance
