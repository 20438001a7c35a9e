#include "doctest.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "ksds/conjecture.hpp"
#include "ksds/errors.hpp"
#include "ksds/io.hpp"
#include "ksds/universal.hpp"

using namespace ksds;

namespace {

  Dag permuted(Dag const& g, std::vector<Vertex> const& perm) {
    std::vector<Edge> edges;
    for (auto [i, j] : g.edges()) {
      edges.emplace_back(perm[i - 1], perm[j - 1]);
    }
    return Dag(g.n(), edges);
  }

  bool isomorphic(Dag const& a, Dag const& b) {
    if (a.n() != b.n() || a.edges().size() != b.edges().size()) {
      return false;
    }
    std::vector<Vertex> perm(a.n());
    std::iota(perm.begin(), perm.end(), 1);
    do {
      if (permuted(a, perm) == b) {
        return true;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  }

}  // namespace

TEST_CASE("catalog of small DAGs") {
  // Unlabelled DAGs on 1, 2, 3, 4, 5 vertices: 1, 2, 6, 31, 302.
  std::vector<std::size_t> cumulative{1, 3, 9, 40, 342};
  for (std::size_t k = 1; k <= 5; ++k) {
    CHECK(enumerate_dags(k).items.size() == cumulative[k - 1]);
  }
  auto a = enumerate_dags(4), b = enumerate_dags_by_orientation(4);
  CHECK(a.items == b.items);
  for (std::size_t x = 0; x < a.items.size(); ++x) {
    for (std::size_t y = x + 1; y < a.items.size(); ++y) {
      CHECK_FALSE(isomorphic(a.items[x], a.items[y]));
    }
  }
  CHECK_THROWS_AS(enumerate_dags(6), GuardExceeded);
}

TEST_CASE("catalog keys are isomorphism invariants") {
  std::mt19937_64 rng(5);
  for (auto const& g : enumerate_dags(4).items) {
    std::vector<Vertex> perm(g.n());
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    Dag h = permuted(g, perm);
    CHECK(dag_key(h) == dag_key(g));
    CHECK(canonical_dag(h) == g);
    CHECK(isomorphic(canonical_dag(h), h));
  }
  CHECK(dag_key(Dag(2, {{1, 2}})) != dag_key(Dag::edgeless(2)));
}

TEST_CASE("join-based systems specialise to the complete graph") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto u   = build_universal(n);
    auto sys = build_universal_dag(Dag::complete(n));
    for (Vertex v = 1; v <= n; ++v) {
      auto lhs = u.system().state_names(v), rhs = sys.state_names(v);
      CHECK(std::set<std::string>(lhs.begin(), lhs.end())
            == std::set<std::string>(rhs.begin(), rhs.end()));
    }
    DynamicsMonoid d1(u.system()), d2(sys);
    REQUIRE(d1.size() == d2.size());
    std::map<std::size_t, std::size_t> across;
    for (std::size_t id = 0; id < d1.size(); ++id) {
      across.emplace(id, d2.id_of(d1.witness(id)));
    }
    for (std::size_t id = 0; id < d2.size(); ++id) {
      auto it = across.find(d1.id_of(d2.witness(id)));
      REQUIRE(it != across.end());
      CHECK(it->second == id);
    }
  }
}

TEST_CASE("join-based systems on other graphs") {
  auto sys = build_universal_dag(Dag(2, {}));
  CHECK(sys.state_names(1) == std::vector<std::string>{"-", "a"});
  CHECK(DynamicsMonoid(sys).size() == 4);
  auto path = build_universal_dag(Dag(3, {{1, 2}, {2, 3}}));
  CHECK(check_hk_relations(path).all_passed());
}

TEST_CASE("product systems") {
  Dag  g = Dag(2, {{1, 2}});
  auto a = random_update_system(g, 2, 1), b = random_update_system(g, 3, 2);
  auto p = product_system(a, b);
  for (Vertex v = 1; v <= 2; ++v) {
    CHECK(p.num_states(v) == a.num_states(v) * b.num_states(v));
    CHECK(p.state_name(v, 0) == a.state_name(v, 0) + "|" + b.state_name(v, 0));
  }
  std::size_t dp = DynamicsMonoid(p).size();
  CHECK(dp >= DynamicsMonoid(a).size());
  CHECK(dp >= DynamicsMonoid(b).size());
  CHECK_THROWS_AS(product_system(a, random_update_system(Dag(2, {}), 2, 1)), InvalidArgument);
}

TEST_CASE("sweep over small graphs") {
  SweepOptions options;
  options.max_vertices = 3;
  auto report          = conjecture_sweep(options);
  CHECK(report.rows.size() == 9);
  CHECK(report.matches() == 9);
  CHECK(report.consistent());
  for (auto const& r : report.rows) {
    CHECK(r.quotient_ok);
    CHECK_FALSE(r.search_best.has_value());
  }
  auto again = conjecture_sweep(options);
  CHECK(sweep_report(report, false) == sweep_report(again, false));
}

TEST_CASE("graphs where the join-based system falls short") {
  // Found by the four-vertex sweep; kept as a regression pin.
  SweepOptions options;
  options.search_on_mismatch = true;
  Dag  g(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}});
  auto row = sweep_graph(g, options);
  CHECK(row.hk_size == 56);
  CHECK(row.dynamics_size == 55);
  CHECK(row.quotient_ok);
  CHECK_FALSE(row.match);
  REQUIRE(row.search_best.has_value());
  CHECK(*row.search_best >= row.dynamics_size);
  CHECK(*row.search_best <= row.hk_size);
}

TEST_CASE("sweep guards become skipped rows") {
  SweepOptions options;
  options.limits.max_elements = 3;
  auto row = sweep_graph(Dag(2, {{1, 2}}), options);
  CHECK(row.skipped);
  CHECK_FALSE(row.skip_reason.empty());
  SweepReport report{{row}};
  CHECK(report.skips() == 1);
  CHECK(report.consistent());
}
