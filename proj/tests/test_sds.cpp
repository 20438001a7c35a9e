#include "doctest.h"

#include <deque>
#include <random>
#include <set>

#include "ksds/errors.hpp"
#include "ksds/kiselman.hpp"
#include "ksds/sds.hpp"
#include "oracles.hpp"

using namespace ksds;

namespace {

  // Two vertices i = 1 -> j = 2; S_i = {0,1,2}, S_j = {0,1};
  // f_i(s) = s + 1, f_j = 1.
  UpdateSystem a2_example() {
    return UpdateSystem(Dag(2, {{1, 2}}), {{"0", "1", "2"}, {"0", "1"}}, {{1, 2}, {1}});
  }

  SystemState at(std::size_t x, std::size_t y) {
    return SystemState{{x, y}};
  }

  // Breadth-first closure of {F_v} under composition on the left, over
  // whole maps computed by the oracle.
  std::size_t oracle_monoid_size(UpdateSystem const& sys, bool reversed) {
    using Map = std::vector<std::vector<std::size_t>>;
    std::set<Map>    seen{oracle::full_map(sys, Word())};
    std::deque<Word> todo{Word()};
    while (!todo.empty()) {
      Word x = todo.front();
      todo.pop_front();
      for (Letter k = 1; k <= sys.n(); ++k) {
        Letter a = reversed ? static_cast<Letter>(sys.n() + 1 - k) : k;
        Word   y = Word{a} + x;
        if (seen.insert(oracle::full_map(sys, y)).second) {
          todo.push_back(y);
        }
      }
    }
    return seen.size();
  }

  Dag random_dag(std::mt19937_64& rng, std::size_t n) {
    std::vector<Vertex> perm(n);
    for (std::size_t i = 0; i < n; ++i) {
      perm[i] = i + 1;
    }
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (rng() % 2) {
          edges.emplace_back(perm[i], perm[j]);
        }
      }
    }
    return Dag(n, edges);
  }

}  // namespace

TEST_CASE("graphs") {
  Dag g(3, {{2, 3}, {1, 2}});
  CHECK(g.edges() == std::vector<Edge>{{1, 2}, {2, 3}});
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(2, 1));
  CHECK(g.adjacent(2, 1));
  CHECK_FALSE(g.adjacent(1, 3));
  CHECK(g.out_neighbors(2) == std::vector<Vertex>{3});
  CHECK(Dag(3, {{3, 1}, {2, 1}}).topological_order() == std::vector<Vertex>{2, 3, 1});
  CHECK(Dag::complete(3).edges().size() == 3);
  CHECK(Dag::edgeless(3).edges().empty());
  CHECK_THROWS_AS(Dag(2, {{1, 1}}), InvalidArgument);
  CHECK_THROWS_AS(Dag(2, {{1, 2}, {1, 2}}), InvalidArgument);
  CHECK_THROWS_AS(Dag(3, {{1, 2}, {2, 3}, {3, 1}}), InvalidArgument);
  CHECK_THROWS_AS(Dag(2, {{1, 3}}), InvalidArgument);
  CHECK_THROWS_AS(g.out_neighbors(4), InvalidArgument);
}

TEST_CASE("update system validation") {
  Dag g(2, {{1, 2}});
  CHECK_THROWS_AS(UpdateSystem(g, {{"0"}}, {{0}}), InvalidArgument);
  CHECK_THROWS_AS(UpdateSystem(g, {{"0"}, {}}, {{0}, {}}), InvalidArgument);
  CHECK_THROWS_AS(UpdateSystem(g, {{"0"}, {"0", "1"}}, {{0}, {0}}), InvalidArgument);
  CHECK_THROWS_AS(UpdateSystem(g, {{"0"}, {"0"}}, {{0}, {1}}), InvalidArgument);
  auto sys = a2_example();
  CHECK(sys.state_index(1, "2") == 2);
  CHECK_THROWS_AS(sys.state_index(1, "7"), InvalidArgument);
  CHECK_THROWS_AS(sys.validate(SystemState{{0}}), InvalidArgument);
  CHECK_THROWS_AS(sys.validate(at(3, 0)), InvalidArgument);
  CHECK_THROWS_AS(evolve(sys, Word{3}, at(0, 0)), InvalidArgument);
  CHECK(sys.state_space_size(100) == 6);
  CHECK_THROWS_AS(sys.state_space_size(5), GuardExceeded);
  for (std::size_t k = 0; k < 6; ++k) {
    CHECK(sys.encode(sys.decode(k)) == k);
  }
}

TEST_CASE("worked example on two vertices") {
  auto sys = a2_example();
  CHECK(evolve(sys, Word(), at(0, 0)) == at(0, 0));
  CHECK(evolve(sys, Word{1}, at(0, 0)) == at(1, 0));
  CHECK(evolve(sys, Word{2}, at(0, 0)) == at(0, 1));
  CHECK(evolve(sys, Word{1, 2}, at(0, 0)) == at(2, 1));
  CHECK(evolve(sys, Word{2, 1}, at(0, 0)) == at(1, 1));
  CHECK(sys.render(at(2, 1)) == "(2, 1)");

  DynamicsMonoid d(sys);
  CHECK(d.size() == 5);
  CHECK(d.id_of(Word{1, 2, 1}) == d.id_of(Word{1, 2}));
  CHECK(d.id_of(Word{2, 1, 2}) == d.id_of(Word{1, 2}));
  CHECK(d.id_of(Word{1, 1}) == d.id_of(Word{1}));
  CHECK(d.id_of(Word{2, 2}) == d.id_of(Word{2}));
  std::set<std::size_t> ids;
  for (Word x : {Word(), Word{1}, Word{2}, Word{1, 2}, Word{2, 1}}) {
    ids.insert(d.id_of(x));
  }
  CHECK(ids.size() == 5);
  CHECK(d.witness(0).empty());
  CHECK(check_hk_relations(sys).all_passed());
}

TEST_CASE("single vertex systems") {
  UpdateSystem one(Dag(1, {}), {{"0", "1"}}, {{1}});
  CHECK(DynamicsMonoid(one).size() == 2);
  UpdateSystem trivial(Dag(1, {}), {{"0"}}, {{0}});
  CHECK(DynamicsMonoid(trivial).size() == 1);
}

TEST_CASE("maps and composition") {
  auto sys = a2_example();
  auto f1  = local_map(sys, 1), f2 = local_map(sys, 2);
  auto id  = identity_map(6);
  CHECK(compose(f1, id) == f1);
  CHECK(compose(id, f2) == f2);
  CHECK(compose(f1, f1) == f1);
  DynamicsMonoid d(sys);
  CHECK(d.map(d.id_of(Word{1, 2})) == compose(f1, f2));
  CHECK(d.map(d.left(1, d.id_of(Word{2}))) == compose(f1, f2));
  CHECK(DynamicsMapHash()(f1) == DynamicsMapHash()(local_map(sys, 1)));
}

TEST_CASE("random systems") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 40; ++t) {
    std::size_t n   = 1 + rng() % 4;
    Dag         g   = random_dag(rng, n);
    auto        sys = random_update_system(g, 3, rng());
    for (Vertex v = 1; v <= n; ++v) {
      CHECK(sys.num_states(v) >= 1);
      CHECK(sys.num_states(v) <= 3);
    }
    auto states = oracle::all_states(sys);

    // F is a homomorphism and agrees with the oracle.
    for (int k = 0; k < 20; ++k) {
      Word u = oracle::random_word(rng, 1, n, 5), v = oracle::random_word(rng, 1, n, 5);
      auto s = states[rng() % states.size()];
      CHECK(evolve(sys, u + v, SystemState{s}) == evolve(sys, u, evolve(sys, v, SystemState{s})));
      CHECK(evolve(sys, u + v, SystemState{s}).values == oracle::evolve(sys, u + v, s));
    }

    DynamicsMonoid d(sys);
    CHECK(d.size() == oracle_monoid_size(sys, false));
    CHECK(d.size() == oracle_monoid_size(sys, true));
    for (std::size_t id = 0; id < d.size(); ++id) {
      CHECK(d.id_of(d.witness(id)) == id);
    }
    CHECK(check_hk_relations(sys).all_passed());
  }
}

TEST_CASE("dynamics on the complete graph factor through canonical forms") {
  std::mt19937_64 rng(9);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (int t = 0; t < 5; ++t) {
      auto           sys = random_update_system(Dag::complete(n), 3, rng());
      DynamicsMonoid d(sys);
      CHECK(d.size() <= KnMonoid(n).size());
      for (int k = 0; k < 200; ++k) {
        Word x = oracle::random_word(rng, 1, n, 10);
        CHECK(d.id_of(x) == d.id_of(canonical_form(x)));
      }
    }
  }
}

TEST_CASE("random system generation") {
  Dag  g = Dag::complete(3);
  auto a = random_update_system(g, 3, 42), b = random_update_system(g, 3, 42);
  for (Vertex v = 1; v <= 3; ++v) {
    CHECK(a.state_names(v) == b.state_names(v));
    CHECK(a.table(v) == b.table(v));
  }
  auto flat = random_update_system(g, 1, 42);
  CHECK(DynamicsMonoid(flat).size() == 1);
  bool differs = false;
  for (std::uint64_t seed = 0; seed < 5 && !differs; ++seed) {
    auto c = random_update_system(g, 3, 100 + seed);
    for (Vertex v = 1; v <= 3; ++v) {
      differs |= c.table(v) != a.table(v) || c.num_states(v) != a.num_states(v);
    }
  }
  CHECK(differs);
  CHECK_THROWS_AS(random_update_system(g, 0, 1), InvalidArgument);
}

TEST_CASE("relation report layout") {
  // Edges 1->2 and 2->3 on four vertices leave the non-adjacent pairs
  // 1-3, 1-4, 2-4 and 3-4.
  auto sys    = random_update_system(Dag(4, {{1, 2}, {2, 3}}), 3, 1);
  auto report = check_hk_relations(sys);
  std::size_t counts[3] = {0, 0, 0};
  for (auto const& c : report.checks) {
    ++counts[static_cast<int>(c.kind)];
    if (c.kind == RelationKind::commute) {
      CHECK(c.i < c.j);
      CHECK_FALSE(sys.graph().adjacent(c.i, c.j));
    }
    if (c.kind == RelationKind::edge) {
      CHECK(sys.graph().has_edge(c.i, c.j));
    }
  }
  CHECK(counts[0] == 4);
  CHECK(counts[1] == 2);
  CHECK(counts[2] == 4);
  CHECK(report.failures() == 0);
  CHECK(to_string(RelationKind::commute) == "commute");
}

TEST_CASE("guards") {
  auto   sys = random_update_system(Dag::complete(4), 3, 3);
  Limits tight;
  tight.max_elements = 2;
  CHECK_THROWS_AS(DynamicsMonoid(sys, tight), GuardExceeded);
  Limits few_states;
  few_states.max_states = 2;
  CHECK_THROWS_AS(DynamicsMonoid(sys, few_states), GuardExceeded);
}
