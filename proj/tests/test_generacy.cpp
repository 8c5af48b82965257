#include <chrono>
#include <random>
#include <thread>

#include "doctest.h"
#include "oracle.hpp"
#include "zgen/generacy.hpp"

using namespace zgen;

namespace {

Outcome general(const NatVec& h, Mode mode = Mode::Antichain) {
  EngineOptions o;
  o.mode = mode;
  return decide_general(h, o).verdict.outcome;
}

Outcome constant(Entry c, std::size_t n, Mode mode = Mode::Antichain) {
  EngineOptions o;
  o.mode = mode;
  return decide_const(c, n, o).verdict.outcome;
}

}  // namespace

TEST_CASE("one general step from (2,3)") {
  ReachState s(NatVec{2, 3}, Mode::Full);
  CHECK(s.pool(0) == std::vector<NatVec>{NatVec{1, 0}});
  step_general(s);
  CHECK(s.stage() == 1);
  CHECK(s.fresh(0) == std::vector<NatVec>{NatVec{0, 1}});
  CHECK(s.fresh(1) == std::vector<NatVec>{NatVec{1, 0}});
  step_general(s);
  CHECK(s.zero_index().has_value());
}

TEST_CASE("all-ones bound is an immediate fixpoint") {
  ReachState s(NatVec{1, 1, 1}, Mode::Full);
  step_general(s);
  CHECK_FALSE(s.changed());
  CHECK_FALSE(s.zero_index().has_value());
}

TEST_CASE("small verdicts") {
  CHECK(general(NatVec{2, 3}) == Outcome::Generating);
  CHECK(general(NatVec{2, 2}) == Outcome::NotGenerating);
  CHECK(general(NatVec{2, 3, 7}) == Outcome::Generating);
  CHECK(general(NatVec{2, 3, 6}) == Outcome::NotGenerating);
  CHECK(decide(NatVec{1}).outcome == Outcome::NotGenerating);
  CHECK(decide(NatVec{2}).outcome == Outcome::Generating);
  CHECK(decide(NatVec{0, 5}).outcome == Outcome::NotGenerating);
  CHECK(decide(NatVec{0, 0, 0}).outcome == Outcome::NotGenerating);
  CHECK(constant(1, 3) == Outcome::NotGenerating);
  CHECK(constant(3, 2) == Outcome::Generating);
  CHECK(constant(3, 3) == Outcome::NotGenerating);
  CHECK(constant(4, 3) == Outcome::Generating);
  CHECK(constant(5, 4) == Outcome::NotGenerating);
  CHECK(constant(6, 4) == Outcome::Generating);
}

TEST_CASE("constant run, first stage is the orbit of (0,1,1,1)") {
  ConstReach r(5, 4, Mode::Full);
  step_const(r);
  auto m = r.members();
  std::sort(m.begin(), m.end());
  CHECK(m == std::vector<NatVec>{{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}});
  ConstReach a(5, 4, Mode::Antichain);
  step_const(a);
  CHECK(a.members() == std::vector<NatVec>{{0, 1, 1, 1}});
}

TEST_CASE("pools stay inside the strict lower cone plus the seed") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + rng() % 2;
    NatVec h = oracle::random_vec(rng, n, 1, 5);
    ReachState s(h, Mode::Full);
    std::vector<std::vector<NatVec>> prev(n);
    while (s.changed() && !s.zero_index()) {
      for (std::size_t i = 0; i < n; ++i) {
        auto pool = s.pool(i);
        for (const auto& x : pool) CHECK((strictly_below(x, h) || x == unit_vector(n, i)));
        // Pools only grow.
        for (const auto& x : prev[i]) CHECK(std::find(pool.begin(), pool.end(), x) != pool.end());
        for (const auto& x : s.fresh(i)) CHECK(std::find(pool.begin(), pool.end(), x) != pool.end());
        prev[i] = pool;
      }
      step_general(s);
    }
    Entry cells = 1;
    for (Entry v : h) cells *= v;
    CHECK(s.stage() <= 1 + cells);
  }
}

TEST_CASE("engine agrees with the naive recursion") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 1 + rng() % 3;
    NatVec h = oracle::random_vec(rng, n, 1, 7);
    CAPTURE(to_string(h));
    const bool expect = oracle::generating(oracle::to_vec(h));
    CHECK((general(h, Mode::Full) == Outcome::Generating) == expect);
    CHECK((general(h, Mode::Antichain) == Outcome::Generating) == expect);
  }
  for (int t = 0; t < 25; ++t) {
    NatVec h = oracle::random_vec(rng, 4, 1, 5);
    CAPTURE(to_string(h));
    CHECK((general(h) == Outcome::Generating) == oracle::generating(oracle::to_vec(h)));
  }
}

TEST_CASE("budgets stop runs with a named resource") {
  EngineOptions o;
  o.budget.max_tuples = 10;
  auto d = decide_const(10, 5, o);
  CHECK(d.verdict.outcome == Outcome::BudgetExceeded);
  CHECK(d.verdict.resource == "tuples");

  EngineOptions s;
  s.budget.max_stages = 1;
  auto g = decide_general(NatVec{2, 3, 7}, s);
  CHECK(g.verdict.outcome == Outcome::BudgetExceeded);
  CHECK(g.verdict.resource == "stages");

  EngineOptions w;
  w.budget.max_wall = std::chrono::milliseconds(0);
  auto r = decide_const(10, 5, w);
  CHECK(r.verdict.outcome == Outcome::BudgetExceeded);
  CHECK(r.verdict.resource == "wall");
}

TEST_CASE("modes parse") {
  CHECK(parse_mode("full") == Mode::Full);
  CHECK(parse_mode("antichain") == Mode::Antichain);
  CHECK(to_string(Mode::Full) == "full");
  CHECK_THROWS_AS(parse_mode("fast"), std::invalid_argument);
}

TEST_CASE("cache is keyed by canonical form and matches fresh runs") {
  DecisionCache cache;
  DecideOptions o;
  o.cache = &cache;
  CHECK(decide(NatVec{7, 3, 2}, o).outcome == Outcome::Generating);
  CHECK(cache.size() == 1);
  CHECK(cache.find(NatVec{2, 3, 7}).has_value());
  CHECK(cache.find(NatVec{3, 7, 2})->outcome == Outcome::Generating);

  std::mt19937_64 rng(8);
  std::vector<NatVec> vs;
  for (int t = 0; t < 100; ++t) vs.push_back(oracle::random_vec(rng, 1 + rng() % 4, 1, 5));
  for (const auto& v : vs) decide(v, o);
  for (const auto& v : vs) {
    auto cached = cache.find(v);
    REQUIRE(cached.has_value());
    CHECK(cached->outcome == decide(v).outcome);
  }
}

TEST_CASE("cache under concurrent use") {
  DecisionCache cache;
  std::vector<std::thread> ts;
  for (int k = 0; k < 4; ++k) {
    ts.emplace_back([&cache, k] {
      DecideOptions o;
      o.cache = &cache;
      for (Entry c = 1; c <= 4; ++c) decide(NatVec{c, c + k % 2, 3}, o);
    });
  }
  for (auto& t : ts) t.join();
  CHECK(cache.size() == 8);
  for (Entry c = 1; c <= 4; ++c) {
    CHECK(cache.find(NatVec{c, c, 3})->outcome == decide(NatVec{c, c, 3}).outcome);
  }
}

TEST_CASE("cross-check routes constants through both recursions") {
  DecideOptions o;
  o.cross_check = true;
  CHECK(decide(NatVec{3, 3, 3}, o).outcome == Outcome::NotGenerating);
  CHECK(decide(NatVec{4, 4, 4}, o).outcome == Outcome::Generating);
}

TEST_CASE("provenance records lead to zero") {
  EngineOptions o;
  o.provenance = true;
  auto d = decide_general(NatVec{2, 3}, o);
  REQUIRE(d.state->zero_derivation().has_value());
  const auto& recs = d.state->derivations();
  const auto& z = recs[*d.state->zero_derivation()];
  CHECK(z.point.is_zero());
  NatVec sum(2);
  for (const auto& p : z.part_vectors) sum += p;
  CHECK(sum == z.sum);

  auto c = decide_const(4, 3, o);
  REQUIRE(c.state->zero_derivation().has_value());
  CHECK(c.state->derivations()[*c.state->zero_derivation()].point.is_zero());
}
