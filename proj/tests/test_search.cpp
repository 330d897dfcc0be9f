#include "doctest.h"

#include <cmath>
#include <random>

#include "fewdist/errors.hpp"
#include "fewdist/geometry.hpp"
#include "fewdist/search.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace fewdist;
using testing_support::ints;
using testing_support::range;

TEST_CASE("family specs parse and print") {
  auto s = FamilySpec::parse("perturbed-ap:gap=10,radius=2,seed=9");
  CHECK(s.kind == FamilyKind::PerturbedAP);
  CHECK(s.gap == Scalar(10));
  CHECK(s.radius == 2);
  CHECK(s.seed == 9);
  CHECK(FamilySpec::parse(s.to_string()).to_string() == s.to_string());
  CHECK(FamilySpec::parse("gp:ratio=3/2").ratio == Scalar(3, 2));
  CHECK_THROWS_AS(FamilySpec::parse("triangle"), DomainError);
  CHECK_THROWS_AS(FamilySpec::parse("ap:bogus=1"), DomainError);
  CHECK_THROWS_AS(generate_family(FamilySpec::parse("gp:ratio=1"), 3), DomainError);
}

TEST_CASE("families") {
  CHECK(generate_family(FamilySpec::parse("ap"), 4) == range(0, 3));
  CHECK(generate_family(FamilySpec::parse("ap:gap=1/2"), 3) == testing_support::rats({"0", "1/2", "1"}));
  auto gp = generate_family(FamilySpec::parse("gp"), 4);
  CHECK(gp == ints({1, 2, 4, 8}));
  CHECK(difference_set(gp, gp).size() == 13);
  CHECK(generate_family(FamilySpec::parse("squares"), 4) == ints({0, 1, 4, 9}));

  auto spec = FamilySpec::parse("random:universe=50,seed=3");
  auto r1 = generate_family(spec, 20);
  CHECK(r1.size() == 20);
  CHECK(r1 == generate_family(spec, 20));
  CHECK(r1.min() >= Scalar(0));
  CHECK(r1.max() <= Scalar(50));
  CHECK_THROWS_AS(generate_family(FamilySpec::parse("random:universe=5"), 7), DomainError);

  auto p = generate_family(FamilySpec::parse("perturbed-ap:gap=10,radius=2,seed=1"), 30);
  CHECK(p.size() == 30);
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto off = p[i] - Scalar(10 * static_cast<std::int64_t>(i));
    CHECK(off >= Scalar(-2));
    CHECK(off <= Scalar(2));
  }
}

TEST_CASE("objectives") {
  CHECK(objective_value(range(0, 3), Objective::MinDistances) == Scalar(10));
  CHECK(objective_value(ints({0, 1}), Objective::MaxRho) == Scalar(2));
  auto prof = distance_profile(range(0, 3));
  CHECK(prof.set_size == 4);
  CHECK(prof.diff_size == 7);
  CHECK(prof.distance_count == 10);
  CHECK(parse_objective("max-rho") == Objective::MaxRho);
  CHECK_FALSE(parse_objective("max"));

  CHECK(better({Scalar(9), 3}, {Scalar(10), 9}, Objective::MinDistances));
  CHECK(better({Scalar(10), 9}, {Scalar(10), 7}, Objective::MinDistances));
  CHECK_FALSE(better({Scalar(10), 7}, {Scalar(10), 7}, Objective::MinDistances));
  CHECK(better({Scalar(3), 0}, {Scalar(2), 0}, Objective::MaxRho));
}

TEST_CASE("rho^8 orders sets the same way as rho") {
  std::mt19937_64 rng(53);
  std::vector<std::pair<Scalar, double>> v;
  for (int i = 0; i < 40; ++i) {
    auto qa = oracle::random_integer_set(rng, 2 + i % 6, 0, 40);
    auto a = oracle::to_numset(qa);
    auto d = oracle::diff(qa, qa).size();
    auto delta = oracle::distances(oracle::grid(qa, qa)).size();
    double rho = double(d) * std::pow(double(qa.size()), 0.125) / double(delta);
    v.emplace_back(objective_value(a, Objective::MaxRho), rho);
  }
  for (const auto& [s1, r1] : v)
    for (const auto& [s2, r2] : v)
      if (std::abs(r1 - r2) > 1e-12) CHECK((s1 < s2) == (r1 < r2));
}

TEST_CASE("config validation names the field") {
  SearchConfig c;
  c.n = 0;
  CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("n"), DomainError);
  c = {};
  c.universe = 3;
  c.n = 8;
  CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("universe"), DomainError);
  c = {};
  c.cooling_rate = 1.5;
  CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("cooling_rate"), DomainError);
  c = {};
  c.initial_temperature = -1;
  CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("temperature"), DomainError);
  c = {};
  c.restarts = 0;
  CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("restarts"), DomainError);
}

TEST_CASE("annealing: small instance") {
  SearchConfig c;
  c.n = 4;
  c.universe = 30;
  c.iterations = 2000;
  c.seed = 7;
  c.restarts = 2;
  c.trace_every = 100;
  auto st = anneal(c);
  CHECK(st.best_score.value <= Scalar(10));
  CHECK(st.best.size() == 4);
  CHECK(st.best_score.value == objective_value(st.best, Objective::MinDistances));
  REQUIRE(st.restarts.size() == 2);
  for (std::size_t i = 0; i < st.restarts.size(); ++i) {
    const auto& r = st.restarts[i];
    CHECK(r.seed == c.seed + i);
    CHECK(r.iterations_run == c.iterations);
    CHECK_FALSE(better(r.initial_score, r.best_score, c.objective));
    CHECK_FALSE(better(r.best_score, st.best_score, c.objective));
    for (std::size_t k = 1; k < r.trace.size(); ++k) CHECK(r.trace[k].best_score <= r.trace[k - 1].best_score);
    CHECK(r.trace.back().best_score == r.best_score.value);
  }
  // Pure function of the config.
  CHECK(search_to_json(anneal(c)).dump() == search_to_json(st).dump());
  c.seed = 8;
  CHECK(search_to_json(anneal(c)).dump() != search_to_json(st).dump());
}

TEST_CASE("annealing: max-rho and degenerate universes") {
  SearchConfig c;
  c.n = 5;
  c.universe = 20;
  c.iterations = 500;
  c.restarts = 1;
  c.seed = 1;
  c.objective = Objective::MaxRho;
  auto st = anneal(c);
  CHECK(st.best_score.value == objective_value(st.best, Objective::MaxRho));
  CHECK_FALSE(better(st.restarts[0].initial_score, st.best_score, c.objective));

  SearchConfig full;
  full.n = 5;
  full.universe = 4;
  full.restarts = 1;
  full.seed = 2;
  auto f = anneal(full);
  CHECK(f.best == range(0, 4));
  CHECK(f.restarts[0].accepted_moves == 0);
}

TEST_CASE("search JSON carries the RNG and the winning trace") {
  SearchConfig c;
  c.n = 4;
  c.universe = 30;
  c.iterations = 300;
  c.restarts = 2;
  c.seed = 7;
  c.trace_every = 100;
  auto j = search_to_json(anneal(c));
  CHECK(j["rng"]["algorithm"] == "mt19937_64");
  CHECK(j["rng"]["seed"] == 7);
  CHECK(j["restarts"].size() == 2);
  CHECK(j["trace"].size() == 4);
  CHECK(j["best_score"].is_string());
}

TEST_CASE("scan") {
  auto recs = scan({FamilySpec::parse("ap")}, {4, 8});
  REQUIRE(recs.size() == 4);
  CHECK(recs[0].statement_id == StatementId::MainTheorem);
  CHECK(recs[1].statement_id == StatementId::RudinExponent);
  CHECK(recs[0].lhs == Scalar(7));
  CHECK(recs[0].rhs == Scalar(10));
  CHECK(recs[0].witnesses["instance"]["n"] == 4);
  auto q8 = oracle::to_qset(range(-7, 7));
  auto delta8 = oracle::sum(oracle::squares(q8), oracle::squares(q8)).size();
  CHECK(recs[2].lhs == Scalar(15));
  CHECK(recs[2].rhs == Scalar(static_cast<std::int64_t>(delta8)));
  CHECK(scan({FamilySpec::parse("ap")}, {}).empty());
}
