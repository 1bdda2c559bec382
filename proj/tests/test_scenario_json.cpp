#include <doctest.h>

#include <stdexcept>

#include "snc/scenario_json.hpp"

using namespace snc;

namespace {

const char* kMm1Doc = R"({
  "arrival": {"type": "poisson", "rate": 0.7},
  "services": [{"type": "poisson", "rate": 1.0}, {"type": "deterministic", "rate": 2.0}],
  "sim": {"horizon": 5000, "replications": 10, "seed": 7, "warmup": 500}
})";

}  // namespace

TEST_CASE("parse a full scenario document") {
  const auto file = parse_scenario_json(kMm1Doc);
  CHECK(file.scenario.arrival.kind == ModelKind::Poisson);
  CHECK(file.scenario.arrival.rate == 0.7);
  REQUIRE(file.scenario.services.size() == 2);
  CHECK(file.scenario.services[1].kind == ModelKind::Deterministic);
  CHECK(file.has_sim);
  CHECK(file.sim.horizon == 5000);
  CHECK(file.sim.replications == 10);
  CHECK(file.sim.seed == 7);
  CHECK(file.sim.warmup == 500);
}

TEST_CASE("round-trip is the identity on validated fields") {
  const auto file = parse_scenario_json(kMm1Doc);
  const auto again = parse_scenario_json(scenario_to_json(file));
  CHECK(again.scenario.arrival == file.scenario.arrival);
  CHECK(again.scenario.services == file.scenario.services);
  CHECK(again.sim.horizon == file.sim.horizon);
  CHECK(again.sim.replications == file.sim.replications);
  CHECK(again.sim.seed == file.sim.seed);
  CHECK(again.sim.warmup == file.sim.warmup);

  // A second serialization is byte-identical.
  CHECK(scenario_to_json(again) == scenario_to_json(file));
}

TEST_CASE("unknown keys are rejected everywhere") {
  CHECK_THROWS_AS(parse_scenario_json(R"({"arrival": {"type": "poisson", "rate": 1.0},
      "services": [{"type": "poisson", "rate": 2.0}], "extra": 1})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_scenario_json(R"({"arrival": {"type": "poisson", "rate": 1.0, "x": 2},
      "services": [{"type": "poisson", "rate": 2.0}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_scenario_json(R"({"arrival": {"type": "poisson", "rate": 1.0},
      "services": [{"type": "poisson", "rate": 2.0}], "sim": {"horizonn": 10}})"),
                  std::invalid_argument);
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(parse_scenario_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scenario_json("[]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scenario_json(R"({"arrival": {"type": "poisson", "rate": 1.0}})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_scenario_json(R"({"arrival": {"type": "poisson", "rate": 1.0},
      "services": []})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_scenario_json(R"({"arrival": {"type": "gaussian", "rate": 1.0},
      "services": [{"type": "poisson", "rate": 2.0}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_scenario_json(R"({"arrival": {"type": "bernoulli", "prob": 0.5},
      "services": [{"type": "poisson", "rate": 2.0}]})"),
                  std::invalid_argument);
}

TEST_CASE("unstable scenario raises the instability error") {
  CHECK_THROWS_AS(parse_scenario_json(R"({"arrival": {"type": "poisson", "rate": 2.0},
      "services": [{"type": "poisson", "rate": 1.0}]})"),
                  instability_error);
}

TEST_CASE("bernoulli models round-trip") {
  const auto file = parse_scenario_json(R"({
    "arrival": {"type": "bernoulli", "prob": 0.25, "size": 2.0},
    "services": [{"type": "deterministic", "rate": 1.0}]})");
  CHECK(file.scenario.arrival.prob == 0.25);
  CHECK_FALSE(file.has_sim);
  const auto again = parse_scenario_json(scenario_to_json(file));
  CHECK(again.scenario.arrival == file.scenario.arrival);
}
