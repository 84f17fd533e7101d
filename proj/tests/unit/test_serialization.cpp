#include <doctest.h>

#include "extmax/random.hpp"
#include "extmax/serialization.hpp"

using namespace extmax;

TEST_CASE("multivector JSON round trip") {
  const Signature sig(1, 3);
  Rng rng(61);
  auto m = to_complex(random_multivector(rng, sig, 2)) + Complex(0, 1) * to_complex(random_multivector(rng, sig, 2));
  auto back = multivector_from_json(to_json(m));
  CHECK(back == m);
  auto j = to_json(random_multivector(rng, sig, 1));
  CHECK_FALSE(j["terms"][0].contains("im"));
  CHECK(j["signature"]["k"] == 1);
}

TEST_CASE("malformed multivectors are rejected") {
  const Signature sig(1, 3);
  auto parse = [&](const char* text) { return multivector_from_json(json::parse(text), sig); };
  CHECK_THROWS_AS(parse(R"({"grade": 2, "terms": [{"indices": [2, 1], "re": 1}]})"), ConfigError);
  CHECK_THROWS_AS(parse(R"({"grade": 2, "terms": [{"indices": [1], "re": 1}]})"), ConfigError);
  CHECK_THROWS_AS(parse(R"({"grade": 1, "terms": [{"indices": [4], "re": 1}]})"), ConfigError);
  CHECK_THROWS_AS(parse(R"({"grade": 1, "terms": [{"indices": [1], "re": 1}, {"indices": [1], "re": 2}]})"),
                  ConfigError);
  CHECK_THROWS_AS(parse(R"({"terms": []})"), ConfigError);
  CHECK_THROWS_AS(parse(R"({"signature": {"k": 0, "n": 2}, "grade": 0, "terms": []})"), ConfigError);
  auto ok = parse(R"({"grade": 1, "terms": [{"indices": [3], "re": 0.5, "im": -1}]})");
  CHECK(ok.coefficient({3}) == Complex(0.5, -1));
}

TEST_CASE("field JSON round trip") {
  const Signature sig(2, 2);
  Rng rng(62);
  RandomFieldOptions opts;
  opts.envelope = true;
  auto f = random_field(rng, sig, 2, opts);
  auto g = field_from_json(to_json(f), sig);
  Point x = random_point(rng, sig);
  CHECK(max_abs_diff(f.evaluate(x), g.evaluate(x)) == 0.0);
  CHECK(to_json(g).dump() == to_json(f).dump());

  auto grid = sample_to_grid(f, {-1, -1, -1, -1}, {0.5, 0.5, 0.5, 0.5}, {5, 5, 5, 5});
  auto grid_back = field_from_json(to_json(grid), sig);
  CHECK(max_abs_diff(grid.evaluate(x), grid_back.evaluate(x)) == 0.0);
}

TEST_CASE("scenario parsing") {
  auto j = json::parse(R"({
    "signature": {"k": 1, "n": 1}, "r": 1,
    "A": {"grade": 0, "modes": [{"xi": [1, 1], "phase": 0, "waveform": "cos", "envelope": null,
                                 "amplitude": {"grade": 0, "terms": [{"indices": [], "re": 1}]}}]},
    "checks": ["differential", "gauge"], "sample_points": 4, "seed": 9, "tol": 1e-8
  })");
  Scenario s = scenario_from_json(j);
  CHECK(s.r == 1);
  REQUIRE(s.F);
  CHECK(s.F->grade() == 1);
  CHECK(s.seed == 9);
  CHECK(s.sample_box.size() == 2);

  auto bad = j;
  bad["checks"] = {"bogus"};
  CHECK_THROWS_AS(scenario_from_json(bad), ConfigError);
  bad = j;
  bad["r"] = 5;
  CHECK_THROWS_AS(scenario_from_json(bad), ConfigError);
  bad = j;
  bad["A"]["modes"][0]["xi"] = {1, 1, 1};
  CHECK_THROWS_AS(scenario_from_json(bad), ConfigError);
  bad = j;
  bad["A"]["modes"][0]["waveform"] = "sin";
  CHECK_THROWS_AS(scenario_from_json(bad), ConfigError);
  bad = j;
  bad["A"]["grade"] = 1;
  CHECK_THROWS_AS(scenario_from_json(bad), ConfigError);
  CHECK_THROWS_AS(load_scenario("/nonexistent/scenario.json"), ConfigError);
}

TEST_CASE("bitensor JSON lists the upper triangle") {
  const Signature sig(0, 2);
  Bitensor t(sig, [](int i, int j) { return 10.0 * i + j; });
  auto j = to_json(t);
  REQUIRE(j.size() == 3);
  CHECK(j[1] == json::array({0, 1, 1.0}));
  CHECK(j[2] == json::array({1, 1, 11.0}));
}
