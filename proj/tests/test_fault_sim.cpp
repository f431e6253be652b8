#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <set>

#include "qstripe/fault_sim.hpp"

using namespace qstripe;
using namespace qstripe::fault_sim;

namespace {

ScenarioCircuit tiny(Circuit c, std::vector<std::array<Site, 7>> words = {}) {
  ScenarioCircuit sc;
  sc.bundle.circuit = std::move(c);
  sc.data_words = std::move(words);
  return sc;
}

Gate g1(GateKind k, Site s) { return Gate{k, {s}, {}}; }
Gate g2(GateKind k, Site a, Site b) { return Gate{k, {a, b}, {}}; }

bool frame_has(const PropagateResult& r, Site s, bool x, bool z) {
  for (const SiteFrame& f : r.frame)
    if (f.site == s) return f.x == x && f.z == z;
  return !x && !z;
}

}  // namespace

TEST_CASE("fault locations cover exactly the counted gates") {
  Circuit c{1, 4, {"m"}, {}};
  c.timesteps.push_back({g1(GateKind::PREP_ZERO, {0, 0}), g1(GateKind::H, {0, 1})});
  c.timesteps.push_back({g2(GateKind::CNOT, {0, 1}, {0, 2})});
  c.timesteps.push_back({Gate{GateKind::MEASURE_Z, {{0, 3}}, {"m"}},
                         Gate{GateKind::CC_X, {{0, 0}}, {"m"}}});
  auto locs = fault_locations(c);
  REQUIRE(locs.size() == 3);
  CHECK(locs[0].timestep == 0);
  CHECK(locs[0].gate_index == 1);
  CHECK(locs[0].arity == 1);
  CHECK(locs[1].timestep == 1);
  CHECK(locs[1].arity == 2);
  CHECK(locs[2].timestep == 2);
  CHECK(locs[2].gate_index == 1);
  CHECK(locs[2].arity == 1);
}

TEST_CASE("scenario circuits have the advertised fault counts") {
  ScenarioCircuit ec = build_scenario(Scenario::EC_ONLY);
  REQUIRE_NOTHROW(check_well_formed(ec.bundle.circuit));
  CHECK(validate_nearest_neighbor(ec.bundle.circuit).empty());
  REQUIRE(ec.data_words.size() == 1);
  auto locs = fault_locations(ec.bundle.circuit);
  CHECK(locs.size() == 70);
  long singles = 0, doubles = 0;
  for (const auto& l : locs) (l.arity == 1 ? singles : doubles) += 1;
  CHECK(singles == 42);  // 28 H + 14 classically controlled fixes
  CHECK(doubles == 28);  // syndrome CNOTs

  ScenarioCircuit both = build_scenario(Scenario::CNOT_EC);
  REQUIRE_NOTHROW(check_well_formed(both.bundle.circuit));
  CHECK(validate_nearest_neighbor(both.bundle.circuit).empty());
  REQUIRE(both.data_words.size() == 2);
  auto locs2 = fault_locations(both.bundle.circuit);
  CHECK(locs2.size() == 147);  // 7 transversal CNOTs + two 70-gate blocks
}

TEST_CASE("frame conjugation through the basic gates") {
  // H exchanges the X and Z components.
  {
    Circuit c{1, 1, {}, {{g1(GateKind::H, {0, 0})}}};
    PropagateOptions o;
    o.initial = {{{0, 0}, true, false}};
    auto r = propagate(tiny(c), o);
    CHECK(frame_has(r, {0, 0}, false, true));
  }
  // CNOT copies X forward and Z backward.
  {
    Circuit c{1, 2, {}, {{g2(GateKind::CNOT, {0, 0}, {0, 1})}}};
    PropagateOptions o;
    o.initial = {{{0, 0}, true, false}};
    auto r = propagate(tiny(c), o);
    CHECK(frame_has(r, {0, 0}, true, false));
    CHECK(frame_has(r, {0, 1}, true, false));

    o.initial = {{{0, 1}, false, true}};
    r = propagate(tiny(c), o);
    CHECK(frame_has(r, {0, 0}, false, true));
    CHECK(frame_has(r, {0, 1}, false, true));

    o.initial = {{{0, 1}, true, false}};
    r = propagate(tiny(c), o);
    CHECK(frame_has(r, {0, 0}, false, false));
    CHECK(frame_has(r, {0, 1}, true, false));

    o.initial = {{{0, 0}, false, true}};
    r = propagate(tiny(c), o);
    CHECK(frame_has(r, {0, 0}, false, true));
    CHECK(frame_has(r, {0, 1}, false, false));
  }
  // SWAP moves the whole deviation.
  {
    Circuit c{1, 2, {}, {{g2(GateKind::SWAP, {0, 0}, {0, 1})}}};
    PropagateOptions o;
    o.initial = {{{0, 0}, true, true}};
    auto r = propagate(tiny(c), o);
    CHECK(frame_has(r, {0, 0}, false, false));
    CHECK(frame_has(r, {0, 1}, true, true));
  }
  // Deterministic Pauli gates leave the frame alone.
  {
    Circuit c{1, 1, {}, {{g1(GateKind::PAULI_X, {0, 0})}, {g1(GateKind::PAULI_Z, {0, 0})}}};
    PropagateOptions o;
    o.initial = {{{0, 0}, true, false}};
    auto r = propagate(tiny(c), o);
    CHECK(frame_has(r, {0, 0}, true, false));
  }
}

TEST_CASE("measurement captures the X deviation and drives classical fixes") {
  Circuit c{1, 2, {"m"}, {}};
  c.timesteps.push_back({Gate{GateKind::MEASURE_Z, {{0, 0}}, {"m"}}});
  c.timesteps.push_back({Gate{GateKind::CC_X, {{0, 1}}, {"m"}}});
  PropagateOptions o;
  o.initial = {{{0, 0}, true, false}};
  auto r = propagate(tiny(c), o);
  CHECK(r.bits.at("m") == 1);
  CHECK(frame_has(r, {0, 1}, true, false));

  // Without the deviation the fix stays quiet.
  auto r0 = propagate(tiny(c));
  CHECK(r0.bits.at("m") == 0);
  CHECK(r0.frame.empty());
}

TEST_CASE("no fault means no residual anywhere") {
  for (Scenario s : {Scenario::EC_ONLY, Scenario::CNOT_EC}) {
    ScenarioCircuit sc = build_scenario(s);
    auto r = propagate(sc);
    CHECK_FALSE(any_failure(r));
    for (const auto& res : r.residuals) {
      CHECK(res.x == 0);
      CHECK(res.z == 0);
    }
    CHECK(r.frame.empty());
    for (const auto& [id, w] : r.read_words) {
      (void)id;
      CHECK(w == 0);
    }
  }
  CHECK(propagate(build_scenario(Scenario::EC_ONLY)).read_words.size() == 4);
  CHECK(propagate(build_scenario(Scenario::CNOT_EC)).read_words.size() == 8);
}

TEST_CASE("the in-circuit correction repairs an injected data error") {
  ScenarioCircuit sc = build_scenario(Scenario::EC_ONLY);
  for (int q = 0; q < 7; ++q) {
    PropagateOptions o;
    o.initial = {{sc.data_words[0][q], true, false}};
    auto r = propagate(sc, o);
    CHECK(r.residuals[0].x == 0);  // corrected inside the block
    CHECK(r.residuals[0].z == 0);

    // Disabling the decoder leaves the error in place (harmless to the
    // final perfect round, but visibly uncorrected).
    o.indicator_decode = std::array<int, 8>{-1, -1, -1, -1, -1, -1, -1, -1};
    r = propagate(sc, o);
    CHECK(r.residuals[0].x == (1 << q));
    CHECK_FALSE(any_failure(r));
  }
}

TEST_CASE("a logical operator in the frame is a failure") {
  ScenarioCircuit sc = build_scenario(Scenario::EC_ONLY);
  PropagateOptions o;
  for (int q = 0; q < 7; ++q) o.initial.push_back({sc.data_words[0][q], true, false});
  auto r = propagate(sc, o);
  CHECK(any_failure(r));
  CHECK(word_failure(r.residuals[0]));
}

TEST_CASE("word failure applies one round of perfect decoding") {
  CHECK_FALSE(word_failure({0, 0}));
  CHECK_FALSE(word_failure({1 << 3, 0}));   // single X, corrected
  CHECK_FALSE(word_failure({0, 1 << 6}));   // single Z, corrected
  CHECK_FALSE(word_failure({0x55, 0}));     // stabilizer, trivial residual
  CHECK_FALSE(word_failure({0x55, 0x66}));
  CHECK(word_failure({0x7F, 0}));           // logical X
  CHECK(word_failure({0, 0x7F}));           // logical Z
  CHECK(word_failure({0x7F, 0x7F}));        // logical Y
  // Two X flips decode to a third, completing a logical operator.
  CHECK(word_failure({0x03, 0}));
  CHECK(word_failure({0, 0x03}));
}

TEST_CASE("both scenarios survive every single fault") {
  for (Scenario s : {Scenario::EC_ONLY, Scenario::CNOT_EC}) {
    ScenarioCircuit sc = build_scenario(s);
    ExhaustiveResult r = exhaustive_single_fault(sc);
    CAPTURE(to_string(s));
    CHECK(r.cases == (s == Scenario::EC_ONLY ? 546 : 1197));
    CHECK(r.failures.empty());
  }
}

TEST_CASE("a mutated decoder makes the scan fail, so the scan can see failures") {
  ScenarioCircuit sc = build_scenario(Scenario::EC_ONLY);
  PropagateOptions bad;
  // Off-by-one recovery: every fix lands on the wrong qubit.
  bad.indicator_decode = std::array<int, 8>{-1, 1, 2, 3, 4, 5, 6, 0};
  ExhaustiveResult r = exhaustive_single_fault(sc, bad);
  CHECK(r.cases == 546);
  CHECK_FALSE(r.failures.empty());
}

TEST_CASE("Monte Carlo with epsilon zero never fails") {
  ScenarioCircuit sc = build_scenario(Scenario::EC_ONLY);
  MonteCarloResult r = monte_carlo_p1(sc, 0.0, 10000, 5);
  CHECK(r.trials == 10000);
  CHECK(r.failures == 0);
  CHECK(r.p_fail == 0.0);
  CHECK(r.ci_low == 0.0);
  CHECK(r.ci_high > 0.0);  // Wilson upper bound stays informative
  CHECK(r.ci_high < 1e-3);
  CHECK(r.locations == 70);
}

TEST_CASE("Monte Carlo results are independent of the thread count") {
  ScenarioCircuit sc = build_scenario(Scenario::EC_ONLY);
  MonteCarloResult a = monte_carlo_p1(sc, 1e-2, 20000, 7, 1);
  MonteCarloResult b = monte_carlo_p1(sc, 1e-2, 20000, 7, 3);
  CHECK(a.failures == b.failures);
  CHECK(a.p_fail == b.p_fail);
  CHECK(a.ci_low == b.ci_low);
  CHECK(a.ci_high == b.ci_high);

  setenv("QSTRIPE_THREADS", "2", 1);
  MonteCarloResult c = monte_carlo_p1(sc, 1e-2, 20000, 7, 0);
  unsetenv("QSTRIPE_THREADS");
  CHECK(c.failures == a.failures);

  // Different seeds genuinely change the sample.
  MonteCarloResult d = monte_carlo_p1(sc, 1e-2, 20000, 8, 1);
  CHECK(d.failures != a.failures);
}

TEST_CASE("Monte Carlo failure rate sits under the two-fault union bound") {
  ScenarioCircuit sc = build_scenario(Scenario::EC_ONLY);
  const double g = 70;
  for (double eps : {3e-3, 1e-2}) {
    MonteCarloResult r = monte_carlo_p1(sc, eps, 200000, 11, 1);
    CHECK(r.failures > 0);
    CHECK(r.ci_high <= g * g / 2 * eps * eps);
    CHECK(r.p_fail > 0.1 * g * g / 2 * eps * eps / 10);  // same order of magnitude
  }
}

TEST_CASE("Monte Carlo rejects bad arguments") {
  ScenarioCircuit sc = build_scenario(Scenario::EC_ONLY);
  CHECK_THROWS_AS(monte_carlo_p1(sc, 1e-2, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(monte_carlo_p1(sc, 1e-2, -5, 1), std::invalid_argument);
  CHECK_THROWS_AS(monte_carlo_p1(sc, -0.1, 100, 1), std::invalid_argument);
  CHECK_THROWS_AS(monte_carlo_p1(sc, 1.5, 100, 1), std::invalid_argument);
}

TEST_CASE("propagate validates the fault location") {
  ScenarioCircuit sc = build_scenario(Scenario::EC_ONLY);
  PropagateOptions o;
  o.fault = FaultLocation{9999, 0, 1};
  CHECK_THROWS_AS(propagate(sc, o), std::invalid_argument);
}

TEST_CASE("unexpanded composite markers refuse to simulate") {
  Circuit c{2, 4, {}, {{g2(GateKind::REMOTE_CNOT, {0, 0}, {0, 3})}}};
  CHECK_THROWS_AS(propagate(tiny(c)), CircuitError);
}

TEST_CASE("scaling fit recovers exact synthetic slopes") {
  auto mk = [](double eps, long trials, long failures) {
    MonteCarloResult r;
    r.epsilon = eps;
    r.trials = trials;
    r.failures = failures;
    return r;
  };
  ScalingFit quad = scaling_fit(
      {mk(1e-3, 1000000, 10), mk(1e-2, 1000000, 1000), mk(1e-1, 1000000, 100000)});
  CHECK(quad.slope == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(quad.points_used == 3);
  CHECK(quad.warnings.empty());

  ScalingFit cubic = scaling_fit(
      {mk(1e-3, 2000000, 2), mk(1e-2, 2000000, 2000), mk(1e-1, 2000000, 2000000)});
  CHECK(cubic.slope == doctest::Approx(3.0).epsilon(1e-12));

  // A zero-failure point is skipped with a warning, not fatal.
  ScalingFit skipped = scaling_fit({mk(1e-4, 1000, 0), mk(1e-3, 1000000, 10),
                                    mk(1e-2, 1000000, 1000),
                                    mk(1e-1, 1000000, 100000)});
  CHECK(skipped.points_used == 3);
  CHECK(skipped.slope == doctest::Approx(2.0).epsilon(1e-12));
  REQUIRE(skipped.warnings.size() == 1);
  CHECK(skipped.warnings[0].find("skipped") != std::string::npos);

  CHECK_THROWS_AS(scaling_fit({mk(1e-3, 1000, 1), mk(1e-2, 1000, 10)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(scaling_fit({mk(1e-3, 1000, 1), mk(1e-3, 1000, 2),
                               mk(1e-3, 1000, 4)}),
                  std::invalid_argument);
}
