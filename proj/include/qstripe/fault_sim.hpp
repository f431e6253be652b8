#pragma once
// Pauli-frame fault propagation through expanded circuits. The frame holds
// each site's deviation from the fault-free run; gates conjugate it,
// classical bits carry outcome deviations, and the bundle's events (reads,
// indicators, relocations, refreshes) are applied at timestep boundaries.
// A data word fails when its end-of-circuit residual decodes to a logical
// operator under one final round of perfect correction.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qstripe/circuit.hpp"

namespace qstripe::fault_sim {

enum class Scenario { EC_ONLY, CNOT_EC };
const char* to_string(Scenario s);

// One faulty gate: a Pauli applied right after the gate at (timestep,
// gate_index). Bits 0/1 flip X/Z on targets[0], bits 2/3 on targets[1].
struct FaultLocation {
  int timestep = 0;
  int gate_index = 0;
  uint8_t pauli = 0;
};

struct GateLocation {
  int timestep = 0;
  int gate_index = 0;
  int arity = 1;
};

// Gates that can fault: H, CNOT, SWAP, CC_X, CC_Z. Measurement and fresh
// zeros are perfect by convention, matching the operation budget.
std::vector<GateLocation> fault_locations(const Circuit& c);

struct ScenarioCircuit {
  CircuitBundle bundle;
  std::vector<std::array<Site, 7>> data_words;  // codeword order
};

// EC_ONLY: one minimal error-correction block, 70 fault locations.
// CNOT_EC: transversal CNOT between two blocks followed by a block of
// error correction on each, 147 fault locations.
ScenarioCircuit build_scenario(Scenario s);

struct PauliInjection {
  Site site;
  bool x = false;
  bool z = false;
};

struct PropagateOptions {
  std::optional<FaultLocation> fault;
  std::vector<PauliInjection> initial;  // frame preload before timestep 0
  // Syndrome value -> data qubit (-1: none) used by in-circuit indicators;
  // overriding it breaks the decoder on purpose in self-tests.
  std::optional<std::array<int, 8>> indicator_decode;
};

struct WordResidual {
  uint8_t x = 0;
  uint8_t z = 0;
};

struct SiteFrame {
  Site site;
  bool x = false;
  bool z = false;
};

struct PropagateResult {
  std::vector<WordResidual> residuals;       // raw frame per data word
  std::vector<SiteFrame> frame;              // sites left with any deviation
  std::map<std::string, uint8_t> read_words; // captured 7-bit read outcomes
  std::map<std::string, int> bits;           // classical bits at the end
};

PropagateResult propagate(const ScenarioCircuit& sc,
                          const PropagateOptions& opts = {});

// Perfect correction of the residual: does it decode to a logical X or Z?
bool word_failure(const WordResidual& r);
bool any_failure(const PropagateResult& r);

struct ExhaustiveResult {
  long cases = 0;
  std::vector<FaultLocation> failures;
};

// Every single-fault case: 3 Paulis per 1-qubit gate, 15 per 2-qubit gate.
ExhaustiveResult exhaustive_single_fault(const ScenarioCircuit& sc,
                                         const PropagateOptions& base = {});

struct MonteCarloResult {
  double epsilon = 0.0;
  long trials = 0;
  long failures = 0;
  long locations = 0;  // faultable gates per trial
  double p_fail = 0.0;
  double ci_low = 0.0;   // Wilson 95%
  double ci_high = 0.0;
};

// Depolarizing-style sampling: each location independently faults with
// probability epsilon, drawing a uniform nontrivial Pauli. Trial t's random
// stream depends only on (seed, t), so results are identical for any thread
// count. threads <= 0 consults QSTRIPE_THREADS, then hardware concurrency.
MonteCarloResult monte_carlo_p1(const ScenarioCircuit& sc, double epsilon,
                                long trials, uint64_t seed, int threads = 0);

struct ScalingFit {
  double slope = 0.0;
  int points_used = 0;
  std::vector<std::string> warnings;
};

// Least-squares slope of log p_fail against log epsilon. Points without
// observed failures are skipped with a warning; fewer than three usable
// points is an error.
ScalingFit scaling_fit(const std::vector<MonteCarloResult>& points);

}  // namespace qstripe::fault_sim
