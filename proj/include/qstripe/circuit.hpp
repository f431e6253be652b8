#pragma once
// Circuit IR: gates on a width x length site grid, timestep parallelism,
// JSON serialization, and nearest-neighbor validation.

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qstripe {

enum class GateKind {
  H,
  CNOT,
  SWAP,
  REMOTE_CNOT,  // composite marker; cost accounting expands it to 5 ops
  CC_X,         // classically controlled X
  CC_Z,         // classically controlled Z
  PREP_ZERO,
  MEASURE_Z,
  PAULI_X,
  PAULI_Z,
};

const char* to_string(GateKind k);
GateKind gate_kind_from_string(const std::string& s);

// Quantum sites per kind: 1 or 2. CC_X/CC_Z additionally require at least
// one classical control bit; MEASURE_Z names its result bit the same way.
int gate_arity(GateKind k);

struct Site {
  int row = 0;
  int column = 0;
  bool operator==(const Site&) const = default;
  auto operator<=>(const Site&) const = default;
};

struct Gate {
  GateKind kind = GateKind::H;
  std::vector<Site> targets;  // [control, target] for CNOT/REMOTE_CNOT
  std::vector<std::string> classical_controls;
  bool operator==(const Gate&) const = default;
};

struct Circuit {
  int width = 0;
  int length = 0;
  std::vector<std::string> classical_bits;
  std::vector<std::vector<Gate>> timesteps;
  bool operator==(const Circuit&) const = default;
};

struct CircuitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structural checks: bounds, arity, distinct targets, no site used twice in
// one timestep, declared classical bits. Throws CircuitError.
void check_well_formed(const Circuit& c);

struct Violation {
  int timestep = 0;
  Gate gate;
};

// Empty iff every 2-site gate spans Manhattan distance exactly 1.
std::vector<Violation> validate_nearest_neighbor(const Circuit& c);

std::map<GateKind, long> count_by_kind(const Circuit& c);

// Gates that enter the operation budget: everything except MEASURE_Z and
// PREP_ZERO (measurement and fresh-zero supply are costless by convention).
long counted_operations(const Circuit& c);

std::string serialize(const Circuit& c);
Circuit parse(const std::string& text);  // throws CircuitError naming the field

// ---------------------------------------------------------------------------
// Simulation metadata. These events ride alongside a circuit in-process; the
// JSON interchange format carries gates only. Events attach to the boundary
// before timestep `before_timestep` (== timesteps.size() for end-of-circuit)
// and are processed there in the order: reads, indicators, relocations,
// refreshes.
// ---------------------------------------------------------------------------

// Cost-free move of qubit contents between sites (communication is free in
// the model these circuits are emitted for). Moves form a permutation: the
// multiset of sources equals the multiset of destinations.
struct RelocationEvent {
  int before_timestep = 0;
  std::vector<std::pair<Site, Site>> moves;  // first -> second
};

// Destructive word readout of 7 sites in codeword order, producing a named
// classical word consumed by an indicator.
struct ReadEvent {
  int before_timestep = 0;
  std::array<Site, 7> sites{};
  std::string id;
};

enum class RefreshKind {
  PHYSICAL_ZERO,      // reset each listed site to |0>
  LOGICAL_ZERO_WORD,  // install a fresh perfect logical zero on 7 sites
};

// Replace site contents with fresh supply. LOGICAL_ZERO_WORD models the
// external zero source of the minimal block and takes exactly 7 sites in
// codeword order.
struct RefreshEvent {
  int before_timestep = 0;
  std::vector<Site> sites;
  RefreshKind kind = RefreshKind::PHYSICAL_ZERO;
};

// Classical decode of two read words into 7 per-qubit recovery bits. The two
// words must show the same syndrome for any recovery to fire. With
// parity_fix set, an odd readout parity additionally flips the whole word
// (logical bit-flip repair, used when screening freshly prepared zeros).
struct IndicatorEvent {
  int before_timestep = 0;
  std::string read_a;
  std::string read_b;
  std::array<std::string, 7> out_bits{};
  bool parity_fix = false;
};

struct EprPair {
  Site a, b;  // prepared as (|00> + |11>)/sqrt(2) before the circuit starts
};

struct SimMeta {
  std::vector<RelocationEvent> relocations;
  std::vector<ReadEvent> reads;
  std::vector<RefreshEvent> refreshes;
  std::vector<IndicatorEvent> indicators;
  std::vector<EprPair> epr_pairs;
};

struct CircuitBundle {
  Circuit circuit;
  SimMeta meta;
};

}  // namespace qstripe
