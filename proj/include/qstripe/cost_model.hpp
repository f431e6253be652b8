#pragma once
// Recursive gate-count accounting per communication model and block variant.
// The per-level constants are encoded as explicit term tables; the expander
// independently reproduces the derivable subset (49, 12, 70, 298).

#include <string>
#include <utility>
#include <vector>

#include "qstripe/layout.hpp"

namespace qstripe::cost_model {

using layout::BigInt;
using layout::BlockVariant;

enum class CommModel { FREE, REMOTE_CNOT, SWAP };

const char* to_string(CommModel m);
const char* to_string(BlockVariant v);

struct CountSplit {
  long computational = 0;
  long communication = 0;
  long total() const { return computational + communication; }
};

// Two-qubit logical gate: computational ops plus communication overhead.
CountSplit unitary_count(CommModel model, BlockVariant variant);

struct EcCount {
  long computational = 0;
  long communication = 0;
  std::vector<std::pair<std::string, long>> terms;
  long total() const { return computational + communication; }
};

// One error-correction block, with the named sub-terms whose sum is the total.
EcCount ec_count(CommModel model, BlockVariant variant);

// N = unitary total + EC total: level L-1 operations behind one level-L step.
long level_cost(CommModel model, BlockVariant variant);

// N^L physical gates behind one level-L logical gate.
BigInt physical_gate_count(int level, CommModel model, BlockVariant variant);

// Logical SWAP: (7, 42) under SWAP communication, the 42 splitting as 21
// interleave + 21 undo; (7, 0) when communication is free. Remote-CNOT
// mediation is unsupported and throws.
CountSplit logical_swap_cost(CommModel model);
inline constexpr long logical_swap_interleave = 21;
inline constexpr long logical_swap_undo = 21;

struct CountBreakdown {
  long n_u = 0;
  long n_uc = 0;
  long n_e = 0;
  long n_ec = 0;
  std::vector<std::pair<std::string, long>> terms;
  long total() const { return n_u + n_uc + n_e + n_ec; }
};

CountBreakdown breakdown(CommModel model, BlockVariant variant);

}  // namespace qstripe::cost_model
