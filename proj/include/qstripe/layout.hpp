#pragma once
// Protection-block geometry on the linear stripe and physical resource counts.

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qstripe::layout {

using BigInt = boost::multiprecision::cpp_int;

enum class BlockVariant {
  MINIMAL_27,    // zeros supplied externally
  WITH_PREP_46,  // zeros prepared and screened inside the block
};

enum class SlotRole { DATA, ZERO, ANCILLA };

// Fixed role sequence along one row: 27 or 46 slots.
std::vector<SlotRole> block_map(BlockVariant variant);

// 27^L or 46^L level-0 qubits behind one level-L logical qubit.
BigInt physical_qubits(int level, BlockVariant variant);

// Computation with L concatenation levels runs on L+1 parallel qubit rows.
int stripe_width(int level);

}  // namespace qstripe::layout
