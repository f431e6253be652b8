#include "qstripe/layout.hpp"

#include <stdexcept>

namespace qstripe::layout {

namespace {

void append(std::vector<SlotRole>& v, SlotRole role, int count) {
  v.insert(v.end(), count, role);
}

}  // namespace

std::vector<SlotRole> block_map(BlockVariant variant) {
  std::vector<SlotRole> v;
  if (variant == BlockVariant::MINIMAL_27) {
    append(v, SlotRole::DATA, 7);
    append(v, SlotRole::ZERO, 7);
    append(v, SlotRole::ANCILLA, 3);
    append(v, SlotRole::ZERO, 7);
    append(v, SlotRole::ANCILLA, 3);
  } else {
    append(v, SlotRole::DATA, 7);
    append(v, SlotRole::ZERO, 7);
    append(v, SlotRole::ANCILLA, 3);
    append(v, SlotRole::ZERO, 7);
    append(v, SlotRole::ANCILLA, 4);
    append(v, SlotRole::ZERO, 7);
    append(v, SlotRole::ZERO, 7);
    append(v, SlotRole::ANCILLA, 4);
  }
  return v;
}

BigInt physical_qubits(int level, BlockVariant variant) {
  if (level < 0) throw std::domain_error("physical_qubits: level must be >= 0");
  int base = variant == BlockVariant::MINIMAL_27 ? 27 : 46;
  BigInt out = 1;
  for (int i = 0; i < level; ++i) out *= base;
  return out;
}

int stripe_width(int level) {
  if (level < 0) throw std::domain_error("stripe_width: level must be >= 0");
  return level + 1;
}

}  // namespace qstripe::layout
