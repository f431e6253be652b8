#include "qstripe/steane.hpp"

#include <bit>
#include <stdexcept>

namespace qstripe::steane {

int parity(uint8_t word) { return std::popcount(word) & 1; }

Syndrome syndrome(const Pauli& e) {
  Syndrome s;
  for (int i = 0; i < 3; ++i) {
    s.x_syn |= static_cast<uint8_t>(parity(e.x & stabilizer_masks[i]) << i);
    s.z_syn |= static_cast<uint8_t>(parity(e.z & stabilizer_masks[i]) << i);
  }
  return s;
}

std::optional<int> decode_syndrome(uint8_t syn) {
  syn &= 0x7;
  if (syn == 0) return std::nullopt;
  return syn - 1;  // column q of the check matrix is the binary value q+1
}

bool is_logical_error(const Pauli& residual) {
  Syndrome s = syndrome(residual);
  if (s.x_syn != 0 || s.z_syn != 0)
    throw std::invalid_argument("is_logical_error: residual has nonzero syndrome");
  return parity(residual.x) != 0 || parity(residual.z) != 0;
}

bool in_stabilizer_group(const Pauli& p) {
  Syndrome s = syndrome(p);
  if (s.x_syn != 0 || s.z_syn != 0) return false;
  // Zero syndrome puts each mask in the Hamming code; membership in the span
  // of the three stabilizer rows is equivalent to even weight there.
  return parity(p.x) == 0 && parity(p.z) == 0;
}

bool commutes(const Pauli& a, const Pauli& b) {
  return (parity(a.x & b.z) ^ parity(a.z & b.x)) == 0;
}

}  // namespace qstripe::steane
