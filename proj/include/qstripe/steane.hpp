#pragma once
// [7,1,3] CSS code: stabilizer masks, syndrome arithmetic, lookup decoder.

#include <array>
#include <cstdint>
#include <optional>

namespace qstripe::steane {

inline constexpr int n_data = 7;

// A Pauli on 7 qubits, phases ignored. Bit q of x set means an X component
// on qubit q; likewise z for Z components. Y is both bits.
struct Pauli {
  uint8_t x = 0;
  uint8_t z = 0;

  bool identity() const { return x == 0 && z == 0; }
  Pauli operator*(const Pauli& o) const {
    return Pauli{static_cast<uint8_t>(x ^ o.x), static_cast<uint8_t>(z ^ o.z)};
  }
  bool operator==(const Pauli& o) const = default;
};

// Parity-check rows: column q is the binary expansion of q+1. Row i doubles
// as the support mask of both the i-th X stabilizer and the i-th Z stabilizer
// (the code is CSS self-dual).
inline constexpr std::array<uint8_t, 3> stabilizer_masks = {0x55, 0x66, 0x78};

inline constexpr uint8_t full_mask = 0x7F;

inline constexpr Pauli x_stabilizer(int i) { return Pauli{stabilizer_masks[i], 0}; }
inline constexpr Pauli z_stabilizer(int i) { return Pauli{0, stabilizer_masks[i]}; }
inline constexpr Pauli logical_x{full_mask, 0};
inline constexpr Pauli logical_z{0, full_mask};

int parity(uint8_t word);

struct Syndrome {
  uint8_t x_syn = 0;  // flags X components (parity against Z stabilizers)
  uint8_t z_syn = 0;  // flags Z components (parity against X stabilizers)
  bool operator==(const Syndrome&) const = default;
};

Syndrome syndrome(const Pauli& e);

// 0 -> no correction; otherwise the unique qubit whose single-qubit error
// yields the syndrome. Total on all 3-bit inputs.
std::optional<int> decode_syndrome(uint8_t syn);

// Precondition: residual has zero syndrome. True iff the residual acts as a
// logical operator (anticommutes with logical_x or logical_z).
bool is_logical_error(const Pauli& residual);

// True iff p lies in the stabilizer group itself.
bool in_stabilizer_group(const Pauli& p);

bool commutes(const Pauli& a, const Pauli& b);

}  // namespace qstripe::steane
