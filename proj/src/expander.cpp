#include "qstripe/expander.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>
#include <utility>

namespace qstripe::expander {

namespace {

Gate g1(GateKind k, Site s) { return Gate{k, {s}, {}}; }
Gate g2(GateKind k, Site a, Site b) { return Gate{k, {a, b}, {}}; }
Gate gcc(GateKind k, Site s, std::string bit) {
  return Gate{k, {s}, {std::move(bit)}};
}

class Builder {
 public:
  Builder(int width, int length) {
    b_.circuit.width = width;
    b_.circuit.length = length;
  }

  int boundary() const { return static_cast<int>(b_.circuit.timesteps.size()); }

  void step(std::vector<Gate> gates) {
    b_.circuit.timesteps.push_back(std::move(gates));
  }

  void declare_bit(std::string name) {
    b_.circuit.classical_bits.push_back(std::move(name));
  }

  void relocate(std::vector<std::pair<Site, Site>> moves) {
    if (moves.empty()) return;
    std::set<Site> from, to;
    for (const auto& [a, b] : moves) {
      from.insert(a);
      to.insert(b);
    }
    if (from != to || from.size() != moves.size())
      throw CircuitError("relocation moves must form a permutation of sites");
    b_.meta.relocations.push_back({boundary(), std::move(moves)});
  }

  void read(std::string id, const std::array<Site, 7>& sites) {
    b_.meta.reads.push_back({boundary(), sites, std::move(id)});
  }

  void refresh(std::vector<Site> sites, RefreshKind kind) {
    b_.meta.refreshes.push_back({boundary(), std::move(sites), kind});
  }

  void indicator(std::string a, std::string b,
                 const std::array<std::string, 7>& out, bool parity_fix) {
    b_.meta.indicators.push_back(
        {boundary(), std::move(a), std::move(b), out, parity_fix});
  }

  void epr(Site a, Site b) { b_.meta.epr_pairs.push_back({a, b}); }

  CircuitBundle finish() {
    check_well_formed(b_.circuit);
    return std::move(b_);
  }

 private:
  CircuitBundle b_;
};

// Generator-matrix encoder for the logical zero: H on the pivot qubits
// {0,1,3}, then a CNOT from each pivot onto every other qubit its generator
// column supports. Non-adjacent pairs are brought together by swapping the
// control's contents into the site next to the target; qubits are restored
// to home order afterwards.
void emit_zero_prep(Builder& b, int row, int base) {
  constexpr int pivots[3] = {0, 1, 3};
  constexpr std::pair<int, int> cnots[9] = {{0, 2}, {0, 4}, {0, 6},
                                            {1, 2}, {1, 5}, {1, 6},
                                            {3, 4}, {3, 5}, {3, 6}};
  std::array<int, 7> col;  // current column offset of each qubit
  std::array<int, 7> occ;  // qubit occupying each column offset
  for (int q = 0; q < 7; ++q) col[q] = occ[q] = q;

  std::vector<Gate> hs;
  for (int p : pivots) hs.push_back(g1(GateKind::H, {row, base + p}));
  b.step(std::move(hs));

  for (const auto& [cq, tq] : cnots) {
    if (std::abs(col[cq] - col[tq]) != 1) {
      int dest = col[tq] > 0 ? col[tq] - 1 : col[tq] + 1;
      int other = occ[dest];
      b.relocate({{{row, base + col[cq]}, {row, base + dest}},
                  {{row, base + dest}, {row, base + col[cq]}}});
      std::swap(occ[col[cq]], occ[dest]);
      std::swap(col[cq], col[other]);
    }
    b.step({g2(GateKind::CNOT, {row, base + col[cq]}, {row, base + col[tq]})});
  }

  std::vector<std::pair<Site, Site>> home;
  for (int q = 0; q < 7; ++q)
    if (col[q] != q) home.push_back({{row, base + col[q]}, {row, base + q}});
  b.relocate(std::move(home));
}

std::array<Site, 7> word_sites(int row, int base, int stride) {
  std::array<Site, 7> s{};
  for (int q = 0; q < 7; ++q) s[q] = {row, base + stride * q};
  return s;
}

std::array<std::string, 7> bit_names(const std::string& prefix) {
  std::array<std::string, 7> out;
  for (int q = 0; q < 7; ++q) out[q] = prefix + std::to_string(q);
  return out;
}

std::vector<Site> to_vector(const std::array<Site, 7>& a) {
  return std::vector<Site>(a.begin(), a.end());
}

}  // namespace

LogicalSwapResult expand_logical_swap(int word_len) {
  if (word_len < 1)
    throw UnsupportedExpansion("expand_logical_swap: word_len must be >= 1");
  const int w = word_len;
  Builder b(1, 2 * w);
  LogicalSwapResult r;

  // Interleave: walk each right-word qubit left past the remaining left-word
  // qubits, producing a0 b0 a1 b1 ... in w(w-1)/2 adjacent swaps.
  std::vector<std::pair<int, int>> interleave;
  for (int i = 0; i < w; ++i)
    for (int c = w + i; c > 2 * i + 1; --c) interleave.push_back({c - 1, c});
  for (const auto& [x, y] : interleave)
    b.step({g2(GateKind::SWAP, {0, x}, {0, y})});
  r.interleave_swaps = static_cast<int>(interleave.size());

  std::vector<Gate> transversal;
  for (int i = 0; i < w; ++i)
    transversal.push_back(g2(GateKind::SWAP, {0, 2 * i}, {0, 2 * i + 1}));
  b.step(std::move(transversal));
  r.transversal_swaps = w;

  for (auto it = interleave.rbegin(); it != interleave.rend(); ++it)
    b.step({g2(GateKind::SWAP, {0, it->first}, {0, it->second})});
  r.undo_swaps = static_cast<int>(interleave.size());

  r.bundle = b.finish();
  return r;
}

CircuitBundle expand_zero_prep() {
  Builder b(1, 7);
  emit_zero_prep(b, 0, 0);
  return b.finish();
}

CircuitBundle expand_zero_prep_strict_nn() {
  Builder b(1, 7);
  b.step({g1(GateKind::H, {0, 0}), g1(GateKind::H, {0, 2}),
          g1(GateKind::H, {0, 4})});
  constexpr std::pair<int, int> cnots[12] = {{4, 5}, {2, 3}, {3, 4}, {4, 3},
                                             {0, 1}, {1, 2}, {2, 1}, {5, 6},
                                             {2, 3}, {3, 4}, {4, 5}, {3, 4}};
  for (const auto& [c, t] : cnots)
    b.step({g2(GateKind::CNOT, {0, c}, {0, t})});
  return b.finish();
}

namespace {

// Shared layout of the interleaved correction rows: data word on even
// columns, ancilla word on odd columns.
std::array<Site, 7> evens(int row) { return word_sites(row, 0, 2); }
std::array<Site, 7> odds(int row) { return word_sites(row, 1, 2); }

CircuitBundle expand_ec_minimal() {
  Builder b(1, 27);
  auto fx = bit_names("fx");
  auto fz = bit_names("fz");
  for (const auto& n : fx) b.declare_bit(n);
  for (const auto& n : fz) b.declare_bit(n);

  const auto data = evens(0);
  const auto zero = odds(0);

  // Interleave the first zero word with the data word.
  std::vector<std::pair<Site, Site>> in;
  for (int q = 1; q < 7; ++q) in.push_back({{0, q}, {0, 2 * q}});
  for (int q = 0; q < 7; ++q) in.push_back({{0, 7 + q}, {0, 2 * q + 1}});
  b.relocate(std::move(in));

  auto h_word = [&](const std::array<Site, 7>& w) {
    std::vector<Gate> g;
    for (const Site& s : w) g.push_back(g1(GateKind::H, s));
    b.step(std::move(g));
  };
  auto cnot_word = [&](const std::array<Site, 7>& c,
                       const std::array<Site, 7>& t) {
    std::vector<Gate> g;
    for (int q = 0; q < 7; ++q) g.push_back(g2(GateKind::CNOT, c[q], t[q]));
    b.step(std::move(g));
  };
  auto cc_word = [&](GateKind k, const std::array<Site, 7>& w,
                     const std::array<std::string, 7>& bits) {
    std::vector<Gate> g;
    for (int q = 0; q < 7; ++q) g.push_back(gcc(k, w[q], bits[q]));
    b.step(std::move(g));
  };

  // Bit-flip syndrome, twice: zero word to |+> basis, copy data onto it,
  // read out. Agreement between the rounds gates the recovery.
  for (int round = 0; round < 2; ++round) {
    b.refresh(to_vector(zero), RefreshKind::LOGICAL_ZERO_WORD);
    h_word(zero);
    cnot_word(data, zero);
    b.read(round == 0 ? "sx1" : "sx2", zero);
  }
  b.indicator("sx1", "sx2", fx, false);
  cc_word(GateKind::CC_X, data, fx);

  // Swap in the second zero word for the phase-flip rounds.
  std::vector<std::pair<Site, Site>> swap_words;
  for (int q = 0; q < 7; ++q) {
    swap_words.push_back({{0, 2 * q + 1}, {0, 14 + q}});
    swap_words.push_back({{0, 14 + q}, {0, 2 * q + 1}});
  }
  b.relocate(std::move(swap_words));

  for (int round = 0; round < 2; ++round) {
    b.refresh(to_vector(zero), RefreshKind::LOGICAL_ZERO_WORD);
    cnot_word(zero, data);
    h_word(zero);
    b.read(round == 0 ? "sz1" : "sz2", zero);
  }
  b.indicator("sz1", "sz2", fz, false);
  cc_word(GateKind::CC_Z, data, fz);

  // Restore the home arrangement.
  std::vector<std::pair<Site, Site>> out;
  for (int q = 1; q < 7; ++q) out.push_back({{0, 2 * q}, {0, q}});
  for (int q = 0; q < 7; ++q) {
    out.push_back({{0, 2 * q + 1}, {0, 14 + q}});
    out.push_back({{0, 14 + q}, {0, 7 + q}});
  }
  b.relocate(std::move(out));
  return b.finish();
}

CircuitBundle expand_ec_with_prep() {
  Builder b(2, 46);
  auto fx = bit_names("fx");
  auto fz = bit_names("fz");
  std::array<std::array<std::string, 7>, 4> pf;
  for (int r = 0; r < 4; ++r) {
    pf[r] = bit_names("pf" + std::to_string(r) + "_");
    for (const auto& n : pf[r]) b.declare_bit(n);
  }
  for (const auto& n : fx) b.declare_bit(n);
  for (const auto& n : fz) b.declare_bit(n);

  const auto data = evens(0);
  const auto keeper = evens(1);
  const auto raw = odds(1);
  const auto staging = word_sites(1, 14, 1);
  const int stage_base = 14;

  // Interleave the data word with the (idle) qubits of the next row-0 slots
  // so the keeper word beneath lines up column-wise.
  std::vector<std::pair<Site, Site>> in;
  for (int q = 1; q < 7; ++q) in.push_back({{0, q}, {0, 2 * q}});
  for (int q = 0; q < 7; ++q) in.push_back({{0, 7 + q}, {0, 2 * q + 1}});
  b.relocate(std::move(in));

  auto h_word = [&](const std::array<Site, 7>& w) {
    std::vector<Gate> g;
    for (const Site& s : w) g.push_back(g1(GateKind::H, s));
    b.step(std::move(g));
  };
  auto cnot_word = [&](const std::array<Site, 7>& c,
                       const std::array<Site, 7>& t) {
    std::vector<Gate> g;
    for (int q = 0; q < 7; ++q) g.push_back(g2(GateKind::CNOT, c[q], t[q]));
    b.step(std::move(g));
  };
  auto cc_word = [&](GateKind k, const std::array<Site, 7>& w,
                     const std::array<std::string, 7>& bits) {
    std::vector<Gate> g;
    for (int q = 0; q < 7; ++q) g.push_back(gcc(k, w[q], bits[q]));
    b.step(std::move(g));
  };
  // Prepare a fresh zero at the staging columns, then swap it into dest.
  auto prep_into = [&](const std::array<Site, 7>& dest) {
    b.refresh(to_vector(staging), RefreshKind::PHYSICAL_ZERO);
    emit_zero_prep(b, 1, stage_base);
    std::vector<std::pair<Site, Site>> mv;
    for (int q = 0; q < 7; ++q) {
      mv.push_back({staging[q], dest[q]});
      mv.push_back({dest[q], staging[q]});
    }
    b.relocate(std::move(mv));
  };

  for (int r = 0; r < 4; ++r) {
    // Build the round's zero word and screen it for bit flips against two
    // further fresh zeros; agreement plus the word parity drive the fix.
    prep_into(keeper);
    std::string ra = "scr" + std::to_string(r) + "a";
    std::string rb = "scr" + std::to_string(r) + "b";
    for (const std::string& id : {ra, rb}) {
      prep_into(raw);
      cnot_word(keeper, raw);
      b.read(id, raw);
    }
    b.indicator(ra, rb, pf[r], true);
    cc_word(GateKind::CC_X, keeper, pf[r]);

    if (r < 2) {
      h_word(keeper);
      cnot_word(data, keeper);
      b.read(r == 0 ? "sx1" : "sx2", keeper);
    } else {
      cnot_word(keeper, data);
      h_word(keeper);
      b.read(r == 2 ? "sz1" : "sz2", keeper);
    }
    if (r == 1) {
      b.indicator("sx1", "sx2", fx, false);
      cc_word(GateKind::CC_X, data, fx);
    }
    if (r == 3) {
      b.indicator("sz1", "sz2", fz, false);
      cc_word(GateKind::CC_Z, data, fz);
    }
  }

  std::vector<std::pair<Site, Site>> out;
  for (int q = 1; q < 7; ++q) out.push_back({{0, 2 * q}, {0, q}});
  for (int q = 0; q < 7; ++q) out.push_back({{0, 2 * q + 1}, {0, 7 + q}});
  b.relocate(std::move(out));
  return b.finish();
}

}  // namespace

CircuitBundle expand_ec_block(BlockVariant variant, CommModel model) {
  if (model != CommModel::FREE)
    throw UnsupportedExpansion(
        std::string("expand_ec_block: no explicit expansion for the ") +
        cost_model::to_string(model) +
        " model; counts come from the cost model");
  return variant == BlockVariant::MINIMAL_27 ? expand_ec_minimal()
                                             : expand_ec_with_prep();
}

CircuitBundle expand_remote_cnot_gadget() {
  Builder b(1, 4);
  b.declare_bit("m1");
  b.declare_bit("m2");
  b.epr({0, 1}, {0, 2});
  b.step({g2(GateKind::CNOT, {0, 0}, {0, 1})});
  b.step({gcc(GateKind::MEASURE_Z, {0, 1}, "m1")});
  b.step({gcc(GateKind::CC_X, {0, 2}, "m1")});
  b.step({g2(GateKind::CNOT, {0, 2}, {0, 3})});
  b.step({g1(GateKind::H, {0, 2})});
  b.step({gcc(GateKind::MEASURE_Z, {0, 2}, "m2")});
  b.step({gcc(GateKind::CC_Z, {0, 0}, "m2")});
  return b.finish();
}

CnotRowsResult expand_logical_cnot_rows(BlockVariant variant) {
  const int bl = variant == BlockVariant::MINIMAL_27 ? 27 : 46;
  Builder b(2, 2 * bl);
  CnotRowsResult r;
  long swaps = 0;

  // Drop the second block's data word to the spare row.
  std::vector<Gate> down;
  for (int q = 0; q < 7; ++q)
    down.push_back(g2(GateKind::SWAP, {0, bl + q}, {1, bl + q}));
  b.step(std::move(down));
  swaps += 7;

  // Slide it under the first block's data word, one qubit at a time.
  for (int q = 0; q < 7; ++q)
    for (int c = bl + q; c > q; --c) {
      b.step({g2(GateKind::SWAP, {1, c}, {1, c - 1})});
      ++swaps;
    }

  std::vector<Gate> interact;
  for (int q = 0; q < 7; ++q)
    interact.push_back(g2(GateKind::CNOT, {0, q}, {1, q}));
  b.step(std::move(interact));

  // Return trip.
  for (int q = 6; q >= 0; --q)
    for (int c = q; c < bl + q; ++c) {
      b.step({g2(GateKind::SWAP, {1, c}, {1, c + 1})});
      ++swaps;
    }
  std::vector<Gate> up;
  for (int q = 0; q < 7; ++q)
    up.push_back(g2(GateKind::SWAP, {1, bl + q}, {0, bl + q}));
  b.step(std::move(up));
  swaps += 7;

  r.bundle = b.finish();
  r.swap_count = swaps;
  r.cnot_count = 7;
  r.per_argument = swaps / 2 + r.cnot_count;
  r.reference_total =
      cost_model::unitary_count(CommModel::SWAP, variant).total();
  r.matches_reference = r.per_argument == r.reference_total;
  return r;
}

}  // namespace qstripe::expander
