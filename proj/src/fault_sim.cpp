#include "qstripe/fault_sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "qstripe/expander.hpp"
#include "qstripe/steane.hpp"

namespace qstripe::fault_sim {

const char* to_string(Scenario s) {
  return s == Scenario::EC_ONLY ? "ec-only" : "cnot-ec";
}

namespace {

uint64_t mix64(uint64_t v) {
  v = (v ^ (v >> 30)) * 0xBF58476D1CE4E5B9ULL;
  v = (v ^ (v >> 27)) * 0x94D049BB133111EBULL;
  return v ^ (v >> 31);
}

struct SplitMix64 {
  uint64_t s = 0;
  uint64_t next() {
    s += 0x9E3779B97F4A7C15ULL;
    return mix64(s);
  }
  double uniform() { return double(next() >> 11) * 0x1.0p-53; }
};

// Trial streams depend only on (seed, trial), never on thread layout.
SplitMix64 trial_stream(uint64_t seed, uint64_t trial) {
  return SplitMix64{mix64(seed + mix64(trial + 0xD1B54A32D192ED03ULL))};
}

constexpr std::array<int, 8> default_decode = {-1, 0, 1, 2, 3, 4, 5, 6};

bool faultable(GateKind k) {
  switch (k) {
    case GateKind::H:
    case GateKind::CNOT:
    case GateKind::SWAP:
    case GateKind::CC_X:
    case GateKind::CC_Z:
      return true;
    default:
      return false;
  }
}

struct Op {
  enum class Tag { GATE, READ, INDICATOR, RELOCATE, REFRESH } tag = Tag::GATE;
  // GATE
  GateKind kind = GateKind::H;
  int a = -1, b = -1;
  int loc = -1;  // fault-location ordinal, -1 when not faultable
  std::vector<int> controls;
  // READ
  int word = -1;
  std::array<int, 7> sites7{};
  // INDICATOR
  int wa = -1, wb = -1;
  std::array<int, 7> out7{};
  bool parity_fix = false;
  // RELOCATE / REFRESH
  std::vector<std::pair<int, int>> moves;
  std::vector<int> rsites;
};

struct Program {
  int length = 0;
  int n_sites = 0;
  size_t max_moves = 0;
  std::vector<Op> ops;
  std::vector<GateLocation> locations;
  std::vector<std::array<int, 7>> words;
  std::vector<std::string> bit_names;
  std::vector<std::string> word_names;
};

Program compile(const ScenarioCircuit& sc) {
  const Circuit& c = sc.bundle.circuit;
  const SimMeta& m = sc.bundle.meta;
  check_well_formed(c);

  Program p;
  p.length = c.length;
  p.n_sites = c.width * c.length;
  p.bit_names = c.classical_bits;

  std::unordered_map<std::string, int> bit_ix;
  for (size_t i = 0; i < c.classical_bits.size(); ++i)
    bit_ix[c.classical_bits[i]] = int(i);
  auto site_ix = [&](const Site& s) {
    if (s.row < 0 || s.row >= c.width || s.column < 0 || s.column >= c.length)
      throw CircuitError("event site out of bounds");
    return s.row * c.length + s.column;
  };

  std::unordered_map<std::string, int> word_ix;
  for (const ReadEvent& e : m.reads) {
    if (!word_ix.emplace(e.id, int(p.word_names.size())).second)
      throw CircuitError("duplicate read id \"" + e.id + "\"");
    p.word_names.push_back(e.id);
  }

  const int T = int(c.timesteps.size());
  auto check_boundary = [&](int bt) {
    if (bt < 0 || bt > T) throw CircuitError("event boundary out of range");
  };
  for (const auto& e : m.reads) check_boundary(e.before_timestep);
  for (const auto& e : m.indicators) check_boundary(e.before_timestep);
  for (const auto& e : m.relocations) check_boundary(e.before_timestep);
  for (const auto& e : m.refreshes) check_boundary(e.before_timestep);
  for (const auto& pr : m.epr_pairs) {
    site_ix(pr.a);
    site_ix(pr.b);
  }

  for (int t = 0; t <= T; ++t) {
    for (const ReadEvent& e : m.reads) {
      if (e.before_timestep != t) continue;
      Op op;
      op.tag = Op::Tag::READ;
      op.word = word_ix.at(e.id);
      for (int q = 0; q < 7; ++q) op.sites7[q] = site_ix(e.sites[q]);
      p.ops.push_back(std::move(op));
    }
    for (const IndicatorEvent& e : m.indicators) {
      if (e.before_timestep != t) continue;
      Op op;
      op.tag = Op::Tag::INDICATOR;
      auto wa = word_ix.find(e.read_a), wb = word_ix.find(e.read_b);
      if (wa == word_ix.end() || wb == word_ix.end())
        throw CircuitError("indicator references unknown read id");
      op.wa = wa->second;
      op.wb = wb->second;
      for (int q = 0; q < 7; ++q) {
        auto it = bit_ix.find(e.out_bits[q]);
        if (it == bit_ix.end())
          throw CircuitError("indicator output bit \"" + e.out_bits[q] +
                             "\" not declared");
        op.out7[q] = it->second;
      }
      op.parity_fix = e.parity_fix;
      p.ops.push_back(std::move(op));
    }
    for (const RelocationEvent& e : m.relocations) {
      if (e.before_timestep != t) continue;
      Op op;
      op.tag = Op::Tag::RELOCATE;
      std::set<int> from, to;
      for (const auto& [src, dst] : e.moves) {
        int fi = site_ix(src), ti = site_ix(dst);
        from.insert(fi);
        to.insert(ti);
        op.moves.push_back({fi, ti});
      }
      if (from != to || from.size() != e.moves.size())
        throw CircuitError("relocation moves must form a permutation of sites");
      p.max_moves = std::max(p.max_moves, op.moves.size());
      p.ops.push_back(std::move(op));
    }
    for (const RefreshEvent& e : m.refreshes) {
      if (e.before_timestep != t) continue;
      if (e.kind == RefreshKind::LOGICAL_ZERO_WORD && e.sites.size() != 7)
        throw CircuitError("logical zero refresh takes exactly 7 sites");
      Op op;
      op.tag = Op::Tag::REFRESH;
      for (const Site& s : e.sites) op.rsites.push_back(site_ix(s));
      p.ops.push_back(std::move(op));
    }
    if (t == T) break;
    for (size_t g = 0; g < c.timesteps[t].size(); ++g) {
      const Gate& gate = c.timesteps[t][g];
      if (gate.kind == GateKind::REMOTE_CNOT)
        throw CircuitError(
            "REMOTE_CNOT is composite; expand it before simulation");
      Op op;
      op.tag = Op::Tag::GATE;
      op.kind = gate.kind;
      op.a = site_ix(gate.targets[0]);
      if (gate.targets.size() == 2) op.b = site_ix(gate.targets[1]);
      if (gate.kind == GateKind::MEASURE_Z &&
          gate.classical_controls.size() != 1)
        throw CircuitError("MEASURE_Z needs exactly one result bit");
      for (const std::string& bit : gate.classical_controls)
        op.controls.push_back(bit_ix.at(bit));
      if (faultable(gate.kind)) {
        op.loc = int(p.locations.size());
        p.locations.push_back({t, int(g), int(gate.targets.size())});
      }
      p.ops.push_back(std::move(op));
    }
  }

  for (const auto& w : sc.data_words) {
    std::array<int, 7> ix{};
    for (int q = 0; q < 7; ++q) ix[q] = site_ix(w[q]);
    p.words.push_back(ix);
  }
  return p;
}

struct RunState {
  std::vector<uint8_t> x, z, bits, words, scratch;

  explicit RunState(const Program& p)
      : x(p.n_sites),
        z(p.n_sites),
        bits(p.bit_names.size()),
        words(p.word_names.size()),
        scratch(2 * p.max_moves) {}

  void reset() {
    std::fill(x.begin(), x.end(), uint8_t(0));
    std::fill(z.begin(), z.end(), uint8_t(0));
    std::fill(bits.begin(), bits.end(), uint8_t(0));
    std::fill(words.begin(), words.end(), uint8_t(0));
  }
};

uint8_t word_syndrome(uint8_t w) {
  uint8_t s = 0;
  for (int i = 0; i < 3; ++i)
    s |= uint8_t(steane::parity(w & steane::stabilizer_masks[i]) << i);
  return s;
}

void apply_pauli(RunState& st, const Op& op, uint8_t pauli) {
  if (pauli & 1) st.x[op.a] ^= 1;
  if (pauli & 2) st.z[op.a] ^= 1;
  if (op.b >= 0) {
    if (pauli & 4) st.x[op.b] ^= 1;
    if (pauli & 8) st.z[op.b] ^= 1;
  }
}

// rng == nullptr: apply fault_pauli after the gate at ordinal fault_loc.
// rng != nullptr: every faultable gate draws; a draw below epsilon applies a
// uniform nontrivial Pauli. Draws happen whether or not a fault fires, so
// the stream consumed per trial has fixed length.
void run(const Program& p, RunState& st, int fault_loc, uint8_t fault_pauli,
         const std::array<int, 8>& decode, SplitMix64* rng, double epsilon) {
  for (const Op& op : p.ops) {
    switch (op.tag) {
      case Op::Tag::GATE: {
        switch (op.kind) {
          case GateKind::H:
            std::swap(st.x[op.a], st.z[op.a]);
            break;
          case GateKind::CNOT:
            st.x[op.b] ^= st.x[op.a];
            st.z[op.a] ^= st.z[op.b];
            break;
          case GateKind::SWAP:
            std::swap(st.x[op.a], st.x[op.b]);
            std::swap(st.z[op.a], st.z[op.b]);
            break;
          case GateKind::CC_X: {
            uint8_t f = 0;
            for (int bi : op.controls) f ^= st.bits[bi];
            st.x[op.a] ^= f;
            break;
          }
          case GateKind::CC_Z: {
            uint8_t f = 0;
            for (int bi : op.controls) f ^= st.bits[bi];
            st.z[op.a] ^= f;
            break;
          }
          case GateKind::MEASURE_Z:
            st.bits[op.controls[0]] = st.x[op.a];
            st.z[op.a] = 0;
            break;
          case GateKind::PREP_ZERO:
            st.x[op.a] = 0;
            st.z[op.a] = 0;
            break;
          case GateKind::PAULI_X:
          case GateKind::PAULI_Z:
          case GateKind::REMOTE_CNOT:
            break;
        }
        if (op.loc >= 0) {
          if (rng) {
            double u = rng->uniform();
            uint64_t pick = rng->next();
            if (u < epsilon) {
              uint8_t pl = op.b >= 0 ? uint8_t(1 + pick % 15)
                                     : uint8_t(1 + pick % 3);
              apply_pauli(st, op, pl);
            }
          } else if (op.loc == fault_loc) {
            apply_pauli(st, op, fault_pauli);
          }
        }
        break;
      }
      case Op::Tag::READ: {
        uint8_t w = 0;
        for (int q = 0; q < 7; ++q) {
          w |= uint8_t(st.x[op.sites7[q]] << q);
          st.x[op.sites7[q]] = 0;
          st.z[op.sites7[q]] = 0;
        }
        st.words[op.word] = w;
        break;
      }
      case Op::Tag::INDICATOR: {
        uint8_t a = st.words[op.wa], b = st.words[op.wb];
        uint8_t sa = word_syndrome(a), sb = word_syndrome(b);
        if (op.parity_fix) {
          int pa = steane::parity(a), pb = steane::parity(b);
          if (sa == sb && pa == pb) {
            int qs = sa ? decode[sa] : -1;
            uint8_t flip = uint8_t(pa ^ (sa ? 1 : 0));
            for (int q = 0; q < 7; ++q)
              st.bits[op.out7[q]] = uint8_t(uint8_t(q == qs ? 1 : 0) ^ flip);
          }
        } else if (sa == sb && sa != 0) {
          int qs = decode[sa];
          if (qs >= 0) st.bits[op.out7[qs]] = 1;
        }
        break;
      }
      case Op::Tag::RELOCATE: {
        const size_t n = op.moves.size();
        for (size_t i = 0; i < n; ++i) {
          st.scratch[i] = st.x[op.moves[i].first];
          st.scratch[n + i] = st.z[op.moves[i].first];
        }
        for (size_t i = 0; i < n; ++i) {
          st.x[op.moves[i].second] = st.scratch[i];
          st.z[op.moves[i].second] = st.scratch[n + i];
        }
        break;
      }
      case Op::Tag::REFRESH:
        for (int s : op.rsites) {
          st.x[s] = 0;
          st.z[s] = 0;
        }
        break;
    }
  }
}

WordResidual word_residual(const RunState& st, const std::array<int, 7>& w) {
  WordResidual r;
  for (int q = 0; q < 7; ++q) {
    r.x |= uint8_t(st.x[w[q]] << q);
    r.z |= uint8_t(st.z[w[q]] << q);
  }
  return r;
}

bool trial_failed(const Program& p, const RunState& st) {
  for (const auto& w : p.words)
    if (word_failure(word_residual(st, w))) return true;
  return false;
}

void inject(const Program& p, RunState& st,
            const std::vector<PauliInjection>& initial) {
  for (const PauliInjection& inj : initial) {
    int idx = inj.site.row * p.length + inj.site.column;
    if (inj.site.row < 0 || inj.site.column < 0 || inj.site.column >= p.length ||
        idx >= p.n_sites)
      throw std::invalid_argument("injection site out of bounds");
    st.x[idx] ^= uint8_t(inj.x);
    st.z[idx] ^= uint8_t(inj.z);
  }
}

std::array<Site, 7> home_word(int row, int base) {
  std::array<Site, 7> w{};
  for (int q = 0; q < 7; ++q) w[q] = {row, base + q};
  return w;
}

// Append a single-row bundle at a column offset, shifting event boundaries
// past the host's current end and prefixing every classical name.
void append_translated(CircuitBundle& host, const CircuitBundle& add,
                       int col_off, const std::string& prefix) {
  const int t0 = int(host.circuit.timesteps.size());
  auto shift = [&](Site s) { return Site{s.row, s.column + col_off}; };

  for (const std::string& bit : add.circuit.classical_bits)
    host.circuit.classical_bits.push_back(prefix + bit);
  for (const auto& ts : add.circuit.timesteps) {
    std::vector<Gate> gs;
    for (Gate g : ts) {
      for (Site& s : g.targets) s = shift(s);
      for (std::string& bit : g.classical_controls) bit = prefix + bit;
      gs.push_back(std::move(g));
    }
    host.circuit.timesteps.push_back(std::move(gs));
  }
  for (RelocationEvent e : add.meta.relocations) {
    e.before_timestep += t0;
    for (auto& mv : e.moves) mv = {shift(mv.first), shift(mv.second)};
    host.meta.relocations.push_back(std::move(e));
  }
  for (ReadEvent e : add.meta.reads) {
    e.before_timestep += t0;
    for (Site& s : e.sites) s = shift(s);
    e.id = prefix + e.id;
    host.meta.reads.push_back(std::move(e));
  }
  for (RefreshEvent e : add.meta.refreshes) {
    e.before_timestep += t0;
    for (Site& s : e.sites) s = shift(s);
    host.meta.refreshes.push_back(std::move(e));
  }
  for (IndicatorEvent e : add.meta.indicators) {
    e.before_timestep += t0;
    e.read_a = prefix + e.read_a;
    e.read_b = prefix + e.read_b;
    for (std::string& bit : e.out_bits) bit = prefix + bit;
    host.meta.indicators.push_back(std::move(e));
  }
  for (EprPair pr : add.meta.epr_pairs) {
    pr.a = shift(pr.a);
    pr.b = shift(pr.b);
    host.meta.epr_pairs.push_back(pr);
  }
}

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  if (const char* env = std::getenv("QSTRIPE_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? int(hc) : 1;
}

}  // namespace

std::vector<GateLocation> fault_locations(const Circuit& c) {
  std::vector<GateLocation> out;
  for (size_t t = 0; t < c.timesteps.size(); ++t)
    for (size_t g = 0; g < c.timesteps[t].size(); ++g)
      if (faultable(c.timesteps[t][g].kind))
        out.push_back(
            {int(t), int(g), int(c.timesteps[t][g].targets.size())});
  return out;
}

ScenarioCircuit build_scenario(Scenario s) {
  using cost_model::BlockVariant;
  if (s == Scenario::EC_ONLY) {
    ScenarioCircuit sc;
    sc.bundle = expander::expand_ec_block(BlockVariant::MINIMAL_27);
    sc.data_words.push_back(home_word(0, 0));
    return sc;
  }

  // Two level-1 blocks side by side; the second data word rides the spare
  // row to sit under the first for the transversal CNOT, then each block
  // runs one round of error correction.
  CircuitBundle b;
  b.circuit.width = 2;
  b.circuit.length = 54;
  std::vector<std::pair<Site, Site>> swap_down;
  for (int q = 0; q < 7; ++q) {
    swap_down.push_back({{0, 27 + q}, {1, q}});
    swap_down.push_back({{1, q}, {0, 27 + q}});
  }
  b.meta.relocations.push_back({0, swap_down});
  std::vector<Gate> cnots;
  for (int q = 0; q < 7; ++q)
    cnots.push_back({GateKind::CNOT, {{0, q}, {1, q}}, {}});
  b.circuit.timesteps.push_back(std::move(cnots));
  b.meta.relocations.push_back({1, swap_down});

  const CircuitBundle ec =
      expander::expand_ec_block(BlockVariant::MINIMAL_27);
  append_translated(b, ec, 0, "a.");
  append_translated(b, ec, 27, "b.");
  check_well_formed(b.circuit);

  ScenarioCircuit sc;
  sc.bundle = std::move(b);
  sc.data_words.push_back(home_word(0, 0));
  sc.data_words.push_back(home_word(0, 27));
  return sc;
}

bool word_failure(const WordResidual& r) {
  auto bad = [](uint8_t e) {
    uint8_t syn = word_syndrome(e);
    if (auto q = steane::decode_syndrome(syn)) e ^= uint8_t(1u << *q);
    return steane::parity(e) != 0;
  };
  return bad(r.x) || bad(r.z);
}

bool any_failure(const PropagateResult& r) {
  return std::any_of(r.residuals.begin(), r.residuals.end(),
                     [](const WordResidual& w) { return word_failure(w); });
}

PropagateResult propagate(const ScenarioCircuit& sc,
                          const PropagateOptions& opts) {
  Program p = compile(sc);
  RunState st(p);
  st.reset();
  inject(p, st, opts.initial);

  int floc = -1;
  uint8_t fp = 0;
  if (opts.fault) {
    for (size_t i = 0; i < p.locations.size(); ++i)
      if (p.locations[i].timestep == opts.fault->timestep &&
          p.locations[i].gate_index == opts.fault->gate_index) {
        floc = int(i);
        break;
      }
    if (floc < 0)
      throw std::invalid_argument(
          "propagate: fault location does not name a faultable gate");
    fp = opts.fault->pauli;
  }
  const std::array<int, 8> decode =
      opts.indicator_decode.value_or(default_decode);
  run(p, st, floc, fp, decode, nullptr, 0.0);

  PropagateResult out;
  for (const auto& w : p.words) out.residuals.push_back(word_residual(st, w));
  for (int i = 0; i < p.n_sites; ++i)
    if (st.x[i] || st.z[i])
      out.frame.push_back({Site{i / p.length, i % p.length}, st.x[i] != 0,
                           st.z[i] != 0});
  for (size_t i = 0; i < p.word_names.size(); ++i)
    out.read_words[p.word_names[i]] = st.words[i];
  for (size_t i = 0; i < p.bit_names.size(); ++i)
    out.bits[p.bit_names[i]] = st.bits[i];
  return out;
}

ExhaustiveResult exhaustive_single_fault(const ScenarioCircuit& sc,
                                         const PropagateOptions& base) {
  Program p = compile(sc);
  RunState st(p);
  const std::array<int, 8> decode =
      base.indicator_decode.value_or(default_decode);

  ExhaustiveResult out;
  for (size_t l = 0; l < p.locations.size(); ++l) {
    const int n_pauli = p.locations[l].arity == 2 ? 15 : 3;
    for (int pl = 1; pl <= n_pauli; ++pl) {
      ++out.cases;
      st.reset();
      inject(p, st, base.initial);
      run(p, st, int(l), uint8_t(pl), decode, nullptr, 0.0);
      if (trial_failed(p, st))
        out.failures.push_back({p.locations[l].timestep,
                                p.locations[l].gate_index, uint8_t(pl)});
    }
  }
  return out;
}

MonteCarloResult monte_carlo_p1(const ScenarioCircuit& sc, double epsilon,
                                long trials, uint64_t seed, int threads) {
  if (trials <= 0)
    throw std::invalid_argument("monte_carlo_p1: trials must be positive");
  if (!(epsilon >= 0.0 && epsilon <= 1.0))
    throw std::invalid_argument("monte_carlo_p1: epsilon must lie in [0, 1]");

  Program p = compile(sc);
  int nt = resolve_threads(threads);
  if (long(nt) > trials) nt = int(trials);

  std::vector<long> fails(nt, 0);
  auto worker = [&](int ti, long lo, long hi) {
    RunState st(p);
    long f = 0;
    for (long t = lo; t < hi; ++t) {
      st.reset();
      SplitMix64 rng = trial_stream(seed, uint64_t(t));
      run(p, st, -1, 0, default_decode, &rng, epsilon);
      if (trial_failed(p, st)) ++f;
    }
    fails[ti] = f;
  };

  if (nt == 1) {
    worker(0, 0, trials);
  } else {
    std::vector<std::thread> pool;
    const long base = trials / nt, rem = trials % nt;
    long lo = 0;
    for (int i = 0; i < nt; ++i) {
      long hi = lo + base + (i < rem ? 1 : 0);
      pool.emplace_back(worker, i, lo, hi);
      lo = hi;
    }
    for (auto& th : pool) th.join();
  }

  MonteCarloResult r;
  r.epsilon = epsilon;
  r.trials = trials;
  r.locations = long(p.locations.size());
  for (long f : fails) r.failures += f;

  const double n = double(trials), f = double(r.failures);
  const double z = 1.96, z2 = z * z;
  const double phat = f / n;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2.0 * n)) / denom;
  const double half =
      z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
  r.p_fail = phat;
  r.ci_low = std::max(0.0, center - half);
  r.ci_high = std::min(1.0, center + half);
  return r;
}

ScalingFit scaling_fit(const std::vector<MonteCarloResult>& points) {
  ScalingFit fit;
  std::vector<double> xs, ys;
  char buf[160];
  for (const MonteCarloResult& pt : points) {
    if (pt.trials <= 0 || pt.epsilon <= 0.0) {
      std::snprintf(buf, sizeof buf,
                    "point at epsilon %.6g skipped: no trials", pt.epsilon);
      fit.warnings.push_back(buf);
      continue;
    }
    if (pt.failures <= 0) {
      std::snprintf(buf, sizeof buf,
                    "point at epsilon %.6g skipped: no failures in %ld trials",
                    pt.epsilon, pt.trials);
      fit.warnings.push_back(buf);
      continue;
    }
    xs.push_back(std::log(pt.epsilon));
    ys.push_back(std::log(double(pt.failures) / double(pt.trials)));
  }
  if (xs.size() < 3)
    throw std::invalid_argument(
        "scaling_fit: need at least three points with observed failures");

  const double n = double(xs.size());
  double mx = 0, my = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0.0)
    throw std::invalid_argument("scaling_fit: epsilon values must differ");
  fit.slope = sxy / sxx;
  fit.points_used = int(xs.size());
  return fit;
}

}  // namespace qstripe::fault_sim
