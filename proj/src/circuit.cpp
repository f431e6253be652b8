#include "qstripe/circuit.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace qstripe {

namespace {

const std::pair<GateKind, const char*> kind_names[] = {
    {GateKind::H, "H"},
    {GateKind::CNOT, "CNOT"},
    {GateKind::SWAP, "SWAP"},
    {GateKind::REMOTE_CNOT, "REMOTE_CNOT"},
    {GateKind::CC_X, "CC_X"},
    {GateKind::CC_Z, "CC_Z"},
    {GateKind::PREP_ZERO, "PREP_ZERO"},
    {GateKind::MEASURE_Z, "MEASURE_Z"},
    {GateKind::PAULI_X, "PAULI_X"},
    {GateKind::PAULI_Z, "PAULI_Z"},
};

}  // namespace

const char* to_string(GateKind k) {
  for (const auto& [kind, name] : kind_names)
    if (kind == k) return name;
  throw CircuitError("unknown gate kind value");
}

GateKind gate_kind_from_string(const std::string& s) {
  for (const auto& [kind, name] : kind_names)
    if (s == name) return kind;
  throw CircuitError("unknown gate kind \"" + s + "\"");
}

int gate_arity(GateKind k) {
  switch (k) {
    case GateKind::CNOT:
    case GateKind::SWAP:
    case GateKind::REMOTE_CNOT:
      return 2;
    default:
      return 1;
  }
}

void check_well_formed(const Circuit& c) {
  if (c.width < 0 || c.length < 0) throw CircuitError("negative circuit dimensions");
  std::set<std::string> declared(c.classical_bits.begin(), c.classical_bits.end());
  if (declared.size() != c.classical_bits.size())
    throw CircuitError("duplicate classical bit declaration");
  for (size_t t = 0; t < c.timesteps.size(); ++t) {
    std::set<Site> used;
    for (size_t g = 0; g < c.timesteps[t].size(); ++g) {
      const Gate& gate = c.timesteps[t][g];
      std::string where =
          "timesteps[" + std::to_string(t) + "][" + std::to_string(g) + "]";
      if (static_cast<int>(gate.targets.size()) != gate_arity(gate.kind))
        throw CircuitError(where + ": " + to_string(gate.kind) + " takes " +
                           std::to_string(gate_arity(gate.kind)) + " target(s)");
      if (gate.targets.size() == 2 && gate.targets[0] == gate.targets[1])
        throw CircuitError(where + ": duplicate target sites");
      for (const Site& s : gate.targets) {
        if (s.row < 0 || s.row >= c.width || s.column < 0 || s.column >= c.length)
          throw CircuitError(where + ": site (" + std::to_string(s.row) + "," +
                             std::to_string(s.column) + ") out of bounds");
        if (!used.insert(s).second)
          throw CircuitError(where + ": site (" + std::to_string(s.row) + "," +
                             std::to_string(s.column) +
                             ") used twice in one timestep");
      }
      if ((gate.kind == GateKind::CC_X || gate.kind == GateKind::CC_Z) &&
          gate.classical_controls.empty())
        throw CircuitError(where + ": " + to_string(gate.kind) +
                           " needs at least one classical control");
      for (const std::string& b : gate.classical_controls)
        if (!declared.count(b))
          throw CircuitError(where + ": undeclared classical bit \"" + b + "\"");
    }
  }
}

std::vector<Violation> validate_nearest_neighbor(const Circuit& c) {
  std::vector<Violation> out;
  for (size_t t = 0; t < c.timesteps.size(); ++t) {
    for (const Gate& gate : c.timesteps[t]) {
      if (gate.targets.size() != 2) continue;
      int d = std::abs(gate.targets[0].row - gate.targets[1].row) +
              std::abs(gate.targets[0].column - gate.targets[1].column);
      if (d != 1) out.push_back({static_cast<int>(t), gate});
    }
  }
  return out;
}

std::map<GateKind, long> count_by_kind(const Circuit& c) {
  std::map<GateKind, long> hist;
  for (const auto& step : c.timesteps)
    for (const Gate& g : step) ++hist[g.kind];
  return hist;
}

long counted_operations(const Circuit& c) {
  long total = 0;
  for (const auto& step : c.timesteps)
    for (const Gate& g : step)
      if (g.kind != GateKind::MEASURE_Z && g.kind != GateKind::PREP_ZERO) ++total;
  return total;
}

std::string serialize(const Circuit& c) {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["width"] = c.width;
  j["length"] = c.length;
  j["classical_bits"] = c.classical_bits;
  auto& steps = j["timesteps"] = nlohmann::ordered_json::array();
  for (const auto& step : c.timesteps) {
    nlohmann::ordered_json jstep = nlohmann::ordered_json::array();
    for (const Gate& g : step) {
      nlohmann::ordered_json jg;
      jg["kind"] = to_string(g.kind);
      auto& tg = jg["targets"] = nlohmann::ordered_json::array();
      for (const Site& s : g.targets) tg.push_back({s.row, s.column});
      if (!g.classical_controls.empty())
        jg["classical_controls"] = g.classical_controls;
      jstep.push_back(std::move(jg));
    }
    steps.push_back(std::move(jstep));
  }
  return j.dump(2) + "\n";
}

Circuit parse(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw CircuitError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw CircuitError("top-level value must be an object");
  for (const char* field : {"version", "width", "length", "classical_bits", "timesteps"})
    if (!j.contains(field))
      throw CircuitError(std::string("missing required field \"") + field + "\"");
  if (!j["version"].is_number_integer() || j["version"].get<int>() != 1)
    throw CircuitError("field \"version\": expected 1");
  Circuit c;
  if (!j["width"].is_number_integer() || !j["length"].is_number_integer())
    throw CircuitError("fields \"width\"/\"length\" must be integers");
  c.width = j["width"].get<int>();
  c.length = j["length"].get<int>();
  if (!j["classical_bits"].is_array())
    throw CircuitError("field \"classical_bits\" must be an array");
  for (const auto& b : j["classical_bits"]) {
    if (!b.is_string()) throw CircuitError("field \"classical_bits\": entries must be strings");
    c.classical_bits.push_back(b.get<std::string>());
  }
  if (!j["timesteps"].is_array())
    throw CircuitError("field \"timesteps\" must be an array");
  for (size_t t = 0; t < j["timesteps"].size(); ++t) {
    const auto& jstep = j["timesteps"][t];
    std::string twhere = "timesteps[" + std::to_string(t) + "]";
    if (!jstep.is_array()) throw CircuitError(twhere + " must be an array");
    std::vector<Gate> step;
    for (size_t gi = 0; gi < jstep.size(); ++gi) {
      const auto& jg = jstep[gi];
      std::string where = twhere + "[" + std::to_string(gi) + "]";
      if (!jg.is_object()) throw CircuitError(where + " must be an object");
      if (!jg.contains("kind") || !jg["kind"].is_string())
        throw CircuitError(where + ": missing field \"kind\"");
      Gate g;
      try {
        g.kind = gate_kind_from_string(jg["kind"].get<std::string>());
      } catch (const CircuitError& e) {
        throw CircuitError(where + ": " + e.what());
      }
      if (!jg.contains("targets") || !jg["targets"].is_array())
        throw CircuitError(where + ": missing field \"targets\"");
      for (size_t ti = 0; ti < jg["targets"].size(); ++ti) {
        const auto& js = jg["targets"][ti];
        if (!js.is_array() || js.size() != 2 || !js[0].is_number_integer() ||
            !js[1].is_number_integer())
          throw CircuitError(where + ".targets[" + std::to_string(ti) +
                             "]: expected [row, column]");
        g.targets.push_back(Site{js[0].get<int>(), js[1].get<int>()});
      }
      if (jg.contains("classical_controls")) {
        if (!jg["classical_controls"].is_array())
          throw CircuitError(where + ".classical_controls must be an array");
        for (const auto& b : jg["classical_controls"]) {
          if (!b.is_string())
            throw CircuitError(where + ".classical_controls: entries must be strings");
          g.classical_controls.push_back(b.get<std::string>());
        }
      }
      for (const auto& [key, value] : jg.items()) {
        (void)value;
        if (key != "kind" && key != "targets" && key != "classical_controls")
          throw CircuitError(where + ": unknown field \"" + key + "\"");
      }
      step.push_back(std::move(g));
    }
    c.timesteps.push_back(std::move(step));
  }
  check_well_formed(c);
  return c;
}

}  // namespace qstripe
