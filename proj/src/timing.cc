// Copyright 2026 The c72lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "c72/timing.h"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "c72/version.h"

namespace c72 {
namespace {

constexpr int kNoPath = std::numeric_limits<int>::min() / 2;
constexpr int kUnconstrained = std::numeric_limits<int>::max() / 2;

void check_model(const StageModel& model) {
  if (model.inv_cost != 0 && model.inv_cost != 1) {
    throw std::invalid_argument("inv_cost must be 0 or 1, got " +
                                std::to_string(model.inv_cost));
  }
  if (model.gate_cost != 1) {
    throw std::invalid_argument("gate_cost is fixed at 1");
  }
}

// Longest-path forward pass; nets still at kNoPath are unreachable from any
// seeded source.
void propagate(const Circuit& circuit, const StageModel& model,
               std::vector<int>& arrival) {
  for (const Circuit::Cell& cell : circuit.cells()) {
    int latest = std::max(arrival[cell.in[0].index], arrival[cell.in[1].index]);
    arrival[cell.out.index] =
        latest == kNoPath ? kNoPath : latest + model.cost(cell.kind);
  }
}

}  // namespace

ArrivalMap depth(const Circuit& circuit, const StageModel& model,
                 std::span<const int> input_arrivals) {
  check_model(model);
  const std::size_t n_in = circuit.inputs().size();
  if (!input_arrivals.empty() && input_arrivals.size() != n_in) {
    throw std::invalid_argument("expected " + std::to_string(n_in) +
                                " input arrivals, got " +
                                std::to_string(input_arrivals.size()));
  }
  ArrivalMap m;
  m.input_arrivals.assign(n_in, 0);
  if (!input_arrivals.empty()) {
    m.input_arrivals.assign(input_arrivals.begin(), input_arrivals.end());
  }
  for (int a : m.input_arrivals) {
    if (a < 0) throw std::invalid_argument("input arrivals must be >= 0");
  }

  m.net_arrivals.assign(circuit.nets().size(), kNoPath);
  for (std::size_t n = 0; n < circuit.nets().size(); ++n) {
    if (circuit.nets()[n].driver != Circuit::DriverKind::kCell) {
      m.net_arrivals[n] = 0;
    }
  }
  for (std::size_t i = 0; i < n_in; ++i) {
    m.net_arrivals[circuit.inputs()[i].net.index] = m.input_arrivals[i];
  }
  propagate(circuit, model, m.net_arrivals);

  for (const Circuit::Port& p : circuit.outputs()) {
    m.output_arrivals.push_back(m.net_arrivals[p.net.index]);
  }
  m.depth = m.output_arrivals.empty()
                ? 0
                : *std::max_element(m.output_arrivals.begin(),
                                    m.output_arrivals.end());

  std::vector<int> required(circuit.nets().size(), kUnconstrained);
  for (const Circuit::Port& p : circuit.outputs()) {
    if (m.net_arrivals[p.net.index] == m.depth) required[p.net.index] = m.depth;
  }
  auto cells = circuit.cells();
  for (auto it = cells.rbegin(); it != cells.rend(); ++it) {
    int r = required[it->out.index];
    if (r == kUnconstrained) continue;
    r -= model.cost(it->kind);
    for (int k = 0; k < arity(it->kind); ++k) {
      int& slot = required[it->in[k].index];
      slot = std::min(slot, r);
    }
  }
  for (std::size_t n = 0; n < circuit.nets().size(); ++n) {
    if (required[n] != kUnconstrained && required[n] == m.net_arrivals[n]) {
      m.critical_nets.push_back(NetRef{static_cast<std::uint32_t>(n)});
    }
  }
  return m;
}

ArrivalMap depth(const Circuit& circuit, const StageModel& model,
                 const std::map<std::string, int>& input_arrivals) {
  std::vector<int> arrivals(circuit.inputs().size(), 0);
  for (const auto& [name, stage] : input_arrivals) {
    auto i = circuit.input_index(name);
    if (!i) {
      throw NetlistError("'" + circuit.name() + "' has no input '" + name +
                         "'");
    }
    arrivals[*i] = stage;
  }
  return depth(circuit, model, arrivals);
}

std::optional<int> path_depth(const Circuit& circuit, const StageModel& model,
                              std::string_view input,
                              std::string_view output) {
  check_model(model);
  const Circuit::Port& in = circuit.input(input);
  const Circuit::Port& out = circuit.output(output);
  std::vector<int> arrival(circuit.nets().size(), kNoPath);
  arrival[in.net.index] = 0;
  propagate(circuit, model, arrival);
  int a = arrival[out.net.index];
  if (a == kNoPath) return std::nullopt;
  return a;
}

std::optional<int> slack_to_input(const Circuit& circuit,
                                  const StageModel& model,
                                  std::string_view input,
                                  std::string_view output) {
  std::optional<int> longest = path_depth(circuit, model, input, output);
  if (!longest) return std::nullopt;
  ArrivalMap m = depth(circuit, model);
  int arrival = m.output_arrivals[*circuit.output_index(output)];
  return arrival - *longest;
}

AreaReport area(const Circuit& circuit) {
  AreaReport r;
  for (const Circuit::Cell& cell : circuit.cells()) {
    ++r.counts[static_cast<std::size_t>(cell.kind)];
    if (cell.kind == GateKind::kInv) {
      ++r.inverters;
    } else {
      ++r.basic_gates;
    }
  }
  return r;
}

ComparisonTable compare(std::span<const std::pair<std::string, Circuit>> blocks,
                        const StageModel& model) {
  if (blocks.size() < 2) {
    throw std::invalid_argument("compare needs at least 2 blocks, got " +
                                std::to_string(blocks.size()));
  }
  ComparisonTable table;
  table.model = model;
  for (const auto& [label, circuit] : blocks) {
    ArrivalMap m = depth(circuit, model);
    ComparisonRow row;
    row.block = label;
    row.depth = m.depth;
    for (std::size_t o = 0; o < circuit.outputs().size(); ++o) {
      row.output_arrivals.emplace_back(circuit.outputs()[o].name,
                                       m.output_arrivals[o]);
    }
    row.area = area(circuit);
    table.rows.push_back(std::move(row));
  }
  return table;
}

namespace {

nlohmann::ordered_json model_json(const StageModel& model) {
  return {{"inv_cost", model.inv_cost}, {"gate_cost", model.gate_cost}};
}

nlohmann::ordered_json area_json(const AreaReport& area) {
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (GateKind kind : kAllGateKinds) {
    counts[std::string(gate_kind_name(kind))] = area.count(kind);
  }
  return {{"counts", std::move(counts)},
          {"basic_gates", area.basic_gates},
          {"inverters", area.inverters}};
}

}  // namespace

nlohmann::ordered_json to_json(const Circuit& circuit, const ArrivalMap& map,
                               const StageModel& model) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "arrival_map";
  j["circuit"] = circuit.name();
  j["model"] = model_json(model);
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < circuit.inputs().size(); ++i) {
    inputs[circuit.inputs()[i].name] = map.input_arrivals[i];
  }
  nlohmann::ordered_json outputs = nlohmann::ordered_json::object();
  for (std::size_t o = 0; o < circuit.outputs().size(); ++o) {
    outputs[circuit.outputs()[o].name] = map.output_arrivals[o];
  }
  nlohmann::ordered_json nets = nlohmann::ordered_json::object();
  for (std::size_t n = 0; n < circuit.nets().size(); ++n) {
    nets[circuit.nets()[n].name] = map.net_arrivals[n];
  }
  nlohmann::ordered_json critical = nlohmann::ordered_json::array();
  for (NetRef r : map.critical_nets) critical.push_back(circuit.net(r).name);
  j["input_arrivals"] = std::move(inputs);
  j["output_arrivals"] = std::move(outputs);
  j["depth"] = map.depth;
  j["critical_nets"] = std::move(critical);
  j["net_arrivals"] = std::move(nets);
  return j;
}

nlohmann::ordered_json to_json(const ComparisonTable& table) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "comparison";
  j["model"] = model_json(table.model);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const ComparisonRow& row : table.rows) {
    nlohmann::ordered_json arrivals = nlohmann::ordered_json::object();
    for (const auto& [port, stage] : row.output_arrivals) {
      arrivals[port] = stage;
    }
    rows.push_back({{"block", row.block},
                    {"depth", row.depth},
                    {"output_arrivals", std::move(arrivals)},
                    {"area", area_json(row.area)}});
  }
  j["rows"] = std::move(rows);
  return j;
}

std::string to_text(const Circuit& circuit, const ArrivalMap& map) {
  std::ostringstream os;
  os << circuit.name() << ": depth " << map.depth << "\n";
  for (std::size_t o = 0; o < circuit.outputs().size(); ++o) {
    os << "  " << std::left << std::setw(12) << circuit.outputs()[o].name
       << std::right << std::setw(4) << map.output_arrivals[o] << "\n";
  }
  return os.str();
}

std::string to_text(const ComparisonTable& table) {
  std::size_t label = 5;
  for (const ComparisonRow& row : table.rows) {
    label = std::max(label, row.block.size());
  }
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(label)) << "block" << std::right
     << std::setw(7) << "depth" << std::setw(7) << "gates" << std::setw(6)
     << "inv";
  for (GateKind kind : kAllGateKinds) {
    if (kind != GateKind::kInv) os << std::setw(7) << gate_kind_name(kind);
  }
  os << "\n";
  for (const ComparisonRow& row : table.rows) {
    os << std::left << std::setw(static_cast<int>(label)) << row.block
       << std::right << std::setw(7) << row.depth << std::setw(7)
       << row.area.basic_gates << std::setw(6) << row.area.inverters;
    for (GateKind kind : kAllGateKinds) {
      if (kind != GateKind::kInv) os << std::setw(7) << row.area.count(kind);
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace c72
