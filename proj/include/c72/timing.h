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

// Unit-delay ("logical stage") analysis. A 2-input gate costs one stage, an
// inverter costs StageModel::inv_cost (0 by default), wires and fanout are
// free. Constant nets arrive at stage 0.

#ifndef C72_TIMING_H_
#define C72_TIMING_H_

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "c72/netlist.h"
#include "json.hpp"

namespace c72 {

struct StageModel {
  int inv_cost = 0;   // 0 or 1
  int gate_cost = 1;  // fixed

  int cost(GateKind kind) const {
    return kind == GateKind::kInv ? inv_cost : gate_cost;
  }
};

struct ArrivalMap {
  std::vector<int> input_arrivals;   // per input port
  std::vector<int> net_arrivals;     // per net
  std::vector<int> output_arrivals;  // per output port
  int depth = 0;                     // max output arrival
  // Every net on some path that reaches |depth|, ascending NetRef order.
  std::vector<NetRef> critical_nets;
};

// Throws std::invalid_argument for a negative arrival, a wrong-sized span,
// or an inv_cost outside {0, 1}. An empty span means all inputs at 0.
ArrivalMap depth(const Circuit& circuit, const StageModel& model = {},
                 std::span<const int> input_arrivals = {});
// Name-keyed arrivals; unlisted inputs arrive at 0. Throws NetlistError for
// an unknown port.
ArrivalMap depth(const Circuit& circuit, const StageModel& model,
                 const std::map<std::string, int>& input_arrivals);

// Longest stage count from |input| to |output|; nullopt when no path.
std::optional<int> path_depth(const Circuit& circuit, const StageModel& model,
                              std::string_view input, std::string_view output);

// How many stages |input| may arrive late, with every other input at 0,
// before |output| arrives later. nullopt means unbounded (no path).
std::optional<int> slack_to_input(const Circuit& circuit,
                                  const StageModel& model,
                                  std::string_view input,
                                  std::string_view output);

struct AreaReport {
  std::array<int, kAllGateKinds.size()> counts{};  // indexed by GateKind
  int basic_gates = 0;  // every kind except INV
  int inverters = 0;

  int count(GateKind kind) const {
    return counts[static_cast<std::size_t>(kind)];
  }
};

AreaReport area(const Circuit& circuit);

struct ComparisonRow {
  std::string block;
  int depth = 0;
  std::vector<std::pair<std::string, int>> output_arrivals;
  AreaReport area;
};

struct ComparisonTable {
  StageModel model;
  std::vector<ComparisonRow> rows;
};

// Rows keep the order of |blocks|. Throws std::invalid_argument for fewer
// than two entries.
ComparisonTable compare(std::span<const std::pair<std::string, Circuit>> blocks,
                        const StageModel& model = {});

nlohmann::ordered_json to_json(const Circuit& circuit, const ArrivalMap& map,
                               const StageModel& model);
nlohmann::ordered_json to_json(const ComparisonTable& table);
std::string to_text(const Circuit& circuit, const ArrivalMap& map);
std::string to_text(const ComparisonTable& table);

}  // namespace c72

#endif  // C72_TIMING_H_
