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

#include "c72/simulate.h"

namespace c72 {
namespace {

template <typename Word>
Word apply(GateKind kind, Word a, Word b) {
  switch (kind) {
    case GateKind::kAnd2:
      return a & b;
    case GateKind::kOr2:
      return a | b;
    case GateKind::kNand2:
      return ~(a & b);
    case GateKind::kNor2:
      return ~(a | b);
    case GateKind::kInv:
      return ~a;
  }
  return a;
}

void check_width(const Circuit& circuit, std::size_t got) {
  if (got != circuit.inputs().size()) {
    throw NetlistError("'" + circuit.name() + "' expects " +
                       std::to_string(circuit.inputs().size()) +
                       " input bits, got " + std::to_string(got));
  }
}

}  // namespace

Bits evaluate_nets(const Circuit& circuit,
                   std::span<const std::uint8_t> inputs) {
  check_width(circuit, inputs.size());
  Bits value(circuit.nets().size(), 0);
  for (std::size_t i = 0; i < circuit.inputs().size(); ++i) {
    value[circuit.inputs()[i].net.index] = inputs[i] ? 1 : 0;
  }
  for (std::size_t n = 0; n < circuit.nets().size(); ++n) {
    if (circuit.nets()[n].driver == Circuit::DriverKind::kConst1) value[n] = 1;
  }
  for (const Circuit::Cell& cell : circuit.cells()) {
    value[cell.out.index] =
        apply<std::uint8_t>(cell.kind, value[cell.in[0].index],
                            value[cell.in[1].index]) &
        1;
  }
  return value;
}

Bits evaluate(const Circuit& circuit, std::span<const std::uint8_t> inputs) {
  Bits nets = evaluate_nets(circuit, inputs);
  Bits out;
  out.reserve(circuit.outputs().size());
  for (const Circuit::Port& p : circuit.outputs()) out.push_back(nets[p.net.index]);
  return out;
}

std::map<std::string, bool> evaluate(
    const Circuit& circuit, const std::map<std::string, bool>& inputs) {
  for (const auto& [name, bit] : inputs) {
    if (!circuit.input_index(name)) {
      throw NetlistError("'" + circuit.name() + "' has no input '" + name +
                         "'");
    }
  }
  Bits vec;
  for (const Circuit::Port& p : circuit.inputs()) {
    auto it = inputs.find(p.name);
    if (it == inputs.end()) {
      throw NetlistError("input '" + p.name + "' is not assigned");
    }
    vec.push_back(it->second ? 1 : 0);
  }
  Bits out = evaluate(circuit, vec);
  std::map<std::string, bool> named;
  for (std::size_t i = 0; i < out.size(); ++i) {
    named.emplace(circuit.outputs()[i].name, out[i] != 0);
  }
  return named;
}

void evaluate_lanes(const Circuit& circuit,
                    std::span<const std::uint64_t> input_lanes,
                    std::span<std::uint64_t> output_lanes,
                    std::vector<std::uint64_t>& scratch) {
  check_width(circuit, input_lanes.size());
  if (output_lanes.size() != circuit.outputs().size()) {
    throw NetlistError("output lane buffer has wrong size");
  }
  scratch.assign(circuit.nets().size(), 0);
  for (std::size_t i = 0; i < circuit.inputs().size(); ++i) {
    scratch[circuit.inputs()[i].net.index] = input_lanes[i];
  }
  for (std::size_t n = 0; n < circuit.nets().size(); ++n) {
    if (circuit.nets()[n].driver == Circuit::DriverKind::kConst1) {
      scratch[n] = ~std::uint64_t{0};
    }
  }
  for (const Circuit::Cell& cell : circuit.cells()) {
    scratch[cell.out.index] = apply<std::uint64_t>(
        cell.kind, scratch[cell.in[0].index], scratch[cell.in[1].index]);
  }
  for (std::size_t o = 0; o < circuit.outputs().size(); ++o) {
    output_lanes[o] = scratch[circuit.outputs()[o].net.index];
  }
}

}  // namespace c72
