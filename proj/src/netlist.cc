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

#include "c72/netlist.h"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <utility>

namespace c72 {

int arity(GateKind kind) { return kind == GateKind::kInv ? 1 : 2; }

std::string_view gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::kAnd2:
      return "AND2";
    case GateKind::kOr2:
      return "OR2";
    case GateKind::kNand2:
      return "NAND2";
    case GateKind::kNor2:
      return "NOR2";
    case GateKind::kInv:
      return "INV";
  }
  return "?";
}

std::optional<GateKind> parse_gate_kind(std::string_view name) {
  for (GateKind kind : kAllGateKinds) {
    if (gate_kind_name(kind) == name) return kind;
  }
  return std::nullopt;
}

std::string_view violation_kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kEmptyName:
      return "empty-name";
    case ViolationKind::kDuplicatePort:
      return "duplicate-port";
    case ViolationKind::kArity:
      return "arity";
    case ViolationKind::kMultipleDrivers:
      return "multiple-drivers";
    case ViolationKind::kUndriven:
      return "undriven";
    case ViolationKind::kCycle:
      return "cycle";
  }
  return "?";
}

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(name.front())) return false;
  return std::all_of(name.begin(), name.end(),
                     [&](char c) { return alpha(c) || digit(c); });
}

std::string sanitize_identifier(std::string_view name) {
  std::string out;
  out.reserve(name.size() + 1);
  for (char c : name) {
    bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                (c >= '0' && c <= '9') || c == '_';
    out.push_back(keep ? c : '_');
  }
  if (!out.empty() && out.front() >= '0' && out.front() <= '9') {
    out.insert(out.begin(), '_');
  }
  return out;
}

namespace {

// Kahn's algorithm with ties broken by original cell index. Returns the
// order and leaves cells on a cycle out of it.
std::vector<std::size_t> topological_cells(const NetlistDesc& desc) {
  std::unordered_map<std::string_view, std::size_t> driver_cell;
  for (std::size_t i = 0; i < desc.cells.size(); ++i) {
    driver_cell.emplace(desc.cells[i].output, i);
  }
  std::vector<std::vector<std::size_t>> fanout(desc.cells.size());
  std::vector<int> pending(desc.cells.size(), 0);
  for (std::size_t i = 0; i < desc.cells.size(); ++i) {
    for (const std::string& in : desc.cells[i].inputs) {
      auto it = driver_cell.find(in);
      if (it == driver_cell.end()) continue;
      fanout[it->second].push_back(i);
      ++pending[i];
    }
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>,
                      std::greater<>>
      ready;
  for (std::size_t i = 0; i < desc.cells.size(); ++i) {
    if (pending[i] == 0) ready.push(i);
  }
  std::vector<std::size_t> order;
  order.reserve(desc.cells.size());
  while (!ready.empty()) {
    std::size_t i = ready.top();
    ready.pop();
    order.push_back(i);
    for (std::size_t j : fanout[i]) {
      if (--pending[j] == 0) ready.push(j);
    }
  }
  return order;
}

std::string join_violations(const std::vector<Violation>& violations) {
  std::string msg = "invalid netlist:";
  for (const Violation& v : violations) {
    msg += "\n  ";
    msg += violation_kind_name(v.kind);
    msg += ": ";
    msg += v.detail;
  }
  return msg;
}

}  // namespace

std::vector<Violation> validate(const NetlistDesc& desc) {
  std::vector<Violation> out;
  auto report = [&](ViolationKind kind, std::string detail) {
    out.push_back({kind, std::move(detail)});
  };

  if (desc.name.empty()) report(ViolationKind::kEmptyName, "circuit name");

  std::set<std::string_view> ports;
  for (const std::string& in : desc.inputs) {
    if (in.empty()) {
      report(ViolationKind::kEmptyName, "input port");
    } else if (!ports.insert(in).second) {
      report(ViolationKind::kDuplicatePort, "port '" + in + "'");
    }
  }
  for (const OutputDesc& o : desc.outputs) {
    if (o.name.empty()) {
      report(ViolationKind::kEmptyName, "output port");
    } else if (!ports.insert(o.name).second) {
      report(ViolationKind::kDuplicatePort, "port '" + o.name + "'");
    }
  }

  std::map<std::string_view, int> drivers;
  for (const std::string& in : desc.inputs) ++drivers[in];
  for (const ConstantDesc& c : desc.constants) {
    if (c.net.empty()) report(ViolationKind::kEmptyName, "constant net");
    ++drivers[c.net];
  }
  for (std::size_t i = 0; i < desc.cells.size(); ++i) {
    const CellDesc& cell = desc.cells[i];
    if (cell.output.empty()) {
      report(ViolationKind::kEmptyName,
             "output net of cell " + std::to_string(i));
    }
    ++drivers[cell.output];
    if (static_cast<int>(cell.inputs.size()) != arity(cell.kind)) {
      report(ViolationKind::kArity,
             "cell " + std::to_string(i) + " (" +
                 std::string(gate_kind_name(cell.kind)) + ") has " +
                 std::to_string(cell.inputs.size()) + " inputs");
    }
  }
  for (const auto& [net, count] : drivers) {
    if (count > 1 && !net.empty()) {
      report(ViolationKind::kMultipleDrivers,
             "net '" + std::string(net) + "' has " + std::to_string(count) +
                 " drivers");
    }
  }
  for (std::size_t i = 0; i < desc.cells.size(); ++i) {
    for (const std::string& in : desc.cells[i].inputs) {
      if (!drivers.contains(in)) {
        report(ViolationKind::kUndriven, "net '" + in + "' read by cell " +
                                             std::to_string(i));
      }
    }
  }
  for (const OutputDesc& o : desc.outputs) {
    if (!drivers.contains(o.net)) {
      report(ViolationKind::kUndriven,
             "net '" + o.net + "' drives output '" + o.name + "'");
    }
  }

  std::vector<std::size_t> order = topological_cells(desc);
  if (order.size() != desc.cells.size()) {
    std::vector<bool> placed(desc.cells.size(), false);
    for (std::size_t i : order) placed[i] = true;
    std::string cells;
    for (std::size_t i = 0; i < desc.cells.size(); ++i) {
      if (placed[i]) continue;
      if (!cells.empty()) cells += ", ";
      cells += std::to_string(i);
    }
    report(ViolationKind::kCycle, "cells not orderable: " + cells);
  }
  return out;
}

std::vector<Violation> validate(const Circuit& circuit) {
  return validate(circuit.describe());
}

Circuit Circuit::from_description(const NetlistDesc& desc) {
  std::vector<Violation> violations = validate(desc);
  if (!violations.empty()) throw NetlistError(join_violations(violations));

  Circuit c;
  c.name_ = desc.name;
  std::unordered_map<std::string_view, NetRef> by_name;
  auto add_net = [&](const std::string& name, DriverKind driver,
                     std::uint32_t index) {
    NetRef ref{static_cast<std::uint32_t>(c.nets_.size())};
    c.nets_.push_back({name, driver, index});
    by_name.emplace(c.nets_.back().name, ref);
    return ref;
  };
  // Reserve so string_views into nets_ stay valid.
  c.nets_.reserve(desc.inputs.size() + desc.constants.size() +
                  desc.cells.size());
  for (std::size_t i = 0; i < desc.inputs.size(); ++i) {
    NetRef ref =
        add_net(desc.inputs[i], DriverKind::kInput, static_cast<uint32_t>(i));
    c.inputs_.push_back({desc.inputs[i], ref});
  }
  for (const ConstantDesc& k : desc.constants) {
    add_net(k.net, k.value ? DriverKind::kConst1 : DriverKind::kConst0, 0);
  }
  for (std::size_t i : topological_cells(desc)) {
    const CellDesc& cd = desc.cells[i];
    Cell cell{cd.kind, {}, {}};
    for (std::size_t k = 0; k < cd.inputs.size(); ++k) {
      cell.in[k] = by_name.at(cd.inputs[k]);
    }
    if (cd.kind == GateKind::kInv) cell.in[1] = cell.in[0];
    cell.out = add_net(cd.output, DriverKind::kCell,
                       static_cast<std::uint32_t>(c.cells_.size()));
    c.cells_.push_back(cell);
  }
  for (const OutputDesc& o : desc.outputs) {
    c.outputs_.push_back({o.name, by_name.at(o.net)});
  }
  return c;
}

std::optional<std::size_t> Circuit::input_index(std::string_view port) const {
  for (std::size_t i = 0; i < inputs_.size(); ++i) {
    if (inputs_[i].name == port) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> Circuit::output_index(std::string_view port) const {
  for (std::size_t i = 0; i < outputs_.size(); ++i) {
    if (outputs_[i].name == port) return i;
  }
  return std::nullopt;
}

std::optional<NetRef> Circuit::find_net(std::string_view name) const {
  for (std::size_t i = 0; i < nets_.size(); ++i) {
    if (nets_[i].name == name) return NetRef{static_cast<std::uint32_t>(i)};
  }
  return std::nullopt;
}

const Circuit::Port& Circuit::input(std::string_view port) const {
  auto i = input_index(port);
  if (!i) {
    throw NetlistError("circuit '" + name_ + "' has no input '" +
                       std::string(port) + "'");
  }
  return inputs_[*i];
}

const Circuit::Port& Circuit::output(std::string_view port) const {
  auto i = output_index(port);
  if (!i) {
    throw NetlistError("circuit '" + name_ + "' has no output '" +
                       std::string(port) + "'");
  }
  return outputs_[*i];
}

NetlistDesc Circuit::describe() const {
  NetlistDesc d;
  d.name = name_;
  for (const Port& p : inputs_) d.inputs.push_back(p.name);
  for (const Net& n : nets_) {
    if (n.driver == DriverKind::kConst0 || n.driver == DriverKind::kConst1) {
      d.constants.push_back({n.name, n.driver == DriverKind::kConst1});
    }
  }
  for (const Port& p : outputs_) {
    d.outputs.push_back({p.name, nets_[p.net.index].name});
  }
  for (const Cell& cell : cells_) {
    CellDesc cd{cell.kind, {}, nets_[cell.out.index].name};
    for (int k = 0; k < arity(cell.kind); ++k) {
      cd.inputs.push_back(nets_[cell.in[k].index].name);
    }
    d.cells.push_back(std::move(cd));
  }
  return d;
}

// ---------------------------------------------------------------------------

CircuitBuilder::CircuitBuilder(std::string name,
                               std::vector<std::string> input_names) {
  if (!is_identifier(name)) {
    throw NetlistError("circuit name '" + name + "' is not an identifier");
  }
  if (input_names.empty()) {
    throw NetlistError("circuit '" + name + "' declares no inputs");
  }
  circuit_.name_ = std::move(name);
  for (std::string& in : input_names) {
    if (!is_identifier(in)) {
      throw NetlistError("input port '" + in + "' is not an identifier");
    }
    if (net_by_name_.contains(in)) {
      throw NetlistError("duplicate port '" + in + "'");
    }
    NetRef ref = new_net(in, Circuit::DriverKind::kInput,
                         static_cast<std::uint32_t>(circuit_.inputs_.size()));
    circuit_.inputs_.push_back({std::move(in), ref});
  }
}

NetRef CircuitBuilder::new_net(std::string_view name,
                               Circuit::DriverKind driver,
                               std::uint32_t driver_index) {
  std::string unique = unique_name(name);
  NetRef ref{static_cast<std::uint32_t>(circuit_.nets_.size())};
  net_by_name_.emplace(unique, ref.index);
  circuit_.nets_.push_back({std::move(unique), driver, driver_index});
  return ref;
}

std::string CircuitBuilder::unique_name(std::string_view wanted) {
  std::string base = sanitize_identifier(wanted);
  if (base.empty()) base = "n" + std::to_string(circuit_.nets_.size());
  if (!net_by_name_.contains(base)) return base;
  for (int k = 2;; ++k) {
    std::string candidate = base + "_" + std::to_string(k);
    if (!net_by_name_.contains(candidate)) return candidate;
  }
}

void CircuitBuilder::check_driven(NetRef ref) const {
  if (ref.index >= circuit_.nets_.size()) {
    throw NetlistError("net #" + std::to_string(ref.index) +
                       " is not driven in '" + circuit_.name_ + "'");
  }
}

NetRef CircuitBuilder::input(std::string_view port) const {
  return circuit_.input(port).net;
}

NetRef CircuitBuilder::constant(bool value) {
  std::optional<NetRef>& slot = value ? const1_ : const0_;
  if (!slot) {
    slot = new_net(value ? "const1" : "const0",
                   value ? Circuit::DriverKind::kConst1
                         : Circuit::DriverKind::kConst0,
                   0);
  }
  return *slot;
}

NetRef CircuitBuilder::add_gate(GateKind kind, std::span<const NetRef> ins,
                                std::string_view name) {
  if (static_cast<int>(ins.size()) != arity(kind)) {
    throw NetlistError(std::string(gate_kind_name(kind)) + " takes " +
                       std::to_string(arity(kind)) + " inputs, got " +
                       std::to_string(ins.size()));
  }
  for (NetRef in : ins) check_driven(in);
  Circuit::Cell cell{kind, {ins[0], ins.size() > 1 ? ins[1] : ins[0]}, {}};
  cell.out = new_net(name, Circuit::DriverKind::kCell,
                     static_cast<std::uint32_t>(circuit_.cells_.size()));
  circuit_.cells_.push_back(cell);
  if (kind == GateKind::kInv) inverted_.try_emplace(ins[0].index, cell.out);
  return cell.out;
}

NetRef CircuitBuilder::inv(NetRef a) {
  check_driven(a);
  if (auto it = inverted_.find(a.index); it != inverted_.end()) {
    return it->second;
  }
  std::string name = circuit_.nets_[a.index].name + "_n";
  return add_gate(GateKind::kInv, {a}, name);
}

NetRef CircuitBuilder::add_macro(MacroKind macro, std::span<const NetRef> ins,
                                 std::string_view name) {
  switch (macro) {
    case MacroKind::kXor2: {
      if (ins.size() != 2) {
        throw NetlistError("XOR2 takes 2 inputs, got " +
                           std::to_string(ins.size()));
      }
      // (a + b) * ~(ab)
      NetRef any = or2(ins[0], ins[1]);
      NetRef not_both = nand2(ins[0], ins[1]);
      return and2(any, not_both, name);
    }
    case MacroKind::kMux2: {
      if (ins.size() != 3) {
        throw NetlistError("MUX2 takes (select, when0, when1), got " +
                           std::to_string(ins.size()) + " inputs");
      }
      // ~s * d0 + s * d1
      NetRef low = and2(inv(ins[0]), ins[1]);
      NetRef high = and2(ins[0], ins[2]);
      return or2(low, high, name);
    }
  }
  throw NetlistError("unknown macro");
}

PortBindings CircuitBuilder::instantiate(const Circuit& sub,
                                         const PortBindings& bindings,
                                         std::string_view instance_name) {
  for (const auto& [port, net] : bindings) {
    if (!sub.input_index(port)) {
      throw NetlistError("'" + sub.name() + "' has no input '" + port + "'");
    }
    check_driven(net);
  }
  std::string path;
  {
    std::string base = instance_name.empty()
                           ? sub.name()
                           : sanitize_identifier(instance_name);
    int& count = instance_counts_[base];
    path = (instance_name.empty() || count > 0)
               ? base + "_" + std::to_string(count)
               : base;
    ++count;
  }

  std::vector<NetRef> map(sub.nets().size());
  for (const Circuit::Port& p : sub.inputs()) {
    auto it = bindings.find(p.name);
    if (it == bindings.end()) {
      throw NetlistError("input '" + p.name + "' of '" + sub.name() +
                         "' is unbound");
    }
    map[p.net.index] = it->second;
  }
  for (std::size_t i = 0; i < sub.nets().size(); ++i) {
    const Circuit::Net& n = sub.nets()[i];
    if (n.driver == Circuit::DriverKind::kConst0) map[i] = constant(false);
    if (n.driver == Circuit::DriverKind::kConst1) map[i] = constant(true);
  }
  for (const Circuit::Cell& cell : sub.cells()) {
    Circuit::Cell copy{cell.kind, {map[cell.in[0].index], map[cell.in[1].index]},
                       {}};
    copy.out =
        new_net(path + "_" + sub.net(cell.out).name,
                Circuit::DriverKind::kCell,
                static_cast<std::uint32_t>(circuit_.cells_.size()));
    circuit_.cells_.push_back(copy);
    if (cell.kind == GateKind::kInv) {
      inverted_.try_emplace(copy.in[0].index, copy.out);
    }
    map[cell.out.index] = copy.out;
  }

  auto remap = [&](std::span<const Circuit::Port> ports) {
    std::vector<Circuit::Port> out;
    for (const Circuit::Port& p : ports) out.push_back({p.name, map[p.net.index]});
    return out;
  };
  circuit_.instances_.push_back(
      {path, sub.name(), remap(sub.inputs()), remap(sub.outputs())});
  for (const Circuit::Instance& nested : sub.instances()) {
    circuit_.instances_.push_back({path + "/" + nested.path, nested.block,
                                   remap(nested.inputs),
                                   remap(nested.outputs)});
  }

  PortBindings outputs;
  for (const Circuit::Port& p : sub.outputs()) {
    outputs.emplace(p.name, map[p.net.index]);
  }
  return outputs;
}

void CircuitBuilder::add_output(std::string name, NetRef net) {
  if (!is_identifier(name)) {
    throw NetlistError("output port '" + name + "' is not an identifier");
  }
  if (circuit_.input_index(name) || circuit_.output_index(name)) {
    throw NetlistError("duplicate port '" + name + "'");
  }
  check_driven(net);
  circuit_.outputs_.push_back({std::move(name), net});
}

Circuit CircuitBuilder::seal() && {
  if (sealed_) throw NetlistError("builder already sealed");
  sealed_ = true;
  return std::move(circuit_);
}

}  // namespace c72
