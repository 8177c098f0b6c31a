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

#ifndef C72_NETLIST_H_
#define C72_NETLIST_H_

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace c72 {

// Basic cells. Every 2-input kind costs one logical stage; INV is priced by
// the timing model.
enum class GateKind : std::uint8_t { kAnd2, kOr2, kNand2, kNor2, kInv };

inline constexpr std::array<GateKind, 5> kAllGateKinds = {
    GateKind::kAnd2, GateKind::kOr2, GateKind::kNand2, GateKind::kNor2,
    GateKind::kInv};

int arity(GateKind kind);
std::string_view gate_kind_name(GateKind kind);
std::optional<GateKind> parse_gate_kind(std::string_view name);

// Macros never reach the IR; the builder expands them into basic gates.
enum class MacroKind : std::uint8_t { kXor2, kMux2 };

class NetlistError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NetRef {
  std::uint32_t index = 0;
  friend auto operator<=>(const NetRef&, const NetRef&) = default;
};

// Name-based netlist description. This is the form that can be wrong:
// validate() inspects it, Circuit::from_description() seals it.
struct CellDesc {
  GateKind kind;
  std::vector<std::string> inputs;
  std::string output;
  friend bool operator==(const CellDesc&, const CellDesc&) = default;
};

struct OutputDesc {
  std::string name;
  std::string net;
  friend bool operator==(const OutputDesc&, const OutputDesc&) = default;
};

struct ConstantDesc {
  std::string net;
  bool value = false;
  friend bool operator==(const ConstantDesc&, const ConstantDesc&) = default;
};

struct NetlistDesc {
  std::string name;
  std::vector<std::string> inputs;
  std::vector<ConstantDesc> constants;
  std::vector<OutputDesc> outputs;
  std::vector<CellDesc> cells;
  friend bool operator==(const NetlistDesc&, const NetlistDesc&) = default;
};

enum class ViolationKind {
  kEmptyName,
  kDuplicatePort,
  kArity,
  kMultipleDrivers,
  kUndriven,
  kCycle,
};

std::string_view violation_kind_name(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string detail;
};

// Returns every structural violation, empty when the description is valid.
std::vector<Violation> validate(const NetlistDesc& desc);

// Sealed, immutable combinational netlist. Cells are stored in topological
// order; a net is driven by exactly one input port, constant, or cell.
class Circuit {
 public:
  struct Cell {
    GateKind kind;
    std::array<NetRef, 2> in;  // in[1] is unused for INV
    NetRef out;
  };
  enum class DriverKind : std::uint8_t { kInput, kConst0, kConst1, kCell };
  struct Net {
    std::string name;
    DriverKind driver;
    std::uint32_t driver_index;  // input port or cell index
  };
  struct Port {
    std::string name;
    NetRef net;
  };
  // Provenance of a flattened sub-circuit instantiation.
  struct Instance {
    std::string path;
    std::string block;
    std::vector<Port> inputs;
    std::vector<Port> outputs;
  };

  // Throws NetlistError carrying every violation.
  static Circuit from_description(const NetlistDesc& desc);

  const std::string& name() const { return name_; }
  std::span<const Port> inputs() const { return inputs_; }
  std::span<const Port> outputs() const { return outputs_; }
  std::span<const Cell> cells() const { return cells_; }
  std::span<const Net> nets() const { return nets_; }
  std::span<const Instance> instances() const { return instances_; }

  const Net& net(NetRef ref) const { return nets_[ref.index]; }
  std::optional<std::size_t> input_index(std::string_view port) const;
  std::optional<std::size_t> output_index(std::string_view port) const;
  std::optional<NetRef> find_net(std::string_view name) const;
  const Port& input(std::string_view port) const;
  const Port& output(std::string_view port) const;

  NetlistDesc describe() const;

 private:
  friend class CircuitBuilder;
  Circuit() = default;

  std::string name_;
  std::vector<Port> inputs_;
  std::vector<Port> outputs_;
  std::vector<Cell> cells_;
  std::vector<Net> nets_;
  std::vector<Instance> instances_;
};

// Always empty for a sealed circuit; kept so analyses can assert it.
std::vector<Violation> validate(const Circuit& circuit);

// Maps sub-circuit port names to nets of the builder being extended.
using PortBindings = std::map<std::string, NetRef, std::less<>>;

// Single-owner construction API. Inputs of every added gate must already
// be driven, so insertion order is a topological order and cycles cannot be
// built.
class CircuitBuilder {
 public:
  // Throws NetlistError on an empty list, empty names, invalid identifiers,
  // or duplicates.
  CircuitBuilder(std::string name, std::vector<std::string> input_names);

  NetRef input(std::string_view port) const;
  NetRef constant(bool value);

  NetRef add_gate(GateKind kind, std::span<const NetRef> ins,
                  std::string_view name = {});
  NetRef add_gate(GateKind kind, std::initializer_list<NetRef> ins,
                  std::string_view name = {}) {
    return add_gate(kind, std::span<const NetRef>(ins.begin(), ins.size()),
                    name);
  }
  // XOR2 takes (a, b); MUX2 takes (select, when0, when1).
  NetRef add_macro(MacroKind macro, std::span<const NetRef> ins,
                   std::string_view name = {});
  NetRef add_macro(MacroKind macro, std::initializer_list<NetRef> ins,
                   std::string_view name = {}) {
    return add_macro(macro, std::span<const NetRef>(ins.begin(), ins.size()),
                     name);
  }

  NetRef and2(NetRef a, NetRef b, std::string_view name = {}) {
    return add_gate(GateKind::kAnd2, {a, b}, name);
  }
  NetRef or2(NetRef a, NetRef b, std::string_view name = {}) {
    return add_gate(GateKind::kOr2, {a, b}, name);
  }
  NetRef nand2(NetRef a, NetRef b, std::string_view name = {}) {
    return add_gate(GateKind::kNand2, {a, b}, name);
  }
  NetRef nor2(NetRef a, NetRef b, std::string_view name = {}) {
    return add_gate(GateKind::kNor2, {a, b}, name);
  }
  // Inverters are shared: one INV cell per driven net.
  NetRef inv(NetRef a);
  NetRef xor2(NetRef a, NetRef b, std::string_view name = {}) {
    return add_macro(MacroKind::kXor2, {a, b}, name);
  }
  NetRef mux2(NetRef select, NetRef when0, NetRef when1,
              std::string_view name = {}) {
    return add_macro(MacroKind::kMux2, {select, when0, when1}, name);
  }

  // Copies |sub| with fresh nets. Net names are prefixed by the instance
  // name, which defaults to "<sub name>_<k>". Throws on unbound or unknown
  // ports.
  PortBindings instantiate(const Circuit& sub, const PortBindings& bindings,
                           std::string_view instance_name = {});

  void add_output(std::string name, NetRef net);

  Circuit seal() &&;

 private:
  NetRef new_net(std::string_view name, Circuit::DriverKind driver,
                 std::uint32_t driver_index);
  void check_driven(NetRef ref) const;
  std::string unique_name(std::string_view wanted);

  Circuit circuit_;
  std::unordered_map<std::string, std::uint32_t> net_by_name_;
  std::unordered_map<std::uint32_t, NetRef> inverted_;
  std::optional<NetRef> const0_;
  std::optional<NetRef> const1_;
  std::map<std::string, int, std::less<>> instance_counts_;
  bool sealed_ = false;
};

// True for [A-Za-z_][A-Za-z0-9_]*.
bool is_identifier(std::string_view name);
// Replaces every character outside [A-Za-z0-9_] with '_' and prefixes '_'
// when the result would start with a digit.
std::string sanitize_identifier(std::string_view name);

}  // namespace c72

#endif  // C72_NETLIST_H_
