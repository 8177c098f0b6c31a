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

#include "c72/export.h"

#include <unistd.h>

#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "c72/version.h"
#include "json.hpp"

namespace c72 {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// JSON

std::string to_json(const Circuit& circuit) {
  NetlistDesc d = circuit.describe();
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "netlist";
  j["name"] = d.name;
  j["inputs"] = d.inputs;
  ordered_json constants = ordered_json::array();
  for (const ConstantDesc& c : d.constants) {
    constants.push_back({{"net", c.net}, {"value", c.value ? 1 : 0}});
  }
  j["constants"] = std::move(constants);
  ordered_json outputs = ordered_json::array();
  for (const OutputDesc& o : d.outputs) {
    outputs.push_back({{"name", o.name}, {"net", o.net}});
  }
  j["outputs"] = std::move(outputs);
  ordered_json cells = ordered_json::array();
  for (std::size_t i = 0; i < d.cells.size(); ++i) {
    const CellDesc& c = d.cells[i];
    cells.push_back({{"id", i},
                     {"kind", gate_kind_name(c.kind)},
                     {"in", c.inputs},
                     {"out", c.output}});
  }
  j["cells"] = std::move(cells);
  return j.dump(2) + "\n";
}

namespace {

const ordered_json& member(const ordered_json& obj, const std::string& where,
                           const char* key) {
  if (!obj.is_object()) throw ImportError(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ImportError((where == "/" ? "" : where) + "/" + key,
                      std::string("missing field '") + key + "'");
  }
  return *it;
}

std::string string_at(const ordered_json& v, const std::string& where) {
  if (!v.is_string()) throw ImportError(where, "expected a string");
  return v.get<std::string>();
}

const ordered_json& array_at(const ordered_json& v, const std::string& where) {
  if (!v.is_array()) throw ImportError(where, "expected an array");
  return v;
}

}  // namespace

Circuit from_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ImportError("byte " + std::to_string(e.byte), e.what());
  }

  const std::string version = string_at(member(j, "/", "schema_version"),
                                        "/schema_version");
  if (version != kSchemaVersion) {
    throw ImportError("/schema_version", "unsupported schema version '" +
                                             version + "', expected " +
                                             kSchemaVersion);
  }
  if (string_at(member(j, "/", "kind"), "/kind") != "netlist") {
    throw ImportError("/kind", "expected \"netlist\"");
  }

  NetlistDesc d;
  d.name = string_at(member(j, "/", "name"), "/name");

  const ordered_json& inputs = array_at(member(j, "/", "inputs"), "/inputs");
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    d.inputs.push_back(string_at(inputs[i], "/inputs/" + std::to_string(i)));
  }

  if (j.contains("constants")) {
    const ordered_json& constants = array_at(j["constants"], "/constants");
    for (std::size_t i = 0; i < constants.size(); ++i) {
      std::string where = "/constants/" + std::to_string(i);
      ConstantDesc c;
      c.net = string_at(member(constants[i], where, "net"), where + "/net");
      const ordered_json& value = member(constants[i], where, "value");
      if (!value.is_number_integer() ||
          (value.get<int>() != 0 && value.get<int>() != 1)) {
        throw ImportError(where + "/value", "expected 0 or 1");
      }
      c.value = value.get<int>() == 1;
      d.constants.push_back(std::move(c));
    }
  }

  const ordered_json& outputs = array_at(member(j, "/", "outputs"), "/outputs");
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    std::string where = "/outputs/" + std::to_string(i);
    d.outputs.push_back(
        {string_at(member(outputs[i], where, "name"), where + "/name"),
         string_at(member(outputs[i], where, "net"), where + "/net")});
  }

  const ordered_json& cells = array_at(member(j, "/", "cells"), "/cells");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::string where = "/cells/" + std::to_string(i);
    const ordered_json& id = member(cells[i], where, "id");
    if (!id.is_number_unsigned() || id.get<std::size_t>() != i) {
      throw ImportError(where + "/id", "expected " + std::to_string(i));
    }
    std::string kind_name =
        string_at(member(cells[i], where, "kind"), where + "/kind");
    std::optional<GateKind> kind = parse_gate_kind(kind_name);
    if (!kind) {
      if (kind_name == "XOR2" || kind_name == "MUX2") {
        throw ImportError(where + "/kind",
                          kind_name + " is a macro, not a persisted gate kind");
      }
      throw ImportError(where + "/kind", "unknown gate kind '" + kind_name + "'");
    }
    CellDesc cell{*kind, {}, {}};
    const ordered_json& ins = array_at(member(cells[i], where, "in"), where + "/in");
    for (std::size_t k = 0; k < ins.size(); ++k) {
      cell.inputs.push_back(string_at(ins[k], where + "/in/" + std::to_string(k)));
    }
    cell.output = string_at(member(cells[i], where, "out"), where + "/out");
    d.cells.push_back(std::move(cell));
  }

  try {
    return Circuit::from_description(d);
  } catch (const NetlistError& e) {
    throw ImportError("/", e.what());
  }
}

// ---------------------------------------------------------------------------
// Structural HDL

namespace {

const std::unordered_set<std::string_view>& verilog_keywords() {
  static const std::unordered_set<std::string_view> kWords = {
      "always",  "and",      "assign",    "begin",      "buf",
      "case",    "casex",    "casez",     "default",    "defparam",
      "else",    "end",      "endcase",   "endfunction", "endmodule",
      "endtask", "for",      "force",     "forever",    "fork",
      "function", "if",      "initial",   "inout",      "input",
      "integer", "join",     "macromodule", "module",   "nand",
      "negedge", "nor",      "not",       "or",         "output",
      "parameter", "posedge", "reg",      "release",    "repeat",
      "supply0", "supply1",  "task",      "time",       "tri",
      "wait",    "wand",     "while",     "wire",       "wor",
      "xnor",    "xor",      "generate",  "endgenerate", "genvar",
      "localparam", "signed", "logic"};
  return kWords;
}

class IdentifierTable {
 public:
  std::string claim(std::string_view raw) {
    std::string base = sanitize_identifier(raw);
    if (base.empty()) base = "_";
    if (verilog_keywords().contains(base)) base += "_";
    std::string name = base;
    for (int k = 2; used_.contains(name); ++k) {
      name = base + "_" + std::to_string(k);
    }
    used_.insert(name);
    return name;
  }

 private:
  std::set<std::string> used_;
};

std::string_view primitive(GateKind kind) {
  switch (kind) {
    case GateKind::kAnd2:
      return "and";
    case GateKind::kOr2:
      return "or";
    case GateKind::kNand2:
      return "nand";
    case GateKind::kNor2:
      return "nor";
    case GateKind::kInv:
      return "not";
  }
  return "?";
}

}  // namespace

std::string to_structural_hdl(const Circuit& circuit) {
  IdentifierTable ids;
  const std::string module = ids.claim(circuit.name());
  std::vector<std::string> input_ids;
  std::vector<std::string> output_ids;
  for (const Circuit::Port& p : circuit.inputs()) input_ids.push_back(ids.claim(p.name));
  for (const Circuit::Port& p : circuit.outputs()) output_ids.push_back(ids.claim(p.name));

  const auto nets = circuit.nets();
  std::vector<std::string> net_id(nets.size());
  std::vector<bool> is_port_wire(nets.size(), false);
  for (std::size_t i = 0; i < circuit.inputs().size(); ++i) {
    net_id[circuit.inputs()[i].net.index] = input_ids[i];
    is_port_wire[circuit.inputs()[i].net.index] = true;
  }
  std::vector<std::string> aliases;  // "assign port = source;"
  std::vector<bool> claimed(nets.size(), false);
  for (std::size_t o = 0; o < circuit.outputs().size(); ++o) {
    NetRef r = circuit.outputs()[o].net;
    if (nets[r.index].driver == Circuit::DriverKind::kCell && !claimed[r.index]) {
      claimed[r.index] = true;
      net_id[r.index] = output_ids[o];
      is_port_wire[r.index] = true;
    }
  }
  for (std::size_t n = 0; n < nets.size(); ++n) {
    switch (nets[n].driver) {
      case Circuit::DriverKind::kConst0:
        net_id[n] = "1'b0";
        break;
      case Circuit::DriverKind::kConst1:
        net_id[n] = "1'b1";
        break;
      case Circuit::DriverKind::kCell:
        if (!is_port_wire[n]) net_id[n] = ids.claim(nets[n].name);
        break;
      case Circuit::DriverKind::kInput:
        break;
    }
  }
  for (std::size_t o = 0; o < circuit.outputs().size(); ++o) {
    const std::string& source = net_id[circuit.outputs()[o].net.index];
    if (source != output_ids[o]) {
      aliases.push_back("  assign " + output_ids[o] + " = " + source + ";\n");
    }
  }

  std::ostringstream os;
  os << "// Structural netlist generated by c72lab " << kToolVersion << "\n";
  os << "module " << module << " (";
  bool first = true;
  for (const auto* list : {&input_ids, &output_ids}) {
    for (const std::string& id : *list) {
      os << (first ? "\n  " : ",\n  ") << id;
      first = false;
    }
  }
  os << "\n);\n";
  for (const std::string& id : input_ids) os << "  input " << id << ";\n";
  for (const std::string& id : output_ids) os << "  output " << id << ";\n";
  for (std::size_t n = 0; n < nets.size(); ++n) {
    if (nets[n].driver == Circuit::DriverKind::kCell && !is_port_wire[n]) {
      os << "  wire " << net_id[n] << ";\n";
    }
  }
  const auto cells = circuit.cells();
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const Circuit::Cell& cell = cells[c];
    os << "  " << primitive(cell.kind) << " g" << c << " ("
       << net_id[cell.out.index];
    for (int k = 0; k < arity(cell.kind); ++k) {
      os << ", " << net_id[cell.in[k].index];
    }
    os << ");\n";
  }
  for (const std::string& a : aliases) os << a;
  os << "endmodule\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// DOT

namespace {

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string to_dot(const Circuit& circuit, const ArrivalMap* annotations) {
  if (annotations != nullptr &&
      (annotations->net_arrivals.size() != circuit.nets().size() ||
       annotations->input_arrivals.size() != circuit.inputs().size() ||
       annotations->output_arrivals.size() != circuit.outputs().size())) {
    throw std::invalid_argument("arrival annotations do not belong to '" +
                                circuit.name() + "'");
  }
  auto stage = [&](NetRef r) -> std::string {
    if (annotations == nullptr) return "";
    return " (" + std::to_string(annotations->net_arrivals[r.index]) + ")";
  };

  const auto nets = circuit.nets();
  // Node that drives each net.
  std::vector<std::string> source(nets.size());
  std::ostringstream os;
  os << "digraph " << dot_quote(circuit.name()) << " {\n";
  os << "  rankdir=LR;\n";
  for (const Circuit::Port& p : circuit.inputs()) {
    source[p.net.index] = dot_quote("in:" + p.name);
    os << "  " << source[p.net.index] << " [shape=circle, label="
       << dot_quote(p.name + stage(p.net)) << "];\n";
  }
  for (std::size_t n = 0; n < nets.size(); ++n) {
    bool zero = nets[n].driver == Circuit::DriverKind::kConst0;
    if (!zero && nets[n].driver != Circuit::DriverKind::kConst1) continue;
    source[n] = dot_quote("const:" + nets[n].name);
    os << "  " << source[n] << " [shape=plaintext, label="
       << dot_quote(zero ? "0" : "1") << "];\n";
  }
  const auto cells = circuit.cells();
  for (std::size_t c = 0; c < cells.size(); ++c) {
    source[cells[c].out.index] = dot_quote("g" + std::to_string(c));
    os << "  " << source[cells[c].out.index] << " [shape=box, label="
       << dot_quote(std::string(gate_kind_name(cells[c].kind)) +
                 stage(cells[c].out))
       << "];\n";
  }
  for (const Circuit::Port& p : circuit.outputs()) {
    os << "  " << dot_quote("out:" + p.name) << " [shape=doublecircle, label="
       << dot_quote(p.name + stage(p.net)) << "];\n";
  }
  for (std::size_t c = 0; c < cells.size(); ++c) {
    for (int k = 0; k < arity(cells[c].kind); ++k) {
      os << "  " << source[cells[c].in[k].index] << " -> "
         << source[cells[c].out.index] << ";\n";
    }
  }
  for (const Circuit::Port& p : circuit.outputs()) {
    os << "  " << source[p.net.index] << " -> " << dot_quote("out:" + p.name)
       << ";\n";
  }
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Files

void write_file_atomic(const std::filesystem::path& path,
                       std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw IoError("failed writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw IoError("cannot rename into '" + path.string() + "': " + ec.message());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace c72
