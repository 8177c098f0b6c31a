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

#include "c72/cli.h"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "c72/block_spec.h"
#include "c72/export.h"
#include "c72/generators.h"
#include "c72/timing.h"
#include "c72/verify.h"
#include "c72/version.h"
#include "json.hpp"

namespace c72 {
namespace {

using ordered_json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct BlockOptions {
  std::string block;
  std::optional<std::int64_t> width;
  std::optional<std::int64_t> cols;
  std::optional<std::int64_t> rows;
  std::optional<std::int64_t> middle_pick;
  std::optional<std::string> compressor;

  void attach(CLI::App* cmd) {
    cmd->add_option("block", block, "generator name or block spec text")
        ->required();
    cmd->add_option("--width", width, "adder width");
    cmd->add_option("--cols", cols, "array columns");
    cmd->add_option("--rows", rows, "array rows (only 7)");
    cmd->add_option("--middle-pick", middle_pick,
                    "half-sorter middle wire used as Y (0 or 1)");
    cmd->add_option("--compressor", compressor,
                    "(7,2) compressor block for array_reducer/pipeline");
  }

  BlockSpec spec() const {
    BlockSpec s = parse_block_spec(block);
    if (width) s.params["width"] = *width;
    if (cols) s.params["cols"] = *cols;
    if (rows) s.params["rows"] = *rows;
    if (middle_pick) s.params["middle-pick"] = *middle_pick;
    if (compressor) {
      s.compressor = std::make_shared<BlockSpec>(parse_block_spec(*compressor));
    }
    return normalize(s);
  }
};

struct Manifest {
  std::vector<std::string> command_line;
  std::vector<BlockSpec> blocks;
  std::vector<std::uint64_t> seeds;
  std::optional<StageModel> model;
  std::vector<std::string> report_paths;

  ordered_json json() const {
    ordered_json j;
    j["tool_version"] = kToolVersion;
    j["command_line"] = command_line;
    ordered_json specs = ordered_json::array();
    for (const BlockSpec& b : blocks) specs.push_back(to_json(b));
    j["blocks"] = std::move(specs);
    j["seeds"] = seeds;
    if (model) {
      j["stage_model"] = {{"inv_cost", model->inv_cost},
                          {"gate_cost", model->gate_cost}};
    } else {
      j["stage_model"] = nullptr;
    }
    j["report_paths"] = report_paths;
    return j;
  }
};

// Writes |doc| to |path| when given, to |out| otherwise.
void emit(const ordered_json& doc, const std::string& path, std::ostream& out) {
  std::string text = doc.dump(2) + "\n";
  if (path.empty()) {
    out << text;
  } else {
    write_file_atomic(path, text);
  }
}

StageModel stage_model(int inv_cost) {
  if (inv_cost != 0 && inv_cost != 1) {
    throw UsageError("--inv-cost must be 0 or 1");
  }
  StageModel m;
  m.inv_cost = inv_cost;
  return m;
}

std::map<std::string, int> parse_arrivals(
    const std::vector<std::string>& specs) {
  std::map<std::string, int> arrivals;
  for (const std::string& s : specs) {
    std::size_t eq = s.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw UsageError("--arrival expects NAME=STAGE, got '" + s + "'");
    }
    int stage = 0;
    const char* first = s.data() + eq + 1;
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, stage);
    if (ec != std::errc() || ptr != last || first == last) {
      throw UsageError("--arrival stage is not an integer in '" + s + "'");
    }
    if (stage < 0) throw UsageError("--arrival stage must be >= 0");
    arrivals[s.substr(0, eq)] = stage;
  }
  return arrivals;
}

ordered_json with_manifest(ordered_json doc, const Manifest& manifest) {
  doc["manifest"] = manifest.json();
  return doc;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"c72lab: build, verify, and stage-analyze (7,2) compressor "
               "netlists"};
  app.set_version_flag("--version", std::string(kToolVersion));
  bool schema_version = false;
  app.add_flag("--schema-version", schema_version,
               "print the JSON schema version and exit");
  app.require_subcommand(0, 1);

  BlockOptions build_opts;
  std::string build_out;
  std::string format = "json";
  bool annotate = false;
  int build_inv_cost = 0;
  auto add_build = [&](const char* name, const char* help) {
    CLI::App* cmd = app.add_subcommand(name, help);
    build_opts.attach(cmd);
    cmd->add_option("--out", build_out, "output file")->required();
    cmd->add_option("--format", format, "json | hdl | dot")
        ->check(CLI::IsMember({"json", "hdl", "dot"}));
    cmd->add_flag("--annotate", annotate, "label DOT nodes with stage numbers");
    cmd->add_option("--inv-cost", build_inv_cost,
                    "stages per inverter for --annotate");
    return cmd;
  };
  CLI::App* build_cmd = add_build("build", "write a generated circuit to a file");
  CLI::App* export_cmd = add_build("export", "alias of build");

  BlockOptions verify_opts;
  bool exhaustive = false;
  bool random = false;
  bool structured = false;
  bool serial = false;
  std::uint64_t seed = 1;
  std::uint64_t count = 100000;
  std::string oracle;
  std::string verify_out;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "check a block against its oracle");
  verify_opts.attach(verify_cmd);
  auto* ex_flag = verify_cmd->add_flag("--exhaustive", exhaustive,
                                       "enumerate every input vector");
  auto* rnd_flag = verify_cmd->add_flag(
      "--random", random, "structured suite plus seeded random vectors");
  auto* st_flag = verify_cmd->add_flag("--structured", structured,
                                       "structured suite only");
  ex_flag->excludes(rnd_flag)->excludes(st_flag);
  rnd_flag->excludes(st_flag);
  verify_cmd->add_option("--seed", seed, "PRNG seed (random mode)");
  verify_cmd->add_option("--count", count, "random vectors (random mode)");
  verify_cmd->add_option("--oracle", oracle,
                         "override the contract, or cout-independence");
  verify_cmd->add_flag("--serial", serial,
                       "use the one-vector reference evaluator");
  verify_cmd->add_option("--out", verify_out, "report file");

  BlockOptions depth_opts;
  int depth_inv_cost = 0;
  std::vector<std::string> arrival_specs;
  std::string depth_out;
  CLI::App* depth_cmd =
      app.add_subcommand("depth", "unit-delay arrival analysis");
  depth_opts.attach(depth_cmd);
  depth_cmd->add_option("--inv-cost", depth_inv_cost, "stages per inverter");
  depth_cmd->add_option("--arrival", arrival_specs,
                        "input arrival offset NAME=STAGE (repeatable)");
  depth_cmd->add_option("--out", depth_out, "report file");

  std::vector<std::string> compare_blocks;
  int compare_inv_cost = 0;
  std::string compare_out;
  CLI::App* compare_cmd =
      app.add_subcommand("compare", "depth and gate-count comparison");
  compare_cmd->add_option("blocks", compare_blocks, "block specs")->required();
  compare_cmd->add_option("--inv-cost", compare_inv_cost,
                          "stages per inverter");
  compare_cmd->add_option("--out", compare_out, "report file");

  CLI::App* list_cmd = app.add_subcommand("list", "list generators");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  Manifest manifest;
  manifest.command_line = args;

  try {
    if (schema_version) {
      out << kSchemaVersion << "\n";
      return kExitOk;
    }

    if (build_cmd->parsed() || export_cmd->parsed()) {
      BlockSpec spec = build_opts.spec();
      Circuit circuit = build(spec);
      std::string text;
      if (format == "json") {
        text = to_json(circuit);
      } else if (format == "hdl") {
        text = to_structural_hdl(circuit);
      } else {
        std::optional<ArrivalMap> arrivals;
        if (annotate) {
          StageModel m = stage_model(build_inv_cost);
          arrivals = depth(circuit, m);
          manifest.model = m;
        }
        text = to_dot(circuit, arrivals ? &*arrivals : nullptr);
      }
      write_file_atomic(build_out, text);
      manifest.blocks.push_back(spec);
      manifest.report_paths.push_back(build_out);
      ordered_json doc;
      doc["schema_version"] = kSchemaVersion;
      doc["kind"] = "build";
      doc["block"] = to_string(spec);
      doc["format"] = format;
      doc["path"] = build_out;
      doc["cells"] = circuit.cells().size();
      emit(with_manifest(std::move(doc), manifest), "", out);
      err << "wrote " << build_out << " (" << circuit.cells().size()
          << " cells)\n";
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      BlockSpec spec = verify_opts.spec();
      Circuit circuit = build(spec);
      Execution exec = serial ? Execution::kSerial : Execution::kParallel;
      VerificationReport report;
      if (oracle == "cout-independence") {
        if (random || structured) {
          throw UsageError("cout-independence is always exhaustive");
        }
        report = verify_cout_independence(circuit, exec);
      } else {
        Contract contract = oracle.empty() ? contract_for(spec, circuit)
                                           : make_contract(oracle, circuit);
        if (random) {
          if (count == 0) throw UsageError("--count must be >= 1");
          report = verify_random(circuit, contract, seed, count, exec);
          manifest.seeds.push_back(seed);
        } else if (structured) {
          report = verify_structured(circuit, contract, exec);
        } else {
          report = verify_exhaustive(circuit, contract, exec);
        }
      }
      report.block = to_string(spec);
      manifest.blocks.push_back(spec);
      if (!verify_out.empty()) manifest.report_paths.push_back(verify_out);
      emit(with_manifest(to_json(report), manifest), verify_out, out);
      err << (report.passed() ? "PASS " : "FAIL ") << report.block << ": "
          << report.vectors_tried << " vectors ("
          << verify_mode_name(report.mode) << ", " << report.oracle << ")\n";
      if (report.failure) {
        err << "  counterexample #" << report.failure->index << ": expected "
            << report.failure->expected << ", got " << report.failure->actual
            << "\n";
      }
      return report.passed() ? kExitOk : kExitVerifyFailed;
    }

    if (depth_cmd->parsed()) {
      BlockSpec spec = depth_opts.spec();
      Circuit circuit = build(spec);
      StageModel model = stage_model(depth_inv_cost);
      ArrivalMap map = depth(circuit, model, parse_arrivals(arrival_specs));
      manifest.blocks.push_back(spec);
      manifest.model = model;
      if (!depth_out.empty()) manifest.report_paths.push_back(depth_out);
      ordered_json doc = to_json(circuit, map, model);
      doc["block"] = to_string(spec);
      emit(with_manifest(std::move(doc), manifest), depth_out, out);
      err << to_text(circuit, map);
      return kExitOk;
    }

    if (compare_cmd->parsed()) {
      if (compare_blocks.size() < 2) {
        throw UsageError("compare needs at least 2 blocks");
      }
      StageModel model = stage_model(compare_inv_cost);
      std::vector<std::pair<std::string, Circuit>> circuits;
      for (const std::string& text : compare_blocks) {
        BlockSpec spec = normalize(parse_block_spec(text));
        manifest.blocks.push_back(spec);
        circuits.emplace_back(to_string(spec), build(spec));
      }
      manifest.model = model;
      if (!compare_out.empty()) manifest.report_paths.push_back(compare_out);
      ComparisonTable table = compare(circuits, model);
      emit(with_manifest(to_json(table), manifest), compare_out, out);
      err << to_text(table);
      return kExitOk;
    }

    if (list_cmd->parsed()) {
      ordered_json doc;
      doc["schema_version"] = kSchemaVersion;
      doc["kind"] = "generators";
      ordered_json list = ordered_json::array();
      for (const GeneratorInfo& g : generators()) {
        ordered_json params = ordered_json::object();
        for (const ParamInfo& p : g.params) {
          params[std::string(p.name)] = p.default_value;
        }
        list.push_back({{"name", std::string(g.name)},
                        {"contract", std::string(g.contract)},
                        {"params", std::move(params)},
                        {"takes_compressor", g.takes_compressor},
                        {"summary", std::string(g.summary)}});
      }
      doc["generators"] = std::move(list);
      out << doc.dump(2) << "\n";
      return kExitOk;
    }

    err << app.help();
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    // UsageError, ParameterError, UnknownGeneratorError, TooManyInputsError.
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NetlistError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace c72
