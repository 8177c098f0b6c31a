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

#include "c72/verify.h"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <random>

#include "c72/generators.h"
#include "c72/version.h"

namespace c72 {
namespace {

constexpr std::uint64_t kNoFailure = std::numeric_limits<std::uint64_t>::max();
constexpr std::uint64_t kLanes = 64;

// Writes vector |index| into |bits|; must be safe to call concurrently.
using VectorSource = std::function<void(std::uint64_t index, Bits& bits)>;

void atomic_min(std::atomic<std::uint64_t>& target, std::uint64_t value) {
  std::uint64_t seen = target.load(std::memory_order_relaxed);
  while (value < seen &&
         !target.compare_exchange_weak(seen, value, std::memory_order_relaxed)) {
  }
}

std::uint64_t first_failure_serial(const Circuit& circuit,
                                   const Contract& contract,
                                   std::uint64_t total,
                                   const VectorSource& source) {
  Bits in(circuit.inputs().size());
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    source(idx, in);
    Bits out = evaluate(circuit, in);
    if (check(contract, in, out)) return idx;
  }
  return kNoFailure;
}

std::uint64_t first_failure_parallel(const Circuit& circuit,
                                     const Contract& contract,
                                     std::uint64_t total,
                                     const VectorSource& source) {
  const std::size_t n_in = circuit.inputs().size();
  const std::size_t n_out = circuit.outputs().size();
  const auto batches = static_cast<std::int64_t>((total + kLanes - 1) / kLanes);
  std::atomic<std::uint64_t> best{kNoFailure};

#pragma omp parallel
  {
    std::vector<std::uint64_t> in_lanes(n_in);
    std::vector<std::uint64_t> out_lanes(n_out);
    std::vector<std::uint64_t> scratch;
    Bits vec(n_in);
    Bits out(n_out);

#pragma omp for schedule(dynamic, 8)
    for (std::int64_t batch = 0; batch < batches; ++batch) {
      const std::uint64_t start = static_cast<std::uint64_t>(batch) * kLanes;
      if (start >= best.load(std::memory_order_relaxed)) continue;
      const std::uint64_t lanes = std::min(kLanes, total - start);

      std::fill(in_lanes.begin(), in_lanes.end(), 0);
      for (std::uint64_t lane = 0; lane < lanes; ++lane) {
        source(start + lane, vec);
        for (std::size_t i = 0; i < n_in; ++i) {
          in_lanes[i] |= std::uint64_t{vec[i]} << lane;
        }
      }
      evaluate_lanes(circuit, in_lanes, out_lanes, scratch);

      for (std::uint64_t lane = 0; lane < lanes; ++lane) {
        for (std::size_t i = 0; i < n_in; ++i) {
          vec[i] = static_cast<std::uint8_t>((in_lanes[i] >> lane) & 1);
        }
        for (std::size_t o = 0; o < n_out; ++o) {
          out[o] = static_cast<std::uint8_t>((out_lanes[o] >> lane) & 1);
        }
        if (check(contract, vec, out)) {
          atomic_min(best, start + lane);
          break;
        }
      }
    }
  }
  return best.load();
}

std::vector<std::string> port_names(std::span<const Circuit::Port> ports) {
  std::vector<std::string> names;
  for (const Circuit::Port& p : ports) names.push_back(p.name);
  return names;
}

// Rebuilds the counterexample with the reference evaluator.
std::optional<Counterexample> run(const Circuit& circuit,
                                  const Contract& contract,
                                  std::uint64_t total,
                                  const VectorSource& source, Execution exec) {
  std::uint64_t idx =
      exec == Execution::kSerial
          ? first_failure_serial(circuit, contract, total, source)
          : first_failure_parallel(circuit, contract, total, source);
  if (idx == kNoFailure) return std::nullopt;
  Counterexample cx;
  cx.index = idx;
  cx.ports = port_names(circuit.inputs());
  cx.inputs.resize(circuit.inputs().size());
  source(idx, cx.inputs);
  Bits out = evaluate(circuit, cx.inputs);
  std::optional<Mismatch> m = check(contract, cx.inputs, out);
  if (m) {
    cx.expected = std::move(m->expected);
    cx.actual = std::move(m->actual);
  }
  return cx;
}

void index_bits(std::uint64_t index, Bits& bits) {
  const std::size_t n = bits.size();
  for (std::size_t i = 0; i < n; ++i) {
    bits[i] = static_cast<std::uint8_t>((index >> (n - 1 - i)) & 1);
  }
}

}  // namespace

std::string_view verify_mode_name(VerifyMode mode) {
  switch (mode) {
    case VerifyMode::kExhaustive:
      return "exhaustive";
    case VerifyMode::kRandom:
      return "random";
    case VerifyMode::kStructured:
      return "structured";
  }
  return "?";
}

std::vector<Bits> structured_vectors(const Circuit& circuit,
                                     const Contract& contract) {
  const std::size_t n = circuit.inputs().size();
  std::vector<Bits> suite;
  suite.emplace_back(n, 0);
  suite.emplace_back(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    Bits v(n, 0);
    v[i] = 1;
    suite.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < n; ++i) {
    Bits v(n, 1);
    v[i] = 0;
    suite.push_back(std::move(v));
  }
  for (const std::vector<std::size_t>& group : contract.saturation_groups) {
    Bits v(n, 0);
    for (std::size_t i : group) v[i] = 1;
    suite.push_back(std::move(v));
  }
  return suite;
}

VerificationReport verify_exhaustive(const Circuit& circuit,
                                     const Contract& contract,
                                     Execution exec) {
  const std::size_t n = circuit.inputs().size();
  if (n > kExhaustiveInputLimit) {
    throw TooManyInputsError(
        "'" + circuit.name() + "' has " + std::to_string(n) +
        " inputs; exhaustive mode is limited to " +
        std::to_string(kExhaustiveInputLimit) + ", use random mode");
  }
  VerificationReport r;
  r.block = circuit.name();
  r.oracle = contract.id;
  r.mode = VerifyMode::kExhaustive;
  r.vectors_tried = std::uint64_t{1} << n;
  r.failure = run(circuit, contract, r.vectors_tried, index_bits, exec);
  return r;
}

VerificationReport verify_structured(const Circuit& circuit,
                                     const Contract& contract,
                                     Execution exec) {
  const std::vector<Bits> suite = structured_vectors(circuit, contract);
  VerificationReport r;
  r.block = circuit.name();
  r.oracle = contract.id;
  r.mode = VerifyMode::kStructured;
  r.vectors_tried = suite.size();
  r.failure = run(
      circuit, contract, suite.size(),
      [&](std::uint64_t idx, Bits& bits) { bits = suite[idx]; }, exec);
  return r;
}

VerificationReport verify_random(const Circuit& circuit,
                                 const Contract& contract, std::uint64_t seed,
                                 std::uint64_t count, Execution exec) {
  if (count == 0) throw std::invalid_argument("random mode needs count >= 1");
  const std::size_t n = circuit.inputs().size();
  const std::size_t words = (n + 63) / 64;
  const std::vector<Bits> suite = structured_vectors(circuit, contract);

  std::vector<std::uint64_t> draws(count * words);
  std::mt19937_64 rng(seed);
  for (std::uint64_t& d : draws) d = rng();

  VectorSource source = [&](std::uint64_t idx, Bits& bits) {
    if (idx < suite.size()) {
      bits = suite[idx];
      return;
    }
    const std::uint64_t* w = draws.data() + (idx - suite.size()) * words;
    for (std::size_t i = 0; i < n; ++i) {
      bits[i] = static_cast<std::uint8_t>((w[i / 64] >> (i % 64)) & 1);
    }
  };

  VerificationReport r;
  r.block = circuit.name();
  r.oracle = contract.id;
  r.mode = VerifyMode::kRandom;
  r.seed = seed;
  r.count = count;
  r.vectors_tried = suite.size() + count;
  r.failure = run(circuit, contract, r.vectors_tried, source, exec);
  return r;
}

VerificationReport verify_cout_independence(const Circuit& circuit,
                                            Execution exec) {
  require_compressor_ports(circuit);
  constexpr std::uint64_t kVectors = 512;

  // Outputs for every input combination, indexed in circuit port order.
  std::vector<Bits> table(kVectors);
  if (exec == Execution::kSerial) {
    Bits in(circuit.inputs().size());
    for (std::uint64_t k = 0; k < kVectors; ++k) {
      index_bits(k, in);
      table[k] = evaluate(circuit, in);
    }
  } else {
    std::vector<std::uint64_t> in_lanes(circuit.inputs().size());
    std::vector<std::uint64_t> out_lanes(circuit.outputs().size());
    std::vector<std::uint64_t> scratch;
    Bits vec(circuit.inputs().size());
    for (std::uint64_t start = 0; start < kVectors; start += kLanes) {
      std::fill(in_lanes.begin(), in_lanes.end(), 0);
      for (std::uint64_t lane = 0; lane < kLanes; ++lane) {
        index_bits(start + lane, vec);
        for (std::size_t i = 0; i < vec.size(); ++i) {
          in_lanes[i] |= std::uint64_t{vec[i]} << lane;
        }
      }
      evaluate_lanes(circuit, in_lanes, out_lanes, scratch);
      for (std::uint64_t lane = 0; lane < kLanes; ++lane) {
        Bits& row = table[start + lane];
        row.resize(out_lanes.size());
        for (std::size_t o = 0; o < out_lanes.size(); ++o) {
          row[o] = static_cast<std::uint8_t>((out_lanes[o] >> lane) & 1);
        }
      }
    }
  }

  const std::size_t n = circuit.inputs().size();
  std::vector<std::size_t> order;  // x1..x7, Ci1, Ci2 as circuit positions
  for (const char* name :
       {"x1", "x2", "x3", "x4", "x5", "x6", "x7", "Ci1", "Ci2"}) {
    order.push_back(*circuit.input_index(name));
  }
  auto table_index = [&](std::uint64_t canonical) {
    std::uint64_t k = 0;
    for (std::size_t j = 0; j < order.size(); ++j) {
      std::uint64_t bit = (canonical >> (order.size() - 1 - j)) & 1;
      k |= bit << (n - 1 - order[j]);
    }
    return k;
  };
  const std::size_t co1 = *circuit.output_index("Co1");
  const std::size_t co2 = *circuit.output_index("Co2");

  VerificationReport r;
  r.block = circuit.name();
  r.oracle = "cout-independence";
  r.mode = VerifyMode::kExhaustive;
  r.vectors_tried = kVectors;
  for (std::uint64_t canonical = 0; canonical < kVectors && r.passed();
       ++canonical) {
    const Bits& ref = table[table_index(canonical & ~std::uint64_t{3})];
    const Bits& got = table[table_index(canonical)];
    if (ref[co1] == got[co1] && ref[co2] == got[co2]) continue;
    Counterexample cx;
    cx.index = canonical;
    cx.ports = port_names(circuit.inputs());
    cx.inputs.resize(n);
    index_bits(table_index(canonical), cx.inputs);
    auto show = [&](const Bits& row) {
      return "Co1=" + std::to_string(row[co1]) +
             " Co2=" + std::to_string(row[co2]);
    };
    cx.expected = show(ref) + " (as with Ci1=0 Ci2=0)";
    cx.actual = show(got);
    r.failure = std::move(cx);
  }
  return r;
}

nlohmann::ordered_json to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "verification";
  j["block"] = report.block;
  j["oracle"] = report.oracle;
  j["mode"] = verify_mode_name(report.mode);
  if (report.mode == VerifyMode::kRandom) {
    j["prng"] = kPrngName;
    j["seed"] = report.seed;
    j["count"] = report.count;
  }
  j["vectors_tried"] = report.vectors_tried;
  j["result"] = report.passed() ? "pass" : "fail";
  if (report.failure) {
    const Counterexample& cx = *report.failure;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < cx.ports.size(); ++i) {
      inputs[cx.ports[i]] = cx.inputs[i];
    }
    j["counterexample"] = {{"index", cx.index},
                           {"inputs", std::move(inputs)},
                           {"expected", cx.expected},
                           {"actual", cx.actual}};
  }
  return j;
}

}  // namespace c72
