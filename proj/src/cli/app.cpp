// Copyright 2026 The qrad Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "qrad/cli/app.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qrad/arch/graph.hpp"
#include "qrad/campaign/output.hpp"
#include "qrad/decode/decoder.hpp"
#include "qrad/noise/instrument.hpp"

namespace qrad::cli {
namespace {

std::string arch_or_empty(const RunConfig& c) { return c.archs.empty() ? std::string() : c.archs.front(); }

campaign::SweepSettings settings_of(const RunConfig& c) {
  campaign::SweepSettings s;
  s.master_seed = c.seed;
  s.shots = c.shots;
  s.p = c.p.front();
  s.time_samples = c.time_samples;
  s.gamma = c.gamma;
  return s;
}

std::uint32_t parse_index(std::string_view text, const std::string& spec) {
  std::uint32_t v = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw ConfigError("inject: bad target in '" + spec + "'");
  return v;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

void print_events(std::ostream& out, const char* label, const std::vector<decode::DetectionEvent>& events) {
  out << label << ':';
  if (events.empty()) out << " none";
  for (const auto& e : events) out << " s" << e.stabilizer << "@r" << e.round;
  out << '\n';
}

void print_matching(std::ostream& out, const char* label, const decode::BasisTrace& trace) {
  out << label << ':';
  if (trace.events.empty()) out << " none";
  for (auto [u, v] : trace.matching.pairs()) {
    const auto& a = trace.events[u];
    out << " (s" << a.stabilizer << "@r" << a.round << ", ";
    if (v == decode::Matching::kBoundary) {
      out << "boundary)";
    } else {
      const auto& b = trace.events[static_cast<std::size_t>(v)];
      out << 's' << b.stabilizer << "@r" << b.round << ')';
    }
  }
  out << "  correction parity " << trace.correction_parity << '\n';
}

void print_summary(std::ostream& out, const campaign::SweepPlan& plan, const std::vector<campaign::CampaignResult>& results,
                   campaign::PreparedCache& cache) {
  if (plan.name == "distance") {
    for (const auto& s : campaign::summarize_distance(results)) {
      out << s.code.to_string() << "  qubits " << s.qubits << "  median " << fmt(s.median) << "  range [" << fmt(s.min)
          << ", " << fmt(s.max) << "] over " << s.roots << " nodes\n";
    }
  } else if (plan.name == "spread") {
    const auto s = campaign::summarize_spread(results);
    for (const auto& bar : s.bars)
      out << "k=" << bar.k << "  median " << fmt(bar.median) << " over " << bar.subgraphs << " subgraphs\n";
    out << "spreading fault reference " << fmt(s.spreading_reference) << '\n';
  } else if (plan.name == "arch") {
    for (const auto& s : campaign::summarize_arch(results, cache)) {
      out << s.arch << "  median " << fmt(s.median) << "  swaps " << s.swaps << "  two-qubit gates "
          << s.two_qubit_gates;
      if (s.index_trend) out << "  spearman " << fmt(s.index_trend->rho) << " (p=" << fmt(s.index_trend->p_value) << ')';
      out << '\n';
    }
  } else {
    for (const auto& r : results) {
      out << "p=" << r.point.phys_error_rate << " peak=" << r.point.peak << "  rate " << fmt(r.estimate.rate) << '\n';
    }
  }
}

}  // namespace

std::vector<std::string> default_archs_for(const codes::CodeSpec& code) {
  const auto qubits = codes::build_code(code).num_qubits();
  std::vector<std::string> archs{"linear:" + std::to_string(qubits), campaign::default_arch_for(code)};
  for (const auto& name : arch::preset_names()) {
    if (arch::preset_graph(name).num_nodes() >= qubits) archs.push_back("preset:" + name);
  }
  return archs;
}

std::vector<campaign::SweepPlan> plan_runs(const RunConfig& c, campaign::PreparedCache& cache) {
  const auto settings = settings_of(c);
  switch (c.sweep) {
    case SweepKind::SURFACE: {
      campaign::SurfaceSweep sweep{c.codes.front(), arch_or_empty(c), c.p, c.peak, c.root};
      return {campaign::plan_surface(sweep, settings)};
    }
    case SweepKind::DISTANCE: {
      campaign::DistanceSweep sweep{c.codes, arch_or_empty(c)};
      return {campaign::plan_distance(sweep, settings, cache)};
    }
    case SweepKind::SPREAD: {
      campaign::SpreadSweep sweep{c.codes.front(), arch_or_empty(c), c.sizes, c.max_subgraphs};
      return {campaign::plan_spread(sweep, settings, cache)};
    }
    case SweepKind::ARCH: {
      campaign::ArchSweep sweep{c.codes.front(), c.archs.empty() ? default_archs_for(c.codes.front()) : c.archs};
      return {campaign::plan_arch(sweep, settings, cache)};
    }
    case SweepKind::DECODE_DEBUG:
      break;
  }
  return {};
}

sim::Circuit inject_errors(const codes::SurfaceCode& code, const std::vector<std::string>& injections) {
  std::vector<sim::Gate> inserted;
  for (const auto& spec : injections) {
    const auto at = spec.find('@');
    if (at == std::string::npos) throw ConfigError("inject: expected PAULI@TARGET, got '" + spec + "'");
    std::string pauli = spec.substr(0, at);
    std::transform(pauli.begin(), pauli.end(), pauli.begin(), [](unsigned char ch) { return std::tolower(ch); });
    sim::GateKind kind;
    if (pauli == "x") kind = sim::GateKind::X;
    else if (pauli == "y") kind = sim::GateKind::Y;
    else if (pauli == "z") kind = sim::GateKind::Z;
    else throw ConfigError("inject: Pauli must be x, y or z in '" + spec + "'");

    const std::string_view target = std::string_view(spec).substr(at + 1);
    std::uint32_t qubit = 0;
    if (target.starts_with("data")) {
      const auto i = parse_index(target.substr(4), spec);
      if (i >= code.num_data()) throw ConfigError("inject: no data qubit " + std::to_string(i));
      qubit = i;
    } else if (target.starts_with("stab")) {
      const auto i = parse_index(target.substr(4), spec);
      if (i >= code.stabilizers.size()) throw ConfigError("inject: no stabilizer " + std::to_string(i));
      qubit = code.stabilizers[i].qubit;
    } else if (target == "ancilla") {
      qubit = code.ancilla;
    } else {
      qubit = parse_index(target, spec);
      if (qubit >= code.num_qubits()) throw ConfigError("inject: no qubit " + std::to_string(qubit));
    }
    inserted.push_back(sim::Gate::single(kind, qubit));
  }

  const auto& gates = code.circuit.gates();
  sim::Circuit out(code.circuit.num_qubits(), code.circuit.num_slots());
  for (std::size_t i = 0; i <= gates.size(); ++i) {
    if (i == code.first_round_end) {
      for (const auto& g : inserted) out.append(g);
    }
    if (i < gates.size()) out.append(gates[i]);
  }
  return out;
}

void decode_debug(const RunConfig& c, std::ostream& out) {
  const auto code = codes::build_code(c.codes.front());
  const auto circuit = inject_errors(code, c.inject);
  const noise::IntrinsicNoiseConfig intrinsic{c.p.front()};
  const std::vector<double> no_resets(circuit.num_qubits(), 0.0);
  const auto layout = noise::identity_layout(circuit.num_qubits());
  const auto noisy = noise::instrument_circuit(circuit, intrinsic, no_resets, layout);
  RandomStream rng(derive_seed(c.seed, 0));
  const auto record = noisy.run_shot(rng);

  const decode::Decoder decoder(code);
  const auto trace = decoder.trace(record);
  out << "code " << code.spec.to_string() << "  qubits " << code.num_qubits() << "  p " << c.p.front() << '\n';
  for (int r = 0; r < code.rounds; ++r) {
    out << "round " << r << ':';
    for (std::uint32_t s = 0; s < code.stabilizers.size(); ++s) {
      out << ' ' << (code.stabilizers[s].type == codes::Basis::Z ? 'Z' : 'X') << s << '='
          << int(record[code.slot_of(s, r)]);
    }
    out << '\n';
  }
  out << "data:";
  for (auto slot : code.data_slots) out << ' ' << int(record[slot]);
  out << '\n';
  print_events(out, "events z", trace.z.events);
  print_events(out, "events x", trace.x.events);
  print_matching(out, "matching z", trace.z);
  print_matching(out, "matching x", trace.x);
  out << "raw readout " << trace.raw_readout << '\n';
  out << "decoded " << trace.logical << (trace.logical == 1 ? " (correct)" : " (logical error)") << '\n';
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Radiation fault injection on surface codes", "qrad"};
  std::string sweep_positional, sweep_flag, config_path, p_text, peak_text, sizes_text, out_dir;
  std::vector<std::string> code_texts, arch_texts, inject_texts;
  std::optional<std::size_t> shots, max_subgraphs;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads, time_samples;
  std::optional<double> gamma;
  std::optional<std::uint32_t> root;
  bool dry_run = false;
  bool serial = false;

  app.add_option("kind", sweep_positional, "surface, distance, spread, arch or decode-debug");
  app.add_option("--sweep", sweep_flag, "Same as the positional sweep name");
  app.add_option("--config", config_path, "Config file, one `key = value` per line; flags override it");
  app.add_option("--code", code_texts, "CLASS:dZ,dX, e.g. rep:5,1 or xxzz:3,3 (repeatable)");
  app.add_option("--arch", arch_texts, "linear:N, mesh:R,C, complete:N, preset:NAME or file:PATH (repeatable)");
  app.add_option("--p", p_text, "Intrinsic error rate; comma-separated grid for surface");
  app.add_option("--peak", peak_text, "Peak reset probability; comma-separated grid for surface");
  app.add_option("--shots", shots, "Shots per point");
  app.add_option("--seed", seed, "Master seed");
  app.add_option("--threads", threads, "Worker threads, 0 for the OpenMP default");
  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--time-samples", time_samples, "Time bins of the fault");
  app.add_option("--gamma", gamma, "Temporal decay rate");
  app.add_option("--root", root, "Root node of the surface sweep fault");
  app.add_option("--sizes", sizes_text, "Erasure set sizes for the spread sweep, comma-separated");
  app.add_option("--max-subgraphs", max_subgraphs, "Erasure sets sampled per size");
  app.add_option("--inject", inject_texts, "decode-debug error, PAULI@TARGET (repeatable)");
  app.add_flag("--dry-run", dry_run, "Print the points without simulating");
  app.add_flag("--serial", serial, "Use the serial reference loop");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitConfig;
  }

  RunConfig config;
  try {
    if (!config_path.empty()) config = load_config_file(config_path);
    if (!sweep_positional.empty() && !sweep_flag.empty() && sweep_positional != sweep_flag)
      throw ConfigError("sweep: positional '" + sweep_positional + "' conflicts with --sweep '" + sweep_flag + "'");
    const auto& sweep = sweep_flag.empty() ? sweep_positional : sweep_flag;
    if (!sweep.empty()) set_config_value(config, "sweep", sweep);
    if (config_path.empty() && sweep.empty()) throw ConfigError("sweep: required");
    if (!code_texts.empty()) config.codes.clear();
    for (const auto& t : code_texts) set_config_value(config, "code", t);
    if (!arch_texts.empty()) config.archs.clear();
    for (const auto& t : arch_texts) set_config_value(config, "arch", t);
    if (!inject_texts.empty()) config.inject.clear();
    for (const auto& t : inject_texts) set_config_value(config, "inject", t);
    if (!p_text.empty()) set_config_value(config, "p", p_text);
    if (!peak_text.empty()) set_config_value(config, "peak", peak_text);
    if (!sizes_text.empty()) set_config_value(config, "sizes", sizes_text);
    if (!out_dir.empty()) config.out = out_dir;
    if (shots) config.shots = *shots;
    if (seed) config.seed = *seed;
    if (threads) config.threads = *threads;
    if (time_samples) config.time_samples = *time_samples;
    if (gamma) config.gamma = *gamma;
    if (root) config.root = *root;
    if (max_subgraphs) config.max_subgraphs = *max_subgraphs;
    if (dry_run) config.dry_run = true;
    apply_defaults(config);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitConfig;
  }

  try {
    if (config.sweep == SweepKind::DECODE_DEBUG) {
      decode_debug(config, out);
      return kExitOk;
    }

    campaign::PreparedCache cache(config.seed);
    const auto plans = plan_runs(config, cache);
    if (config.dry_run) {
      for (const auto& plan : plans) {
        for (const auto& pt : plan.points) out << plan.name << ' ' << pt.canonical() << " seed=" << pt.seed << '\n';
      }
      return kExitOk;
    }

    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(config.out, ec);
    if (ec || !fs::is_directory(config.out)) {
      err << "error: out: cannot create directory '" << config.out << "'\n";
      return kExitConfig;
    }

    campaign::RunManifest manifest;
    manifest.master_seed = config.seed;
    std::istringstream rendered(render_config(config));
    for (std::string line; std::getline(rendered, line);) {
      const auto eq = line.find(" = ");
      manifest.config[line.substr(0, eq)].push_back(line.substr(eq + 3));
    }

    campaign::RunOptions options;
    options.threads = config.threads;
    options.serial = serial;
    for (const auto& plan : plans) {
      const auto results = campaign::run_plan(plan, cache, options);
      const std::string file = plan.name + ".csv";
      std::ofstream csv(fs::path(config.out) / file);
      campaign::write_results_csv(csv, results);
      if (!csv) throw std::runtime_error("failed writing " + (fs::path(config.out) / file).string());
      manifest.files.push_back({plan.name, file, results.size()});
      print_summary(out, plan, results, cache);
    }
    std::ofstream(fs::path(config.out) / "manifest.json") << campaign::render_manifest(manifest);
    out << "wrote " << (fs::path(config.out) / "manifest.json").string() << '\n';
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace qrad::cli
