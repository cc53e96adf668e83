// Copyright 2026 The dhlab Authors.
// SPDX-License-Identifier: Apache-2.0
//
// dhlab: exact certificates for Duistermaat-Heckman log-concavity
// questions on complexity-two torus actions. One structured JSON document
// in, one report document (or TSV sample table) out.

#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "dhlab/commands.hpp"

namespace {

using dhlab::commands::json;

struct Options {
  std::vector<std::string> inputs;  // "-" = stdin
  std::string output;               // "" = stdout (single input only)
  unsigned resolution = 64;
  unsigned jobs = 1;
  bool strict_taxonomy = true;
};

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw dhlab::Error(dhlab::ErrorCode::ParseError,
                              "cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_all(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw dhlab::Error(dhlab::ErrorCode::ParseError,
                               "cannot open output file '" + path + "'");
  out << text;
}

json parse_document(const std::string& text, const std::string& path) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw dhlab::Error(dhlab::ErrorCode::ParseError,
                       path + ": " + ex.what());
  }
}

std::string run_one(const std::string& command, const std::string& input_path,
                    const Options& options) {
  const json doc = parse_document(read_all(input_path), input_path);
  if (command == "plot")
    return dhlab::commands::cmd_plot(doc, options.resolution);
  json report;
  if (command == "sig") report = dhlab::commands::cmd_sig(doc);
  else if (command == "counterexample") report = dhlab::commands::cmd_counterexample(doc);
  else if (command == "dh") report = dhlab::commands::cmd_dh(doc);
  else if (command == "walls") report = dhlab::commands::cmd_walls(doc, options.strict_taxonomy);
  else if (command == "hl") report = dhlab::commands::cmd_hl(doc);
  return report.dump(2) + "\n";
}

int run_batch(const std::string& command, const Options& options) {
  // Outputs are isolated per input file; any single failure fails the run
  // with the most severe exit code seen.
  std::atomic<int> worst{0};
  std::atomic<std::size_t> next{0};
  std::mutex log_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= options.inputs.size()) return;
      const std::string& path = options.inputs[i];
      try {
        const std::string result = run_one(command, path, options);
        const std::string suffix = command == "plot" ? ".tsv" : ".report.json";
        write_all(path + suffix, result);
      } catch (const dhlab::Error& ex) {
        std::scoped_lock lock(log_mutex);
        std::cerr << "dhlab: " << path << ": " << ex.what() << "\n";
        int code = dhlab::commands::exit_code_for(ex), seen = worst.load();
        while (code > seen && !worst.compare_exchange_weak(seen, code)) {}
      }
    }
  };
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < std::max(1u, options.jobs); ++t)
    threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  return worst.load();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Duistermaat-Heckman log-concavity certificates"};
  app.require_subcommand(1);

  Options options;
  const char* names[] = {"sig", "counterexample", "dh", "walls", "hl", "plot"};
  const char* briefs[] = {
      "inertia (b+, b-, b0, signature) of an intersection form",
      "strict-non-log-concavity pipeline from a form and symplectic class",
      "log-concavity verdict for a piecewise density profile",
      "wall-crossing propagation and b+ constancy check",
      "Hard Lefschetz checks for the sphere-bundle six-manifold",
      "TSV samples of t, f, ln f, h from a report document"};
  for (std::size_t i = 0; i < 6; ++i) {
    auto* sub = app.add_subcommand(names[i], briefs[i]);
    sub->add_option("--input,-i", options.inputs,
                    "input document(s); '-' reads stdin");
    sub->add_option("--output,-o", options.output,
                    "output file (single input; default stdout)");
    sub->add_option("--jobs,-j", options.jobs, "worker threads for batch inputs");
    if (std::string(names[i]) == "walls")
      sub->add_option("--strict-taxonomy", options.strict_taxonomy,
                      "enforce the six-manifold interior stratum taxonomy");
    if (std::string(names[i]) == "plot")
      sub->add_option("--resolution,-r", options.resolution,
                      "sample points per piece");
  }

  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();
  if (options.inputs.empty()) options.inputs.push_back("-");

  try {
    if (options.inputs.size() > 1) {
      if (!options.output.empty()) {
        std::cerr << "dhlab: --output requires a single --input\n";
        return 2;
      }
      return run_batch(command, options);
    }
    write_all(options.output, run_one(command, options.inputs.front(), options));
    return 0;
  } catch (const dhlab::Error& ex) {
    std::cerr << "dhlab: " << ex.what() << "\n";
    return dhlab::commands::exit_code_for(ex);
  }
}
