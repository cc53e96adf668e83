// Copyright 2026 The dhlab Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "dhlab/errors.hpp"

namespace dhlab::commands {

using json = nlohmann::ordered_json;

/// Structured-document front ends. Each takes a parsed input document
/// ({"version", "kind", "payload"}) and returns a report document whose
/// exact values are "p/q" strings. Parse problems raise Error(ParseError).
json cmd_sig(const json& input);
json cmd_counterexample(const json& input);
json cmd_dh(const json& input);
json cmd_walls(const json& input, bool strict_taxonomy = true);
json cmd_hl(const json& input);

/// Tab-separated sample table (t, f, ln f, h) from a report document that
/// carries a density; `resolution` interior samples per piece, decimals at
/// 12 significant digits, piece boundaries as '#' comment lines.
std::string cmd_plot(const json& report, unsigned resolution);

/// Maps an Error to the CLI exit code contract: 2 for invalid input,
/// 3 for internal certificate inconsistencies.
int exit_code_for(const Error& error);

}  // namespace dhlab::commands
