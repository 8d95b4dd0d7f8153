#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gradrep/io.hpp"

namespace gradrep {

/// Runs one command on a parsed problem. `args` uses the CLI flag names
/// without dashes: module, source, target, with, direction, sequence, map,
/// simple, kind, cap, seed, budget, window ("lo:hi"). File-valued arguments
/// (sequence, map) may be paths or inline JSON objects.
json run_command(const Problem& p, const std::string& command, const json& args);

/// Runs every task of the problem on up to `jobs` threads; results keyed by
/// task name. `on_done` is called once per task as it finishes (serialized).
/// If tasks fail, the error of the first failing task in file order is
/// rethrown after all tasks have run.
json run_tasks(const Problem& p, int jobs = 1,
               const std::function<void(const Task&, const json&)>& on_done = {});

const std::vector<std::string>& command_names();

/// Plain-text rendering of a command result.
std::string render_table(const Problem& p, const std::string& command, const json& result);

}  // namespace gradrep
