#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "it2mabac/pipeline.hpp"
#include "it2mabac/problem.hpp"

namespace it2mabac {

enum class Format { Text, Machine };

/// "text" or "machine"; InvalidParams otherwise.
Format parse_format(std::string_view name);

/// Names accepted by render_table(), in pipeline order.
const std::vector<std::string>& table_names();

/// Full report. Text prints every intermediate table at 2 decimals; machine
/// emits one JSON document with every value at full precision.
std::string render(const DecisionProblem& problem, const PipelineTrace& trace, Format format);

/// One intermediate table ("weights", "decisions", "normalized", "weighted",
/// "baa", "q", "g", "delta", "ranking"). InvalidParams on an unknown name.
std::string render_table(const DecisionProblem& problem, const PipelineTrace& trace,
                         std::string_view name, Format format);

/// A machine-readable trace read back from render(..., Format::Machine).
struct MachineTrace {
  std::string problem;
  std::vector<std::string> alternatives;
  std::vector<std::string> criteria;
  PipelineParams params;
  PipelineTrace trace;
};

/// SyntaxError on malformed input.
MachineTrace parse_machine_trace(std::string_view json);

}  // namespace it2mabac
