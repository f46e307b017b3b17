#pragma once

#include "gzeta/render.hpp"

#include "json.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gzeta {

enum class OutputFormat { Text, Structured };

enum class TaskKind { Marks, LambdaSeries, SymPower, Euler, ZetaLefschetz, ZetaAcampo, Character };

const char* task_name(TaskKind t);

/// One self-contained batch job: a group, exactly one task with its payload,
/// truncation order, and output format. See README for the document schema.
struct JobDocument {
    nlohmann::json doc;
    TaskKind task = TaskKind::Marks;
    int order = kDefaultTruncationOrder;
    bool strict = true;
    OutputFormat format = OutputFormat::Text;
};

// Structural validation only; semantic checks happen in run(). Throws
// ParseError / SizeLimitError.
JobDocument parse_job(const std::string& text);

// Command-line flags that take precedence over document fields.
struct JobOverrides {
    std::optional<int> order;
    std::optional<bool> strict;
    std::optional<OutputFormat> format;
};

struct RunResult {
    std::string output; // complete data-stream document (text or structured)
    std::vector<std::string> warnings;
};

RunResult run(const JobDocument& job, const JobOverrides& overrides = {});

// CLI wrapper: data stream to out, diagnostics to err, exceptions mapped to
// the documented exit codes (0 ok, 2 parse, 3 validation, 4 size limit).
int run_to_streams(const std::string& text, const JobOverrides& overrides, std::ostream& out,
                   std::ostream& err);

} // namespace gzeta
