#pragma once

#include <iosfwd>
#include <span>

#include "trifree/diagnostics.hpp"
#include "trifree/engine.hpp"
#include "trifree/graph.hpp"

namespace trifree {

/// Deterministic report text. No wall time, so identical invocations
/// produce byte-identical output.
void render_report(const RunReport& report, const Graph& g, std::ostream& out);

/// JSON Lines, one object per round trace.
void write_trace_jsonl(std::span<const RoundTrace> traces, std::ostream& out);

}  // namespace trifree
