#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mgs/report.hpp"

namespace mgs {

struct CheckResult {
    std::string name;
    bool ok = true;
    std::string detail;
};

/// Every property that applies to this graph.
std::vector<CheckResult> run_invariants(const MixedGraph& g, unsigned max_qubits);
/// Comparisons against a golden file (see schema/golden.schema.json).
std::vector<CheckResult> run_golden(const MixedGraph& g, const Json& golden, unsigned max_qubits);

CommandResult cmd_verify(const MixedGraph& g, const RunContext& ctx, const std::optional<Json>& golden);

}  // namespace mgs
