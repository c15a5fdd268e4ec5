#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "mgs/children.hpp"
#include "mgs/graph.hpp"
#include "mgs/set_family.hpp"

namespace mgs {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kInvariant = 1, kInput = 2, kBound = 3, kSearch = 4 };

/// Dense bound from MGSTATE_MAX_QUBITS, default 12. Throws std::invalid_argument on junk.
unsigned max_qubits_from_env();
/// FNV-1a 64-bit, lower-case hex.
std::string input_digest(std::string_view bytes);

Json matrix_json(const GaussianMatrix& m);
/// Throws std::invalid_argument on malformed input.
GaussianMatrix matrix_from_json(const Json& j);
Json family_json(const SetFamily& f);
Json set_json(BitVec s);

struct CommandResult {
    Json json;
    std::string text;
    int exit_code = kOk;
};

struct RunContext {
    std::string command;
    std::string digest;
    unsigned max_qubits = 12;
};

CommandResult cmd_analyze(const MixedGraph& g, const RunContext& ctx);
CommandResult cmd_subgroups(const MixedGraph& g, const RunContext& ctx);
/// subgroup = nullopt means all. Throws std::out_of_range for a bad index.
CommandResult cmd_children(const MixedGraph& g, const RunContext& ctx, std::optional<size_t> subgroup);
CommandResult cmd_signfree(const MixedGraph& g, const RunContext& ctx);

Json child_json(const ChildResult& c, unsigned max_qubits);

}  // namespace mgs
