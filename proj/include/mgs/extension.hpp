#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mgs/bin_matrix.hpp"
#include "mgs/graph.hpp"
#include "mgs/pauli.hpp"
#include "mgs/states.hpp"
#include "mgs/subgroups.hpp"

namespace mgs {

using TagMatrix = std::vector<std::vector<Pauli1>>;

struct EnvConjugation {
    unsigned env = 0;
    /// "H" (from the Clifford table) or "Z" (sign fix on an environment row).
    std::string gate;
    bool operator==(const EnvConjugation&) const = default;
};

/// Pure parent on n + e qubits in graph form; qubits n.. are the environment.
struct ParentExtension {
    MixedGraph graph;
    unsigned n = 0;
    unsigned e = 0;
    /// Symmetric, diagonal marks red (Y) nodes.
    BinMatrix ae;
    /// Graph-form rows that carry a -1 (binary linear terms of the phase function).
    BitVec lab_signs = 0;
    /// Environment tags before symmetrization (n rows, e columns); empty if unknown.
    TagMatrix ext_assign;
    std::vector<EnvConjugation> conjugations;
    std::vector<BitVec> L;
    BinMatrix H;
    BinMatrix G;
    /// How the environment columns were found.
    std::string method;

    unsigned n_total() const { return n + e; }
    BitVec env_mask() const { return low_mask(n + e) & ~low_mask(n); }
    PhaseFunction phase_function() const;
    /// Signed graph-form stabilizer rows.
    std::vector<PauliWord> graph_rows() const;
    /// Elements of J in index order (x_0 most significant).
    std::vector<BitVec> j_elements() const;
};

struct Indicator {
    std::vector<BitVec> L;
    BinMatrix H;
    BinMatrix G;
};
Indicator indicator(const ParentExtension& p);
Indicator indicator_from_sets(const std::vector<BitVec>& L, unsigned n);

bool verify_full_commutation(const std::vector<PauliWord>& rows);

/// Row products and environment-only conjugations to graph form.
/// Throws std::invalid_argument if rows do not pairwise commute or are dependent.
ParentExtension symmetrize(const std::vector<PauliWord>& rows, unsigned n, unsigned e);

/// Appends environment columns to the stabilizer rows of g, adds rows Z_{L_m} X_{n+m}, symmetrizes.
ParentExtension parent_from_tags(const MixedGraph& g, const TagMatrix& tags);
/// Parent given directly as a phase function on n + e variables (the last e are the environment).
ParentExtension parent_from_phase(const MixedGraph& g, const PhaseFunction& p);

std::vector<ParentExtension> extend_e1(const MixedGraph& g);
std::optional<ParentExtension> extend_for_subgroup(const MixedGraph& g, const IsotropicSubspace& m);

/// Column-by-column assignment following the indicator; empty result when the rows still clash.
std::optional<TagMatrix> greedy_tags(const BinMatrix& gamma, const std::vector<BitVec>& L);
/// Exhaustive row-major search, tags tried in order I, X, Z, Y.
std::optional<TagMatrix> backtrack_tags(const BinMatrix& gamma, const std::vector<BitVec>& L);

std::string tags_column_str(const TagMatrix& tags, unsigned m);

}  // namespace mgs
