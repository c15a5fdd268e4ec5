#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mgs/bin_matrix.hpp"
#include "mgs/pauli.hpp"
#include "mgs/set_family.hpp"

namespace mgs {

enum class EdgeKind : std::uint8_t { Undirected, Directed };

struct Edge {
    unsigned from = 0;
    unsigned to = 0;
    EdgeKind kind = EdgeKind::Undirected;
    bool operator==(const Edge&) const = default;
};

/// Nodes 0..n-1, white (X) or red (Y), at most one edge per unordered pair.
class MixedGraph {
   public:
    MixedGraph() = default;
    explicit MixedGraph(unsigned n);
    /// A_jk = A_kj = 1 gives an undirected edge, a single 1 a directed one, A_jj a red node.
    static MixedGraph from_adjacency(const BinMatrix& a);

    unsigned n() const { return n_; }
    BitVec red() const { return red_; }
    bool is_red(unsigned j) const { return bit(red_, j); }
    void set_red(unsigned j, bool red);
    /// Throws std::invalid_argument on self-loop, duplicate pair or index out of range.
    void add_edge(unsigned from, unsigned to, EdgeKind kind);
    /// Sorted by (min endpoint, max endpoint).
    const std::vector<Edge>& edges() const { return edges_; }

    BinMatrix adjacency() const;
    /// Gamma = A + A^T.
    BinMatrix skeleton() const;
    MixedGraph reversed() const;

    bool operator==(const MixedGraph&) const = default;

   private:
    unsigned n_ = 0;
    BitVec red_ = 0;
    std::vector<Edge> edges_;
};

/// Throws ParseError carrying the 1-based line number.
MixedGraph parse_graph(std::string_view text);
std::string serialize_graph(const MixedGraph& g);

std::vector<PauliWord> stabilizer_matrix(const MixedGraph& g);
std::vector<PauliWord> dual_stabilizer(const MixedGraph& g);
/// Same construction for any square adjacency with colors on the diagonal.
std::vector<PauliWord> stabilizer_rows(const BinMatrix& a);

struct MixedRank {
    unsigned e = 0;
    unsigned t = 0;
};
MixedRank mixed_rank(const MixedGraph& g);
MixedRank mixed_rank_of_skeleton(const BinMatrix& gamma);

enum class F4 : std::uint8_t { Zero, One, Omega, Omega2 };
std::string f4_str(F4 v);
F4 f4_of(Pauli1 p);
std::vector<std::vector<F4>> f4_matrix(const MixedGraph& g);

/// Maximal (by inclusion) independent sets of the skeleton.
SetFamily maximal_independent_sets(const BinMatrix& gamma, unsigned max_nodes = 16);

struct MultipartiteParts {
    /// Ordered by smallest member; the third part is empty for a bipartite skeleton.
    std::array<BitVec, 3> parts{};
    BitVec isolated = 0;
};
std::optional<MultipartiteParts> complete_multipartite_parts(const BinMatrix& gamma);

}  // namespace mgs
