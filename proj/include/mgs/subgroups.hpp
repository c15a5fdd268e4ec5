#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mgs/bin_matrix.hpp"
#include "mgs/graph.hpp"

namespace mgs {

struct GammaReduction {
    BinMatrix gamma;
    BinMatrix gamma_tilde;
    /// Indices kept in gamma_tilde, increasing.
    std::vector<unsigned> kept;
    /// Removed set Q, increasing.
    std::vector<unsigned> removed;
    std::vector<BitVec> kernel_basis;

    unsigned n() const { return static_cast<unsigned>(gamma.rows()); }
    unsigned e() const { return static_cast<unsigned>(kept.size() / 2); }
    unsigned t() const { return static_cast<unsigned>(removed.size()); }
    /// Reduced coordinates -> F2^n (zeros on Q).
    BitVec embed(BitVec reduced) const;
};

/// Greedy: keep a row iff it raises the rank of the rows kept so far.
GammaReduction reduce_gamma(const BinMatrix& gamma);

struct IsotropicSubspace {
    unsigned n = 0;
    /// e generators in reduced coordinates, in row-reduced form.
    BinMatrix b;
    /// Embedded generators followed by the kernel basis (e + t vectors in F2^n).
    std::vector<BitVec> lifted;

    bool contains(BitVec v) const { return in_span(lifted, v); }
    std::vector<BitVec> elements() const { return span_elements(lifted); }
    /// Reduced echelon basis of the lifted span.
    std::vector<BitVec> canonical_basis() const { return rref(lifted); }
};

/// All maximal isotropic subspaces of gamma_tilde, sorted by their reduced generators.
std::vector<IsotropicSubspace> enumerate_max_isotropic(const GammaReduction& red, unsigned max_dim = 16);

/// prod_{j=1}^{e} (2^j + 1). Throws std::overflow_error past 64 bits.
std::uint64_t chi(unsigned e);
size_t membership_count(const std::vector<IsotropicSubspace>& subspaces, BitVec element);
bool commutes_via_gamma(const BinMatrix& gamma, BitVec vk, BitVec vj);

/// Least u >= 1 with gt^u = I. Throws std::invalid_argument when gt is singular.
std::uint64_t gamma_order(const BinMatrix& gt);

/// Omega with Omega Omega^T = gt: exhaustive up to 4x4, seeded random search beyond.
std::optional<BinMatrix> gram_factor_search(const BinMatrix& gt, std::uint64_t seed = 1, size_t tries = 200000);

/// Row i = image of dual row i of g, as an index set of h's dual rows.
using GeneratorMap = std::vector<BitVec>;
std::optional<GeneratorMap> subgroup_isomorphism(const MixedGraph& g, const MixedGraph& h);
/// v Gg w^T == f(v) Gh f(w)^T on every pair of basis vectors.
bool preserves_form(const BinMatrix& gamma_g, const BinMatrix& gamma_h, const GeneratorMap& f);

}  // namespace mgs
