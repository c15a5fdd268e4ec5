#pragma once

#include <optional>
#include <vector>

#include "mgs/extension.hpp"
#include "mgs/states.hpp"

namespace mgs {

/// b_j = i^exp, attached to the ordered product of dual rows indexed by j.
struct SignedTerm {
    BitVec j = 0;
    unsigned exp = 0;
    PauliWord word;  // the product s_j, without b_j
    Gaussian coefficient() const { return Gaussian::i_pow(static_cast<int>(exp)); }
    /// b_j s_j as a single word.
    PauliWord signed_word() const { return word.times_i(exp); }
};

/// Terms ordered by dense index of j (x_0 most significant).
std::vector<SignedTerm> sign_coefficients(const ParentExtension& p);

struct ChildResult {
    ParentExtension parent;
    DensityMatrix rho;
    std::vector<SignedTerm> terms;
};

/// rho = 2^-n sum_j b_j s_j. Throws std::logic_error if the terms fail to commute or are not Hermitian.
ChildResult child_from_pauli_sum(const ParentExtension& p, unsigned max_qubits = 12);
/// Partial trace of the parent state over the environment.
DensityMatrix child_by_partial_trace(const ParentExtension& p, unsigned max_qubits = 12);

/// Z_K rho Z_K with K a lab mask.
DensityMatrix conjugate_by_z(const DensityMatrix& rho, unsigned n, BitVec k);
/// Some K with Z_K a Z_K = b; `first` is tried before the exhaustive scan.
std::optional<BitVec> find_z_pattern(const DensityMatrix& a, const DensityMatrix& b, unsigned n, BitVec first);

struct ChildPairing {
    size_t a = 0;
    size_t b = 0;
    BitVec k = 0;
};

struct ChildFamily {
    std::vector<ChildResult> children;
    /// Index of the class each child belongs to; classes numbered by first member.
    std::vector<size_t> class_of;
    size_t class_count = 0;
    /// One link per non-representative child, relating it to its class representative.
    std::vector<ChildPairing> pairs;
};

ChildFamily children_family_e1(const MixedGraph& g, unsigned max_qubits = 12);

}  // namespace mgs
