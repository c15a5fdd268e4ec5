#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mgs/bits.hpp"
#include "mgs/gaussian.hpp"
#include "mgs/pauli.hpp"

namespace mgs {

/// p(x) = sum 2 x_j x_k + sum_{z4} x_j + sum_{bin} 2 x_j  (mod 4).
struct PhaseFunction {
    unsigned n_total = 0;
    /// Sorted pairs with j < k.
    std::vector<std::pair<unsigned, unsigned>> quadratic;
    BitVec z4_linear = 0;
    BitVec binary_linear = 0;

    /// x holds variable j at bit j.
    unsigned eval(BitVec x) const;
    void add_quadratic(unsigned j, unsigned k);
    /// Adds c * x_j (mod 4) to the linear part.
    void add_linear(unsigned j, unsigned c);

    /// Accepts sums like "2(x0x2+x1x2+x2)+x2"; every coefficient is taken mod 4.
    /// Throws std::invalid_argument on odd quadratic coefficients, cubic terms or syntax errors.
    static PhaseFunction parse(std::string_view text, unsigned n_total);
    std::string str() const;
    bool operator==(const PhaseFunction&) const = default;
};

class ExactStateVector {
   public:
    ExactStateVector(unsigned n_total, std::vector<std::uint8_t> phases, std::vector<std::uint8_t> nonzero,
                     unsigned norm_log2sqrt);

    unsigned n_total() const { return n_total_; }
    /// Global factor 2^(-s/2).
    unsigned norm_log2sqrt() const { return s_; }
    bool nonzero(BitVec index) const { return nonzero_[index]; }
    /// Exponent k of i^k at a non-zero index.
    unsigned phase(BitVec index) const { return phases_[index]; }
    /// Numerator i^k (or 0); the amplitude is this times 2^(-s/2).
    Gaussian numerator(BitVec index) const;

   private:
    unsigned n_total_;
    std::vector<std::uint8_t> phases_;
    std::vector<std::uint8_t> nonzero_;
    unsigned s_;
};

/// Density matrices are plain exact matrices; children carry denominator 2^n.
using DensityMatrix = GaussianMatrix;

/// Amplitude at index x is i^{p(x)} 2^{-n/2}; x_0 is the most significant bit.
ExactStateVector state_from_phase(const PhaseFunction& p, unsigned max_qubits = 12);
bool stabilizes(const PauliWord& w, const ExactStateVector& psi);

/// Sum over environment assignments a of |phi_a><phi_a|, phi_a the unnormalized sub-vector.
DensityMatrix partial_trace_env(const ExactStateVector& psi, BitVec env);
/// Same sum with every phi_a rescaled to unit norm first. The branch norms must be powers of two.
DensityMatrix branch_projector_sum(const ExactStateVector& psi, BitVec env);

/// Same matrix with the qubit order reversed (index bits mirrored).
GaussianMatrix reverse_qubits(const GaussianMatrix& m);

/// g rho g^dagger == rho for every generator.
bool stabilized_by(const GaussianMatrix& rho, const std::vector<PauliWord>& gens);
/// g rho g^dagger, computed from the single-entry-per-row structure of g.
GaussianMatrix conjugate_by(const GaussianMatrix& rho, const PauliWord& g);

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1);
    bool operator==(const Rational&) const = default;
    std::string str() const;
};

/// Value scaled / weight_den.
struct WeightedDensity {
    GaussianMatrix scaled;
    std::int64_t weight_den = 1;
    Rational trace() const;
};

WeightedDensity convex_combine(const std::vector<DensityMatrix>& children, const std::vector<Rational>& weights);

}  // namespace mgs
