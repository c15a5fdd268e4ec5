#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mgs/bits.hpp"
#include "mgs/gaussian.hpp"

namespace mgs {

enum class Pauli1 : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char pauli_char(Pauli1 p);
Pauli1 pauli_from_char(char c);
inline bool anticommute1(Pauli1 a, Pauli1 b) { return a != Pauli1::I && b != Pauli1::I && a != b; }

/// i^phase * prod_j X^{x_j} Z^{z_j}, each qubit in XZ order (so Y = i XZ adds 1 to phase).
class PauliWord {
   public:
    PauliWord() = default;
    explicit PauliWord(unsigned n);
    PauliWord(unsigned n, BitVec x, BitVec z, unsigned phase);

    /// Builds sign * (p_0 (x) p_1 (x) ...), sign = i^sign_exp, letters Hermitian.
    static PauliWord from_letters(const std::vector<Pauli1>& letters, unsigned sign_exp = 0);
    /// Parses "[+|-][i]LETTERS", e.g. "-iYXZ". Throws std::invalid_argument.
    static PauliWord parse(std::string_view s);

    unsigned n() const { return n_; }
    BitVec x() const { return x_; }
    BitVec z() const { return z_; }
    unsigned phase() const { return phase_; }

    Pauli1 at(unsigned j) const;
    std::vector<Pauli1> letters() const;
    /// Exponent s with word = i^s * (x) letters.
    unsigned sign_exp() const;
    bool is_identity_up_to_phase() const { return x_ == 0 && z_ == 0; }

    PauliWord times_i(unsigned k) const { return {n_, x_, z_, (phase_ + k) & 3}; }
    PauliWord tensor(const PauliWord& o) const;
    /// Replaces the letter at qubit j, keeping the sign.
    PauliWord with_letter(unsigned j, Pauli1 p) const;

    /// "-iYXZ" style.
    std::string str() const;

    bool operator==(const PauliWord&) const = default;

   private:
    unsigned n_ = 0;
    BitVec x_ = 0;
    BitVec z_ = 0;
    unsigned phase_ = 0;
};

/// p * q in matrix order.
PauliWord mul(const PauliWord& p, const PauliWord& q);
bool commutes(const PauliWord& p, const PauliWord& q);
/// Product of rows[k] for k in K, lowest index leftmost.
PauliWord ordered_product(const std::vector<PauliWord>& rows, BitVec K);
bool is_hermitian(const PauliWord& p);

/// Column index and value of the single nonzero entry of row `row` of the dense matrix.
struct DenseEntry {
    BitVec col;
    Gaussian value;
};
DenseEntry dense_row_entry(const PauliWord& p, BitVec row);

/// Dense rendering; qubit 0 is the leftmost tensor factor.
GaussianMatrix to_dense(const PauliWord& p, unsigned max_qubits = 12);

enum class Clifford : std::uint8_t { I, H, N, N2, NH, HN };
Clifford clifford_from_string(std::string_view s);
std::string clifford_str(Clifford c);

/// c P c^dagger on qubit j.
PauliWord conjugate_single(const PauliWord& p, unsigned j, Clifford c);

}  // namespace mgs
