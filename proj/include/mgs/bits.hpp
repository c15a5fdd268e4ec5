#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mgs {

/// Bit j of a BitVec is position j; in printed form position 0 is the leftmost character.
using BitVec = std::uint64_t;

constexpr unsigned MAX_BITS = 64;

inline bool bit(BitVec v, unsigned j) { return (v >> j) & 1u; }
inline BitVec with_bit(BitVec v, unsigned j, bool b) {
    return b ? (v | (BitVec{1} << j)) : (v & ~(BitVec{1} << j));
}
inline BitVec unit(unsigned j) { return BitVec{1} << j; }
inline BitVec low_mask(unsigned n) { return n >= 64 ? ~BitVec{0} : (BitVec{1} << n) - 1; }
inline unsigned popcount(BitVec v) { return static_cast<unsigned>(std::popcount(v)); }
inline bool parity(BitVec v) { return std::popcount(v) & 1; }
inline bool dot(BitVec a, BitVec b) { return parity(a & b); }
inline unsigned lowest_bit(BitVec v) { return static_cast<unsigned>(std::countr_zero(v)); }

/// Dense state index <-> qubit mask. Qubit 0 is the most significant index bit.
BitVec index_to_mask(BitVec index, unsigned n);
inline BitVec mask_to_index(BitVec mask, unsigned n) { return index_to_mask(mask, n); }

std::string vec_to_string(BitVec v, unsigned n);
/// Parses "0110" (position 0 first). Throws std::invalid_argument on bad characters.
BitVec vec_from_string(std::string_view s);

/// Sorted member indices of a mask.
std::vector<unsigned> members(BitVec v);
BitVec mask_of(const std::vector<unsigned>& idx);

/// Lexicographic order over sorted member lists ({} < {0} < {0,1} < {1}).
bool set_less(BitVec a, BitVec b);

class BoundExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
   public:
    ParseError(int line, const std::string& msg);
    int line() const { return line_; }

   private:
    int line_;
};

}  // namespace mgs
