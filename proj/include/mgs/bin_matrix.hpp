#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "mgs/bits.hpp"

namespace mgs {

/// Dense F2 matrix, one BitVec per row (at most 64 columns).
class BinMatrix {
   public:
    BinMatrix() = default;
    BinMatrix(size_t rows, size_t cols);
    static BinMatrix identity(size_t n);
    static BinMatrix from_rows(size_t cols, std::vector<BitVec> rows);
    /// Rows given as bit strings, e.g. {"0111", "1010"}.
    static BinMatrix parse(std::initializer_list<std::string_view> rows);
    static BinMatrix parse(const std::vector<std::string>& rows);

    size_t rows() const { return rows_.size(); }
    size_t cols() const { return cols_; }
    bool get(size_t r, size_t c) const { return bit(rows_[r], static_cast<unsigned>(c)); }
    void set(size_t r, size_t c, bool v) { rows_[r] = with_bit(rows_[r], static_cast<unsigned>(c), v); }
    BitVec row(size_t r) const { return rows_[r]; }
    BitVec& row(size_t r) { return rows_[r]; }
    const std::vector<BitVec>& row_vecs() const { return rows_; }
    BitVec col(size_t c) const;

    BinMatrix transpose() const;
    BinMatrix operator*(const BinMatrix& o) const;
    BinMatrix operator+(const BinMatrix& o) const;
    bool operator==(const BinMatrix& o) const = default;

    size_t rank() const;
    /// Reduced row echelon form; zero rows dropped. Pivot = lowest set position.
    BinMatrix row_reduce() const;
    /// Basis of the right null space {v : M v = 0}.
    std::vector<BitVec> kernel() const;
    /// Principal submatrix on the given sorted indices.
    BinMatrix principal(const std::vector<unsigned>& keep) const;

    bool is_symmetric() const;
    bool zero_diagonal() const;
    bool is_identity() const;

    std::string row_string(size_t r) const { return vec_to_string(rows_[r], static_cast<unsigned>(cols_)); }
    std::vector<std::string> row_strings() const;

   private:
    size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

/// Row vector times matrix.
BitVec vec_mul(BitVec v, const BinMatrix& m);
/// v M w^T.
bool bilinear(BitVec v, const BinMatrix& m, BitVec w);

size_t rank_of(std::vector<BitVec> vs);
/// RREF of a list of vectors (pivot = lowest position), zero vectors dropped, sorted by pivot.
std::vector<BitVec> rref(std::vector<BitVec> vs);
bool in_span(const std::vector<BitVec>& basis, BitVec v);
/// All 2^k elements of the span of k independent generators, Gray-code order from 0.
std::vector<BitVec> span_elements(const std::vector<BitVec>& gens);
/// Basis of {v in F2^n : v . g = 0 for all g}.
std::vector<BitVec> orthogonal_complement(const std::vector<BitVec>& gens, unsigned n);

}  // namespace mgs
