#include "mgs/bin_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace mgs {

BinMatrix::BinMatrix(size_t rows, size_t cols) : cols_(cols), rows_(rows, 0) {
    if (cols > MAX_BITS) {
        throw std::invalid_argument("BinMatrix supports at most 64 columns");
    }
}

BinMatrix BinMatrix::identity(size_t n) {
    BinMatrix m(n, n);
    for (size_t k = 0; k < n; k++) {
        m.rows_[k] = unit(static_cast<unsigned>(k));
    }
    return m;
}

BinMatrix BinMatrix::from_rows(size_t cols, std::vector<BitVec> rows) {
    BinMatrix m(0, cols);
    for (BitVec r : rows) {
        if (r & ~low_mask(static_cast<unsigned>(cols))) {
            throw std::invalid_argument("row has bits beyond the column count");
        }
    }
    m.rows_ = std::move(rows);
    return m;
}

BinMatrix BinMatrix::parse(std::initializer_list<std::string_view> rows) {
    std::vector<std::string> v;
    for (auto r : rows) {
        v.emplace_back(r);
    }
    return parse(v);
}

BinMatrix BinMatrix::parse(const std::vector<std::string>& rows) {
    size_t cols = rows.empty() ? 0 : rows.front().size();
    std::vector<BitVec> out;
    for (const auto& r : rows) {
        if (r.size() != cols) {
            throw std::invalid_argument("ragged BinMatrix rows");
        }
        out.push_back(vec_from_string(r));
    }
    return from_rows(cols, out);
}

BitVec BinMatrix::col(size_t c) const {
    BitVec v = 0;
    for (size_t r = 0; r < rows_.size(); r++) {
        if (get(r, c)) {
            v |= unit(static_cast<unsigned>(r));
        }
    }
    return v;
}

BinMatrix BinMatrix::transpose() const {
    BinMatrix t(cols_, rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        for (size_t c = 0; c < cols_; c++) {
            if (get(r, c)) {
                t.set(c, r, true);
            }
        }
    }
    return t;
}

BinMatrix BinMatrix::operator*(const BinMatrix& o) const {
    if (cols_ != o.rows()) {
        throw std::invalid_argument("BinMatrix product dimension mismatch");
    }
    BinMatrix out(rows_.size(), o.cols_);
    for (size_t r = 0; r < rows_.size(); r++) {
        out.rows_[r] = vec_mul(rows_[r], o);
    }
    return out;
}

BinMatrix BinMatrix::operator+(const BinMatrix& o) const {
    if (cols_ != o.cols_ || rows_.size() != o.rows_.size()) {
        throw std::invalid_argument("BinMatrix sum dimension mismatch");
    }
    BinMatrix out = *this;
    for (size_t r = 0; r < rows_.size(); r++) {
        out.rows_[r] ^= o.rows_[r];
    }
    return out;
}

size_t BinMatrix::rank() const { return rank_of(rows_); }

BinMatrix BinMatrix::row_reduce() const { return from_rows(cols_, rref(rows_)); }

std::vector<BitVec> BinMatrix::kernel() const {
    auto red = rref(rows_);
    BitVec pivots = 0;
    for (BitVec r : red) {
        pivots |= unit(lowest_bit(r));
    }
    std::vector<BitVec> basis;
    for (unsigned f = 0; f < cols_; f++) {
        if (bit(pivots, f)) {
            continue;
        }
        BitVec v = unit(f);
        for (BitVec r : red) {
            if (bit(r, f)) {
                v |= unit(lowest_bit(r));
            }
        }
        basis.push_back(v);
    }
    return basis;
}

BinMatrix BinMatrix::principal(const std::vector<unsigned>& keep) const {
    BinMatrix out(keep.size(), keep.size());
    for (size_t a = 0; a < keep.size(); a++) {
        for (size_t b = 0; b < keep.size(); b++) {
            out.set(a, b, get(keep[a], keep[b]));
        }
    }
    return out;
}

bool BinMatrix::is_symmetric() const { return rows_.size() == cols_ && *this == transpose(); }

bool BinMatrix::zero_diagonal() const {
    for (size_t k = 0; k < std::min(rows_.size(), cols_); k++) {
        if (get(k, k)) {
            return false;
        }
    }
    return true;
}

bool BinMatrix::is_identity() const { return rows_.size() == cols_ && *this == identity(cols_); }

std::vector<std::string> BinMatrix::row_strings() const {
    std::vector<std::string> out;
    for (size_t r = 0; r < rows_.size(); r++) {
        out.push_back(row_string(r));
    }
    return out;
}

BitVec vec_mul(BitVec v, const BinMatrix& m) {
    BitVec out = 0;
    for (unsigned r : members(v)) {
        if (r >= m.rows()) {
            throw std::invalid_argument("vector longer than matrix row count");
        }
        out ^= m.row(r);
    }
    return out;
}

bool bilinear(BitVec v, const BinMatrix& m, BitVec w) { return dot(vec_mul(v, m), w); }

size_t rank_of(std::vector<BitVec> vs) { return rref(std::move(vs)).size(); }

std::vector<BitVec> rref(std::vector<BitVec> vs) {
    std::vector<BitVec> basis;
    for (BitVec v : vs) {
        for (BitVec b : basis) {
            if (bit(v, lowest_bit(b))) {
                v ^= b;
            }
        }
        if (v == 0) {
            continue;
        }
        unsigned p = lowest_bit(v);
        for (BitVec& b : basis) {
            if (bit(b, p)) {
                b ^= v;
            }
        }
        basis.push_back(v);
    }
    std::sort(basis.begin(), basis.end(), [](BitVec a, BitVec b) { return lowest_bit(a) < lowest_bit(b); });
    return basis;
}

bool in_span(const std::vector<BitVec>& basis, BitVec v) {
    auto red = rref(basis);
    for (BitVec b : red) {
        if (bit(v, lowest_bit(b))) {
            v ^= b;
        }
    }
    return v == 0;
}

std::vector<BitVec> span_elements(const std::vector<BitVec>& gens) {
    if (gens.size() > 30) {
        throw BoundExceeded("span too large to enumerate");
    }
    size_t count = size_t{1} << gens.size();
    std::vector<BitVec> out;
    out.reserve(count);
    BitVec acc = 0;
    out.push_back(acc);
    for (size_t k = 1; k < count; k++) {
        acc ^= gens[static_cast<size_t>(std::countr_zero(k))];
        out.push_back(acc);
    }
    return out;
}

std::vector<BitVec> orthogonal_complement(const std::vector<BitVec>& gens, unsigned n) {
    return BinMatrix::from_rows(n, gens).kernel();
}

}  // namespace mgs
