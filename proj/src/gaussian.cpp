#include "mgs/gaussian.hpp"

#include <algorithm>
#include <stdexcept>

namespace mgs {

Gaussian Gaussian::i_pow(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

std::string Gaussian::str() const {
    auto imag = [](std::int64_t v) {
        if (v == 1) {
            return std::string("i");
        }
        if (v == -1) {
            return std::string("-i");
        }
        return std::to_string(v) + "i";
    };
    if (im == 0) {
        return std::to_string(re);
    }
    if (re == 0) {
        return imag(im);
    }
    std::string s = std::to_string(re);
    std::string t = imag(im);
    if (t[0] != '-') {
        s += "+";
    }
    return s + t;
}

GaussianMatrix::GaussianMatrix(size_t dim, unsigned denom_log2)
    : dim_(dim), denom_log2_(denom_log2), entries_(dim * dim) {}

GaussianMatrix GaussianMatrix::identity(size_t dim) {
    GaussianMatrix m(dim);
    for (size_t k = 0; k < dim; k++) {
        m.at(k, k) = 1;
    }
    return m;
}

GaussianMatrix GaussianMatrix::with_denom(unsigned d) const {
    if (d < denom_log2_) {
        throw std::invalid_argument("with_denom cannot lower the denominator");
    }
    GaussianMatrix out = *this;
    std::int64_t f = std::int64_t{1} << (d - denom_log2_);
    for (auto& g : out.entries_) {
        g = g * Gaussian(f);
    }
    out.denom_log2_ = d;
    return out;
}

GaussianMatrix GaussianMatrix::reduced(unsigned floor) const {
    GaussianMatrix out = *this;
    while (out.denom_log2_ > floor &&
           std::all_of(out.entries_.begin(), out.entries_.end(),
                       [](const Gaussian& g) { return g.re % 2 == 0 && g.im % 2 == 0; })) {
        for (auto& g : out.entries_) {
            g = {g.re / 2, g.im / 2};
        }
        out.denom_log2_--;
    }
    return out;
}

GaussianMatrix GaussianMatrix::operator*(const GaussianMatrix& o) const {
    if (dim_ != o.dim_) {
        throw std::invalid_argument("matrix dimension mismatch");
    }
    GaussianMatrix out(dim_, denom_log2_ + o.denom_log2_);
    for (size_t r = 0; r < dim_; r++) {
        for (size_t k = 0; k < dim_; k++) {
            const Gaussian& a = at(r, k);
            if (a.is_zero()) {
                continue;
            }
            for (size_t c = 0; c < dim_; c++) {
                out.at(r, c) += a * o.at(k, c);
            }
        }
    }
    return out;
}

GaussianMatrix GaussianMatrix::operator+(const GaussianMatrix& o) const {
    if (dim_ != o.dim_) {
        throw std::invalid_argument("matrix dimension mismatch");
    }
    unsigned d = std::max(denom_log2_, o.denom_log2_);
    GaussianMatrix a = with_denom(d);
    GaussianMatrix b = o.with_denom(d);
    for (size_t k = 0; k < a.entries_.size(); k++) {
        a.entries_[k] += b.entries_[k];
    }
    return a;
}

GaussianMatrix GaussianMatrix::scaled(Gaussian s) const {
    GaussianMatrix out = *this;
    for (auto& g : out.entries_) {
        g = g * s;
    }
    return out;
}

GaussianMatrix GaussianMatrix::adjoint() const {
    GaussianMatrix out(dim_, denom_log2_);
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = 0; c < dim_; c++) {
            out.at(c, r) = at(r, c).conj();
        }
    }
    return out;
}

GaussianMatrix GaussianMatrix::kron(const GaussianMatrix& o) const {
    GaussianMatrix out(dim_ * o.dim_, denom_log2_ + o.denom_log2_);
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = 0; c < dim_; c++) {
            for (size_t r2 = 0; r2 < o.dim_; r2++) {
                for (size_t c2 = 0; c2 < o.dim_; c2++) {
                    out.at(r * o.dim_ + r2, c * o.dim_ + c2) = at(r, c) * o.at(r2, c2);
                }
            }
        }
    }
    return out;
}

bool GaussianMatrix::operator==(const GaussianMatrix& o) const {
    if (dim_ != o.dim_) {
        return false;
    }
    unsigned d = std::max(denom_log2_, o.denom_log2_);
    return with_denom(d).entries_ == o.with_denom(d).entries_;
}

bool GaussianMatrix::is_hermitian() const {
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = r; c < dim_; c++) {
            if (at(r, c) != at(c, r).conj()) {
                return false;
            }
        }
    }
    return true;
}

Gaussian GaussianMatrix::trace_numerator() const {
    Gaussian t;
    for (size_t k = 0; k < dim_; k++) {
        t += at(k, k);
    }
    return t;
}

bool GaussianMatrix::trace_is_one() const {
    return trace_numerator() == Gaussian(std::int64_t{1} << denom_log2_);
}

std::string GaussianMatrix::grid() const {
    std::vector<std::string> cells;
    cells.reserve(entries_.size());
    size_t width = 1;
    for (const auto& g : entries_) {
        cells.push_back(g.str());
        width = std::max(width, cells.back().size());
    }
    std::string out;
    if (denom_log2_ > 0) {
        out += "1/" + std::to_string(std::int64_t{1} << denom_log2_) + " *\n";
    }
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = 0; c < dim_; c++) {
            const std::string& s = cells[r * dim_ + c];
            out += std::string(width - s.size() + (c ? 1 : 0), ' ');
            out += s;
        }
        out += "\n";
    }
    return out;
}

}  // namespace mgs
