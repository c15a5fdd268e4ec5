#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mgs {

struct Gaussian {
    std::int64_t re = 0;
    std::int64_t im = 0;

    constexpr Gaussian() = default;
    constexpr Gaussian(std::int64_t r, std::int64_t i = 0) : re(r), im(i) {}

    /// i^k for any integer k.
    static Gaussian i_pow(int k);

    Gaussian conj() const { return {re, -im}; }
    bool is_zero() const { return re == 0 && im == 0; }
    Gaussian operator+(Gaussian o) const { return {re + o.re, im + o.im}; }
    Gaussian operator-(Gaussian o) const { return {re - o.re, im - o.im}; }
    Gaussian operator-() const { return {-re, -im}; }
    Gaussian operator*(Gaussian o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
    Gaussian& operator+=(Gaussian o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    bool operator==(const Gaussian&) const = default;

    /// "0", "1", "-i", "2+3i", ...
    std::string str() const;
};

/// Square matrix of Gaussian integers over a global 2^denom_log2 denominator.
class GaussianMatrix {
   public:
    GaussianMatrix() = default;
    explicit GaussianMatrix(size_t dim, unsigned denom_log2 = 0);
    static GaussianMatrix identity(size_t dim);

    size_t dim() const { return dim_; }
    unsigned denom_log2() const { return denom_log2_; }
    const Gaussian& at(size_t r, size_t c) const { return entries_[r * dim_ + c]; }
    Gaussian& at(size_t r, size_t c) { return entries_[r * dim_ + c]; }
    const std::vector<Gaussian>& entries() const { return entries_; }

    /// Same value, denominator raised to d (d >= denom_log2).
    GaussianMatrix with_denom(unsigned d) const;
    /// Same value, denominator lowered while every entry stays integral (never below floor).
    GaussianMatrix reduced(unsigned floor = 0) const;

    GaussianMatrix operator*(const GaussianMatrix& o) const;
    GaussianMatrix operator+(const GaussianMatrix& o) const;
    GaussianMatrix scaled(Gaussian s) const;
    GaussianMatrix adjoint() const;
    GaussianMatrix kron(const GaussianMatrix& o) const;

    /// Exact value equality (denominators normalized first).
    bool operator==(const GaussianMatrix& o) const;
    bool is_hermitian() const;
    /// Trace numerator over the current denominator.
    Gaussian trace_numerator() const;
    bool trace_is_one() const;

    /// Aligned text grid, prefixed by the common factor, e.g. "1/8 *".
    std::string grid() const;

   private:
    size_t dim_ = 0;
    unsigned denom_log2_ = 0;
    std::vector<Gaussian> entries_;
};

}  // namespace mgs
