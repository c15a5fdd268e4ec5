#include "oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace oracle {

Mat mul(const Mat& x, const Mat& y) {
    Mat r(x.dim);
    for (size_t i = 0; i < x.dim; i++)
        for (size_t k = 0; k < x.dim; k++)
            for (size_t j = 0; j < x.dim; j++) r.at(i, j) = r.at(i, j) + x.at(i, k) * y.at(k, j);
    return r;
}

Mat add(const Mat& x, const Mat& y) {
    Mat r(x.dim);
    for (size_t i = 0; i < r.a.size(); i++) r.a[i] = x.a[i] + y.a[i];
    return r;
}

Mat scale(const Mat& x, Cx s) {
    Mat r(x.dim);
    for (size_t i = 0; i < r.a.size(); i++) r.a[i] = x.a[i] * s;
    return r;
}

Mat kron(const Mat& x, const Mat& y) {
    Mat r(x.dim * y.dim);
    for (size_t a = 0; a < x.dim; a++)
        for (size_t b = 0; b < x.dim; b++)
            for (size_t c = 0; c < y.dim; c++)
                for (size_t d = 0; d < y.dim; d++) r.at(a * y.dim + c, b * y.dim + d) = x.at(a, b) * y.at(c, d);
    return r;
}

Mat adjoint(const Mat& x) {
    Mat r(x.dim);
    for (size_t i = 0; i < x.dim; i++)
        for (size_t j = 0; j < x.dim; j++) r.at(i, j) = x.at(j, i).conj();
    return r;
}

Mat identity(size_t dim) {
    Mat r(dim);
    for (size_t i = 0; i < dim; i++) r.at(i, i) = {1, 0};
    return r;
}

Mat pauli(const std::string& word) {
    size_t pos = 0;
    Cx s{1, 0};
    if (pos < word.size() && (word[pos] == '+' || word[pos] == '-')) {
        if (word[pos] == '-') s = {-1, 0};
        pos++;
    }
    if (pos < word.size() && word[pos] == 'i') {
        s = s * Cx{0, 1};
        pos++;
    }
    Mat m = identity(1);
    for (; pos < word.size(); pos++) {
        Mat p(2);
        switch (word[pos]) {
            case 'I': p = identity(2); break;
            case 'X': p.at(0, 1) = {1, 0}; p.at(1, 0) = {1, 0}; break;
            case 'Z': p.at(0, 0) = {1, 0}; p.at(1, 1) = {-1, 0}; break;
            case 'Y': p.at(0, 1) = {0, -1}; p.at(1, 0) = {0, 1}; break;
            default: throw std::invalid_argument("bad letter");
        }
        m = kron(m, p);
    }
    return scale(m, s);
}

Mat hadamard2() {
    Mat h(2);
    h.at(0, 0) = {1, 0}; h.at(0, 1) = {1, 0}; h.at(1, 0) = {1, 0}; h.at(1, 1) = {-1, 0};
    return h;
}

Mat negahadamard2() {
    Mat n(2);
    n.at(0, 0) = {1, 0}; n.at(0, 1) = {0, 1}; n.at(1, 0) = {1, 0}; n.at(1, 1) = {0, -1};
    return n;
}

bool same(const Mat& x, unsigned dx, const mgs::GaussianMatrix& g) {
    if (x.dim != g.dim()) return false;
    unsigned d = std::max(dx, g.denom_log2());
    for (size_t r = 0; r < x.dim; r++) {
        for (size_t c = 0; c < x.dim; c++) {
            std::int64_t fx = std::int64_t{1} << (d - dx), fg = std::int64_t{1} << (d - g.denom_log2());
            Cx a = x.at(r, c), b{g.at(r, c).re, g.at(r, c).im};
            if (a.re * fx != b.re * fg || a.im * fx != b.im * fg) return false;
        }
    }
    return true;
}

unsigned eval(const Poly& p, const std::vector<int>& x) {
    unsigned s = 0;
    for (const auto& [vars, c] : p) {
        int v = 1;
        for (unsigned j : vars) v *= x[j];
        s += c * static_cast<unsigned>(v);
    }
    return s % 4;
}

std::vector<Cx> state(const Poly& p, unsigned n) {
    std::vector<Cx> v(size_t{1} << n);
    const Cx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (size_t idx = 0; idx < v.size(); idx++) {
        std::vector<int> x(n);
        for (unsigned j = 0; j < n; j++) x[j] = (idx >> (n - 1 - j)) & 1;
        v[idx] = ipow[eval(p, x)];
    }
    return v;
}

Mat partial_trace_last(const std::vector<Cx>& v, unsigned n, unsigned env) {
    // Full outer product, then sum the diagonal environment blocks.
    size_t dim = v.size(), ld = dim >> env, ed = size_t{1} << env;
    Mat full(dim);
    for (size_t r = 0; r < dim; r++)
        for (size_t c = 0; c < dim; c++) full.at(r, c) = v[r] * v[c].conj();
    Mat out(ld);
    for (size_t r = 0; r < ld; r++)
        for (size_t c = 0; c < ld; c++)
            for (size_t a = 0; a < ed; a++) out.at(r, c) = out.at(r, c) + full.at(r * ed + a, c * ed + a);
    // |psi><psi| carries 2^-n; the caller wants rho * 2^(n - env) so divide by 2^env.
    for (auto& z : out.a) {
        if (z.re % static_cast<std::int64_t>(ed) || z.im % static_cast<std::int64_t>(ed)) {
            throw std::logic_error("partial trace not integral at this scale");
        }
        z.re /= static_cast<std::int64_t>(ed);
        z.im /= static_cast<std::int64_t>(ed);
    }
    (void)n;
    return out;
}

std::vector<std::uint64_t> mis(const std::vector<std::uint64_t>& adj, unsigned n) {
    auto independent = [&](std::uint64_t s) {
        for (unsigned j = 0; j < n; j++)
            if ((s >> j & 1) && (adj[j] & s)) return false;
        return true;
    };
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); s++) {
        if (!independent(s)) continue;
        bool maximal = true;
        for (unsigned j = 0; j < n && maximal; j++)
            if (!(s >> j & 1) && independent(s | (std::uint64_t{1} << j))) maximal = false;
        if (maximal) out.push_back(s);
    }
    return out;
}

namespace {

bool form(const std::vector<std::uint64_t>& g, std::uint64_t a, std::uint64_t b, unsigned n) {
    int s = 0;
    for (unsigned i = 0; i < n; i++)
        if (a >> i & 1) s += __builtin_popcountll(g[i] & b);
    return s & 1;
}

std::vector<std::uint64_t> span_of(std::vector<std::uint64_t> els, std::uint64_t v) {
    std::set<std::uint64_t> s(els.begin(), els.end());
    for (auto e : els) s.insert(e ^ v);
    return {s.begin(), s.end()};
}

}  // namespace

std::vector<std::vector<std::uint64_t>> isotropic_spaces(const std::vector<std::uint64_t>& gamma, unsigned n) {
    std::set<std::vector<std::uint64_t>> seen, maximal;
    std::vector<std::vector<std::uint64_t>> stack{{0}};
    seen.insert({0});
    while (!stack.empty()) {
        auto cur = stack.back();
        stack.pop_back();
        bool grew = false;
        for (std::uint64_t v = 1; v < (std::uint64_t{1} << n); v++) {
            if (std::binary_search(cur.begin(), cur.end(), v)) continue;
            bool iso = true;
            for (auto e : cur)
                if (form(gamma, e, v, n)) { iso = false; break; }
            if (!iso) continue;
            grew = true;
            auto next = span_of(cur, v);
            if (seen.insert(next).second) stack.push_back(next);
        }
        if (!grew) maximal.insert(cur);
    }
    return {maximal.begin(), maximal.end()};
}

unsigned rank(const std::vector<std::uint64_t>& rows) {
    std::set<std::uint64_t> s{0};
    for (auto r : rows) {
        std::set<std::uint64_t> t = s;
        for (auto e : s) t.insert(e ^ r);
        s = t;
    }
    unsigned k = 0;
    while ((size_t{1} << k) < s.size()) k++;
    return k;
}

bool complete_multipartite(const std::vector<std::uint64_t>& adj, unsigned n) {
    std::vector<unsigned> active;
    for (unsigned j = 0; j < n; j++)
        if (adj[j]) active.push_back(j);
    if (active.empty()) return false;
    std::vector<int> col(n, 0);
    size_t total = 1;
    for (size_t i = 0; i < active.size(); i++) total *= 3;
    for (size_t code = 0; code < total; code++) {
        size_t c = code;
        for (unsigned j : active) { col[j] = static_cast<int>(c % 3); c /= 3; }
        bool ok = true;
        for (unsigned a : active)
            for (unsigned b : active)
                if (a != b && (((adj[a] >> b) & 1) != (col[a] != col[b]))) ok = false;
        if (ok) return true;
    }
    return false;
}

}  // namespace oracle
