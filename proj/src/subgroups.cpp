#include "mgs/subgroups.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace mgs {

BitVec GammaReduction::embed(BitVec reduced) const {
    BitVec out = 0;
    for (unsigned a : members(reduced)) {
        out |= unit(kept.at(a));
    }
    return out;
}

GammaReduction reduce_gamma(const BinMatrix& gamma) {
    if (!gamma.is_symmetric() || !gamma.zero_diagonal()) {
        throw std::invalid_argument("reduce_gamma needs a symmetric zero-diagonal matrix");
    }
    GammaReduction red;
    red.gamma = gamma;
    std::vector<BitVec> basis;
    for (unsigned j = 0; j < gamma.rows(); j++) {
        basis.push_back(gamma.row(j));
        if (rank_of(basis) == basis.size()) {
            red.kept.push_back(j);
        } else {
            basis.pop_back();
            red.removed.push_back(j);
        }
    }
    red.gamma_tilde = gamma.principal(red.kept);
    red.kernel_basis = gamma.kernel();
    return red;
}

namespace {

struct Enumerator {
    const BinMatrix& form;
    unsigned dim;
    unsigned target;
    std::vector<BitVec> chosen;
    std::vector<std::vector<BitVec>> out;

    // Builds reduced echelon bases with pivots chosen in decreasing order, so every
    // subspace is produced exactly once.
    void run(unsigned pivot_limit, BitVec pivots) {
        if (chosen.size() == target) {
            auto basis = chosen;
            std::sort(basis.begin(), basis.end(), [](BitVec a, BitVec b) { return lowest_bit(a) < lowest_bit(b); });
            out.push_back(std::move(basis));
            return;
        }
        unsigned need = target - static_cast<unsigned>(chosen.size());
        for (unsigned p = pivot_limit; p-- > need - 1;) {
            BitVec free_mask = low_mask(dim) & ~low_mask(p + 1) & ~pivots;
            auto free_bits = members(free_mask);
            size_t count = size_t{1} << free_bits.size();
            for (size_t s = 0; s < count; s++) {
                BitVec v = unit(p);
                for (size_t k = 0; k < free_bits.size(); k++) {
                    if ((s >> k) & 1) {
                        v |= unit(free_bits[k]);
                    }
                }
                bool ok = true;
                for (BitVec w : chosen) {
                    if (bilinear(v, form, w)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) {
                    continue;
                }
                chosen.push_back(v);
                run(p, pivots | unit(p));
                chosen.pop_back();
            }
        }
    }
};

}  // namespace

std::vector<IsotropicSubspace> enumerate_max_isotropic(const GammaReduction& red, unsigned max_dim) {
    auto dim = static_cast<unsigned>(red.kept.size());
    if (dim > max_dim) {
        throw BoundExceeded("isotropic enumeration limited to 2e <= " + std::to_string(max_dim));
    }
    Enumerator en{red.gamma_tilde, dim, dim / 2, {}, {}};
    en.run(dim, 0);
    std::vector<IsotropicSubspace> out;
    for (const auto& basis : en.out) {
        IsotropicSubspace s;
        s.n = red.n();
        s.b = BinMatrix::from_rows(dim, basis);
        for (BitVec v : basis) {
            s.lifted.push_back(red.embed(v));
        }
        for (BitVec k : red.kernel_basis) {
            s.lifted.push_back(k);
        }
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(),
              [](const IsotropicSubspace& a, const IsotropicSubspace& b) { return a.b.row_strings() < b.b.row_strings(); });
    return out;
}

std::uint64_t chi(unsigned e) {
    std::uint64_t acc = 1;
    for (unsigned j = 1; j <= e; j++) {
        std::uint64_t f = (std::uint64_t{1} << j) + 1;
        if (j >= 63 || acc > UINT64_MAX / f) {
            throw std::overflow_error("chi(e) exceeds 64 bits");
        }
        acc *= f;
    }
    return acc;
}

size_t membership_count(const std::vector<IsotropicSubspace>& subspaces, BitVec element) {
    return static_cast<size_t>(std::count_if(subspaces.begin(), subspaces.end(),
                                             [&](const IsotropicSubspace& s) { return s.contains(element); }));
}

bool commutes_via_gamma(const BinMatrix& gamma, BitVec vk, BitVec vj) {
    BitVec range = low_mask(static_cast<unsigned>(gamma.rows()));
    if ((vk | vj) & ~range) {
        throw std::invalid_argument("vector length exceeds Gamma size");
    }
    return !bilinear(vk, gamma, vj);
}

std::uint64_t gamma_order(const BinMatrix& gt) {
    if (gt.rows() != gt.cols() || gt.rank() != gt.rows()) {
        throw std::invalid_argument("gamma_order needs an invertible matrix");
    }
    BinMatrix p = gt;
    // Orders in GL(m,2) are below 2^(2m); the loop is bounded well before that at desk scale.
    std::uint64_t limit = std::uint64_t{1} << std::min<size_t>(2 * gt.rows() + 1, 40);
    for (std::uint64_t u = 1; u <= limit; u++) {
        if (p.is_identity()) {
            return u;
        }
        p = p * gt;
    }
    throw std::logic_error("gamma_order did not terminate");
}

std::optional<BinMatrix> gram_factor_search(const BinMatrix& gt, std::uint64_t seed, size_t tries) {
    size_t m = gt.rows();
    auto check = [&](const BinMatrix& om) { return om * om.transpose() == gt; };
    if (m * m <= 16) {
        std::uint64_t total = std::uint64_t{1} << (m * m);
        for (std::uint64_t code = 0; code < total; code++) {
            BinMatrix om(m, m);
            for (size_t r = 0; r < m; r++) {
                om.row(r) = (code >> (r * m)) & low_mask(static_cast<unsigned>(m));
            }
            if (check(om)) {
                return om;
            }
        }
        return std::nullopt;
    }
    std::mt19937_64 rng(seed);
    for (size_t k = 0; k < tries; k++) {
        BinMatrix om(m, m);
        for (size_t r = 0; r < m; r++) {
            om.row(r) = rng() & low_mask(static_cast<unsigned>(m));
        }
        if (check(om)) {
            return om;
        }
    }
    return std::nullopt;
}

namespace {

// Rows a_1, b_1, ..., a_e, b_e with a_i F b_i = 1 and all other pairs 0.
std::vector<BitVec> symplectic_basis(const BinMatrix& form) {
    auto m = static_cast<unsigned>(form.rows());
    std::vector<BitVec> pool;
    for (unsigned k = 0; k < m; k++) {
        pool.push_back(unit(k));
    }
    std::vector<BitVec> out;
    while (!pool.empty()) {
        BitVec a = pool.front();
        auto it = std::find_if(pool.begin() + 1, pool.end(), [&](BitVec w) { return bilinear(a, form, w); });
        if (it == pool.end()) {
            throw std::logic_error("degenerate form in symplectic_basis");
        }
        BitVec b = *it;
        pool.erase(it);
        pool.erase(pool.begin());
        for (BitVec& w : pool) {
            // Project w off span{a, b}.
            BitVec adj = w;
            if (bilinear(w, form, b)) {
                adj ^= a;
            }
            if (bilinear(w, form, a)) {
                adj ^= b;
            }
            w = adj;
        }
        out.push_back(a);
        out.push_back(b);
    }
    return out;
}

// Coordinates of v in the span of independent basis vectors.
BitVec solve_in_basis(const std::vector<BitVec>& basis, BitVec v) {
    std::vector<std::pair<BitVec, BitVec>> red;
    for (size_t k = 0; k < basis.size(); k++) {
        BitVec vec = basis[k];
        BitVec combo = unit(static_cast<unsigned>(k));
        for (auto& [r, c] : red) {
            if (bit(vec, lowest_bit(r))) {
                vec ^= r;
                combo ^= c;
            }
        }
        if (!vec) {
            throw std::logic_error("dependent basis");
        }
        for (auto& [r, c] : red) {
            if (bit(r, lowest_bit(vec))) {
                r ^= vec;
                c ^= combo;
            }
        }
        red.emplace_back(vec, combo);
    }
    BitVec acc = 0;
    for (auto& [r, c] : red) {
        if (bit(v, lowest_bit(r))) {
            v ^= r;
            acc ^= c;
        }
    }
    if (v) {
        throw std::logic_error("vector outside span");
    }
    return acc;
}

}  // namespace

bool preserves_form(const BinMatrix& gamma_g, const BinMatrix& gamma_h, const GeneratorMap& f) {
    size_t n = gamma_g.rows();
    if (f.size() != n) {
        return false;
    }
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            if (gamma_g.get(i, j) != bilinear(f[i], gamma_h, f[j])) {
                return false;
            }
        }
    }
    return true;
}

std::optional<GeneratorMap> subgroup_isomorphism(const MixedGraph& g, const MixedGraph& h) {
    if (g.n() != h.n()) {
        return std::nullopt;
    }
    auto rg = reduce_gamma(g.skeleton());
    auto rh = reduce_gamma(h.skeleton());
    if (rg.e() != rh.e()) {
        return std::nullopt;
    }
    unsigned n = g.n();
    auto m = static_cast<unsigned>(rg.kept.size());

    // phi[a] = image of reduced basis vector a of g, in h's reduced coordinates.
    std::vector<BitVec> phi(m);
    if (rg.gamma_tilde == rh.gamma_tilde) {
        for (unsigned a = 0; a < m; a++) {
            phi[a] = unit(a);
        }
    } else {
        auto bg = symplectic_basis(rg.gamma_tilde);
        auto bh = symplectic_basis(rh.gamma_tilde);
        for (unsigned a = 0; a < m; a++) {
            BitVec coords = solve_in_basis(bg, unit(a));
            BitVec img = 0;
            for (unsigned k : members(coords)) {
                img ^= bh[k];
            }
            phi[a] = img;
        }
    }

    auto image_of_kept = [&](BitVec reduced_g) {
        BitVec img = 0;
        for (unsigned a : members(reduced_g)) {
            img ^= phi[a];
        }
        return rh.embed(img);
    };

    GeneratorMap f(n);
    for (unsigned i = 0; i < n; i++) {
        auto pos = std::find(rg.kept.begin(), rg.kept.end(), i);
        if (pos != rg.kept.end()) {
            f[i] = image_of_kept(unit(static_cast<unsigned>(pos - rg.kept.begin())));
            continue;
        }
        // e_i = w + k with w supported on kept indices and k in ker(Gamma_g).
        BitVec row = g.skeleton().row(i);
        std::vector<BitVec> kept_rows;
        for (unsigned k : rg.kept) {
            kept_rows.push_back(g.skeleton().row(k));
        }
        BitVec w_reduced = solve_in_basis(kept_rows, row);
        BitVec w = rg.embed(w_reduced);
        BitVec kvec = unit(i) ^ w;
        BitVec kc = solve_in_basis(rg.kernel_basis, kvec);
        BitVec kimg = 0;
        for (unsigned k : members(kc)) {
            kimg ^= rh.kernel_basis.at(k);
        }
        f[i] = image_of_kept(w_reduced) ^ kimg;
    }
    if (!preserves_form(g.skeleton(), h.skeleton(), f)) {
        throw std::logic_error("subgroup_isomorphism produced a non-isometry");
    }
    return f;
}

}  // namespace mgs
