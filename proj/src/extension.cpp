#include "mgs/extension.hpp"

#include <algorithm>
#include <stdexcept>

namespace mgs {

PhaseFunction ParentExtension::phase_function() const {
    PhaseFunction p;
    p.n_total = n + e;
    for (unsigned j = 0; j < n + e; j++) {
        for (unsigned k = j + 1; k < n + e; k++) {
            if (ae.get(j, k)) {
                p.add_quadratic(j, k);
            }
        }
        if (ae.get(j, j)) {
            p.add_linear(j, 1);
        }
    }
    for (unsigned j : members(lab_signs)) {
        p.add_linear(j, 2);
    }
    return p;
}

std::vector<PauliWord> ParentExtension::graph_rows() const {
    auto rows = stabilizer_rows(ae);
    for (unsigned j : members(lab_signs)) {
        rows[j] = rows[j].times_i(2);
    }
    return rows;
}

std::vector<BitVec> ParentExtension::j_elements() const {
    auto out = span_elements(G.row_vecs());
    std::sort(out.begin(), out.end(), [this](BitVec a, BitVec b) { return mask_to_index(a, n) < mask_to_index(b, n); });
    return out;
}

Indicator indicator_from_sets(const std::vector<BitVec>& L, unsigned n) {
    Indicator ind;
    ind.L = L;
    ind.H = BinMatrix::from_rows(n, L);
    ind.G = BinMatrix::from_rows(n, rref(ind.H.kernel()));
    return ind;
}

Indicator indicator(const ParentExtension& p) {
    std::vector<BitVec> L;
    for (unsigned m = 0; m < p.e; m++) {
        L.push_back(p.ae.col(p.n + m) & low_mask(p.n));
    }
    return indicator_from_sets(L, p.n);
}

bool verify_full_commutation(const std::vector<PauliWord>& rows) {
    for (size_t a = 0; a < rows.size(); a++) {
        for (size_t b = a + 1; b < rows.size(); b++) {
            if (!commutes(rows[a], rows[b])) {
                return false;
            }
        }
    }
    return true;
}

namespace {

void apply_env_gate(std::vector<PauliWord>& rows, unsigned q, Clifford c) {
    for (auto& r : rows) {
        r = conjugate_single(r, q, c);
    }
}

}  // namespace

ParentExtension symmetrize(const std::vector<PauliWord>& input, unsigned n, unsigned e) {
    unsigned nt = n + e;
    if (input.size() != nt) {
        throw std::invalid_argument("symmetrize needs n + e rows");
    }
    if (nt > 32) {
        throw BoundExceeded("symmetrize supports at most 32 qubits");
    }
    for (const auto& r : input) {
        if (r.n() != nt) {
            throw std::invalid_argument("row width differs from n + e");
        }
        if (!is_hermitian(r)) {
            throw std::invalid_argument("row " + r.str() + " is not Hermitian");
        }
    }
    if (!verify_full_commutation(input)) {
        throw std::invalid_argument("rows do not pairwise commute");
    }
    std::vector<BitVec> sym;
    for (const auto& r : input) {
        sym.push_back(r.x() | (r.z() << nt));
    }
    if (rank_of(sym) != nt) {
        throw std::invalid_argument("rows are not independent");
    }
    BitVec lab = low_mask(n);
    for (unsigned j = 0; j < n; j++) {
        if ((input[j].x() & lab) != unit(j)) {
            throw std::invalid_argument("lab block must have X/Y on the diagonal and I/Z elsewhere");
        }
    }

    std::vector<PauliWord> rows = input;
    ParentExtension out;
    out.n = n;
    out.e = e;

    // The child graph is read off the lab block before any row products.
    BinMatrix a(n, n);
    for (unsigned j = 0; j < n; j++) {
        a.row(j) = rows[j].z() & lab;
    }
    out.graph = MixedGraph::from_adjacency(a);

    for (unsigned r = n; r < nt; r++) {
        for (unsigned j : members(rows[r].x() & lab)) {
            rows[r] = mul(rows[r], rows[j]);
        }
    }

    // Pick the first set of environment Hadamards that makes the env X block invertible.
    auto env_x_rank = [&](BitVec hset) {
        std::vector<BitVec> block;
        for (unsigned r = n; r < nt; r++) {
            BitVec v = 0;
            for (unsigned m = 0; m < e; m++) {
                bool b = bit(hset, m) ? bit(rows[r].z(), n + m) : bit(rows[r].x(), n + m);
                v = with_bit(v, m, b);
            }
            block.push_back(v);
        }
        return rank_of(block);
    };
    BitVec hset = 0;
    while (env_x_rank(hset) != e) {
        hset++;
        if (hset >> e) {
            throw std::logic_error("no Hadamard pattern gives an invertible environment block");
        }
    }
    for (unsigned m : members(hset)) {
        apply_env_gate(rows, n + m, Clifford::H);
        out.conjugations.push_back({m, "H"});
    }

    for (unsigned m = 0; m < e; m++) {
        unsigned col = n + m;
        unsigned pivot = nt;
        for (unsigned r = col; r < nt; r++) {
            if (bit(rows[r].x(), col)) {
                pivot = r;
                break;
            }
        }
        if (pivot == nt) {
            throw std::logic_error("environment elimination lost its pivot");
        }
        std::swap(rows[col], rows[pivot]);
        for (unsigned r = n; r < nt; r++) {
            if (r != col && bit(rows[r].x(), col)) {
                rows[r] = mul(rows[r], rows[col]);
            }
        }
    }
    for (unsigned j = 0; j < n; j++) {
        for (unsigned m = 0; m < e; m++) {
            if (bit(rows[j].x(), n + m)) {
                rows[j] = mul(rows[j], rows[n + m]);
            }
        }
    }

    out.ae = BinMatrix(nt, nt);
    for (unsigned j = 0; j < nt; j++) {
        if (rows[j].x() != unit(j)) {
            throw std::logic_error("graph form not reached");
        }
        out.ae.row(j) = rows[j].z();
    }
    if (!out.ae.is_symmetric()) {
        throw std::logic_error("graph form is not symmetric");
    }
    for (unsigned j = 0; j < nt; j++) {
        if (rows[j].sign_exp() == 0) {
            continue;
        }
        if (j < n) {
            out.lab_signs |= unit(j);
        } else {
            // Z on the environment qubit flips only this row in graph form.
            for (auto& r : rows) {
                if (bit(r.x(), j)) {
                    r = r.times_i(2);
                }
            }
            out.conjugations.push_back({j - n, "Z"});
        }
    }
    auto ind = indicator(out);
    out.L = ind.L;
    out.H = ind.H;
    out.G = ind.G;
    out.method = "given";
    return out;
}

ParentExtension parent_from_tags(const MixedGraph& g, const TagMatrix& tags) {
    unsigned n = g.n();
    if (tags.size() != n) {
        throw std::invalid_argument("one tag row per node required");
    }
    auto e = static_cast<unsigned>(tags.empty() ? 0 : tags[0].size());
    auto base = stabilizer_matrix(g);
    std::vector<PauliWord> rows;
    std::vector<BitVec> L(e, 0);
    for (unsigned j = 0; j < n; j++) {
        if (tags[j].size() != e) {
            throw std::invalid_argument("ragged tag matrix");
        }
        rows.push_back(base[j].tensor(PauliWord::from_letters(tags[j])));
        for (unsigned m = 0; m < e; m++) {
            if (tags[j][m] == Pauli1::Z || tags[j][m] == Pauli1::Y) {
                L[m] |= unit(j);
            }
        }
    }
    for (unsigned m = 0; m < e; m++) {
        std::vector<Pauli1> letters(n + e, Pauli1::I);
        for (unsigned j : members(L[m])) {
            letters[j] = Pauli1::Z;
        }
        letters[n + m] = Pauli1::X;
        rows.push_back(PauliWord::from_letters(letters));
    }
    if (!verify_full_commutation(rows)) {
        throw std::invalid_argument("tag assignment does not give a commuting set");
    }
    ParentExtension p = symmetrize(rows, n, e);
    p.graph = g;
    p.ext_assign = tags;
    return p;
}

ParentExtension parent_from_phase(const MixedGraph& g, const PhaseFunction& pf) {
    unsigned n = g.n();
    if (pf.n_total < n) {
        throw std::invalid_argument("phase function has fewer variables than the graph");
    }
    ParentExtension p;
    p.graph = g;
    p.n = n;
    p.e = pf.n_total - n;
    p.ae = BinMatrix(pf.n_total, pf.n_total);
    for (auto [j, k] : pf.quadratic) {
        p.ae.set(j, k, true);
        p.ae.set(k, j, true);
    }
    for (unsigned j : members(pf.z4_linear)) {
        p.ae.set(j, j, true);
    }
    if (pf.binary_linear & p.env_mask()) {
        throw std::invalid_argument("environment binary linear terms are not supported");
    }
    p.lab_signs = pf.binary_linear;
    auto ind = indicator(p);
    p.L = ind.L;
    p.H = ind.H;
    p.G = ind.G;
    p.method = "phase";
    return p;
}

std::vector<ParentExtension> extend_e1(const MixedGraph& g) {
    if (mixed_rank(g).e != 1) {
        throw std::invalid_argument("extend_e1 needs mixed rank e = 1");
    }
    auto parts = complete_multipartite_parts(g.skeleton());
    if (!parts) {
        throw std::logic_error("e = 1 skeleton is not complete multipartite");
    }
    static const Pauli1 perms[6][3] = {
        {Pauli1::X, Pauli1::Z, Pauli1::Y}, {Pauli1::X, Pauli1::Y, Pauli1::Z}, {Pauli1::Z, Pauli1::X, Pauli1::Y},
        {Pauli1::Z, Pauli1::Y, Pauli1::X}, {Pauli1::Y, Pauli1::X, Pauli1::Z}, {Pauli1::Y, Pauli1::Z, Pauli1::X},
    };
    std::vector<ParentExtension> out;
    std::vector<TagMatrix> seen;
    for (const auto& perm : perms) {
        TagMatrix tags(g.n(), std::vector<Pauli1>(1, Pauli1::I));
        for (unsigned s = 0; s < 3; s++) {
            for (unsigned j : members(parts->parts[s])) {
                tags[j][0] = perm[s];
            }
        }
        if (std::find(seen.begin(), seen.end(), tags) != seen.end()) {
            continue;
        }
        seen.push_back(tags);
        auto p = parent_from_tags(g, tags);
        p.method = "e1-coloring";
        out.push_back(std::move(p));
    }
    return out;
}

namespace {

bool tags_clash(const BinMatrix& gamma, const TagMatrix& tags, unsigned i, unsigned j) {
    bool anti = gamma.get(i, j);
    for (size_t m = 0; m < tags[i].size(); m++) {
        anti ^= anticommute1(tags[i][m], tags[j][m]);
    }
    return anti;
}

struct Backtracker {
    const BinMatrix& gamma;
    const std::vector<BitVec>& L;
    unsigned n, e;
    TagMatrix tags;

    bool run(unsigned j) {
        if (j == n) {
            return true;
        }
        for (unsigned code = 0; code < (1u << e); code++) {
            for (unsigned m = 0; m < e; m++) {
                // Low-to-high code bit per column: I then X off L_m, Z then Y on L_m.
                bool alt = (code >> (e - 1 - m)) & 1;
                if (bit(L[m], j)) {
                    tags[j][m] = alt ? Pauli1::Y : Pauli1::Z;
                } else {
                    tags[j][m] = alt ? Pauli1::X : Pauli1::I;
                }
            }
            bool ok = true;
            for (unsigned i = 0; i < j && ok; i++) {
                ok = !tags_clash(gamma, tags, i, j);
            }
            if (ok && run(j + 1)) {
                return true;
            }
        }
        return false;
    }
};

}  // namespace

std::optional<TagMatrix> greedy_tags(const BinMatrix& gamma, const std::vector<BitVec>& L) {
    auto n = static_cast<unsigned>(gamma.rows());
    auto e = static_cast<unsigned>(L.size());
    TagMatrix tags(n, std::vector<Pauli1>(e, Pauli1::I));
    BinMatrix residual = gamma;
    for (unsigned m = 0; m < e; m++) {
        if (!L[m]) {
            return std::nullopt;
        }
        unsigned first = lowest_bit(L[m]);
        for (unsigned j = 0; j < n; j++) {
            bool anti = j != first && residual.get(first, j);
            if (bit(L[m], j)) {
                tags[j][m] = anti ? Pauli1::Y : Pauli1::Z;
            } else {
                tags[j][m] = anti ? Pauli1::X : Pauli1::I;
            }
        }
        for (unsigned i = 0; i < n; i++) {
            for (unsigned j = 0; j < n; j++) {
                if (anticommute1(tags[i][m], tags[j][m])) {
                    residual.set(i, j, !residual.get(i, j));
                }
            }
        }
    }
    for (unsigned i = 0; i < n; i++) {
        if (residual.row(i)) {
            return std::nullopt;
        }
    }
    return tags;
}

std::optional<TagMatrix> backtrack_tags(const BinMatrix& gamma, const std::vector<BitVec>& L) {
    auto n = static_cast<unsigned>(gamma.rows());
    auto e = static_cast<unsigned>(L.size());
    Backtracker bt{gamma, L, n, e, TagMatrix(n, std::vector<Pauli1>(e, Pauli1::I))};
    if (bt.run(0)) {
        return bt.tags;
    }
    return std::nullopt;
}

std::optional<ParentExtension> extend_for_subgroup(const MixedGraph& g, const IsotropicSubspace& sub) {
    unsigned n = g.n();
    auto rank = mixed_rank(g);
    BinMatrix gamma = g.skeleton();
    auto code = rref(sub.lifted);
    if (code.size() != n - rank.e) {
        throw std::invalid_argument("subgroup is not maximal for this graph");
    }
    for (BitVec a : code) {
        for (BitVec b : code) {
            if (bilinear(a, gamma, b)) {
                throw std::invalid_argument("subgroup is not isotropic for this graph");
            }
        }
    }
    auto parity = rref(orthogonal_complement(code, n));
    if (parity.size() != rank.e) {
        throw std::logic_error("parity-check matrix does not have e rows");
    }

    std::vector<std::vector<BitVec>> bases{parity};
    if (rank.e >= 2 && rank.e <= 4) {
        // Other bases of the same parity space, in index order.
        auto elems = span_elements(parity);
        std::vector<BitVec> nonzero(elems.begin() + 1, elems.end());
        std::sort(nonzero.begin(), nonzero.end(),
                  [&](BitVec a, BitVec b) { return vec_to_string(a, n) < vec_to_string(b, n); });
        size_t k = nonzero.size();
        std::vector<size_t> idx(rank.e);
        auto rec = [&](auto& self, size_t pos, size_t start) -> void {
            if (pos == rank.e) {
                std::vector<BitVec> basis;
                for (size_t i : idx) {
                    basis.push_back(nonzero[i]);
                }
                if (rank_of(basis) == rank.e && basis != parity) {
                    bases.push_back(basis);
                }
                return;
            }
            for (size_t i = start; i < k; i++) {
                idx[pos] = i;
                self(self, pos + 1, i + 1);
            }
        };
        rec(rec, 0, 0);
    }

    for (size_t bi = 0; bi < bases.size(); bi++) {
        const auto& L = bases[bi];
        std::string method = "greedy";
        auto tags = greedy_tags(gamma, L);
        if (!tags) {
            tags = backtrack_tags(gamma, L);
            method = "backtracking";
        }
        if (!tags) {
            continue;
        }
        if (bi > 0) {
            method += "+alternate-basis";
        }
        auto p = parent_from_tags(g, *tags);
        p.method = method;
        if (rref(p.G.row_vecs()) != code) {
            throw std::logic_error("indicator J differs from the requested subgroup");
        }
        return p;
    }
    return std::nullopt;
}

std::string tags_column_str(const TagMatrix& tags, unsigned m) {
    std::string s;
    for (const auto& row : tags) {
        s += pauli_char(row.at(m));
    }
    return s;
}

}  // namespace mgs
