#include "mgs/children.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mgs {

std::vector<SignedTerm> sign_coefficients(const ParentExtension& p) {
    unsigned n = p.n;
    auto dual = dual_stabilizer(p.graph);
    PhaseFunction pf = p.phase_function();
    std::vector<SignedTerm> out;
    for (BitVec j : p.j_elements()) {
        SignedTerm t;
        t.j = j;
        t.word = ordered_product(dual, j);
        // First row of rho is 2^-n i^{-p(c)} at column c; s_j has exactly one entry in row 0, at column j.
        auto entry = dense_row_entry(t.word, 0);
        if (entry.col != mask_to_index(j, n)) {
            throw std::logic_error("ordered product has unexpected X pattern");
        }
        unsigned entry_exp = 0;
        while (Gaussian::i_pow(static_cast<int>(entry_exp)) != entry.value) {
            entry_exp++;
        }
        t.exp = (8 - pf.eval(j) - entry_exp) % 4;
        out.push_back(t);
    }
    std::sort(out.begin(), out.end(),
              [n](const SignedTerm& a, const SignedTerm& b) { return mask_to_index(a.j, n) < mask_to_index(b.j, n); });
    return out;
}

ChildResult child_from_pauli_sum(const ParentExtension& p, unsigned max_qubits) {
    unsigned n = p.n;
    if (n > max_qubits) {
        throw BoundExceeded("child on " + std::to_string(n) + " qubits exceeds the dense bound");
    }
    ChildResult r;
    r.parent = p;
    r.terms = sign_coefficients(p);
    for (size_t a = 0; a < r.terms.size(); a++) {
        if (!is_hermitian(r.terms[a].signed_word())) {
            throw std::logic_error("term " + r.terms[a].signed_word().str() + " is not Hermitian");
        }
        for (size_t b = a + 1; b < r.terms.size(); b++) {
            if (!commutes(r.terms[a].word, r.terms[b].word)) {
                throw std::logic_error("terms of the child do not commute");
            }
        }
    }
    if (r.terms.size() != (size_t{1} << (n - p.e))) {
        throw std::logic_error("J does not have 2^(n-e) elements");
    }
    size_t dim = size_t{1} << n;
    DensityMatrix rho(dim, n);
    for (const auto& t : r.terms) {
        PauliWord w = t.signed_word();
        for (BitVec row = 0; row < dim; row++) {
            auto e = dense_row_entry(w, row);
            rho.at(row, e.col) += e.value;
        }
    }
    r.rho = rho;
    return r;
}

DensityMatrix child_by_partial_trace(const ParentExtension& p, unsigned max_qubits) {
    auto psi = state_from_phase(p.phase_function(), max_qubits);
    return partial_trace_env(psi, p.env_mask());
}

DensityMatrix conjugate_by_z(const DensityMatrix& rho, unsigned n, BitVec k) {
    std::vector<Pauli1> letters(n, Pauli1::I);
    for (unsigned j : members(k)) {
        letters[j] = Pauli1::Z;
    }
    return conjugate_by(rho, PauliWord::from_letters(letters));
}

std::optional<BitVec> find_z_pattern(const DensityMatrix& a, const DensityMatrix& b, unsigned n, BitVec first) {
    if (conjugate_by_z(a, n, first) == b) {
        return first;
    }
    for (BitVec k = 0; k < (BitVec{1} << n); k++) {
        if (k != first && conjugate_by_z(a, n, k) == b) {
            return k;
        }
    }
    return std::nullopt;
}

ChildFamily children_family_e1(const MixedGraph& g, unsigned max_qubits) {
    ChildFamily fam;
    unsigned n = g.n();
    for (const auto& p : extend_e1(g)) {
        fam.children.push_back(child_from_pauli_sum(p, max_qubits));
    }
    size_t count = fam.children.size();
    fam.class_of.assign(count, count);
    for (size_t i = 0; i < count; i++) {
        if (fam.class_of[i] != count) {
            continue;
        }
        fam.class_of[i] = fam.class_count;
        for (size_t j = i + 1; j < count; j++) {
            if (fam.class_of[j] != count) {
                continue;
            }
            // The environment row's Z support is the natural first guess.
            BitVec guess = fam.children[j].parent.L.at(0);
            auto k = find_z_pattern(fam.children[i].rho, fam.children[j].rho, n, guess);
            if (k) {
                fam.class_of[j] = fam.class_count;
                fam.pairs.push_back({i, j, *k});
            }
        }
        fam.class_count++;
    }
    return fam;
}

}  // namespace mgs
