#include "mgs/pauli.hpp"

#include <stdexcept>

namespace mgs {

char pauli_char(Pauli1 p) {
    static const char chars[] = {'I', 'X', 'Z', 'Y'};
    return chars[static_cast<int>(p)];
}

Pauli1 pauli_from_char(char c) {
    switch (c) {
        case 'I':
            return Pauli1::I;
        case 'X':
            return Pauli1::X;
        case 'Y':
            return Pauli1::Y;
        case 'Z':
            return Pauli1::Z;
        default:
            throw std::invalid_argument(std::string("not a Pauli letter: ") + c);
    }
}

PauliWord::PauliWord(unsigned n) : PauliWord(n, 0, 0, 0) {}

PauliWord::PauliWord(unsigned n, BitVec x, BitVec z, unsigned phase) : n_(n), x_(x), z_(z), phase_(phase & 3) {
    if (n > MAX_BITS) {
        throw std::invalid_argument("PauliWord supports at most 64 qubits");
    }
    if ((x | z) & ~low_mask(n)) {
        throw std::invalid_argument("PauliWord bits outside the qubit range");
    }
}

PauliWord PauliWord::from_letters(const std::vector<Pauli1>& letters, unsigned sign_exp) {
    unsigned n = static_cast<unsigned>(letters.size());
    BitVec x = 0, z = 0;
    unsigned ys = 0;
    for (unsigned j = 0; j < n; j++) {
        auto v = static_cast<unsigned>(letters[j]);
        if (v & 1) {
            x |= unit(j);
        }
        if (v & 2) {
            z |= unit(j);
        }
        if (letters[j] == Pauli1::Y) {
            ys++;
        }
    }
    return PauliWord(n, x, z, sign_exp + ys);
}

PauliWord PauliWord::parse(std::string_view s) {
    unsigned sign = 0;
    size_t k = 0;
    if (k < s.size() && (s[k] == '+' || s[k] == '-')) {
        sign = s[k] == '-' ? 2 : 0;
        k++;
    }
    if (k < s.size() && s[k] == 'i') {
        sign += 1;
        k++;
    }
    std::vector<Pauli1> letters;
    for (; k < s.size(); k++) {
        letters.push_back(pauli_from_char(s[k]));
    }
    if (letters.empty()) {
        throw std::invalid_argument("Pauli word without letters: '" + std::string(s) + "'");
    }
    return from_letters(letters, sign);
}

Pauli1 PauliWord::at(unsigned j) const {
    return static_cast<Pauli1>((bit(x_, j) ? 1 : 0) | (bit(z_, j) ? 2 : 0));
}

std::vector<Pauli1> PauliWord::letters() const {
    std::vector<Pauli1> out(n_);
    for (unsigned j = 0; j < n_; j++) {
        out[j] = at(j);
    }
    return out;
}

unsigned PauliWord::sign_exp() const { return (phase_ + 4 - (popcount(x_ & z_) & 3)) & 3; }

PauliWord PauliWord::tensor(const PauliWord& o) const {
    return PauliWord(n_ + o.n_, x_ | (o.x_ << n_), z_ | (o.z_ << n_), phase_ + o.phase_);
}

PauliWord PauliWord::with_letter(unsigned j, Pauli1 p) const {
    auto ls = letters();
    ls.at(j) = p;
    return from_letters(ls, sign_exp());
}

std::string PauliWord::str() const {
    static const char* prefix[] = {"+", "+i", "-", "-i"};
    std::string s = prefix[sign_exp()];
    for (unsigned j = 0; j < n_; j++) {
        s += pauli_char(at(j));
    }
    return s;
}

PauliWord mul(const PauliWord& p, const PauliWord& q) {
    if (p.n() != q.n()) {
        throw std::invalid_argument("PauliWord size mismatch");
    }
    // Z^{z_p} X^{x_q} = (-1)^{z_p x_q} X^{x_q} Z^{z_p} per qubit.
    unsigned ph = p.phase() + q.phase() + 2 * (popcount(p.z() & q.x()) & 1);
    return PauliWord(p.n(), p.x() ^ q.x(), p.z() ^ q.z(), ph);
}

bool commutes(const PauliWord& p, const PauliWord& q) {
    if (p.n() != q.n()) {
        throw std::invalid_argument("PauliWord size mismatch");
    }
    return !parity((p.x() & q.z()) ^ (p.z() & q.x()));
}

PauliWord ordered_product(const std::vector<PauliWord>& rows, BitVec K) {
    if (rows.empty()) {
        if (K) {
            throw std::out_of_range("ordered_product index out of range");
        }
        return PauliWord(0);
    }
    if (K & ~low_mask(static_cast<unsigned>(rows.size()))) {
        throw std::out_of_range("ordered_product index out of range");
    }
    PauliWord acc(rows[0].n());
    for (unsigned k : members(K)) {
        acc = mul(acc, rows[k]);
    }
    return acc;
}

bool is_hermitian(const PauliWord& p) { return ((p.phase() + popcount(p.x() & p.z())) & 1) == 0; }

DenseEntry dense_row_entry(const PauliWord& p, BitVec row) {
    unsigned n = p.n();
    BitVec xi = mask_to_index(p.x(), n);
    BitVec zi = mask_to_index(p.z(), n);
    BitVec col = row ^ xi;
    int k = static_cast<int>(p.phase()) + 2 * (parity(zi & col) ? 1 : 0);
    return {col, Gaussian::i_pow(k)};
}

GaussianMatrix to_dense(const PauliWord& p, unsigned max_qubits) {
    if (p.n() > max_qubits) {
        throw BoundExceeded("dense rendering of " + std::to_string(p.n()) + " qubits exceeds bound " +
                            std::to_string(max_qubits));
    }
    size_t dim = size_t{1} << p.n();
    GaussianMatrix m(dim);
    for (size_t r = 0; r < dim; r++) {
        auto e = dense_row_entry(p, r);
        m.at(r, e.col) = e.value;
    }
    return m;
}

Clifford clifford_from_string(std::string_view s) {
    if (s == "I") return Clifford::I;
    if (s == "H") return Clifford::H;
    if (s == "N") return Clifford::N;
    if (s == "N2" || s == "N^2") return Clifford::N2;
    if (s == "NH") return Clifford::NH;
    if (s == "HN") return Clifford::HN;
    throw std::invalid_argument("invalid Clifford tag: " + std::string(s));
}

std::string clifford_str(Clifford c) {
    static const char* names[] = {"I", "H", "N", "N2", "NH", "HN"};
    return names[static_cast<int>(c)];
}

namespace {

struct Signed1 {
    Pauli1 p;
    bool neg;
};

// Single conjugations by H and N on Hermitian letters.
Signed1 conj_h(Signed1 s) {
    switch (s.p) {
        case Pauli1::X:
            return {Pauli1::Z, s.neg};
        case Pauli1::Z:
            return {Pauli1::X, s.neg};
        case Pauli1::Y:
            return {Pauli1::Y, !s.neg};
        default:
            return s;
    }
}

Signed1 conj_n(Signed1 s) {
    switch (s.p) {
        case Pauli1::X:
            return {Pauli1::Y, !s.neg};
        case Pauli1::Z:
            return {Pauli1::X, s.neg};
        case Pauli1::Y:
            return {Pauli1::Z, !s.neg};
        default:
            return s;
    }
}

}  // namespace

PauliWord conjugate_single(const PauliWord& p, unsigned j, Clifford c) {
    if (j >= p.n()) {
        throw std::out_of_range("conjugate_single qubit out of range");
    }
    Signed1 s{p.at(j), false};
    switch (c) {
        case Clifford::I:
            break;
        case Clifford::H:
            s = conj_h(s);
            break;
        case Clifford::N:
            s = conj_n(s);
            break;
        case Clifford::N2:
            s = conj_n(conj_n(s));
            break;
        case Clifford::NH:
            s = conj_n(conj_h(s));
            break;
        case Clifford::HN:
            s = conj_h(conj_n(s));
            break;
        default:
            throw std::invalid_argument("invalid Clifford tag");
    }
    PauliWord out = p.with_letter(j, s.p);
    return s.neg ? out.times_i(2) : out;
}

}  // namespace mgs
