#include "mgs/states.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>

namespace mgs {

unsigned PhaseFunction::eval(BitVec x) const {
    unsigned acc = 0;
    for (auto [j, k] : quadratic) {
        if (bit(x, j) && bit(x, k)) {
            acc += 2;
        }
    }
    acc += popcount(x & z4_linear);
    acc += 2 * popcount(x & binary_linear);
    return acc & 3;
}

void PhaseFunction::add_quadratic(unsigned j, unsigned k) {
    if (j == k) {
        throw std::invalid_argument("quadratic term needs two distinct variables");
    }
    if (j >= n_total || k >= n_total) {
        throw std::invalid_argument("variable index out of range");
    }
    auto key = std::make_pair(std::min(j, k), std::max(j, k));
    auto pos = std::lower_bound(quadratic.begin(), quadratic.end(), key);
    if (pos != quadratic.end() && *pos == key) {
        quadratic.erase(pos);  // 2 + 2 = 0 mod 4
    } else {
        quadratic.insert(pos, key);
    }
}

void PhaseFunction::add_linear(unsigned j, unsigned c) {
    if (j >= n_total) {
        throw std::invalid_argument("variable index out of range");
    }
    unsigned cur = (bit(z4_linear, j) ? 1 : 0) + (bit(binary_linear, j) ? 2 : 0);
    unsigned next = (cur + c) & 3;
    z4_linear = with_bit(z4_linear, j, next & 1);
    binary_linear = with_bit(binary_linear, j, next & 2);
}

namespace {

// Monomial (sorted variable list) -> coefficient mod 4.
using Poly = std::map<std::vector<unsigned>, unsigned>;

struct PolyParser {
    std::string_view s;
    size_t k = 0;

    void skip() {
        while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) {
            k++;
        }
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("phase function '" + std::string(s) + "': " + msg + " at offset " +
                                    std::to_string(k));
    }
    unsigned number() {
        size_t start = k;
        unsigned v = 0;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) {
            v = v * 10 + static_cast<unsigned>(s[k] - '0');
            k++;
        }
        if (k == start) {
            fail("expected a number");
        }
        return v;
    }
    Poly expr() {
        Poly acc;
        while (true) {
            skip();
            Poly t = term();
            for (auto& [m, c] : t) {
                acc[m] = (acc[m] + c) & 3;
            }
            skip();
            if (k < s.size() && s[k] == '+') {
                k++;
                continue;
            }
            return acc;
        }
    }
    Poly term() {
        unsigned coef = 1;
        skip();
        if (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) {
            coef = number() & 3;
            skip();
        }
        Poly inner;
        if (k < s.size() && s[k] == '(') {
            k++;
            inner = expr();
            skip();
            if (k >= s.size() || s[k] != ')') {
                fail("expected ')'");
            }
            k++;
        } else if (k < s.size() && s[k] == 'x') {
            std::vector<unsigned> vars;
            while (k < s.size() && s[k] == 'x') {
                k++;
                vars.push_back(number());
            }
            std::sort(vars.begin(), vars.end());
            vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
            inner[vars] = 1;
        } else {
            fail("expected a monomial or '('");
        }
        Poly out;
        for (auto& [m, c] : inner) {
            out[m] = (c * coef) & 3;
        }
        return out;
    }
};

}  // namespace

PhaseFunction PhaseFunction::parse(std::string_view text, unsigned n_total) {
    if (text == "0") {
        PhaseFunction zero;
        zero.n_total = n_total;
        return zero;
    }
    PolyParser parser{text};
    Poly poly = parser.expr();
    parser.skip();
    if (parser.k != text.size()) {
        parser.fail("trailing input");
    }
    PhaseFunction p;
    p.n_total = n_total;
    for (auto& [m, c] : poly) {
        if (c == 0) {
            continue;
        }
        if (m.size() == 1) {
            p.add_linear(m[0], c);
        } else if (m.size() == 2) {
            if (c != 2) {
                throw std::invalid_argument("quadratic coefficients must be 2 mod 4");
            }
            p.add_quadratic(m[0], m[1]);
        } else {
            throw std::invalid_argument("only linear and quadratic terms are supported");
        }
    }
    return p;
}

std::string PhaseFunction::str() const {
    std::vector<std::string> inner;
    for (auto [j, k] : quadratic) {
        inner.push_back("x" + std::to_string(j) + "x" + std::to_string(k));
    }
    for (unsigned j : members(binary_linear)) {
        inner.push_back("x" + std::to_string(j));
    }
    std::string out;
    if (!inner.empty()) {
        out = "2(";
        for (size_t k = 0; k < inner.size(); k++) {
            out += (k ? "+" : "") + inner[k];
        }
        out += ")";
    }
    for (unsigned j : members(z4_linear)) {
        out += (out.empty() ? "" : "+") + std::string("x") + std::to_string(j);
    }
    return out.empty() ? "0" : out;
}

ExactStateVector::ExactStateVector(unsigned n_total, std::vector<std::uint8_t> phases,
                                   std::vector<std::uint8_t> nonzero, unsigned norm_log2sqrt)
    : n_total_(n_total), phases_(std::move(phases)), nonzero_(std::move(nonzero)), s_(norm_log2sqrt) {
    size_t dim = size_t{1} << n_total;
    if (phases_.size() != dim || nonzero_.size() != dim) {
        throw std::invalid_argument("state vector size mismatch");
    }
}

Gaussian ExactStateVector::numerator(BitVec index) const {
    return nonzero_[index] ? Gaussian::i_pow(phases_[index]) : Gaussian();
}

ExactStateVector state_from_phase(const PhaseFunction& p, unsigned max_qubits) {
    if (p.n_total > max_qubits) {
        throw BoundExceeded("state of " + std::to_string(p.n_total) + " qubits exceeds bound " +
                            std::to_string(max_qubits));
    }
    size_t dim = size_t{1} << p.n_total;
    std::vector<std::uint8_t> phases(dim), nz(dim, 1);
    for (size_t idx = 0; idx < dim; idx++) {
        phases[idx] = static_cast<std::uint8_t>(p.eval(index_to_mask(idx, p.n_total)));
    }
    return ExactStateVector(p.n_total, std::move(phases), std::move(nz), p.n_total);
}

bool stabilizes(const PauliWord& w, const ExactStateVector& psi) {
    if (w.n() != psi.n_total()) {
        throw std::invalid_argument("word and state sizes differ");
    }
    size_t dim = size_t{1} << psi.n_total();
    for (size_t r = 0; r < dim; r++) {
        auto e = dense_row_entry(w, r);
        if (e.value * psi.numerator(e.col) != psi.numerator(r)) {
            return false;
        }
    }
    return true;
}

namespace {

// Full state index from lab index and environment assignment (both in their own bit order).
struct IndexSplit {
    std::vector<unsigned> lab_vars, env_vars;
    unsigned n;

    IndexSplit(unsigned n_total, BitVec env) : n(n_total) {
        for (unsigned v = 0; v < n_total; v++) {
            (bit(env, v) ? env_vars : lab_vars).push_back(v);
        }
    }
    size_t full(size_t lab_idx, size_t env_idx) const {
        BitVec mask = 0;
        unsigned nl = static_cast<unsigned>(lab_vars.size()), ne = static_cast<unsigned>(env_vars.size());
        for (unsigned a = 0; a < nl; a++) {
            if (bit(lab_idx, nl - 1 - a)) {
                mask |= unit(lab_vars[a]);
            }
        }
        for (unsigned b = 0; b < ne; b++) {
            if (bit(env_idx, ne - 1 - b)) {
                mask |= unit(env_vars[b]);
            }
        }
        return mask_to_index(mask, n);
    }
};

}  // namespace

DensityMatrix partial_trace_env(const ExactStateVector& psi, BitVec env) {
    unsigned n = psi.n_total();
    if (env & ~low_mask(n)) {
        throw std::invalid_argument("environment outside the variable range");
    }
    IndexSplit split(n, env);
    auto nl = static_cast<unsigned>(split.lab_vars.size());
    auto ne = static_cast<unsigned>(split.env_vars.size());
    size_t dl = size_t{1} << nl, de = size_t{1} << ne;
    std::vector<std::vector<Gaussian>> sub(de, std::vector<Gaussian>(dl));
    for (size_t a = 0; a < de; a++) {
        for (size_t r = 0; r < dl; r++) {
            sub[a][r] = psi.numerator(split.full(r, a));
        }
    }
    GaussianMatrix rho(dl, psi.norm_log2sqrt());
    for (size_t a = 0; a < de; a++) {
        const auto& phi = sub[a];
        for (size_t r = 0; r < dl; r++) {
            if (phi[r].is_zero()) {
                continue;
            }
            for (size_t c = 0; c < dl; c++) {
                rho.at(r, c) += phi[r] * phi[c].conj();
            }
        }
    }
    return rho.reduced(nl);
}

DensityMatrix branch_projector_sum(const ExactStateVector& psi, BitVec env) {
    unsigned n = psi.n_total();
    IndexSplit split(n, env);
    auto nl = static_cast<unsigned>(split.lab_vars.size());
    auto ne = static_cast<unsigned>(split.env_vars.size());
    size_t dl = size_t{1} << nl, de = size_t{1} << ne;
    GaussianMatrix total(dl);
    for (size_t a = 0; a < de; a++) {
        std::vector<Gaussian> phi(dl);
        size_t count = 0;
        for (size_t r = 0; r < dl; r++) {
            phi[r] = psi.numerator(split.full(r, a));
            count += phi[r].is_zero() ? 0 : 1;
        }
        if (count == 0) {
            continue;
        }
        if (std::popcount(count) != 1) {
            throw std::invalid_argument("branch norm is not a power of two");
        }
        GaussianMatrix proj(dl, static_cast<unsigned>(std::countr_zero(count)));
        for (size_t r = 0; r < dl; r++) {
            for (size_t c = 0; c < dl; c++) {
                proj.at(r, c) = phi[r] * phi[c].conj();
            }
        }
        total = total + proj;
    }
    return total.reduced();
}

GaussianMatrix conjugate_by(const GaussianMatrix& rho, const PauliWord& g) {
    size_t dim = rho.dim();
    if (dim != (size_t{1} << g.n())) {
        throw std::invalid_argument("word and matrix sizes differ");
    }
    std::vector<DenseEntry> rows(dim);
    for (size_t r = 0; r < dim; r++) {
        rows[r] = dense_row_entry(g, r);
    }
    GaussianMatrix out(dim, rho.denom_log2());
    for (size_t r = 0; r < dim; r++) {
        for (size_t c = 0; c < dim; c++) {
            out.at(r, c) = rows[r].value * rho.at(rows[r].col, rows[c].col) * rows[c].value.conj();
        }
    }
    return out;
}

bool stabilized_by(const GaussianMatrix& rho, const std::vector<PauliWord>& gens) {
    return std::all_of(gens.begin(), gens.end(), [&](const PauliWord& g) { return conjugate_by(rho, g) == rho; });
}

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) {
        throw std::invalid_argument("zero denominator");
    }
    if (d < 0) {
        n = -n;
        d = -d;
    }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    num = g ? n / g : 0;
    den = g ? d / g : 1;
}

std::string Rational::str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

Rational WeightedDensity::trace() const {
    Gaussian t = scaled.trace_numerator();
    if (t.im != 0) {
        throw std::logic_error("non-real trace");
    }
    return Rational(t.re, weight_den * (std::int64_t{1} << scaled.denom_log2()));
}

WeightedDensity convex_combine(const std::vector<DensityMatrix>& children, const std::vector<Rational>& weights) {
    if (children.empty() || children.size() != weights.size()) {
        throw std::invalid_argument("one weight per child required");
    }
    std::int64_t lcm = 1;
    for (const auto& w : weights) {
        if (w.num < 0) {
            throw std::invalid_argument("negative weight");
        }
        lcm = std::lcm(lcm, w.den);
    }
    std::int64_t total = 0;
    for (const auto& w : weights) {
        total += w.num * (lcm / w.den);
    }
    if (total != lcm) {
        throw std::invalid_argument("weights must sum to 1");
    }
    GaussianMatrix acc(children[0].dim());
    for (size_t k = 0; k < children.size(); k++) {
        if (children[k].dim() != acc.dim()) {
            throw std::invalid_argument("children differ in dimension");
        }
        acc = acc + children[k].scaled(Gaussian(weights[k].num * (lcm / weights[k].den)));
    }
    return {acc, lcm};
}

GaussianMatrix reverse_qubits(const GaussianMatrix& m) {
    auto n = static_cast<unsigned>(std::countr_zero(m.dim()));
    GaussianMatrix out(m.dim(), m.denom_log2());
    for (size_t r = 0; r < m.dim(); r++) {
        for (size_t c = 0; c < m.dim(); c++) {
            out.at(index_to_mask(r, n), index_to_mask(c, n)) = m.at(r, c);
        }
    }
    return out;
}

}  // namespace mgs
