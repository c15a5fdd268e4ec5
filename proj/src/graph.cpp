#include "mgs/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace mgs {

MixedGraph::MixedGraph(unsigned n) : n_(n) {
    if (n > MAX_BITS) {
        throw std::invalid_argument("at most 64 nodes supported");
    }
}

MixedGraph MixedGraph::from_adjacency(const BinMatrix& a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("adjacency matrix must be square");
    }
    MixedGraph g(static_cast<unsigned>(a.rows()));
    for (unsigned j = 0; j < g.n_; j++) {
        g.set_red(j, a.get(j, j));
        for (unsigned k = j + 1; k < g.n_; k++) {
            bool f = a.get(j, k), b = a.get(k, j);
            if (f && b) {
                g.add_edge(j, k, EdgeKind::Undirected);
            } else if (f) {
                g.add_edge(j, k, EdgeKind::Directed);
            } else if (b) {
                g.add_edge(k, j, EdgeKind::Directed);
            }
        }
    }
    return g;
}

void MixedGraph::set_red(unsigned j, bool red) {
    if (j >= n_) {
        throw std::invalid_argument("node index " + std::to_string(j) + " >= n");
    }
    red_ = with_bit(red_, j, red);
}

void MixedGraph::add_edge(unsigned from, unsigned to, EdgeKind kind) {
    if (from >= n_ || to >= n_) {
        throw std::invalid_argument("node index " + std::to_string(std::max(from, to)) + " >= n");
    }
    if (from == to) {
        throw std::invalid_argument("self-loop on node " + std::to_string(from));
    }
    if (kind == EdgeKind::Undirected && from > to) {
        std::swap(from, to);
    }
    auto key = [](const Edge& e) { return std::make_pair(std::min(e.from, e.to), std::max(e.from, e.to)); };
    Edge edge{from, to, kind};
    auto pos = std::lower_bound(edges_.begin(), edges_.end(), edge,
                                [&](const Edge& a, const Edge& b) { return key(a) < key(b); });
    if (pos != edges_.end() && key(*pos) == key(edge)) {
        throw std::invalid_argument("duplicate edge between " + std::to_string(key(edge).first) + " and " +
                                    std::to_string(key(edge).second));
    }
    edges_.insert(pos, edge);
}

BinMatrix MixedGraph::adjacency() const {
    BinMatrix a(n_, n_);
    for (unsigned j = 0; j < n_; j++) {
        a.set(j, j, is_red(j));
    }
    for (const auto& e : edges_) {
        a.set(e.from, e.to, true);
        if (e.kind == EdgeKind::Undirected) {
            a.set(e.to, e.from, true);
        }
    }
    return a;
}

BinMatrix MixedGraph::skeleton() const {
    BinMatrix a = adjacency();
    return a + a.transpose();
}

MixedGraph MixedGraph::reversed() const {
    MixedGraph r(n_);
    r.red_ = red_;
    for (const auto& e : edges_) {
        if (e.kind == EdgeKind::Directed) {
            r.add_edge(e.to, e.from, e.kind);
        } else {
            r.add_edge(e.from, e.to, e.kind);
        }
    }
    return r;
}

namespace {

unsigned parse_index(std::string_view tok, int line) {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
    }
    return v;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    size_t k = 0;
    while (k < s.size()) {
        while (k < s.size() && (s[k] == ' ' || s[k] == '\t' || s[k] == '\r')) {
            k++;
        }
        size_t start = k;
        while (k < s.size() && s[k] != ' ' && s[k] != '\t' && s[k] != '\r') {
            k++;
        }
        if (k > start) {
            out.push_back(s.substr(start, k - start));
        }
    }
    return out;
}

}  // namespace

MixedGraph parse_graph(std::string_view text) {
    std::optional<MixedGraph> g;
    BitVec colored = 0;
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        line_no++;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto toks = split_ws(line);
        if (toks.empty()) {
            if (end == text.size()) {
                break;
            }
            continue;
        }
        try {
            if (toks[0] == "nodes") {
                if (toks.size() != 2) {
                    throw ParseError(line_no, "expected 'nodes <n>'");
                }
                if (g) {
                    throw ParseError(line_no, "repeated 'nodes' directive");
                }
                unsigned n = parse_index(toks[1], line_no);
                if (n == 0 || n > MAX_BITS) {
                    throw ParseError(line_no, "node count must be in 1..64");
                }
                g.emplace(n);
            } else if (toks[0] == "color") {
                if (!g) {
                    throw ParseError(line_no, "'nodes' must come first");
                }
                if (toks.size() != 3 || (toks[2] != "red" && toks[2] != "white")) {
                    throw ParseError(line_no, "expected 'color <j> red|white'");
                }
                unsigned j = parse_index(toks[1], line_no);
                if (j >= g->n()) {
                    throw ParseError(line_no, "node index " + std::to_string(j) + " >= n");
                }
                if (bit(colored, j)) {
                    throw ParseError(line_no, "repeated color for node " + std::to_string(j));
                }
                colored |= unit(j);
                g->set_red(j, toks[2] == "red");
            } else if (toks[0] == "edge") {
                if (!g) {
                    throw ParseError(line_no, "'nodes' must come first");
                }
                if (toks.size() != 4 || (toks[2] != "->" && toks[2] != "--")) {
                    throw ParseError(line_no, "expected 'edge <j> -> <k>' or 'edge <j> -- <k>'");
                }
                unsigned j = parse_index(toks[1], line_no);
                unsigned k = parse_index(toks[3], line_no);
                g->add_edge(j, k, toks[2] == "->" ? EdgeKind::Directed : EdgeKind::Undirected);
            } else {
                throw ParseError(line_no, "unknown directive '" + std::string(toks[0]) + "'");
            }
        } catch (const std::invalid_argument& ex) {
            throw ParseError(line_no, ex.what());
        }
        if (end == text.size()) {
            break;
        }
    }
    if (!g) {
        throw ParseError(line_no, "missing 'nodes' directive");
    }
    return *g;
}

std::string serialize_graph(const MixedGraph& g) {
    std::ostringstream out;
    out << "nodes " << g.n() << "\n";
    for (unsigned j : members(g.red())) {
        out << "color " << j << " red\n";
    }
    for (const auto& e : g.edges()) {
        out << "edge " << e.from << (e.kind == EdgeKind::Directed ? " -> " : " -- ") << e.to << "\n";
    }
    return out.str();
}

std::vector<PauliWord> stabilizer_rows(const BinMatrix& a) {
    unsigned n = static_cast<unsigned>(a.rows());
    std::vector<PauliWord> rows;
    for (unsigned j = 0; j < n; j++) {
        std::vector<Pauli1> letters(n, Pauli1::I);
        for (unsigned k = 0; k < n; k++) {
            if (k == j) {
                letters[k] = a.get(j, j) ? Pauli1::Y : Pauli1::X;
            } else if (a.get(j, k)) {
                letters[k] = Pauli1::Z;
            }
        }
        rows.push_back(PauliWord::from_letters(letters));
    }
    return rows;
}

std::vector<PauliWord> stabilizer_matrix(const MixedGraph& g) { return stabilizer_rows(g.adjacency()); }

std::vector<PauliWord> dual_stabilizer(const MixedGraph& g) { return stabilizer_rows(g.adjacency().transpose()); }

MixedRank mixed_rank_of_skeleton(const BinMatrix& gamma) {
    auto r = static_cast<unsigned>(gamma.rank());
    if (r % 2) {
        throw std::logic_error("odd skeleton rank; input is not alternating");
    }
    return {r / 2, static_cast<unsigned>(gamma.rows()) - r};
}

MixedRank mixed_rank(const MixedGraph& g) { return mixed_rank_of_skeleton(g.skeleton()); }

std::string f4_str(F4 v) {
    static const char* names[] = {"0", "1", "w", "w2"};
    return names[static_cast<int>(v)];
}

F4 f4_of(Pauli1 p) {
    switch (p) {
        case Pauli1::I:
            return F4::Zero;
        case Pauli1::Z:
            return F4::One;
        case Pauli1::X:
            return F4::Omega;
        default:
            return F4::Omega2;
    }
}

std::vector<std::vector<F4>> f4_matrix(const MixedGraph& g) {
    std::vector<std::vector<F4>> out;
    for (const auto& row : stabilizer_matrix(g)) {
        std::vector<F4> r;
        for (unsigned k = 0; k < g.n(); k++) {
            r.push_back(f4_of(row.at(k)));
        }
        out.push_back(std::move(r));
    }
    return out;
}

namespace {

void bron_kerbosch(const std::vector<BitVec>& nbr, BitVec r, BitVec p, BitVec x, std::vector<BitVec>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    BitVec px = p | x;
    unsigned pivot = lowest_bit(px);
    unsigned best = 0;
    for (unsigned u : members(px)) {
        unsigned c = popcount(p & nbr[u]);
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    for (unsigned v : members(p & ~nbr[pivot])) {
        bron_kerbosch(nbr, r | unit(v), p & nbr[v], x & nbr[v], out);
        p &= ~unit(v);
        x |= unit(v);
    }
}

}  // namespace

SetFamily maximal_independent_sets(const BinMatrix& gamma, unsigned max_nodes) {
    auto n = static_cast<unsigned>(gamma.rows());
    if (n > max_nodes) {
        throw BoundExceeded("maximal independent sets limited to " + std::to_string(max_nodes) + " nodes");
    }
    // Maximal cliques of the complement.
    std::vector<BitVec> nbr(n);
    for (unsigned j = 0; j < n; j++) {
        nbr[j] = ~gamma.row(j) & low_mask(n) & ~unit(j);
    }
    std::vector<BitVec> out;
    bron_kerbosch(nbr, 0, low_mask(n), 0, out);
    return SetFamily(out);
}

std::optional<MultipartiteParts> complete_multipartite_parts(const BinMatrix& gamma) {
    auto n = static_cast<unsigned>(gamma.rows());
    BitVec active = 0;
    for (unsigned j = 0; j < n; j++) {
        if (gamma.row(j)) {
            active |= unit(j);
        }
    }
    if (!active) {
        return std::nullopt;
    }
    std::vector<BitVec> classes;
    for (unsigned j : members(active)) {
        bool placed = false;
        for (BitVec& c : classes) {
            if (!bit(gamma.row(j), lowest_bit(c))) {
                c |= unit(j);
                placed = true;
                break;
            }
        }
        if (!placed) {
            classes.push_back(unit(j));
        }
    }
    if (classes.size() > 3) {
        return std::nullopt;
    }
    for (BitVec c : classes) {
        for (unsigned j : members(c)) {
            // Adjacent to exactly the active nodes outside its class.
            if (gamma.row(j) != (active & ~c)) {
                return std::nullopt;
            }
        }
    }
    MultipartiteParts out;
    for (size_t k = 0; k < classes.size(); k++) {
        out.parts[k] = classes[k];
    }
    out.isolated = low_mask(n) & ~active;
    return out;
}

}  // namespace mgs
