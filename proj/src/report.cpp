#include "mgs/report.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "mgs/signfree.hpp"
#include "mgs/subgroups.hpp"

namespace mgs {

unsigned max_qubits_from_env() {
    const char* v = std::getenv("MGSTATE_MAX_QUBITS");
    if (!v || !*v) {
        return 12;
    }
    char* end = nullptr;
    unsigned long q = std::strtoul(v, &end, 10);
    if (*end != '\0' || q == 0 || q > 30) {
        throw std::invalid_argument("MGSTATE_MAX_QUBITS must be an integer in 1..30");
    }
    return static_cast<unsigned>(q);
}

std::string input_digest(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; i--) {
        s[static_cast<size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return s;
}

Json matrix_json(const GaussianMatrix& m) {
    Json entries = Json::array();
    for (const auto& g : m.entries()) {
        entries.push_back(Json::array({g.re, g.im}));
    }
    Json grid = Json::array();
    std::istringstream lines(m.grid());
    for (std::string line; std::getline(lines, line);) {
        grid.push_back(line);
    }
    return Json{{"dim", m.dim()}, {"denom_log2", m.denom_log2()}, {"entries", entries}, {"grid", grid}};
}

GaussianMatrix matrix_from_json(const Json& j) {
    try {
        auto dim = j.at("dim").get<size_t>();
        auto d = j.at("denom_log2").get<unsigned>();
        const auto& e = j.at("entries");
        if (dim == 0 || (dim & (dim - 1)) || dim > 4096 || e.size() != dim * dim || d > 62) {
            throw std::invalid_argument("matrix shape is inconsistent");
        }
        GaussianMatrix m(dim, d);
        for (size_t r = 0; r < dim; r++) {
            for (size_t c = 0; c < dim; c++) {
                const auto& pair = e.at(r * dim + c);
                m.at(r, c) = Gaussian(pair.at(0).get<std::int64_t>(), pair.at(1).get<std::int64_t>());
            }
        }
        return m;
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("bad matrix: ") + ex.what());
    }
}

Json set_json(BitVec s) {
    Json a = Json::array();
    for (unsigned j : members(s)) {
        a.push_back(j);
    }
    return a;
}

Json family_json(const SetFamily& f) {
    Json a = Json::array();
    for (BitVec s : f.members()) {
        a.push_back(set_json(s));
    }
    return a;
}

namespace {

Json header(const MixedGraph& g, const RunContext& ctx) {
    auto rank = mixed_rank(g);
    return Json{{"command", ctx.command}, {"input_digest", ctx.digest}, {"n", g.n()}, {"e", rank.e}, {"t", rank.t}};
}

Json strings(const std::vector<std::string>& v) { return Json(v); }

Json words(const std::vector<PauliWord>& rows) {
    Json a = Json::array();
    for (const auto& r : rows) {
        a.push_back(r.str());
    }
    return a;
}

Json vecs(const std::vector<BitVec>& v, unsigned n) {
    Json a = Json::array();
    for (BitVec x : v) {
        a.push_back(vec_to_string(x, n));
    }
    return a;
}

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_str(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render(const Json& j, int indent, std::ostringstream& out) {
    std::string pad(static_cast<size_t>(indent), ' ');
    for (auto it = j.begin(); it != j.end(); ++it) {
        const Json& v = it.value();
        if (is_scalar(v)) {
            out << pad << it.key() << ": " << scalar_str(v) << "\n";
        } else if (v.is_object() && v.contains("grid")) {
            out << pad << it.key() << ":\n";
            for (const auto& line : v["grid"]) {
                out << pad << "  " << line.get<std::string>() << "\n";
            }
        } else if (v.is_array() && std::all_of(v.begin(), v.end(), is_scalar)) {
            out << pad << it.key() << ":";
            for (const auto& x : v) {
                out << " " << scalar_str(x);
            }
            out << "\n";
        } else if (v.is_array()) {
            out << pad << it.key() << ":\n";
            for (const auto& x : v) {
                if (x.is_object()) {
                    std::ostringstream inner;
                    render(x, indent + 4, inner);
                    std::string s = inner.str();
                    s.replace(static_cast<size_t>(indent) + 2, 2, "- ");
                    out << s;
                } else {
                    out << pad << "  -";
                    for (const auto& y : x) {
                        out << " " << (is_scalar(y) ? scalar_str(y) : y.dump());
                    }
                    out << "\n";
                }
            }
        } else {
            out << pad << it.key() << ":\n";
            render(v, indent + 2, out);
        }
    }
}

CommandResult finish(Json j, int code = kOk) {
    CommandResult r;
    std::ostringstream out;
    render(j, 0, out);
    r.text = out.str();
    r.json = std::move(j);
    r.exit_code = code;
    return r;
}

Json parent_json(const ParentExtension& p) {
    Json cols = Json::array();
    for (unsigned m = 0; m < p.e && !p.ext_assign.empty(); m++) {
        cols.push_back(tags_column_str(p.ext_assign, m));
    }
    Json conj = Json::array();
    for (const auto& c : p.conjugations) {
        conj.push_back(Json{{"env", c.env}, {"gate", c.gate}});
    }
    Json L = Json::array();
    for (BitVec l : p.L) {
        L.push_back(set_json(l));
    }
    return Json{{"method", p.method},
                {"columns", cols},
                {"conjugations", conj},
                {"phase_function", p.phase_function().str()},
                {"ae", strings(p.ae.row_strings())},
                {"L", L},
                {"H", strings(p.H.row_strings())},
                {"J", vecs(p.j_elements(), p.n)}};
}

}  // namespace

Json child_json(const ChildResult& c, unsigned max_qubits) {
    Json terms = Json::array();
    for (const auto& t : c.terms) {
        terms.push_back(Json{{"j", vec_to_string(t.j, c.parent.n)},
                             {"coefficient", t.coefficient().str()},
                             {"word", t.word.str()}});
    }
    bool match = child_by_partial_trace(c.parent, max_qubits) == c.rho;
    return Json{{"parent", parent_json(c.parent)}, {"terms", terms}, {"rho", matrix_json(c.rho)}, {"oracle_match", match}};
}

CommandResult cmd_analyze(const MixedGraph& g, const RunContext& ctx) {
    Json j = header(g, ctx);
    auto rank = mixed_rank(g);
    Json edges = Json::array();
    for (const auto& e : g.edges()) {
        edges.push_back(Json{{"from", e.from}, {"to", e.to}, {"kind", e.kind == EdgeKind::Directed ? "->" : "--"}});
    }
    j["summary"] = rank.e == 0 ? std::string("e = 0 (pure graph state)")
                               : "e = " + std::to_string(rank.e) + ", t = " + std::to_string(rank.t);
    j["red"] = set_json(g.red());
    j["edges"] = edges;
    BinMatrix gamma = g.skeleton();
    j["adjacency"] = strings(g.adjacency().row_strings());
    j["gamma"] = strings(gamma.row_strings());
    j["rank"] = gamma.rank();
    j["kernel_basis"] = vecs(rref(gamma.kernel()), g.n());
    j["stabilizer"] = words(stabilizer_matrix(g));
    j["dual_stabilizer"] = words(dual_stabilizer(g));
    Json f4 = Json::array();
    for (const auto& row : f4_matrix(g)) {
        Json r = Json::array();
        for (F4 v : row) {
            r.push_back(f4_str(v));
        }
        f4.push_back(r);
    }
    j["f4"] = f4;
    return finish(std::move(j));
}

CommandResult cmd_subgroups(const MixedGraph& g, const RunContext& ctx) {
    Json j = header(g, ctx);
    auto red = reduce_gamma(g.skeleton());
    auto subs = enumerate_max_isotropic(red);
    auto dual = dual_stabilizer(g);
    j["chi"] = chi(red.e());
    j["count"] = subs.size();
    j["removed"] = red.removed;
    j["gamma_tilde"] = strings(red.gamma_tilde.row_strings());
    Json list = Json::array();
    for (size_t i = 0; i < subs.size(); i++) {
        Json elems = Json::array();
        for (BitVec k : subs[i].elements()) {
            elems.push_back(Json{{"k", vec_to_string(k, g.n())}, {"word", ordered_product(dual, k).str()}});
        }
        list.push_back(Json{{"index", i},
                            {"b", strings(subs[i].b.row_strings())},
                            {"lifted", vecs(subs[i].lifted, g.n())},
                            {"size", elems.size()},
                            {"elements", elems}});
    }
    j["subgroups"] = list;
    return finish(std::move(j), subs.size() == chi(red.e()) ? kOk : kInvariant);
}

CommandResult cmd_children(const MixedGraph& g, const RunContext& ctx, std::optional<size_t> subgroup) {
    Json j = header(g, ctx);
    auto red = reduce_gamma(g.skeleton());
    auto subs = enumerate_max_isotropic(red);
    if (subgroup && *subgroup >= subs.size()) {
        throw std::out_of_range("subgroup index " + std::to_string(*subgroup) + " out of range (count " +
                                std::to_string(subs.size()) + ")");
    }
    int code = kOk;
    size_t failures = 0;
    Json list = Json::array();
    for (size_t i = 0; i < subs.size(); i++) {
        if (subgroup && i != *subgroup) {
            continue;
        }
        Json item{{"index", i}, {"lifted", vecs(subs[i].lifted, g.n())}};
        auto p = extend_for_subgroup(g, subs[i]);
        if (!p) {
            failures++;
            item["found"] = false;
            item["failure"] = "no extension found: conjecture counterexample candidate";
            code = kSearch;
        } else {
            item["found"] = true;
            Json c = child_json(child_from_pauli_sum(*p, ctx.max_qubits), ctx.max_qubits);
            if (!c["oracle_match"].get<bool>() && code == kOk) {
                code = kInvariant;
            }
            item.update(c);
        }
        list.push_back(item);
    }
    j["failures"] = failures;
    j["subgroups"] = list;
    if (!subgroup && mixed_rank(g).e == 1) {
        auto fam = children_family_e1(g, ctx.max_qubits);
        Json kids = Json::array();
        for (size_t i = 0; i < fam.children.size(); i++) {
            const auto& ch = fam.children[i];
            kids.push_back(Json{{"index", i},
                                {"column", tags_column_str(ch.parent.ext_assign, 0)},
                                {"phase_function", ch.parent.phase_function().str()},
                                {"class", fam.class_of[i]},
                                {"rho", matrix_json(ch.rho)}});
        }
        Json pairs = Json::array();
        for (const auto& pr : fam.pairs) {
            pairs.push_back(Json{{"a", pr.a}, {"b", pr.b}, {"k", set_json(pr.k)}});
        }
        j["family"] = Json{{"count", fam.children.size()}, {"classes", fam.class_count}, {"children", kids},
                           {"pairs", pairs}};
    }
    if (failures) {
        j["summary"] = "FAILURE: " + std::to_string(failures) + " subgroup(s) without a parent extension";
    }
    return finish(std::move(j), code);
}

CommandResult cmd_signfree(const MixedGraph& g, const RunContext& ctx) {
    Json j = header(g, ctx);
    auto r = signfree_report(g);
    j["summary"] = "|E(V)| = " + std::to_string(r.e.size()) + ", ambiguous = " + std::to_string(r.ambiguous);
    j["V"] = family_json(r.v);
    j["e_size"] = r.e.size();
    j["ambiguous"] = r.ambiguous;
    j["agree"] = r.agree;
    j["E"] = family_json(r.e);
    return finish(std::move(j), r.agree ? kOk : kInvariant);
}

}  // namespace mgs
