#include "mgs/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mgs/signfree.hpp"
#include "mgs/subgroups.hpp"

namespace mgs {

namespace {

struct Checker {
    std::vector<CheckResult> results;

    void check(const std::string& name, bool ok, const std::string& detail = "") {
        results.push_back({name, ok, ok ? "" : detail});
    }
    /// Records the first failure only, so big loops stay readable.
    template <typename F>
    void all(const std::string& name, size_t count, F item) {
        for (size_t i = 0; i < count; i++) {
            std::string detail;
            if (!item(i, detail)) {
                check(name, false, detail);
                return;
            }
        }
        check(name, true);
    }
};

bool skeleton_nonzero(const BinMatrix& gamma) {
    return std::any_of(gamma.row_vecs().begin(), gamma.row_vecs().end(), [](BitVec r) { return r != 0; });
}

std::string sub_str(const IsotropicSubspace& s) {
    std::string out = "subgroup <";
    for (size_t i = 0; i < s.lifted.size(); i++) {
        out += (i ? "," : "") + vec_to_string(s.lifted[i], s.n);
    }
    return out + ">";
}

void check_child(Checker& c, const ChildResult& ch, const MixedGraph& g, unsigned max_qubits, const std::string& where) {
    auto stab = stabilizer_matrix(g);
    const auto& rho = ch.rho;
    c.check("child_pauli_sum_equals_partial_trace", child_by_partial_trace(ch.parent, max_qubits) == rho, where);
    c.check("child_trace_one", rho.trace_is_one(), where);
    c.check("child_hermitian", rho.is_hermitian(), where);
    c.check("child_stabilized", stabilized_by(rho, stab), where);
    if (ch.parent.e > 0) {
        c.check("child_mixed", !(rho * rho == rho), where);
    }
    bool herm = std::all_of(ch.terms.begin(), ch.terms.end(),
                            [](const SignedTerm& t) { return is_hermitian(t.signed_word()); });
    c.check("child_terms_hermitian", herm, where);
}

}  // namespace

std::vector<CheckResult> run_invariants(const MixedGraph& g, unsigned max_qubits) {
    Checker c;
    unsigned n = g.n();
    BinMatrix gamma = g.skeleton();
    auto stab = stabilizer_matrix(g);
    auto dual = dual_stabilizer(g);
    auto rank = mixed_rank(g);

    c.check("rank_even", gamma.rank() % 2 == 0);
    c.check("serialize_roundtrip", parse_graph(serialize_graph(g)) == g);
    c.check("reverse_involution", g.reversed().reversed() == g);
    c.check("dual_is_reversed_stabilizer", stabilizer_matrix(g.reversed()) == dual);
    c.all("dual_commutes_with_stabilizer", n * n, [&](size_t i, std::string& d) {
        d = "dual row " + std::to_string(i / n) + " vs row " + std::to_string(i % n);
        return commutes(dual[i / n], stab[i % n]);
    });
    if (skeleton_nonzero(gamma)) {
        c.check("multipartite_iff_e1", complete_multipartite_parts(gamma).has_value() == (rank.e == 1));
    }

    auto red = reduce_gamma(gamma);
    auto subs = enumerate_max_isotropic(red);
    c.check("subgroup_count_chi", subs.size() == chi(rank.e),
            std::to_string(subs.size()) + " subgroups, expected " + std::to_string(chi(rank.e)));
    c.all("subgroup_isotropic_maximal", subs.size(), [&](size_t i, std::string& d) {
        d = sub_str(subs[i]);
        auto elems = subs[i].elements();
        if (elems.size() != (size_t{1} << (n - rank.e))) {
            d += " has wrong size";
            return false;
        }
        for (BitVec a : subs[i].lifted) {
            for (BitVec b : subs[i].lifted) {
                if (!commutes_via_gamma(gamma, a, b)) {
                    return false;
                }
            }
        }
        for (BitVec v = 0; v < (BitVec{1} << n); v++) {
            if (subs[i].contains(v)) {
                continue;
            }
            bool iso = std::all_of(subs[i].lifted.begin(), subs[i].lifted.end(),
                                   [&](BitVec a) { return commutes_via_gamma(gamma, a, v); });
            if (iso) {
                d += " extends by " + vec_to_string(v, n);
                return false;
            }
        }
        return true;
    });
    std::uint64_t expect = rank.e == 0 ? 1 : chi(rank.e - 1);
    c.all("membership_count", subs.size(), [&](size_t i, std::string& d) {
        for (BitVec v : subs[i].elements()) {
            if (v == 0) {
                continue;
            }
            // Kernel directions commute with everything and sit in every subgroup.
            size_t want = in_span(red.kernel_basis, v) ? subs.size() : expect;
            size_t got = membership_count(subs, v);
            if (got != want) {
                d = vec_to_string(v, n) + " lies in " + std::to_string(got) + " subgroups";
                return false;
            }
        }
        return true;
    });
    if (rank.e > 0) {
        c.check("gamma_order_even", gamma_order(red.gamma_tilde) % 2 == 0);
        if (red.gamma_tilde.rows() <= 4) {
            c.check("no_gram_factor", !gram_factor_search(red.gamma_tilde).has_value());
        }
    }

    if (n + rank.e > max_qubits) {
        throw BoundExceeded("parents need " + std::to_string(n + rank.e) + " qubits, bound is " +
                            std::to_string(max_qubits));
    }
    for (size_t i = 0; i < subs.size(); i++) {
        std::string where = sub_str(subs[i]);
        auto p = extend_for_subgroup(g, subs[i]);
        c.check("extension_found", p.has_value(), where + ": conjecture counterexample candidate");
        if (!p) {
            continue;
        }
        c.check("extension_commutes", verify_full_commutation(stabilizer_rows(p->ae)), where);
        c.check("extension_graph_form", p->ae.is_symmetric(), where);
        c.check("indicator_matches_subgroup", rref(p->G.row_vecs()) == subs[i].canonical_basis(), where);
        auto psi = state_from_phase(p->phase_function(), max_qubits);
        auto rows = p->graph_rows();
        c.check("parent_stabilized",
                std::all_of(rows.begin(), rows.end(), [&](const PauliWord& w) { return stabilizes(w, psi); }), where);
        check_child(c, child_from_pauli_sum(*p, max_qubits), g, max_qubits, where);
    }

    if (rank.e == 1) {
        auto fam = children_family_e1(g, max_qubits);
        c.check("e1_family_size", fam.children.size() == 6, std::to_string(fam.children.size()) + " children");
        c.check("e1_family_classes", fam.class_count <= 3, std::to_string(fam.class_count) + " classes");
        std::vector<std::vector<BitVec>> hit;
        for (const auto& ch : fam.children) {
            check_child(c, ch, g, max_qubits, "column " + tags_column_str(ch.parent.ext_assign, 0));
            auto basis = rref(ch.parent.G.row_vecs());
            if (std::find(hit.begin(), hit.end(), basis) == hit.end()) {
                hit.push_back(basis);
            }
        }
        c.check("e1_family_hits_every_subgroup", hit.size() == subs.size());
    }

    auto sf = signfree_report(g);
    c.check("signfree_agreement", sf.agree);
    c.all("signfree_downward_closed", sf.e.size(), [&](size_t i, std::string& d) {
        BitVec s = sf.e.members()[i];
        for (unsigned j : members(s)) {
            if (!sf.e.contains(s & ~unit(j))) {
                d = set_str(s) + " minus " + std::to_string(j);
                return false;
            }
        }
        return true;
    });
    return c.results;
}

std::vector<CheckResult> run_golden(const MixedGraph& g, const Json& golden, unsigned max_qubits) {
    Checker c;
    auto rank = mixed_rank(g);
    unsigned n_total = g.n() + rank.e;
    auto stab = stabilizer_matrix(g);
    try {
        if (golden.contains("mixed_rank")) {
            const auto& mr = golden["mixed_rank"];
            c.check("golden_mixed_rank", mr.at("e").get<unsigned>() == rank.e && mr.at("t").get<unsigned>() == rank.t,
                    "expected e = " + mr.at("e").dump() + ", t = " + mr.at("t").dump());
        }
        if (golden.contains("subgroup_count")) {
            auto subs = enumerate_max_isotropic(reduce_gamma(g.skeleton()));
            c.check("golden_subgroup_count", golden["subgroup_count"].get<size_t>() == subs.size(),
                    "computed " + std::to_string(subs.size()));
        }
        if (golden.contains("signfree")) {
            auto sf = signfree_report(g);
            const auto& s = golden["signfree"];
            c.check("golden_signfree", s.at("e_size").get<size_t>() == sf.e.size() &&
                                           s.at("ambiguous").get<std::uint64_t>() == sf.ambiguous,
                    "computed |E(V)| = " + std::to_string(sf.e.size()) + ", ambiguous = " +
                        std::to_string(sf.ambiguous));
        }
        for (const auto& ch : golden.value("children", Json::array())) {
            std::string label = ch.value("label", "child");
            auto rho = matrix_from_json(ch.at("rho"));
            auto pf = PhaseFunction::parse(ch.at("parent").get<std::string>(), ch.value("n_total", n_total));
            auto p = parent_from_phase(g, pf);
            c.check("golden_child_trace_one", rho.trace_is_one(), label);
            c.check("golden_child_stabilized", stabilized_by(rho, stab), label);
            c.check("golden_child_partial_trace", child_by_partial_trace(p, max_qubits) == rho, label);
            c.check("golden_child_pauli_sum", child_from_pauli_sum(p, max_qubits).rho == rho, label);
            if (ch.contains("terms")) {
                auto terms = sign_coefficients(p);
                bool ok = terms.size() == ch["terms"].size();
                for (size_t i = 0; ok && i < terms.size(); i++) {
                    const auto& t = ch["terms"][i];
                    ok = t.at("j").get<std::string>() == vec_to_string(terms[i].j, g.n()) &&
                         t.at("coefficient").get<std::string>() == terms[i].coefficient().str();
                }
                c.check("golden_child_terms", ok, label);
            }
        }
        for (const auto& b : golden.value("branch_sums", Json::array())) {
            std::string label = b.value("label", "branch sum");
            auto m = matrix_from_json(b.at("matrix"));
            if (b.value("index_order", "msb_first") == "lsb_first") {
                m = reverse_qubits(m);
            }
            auto pf = PhaseFunction::parse(b.at("parent").get<std::string>(), b.value("n_total", n_total));
            auto psi = state_from_phase(pf, max_qubits);
            BitVec env = low_mask(pf.n_total) & ~low_mask(g.n());
            c.check("golden_branch_sum", branch_projector_sum(psi, env) == m, label);
            c.check("golden_branch_sum_is_twice_trace", partial_trace_env(psi, env).scaled(2) == m, label);
        }
        if (golden.contains("extensions")) {
            auto subs = enumerate_max_isotropic(reduce_gamma(g.skeleton()));
            for (const auto& ex : golden["extensions"]) {
                std::vector<BitVec> gens;
                for (const auto& s : ex.at("subgroup")) {
                    gens.push_back(vec_from_string(s.get<std::string>()));
                }
                std::string label = ex.value("label", "extension");
                auto want = rref(gens);
                auto it = std::find_if(subs.begin(), subs.end(),
                                       [&](const IsotropicSubspace& s) { return s.canonical_basis() == want; });
                c.check("golden_extension_subgroup", it != subs.end(), label + ": not a maximal subgroup");
                if (it == subs.end()) {
                    continue;
                }
                auto p = extend_for_subgroup(g, *it);
                bool ok = p.has_value() && ex.at("columns").size() == p->e;
                for (unsigned m = 0; ok && m < p->e; m++) {
                    ok = ex["columns"][m].get<std::string>() == tags_column_str(p->ext_assign, m);
                }
                c.check("golden_extension_columns", ok, label);
            }
        }
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("malformed golden file: ") + ex.what());
    }
    return c.results;
}

CommandResult cmd_verify(const MixedGraph& g, const RunContext& ctx, const std::optional<Json>& golden) {
    auto results = run_invariants(g, ctx.max_qubits);
    if (golden) {
        auto more = run_golden(g, *golden, ctx.max_qubits);
        results.insert(results.end(), more.begin(), more.end());
    }
    Json j{{"command", ctx.command}, {"input_digest", ctx.digest}, {"n", g.n()}};
    Json checks = Json::array();
    size_t failed = 0;
    std::ostringstream text;
    for (const auto& r : results) {
        Json item{{"name", r.name}, {"ok", r.ok}};
        if (!r.ok) {
            failed++;
            item["detail"] = r.detail;
        }
        checks.push_back(item);
        text << (r.ok ? "ok    " : "FAIL  ") << r.name << (r.ok ? "" : ": " + r.detail) << "\n";
    }
    j["checks"] = checks;
    j["failed"] = failed;
    if (failed) {
        j["reproducer"] = serialize_graph(g);
        text << "reproducer:\n" << serialize_graph(g);
    }
    text << (failed ? "verify: " + std::to_string(failed) + " check(s) failed\n" : std::string("verify: all checks passed\n"));
    CommandResult out;
    out.json = std::move(j);
    out.text = text.str();
    out.exit_code = failed ? kInvariant : kOk;
    return out;
}

}  // namespace mgs
