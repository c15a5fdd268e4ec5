#include "mgs/signfree.hpp"

#include <map>
#include <stdexcept>

namespace mgs {

std::vector<BitVec> power_set(BitVec w) {
    std::vector<BitVec> out;
    BitVec s = 0;
    // Standard subset walk: s = (s - w) & w visits every subset once.
    do {
        out.push_back(s);
        s = (s - w) & w;
    } while (s != 0);
    return out;
}

SetFamily e_direct(const SetFamily& v) {
    std::vector<BitVec> all;
    for (BitVec w : v.members()) {
        auto p = power_set(w);
        all.insert(all.end(), p.begin(), p.end());
    }
    return SetFamily(all);
}

SetFamily maximal_members(const SetFamily& v) {
    std::vector<BitVec> keep;
    for (BitVec w : v.members()) {
        bool covered = false;
        for (BitVec u : v.members()) {
            if (u != w && (w & ~u) == 0) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            keep.push_back(w);
        }
    }
    return SetFamily(keep);
}

namespace {

struct Recursion {
    std::map<SetFamily, SetFamily> memo;

    SetFamily run(const SetFamily& input) {
        SetFamily v = maximal_members(input);
        if (auto it = memo.find(v); it != memo.end()) {
            return it->second;
        }
        SetFamily result;
        if (v.size() <= 1) {
            result = e_direct(v);
        } else {
            const auto& ws = v.members();
            std::vector<BitVec> hat;
            for (size_t a = 0; a < ws.size(); a++) {
                for (size_t b = a + 1; b < ws.size(); b++) {
                    hat.push_back(ws[a] & ws[b]);
                }
            }
            std::vector<BitVec> all = run(SetFamily(hat)).members();
            for (size_t a = 0; a < ws.size(); a++) {
                std::vector<BitVec> vw;
                for (size_t b = 0; b < ws.size(); b++) {
                    if (b != a) {
                        vw.push_back(ws[a] & ws[b]);
                    }
                }
                SetFamily shared = run(SetFamily(vw));
                for (BitVec s : power_set(ws[a])) {
                    if (!shared.contains(s)) {
                        all.push_back(s);
                    }
                }
            }
            result = SetFamily(all);
        }
        memo.emplace(v, result);
        return result;
    }
};

}  // namespace

SetFamily e_recursive(const SetFamily& v) {
    Recursion r;
    return r.run(v);
}

SetFamily commuting_subsets_oracle(const std::vector<PauliWord>& rows) {
    auto n = static_cast<unsigned>(rows.size());
    if (n > 20) {
        throw BoundExceeded("commuting subset oracle limited to 20 rows");
    }
    std::vector<BitVec> clash(n, 0);
    for (unsigned a = 0; a < n; a++) {
        for (unsigned b = 0; b < n; b++) {
            if (!commutes(rows[a], rows[b])) {
                clash[a] |= unit(b);
            }
        }
    }
    std::vector<BitVec> out;
    for (BitVec k = 0; k < (BitVec{1} << n); k++) {
        bool ok = true;
        for (unsigned a : members(k)) {
            if (clash[a] & k) {
                ok = false;
                break;
            }
        }
        if (ok) {
            out.push_back(k);
        }
    }
    return SetFamily(out);
}

SignfreeReport signfree_report(const MixedGraph& g) {
    SignfreeReport r;
    r.v = maximal_independent_sets(g.skeleton());
    r.e = e_direct(r.v);
    r.ambiguous = (std::uint64_t{1} << g.n()) - r.e.size();
    r.agree = e_recursive(r.v) == r.e && commuting_subsets_oracle(dual_stabilizer(g)) == r.e;
    return r;
}

}  // namespace mgs
