#pragma once

#include <vector>

#include "mgs/graph.hpp"
#include "mgs/pauli.hpp"
#include "mgs/set_family.hpp"

namespace mgs {

/// Union of the power sets of the members.
SetFamily e_direct(const SetFamily& v);
/// Same family via the intersection recursion, memoized on canonical families.
SetFamily e_recursive(const SetFamily& v);
/// Every K whose indexed rows pairwise commute.
SetFamily commuting_subsets_oracle(const std::vector<PauliWord>& rows);

/// Only the inclusion-maximal members.
SetFamily maximal_members(const SetFamily& v);
std::vector<BitVec> power_set(BitVec w);

struct SignfreeReport {
    SetFamily v;
    SetFamily e;
    std::uint64_t ambiguous = 0;
    bool agree = false;
};
SignfreeReport signfree_report(const MixedGraph& g);

}  // namespace mgs
