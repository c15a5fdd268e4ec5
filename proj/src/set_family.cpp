#include "mgs/set_family.hpp"

#include <algorithm>

namespace mgs {

SetFamily::SetFamily(std::vector<BitVec> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end(), set_less);
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SetFamily::contains(BitVec s) const { return std::binary_search(members_.begin(), members_.end(), s, set_less); }

bool SetFamily::operator<(const SetFamily& o) const {
    return std::lexicographical_compare(members_.begin(), members_.end(), o.members_.begin(), o.members_.end(),
                                        set_less);
}

std::string set_str(BitVec s) {
    std::string out = "{";
    bool first = true;
    for (unsigned j : mgs::members(s)) {
        if (!first) {
            out += ",";
        }
        out += std::to_string(j);
        first = false;
    }
    return out + "}";
}

std::string SetFamily::str() const {
    std::string out = "{";
    for (size_t k = 0; k < members_.size(); k++) {
        if (k) {
            out += ",";
        }
        out += set_str(members_[k]);
    }
    return out + "}";
}

}  // namespace mgs
