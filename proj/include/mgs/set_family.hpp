#pragma once

#include <string>
#include <vector>

#include "mgs/bits.hpp"

namespace mgs {

/// Duplicate-free family of node subsets in canonical order (see set_less).
class SetFamily {
   public:
    SetFamily() = default;
    explicit SetFamily(std::vector<BitVec> members);

    const std::vector<BitVec>& members() const { return members_; }
    size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(BitVec s) const;
    bool operator==(const SetFamily&) const = default;
    bool operator<(const SetFamily& o) const;

    /// "{{0,1,2},{1,2,3,5}}"
    std::string str() const;

   private:
    std::vector<BitVec> members_;
};

std::string set_str(BitVec s);

}  // namespace mgs
