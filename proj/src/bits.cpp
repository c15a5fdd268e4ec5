#include "mgs/bits.hpp"

namespace mgs {

BitVec index_to_mask(BitVec index, unsigned n) {
    BitVec out = 0;
    for (unsigned j = 0; j < n; j++) {
        if (bit(index, n - 1 - j)) {
            out |= unit(j);
        }
    }
    return out;
}

std::string vec_to_string(BitVec v, unsigned n) {
    std::string s(n, '0');
    for (unsigned j = 0; j < n; j++) {
        if (bit(v, j)) {
            s[j] = '1';
        }
    }
    return s;
}

BitVec vec_from_string(std::string_view s) {
    if (s.size() > MAX_BITS) {
        throw std::invalid_argument("bit string longer than 64");
    }
    BitVec v = 0;
    for (size_t j = 0; j < s.size(); j++) {
        if (s[j] == '1') {
            v |= unit(static_cast<unsigned>(j));
        } else if (s[j] != '0') {
            throw std::invalid_argument("bad bit character in '" + std::string(s) + "'");
        }
    }
    return v;
}

std::vector<unsigned> members(BitVec v) {
    std::vector<unsigned> out;
    while (v) {
        out.push_back(lowest_bit(v));
        v &= v - 1;
    }
    return out;
}

BitVec mask_of(const std::vector<unsigned>& idx) {
    BitVec v = 0;
    for (unsigned j : idx) {
        v |= unit(j);
    }
    return v;
}

bool set_less(BitVec a, BitVec b) {
    while (true) {
        if (a == 0) {
            return b != 0;
        }
        if (b == 0) {
            return false;
        }
        unsigned la = lowest_bit(a), lb = lowest_bit(b);
        if (la != lb) {
            return la < lb;
        }
        a &= a - 1;
        b &= b - 1;
    }
}

ParseError::ParseError(int line, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}

}  // namespace mgs
