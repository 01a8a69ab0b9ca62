#pragma once

#include <cstdint>

namespace apntri {

// Incremental xor-basis over F_2. Vectors are packed bitwise into W
// (uint32_t for m x m solves, unsigned __int128 for the 3m x 3m
// differential matrices, 3m <= 72).
template <typename W, int MaxBits>
class XorBasis {
public:
    // returns true if v was independent of the current basis
    bool insert(W v) {
        while (v != 0) {
            int bit = top_bit(v);
            if (basis_[bit] == 0) {
                basis_[bit] = v;
                ++rank_;
                return true;
            }
            v ^= basis_[bit];
        }
        return false;
    }

    int rank() const { return rank_; }

    // true iff v lies in the span of the inserted vectors
    bool contains(W v) const {
        while (v != 0) {
            int bit = top_bit(v);
            if (basis_[bit] == 0) return false;
            v ^= basis_[bit];
        }
        return true;
    }

private:
    static int top_bit(W v) {
        if constexpr (sizeof(W) <= 8) {
            return 63 - __builtin_clzll(static_cast<std::uint64_t>(v));
        } else {
            std::uint64_t hi = static_cast<std::uint64_t>(v >> 64);
            if (hi != 0) return 127 - __builtin_clzll(hi);
            return 63 - __builtin_clzll(static_cast<std::uint64_t>(v));
        }
    }

    W basis_[MaxBits] = {};
    int rank_ = 0;
};

}  // namespace apntri
