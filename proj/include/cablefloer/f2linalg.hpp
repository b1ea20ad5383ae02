#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace cablefloer {

// Dense bit vector over F2, packed into 64-bit words.
struct BitVec {
    std::vector<uint64_t> w;

    BitVec() = default;
    explicit BitVec(size_t nbits) : w((nbits + 63) / 64, 0) {}

    void set(size_t i) { w[i / 64] ^= uint64_t(1) << (i % 64); }
    bool get(size_t i) const { return (w[i / 64] >> (i % 64)) & 1; }
    bool any() const {
        for (uint64_t x : w)
            if (x) return true;
        return false;
    }
    void xor_with(const BitVec& o) {
        for (size_t i = 0; i < w.size(); i++) w[i] ^= o.w[i];
    }
    int lowest_bit() const {
        for (size_t i = 0; i < w.size(); i++)
            if (w[i]) return int(i * 64 + __builtin_ctzll(w[i]));
        return -1;
    }
};

// Incremental row echelon form. Rows are reduced against the pivots seen so
// far; supports membership tests and residue computation for subspaces.
class RowSpace {
public:
    explicit RowSpace(size_t ncols) : ncols_(ncols) {}

    // Reduces v against the current basis; returns the residue.
    BitVec residue(BitVec v) const {
        for (size_t i = 0; i < rows_.size(); i++) {
            if (v.get(pivots_[i])) v.xor_with(rows_[i]);
        }
        return v;
    }

    // Adds v to the span. Returns true if it enlarged the space.
    bool add(BitVec v) {
        v = residue(std::move(v));
        int p = v.lowest_bit();
        if (p < 0) return false;
        rows_.push_back(std::move(v));
        pivots_.push_back(size_t(p));
        return true;
    }

    bool contains(const BitVec& v) const { return !residue(v).any(); }
    size_t rank() const { return rows_.size(); }
    size_t ncols() const { return ncols_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

private:
    size_t ncols_;
    std::vector<BitVec> rows_;
    std::vector<size_t> pivots_;
};

inline size_t f2_rank(size_t ncols, const std::vector<BitVec>& rows) {
    RowSpace rs(ncols);
    for (const auto& r : rows) rs.add(r);
    return rs.rank();
}

}  // namespace cablefloer
