#pragma once

#include <cstdint>
#include <vector>
#include <string>

namespace hyperring {

/**
 * Fixed-width bitmask over element indices 0..m-1.
 *
 * All subsets handled by the engine (hyperproducts, ideals, carriers of
 * predicates) are IndexSets of the owning ring's width. Width is fixed at
 * construction; operands of binary operations must agree.
 */
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(uint32_t width) : width_(width), w_((width + 63) / 64, 0) {}

    static IndexSet single(uint32_t width, uint32_t i) {
        IndexSet s(width);
        s.set(i);
        return s;
    }
    static IndexSet full(uint32_t width) {
        IndexSet s(width);
        for (uint32_t i = 0; i < width; ++i) s.set(i);
        return s;
    }

    uint32_t width() const { return width_; }

    bool test(uint32_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(uint32_t i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(uint32_t i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    void clear() { for (auto& x : w_) x = 0; }

    uint32_t count() const;
    bool empty() const;

    bool contains(const IndexSet& o) const;   // o subset of *this
    bool intersects(const IndexSet& o) const;

    IndexSet& operator|=(const IndexSet& o);
    IndexSet& operator&=(const IndexSet& o);
    IndexSet& operator-=(const IndexSet& o);  // set difference

    friend IndexSet operator|(IndexSet a, const IndexSet& b) { a |= b; return a; }
    friend IndexSet operator&(IndexSet a, const IndexSet& b) { a &= b; return a; }
    friend IndexSet operator-(IndexSet a, const IndexSet& b) { a -= b; return a; }

    bool operator==(const IndexSet& o) const { return width_ == o.width_ && w_ == o.w_; }
    bool operator!=(const IndexSet& o) const { return !(*this == o); }

    /// Smallest member, or width() when empty.
    uint32_t first() const;
    /// Smallest member > i, or width() when none.
    uint32_t next(uint32_t i) const;

    std::vector<uint32_t> to_vector() const;
    std::string to_string() const;  // "{0,4,8}"

    uint64_t hash() const;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (uint32_t i = first(); i < width_; i = next(i)) fn(i);
    }

private:
    uint32_t width_ = 0;
    std::vector<uint64_t> w_;
};

/// Lattice order used for all deterministic listings: popcount, then mask value.
bool lattice_less(const IndexSet& a, const IndexSet& b);

}  // namespace hyperring
