#include "hyperring/index_set.hpp"

#include <bit>

namespace hyperring {

uint32_t IndexSet::count() const {
    uint32_t n = 0;
    for (uint64_t x : w_) n += std::popcount(x);
    return n;
}

bool IndexSet::empty() const {
    for (uint64_t x : w_)
        if (x) return false;
    return true;
}

bool IndexSet::contains(const IndexSet& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
        if (o.w_[i] & ~w_[i]) return false;
    return true;
}

bool IndexSet::intersects(const IndexSet& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & o.w_[i]) return true;
    return false;
}

IndexSet& IndexSet::operator|=(const IndexSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
}

IndexSet& IndexSet::operator&=(const IndexSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
}

IndexSet& IndexSet::operator-=(const IndexSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
}

uint32_t IndexSet::first() const {
    for (size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return uint32_t(i * 64 + std::countr_zero(w_[i]));
    return width_;
}

uint32_t IndexSet::next(uint32_t i) const {
    ++i;
    if (i >= width_) return width_;
    size_t word = i >> 6;
    uint64_t cur = w_[word] & (~uint64_t(0) << (i & 63));
    while (true) {
        if (cur) return uint32_t(word * 64 + std::countr_zero(cur));
        if (++word >= w_.size()) return width_;
        cur = w_[word];
    }
}

std::vector<uint32_t> IndexSet::to_vector() const {
    std::vector<uint32_t> out;
    out.reserve(count());
    for_each([&](uint32_t i) { out.push_back(i); });
    return out;
}

std::string IndexSet::to_string() const {
    std::string s = "{";
    bool sep = false;
    for_each([&](uint32_t i) {
        if (sep) s += ',';
        s += std::to_string(i);
        sep = true;
    });
    s += '}';
    return s;
}

uint64_t IndexSet::hash() const {
    uint64_t h = 1469598103934665603ull ^ width_;
    for (uint64_t x : w_) {
        h ^= x;
        h *= 1099511628211ull;
    }
    return h;
}

bool lattice_less(const IndexSet& a, const IndexSet& b) {
    uint32_t ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    // numeric value compare, most significant word first
    auto va = a.to_vector(), vb = b.to_vector();
    for (size_t i = va.size(); i-- > 0;) {
        // same popcount: compare as integers = compare highest differing bit
        if (va[i] != vb[i]) return va[i] < vb[i];
    }
    return false;
}

}  // namespace hyperring
