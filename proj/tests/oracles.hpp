#pragma once

// Brute-force reference implementations used to cross-check the engine.
// They work straight off the ring tables with naive set arithmetic and
// exhaustive 2^m sweeps; they deliberately share no code with the library
// paths they verify.

#include <algorithm>
#include <set>
#include <vector>

#include "hyperring/core.hpp"

namespace oracle {

using hyperring::Ring;

using Set = std::set<uint32_t>;

inline Set hmul(const Ring& r, uint32_t a, uint32_t b) {
    Set out;
    r->hmul(a, b).for_each([&](uint32_t x) { out.insert(x); });
    return out;
}

inline Set set_product(const Ring& r, const Set& S, const Set& T) {
    Set out;
    for (uint32_t s : S)
        for (uint32_t t : T) {
            Set p = hmul(r, s, t);
            out.insert(p.begin(), p.end());
        }
    return out;
}

inline Set set_sum(const Ring& r, const Set& S, const Set& T) {
    Set out;
    for (uint32_t s : S)
        for (uint32_t t : T) out.insert(r->add(s, t));
    return out;
}

inline Set tuple_product(const Ring& r, const std::vector<uint32_t>& xs) {
    Set acc{xs.at(0)};
    for (size_t i = 1; i < xs.size(); ++i) acc = set_product(r, acc, {xs[i]});
    return acc;
}

// right fold, for the fold-order-independence property
inline Set tuple_product_right(const Ring& r, const std::vector<uint32_t>& xs) {
    Set acc{xs.back()};
    for (size_t i = xs.size() - 1; i-- > 0;) acc = set_product(r, {xs[i]}, acc);
    return acc;
}

inline bool subset(const Set& a, const Set& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool is_ideal(const Ring& r, const Set& S) {
    if (!S.count(r->zero())) return false;
    for (uint32_t a : S) {
        if (!S.count(r->neg(a))) return false;
        for (uint32_t b : S)
            if (!S.count(r->add(a, b))) return false;
    }
    for (uint32_t x = 0; x < r->size(); ++x)
        for (uint32_t i : S)
            if (!subset(hmul(r, x, i), S)) return false;
    return true;
}

// full 2^m sweep; only sane for m <= ~14
inline std::vector<Set> all_ideals(const Ring& r) {
    std::vector<Set> out;
    const uint32_t m = r->size();
    for (uint64_t mask = 0; mask < (uint64_t(1) << m); ++mask) {
        Set S;
        for (uint32_t i = 0; i < m; ++i)
            if (mask >> i & 1) S.insert(i);
        if (is_ideal(r, S)) out.push_back(std::move(S));
    }
    return out;
}

inline Set generated_ideal(const Ring& r, Set S) {
    S.insert(r->zero());
    bool changed = true;
    while (changed) {
        changed = false;
        Set next = S;
        for (uint32_t a : S) {
            next.insert(r->neg(a));
            for (uint32_t b : S) next.insert(r->add(a, b));
            for (uint32_t x = 0; x < r->size(); ++x) {
                Set p = hmul(r, x, a);
                next.insert(p.begin(), p.end());
            }
        }
        if (next != S) {
            S = std::move(next);
            changed = true;
        }
    }
    return S;
}

inline Set to_oracle(const hyperring::IndexSet& s) {
    Set out;
    s.for_each([&](uint32_t i) { out.insert(i); });
    return out;
}

inline hyperring::IndexSet to_bits(const Ring& r, const Set& s) {
    hyperring::IndexSet out(r->size());
    for (uint32_t i : s) out.set(i);
    return out;
}

}  // namespace oracle
