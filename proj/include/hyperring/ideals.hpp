#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperring/core.hpp"

namespace hyperring {

/// Additive subgroup closed under absorption (hmul[r][i] within the set).
struct Hyperideal {
    Ring ring;
    IndexSet bits;

    Hyperideal() = default;
    Hyperideal(Ring r, IndexSet b) : ring(std::move(r)), bits(std::move(b)) {}

    bool proper() const { return bits.count() < ring->size(); }
    bool is_zero() const { return bits.count() == 1; }
    bool operator==(const Hyperideal& o) const { return ring == o.ring && bits == o.bits; }
};

struct IdealCheck {
    bool ok = false;
    std::string clause;              // violated clause on failure
    std::vector<uint32_t> witness;   // witness pair
};

IdealCheck is_hyperideal(const Ring& r, const IndexSet& S);

/**
 * Complete, deduplicated list of the hyperideals of a ring, in lattice order
 * (popcount, then mask value), with the prime positions precomputed.
 */
struct IdealLattice {
    Ring ring;
    std::vector<IndexSet> ideals;
    std::vector<size_t> primes;  // indices into `ideals` (proper primes only)
    uint64_t fingerprint = 0;

    std::optional<size_t> index_of(const IndexSet& s) const;
};

/// Enumerates additive subgroups, filters by absorption. Carrier capped.
IdealLattice enumerate_hyperideals(const Ring& r, uint32_t size_cap = 64);

/// Memoized per-ring lattice (keyed on ring identity; thread-safe).
const IdealLattice& lattice_of(const Ring& r, uint32_t size_cap = 64);

/// Least hyperideal containing S: closure under add, neg and absorption.
Hyperideal generated_ideal(const Ring& r, const IndexSet& S);

/// Generated ideal of the elementwise hyperproduct set (the IP convention).
Hyperideal ideal_product(const Hyperideal& P, const Hyperideal& Q);

/// Raw union of the elementwise hyperproducts; generally NOT an ideal.
/// Only used by the convention-sensitivity rerun of suite T8.
IndexSet raw_union_product(const Hyperideal& P, const Hyperideal& Q);

Hyperideal ideal_power(const Hyperideal& P, uint32_t k);
Hyperideal ideal_sum(const Hyperideal& P, const Hyperideal& Q);
Hyperideal ideal_intersect(const Hyperideal& P, const Hyperideal& Q);

/// (P : r) = { s : hmul[r][s] subset of P }.
Hyperideal colon(const Hyperideal& P, uint32_t r);

/// Intersection of the prime hyperideals containing P; R when none exists.
Hyperideal radical(const Hyperideal& P);

/// Primes containing P that are minimal under inclusion among those.
std::vector<Hyperideal> minimal_primes(const Hyperideal& P);

/// True iff the lattice is exactly { {0}, R } and |R| >= 2.
bool is_hyperfield(const Ring& r);

}  // namespace hyperring
