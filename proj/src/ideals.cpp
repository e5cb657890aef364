#include "hyperring/ideals.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_set>

namespace hyperring {

IdealCheck is_hyperideal(const Ring& r, const IndexSet& S) {
    const uint32_t m = r->size();
    if (!S.test(r->zero())) return {false, "zero-missing", {r->zero()}};
    for (uint32_t a = S.first(); a < m; a = S.next(a)) {
        if (!S.test(r->neg(a))) return {false, "neg-closure", {a}};
        for (uint32_t b = S.first(); b < m; b = S.next(b))
            if (!S.test(r->add(a, b))) return {false, "add-closure", {a, b}};
    }
    for (uint32_t x = 0; x < m; ++x)
        for (uint32_t i = S.first(); i < m; i = S.next(i))
            if (!S.contains(r->hmul(x, i))) return {false, "absorption", {x, i}};
    return {true, "", {}};
}

namespace {

struct SetHash {
    size_t operator()(const IndexSet& s) const { return size_t(s.hash()); }
};

IndexSet subgroup_closure(const FiniteHyperring& r, IndexSet S) {
    S.set(r.zero());
    std::vector<uint32_t> work = S.to_vector();
    while (!work.empty()) {
        uint32_t a = work.back();
        work.pop_back();
        uint32_t na = r.neg(a);
        if (!S.test(na)) {
            S.set(na);
            work.push_back(na);
        }
        for (uint32_t b = S.first(); b < r.size(); b = S.next(b)) {
            uint32_t x = r.add(a, b);
            if (!S.test(x)) {
                S.set(x);
                work.push_back(x);
            }
        }
    }
    return S;
}

std::vector<IndexSet> all_subgroups(const FiniteHyperring& r) {
    std::unordered_set<IndexSet, SetHash> seen;
    std::vector<IndexSet> work;
    IndexSet triv = IndexSet::single(r.size(), r.zero());
    seen.insert(triv);
    work.push_back(triv);
    while (!work.empty()) {
        IndexSet H = std::move(work.back());
        work.pop_back();
        for (uint32_t x = 0; x < r.size(); ++x) {
            if (H.test(x)) continue;
            IndexSet H2 = H;
            H2.set(x);
            H2 = subgroup_closure(r, std::move(H2));
            if (seen.insert(H2).second) work.push_back(H2);
        }
    }
    return {seen.begin(), seen.end()};
}

bool absorbs(const FiniteHyperring& r, const IndexSet& S) {
    for (uint32_t x = 0; x < r.size(); ++x)
        for (uint32_t i = S.first(); i < r.size(); i = S.next(i))
            if (!S.contains(r.hmul(x, i))) return false;
    return true;
}

bool prime_scan(const FiniteHyperring& r, const IndexSet& P) {
    for (uint32_t a = 0; a < r.size(); ++a) {
        if (P.test(a)) continue;
        for (uint32_t b = 0; b < r.size(); ++b)
            if (!P.test(b) && P.contains(r.hmul(a, b))) return false;
    }
    return true;
}

}  // namespace

std::optional<size_t> IdealLattice::index_of(const IndexSet& s) const {
    for (size_t i = 0; i < ideals.size(); ++i)
        if (ideals[i] == s) return i;
    return std::nullopt;
}

IdealLattice enumerate_hyperideals(const Ring& r, uint32_t size_cap) {
    if (r->size() > size_cap)
        throw HyperError(ErrorCode::TooLarge,
                         "carrier size " + std::to_string(r->size()) +
                             " exceeds ideal enumeration cap " + std::to_string(size_cap));
    IdealLattice lat;
    lat.ring = r;
    lat.fingerprint = r->fingerprint();
    for (auto& H : all_subgroups(*r))
        if (absorbs(*r, H)) lat.ideals.push_back(std::move(H));
    std::sort(lat.ideals.begin(), lat.ideals.end(), lattice_less);
    for (size_t i = 0; i < lat.ideals.size(); ++i)
        if (lat.ideals[i].count() < r->size() && prime_scan(*r, lat.ideals[i]))
            lat.primes.push_back(i);
    return lat;
}

namespace {
struct LatticeEntry {
    std::weak_ptr<const FiniteHyperring> ring;
    IdealLattice lat;
};
}  // namespace

const IdealLattice& lattice_of(const Ring& r, uint32_t size_cap) {
    static std::mutex mu;
    static std::map<const FiniteHyperring*, LatticeEntry> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(r.get());
    if (it != cache.end() && it->second.ring.lock() == r) return it->second.lat;
    IdealLattice lat = enumerate_hyperideals(r, size_cap);
    LatticeEntry& e = cache[r.get()];
    e.ring = r;
    e.lat = std::move(lat);
    return e.lat;
}

Hyperideal generated_ideal(const Ring& r, const IndexSet& S) {
    IndexSet cur = S;
    cur.set(r->zero());
    std::vector<uint32_t> work = cur.to_vector();
    while (!work.empty()) {
        uint32_t a = work.back();
        work.pop_back();
        auto push = [&](uint32_t x) {
            if (!cur.test(x)) {
                cur.set(x);
                work.push_back(x);
            }
        };
        push(r->neg(a));
        for (uint32_t b = cur.first(); b < r->size(); b = cur.next(b)) push(r->add(a, b));
        for (uint32_t x = 0; x < r->size(); ++x)
            r->hmul(x, a).for_each(push);
    }
    return {r, cur};
}

Hyperideal ideal_product(const Hyperideal& P, const Hyperideal& Q) {
    require_same_ring(P.ring, Q.ring);
    return generated_ideal(P.ring, raw_union_product(P, Q));
}

IndexSet raw_union_product(const Hyperideal& P, const Hyperideal& Q) {
    require_same_ring(P.ring, Q.ring);
    const auto& r = *P.ring;
    IndexSet u(r.size());
    P.bits.for_each([&](uint32_t p) {
        Q.bits.for_each([&](uint32_t q) { u |= r.hmul(p, q); });
    });
    return u;
}

Hyperideal ideal_power(const Hyperideal& P, uint32_t k) {
    if (k == 0) throw HyperError(ErrorCode::ZeroExponent, "ideal_power requires k >= 1");
    Hyperideal acc = P;
    for (uint32_t i = 1; i < k; ++i) acc = ideal_product(acc, P);
    return acc;
}

Hyperideal ideal_sum(const Hyperideal& P, const Hyperideal& Q) {
    require_same_ring(P.ring, Q.ring);
    return generated_ideal(P.ring, P.bits | Q.bits);
}

Hyperideal ideal_intersect(const Hyperideal& P, const Hyperideal& Q) {
    require_same_ring(P.ring, Q.ring);
    return {P.ring, P.bits & Q.bits};
}

Hyperideal colon(const Hyperideal& P, uint32_t r) {
    const auto& R = *P.ring;
    if (r >= R.size()) throw HyperError(ErrorCode::IndexOutOfRange, "colon element out of range");
    IndexSet out(R.size());
    for (uint32_t s = 0; s < R.size(); ++s)
        if (P.bits.contains(R.hmul(r, s))) out.set(s);
    return {P.ring, out};
}

Hyperideal radical(const Hyperideal& P) {
    const IdealLattice& lat = lattice_of(P.ring);
    IndexSet out = IndexSet::full(P.ring->size());
    bool any = false;
    for (size_t pi : lat.primes) {
        if (lat.ideals[pi].contains(P.bits)) {
            out &= lat.ideals[pi];
            any = true;
        }
    }
    if (!any) return {P.ring, IndexSet::full(P.ring->size())};
    return {P.ring, out};
}

std::vector<Hyperideal> minimal_primes(const Hyperideal& P) {
    const IdealLattice& lat = lattice_of(P.ring);
    std::vector<size_t> over;
    for (size_t pi : lat.primes)
        if (lat.ideals[pi].contains(P.bits)) over.push_back(pi);
    std::vector<Hyperideal> out;
    for (size_t i : over) {
        bool minimal = true;
        for (size_t j : over)
            if (j != i && lat.ideals[i].contains(lat.ideals[j]) &&
                lat.ideals[i] != lat.ideals[j]) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back({P.ring, lat.ideals[i]});
    }
    return out;
}

bool is_hyperfield(const Ring& r) {
    if (r->size() < 2) return false;
    const IdealLattice& lat = lattice_of(r);
    return lat.ideals.size() == 2;
}

}  // namespace hyperring
