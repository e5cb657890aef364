#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperring/core.hpp"
#include "hyperring/ideals.hpp"

namespace hyperring {

/// R_A over Z_n: x o y = { x*a*y mod n : a in A }.
struct RaSpec {
    uint32_t n = 0;
    std::vector<uint32_t> A;  // nonempty, members < n
};

Ring build_ra(const RaSpec& spec);

/**
 * Finite product of hyperrings, componentwise tables. Carrier indices are
 * row-major over the factor list: index = ((t0*m1)+t1)*m2+t2 ...
 * The tuple<->index maps are part of the public contract.
 */
struct ProductRing {
    Ring ring;
    std::vector<Ring> factors;
    std::vector<uint32_t> dims;

    uint32_t index_of(const std::vector<uint32_t>& tuple) const;
    std::vector<uint32_t> tuple_of(uint32_t index) const;

    /// Cartesian embedding of componentwise subsets.
    IndexSet embed(const std::vector<IndexSet>& parts) const;
    /// Componentwise projection of a subset of the product carrier.
    IndexSet project(const IndexSet& s, size_t factor) const;
};

ProductRing product_hyperring(const std::vector<Ring>& rings, uint32_t size_cap = 4096);

/// Structure-preserving map: additive and f(a o b) = f(a) o f(b) as sets.
struct GoodHomomorphism {
    Ring source;
    Ring target;
    std::vector<uint32_t> map;
    bool injective = false;
    bool surjective = false;

    uint32_t operator()(uint32_t a) const { return map[a]; }
    IndexSet image(const IndexSet& s) const;
    IndexSet preimage(const IndexSet& s) const;
    IndexSet kernel_set() const;  // preimage of {0}
};

/// Validates the map; throws NotAdditive / NotMultiplicative /
/// NotGoodMultiplicative (inclusion holds but equality fails) with a witness pair.
GoodHomomorphism build_homomorphism(const Ring& source, const Ring& target,
                                    std::vector<uint32_t> map);

struct QuotientRing {
    Ring ring;
    GoodHomomorphism projection;  // surjective, kernel-set = J
};

/// Additive cosets of a hyperideal J; hmul on cosets is the image of hmul.
QuotientRing quotient_hyperring(const Ring& r, const Hyperideal& J);

/// f(P) for surjective f with kernel-set inside P.
Hyperideal pushforward_ideal(const GoodHomomorphism& f, const Hyperideal& P);

/// Image of an ideal under a surjective good homomorphism (no kernel guard).
Hyperideal image_ideal(const GoodHomomorphism& f, const Hyperideal& P);

/// f^{-1}(Q); always a hyperideal of the source.
Hyperideal pullback_ideal(const GoodHomomorphism& f, const Hyperideal& Q);

/// Degree-truncated monomial slice of the polynomial hyperring over `base`.
struct MonomialRing {
    Ring base;
    uint32_t dmax = 0;
};

struct Monomial {
    uint32_t coeff = 0;
    uint32_t degree = 0;
    bool operator==(const Monomial& o) const {
        return coeff == o.coeff && degree == o.degree;
    }
};

/// (a x^n) * (b x^m) = (a o b) x^{n+m}; errors past dmax.
std::vector<Monomial> monomial_product(const MonomialRing& ring, Monomial lhs, Monomial rhs);

enum class LocalizeMode {
    SetEquality,   // (r1,s1)~(r2,s2) iff exists s in S: s*s1*r2 == s*s2*r1 as sets
    Intersect,     // ... with nonempty intersection instead of equality
};

enum class LocalizeStatus {
    Ok,
    NotMultiplicativelyClosed,
    NotAnEquivalence,
    IllDefinedTables,
};

const char* localize_status_name(LocalizeStatus s);

struct LocalizedRing {
    Ring base;
    IndexSet S;
    std::vector<uint32_t> class_of;   // index: r*|S| + position of s in sorted S
    std::vector<uint32_t> s_list;     // sorted members of S
    Ring result;
    std::vector<uint32_t> base_map;   // r -> class of (r, s0), s0 = min S

    uint32_t pair_class(uint32_t r, uint32_t s) const;
    /// Image of a base subset: classes of (x, s) over x in set, s in S.
    IndexSet localized_set(const IndexSet& base_set) const;
};

struct LocalizeOutcome {
    LocalizeStatus status = LocalizeStatus::Ok;
    std::string detail;
    std::vector<uint32_t> witness;
    std::optional<LocalizedRing> value;

    bool ok() const { return status == LocalizeStatus::Ok; }
};

/**
 * Localization at a multiplicative set S (for a,b in S the hyperproduct must
 * meet S; `strict` additionally demands containment in S). The congruence and
 * the induced class tables are verified outright; failures are returned as
 * data with witnesses, never repaired.
 */
LocalizeOutcome localize(const Ring& r, const IndexSet& S,
                         LocalizeMode mode = LocalizeMode::SetEquality,
                         bool strict = false);

}  // namespace hyperring
