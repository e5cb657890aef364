#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperring/index_set.hpp"

namespace hyperring {

enum class ErrorCode {
    MalformedTables,
    AxiomFailure,
    RingMismatch,
    EmptyTuple,
    ZeroExponent,
    EmptyA,
    TooLarge,
    ScanCapExceeded,
    NotAnIdeal,
    NotAdditive,
    NotMultiplicative,
    NotGoodMultiplicative,
    NotSurjective,
    KernelNotContained,
    DegreeOverflow,
    ImproperIdeal,
    ParseError,
    UnknownConstruction,
    BadGenerator,
    IndexOutOfRange,
};

const char* error_code_name(ErrorCode c);

class HyperError : public std::runtime_error {
public:
    HyperError(ErrorCode code, std::string msg)
        : std::runtime_error(std::move(msg)), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

enum class Distributivity { Inclusive, Strong };

/// Raw, unvalidated table data for a finite multiplicative hyperring.
struct RawTables {
    std::vector<std::string> labels;       // optional; defaults to indices
    uint32_t zero = 0;
    std::vector<uint32_t> add;             // m*m, row-major
    std::vector<uint32_t> neg;             // m
    std::vector<std::vector<uint32_t>> hmul;  // m*m, row-major, each a sorted set
    uint32_t size() const { return uint32_t(neg.size()); }
};

struct AxiomFailure {
    std::string axiom;               // e.g. "hmul-associativity"
    std::vector<uint32_t> witness;   // element indices reproducing the violation
};

struct ValidationReport {
    bool ok = false;
    Distributivity distributivity = Distributivity::Inclusive;
    std::vector<AxiomFailure> failures;  // one entry per violated axiom, minimal witness
};

class FiniteHyperring;
using Ring = std::shared_ptr<const FiniteHyperring>;

/**
 * A finite commutative multiplicative hyperring given by explicit tables:
 * (elements, add) is an abelian group, hmul maps each pair to a nonempty
 * subset of the carrier. Immutable once built; every operation on it is pure.
 */
class FiniteHyperring {
public:
    uint32_t size() const { return m_; }
    uint32_t zero() const { return zero_; }
    uint32_t add(uint32_t a, uint32_t b) const { return add_[size_t(a) * m_ + b]; }
    uint32_t neg(uint32_t a) const { return neg_[a]; }
    const IndexSet& hmul(uint32_t a, uint32_t b) const { return hmul_[size_t(a) * m_ + b]; }
    const std::string& label(uint32_t a) const { return labels_[a]; }
    Distributivity distributivity() const { return dist_; }
    uint64_t fingerprint() const { return fingerprint_; }
    const std::string& name() const { return name_; }

    /// Table validation without construction; lists every violated axiom.
    /// Throws HyperError(MalformedTables) on dimension/range errors.
    static ValidationReport validate(const RawTables& t);

    /// Validates and builds. Throws MalformedTables / AxiomFailure.
    static Ring create(const RawTables& t, std::string name = "");

    /// Builds without axiom validation; for constructions whose output is
    /// correct by construction (large products). Tables must be well-formed.
    static Ring create_unchecked(const RawTables& t, std::string name,
                                 Distributivity dist);

private:
    FiniteHyperring() = default;

    uint32_t m_ = 0;
    uint32_t zero_ = 0;
    std::vector<std::string> labels_;
    std::vector<uint32_t> add_;
    std::vector<uint32_t> neg_;
    std::vector<IndexSet> hmul_;
    Distributivity dist_ = Distributivity::Inclusive;
    uint64_t fingerprint_ = 0;
    std::string name_;
};

/// Subset of a carrier together with its owning ring.
struct ElementSet {
    Ring ring;
    IndexSet bits;

    ElementSet() = default;
    ElementSet(Ring r, IndexSet b) : ring(std::move(r)), bits(std::move(b)) {}
    static ElementSet empty(const Ring& r) { return {r, IndexSet(r->size())}; }
    static ElementSet single(const Ring& r, uint32_t i) {
        return {r, IndexSet::single(r->size(), i)};
    }
    bool operator==(const ElementSet& o) const { return ring == o.ring && bits == o.bits; }
};

void require_same_ring(const Ring& a, const Ring& b);

/// { s + t : s in S, t in T }; empty when either input is empty.
ElementSet set_sum(const ElementSet& S, const ElementSet& T);

/// Union of hmul over S x T; empty when either input is empty.
ElementSet set_product(const ElementSet& S, const ElementSet& T);

/// Left fold of set_product over a nonempty element tuple.
/// Fold order is irrelevant for validated rings (set-extended associativity).
IndexSet tuple_product(const Ring& r, const std::vector<uint32_t>& xs);

/// a^n for n >= 1 (n = 0 is undefined: no multiplicative identity is assumed).
IndexSet element_power(const Ring& r, uint32_t a, uint32_t n);

/// In-place variant used by scan loops: acc <- union of hmul[u][x] for u in acc.
void fold_product_step(const FiniteHyperring& r, const IndexSet& acc, uint32_t x,
                       IndexSet& out);

}  // namespace hyperring
