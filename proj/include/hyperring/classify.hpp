#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperring/core.hpp"
#include "hyperring/ideals.hpp"

namespace hyperring {

/**
 * Verdict of an exhaustive predicate scan.
 *
 * `scanned` is canonical: the full tuple-space size on a true verdict, the
 * 1-based position of the witness in row-major scan order on a false one.
 * Parallel and serial runs produce identical reports (lowest witness wins).
 */
struct ClassificationReport {
    bool verdict = false;
    std::optional<std::vector<uint32_t>> witness;
    uint64_t scanned = 0;
};

struct ScanConfig {
    uint64_t scan_cap = uint64_t(1) << 24;  // refuse larger tuple spaces
    uint32_t jobs = 1;
};

/// a o b inside P implies a in P or b in P.
ClassificationReport is_prime(const Hyperideal& P, const ScanConfig& cfg = {});

/// a o b inside P minus {0} implies membership.
ClassificationReport is_weakly_prime(const Hyperideal& P, const ScanConfig& cfg = {});

/// a o b inside P minus IP implies membership (IP = generated ideal product).
ClassificationReport is_i_prime(const Hyperideal& P, const Hyperideal& I,
                                const ScanConfig& cfg = {});

/// Pairwise scan against an explicit trigger set D (convention reruns).
ClassificationReport is_i_prime_with_difference(const Hyperideal& P, const IndexSet& D,
                                                const ScanConfig& cfg = {});

/// a o b inside P implies a in P or b in radical(P).
ClassificationReport is_primary(const Hyperideal& P, const ScanConfig& cfg = {});

/// a o b inside P minus IP implies a in P or b in radical(P).
ClassificationReport is_i_primary(const Hyperideal& P, const Hyperideal& I,
                                  const ScanConfig& cfg = {});

/// Product of n+1 elements inside P implies some n-subproduct inside P.
ClassificationReport is_n_absorbing(const Hyperideal& P, uint32_t n,
                                    const ScanConfig& cfg = {});

/// Product of n+1 elements inside P minus IP implies some n-subproduct inside P.
ClassificationReport is_n_absorbing_i_prime(const Hyperideal& P, const Hyperideal& I,
                                            uint32_t n, const ScanConfig& cfg = {});

/// xyz inside P implies xy in P or xz in radical(P) or yz in radical(P).
ClassificationReport is_two_absorbing_primary(const Hyperideal& P,
                                              const ScanConfig& cfg = {});

enum class Predicate {
    Prime,
    WeaklyPrime,
    IPrime,
    Primary,
    IPrimary,
    TwoAbsorbing,
    NAbsorbing,
    NAbsorbingIPrime,
    TwoAbsorbingPrimary,
};

const char* predicate_name(Predicate p);
std::optional<Predicate> predicate_from_name(const std::string& s);
bool predicate_needs_i(Predicate p);
bool predicate_needs_n(Predicate p);

struct PredicateQuery {
    Predicate predicate;
    Hyperideal P;
    std::optional<Hyperideal> I;
    std::optional<uint32_t> n;
};

ClassificationReport run_query(const PredicateQuery& q, const ScanConfig& cfg = {});

/// Re-evaluates a false verdict's witness through public operations only;
/// returns a human-readable trace and whether the violation reproduced.
struct ReplayResult {
    bool reproduced = false;
    std::vector<std::string> trace;
};
ReplayResult replay_witness(const PredicateQuery& q, const std::vector<uint32_t>& witness);

}  // namespace hyperring
