#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperring/classify.hpp"
#include "hyperring/constructions.hpp"
#include "hyperring/core.hpp"
#include "hyperring/ideals.hpp"

namespace hyperring {

enum class SuiteId {
    T1, T2, T3a, T3b, T4, T4a, T4b, T5, T6, T7, T8,
    T9a, T9b, T10, T11, T12, T13, T14, T15, T16, T17,
};

const char* suite_name(SuiteId s);
std::optional<SuiteId> suite_from_name(const std::string& s);
std::vector<SuiteId> all_suites();

/// One member of a generated ring family, with its construction provenance.
struct RingInstance {
    std::string name;
    Ring ring;
    std::optional<RaSpec> ra;
    std::optional<ProductRing> product;
};

struct Family {
    enum class Kind { RaSweep, ProductSweep, QuotientSweep, FixtureList, Default };
    Kind kind = Kind::Default;
    uint32_t nmax = 8;
    uint32_t amax = 2;
    uint32_t product_cap = 36;
    bool triples = false;  // include 3-factor products in product sweeps
    std::vector<RingInstance> fixtures;
};

std::vector<RingInstance> generate_family(const Family& fam);

struct SuiteFailure {
    std::string fingerprint;  // replayable instance description
    std::vector<uint32_t> witness;
    std::string detail;
};

struct TheoremReport {
    std::string suite;
    uint64_t instances = 0;      // hypothesis evaluations performed
    uint64_t skipped = 0;        // instances skipped by size/scan caps
    uint64_t failure_total = 0;  // exact count; `failures` may be truncated
    std::vector<SuiteFailure> failures;
    std::vector<SuiteFailure> notes;       // informational records (not failures)
    std::map<std::string, uint64_t> info;  // informational counters

    bool passed() const { return failure_total == 0; }
};

struct HarnessConfig {
    uint32_t jobs = 1;
    uint64_t scan_cap = uint64_t(1) << 24;
    uint32_t size_cap = 64;
    // per-suite carrier ceilings keep tuple scans and localization tractable
    uint32_t absorbing_carrier_cap = 12;   // T12/T13/T15 (m^3+ scans per ideal pair)
    uint32_t localize_carrier_cap = 8;     // T16
    LocalizeMode localize_mode = LocalizeMode::SetEquality;
    bool t8_raw_union_rerun = true;        // report convention divergences
    bool t8_primary_raw_union = false;     // --ideal-product raw-union (T8 only)
    uint32_t monomial_dmax = 3;            // T2
    uint64_t max_recorded_failures = 200;  // per suite, after the deterministic sort
};

TheoremReport run_suite(SuiteId suite, const std::vector<RingInstance>& family,
                        const HarnessConfig& cfg = {});

std::vector<TheoremReport> run_suites(const std::vector<SuiteId>& suites,
                                      const std::vector<RingInstance>& family,
                                      const HarnessConfig& cfg = {});

/// Step-by-step re-execution of a recorded failure through public operations.
struct ReplayTrace {
    bool reproduced = false;
    std::vector<std::string> lines;
};
ReplayTrace replay_failure(const TheoremReport& report, size_t index,
                           const HarnessConfig& cfg = {});

/// Rebuilds the ring described by an instance fingerprint prefix (replay).
Ring ring_from_fingerprint(const std::string& fingerprint);

}  // namespace hyperring
