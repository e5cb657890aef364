#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperring/classify.hpp"
#include "hyperring/constructions.hpp"
#include "hyperring/core.hpp"
#include "hyperring/harness.hpp"

namespace hyperring {

/**
 * Line-oriented spec file with [construction], [ideals], [queries] and
 * [suites] sections. Unknown sections and keys are rejected with the
 * offending line number.
 *
 *   [construction]
 *   kind = RA            # RA | product | quotient | tables
 *   n = 16
 *   A = 0,1
 *
 *   [ideals]
 *   P = 4                # generator list; the named ideal is <4>
 *
 *   [queries]
 *   query = prime P
 *   query = iprime P I
 *   query = nAbsorbingIPrime P I n=2
 *
 *   [suites]
 *   suite = T1 family=ra nmax=6 amax=2
 */
struct QuerySpec {
    Predicate predicate;
    std::string p_label;
    std::string i_label;  // empty when unused
    std::optional<uint32_t> n;
};

struct SuiteSpec {
    SuiteId id;
    Family family;
};

struct HyperringSpecFile {
    std::string construction;  // RA | product | quotient | tables
    // RA / quotient base / product factors
    std::optional<RaSpec> ra;
    std::vector<RaSpec> factors;
    std::optional<RaSpec> base;
    std::vector<uint32_t> modulo;  // quotient ideal generators
    std::optional<RawTables> tables;

    std::vector<std::pair<std::string, std::vector<uint32_t>>> ideals;  // label -> gens
    std::vector<QuerySpec> queries;
    std::vector<SuiteSpec> suites;

    /// Builds the ring described by the construction section.
    Ring instantiate() const;
    /// Resolves a named ideal on the given ring (generated ideal of the gens).
    Hyperideal resolve_ideal(const Ring& r, const std::string& label) const;
};

HyperringSpecFile parse_spec_text(const std::string& text);
HyperringSpecFile parse_spec_file(const std::string& path);

}  // namespace hyperring
