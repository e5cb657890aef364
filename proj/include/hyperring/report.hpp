#pragma once

#include <string>

#include "json.hpp"

#include "hyperring/classify.hpp"
#include "hyperring/harness.hpp"
#include "hyperring/ideals.hpp"

namespace hyperring {

using Json = nlohmann::ordered_json;

/// Report documents: a `header` with run metadata (jobs, tool version) and a
/// canonical `body`. Identical inputs yield byte-identical bodies regardless
/// of the worker count; comparisons and goldens use the body only.
struct ReportDoc {
    Json header;
    Json body;

    Json full() const;
    std::string canonical_body() const;  // 2-space indent, fixed field order
};

ReportDoc make_report(const std::string& command, uint32_t jobs);

Json json_set(const IndexSet& s);
Json json_validation(const ValidationReport& rep);
Json json_classification(const std::string& query, const ClassificationReport& rep);
Json json_lattice(const Ring& r, const IdealLattice& lat);
Json json_theorem_report(const TheoremReport& rep);

}  // namespace hyperring
