#include "hyperring/report.hpp"

namespace hyperring {

Json ReportDoc::full() const {
    Json j;
    j["header"] = header;
    j["body"] = body;
    return j;
}

std::string ReportDoc::canonical_body() const { return body.dump(2) + "\n"; }

ReportDoc make_report(const std::string& command, uint32_t jobs) {
    ReportDoc doc;
    doc.header["tool"] = "hyperring";
    doc.header["version"] = "0.1.0";
    doc.header["command"] = command;
    doc.header["jobs"] = jobs;
    doc.body = Json::object();
    return doc;
}

Json json_set(const IndexSet& s) {
    Json arr = Json::array();
    s.for_each([&](uint32_t i) { arr.push_back(i); });
    return arr;
}

Json json_validation(const ValidationReport& rep) {
    Json j;
    j["ok"] = rep.ok;
    j["distributivity"] =
        rep.distributivity == Distributivity::Strong ? "strong" : "inclusive";
    Json fails = Json::array();
    for (const auto& f : rep.failures) {
        Json e;
        e["axiom"] = f.axiom;
        e["witness"] = f.witness;
        fails.push_back(e);
    }
    j["failures"] = fails;
    return j;
}

Json json_classification(const std::string& query, const ClassificationReport& rep) {
    Json j;
    j["query"] = query;
    j["verdict"] = rep.verdict;
    if (rep.witness)
        j["witness"] = *rep.witness;
    else
        j["witness"] = nullptr;
    j["scanned"] = rep.scanned;
    return j;
}

Json json_lattice(const Ring& r, const IdealLattice& lat) {
    Json j;
    j["ring"] = r->name();
    j["size"] = r->size();
    j["count"] = lat.ideals.size();
    Json ideals = Json::array();
    for (size_t i = 0; i < lat.ideals.size(); ++i) {
        Json e;
        e["elements"] = json_set(lat.ideals[i]);
        e["proper"] = lat.ideals[i].count() < r->size();
        bool prime = false;
        for (size_t pi : lat.primes)
            if (pi == i) prime = true;
        e["prime"] = prime;
        ideals.push_back(e);
    }
    j["ideals"] = ideals;
    return j;
}

Json json_theorem_report(const TheoremReport& rep) {
    Json j;
    j["suite"] = rep.suite;
    j["instances"] = rep.instances;
    j["skipped"] = rep.skipped;
    j["failures"] = Json::array();
    for (const auto& f : rep.failures) {
        Json e;
        e["instance"] = f.fingerprint;
        e["witness"] = f.witness;
        e["detail"] = f.detail;
        j["failures"].push_back(e);
    }
    j["failure_count"] = rep.failure_total;
    j["failures_recorded"] = rep.failures.size();
    j["notes"] = Json::array();
    for (const auto& f : rep.notes) {
        Json e;
        e["instance"] = f.fingerprint;
        e["witness"] = f.witness;
        e["detail"] = f.detail;
        j["notes"].push_back(e);
    }
    Json info = Json::object();
    for (const auto& [k, v] : rep.info) info[k] = v;
    j["info"] = info;
    j["passed"] = rep.passed();
    return j;
}

}  // namespace hyperring
