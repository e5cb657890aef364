#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "hyperring/classify.hpp"
#include "hyperring/constructions.hpp"
#include "hyperring/core.hpp"
#include "hyperring/harness.hpp"
#include "hyperring/ideals.hpp"
#include "hyperring/report.hpp"
#include "hyperring/specfile.hpp"

using namespace hyperring;

namespace {

struct GlobalOpts {
    uint64_t scan_cap = uint64_t(1) << 24;
    uint32_t size_cap = 64;
    uint32_t jobs = 1;
    std::string localization_mode = "set-equality";
    std::string ideal_product_mode = "generated";
    std::string output;
    bool body_only = false;
};

void emit(const GlobalOpts& g, const ReportDoc& doc) {
    std::string text = g.body_only ? doc.canonical_body() : doc.full().dump(2) + "\n";
    if (g.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(g.output);
        out << text;
    }
}

std::string query_display(const HyperringSpecFile& spec, const QuerySpec& q) {
    std::string s = predicate_name(q.predicate);
    s += ' ';
    s += q.p_label;
    if (!q.i_label.empty()) {
        s += ' ';
        s += q.i_label;
    }
    if (q.n) s += " n=" + std::to_string(*q.n);
    (void)spec;
    return s;
}

int cmd_validate(const GlobalOpts& g, const std::string& path) {
    HyperringSpecFile spec = parse_spec_file(path);
    ReportDoc doc = make_report("validate", g.jobs);
    if (spec.construction == "tables") {
        ValidationReport rep = FiniteHyperring::validate(*spec.tables);
        doc.body["construction"] = spec.construction;
        doc.body["size"] = spec.tables->size();
        doc.body["validation"] = json_validation(rep);
        emit(g, doc);
        return rep.ok ? 0 : 2;
    }
    Ring r = spec.instantiate();
    doc.body["construction"] = spec.construction;
    doc.body["ring"] = r->name();
    doc.body["size"] = r->size();
    ValidationReport rep;
    rep.ok = true;
    rep.distributivity = r->distributivity();
    doc.body["validation"] = json_validation(rep);
    emit(g, doc);
    return 0;
}

int cmd_ideals(const GlobalOpts& g, const std::string& path) {
    HyperringSpecFile spec = parse_spec_file(path);
    Ring r = spec.instantiate();
    const IdealLattice& lat = lattice_of(r, g.size_cap);
    ReportDoc doc = make_report("ideals", g.jobs);
    doc.body = json_lattice(r, lat);
    emit(g, doc);
    return 0;
}

int cmd_classify(const GlobalOpts& g, const std::string& path) {
    HyperringSpecFile spec = parse_spec_file(path);
    Ring r = spec.instantiate();
    ScanConfig cfg{g.scan_cap, g.jobs};
    ReportDoc doc = make_report("classify", g.jobs);
    doc.body["ring"] = r->name();
    doc.body["size"] = r->size();
    Json results = Json::array();
    bool any_false = false;
    for (const QuerySpec& q : spec.queries) {
        PredicateQuery pq;
        pq.predicate = q.predicate;
        pq.P = spec.resolve_ideal(r, q.p_label);
        if (!q.i_label.empty()) pq.I = spec.resolve_ideal(r, q.i_label);
        pq.n = q.n;
        ClassificationReport rep = run_query(pq, cfg);
        if (!rep.verdict) any_false = true;
        Json e = json_classification(query_display(spec, q), rep);
        e["P"] = json_set(pq.P.bits);
        if (pq.I) e["I"] = json_set(pq.I->bits);
        results.push_back(e);
    }
    doc.body["results"] = results;
    emit(g, doc);
    return any_false ? 2 : 0;
}

int cmd_spectrum(const GlobalOpts& g, const std::string& path) {
    HyperringSpecFile spec = parse_spec_file(path);
    Ring r = spec.instantiate();
    ScanConfig cfg{g.scan_cap, g.jobs};
    const IdealLattice& lat = lattice_of(r, g.size_cap);
    ReportDoc doc = make_report("spectrum", g.jobs);
    doc.body["ring"] = r->name();
    doc.body["size"] = r->size();
    Json grid = Json::array();
    for (size_t i = 0; i < lat.ideals.size(); ++i) {
        if (lat.ideals[i].count() == r->size()) continue;
        Hyperideal P{r, lat.ideals[i]};
        Json e;
        e["ideal"] = json_set(P.bits);
        e["prime"] = is_prime(P, cfg).verdict;
        e["weaklyPrime"] = is_weakly_prime(P, cfg).verdict;
        e["primary"] = is_primary(P, cfg).verdict;
        uint64_t triple_space = uint64_t(r->size()) * r->size() * r->size();
        if (triple_space <= cfg.scan_cap) {
            e["twoAbsorbing"] = is_n_absorbing(P, 2, cfg).verdict;
            e["twoAbsorbingPrimary"] = is_two_absorbing_primary(P, cfg).verdict;
        }
        Json iprime_row = Json::array();
        Json iprimary_row = Json::array();
        for (size_t j = 0; j < lat.ideals.size(); ++j) {
            Hyperideal I{r, lat.ideals[j]};
            iprime_row.push_back(is_i_prime(P, I, cfg).verdict);
            iprimary_row.push_back(is_i_primary(P, I, cfg).verdict);
        }
        e["iprime"] = iprime_row;
        e["iprimary"] = iprimary_row;
        grid.push_back(e);
    }
    Json idx = Json::array();
    for (const auto& s : lat.ideals) idx.push_back(json_set(s));
    doc.body["lattice"] = idx;
    doc.body["grid"] = grid;
    emit(g, doc);
    return 0;
}

int cmd_theorems(const GlobalOpts& g, const std::string& path,
                 const std::vector<std::string>& suite_names, uint32_t nmax, uint32_t amax,
                 uint32_t cap, bool triples) {
    std::vector<SuiteSpec> runs;
    if (!path.empty()) {
        HyperringSpecFile spec = parse_spec_file(path);
        runs = spec.suites;
    }
    for (const auto& s : suite_names) {
        auto id = suite_from_name(s);
        if (!id) throw HyperError(ErrorCode::ParseError, "unknown suite " + s);
        Family fam;
        fam.nmax = nmax;
        fam.amax = amax;
        fam.product_cap = cap;
        fam.triples = triples;
        runs.push_back({*id, fam});
    }
    if (runs.empty()) {
        for (SuiteId id : all_suites()) {
            Family fam;
            fam.nmax = nmax;
            fam.amax = amax;
            fam.product_cap = cap;
            fam.triples = triples;
            runs.push_back({id, fam});
        }
    }

    HarnessConfig cfg;
    cfg.jobs = g.jobs;
    cfg.scan_cap = g.scan_cap;
    cfg.size_cap = g.size_cap;
    cfg.localize_mode = g.localization_mode == "intersect" ? LocalizeMode::Intersect
                                                           : LocalizeMode::SetEquality;
    cfg.t8_raw_union_rerun = true;
    cfg.t8_primary_raw_union = g.ideal_product_mode == "raw-union";

    ReportDoc doc = make_report("theorems", g.jobs);
    Json suites = Json::array();
    bool any_fail = false;

    // group runs by family parameters so each family is generated once
    std::map<std::string, std::pair<Family, std::vector<SuiteId>>> groups;
    for (const auto& run : runs) {
        std::string key = std::to_string(int(run.family.kind)) + ":" +
                          std::to_string(run.family.nmax) + ":" +
                          std::to_string(run.family.amax) + ":" +
                          std::to_string(run.family.product_cap) + ":" +
                          std::to_string(run.family.triples);
        groups[key].first = run.family;
        groups[key].second.push_back(run.id);
    }
    std::vector<Json> suite_jsons;
    for (auto& [key, grp] : groups) {
        auto family = generate_family(grp.first);
        auto reports = run_suites(grp.second, family, cfg);
        for (const auto& rep : reports) {
            if (!rep.passed()) any_fail = true;
            Json e = json_theorem_report(rep);
            e["family_rings"] = family.size();
            suite_jsons.push_back(e);
        }
    }
    std::stable_sort(suite_jsons.begin(), suite_jsons.end(), [](const Json& a, const Json& b) {
        return a["suite"].get<std::string>() < b["suite"].get<std::string>();
    });
    for (auto& e : suite_jsons) suites.push_back(e);
    doc.body["suites"] = suites;
    emit(g, doc);
    return any_fail ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite multiplicative hyperring engine"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--scan-cap", g.scan_cap, "max tuple-space size per predicate scan");
    app.add_option("--size-cap", g.size_cap, "max carrier size for ideal enumeration");
    app.add_option("--jobs", g.jobs, "worker threads");
    app.add_option("--localization-mode", g.localization_mode,
                   "set-equality | intersect")
        ->check(CLI::IsMember({"set-equality", "intersect"}));
    app.add_option("--ideal-product", g.ideal_product_mode,
                   "generated | raw-union (raw-union only honored by the T8 rerun)")
        ->check(CLI::IsMember({"generated", "raw-union"}));
    app.add_option("-o,--output", g.output, "write the report to a file");
    app.add_flag("--body-only", g.body_only, "emit only the canonical report body");

    std::string spec_path;
    auto* validate = app.add_subcommand("validate", "check the hyperring axioms");
    validate->add_option("spec", spec_path, "spec file")->required();
    auto* ideals = app.add_subcommand("ideals", "enumerate the hyperideal lattice");
    ideals->add_option("spec", spec_path, "spec file")->required();
    auto* classify = app.add_subcommand("classify", "run the spec file's queries");
    classify->add_option("spec", spec_path, "spec file")->required();
    auto* spectrum = app.add_subcommand("spectrum", "every ideal x every predicate");
    spectrum->add_option("spec", spec_path, "spec file")->required();

    auto* theorems = app.add_subcommand("theorems", "run theorem property suites");
    std::string theorems_spec;
    std::vector<std::string> suite_names;
    uint32_t nmax = 8, amax = 2, cap = 36;
    bool triples = false;
    theorems->add_option("spec", theorems_spec, "spec file with a [suites] section");
    theorems->add_option("--suite", suite_names, "suite id (repeatable), e.g. T4");
    theorems->add_option("--nmax", nmax, "R_A sweep: max modulus");
    theorems->add_option("--amax", amax, "R_A sweep: max |A|");
    theorems->add_option("--cap", cap, "product sweep: max carrier");
    theorems->add_flag("--triples", triples, "include 3-factor products");

    for (auto* sub : {validate, ideals, classify, spectrum, theorems}) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(g, spec_path);
        if (ideals->parsed()) return cmd_ideals(g, spec_path);
        if (classify->parsed()) return cmd_classify(g, spec_path);
        if (spectrum->parsed()) return cmd_spectrum(g, spec_path);
        if (theorems->parsed())
            return cmd_theorems(g, theorems_spec, suite_names, nmax, amax, cap, triples);
    } catch (const HyperError& e) {
        std::cerr << "error[" << error_code_name(e.code()) << "]: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
