#include "doctest.h"

#include "hyperring/harness.hpp"
#include "hyperring/report.hpp"

using namespace hyperring;

namespace {

Family ra_family(uint32_t nmax, uint32_t amax = 2) {
    Family fam;
    fam.kind = Family::Kind::RaSweep;
    fam.nmax = nmax;
    fam.amax = amax;
    return fam;
}

}  // namespace

TEST_CASE("family generation is deterministic and validated") {
    Family fam = ra_family(5);
    auto a = generate_family(fam);
    auto b = generate_family(fam);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].name == b[i].name);
        CHECK(a[i].ring->fingerprint() == b[i].ring->fingerprint());
    }
    // n=2..5, |A|<=2: 3+6+10+15 rings
    CHECK(a.size() == 34);
}

TEST_CASE("default family contains sweeps, pairwise products and quotients") {
    Family fam;
    fam.kind = Family::Kind::Default;
    fam.nmax = 4;
    fam.product_cap = 8;
    auto rings = generate_family(fam);
    bool has_ra = false, has_product = false, has_quotient = false;
    for (const auto& inst : rings) {
        if (inst.ra) has_ra = true;
        if (inst.product) has_product = true;
        if (inst.name.find('/') != std::string::npos) has_quotient = true;
    }
    CHECK(has_ra);
    CHECK(has_product);
    CHECK(has_quotient);
}

TEST_CASE("empty family yields an empty passing report") {
    Family fam;
    fam.kind = Family::Kind::FixtureList;
    TheoremReport rep = run_suite(SuiteId::T4, generate_family(fam));
    CHECK(rep.instances == 0);
    CHECK(rep.passed());
}

TEST_CASE("T1 and T7 hold on the R_A sweep") {
    auto family = generate_family(ra_family(6));
    for (SuiteId id : {SuiteId::T1, SuiteId::T7}) {
        TheoremReport rep = run_suite(id, family);
        CHECK(rep.passed());
        CHECK(rep.instances > 100);
    }
}

TEST_CASE("suite counts over the n<=5 sweep match an independent recount") {
    // frozen from an independent brute-force recount of the same family
    auto family = generate_family(ra_family(5));
    TheoremReport t4 = run_suite(SuiteId::T4, family);
    CHECK(t4.instances == 108);
    CHECK(t4.failure_total == 0);
    TheoremReport t15 = run_suite(SuiteId::T15, family);
    CHECK(t15.instances == 213);
    CHECK(t15.failure_total == 0);
    TheoremReport t9a = run_suite(SuiteId::T9a, family);
    CHECK(t9a.instances == 105);
    CHECK(t9a.failure_total == 3);
}

TEST_CASE("T4 finds the Z6 A={0,2} counterexample") {
    auto family = generate_family(ra_family(6));
    TheoremReport rep = run_suite(SuiteId::T4, family);
    CHECK_FALSE(rep.passed());
    bool found = false;
    for (const auto& f : rep.failures)
        if (f.fingerprint == "ring=RA(n=6,A={0,2})|P={0,2,4}|I={0}") found = true;
    CHECK(found);
}

TEST_CASE("T4a and T6 fail on the same instance family") {
    Family fam;
    fam.kind = Family::Kind::FixtureList;
    RingInstance inst;
    inst.ra = RaSpec{6, {0, 2}};
    inst.ring = build_ra(*inst.ra);
    inst.name = inst.ring->name();
    fam.fixtures.push_back(inst);
    auto family = generate_family(fam);

    TheoremReport t4a = run_suite(SuiteId::T4a, family);
    CHECK_FALSE(t4a.passed());
    TheoremReport t6 = run_suite(SuiteId::T6, family);
    CHECK_FALSE(t6.passed());
    TheoremReport t1 = run_suite(SuiteId::T1, family);
    CHECK(t1.passed());
}

TEST_CASE("T12 radical-power failures are reported with element witnesses") {
    Family fam;
    fam.kind = Family::Kind::FixtureList;
    RingInstance inst;
    inst.ra = RaSpec{6, {0, 2}};
    inst.ring = build_ra(*inst.ra);
    inst.name = inst.ring->name();
    fam.fixtures.push_back(inst);
    TheoremReport rep = run_suite(SuiteId::T12, generate_family(fam));
    CHECK_FALSE(rep.passed());
    bool radical_improper = false;
    for (const auto& f : rep.failures)
        if (f.detail.find("whole ring") != std::string::npos) radical_improper = true;
    CHECK(radical_improper);
}

TEST_CASE("T8 runs on pairwise products and reports divergences informationally") {
    Family fam;
    fam.kind = Family::Kind::ProductSweep;
    fam.nmax = 3;
    fam.product_cap = 9;
    TheoremReport rep = run_suite(SuiteId::T8, generate_family(fam));
    CHECK(rep.instances > 0);
    // the raw-union rerun counter exists even when it counts zero divergences
    CHECK(rep.info.count("t8_divergences") <= 1);
}

TEST_CASE("T16 counts localization outcomes informationally") {
    auto family = generate_family(ra_family(5));
    TheoremReport rep = run_suite(SuiteId::T16, family);
    CHECK(rep.passed());
    CHECK(rep.info.at("localize_Ok") > 0);
}

TEST_CASE("suite reports are identical across worker counts") {
    auto family = generate_family(ra_family(6));
    for (SuiteId id : {SuiteId::T4, SuiteId::T1, SuiteId::T15}) {
        HarnessConfig c1;
        c1.jobs = 1;
        HarnessConfig c8;
        c8.jobs = 8;
        Json a = json_theorem_report(run_suite(id, family, c1));
        Json b = json_theorem_report(run_suite(id, family, c8));
        CHECK(a.dump() == b.dump());
    }
}

TEST_CASE("replay_failure reproduces recorded failures") {
    auto family = generate_family(ra_family(6));
    TheoremReport rep = run_suite(SuiteId::T4, family);
    REQUIRE_FALSE(rep.failures.empty());
    for (size_t i = 0; i < std::min<size_t>(rep.failures.size(), 5); ++i) {
        ReplayTrace tr = replay_failure(rep, i);
        CHECK(tr.reproduced);
        CHECK(tr.lines.size() > 1);
    }
    CHECK_THROWS_AS((void)replay_failure(rep, rep.failures.size() + 10), HyperError);

    TheoremReport clean = run_suite(SuiteId::T1, family);
    REQUIRE(clean.failures.empty());
    CHECK_THROWS_AS((void)replay_failure(clean, 0), HyperError);

    // a corrupted record must not replay
    TheoremReport fake = rep;
    fake.failures[0].detail += " (corrupted)";
    CHECK_FALSE(replay_failure(fake, 0).reproduced);
}

TEST_CASE("ring_from_fingerprint round-trips family instances") {
    Family fam;
    fam.kind = Family::Kind::Default;
    fam.nmax = 4;
    fam.product_cap = 8;
    for (const auto& inst : generate_family(fam)) {
        Ring r = ring_from_fingerprint("ring=" + inst.name + "|P={0}");
        CHECK(r->size() == inst.ring->size());
        CHECK(r->fingerprint() == inst.ring->fingerprint());
    }
}

TEST_CASE("T17 passes on products of non-degenerate hyperfields") {
    Family fam;
    fam.kind = Family::Kind::ProductSweep;
    fam.nmax = 5;
    fam.product_cap = 25;
    TheoremReport rep = run_suite(SuiteId::T17, generate_family(fam));
    CHECK(rep.instances > 0);
    CHECK(rep.passed());
}

TEST_CASE("T2, T3a, T4b and T13 pass on the R_A sweep") {
    auto family = generate_family(ra_family(6));
    for (SuiteId id : {SuiteId::T2, SuiteId::T3a, SuiteId::T4b, SuiteId::T13}) {
        TheoremReport rep = run_suite(id, family);
        CHECK(rep.instances > 0);
        CHECK(rep.passed());
    }
}

TEST_CASE("T3b surfaces the pullback counterexample") {
    Family fam;
    fam.kind = Family::Kind::FixtureList;
    RingInstance inst;
    inst.ra = RaSpec{4, {2}};
    inst.ring = build_ra(*inst.ra);
    inst.name = inst.ring->name();
    fam.fixtures.push_back(inst);
    TheoremReport rep = run_suite(SuiteId::T3b, generate_family(fam));
    CHECK_FALSE(rep.passed());
}
