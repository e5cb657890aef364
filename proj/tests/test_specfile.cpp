#include "doctest.h"

#include "hyperring/specfile.hpp"

using namespace hyperring;

TEST_CASE("minimal RA spec parses and instantiates") {
    HyperringSpecFile spec = parse_spec_text(R"(
[construction]
kind = RA
n = 6
A = 0,1

[ideals]
P = 2

[queries]
query = prime P
)");
    CHECK(spec.construction == "RA");
    Ring r = spec.instantiate();
    CHECK(r->size() == 6);
    Hyperideal P = spec.resolve_ideal(r, "P");
    CHECK(P.bits.to_vector() == std::vector<uint32_t>{0, 2, 4});
    REQUIRE(spec.queries.size() == 1);
    CHECK(spec.queries[0].predicate == Predicate::Prime);
}

TEST_CASE("empty A surfaces EmptyA") {
    HyperringSpecFile spec = parse_spec_text(R"(
[construction]
kind = RA
n = 6
A =
)");
    try {
        (void)spec.instantiate();
        CHECK(false);
    } catch (const HyperError& e) {
        CHECK(e.code() == ErrorCode::EmptyA);
    }
}

TEST_CASE("out-of-range ideal generator surfaces BadGenerator") {
    HyperringSpecFile spec = parse_spec_text(R"(
[construction]
kind = RA
n = 6
A = 0,1

[ideals]
P = 9
)");
    Ring r = spec.instantiate();
    try {
        (void)spec.resolve_ideal(r, "P");
        CHECK(false);
    } catch (const HyperError& e) {
        CHECK(e.code() == ErrorCode::BadGenerator);
    }
}

TEST_CASE("unknown keys and sections are rejected with line numbers") {
    try {
        (void)parse_spec_text("[construction]\nkind = RA\nn = 4\nA = 1\nbogus = 3\n");
        CHECK(false);
    } catch (const HyperError& e) {
        CHECK(e.code() == ErrorCode::ParseError);
        CHECK(std::string(e.what()).find("line 5") != std::string::npos);
    }
    CHECK_THROWS_AS((void)parse_spec_text("[nonsense]\nx = 1\n"), HyperError);
    CHECK_THROWS_AS((void)parse_spec_text("[construction]\nkind = warp\n"), HyperError);
}

TEST_CASE("product and quotient constructions") {
    HyperringSpecFile prod = parse_spec_text(R"(
[construction]
kind = product
factors = RA:2:1; RA:3:1
)");
    CHECK(prod.instantiate()->size() == 6);

    HyperringSpecFile quot = parse_spec_text(R"(
[construction]
kind = quotient
base = RA:8:0,1
modulo = 4
)");
    CHECK(quot.instantiate()->size() == 4);  // Z8 / {0,4}
}

TEST_CASE("tables construction round-trips through validation") {
    HyperringSpecFile spec = parse_spec_text(R"(
[construction]
kind = tables
m = 2
zero = 0
neg = 0,1
add.0 = 0,1
add.1 = 1,0
hmul.0 = [0],[0]
hmul.1 = [0],[0,1]
)");
    Ring r = spec.instantiate();
    CHECK(r->size() == 2);
    CHECK(r->hmul(1, 1).count() == 2);
}

TEST_CASE("query and suite parsing") {
    HyperringSpecFile spec = parse_spec_text(R"(
[construction]
kind = RA
n = 16
A = 0,1

[ideals]
P = 4
I = 2

[queries]
query = iprime P I
query = nAbsorbingIPrime P I n=2

[suites]
suite = T4 family=ra nmax=6 amax=2
suite = T8 family=product cap=16 triples=true
)");
    REQUIRE(spec.queries.size() == 2);
    CHECK(spec.queries[1].n == 2);
    REQUIRE(spec.suites.size() == 2);
    CHECK(spec.suites[0].id == SuiteId::T4);
    CHECK(spec.suites[0].family.kind == Family::Kind::RaSweep);
    CHECK(spec.suites[1].family.product_cap == 16);
    CHECK(spec.suites[1].family.triples);

    CHECK_THROWS_AS((void)parse_spec_text("[queries]\nquery = nAbsorbing P\n"), HyperError);
    CHECK_THROWS_AS((void)parse_spec_text("[suites]\nsuite = T99\n"), HyperError);
}
