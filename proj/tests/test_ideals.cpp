#include "doctest.h"

#include "hyperring/constructions.hpp"
#include "hyperring/ideals.hpp"
#include "oracles.hpp"

using namespace hyperring;

namespace {

IndexSet bits(const Ring& r, std::initializer_list<uint32_t> xs) {
    IndexSet s(r->size());
    for (uint32_t x : xs) s.set(x);
    return s;
}

Hyperideal gen(const Ring& r, std::initializer_list<uint32_t> xs) {
    return generated_ideal(r, bits(r, xs));
}

std::vector<uint32_t> vec(const IndexSet& s) { return s.to_vector(); }

}  // namespace

TEST_CASE("is_hyperideal") {
    Ring z6 = build_ra({6, {0, 1}});
    CHECK(is_hyperideal(z6, bits(z6, {0})).ok);
    CHECK(is_hyperideal(z6, bits(z6, {0, 2, 4})).ok);
    // {0,2} is not an additive subgroup: -2 = 4 (equivalently 2+2) escapes
    IdealCheck chk = is_hyperideal(z6, bits(z6, {0, 2}));
    CHECK_FALSE(chk.ok);
    CHECK(chk.clause == "neg-closure");
    CHECK(chk.witness == std::vector<uint32_t>{2});
}

TEST_CASE("enumerate_hyperideals matches known lattices") {
    Ring z5 = build_ra({5, {1}});
    IdealLattice lat5 = enumerate_hyperideals(z5);
    REQUIRE(lat5.ideals.size() == 2);
    CHECK(vec(lat5.ideals[0]) == std::vector<uint32_t>{0});
    CHECK(lat5.ideals[1].count() == 5);

    Ring z6 = build_ra({6, {0, 1}});
    IdealLattice lat6 = enumerate_hyperideals(z6);
    REQUIRE(lat6.ideals.size() == 4);
    CHECK(vec(lat6.ideals[0]) == std::vector<uint32_t>{0});
    CHECK(vec(lat6.ideals[1]) == std::vector<uint32_t>{0, 3});
    CHECK(vec(lat6.ideals[2]) == std::vector<uint32_t>{0, 2, 4});
    CHECK(lat6.ideals[3].count() == 6);

    Ring z8 = build_ra({8, {0, 1}});
    IdealLattice lat8 = enumerate_hyperideals(z8);
    REQUIRE(lat8.ideals.size() == 4);
    CHECK(vec(lat8.ideals[1]) == std::vector<uint32_t>{0, 4});
    CHECK(vec(lat8.ideals[2]) == std::vector<uint32_t>{0, 2, 4, 6});
}

TEST_CASE("lattice completeness against the 2^m subset sweep") {
    for (uint32_t n = 2; n <= 12; ++n) {
        for (uint32_t a = 0; a < n; ++a) {
            for (uint32_t b = a; b < n; ++b) {
                std::vector<uint32_t> A = a == b ? std::vector<uint32_t>{a}
                                                 : std::vector<uint32_t>{a, b};
                Ring r = build_ra({n, A});
                IdealLattice lat = enumerate_hyperideals(r);
                auto brute = oracle::all_ideals(r);
                REQUIRE(lat.ideals.size() == brute.size());
                for (const auto& s : lat.ideals) {
                    bool found = false;
                    for (const auto& o : brute)
                        if (oracle::to_oracle(s) == o) found = true;
                    CHECK(found);
                }
            }
        }
    }
}

TEST_CASE("enumeration refuses oversized carriers") {
    Ring r = build_ra({16, {1}});
    CHECK_THROWS_AS((void)enumerate_hyperideals(r, 8), HyperError);
}

TEST_CASE("generated_ideal") {
    Ring z6 = build_ra({6, {0, 1}});
    CHECK(vec(gen(z6, {}).bits) == std::vector<uint32_t>{0});
    CHECK(vec(gen(z6, {2}).bits) == std::vector<uint32_t>{0, 2, 4});
    Ring z8 = build_ra({8, {0, 1}});
    CHECK(vec(gen(z8, {2}).bits) == std::vector<uint32_t>{0, 2, 4, 6});
}

TEST_CASE("ideal_product") {
    Ring z16 = build_ra({16, {0, 1}});
    CHECK(vec(ideal_product(gen(z16, {2}), gen(z16, {4})).bits) ==
          std::vector<uint32_t>{0, 8});
    Ring z8 = build_ra({8, {0, 1}});
    CHECK(vec(ideal_product(gen(z8, {0}), gen(z8, {2})).bits) == std::vector<uint32_t>{0});
    CHECK(vec(ideal_product(gen(z8, {2}), gen(z8, {4})).bits) == std::vector<uint32_t>{0});
}

TEST_CASE("ideal_power") {
    Ring z8 = build_ra({8, {0, 1}});
    Hyperideal P = gen(z8, {2});
    CHECK(ideal_power(P, 1).bits == P.bits);
    // 2 o 2 = {0,4} lands in the square, so <2>^2 = {0,4}
    CHECK(vec(ideal_power(P, 2).bits) == std::vector<uint32_t>{0, 4});
    CHECK(vec(ideal_power(P, 3).bits) == std::vector<uint32_t>{0});
}

TEST_CASE("ideal_sum and ideal_intersect") {
    Ring z6 = build_ra({6, {0, 1}});
    CHECK(vec(ideal_intersect(gen(z6, {2}), gen(z6, {3})).bits) == std::vector<uint32_t>{0});
    CHECK(ideal_sum(gen(z6, {2}), gen(z6, {3})).bits.count() == 6);
}

TEST_CASE("colon") {
    Ring z8 = build_ra({8, {0, 1}});
    Hyperideal P{z8, bits(z8, {0, 4})};
    CHECK(vec(colon(P, 2).bits) == std::vector<uint32_t>{0, 2, 4, 6});
    Hyperideal R{z8, IndexSet::full(8)};
    for (uint32_t x = 0; x < 8; ++x) CHECK(colon(R, x).bits.count() == 8);
    CHECK(colon(P, 0).bits.count() == 8);  // 0 in A makes 0 absorb
}

TEST_CASE("radical") {
    Ring z8 = build_ra({8, {0, 1}});
    CHECK(vec(radical({z8, bits(z8, {0, 4})}).bits) == std::vector<uint32_t>{0, 2, 4, 6});
    Ring z6 = build_ra({6, {0, 1}});
    CHECK(vec(radical({z6, bits(z6, {0})}).bits) == std::vector<uint32_t>{0});
    CHECK(radical({z6, bits(z6, {0, 3})}).bits == bits(z6, {0, 3}));  // primes are fixed
    // with a collapsed spectrum the radical is the whole ring
    Ring z6b = build_ra({6, {0, 2}});
    CHECK(radical({z6b, bits(z6b, {0, 2, 4})}).bits.count() == 6);
}

TEST_CASE("minimal_primes") {
    Ring z6 = build_ra({6, {0, 1}});
    auto mins = minimal_primes({z6, bits(z6, {0})});
    REQUIRE(mins.size() == 2);
    CHECK(vec(mins[0].bits) == std::vector<uint32_t>{0, 3});
    CHECK(vec(mins[1].bits) == std::vector<uint32_t>{0, 2, 4});
    Ring z8 = build_ra({8, {0, 1}});
    auto mins8 = minimal_primes({z8, bits(z8, {0, 4})});
    REQUIRE(mins8.size() == 1);
    CHECK(vec(mins8[0].bits) == std::vector<uint32_t>{0, 2, 4, 6});
}

TEST_CASE("is_hyperfield") {
    CHECK(is_hyperfield(build_ra({5, {1}})));
    CHECK_FALSE(is_hyperfield(build_ra({6, {0, 1}})));
    Ring z2 = build_ra({2, {1}});
    Ring triv = quotient_hyperring(z2, {z2, IndexSet::full(2)}).ring;
    CHECK(triv->size() == 1);
    CHECK_FALSE(is_hyperfield(triv));
}

TEST_CASE("ideal arithmetic properties over a small sweep") {
    for (uint32_t n : {4u, 6u, 8u}) {
        for (auto A : {std::vector<uint32_t>{0, 1}, std::vector<uint32_t>{2},
                       std::vector<uint32_t>{1, 3}}) {
            bool ok_a = true;
            for (uint32_t x : A)
                if (x >= n) ok_a = false;
            if (!ok_a) continue;
            Ring r = build_ra({n, A});
            IdealLattice lat = enumerate_hyperideals(r);
            for (const auto& pb : lat.ideals)
                for (const auto& qb : lat.ideals) {
                    Hyperideal P{r, pb}, Q{r, qb};
                    Hyperideal PQ = ideal_product(P, Q);
                    CHECK(is_hyperideal(r, PQ.bits).ok);
                    CHECK(ideal_intersect(P, Q).bits.contains(PQ.bits));
                    // monotonicity in the left argument
                    for (const auto& pb2 : lat.ideals) {
                        if (!pb2.contains(pb)) continue;
                        CHECK(ideal_product({r, pb2}, Q).bits.contains(PQ.bits));
                    }
                    Hyperideal radP = radical(P);
                    CHECK(radP.bits.contains(pb));
                    if (radP.bits.count() < r->size())
                        CHECK(radical(radP).bits == radP.bits);
                    for (uint32_t x = 0; x < r->size(); ++x) {
                        Hyperideal cp = colon(P, x);
                        CHECK(cp.bits.contains(pb));
                        CHECK(is_hyperideal(r, cp.bits).ok);
                    }
                }
            // radical monotonicity
            for (const auto& pb : lat.ideals)
                for (const auto& pb2 : lat.ideals)
                    if (pb2.contains(pb))
                        CHECK(radical({r, pb2}).bits.contains(radical({r, pb}).bits));
        }
    }
}

TEST_CASE("generated ideal matches the naive closure oracle") {
    for (uint32_t n : {5u, 6u, 8u, 9u}) {
        Ring r = build_ra({n, {0, 1}});
        for (uint32_t x = 0; x < n; ++x) {
            oracle::Set want = oracle::generated_ideal(r, {x});
            CHECK(oracle::to_oracle(generated_ideal(r, IndexSet::single(n, x)).bits) == want);
        }
    }
}
