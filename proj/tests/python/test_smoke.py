#!/usr/bin/env python3
"""Smoke tests for the python bindings (run with PYTHONPATH at the built package)."""

import hyperring as hr


def test_ra_and_set_algebra():
    r = hr.build_ra(16, [0, 1])
    assert r.size == 16
    assert r.hmul(2, 2) == [0, 4]
    assert hr.set_product(r, [2], [2]) == [0, 4]
    assert hr.tuple_product(r, [2, 2, 2]) == [0, 8]
    assert hr.element_power(r, 2, 3) == [0, 8]
    assert not r.strongly_distributive


def test_ideals():
    z6 = hr.build_ra(6, [0, 1])
    assert hr.hyperideals(z6) == [[0], [0, 3], [0, 2, 4], [0, 1, 2, 3, 4, 5]]
    assert hr.generated_ideal(z6, [2]) == [0, 2, 4]
    assert hr.minimal_primes(z6, [0]) == [[0, 3], [0, 2, 4]]
    z8 = hr.build_ra(8, [0, 1])
    assert hr.ideal_power(z8, hr.generated_ideal(z8, [2]), 2) == [0, 4]
    assert hr.radical(z8, [0, 4]) == [0, 2, 4, 6]
    assert hr.is_hyperfield(hr.build_ra(5, [1]))
    assert not hr.is_hyperfield(z6)


def test_classification():
    z16 = hr.build_ra(16, [0, 1])
    P = hr.generated_ideal(z16, [4])
    I = hr.generated_ideal(z16, [2])
    prime = hr.is_prime(z16, P)
    assert prime["verdict"] is False and prime["witness"] == [2, 2]
    assert hr.is_i_prime(z16, P, I)["verdict"] is True

    z16c = hr.build_ra(16, [1])
    rep = hr.is_n_absorbing(z16c, [0, 8], 2)
    assert rep["verdict"] is False and rep["witness"] == [2, 2, 2]
    assert hr.is_n_absorbing(z16c, [0, 8], 3)["verdict"] is True


def test_product_quotient_localize():
    z2 = hr.build_ra(2, [1])
    z3 = hr.build_ra(3, [1])
    pr = hr.product([z2, z3])
    assert pr.ring.size == 6
    assert pr.tuple_of(pr.index_of([1, 2])) == [1, 2]

    z8 = hr.build_ra(8, [0, 1])
    q, proj = hr.quotient(z8, [0, 4])
    assert q.size == 4
    assert proj[4] == proj[0]

    loc = hr.localize(hr.build_ra(6, [1]), [1, 5])
    assert loc["status"] == "Ok" and loc["classes"] == 6

    bad = hr.localize(hr.build_ra(6, [1]), [2, 5])
    assert bad["status"] == "NotMultiplicativelyClosed"


def test_suites():
    t1 = hr.run_suite("T1", family="ra", nmax=5)
    assert t1["passed"] and t1["instances"] > 0
    t4 = hr.run_suite("T4", family="ra", nmax=6)
    assert not t4["passed"]
    assert any("RA(n=6,A={0,2})" in f["instance"] for f in t4["failures"])


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for t in tests:
        t()
        print(f"[PASS] {t.__name__}")
    print(f"{len(tests)} python smoke tests passed")


if __name__ == "__main__":
    main()
