"""Finite multiplicative hyperring engine.

Carriers are explicit tables: addition is an abelian group operation and
multiplication maps each pair of elements to a nonempty subset. The module
exposes the R_A / product / quotient / localization constructions, the
hyperideal calculus, the exhaustive I-prime / n-absorbing classifiers and
the theorem property suites of the C++ core.
"""

from hyperring._core import (  # noqa: F401
    HyperError,
    ProductRing,
    Ring,
    build_ra,
    colon,
    element_power,
    generated_ideal,
    hyperideals,
    ideal_intersect,
    ideal_power,
    ideal_product,
    ideal_sum,
    is_hyperfield,
    is_hyperideal,
    is_i_primary,
    is_i_prime,
    is_n_absorbing,
    is_n_absorbing_i_prime,
    is_prime,
    is_primary,
    is_two_absorbing_primary,
    is_weakly_prime,
    localize,
    minimal_primes,
    prime_hyperideals,
    product,
    quotient,
    radical,
    run_suite,
    set_product,
    set_sum,
    tuple_product,
)

__version__ = "0.1.0"
