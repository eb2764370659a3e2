"""Shared strategies and fixtures for the test suite."""

from fractions import Fraction

import pytest
from hypothesis import strategies as st

from linrec.rings import (
    QQ,
    ZZ,
    IntegerModRing,
    PolynomialRing,
    ProductRing,
    Ring,
)


def elements(ring: Ring, size: int = 30):
    """A hypothesis strategy drawing elements of the given ring."""
    if ring == ZZ:
        return st.integers(-size, size).map(ring)
    if ring == QQ:
        return st.fractions(
            min_value=-size, max_value=size, max_denominator=12
        ).map(ring)
    if isinstance(ring, IntegerModRing):
        return st.integers(0, ring.modulus - 1).map(ring)
    if isinstance(ring, ProductRing):
        return st.tuples(
            elements(ring.left, size), elements(ring.right, size)
        ).map(lambda pair: ring((pair[0].value, pair[1].value)))
    if isinstance(ring, PolynomialRing):
        exps = st.tuples(*([st.integers(0, 3)] * ring.nvars))
        coeff = elements(ring.base, size).map(lambda e: e.value)
        return st.dictionaries(exps, coeff, max_size=4).map(ring)
    raise TypeError(f"no strategy for {ring!r}")


AXIOM_RINGS = [
    ZZ,
    QQ,
    IntegerModRing(7),
    IntegerModRing(12),
    ProductRing(ZZ, IntegerModRing(5)),
    PolynomialRing(ZZ, ("t",)),
    PolynomialRing(QQ, ("t", "s")),
]


@pytest.fixture(params=AXIOM_RINGS, ids=lambda r: r.describe())
def any_ring(request):
    return request.param
