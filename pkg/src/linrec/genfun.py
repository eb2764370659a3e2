"""Rational generating functions of recurrence sequences.

A one-axis sequence of order ``d`` with rule coefficients ``(a_1, ..., a_d)``
has the rational series ``N(t) / q(t)`` with ``q(t) = 1 - a_1 t - ... -
a_d t^d`` and ``N(t) = sum_i Q_i(t) x[i]`` where ``Q_i(t) = t^i (1 - a_1 t
- ... - a_{d-i-1} t^{d-i-1})``.  A ``p``-axis sequence multiplies one such
numerator factor per axis against each initial value and divides by the
product of the per-axis ``q_i``.

``expand`` recovers series coefficients exactly without any division: since
every ``q_i`` has constant term 1, the coefficient hypercube satisfies
``c[n] = p[n] + sum_j a_j c[n - j]`` along each axis in turn.

Variables are named ``t`` for one axis, ``t, s`` for two, and ``t1..tp``
beyond that.
"""

from __future__ import annotations

from .errors import RingMismatchError
from .multiseq import MultiSequence, box_indices, from_sequence
from .recurrence import Recurrence, Sequence
from .rings import PolynomialRing, Ring, RingElement


def series_variables(p: int) -> tuple[str, ...]:
    """Canonical variable names for ``p`` axes."""
    if p == 1:
        return ("t",)
    if p == 2:
        return ("t", "s")
    return tuple(f"t{i}" for i in range(1, p + 1))


def q_poly(rec: Recurrence, variable: str = "t") -> RingElement:
    """Denominator ``1 - a_1 t - ... - a_d t^d`` as a univariate polynomial."""
    ring = PolynomialRing(rec.ring, (variable,))
    payload = {(0,): rec.ring.payload_one()}
    for j, a in enumerate(rec.coeffs, start=1):
        neg = rec.ring.neg(a.value)
        if neg != rec.ring.payload_zero():
            payload[(j,)] = neg
    return ring(payload)

def numerator_basis_polys(rec: Recurrence, variable: str = "t") -> list[RingElement]:
    """The ``d`` numerator building blocks ``Q_0, ..., Q_{d-1}``, where
    ``Q_i = t^i (1 - a_1 t - ... - a_{d-i-1} t^{d-i-1})``."""
    ring = PolynomialRing(rec.ring, (variable,))
    zero = rec.ring.payload_zero()
    out = []
    for i in range(rec.order):
        payload = {(i,): rec.ring.payload_one()}
        for j in range(1, rec.order - i):
            neg = rec.ring.neg(rec.coeffs[j - 1].value)
            if neg != zero:
                payload[(i + j,)] = neg
        out.append(ring(payload))
    return out


def _embed(poly: RingElement, target: PolynomialRing, axis: int) -> RingElement:
    """Re-home a univariate polynomial onto one axis of a larger ring."""
    payload = {}
    for exps, c in poly.value.items():
        vec = [0] * target.nvars
        vec[axis] = exps[0]
        payload[tuple(vec)] = c
    return target(payload)


class TruncatedSeries:
    """Exact series coefficients up to an inclusive bound per variable."""

    def __init__(self, ring: Ring, variables, orders, coeffs):
        self.ring = ring
        self.variables = tuple(variables)
        self.orders = tuple(int(o) for o in orders)
        if len(self.orders) != len(self.variables):
            raise ValueError("one order bound per variable required")
        if any(o < 0 for o in self.orders):
            raise ValueError(f"negative order bounds {self.orders}")
        self.shape = tuple(o + 1 for o in self.orders)
        size = 1
        for d in self.shape:
            size *= d
        coeffs = tuple(ring(c) for c in coeffs)
        if len(coeffs) != size:
            raise ValueError(f"expected {size} coefficients, got {len(coeffs)}")
        self.coeffs = coeffs

    @classmethod
    def from_polynomial(cls, poly: RingElement, orders) -> TruncatedSeries:
        """Truncate a polynomial to a coefficient hypercube."""
        ring = poly.ring
        if not isinstance(ring, PolynomialRing):
            raise RingMismatchError("expected a polynomial element")
        orders = tuple(int(o) for o in orders)
        shape = tuple(o + 1 for o in orders)
        size = 1
        for d in shape:
            size *= d
        flat = [ring.base.payload_zero()] * size
        for exps, c in poly.value.items():
            if all(e <= o for e, o in zip(exps, orders)):
                flat[_flat_pos(shape, exps)] = c
        return cls(
            ring.base,
            ring.variables,
            orders,
            [RingElement(ring.base, c) for c in flat],
        )

    def coefficient(self, index) -> RingElement:
        index = tuple(int(n) for n in index)
        if len(index) != len(self.shape):
            raise IndexError(f"expected {len(self.shape)} indices")
        if any(not 0 <= n < d for n, d in zip(index, self.shape)):
            raise IndexError(f"index {index} beyond truncation {self.orders}")
        return self.coeffs[_flat_pos(self.shape, index)]

    def mul_poly(self, poly: RingElement) -> TruncatedSeries:
        """Truncated product with a polynomial from the matching ring."""
        if (
            not isinstance(poly.ring, PolynomialRing)
            or poly.ring.base != self.ring
            or poly.ring.variables != self.variables
        ):
            raise RingMismatchError("polynomial does not match series variables")
        flat = [self.ring.zero] * len(self.coeffs)
        for exps, c in poly.value.items():
            ce = RingElement(self.ring, c)
            for idx in box_indices(self.shape):
                target = tuple(n + e for n, e in zip(idx, exps))
                if all(t <= o for t, o in zip(target, self.orders)):
                    pos = _flat_pos(self.shape, target)
                    flat[pos] = flat[pos] + ce * self.coefficient(idx)
        return TruncatedSeries(self.ring, self.variables, self.orders, flat)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.variables == other.variables
            and self.orders == other.orders
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        return (
            f"TruncatedSeries({self.ring.describe()}, {self.variables}, "
            f"orders={self.orders})"
        )


def _flat_pos(shape, index) -> int:
    pos = 0
    stride = 1
    for n, d in zip(index, shape):
        pos += n * stride
        stride *= d
    return pos


class RationalGF:
    """A numerator polynomial over per-axis denominators with constant term 1.

    ``factors``, when given, stores each axis denominator as a product of
    polynomial factors; it is used for display and must multiply back to
    the stored denominator.
    """

    def __init__(self, numerator: RingElement, denominators, factors=None):
        poly_ring = numerator.ring
        if not isinstance(poly_ring, PolynomialRing):
            raise RingMismatchError("numerator must be a polynomial element")
        self.poly_ring = poly_ring
        self.ring = poly_ring.base
        self.variables = poly_ring.variables
        self.numerator = numerator
        denominators = tuple(denominators)
        if len(denominators) != len(self.variables):
            raise ValueError("one denominator per variable required")
        one = self.ring.payload_one()
        const = (0,) * poly_ring.nvars
        for axis, q in enumerate(denominators):
            if q.ring != poly_ring:
                raise RingMismatchError("denominators must share the numerator ring")
            for exps, _ in q.value.items():
                if any(e and i != axis for i, e in enumerate(exps)):
                    raise ValueError(
                        f"denominator for axis {axis + 1} uses other variables"
                    )
            if q.value.get(const) != one:
                raise ValueError(
                    f"denominator for axis {axis + 1} must have constant term 1"
                )
        self.denominators = denominators
        if factors is not None:
            factors = tuple(tuple(fs) for fs in factors)
            if len(factors) != len(denominators):
                raise ValueError("one factor list per axis required")
            for axis, fs in enumerate(factors):
                prod = poly_ring.one
                for f in fs:
                    prod = prod * f
                if prod != denominators[axis]:
                    raise ValueError(
                        f"factors for axis {axis + 1} do not multiply to the denominator"
                    )
        self.factors = factors

    def denominator(self) -> RingElement:
        """The full denominator, all axes multiplied out."""
        total = self.poly_ring.one
        for q in self.denominators:
            total = total * q
        return total

    def axis_coeffs(self, axis: int) -> list[RingElement]:
        """Rule coefficients recovered from one axis denominator."""
        q = self.denominators[axis]
        degree = max((exps[axis] for exps in q.value), default=0)
        out = []
        for j in range(1, degree + 1):
            vec = [0] * self.poly_ring.nvars
            vec[axis] = j
            c = q.value.get(tuple(vec))
            if c is None:
                out.append(self.ring.zero)
            else:
                out.append(-RingElement(self.ring, c))
        return out

    def expand(self, orders) -> TruncatedSeries:
        """Series coefficients up to the inclusive per-variable bounds."""
        orders = tuple(int(o) for o in orders)
        if len(orders) != len(self.variables):
            raise ValueError("one order bound per variable required")
        seed = TruncatedSeries.from_polynomial(self.numerator, orders)
        shape = seed.shape
        flat = list(seed.coeffs)
        for axis in range(len(self.variables)):
            coeffs = self.axis_coeffs(axis)
            if not coeffs:
                continue
            for idx in box_indices(shape):
                n = idx[axis]
                pos = _flat_pos(shape, idx)
                total = flat[pos]
                for j, a in enumerate(coeffs, start=1):
                    if n - j < 0:
                        break
                    dep = idx[:axis] + (n - j,) + idx[axis + 1 :]
                    total = total + a * flat[_flat_pos(shape, dep)]
                flat[pos] = total
        return TruncatedSeries(self.ring, self.variables, orders, flat)

    def _format_denominator(self) -> str:
        parts = []
        for axis, q in enumerate(self.denominators):
            if self.factors is not None:
                group = self.factors[axis]
            else:
                group = (q,)
            for f in group:
                if f.is_one():
                    continue
                parts.append(f"({f})")
        return "".join(parts) or "1"

    def __str__(self):
        num = str(self.numerator)
        if " " in num:
            num = f"({num})"
        den = self._format_denominator()
        if den == "1":
            return num
        return f"{num} / {den}"

    def __repr__(self):
        return f"RationalGF({self})"

    def __eq__(self, other):
        if not isinstance(other, RationalGF):
            return NotImplemented
        return (
            self.numerator == other.numerator
            and self.denominators == other.denominators
        )


def _coerce_multi(seq) -> MultiSequence:
    if isinstance(seq, Sequence):
        return from_sequence(seq)
    if isinstance(seq, MultiSequence):
        return seq
    raise RingMismatchError(f"expected a sequence, got {seq!r}")


def gf(seq, coordinate: int | None = None) -> RationalGF:
    """The rational generating function of a sequence.

    Scalar sequences need no ``coordinate``; for rank ``m`` values pass the
    coordinate (0-based) whose series is wanted.
    """
    mseq = _coerce_multi(seq)
    if coordinate is None:
        if mseq.rank != 1:
            raise RingMismatchError(
                f"rank {mseq.rank} sequence: pass coordinate=0..{mseq.rank - 1}"
            )
        coordinate = 0
    elif not 0 <= coordinate < mseq.rank:
        raise IndexError(f"coordinate {coordinate} out of range")
    ring = mseq.ring
    p = mseq.ndim
    names = series_variables(p)
    poly_ring = PolynomialRing(ring, names)
    axis_q = []
    axis_numer = []
    for axis, rec in enumerate(mseq.spec.axes):
        axis_q.append(_embed(q_poly(rec, names[axis]), poly_ring, axis))
        axis_numer.append(
            [
                _embed(Q, poly_ring, axis)
                for Q in numerator_basis_polys(rec, names[axis])
            ]
        )
    numerator = poly_ring.zero
    for idx in box_indices(mseq.spec.shape):
        weight = axis_numer[0][idx[0]]
        for axis in range(1, p):
            weight = weight * axis_numer[axis][idx[axis]]
        value = mseq.block.at(idx)[coordinate]
        numerator = numerator + weight * poly_ring.constant(value)
    return RationalGF(numerator, axis_q)


def expand(rational: RationalGF, orders) -> TruncatedSeries:
    """Module-level spelling of :meth:`RationalGF.expand`."""
    return rational.expand(orders)


def verify_gf(seq, orders) -> bool:
    """Whether the expanded generating functions reproduce every term of the
    sequence inside the bounds, exactly, one series per coordinate."""
    mseq = _coerce_multi(seq)
    for coord in range(mseq.rank):
        series = gf(mseq, coord).expand(orders)
        for idx in box_indices(series.shape):
            if series.coefficient(idx) != mseq.term(idx).coords[coord]:
                return False
    return True
