"""One-dimensional linear recurrences and their solution sequences.

A :class:`Recurrence` of order ``d`` over a ring fixes coefficients
``(a_1, ..., a_d)`` for the rule ``x[n+d] = a_1*x[n+d-1] + ... + a_d*x[n]``.
Its canonical solutions ``B_i`` (``0 <= i < d``) are the scalar sequences
with initial segment ``B_i[j] = delta(i, j)``; every solution with values in
a free module is the combination ``x[n] = sum_i B_i[n] * x[i]``, which is
what :meth:`Sequence.term` evaluates.

Two evaluation strategies are provided: memoized iteration (cheap for dense
ranges of small indices) and binary powering of the companion matrix
(logarithmic in ``n``, used by ``term_fast``).  Negative indices work when
the trailing coefficient ``a_d`` is a unit; otherwise backward steps raise
:class:`~linrec.errors.NotInvertibleError`.
"""

from __future__ import annotations

from .errors import NotInvertibleError, RingMismatchError
from .rings import ModuleElement, Ring, RingElement, as_module_element

# forward basis rows memoized per recurrence, bounded so that long scans do
# not pin millions of wrapped values; beyond the cap a rolling window is used
_CACHE_LIMIT = 4096


def _identity_matrix(ring: Ring, d: int):
    one, zero = ring.one, ring.zero
    return tuple(
        tuple(one if i == j else zero for j in range(d)) for i in range(d)
    )


def _mat_mul(a, b):
    k = len(b)
    cols = range(len(b[0]))
    out = []
    for row in a:
        acc = []
        for j in cols:
            total = row[0] * b[0][j]
            for l in range(1, k):
                total = total + row[l] * b[l][j]
            acc.append(total)
        out.append(tuple(acc))
    return tuple(out)


def _mat_pow(ring: Ring, matrix, n: int):
    result = _identity_matrix(ring, len(matrix))
    base = matrix
    while n:
        if n & 1:
            result = _mat_mul(result, base)
        base = _mat_mul(base, base)
        n >>= 1
    return result


class Recurrence:
    """A fixed-order linear recurrence rule over a commutative ring."""

    def __init__(self, ring: Ring, coeffs):
        coeffs = tuple(ring(c) for c in coeffs)
        if not coeffs:
            raise ValueError("a recurrence needs order >= 1")
        self.ring = ring
        self.coeffs = coeffs
        self.order = len(coeffs)
        # rows[n] = (B_0[n], ..., B_{d-1}[n]); seeded with the defining segment
        d = self.order
        self._rows = [
            tuple(ring.one if i == n else ring.zero for i in range(d))
            for n in range(d)
        ]
        self._neg_rows: list[tuple[RingElement, ...]] = []
        self._inv_trailing: RingElement | None = None

    def _forward_step(self, window):
        """Next basis row from the previous ``d`` rows (oldest first)."""
        d = self.order
        total = None
        for j, a in enumerate(self.coeffs, start=1):
            row = window[d - j]
            part = tuple(a * v for v in row)
            total = part if total is None else tuple(x + y for x, y in zip(total, part))
        return total

    def _backward_step(self, window):
        """Basis row one below ``window`` (rows n+1 .. n+d, oldest first)."""
        inv = self._trailing_inverse()
        d = self.order
        total = list(window[d - 1])
        for j in range(1, d):
            a = self.coeffs[j - 1]
            row = window[d - 1 - j]
            for i in range(d):
                total[i] = total[i] - a * row[i]
        return tuple(inv * v for v in total)

    def _trailing_inverse(self) -> RingElement:
        if self._inv_trailing is None:
            inv = self.coeffs[-1].try_invert()
            if inv is None:
                raise NotInvertibleError(
                    f"trailing coefficient {self.coeffs[-1]} is not a unit in "
                    f"{self.ring.describe()}; cannot step backward"
                )
            self._inv_trailing = inv
        return self._inv_trailing

    def basis_row(self, n: int) -> tuple[RingElement, ...]:
        """``(B_0[n], ..., B_{d-1}[n])`` by memoized iteration."""
        d = self.order
        if n >= 0:
            rows = self._rows
            while len(rows) <= min(n, _CACHE_LIMIT - 1):
                rows.append(self._forward_step(rows[-d:]))
            if n < len(rows):
                return rows[n]
            window = list(rows[-d:])
            for _ in range(n - len(rows) + 1):
                window.append(self._forward_step(window))
                del window[0]
            return window[-1]
        neg = self._neg_rows
        while len(neg) <= min(-n - 1, _CACHE_LIMIT - 1):
            m = -len(neg) - 1  # index of the row about to be produced
            window = [self._row_at(m + i) for i in range(1, d + 1)]
            neg.append(self._backward_step(window))
        if -n - 1 < len(neg):
            return neg[-n - 1]
        lowest = -len(neg)  # smallest index currently cached
        window = [self._row_at(lowest + i) for i in range(d)]
        for _ in range(lowest - n):
            window.insert(0, self._backward_step(window))
            del window[-1]
        return window[0]

    def _row_at(self, n: int) -> tuple[RingElement, ...]:
        """Row lookup that stays inside (or grows) the forward cache."""
        if n >= 0:
            rows = self._rows
            while len(rows) <= n:
                rows.append(self._forward_step(rows[-self.order :]))
            return rows[n]
        return self._neg_rows[-n - 1]

    def basis_value(self, i: int, n: int) -> RingElement:
        """``B_i[n]``, the i-th canonical solution at index ``n``."""
        if not 0 <= i < self.order:
            raise IndexError(f"basis index {i} out of range for order {self.order}")
        return self.basis_row(n)[i]

    def companion_matrix(self):
        """The step matrix on state vectors ``(x[n+d-1], ..., x[n])``."""
        d = self.order
        zero, one = self.ring.zero, self.ring.one
        top = tuple(self.coeffs)
        body = tuple(
            tuple(one if j == i else zero for j in range(d)) for i in range(d - 1)
        )
        return (top,) + body

    def inverse_companion_matrix(self):
        """Inverse of the companion matrix; needs a unit trailing coefficient."""
        inv = self._trailing_inverse()
        d = self.order
        zero, one = self.ring.zero, self.ring.one
        body = tuple(
            tuple(one if j == i + 1 else zero for j in range(d)) for i in range(d - 1)
        )
        last = [inv]
        for j in range(1, d):
            last.append(-(inv * self.coeffs[j - 1]))
        return body + (tuple(last),)

    def basis_row_fast(self, n: int) -> tuple[RingElement, ...]:
        """``basis_row(n)`` by binary powering of the companion matrix."""
        d = self.order
        if n >= 0:
            power = _mat_pow(self.ring, self.companion_matrix(), n)
        else:
            power = _mat_pow(self.ring, self.inverse_companion_matrix(), -n)
        last = power[d - 1]
        return tuple(last[d - 1 - i] for i in range(d))

    def __eq__(self, other):
        if not isinstance(other, Recurrence):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, tuple(self.ring.sort_key(c.value) for c in self.coeffs)))

    def __repr__(self):
        return (
            f"Recurrence({self.ring.describe()}, "
            f"[{', '.join(str(c) for c in self.coeffs)}])"
        )


class Sequence:
    """A recurrence solution with values in a free module of finite rank."""

    def __init__(self, recurrence: Recurrence, initial):
        initial = list(initial)
        if len(initial) != recurrence.order:
            raise ValueError(
                f"expected {recurrence.order} initial values, got {len(initial)}"
            )
        ring = recurrence.ring
        first = as_module_element(ring, initial[0])
        rank = first.rank
        self.recurrence = recurrence
        self.initial = (first,) + tuple(
            as_module_element(ring, v, rank) for v in initial[1:]
        )

    @property
    def ring(self) -> Ring:
        return self.recurrence.ring

    @property
    def rank(self) -> int:
        return self.initial[0].rank

    def _combine(self, row) -> ModuleElement:
        total = self.initial[0].scale(row[0])
        for coeff, value in zip(row[1:], self.initial[1:]):
            total = total + value.scale(coeff)
        return total

    def term(self, n: int) -> ModuleElement:
        """Value at index ``n`` (memoized iteration; negative ``n`` allowed
        when the trailing coefficient is a unit)."""
        return self._combine(self.recurrence.basis_row(n))

    def term_fast(self, n: int) -> ModuleElement:
        """Value at index ``n`` by companion-matrix powering."""
        return self._combine(self.recurrence.basis_row_fast(n))

    def iter_terms(self, start: int = 0):
        """Yield terms from ``start`` upward with constant memory."""
        d = self.recurrence.order
        coeffs = self.recurrence.coeffs
        window = [self.term(start + i) for i in range(d)]
        while True:
            yield window[0]
            total = None
            for j, a in enumerate(coeffs, start=1):
                part = window[d - j].scale(a)
                total = part if total is None else total + part
            window.append(total)
            del window[0]

    def terms(self, start: int, stop: int) -> list[ModuleElement]:
        """Terms at indices ``start <= n < stop``."""
        return [self.term(n) for n in range(start, stop)]

    def shift(self, offset: int) -> Sequence:
        """The sequence ``n -> x[n + offset]`` (same recurrence)."""
        d = self.recurrence.order
        return Sequence(self.recurrence, [self.term(offset + i) for i in range(d)])

    def extend_backward(self, steps: int) -> list[ModuleElement]:
        """Terms at ``-1, -2, ..., -steps`` (trailing coefficient must be a unit)."""
        return [self.term(-k) for k in range(1, steps + 1)]

    def decompose(self) -> tuple[ModuleElement, ...]:
        """Coordinates with respect to the canonical solutions: the initial
        segment, since ``x[n] = sum_i B_i[n] * x[i]``."""
        return self.initial

    def __eq__(self, other):
        if not isinstance(other, Sequence):
            return NotImplemented
        return self.recurrence == other.recurrence and self.initial == other.initial

    def __repr__(self):
        vals = ", ".join(str(v) for v in self.initial)
        return f"Sequence({self.recurrence!r}, [{vals}])"


def reconstruct(recurrence: Recurrence, coordinates) -> Sequence:
    """Rebuild a sequence from canonical-basis coordinates (inverse of
    :meth:`Sequence.decompose`)."""
    return Sequence(recurrence, coordinates)


def check_membership(recurrence: Recurrence, values, start_order: int | None = None) -> bool:
    """Whether consecutive ``values`` satisfy the recurrence at every
    applicable index.  Needs at least ``order + 1`` values so that the rule
    is exercised at least once."""
    ring = recurrence.ring
    vals = [as_module_element(ring, v) for v in values]
    for v in vals[1:]:
        if v.rank != vals[0].rank:
            raise RingMismatchError("values must share a rank")
    d = recurrence.order
    if len(vals) < d + 1:
        raise ValueError(f"need at least {d + 1} values to check, got {len(vals)}")
    for n in range(d, len(vals)):
        total = None
        for j, a in enumerate(recurrence.coeffs, start=1):
            part = vals[n - j].scale(a)
            total = part if total is None else total + part
        if total != vals[n]:
            return False
    return True
