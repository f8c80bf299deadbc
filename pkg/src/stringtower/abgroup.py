"""Finitely generated abelian groups over the integers.

Every group is stored in invariant-factor form ``Z^r x Z/d1 x ... x Z/dk``
with ``d1 | d2 | ... | dk`` and each ``di >= 2``, so two groups are isomorphic
exactly when they compare equal.

>>> tensor(FgAbGroup.of(4), FgAbGroup.of(6))
FgAbGroup(rank=0, invariant_factors=(2,))
>>> print(direct_sum(FgAbGroup.of(2), FgAbGroup.of(3)))
Z/6
>>> print(cokernel(IntegerMatrix.from_rows([[2, 4], [6, 8]])))
Z/2 x Z/4
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntegerMatrix:
    """Dense integer matrix; ``entries`` is row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntegerMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged matrix rows")
        return cls(len(rows), cols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> IntegerMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, diag: Sequence[int], rows: int | None = None, cols: int | None = None) -> IntegerMatrix:
        rows = len(diag) if rows is None else rows
        cols = len(diag) if cols is None else cols
        data = [[0] * cols for _ in range(rows)]
        for i, d in enumerate(diag):
            data[i][i] = d
        return cls.from_rows(data, cols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def __matmul__(self, other: IntegerMatrix) -> IntegerMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        a, b = self.to_rows(), other.to_rows()
        out = [
            [sum(a[i][k] * b[k][j] for k in range(self.cols)) for j in range(other.cols)]
            for i in range(self.rows)
        ]
        return IntegerMatrix.from_rows(out, other.cols)

    def diagonal_entries(self) -> list[int]:
        return [self[i, i] for i in range(min(self.rows, self.cols))]

    def determinant(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        a = self.to_rows()
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1] if n else 1


def smith_normal_form(m: IntegerMatrix) -> tuple[IntegerMatrix, IntegerMatrix, IntegerMatrix]:
    """Return ``(D, U, V)`` with ``U @ m @ V == D``.

    ``D`` is diagonal with nonnegative entries forming a divisibility chain
    (zeros last) and ``U``, ``V`` are unimodular.
    """
    nr, nc = m.rows, m.cols
    a = m.to_rows()
    u = IntegerMatrix.identity(nr).to_rows()
    v = IntegerMatrix.identity(nc).to_rows()

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):
        # row[dst] += k * row[src]
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, k):
        for row in a:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    for t in range(min(nr, nc)):
        while True:
            # Always pivot on the smallest entry left; keeping whichever
            # remainder turned up first lets the entries grow without bound.
            nonzero = [(abs(a[i][j]), i, j) for i in range(t, nr) for j in range(t, nc) if a[i][j]]
            if not nonzero:
                break
            _, i, j = min(nonzero)
            swap_rows(t, i)
            swap_cols(t, j)
            p = a[t][t]
            for i in range(t + 1, nr):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
            for j in range(t + 1, nc):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
            if any(a[i][t] for i in range(t + 1, nr)) or any(a[t][j] for j in range(t + 1, nc)):
                continue
            # pivot must divide the remaining block
            bad = next(
                (i for i in range(t + 1, nr) for j in range(t + 1, nc) if a[i][j] % a[t][t]),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    return (
        IntegerMatrix.from_rows(a, nc),
        IntegerMatrix.from_rows(u, nr),
        IntegerMatrix.from_rows(v, nc),
    )


@dataclass(frozen=True)
class FgAbGroup:
    """``Z^rank`` times the cyclic groups ``Z/d`` for ``d`` in ``invariant_factors``."""

    rank: int = 0
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "invariant_factors", tuple(self.invariant_factors))
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        fs = self.invariant_factors
        if any(d < 2 for d in fs):
            raise ValueError(f"invariant factors must be >= 2, got {fs}")
        if any(b % a for a, b in zip(fs, fs[1:])):
            raise ValueError(f"invariant factors must form a divisibility chain, got {fs}")

    @classmethod
    def of(cls, *orders: int) -> FgAbGroup:
        """Normalize a product of cyclic groups; order 0 means ``Z``.

        >>> print(FgAbGroup.of(0, 6, 4, 1))
        Z x Z/2 x Z/12
        """
        return cls.from_cyclic(orders)

    @classmethod
    def from_cyclic(cls, orders: Iterable[int]) -> FgAbGroup:
        orders = [abs(int(o)) for o in orders]
        rank = orders.count(0)
        finite = [o for o in orders if o > 1]
        if len(finite) <= 1:
            return cls(rank, tuple(finite))
        d, _, _ = smith_normal_form(IntegerMatrix.diagonal(finite))
        return cls(rank, tuple(x for x in d.diagonal_entries() if x > 1))

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.invariant_factors

    @property
    def order(self) -> int | None:
        """Cardinality, or ``None`` for an infinite group."""
        if self.rank:
            return None
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def cyclic_orders(self) -> list[int]:
        return [0] * self.rank + list(self.invariant_factors)

    def to_string(self, unicode: bool = False) -> str:
        if self.is_trivial:
            return "0"
        z, sep = ("ℤ", " × ") if unicode else ("Z", " x ")
        parts = []
        if self.rank == 1:
            parts.append(z)
        elif self.rank > 1:
            parts.append(f"{z}^{self.rank}")
        parts.extend(f"{z}/{d}" for d in self.invariant_factors)
        return sep.join(parts)

    def __str__(self) -> str:
        return self.to_string()

    def zero(self) -> GroupElement:
        return GroupElement(self, (0,) * self.rank, (0,) * len(self.invariant_factors))

    def element(self, coords: Sequence[int]) -> GroupElement:
        """Build an element from a flat coordinate list (free first, then torsion)."""
        coords = list(coords)
        n = self.rank + len(self.invariant_factors)
        if len(coords) != n:
            raise ValueError(f"{self} needs {n} coordinates, got {len(coords)}")
        return GroupElement(self, tuple(coords[:self.rank]), tuple(coords[self.rank:]))


TRIVIAL = FgAbGroup()
Z = FgAbGroup(1)
Z2 = FgAbGroup(0, (2,))


def cokernel(m: IntegerMatrix) -> FgAbGroup:
    """``Z^rows / im(m)`` for ``m`` viewed as a map ``Z^cols -> Z^rows``."""
    d, _, _ = smith_normal_form(m)
    diag = d.diagonal_entries() + [0] * (m.rows - min(m.rows, m.cols))
    return FgAbGroup.from_cyclic(diag)


def direct_sum(*groups: FgAbGroup) -> FgAbGroup:
    return FgAbGroup.from_cyclic(o for g in groups for o in g.cyclic_orders())


def _bilinear(a: FgAbGroup, b: FgAbGroup, cyclic) -> FgAbGroup:
    return FgAbGroup.from_cyclic(cyclic(m, n) for m in a.cyclic_orders() for n in b.cyclic_orders())


# Cyclic building blocks; 0 stands for Z and 1 for the trivial group.
def _tensor_cyclic(m: int, n: int) -> int:
    return gcd(m, n)


def _hom_cyclic(m: int, n: int) -> int:
    if m == 0:
        return n
    return 1 if n == 0 else gcd(m, n)


def _ext_cyclic(m: int, n: int) -> int:
    return 1 if m == 0 else gcd(m, n)


def _tor_cyclic(m: int, n: int) -> int:
    return 1 if m == 0 or n == 0 else gcd(m, n)


def tensor(a: FgAbGroup, b: FgAbGroup) -> FgAbGroup:
    return _bilinear(a, b, _tensor_cyclic)


def hom(a: FgAbGroup, b: FgAbGroup) -> FgAbGroup:
    return _bilinear(a, b, _hom_cyclic)


def ext(a: FgAbGroup, b: FgAbGroup) -> FgAbGroup:
    return _bilinear(a, b, _ext_cyclic)


def tor(a: FgAbGroup, b: FgAbGroup) -> FgAbGroup:
    return _bilinear(a, b, _tor_cyclic)


@dataclass(frozen=True)
class GroupElement:
    parent: FgAbGroup
    free_coords: tuple[int, ...]
    torsion_coords: tuple[int, ...]

    def __post_init__(self):
        g = self.parent
        if len(self.free_coords) != g.rank or len(self.torsion_coords) != len(g.invariant_factors):
            raise ValueError(f"coordinate shape does not match {g}")
        object.__setattr__(self, "free_coords", tuple(int(x) for x in self.free_coords))
        object.__setattr__(
            self,
            "torsion_coords",
            tuple(int(x) % d for x, d in zip(self.torsion_coords, g.invariant_factors)),
        )

    @property
    def coords(self) -> tuple[int, ...]:
        return self.free_coords + self.torsion_coords

    def _check(self, other: GroupElement) -> None:
        if not isinstance(other, GroupElement) or other.parent != self.parent:
            raise ValueError("incompatible groups")

    def __add__(self, other: GroupElement) -> GroupElement:
        self._check(other)
        return GroupElement(
            self.parent,
            tuple(x + y for x, y in zip(self.free_coords, other.free_coords)),
            tuple(x + y for x, y in zip(self.torsion_coords, other.torsion_coords)),
        )

    def __neg__(self) -> GroupElement:
        return GroupElement(
            self.parent,
            tuple(-x for x in self.free_coords),
            tuple(-x for x in self.torsion_coords),
        )

    def __sub__(self, other: GroupElement) -> GroupElement:
        self._check(other)
        return self + (-other)

    @property
    def is_zero(self) -> bool:
        return not any(self.free_coords) and not any(self.torsion_coords)

    def __str__(self) -> str:
        return "(" + ", ".join(str(x) for x in self.coords) + ")"


def element_add(x: GroupElement, y: GroupElement) -> GroupElement:
    return x + y


def element_neg(x: GroupElement) -> GroupElement:
    return -x


def element_is_zero(x: GroupElement) -> bool:
    return x.is_zero


_FACTOR = re.compile(r"^(?:Z|ℤ)(?:\^(\d+)|/(\d+))?$")


def parse_group(text: str) -> FgAbGroup:
    """Parse ``Z^2 x Z/2 x Z/4``-style group expressions.

    ``0``, ``Z^0`` and ``Z/1`` all denote the trivial group.

    >>> parse_group("Z/2 x Z x Z/3")
    FgAbGroup(rank=1, invariant_factors=(6,))
    """
    s = text.strip()
    if s in ("0", "1", ""):
        if not s:
            raise ValueError("empty group expression")
        return TRIVIAL
    orders: list[int] = []
    for piece in re.split(r"\s*[x×]\s*", s):
        match = _FACTOR.match(piece.strip())
        if not match:
            raise ValueError(f"bad group factor {piece!r} in {text!r}")
        power, modulus = match.groups()
        if power is not None:
            orders.extend([0] * int(power))
        elif modulus is not None:
            if int(modulus) == 0:
                raise ValueError("Z/0 is not allowed; write Z")
            orders.append(int(modulus))
        else:
            orders.append(0)
    return FgAbGroup.from_cyclic(orders)


def parse_element(text: str, group: FgAbGroup) -> GroupElement:
    """Parse ``(3, 1)`` as an element of ``group`` (free coordinates first)."""
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"element must be parenthesized: {text!r}")
    body = s[1:-1].strip()
    items = [t.strip() for t in body.split(",")] if body else []
    n = group.rank + len(group.invariant_factors)
    if len(items) != n or any(not t for t in items):
        raise ValueError(f"shape mismatch: {group} needs {n} coordinates, got {text!r}")
    try:
        coords = [int(t) for t in items]
    except ValueError:
        raise ValueError(f"non-integer coordinate in {text!r}") from None
    return group.element(coords)
