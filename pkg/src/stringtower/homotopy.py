"""Homotopy groups of orthogonal, unitary and symplectic groups in low degrees.

Answers come from two fixed tables (O(n) for n <= 9, U(n) for n <= 6, degrees
up to 7) together with the rank-stabilization rule, the reduction of the
indefinite groups to their maximal compact subgroups, and the kill rules for
connected covers.  Whatever those do not determine comes back as ``Unknown``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .abgroup import TRIVIAL, FgAbGroup, Z, Z2, direct_sum

FAMILIES = ("O", "SO", "Spin", "String", "U", "SU", "Sp")

_0 = TRIVIAL
_Z2x2 = FgAbGroup.of(2, 2)

# rows are pi_0..pi_7, columns O(1)..O(9); None marks a blank cell above the
# stabilized (boxed) entry of that row.
_O_TABLE: tuple[tuple[FgAbGroup | None, ...], ...] = (
    (Z2, Z2, Z2, Z2, Z2, Z2, Z2, Z2, Z2),
    (_0, Z, Z2, None, None, None, None, None, None),
    (_0, _0, _0, _0, None, None, None, None, None),
    (_0, _0, Z, FgAbGroup(2), Z, None, None, None, None),
    (_0, _0, Z2, _Z2x2, Z2, _0, None, None, None),
    (_0, _0, Z2, _Z2x2, Z2, Z, _0, None, None),
    (_0, _0, FgAbGroup.of(12), FgAbGroup.of(12, 12), _0, _0, _0, _0, None),
    (_0, _0, Z2, _Z2x2, Z, Z, Z, FgAbGroup(2), Z),
)
# column holding the boxed (stable) entry for each degree
_O_BOXED = {0: 2, 1: 3, 2: 4, 3: 5, 4: 6, 5: 7, 6: 8, 7: 9}

# rows are pi_1..pi_7, columns U(1)..U(6); every cell is filled
_U_TABLE: tuple[tuple[FgAbGroup, ...], ...] = (
    (Z, Z, Z, Z, Z, Z),
    (_0, _0, _0, _0, _0, _0),
    (_0, Z, Z, Z, Z, Z),
    (_0, Z2, _0, _0, _0, _0),
    (_0, Z2, Z, Z, Z, Z),
    (_0, FgAbGroup.of(12), FgAbGroup.of(6), _0, _0, _0),
    (_0, Z2, _0, Z, Z, Z),
)

MAX_DEGREE = 7


@dataclass(frozen=True)
class Unknown:
    """Marker for a homotopy group the tables and rules do not determine."""

    reason: str

    def __str__(self) -> str:
        return f"UNKNOWN: {self.reason}"


HomotopyAnswer = FgAbGroup | Unknown


@dataclass(frozen=True)
class GroupDescriptor:
    """A member of a Lie group family, e.g. ``Spin(3,4)`` or ``O(7)``.

    ``q == 0`` denotes the definite group of rank ``p``.  The signature is kept
    in the order the user wrote it; ``signature`` gives the sorted pair used for
    table lookups.
    """

    family: str
    p: int
    q: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown group family {self.family!r}")
        if self.p < 0 or self.q < 0:
            raise ValueError("signature entries must be nonnegative")
        if self.p + self.q < 1:
            raise ValueError("empty signature")

    @property
    def definite(self) -> bool:
        return self.p == 0 or self.q == 0

    @property
    def signature(self) -> tuple[int, int]:
        if self.definite:
            return (self.p + self.q, 0)
        return (min(self.p, self.q), max(self.p, self.q))

    @property
    def factors(self) -> tuple[int, ...]:
        """Ranks of the maximal compact factors, in user order."""
        if self.definite:
            return (self.p + self.q,)
        return (self.p, self.q)

    def __str__(self) -> str:
        if self.q == 0:
            return f"{self.family}({self.p})"
        return f"{self.family}({self.p},{self.q})"


_DESCRIPTOR = re.compile(r"^\s*([A-Za-z]+)\s*\(\s*(\d+)\s*(?:,\s*(\d+)\s*)?\)\s*$")


def parse_descriptor(text: str) -> GroupDescriptor:
    """``O(3,4)`` -> ``GroupDescriptor("O", 3, 4)``."""
    match = _DESCRIPTOR.match(text)
    if not match:
        raise ValueError(f"bad group descriptor {text!r}")
    family, p, q = match.groups()
    canon = {f.lower(): f for f in FAMILIES}
    if family.lower() not in canon:
        raise ValueError(f"unknown group family {family!r}")
    return GroupDescriptor(canon[family.lower()], int(p), int(q or 0))


def _check_rank(n: int) -> None:
    if n < 1:
        raise ValueError("empty signature")


def pi_o(n: int, i: int) -> HomotopyAnswer:
    """pi_i(O(n)).

    >>> print(pi_o(3, 6))
    Z/12
    >>> print(pi_o(100, 3))
    Z
    """
    _check_rank(n)
    if i < 0:
        raise ValueError("negative degree")
    if i == 0:
        return Z2
    if i > MAX_DEGREE:
        return Unknown(f"pi_{i}(O({n})) lies beyond the tabulated degrees 0..{MAX_DEGREE}")
    boxed = _O_BOXED[i]
    if n >= boxed:
        # pi_i(O(n)) = pi_i(O(n+1)) for 0 < i <= n-2
        return _O_TABLE[i][boxed - 1]
    return _O_TABLE[i][n - 1]


def pi_so(n: int, i: int) -> HomotopyAnswer:
    _check_rank(n)
    if i == 0:
        return TRIVIAL
    return pi_o(n, i)


def pi_spin_definite(n: int, i: int) -> HomotopyAnswer:
    """pi_i(Spin(n)) for n >= 2.

    Spin(2) is the circle; for n >= 3 the group is simply connected and
    agrees with O(n) from degree 3 on.
    """
    _check_rank(n)
    if n < 2:
        return Unknown("Spin(1) is the discrete group Z/2; no connected Spin group of rank 1")
    if i == 0:
        return TRIVIAL
    if n == 2:
        return Z if i == 1 else pi_o(2, i)
    if i <= 2:
        return TRIVIAL
    return pi_o(n, i)


def pi_string_definite(n: int, i: int) -> HomotopyAnswer:
    _check_rank(n)
    if i <= 3:
        return TRIVIAL
    return pi_o(n, i)


def pi1_spin_indefinite(p: int, q: int) -> FgAbGroup:
    """Fundamental group of Spin(p,q); either argument order is accepted.

    >>> print(pi1_spin_indefinite(2, 2))
    Z^2
    >>> print(pi1_spin_indefinite(4, 7))
    Z/2
    """
    if p < 0 or q < 0 or p + q == 0:
        raise ValueError("empty signature")
    big, small = max(p, q), min(p, q)
    if small == 2:
        result = FgAbGroup(2) if big == 2 else Z
    elif small > 2:
        result = Z2
    elif big == 2:
        result = Z
    else:
        result = TRIVIAL
    if small == 0 and big >= 2:
        definite = pi_spin_definite(big, 1)
        if definite != result:
            raise RuntimeError(
                f"pi_1(Spin({big},0)) = {result} disagrees with definite rule {definite}"
            )
    return result


def pi_u(n: int, i: int) -> HomotopyAnswer:
    """pi_i(U(n)).

    >>> print(pi_u(3, 6))
    Z/6
    """
    _check_rank(n)
    if i < 0:
        raise ValueError("negative degree")
    if i == 0:
        return TRIVIAL
    if i > MAX_DEGREE:
        return Unknown(f"pi_{i}(U({n})) lies beyond the tabulated degrees 0..{MAX_DEGREE}")
    # U(6) is already stable through degree 11
    return _U_TABLE[i - 1][min(n, 6) - 1]


def pi_su(n: int, i: int) -> HomotopyAnswer:
    # U(n) is homeomorphic to SU(n) x S^1
    _check_rank(n)
    if i <= 1:
        return TRIVIAL
    return pi_u(n, i)


def pi_sp(n: int, i: int) -> HomotopyAnswer:
    """pi_i(Sp(n)); only the simply connected range and pi_3 are implemented."""
    _check_rank(n)
    if i < 0:
        raise ValueError("negative degree")
    if i <= 2:
        return TRIVIAL
    if i == 3:
        return Z
    return Unknown(f"pi_{i}(Sp({n})) is not tabulated")


_DEFINITE = {
    "O": pi_o,
    "SO": pi_so,
    "Spin": pi_spin_definite,
    "String": pi_string_definite,
    "U": pi_u,
    "SU": pi_su,
    "Sp": pi_sp,
}


def _product(*answers: HomotopyAnswer) -> HomotopyAnswer:
    for a in answers:
        if isinstance(a, Unknown):
            return a
    return direct_sum(*answers)


def pi_indefinite(d: GroupDescriptor, i: int) -> HomotopyAnswer:
    """pi_i of an indefinite group via its maximal compact subgroup.

    >>> print(pi_indefinite(GroupDescriptor("O", 3, 4), 3))
    Z^3
    """
    if d.definite:
        raise ValueError(f"{d} is definite; use pi()")
    if i < 0:
        raise ValueError("negative degree")
    p, q = d.signature
    if d.family in ("O", "SO", "U", "Sp"):
        f = _DEFINITE[d.family]
        return _product(f(p, i), f(q, i))
    if d.family == "Spin":
        if i == 0:
            return TRIVIAL
        if i == 1:
            return pi1_spin_indefinite(p, q)
        # covering maps are isomorphisms on pi_i for i >= 2
        return _product(pi_so(p, i), pi_so(q, i))
    if d.family == "String":
        if i <= 3:
            return TRIVIAL
        return _product(pi_o(p, i), pi_o(q, i))
    return Unknown(f"no maximal-compact product rule for {d.family}(p,q)")


def pi(d: GroupDescriptor, i: int) -> HomotopyAnswer:
    """pi_i of any supported descriptor, definite or not."""
    if d.definite:
        return _DEFINITE[d.family](d.signature[0], i)
    return pi_indefinite(d, i)


def connected_cover_pi(d: GroupDescriptor, level: int, i: int) -> HomotopyAnswer:
    """pi_i of the cover of ``d`` with homotopy through degree ``level`` killed."""
    if i <= level:
        return TRIVIAL
    return pi(d, i)
