"""Low-degree (co)homology of classifying spaces over the integers.

The only hard-coded data are the homology tables of BSO(n) through degree 2
and BSpin(n) through degree 4.  Products and cohomology are derived from them
with the Künneth formula and the universal coefficient theorem, so e.g.
``H^2(BSO(p) x BSO(q); Z)`` is computed rather than looked up.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .abgroup import TRIVIAL, FgAbGroup, Z, Z2, direct_sum, ext, hom, tensor, tor


class OutsideTable(ValueError):
    """A degree beyond what a table covers was requested."""


# name -> (degree, coefficient); the Euler class has degree n and is handled apart
CATALOG: dict[str, tuple[int, FgAbGroup]] = {
    "w1": (1, Z2),
    "w2": (2, Z2),
    "sqrt_p1": (2, Z),
    "c1": (2, Z),
    "half_p1": (4, Z),
    "p1": (4, Z),
    "c2": (4, Z),
    "p1H": (4, Z),
}


@dataclass(frozen=True)
class ClassRef:
    """A named characteristic class attached to one factor of a product.

    ``factor`` counts maximal-compact factors from 1; ``sub`` distinguishes
    the two components coming from Spin(4) = Spin(3) x Spin(3).
    """

    name: str
    degree: int
    coefficient: FgAbGroup
    factor: int = 1
    sub: int | None = None

    @classmethod
    def make(cls, name: str, factor: int = 1, sub: int | None = None, *, n: int | None = None) -> ClassRef:
        if name == "e":
            if n is None:
                raise ValueError("the Euler class needs the rank n")
            return cls("e", n, Z, factor, sub)
        if name not in CATALOG:
            raise ValueError(f"unknown characteristic class {name!r}")
        degree, coeff = CATALOG[name]
        return cls(name, degree, coeff, factor, sub)

    def __post_init__(self):
        if self.name in CATALOG and CATALOG[self.name] != (self.degree, self.coefficient):
            raise ValueError(f"{self.name} must have degree/coefficient {CATALOG[self.name]}")

    @property
    def id(self) -> str:
        """Profile key, ``<name>.<factor>[.<sub>]``."""
        base = f"{self.name}.{self.factor}"
        return base if self.sub is None else f"{base}.{self.sub}"

    @property
    def label(self) -> str:
        return self.name if self.sub is None else f"{self.name}#{self.sub}"


@dataclass(frozen=True)
class GradedGroupList:
    """Groups indexed by degree 0..max_degree; other degrees are errors."""

    groups: tuple[FgAbGroup, ...]
    name: str = ""

    @property
    def max_degree(self) -> int:
        return len(self.groups) - 1

    def __getitem__(self, k: int) -> FgAbGroup:
        if k < 0:
            return TRIVIAL
        if k > self.max_degree:
            raise OutsideTable(f"H_{k}({self.name or 'space'}) is outside the table (max degree {self.max_degree})")
        return self.groups[k]

    @classmethod
    def trivial(cls, max_degree: int) -> GradedGroupList:
        return cls((TRIVIAL,) * (max_degree + 1), "trivial")


def _bso_table(n: int) -> GradedGroupList:
    if n < 1:
        raise ValueError("empty signature")
    h2 = TRIVIAL if n == 1 else Z if n == 2 else Z2
    return GradedGroupList((Z, TRIVIAL, h2), f"BSO({n})")


def _bspin_table(n: int) -> GradedGroupList:
    if n < 1:
        raise ValueError("empty signature")
    if n == 1:
        gs = (Z, Z2, TRIVIAL, Z2, TRIVIAL)
    elif n == 2:
        gs = (Z, TRIVIAL, Z, TRIVIAL, Z)
    else:
        gs = (Z, TRIVIAL, TRIVIAL, TRIVIAL, Z)
    return GradedGroupList(gs, f"BSpin({n})")


def bso_homology(n: int) -> GradedGroupList:
    return _bso_table(n)


def bspin_homology(n: int) -> GradedGroupList:
    return _bspin_table(n)


def homology_bso(n: int, k: int) -> FgAbGroup:
    """H_k(BSO(n); Z) for k <= 2."""
    if k < 0:
        raise ValueError("negative degree")
    return _bso_table(n)[k]


def homology_bspin(n: int, k: int) -> FgAbGroup:
    """H_k(BSpin(n); Z) for k <= 4."""
    if k < 0:
        raise ValueError("negative degree")
    return _bspin_table(n)[k]


def _require(h: GradedGroupList, k: int) -> None:
    if k > h.max_degree:
        raise OutsideTable(f"{h.name or 'graded list'} only covers degrees up to {h.max_degree}, need {k}")


def kunneth_tensor_part(hx: GradedGroupList, hy: GradedGroupList, k: int) -> FgAbGroup:
    _require(hx, k)
    _require(hy, k)
    return direct_sum(*(tensor(hx[r], hy[k - r]) for r in range(k + 1)))


def kunneth_tor_part(hx: GradedGroupList, hy: GradedGroupList, k: int) -> FgAbGroup:
    if k < 1:
        return TRIVIAL
    _require(hx, k - 1)
    _require(hy, k - 1)
    return direct_sum(*(tor(hx[r], hy[k - 1 - r]) for r in range(k)))


def kunneth_homology(hx: GradedGroupList, hy: GradedGroupList, k: int) -> FgAbGroup:
    """H_k(X x Y; Z) from the integral homology of the factors."""
    return direct_sum(kunneth_tensor_part(hx, hy, k), kunneth_tor_part(hx, hy, k))


def uct_parts(h_n: FgAbGroup, h_nminus1: FgAbGroup, coeff: FgAbGroup) -> tuple[FgAbGroup, FgAbGroup]:
    """The ``(Hom, Ext)`` summands of H^n(-; coeff)."""
    return hom(h_n, coeff), ext(h_nminus1, coeff)


def uct_cohomology(h_n: FgAbGroup, h_nminus1: FgAbGroup, coeff: FgAbGroup) -> FgAbGroup:
    return direct_sum(*uct_parts(h_n, h_nminus1, coeff))


def cohomology(h: GradedGroupList, n: int, coeff: FgAbGroup = Z) -> FgAbGroup:
    return uct_cohomology(h[n], h[n - 1], coeff)


def product_cohomology_parts(
    hx: GradedGroupList, hy: GradedGroupList, n: int, coeff: FgAbGroup = Z
) -> tuple[FgAbGroup, FgAbGroup]:
    """``(Hom, Ext)`` summands of H^n(X x Y; coeff)."""
    lower = kunneth_homology(hx, hy, n - 1) if n >= 1 else TRIVIAL
    return uct_parts(kunneth_homology(hx, hy, n), lower, coeff)


def product_cohomology(hx: GradedGroupList, hy: GradedGroupList, n: int, coeff: FgAbGroup = Z) -> FgAbGroup:
    return direct_sum(*product_cohomology_parts(hx, hy, n, coeff))


def h2_bso_indefinite(p: int, q: int) -> FgAbGroup:
    """H^2(BSO(p) x BSO(q); Z) for p, q >= 2.

    >>> print(h2_bso_indefinite(2, 5))
    Z
    """
    if p < 2 or q < 2:
        raise ValueError("h2_bso_indefinite needs p, q >= 2; smaller factors are handled by the tower rules")
    return product_cohomology(bso_homology(p), bso_homology(q), 2)


def h4_bspin(n: int) -> tuple[FgAbGroup, tuple[ClassRef, ...]]:
    """H^4(BSpin(n); Z) with its generators, for n >= 3.

    Spin(4) = Spin(3) x Spin(3) contributes one ``half_p1`` per factor.
    """
    if n < 3:
        raise ValueError("use h2/h4 tables: H^4(BSpin(n)) for n < 3 is not generated by half_p1")
    if n == 4:
        gens = (ClassRef.make("half_p1", 1, 1), ClassRef.make("half_p1", 1, 2))
        return FgAbGroup(2), gens
    group = cohomology(bspin_homology(n), 4)
    return group, (ClassRef.make("half_p1"),)


def _geometric_product(degrees: list[int], k: int) -> list[int]:
    """Coefficients t^0..t^k of prod 1/(1 - t^d)."""
    coeffs = [1] + [0] * k
    for d in degrees:
        for i in range(d, k + 1):
            coeffs[i] += coeffs[i - d]
    return coeffs


def betti_series_degrees(n: int) -> list[int]:
    """Exponents ``d`` with Q_n(t) = prod 1/(1 - t^d)."""
    if n < 3:
        raise ValueError("Betti series are given for n >= 3")
    m = n // 2
    if n % 2:
        return [4 * j for j in range(1, m + 1)]
    return [4 * j for j in range(1, m)] + [n]


def betti_bspin(n: int, k: int) -> int:
    """Free rank of H^k(BSpin(n); Z) read off the generating function.

    >>> [betti_bspin(5, k) for k in range(0, 13, 4)]
    [1, 1, 2, 2]
    """
    if k < 0:
        raise ValueError("negative degree")
    return _geometric_product(betti_series_degrees(n), k)[k]


def kunneth_split_check(
    hx: GradedGroupList,
    hy: GradedGroupList,
    n: int,
    coeff: FgAbGroup,
    flat: bool = True,
) -> tuple[bool, list[int]]:
    """Check the sufficient conditions for H^n(X x Y; A) = H^n(X; A) x H^n(Y; A).

    Condition 1 (flatness of the chain complex) cannot be checked from
    homology and is taken from ``flat``.  Returns ``(ok, failed_ids)``.
    """
    failed = []
    if not flat:
        failed.append(1)
    if kunneth_tensor_part(hx, hy, n) != direct_sum(hx[n], hy[n]):
        failed.append(2)
    if not kunneth_tor_part(hx, hy, n).is_trivial:
        failed.append(3)
    lower = [hx[n - 1], hy[n - 1], kunneth_homology(hx, hy, n - 1) if n >= 1 else TRIVIAL]
    if any(not ext(h, coeff).is_trivial for h in lower):
        failed.append(4)
    return not failed, failed


@dataclass(frozen=True)
class RingPresentation:
    generators: tuple[tuple[str, int], ...]
    relations: tuple[str, ...] = field(default=())


RING_FAMILIES = ("BU", "BSU", "BSp", "BSO_rational")


def ring_generators(family: str, n: int) -> RingPresentation:
    """Polynomial generators (name, degree) of H^*(BG) for the classical families."""
    if n < 1:
        raise ValueError("empty signature")
    if family == "BU":
        gens = [(f"c{i}", 2 * i) for i in range(1, n + 1)]
    elif family == "BSU":
        gens = [(f"c{i}", 2 * i) for i in range(2, n + 1)]
    elif family == "BSp":
        gens = [(f"p{i}H", 4 * i) for i in range(1, n + 1)]
    elif family == "BSO_rational":
        gens = [(f"p{i}", 4 * i) for i in range(1, n // 2 + 1)]
        if n % 2 == 0:
            gens.append(("e", n))
            return RingPresentation(tuple(gens), (f"p{n // 2} = e^2",))
    else:
        raise ValueError(f"unsupported family {family!r}; expected one of {RING_FAMILIES}")
    return RingPresentation(tuple(gens))

