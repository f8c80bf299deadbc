"""Symbolic connected-cover towers and the classes obstructing each lift.

A tower for ``O(p,q)`` has three stages (orientation, Spin, String); for
``U(p,q)`` two (universal cover, String); for ``Sp(p,q)`` one (String).  Each
factor of the maximal compact subgroup contributes its own classes, so the
indefinite case is the definite rule applied per factor.

>>> print(build_tower(GroupDescriptor("O", 2, 5)).render())
stage 0: kill pi_0, obstruction w1 x w1 in H^1(X; Z/2 x Z/2)
stage 1: kill pi_1, obstruction sqrt_p1 x w2 in H^2(X; Z x Z/2)
stage 2: kill pi_3, obstruction half_p1 in H^4(X; Z)
"""

from __future__ import annotations

from dataclasses import dataclass

from .abgroup import FgAbGroup, GroupElement, IntegerMatrix, direct_sum
from .cohomology import ClassRef
from .homotopy import GroupDescriptor


@dataclass(frozen=True)
class TowerStage:
    index: int
    key: str
    source_name: str
    target_name: str
    killed_pi: int
    obstructions: tuple[ClassRef, ...]

    def __post_init__(self):
        for c in self.obstructions:
            if c.degree != self.killed_pi + 1:
                raise ValueError(f"{c.id} has degree {c.degree}, stage needs {self.killed_pi + 1}")

    @property
    def coefficient(self) -> FgAbGroup:
        return direct_sum(*(c.coefficient for c in self.obstructions))

    def render(self, unicode: bool = False) -> str:
        names = " x ".join(c.label for c in self.obstructions) or "none"
        group = self.coefficient.to_string(unicode)
        return f"stage {self.index}: kill pi_{self.killed_pi}, obstruction {names} in H^{self.killed_pi + 1}(X; {group})"


@dataclass(frozen=True)
class Tower:
    descriptor: GroupDescriptor
    stages: tuple[TowerStage, ...]

    def render(self, unicode: bool = False) -> str:
        return "\n".join(s.render(unicode) for s in self.stages)

    def stage_index(self, name: str) -> int:
        """Resolve a stage by key (``SO``, ``Spin``, ``String``, ``cover``) or index."""
        if name.isdigit():
            idx = int(name)
            if idx >= len(self.stages):
                raise ValueError(f"{self.descriptor} has no stage {idx}")
            return idx
        for s in self.stages:
            if s.key.lower() == name.lower():
                return s.index
        keys = ", ".join(s.key for s in self.stages)
        raise ValueError(f"unknown stage {name!r} for {self.descriptor}; expected one of {keys}")


def _orientation_classes(factors) -> list[ClassRef]:
    return [ClassRef.make("w1", f) for f, n in enumerate(factors, 1) if n >= 1]


def _spin_classes(factors) -> list[ClassRef]:
    out = []
    for f, n in enumerate(factors, 1):
        if n == 2:
            out.append(ClassRef.make("sqrt_p1", f))
        elif n >= 3:
            out.append(ClassRef.make("w2", f))
    return out


def _string_classes(factors) -> list[ClassRef]:
    out = []
    for f, n in enumerate(factors, 1):
        if n == 4:
            out += [ClassRef.make("half_p1", f, 1), ClassRef.make("half_p1", f, 2)]
        elif n >= 3:
            out.append(ClassRef.make("half_p1", f))
    return out


def build_tower(d: GroupDescriptor) -> Tower:
    """The connected-cover tower of an O, U or Sp group, definite or indefinite."""
    factors = d.factors
    sig = ",".join(str(n) for n in factors)

    def stage(i, key, src, dst, k, classes):
        return TowerStage(i, key, src, dst, k, tuple(classes))

    if d.family == "O":
        stages = (
            stage(0, "SO", f"O({sig})", f"SO({sig})⁰", 0, _orientation_classes(factors)),
            stage(1, "Spin", f"SO({sig})⁰", "Spin-cover", 1, _spin_classes(factors)),
            stage(2, "String", "Spin-cover", "String-cover", 3, _string_classes(factors)),
        )
    elif d.family == "U":
        # the pi_1 stage may be skipped when starting from the universal cover
        stages = (
            stage(0, "cover", f"U({sig})", "universal cover", 1,
                  [ClassRef.make("c1", f) for f in range(1, len(factors) + 1)]),
            stage(1, "String", "universal cover", "String-cover", 3,
                  [ClassRef.make("c2", f) for f, n in enumerate(factors, 1) if n >= 2]),
        )
    elif d.family == "Sp":
        stages = (
            stage(0, "String", f"Sp({sig})", "String-cover", 3,
                  [ClassRef.make("p1H", f) for f in range(1, len(factors) + 1)]),
        )
    else:
        raise ValueError(f"unsupported family {d.family!r} for towers; use O, U or Sp")
    return Tower(d, stages)


@dataclass(frozen=True)
class TwistSpec:
    """Two obstruction classes whose difference must vanish.

    ``hom`` maps coordinates of the right-hand coefficient group into the
    left-hand one (rows = left coordinates); ``None`` means the identity and
    then both sides must have the same coefficient group.
    """

    kind: str
    left: tuple[ClassRef, ...]
    right: tuple[ClassRef, ...]
    hom: IntegerMatrix | None = None

    def __post_init__(self):
        for side in (self.left, self.right):
            degrees = {c.degree for c in side}
            if len(degrees) != 1:
                raise ValueError("each side of a twist needs classes of one degree")
            orders = [o for c in side for o in c.coefficient.cyclic_orders()]
            if orders != direct_sum(*(c.coefficient for c in side)).cyclic_orders():
                raise ValueError("twist components must already be in canonical order")
        if self.hom is None:
            if self.left_coefficient != self.right_coefficient:
                raise ValueError("incomparable classes")
            return
        lg, rg = self.left_coefficient, self.right_coefficient
        nl = lg.rank + len(lg.invariant_factors)
        nr = rg.rank + len(rg.invariant_factors)
        if (self.hom.rows, self.hom.cols) != (nl, nr):
            raise ValueError(f"hom must be {nl}x{nr}, got {self.hom.rows}x{self.hom.cols}")
        for j, d in enumerate(rg.cyclic_orders()):
            if d and not lg.element([d * self.hom[i, j] for i in range(nl)]).is_zero:
                raise ValueError("hom is not well defined on the torsion of the right-hand group")

    @property
    def left_coefficient(self) -> FgAbGroup:
        return direct_sum(*(c.coefficient for c in self.left))

    @property
    def right_coefficient(self) -> FgAbGroup:
        return direct_sum(*(c.coefficient for c in self.right))

    def apply_hom(self, x: GroupElement) -> GroupElement:
        if self.hom is None:
            return x
        col = IntegerMatrix(len(x.coords), 1, x.coords)
        return self.left_coefficient.element((self.hom @ col).entries)

    def __str__(self) -> str:
        left = " x ".join(c.id for c in self.left)
        right = " x ".join(c.id for c in self.right)
        return f"{self.kind}: {left} - {right} in H^{self.left[0].degree}(X; {self.left_coefficient})"


TWIST_KINDS = ("SO", "Spin", "String")


def twisted_descriptor(kind: str, p: int, q: int) -> TwistSpec:
    """The twisted covering condition for signature (p, q)."""
    if p < 1 or q < 1:
        raise ValueError("twisted coverings need two nonempty factors")
    small, big = sorted((p, q))
    if kind == "SO":
        return TwistSpec(kind, (ClassRef.make("w1", 1),), (ClassRef.make("w1", 2),))
    if kind == "Spin":
        if small == big == 2:
            name = "sqrt_p1"
        elif small >= 3:
            name = "w2"
        else:
            raise ValueError(f"no twisted covering case for Spin({p},{q})")
        return TwistSpec(kind, (ClassRef.make(name, 1),), (ClassRef.make(name, 2),))
    if kind == "String":
        if small == big == 4:
            return TwistSpec(
                kind,
                (ClassRef.make("half_p1", 1, 1), ClassRef.make("half_p1", 1, 2)),
                (ClassRef.make("half_p1", 2, 1), ClassRef.make("half_p1", 2, 2)),
            )
        if small >= 3 and 4 not in (p, q):
            return TwistSpec(kind, (ClassRef.make("half_p1", 1),), (ClassRef.make("half_p1", 2),))
        raise ValueError(f"no twisted covering case for String({p},{q})")
    raise ValueError(f"unknown twist kind {kind!r}; expected one of {TWIST_KINDS}")


def green_schwarz_spec() -> TwistSpec:
    """``half_p1(TX) - c2(E)`` over Z, identifying pi_3(Spin(n)) with pi_3(SU(n))."""
    return TwistSpec("GS", (ClassRef.make("half_p1", 1),), (ClassRef.make("c2", 1),), IntegerMatrix.identity(1))
