"""Cohomology profiles and lifting verdicts.

A profile records what is known about the characteristic classes of a space
``X``: each class is zero, nonzero, unknown, or an explicit element of its
coefficient group.  Walking a tower stage by stage, a lift exists exactly when
every obstruction class vanishes; partial knowledge yields ``UNDETERMINED``
instead of a guess.

Profile files are line oriented::

    # comments run to end of line
    space X
    class w2.1 degree 2 coeff Z/2 value zero
    class half_p1.1 degree 4 coeff Z value (3)
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .abgroup import FgAbGroup, GroupElement, parse_element, parse_group
from .cohomology import ClassRef
from .tower import Tower, TwistSpec


class ProfileError(ValueError):
    pass


class ProfileSyntaxError(ProfileError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class ShapeMismatch(ProfileError):
    pass


class DuplicateClass(ProfileError):
    pass


class VocabularyMismatch(ValueError):
    """A profile entry disagrees with the tower about a class's degree or coefficient."""


class IncomparableClasses(ValueError):
    pass


class Marker(enum.Enum):
    ZERO = "zero"
    NONZERO = "nonzero"
    UNKNOWN = "unknown"


ClassValue = Marker | GroupElement


@dataclass(frozen=True)
class ProfileEntry:
    degree: int
    coefficient: FgAbGroup
    value: ClassValue

    @property
    def is_zero(self) -> bool:
        if isinstance(self.value, GroupElement):
            return self.value.is_zero
        return self.value is Marker.ZERO

    def element(self) -> GroupElement | None:
        """The value as an element, if it is determined."""
        if isinstance(self.value, GroupElement):
            return self.value
        if self.value is Marker.ZERO:
            return self.coefficient.zero()
        return None


@dataclass(frozen=True)
class CohomologyProfile:
    space_name: str
    entries: dict[str, ProfileEntry]

    def get(self, class_id: str) -> ProfileEntry | None:
        return self.entries.get(class_id)


_SPACE = re.compile(r"^space\s+([A-Za-z_][\w.\-]*)$")
_CLASS = re.compile(r"^class\s+(\S+)\s+degree\s+(-?\d+)\s+coeff\s+(.+?)\s+value\s+(.+)$")


def parse_profile(text: str) -> CohomologyProfile:
    space = None
    entries: dict[str, ProfileEntry] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if space is None:
            m = _SPACE.match(line)
            if not m:
                raise ProfileSyntaxError(lineno, "profile must start with 'space <identifier>'")
            space = m.group(1)
            continue
        m = _CLASS.match(line)
        if not m:
            raise ProfileSyntaxError(lineno, f"unrecognized line {line!r}")
        cid, degree, coeff_text, value_text = m.groups()
        try:
            coeff = parse_group(coeff_text)
        except ValueError as err:
            raise ProfileSyntaxError(lineno, str(err)) from None
        value_text = value_text.strip()
        if value_text.lower() in ("zero", "nonzero", "unknown"):
            value: ClassValue = Marker(value_text.lower())
        elif value_text.startswith("("):
            try:
                value = parse_element(value_text, coeff)
            except ValueError as err:
                if "shape mismatch" in str(err):
                    raise ShapeMismatch(f"line {lineno}: {err}") from None
                raise ProfileSyntaxError(lineno, str(err)) from None
        else:
            raise ProfileSyntaxError(lineno, f"bad value {value_text!r}")
        if cid in entries:
            raise DuplicateClass(f"line {lineno}: duplicate class id {cid!r}")
        entries[cid] = ProfileEntry(int(degree), coeff, value)
    if space is None:
        raise ProfileSyntaxError(1, "empty profile")
    return CohomologyProfile(space, entries)


class Status(enum.Enum):
    LIFTS = "LIFTS"
    OBSTRUCTED = "OBSTRUCTED"
    UNDETERMINED = "UNDETERMINED"


@dataclass(frozen=True)
class LiftVerdict:
    status: Status
    stage_index: int | None = None
    class_ids: tuple[str, ...] = ()
    difference: GroupElement | None = None

    def __str__(self) -> str:
        if self.status is Status.LIFTS:
            return "LIFTS"
        text = f"{self.status.value} at stage {self.stage_index}: {', '.join(self.class_ids)}"
        if self.difference is not None:
            text += f"; difference {self.difference}"
        return text


def _lookup(profile: CohomologyProfile, ref: ClassRef) -> ProfileEntry | None:
    entry = profile.get(ref.id)
    if entry is None:
        return None
    if entry.degree != ref.degree or entry.coefficient != ref.coefficient:
        raise VocabularyMismatch(
            f"{ref.id} expects degree {ref.degree} in {ref.coefficient}, "
            f"profile declares degree {entry.degree} in {entry.coefficient}"
        )
    return entry


def evaluate_lift(profile: CohomologyProfile, tower: Tower, target_stage: int | None = None) -> LiftVerdict:
    """Walk stages ``0..target_stage`` and decide whether the structure lifts."""
    if target_stage is None:
        target_stage = len(tower.stages) - 1
    if not 0 <= target_stage < len(tower.stages):
        raise ValueError(f"target stage {target_stage} out of range")
    for stage in tower.stages[:target_stage + 1]:
        blockers, unknown = [], []
        for ref in stage.obstructions:
            entry = _lookup(profile, ref)
            if entry is None or entry.value is Marker.UNKNOWN:
                unknown.append(ref.id)
            elif not entry.is_zero:
                blockers.append(ref.id)
        if blockers:
            return LiftVerdict(Status.OBSTRUCTED, stage.index, tuple(blockers))
        if unknown:
            return LiftVerdict(Status.UNDETERMINED, stage.index, tuple(unknown))
    return LiftVerdict(Status.LIFTS)


def _side_element(profile, refs, group, undetermined) -> GroupElement | None:
    coords: list[int] = []
    for ref in refs:
        entry = _lookup(profile, ref)
        elem = entry.element() if entry is not None else None
        if elem is None:
            undetermined.append(ref.id)
        else:
            coords.extend(elem.coords)
    if len(coords) != group.rank + len(group.invariant_factors):
        return None
    return group.element(coords)


def evaluate_twisted(profile: CohomologyProfile, spec: TwistSpec) -> LiftVerdict:
    """Lifts iff ``left - hom(right)`` vanishes."""
    if spec.hom is None and spec.left_coefficient != spec.right_coefficient:
        raise IncomparableClasses("incomparable classes")
    undetermined: list[str] = []
    left = _side_element(profile, spec.left, spec.left_coefficient, undetermined)
    right = _side_element(profile, spec.right, spec.right_coefficient, undetermined)
    if undetermined:
        return LiftVerdict(Status.UNDETERMINED, 0, tuple(undetermined))
    diff = left - spec.apply_hom(right)
    if diff.is_zero:
        return LiftVerdict(Status.LIFTS)
    ids = tuple(r.id for r in spec.left + spec.right)
    return LiftVerdict(Status.OBSTRUCTED, 0, ids, diff)


def zero_profile(tower: Tower, space_name: str = "X") -> CohomologyProfile:
    """A profile in which every obstruction of ``tower`` vanishes."""
    entries = {
        ref.id: ProfileEntry(ref.degree, ref.coefficient, Marker.ZERO)
        for stage in tower.stages for ref in stage.obstructions
    }
    return CohomologyProfile(space_name, entries)


def render_profile(profile: CohomologyProfile) -> str:
    lines = [f"space {profile.space_name}"]
    for cid, e in profile.entries.items():
        value = str(e.value) if isinstance(e.value, GroupElement) else e.value.value
        lines.append(f"class {cid} degree {e.degree} coeff {e.coefficient} value {value}")
    return "\n".join(lines) + "\n"

