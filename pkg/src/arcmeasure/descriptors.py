"""Descriptors for arc sets whose measure is determined at a finite level.

A stable set is pinned down by its image at some truncation level n
together with the class of that image; deeper levels fiber over it with
affine fibers, so the measure is the class rescaled by ``u^-(n+1)d``.
Measurable sets carry a list of stable approximants with declared error
dimensions.  The calculus here only manipulates declared data; it never
verifies set containment, which is the caller's geometry.
"""

from __future__ import annotations

from dataclasses import dataclass

from .grothendieck import (NEG_INF, LaurentPoly, MotiveSeries, render,
                           parse_motive, virtual_dim)


class SingularAmbient(ValueError):
    """Cylinder measure requested without a nonsingular ambient space."""


class InsufficientApproximants(ValueError):
    """No recorded approximant reaches the requested precision."""


@dataclass(frozen=True)
class StableSetDescriptor:
    """Arc set determined at truncation level ``level``.

    ``class_at_level`` is the class of the level-n image; ``ambient_dim``
    the dimension of the ambient nonsingular space the arcs live in.
    """

    level: int
    class_at_level: LaurentPoly
    ambient_dim: int

    def __post_init__(self):
        if self.level < 0:
            raise ValueError("level must be nonnegative")
        if self.ambient_dim < 1:
            raise ValueError("ambient dimension must be positive")

    def to_json(self) -> dict:
        return {"level": self.level,
                "class": render(self.class_at_level),
                "dim": self.ambient_dim}

    @classmethod
    def from_json(cls, data: dict) -> "StableSetDescriptor":
        cls_poly = parse_motive(data["class"])
        if not isinstance(cls_poly, LaurentPoly):
            raise ValueError("descriptor class must be an exact polynomial")
        return cls(level=int(data["level"]), class_at_level=cls_poly,
                   ambient_dim=int(data["dim"]))


def measure_stable(a: StableSetDescriptor) -> LaurentPoly:
    """Class at level n rescaled by the fiber count, ``u^-(n+1)d``."""
    shift = -(a.level + 1) * a.ambient_dim
    return a.class_at_level * LaurentPoly.monomial(shift)


def re_level(a: StableSetDescriptor, new_level: int) -> StableSetDescriptor:
    """Present the same stable set at a deeper truncation level.

    Each level step multiplies the image class by ``u^d``, one affine
    fiber per ambient coordinate, so the measure is unchanged.
    """
    if new_level < a.level:
        raise ValueError("cannot lower the level of a stable set")
    factor = LaurentPoly.monomial(a.ambient_dim * (new_level - a.level))
    return StableSetDescriptor(level=new_level,
                               class_at_level=a.class_at_level * factor,
                               ambient_dim=a.ambient_dim)


def stable_dim(a: StableSetDescriptor):
    """Virtual dimension of the stable set's measure."""
    return virtual_dim(measure_stable(a))


@dataclass(frozen=True)
class CylinderDescriptor:
    """Preimage of a constructible set of finite jets.

    ``nonsingular_ambient`` records the hypothesis under which the
    cylinder is stable; without it no measure is assigned here.
    """

    level: int
    base_class: LaurentPoly
    ambient_dim: int
    nonsingular_ambient: bool = True

    def as_stable(self) -> StableSetDescriptor:
        if not self.nonsingular_ambient:
            raise SingularAmbient(
                "cylinder over a singular ambient space need not be stable")
        return StableSetDescriptor(level=self.level,
                                   class_at_level=self.base_class,
                                   ambient_dim=self.ambient_dim)


def measure_cylinder(c: CylinderDescriptor) -> LaurentPoly:
    return measure_stable(c.as_stable())


@dataclass(frozen=True)
class MeasurableDescriptor:
    """Stable approximants with strictly decreasing error dimensions.

    Each entry pairs a stable descriptor with an integer bound strictly
    above the dimension of the symmetric-difference error it leaves.
    """

    approximants: tuple

    def __post_init__(self):
        # an empty list is a legal descriptor; it just cannot be measured
        bounds = [b for _, b in self.approximants]
        for m0, m1 in zip(bounds, bounds[1:]):
            if m1 >= m0:
                raise ValueError("error bounds must strictly decrease")
        for a, _ in self.approximants:
            if not isinstance(a, StableSetDescriptor):
                raise TypeError("approximants must be stable descriptors")

    @classmethod
    def wrap_stable(cls, a: StableSetDescriptor,
                    error_dim_bound: int) -> "MeasurableDescriptor":
        """A stable set is measurable with any error bound at all."""
        return cls(approximants=((a, error_dim_bound),))


def measure_measurable(m: MeasurableDescriptor, floor: int) -> MotiveSeries:
    """Measure to the requested precision floor.

    Uses the last approximant whose declared error dimension bound is at
    or below the floor; coefficients above the floor agree for every
    such approximant, so the choice only affects nothing visible.
    """
    chosen = None
    for a, bound in m.approximants:
        if bound <= floor:
            chosen = a
    if chosen is None:
        raise InsufficientApproximants(
            f"no approximant with error bound <= {floor}")
    return MotiveSeries.from_poly(measure_stable(chosen), floor)


def disjoint_union_measure(parts, floor: int) -> MotiveSeries:
    """Sum of the parts' measures at a common precision floor."""
    total = MotiveSeries({}, floor)
    for part in parts:
        total = total + measure_measurable(part, floor)
    return total
