"""Zero patterns: a rigid drift base set paired with a free control base set.

The drift side lists whole algebra elements whose combination coefficients
must all be nonzero; the control side lists individual basis generators
whose coefficients are unrestricted.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import AlgebraElement, AlgebraKind, BasisElement, validate_basis_element
from .errors import EmptyPool, KindMismatch, ValidationError

DEFAULT_POOL: tuple[Fraction, ...] = tuple(Fraction(k) for k in range(-9, 10) if k)


@dataclass(frozen=True)
class DriftPattern:
    """Base elements A_1..A_d of the rigid drift pattern."""

    kind: AlgebraKind
    bases: tuple[AlgebraElement, ...]

    def __post_init__(self) -> None:
        if not self.bases:
            raise ValidationError("a drift pattern needs at least one base element")
        for a in self.bases:
            if a.kind != self.kind:
                raise KindMismatch(f"drift base of {a.kind} in a {self.kind} pattern")
            if a.is_zero:
                raise ValidationError("drift base elements must be nonzero")


@dataclass(frozen=True)
class ControlPattern:
    """Basis generators available to the controlled terms (free pattern)."""

    kind: AlgebraKind
    bases: tuple[BasisElement, ...]

    def __post_init__(self) -> None:
        if not self.bases:
            raise ValidationError("a control pattern needs at least one base element")
        for b in self.bases:
            validate_basis_element(self.kind, b)
        # deduplicate and order for deterministic downstream iteration
        object.__setattr__(self, "bases", tuple(sorted(set(self.bases))))


@dataclass(frozen=True)
class ZeroPatternPair:
    drift: DriftPattern
    control: ControlPattern

    def __post_init__(self) -> None:
        if self.drift.kind != self.control.kind:
            raise KindMismatch("drift and control patterns belong to different algebras")

    @property
    def kind(self) -> AlgebraKind:
        return self.drift.kind


def sample_drift(pattern: DriftPattern, pool: Sequence[Fraction], seed: int) -> AlgebraElement:
    """Deterministic rigid-pattern sample: sum of bases with pool coefficients.

    Cancellation may zero the result; callers that care check `is_zero`.
    """
    choices = sorted(set(Fraction(c) for c in pool))
    if any(not c for c in choices):
        raise EmptyPool("coefficient pool must not contain zero")
    if not choices:
        raise EmptyPool("coefficient pool is empty")
    rng = random.Random(seed)
    out = AlgebraElement.zero(pattern.kind)
    for base in pattern.bases:
        out = out + base.scale(rng.choice(choices))
    return out


def control_generators(pattern: ControlPattern) -> list[AlgebraElement]:
    """One unit-coefficient element per control base.

    Closure is monotone in the generator set, so instantiating every base
    individually dominates any other admissible choice of controlled terms.
    """
    return [AlgebraElement.build(pattern.kind, [(b, 1)]) for b in pattern.bases]


def drift_is_basis_subset(pattern: DriftPattern) -> bool:
    """True when every drift base is a single matrix unit (GL only)."""
    if pattern.kind.family.value != "gl":
        raise KindMismatch(f"basis-subset drift test is defined over gl(n), not {pattern.kind}")
    return all(len(list(a.items())) == 1 for a in pattern.bases)
