"""Gluing an affine semigroup with N^q: construction, the p-Frobenius upper
bound d*F_p(S) + (d-1)*gamma, and the exact equality criterion."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

from .core import (
    FrobeniusResult,
    OrderSpec,
    Semigroup,
    ValidationError,
    checked,
)
from .factorization import contains, factorizations
from .frobenius import fp_general


class GluingVerdict(enum.Enum):
    EQUAL = "equal"
    STRICTLY_LESS = "strictly-less"
    PRECONDITION_FAILED = "precondition-failed"


@dataclass(frozen=True)
class GluingSpec:
    d: int
    gamma: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "gamma", tuple(int(c) for c in self.gamma))
        if self.d < 2:
            raise ValidationError("gluing factor d must be >= 2")
        if all(c == 0 for c in self.gamma):
            raise ValidationError("gamma must be non-zero")
        g = gcd(*self.gamma)
        if gcd(self.d, g) != 1:
            raise ValidationError(
                f"d = {self.d} and gcd(gamma) = {g} must be coprime"
            )


def validate_gluing(S: Semigroup, spec: GluingSpec) -> None:
    if len(spec.gamma) != S.q:
        raise ValidationError("gamma dimension does not match the semigroup")
    if spec.gamma in S.generators:
        raise ValidationError("gamma must not be a minimal generator of S")
    if not contains(S, spec.gamma):
        raise ValidationError(f"gamma = {spec.gamma} is not an element of S")


def glue(S: Semigroup, spec: GluingSpec) -> Semigroup:
    """The semigroup generated by (d*a_1, ..., d*a_h, gamma).

    The defining generator list must itself be minimal; a violation is an
    error rather than a silent re-minimalization, because every statement
    about the glued semigroup presumes that list.
    """
    from .core import minimalize_generators

    validate_gluing(S, spec)
    gens = tuple(
        tuple(checked(spec.d * c) for c in a) for a in S.generators
    ) + (spec.gamma,)
    glued = Semigroup(S.q, gens)
    minimal = minimalize_generators(gens, S.q)
    if set(minimal.generators) != set(gens):
        raise ValidationError(
            "glued generator list is not minimal; not a valid gluing"
        )
    return glued


def _finite_fp(S: Semigroup, p: int, order: OrderSpec) -> tuple[int, ...]:
    fp = fp_general(S, p, order)
    if fp.is_infinite:
        raise ValidationError("F_p(S) is infinite; gluing results need it finite")
    return fp.point


def fp_glued_bound(
    S: Semigroup, p: int, spec: GluingSpec, order: OrderSpec = OrderSpec()
) -> tuple[int, ...]:
    """d*F_p(S) + (d-1)*gamma, an upper bound for F_p of the glued semigroup.

    For p = 0 (q = 1 only) the returned value is exact, the classical
    Frobenius number formula for gluings.
    """
    validate_gluing(S, spec)
    fp = _finite_fp(S, p, order)
    return tuple(
        checked(spec.d * f + (spec.d - 1) * g) for f, g in zip(fp, spec.gamma)
    )


def gluing_equality(
    S: Semigroup, p: int, spec: GluingSpec, order: OrderSpec = OrderSpec()
) -> GluingVerdict:
    """Does F_p of the gluing attain the bound d*F_p(S) + (d-1)*gamma?

    Applies only when F_p(S) has exactly p factorizations; equality holds
    iff no factorization of gamma is componentwise below a factorization of
    F_p(S).
    """
    if p < 1:
        raise ValidationError("the equality criterion needs p >= 1")
    validate_gluing(S, spec)
    fp = _finite_fp(S, p, order)
    z_fp = factorizations(S, fp).factorizations
    if len(z_fp) != p:
        return GluingVerdict.PRECONDITION_FAILED
    z_gamma = factorizations(S, spec.gamma).factorizations
    for b in z_gamma:
        for c in z_fp:
            if all(bi <= ci for bi, ci in zip(b, c)):
                return GluingVerdict.STRICTLY_LESS
    return GluingVerdict.EQUAL
