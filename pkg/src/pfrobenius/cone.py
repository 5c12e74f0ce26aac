"""Rational cone geometry: extremal rays and the finiteness criterion.

The finiteness of the p-Frobenius vector (for p >= 1, any graded order) is
equivalent to every extremal ray of the rational cone spanned by the
generators containing at least two minimal generators.  Extremality is
decided by exact-rational linear feasibility (Fourier-Motzkin elimination);
no floating point is involved anywhere.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

from .core import Semigroup, ValidationError


def primitive_direction(v) -> tuple[int, ...]:
    """v divided by the gcd of its coordinates."""
    v = tuple(int(c) for c in v)
    g = gcd(*v) if len(v) > 1 else v[0]
    if g == 0:
        raise ValidationError("zero vector has no direction")
    return tuple(c // g for c in v)


def _fourier_motzkin_feasible(constraints: list[tuple[list[Fraction], Fraction]], nvars: int) -> bool:
    """Feasibility of {x : a.x <= b for all (a, b)} by eliminating all variables."""
    for j in range(nvars):
        pos, neg, zero = [], [], []
        for a, b in constraints:
            if a[j] > 0:
                pos.append((a, b))
            elif a[j] < 0:
                neg.append((a, b))
            else:
                zero.append((a, b))
        new = zero
        for ap, bp in pos:
            for an, bn in neg:
                # cancel x_j: ap/ap[j] + an/(-an[j])
                coeff = [ap[k] / ap[j] - an[k] / an[j] for k in range(nvars)]
                rhs = bp / ap[j] - bn / an[j]
                new.append((coeff, rhs))
        constraints = new
    return all(b >= 0 for _, b in constraints)


def _is_nonneg_combination(target: tuple[int, ...], directions: list[tuple[int, ...]]) -> bool:
    """Is target = sum x_i d_i solvable with rational x_i >= 0?"""
    if not directions:
        return False
    m = len(directions)
    q = len(target)
    cons: list[tuple[list[Fraction], Fraction]] = []
    for row in range(q):
        coeffs = [Fraction(d[row]) for d in directions]
        rhs = Fraction(target[row])
        cons.append((coeffs, rhs))
        cons.append(([-c for c in coeffs], -rhs))
    for j in range(m):
        a = [Fraction(0)] * m
        a[j] = Fraction(-1)
        cons.append((a, Fraction(0)))
    return _fourier_motzkin_feasible(cons, m)


def extremal_ray_directions(S: Semigroup) -> frozenset[tuple[int, ...]]:
    """Primitive directions spanning the extremal rays of the generator cone.

    A generator direction is extremal iff it is not a non-negative rational
    combination of the other distinct generator directions.
    """
    directions = sorted({primitive_direction(g) for g in S.generators})
    extremal = set()
    for d in directions:
        others = [e for e in directions if e != d]
        if not _is_nonneg_combination(d, others):
            extremal.add(d)
    return frozenset(extremal)


def is_fp_finite(S: Semigroup) -> bool:
    """True iff F_p(S) is finite for every p >= 1 and every graded order.

    Holds exactly when each extremal ray direction is shared by at least two
    distinct minimal generators.
    """
    dir_count: dict[tuple[int, ...], int] = {}
    for g in S.generators:
        d = primitive_direction(g)
        dir_count[d] = dir_count.get(d, 0) + 1
    return all(dir_count[d] >= 2 for d in extremal_ray_directions(S))
