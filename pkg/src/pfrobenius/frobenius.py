"""p-Frobenius vectors: the general algorithm, two improved routes for p = 1,
the indispensable-binomial route for p = 2, and the classical p = 0 case of
numerical semigroups.

All routes share the same skeleton: a finiteness gate on the cone, a box of
candidate exponent tuples derived from per-generator bounds, and a maximum
under the active graded order.  An optional ``stats`` dict collects the
intermediate cardinalities so callers can regression-check them.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .cone import is_fp_finite
from .core import (
    INFINITE,
    FrobeniusResult,
    OrderSpec,
    Semigroup,
    UnsupportedError,
    ValidationError,
    s_degree,
)
from .factorization import count_capped, factorizations
from .groebner import (
    Binomial,
    GroebnerBasis,
    assert_s_homogeneous,
    buchberger_reduced,
    in_ideal,
    normal_form,
    reduced_basis,
    toric_ideal_generators,
)

_LAMBDA_SEARCH_CAP = 10_000


@dataclass(frozen=True)
class LambdaBounds:
    """Per-generator multipliers: bounds[k]*a_k factors over the other generators."""

    bounds: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(b < 1 for b in self.bounds):
            raise ValidationError("lambda bounds must all be >= 1")


def _smallest_own_free_multiple(S: Semigroup, k: int) -> int:
    """Smallest lam >= 1 such that lam*a_k factors without generator k."""
    from .factorization import contains

    others = Semigroup(S.q, tuple(g for i, g in enumerate(S.generators) if i != k))
    a = S.generators[k]
    for lam in range(1, _LAMBDA_SEARCH_CAP + 1):
        if contains(others, tuple(lam * c for c in a)):
            return lam
    raise RuntimeError(f"no multiple of generator {k} factors over the others")


def lambda_bounds(S: Semigroup, G: GroebnerBasis) -> LambdaBounds:
    """Minimal pure-power exponent of each variable across the basis monomials.

    Falls back to a direct multiple search for any variable without a pure
    power in the basis (possible for non-reduced inputs).
    """
    if not is_fp_finite(S):
        raise ValidationError("lambda bounds only exist when F_p(S) is finite")
    best: list[int | None] = [None] * S.h
    for b in G.elements:
        for mono in (b.lead, b.trail):
            support = [i for i, e in enumerate(mono) if e > 0]
            if len(support) == 1:
                k = support[0]
                e = mono[k]
                if best[k] is None or e < best[k]:
                    best[k] = e
    out = []
    for k, e in enumerate(best):
        out.append(e if e is not None else _smallest_own_free_multiple(S, k))
    return LambdaBounds(tuple(out))


def candidate_degrees(S: Semigroup, lam: LambdaBounds, p: int) -> set[tuple[int, ...]]:
    """Distinct semigroup elements sum(g_i a_i) with 0 <= g_i <= p*lambda_i."""
    if p < 1:
        raise ValidationError("p must be >= 1")
    gens = S.generators
    q = S.q
    out: set[tuple[int, ...]] = set()
    ranges = [range(p * b + 1) for b in lam.bounds]
    for gamma in itertools.product(*ranges):
        pt = [0] * q
        for gi, a in zip(gamma, gens):
            if gi:
                for j in range(q):
                    pt[j] += gi * a[j]
        out.add(tuple(pt))
    return out


def _scan_descending(S, degrees, order: OrderSpec, p: int) -> FrobeniusResult:
    """Max under the order of the candidates with 0 < #Z <= p (early stop)."""
    for n in sorted(degrees, key=order.key, reverse=True):
        c = count_capped(S, n, p + 1)
        if 0 < c <= p:
            return FrobeniusResult.finite(n)
    raise RuntimeError("no candidate with at most p factorizations; bad bounds")


def fp_general(
    S: Semigroup, p: int, order: OrderSpec = OrderSpec(), stats: dict | None = None
) -> FrobeniusResult:
    """F_p(S) by the direct candidate-box scan (any p >= 1; p = 0 for q = 1)."""
    if p < 0:
        raise ValidationError("p must be >= 0")
    if p == 0:
        if S.q == 1:
            return f0_numerical(S)
        raise UnsupportedError("p = 0 with q >= 2 (gap sets) is out of scope")
    if not is_fp_finite(S):
        return INFINITE
    G = reduced_basis(S, order)
    lam = lambda_bounds(S, G)
    degrees = candidate_degrees(S, lam, p)
    if stats is not None:
        stats["lambda"] = list(lam.bounds)
        stats["candidates"] = len(degrees)
    return _scan_descending(S, degrees, order, p)


def f1_normalform(
    S: Semigroup, order: OrderSpec = OrderSpec(), stats: dict | None = None
) -> FrobeniusResult:
    """F_1(S) via normal-form fixed points of the Lambda box.

    A box tuple survives iff its monomial is its own normal form and is not
    divisible by any trailing term of the reduced basis; survivors are
    exactly the uniquely factorizable elements of the box.
    """
    if not is_fp_finite(S):
        return INFINITE
    G = reduced_basis(S, order)
    lam = lambda_bounds(S, G)
    trails = [b.trail for b in G.elements]
    survivors: set[tuple[int, ...]] = set()
    for gamma in itertools.product(*(range(b + 1) for b in lam.bounds)):
        if normal_form(gamma, G) != gamma:
            continue
        if any(all(t <= g for t, g in zip(trail, gamma)) for trail in trails):
            continue
        survivors.add(s_degree(S, gamma))
    if stats is not None:
        stats["lambda"] = list(lam.bounds)
        stats["unique_degrees"] = len(survivors)
    best = max(survivors, key=order.key)
    return FrobeniusResult.finite(best)


def staircase_data(S: Semigroup, order: OrderSpec = OrderSpec()):
    """Basis monomial exponents Omega and the finite complement of their staircase.

    Returns (omega, complement, degrees): the complement is every tuple of
    N^h not componentwise above any element of omega, and degrees is the set
    of its semigroup images.
    """
    G = reduced_basis(S, order)
    omega: set[tuple[int, ...]] = set()
    for b in G.elements:
        omega.add(b.lead)
        omega.add(b.trail)
    bounds: list[int | None] = [None] * S.h
    for mono in omega:
        support = [i for i, e in enumerate(mono) if e > 0]
        if len(support) == 1:
            k = support[0]
            if bounds[k] is None or mono[k] < bounds[k]:
                bounds[k] = mono[k]
    if any(b is None for b in bounds):
        raise ValidationError("staircase complement is infinite (missing pure power)")
    complement: set[tuple[int, ...]] = set()
    for gamma in itertools.product(*(range(b) for b in bounds)):
        if not any(all(w <= g for w, g in zip(om, gamma)) for om in omega):
            complement.add(gamma)
    degrees = {s_degree(S, gamma) for gamma in complement}
    return frozenset(omega), frozenset(complement), frozenset(degrees)


def f1_staircase(
    S: Semigroup, order: OrderSpec = OrderSpec(), stats: dict | None = None
) -> FrobeniusResult:
    """F_1(S) as the maximal semigroup image of the staircase complement."""
    if not is_fp_finite(S):
        return INFINITE
    omega, complement, degrees = staircase_data(S, order)
    if stats is not None:
        stats["omega"] = len(omega)
        stats["complement_degrees"] = len(degrees)
    return FrobeniusResult.finite(max(degrees, key=order.key))


def nabla_components(S: Semigroup, m) -> list[frozenset[tuple[int, ...]]]:
    """Partition of Z_m(S) into connected components of the degree-m complex.

    Two factorizations are adjacent when their supports intersect (the
    corresponding monomials share a variable); components of that graph
    coincide with the components of the simplicial complex.
    """
    Z = sorted(factorizations(S, m).factorizations)
    parent = list(range(len(Z)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(Z)):
        for j in range(i + 1, len(Z)):
            if any(a > 0 and b > 0 for a, b in zip(Z[i], Z[j])):
                parent[find(i)] = find(j)
    comps: dict[int, set[tuple[int, ...]]] = {}
    for i, lam in enumerate(Z):
        comps.setdefault(find(i), set()).add(lam)
    return [frozenset(c) for c in comps.values()]


def verify_minimal_ideal_basis(S: Semigroup, B) -> bool:
    """Check that B is a minimal binomial generating set of the semigroup ideal."""
    by_degree: dict[tuple[int, ...], list[Binomial]] = {}
    for b in B:
        m = assert_s_homogeneous(S, b)
        by_degree.setdefault(m, []).append(b)
    for m, bm in by_degree.items():
        comps = nabla_components(S, m)
        if len(comps) < 2:
            return False
        if len(bm) != len(comps) - 1:
            return False
        comp_of = {lam: i for i, c in enumerate(comps) for lam in c}
        touched = set()
        for b in bm:
            ci, cj = comp_of.get(b.lead), comp_of.get(b.trail)
            if ci is None or cj is None or ci == cj:
                return False
            touched.update((ci, cj))
        if touched != set(range(len(comps))):
            return False
    # B must actually generate: every toric generator reduces to zero mod <B>
    GB = buchberger_reduced(list(B), OrderSpec("grlex"))
    return all(in_ideal(t, GB) for t in toric_ideal_generators(S))


def indispensable_binomials(S: Semigroup) -> list[Binomial]:
    """Binomials present in every generating set of the semigroup ideal.

    A reduced-basis binomial of S-degree m is indispensable iff m has exactly
    two factorizations and they share no variable; every indispensable
    binomial occurs in the reduced basis, so scanning it is complete.
    """
    G = reduced_basis(S, OrderSpec("grlex"))
    out: list[Binomial] = []
    for b in G.elements:
        m = assert_s_homogeneous(S, b)
        Z = factorizations(S, m).factorizations
        if len(Z) != 2:
            continue
        lam, mu = tuple(Z)
        if not any(a > 0 and c > 0 for a, c in zip(lam, mu)):
            out.append(b)
    return out


def f2_improved(
    S: Semigroup, order: OrderSpec = OrderSpec(), stats: dict | None = None
) -> FrobeniusResult:
    """F_2(S): falls back to F_1 when no indispensable binomial exists,
    otherwise scans the doubled Lambda box for the top element with at most
    two factorizations."""
    if not is_fp_finite(S):
        return INFINITE
    ind = indispensable_binomials(S)
    if stats is not None:
        stats["indispensable"] = len(ind)
    if not ind:
        return f1_staircase(S, order, stats)
    G = reduced_basis(S, order)
    lam = lambda_bounds(S, G)
    degrees = candidate_degrees(S, lam, 2)
    if stats is not None:
        stats["lambda"] = list(lam.bounds)
        stats["candidates"] = len(degrees)
    return _scan_descending(S, degrees, order, 2)


def f0_numerical(S: Semigroup) -> FrobeniusResult:
    """Frobenius number of a numerical semigroup (q = 1) by membership scan."""
    from .factorization import contains

    if S.q != 1:
        raise UnsupportedError("f0_numerical requires q = 1")
    values = sorted(g[0] for g in S.generators)
    if math.gcd(*values) != 1:
        return INFINITE
    if values[0] == 1:
        return FrobeniusResult.finite((-1,))  # N itself has no gaps
    bound = values[0] * values[1]
    for n in range(bound, -1, -1):
        if not contains(S, (n,)):
            return FrobeniusResult.finite((n,))
    return FrobeniusResult.finite((-1,))
