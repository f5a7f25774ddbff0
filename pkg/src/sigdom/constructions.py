"""Closed-form double dominating sets for the rim-and-spoke families.

Every constructor returns the set together with its claimed size and a case
tag.  Except for the tight even case, the cut [D : V-D] of each set is a
forest, so the set double dominates under *every* signature.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator

from .families import (
    FamilyGraph,
    InvalidParametersError,
    igraph,
    inner_blocks,
    petersen,
)
from .signed import SignedGraph, all_positive


@dataclass(frozen=True)
class ConstructionResult:
    dds: frozenset[int]
    claimed_size: int
    case_tag: str
    cut_forest_expected: bool


def construct_pn1(n: int) -> ConstructionResult:
    """Size 2(floor(n/2)+1) set for P(n, 1): every even u/v pair plus a tail pair.

    Odd n = 2m+1 finishes with {u_{2m-1}, u_{2m}}; even n = 2m with
    {u_{2m-1}, v_{2m-1}}.  Both leave the cut a disjoint union of paths.
    """
    if n < 3:
        raise InvalidParametersError(f"P(n,1) needs n >= 3, got n={n}")
    m = n // 2
    members = set()
    for i in range(m):
        members.add(2 * i)
        members.add(n + 2 * i)
    if n % 2:
        members.update((2 * m - 1, 2 * m))
        tag = "P_odd_1"
    else:
        members.update((2 * m - 1, n + 2 * m - 1))
        tag = "P_even_1"
    size = 2 * m + 2
    assert len(members) == size
    return ConstructionResult(frozenset(members), size, tag, True)


def construct_pn1_tight(n: int) -> tuple[ConstructionResult, SignedGraph]:
    """The half-order set {u_even, v_even} for even P(n, 1), plus the
    all-positive signature under which it is a signed DDS.

    Its cut is both rims, so unlike the other constructions this one is
    signature-specific: it needs the rim cycles to be positive.
    """
    if n < 4 or n % 2:
        raise InvalidParametersError(f"the tight case needs even n >= 4, got n={n}")
    members = frozenset(
        [*(2 * i for i in range(n // 2)), *(n + 2 * i for i in range(n // 2))]
    )
    result = ConstructionResult(members, n, "P_even_1_tight", False)
    return result, all_positive(petersen(n, 1).graph)


def construct_gcd1(n: int, k: int) -> ConstructionResult:
    """All outer vertices plus every second inner block, for gcd(n, k) = 1.

    With t = ceil(n/k) blocks the selected blocks are V_2, V_4, ..., V_{2*(t//2)};
    the size is n + (t//2)*k for odd t and 2n - (t//2)*k for even t.
    """
    if k < 2 or 2 * k >= n or gcd(n, k) != 1:
        raise InvalidParametersError(
            f"need k >= 2, 2k < n and gcd(n,k) = 1, got n={n} k={k}"
        )
    blocks = inner_blocks(n, k)
    t = len(blocks)
    m = t // 2
    members = set(range(n))
    for bi in range(1, 2 * m, 2):
        members |= blocks[bi]
    if t % 2:
        size, tag = n + m * k, "gcd1_odd"
    else:
        size, tag = 2 * n - m * k, "gcd1_even"
    assert len(members) == size
    return ConstructionResult(frozenset(members), size, tag, True)


def construct_gcd_d(n: int, k: int) -> ConstructionResult:
    """All outer vertices plus every third vertex along each inner cycle.

    For d = gcd(n, k) >= 2 the inner rim splits into d cycles of length n/d;
    picking ceil(n/(3d)) vertices spaced three steps apart on each cycle
    yields size n + d*ceil(n/(3d)).
    """
    d = gcd(n, k)
    if d < 2 or 2 * k >= n:
        raise InvalidParametersError(
            f"need gcd(n,k) >= 2 and 2k < n, got n={n} k={k}"
        )
    cnt = -(-n // (3 * d))
    members = set(range(n))
    for r in range(d):
        for t in range(cnt):
            members.add(n + (r + 3 * t * k) % n)
    size = n + d * cnt
    assert len(members) == size
    return ConstructionResult(frozenset(members), size, "gcd_d", True)


def construct_igraph(n: int, j: int, k: int) -> ConstructionResult:
    """The same inner-rim selections double dominate I(n, j, k) for any j.

    The outer step j never matters: outer vertices are all selected, and a
    cut cycle would have to live on the inner rim, where two adjacent
    unselected vertices always break it.
    """
    if j < 1 or j > k or 2 * j >= n or 2 * k >= n:
        raise InvalidParametersError(
            f"I(n,j,k) needs 1 <= j <= k, 2j < n, 2k < n, got n={n} j={j} k={k}"
        )
    if gcd(n, k) == 1:
        if k < 2:
            raise InvalidParametersError(
                f"the gcd 1 case needs k >= 2, got n={n} k={k}"
            )
        base, tag = construct_gcd1(n, k), "igraph_gcd1"
    else:
        base, tag = construct_gcd_d(n, k), "igraph_gcd_d"
    return ConstructionResult(base.dds, base.claimed_size, tag, True)


@dataclass(frozen=True)
class BoundReport:
    """Closed-form upper bound; `relaxed_three_halves` carries the uniform
    3n/2 bound (exact rational, never floored) where it applies."""

    value: int
    relaxed_three_halves: Fraction | None = None


def upper_bound(n: int, j: int, k: int) -> BoundReport:
    """Closed-form bound on the signed double domination number of I(n, j, k)."""
    if j == 1:
        if k < 1 or 2 * k >= n:
            raise InvalidParametersError(
                f"P(n,k) needs 1 <= k and 2k < n, got n={n} k={k}"
            )
    elif j < 1 or j > k or 2 * j >= n or 2 * k >= n:
        raise InvalidParametersError(
            f"I(n,j,k) needs 1 <= j <= k, 2j < n, 2k < n, got n={n} j={j} k={k}"
        )
    if k == 1:
        return BoundReport(2 * (n // 2 + 1))
    d = gcd(n, k)
    if d == 1:
        t = -(-n // k)
        m = t // 2
        value = n + m * k if t % 2 else 2 * n - m * k
        return BoundReport(value, Fraction(3 * n, 2))
    return BoundReport(n + d * -(-n // (3 * d)))


def build_family(n: int, j: int, k: int) -> FamilyGraph:
    return petersen(n, k) if j == 1 else igraph(n, j, k)


def construct_family(n: int, j: int, k: int) -> ConstructionResult:
    """Dispatch to the construction matching (n, j, k)."""
    if j == 1 and k == 1:
        return construct_pn1(n)
    if j == 1:
        if k < 1 or 2 * k >= n:
            raise InvalidParametersError(
                f"P(n,k) needs 1 <= k and 2k < n, got n={n} k={k}"
            )
        return construct_gcd1(n, k) if gcd(n, k) == 1 else construct_gcd_d(n, k)
    return construct_igraph(n, j, k)


def sweep_cases(
    max_n: int, petersen_k_max: int = 6, igraph_k_max: int = 5
) -> Iterator[tuple[int, int, int]]:
    """All valid (n, j, k) family parameters up to max_n, deterministic order."""
    for n in range(3, max_n + 1):
        yield (n, 1, 1)
        for k in range(2, petersen_k_max + 1):
            if 2 * k < n:
                yield (n, 1, k)
    for n in range(5, max_n + 1):
        for j in range(2, igraph_k_max + 1):
            for k in range(j, igraph_k_max + 1):
                if 2 * k < n:
                    yield (n, j, k)
