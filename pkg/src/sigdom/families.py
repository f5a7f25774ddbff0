"""Generators for the cubic rim-and-spoke families and small helpers."""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd

from .graph import Graph


class InvalidParametersError(ValueError):
    """Family parameters outside the validity range."""


@dataclass(frozen=True)
class FamilyGraph:
    """A rim-and-spoke graph with its fixed labeling.

    Outer vertex u_i is index i and inner vertex v_i is index n+i, forever.
    `outer_cycles` / `inner_cycles` list the rim cycles in index form, each
    starting at its smallest vertex and following the +step progression.
    """

    graph: Graph
    n: int
    j: int
    k: int
    spokes: tuple[tuple[int, int], ...]
    outer_cycles: tuple[tuple[int, ...], ...]
    inner_cycles: tuple[tuple[int, ...], ...]

    def u(self, i: int) -> int:
        return i % self.n

    def v(self, i: int) -> int:
        return self.n + (i % self.n)

    def label(self, index: int) -> str:
        return index_to_label(index, self.n)

    def index_of(self, label: str) -> int:
        return label_to_index(label, self.n)


_LABEL_RE = re.compile(r"^([uv])(\d+)$")


def label_to_index(label: str, n: int) -> int:
    m = _LABEL_RE.match(label)
    if not m:
        raise ValueError(f"bad vertex label {label!r} (expected u<i> or v<i>)")
    i = int(m.group(2))
    if i >= n:
        raise ValueError(f"label {label!r} out of range for n={n}")
    return i if m.group(1) == "u" else n + i


def index_to_label(index: int, n: int) -> str:
    if not (0 <= index < 2 * n):
        raise ValueError(f"index {index} out of range for n={n}")
    return f"u{index}" if index < n else f"v{index - n}"


def _rim_cycles(n: int, step: int, offset: int) -> tuple[tuple[int, ...], ...]:
    d = gcd(n, step)
    return tuple(
        tuple(offset + (r + t * step) % n for t in range(n // d)) for r in range(d)
    )


def igraph(n: int, j: int, k: int) -> FamilyGraph:
    """I(n, j, k): outer rim at step j, inner rim at step k, plus the n spokes.

    Requires 1 <= j <= k, 2j < n, and 2k < n so that the rims are simple
    cycles and the graph is cubic on 2n vertices.
    """
    if j < 1 or j > k:
        raise InvalidParametersError(f"I(n,j,k) needs 1 <= j <= k, got j={j} k={k}")
    if 2 * j >= n or 2 * k >= n:
        raise InvalidParametersError(
            f"I(n,j,k) needs 2j < n and 2k < n, got n={n} j={j} k={k}"
        )
    edges: list[tuple[int, int]] = []
    for i in range(n):
        edges.append((i, (i + j) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    return FamilyGraph(
        graph=Graph(2 * n, edges),
        n=n,
        j=j,
        k=k,
        spokes=tuple((i, n + i) for i in range(n)),
        outer_cycles=_rim_cycles(n, j, 0),
        inner_cycles=_rim_cycles(n, k, n),
    )


def petersen(n: int, k: int) -> FamilyGraph:
    """P(n, k) = I(n, 1, k): one outer n-cycle, inner rim at step k."""
    if k < 1 or 2 * k >= n:
        raise InvalidParametersError(f"P(n,k) needs 1 <= k and 2k < n, got n={n} k={k}")
    return igraph(n, 1, k)


def k4_union(m: int) -> Graph:
    """Disjoint union of m complete graphs on 4 vertices (component c = 4c..4c+3)."""
    if m < 1:
        raise InvalidParametersError(f"need at least one component, got m={m}")
    edges = [
        (4 * c + a, 4 * c + b) for c in range(m) for a in range(4) for b in range(a + 1, 4)
    ]
    return Graph(4 * m, edges)


def inner_blocks(n: int, k: int) -> tuple[frozenset[int], ...]:
    """Partition of the inner vertices into ceil(n/k) consecutive index blocks.

    Blocks 1..t-1 have size k; the last block keeps the remaining
    n - (t-1)k indices.  Only defined for gcd(n, k) = 1 with k >= 2, where
    the inner rim is a single cycle.  Members are graph indices (n + i).
    """
    if k < 2 or k >= n or gcd(n, k) != 1:
        raise InvalidParametersError(
            f"blocks need 2 <= k < n with gcd(n,k) = 1, got n={n} k={k}"
        )
    t = -(-n // k)
    return tuple(
        frozenset(range(n + i * k, n + min((i + 1) * k, n))) for i in range(t)
    )
