"""Shared test utilities: brute-force oracles and hypothesis strategies.

The oracles here work on plain (n, edge list, sign dict) data and do not
call into the package, so a bug in the library cannot hide inside its own
test harness.
"""
from __future__ import annotations

from itertools import combinations

from hypothesis import strategies as st


# ---------------------------------------------------------------- oracles


def brute_cycles(n, edges):
    """Every simple cycle, as a canonical vertex tuple (min first, smaller
    second element picks the direction)."""
    adj = {v: set() for v in range(n)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    found = set()

    def walk(start, path, seen):
        u = path[-1]
        for w in adj[u]:
            if w == start and len(path) >= 3:
                c = tuple(path)
                i = c.index(min(c))
                c = c[i:] + c[:i]
                r = (c[0],) + tuple(reversed(c[1:]))
                found.add(min(c, r))
            elif w not in seen and w > start:
                walk(start, path + [w], seen | {w})

    for s in range(n):
        walk(s, [s], {s})
    return found


def brute_cycle_sign(cycle, signs):
    s = 1
    for i in range(len(cycle)):
        e = tuple(sorted((cycle[i], cycle[(i + 1) % len(cycle)])))
        if signs[e] < 0:
            s = -s
    return s


def brute_negative_cycles(n, edges, signs):
    return {c for c in brute_cycles(n, edges) if brute_cycle_sign(c, signs) < 0}


def brute_is_balanced(n, edges, signs):
    return not brute_negative_cycles(n, edges, signs)


def brute_cut_edges(edges, members):
    return [e for e in edges if (e[0] in members) != (e[1] in members)]


def brute_cut_balanced(n, edges, signs, members):
    cut = brute_cut_edges(edges, members)
    return brute_is_balanced(n, cut, signs)


def closed_neighborhoods(n, edges):
    adj = {v: {v} for v in range(n)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    return adj


def brute_min_k_tuple(n, edges, k):
    """(value, lexicographically first witness), or None if infeasible."""
    adj = closed_neighborhoods(n, edges)
    if any(len(adj[v]) < k for v in range(n)):
        return None
    for size in range(k, n + 1):
        for cand in combinations(range(n), size):
            chosen = set(cand)
            if all(len(adj[v] & chosen) >= k for v in range(n)):
                return size, cand
    return None


def brute_min_signed_dds(n, edges, signs, k=2):
    adj = closed_neighborhoods(n, edges)
    if any(len(adj[v]) < k for v in range(n)):
        return None
    for size in range(k, n + 1):
        for cand in combinations(range(n), size):
            chosen = set(cand)
            if all(len(adj[v] & chosen) >= k for v in range(n)) and brute_cut_balanced(
                n, edges, signs, chosen
            ):
                return size, cand
    return None


# ---------------------------------------------------------------- corpus

K4_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def petersen_edges(n, k):
    out = set()
    for i in range(n):
        out.add(tuple(sorted((i, (i + 1) % n))))
        out.add((i, n + i))
        out.add(tuple(sorted((n + i, n + (i + k) % n))))
    return sorted(out)


# 7 vertices; with sign(0,1) = -1 the cut-balance condition is not monotone:
# {2,4,5,6} works but adding vertex 0 breaks it.
W7_EDGES = [
    (0, 1), (0, 3), (0, 4), (0, 5), (1, 2), (1, 6),
    (2, 3), (2, 4), (3, 6), (4, 5), (5, 6),
]

# (name, n, edges) with n <= 8 throughout; used wherever a fixed small
# corpus is wanted.
CORPUS = [
    ("K1", 1, []),
    ("K2", 2, [(0, 1)]),
    ("path4", 4, [(0, 1), (1, 2), (2, 3)]),
    ("claw", 4, [(0, 1), (0, 2), (0, 3)]),
    ("C5", 5, [(i, (i + 1) % 5) for i in range(4)] + [(0, 4)]),
    ("K4", 4, K4_EDGES),
    ("prism", 6, petersen_edges(3, 1)),
    ("cube", 8, petersen_edges(4, 1)),
    ("W7", 7, W7_EDGES),
    ("K4U2", 8, K4_EDGES + [(a + 4, b + 4) for a, b in K4_EDGES]),
]


# ------------------------------------------------------------- strategies


@st.composite
def graphs(draw, min_n=1, max_n=8):
    """(n, sorted edge list) with arbitrary edge subsets."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    if n < 2:
        return n, []
    pool = [(a, b) for a in range(n) for b in range(a + 1, n)]
    edges = draw(st.lists(st.sampled_from(pool), unique=True, max_size=len(pool)))
    return n, sorted(edges)


@st.composite
def signed_edge_data(draw, min_n=1, max_n=8):
    """(n, edges, {edge: +1/-1})."""
    n, edges = draw(graphs(min_n=min_n, max_n=max_n))
    signs = {e: draw(st.sampled_from((1, -1))) for e in edges}
    return n, edges, signs


@st.composite
def even_graphs(draw, max_n=9):
    """(n, edges) where every degree is even: an XOR of simple cycles."""
    n = draw(st.integers(min_value=3, max_value=max_n))
    picked = set()
    for _ in range(draw(st.integers(min_value=0, max_value=4))):
        length = draw(st.integers(min_value=3, max_value=n))
        verts = draw(
            st.lists(
                st.integers(min_value=0, max_value=n - 1),
                min_size=length,
                max_size=length,
                unique=True,
            )
        )
        for i in range(length):
            e = tuple(sorted((verts[i], verts[(i + 1) % length])))
            picked.symmetric_difference_update({e})
    return n, sorted(picked)
