"""Brute-force ground truth for small lengths.

Finding a maximum equi-difference CAC is a maximum clique problem: one
vertex per distinct difference set, edges between disjoint ones. The
solver is exact branch and bound with greedy coloring bounds, fine for
desk-scale L; anything bigger raises BudgetExceeded instead of silently
returning a lower bound.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import combinations
from math import gcd

from .codes import (
    Certificate,
    Code,
    EquiDiffCodeword,
    difference_set,
    support_difference_set,
    verify_cac,
)
from .errors import BudgetExceeded

DEFAULT_NODE_BUDGET = 5_000_000
# desk-scale length caps per weight; override via the cap argument
_LENGTH_CAPS = {3: 200}
_DEFAULT_CAP = 120
_SUPPORT_CAP = 40


@dataclass(frozen=True)
class DisjointnessGraph:
    L: int
    w: int
    vertices: tuple[frozenset[int], ...]
    generators: tuple[int, ...]
    adjacency: tuple[int, ...]  # bit j of row i set iff vertices i, j disjoint


def build_graph(L: int, w: int) -> DisjointnessGraph:
    """One vertex per distinct difference set, largest sets first."""
    if L < w or w < 2:
        raise ValueError(f"need L >= w >= 2, got ({L},{w})")
    seen: dict[frozenset[int], int] = {}
    for g in range(1, L):
        if L // gcd(L, g) < w:
            continue
        ds = difference_set(EquiDiffCodeword(L, w, g)).elements
        if ds not in seen:
            seen[ds] = g
    items = sorted(seen.items(), key=lambda t: (-len(t[0]), t[1]))
    vertices = tuple(ds for ds, _ in items)
    generators = tuple(g for _, g in items)
    n = len(items)
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if vertices[i].isdisjoint(vertices[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return DisjointnessGraph(L, w, vertices, generators, tuple(adj))


def _greedy_color(P: int, adj) -> tuple[list[int], list[int]]:
    # partition P into independent sets; a clique takes <= 1 vertex per class
    order: list[int] = []
    colors: list[int] = []
    color = 0
    rest = P
    while rest:
        color += 1
        avail = rest
        while avail:
            v = (avail & -avail).bit_length() - 1
            bit = 1 << v
            avail &= ~bit & ~adj[v]
            rest &= ~bit
            order.append(v)
            colors.append(color)
    return order, colors


def _max_clique(adj, n: int, budget: int) -> tuple[int, list[int], int]:
    """Exact maximum clique over the bitmask adjacency; returns (size, members, nodes)."""
    if n == 0:
        return 0, [], 0
    full = (1 << n) - 1

    # greedy incumbent in vertex order seeds the pruning
    best: list[int] = []
    mask = full
    while mask:
        v = (mask & -mask).bit_length() - 1
        best.append(v)
        mask &= adj[v]
    best_size = len(best)

    nodes = 0
    current: list[int] = []

    def expand(size: int, P: int) -> None:
        nonlocal nodes, best, best_size
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(
                f"node budget {budget} exhausted", best=list(best), size=best_size
            )
        order, colors = _greedy_color(P, adj)
        work = P
        for i in range(len(order) - 1, -1, -1):
            if size + colors[i] <= best_size:
                return
            v = order[i]
            bit = 1 << v
            work &= ~bit
            current.append(v)
            sub = work & adj[v]
            if sub:
                expand(size + 1, sub)
            elif size + 1 > best_size:
                best = current.copy()
                best_size = size + 1
            current.pop()

    expand(0, full)
    return best_size, best, nodes


@dataclass(frozen=True)
class OracleResult:
    L: int
    w: int
    size: int
    witness: Code
    exact: bool
    nodes: int

    def to_json(self) -> dict:
        return {
            "L": self.L,
            "w": self.w,
            "max": self.size,
            "witness": self.witness.canonical_generators(),
            "exact": self.exact,
        }


def max_equi_diff_cac(
    L: int, w: int, budget: int = DEFAULT_NODE_BUDGET, cap: int | None = None
) -> OracleResult:
    """Exact M^e(L, w) with a witness code.

    Refuses lengths above the desk-scale cap (and node counts above
    budget) by raising BudgetExceeded; on a node-budget stop the error
    carries the incumbent as a non-exact lower bound.
    """
    if cap is None:
        cap = _LENGTH_CAPS.get(w, _DEFAULT_CAP)
    if L > cap:
        raise BudgetExceeded(f"L = {L} above cap {cap} for w = {w}; pass cap to override")
    graph = build_graph(L, w)
    try:
        size, members, nodes = _max_clique(graph.adjacency, len(graph.vertices), budget)
    except BudgetExceeded as e:
        if e.best is not None:
            gens = [graph.generators[i] for i in e.best]
            e.best = Code.from_generators(L, w, gens)
        raise
    gens = sorted(graph.generators[i] for i in members)
    witness = Code.from_generators(L, w, gens)
    assert verify_cac(witness).ok and len(witness) == size
    return OracleResult(L, w, size, witness, True, nodes)


def certify(
    cert: Certificate, budget: int = DEFAULT_NODE_BUDGET, cap: int | None = None
) -> Certificate:
    """Fill oracle_max and optimal_by_oracle; never downgrades other flags."""
    res = max_equi_diff_cac(cert.code.length, cert.code.weight, budget, cap)
    flags = replace(cert.flags, optimal_by_oracle=len(cert.code) == res.size)
    return replace(cert, flags=flags, oracle_max=res.size)


def max_general_cac(
    L: int,
    w: int,
    budget: int = DEFAULT_NODE_BUDGET,
    cap: int = _SUPPORT_CAP,
) -> tuple[int, list[frozenset[int]]]:
    """Maximum CAC over arbitrary w-subsets of Z_L (not just equi-difference).

    Difference sets are translation invariant, so supports are normalized
    to contain 0. Tiny L only; this exists to cross-check that the
    equi-difference maximum never exceeds the unrestricted one.
    """
    if L < w or w < 2:
        raise ValueError(f"need L >= w >= 2, got ({L},{w})")
    if L > cap:
        raise BudgetExceeded(f"L = {L} above support-set cap {cap}")
    seen: dict[frozenset[int], frozenset[int]] = {}
    for rest in combinations(range(1, L), w - 1):
        sup = frozenset((0,) + rest)
        ds = support_difference_set(L, sup).elements
        if ds not in seen:
            seen[ds] = sup
    items = sorted(seen.items(), key=lambda t: (-len(t[0]), sorted(t[1])))
    n = len(items)
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if items[i][0].isdisjoint(items[j][0]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    size, members, _ = _max_clique(adj, n, budget)
    return size, [items[i][1] for i in members]
