"""Dominated vertices, fold reductions, irreducible cores."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import DomainError, ResourceError
from .graphs import (Graph, bits, find_isomorphism, induced_subgraph,
                     validate_involution)

CORE_ISO_CAP = 12


@dataclass(frozen=True)
class DominationRecord:
    u: int          # dominating vertex
    v: int          # dominated vertex
    kind: str       # "equivalent" | "strong"


@dataclass(frozen=True)
class ReductionTrace:
    removed: tuple[tuple[int, int], ...]   # (vertex, dominator), original labels
    core_vertices: tuple[int, ...]

    def to_json_obj(self) -> dict:
        return {"removed": [list(p) for p in self.removed],
                "core_vertices": list(self.core_vertices)}


def dominated_pairs(g: Graph) -> list[DominationRecord]:
    """All ordered (u,v), u != v, with N(v) a subset of N(u)."""
    out = []
    for v in range(g.n):
        nv = g.adj[v]
        for u in range(g.n):
            if u == v:
                continue
            if nv & ~g.adj[u] == 0:
                kind = "equivalent" if nv == g.adj[u] else "strong"
                out.append(DominationRecord(u, v, kind))
    return out


def _dominators_of(g: Graph, v: int) -> list[int]:
    nv = g.adj[v]
    return [u for u in range(g.n) if u != v and nv & ~g.adj[u] == 0]


def fold(g: Graph, v: int) -> Graph:
    """Remove the dominated vertex v (reindexing the rest downward)."""
    if not 0 <= v < g.n:
        raise DomainError(f"vertex {v} out of range")
    if not _dominators_of(g, v):
        raise DomainError(f"vertex {v} is not dominated")
    return induced_subgraph(g, g.vertex_mask & ~(1 << v))


def smallest_policy(records: list[DominationRecord]) -> DominationRecord:
    return min(records, key=lambda r: (r.v, r.u))


def random_policy(seed: int):
    rng = random.Random(seed)

    def pick(records: list[DominationRecord]) -> DominationRecord:
        return rng.choice(records)

    return pick


def irreducible_core(g: Graph, policy=None) -> tuple[Graph, ReductionTrace]:
    """Fold policy-chosen dominated vertices until none remains."""
    if policy is None:
        policy = smallest_policy
    cur = g
    orig = list(range(g.n))
    removed = []
    while True:
        records = dominated_pairs(cur)
        if not records:
            break
        r = policy(records)
        removed.append((orig[r.v], orig[r.u]))
        cur = induced_subgraph(cur, cur.vertex_mask & ~(1 << r.v))
        del orig[r.v]
    return cur, ReductionTrace(tuple(removed), tuple(orig))


def core_uniqueness_check(g: Graph, trials: int) -> bool:
    """Do `trials` random tie-break policies all reach isomorphic cores?"""
    if g.n > CORE_ISO_CAP:
        raise ResourceError(f"core uniqueness capped at {CORE_ISO_CAP} vertices")
    base, _ = irreducible_core(g)
    for seed in range(trials):
        other, _ = irreducible_core(g, random_policy(seed))
        if find_isomorphism(base, other) is None:
            return False
    return True


def invariant_core(g: Graph, gamma) -> tuple[int, Graph]:
    """Greedy gamma-invariant reduction: drop orbits dominated from outside.

    Returns (vertex mask of the invariant set reached, induced subgraph).
    """
    gamma = validate_involution(g, gamma)
    cur = g
    cur_gamma = list(gamma)
    orig = list(range(g.n))
    while True:
        progress = False
        for v in range(cur.n):
            gv = cur_gamma[v]
            if gv < v:
                continue
            orbit = {v, gv}
            if all(any(u not in orbit for u in _dominators_of(cur, x))
                   for x in orbit):
                keep = cur.vertex_mask
                for x in orbit:
                    keep &= ~(1 << x)
                kept = list(bits(keep))
                pos = {w: i for i, w in enumerate(kept)}
                cur = induced_subgraph(cur, keep)
                cur_gamma = [pos[cur_gamma[w]] for w in kept]
                orig = [orig[w] for w in kept]
                progress = True
                break
        if not progress:
            break
    mask = 0
    for w in orig:
        mask |= 1 << w
    return mask, cur
