"""Finite graphs on at most 64 vertices, with loops, as bitmask adjacency.

Vertices are 0..n-1.  The neighborhood of v is the int mask `adj[v]`; a loop
is v appearing in its own neighborhood.  All graphs are undirected
(symmetric adjacency).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from itertools import combinations

from .errors import BudgetError, DomainError, ResourceError

MAX_VERTICES = 64
ISO_CAP = 16
HOM_BUDGET = 10**8


def bits(mask: int):
    """Positions of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise DomainError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise DomainError("adjacency row count != vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise DomainError(f"row {v} mentions vertices >= {self.n}")
        for u in range(self.n):
            for v in bits(self.adj[u]):
                if not self.adj[v] >> u & 1:
                    raise DomainError(f"adjacency not symmetric at ({u},{v})")

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_loop(self, v: int) -> bool:
        return bool(self.adj[v] >> v & 1)

    def is_loopless(self) -> bool:
        return all(not self.has_loop(v) for v in range(self.n))

    def edge_pairs(self) -> list[tuple[int, int]]:
        """Undirected edges as (u, v) with u <= v; a loop appears as (v, v)."""
        out = []
        for u in range(self.n):
            for v in bits(self.adj[u] >> u << u):
                out.append((u, v))
        return out

    def num_edges(self) -> int:
        return len(self.edge_pairs())


def from_edges(n: int, edges) -> Graph:
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise DomainError(f"edge ({u},{v}) outside 0..{n - 1}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


# ---------------------------------------------------------------- families

def complete(n: int, looped: bool = False) -> Graph:
    full = (1 << n) - 1
    if looped:
        return Graph(n, tuple(full for _ in range(n)))
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def cycle(m: int) -> Graph:
    if m < 3:
        raise DomainError(f"cycle needs >= 3 vertices, got {m}")
    return from_edges(m, [(v, (v + 1) % m) for v in range(m)])


def path(n: int) -> Graph:
    if n < 1:
        raise DomainError(f"path needs >= 1 vertex, got {n}")
    return from_edges(n, [(v, v + 1) for v in range(n - 1)])


def q_graph() -> Graph:
    """Two vertices: a looped vertex 0 joined to a plain vertex 1."""
    return Graph(2, (0b11, 0b01))


def kneser(k: int, n: int) -> Graph:
    """k-subsets of an n-set, adjacent when disjoint; vertices in lex order."""
    if not (1 <= k and 2 * k <= n):
        raise DomainError(f"kneser needs 1 <= k <= n/2, got k={k}, n={n}")
    subsets = [sum(1 << i for i in c) for c in combinations(range(n), k)]
    m = len(subsets)
    if m > MAX_VERTICES:
        raise DomainError(f"kneser({k},{n}) has {m} > {MAX_VERTICES} vertices")
    adj = [0] * m
    for a in range(m):
        for b in range(a + 1, m):
            if not subsets[a] & subsets[b]:
                adj[a] |= 1 << b
                adj[b] |= 1 << a
    return Graph(m, tuple(adj))


def petersen() -> Graph:
    return kneser(2, 5)


def make_family(kind: str, *params: int) -> Graph:
    """Named families: K, Ko (looped complete), C, L (path), Q, Kneser."""
    builders = {
        "K": lambda n: complete(n),
        "Ko": lambda n: complete(n, looped=True),
        "C": cycle,
        "L": path,
        "Q": q_graph,
        "Kneser": kneser,
    }
    if kind not in builders:
        raise DomainError(f"unknown family {kind!r}")
    try:
        return builders[kind](*params)
    except TypeError:
        raise DomainError(f"family {kind} got parameters {params}") from None


_NAME_RE = re.compile(r"^(K)(\d+)(o?)$|^(C|L)(\d+)$|^Kneser:(\d+),(\d+)$")


def parse_graph_name(name: str) -> Graph:
    """Compact family names: K5, K4o, C7, L3, Q, Kneser:2,5, petersen."""
    if name == "Q":
        return q_graph()
    if name.lower() == "petersen":
        return petersen()
    m = _NAME_RE.match(name)
    if not m:
        raise DomainError(f"cannot parse graph name {name!r}")
    if m.group(1):
        return make_family("Ko" if m.group(3) else "K", int(m.group(2)))
    if m.group(4):
        return make_family(m.group(4), int(m.group(5)))
    return make_family("Kneser", int(m.group(6)), int(m.group(7)))


# ------------------------------------------------------------- operations

def complement(g: Graph, looped: bool = False) -> Graph:
    """Complement within V x V; `looped` complements the diagonal too."""
    full = g.vertex_mask
    if looped:
        return Graph(g.n, tuple(full & ~row for row in g.adj))
    return Graph(g.n, tuple(full & ~g.adj[v] & ~(1 << v) for v in range(g.n)))


def common_neighbors(g: Graph, a: int) -> int:
    """Mask of vertices adjacent to everything in `a`; full mask for a=0."""
    if a & ~g.vertex_mask:
        raise DomainError("vertex set outside the graph")
    out = g.vertex_mask
    for v in bits(a):
        out &= g.adj[v]
    return out


def direct_product(g: Graph, h: Graph) -> Graph:
    """Categorical product; vertex (x, y) is numbered x*|V(h)| + y."""
    n = g.n * h.n
    if n > MAX_VERTICES:
        raise DomainError(f"product has {n} > {MAX_VERTICES} vertices")
    adj = [0] * n
    for x in range(g.n):
        for y in range(h.n):
            row = 0
            for x2 in bits(g.adj[x]):
                for y2 in bits(h.adj[y]):
                    row |= 1 << (x2 * h.n + y2)
            adj[x * h.n + y] = row
    return Graph(n, tuple(adj))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """g's vertices keep their numbers; h's are shifted up by |V(g)|."""
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise DomainError(f"union has {n} > {MAX_VERTICES} vertices")
    adj = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(n, tuple(adj))


def loop_completion(g: Graph) -> Graph:
    return Graph(g.n, tuple(g.adj[v] | (1 << v) for v in range(g.n)))


def induced_subgraph(g: Graph, s: int) -> Graph:
    """Subgraph on the vertex mask `s`, reindexed in ascending vertex order."""
    if s & ~g.vertex_mask:
        raise DomainError("vertex set outside the graph")
    keep = list(bits(s))
    pos = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        row = 0
        for w in bits(g.adj[v] & s):
            row |= 1 << pos[w]
        adj.append(row)
    return Graph(len(keep), tuple(adj))


def is_homomorphism(g: Graph, h: Graph, f) -> bool:
    """Does the vertex map f (sequence over V(g)) send edges to edges?"""
    if len(f) != g.n or any(not 0 <= x < h.n for x in f):
        raise DomainError("map is not a total function V(g) -> V(h)")
    for u in range(g.n):
        for v in bits(g.adj[u] >> u << u):
            if not h.adj[f[u]] >> f[v] & 1:
                return False
    return True


def enumerate_homomorphisms(g: Graph, h: Graph, budget: int = HOM_BUDGET):
    """All graph homomorphisms g -> h as tuples, lexicographically sorted.

    Plain backtracking over single vertices in natural order; `budget` caps
    the number of extension attempts.
    """
    if g.n == 0:
        return [()]
    # earlier[u] = already-assigned neighbors of u (natural order)
    earlier = [list(bits(g.adj[u] & ((1 << u) - 1))) for u in range(g.n)]
    out = []
    f = [0] * g.n
    work = 0

    def go(u: int):
        nonlocal work
        for y in range(h.n):
            work += 1
            if work > budget:
                raise BudgetError(f"homomorphism budget {budget} exceeded",
                                  found=len(out))
            if g.adj[u] >> u & 1 and not h.adj[y] >> y & 1:
                continue
            if any(not h.adj[y] >> f[w] & 1 for w in earlier[u]):
                continue
            f[u] = y
            if u + 1 == g.n:
                out.append(tuple(f))
            else:
                go(u + 1)

    go(0)
    return out


def chromatic_number(g: Graph) -> int:
    """Least k with a proper k-coloring; loops are out of scope."""
    if not g.is_loopless():
        raise DomainError("chromatic number undefined with loops")
    if g.n == 0:
        return 0
    if not any(g.adj):
        return 1
    order = sorted(range(g.n), key=lambda v: -g.degree(v))

    def colorable(k: int) -> bool:
        color = [-1] * g.n

        def go(i: int, used: int) -> bool:
            if i == g.n:
                return True
            v = order[i]
            seen = {color[w] for w in bits(g.adj[v]) if color[w] >= 0}
            for c in range(min(used + 1, k)):
                if c in seen:
                    continue
                color[v] = c
                if go(i + 1, max(used, c + 1)):
                    return True
                color[v] = -1
            return False

        return go(0, 0)

    lo = 2
    while not colorable(lo):
        lo += 1
    return lo


def max_independent_set(g: Graph) -> int:
    """Size of the largest independent set (looped vertices never qualify)."""
    closed = [g.adj[v] | (1 << v) for v in range(g.n)]
    avail0 = 0
    for v in range(g.n):
        if not g.has_loop(v):
            avail0 |= 1 << v
    best = 0

    def go(avail: int, size: int):
        nonlocal best
        if size + avail.bit_count() <= best:
            return
        if not avail:
            best = max(best, size)
            return
        v = (avail & -avail).bit_length() - 1
        go(avail & ~closed[v], size + 1)
        go(avail & ~(1 << v), size)

    go(avail0, 0)
    return best


# ------------------------------------------------------------ isomorphism

def _refine(g: Graph) -> list[int]:
    # iterated neighbor-color multiset refinement
    col = [(g.degree(v), g.has_loop(v)) for v in range(g.n)]
    ids = {c: i for i, c in enumerate(sorted(set(col)))}
    col = [ids[c] for c in col]
    for _ in range(g.n):
        sig = [(col[v], tuple(sorted(col[w] for w in bits(g.adj[v]))))
               for v in range(g.n)]
        ids = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ids[s] for s in sig]
        if new == col:
            break
        col = new
    return col


def find_isomorphism(g: Graph, h: Graph):
    """A vertex bijection g -> h preserving adjacency, or None."""
    if g.n > ISO_CAP or h.n > ISO_CAP:
        raise ResourceError(f"isomorphism search capped at {ISO_CAP} vertices")
    if g.n != h.n or g.num_edges() != h.num_edges():
        return None
    cg, ch = _refine(g), _refine(h)
    if sorted(cg) != sorted(ch):
        return None
    # match rarest color classes first
    sizes = {c: cg.count(c) for c in set(cg)}
    order = sorted(range(g.n), key=lambda v: (sizes[cg[v]], cg[v], v))
    f = [-1] * g.n
    used = [False] * h.n

    def go(i: int) -> bool:
        if i == g.n:
            return True
        v = order[i]
        for w in range(h.n):
            if used[w] or ch[w] != cg[v] or g.has_loop(v) != h.has_loop(w):
                continue
            ok = True
            for u in order[:i]:
                gu = bool(g.adj[v] >> u & 1)
                hu = bool(h.adj[w] >> f[u] & 1)
                if gu != hu:
                    ok = False
                    break
            if ok:
                f[v] = w
                used[w] = True
                if go(i + 1):
                    return True
                f[v] = -1
                used[w] = False
        return False

    return tuple(f) if go(0) else None


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


def validate_involution(g: Graph, gamma) -> tuple[int, ...]:
    """Check gamma is a graph automorphism of order dividing 2; return it."""
    gamma = tuple(gamma)
    if sorted(gamma) != list(range(g.n)):
        raise DomainError("gamma is not a vertex permutation")
    if any(gamma[gamma[v]] != v for v in range(g.n)):
        raise DomainError("gamma is not an involution")
    for v in range(g.n):
        image = 0
        for w in bits(g.adj[v]):
            image |= 1 << gamma[w]
        if image != g.adj[gamma[v]]:
            raise DomainError("gamma is not a graph automorphism")
    return gamma


# --------------------------------------------------------------------- io

def to_json_obj(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edge_pairs()]}


def from_json_obj(obj) -> Graph:
    try:
        n = obj["n"]
        edges = obj["edges"]
    except (TypeError, KeyError) as exc:
        raise DomainError(f"graph object missing field: {exc}") from None
    return from_edges(n, [tuple(e) for e in edges])


def to_json(g: Graph) -> str:
    return json.dumps(to_json_obj(g), separators=(",", ":"), sort_keys=True)


def from_json(text: str) -> Graph:
    return from_json_obj(json.loads(text))


def to_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines += [f"{u} {v}" for u, v in g.edge_pairs()]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    lines = [ln for ln in (s.strip() for s in text.splitlines())
             if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("n "):
        raise DomainError("edge list must start with a header line 'n <count>'")
    n = int(lines[0].split()[1])
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise DomainError(f"bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return from_edges(n, edges)


def load_graph(path: str) -> Graph:
    """Read a graph file: JSON if it parses as JSON, else edge-list text."""
    with open(path) as fh:
        text = fh.read()
    try:
        obj = json.loads(text)
    except ValueError:
        return from_edge_list(text)
    return from_json_obj(obj)
