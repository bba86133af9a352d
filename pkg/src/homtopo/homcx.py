"""Multihomomorphism complexes Hom(G,H), their maps, links, and relatives.

A cell assigns to every vertex x of G a nonempty mask eta(x) over V(H) such
that eta(x) x eta(y) lands in E(H) for every edge (x,y) of G (loops
included).  Cells are stored as packed int keys (see homtopo._kernels) in
canonical order: dimension, then lexicographic on the mask tuple.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from ._kernels import enumerate_hom_cells
from .errors import BudgetError, DomainError
from .graphs import Graph, bits, common_neighbors, is_homomorphism
from .topology import SimplicialComplex

CELL_BUDGET = 5_000_000


@dataclass(frozen=True)
class GraphMap:
    """A total vertex map between two graphs (not necessarily edge-preserving)."""

    source: Graph
    target: Graph
    f: tuple[int, ...]

    def __post_init__(self):
        if len(self.f) != self.source.n:
            raise DomainError("map length != source vertex count")
        if any(not 0 <= y < self.target.n for y in self.f):
            raise DomainError("map value outside the target graph")

    def is_hom(self) -> bool:
        return is_homomorphism(self.source, self.target, self.f)

    def __call__(self, v: int) -> int:
        return self.f[v]


class HomComplex:
    """The polyhedral complex of multihomomorphisms G -> H."""

    def __init__(self, g: Graph, h: Graph, keys):
        self.g = g
        self.h = h
        self.n_g = g.n
        self.n_h = h.n
        self.keys = sorted(keys, key=lambda k: (k.bit_count(), k))
        self._index: dict[int, int] | None = None
        self._chain = None

    def __len__(self):
        return len(self.keys)

    # ---- packing helpers

    def cell_of(self, key: int) -> tuple[int, ...]:
        n, w = self.n_g, self.n_h
        full = (1 << w) - 1
        return tuple(key >> ((n - 1 - x) * w) & full for x in range(n))

    def key_of(self, cell) -> int:
        if len(cell) != self.n_g:
            raise DomainError("cell length != vertex count of the source")
        key = 0
        for x, m in enumerate(cell):
            key |= m << ((self.n_g - 1 - x) * self.n_h)
        return key

    def dim_of_key(self, key: int) -> int:
        return key.bit_count() - self.n_g

    def index(self) -> dict[int, int]:
        if self._index is None:
            self._index = {k: i for i, k in enumerate(self.keys)}
        return self._index

    def __contains__(self, cell) -> bool:
        return self.key_of(cell) in self.index()

    def cells(self):
        return [self.cell_of(k) for k in self.keys]

    def zero_cells(self):
        """The 0-cells as plain vertex maps, in lexicographic order."""
        out = []
        for k in self.keys:
            if k.bit_count() == self.n_g:
                out.append(tuple(m.bit_length() - 1 for m in self.cell_of(k)))
        return sorted(out)

    def facet_keys(self, key: int):
        n, w = self.n_g, self.n_h
        full = (1 << w) - 1
        out = []
        for x in range(n):
            sh = (n - 1 - x) * w
            m = key >> sh & full
            if m.bit_count() >= 2:
                for v in bits(m):
                    out.append(key ^ (1 << (sh + v)))
        return out

    @property
    def dim(self) -> int:
        return max((self.dim_of_key(k) for k in self.keys), default=0)

    def chain_data(self):
        if self._chain is None:
            idx = self.index()
            dims = [self.dim_of_key(k) for k in self.keys]
            facets = [sorted(idx[f] for f in self.facet_keys(k)) for k in self.keys]
            self._chain = (dims, facets)
        return self._chain

    def subcomplex(self, keys) -> "HomComplex":
        """Same ambient G,H, restricted key set (caller keeps it face-closed)."""
        sub = HomComplex(self.g, self.h, keys)
        return sub

    def cell_label(self, i: int) -> str:
        cell = self.cell_of(self.keys[i])
        return "(" + ",".join("{" + ",".join(map(str, bits(m))) + "}"
                              for m in cell) + ")"

    def to_json_obj(self, emit_cells: bool = False) -> dict:
        from .topology import f_vector
        obj: dict = {"f_vector": list(f_vector(self))}
        if emit_cells:
            obj["cells"] = [list(self.cell_of(k)) for k in self.keys]
        return obj


def build_hom(g: Graph, h: Graph, budget: int | None = None) -> HomComplex:
    """Enumerate all of Hom(g,h); `budget` caps the cell count."""
    if g.n < 1:
        raise DomainError("source graph needs at least one vertex")
    if budget is None:
        budget = CELL_BUDGET
    env = os.environ.get("HOMTOPO_BUDGET_CELLS")
    if env:
        budget = min(budget, int(env))
    keys = enumerate_hom_cells(g.adj, h.adj, budget)
    return HomComplex(g, h, keys)


def face_relation(x: HomComplex, a, b) -> bool:
    """Is cell a a face of cell b (entrywise mask inclusion)?"""
    for c in (a, b):
        if c not in x:
            raise DomainError(f"cell {tuple(c)} is not in this complex")
    return all(ma & ~mb == 0 for ma, mb in zip(a, b))


def _mask_image(mask: int, f) -> int:
    out = 0
    for v in bits(mask):
        out |= 1 << f[v]
    return out


def covariant_map(phi: GraphMap, fixed: Graph):
    """Cellwise map Hom(fixed, phi.source) -> Hom(fixed, phi.target)."""
    if not phi.is_hom():
        raise DomainError("the pushed map must be a graph homomorphism")

    def apply(cell):
        return tuple(_mask_image(m, phi.f) for m in cell)

    return apply


def contravariant_map(phi: GraphMap, fixed: Graph):
    """Cellwise map Hom(phi.target, fixed) -> Hom(phi.source, fixed)."""
    if not phi.is_hom():
        raise DomainError("the pulled map must be a graph homomorphism")

    def apply(cell):
        return tuple(cell[phi.f[v]] for v in range(phi.source.n))

    return apply


@dataclass(frozen=True)
class NonCubical:
    """Diagnostic for a 0-cell without a cubical neighborhood."""

    vertex: int
    size: int


def link_data(x: HomComplex, phi):
    """(M(phi), per-vertex A_phi, link of the 0-cell phi) in x.

    A_phi(v) = common H-neighbors of the phi-image of N_G(v); M(phi) holds
    the v with two choices.  When every |A_phi(v)| is 1 or 2 the link is the
    simplicial complex on M(phi) whose faces sigma allow all switches
    simultaneously; otherwise the third component is a NonCubical diagnostic.
    """
    if not x.h.is_loopless():
        raise DomainError("link analysis needs a loopless target")
    if len(phi) != x.n_g or any(m.bit_count() != 1 for m in phi):
        raise DomainError("phi must be a 0-cell (singleton masks)")
    if phi not in x:
        raise DomainError("phi is not a cell of this complex")
    g, h = x.g, x.h
    a_phi = []
    for v in range(g.n):
        u = 0
        for w in bits(g.adj[v]):
            u |= phi[w]
        a_phi.append(common_neighbors(h, u))
    m_mask = 0
    for v, a in enumerate(a_phi):
        if a.bit_count() == 2:
            m_mask |= 1 << v
    bad = next(((v, a.bit_count()) for v, a in enumerate(a_phi)
                if a.bit_count() not in (1, 2)), None)
    if bad is not None:
        return m_mask, tuple(a_phi), NonCubical(*bad)
    alt = {v: a_phi[v] & ~phi[v] for v in bits(m_mask)}
    # sigma is a face iff switched choices stay compatible across G-edges
    ok_pair = {}
    for v in bits(m_mask):
        av = alt[v].bit_length() - 1
        for w in bits(m_mask):
            aw = alt[w].bit_length() - 1
            if g.adj[v] >> w & 1:
                ok_pair[v, w] = bool(h.adj[av] >> aw & 1)
            else:
                ok_pair[v, w] = True
    sims = []

    def grow(mask, cand):
        for v in bits(cand):
            if any(not ok_pair[v, w] for w in bits(mask)):
                continue
            if not ok_pair[v, v]:
                continue
            m2 = mask | (1 << v)
            sims.append(m2)
            grow(m2, cand & ~((1 << (v + 1)) - 1))

    grow(0, m_mask)
    return m_mask, tuple(a_phi), SimplicialComplex(g.n, sims)


def neighborhood_complex(g: Graph) -> SimplicialComplex:
    """Simplices = vertex sets with a common neighbor."""
    sims = set()
    for v in range(g.n):
        nb = g.adj[v]
        sub = nb
        while sub:
            sims.add(sub)
            sub = (sub - 1) & nb
    return SimplicialComplex(g.n, sims)


def independence_complex(g: Graph) -> SimplicialComplex:
    """Simplices = independent sets of a loopless graph."""
    if not g.is_loopless():
        raise DomainError("independence complex needs a loopless graph")
    sims = []

    def grow(mask, cand):
        for v in bits(cand):
            m2 = mask | (1 << v)
            sims.append(m2)
            grow(m2, cand & ~g.adj[v] & ~((1 << (v + 1)) - 1))

    grow(0, g.vertex_mask)
    return SimplicialComplex(g.n, sims)


def count_hom_components(g: Graph, h: Graph, budget: int = 10**8) -> int:
    """b_0 of Hom(g,h) without building cells.

    0-cells are the homomorphisms; two are joined by an edge of the complex
    iff they differ at exactly one vertex of g (the doubled mask is then
    automatically a 1-cell), so components come from hashing maps with one
    coordinate wildcarded.
    """
    from .graphs import enumerate_homomorphisms

    homs = enumerate_homomorphisms(g, h, budget)
    parent = list(range(len(homs)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for x in range(g.n):
        if g.adj[x] >> x & 1:
            # looped source vertex: the two values must also be H-adjacent
            byval: dict[tuple, dict[int, int]] = {}
            for i, f in enumerate(homs):
                key = f[:x] + (-1,) + f[x + 1:]
                byval.setdefault(key, {}).setdefault(f[x], i)
            for vals in byval.values():
                items = sorted(vals.items())
                for a, i in items:
                    for b, j in items:
                        if a < b and h.adj[a] >> b & 1:
                            parent[find(i)] = find(j)
        else:
            seen: dict[tuple, int] = {}
            for i, f in enumerate(homs):
                key = f[:x] + (-1,) + f[x + 1:]
                j = seen.setdefault(key, i)
                if j != i:
                    parent[find(i)] = find(j)
    return len({find(i) for i in range(len(homs))})
