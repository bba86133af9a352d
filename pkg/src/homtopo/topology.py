"""Poset-level topology: order complexes, GF(2) homology, components, flags.

Every complex object in the package exposes `chain_data() -> (dims, facets)`
where `dims[i]` is the cell dimension and `facets[i]` lists the indices of
the codimension-1 faces of cell i (each exactly once: regular CW / ordered
Delta-complex boundary over GF(2)).  The functions here consume only that.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from ._kernels import gf2_rank
from .errors import ConsistencyError, DomainError, ResourceError
from .graphs import bits, disjoint_union

MATRIX_BIT_CAP = 1 << 30


@dataclass(frozen=True)
class BettiProfile:
    betti: tuple[int, ...]
    euler: int
    f_vector: tuple[int, ...]

    def to_json_obj(self) -> dict:
        return {"betti": list(self.betti), "euler": self.euler,
                "f_vector": list(self.f_vector)}


class SimplicialComplex:
    """Explicit simplicial complex; simplices are vertex bitmasks.

    Stored closed under nonempty faces, sorted by (dimension, vertex tuple).
    """

    def __init__(self, ground_n: int, simplices):
        sims = set(simplices)
        sims.discard(0)
        # close downward; inputs are usually closed already
        stack = list(sims)
        while stack:
            m = stack.pop()
            if m.bit_count() >= 2:
                for v in bits(m):
                    f = m ^ (1 << v)
                    if f not in sims:
                        sims.add(f)
                        stack.append(f)
        self.ground_n = ground_n
        self.simplices = sorted(sims, key=lambda m: (m.bit_count(), tuple(bits(m))))
        self._index = {m: i for i, m in enumerate(self.simplices)}
        self._chain = None

    def __len__(self):
        return len(self.simplices)

    def __contains__(self, mask: int) -> bool:
        return mask in self._index

    @property
    def dim(self) -> int:
        return max((m.bit_count() for m in self.simplices), default=0) - 1

    def chain_data(self):
        if self._chain is None:
            dims = [m.bit_count() - 1 for m in self.simplices]
            facets = []
            for m in self.simplices:
                if m.bit_count() < 2:
                    facets.append([])
                else:
                    facets.append(sorted(self._index[m ^ (1 << v)] for v in bits(m)))
            self._chain = (dims, facets)
        return self._chain


class Poset:
    """Finite graded poset; covers[i] lists the elements covered by i."""

    def __init__(self, grades, covers, labels=None):
        self.grades = list(grades)
        self.covers = [sorted(c) for c in covers]
        self.labels = labels
        for i, cov in enumerate(self.covers):
            for j in cov:
                if self.grades[j] >= self.grades[i]:
                    raise DomainError(
                        f"cover {j} -> {i} does not increase the grade")

    def __len__(self):
        return len(self.grades)

    @cached_property
    def below(self) -> list[int]:
        """below[i] = bitmask of elements strictly under i."""
        out = [0] * len(self.grades)
        for i in sorted(range(len(self.grades)), key=lambda v: self.grades[v]):
            m = 0
            for j in self.covers[i]:
                m |= out[j] | (1 << j)
            out[i] = m
        return out

    @cached_property
    def above(self) -> list[int]:
        out = [0] * len(self.grades)
        for j, m in enumerate(self.below):
            for i in bits(m):
                out[i] |= 1 << j
        return out

    def less(self, i: int, j: int) -> bool:
        return bool(self.below[j] >> i & 1)

    def leq(self, i: int, j: int) -> bool:
        return i == j or self.less(i, j)

    def op(self) -> "Poset":
        top = max(self.grades, default=0)
        covers = [[] for _ in self.grades]
        for i, cov in enumerate(self.covers):
            for j in cov:
                covers[j].append(i)
        return Poset([top - g for g in self.grades], covers, self.labels)

    def chains(self) -> list[tuple[int, ...]]:
        """All nonempty chains, each as an ascending index tuple."""
        out = []
        above = self.above

        def grow(chain, avail):
            out.append(tuple(chain))
            for j in bits(avail):
                chain.append(j)
                grow(chain, avail & above[j])
                chain.pop()

        for i in range(len(self.grades)):
            grow([i], above[i])
        return out


def face_poset(c) -> Poset:
    """The face poset of a complex: elements are its cells, covers = facets."""
    dims, facets = c.chain_data()
    return Poset(dims, facets)


def order_complex(p: Poset) -> SimplicialComplex:
    """Simplicial complex of chains; vertex order is (grade, element id)."""
    m = len(p)
    perm = sorted(range(m), key=lambda i: (p.grades[i], i))
    pos = [0] * m
    for new, old in enumerate(perm):
        pos[old] = new
    sims = []
    for chain in p.chains():
        mask = 0
        for e in chain:
            mask |= 1 << pos[e]
        sims.append(mask)
    return SimplicialComplex(m, sims)


def f_vector(c) -> tuple[int, ...]:
    dims, _ = c.chain_data()
    if not dims:
        return ()
    out = [0] * (max(dims) + 1)
    for d in dims:
        out[d] += 1
    return tuple(out)


def euler_characteristic(c) -> int:
    return sum((-1) ** d * n for d, n in enumerate(f_vector(c)))


def connected_components(c) -> int:
    """Union-find over the 1-skeleton; equals b_0 by CW connectivity."""
    dims, facets = c.chain_data()
    parent = list(range(len(dims)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, d in enumerate(dims):
        if d == 1:
            for j in facets[i]:
                parent[find(j)] = find(i)
    return len({find(i) for i, d in enumerate(dims) if d == 0})


def betti_gf2(c) -> BettiProfile:
    """GF(2) Betti numbers of a regular CW / ordered Delta complex."""
    dims, facets = c.chain_data()
    if not dims:
        return BettiProfile((), 0, ())
    top = max(dims)
    f = [0] * (top + 1)
    for d in dims:
        f[d] += 1
    local = [0] * len(dims)
    seen = [0] * (top + 1)
    for i, d in enumerate(dims):
        local[i] = seen[d]
        seen[d] += 1
    buckets: list[list[int]] = [[] for _ in range(top + 1)]
    for i, d in enumerate(dims):
        buckets[d].append(i)

    ranks = [0] * (top + 2)
    prev_cols: list[int] = []
    for k in range(1, top + 1):
        if f[k] * f[k - 1] > MATRIX_BIT_CAP:
            raise ResourceError(
                f"boundary matrix {f[k - 1]}x{f[k]} exceeds {MATRIX_BIT_CAP} bits")
        cols = []
        for i in buckets[k]:
            col = 0
            for j in facets[i]:
                if dims[j] != k - 1:
                    raise ConsistencyError(
                        f"cell {i} (dim {k}) has a facet of dim {dims[j]}")
                col |= 1 << local[j]
            cols.append(col)
        if k >= 2:
            # boundary-of-boundary must vanish over GF(2)
            for i, col_i in zip(buckets[k], cols):
                acc = 0
                for j in facets[i]:
                    acc ^= prev_cols[local[j]]
                if acc:
                    raise ConsistencyError(f"boundary square nonzero at cell {i}")
        ranks[k] = gf2_rank(cols, f[k - 1])
        prev_cols = cols
    betti = tuple(f[k] - ranks[k] - ranks[k + 1] for k in range(top + 1))
    euler = sum((-1) ** k * fk for k, fk in enumerate(f))
    assert euler == sum((-1) ** k * b for k, b in enumerate(betti))
    return BettiProfile(betti, euler, tuple(f))


def is_flag(s: SimplicialComplex) -> bool:
    """True iff every pairwise-adjacent vertex set of the 1-skeleton spans."""
    verts = [m for m in s.simplices if m.bit_count() == 1]
    adj: dict[int, int] = {(m.bit_length() - 1): 0 for m in verts}
    for m in s.simplices:
        if m.bit_count() == 2:
            u, v = tuple(bits(m))
            adj[u] |= 1 << v
            adj[v] |= 1 << u

    def grow(mask: int, cand: int) -> bool:
        for v in bits(cand):
            bigger = mask | (1 << v)
            if bigger not in s._index:
                return False
            hi = ~((1 << (v + 1)) - 1)
            if not grow(bigger, cand & adj[v] & hi):
                return False
        return True

    for m in s.simplices:
        if m.bit_count() == 2:
            u, v = tuple(bits(m))
            hi = ~((1 << (v + 1)) - 1)
            if not grow(m, adj[u] & adj[v] & hi):
                return False
    return True


POSET_ISO_CAP = 512


def find_poset_isomorphism(p: Poset, q: Poset,
                           cap: int = POSET_ISO_CAP) -> list[int] | None:
    """Search for an order isomorphism p -> q; element list or None."""
    m = len(p)
    if m != len(q):
        return None
    if m > cap:
        raise ResourceError(f"poset isomorphism search capped at {cap} elements")
    ups = ([[] for _ in range(m)], [[] for _ in range(m)])
    downs = (p.covers, q.covers)
    for side, ps in enumerate((p, q)):
        for i, cov in enumerate(ps.covers):
            for j in cov:
                ups[side][j].append(i)

    # iterated Hasse-neighbourhood refinement, shared across both posets
    cols = ([(g,) for g in p.grades], [(g,) for g in q.grades])
    for _ in range(m):
        fresh = []
        for side in (0, 1):
            c = cols[side]
            fresh.append([(c[i], tuple(sorted(c[j] for j in downs[side][i])),
                           tuple(sorted(c[j] for j in ups[side][i])))
                          for i in range(m)])
        if sorted(fresh[0]) != sorted(fresh[1]):
            return None
        names = {v: t for t, v in enumerate(sorted(set(fresh[0])))}
        nxt = ([(names[v],) for v in fresh[0]], [(names[v],) for v in fresh[1]])
        if nxt[0] == cols[0] and nxt[1] == cols[1]:
            break
        cols = nxt

    classes: dict[tuple, list[int]] = {}
    for j in range(m):
        classes.setdefault(cols[1][j], []).append(j)
    order = sorted(range(m), key=lambda i: len(classes[cols[0][i]]))
    phi = [-1] * m
    used = [False] * m

    def place(t: int) -> bool:
        if t == m:
            return True
        i = order[t]
        for j in classes[cols[0][i]]:
            if used[j]:
                continue
            ok = all(phi[k] < 0 or phi[k] in downs[1][j] for k in downs[0][i])
            ok = ok and all(phi[k] < 0 or j in downs[1][phi[k]]
                            for k in ups[0][i])
            if ok:
                phi[i], used[j] = j, True
                if place(t + 1):
                    return True
                phi[i], used[j] = -1, False
        return False

    if not place(0):
        return None
    # every cover edge must be matched exactly (degrees agree per class)
    for i in range(m):
        if sorted(phi[j] for j in downs[0][i]) != downs[1][phi[i]]:
            return None
    return phi


def product_fvector_check(g, h, k) -> bool:
    """Cell-by-cell check that Hom(g|_|h, k) is the product of the factors."""
    from .homcx import build_hom

    a = build_hom(g, k)
    b = build_hom(h, k)
    u = build_hom(disjoint_union(g, h), k)
    shift = h.n * k.n
    paired = {(ka << shift) | kb for ka in a.keys for kb in b.keys}
    if paired != set(u.keys):
        return False
    fa, fb, fu = f_vector(a), f_vector(b), f_vector(u)
    conv = [0] * (len(fa) + len(fb) - 1) if fa and fb else []
    for i, x in enumerate(fa):
        for j, y in enumerate(fb):
            conv[i + j] += x * y
    return tuple(conv) == fu
