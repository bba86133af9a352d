"""Pure-Python kernels: multihomomorphism cell enumeration and GF(2) rank.

Cells of the multihomomorphism complex from G (n_g vertices) to H (n_h
vertices) are packed into single ints: the mask chosen for G-vertex x
occupies bit field ``(n_g-1-x)*n_h .. (n_g-x)*n_h - 1``, so vertex 0 sits
in the highest field and numeric order on keys equals lexicographic order
on mask tuples.
"""

from __future__ import annotations

from homtopo.errors import BudgetError


def enumerate_hom_cells(adj_g, adj_h, budget: int) -> list[int]:
    """All packed cells eta with eta(x) x eta(y) <= E(H) for each G-edge (x,y).

    Raises BudgetError (with .found) as soon as more than `budget` cells exist.
    """
    n_g = len(adj_g)
    n_h = len(adj_h)
    full_h = (1 << n_h) - 1
    if n_g == 0:
        return [0]

    # common H-neighbors of a mask; the empty mask imposes nothing
    def cn(mask: int) -> int:
        out = full_h
        while mask:
            low = mask & -mask
            out &= adj_h[low.bit_length() - 1]
            mask ^= low
        return out

    # assign high-degree G-vertices first so constraints bite early
    order = sorted(range(n_g), key=lambda v: (-adj_g[v].bit_count(), v))
    shift = [(n_g - 1 - x) * n_h for x in order]
    looped = [adj_g[x] >> x & 1 for x in order]
    # later[d] = positions after d in `order` that are G-adjacent to order[d]
    later = []
    for d, x in enumerate(order):
        later.append([e for e in range(d + 1, n_g) if adj_g[x] >> order[e] & 1])

    out: list[int] = []
    allowed = [full_h] * n_g
    saved: list[list[tuple[int, int]]] = [[] for _ in range(n_g)]
    sub = [0] * n_g
    key = [0] * (n_g + 1)
    d = 0
    sub[0] = allowed[0]
    while True:
        s = sub[d]
        if s == 0:
            d -= 1
            if d < 0:
                break
            for e, old in saved[d]:
                allowed[e] = old
            saved[d].clear()
            sub[d] = (sub[d] - 1) & allowed[d]
            continue
        if looped[d] and s & ~cn(s):
            sub[d] = (s - 1) & allowed[d]
            continue
        if d + 1 == n_g:
            out.append(key[d] | (s << shift[d]))
            if len(out) > budget:
                raise BudgetError(f"cell budget {budget} exceeded", found=len(out))
            sub[d] = (s - 1) & allowed[d]
            continue
        c = cn(s)
        ok = True
        for e in later[d]:
            old = allowed[e]
            new = old & c
            if new != old:
                saved[d].append((e, old))
                allowed[e] = new
            if new == 0:
                ok = False
                break
        if ok:
            key[d + 1] = key[d] | (s << shift[d])
            d += 1
            sub[d] = allowed[d]
        else:
            for e, old in saved[d]:
                allowed[e] = old
            saved[d].clear()
            sub[d] = (s - 1) & allowed[d]
    out.sort()
    return out


def gf2_rank(cols, nbits: int = 0) -> int:
    """Rank over GF(2) of the int-bitmask columns (nbits is advisory here)."""
    pivots: dict[int, int] = {}
    rank = 0
    for col in cols:
        while col:
            low = col & -col
            other = pivots.get(low)
            if other is None:
                pivots[low] = col
                rank += 1
                break
            col ^= other
    return rank


def gf2_in_span(cols, target: int, nbits: int = 0) -> bool:
    """Is `target` an XOR combination of `cols`?"""
    pivots: dict[int, int] = {}
    for col in cols:
        while col:
            low = col & -col
            other = pivots.get(low)
            if other is None:
                pivots[low] = col
                break
            col ^= other
    while target:
        low = target & -target
        other = pivots.get(low)
        if other is None:
            return False
        target ^= other
    return True
