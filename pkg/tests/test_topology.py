"""Chain-data consumers: GF(2) homology against known spaces, posets, and
the poset-isomorphism search."""

import pytest

from homtopo.errors import ConsistencyError, DomainError, ResourceError
from homtopo.graphs import complete, cycle, disjoint_union, path
from homtopo.homcx import build_hom
from homtopo.topology import (Poset, SimplicialComplex, betti_gf2,
                              connected_components, euler_characteristic,
                              f_vector, face_poset, find_poset_isomorphism,
                              is_flag, order_complex, product_fvector_check)


def simplex(k):
    """The full k-simplex from its top face alone (tests downward closure)."""
    return SimplicialComplex(k + 1, [(1 << (k + 1)) - 1])


def sphere(k):
    """Boundary of the (k+1)-simplex."""
    full = (1 << (k + 2)) - 1
    return SimplicialComplex(k + 2, [full ^ (1 << v) for v in range(k + 2)])


# the 6-vertex triangulation of the projective plane
RP2_TRIANGLES = ["123", "124", "135", "146", "156",
                 "236", "245", "256", "345", "346"]


def rp2():
    sims = [sum(1 << (int(c) - 1) for c in t) for t in RP2_TRIANGLES]
    return SimplicialComplex(6, sims)


def test_closure_and_order():
    s = simplex(3)
    assert len(s) == 15 and s.dim == 3
    dims, facets = s.chain_data()
    assert dims == sorted(dims)
    for i, fs in enumerate(facets):
        assert len(fs) == (0 if dims[i] == 0 else dims[i] + 1)


@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_simplex_contractible(k):
    assert betti_gf2(simplex(k)).betti == (1,) + (0,) * k


@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_sphere_betti(k):
    want = (2,) if k == 0 else (1,) + (0,) * (k - 1) + (1,)
    assert betti_gf2(sphere(k)).betti == want


def test_rp2_betti():
    c = rp2()
    # sanity of the input: a closed surface, every edge in exactly 2 triangles
    dims, facets = c.chain_data()
    edge_use = [0] * len(dims)
    for i, d in enumerate(dims):
        if d == 2:
            for j in facets[i]:
                edge_use[j] += 1
    assert all(edge_use[i] == 2 for i, d in enumerate(dims) if d == 1)
    assert f_vector(c) == (6, 15, 10)
    p = betti_gf2(c)
    assert p.betti == (1, 1, 1) and p.euler == 1


def test_disjoint_pieces():
    two = SimplicialComplex(6, [0b000111, 0b111000])
    p = betti_gf2(two)
    assert p.betti == (2, 0, 0)
    assert connected_components(two) == 2
    assert euler_characteristic(two) == 2


def naive_components(c):
    dims, facets = c.chain_data()
    n = len(dims)
    adj = [set() for _ in range(n)]
    for i, fs in enumerate(facets):
        for j in fs:
            adj[i].add(j)
            adj[j].add(i)
    seen, out = set(), 0
    for s in range(n):
        if s in seen:
            continue
        out += 1
        stack = [s]
        seen.add(s)
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return out


@pytest.mark.parametrize("c", [
    sphere(1), rp2(), simplex(2),
    SimplicialComplex(5, [0b00011, 0b01100, 0b10000]),
])
def test_components_oracle(c):
    assert connected_components(c) == naive_components(c)
    assert betti_gf2(c).betti[0] == naive_components(c)


def test_betti_euler_identity():
    for c in (sphere(2), rp2(), simplex(3)):
        p = betti_gf2(c)
        assert sum((-1) ** k * b for k, b in enumerate(p.betti)) == p.euler
        assert sum((-1) ** k * f for k, f in enumerate(p.f_vector)) == p.euler


# ------------------------------------------------------------ posets

def test_poset_validation():
    with pytest.raises(DomainError):
        Poset([0, 0], [[], [0]], None)  # cover does not increase grade
    p = Poset([0, 0, 1], [[], [], [0, 1]])
    assert p.less(0, 2) and not p.less(2, 0) and p.leq(2, 2)
    assert not p.less(0, 1)


def transitive_closure_oracle(p):
    n = len(p)
    under = [set(p.covers[i]) for i in range(n)]
    changed = True
    while changed:
        changed = False
        for i in range(n):
            new = set()
            for j in under[i]:
                new |= under[j]
            if not new <= under[i]:
                under[i] |= new
                changed = True
    return under


def test_below_matches_closure():
    p = face_poset(sphere(1))
    under = transitive_closure_oracle(p)
    for i in range(len(p)):
        assert {j for j in range(len(p)) if p.below[i] >> j & 1} == under[i]


def test_op_flips_order():
    p = face_poset(simplex(2))
    q = p.op()
    for i in range(len(p)):
        for j in range(len(p)):
            assert p.less(i, j) == q.less(j, i)


def brute_chains(p):
    n = len(p)
    out = []

    def grow(chain):
        if chain:
            out.append(tuple(chain))
        start = chain[-1] if chain else None
        for j in range(n):
            if start is None or p.less(start, j):
                grow(chain + [j])

    grow([])
    return out


def test_chains_oracle():
    p = face_poset(simplex(2))
    assert sorted(p.chains()) == sorted(brute_chains(p))


def test_face_poset_grading():
    x = build_hom(complete(2), complete(3))
    p = face_poset(x)
    dims, facets = x.chain_data()
    assert p.grades == dims and [list(c) for c in p.covers] == facets


def test_order_complex_is_subdivision():
    # barycentric subdivision preserves GF(2) homology
    for c in (sphere(1), rp2()):
        sd = order_complex(face_poset(c))
        assert betti_gf2(sd).betti == betti_gf2(c).betti


def test_is_flag():
    c5 = SimplicialComplex(5, [1 << u | 1 << ((u + 1) % 5) for u in range(5)])
    assert is_flag(c5)  # no triangle to miss
    hollow = sphere(1)  # empty triangle: 1-skeleton is K_3
    assert not is_flag(hollow)
    assert is_flag(simplex(3))


def test_find_poset_isomorphism_positive():
    p = face_poset(sphere(1))
    # rebuild with relabeled elements
    n = len(p)
    perm = [(i * 5 + 2) % n for i in range(n)]
    assert sorted(perm) == list(range(n))
    inv = [0] * n
    for i, j in enumerate(perm):
        inv[j] = i
    q = Poset([p.grades[inv[t]] for t in range(n)],
              [[perm[j] for j in p.covers[inv[t]]] for t in range(n)])
    phi = find_poset_isomorphism(p, q)
    assert phi is not None
    for i in range(n):
        assert sorted(phi[j] for j in p.covers[i]) == q.covers[phi[i]]


def test_find_poset_isomorphism_negative():
    p = face_poset(sphere(1))
    q = face_poset(simplex(1))
    assert find_poset_isomorphism(p, q) is None  # different sizes
    a = Poset([0, 0, 1, 1], [[], [], [0, 1], [0, 1]])
    b = Poset([0, 0, 1, 1], [[], [], [0, 1], [0]])
    assert find_poset_isomorphism(a, b) is None  # cover counts differ
    # same refinement profile, incompatible cover structure
    hexagon = face_poset(SimplicialComplex(
        6, [1 << u | 1 << ((u + 1) % 6) for u in range(6)]))
    two_tri = face_poset(SimplicialComplex(
        6, [0b011, 0b110, 0b101, 0b011000, 0b110000, 0b101000]))
    assert find_poset_isomorphism(hexagon, two_tri) is None


def test_poset_isomorphism_cap():
    p = face_poset(build_hom(complete(2), complete(6)))
    with pytest.raises(ResourceError):
        find_poset_isomorphism(p, p)


def test_product_fvector_check():
    assert product_fvector_check(complete(2), complete(2), complete(3))
    assert product_fvector_check(path(2), cycle(4), complete(3))


# ------------------------------------------------------------ guard rails

class BrokenFacetDim:
    # a 2-cell lists a 0-cell among its facets
    def chain_data(self):
        return [0, 0, 1, 2], [[], [], [0, 1], [0]]


class BrokenSquare:
    # two 1-cells between the same endpoints, one 2-cell with a single facet:
    # its boundary-of-boundary is the two endpoints, nonzero over GF(2)
    def chain_data(self):
        return [0, 0, 1, 1, 2], [[], [], [0, 1], [0, 1], [2]]


def test_consistency_guards():
    with pytest.raises(ConsistencyError):
        betti_gf2(BrokenSquare())
    with pytest.raises(ConsistencyError):
        betti_gf2(BrokenFacetDim())
