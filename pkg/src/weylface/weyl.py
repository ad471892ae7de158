"""Weyl group elements as signed permutations, orbits, and reflection subgroups.

An element stores ``perm`` in destination form (coordinate j moves to
position perm[j]) and ``signs`` indexed by destination, so the action is

    apply(w, mu)[perm[j]] = signs[perm[j]] * mu[j].

The g2 Weyl group is the order-12 dihedral group; on the zero-sum
3-coordinate model it is exactly the group of coordinate permutations with a
global sign, so the same representation covers it with uniform signs
(reflections in the three short roots are transpositions, reflections in the
three long roots are negated transpositions).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ResourceLimitError
from .root_data import G2, SO_EVEN, SO_STAR, SP, Root, RootDatum, Vector, is_k_dominant, pairing

DEFAULT_CAP = 10 ** 7


@dataclass(frozen=True)
class WeylElement:
    perm: tuple[int, ...]
    signs: tuple[int, ...]


def identity(n: int) -> WeylElement:
    return WeylElement(tuple(range(n)), (1,) * n)


def apply(w: WeylElement, mu: Vector) -> Vector:
    """Act on a weight: coordinates move to position, signs apply there."""
    if len(w.perm) != len(mu):
        raise ValueError(f"dimension mismatch: {len(w.perm)} vs {len(mu)}")
    out = [0] * len(mu)
    for j, x in enumerate(mu):
        i = w.perm[j]
        out[i] = w.signs[i] * x
    return tuple(out)


def compose(w2: WeylElement, w1: WeylElement) -> WeylElement:
    """w2 after w1."""
    n = len(w1.perm)
    perm = tuple(w2.perm[w1.perm[j]] for j in range(n))
    signs = [1] * n
    for j in range(n):
        mid = w1.perm[j]
        i = w2.perm[mid]
        signs[i] = w2.signs[i] * w1.signs[mid]
    return WeylElement(perm, tuple(signs))


def inverse(w: WeylElement) -> WeylElement:
    n = len(w.perm)
    perm = [0] * n
    signs = [1] * n
    for j in range(n):
        i = w.perm[j]
        perm[i] = j
        signs[j] = w.signs[i]
    return WeylElement(tuple(perm), tuple(signs))


def _transposition(n: int, i: int, j: int, si: int = 1, sj: int = 1) -> WeylElement:
    perm = list(range(n))
    perm[i], perm[j] = j, i
    signs = [1] * n
    signs[i], signs[j] = si, sj
    return WeylElement(tuple(perm), tuple(signs))


def reflection(root: Root, datum: RootDatum) -> WeylElement:
    """The reflection in a root, as a signed permutation of the model."""
    w = root.weight
    n = datum.n
    support = [i for i, x in enumerate(w) if x != 0]
    if datum.family == G2:
        if sorted(abs(x) for x in w) == [0, 1, 1]:
            # short root +-(e_i - e_j): transposition
            i, j = support
            return _transposition(n, i, j)
        # long root, +-2 at one position: negated transposition of the others
        (m,) = [i for i in support if abs(w[i]) == 2]
        j, k = [i for i in range(3) if i != m]
        t = _transposition(n, j, k, -1, -1)
        signs = list(t.signs)
        signs[m] = -1
        return WeylElement(t.perm, tuple(signs))
    if len(support) == 1:
        # long root 2e_i of sp: sign change at i
        (i,) = support
        signs = [1] * n
        signs[i] = -1
        return WeylElement(tuple(range(n)), tuple(signs))
    i, j = support
    if w[i] * w[j] < 0:
        return _transposition(n, i, j)
    return _transposition(n, i, j, -1, -1)


def simple_reflections(datum: RootDatum) -> tuple[WeylElement, ...]:
    """Reflections in the simple roots of the standard positive system."""
    n = datum.n
    if datum.family == G2:
        short = Root((1, -1, 0), True)
        long_ = Root((-2, 1, 1), False)
        return (reflection(short, datum), reflection(long_, datum))
    gens = [_transposition(n, i, i + 1) for i in range(n - 1)]
    if datum.family == SP:
        signs = [1] * n
        signs[n - 1] = -1
        gens.append(WeylElement(tuple(range(n)), tuple(signs)))
    else:
        gens.append(_transposition(n, n - 2, n - 1, -1, -1))
    return tuple(gens)


def weyl_order(datum: RootDatum) -> int:
    """Order of the full Weyl group."""
    if datum.family == G2:
        return 12
    fact = 1
    for k in range(2, datum.n + 1):
        fact *= k
    if datum.family == SP:
        return fact << datum.n
    return fact << (datum.n - 1)


def orbit(mu: Vector, datum: RootDatum, cap: int = DEFAULT_CAP) -> frozenset[Vector]:
    """Full Weyl orbit of mu, by breadth-first closure under simple reflections."""
    gens = simple_reflections(datum)
    seen = {mu}
    frontier = [mu]
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                u = apply(g, v)
                if u not in seen:
                    if len(seen) >= cap:
                        raise ResourceLimitError(
                            f"orbit exceeds cap of {cap} points")
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return frozenset(seen)


@dataclass(frozen=True)
class Subgroup:
    roots: tuple[Root, ...]
    elements: frozenset[WeylElement]

    @property
    def order(self) -> int:
        return len(self.elements)


def generate_subgroup(roots: tuple[Root, ...] | list[Root], datum: RootDatum,
                      cap: int = DEFAULT_CAP) -> Subgroup:
    """Materialized closure of the reflections in the given roots."""
    gens = [reflection(r, datum) for r in roots]
    e = identity(datum.n)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                u = compose(g, w)
                if u not in seen:
                    if len(seen) >= cap:
                        raise ResourceLimitError(
                            f"subgroup exceeds cap of {cap} elements")
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return Subgroup(tuple(roots), frozenset(seen))


def is_w1(w: WeylElement, datum: RootDatum) -> bool:
    """True iff w maps rho into the closed k-dominant chamber."""
    return is_k_dominant(apply(w, datum.rho), datum)


def length(w: WeylElement, datum: RootDatum) -> int:
    """Coxeter length: number of positive roots sent to negative roots."""
    pos = {r.weight for r in datum.positive_roots}
    count = 0
    for r in datum.positive_roots:
        img = apply(w, r.weight)
        if img not in pos:
            count += 1
    return count
