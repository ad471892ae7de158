"""Admissible descriptors, the H-vectors they define, and Levi decompositions.

A descriptor is the combinatorial parameter of a theta-stable parabolic
subalgebra q = l + u whose Levi has no compact simple factor.  For sp and
so-star it is an ordered sequence of pairs (p_1,q_1),...,(p_l,q_l); pair i
contributes a block of +i entries (p_i many) and -i entries (q_i many) to H.
For so-even the pairs feed the two sides separately, together with zero
counts (r, s) and end-sign flags (n_p, n_q) marking a -1 at position p or
p+q.  For g2 it is one of six case tags.

Enumeration is canonical: each admissible parabolic (as a pair of root sets
(Delta_l, Delta_u)) is produced by exactly one descriptor.  For the type D
families this needs one normalization beyond the block-form constraints: a
coordinate of H strictly smaller in absolute value than every other
coordinate has its sign invisible to every root of type D, so the values
+1, -1 and 0 in that slot define the same parabolic.  Such a slot is always
written as a zero (higher blocks shift down one level); the redundant lone
+1 / lone -1 spellings are rejected as non-canonical.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import InternalConsistencyError, InvalidDescriptorError
from .root_data import (G2, G2_RHOS, SO_EVEN, SO_STAR, SP, Root, RootDatum,
                        Vector, pairing)

G2_CASES = ("trivial", "ds1", "ds2", "ds3", "L1", "L2")

G2_H_TABLE: dict[str, Vector] = {
    "trivial": (0, 0, 0),
    "ds1": G2_RHOS[0],
    "ds2": G2_RHOS[1],
    "ds3": G2_RHOS[2],
    "L1": (1, -2, 1),
    "L2": (0, -1, 1),
}


@dataclass(frozen=True)
class Descriptor:
    """Family tag plus the family-specific parameters.

    ``pairs`` is used by sp, so-star and so-even; ``rs`` and ``flags`` only
    by so-even; ``case`` only by g2.
    """

    family: str
    pairs: tuple[tuple[int, int], ...] = ()
    rs: tuple[int, int] = (0, 0)
    flags: tuple[int, int] = (0, 0)
    case: str = ""


def _check_pairs(pairs: tuple[tuple[int, int], ...]) -> None:
    for k, (pi, qi) in enumerate(pairs, start=1):
        if pi < 0 or qi < 0:
            raise InvalidDescriptorError(
                f"pair {k} is {(pi, qi)}: entries must be nonnegative")
        if pi == 0 and qi != 1:
            raise InvalidDescriptorError(
                f"pair {k} is {(pi, qi)}: p_i=0 requires q_i=1")
        if qi == 0 and pi != 1:
            raise InvalidDescriptorError(
                f"pair {k} is {(pi, qi)}: q_i=0 requires p_j=1")


def validate_descriptor(d: Descriptor, datum: RootDatum) -> None:
    """Raise InvalidDescriptorError naming the violated clause."""
    if d.family != datum.family:
        raise InvalidDescriptorError(
            f"descriptor family {d.family!r} does not match datum {datum.family!r}")

    if d.family == G2:
        if d.case not in G2_CASES:
            raise InvalidDescriptorError(
                f"g2 case must be one of {G2_CASES} (got {d.case!r})")
        return

    _check_pairs(d.pairs)
    total = sum(p + q for p, q in d.pairs)

    if d.family in (SP, SO_STAR):
        if total > datum.n:
            raise InvalidDescriptorError(
                f"sum of all p_i and q_i is {total}, exceeding n={datum.n}")
        if d.family == SO_STAR and d.pairs and total == datum.n \
                and sum(d.pairs[0]) == 1:
            raise InvalidDescriptorError(
                "lone level-1 coordinate with no zero block: the canonical "
                "form writes this slot as a zero (drop the first pair)")
        return

    # so-even
    p, q = datum.p, datum.q
    sum_p = sum(a for a, _ in d.pairs)
    sum_q = sum(b for _, b in d.pairs)
    r, s = d.rs
    if r < 0 or s < 0:
        raise InvalidDescriptorError(f"(r, s) = {(r, s)} must be nonnegative")
    if sum_p + r != p:
        raise InvalidDescriptorError(
            f"sum p_i + r = {sum_p} + {r} must equal p = {p}")
    if sum_q + s != q:
        raise InvalidDescriptorError(
            f"sum q_i + s = {sum_q} + {s} must equal q = {q}")
    if r == 0 and s > 1:
        raise InvalidDescriptorError(
            f"r=0 requires s <= 1 (got s={s}): so(0,2s) would be a compact factor")
    if s == 0 and r > 1:
        raise InvalidDescriptorError(
            f"s=0 requires r <= 1 (got r={r}): so(2r,0) would be a compact factor")
    n_p, n_q = d.flags
    if n_p not in (0, 1) or n_q not in (0, 1):
        raise InvalidDescriptorError(f"flags must be 0 or 1 (got {d.flags})")
    p1, q1 = d.pairs[0] if d.pairs else (0, 0)
    if n_p == 1 and r != 0:
        raise InvalidDescriptorError("n_p=1 requires r=0")
    if n_p == 1 and p1 < 1:
        raise InvalidDescriptorError("n_p=1 requires p_1 >= 1")
    if n_q == 1 and s != 0:
        raise InvalidDescriptorError("n_q=1 requires s=0")
    if n_q == 1 and q1 < 1:
        raise InvalidDescriptorError("n_q=1 requires q_1 >= 1")
    if d.pairs and (p1, q1) == (1, 0) and r == 0 and s == 0:
        raise InvalidDescriptorError(
            "lone level-1 x-coordinate (flagged or not) with no other small "
            "entries: the canonical form writes this slot as a zero "
            "(r=1 with the first pair dropped)")
    if d.pairs and (p1, q1) == (0, 1) and r == 0 and s == 0:
        raise InvalidDescriptorError(
            "lone level-1 y-coordinate (flagged or not) with no other small "
            "entries: the canonical form writes this slot as a zero "
            "(s=1 with the first pair dropped)")


def h_from_descriptor(d: Descriptor, datum: RootDatum) -> Vector:
    """The k-dominant block-form H defined by a descriptor."""
    validate_descriptor(d, datum)

    if d.family == G2:
        return G2_H_TABLE[d.case]

    l = len(d.pairs)
    if d.family in (SP, SO_STAR):
        pos: list[int] = []
        negs: list[int] = []
        for t in range(l, 0, -1):
            pos += [t] * d.pairs[t - 1][0]
        for t in range(1, l + 1):
            negs += [-t] * d.pairs[t - 1][1]
        r = datum.n - sum(p + q for p, q in d.pairs)
        return tuple(pos + [0] * r + negs)

    r, s = d.rs
    n_p, n_q = d.flags
    x: list[int] = []
    y: list[int] = []
    for t in range(l, 0, -1):
        x += [t] * d.pairs[t - 1][0]
        y += [t] * d.pairs[t - 1][1]
    if n_p:
        x[-1] = -1
    if n_q:
        y[-1] = -1
    x += [0] * r
    y += [0] * s
    return tuple(x + y)


@dataclass(frozen=True)
class Factor:
    """A simple factor of the Levi: its positive roots and compactness."""
    roots: tuple[Root, ...]
    compact: bool

    @property
    def support(self) -> tuple[int, ...]:
        coords: set[int] = set()
        for r in self.roots:
            coords.update(i for i, c in enumerate(r.weight) if c != 0)
        return tuple(sorted(coords))


@dataclass(frozen=True)
class LeviDecomposition:
    h: Vector
    zero_roots: frozenset[Vector]   # Delta_l, both signs
    u_roots: frozenset[Vector]      # Delta(u): roots strictly positive on h
    factors: tuple[Factor, ...]
    torus_rank: int


def _span_rank(vectors: list[Vector]) -> int:
    """Rank of the integer span, by exact Gaussian elimination."""
    rows = [[Fraction(x) for x in v] for v in vectors]
    rank = 0
    col = 0
    width = len(rows[0]) if rows else 0
    while rank < len(rows) and col < width:
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(rank + 1, len(rows)):
            if rows[i][col] != 0:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


def levi_from_h(h: Vector, datum: RootDatum) -> LeviDecomposition:
    """Partition the roots by the sign of their pairing with h.

    Factors are the connected components of the vanishing roots under
    non-orthogonality; a factor is compact iff all its roots are compact.
    The torus rank is the corank of the span of the vanishing roots.
    """
    zero_pos: list[Root] = []
    zero_full: set[Vector] = set()
    u: set[Vector] = set()
    for r in datum.positive_roots:
        t = pairing(r.weight, h)
        if t == 0:
            zero_pos.append(r)
            zero_full.add(r.weight)
            zero_full.add(tuple(-x for x in r.weight))
        elif t > 0:
            u.add(r.weight)
        else:
            u.add(tuple(-x for x in r.weight))

    assigned = [False] * len(zero_pos)
    comps: list[list[int]] = []
    for start in range(len(zero_pos)):
        if assigned[start]:
            continue
        comp = [start]
        assigned[start] = True
        stack = [start]
        while stack:
            a = stack.pop()
            for b in range(len(zero_pos)):
                if not assigned[b] and pairing(zero_pos[a].weight, zero_pos[b].weight) != 0:
                    assigned[b] = True
                    comp.append(b)
                    stack.append(b)
        comps.append(sorted(comp))

    factors = tuple(
        Factor(tuple(zero_pos[i] for i in comp),
               all(zero_pos[i].compact for i in comp))
        for comp in comps)
    torus = datum.rank - _span_rank([r.weight for r in zero_pos])
    return LeviDecomposition(h, frozenset(zero_full), frozenset(u), factors, torus)


def has_compact_simple_factor(levi: LeviDecomposition) -> bool:
    return any(f.compact for f in levi.factors)


def _pair_sequences_split(budget_p: int, budget_q: int):
    """Pair sequences obeying the 0 => 1 rules, (p_1, q_1) first."""
    yield ()
    for pi in range(budget_p + 1):
        for qi in range(budget_q + 1):
            if (pi, qi) == (0, 0):
                continue
            if pi == 0 and qi != 1:
                continue
            if qi == 0 and pi != 1:
                continue
            for rest in _pair_sequences_split(budget_p - pi, budget_q - qi):
                yield ((pi, qi),) + rest


def _pair_sequences_total(budget: int):
    """Pair sequences with total weight at most ``budget``."""
    yield ()
    for pi in range(budget + 1):
        for qi in range(budget + 1 - pi):
            if (pi, qi) == (0, 0):
                continue
            if pi == 0 and qi != 1:
                continue
            if qi == 0 and pi != 1:
                continue
            for rest in _pair_sequences_total(budget - pi - qi):
                yield ((pi, qi),) + rest


def enumerate_admissible(datum: RootDatum) -> list[Descriptor]:
    """Every canonical descriptor of the family, each parabolic exactly once.

    Order: g2 uses the fixed case list; the other families sort by
    (number of pairs, flattened pair tuple, flags).
    """
    if datum.family == G2:
        return [Descriptor(G2, case=c) for c in G2_CASES]

    out: list[Descriptor] = []
    if datum.family in (SP, SO_STAR):
        n = datum.n
        for pairs in _pair_sequences_total(n):
            total = sum(p + q for p, q in pairs)
            if datum.family == SO_STAR and pairs and total == n and sum(pairs[0]) == 1:
                continue
            out.append(Descriptor(datum.family, pairs=pairs))
    else:
        p, q = datum.p, datum.q
        for pairs in _pair_sequences_split(p, q):
            r = p - sum(a for a, _ in pairs)
            s = q - sum(b for _, b in pairs)
            if r < 0 or s < 0:
                continue
            if (r == 0 and s > 1) or (s == 0 and r > 1):
                continue
            p1, q1 = pairs[0] if pairs else (0, 0)
            if pairs and r == 0 and s == 0 and (p1, q1) in ((1, 0), (0, 1)):
                continue
            for n_p, n_q in product((0, 1), repeat=2):
                if n_p and (r != 0 or p1 < 1):
                    continue
                if n_q and (s != 0 or q1 < 1):
                    continue
                out.append(Descriptor(SO_EVEN, pairs=pairs, rs=(r, s),
                                      flags=(n_p, n_q)))

    def key(d: Descriptor):
        flat = tuple(x for pair in d.pairs for x in pair)
        return (len(d.pairs), flat, d.flags)

    out.sort(key=key)
    return out


def _expected_factors(d: Descriptor, datum: RootDatum):
    """Factor shapes promised by the descriptor, plus the expected torus rank.

    Each factor entry is (positive root count, noncompact positive root
    count, compact).  Levels with a single coordinate contribute no roots,
    only a torus dimension, as do rank-1 tails.
    """
    expected: list[tuple[int, int, bool]] = []
    torus = 0
    if datum.family == G2:
        if d.case == "trivial":
            return [(6, 4, False)], 0
        if d.case in ("L1", "L2"):
            return [(1, 1, False)], 1
        return [], 2

    for pt, qt in d.pairs:
        k = pt + qt
        if k >= 2:
            expected.append((k * (k - 1) // 2, pt * qt, False))
        torus += 1

    if datum.family == SP:
        r = datum.n - sum(p + q for p, q in d.pairs)
        if r >= 1:
            expected.append((r * r, r * (r + 1) // 2, False))
    elif datum.family == SO_STAR:
        r = datum.n - sum(p + q for p, q in d.pairs)
        if r == 1:
            torus += 1
        elif r == 2:
            # rank-2 tail splits: a compact su(2) and a noncompact su(1,1)
            expected.append((1, 0, True))
            expected.append((1, 1, False))
        elif r >= 3:
            expected.append((r * (r - 1), r * (r - 1) // 2, False))
    else:
        r, s = d.rs
        if r + s == 1:
            torus += 1
        elif (r, s) == (1, 1):
            expected.append((1, 1, False))
            expected.append((1, 1, False))
        elif r + s >= 2:
            expected.append(((r + s) * (r + s - 1), 2 * r * s, False))
    return expected, torus


def descriptor_consistency(d: Descriptor, datum: RootDatum) -> LeviDecomposition:
    """Build the Levi of a descriptor and check it has the promised shape.

    Raises InternalConsistencyError when the computed factors disagree with
    the per-level block structure.  The only compact factor ever expected is
    the su(2) inside a rank-2 so-star tail, which the enumeration keeps by
    convention (the tail is one unit of the parametrization).
    """
    h = h_from_descriptor(d, datum)
    levi = levi_from_h(h, datum)
    expected, torus = _expected_factors(d, datum)
    got = sorted((len(f.roots), sum(1 for r in f.roots if not r.compact), f.compact)
                 for f in levi.factors)
    want = sorted(expected)
    if got != want:
        raise InternalConsistencyError(
            f"factor shapes {got} do not match expected {want} for {d}")
    if levi.torus_rank != torus:
        raise InternalConsistencyError(
            f"torus rank {levi.torus_rank} != expected {torus} for {d}")
    return levi
