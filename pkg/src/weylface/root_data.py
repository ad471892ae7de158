"""Root systems for the four equal-rank families, with exact integer arithmetic.

Weights live in the dual of the compact Cartan, written in epsilon
coordinates as integer tuples.  For ``sp`` the ambient dimension is n, for
``so-even`` it is p + q, for ``so-star`` it is n, and for ``g2`` weights are
integer triples summing to zero (rank 2 inside a 3-dimensional model).

Every vector handled here is integral, so all comparisons are exact; the
package never touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParameterError

Vector = tuple[int, ...]

SP = "sp"
SO_EVEN = "so-even"
SO_STAR = "so-star"
G2 = "g2"

FAMILIES = (SP, SO_EVEN, SO_STAR, G2)

# The three k-dominant half-sum candidates for g2 (half sums of the three
# positive systems containing the fixed compact positive roots).  The first
# one is the half sum of the standard positive system.
G2_RHO1: Vector = (-1, -2, 3)
G2_RHO2: Vector = (1, -3, 2)
G2_RHO3: Vector = (2, -3, 1)
G2_RHOS = (G2_RHO1, G2_RHO2, G2_RHO3)


@dataclass(frozen=True)
class Root:
    weight: Vector
    compact: bool


@dataclass(frozen=True)
class RootDatum:
    """A family tag plus its fixed positive system and half sum rho.

    ``n`` is the ambient coordinate count (3 for g2), ``rank`` the Lie
    algebra rank (2 for g2, n otherwise).  ``p``/``q`` are only meaningful
    for so-even.
    """

    family: str
    n: int
    rank: int
    p: int
    q: int
    positive_roots: tuple[Root, ...]
    rho: Vector

    @property
    def compact_positive_roots(self) -> tuple[Root, ...]:
        return tuple(r for r in self.positive_roots if r.compact)

    @property
    def noncompact_positive_roots(self) -> tuple[Root, ...]:
        return tuple(r for r in self.positive_roots if not r.compact)

    def __repr__(self) -> str:  # keep reports readable
        if self.family == SO_EVEN:
            return f"RootDatum(so-even, p={self.p}, q={self.q})"
        if self.family == G2:
            return "RootDatum(g2)"
        return f"RootDatum({self.family}, n={self.n})"


def _unit(n: int, i: int, c: int = 1) -> Vector:
    v = [0] * n
    v[i] = c
    return tuple(v)


def _eij(n: int, i: int, j: int, sign: int) -> Vector:
    v = [0] * n
    v[i] = 1
    v[j] = sign
    return tuple(v)


def build_root_datum(family: str, n: int | None = None,
                     p: int | None = None, q: int | None = None) -> RootDatum:
    """Construct the fixed root datum of a family.

    Parameter bounds: sp needs n >= 2, so-even needs p, q >= 1 with
    p + q >= 4, so-star needs n >= 4, g2 takes no parameters.
    """
    if family == SP:
        if n is None or n < 2:
            raise InvalidParameterError(f"sp requires n >= 2 (got n={n})")
        roots = []
        for i in range(n):
            for j in range(i + 1, n):
                roots.append(Root(_eij(n, i, j, -1), True))
                roots.append(Root(_eij(n, i, j, +1), False))
        for i in range(n):
            roots.append(Root(_unit(n, i, 2), False))
        rho = tuple(range(n, 0, -1))
        return RootDatum(SP, n, n, 0, 0, tuple(roots), rho)

    if family == SO_EVEN:
        if p is None or q is None or p < 1 or q < 1:
            raise InvalidParameterError(
                f"so-even requires p >= 1 and q >= 1 (got p={p}, q={q})")
        if p + q < 4:
            raise InvalidParameterError(
                f"so-even requires p + q >= 4 (got p+q={p + q})")
        m = p + q
        roots = []
        for i in range(m):
            for j in range(i + 1, m):
                compact = (j < p) or (i >= p)
                roots.append(Root(_eij(m, i, j, -1), compact))
                roots.append(Root(_eij(m, i, j, +1), compact))
        rho = tuple(range(m - 1, -1, -1))
        return RootDatum(SO_EVEN, m, m, p, q, tuple(roots), rho)

    if family == SO_STAR:
        if n is None or n < 4:
            raise InvalidParameterError(f"so-star requires n >= 4 (got n={n})")
        roots = []
        for i in range(n):
            for j in range(i + 1, n):
                roots.append(Root(_eij(n, i, j, -1), True))
                roots.append(Root(_eij(n, i, j, +1), False))
        rho = tuple(range(n - 1, -1, -1))
        return RootDatum(SO_STAR, n, n, 0, 0, tuple(roots), rho)

    if family == G2:
        # Positive roots of the standard system; the two compact ones are
        # the simple roots of k = su(2) + su(2).
        data = [
            ((1, -1, 0), True),
            ((-1, 0, 1), False),
            ((0, -1, 1), False),
            ((-2, 1, 1), False),
            ((-1, -1, 2), True),
            ((1, -2, 1), False),
        ]
        roots = tuple(Root(w, c) for w, c in data)
        return RootDatum(G2, 3, 2, 0, 0, roots, G2_RHO1)

    raise InvalidParameterError(f"unknown family {family!r}; expected one of {FAMILIES}")


def pairing(mu: Vector, h: Vector) -> int:
    """Exact pairing <mu, h> = sum of coordinatewise products."""
    if len(mu) != len(h):
        raise ValueError(f"dimension mismatch: {len(mu)} vs {len(h)}")
    return sum(a * b for a, b in zip(mu, h))


def is_k_dominant(mu: Vector, datum: RootDatum) -> bool:
    """True iff mu pairs nonnegatively with every compact positive root."""
    return all(pairing(r.weight, mu) >= 0 for r in datum.positive_roots if r.compact)


def is_g_dominant(mu: Vector, datum: RootDatum) -> bool:
    """True iff mu pairs nonnegatively with every positive root."""
    return all(pairing(r.weight, mu) >= 0 for r in datum.positive_roots)
