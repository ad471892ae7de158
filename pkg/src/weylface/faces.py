"""Faces of the Weyl-orbit polytope: closed-form vertices and Dirac sets.

A face is the set of orbit points maximizing the pairing with a k-dominant
H.  Two independent constructions are provided:

* ``face_closed_form`` builds the vertex set directly from the block
  structure of H.  Group the coordinates by |H|-value into tiers; the tier
  with the j-th largest |H| receives the j-th largest run of magnitudes of
  rho.  Vertices distribute each tier's magnitudes over its positions in all
  ways, with the sign of each entry forced to the sign of H there.  The
  zero tier takes arbitrary sign patterns for sp and an even number of sign
  changes for the type D families (since the magnitude 0 always lands in the
  zero tier, every sign pattern occurs as a vector there too).

* ``face_from_wl`` materializes the reflection subgroup of the roots
  vanishing on H and sweeps the orbit of the distinguished k-dominant vertex
  rho'.

Their agreement, and agreement with the brute-force argmax over the full
orbit, is what the oracle module certifies.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

from .errors import InternalConsistencyError
from .parabolic import Descriptor, h_from_descriptor, levi_from_h, validate_descriptor
from .root_data import (G2, G2_RHOS, SO_EVEN, SO_STAR, SP, RootDatum, Vector,
                        is_k_dominant)
from .weyl import DEFAULT_CAP, apply, generate_subgroup

G2_RHO_PRIME_TABLE: dict[str, Vector] = {
    "trivial": G2_RHOS[0],
    "ds1": G2_RHOS[0],
    "ds2": G2_RHOS[1],
    "ds3": G2_RHOS[2],
    "L1": G2_RHOS[2],
    "L2": G2_RHOS[0],
}

# Vertex sets of the six g2 faces; the trivial case is the full 12-point
# orbit and is generated on demand.
G2_FACE_TABLE: dict[str, tuple[Vector, ...]] = {
    "ds1": (G2_RHOS[0],),
    "ds2": (G2_RHOS[1],),
    "ds3": (G2_RHOS[2],),
    "L1": (G2_RHOS[2], G2_RHOS[1]),
    "L2": (G2_RHOS[0], G2_RHOS[1]),
}


@dataclass(frozen=True)
class Face:
    h: Vector
    rho_prime: Vector
    vertices: frozenset[Vector]
    dirac: frozenset[Vector]


def dirac_cohomology(vertices: frozenset[Vector] | set[Vector],
                     datum: RootDatum) -> frozenset[Vector]:
    """The k-dominant vertices of a face."""
    return frozenset(v for v in vertices if is_k_dominant(v, datum))


def _magnitudes(datum: RootDatum) -> list[int]:
    """|rho| entries in descending order: n..1 for sp, n-1..0 for type D."""
    return sorted((abs(x) for x in datum.rho), reverse=True)


def _tiers(h: Vector) -> list[tuple[int, list[int]]]:
    """Positions grouped by |H| value, largest value first."""
    groups: dict[int, list[int]] = {}
    for i, v in enumerate(h):
        groups.setdefault(abs(v), []).append(i)
    return sorted(groups.items(), reverse=True)


def rho_prime_closed_form(d: Descriptor, datum: RootDatum) -> Vector:
    """The distinguished k-dominant vertex of the face of a descriptor.

    Magnitudes of rho are consumed in descending order, one tier of H at a
    time.  Within a tier the positive positions on the first side take the
    larger magnitudes; a flagged (negative) position takes the smallest
    magnitude of its tier, negated.  Zero-tier positions take the remaining
    smallest magnitudes with positive sign, again first side first.
    """
    validate_descriptor(d, datum)
    if d.family == G2:
        return G2_RHO_PRIME_TABLE[d.case]

    h = h_from_descriptor(d, datum)
    mags = _magnitudes(datum)
    out = [0] * datum.n
    pos_cursor = 0
    for value, positions in _tiers(h):
        take, pos_cursor = mags[pos_cursor:pos_cursor + len(positions)], \
            pos_cursor + len(positions)
        if value == 0:
            for i, m in zip(positions, take):
                out[i] = m
            continue
        flagged = [i for i in positions if h[i] < 0]
        plain = [i for i in positions if h[i] > 0]
        # flagged positions (at most one per side, x before y) get the
        # smallest magnitudes of the tier, negated
        flagged.sort()
        for k, i in enumerate(flagged):
            out[i] = -take[len(take) - 1 - k]
        for i, m in zip(plain, take):
            out[i] = m
    return tuple(out)


def _zero_sign_patterns(k: int, family: str, has_zero: bool):
    """Sign patterns for the zero tier: all for sp, else an even number of
    flips, with any pattern allowed once the magnitude 0 is in the tier."""
    for signs in product((1, -1), repeat=k):
        if family != SP and not has_zero and signs.count(-1) % 2 == 1:
            continue
        yield signs


def face_closed_form(d: Descriptor, datum: RootDatum) -> Face:
    """Vertex set generated tier by tier from the block structure of H."""
    validate_descriptor(d, datum)
    rp = rho_prime_closed_form(d, datum)

    if d.family == G2:
        h = h_from_descriptor(d, datum)
        if d.case == "trivial":
            verts = _g2_orbit()
        else:
            verts = frozenset(G2_FACE_TABLE[d.case])
        return Face(h, rp, verts, dirac_cohomology(verts, datum))

    h = h_from_descriptor(d, datum)
    groups = []
    for value, positions in _tiers(h):
        mags = sorted((abs(rp[i]) for i in positions), reverse=True)
        groups.append((value, positions, mags))

    verts: set[Vector] = set()
    cur = [0] * datum.n

    def fill(gi: int) -> None:
        if gi == len(groups):
            verts.add(tuple(cur))
            return
        value, positions, mags = groups[gi]
        if value > 0:
            for perm in set(permutations(mags)):
                for i, m in zip(positions, perm):
                    cur[i] = m if h[i] > 0 else -m
                fill(gi + 1)
        else:
            has_zero = 0 in mags
            for perm in set(permutations(mags)):
                for signs in _zero_sign_patterns(len(positions), d.family, has_zero):
                    for i, m, sg in zip(positions, perm, signs):
                        cur[i] = sg * m
                    fill(gi + 1)

    fill(0)
    return Face(h, rp, frozenset(verts), dirac_cohomology(verts, datum))


def _g2_orbit() -> frozenset[Vector]:
    """The 12-point orbit of the g2 half sum: signed coordinate permutations."""
    base = G2_RHOS[0]
    out = set()
    for perm in permutations(range(3)):
        for eps in (1, -1):
            v = [0, 0, 0]
            for j in range(3):
                v[perm[j]] = eps * base[j]
            out.add(tuple(v))
    return frozenset(out)


def face_from_wl(d: Descriptor, datum: RootDatum, cap: int = DEFAULT_CAP) -> Face:
    """Independent construction: sweep rho' with the reflection subgroup of
    the roots vanishing on H."""
    validate_descriptor(d, datum)
    h = h_from_descriptor(d, datum)
    rp = rho_prime_closed_form(d, datum)
    levi = levi_from_h(h, datum)
    zero_pos = [r for r in datum.positive_roots if r.weight in levi.zero_roots]
    subgroup = generate_subgroup(zero_pos, datum, cap=cap)
    verts = frozenset(apply(w, rp) for w in subgroup.elements)
    return Face(h, rp, verts, dirac_cohomology(verts, datum))


def check_face_in_orbit(face: Face, orbit_points: frozenset[Vector]) -> None:
    """Guard used by tests and the oracle: vertices must lie in the orbit."""
    stray = face.vertices - orbit_points
    if stray:
        raise InternalConsistencyError(
            f"{len(stray)} vertices outside the orbit, e.g. {sorted(stray)[:3]}")
