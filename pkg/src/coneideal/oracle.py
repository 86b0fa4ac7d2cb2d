"""Brute-force ground truth for ideals, extensions and layer filtering.

Everything here works on explicit point sets and the raw order predicates;
nothing routes through the walk calculus, so these functions can referee it.
The down-set enumerator recurses over a linear extension (coordinate sum
first, which is strictly monotone for the cone order) and therefore costs
O(number of ideals) rather than O(2^points).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Literal

from .errors import TooLarge
from .order import Params, Point2, Point3, precedes2, precedes3, rotate
from .walks import Rect

MAX_POSET = 80


@dataclass
class FinitePoset:
    """Materialized finite poset: points plus per-point predecessor bitmasks."""

    points: tuple
    down: tuple[int, ...]  # down[i] = bitmask of strict predecessors of i

    @property
    def size(self) -> int:
        return len(self.points)


def poset_from(points: Iterable, leq: Callable) -> FinitePoset:
    pts = tuple(points)
    if len(pts) > MAX_POSET:
        raise TooLarge(f"{len(pts)} points exceeds the oracle cap {MAX_POSET}")
    down = []
    for i, u in enumerate(pts):
        mask = 0
        for j, w in enumerate(pts):
            if i != j and leq(w, u):
                mask |= 1 << j
        down.append(mask)
    return FinitePoset(pts, tuple(down))


def box_poset(n: int, p: int) -> FinitePoset:
    """The 3D box {0..n}^3 under the cone order, in a linear extension."""
    pts = sorted(
        ((x, y, z) for x in range(n + 1) for y in range(n + 1) for z in range(n + 1)),
        key=lambda q: (q[0] + q[1] + q[2], q[2], q[1], q[0]),
    )
    return poset_from(pts, lambda u, v: precedes3(u, v, p))


def rect_poset(rect: Rect, p: int) -> FinitePoset:
    """A 2D rectangle under the planar cone order, in a linear extension."""
    pts = sorted(rect.points(), key=lambda q: (q[0] + q[1], q[1], q[0]))
    return poset_from(pts, lambda u, v: precedes2(u, v, p))


def brute_ideals(
    poset: FinitePoset, symmetry: Literal["none", "rotation"] = "none"
) -> list[frozenset]:
    """All down-sets of the poset, optionally filtered to rotation-fixed ones.

    The recursion decides membership point by point along the stored order;
    a point may join only when all its predecessors already did, which is
    sound because the order is a linear extension.
    """
    n = poset.size
    down = poset.down
    masks: list[int] = []

    def rec(k: int, mask: int) -> None:
        if k == n:
            masks.append(mask)
            return
        rec(k + 1, mask)
        if down[k] & ~mask == 0:
            rec(k + 1, mask | (1 << k))

    rec(0, 0)
    index = {q: i for i, q in enumerate(poset.points)}
    if symmetry == "rotation":
        rot = [index[rotate(q)] for q in poset.points]
        masks = [
            m
            for m in masks
            if all((m >> i) & 1 == (m >> rot[i]) & 1 for i in range(n))
        ]
    out = []
    for m in masks:
        out.append(frozenset(q for i, q in enumerate(poset.points) if (m >> i) & 1))
    return out


def brute_ideals_by_filter(poset: FinitePoset) -> list[frozenset]:
    """Reference implementation by raw subset filtering (tiny posets only)."""
    n = poset.size
    if n > 18:
        raise TooLarge(f"{n} points is too many for subset filtering")
    out = []
    for m in range(1 << n):
        if all(poset.down[i] & ~m == 0 for i in range(n) if (m >> i) & 1):
            out.append(
                frozenset(q for i, q in enumerate(poset.points) if (m >> i) & 1)
            )
    return out


def brute_extension(
    restriction: frozenset[Point2],
    small: Rect,
    big: Rect,
    which: Literal["largest", "smallest"],
    p: int,
) -> frozenset[Point2]:
    """Extremal ideal of big with the prescribed intersection with small."""
    if small.width * (small.d - small.c + 1) > 144 or big.width * (
        big.d - big.c + 1
    ) > 400:
        raise TooLarge("rectangle beyond the oracle extension cap")
    if which == "smallest":
        return frozenset(
            w
            for w in big.points()
            if any(precedes2(w, u, p) for u in restriction)
        )
    missing = [u for u in small.points() if u not in restriction]
    return frozenset(
        w
        for w in big.points()
        if not any(precedes2(u, w, p) for u in missing)
    )


def all_rect_ideals(rect: Rect, p: int) -> list[frozenset[Point2]]:
    return brute_ideals(rect_poset(rect, p))


class LayerOracle:
    """Raw pairwise machinery for slab consistency at one (p, n).

    For planar ideals A (at height z_u) and B (at height z_u + dz), the slab
    condition "everything under A at offset dz lies in B" depends only on
    dz, so the reach sets R(A, dz) are tabulated once per ideal and offset
    and slab checks become subset tests on bitmasks.
    """

    def __init__(self, params: Params):
        self.params = params
        n, p = params.n, params.p
        self.rect = Rect(0, n, 0, n)
        self.cells = [(x, y) for x in range(n + 1) for y in range(n + 1)]
        self.cell_index = {q: i for i, q in enumerate(self.cells)}
        self.ideals = sorted(
            all_rect_ideals(self.rect, p),
            key=lambda s: tuple(sorted(s)),
        )
        self.masks = [self._mask(s) for s in self.ideals]
        self.mask_index = {m: i for i, m in enumerate(self.masks)}
        self._reach: dict[tuple[int, int], int] = {}

    def _mask(self, pts: frozenset[Point2]) -> int:
        m = 0
        for q in pts:
            m |= 1 << self.cell_index[q]
        return m

    def mask_of(self, pts: frozenset[Point2]) -> int:
        return self._mask(pts)

    def reach(self, ideal_idx: int, dz: int) -> int:
        """Mask of box cells w with (w, dz) below some point of the ideal."""
        key = (ideal_idx, dz)
        got = self._reach.get(key)
        if got is not None:
            return got
        p = self.params.p
        pts = self.ideals[ideal_idx]
        m = 0
        for i, w in enumerate(self.cells):
            if any(
                precedes3((w[0], w[1], dz), (u[0], u[1], 0), p) for u in pts
            ):
                m |= 1 << i
        self._reach[key] = m
        return m

    def pair_ok(self, src: int, dz: int, dst: int) -> bool:
        """Cells forced dz heights away from layer ``src`` all lie in ``dst``.

        A layer at height h forces reach(src, h' - h) at height h'.
        """
        return self.reach(src, dz) & ~self.masks[dst] == 0

    def consistent_next(
        self,
        assigned: dict[int, int],
        i: int,
    ) -> list[int]:
        """Indices of ideals consistent at height i with assigned layers.

        ``assigned`` maps heights to ideal indices; consistency is the raw
        slab condition against every assigned layer in both directions.
        """
        out = []
        for cand in range(len(self.ideals)):
            ok = True
            for j, idx in assigned.items():
                if not self.pair_ok(idx, i - j, cand):
                    ok = False
                    break
                if not self.pair_ok(cand, j - i, idx):
                    ok = False
                    break
            if ok:
                out.append(cand)
        return out


def slab_is_ideal(layers: dict[int, frozenset[Point2]], params: Params) -> bool:
    """Raw 3D downward-closure of a union of layers inside its height range."""
    p, n = params.p, params.n
    heights = sorted(layers)
    pts = set()
    for z, s in layers.items():
        pts.update((x, y, z) for (x, y) in s)
    for z in heights:
        for x in range(n + 1):
            for y in range(n + 1):
                w = (x, y, z)
                if w in pts:
                    continue
                if any(precedes3(w, u, p) for u in pts):
                    return False
    return True


def rotation_invariant_3d(points: frozenset[Point3]) -> bool:
    return all(rotate(u) in points for u in points)


def ideal_3d(points: frozenset[Point3], n: int, p: int) -> bool:
    """Raw test that a point set is an ideal of the box {0..n}^3."""
    for u in points:
        if not all(0 <= c <= n for c in u):
            return False
    for x in range(n + 1):
        for y in range(n + 1):
            for z in range(n + 1):
                w = (x, y, z)
                if w in points:
                    continue
                if any(precedes3(w, u, p) for u in points):
                    return False
    return True


def brute_layer_candidates(
    context: Literal["backward", "forward", "symmetric"],
    prefix: dict[int, frozenset[Point2]],
    i: int,
    params: Params,
) -> list[frozenset[Point2]]:
    """Ground-truth consistent next layers by raw 3D closure tests.

    For the slicing contexts, prefix maps heights to planar ideals of the
    full layer host and candidates are ideals of that host.  For the
    symmetric context, prefix maps shell indices j to ideals of [0,j]^2 and
    candidates are the palindromic ideals of [0,i]^2 whose rotated union
    with the prefix shells is a rotation-invariant ideal of [0,i]^3.
    """
    if params.n > 3:
        raise TooLarge("layer-candidate oracle capped at n <= 3")
    if context in ("backward", "forward"):
        rect = Rect(0, params.n, 0, params.n)
        out = []
        for cand in all_rect_ideals(rect, params.p):
            layers = dict(prefix)
            layers[i] = cand
            if slab_is_ideal(layers, params):
                out.append(cand)
        return out
    # symmetric shells
    out = []
    base: set[Point3] = set()
    for j, s in prefix.items():
        for (x, y) in s:
            u = (x, y, j)
            base.add(u)
            base.add(rotate(u))
            base.add(rotate(rotate(u)))
    for cand in all_rect_ideals(Rect(0, i, 0, i), params.p):
        top = {x for (x, y) in cand if y == i}
        right = {y for (x, y) in cand if x == i}
        if top != right:
            continue
        pts = set(base)
        for (x, y) in cand:
            u = (x, y, i)
            pts.add(u)
            pts.add(rotate(u))
            pts.add(rotate(rotate(u)))
        if ideal_3d(frozenset(pts), i, params.p) and rotation_invariant_3d(
            frozenset(pts)
        ):
            out.append(cand)
    return out
