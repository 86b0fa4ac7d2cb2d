"""Enumeration of all 3D cone ideals of {0..n}^3 by slicing along z (r = 3).

A 3D ideal is a stack of planar ideals J_0,...,J_n of U = [0,n]^2 whose
union of slabs is downward closed in the 3D order.  Given the layers above
height i (backward) or below it (forward), the admissible J_i form a walk
interval [lower, upper]:

* the lower bound joins the neighbouring layer's walk with cone transports
  of the layers p and alpha steps away, where alpha is the largest offset
  1..p-1 whose layer is nonempty;
* the upper bound is the inverse transport of the neighbouring layer's walk
  (and, in the forward direction, of the layers p and beta steps back,
  where beta is the largest offset 1..p-1 whose layer is not full).

An undefined term (offset out of range, or no alpha/beta) is simply left
out of the join/meet.  Interval enumeration recurses over column heights in
lexicographic order, which makes the output stream canonical.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Literal, Optional

from .errors import BoundsInverted, InconsistentInput
from .order import Params
from .walks import (
    IdealSet2,
    Rect,
    Walk,
    empty_walk,
    full_walk,
    highest_extension,
    ideal_transport,
    join_all,
    lowest_extension,
    meet_all,
    restrict,
    shift,
    walk_from_heights,
    walk_leq,
    walk_of,
)

Direction = Literal["backward", "forward"]


def layer_host(params: Params) -> Rect:
    n = params.n
    return Rect(0, n, 0, n)


@dataclass
class LayerSequence:
    """Partial assignment of layer walks, built from one end of the stack."""

    direction: Direction
    params: Params
    walks: dict[int, Walk] = field(default_factory=dict)

    def assigned(self) -> list[int]:
        return sorted(self.walks)

    def walk(self, i: int) -> Walk:
        return self.walks[i]

    def with_layer(self, i: int, w: Walk) -> "LayerSequence":
        new = dict(self.walks)
        new[i] = w
        return LayerSequence(self.direction, self.params, new)


def nonempty_lookahead(i: int, seq: LayerSequence) -> Optional[int]:
    """Largest t with 1 <= t <= p-1, i+t <= n and layer i+t nonempty."""
    p, n = seq.params.p, seq.params.n
    for t in range(min(p - 1, n - i), 0, -1):
        if not seq.walks[i + t].is_empty:
            return t
    return None


def nonfull_lookback(i: int, seq: LayerSequence) -> Optional[int]:
    """Largest t with 1 <= t <= p-1, i-t >= 0 and layer i-t not full."""
    p = seq.params.p
    for t in range(min(p - 1, i), 0, -1):
        if not seq.walks[i - t].is_full:
            return t
    return None


def transport_upper_bound(z: Walk, dx: int, dy: int, target: Rect) -> Walk:
    """Largest walk w over target with transport(w, dx, dy) below z.

    Inverse of :func:`coneideal.walks.ideal_transport`: the highest extension
    of z restricted to the shifted window and translated back.
    """
    window = target.shifted(dx, dy)
    big = z.host.union(window)
    return shift(restrict(highest_extension(z, big), window), -dx, -dy)


def backward_bounds(
    i: int, seq: LayerSequence, params: Params, verify: bool = False
) -> tuple[Walk, Walk]:
    """Walk interval for layer i given backward-consistent layers i+1..n."""
    p, n = params.p, params.n
    u = layer_host(params)
    if i >= n:
        return empty_walk(u, p), full_walk(u, p)
    if verify and not _is_consistent_suffix(i + 1, seq, params):
        raise InconsistentInput(f"layers {i + 1}..{n} are not backward consistent")
    lower_terms = [seq.walk(i + 1)]
    if i + p <= n:
        lower_terms.append(ideal_transport(seq.walk(i + p), 1, 0, u))
    t = nonempty_lookahead(i, seq)
    if t is not None:
        lower_terms.append(
            ideal_transport(seq.walk(i + t), 1, -p * p + p * t, u)
        )
    upper = transport_upper_bound(seq.walk(i + 1), 0, -p, u)
    return join_all(lower_terms), upper


def forward_bounds(
    i: int, seq: LayerSequence, params: Params, verify: bool = False
) -> tuple[Walk, Walk]:
    """Walk interval for layer i given forward-consistent layers 0..i-1."""
    p, n = params.p, params.n
    u = layer_host(params)
    if i <= 0:
        return empty_walk(u, p), full_walk(u, p)
    if verify and not _is_consistent_prefix(i - 1, seq, params):
        raise InconsistentInput(f"layers 0..{i - 1} are not forward consistent")
    lower = ideal_transport(seq.walk(i - 1), 0, -p, u)
    upper_terms = [seq.walk(i - 1)]
    if i - p >= 0:
        upper_terms.append(transport_upper_bound(seq.walk(i - p), 1, 0, u))
    t = nonfull_lookback(i, seq)
    if t is not None:
        upper_terms.append(
            transport_upper_bound(seq.walk(i - t), 1, -p * p + p * t, u)
        )
    return lower, meet_all(upper_terms)


def is_consistent_backward(i: int, candidate: Walk, seq: LayerSequence) -> bool:
    """Direct four-condition test that candidate fits below layers i+1..n."""
    params = seq.params
    p, n = params.p, params.n
    u = layer_host(params)
    if i >= n:
        return True
    if not walk_leq(seq.walk(i + 1), candidate):
        return False
    if not walk_leq(ideal_transport(candidate, 0, -p, u), seq.walk(i + 1)):
        return False
    if i + p <= n and not walk_leq(
        ideal_transport(seq.walk(i + p), 1, 0, u), candidate
    ):
        return False
    t = nonempty_lookahead(i, seq)
    if t is not None and not walk_leq(
        ideal_transport(seq.walk(i + t), 1, -p * p + p * t, u), candidate
    ):
        return False
    return True


def is_consistent_forward(i: int, candidate: Walk, seq: LayerSequence) -> bool:
    """Direct four-condition test that candidate fits above layers 0..i-1."""
    params = seq.params
    p = params.p
    u = layer_host(params)
    if i <= 0:
        return True
    if not walk_leq(candidate, seq.walk(i - 1)):
        return False
    if not walk_leq(ideal_transport(seq.walk(i - 1), 0, -p, u), candidate):
        return False
    if i - p >= 0 and not walk_leq(
        ideal_transport(candidate, 1, 0, u), seq.walk(i - p)
    ):
        return False
    t = nonfull_lookback(i, seq)
    if t is not None and not walk_leq(
        ideal_transport(candidate, 1, -p * p + p * t, u), seq.walk(i - t)
    ):
        return False
    return True


def _is_consistent_suffix(j: int, seq: LayerSequence, params: Params) -> bool:
    for i in range(params.n - 1, j - 1, -1):
        if not is_consistent_backward(i, seq.walk(i), seq):
            return False
    return True


def _is_consistent_prefix(j: int, seq: LayerSequence, params: Params) -> bool:
    for i in range(1, j + 1):
        if not is_consistent_forward(i, seq.walk(i), seq):
            return False
    return True


def _profile_choices(
    x_rel: int,
    prev: Optional[int],
    lo: tuple[int, ...],
    hi: tuple[int, ...],
    host: Rect,
    p: int,
) -> range:
    """Admissible heights for one column given the previous column."""
    c = host.c
    p2 = p * p
    vmin = lo[x_rel]
    vmax = hi[x_rel]
    if prev is not None:
        vmax = min(vmax, prev)
        if prev - p2 >= c:
            vmin = max(vmin, prev - p2)
    return range(vmin, vmax + 1)


def _iter_profiles(
    lo: tuple[int, ...], hi: tuple[int, ...], host: Rect, p: int
) -> Iterator[tuple[int, ...]]:
    """All closed height profiles between lo and hi, lexicographically."""
    width = host.width
    c, d = host.c, host.d
    acc: list[int] = []

    def rec(x: int) -> Iterator[tuple[int, ...]]:
        if x == width:
            yield tuple(acc)
            return
        prev = acc[x - 1] if x > 0 else None
        back = acc[x - p] if x >= p else None
        for v in _profile_choices(x, prev, lo, hi, host, p):
            if v >= c and back is not None and back < d and v > back - 1:
                continue
            acc.append(v)
            yield from rec(x + 1)
            acc.pop()

    return rec(0)


def enumerate_interval(lower: Walk, upper: Walk) -> Iterator[Walk]:
    """Every walk between lower and upper, in column-height lex order."""
    if not walk_leq(lower, upper):
        raise BoundsInverted(f"{lower.points} above {upper.points}")
    host, p = lower.host, lower.p
    for hs in _iter_profiles(lower.heights(), upper.heights(), host, p):
        yield walk_from_heights(hs, host, p)


def count_interval(lower: Walk, upper: Walk) -> int:
    """Number of walks between lower and upper (memoized column DP)."""
    if not walk_leq(lower, upper):
        raise BoundsInverted(f"{lower.points} above {upper.points}")
    host, p = lower.host, lower.p
    lo, hi = lower.heights(), upper.heights()
    width = host.width
    c, d = host.c, host.d
    cache: dict[tuple[int, tuple[int, ...]], int] = {}

    def rec(x: int, window: tuple[int, ...]) -> int:
        # window holds the last min(x, p) chosen heights
        if x == width:
            return 1
        key = (x, window)
        hit = cache.get(key)
        if hit is not None:
            return hit
        prev = window[-1] if window else None
        back = window[0] if x >= p else None
        total = 0
        for v in _profile_choices(x, prev, lo, hi, host, p):
            if v >= c and back is not None and back < d and v > back - 1:
                continue
            total += rec(x + 1, (window + (v,))[-p:])
        cache[key] = total
        return total

    return rec(0, ())


def enumerate_all_r3(
    params: Params,
    mode: Literal["count", "stream"] = "count",
    direction: Direction = "backward",
    shards: Optional[tuple[int, int]] = None,
):
    """Count or stream every 3D ideal of the box, layer by layer.

    Stream mode yields tuples of walks indexed by z = 0..n.  With
    ``shards = (index, total)`` only the top-level branches congruent to
    index modulo total are explored.
    """
    if mode == "count":
        return _count_r3(params, direction, shards)
    return _stream_r3(params, direction, shards)


def _levels(params: Params, direction: Direction) -> list[int]:
    order = list(range(params.n, -1, -1))
    return order if direction == "backward" else order[::-1]


def _bounds_for(
    i: int, seq: LayerSequence, params: Params, direction: Direction
) -> tuple[Walk, Walk]:
    if direction == "backward":
        return backward_bounds(i, seq, params)
    return forward_bounds(i, seq, params)


def _count_r3(
    params: Params, direction: Direction, shards: Optional[tuple[int, int]]
) -> int:
    levels = _levels(params, direction)
    seq = LayerSequence(direction, params)

    def rec(depth: int, seq: LayerSequence) -> int:
        i = levels[depth]
        lower, upper = _bounds_for(i, seq, params, direction)
        if depth == len(levels) - 1:
            return count_interval(lower, upper)
        total = 0
        for pos, w in enumerate(enumerate_interval(lower, upper)):
            if depth == 0 and shards is not None and pos % shards[1] != shards[0]:
                continue
            total += rec(depth + 1, seq.with_layer(i, w))
        return total

    return rec(0, seq)


def _stream_r3(
    params: Params, direction: Direction, shards: Optional[tuple[int, int]]
) -> Iterator[tuple[Walk, ...]]:
    levels = _levels(params, direction)

    def rec(depth: int, seq: LayerSequence) -> Iterator[tuple[Walk, ...]]:
        if depth == len(levels):
            yield tuple(seq.walk(i) for i in range(params.n + 1))
            return
        i = levels[depth]
        lower, upper = _bounds_for(i, seq, params, direction)
        for pos, w in enumerate(enumerate_interval(lower, upper)):
            if depth == 0 and shards is not None and pos % shards[1] != shards[0]:
                continue
            yield from rec(depth + 1, seq.with_layer(i, w))

    return rec(0, LayerSequence(direction, params))


def layers_to_points(layers: tuple[Walk, ...]) -> frozenset[tuple[int, int, int]]:
    """3D point set of a full layer stack."""
    out = []
    for z, w in enumerate(layers):
        out.extend((x, y, z) for (x, y) in w.ideal_points())
    return frozenset(out)


def equivalent_transport_conditions(
    j_set: IdealSet2, k_set: IdealSet2, a: int, b: int, p: int
) -> tuple[bool, bool, bool, bool, bool, bool]:
    """Six independent forms of "(ideal J) + cone + (a, -b) lands inside K".

    Conditions 1-3 are evaluated on explicit point sets (with the enlarged
    host and its largest extension computed by raw order tests); conditions
    4-6 are their boundary-walk counterparts.  All six agree for ideals of a
    common host and a, b >= 0; exposed for property testing.
    """
    from .order import precedes2

    u = j_set.host
    if k_set.host != u:
        raise InconsistentInput("both ideals must share a host")
    big = Rect(u.a, u.b + a, u.c - b, u.d)
    window = u.shifted(a, -b)
    j_max = _maximal_points(j_set, p)

    def reaches(w: tuple[int, int]) -> bool:
        return any(
            precedes2(w, (ux + a, uy - b), p) for (ux, uy) in j_max
        )

    # largest ideal of big restricting to K, by raw exclusion
    k_missing = [q for q in u.points() if q not in k_set.points]
    k_bar = frozenset(
        w
        for w in big.points()
        if not any(precedes2(q, w, p) for q in k_missing)
    )

    cond1 = not any(
        reaches(w) for w in u.points() if w not in k_set.points
    )
    cond2 = all((x + a, y - b) in k_bar for (x, y) in j_set.points)
    cond3 = not any(reaches(w) for w in big.points() if w not in k_bar)

    w_walk = walk_of(j_set, p)
    z_walk = walk_of(k_set, p)
    moved = shift(w_walk, a, -b)
    low_ext = lowest_extension(moved, big)
    high_ext = highest_extension(z_walk, big)
    cond4 = walk_leq(restrict(low_ext, u), z_walk)
    cond5 = walk_leq(moved, restrict(high_ext, window))
    cond6 = walk_leq(low_ext, high_ext)
    return (cond1, cond2, cond3, cond4, cond5, cond6)


def _maximal_points(s: IdealSet2, p: int) -> list[tuple[int, int]]:
    return list(walk_of(s, p).points)
