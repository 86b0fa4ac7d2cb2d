"""Boundary walks of planar cone ideals in integer rectangles.

An ideal of a rectangle [a,b] x [c,d] under the planar cone order is
determined by its column heights: a vector h with h[x] in {c-1} | [c,d]
(c-1 meaning an empty column) that is non-increasing, drops by at most p^2
between adjacent columns, and rises by at least 1 over any span of p columns
while below the top edge.  The boundary walk is the staircase of corner
points of that profile: horizontal steps of length <= p (<= p-1 for a
leading step) alternating with vertical steps of length <= p^2 (<= p^2-1
for a trailing step).

Everything here is exact integer arithmetic.  Walks are immutable; the host
rectangle and the prime travel with the walk so host mismatches are
detectable.  The two extension operations realize their semantic contracts
(largest/smallest ideal of a bigger rectangle with a prescribed restriction)
by per-column threshold formulas rather than point-set searches.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal

from .errors import HostMismatch, InvalidWalk, NoSuchWalk, NotAnIdeal
from .order import Point2, precedes2


@dataclass(frozen=True, order=True)
class Rect:
    """Integer rectangle [a, b] x [c, d] with a <= b and c <= d."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        if self.a > self.b or self.c > self.d:
            raise InvalidWalk(f"degenerate rectangle bounds {self}")

    @property
    def width(self) -> int:
        return self.b - self.a + 1

    def contains(self, pt: Point2) -> bool:
        return self.a <= pt[0] <= self.b and self.c <= pt[1] <= self.d

    def contains_rect(self, other: "Rect") -> bool:
        return (
            self.a <= other.a
            and other.b <= self.b
            and self.c <= other.c
            and other.d <= self.d
        )

    def union(self, other: "Rect") -> "Rect":
        return Rect(
            min(self.a, other.a),
            max(self.b, other.b),
            min(self.c, other.c),
            max(self.d, other.d),
        )

    def points(self) -> Iterator[Point2]:
        for x in range(self.a, self.b + 1):
            for y in range(self.c, self.d + 1):
                yield (x, y)

    def shifted(self, dx: int, dy: int) -> "Rect":
        return Rect(self.a + dx, self.b + dx, self.c + dy, self.d + dy)


@dataclass(frozen=True)
class Walk:
    """A corner sequence bounding an ideal of ``host``; empty means the
    empty ideal.  Corners are stored without intermediate lattice points."""

    host: Rect
    p: int
    points: tuple[Point2, ...] = ()

    @property
    def is_empty(self) -> bool:
        return not self.points

    @property
    def is_full(self) -> bool:
        return self.points == ((self.host.b, self.host.d),)

    def heights(self) -> tuple[int, ...]:
        """Column heights of the bounded ideal; host.c - 1 marks empty."""
        a, b, c, _ = self.host.a, self.host.b, self.host.c, self.host.d
        hs = [c - 1] * (b - a + 1)
        pts = self.points
        k = len(pts)
        i = 0
        for x in range(a, b + 1):
            while i < k and pts[i][0] < x:
                i += 1
            if i == k:
                break
            hs[x - a] = pts[i][1]
        return tuple(hs)

    def size(self) -> int:
        c = self.host.c
        return sum(h - c + 1 for h in self.heights() if h >= c)

    def ideal_points(self) -> frozenset[Point2]:
        """Materialize the bounded ideal as a point set."""
        a, c = self.host.a, self.host.c
        out = []
        for i, h in enumerate(self.heights()):
            out.extend((a + i, y) for y in range(c, h + 1))
        return frozenset(out)

    def contains(self, pt: Point2) -> bool:
        """Membership of pt in the bounded ideal (False outside the host)."""
        if not self.host.contains(pt):
            return False
        for x, y in self.points:
            if pt[0] <= x and pt[1] <= y:
                return True
        return False

    def to_obj(self) -> dict:
        """JSON-ready form: host [a,b,c,d] plus the corner pair array."""
        h = self.host
        return {"host": [h.a, h.b, h.c, h.d], "points": [list(q) for q in self.points]}


def walk_from_obj(obj: dict, p: int) -> Walk:
    host = Rect(*obj["host"])
    w = Walk(host, p, tuple((int(x), int(y)) for x, y in obj["points"]))
    if not validate_walk(w):
        raise InvalidWalk(f"corner list is not a walk: {obj}")
    return w


def validate_walk(w: Walk) -> bool:
    """Check the five step rules; True for the empty walk."""
    pts = w.points
    if not pts:
        return True
    a, b, c, d = w.host.a, w.host.b, w.host.c, w.host.d
    p = w.p
    if any(not w.host.contains(q) for q in pts):
        return False
    x0, y0 = pts[0]
    xk, yk = pts[-1]
    if not (x0 == a or y0 == d):
        return False
    if not (xk == b or yk == c):
        return False
    steps = []  # (kind, length) with kind 'h' or 'v'
    for (px, py), (qx, qy) in zip(pts, pts[1:]):
        if qy == py and 1 <= qx - px <= p:
            steps.append(("h", qx - px))
        elif qx == px and 1 <= py - qy <= p * p:
            steps.append(("v", py - qy))
        else:
            return False
    for s, t in zip(steps, steps[1:]):
        if s[0] == t[0]:
            return False
    if steps:
        if a <= x0 < b and y0 == d and steps[0][0] != "v":
            return False
        if xk == b and c <= yk < d and steps[-1][0] != "h":
            return False
        if steps[0][0] == "h" and steps[0][1] > p - 1:
            return False
        if steps[-1][0] == "v" and steps[-1][1] > p * p - 1:
            return False
    return True


def walk_from_heights(hs: tuple[int, ...], host: Rect, p: int) -> Walk:
    """Build the canonical walk for a height profile.

    Raises NotAnIdeal when the profile violates closure: increasing heights,
    a drop beyond p^2 (p^2 - 1 into an empty tail), or a run wider than the
    step rules admit.
    """
    a, b, c, d = host.a, host.b, host.c, host.d
    if len(hs) != host.width:
        raise NotAnIdeal("height profile does not match the host width")
    p2 = p * p
    prev = None
    for i, h in enumerate(hs):
        if h > d or h < c - 1:
            raise NotAnIdeal(f"height {h} outside [{c - 1}, {d}]")
        if prev is not None:
            if h > prev:
                raise NotAnIdeal("heights increase to the right")
            if prev >= c and prev - p2 >= c and h < prev - p2:
                raise NotAnIdeal("drop exceeds the vertical step bound")
        if i >= p and c <= h < d and hs[i - p] < d and h > hs[i - p] - 1:
            raise NotAnIdeal("run below the top edge is wider than allowed")
        prev = h
    # collect runs of equal height over nonempty columns
    runs: list[tuple[int, int, int]] = []  # (left, right, height)
    for i, h in enumerate(hs):
        if h < c:
            break
        if runs and runs[-1][2] == h:
            left, _, _ = runs[-1]
            runs[-1] = (left, a + i, h)
        else:
            runs.append((a + i, a + i, h))
    if not runs:
        return Walk(host, p)
    corners: list[Point2] = []
    l1, r1, h1 = runs[0]
    if h1 == d:
        corners.append((r1, d))
    else:
        corners.append((a, h1))
        if r1 > a:
            corners.append((r1, h1))
    for _, r, h in runs[1:]:
        corners.append((corners[-1][0], h))
        corners.append((r, h))
    rk, hk = runs[-1][1], runs[-1][2]
    if rk < b and hk > c:
        corners.append((rk, c))
    return Walk(host, p, tuple(corners))


def empty_walk(host: Rect, p: int) -> Walk:
    return Walk(host, p)


def full_walk(host: Rect, p: int) -> Walk:
    return Walk(host, p, ((host.b, host.d),))


@dataclass(frozen=True)
class IdealSet2:
    """Explicit planar ideal: a host rectangle and a point set."""

    host: Rect
    points: frozenset[Point2]


def ideal_of(w: Walk) -> IdealSet2:
    if not validate_walk(w):
        raise InvalidWalk(f"invalid walk {w.points} in {w.host}")
    return IdealSet2(w.host, w.ideal_points())


def walk_of(s: IdealSet2, p: int) -> Walk:
    """Inverse of :func:`ideal_of`; raises NotAnIdeal when s is not closed."""
    a, b, c, d = s.host.a, s.host.b, s.host.c, s.host.d
    hs = [c - 1] * s.host.width
    for x, y in s.points:
        if not s.host.contains((x, y)):
            raise NotAnIdeal(f"point {(x, y)} outside host {s.host}")
        hs[x - a] = max(hs[x - a], y)
    expected = sum(h - c + 1 for h in hs if h >= c)
    if expected != len(s.points):
        raise NotAnIdeal("columns are not bottom-anchored intervals")
    return walk_from_heights(tuple(hs), s.host, p)


def _require_same_host(w1: Walk, w2: Walk) -> None:
    if w1.host != w2.host or w1.p != w2.p:
        raise HostMismatch(f"{w1.host} (p={w1.p}) vs {w2.host} (p={w2.p})")


def walk_leq(w1: Walk, w2: Walk) -> bool:
    """Containment of bounded ideals."""
    _require_same_host(w1, w2)
    return all(h1 <= h2 for h1, h2 in zip(w1.heights(), w2.heights()))


def meet(w1: Walk, w2: Walk) -> Walk:
    _require_same_host(w1, w2)
    hs = tuple(min(h1, h2) for h1, h2 in zip(w1.heights(), w2.heights()))
    return walk_from_heights(hs, w1.host, w1.p)


def join(w1: Walk, w2: Walk) -> Walk:
    _require_same_host(w1, w2)
    hs = tuple(max(h1, h2) for h1, h2 in zip(w1.heights(), w2.heights()))
    return walk_from_heights(hs, w1.host, w1.p)


def meet_all(walks: list[Walk]) -> Walk:
    out = walks[0]
    for w in walks[1:]:
        out = meet(out, w)
    return out


def join_all(walks: list[Walk]) -> Walk:
    out = walks[0]
    for w in walks[1:]:
        out = join(out, w)
    return out


def restrict(w: Walk, sub: Rect) -> Walk:
    """Walk of the bounded ideal intersected with a subrectangle."""
    if not w.host.contains_rect(sub):
        raise HostMismatch(f"{sub} not inside {w.host}")
    hs = w.heights()
    a = w.host.a
    out = []
    for x in range(sub.a, sub.b + 1):
        h = min(hs[x - a], sub.d)
        out.append(h if h >= sub.c else sub.c - 1)
    return walk_from_heights(tuple(out), sub, w.p)


def shift(w: Walk, dx: int, dy: int) -> Walk:
    """Translate a walk (and its host) by (dx, dy)."""
    return Walk(
        w.host.shifted(dx, dy),
        w.p,
        tuple((x + dx, y + dy) for x, y in w.points),
    )


def _ceil_div(num: int, den: int) -> int:
    return -((-num) // den)


def _reach_down_heights(gens: list[Point2], big: Rect, p: int) -> tuple[int, ...]:
    """Heights of {w in big : w precedes some generator} (cone closure)."""
    a, b, c, d = big.a, big.b, big.c, big.d
    p2 = p * p
    hs = []
    for x in range(a, b + 1):
        best = c - 1
        for ux, uy in gens:
            cap = min((p * uy + ux - x) // p, uy + p2 * (ux - x))
            if cap > best:
                best = cap
        hs.append(min(best, d) if best >= c else c - 1)
    return tuple(hs)


def _avoid_up_heights(excluded: list[Point2], big: Rect, p: int) -> tuple[int, ...]:
    """Heights of big minus the upward closure of the excluded points."""
    a, b, c, d = big.a, big.b, big.c, big.d
    p2 = p * p
    hs = []
    for x in range(a, b + 1):
        cap = d
        for ux, uy in excluded:
            thr = max(_ceil_div(p * uy + ux - x, p), p2 * (ux - x) + uy) - 1
            if thr < cap:
                cap = thr
        hs.append(cap if cap >= c else c - 1)
    return tuple(hs)


def lowest_extension(z: Walk, big: Rect) -> Walk:
    """Walk of the smallest ideal of ``big`` restricting to z's ideal.

    This is the cone closure of the ideal inside the bigger rectangle;
    the closure is generated by the walk corners.
    """
    if not big.contains_rect(z.host):
        raise HostMismatch(f"{z.host} not inside {big}")
    if z.is_empty:
        return Walk(big, z.p)
    return walk_from_heights(
        _reach_down_heights(list(z.points), big, z.p), big, z.p
    )


def highest_extension(z: Walk, big: Rect) -> Walk:
    """Walk of the largest ideal of ``big`` restricting to z's ideal.

    The complement of that ideal is the upward closure of the points of the
    small host just above z, so one threshold per small-host column decides
    each big-host column height.
    """
    if not big.contains_rect(z.host):
        raise HostMismatch(f"{z.host} not inside {big}")
    small = z.host
    hs = z.heights()
    excluded = [
        (small.a + i, h + 1) for i, h in enumerate(hs) if h < small.d
    ]
    if not excluded:
        return full_walk(big, z.p)
    return walk_from_heights(_avoid_up_heights(excluded, big, z.p), big, z.p)


def ideal_transport(w: Walk, dx: int, dy: int, target: Rect) -> Walk:
    """Walk of [(ideal of w) + cone + (dx, dy)] intersected with target.

    Computed as restrict(lowest_extension(shift(w, dx, dy), big), target)
    where big covers both the shifted host and the target; the result does
    not depend on the choice of big.
    """
    moved = shift(w, dx, dy)
    big = moved.host.union(target)
    return restrict(lowest_extension(moved, big), target)


def smallest_containing(pt: Point2, host: Rect, p: int) -> Walk:
    """Walk of the smallest ideal of host containing pt."""
    if not host.contains(pt):
        raise NoSuchWalk(f"{pt} outside {host}")
    return walk_from_heights(_reach_down_heights([pt], host, p), host, p)


def largest_avoiding(pt: Point2, host: Rect, p: int) -> Walk:
    """Walk of the largest ideal of host not containing pt."""
    if not host.contains(pt):
        return full_walk(host, p)
    return walk_from_heights(_avoid_up_heights([pt], host, p), host, p)


WalkKind = Literal[
    "lowest-start", "highest-start", "lowest-end", "highest-end", "lowest-through"
]


def extremal_walk(host: Rect, anchor: Point2, kind: WalkKind, p: int) -> Walk:
    """The least/greatest walk of a family anchored at a boundary point.

    Families: walks starting at the anchor, walks ending at the anchor, and
    walks whose ideal contains the anchor ("lowest-through").  Start/end
    anchors must be legal walk endpoints for the host.
    """
    if not host.contains(anchor):
        raise NoSuchWalk(f"anchor {anchor} outside host {host}")
    x, y = anchor
    a, b, c, d = host.a, host.b, host.c, host.d
    if kind == "lowest-through":
        return smallest_containing(anchor, host, p)
    if kind == "lowest-start":
        if x != a and y != d:
            raise NoSuchWalk(f"no walk starts at {anchor} in {host}")
        return smallest_containing(anchor, host, p)
    if kind == "lowest-end":
        if x != b and y != c:
            raise NoSuchWalk(f"no walk ends at {anchor} in {host}")
        return smallest_containing(anchor, host, p)
    if kind == "highest-start":
        if anchor == (b, d):
            return full_walk(host, p)
        if y == d:
            return largest_avoiding((x + 1, d), host, p)
        if x == a:
            return largest_avoiding((a, y + 1), host, p)
        raise NoSuchWalk(f"no walk starts at {anchor} in {host}")
    if kind == "highest-end":
        if anchor == (b, d):
            return full_walk(host, p)
        if x == b:
            return largest_avoiding((b, y + 1), host, p)
        if y == c:
            return largest_avoiding((x + 1, c), host, p)
        raise NoSuchWalk(f"no walk ends at {anchor} in {host}")
    raise NoSuchWalk(f"unknown walk family {kind!r}")


def is_closed_point_set(points: frozenset[Point2], host: Rect, p: int) -> bool:
    """Raw downward-closure test used by oracle-grade checks."""
    for u in points:
        for w in host.points():
            if w not in points and precedes2(w, u, p):
                return False
    return True
