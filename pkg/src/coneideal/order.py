"""Exact integer kernel for the cone partial orders on Z^3 and Z^2.

The 3D order is defined by a circulant matrix P with entries p^((i-j) mod e):
u precedes v when every coordinate of (u - v)P is <= 0.  Restricting to a
plane parallel to the xy-plane gives a planar cone

    D = {(x, y) : x + p*y <= 0,  p^2*x + y <= 0},

and all 2D work in this package happens in the order defined by D.  Every
predicate here is integer-only; rational cone anchors are handled by clearing
denominators inside the comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import OutOfRange

Point2 = tuple[int, int]
Point3 = tuple[int, int, int]

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(x: int) -> bool:
    if x < 2:
        return False
    for q in _SMALL_PRIMES:
        if x == q:
            return True
        if x % q == 0:
            return False
    d, r = x - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 37):  # deterministic for x < 3.3e24
        w = pow(a % x, d, x)
        if w in (1, x - 1):
            continue
        for _ in range(r - 1):
            w = w * w % x
            if w == x - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Params:
    """Instance parameters: prime p, exponent m with 3 | m, and r in {1, 3}.

    The derived side length is n = (m/3)(p-1); the 3D box is {0..n}^3.
    """

    p: int
    m: int
    r: int = 3
    e: int = 3

    def __post_init__(self) -> None:
        if self.e != 3:
            raise OutOfRange("only e = 3 is supported")
        if not is_prime(self.p):
            raise OutOfRange(f"p = {self.p} is not prime")
        if self.m <= 0 or self.m % 3 != 0:
            raise OutOfRange(f"m = {self.m} must be a positive multiple of 3")
        if self.r not in (1, 3):
            raise OutOfRange(f"r = {self.r} must be 1 or 3")

    @property
    def n(self) -> int:
        return (self.m // 3) * (self.p - 1)


def circulant_row_image(d: tuple[int, ...], p: int) -> tuple[int, ...]:
    """Row vector d times the e x e circulant with entries p^((i-j) mod e)."""
    e = len(d)
    return tuple(
        sum(d[i] * p ** ((i - j) % e) for i in range(e)) for j in range(e)
    )


def precedes3(u: Point3, v: Point3, p: int) -> bool:
    """Whether u precedes v in the 3D cone order for the prime p."""
    d = (u[0] - v[0], u[1] - v[1], u[2] - v[2])
    d0, d1, d2 = d
    p2 = p * p
    return (
        d0 + d1 * p + d2 * p2 <= 0
        and d0 * p2 + d1 + d2 * p <= 0
        and d0 * p + d1 * p2 + d2 <= 0
    )


def precedes_generic(u: tuple[int, ...], v: tuple[int, ...], p: int) -> bool:
    """Generic-e variant of :func:`precedes3` (kept for e = 2 regressions)."""
    d = tuple(a - b for a, b in zip(u, v))
    return all(c <= 0 for c in circulant_row_image(d, p))


def precedes2(u: Point2, v: Point2, p: int) -> bool:
    """Whether u precedes v in the planar order: u - v lies in the cone D."""
    dx = u[0] - v[0]
    dy = u[1] - v[1]
    return dx + p * dy <= 0 and p * p * dx + dy <= 0


def rotate(u: Point3) -> Point3:
    """Cyclic coordinate rotation (x, y, z) -> (y, z, x); order three."""
    return (u[1], u[2], u[0])


def cone_slice_anchor(c: int, p: int) -> tuple[Fraction, Fraction]:
    """Anchor of the z = c cross-section of the 3D cone, as a translate of D.

    The section is D shifted by (0, -cp) for c >= 0 and by (-c/p, 0) for
    c < 0.  The rational anchor is returned exactly; membership tests should
    go through :func:`in_slice` which clears the denominator.
    """
    if c >= 0:
        return (Fraction(0), Fraction(-c * p))
    return (Fraction(-c, p), Fraction(0))


def in_slice(w: Point2, c: int, p: int) -> bool:
    """Whether w lies in the z = c cross-section anchor + D (integer test)."""
    x, y = w
    if c >= 0:
        # (x, y + c*p) in D
        return x + p * (y + c * p) <= 0 and p * p * x + (y + c * p) <= 0
    # (x + c/p, y) in D, multiplied through by p where needed
    return p * x + c + p * p * y <= 0 and p * p * x + p * c + y <= 0


def rational_shift_covers(c: int, p: int) -> tuple[Point2, Point2]:
    """Two integer translates of D covering the lattice points of c(1/p,0)+D.

    With c = a*p + b, 0 <= b <= p-1, the integer points of the rationally
    shifted cone equal those of the union of D + (a, 0) and
    D + (a+1, -p^2 + p*b).
    """
    a, b = divmod(c, p)
    return ((a, 0), (a + 1, -p * p + p * b))


def section_precedes(u: Point3, v: Point3, p: int) -> bool:
    """Cross-section form of :func:`precedes3` via the planar cone D.

    Equivalent to precedes3 by construction; exposed for coherence tests.
    """
    dz = u[2] - v[2]
    return in_slice((u[0] - v[0], u[1] - v[1]), dz, p)
