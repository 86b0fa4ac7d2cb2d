"""From 3D ideals to affine-invariant extended cyclic codes.

An invariant ideal I of the box prescribes a defining set: every exponent s
in 0..p^m-1 whose base-p digit sums (grouped by position mod 3) land in I.
The code is the joint kernel of the power-sum constraints sum_g a_g g^s = 0
over GF(p^m), read as a linear system over the coefficient field GF(p^r) by
expanding each constraint into coordinates over a subfield basis.  Dimension
and distinctness always come from exact row reduction; nothing is inferred
from defining-set sizes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .errors import CapExceeded, NotInvariant, OutOfRange
from .fields import DEFAULT_FIELD_CAP, SmallField
from .order import Params, Point3, precedes3, rotate

DEFAULT_SCAN_CAP = 10**7


def digit_class_sums(s: int, params: Params) -> tuple[int, int, int]:
    """Base-p digit sums of s grouped by digit position modulo 3."""
    p, m = params.p, params.m
    if not 0 <= s < p**m:
        raise OutOfRange(f"s = {s} outside [0, {p ** m})")
    acc = [0, 0, 0]
    for pos in range(m):
        acc[pos % 3] += s % p
        s //= p
    return (acc[0], acc[1], acc[2])


def composition_counts(params: Params) -> list[int]:
    """counts[t] = number of (m/3)-tuples of digits in [0, p-1] summing to t."""
    p, length = params.p, params.m // 3
    counts = [1]
    for _ in range(length):
        nxt = [0] * (len(counts) + p - 1)
        for t, c in enumerate(counts):
            for dgt in range(p):
                nxt[t + dgt] += c
        counts = nxt
    return counts


def preimage_count(ideal: frozenset[Point3], params: Params) -> int:
    """Number of exponents whose digit-class sums land in the ideal."""
    counts = composition_counts(params)
    top = len(counts) - 1
    total = 0
    for (a, b, c) in ideal:
        if 0 <= a <= top and 0 <= b <= top and 0 <= c <= top:
            total += counts[a] * counts[b] * counts[c]
    return total


def preimage_list(
    ideal: frozenset[Point3], params: Params, cap: int = DEFAULT_SCAN_CAP
) -> list[int]:
    """Ascending exponent list; refuses scans beyond ``cap`` values."""
    p, m, n = params.p, params.m, params.n
    q = p**m
    if q > cap:
        raise CapExceeded(f"scan of {q} exponents exceeds cap {cap}")
    member = np.zeros((n + 1, n + 1, n + 1), dtype=bool)
    for (a, b, c) in ideal:
        member[a, b, c] = True
    values = np.arange(q, dtype=np.int64)
    rem = values.copy()
    sums = np.zeros((3, q), dtype=np.int64)
    for pos in range(m):
        sums[pos % 3] += rem % p
        rem //= p
    mask = member[sums[0], sums[1], sums[2]]
    return [int(v) for v in values[mask]]


def is_invariant_ideal(ideal: frozenset[Point3], params: Params) -> bool:
    """Downward closed in the box and, for r = 1, rotation-fixed."""
    n, p = params.n, params.p
    for u in ideal:
        if not all(0 <= c <= n for c in u):
            return False
    if params.r == 1 and any(rotate(u) not in ideal for u in ideal):
        return False
    box = [
        (x, y, z)
        for x in range(n + 1)
        for y in range(n + 1)
        for z in range(n + 1)
    ]
    for w in box:
        if w in ideal:
            continue
        if any(precedes3(w, u, p) for u in ideal):
            return False
    return True


def violated_condition(ideal: frozenset[Point3], params: Params) -> Optional[str]:
    """Human-readable reason a set fails :func:`is_invariant_ideal`."""
    n, p = params.n, params.p
    for u in ideal:
        if not all(0 <= c <= n for c in u):
            return f"point {u} outside the box"
    if params.r == 1:
        for u in ideal:
            if rotate(u) not in ideal:
                return f"rotation image of {u} missing"
    for u in ideal:
        for x in range(n + 1):
            for y in range(n + 1):
                for z in range(n + 1):
                    w = (x, y, z)
                    if w not in ideal and precedes3(w, u, p):
                        return f"{w} below {u} but missing"
    return None


@dataclass
class CodeSpec:
    """A built code: defining data plus the expanded constraint system."""

    params: Params
    ideal: frozenset[Point3]
    defining_count: int
    defining: list[int]
    fld: SmallField = field(repr=False)
    element_order: list[int] = field(repr=False)
    rref: list[list[int]] = field(repr=False)
    pivots: list[int] = field(repr=False)

    @property
    def dimension(self) -> int:
        return len(self.element_order) - len(self.pivots)

    def fingerprint(self) -> tuple:
        return tuple(tuple(row) for row in self.rref)

    def summary(self) -> dict:
        """JSON-ready digest of the built code."""
        return {
            "p": self.params.p,
            "m": self.params.m,
            "r": self.params.r,
            "ideal_points": sorted(self.ideal),
            "defining_count": self.defining_count,
            "dimension": self.dimension,
        }


def _power_row(fld: SmallField, order: Sequence[int], s: int) -> list[int]:
    return [fld.power(g, s) for g in order]


def _expand_rows(
    fld: SmallField, rows: list[list[int]], r: int
) -> list[list[int]]:
    """Split GF(p^m)-valued rows into k/r coordinate rows over GF(p^r)."""
    coord_cache: dict[int, list[int]] = {}

    def coords(e: int) -> list[int]:
        got = coord_cache.get(e)
        if got is None:
            got = fld.coordinates(e, r)
            coord_cache[e] = got
        return got

    out = []
    width = fld.k // r
    for row in rows:
        cols = [coords(e) for e in row]
        for t in range(width):
            out.append([c[t] for c in cols])
    return out


def _rref(fld: SmallField, rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over the subfield containing all entries."""
    mat = [row[:] for row in rows]
    pivots: list[int] = []
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = fld.inv(mat[rank][col])
        mat[rank] = [fld.mul(inv, v) for v in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][col]:
                f = mat[i][col]
                mat[i] = [
                    fld.sub(a, fld.mul(f, b)) for a, b in zip(mat[i], mat[rank])
                ]
        pivots.append(col)
        rank += 1
    return mat[:rank], pivots


def _reduce_against(
    fld: SmallField, rref: list[list[int]], pivots: list[int], row: list[int]
) -> list[int]:
    out = row[:]
    for rrow, col in zip(rref, pivots):
        f = out[col]
        if f:
            out = [fld.sub(a, fld.mul(f, b)) for a, b in zip(out, rrow)]
    return out


def build_code(
    ideal: frozenset[Point3],
    params: Params,
    cap_field: int = DEFAULT_FIELD_CAP,
    with_list: bool = True,
) -> CodeSpec:
    """Materialize the power-sum constraint system of an invariant ideal."""
    if not is_invariant_ideal(ideal, params):
        raise NotInvariant(violated_condition(ideal, params) or "not invariant")
    q = params.p**params.m
    if q > cap_field:
        raise CapExceeded(f"field size {q} exceeds cap {cap_field}")
    fld = SmallField(params.p, params.m, cap=cap_field)
    order = fld.elements_in_order()
    defining = preimage_list(ideal, params, cap=max(q, DEFAULT_SCAN_CAP))
    rows = [_power_row(fld, order, s) for s in defining]
    expanded = _expand_rows(fld, rows, params.r)
    rref, pivots = _rref(fld, expanded) if expanded else ([], [])
    return CodeSpec(
        params=params,
        ideal=ideal,
        defining_count=preimage_count(ideal, params),
        defining=defining if with_list else [],
        fld=fld,
        element_order=order,
        rref=rref,
        pivots=pivots,
    )


def code_dimension(spec: CodeSpec) -> int:
    return spec.dimension


def kernel_basis(spec: CodeSpec) -> list[list[int]]:
    """Basis codewords of the kernel over GF(p^r), from the echelon form."""
    fld = spec.fld
    ncols = len(spec.element_order)
    pivot_set = set(spec.pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        vec = [0] * ncols
        vec[f] = 1
        for row, col in zip(spec.rref, spec.pivots):
            vec[col] = fld.neg(row[f])
        basis.append(vec)
    return basis


def word_in_code(spec: CodeSpec, word: list[int]) -> bool:
    """Evaluate every expanded constraint on an explicit word."""
    fld = spec.fld
    for row in spec.rref:
        acc = 0
        for a, b in zip(row, word):
            if a and b:
                acc = fld.add(acc, fld.mul(a, b))
        if acc:
            return False
    return True


def in_sum_zero_space(spec: CodeSpec) -> bool:
    """Whether every codeword has coordinate sum zero."""
    ones = [1] * len(spec.element_order)
    return not any(_reduce_against(spec.fld, spec.rref, spec.pivots, ones))


# -- the affine group action --


def _coordinate_maps(fld: SmallField):
    k = fld.k // 3
    to_coords = {e: fld.coordinates(e, 3) for e in range(fld.order)}

    def from_coords(cs: list[int]) -> int:
        return fld.from_coordinates(cs, 3)

    return k, to_coords, from_coords


def agl_generators(
    params: Params, cap_field: int = DEFAULT_FIELD_CAP, fld: Optional[SmallField] = None
) -> list[tuple[int, ...]]:
    """Permutations of the canonical element order generating the affine
    group of the field viewed as a module over its degree-3 subfield.

    Generators: one translation per module basis vector, the scalar action
    of a degree-3-subfield generator on the first coordinate, and (when the
    module rank exceeds one) a transvection and a cyclic basis shift.
    """
    q = params.p**params.m
    if q > cap_field:
        raise CapExceeded(f"field size {q} exceeds cap {cap_field}")
    if fld is None:
        fld = SmallField(params.p, params.m, cap=cap_field)
    order = fld.elements_in_order()
    index = {e: i for i, e in enumerate(order)}
    k, to_coords, from_coords = _coordinate_maps(fld)
    # multiplicative generator of the degree-3 subfield
    theta = fld.exp[(fld.order - 1) // (params.p**3 - 1)]

    def perm_of(fn) -> tuple[int, ...]:
        return tuple(index[fn(e)] for e in order)

    gens = []
    x_elem = params.p if params.m > 1 else 1
    for t in range(k):
        basis_vec = fld._raw_pow(x_elem, t)
        gens.append(perm_of(lambda e, b=basis_vec: fld.add(e, b)))

    def scale_first(e: int) -> int:
        cs = to_coords[e][:]
        cs[0] = fld.mul(theta, cs[0])
        return from_coords(cs)

    gens.append(perm_of(scale_first))
    if k >= 2:

        def transvect(e: int) -> int:
            cs = to_coords[e][:]
            cs[0] = fld.add(cs[0], cs[1])
            return from_coords(cs)

        def shift_basis(e: int) -> int:
            cs = to_coords[e]
            return from_coords(cs[1:] + cs[:1])

        gens.append(perm_of(transvect))
        gens.append(perm_of(shift_basis))
    return gens


def group_closure_order(gens: list[tuple[int, ...]], limit: int = 10**6) -> int:
    """Size of the permutation group generated (breadth-first closure)."""
    n = len(gens[0])
    identity = tuple(range(n))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                comp = tuple(h[i] for i in g)
                if comp not in seen:
                    seen.add(comp)
                    nxt.append(comp)
                    if len(seen) > limit:
                        raise CapExceeded("group closure beyond limit")
        frontier = nxt
    return len(seen)


def verify_invariance(spec: CodeSpec, gens: list[tuple[int, ...]]) -> bool:
    """Whether the code is stable under every generator permutation.

    Checked on the constraint side: each power-sum row pulled back along a
    generator must stay inside the row space of the expanded system, which
    is equivalent to the permuted code being contained in the code.
    """
    fld = spec.fld
    order = spec.element_order
    for perm in gens:
        for s in spec.defining:
            pulled = [fld.power(order[perm[i]], s) for i in range(len(order))]
            for row in _expand_rows(fld, [pulled], spec.params.r):
                if any(_reduce_against(fld, spec.rref, spec.pivots, row)):
                    return False
    return True


def verify_invariance_on_words(
    spec: CodeSpec, gens: list[tuple[int, ...]]
) -> bool:
    """Codeword-level variant: permute each kernel basis word and re-check
    membership by constraint evaluation (small fields only)."""
    if len(spec.element_order) > 2**10:
        raise CapExceeded("codeword-level check capped to small fields")
    basis = kernel_basis(spec)
    for perm in gens:
        for word in basis:
            permuted = [0] * len(word)
            for i, v in enumerate(word):
                permuted[perm[i]] = v
            if not word_in_code(spec, permuted):
                return False
    return True
