"""Shared fixtures: transcribed reference walks and the worked code example."""

from __future__ import annotations

import pytest

from coneideal.order import Params
from coneideal.walks import Rect, Walk

# 14-point rotation-invariant ideal of the p=3, m=6 box (worked example)
EXAMPLE_IDEAL = frozenset(
    {
        (0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1),
        (0, 1, 1), (1, 0, 1), (1, 1, 0), (1, 1, 1),
        (2, 0, 0), (0, 2, 0), (0, 0, 2),
        (3, 0, 0), (0, 3, 0), (0, 0, 3),
    }
)

# its reference defining set (42 exponents)
EXAMPLE_DEFINING = [
    0, 1, 2, 3, 4, 6, 9, 10, 12, 13, 18, 27, 28, 29, 30, 36, 39, 54,
    55, 81, 82, 84, 87, 90, 91, 108, 117, 162, 165, 243, 244,
    246, 247, 252, 261, 270, 273, 324, 325, 351, 486, 495,
]

# Backward-slicing reference run: p=3, n=8.  W = chosen layer walks,
# X/Y = printed interval bounds, ALPHA = printed nonempty lookahead.
BACKWARD_U = Rect(0, 8, 0, 8)
BACKWARD_W = {
    8: ((0, 1), (1, 1), (1, 0)),
    7: ((0, 3), (0, 2), (1, 2), (1, 1), (2, 1), (2, 0)),
    6: ((0, 4), (1, 4), (1, 2), (3, 2), (3, 1), (4, 1), (4, 0), (6, 0)),
    5: ((0, 4), (2, 4), (2, 3), (4, 3), (4, 2), (5, 2), (5, 1), (8, 1)),
    4: ((0, 6), (0, 5), (3, 5), (3, 4), (5, 4), (5, 3), (8, 3)),
    3: ((0, 6), (0, 5), (3, 5), (3, 4), (5, 4), (5, 3), (8, 3)),
    2: ((1, 8), (1, 6), (3, 6), (3, 4), (5, 4), (5, 3), (8, 3)),
    1: ((2, 8), (2, 7), (4, 7), (4, 6), (7, 6), (7, 3), (8, 3)),
    0: ((6, 8), (6, 6), (7, 6), (7, 5), (8, 5)),
}
BACKWARD_X = {
    7: ((0, 1), (1, 1), (1, 0)),
    6: ((0, 3), (0, 2), (1, 2), (1, 1), (2, 1), (2, 0)),
    5: ((0, 4), (1, 4), (1, 2), (3, 2), (3, 1), (4, 1), (4, 0), (6, 0)),
    4: ((0, 4), (2, 4), (2, 3), (4, 3), (4, 2), (5, 2), (5, 1), (8, 1)),
    3: ((0, 6), (0, 5), (3, 5), (3, 4), (5, 4), (5, 3), (8, 3)),
    2: ((0, 6), (0, 5), (3, 5), (3, 4), (5, 4), (5, 3), (8, 3)),
    1: ((1, 8), (1, 6), (3, 6), (3, 5), (4, 5), (4, 4), (6, 4), (6, 3), (8, 3)),
    0: ((2, 8), (2, 7), (4, 7), (4, 6), (7, 6), (7, 3), (8, 3)),
}
BACKWARD_Y = {
    7: ((0, 4), (1, 4), (1, 2), (4, 2), (4, 1), (7, 1), (7, 0), (8, 0)),
    6: ((0, 6), (0, 5), (1, 5), (1, 4), (2, 4), (2, 2), (5, 2), (5, 1), (8, 1)),
    5: ((0, 7), (1, 7), (1, 5), (3, 5), (3, 4), (4, 4), (4, 3), (6, 3), (6, 2), (8, 2)),
    4: ((0, 7), (2, 7), (2, 6), (4, 6), (4, 5), (5, 5), (5, 4), (8, 4)),
    3: ((3, 8), (3, 7), (5, 7), (5, 6), (8, 6)),
    2: ((3, 8), (3, 7), (5, 7), (5, 6), (8, 6)),
    1: ((3, 8), (3, 7), (5, 7), (5, 6), (8, 6)),
    0: ((7, 8), (7, 6), (8, 6)),
}
BACKWARD_ALPHA = {7: 1, 6: 2, 5: 2, 4: 2, 3: 2, 2: 2, 1: 2, 0: 2}

# Forward-slicing reference run: p=3, n=6.  The walks at heights 3 and 5
# carry the bottom-row corners their own lower bounds force ((5,0) resp.
# (2,0)); see the bound assertions in the acceptance suite.
FORWARD_U = Rect(0, 6, 0, 6)
FORWARD_W = {
    0: ((5, 6), (5, 1), (6, 1)),
    1: ((5, 6), (5, 0)),
    2: ((3, 6), (3, 3), (5, 3), (5, 0)),
    3: ((0, 5), (1, 5), (1, 4), (3, 4), (3, 1), (4, 1), (4, 0), (5, 0)),
    4: ((0, 3), (2, 3), (2, 1), (3, 1), (3, 0)),
    5: ((0, 2), (1, 2), (1, 0), (2, 0)),
    6: ((0, 1), (1, 1), (1, 0)),
}
FORWARD_X = {  # printed lower bounds (all internally consistent steps)
    1: ((0, 4), (2, 4), (2, 3), (5, 3), (5, 0)),
    2: ((0, 4), (2, 4), (2, 3), (5, 3), (5, 0)),
    3: ((0, 4), (0, 3), (3, 3), (3, 0), (5, 0)),
    4: ((0, 2), (1, 2), (1, 1), (3, 1), (3, 0)),
}
FORWARD_Y = {
    1: ((5, 6), (5, 1), (6, 1)),
    2: ((4, 6), (4, 4), (5, 4), (5, 0)),
    3: ((3, 6), (3, 3), (4, 3), (4, 1), (5, 1), (5, 0)),
    4: ((0, 5), (1, 5), (1, 4), (3, 4), (3, 1), (4, 1), (4, 0)),
    5: ((0, 3), (2, 3), (2, 1), (3, 1), (3, 0)),
}
FORWARD_BETA = {1: 1, 2: 2, 3: 2, 4: 2, 5: 2, 6: 2}

# Symmetric reference run: p=3, n=6 (shell hosts grow with the index).
SYMMETRIC_W = {
    0: ((0, 0),),
    1: ((1, 1),),
    2: ((2, 2),),
    3: ((1, 3), (1, 2), (2, 2), (2, 1), (3, 1)),
    4: ((0, 4), (0, 2), (2, 2), (2, 1), (3, 1), (3, 0), (4, 0)),
    5: ((0, 2), (1, 2), (1, 1), (3, 1), (3, 0), (4, 0)),
    6: ((0, 1), (1, 1), (1, 0)),
}
SYMMETRIC_S = {
    1: (), 2: (), 3: (),
    4: ((0, 0), (1, 0)),
    5: ((0, 1), (0, 0)),
    6: (),
}
SYMMETRIC_T = {
    1: ((1, 1),),
    2: ((2, 2),),
    3: ((3, 3),),
    4: ((1, 4), (1, 2), (2, 2), (2, 1), (4, 1)),
    5: ((0, 5), (0, 2), (2, 2), (2, 1), (3, 1), (3, 0), (5, 0)),
    6: ((0, 2), (1, 2), (1, 1), (2, 1), (2, 0), (3, 0)),
}
# Cross sections of the finished symmetric ideal, heights 0..6
SYMMETRIC_SECTIONS = {
    0: ((1, 6), (1, 5), (2, 5), (2, 4), (5, 4), (5, 1), (6, 1)),
    1: ((1, 6), (1, 5), (2, 5), (2, 3), (5, 3), (5, 1), (6, 1)),
    2: ((0, 5), (1, 5), (1, 4), (2, 4), (2, 2), (4, 2), (4, 1), (5, 1), (5, 0)),
    3: ((0, 5), (1, 5), (1, 2), (2, 2), (2, 1), (3, 1), (3, 0), (4, 0)),
    4: ((0, 5), (0, 2), (2, 2), (2, 1), (3, 1), (3, 0), (4, 0)),
    5: ((0, 2), (1, 2), (1, 1), (3, 1), (3, 0), (4, 0)),
    6: ((0, 1), (1, 1), (1, 0)),
}


def backward_walks() -> dict[int, Walk]:
    return {i: Walk(BACKWARD_U, 3, pts) for i, pts in BACKWARD_W.items()}


def forward_walks() -> dict[int, Walk]:
    return {i: Walk(FORWARD_U, 3, pts) for i, pts in FORWARD_W.items()}


def symmetric_walks() -> list[Walk]:
    return [
        Walk(Rect(0, i, 0, i), 3, SYMMETRIC_W[i]) for i in range(7)
    ]


@pytest.fixture
def example_params() -> Params:
    return Params(p=3, m=6, r=1)
