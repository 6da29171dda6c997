"""Worked examples with known answers.

``worked_*``: a capped domain around E = {4, 7, 11} whose h^rho labels (rho =
coordinate sum, diagonally restricted total-min selection) give the bi-array

    X = (4,4) (7,7) (11,11)      Y =  8 14 22
        (4,7) (4,11) (7,11)           2  2  2
        (7,4) (11,4) (11,7)           6  6 18

Two helper vertices below the cube supply the reports 2 and 6.

``committee_*``: a boss (7,11) with three defined committees reporting 4, 7, 3.
"""

from .committee import RhoFunction, TableSelection, total_min_selection
from .lattice import ExplicitRule, cube, induce

WORKED_E = (4, 7, 11)
WORKED_K = 2
WORKED_X = (
    ((4, 4), (7, 7), (11, 11)),
    ((4, 7), (4, 11), (7, 11)),
    ((7, 4), (11, 4), (11, 7)),
)
WORKED_Y = ((8, 14, 22), (2, 2, 2), (6, 6, 18))
WORKED_PHI_EMPTY = {(4, 4), (7, 7), (11, 11), (11, 7)}

WORKED_EDGES = (
    ((4, 7), (2, 3)),
    ((4, 11), (2, 3)),
    ((7, 11), (2, 3)),
    ((7, 4), (6, 6)),
    ((11, 4), (6, 6)),
)


def worked_domain():
    return set(cube(WORKED_E, WORKED_K)) | {(2, 3), (6, 6)}


def worked_rule():
    return ExplicitRule(WORKED_EDGES)


def worked_graph():
    return induce(worked_rule(), worked_domain(), WORKED_K)


def worked_selection():
    return total_min_selection(diagonal_restricted=True)


def worked_rho():
    return RhoFunction("sum")


def worked_labels():
    from .committee import h_rho

    return h_rho(worked_graph(), worked_selection(), worked_rho())


COMMITTEE_BOSS = (7, 11)
COMMITTEE_EDGES = (
    ((7, 11), (3, 5)),
    ((7, 11), (6, 8)),
    ((7, 11), (8, 7)),
    ((7, 11), (3, 7)),
    ((3, 5), (2, 4)),
    ((6, 8), (4, 5)),
)


def committee_graph():
    vertices = {v for e in COMMITTEE_EDGES for v in e}
    return induce(ExplicitRule(COMMITTEE_EDGES), vertices, 2)


def committee_selection():
    """Committees (ordered, sizes 2 and 3) and the member each one reports."""
    return TableSelection(
        {
            ((7, 11), ((3, 5), (6, 8), (8, 7))): 1,
            ((7, 11), ((6, 8), (8, 7))): 1,
            ((7, 11), ((6, 8), (3, 7))): 1,
            ((3, 5), ((2, 4), (2, 4))): 0,
            ((6, 8), ((4, 5), (4, 5))): 0,
        }
    )
