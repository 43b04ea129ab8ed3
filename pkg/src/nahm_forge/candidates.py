"""Catalog of the fourteen rank-two candidate families.

Each family fixes a matrix A and symmetrizer vector d and lists the printed
offset vectors b.  Families are numbered 1..14 in their source order;
families 2k-1 and 2k are dual to each other (A inverted, b mapped through
A^-1, in matching list order), which the test suite checks exactly.
"""

from dataclasses import dataclass
from fractions import Fraction as F

from .nahm import NahmQuadruple, quadruple


@dataclass(frozen=True)
class Family:
    index: int
    A: tuple
    d: tuple
    bs: tuple

    def quadruples(self, c=0) -> list[NahmQuadruple]:
        return [quadruple(self.A, b, c, self.d) for b in self.bs]


FAMILIES = (
    Family(1, ((2, 1), (2, 2)), (1, 2),
           ((0, 0), (0, 1), (-1, -1), (F(-1, 2), 0), (1, 2))),
    Family(2, ((1, F(-1, 2)), (-1, 1)), (1, 2),
           ((0, 0), (F(-1, 2), 1), (F(-1, 2), 0), (F(-1, 2), F(1, 2)), (0, 1))),
    Family(3, ((1, F(1, 2)), (1, 1)), (1, 2),
           ((0, 0), (0, 1), (1, 1))),
    Family(4, ((2, -1), (-2, 2)), (1, 2),
           ((0, 0), (-1, 2), (1, 0))),
    Family(5, ((4, 2), (6, 4)), (1, 3),
           ((0, 0),)),
    Family(6, ((1, F(-1, 2)), (F(-3, 2), 1)), (1, 3),
           ((0, 0),)),
    Family(7, ((2, 1), (3, 2)), (1, 3),
           ((0, 0), (1, 3), (2, 3))),
    Family(8, ((2, -1), (-3, 2)), (1, 3),
           ((0, 0), (-1, 3), (1, 0))),
    Family(9, ((3, 2), (4, 4)), (1, 2),
           ((F(-1, 2), 0), (F(1, 2), 2))),
    Family(10, ((1, F(-1, 2)), (-1, F(3, 4))), (1, 2),
           ((F(-1, 2), F(1, 2)), (F(-1, 2), 1))),
    Family(11, ((F(3, 2), F(1, 2)), (1, 1)), (1, 2),
           ((-1, 1), (F(-1, 2), 0), (0, 1))),
    Family(12, ((1, F(-1, 2)), (-1, F(3, 2))), (1, 2),
           ((F(-3, 2), F(5, 2)), (F(-1, 2), F(1, 2)), (F(-1, 2), F(3, 2)))),
    Family(13, ((3, 1), (4, 2)), (1, 4),
           ((F(-1, 2), 0), (F(3, 2), 4))),
    Family(14, ((1, F(-1, 2)), (-2, F(3, 2))), (1, 4),
           ((F(-1, 2), 1), (F(-1, 2), 3))),
)


DUAL_PAIRS = tuple((FAMILIES[2 * k], FAMILIES[2 * k + 1]) for k in range(7))


def family(index: int) -> Family:
    return FAMILIES[index - 1]
