"""Published reference values used by the verification suites."""
from .algebra import WeightPoly
from .core import parse_tree

FIG1_TREE = parse_tree("3(3(2(_,3),4(_,1(3,3))),1(4,1(3(_,2),_)))")
FIG1_STATS = (4, 3, 2, 3)
FIG1_X = (1, 1, 1, 2, 2, 3, 3, 3, 3, 3, 3, 4, 4)
FIG1_PATH = (3, 3, 4, 1, 3)

# word 42534242 with its step sequence, and the expected f-values
EXAMPLE_WORD = (4, 2, 5, 3, 4, 2, 4, 2)
EXAMPLE_STEPS_TEXT = ("1", "D", "2", "D", "D", "U", "2(2,1)")
EXAMPLE_F = (
    ("rd*ld", (1,)),
    ("ra", ()),
    ("rd*ld", (2,)),
    ("ra", ()),
    ("rd", ()),
    ("la", ()),
    ("rd^2*la*ld", (1, 2, 2)),
)
EXAMPLE_EDGE = "ra^2*rd^5*la^2*ld^3"
EXAMPLE_X = (1, 1, 2, 2, 2, 2, 2, 2, 3, 4, 4, 4, 5)

E_COEFFICIENTS = {
    (1,): "1",
    (2,): "ra + rd + la + ld",
    (3,): "ra^2 + ra*rd + rd^2 + 2*ra*la + rd*la + la^2 + ra*ld + 2*rd*ld + la*ld + ld^2",
    (2, 1): "ra*rd + ra*la + rd*la + ra*ld + rd*ld + la*ld",
    (3, 2, 1): (
        "2*ra^3*rd^2 + 2*ra^2*rd^3 + 12*ra^3*rd*la + 18*ra^2*rd^2*la + 8*ra*rd^3*la"
        " + 6*ra^3*la^2 + 28*ra^2*rd*la^2 + 18*ra*rd^2*la^2 + 2*rd^3*la^2 + 6*ra^2*la^3"
        " + 12*ra*rd*la^3 + 2*rd^2*la^3 + 8*ra^3*rd*ld + 18*ra^2*rd^2*ld + 12*ra*rd^3*ld"
        " + 12*ra^3*la*ld + 56*ra^2*rd*la*ld + 56*ra*rd^2*la*ld + 12*rd^3*la*ld"
        " + 28*ra^2*la^2*ld + 56*ra*rd*la^2*ld + 18*rd^2*la^2*ld + 12*ra*la^3*ld"
        " + 8*rd*la^3*ld + 2*ra^3*ld^2 + 18*ra^2*rd*ld^2 + 28*ra*rd^2*ld^2 + 6*rd^3*ld^2"
        " + 18*ra^2*la*ld^2 + 56*ra*rd*la*ld^2 + 28*rd^2*la*ld^2 + 18*ra*la^2*ld^2"
        " + 18*rd*la^2*ld^2 + 2*la^3*ld^2 + 2*ra^2*ld^3 + 12*ra*rd*ld^3 + 6*rd^2*ld^3"
        " + 8*ra*la*ld^3 + 12*rd*la*ld^3 + 2*la^2*ld^3"
    ),
}
BLEEDING_321_COUNT = 12


def e_coefficient_reference(pi):
    return WeightPoly.parse(E_COEFFICIENTS[tuple(pi)])


# rows: (monomials, values over cycle types 1^n, ..., n)
CHARACTER_TABLES = {
    3: [
        (("ra^2", "rd^2", "la^2", "ld^2"), (1, 1, 1)),
        (("ra*rd", "ra*ld", "rd*la", "la*ld"), (4, 2, 1)),
        (("ra*la", "rd*ld"), (5, 3, 2)),
    ],
    4: [
        (("ra^3", "rd^3", "la^3", "ld^3"), (1, 1, 1, 1, 1)),
        (("ra^2*rd", "ra^2*ld", "ra*rd^2", "ra*ld^2", "rd^2*la", "rd*la^2", "la^2*ld",
          "la*ld^2"), (11, 5, 3, 2, 1)),
        (("ra^2*la", "ra*la^2", "rd^2*ld", "rd*ld^2"), (17, 9, 5, 5, 3)),
        (("ra*rd*la", "ra*rd*ld", "ra*la*ld", "rd*la*ld"), (44, 16, 8, 5, 2)),
    ],
    5: [
        (("ra^4", "rd^4", "la^4", "ld^4"), (1, 1, 1, 1, 1, 1, 1)),
        (("ra^3*rd", "ra^3*ld", "ra*rd^3", "ra*ld^3", "rd^3*la", "rd*la^3", "la^3*ld",
          "la*ld^3"), (26, 12, 6, 5, 3, 2, 1)),
        (("ra^3*la", "ra*la^3", "rd^3*ld", "rd*ld^3"), (49, 25, 13, 13, 7, 7, 4)),
        (("ra^2*rd^2", "ra^2*ld^2", "rd^2*la^2", "la^2*ld^2"), (66, 22, 10, 6, 4, 2, 1)),
        (("ra^2*la^2", "rd^2*ld^2"), (146, 60, 26, 26, 12, 12, 6)),
        (("ra^2*rd*ld", "ra*rd^2*la", "ra*la*ld^2", "rd*la^2*ld"), (237, 73, 29, 18, 10, 5, 2)),
        (("ra^2*rd*la", "ra^2*la*ld", "ra*rd^2*ld", "ra*rd*la^2", "ra*rd*ld^2", "ra*la^2*ld",
          "rd^2*la*ld", "rd*la*ld^2"), (288, 94, 36, 27, 13, 8, 3)),
        (("ra*rd*la*ld",), (824, 228, 80, 50, 24, 12, 4)),
    ],
}

SW3_AT_S1 = {(3,): {0: 1, 1: 1, 2: 1}, (2, 1): {1: 1}}   # t-exponent -> coefficient

CATALAN_TIMES_FACTORIAL = (1, 4, 30, 336, 5040, 95040)
CAYLEY = (1, 3, 16, 125, 1296, 16807)
