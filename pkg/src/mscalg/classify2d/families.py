"""The two-dimensional classification tables as data.

Each entry is one :class:`Family`: a 2x4 template of expressions in the
parameters ``a1, a2, a4, b1, b2`` (standing for alpha_1, alpha_2, alpha_4,
beta_1, beta_2) plus the constraints that single out the representatives.
Tables are keyed by ``(property, char class)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from ..field import FieldSpec
from .predicates import AllOf, AnyOf, Eq, FieldIs, HasRoot, HasSolution, Ne, NoRoot, NoSolution, Predicate


class CharClass(enum.Enum):
    NOT_TWO_THREE = "NotTwoThree"
    TWO = "Two"
    THREE = "Three"

    @classmethod
    def of(cls, F: FieldSpec) -> CharClass:
        return {2: cls.TWO, 3: cls.THREE}.get(F.char, cls.NOT_TWO_THREE)


class Property(enum.Enum):
    TRIV_DER = "TrivDer"
    TRIV_AUT = "TrivAut"
    SIMPLE = "Simple"
    STAR = "Star"
    DER_NOT_AUT = "DerNotAut"
    AUT_NOT_DER = "AutNotDer"

    @classmethod
    def parse(cls, name: str | Property) -> Property:
        if isinstance(name, Property):
            return name
        key = name.replace("_", "").replace("-", "").lower()
        for prop in cls:
            if prop.value.lower() == key:
                return prop
        raise ValueError(f"unknown property {name!r}")


@dataclass(frozen=True)
class Family:
    id: str
    char_class: CharClass
    tags: frozenset
    template: tuple[tuple[str, ...], tuple[str, ...]]
    params: tuple[str, ...]
    constraints: tuple[Predicate, ...] = ()

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "char_class": self.char_class.value,
            "tags": sorted(t.value for t in self.tags),
            "template": [list(r) for r in self.template],
            "params": list(self.params),
            "constraints": [c.to_json() for c in self.constraints],
        }


# -- templates ---------------------------------------------------------------

T = {
    "A1": (("a1", "a2", "1+a2", "a4"), ("b1", "-a1", "1-a1", "-a2")),
    "A1_2": (("a1", "a2", "a2+1", "a4"), ("b1", "a1", "1+a1", "a2")),
    "A2": (("a1", "0", "0", "a4"), ("1", "b2", "1-a1", "0")),
    "A2_2": (("a1", "0", "0", "a4"), ("1", "b2", "1+a1", "0")),
    "A3": (("a1", "0", "0", "a4"), ("0", "b2", "1-a1", "0")),
    "A3_2": (("a1", "0", "0", "a4"), ("0", "b2", "1+a1", "0")),
    "A4": (("0", "1", "1", "0"), ("b1", "b2", "1", "-1")),
    "A4_2": (("a1", "1", "1", "0"), ("b1", "b2", "1+a1", "1")),
    "A5_2": (("a1", "0", "0", "a4"), ("1", "1+a1", "a1", "0")),
    "A6": (("a1", "0", "0", "a4"), ("1", "1-a1", "-a1", "0")),
    "A6_2": (("a1", "0", "0", "a4"), ("0", "1+a1", "a1", "0")),
    "A7": (("a1", "0", "0", "a4"), ("0", "1-a1", "-a1", "0")),
    "A7_2": (("a1", "1", "1", "0"), ("b1", "1+a1", "a1", "1")),
    "A8": (("0", "1", "1", "0"), ("b1", "1", "0", "-1")),
    "A8_2": (("0", "1", "1", "1"), ("b1", "0", "0", "1")),
    "A10": (("0", "1", "1", "1"), ("b1", "0", "0", "-1")),
    "A11": (("0", "0", "0", "1"), ("b1", "0", "0", "0")),
    "A12": (("0", "1", "1", "0"), ("b1", "0", "0", "-1")),
    "A10_2": (("1", "1", "1", "0"), ("b1", "1", "1", "1")),
    "A11_2": (("0", "1", "1", "0"), ("b1", "0", "0", "1")),
    "A12_3": (("1", "0", "0", "0"), ("1", "-1", "-1", "0")),
}

P4 = ("a1", "a2", "a4", "b1")
P_A2 = ("a1", "a4", "b2")
P_A6 = ("a1", "a4")
P_B = ("b1", "b2")
P_A4_2 = ("a1", "b1", "b2")
P_A7_2 = ("a1", "b1")
P_1 = ("b1",)

# -- recurring constraints ---------------------------------------------------

A4_NONZERO = Ne("a4")
B1_NONZERO = Ne("b1")

A10_ROOTS = NoRoot("(b1*t**3 - 3*t - 1)*(b1*t**2 + b1*t + 1)*(b1**2*t**3 + 6*b1*t**2 + 3*b1*t + b1 - 2)")
A10_EQ1 = ("b1*(d**2 + d + 1) - (2*d + 1)**2", "d**2 + d + 1", "b1 = (2d+1)^2/(d^2+d+1)")
A10_EQ2 = ("b1*d**3 - (2*d + 1)**2*(d - 1)", "d**3", "b1 = (2d+1)^2(d-1)/d^3")
A10_NO_EQ = (NoSolution(*A10_EQ1), NoSolution(*A10_EQ2))
A10_SOME_EQ = AnyOf(HasSolution(*A10_EQ1), HasSolution(*A10_EQ2))

A11_ROOTS = NoRoot("b1 - t**3")
# "d^3 = 1 iff d = 1": no cube root of unity other than 1
NO_CUBE_ROOT = NoSolution("d**3 - 1", "d - 1", "d^3 = 1 with d != 1")
SOME_CUBE_ROOT = HasSolution("d**3 - 1", "d - 1", "d^3 = 1 with d != 1")

A8_2_ROOTS = NoRoot("(b1*t**3 + t + 1)*(b1*t**2 + b1*t + 1)")
A8_2_EQ1 = ("b1*(d**2 + d + 1) - 1", "d**2 + d + 1", "b1 = 1/(d^2+d+1)")
A8_2_EQ2 = ("b1*d**3 - (d + 1)", "d**3", "b1 = (d+1)/d^3")
A9_2_ROOTS = NoRoot("b1 + t**3")

A9_3_ROOTS = NoRoot("(b1 - t**3)*(b1*t**2 + b1*t + 1)*(b1**2*t**3 + b1 - 2)")

A1_SIMPLE = AnyOf(Ne("b1 - 2*a1 - a2"), Ne("a4 + a1 + 2*a2"))
A3_SIMPLE = AnyOf(
    AllOf(Ne("b2 - 1 + a1"), A4_NONZERO),
    AllOf(Eq("b2 - 1 + a1"), A4_NONZERO, Ne("a1 - 1"), Ne("a1 - 1/2")),
)

N, TWO, THREE = CharClass.NOT_TWO_THREE, CharClass.TWO, CharClass.THREE
DER, AUT, SIM, STAR = Property.TRIV_DER, Property.TRIV_AUT, Property.SIMPLE, Property.STAR
DNA, AND = Property.DER_NOT_AUT, Property.AUT_NOT_DER


def _f(prop: Property, cc: CharClass, fid: str, tmpl: str, params, *constraints) -> Family:
    return Family(fid, cc, frozenset({prop}), T[tmpl], tuple(params), tuple(constraints))


TABLES: dict[tuple[Property, CharClass], list[Family]] = {
    (DER, N): [
        _f(DER, N, "A_1", "A1", P4),
        _f(DER, N, "A_2", "A2", P_A2, A4_NONZERO),
        _f(DER, N, "A_3", "A3", P_A2, A4_NONZERO),
        _f(DER, N, "A_4", "A4", P_B),
        _f(DER, N, "A_6", "A6", P_A6, A4_NONZERO),
        _f(DER, N, "A_7", "A7", P_A6, A4_NONZERO),
        _f(DER, N, "A_8", "A8", P_1),
        _f(DER, N, "A_10", "A10", P_1, A10_ROOTS),
        _f(DER, N, "A_11", "A11", P_1, A11_ROOTS),
        _f(DER, N, "A_12", "A12", P_1, B1_NONZERO),
    ],
    (DER, TWO): [
        _f(DER, TWO, "A_{1,2}", "A1_2", P4),
        _f(DER, TWO, "A_{2,2}", "A2_2", P_A2, AnyOf(A4_NONZERO, Ne("b2 - 1"))),
        _f(DER, TWO, "A_{4,2}", "A4_2", P_A4_2, Ne("b2 - 1")),
        _f(DER, TWO, "A_{5,2}", "A5_2", P_A6, AnyOf(A4_NONZERO, AllOf(Eq("a1 - 1"), Eq("a4")))),
        _f(DER, TWO, "A_{6,2}", "A6_2", P_A6, AnyOf(Ne("a1 - 1"), A4_NONZERO)),
        _f(DER, TWO, "A_{7,2}", "A7_2", P_A7_2, Ne("a1 - 1")),
        _f(DER, TWO, "A_{8,2}", "A8_2", P_1, A8_2_ROOTS),
        _f(DER, TWO, "A_{9,2}", "A11", P_1, A9_2_ROOTS),
        _f(DER, TWO, "A_{10,2}", "A10_2", P_1),
    ],
    (DER, THREE): [
        _f(DER, THREE, "A_{1,3}", "A1", P4),
        _f(DER, THREE, "A_{2,3}", "A2", P_A2, A4_NONZERO),
        _f(DER, THREE, "A_{3,3}", "A3", P_A2, A4_NONZERO),
        _f(DER, THREE, "A_{4,3}", "A4", P_B),
        _f(DER, THREE, "A_{6,3}", "A6", P_A6, A4_NONZERO),
        _f(DER, THREE, "A_{7,3}", "A7", P_A6, A4_NONZERO),
        _f(DER, THREE, "A_{8,3}", "A8", P_1),
    ],
    (AUT, N): [
        _f(AUT, N, "A_1", "A1", P4),
        _f(AUT, N, "A_2", "A2", P_A2, A4_NONZERO),
        _f(AUT, N, "A_4", "A4", P_B),
        _f(AUT, N, "A_6", "A6", P_A6, A4_NONZERO),
        _f(AUT, N, "A_8", "A8", P_1),
        _f(AUT, N, "A_10", "A10", P_1, A10_ROOTS, *A10_NO_EQ),
        _f(AUT, N, "A_11", "A11", P_1, A11_ROOTS, B1_NONZERO, NO_CUBE_ROOT),
    ],
    (AUT, TWO): [
        _f(AUT, TWO, "A_{1,2}", "A1_2", P4),
        _f(AUT, TWO, "A_{2,2}", "A2_2", P_A2, A4_NONZERO),
        _f(AUT, TWO, "A_{3,2}", "A3_2", P_A2, AnyOf(A4_NONZERO, AllOf(FieldIs(2), Eq("a4"), Eq("b2")))),
        _f(AUT, TWO, "A_{4,2}", "A4_2", P_A4_2, Eq("b2 - 1")),
        _f(AUT, TWO, "A_{5,2}", "A5_2", P_A6, A4_NONZERO),
        _f(AUT, TWO, "A_{6,2}", "A6_2", P_A6, AnyOf(A4_NONZERO, AllOf(FieldIs(2), Eq("a1"), Eq("a4")))),
        _f(AUT, TWO, "A_{7,2}", "A7_2", P_A7_2, Eq("a1 - 1")),
        _f(AUT, TWO, "A_{8,2}", "A8_2", P_1, A8_2_ROOTS, NoSolution(*A8_2_EQ1), NoSolution(*A8_2_EQ2)),
        _f(AUT, TWO, "A_{9,2}", "A11", P_1, A9_2_ROOTS, NO_CUBE_ROOT),
        _f(AUT, TWO, "A_{11,2}", "A11_2", P_1, FieldIs(2), Eq("b1")),
    ],
    (AUT, THREE): [
        _f(AUT, THREE, "A_{1,3}", "A1", P4),
        _f(AUT, THREE, "A_{2,3}", "A2", P_A2, A4_NONZERO),
        _f(AUT, THREE, "A_{4,3}", "A4", P_B),
        _f(AUT, THREE, "A_{6,3}", "A6", P_A6, A4_NONZERO),
        _f(AUT, THREE, "A_{8,3}", "A8", P_1),
        _f(AUT, THREE, "A_{9,3}", "A10", P_1, A9_3_ROOTS, NoSolution(*A10_EQ1)),
        _f(AUT, THREE, "A_{10,3}", "A11", P_1, A11_ROOTS, B1_NONZERO, NO_CUBE_ROOT),
    ],
    (SIM, N): [
        _f(SIM, N, "A_1", "A1", P4, A1_SIMPLE),
        _f(SIM, N, "A_2", "A2", P_A2, A4_NONZERO),
        _f(SIM, N, "A_3", "A3", P_A2, A3_SIMPLE),
        _f(SIM, N, "A_4", "A4", P_B, AnyOf(Ne("b2 - 1"), AllOf(Ne("b1 + 1/4"), Eq("b2 - 1")))),
        _f(SIM, N, "A_6", "A6", P_A6, A4_NONZERO),
        _f(SIM, N, "A_7", "A7", P_A6, A4_NONZERO),
        _f(SIM, N, "A_8", "A8", P_1),
        _f(SIM, N, "A_10", "A10", P_1, A10_ROOTS),
        _f(SIM, N, "A_11", "A11", P_1, A11_ROOTS, B1_NONZERO),
        _f(SIM, N, "A_12", "A12", P_1, B1_NONZERO),
    ],
    (SIM, TWO): [
        _f(SIM, TWO, "A_{1,2}", "A1_2", P4, AnyOf(Ne("a4 - a1"), Ne("b1 - a2"))),
        _f(
            SIM, TWO, "A_{2,2}", "A2_2", P_A2,
            A4_NONZERO, AnyOf(Ne("b2 - 1 - a1"), AllOf(Eq("b2 - 1 - a1"), Eq("a4 - 1 - a1"))),
        ),
        _f(
            SIM, TWO, "A_{3,2}", "A3_2", P_A2,
            AnyOf(AllOf(Ne("b2 - 1 - a1"), A4_NONZERO), AllOf(Eq("b2"), Eq("a1 - 1"), A4_NONZERO)),
        ),
        _f(
            SIM, TWO, "A_{4,2}", "A4_2", P_A4_2,
            AnyOf(Ne("b2 - 1 - a1"), AllOf(Eq("b2"), Eq("a1 - 1"), HasRoot("t + t**2 - b1"))),
        ),
        _f(SIM, TWO, "A_{5,2}", "A5_2", P_A6, A4_NONZERO),
        _f(SIM, TWO, "A_{6,2}", "A6_2", P_A6, A4_NONZERO),
        _f(SIM, TWO, "A_{7,2}", "A7_2", P_A7_2),
        _f(SIM, TWO, "A_{8,2}", "A8_2", P_1, A8_2_ROOTS),
        _f(SIM, TWO, "A_{9,2}", "A11", P_1, A9_2_ROOTS),
        _f(SIM, TWO, "A_{11,2}", "A11_2", P_1, HasRoot("t**2 - b1")),
    ],
    (SIM, THREE): [
        _f(SIM, THREE, "A_{1,3}", "A1", P4, A1_SIMPLE),
        _f(SIM, THREE, "A_{2,3}", "A2", P_A2, A4_NONZERO),
        _f(SIM, THREE, "A_{3,3}", "A3", P_A2, A3_SIMPLE),
        _f(SIM, THREE, "A_{4,3}", "A4", P_B, AnyOf(Ne("b2 - 1"), AllOf(Ne("b1 + 1"), Eq("b2 - 1")))),
        _f(SIM, THREE, "A_{6,3}", "A6", P_A6, A4_NONZERO),
        _f(SIM, THREE, "A_{7,3}", "A7", P_A6),
        _f(SIM, THREE, "A_{8,3}", "A8", P_1),
        _f(SIM, THREE, "A_{9,3}", "A10", P_1, A9_3_ROOTS),
        _f(SIM, THREE, "A_{10,3}", "A11", P_1, A11_ROOTS, B1_NONZERO),
        _f(SIM, THREE, "A_{11,3}", "A12", P_1, B1_NONZERO),
        _f(SIM, THREE, "A_{12,3}", "A12_3", ()),
    ],
    (STAR, N): [
        _f(STAR, N, "A_1", "A1", P4, A1_SIMPLE),
        _f(STAR, N, "A_2", "A2", P_A2, A4_NONZERO),
        _f(STAR, N, "A_4", "A4", P_B, AnyOf(Ne("b2 - 1"), AllOf(Ne("b1 + 1/4"), Eq("b2 - 1")))),
        _f(STAR, N, "A_6", "A6", P_A6, A4_NONZERO),
        _f(STAR, N, "A_8", "A8", P_1),
        _f(STAR, N, "A_10", "A10", P_1, A10_ROOTS, *A10_NO_EQ),
        _f(STAR, N, "A_11", "A11", P_1, A11_ROOTS, B1_NONZERO, NO_CUBE_ROOT),
    ],
    (DNA, N): [
        _f(DNA, N, "A_3", "A3", P_A2, A4_NONZERO),
        _f(DNA, N, "A_7", "A7", P_A6, A4_NONZERO),
        _f(DNA, N, "A_10", "A10", P_1, A10_ROOTS, A10_SOME_EQ),
        _f(DNA, N, "A_11", "A11", P_1, A11_ROOTS, B1_NONZERO, SOME_CUBE_ROOT),
        _f(DNA, N, "A_12", "A12", P_1, B1_NONZERO),
    ],
    # trivial Aut implies trivial Der away from characteristics 2 and 3
    (AND, N): [],
    (DNA, TWO): [
        _f(DNA, TWO, "A_{2,2}", "A2_2", P_A2, Eq("a4"), Ne("b2 - 1")),
        # listed with two parameters only; alpha_1 is kept free as in the trivial-Der table
        _f(DNA, TWO, "A_{4,2}", "A4_2", P_A4_2, Ne("b2 - 1")),
        _f(DNA, TWO, "A_{5,2}", "A5_2", P_A6, Eq("a1 - 1"), Eq("a4")),
        _f(DNA, TWO, "A_{6,2}", "A6_2", P_A6, Eq("a4"), Ne("a1 - 1")),
        _f(DNA, TWO, "A_{7,2}", "A7_2", P_A7_2, Ne("a1 - 1")),
        _f(
            DNA, TWO, "A_{8,2}", "A8_2", P_1,
            A8_2_ROOTS, AnyOf(HasSolution(*A8_2_EQ1), HasSolution(*A8_2_EQ2)),
        ),
        _f(DNA, TWO, "A_{9,2}", "A11", P_1, A9_2_ROOTS, SOME_CUBE_ROOT),
        _f(DNA, TWO, "A_{10,2}", "A10_2", P_1),
    ],
    (AND, TWO): [
        _f(AND, TWO, "A_{3,2}", "A3_2", P_A2, AnyOf(A4_NONZERO, AllOf(FieldIs(2), Eq("a4"), Eq("b2")))),
        _f(AND, TWO, "A_{4,2}", "A4_2", P_A4_2, Eq("b2 - 1")),
        _f(AND, TWO, "A_{7,2}", "A7_2", P_A7_2, Eq("a1 - 1")),
        _f(AND, TWO, "A_{11,2}", "A11_2", P_1, FieldIs(2), Eq("b1")),
    ],
    (DNA, THREE): [
        _f(DNA, THREE, "A_{3,3}", "A3", P_A2, A4_NONZERO),
        _f(DNA, THREE, "A_{7,3}", "A7", P_A6, A4_NONZERO),
    ],
    (AND, THREE): [
        _f(AND, THREE, "A_{9,3}", "A10", P_1, A9_3_ROOTS, NoSolution(*A10_EQ1)),
        _f(AND, THREE, "A_{10,3}", "A11", P_1, A11_ROOTS, B1_NONZERO, NO_CUBE_ROOT),
    ],
}
