"""Complete classification tables of two-dimensional algebras.

Tables for trivial derivations, trivial automorphisms, simplicity, their
intersection, and the two differences between trivial-Der and trivial-Aut,
in characteristic 2, 3 and everything else.  Over small prime fields each
table can be audited against an exhaustive census.
"""

from __future__ import annotations

from .audit import AuditReport, audit_completeness, census, holds, orbit_representatives
from .families import TABLES, CharClass, Family, Property
from .predicates import AllOf, AnyOf, Eq, FieldIs, HasRoot, HasSolution, Ne, NoRoot, NoSolution, Predicate
from .tables import enumerate_instances, instantiate, lookup, table

__all__ = [
    "AllOf",
    "AnyOf",
    "AuditReport",
    "CharClass",
    "Eq",
    "Family",
    "FieldIs",
    "HasRoot",
    "HasSolution",
    "Ne",
    "NoRoot",
    "NoSolution",
    "Predicate",
    "Property",
    "TABLES",
    "audit_completeness",
    "census",
    "enumerate_instances",
    "holds",
    "instantiate",
    "lookup",
    "orbit_representatives",
    "table",
]
