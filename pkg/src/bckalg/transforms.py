"""Structure-to-structure constructions.

All converters validate their input axioms before converting and keep the
carrier (indices and names) unchanged, so roundtrip equality is literal
table equality. The BCK image of a Wajsberg table is computed directly as
complement(x.y); the route through the MV sum is deliberately left as an
independent path for coherence testing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import AlgebraError, CayleyTable, FiniteAlgebra, Kind, bound_element, new_algebra
from .axioms import VerificationReport, check_bck, check_mv, check_wajsberg, is_commutative


@dataclass(frozen=True)
class DerivedMvOps:
    """Product and difference tables derived from an MV sum:
    x (.) y = (x' + y')' and x (-) y = (x' + y)'."""

    odot: CayleyTable
    ominus: CayleyTable


def _require(report: VerificationReport, alg: FiniteAlgebra, wanted: str) -> None:
    if not report.passed:
        v = report.failures[0]
        witness = ",".join(alg.names[i] for i in v.witness)
        raise AlgebraError(f"input is not a valid {wanted}: {v.axiom} fails at ({witness})")


def iseki_extension(alg: FiniteAlgebra) -> FiniteAlgebra:
    """Adjoin a fresh top to a BCK algebra:
    x.y = x*y on the old carrier, x.1 = 0, 1.y = 1 for old y, 1.1 = 0."""
    if alg.kind is not Kind.BCK:
        raise AlgebraError("iseki extension takes a bck algebra")
    n = alg.order
    z = alg.zero
    rows = [list(row) + [z] for row in alg.table.entries]
    rows.append([n] * n + [z])
    fresh = "1"
    while fresh in alg.names:
        fresh += "'"
    return new_algebra(Kind.BCK, alg.names + (fresh,), rows, zero=z, one=n)


def bck_to_mv(alg: FiniteAlgebra) -> FiniteAlgebra:
    """x + y = (x'*y)' with x' = 1*x, on a bounded commutative BCK algebra."""
    if alg.kind is not Kind.BCK:
        raise AlgebraError("bck_to_mv takes a bck algebra")
    _require(check_bck(alg), alg, "bck algebra")
    _require(is_commutative(alg), alg, "commutative bck algebra")
    top = alg.unit if alg.unit is not None else bound_element(alg)
    if top is None:
        raise AlgebraError("bck_to_mv requires a bounded algebra")
    t = alg.table.entries
    comp = t[top]
    n = alg.order
    plus = [[comp[t[comp[x]][y]] for y in range(n)] for x in range(n)]
    return new_algebra(Kind.MV, alg.names, plus, zero=alg.zero, one=top, complement=comp)


def mv_to_bck(alg: FiniteAlgebra) -> FiniteAlgebra:
    """x*y = (x'+y)', the difference of the MV sum; bounded by 1 = 0'."""
    if alg.kind is not Kind.MV:
        raise AlgebraError("mv_to_bck takes an mv algebra")
    _require(check_mv(alg), alg, "mv algebra")
    t = alg.table.entries
    c = alg.complement
    n = alg.order
    star = [[c[t[c[x]][y]] for y in range(n)] for x in range(n)]
    return new_algebra(Kind.BCK, alg.names, star, zero=alg.zero, one=alg.unit, complement=c)


def wajsberg_to_mv(alg: FiniteAlgebra) -> FiniteAlgebra:
    """x + y = complement(x).y, with zero = complement(1)."""
    if alg.kind is not Kind.WAJSBERG:
        raise AlgebraError("wajsberg_to_mv takes a wajsberg algebra")
    _require(check_wajsberg(alg), alg, "wajsberg algebra")
    t = alg.table.entries
    c = alg.complement
    n = alg.order
    plus = [[t[c[x]][y] for y in range(n)] for x in range(n)]
    return new_algebra(Kind.MV, alg.names, plus, zero=c[alg.unit], one=alg.unit, complement=c)


def mv_to_wajsberg(alg: FiniteAlgebra) -> FiniteAlgebra:
    """x.y = x' + y, with unit 1 = 0'."""
    if alg.kind is not Kind.MV:
        raise AlgebraError("mv_to_wajsberg takes an mv algebra")
    _require(check_mv(alg), alg, "mv algebra")
    t = alg.table.entries
    c = alg.complement
    n = alg.order
    circ = [[t[c[x]][y] for y in range(n)] for x in range(n)]
    return new_algebra(Kind.WAJSBERG, alg.names, circ, zero=alg.zero, one=alg.unit, complement=c)


def wajsberg_to_bck(alg: FiniteAlgebra) -> FiniteAlgebra:
    """x*y = complement(x.y): the bounded commutative BCK algebra of a Wajsberg table."""
    if alg.kind is not Kind.WAJSBERG:
        raise AlgebraError("wajsberg_to_bck takes a wajsberg algebra")
    _require(check_wajsberg(alg), alg, "wajsberg algebra")
    t = alg.table.entries
    c = alg.complement
    n = alg.order
    star = [[c[t[x][y]] for y in range(n)] for x in range(n)]
    return new_algebra(Kind.BCK, alg.names, star, zero=c[alg.unit], one=alg.unit, complement=c)


def bck_to_wajsberg(alg: FiniteAlgebra) -> FiniteAlgebra:
    """Composite translation through the MV sum."""
    return mv_to_wajsberg(bck_to_mv(alg))


def derive_mv_ops(alg: FiniteAlgebra) -> DerivedMvOps:
    """The product and difference tables of a valid MV algebra."""
    if alg.kind is not Kind.MV:
        raise AlgebraError("derive_mv_ops takes an mv algebra")
    _require(check_mv(alg), alg, "mv algebra")
    t = alg.table.entries
    c = alg.complement
    n = alg.order
    odot = CayleyTable(tuple(tuple(c[t[c[x]][c[y]]] for y in range(n)) for x in range(n)))
    ominus = CayleyTable(tuple(tuple(c[t[c[x]][y]] for y in range(n)) for x in range(n)))
    return DerivedMvOps(odot, ominus)
