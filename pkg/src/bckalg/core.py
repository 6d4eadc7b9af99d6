"""Cayley-table carriers for finite BCK, Wajsberg and MV algebras.

Elements are dense integer indices 0..n-1; display names ride along and
matter only for I/O. The table convention is row = left operand:
``table.entries[x][y]`` is the value of ``x op y``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence


class AlgebraError(ValueError):
    """Malformed table, inconsistent constants, or invalid operation input."""


class Kind(str, Enum):
    """Signature a table is read under: difference-like, implication-like, or sum-like."""

    BCK = "bck"
    WAJSBERG = "wajsberg"
    MV = "mv"


@dataclass(frozen=True)
class CayleyTable:
    """Square operation table over element indices; closed by construction."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        if n == 0:
            raise AlgebraError("table must have order >= 1")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise AlgebraError(f"row {i} has {len(row)} entries, expected {n}")
            for j, v in enumerate(row):
                if not isinstance(v, int) or not 0 <= v < n:
                    raise AlgebraError(f"entry ({i},{j})={v!r} is not an element index of an order-{n} table")

    @property
    def order(self) -> int:
        return len(self.entries)

    def value(self, x: int, y: int) -> int:
        return self.entries[x][y]


@dataclass(frozen=True)
class FiniteAlgebra:
    """A finite algebra: kind tag, named elements, one binary table, constants.

    ``zero`` is always set. ``unit`` is the top/one where known (may be absent
    for unbounded BCK algebras). ``complement`` stores the unary operation as
    an index map; it is always present for Wajsberg and MV kinds.
    """

    kind: Kind
    names: tuple[str, ...]
    table: CayleyTable
    zero: int
    unit: int | None = None
    complement: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "names", tuple(str(s) for s in self.names))
        if self.complement is not None:
            object.__setattr__(self, "complement", tuple(self.complement))
        n = self.table.order
        if len(self.names) != n:
            raise AlgebraError(f"{len(self.names)} names for a table of order {n}")
        if len(set(self.names)) != n:
            raise AlgebraError("element names must be pairwise distinct")
        for label, idx in (("zero", self.zero), ("unit", self.unit)):
            if idx is not None and (not isinstance(idx, int) or not 0 <= idx < n):
                raise AlgebraError(f"{label} index {idx!r} out of range for order {n}")
        if self.complement is not None:
            if len(self.complement) != n:
                raise AlgebraError("complement row must name every element")
            if any(not isinstance(c, int) or not 0 <= c < n for c in self.complement):
                raise AlgebraError("complement entry out of range")

    @property
    def order(self) -> int:
        return self.table.order

    def op(self, x: int, y: int) -> int:
        return self.table.entries[x][y]

    def name(self, x: int) -> str:
        return self.names[x]

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise AlgebraError(f"unknown element name {name!r}") from None


def _top_of(table: CayleyTable, zero: int) -> int | None:
    """First t with x op t = zero for every x, i.e. x <= t under the derived order."""
    n = table.order
    for t in range(n):
        if all(table.entries[x][t] == zero for x in range(n)):
            return t
    return None


def new_algebra(
    kind: Kind | str,
    names: Iterable[str],
    table: CayleyTable | Sequence[Sequence[int]],
    *,
    zero: int | None = None,
    one: int | None = None,
    complement: Sequence[int] | None = None,
) -> FiniteAlgebra:
    """Validate and assemble a FiniteAlgebra. No axiom checking happens here.

    Kind rules for the designated constants (all given as indices):

    * ``bck``: zero required; one optional, but if given every x must satisfy
      x*one = zero; an explicit complement must agree with the top's row when
      a top exists.
    * ``wajsberg``: one required; zero is complement(one) when a complement is
      given, else the unique element whose row is constantly one; the
      complement defaults to the zero column and an explicit one must match.
    * ``mv``: zero and complement required; one is derived as complement(zero).
    """
    kind = Kind(kind)
    tab = table if isinstance(table, CayleyTable) else CayleyTable(tuple(tuple(r) for r in table))
    n = tab.order
    name_tuple = tuple(str(s) for s in names)
    comp = tuple(complement) if complement is not None else None

    def check_index(label: str, v: int | None) -> None:
        if v is not None and (not isinstance(v, int) or not 0 <= v < n):
            raise AlgebraError(f"designated {label} index {v!r} out of range for order {n}")

    check_index("zero", zero)
    check_index("one", one)
    if comp is not None and (len(comp) != n or any(not isinstance(c, int) or not 0 <= c < n for c in comp)):
        raise AlgebraError("complement row must map every element into the carrier")

    if kind is Kind.BCK:
        if zero is None:
            raise AlgebraError("bck algebra requires a designated zero")
        if one is not None and any(tab.entries[x][one] != zero for x in range(n)):
            raise AlgebraError("designated one is not an upper bound of the derived order")
        if comp is not None:
            top = one if one is not None else _top_of(tab, zero)
            if top is not None and comp != tab.entries[top]:
                raise AlgebraError("explicit complement disagrees with the derived one*x row")
        return FiniteAlgebra(kind, name_tuple, tab, zero, one, comp)

    if kind is Kind.WAJSBERG:
        if one is None:
            raise AlgebraError("wajsberg algebra requires a designated one")
        if comp is not None:
            derived_zero = comp[one]
        else:
            constant_rows = [z for z in range(n) if all(v == one for v in tab.entries[z])]
            if len(constant_rows) != 1:
                raise AlgebraError(
                    "cannot derive zero: need an explicit complement or exactly one row constantly equal to one"
                )
            derived_zero = constant_rows[0]
        if zero is not None and zero != derived_zero:
            raise AlgebraError("designated zero disagrees with the derived zero")
        derived_comp = tuple(tab.entries[x][derived_zero] for x in range(n))
        if comp is not None and comp != derived_comp:
            raise AlgebraError("explicit complement disagrees with the derived x*zero column")
        return FiniteAlgebra(kind, name_tuple, tab, derived_zero, one, derived_comp)

    # MV: the unary operation is part of the signature and cannot be derived.
    if zero is None:
        raise AlgebraError("mv algebra requires a designated zero")
    if comp is None:
        raise AlgebraError("mv algebra requires an explicit complement row")
    derived_one = comp[zero]
    if one is not None and one != derived_one:
        raise AlgebraError("designated one disagrees with complement(zero)")
    return FiniteAlgebra(kind, name_tuple, tab, zero, derived_one, comp)


@dataclass(frozen=True)
class OrderRelation:
    """Boolean matrix of the derived order x <= y (x op y = zero)."""

    leq: tuple[tuple[bool, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "leq", tuple(tuple(bool(v) for v in row) for row in self.leq))

    @property
    def order(self) -> int:
        return len(self.leq)

    def holds(self, x: int, y: int) -> bool:
        return self.leq[x][y]

    def top(self) -> int | None:
        n = self.order
        for t in range(n):
            if all(self.leq[x][t] for x in range(n)):
                return t
        return None


def derived_order(alg: FiniteAlgebra) -> OrderRelation:
    """The relation x <= y iff x*y = zero, read straight off the table."""
    if alg.kind is not Kind.BCK:
        raise AlgebraError("derived order is defined for bck algebras; convert first")
    z = alg.zero
    return OrderRelation(tuple(tuple(v == z for v in row) for row in alg.table.entries))


def bound_element(alg: FiniteAlgebra) -> int | None:
    """The top element 1 with x <= 1 for all x, or None if the algebra is unbounded."""
    if alg.kind is not Kind.BCK:
        raise AlgebraError("bound search is defined for bck algebras")
    return _top_of(alg.table, alg.zero)


def complement_of(alg: FiniteAlgebra, x: int) -> int:
    """complement(x): the stored unary operation, or 1*x for a bounded BCK algebra."""
    if alg.complement is not None:
        return alg.complement[x]
    if alg.kind is not Kind.BCK:
        raise AlgebraError("algebra carries no complement")
    top = alg.unit if alg.unit is not None else _top_of(alg.table, alg.zero)
    if top is None:
        raise AlgebraError("unbounded bck algebra has no complement")
    return alg.table.entries[top][x]


def involutions(alg: FiniteAlgebra) -> set[int]:
    """Elements fixed by the double complement."""
    return {x for x in range(alg.order) if complement_of(alg, complement_of(alg, x)) == x}
