"""Order-n Wajsberg algebra generation and isomorphism testing.

One algebra is produced per unordered factorization of n into factors >= 2
(the single-factor decomposition included): the direct product of totally
ordered chains with those sizes. Isomorphism search is plain backtracking
pruned by occurrence-profile invariants; n stays small, so nothing fancier
is warranted.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import prod

from .core import AlgebraError, FiniteAlgebra, Kind, new_algebra
from .axioms import check_wajsberg
from .transforms import _require


@dataclass(frozen=True)
class Factorization:
    """A multiset of integer factors >= 2 with the given product, stored sorted."""

    n: int
    factors: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(self.factors))
        if any(f < 2 for f in self.factors):
            raise AlgebraError("factors must be >= 2")
        if tuple(sorted(self.factors)) != self.factors:
            raise AlgebraError("factors must be sorted non-decreasing")
        if prod(self.factors) != self.n:
            raise AlgebraError(f"factors {self.factors} do not multiply to {self.n}")

    @property
    def label(self) -> str:
        return "x".join(str(f) for f in self.factors)


def factorizations(n: int) -> list[Factorization]:
    """All unordered factorizations of n into factors >= 2, including (n,)
    itself; empty for n = 1. Sorted by factor count, then lexicographically."""
    if n < 1:
        raise AlgebraError("factorizations need n >= 1")

    def rec(m: int, least: int) -> list[tuple[int, ...]]:
        out = []
        for f in range(least, m + 1):
            if m % f:
                continue
            if f == m:
                out.append((f,))
            else:
                out.extend((f, *rest) for rest in rec(m // f, f))
        return out

    found = rec(n, 2) if n > 1 else []
    found.sort(key=lambda fs: (len(fs), fs))
    return [Factorization(n, fs) for fs in found]


def lukasiewicz_chain(n: int) -> FiniteAlgebra:
    """The totally ordered Wajsberg algebra on e0 < ... < e(n-1):
    ei . ej = e(min(n-1, n-1-i+j)), complement ei -> e(n-1-i)."""
    if n < 2:
        raise AlgebraError("a chain needs at least 2 elements")
    top = n - 1
    rows = [[min(top, top - i + j) for j in range(n)] for i in range(n)]
    comp = [top - i for i in range(n)]
    names = [f"e{i}" for i in range(n)]
    return new_algebra(Kind.WAJSBERG, names, rows, one=top, complement=comp)


def direct_product(parts: list[FiniteAlgebra]) -> FiniteAlgebra:
    """Componentwise product of Wajsberg algebras; elements are component
    tuples indexed in lexicographic order."""
    if not parts:
        raise AlgebraError("direct product needs at least one part")
    for part in parts:
        if part.kind is not Kind.WAJSBERG:
            raise AlgebraError("direct product takes wajsberg algebras")
        _require(check_wajsberg(part), part, "wajsberg algebra")
    if len(parts) == 1:
        return parts[0]
    tuples = list(product(*(range(p.order) for p in parts)))
    index = {t: i for i, t in enumerate(tuples)}
    n = len(tuples)
    rows = [
        [index[tuple(p.op(a, b) for p, a, b in zip(parts, ta, tb))] for tb in tuples]
        for ta in tuples
    ]
    comp = [index[tuple(p.complement[a] for p, a in zip(parts, t))] for t in tuples]
    names = ["(" + ",".join(p.names[a] for p, a in zip(parts, t)) + ")" for t in tuples]
    one = index[tuple(p.unit for p in parts)]
    return new_algebra(Kind.WAJSBERG, names, rows, one=one, complement=comp)


def enumerate_wajsberg(n: int) -> list[FiniteAlgebra]:
    """One order-n Wajsberg algebra per factorization of n: the chain product
    with the factorization's sizes."""
    if n < 2:
        raise AlgebraError("enumeration needs n >= 2")
    return [
        direct_product([lukasiewicz_chain(r) for r in f.factors])
        for f in factorizations(n)
    ]


def _occurrence_profiles(entries: tuple[tuple[int, ...], ...]) -> list[tuple]:
    n = len(entries)
    occ = [0] * n
    for row in entries:
        for v in row:
            occ[v] += 1
    return [
        (
            occ[x],
            occ[entries[x][x]],
            tuple(sorted(occ[v] for v in entries[x])),
            tuple(sorted(occ[entries[r][x]] for r in range(n))),
        )
        for x in range(n)
    ]


def find_isomorphism(a: FiniteAlgebra, b: FiniteAlgebra) -> tuple[int, ...] | None:
    """A constant-preserving bijection f with f(x op y) = f(x) op f(y), or None.

    For Wajsberg and MV kinds the complement is part of the signature and is
    preserved as well. Returned as a tuple: element i of ``a`` maps to f[i].
    """
    if a.kind != b.kind:
        raise AlgebraError("isomorphism search needs algebras of the same kind")
    n = a.order
    if b.order != n:
        return None
    if (a.unit is None) != (b.unit is None):
        return None
    ta, tb = a.table.entries, b.table.entries
    pa, pb = _occurrence_profiles(ta), _occurrence_profiles(tb)
    if sorted(pa) != sorted(pb):
        return None
    match_complement = a.kind is not Kind.BCK
    ca, cb = a.complement, b.complement

    f = [-1] * n
    used = [False] * n

    def assign(x: int, y: int) -> bool:
        if pa[x] != pb[y] or used[y]:
            return False
        f[x] = y
        used[y] = True
        return True

    if not assign(a.zero, b.zero):
        return None
    if a.unit is not None:
        if f[a.unit] != -1:
            if f[a.unit] != b.unit:
                return None
        elif not assign(a.unit, b.unit):
            return None

    candidates = {x: [y for y in range(n) if pb[y] == pa[x]] for x in range(n) if f[x] == -1}
    order = sorted(candidates, key=lambda x: (len(candidates[x]), x))

    def consistent(x: int) -> bool:
        assigned = [u for u in range(n) if f[u] != -1]
        for u in assigned:
            for p, q in ((x, u), (u, x)):
                r = ta[p][q]
                if f[r] != -1 and tb[f[p]][f[q]] != f[r]:
                    return False
        if match_complement:
            if f[ca[x]] != -1 and cb[f[x]] != f[ca[x]]:
                return False
            for u in assigned:
                if ca[u] == x and cb[f[u]] != f[x]:
                    return False
        return True

    def verify() -> bool:
        for x in range(n):
            for y in range(n):
                if f[ta[x][y]] != tb[f[x]][f[y]]:
                    return False
        if match_complement and any(f[ca[x]] != cb[f[x]] for x in range(n)):
            return False
        return True

    def dfs(pos: int) -> bool:
        if pos == len(order):
            return verify()
        x = order[pos]
        for y in candidates[x]:
            if used[y]:
                continue
            f[x] = y
            used[y] = True
            if consistent(x) and dfs(pos + 1):
                return True
            f[x] = -1
            used[y] = False
        return False

    if dfs(0):
        return tuple(f)
    return None


def _leq_matrix(alg: FiniteAlgebra) -> tuple[tuple[bool, ...], ...]:
    """x <= y read straight off the table by kind; no axiom validation, so this
    also works on defective tables under diagnosis."""
    t = alg.table.entries
    n = alg.order
    if alg.kind is Kind.BCK:
        return tuple(tuple(t[x][y] == alg.zero for y in range(n)) for x in range(n))
    if alg.kind is Kind.WAJSBERG:
        return tuple(tuple(t[x][y] == alg.unit for y in range(n)) for x in range(n))
    c = alg.complement
    return tuple(tuple(t[c[x]][y] == alg.unit for y in range(n)) for x in range(n))


def _poset_isos(la, lb):
    """Yield every bijection f with x <= y iff f(x) <= f(y), as index tuples."""
    n = len(la)
    if len(lb) != n:
        return

    def profile(leq):
        return [
            (sum(leq[u][x] for u in range(n)), sum(leq[x][u] for u in range(n)))
            for x in range(n)
        ]

    pa, pb = profile(la), profile(lb)
    if sorted(pa) != sorted(pb):
        return
    candidates = {x: [y for y in range(n) if pb[y] == pa[x]] for x in range(n)}
    order = sorted(range(n), key=lambda x: (len(candidates[x]), x))
    f = [-1] * n
    used = [False] * n

    def dfs(pos: int):
        if pos == n:
            yield tuple(f)
            return
        x = order[pos]
        for y in candidates[x]:
            if used[y]:
                continue
            if any(
                f[u] != -1 and (la[x][u] != lb[y][f[u]] or la[u][x] != lb[f[u]][y])
                for u in range(n)
            ):
                continue
            f[x] = y
            used[y] = True
            yield from dfs(pos + 1)
            f[x] = -1
            used[y] = False

    yield from dfs(0)


def poset_isomorphic(a: FiniteAlgebra, b: FiniteAlgebra) -> bool:
    """Whether the derived orders admit an order-isomorphism (tables ignored)."""
    if a.order != b.order:
        return False
    return next(_poset_isos(_leq_matrix(a), _leq_matrix(b)), None) is not None
