"""Verification driver for the bundled worked-example corpus.

The corpus holds seven pairs of tables (ex3_1 .. ex3_7): an implication
table (wajsberg kind) and its difference table (bck kind), stored exactly
as transcribed, defects included. The driver never corrects a fixture in
place. Instead it:

* checks the wajsberg axioms on each stored table; a failing table is
  diagnosed against the order-matched chain product and every deviating
  cell is flagged;
* recomputes each difference table as complement(x.y) from the (diagnosed)
  implication table and flags every cell where the stored table disagrees;
* checks bck axioms, commutativity and boundedness on the stored table, or
  on the recomputed one when cells were flagged;
* compares proper subalgebra/ideal lists against the expected sets below;
* runs the translation roundtrips on the validated tables.

Flagged cells are findings, not failures; the run fails only when a table
cannot be diagnosed or an expected property does not hold.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .core import AlgebraError, FiniteAlgebra, Kind, bound_element, new_algebra
from .axioms import VerificationReport, check_bck, check_wajsberg, is_commutative
from .transforms import bck_to_mv, derive_mv_ops, mv_to_bck, mv_to_wajsberg, wajsberg_to_bck, wajsberg_to_mv
from .enumeration import _leq_matrix, _poset_isos, enumerate_wajsberg
from .substructures import ideals, subalgebras
from .algfile import ParseError, load_algebra

EXAMPLES = ("ex3_1", "ex3_2", "ex3_3", "ex3_4", "ex3_5", "ex3_6", "ex3_7")

# Proper substructure lists the corpus must reproduce exactly (element names).
EXPECTED_SUBALGEBRAS: dict[str, tuple[tuple[str, ...], ...]] = {
    "ex3_1": (("O", "A"), ("O", "B"), ("O", "E"), ("O", "A", "B")),
    "ex3_2": (("O", "A"), ("O", "B"), ("O", "E"), ("O", "A", "B")),
    "ex3_3": (
        ("O", "A"), ("O", "B"), ("O", "C"), ("O", "D"), ("O", "E"),
        ("O", "A", "B"), ("O", "B", "D"), ("O", "A", "B", "C"), ("O", "A", "B", "C", "D"),
    ),
}

# Sets that must appear among the proper subalgebras (the full stored list
# for these examples is known to be incomplete).
EXPECTED_SUBALGEBRAS_CONTAIN: dict[str, tuple[tuple[str, ...], ...]] = {
    "ex3_4": (("O", "A", "C"), ("O", "A", "C", "D")),
}

EXPECTED_IDEALS: dict[str, tuple[tuple[str, ...], ...]] = {
    "ex3_1": (),
    "ex3_2": (("O", "A"), ("O", "B")),
    "ex3_3": (),
    "ex3_4": (("O", "A", "B"), ("O", "C")),
    "ex3_5": (("O", "C", "D"), ("O", "B")),
    "ex3_6": (),
    "ex3_7": (("O", "Y", "T", "V"), ("O", "X")),
}


@dataclass(frozen=True)
class CellDiff:
    """One table cell where the stored value disagrees with the expected one."""

    row: str
    col: str
    stored: str
    expected: str

    def __str__(self) -> str:
        return f"({self.row},{self.col}) stored={self.stored} expected={self.expected}"


@dataclass(frozen=True)
class Diagnosis:
    """Outcome of matching a stored table against a valid reconstruction."""

    corrected: FiniteAlgebra | None
    cells: tuple[CellDiff, ...]


def diagnose_wajsberg(alg: FiniteAlgebra) -> Diagnosis:
    """Locate suspected misprints in a stored wajsberg table.

    A clean table diagnoses to itself. Otherwise each order-n chain product
    is matched to the stored table along every order-isomorphism of the
    derived orders (fixing zero and one); the relabelled product deviating
    from the stored table in the fewest cells wins, deterministically. If no
    product's order matches, the table cannot be diagnosed.
    """
    if check_wajsberg(alg).passed:
        return Diagnosis(alg, ())
    n = alg.order
    la = _leq_matrix(alg)
    options = []
    for cand in enumerate_wajsberg(n):
        lc = _leq_matrix(cand)
        for g in _poset_isos(lc, la):
            if g[cand.zero] != alg.zero or g[cand.unit] != alg.unit:
                continue
            inv = [0] * n
            for i, gi in enumerate(g):
                inv[gi] = i
            rows = [[g[cand.op(inv[x], inv[y])] for y in range(n)] for x in range(n)]
            cells = tuple(
                (x, y, alg.table.entries[x][y], rows[x][y])
                for x in range(n)
                for y in range(n)
                if alg.table.entries[x][y] != rows[x][y]
            )
            options.append((len(cells), cells, rows))
    if not options:
        return Diagnosis(None, ())
    _, cells, rows = min(options, key=lambda o: (o[0], o[1]))
    corrected = new_algebra(Kind.WAJSBERG, alg.names, rows, one=alg.unit)
    return Diagnosis(
        corrected,
        tuple(CellDiff(alg.names[x], alg.names[y], alg.names[s], alg.names[e]) for x, y, s, e in cells),
    )


def cell_mismatches(stored: FiniteAlgebra, expected: FiniteAlgebra) -> tuple[CellDiff, ...]:
    """Cells where two same-carrier tables disagree."""
    if stored.names != expected.names:
        raise AlgebraError("cannot compare tables over different carriers")
    n = stored.order
    return tuple(
        CellDiff(
            stored.names[x],
            stored.names[y],
            stored.names[stored.table.entries[x][y]],
            stored.names[expected.table.entries[x][y]],
        )
        for x in range(n)
        for y in range(n)
        if stored.table.entries[x][y] != expected.table.entries[x][y]
    )


def load_corpus(fixtures: Path) -> dict[str, FiniteAlgebra]:
    corpus = {}
    for ex in EXAMPLES:
        for kind in ("wajsberg", "bck"):
            path = Path(fixtures) / f"{ex}_{kind}.alg"
            if not path.is_file():
                raise ParseError(f"missing fixture {path}")
            corpus[f"{ex}_{kind}"] = load_algebra(path)
    return corpus


def _fmt_subset(alg: FiniteAlgebra, s: frozenset[int]) -> str:
    return "{" + ",".join(alg.names[i] for i in sorted(s)) + "}"


def _fmt_list(alg: FiniteAlgebra, subsets) -> str:
    return " ".join(_fmt_subset(alg, s) for s in subsets) if subsets else "(none)"


def _first_failure(alg: FiniteAlgebra, report: VerificationReport) -> str:
    v = report.failures[0]
    return f"{v.axiom} at ({','.join(alg.names[i] for i in v.witness)})"


def _as_name_sets(alg: FiniteAlgebra, subsets) -> set[frozenset[str]]:
    return {frozenset(alg.names[i] for i in s) for s in subsets}


def run_check_paper(fixtures: Path) -> tuple[list[str], bool]:
    """All golden checks over a fixtures directory; returns (lines, ok)."""
    corpus = load_corpus(fixtures)
    lines: list[str] = []
    ok = True
    flagged = 0

    for ex in EXAMPLES:
        w = corpus[f"{ex}_wajsberg"]
        b = corpus[f"{ex}_bck"]

        diag = diagnose_wajsberg(w)
        if not diag.cells and diag.corrected is w:
            lines.append(f"{ex}: wajsberg axioms: PASS")
        elif diag.corrected is None:
            lines.append(f"{ex}: wajsberg axioms: FAIL {_first_failure(w, check_wajsberg(w))}; no order-matched reconstruction")
            ok = False
            continue
        else:
            flagged += len(diag.cells)
            lines.append(
                f"{ex}: wajsberg axioms: FAIL {_first_failure(w, check_wajsberg(w))}; "
                f"suspected misprint cell(s): {'; '.join(str(c) for c in diag.cells)}"
            )
            lines.append(f"{ex}: wajsberg axioms (corrected): PASS")

        recomputed = wajsberg_to_bck(diag.corrected)
        diffs = cell_mismatches(b, recomputed)
        if diffs:
            flagged += len(diffs)
            lines.append(
                f"{ex}: bck recomputation: {len(diffs)} mismatched cell(s): "
                + "; ".join(str(c) for c in diffs)
            )
        else:
            lines.append(f"{ex}: bck recomputation: PASS ({b.order * b.order}/{b.order * b.order} cells)")

        target, label = (b, "stored") if not diffs else (recomputed, "recomputed")
        rep, com = check_bck(target), is_commutative(target)
        bound_ok = bound_element(target) == target.unit
        if rep.passed and com.passed and bound_ok:
            lines.append(f"{ex}: bck axioms ({label}): PASS (bck + commutative + bounded)")
        else:
            detail = []
            if not rep.passed:
                detail.append(_first_failure(target, rep))
            if not com.passed:
                detail.append(_first_failure(target, com))
            if not bound_ok:
                detail.append("bound missing or not the designated one")
            lines.append(f"{ex}: bck axioms ({label}): FAIL {'; '.join(detail)}")
            ok = False

        subs = subalgebras(b, proper_only=True)
        ids = ideals(b, proper_only=True)
        lines.append(f"{ex}: subalgebras (proper, {len(subs)}): {_fmt_list(b, subs)}")
        lines.append(f"{ex}: ideals (proper, {len(ids)}): {_fmt_list(b, ids)}")
        if ex in EXPECTED_SUBALGEBRAS:
            match = _as_name_sets(b, subs) == {frozenset(t) for t in EXPECTED_SUBALGEBRAS[ex]}
            lines.append(f"{ex}: expected subalgebras: {'PASS' if match else 'FAIL'}")
            ok &= match
        if ex in EXPECTED_SUBALGEBRAS_CONTAIN:
            have = _as_name_sets(b, subs)
            match = all(frozenset(t) in have for t in EXPECTED_SUBALGEBRAS_CONTAIN[ex])
            lines.append(f"{ex}: expected subalgebras present: {'PASS' if match else 'FAIL'}")
            ok &= match
        if ex in EXPECTED_IDEALS:
            match = _as_name_sets(b, ids) == {frozenset(t) for t in EXPECTED_IDEALS[ex]}
            lines.append(f"{ex}: expected ideals: {'PASS' if match else 'FAIL'}")
            ok &= match

        wsrc = diag.corrected
        bsrc = recomputed if diffs else b
        mv_w = wajsberg_to_mv(wsrc)
        mv_b = bck_to_mv(bsrc)
        round_ok = (
            mv_to_wajsberg(mv_w).table == wsrc.table
            and mv_to_bck(mv_w).table == wajsberg_to_bck(wsrc).table
            and mv_to_bck(mv_b).table == bsrc.table
            and derive_mv_ops(mv_b).ominus == bsrc.table
        )
        lines.append(f"{ex}: roundtrips: {'PASS' if round_ok else 'FAIL'}")
        ok &= round_ok

    lines.append(
        f"check-paper: {'OK' if ok else 'FAIL'} ({len(EXAMPLES)} examples, {flagged} flagged cell(s))"
    )
    return lines, ok
