"""Exit criteria for the whole toolkit, runnable from tests and from the CLI."""

from __future__ import annotations

import contextlib
import io
import time
from dataclasses import dataclass
from typing import Callable, List, Tuple

from . import cayley_dickson as cd
from .fano_octonions import (
    FANO_RULES,
    fano_lines,
    find_isomorphism,
    fano_table,
    quaternion_subalgebra,
    validate_table,
)
from .finite_geometry import duality_check, enumerate_subspaces, plane_axioms, projective_space
from .identities import derive_identity, textbook_two_square, verify_identity
from .qcalc import galois_number, gaussian_binomial, verify_qexp_squared

# Lines L1..L7 of PG(2,2) and the planes P1..P7 of V(3,2), coordinate strings.
FANO_LINES = (
    ("100", "110", "010"),
    ("001", "111", "110"),
    ("010", "011", "001"),
    ("010", "111", "101"),
    ("100", "111", "011"),
    ("011", "101", "110"),
    ("100", "101", "001"),
)
FANO_PLANES = tuple(("000",) + line for line in FANO_LINES)


@dataclass(frozen=True)
class Criterion:
    number: int
    title: str
    check: Callable[[], Tuple[bool, str]]
    budget: float  # seconds
    repeats: int = 1


@dataclass(frozen=True)
class Outcome:
    number: int
    title: str
    passed: bool
    detail: str
    within_budget: bool
    budget: float

    @property
    def ok(self) -> bool:
        return self.passed and self.within_budget

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        if self.budget == float("inf"):
            budget = "no runtime budget"
        elif self.budget < 1:
            budget = f"budget <{self.budget * 1000:g} ms"
        else:
            budget = f"budget <{self.budget:g} s"
        extra = "" if self.within_budget else "; runtime budget exceeded"
        return f"[{status}] {self.number}. {self.title} ({budget}): {self.detail}{extra}"


def reference_constants() -> Tuple[bool, str]:
    values = (
        gaussian_binomial(3, 1, 2),
        gaussian_binomial(3, 2, 2),
        galois_number(3, 2),
        galois_number(2, 2),
    )
    return values == (7, 7, 16, 5), "[3,1]_2, [3,2]_2, G(3,2), G(2,2) = %d, %d, %d, %d" % values


def qexp_identity() -> Tuple[bool, str]:
    reports = [verify_qexp_squared(q, 12) for q in (1, 2, 3, 5)]
    bad = [r.q for r in reports if not r.holds]
    return not bad, "degree 12, q in {1,2,3,5}" + (f"; fails for q = {bad}" if bad else "")


def subspace_counts() -> Tuple[bool, str]:
    mismatches = [
        (n, q, k)
        for q in (2, 3)
        for n in range(6)
        for k in range(n + 1)
        if len(enumerate_subspaces(n, q, k)) != gaussian_binomial(n, k, q)
    ]
    return not mismatches, f"n <= 5, q in {{2,3}}; mismatches: {mismatches or 'none'}"


def fano_reproduction() -> Tuple[bool, str]:
    planes = {frozenset(s.point_strings()) for s in enumerate_subspaces(3, 2, 2)}
    planes_ok = planes == {frozenset(p) for p in FANO_PLANES}
    ps = projective_space(2, 2)
    lines_ok = {frozenset(l) for l in ps.line_labels()} == {frozenset(l) for l in FANO_LINES}
    axioms = plane_axioms(ps)
    dual = duality_check(ps).is_self_dual_plane
    ok = planes_ok and lines_ok and all(axioms.values()) and dual
    failed = [k for k, v in axioms.items() if not v]
    return ok, (
        f"planes match: {planes_ok}, lines match: {lines_ok}, "
        f"axioms failed: {failed or 'none'}, self-dual: {dual}"
    )


def fano_octonion_table() -> Tuple[bool, str]:
    t = fano_table()
    rules_ok = all(t.product(a, b) == (1, c) for a, b, c in FANO_RULES)
    report = validate_table(t)
    subs = [quaternion_subalgebra(t, line) for line in fano_lines(t)]
    subs_ok = len(subs) == 7 and all(s.closed and s.associative and s.isomorphic_to_H for s in subs)
    phi = find_isomorphism(t)
    ok = rules_ok and report.valid and subs_ok and phi is not None
    return ok, (
        f"rules +1: {rules_ok}, anticommutative/squares/norm/alternative: "
        f"{report.anticommutative}/{report.units_square_to_minus_one}/{report.norm_composing}/{report.alternative}, "
        f"quaternion lines: {sum(s.closed and s.associative for s in subs)}/7, isomorphism: {phi is not None}"
    )


def square_identities() -> Tuple[bool, str]:
    zero = {n: verify_identity(derive_identity(n)) for n in (1, 2, 4, 8)}
    fano8 = verify_identity(derive_identity(8, fano_table()))
    two = derive_identity(2).forms == textbook_two_square()
    sixteen = derive_identity(16)
    ok = all(zero.values()) and fano8 and two and not sixteen.residual.is_zero()
    return ok, (
        f"zero residual n=1,2,4,8: {all(zero.values())}, Fano n=8: {fano8}, (ac-bd, bc+ad): {two}, "
        f"n=16 residual terms: {len(sixteen.residual)}"
    )


def _first_failure(law: cd.Law, trials: int) -> Tuple[int, cd.LawReport]:
    for level in range(cd.MAX_LEVEL + 1):
        r = cd.probe_law(level, law, trials=trials, seed=0)
        if not r.holds:
            return level, r
    return -1, r


def law_ladder() -> Tuple[bool, str]:
    expected = {cd.Law.COMMUTATIVE: 2, cd.Law.ASSOCIATIVE: 3, cd.Law.NORM_COMPOSING: 4}
    found = {}
    ok = True
    for law, lvl in expected.items():
        level, report = _first_failure(law, trials=20)
        found[law.value] = level
        ok &= level == lvl and report.recheck()
    octonion = [cd.probe_law(3, law, trials=20, seed=0).holds for law in (cd.Law.ALTERNATIVE, cd.Law.MOUFANG)]
    zd = cd.find_zero_divisors(4)
    zd_ok = zd is not None and bool(zd[0]) and bool(zd[1]) and not cd.cd_multiply(*zd)
    ok = ok and all(octonion) and zd_ok
    witness = f"({zd[0]})({zd[1]}) = 0" if zd else "none"
    return ok, f"first failures {found}, octonions alternative+Moufang: {all(octonion)}, zero divisors: {witness}"


# Commands whose output must be byte-identical across runs.
DETERMINISM_COMMANDS = (
    ["galois", "--n", "3", "--q", "2"],
    ["galois", "--n", "4", "--q", "3", "--format", "json"],
    ["subspaces", "--n", "3", "--q", "2", "--k", "2", "--format", "json"],
    ["subspaces", "--n", "3", "--q", "3", "--dim", "1"],
    ["lattice", "--n", "3", "--q", "2", "--format", "dot"],
    ["lattice", "--n", "2", "--q", "2", "--format", "json"],
    ["lattice", "--n", "3", "--q", "2"],
    ["fano", "--format", "json"],
    ["fano", "--format", "dot"],
    ["fano"],
    ["octonion-table"],
    ["octonion-table", "--coding", "points", "--format", "json"],
    ["octonion-table", "--coding", "cd", "--format", "dot"],
    ["validate"],
    ["validate", "--coding", "cd", "--format", "json"],
    ["identity", "--n", "2"],
    ["identity", "--n", "8", "--source", "fano", "--format", "json"],
    ["identity", "--n", "16"],
    ["probe", "--level", "3", "--law", "alternative", "--trials", "10", "--seed", "7"],
    ["probe", "--level", "4", "--law", "norm_composing", "--format", "json"],
    ["sweep", "--orientations"],
)


def _run_cli(argv: List[str]) -> Tuple[int, bytes]:
    from .cli import main

    buf = io.StringIO()
    with contextlib.redirect_stderr(io.StringIO()):
        code = main(argv, out=buf)
    return code, buf.getvalue().encode()


def cli_determinism() -> Tuple[bool, str]:
    differing = []
    for argv in DETERMINISM_COMMANDS:
        if _run_cli(argv) != _run_cli(argv):
            differing.append(" ".join(argv))
    return not differing, f"{len(DETERMINISM_COMMANDS)} commands run twice; differing: {differing or 'none'}"


CRITERIA = (
    Criterion(1, "Reference constants", reference_constants, 0.001, repeats=10),
    Criterion(2, "q-exp squared identity", qexp_identity, 1.0),
    Criterion(3, "Subspace-count law", subspace_counts, 2.0),
    Criterion(4, "Fano reproduction", fano_reproduction, 0.001, repeats=10),
    Criterion(5, "Fano octonion table", fano_octonion_table, 5.0),
    Criterion(6, "Square identities", square_identities, 5.0),
    Criterion(7, "Law ladder", law_ladder, 10.0),
    Criterion(8, "Determinism", cli_determinism, float("inf")),
)


def run_criterion(c: Criterion) -> Outcome:
    """Run a criterion; sub-millisecond budgets take the best of ``repeats`` timings."""
    best = float("inf")
    for _ in range(c.repeats):
        start = time.perf_counter()
        passed, detail = c.check()
        best = min(best, time.perf_counter() - start)
    return Outcome(c.number, c.title, passed, detail, best < c.budget, c.budget)


def run_all(skip: Tuple[int, ...] = ()) -> List[Outcome]:
    return [run_criterion(c) for c in CRITERIA if c.number not in skip]
