"""Checkable claims about the metric dimension of M(m,n).

Each parameter regime predicts a constant dimension and a concrete
corner basis, and its lower-bound argument names explicit collision
pairs for every one-smaller landmark set ("possibilities").  This module
materializes those claims, verifies them against the search engine, and
sweeps parameter ranges, reporting confirmations and any counterexample
instead of assuming the claims hold.
"""

import csv
import io
from dataclasses import dataclass

from .distances import DistanceMatrix, all_pairs_distances
from .errors import HypothesisError
from .formulas import Theorem
from .ladder import LadderSpec, Vertex, build_ladder, vertex_of_label
from .resolver import (CollisionWitness, DimensionReport, is_resolving,
                       metric_dimension, representation)


@dataclass(frozen=True)
class TheoremClaim:
    """Predicted dimension and candidate corner basis for one spec.

    theorem is None when the spec satisfies neither regime; then there is
    no prediction and candidate_basis is empty.
    """

    spec: LadderSpec
    theorem: Theorem | None
    predicted_dimension: int | None
    candidate_basis: tuple[Vertex, ...]


def claim_for(spec: LadderSpec) -> TheoremClaim:
    """Classify spec by parity and gap and materialize its claim."""
    m, n = spec.m, spec.n
    if spec.thm31_applies:
        basis = (vertex_of_label(spec, 1, 1), vertex_of_label(spec, 1, n),
                 vertex_of_label(spec, m - 1, 1))
        return TheoremClaim(spec, Theorem.THM31, 3, basis)
    if spec.thm32_applies:
        basis = (vertex_of_label(spec, 1, 1), vertex_of_label(spec, 1, n),
                 vertex_of_label(spec, m - 1, 1), vertex_of_label(spec, m - 1, n))
        return TheoremClaim(spec, Theorem.THM32, 4, basis)
    return TheoremClaim(spec, None, None, ())


@dataclass
class PossibilityCheck:
    """One reduced landmark set with its asserted collision family.

    passed means every asserted pair of representations is equal and the
    reduced set indeed fails to resolve.  unlisted_collision_count counts
    colliding pairs beyond the asserted family (informational only).
    """

    label: str
    landmarks: tuple[Vertex, ...]
    pairs: tuple[tuple[Vertex, Vertex], ...]
    identity_holds: bool
    mismatches: list[tuple[Vertex, Vertex, tuple[int, ...], tuple[int, ...]]]
    resolves: bool
    witness: CollisionWitness | None
    unlisted_collision_count: int

    @property
    def passed(self) -> bool:
        return self.identity_holds and not self.resolves


def _check_possibility(matrix: DistanceMatrix, label: str,
                       landmarks: tuple[Vertex, ...],
                       raw_pairs: list[tuple[Vertex, Vertex]]) -> PossibilityCheck:
    seen = set()
    pairs = []
    for a, b in raw_pairs:
        key = (min(a.idx, b.idx), max(a.idx, b.idx))
        if key not in seen:
            seen.add(key)
            pairs.append((a, b))
    mismatches = []
    for a, b in pairs:
        ra = representation(matrix, a, landmarks).coords
        rb = representation(matrix, b, landmarks).coords
        if ra != rb:
            mismatches.append((a, b, ra, rb))
    check = is_resolving(matrix, landmarks)

    idxs = [w.idx for w in landmarks]
    groups: dict[tuple[int, ...], int] = {}
    for row in matrix.dist:
        key = tuple(row[w] for w in idxs)
        groups[key] = groups.get(key, 0) + 1
    total_colliding = sum(c * (c - 1) // 2 for c in groups.values())
    stated = len(pairs) - sum(1 for a, b in pairs if a.idx == b.idx)
    return PossibilityCheck(
        label=label, landmarks=landmarks, pairs=tuple(pairs),
        identity_holds=not mismatches, mismatches=mismatches,
        resolves=bool(check), witness=check.witness,
        unlisted_collision_count=total_colliding - stated)


def check_possibilities_thm31(matrix: DistanceMatrix) -> list[PossibilityCheck]:
    """The three 2-landmark reductions of the mixed-parity basis.

    I  drops v_{m-1,1}: (i,j) collides with (m-i+1, n-j+1), i in 2..m-1, j in 1..n.
    II drops v_{1,n}:   (i,j) collides with (m-i, n-j+2),   i in 1..m-1, j in 2..n.
    III drops v_{1,1}:  (i,i) collides with (i+1, i+1),     i in 1..n-1.
    """
    spec = matrix.spec
    if not spec.thm31_applies:
        raise HypothesisError(
            f"{spec.name()} violates the mixed-parity hypotheses")
    m, n = spec.m, spec.n
    v = lambda i, q: vertex_of_label(spec, i, q)
    checks = []

    pairs = [(v(i, j), v(m - i + 1, n - j + 1))
             for i in range(2, m) for j in range(1, n + 1)]
    checks.append(_check_possibility(matrix, "I", (v(1, 1), v(1, n)), pairs))

    pairs = [(v(i, j), v(m - i, n - j + 2))
             for i in range(1, m) for j in range(2, n + 1)]
    checks.append(_check_possibility(matrix, "II", (v(1, 1), v(m - 1, 1)), pairs))

    pairs = [(v(i, i), v(i + 1, i + 1)) for i in range(1, n)]
    checks.append(_check_possibility(matrix, "III", (v(1, n), v(m - 1, 1)), pairs))
    return checks


def _half(value: int, what: str) -> int:
    if value % 2 != 0:
        raise HypothesisError(f"{what} = {value} is not even; "
                              f"collision index would not be integral")
    return value // 2


def check_possibilities_thm32(matrix: DistanceMatrix) -> list[PossibilityCheck]:
    """The four 3-landmark reductions of the equal-parity basis.

    Each drops one corner and asserts a single collision pair whose
    column indices are (m-n)/2-style midpoints; equal parity makes them
    integral, and that is asserted loudly before use.
    """
    spec = matrix.spec
    if not spec.thm32_applies:
        raise HypothesisError(
            f"{spec.name()} violates the equal-parity hypotheses")
    m, n = spec.m, spec.n
    v = lambda i, q: vertex_of_label(spec, i, q)
    c11, c1n = v(1, 1), v(1, n)
    cm1, cmn = v(m - 1, 1), v(m - 1, n)

    plan = [
        ("I", (c11, c1n, cm1),
         (v(_half(m - n + 2, "m-n+2"), 1), v(_half(m + n, "m+n"), n))),
        ("II", (c1n, cm1, cmn),
         (v(_half(m - n, "m-n"), 1), v(_half(m + n - 2, "m+n-2"), n))),
        ("III", (c11, cm1, cmn),
         (v(_half(m - n, "m-n"), 2), v(_half(m - n + 2, "m-n+2"), 1))),
        ("IV", (c11, c1n, cmn),
         (v(_half(m - n + 2, "m-n+2"), 2), v(_half(m - n + 4, "m-n+4"), 1))),
    ]
    return [_check_possibility(matrix, label, landmarks, [pair])
            for label, landmarks, pair in plan]


def check_possibilities(matrix: DistanceMatrix) -> list[PossibilityCheck]:
    """Dispatch on whichever regime applies to the matrix's spec."""
    if matrix.spec.thm31_applies:
        return check_possibilities_thm31(matrix)
    return check_possibilities_thm32(matrix)


@dataclass
class TheoremVerdict:
    """Outcome of checking one spec's claim against the search engine.

    prediction_holds is None when no claim applies; otherwise it is true
    exactly when the candidate basis resolves and the exact dimension
    equals the prediction.
    """

    claim: TheoremClaim
    exact_dimension: int
    candidate_resolves: bool | None
    possibilities: list[PossibilityCheck]
    report: DimensionReport

    @property
    def prediction_holds(self) -> bool | None:
        if self.claim.theorem is None:
            return None
        return (bool(self.candidate_resolves)
                and self.exact_dimension == self.claim.predicted_dimension)

    @property
    def possibilities_pass(self) -> bool | None:
        if self.claim.theorem is None:
            return None
        return all(p.passed for p in self.possibilities)


def verdict_for(spec: LadderSpec,
                matrix: DistanceMatrix | None = None) -> TheoremVerdict:
    """Full claim check for one spec: candidate set, exact search, possibilities."""
    if matrix is None:
        matrix = all_pairs_distances(build_ladder(spec))
    claim = claim_for(spec)
    report = metric_dimension(matrix)
    candidate_resolves = None
    possibilities: list[PossibilityCheck] = []
    if claim.theorem is not None:
        candidate_resolves = bool(is_resolving(matrix, claim.candidate_basis))
        possibilities = check_possibilities(matrix)
    return TheoremVerdict(claim=claim, exact_dimension=report.dimension,
                          candidate_resolves=candidate_resolves,
                          possibilities=possibilities, report=report)


@dataclass
class SweepRow:
    m: int
    n: int
    parity: str
    theorem: str
    predicted: int | None
    exact: int
    candidate_resolves: bool | None
    possibilities_pass: bool | None
    prediction_holds: bool | None
    basis: tuple[Vertex, ...]


@dataclass
class SweepReport:
    """One row per swept spec, sorted by (m, n), plus skip notes."""

    rows: list[SweepRow]
    skipped: list[tuple[int, int, str]]

    @property
    def counterexamples(self) -> list[SweepRow]:
        return [r for r in self.rows if r.prediction_holds is False]

    @property
    def confirmations(self) -> int:
        return sum(1 for r in self.rows if r.prediction_holds is True)

    def to_text(self) -> str:
        header = (f"{'m':>3} {'n':>3} {'parity':<7} {'claim':<6} "
                  f"{'pred':>4} {'exact':>5} {'cand':>5} {'poss':>5} {'holds':>5}\n")
        lines = [header, "-" * len(header) + "\n"]

        def show(value):
            if value is None:
                return "-"
            if isinstance(value, bool):
                return "yes" if value else "NO"
            return str(value)

        for r in self.rows:
            lines.append(f"{r.m:>3} {r.n:>3} {r.parity:<7} {r.theorem:<6} "
                         f"{show(r.predicted):>4} {r.exact:>5} "
                         f"{show(r.candidate_resolves):>5} "
                         f"{show(r.possibilities_pass):>5} "
                         f"{show(r.prediction_holds):>5}\n")
        lines.append(f"claims confirmed: {self.confirmations}; "
                     f"counterexamples: {len(self.counterexamples)}\n")
        for r in self.counterexamples:
            basis = ", ".join(v.label() for v in r.basis)
            lines.append(f"COUNTEREXAMPLE M({r.m},{r.n}): predicted "
                         f"{r.predicted}, exact {r.exact}, basis {{{basis}}}\n")
        for m, n, reason in self.skipped:
            lines.append(f"skipped M({m},{n}): {reason}\n")
        return "".join(lines)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["m", "n", "parity", "claim", "predicted", "exact",
                         "candidate_resolves", "possibilities_pass",
                         "prediction_holds"])
        for r in self.rows:
            writer.writerow([r.m, r.n, r.parity, r.theorem, r.predicted,
                             r.exact, r.candidate_resolves,
                             r.possibilities_pass, r.prediction_holds])
        return buf.getvalue()


def run_sweep(m_values, n_values, size_cap: int = 40) -> SweepReport:
    """Check the claims over a parameter grid.

    Only pairs with m > n are swept (the family convention); pairs whose
    vertex count exceeds size_cap are skipped with a note so exhaustive
    search stays tractable.  Counterexamples are reported, never raised.
    """
    rows: list[SweepRow] = []
    skipped: list[tuple[int, int, str]] = []
    for m in sorted(set(m_values)):
        for n in sorted(set(n_values)):
            if m <= n or m < 3 or n < 2:
                continue
            if (m - 1) * n > size_cap:
                skipped.append((m, n, f"{(m - 1) * n} vertices exceed "
                                      f"size cap {size_cap}"))
                continue
            spec = LadderSpec(m, n)
            verdict = verdict_for(spec)
            claim = verdict.claim
            rows.append(SweepRow(
                m=m, n=n,
                parity="mixed" if spec.mixed_parity else "equal",
                theorem=claim.theorem.name.lower() if claim.theorem else "-",
                predicted=claim.predicted_dimension,
                exact=verdict.exact_dimension,
                candidate_resolves=verdict.candidate_resolves,
                possibilities_pass=verdict.possibilities_pass,
                prediction_holds=verdict.prediction_holds,
                basis=verdict.report.basis))
    return SweepReport(rows=rows, skipped=skipped)
