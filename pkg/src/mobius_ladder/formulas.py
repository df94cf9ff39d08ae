"""Closed-form distances from the four corner landmarks of M(m,n).

Two parameter regimes are covered, named after the claims they verify:
THM31 (mixed parity, m-n >= 3) and THM32 (equal parity, m-n >= 4).
Each regime gives the distance from v_{1,1} to every vertex as a
two-branch piecewise expression in (i, q); the remaining corner
landmarks reduce to it by row reflections.

Branch thresholds are half-integers in general, so every comparison is
done on doubled integers; no floating point is involved.  The formula
layer is advisory: the breadth-first matrix stays authoritative, and
validate_formulas cross-checks every cell against it.
"""

import csv
import io
from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple

from .distances import DistanceMatrix, all_pairs_distances
from .errors import HypothesisError, VertexRangeError
from .ladder import LadderSpec, Vertex, build_ladder, vertex_of_label


class Theorem(Enum):
    """The two constant-dimension subfamilies of M(m,n)."""

    THM31 = "mixed-parity"
    THM32 = "equal-parity"


def _require(spec: LadderSpec, theorem: Theorem) -> None:
    if theorem is Theorem.THM31 and not spec.thm31_applies:
        raise HypothesisError(
            f"{spec.name()} violates the mixed-parity hypotheses "
            f"(need m+n odd and m-n >= 3)")
    if theorem is Theorem.THM32 and not spec.thm32_applies:
        raise HypothesisError(
            f"{spec.name()} violates the equal-parity hypotheses "
            f"(need m+n even and m-n >= 4)")


def _check_cell(spec: LadderSpec, i: int, q: int) -> None:
    if not 1 <= i <= spec.m - 1:
        raise VertexRangeError(f"i={i} out of range 1..{spec.m - 1}")
    if not 1 <= q <= spec.n:
        raise VertexRangeError(f"q={q} out of range 1..{spec.n}")


def dist_step1_thm31(spec: LadderSpec, i: int, q: int) -> int:
    """d(v_{1,1}, v_{i,q}) in the mixed-parity regime.

    i + q - 2 up to the half-turn threshold, m + n - q - i beyond it; the
    two ranges are adjacent and exhaustive because m + n is odd.
    """
    _require(spec, Theorem.THM31)
    _check_cell(spec, i, q)
    m, n = spec.m, spec.n
    if 2 * i <= m + n - 2 * q + 1:
        return i + q - 2
    return m + n - q - i


def dist_step1_thm32(spec: LadderSpec, i: int, q: int) -> int:
    """d(v_{1,1}, v_{i,q}) in the equal-parity regime."""
    _require(spec, Theorem.THM32)
    _check_cell(spec, i, q)
    m, n = spec.m, spec.n
    if 2 * i <= m + n - 2 * q + 2:
        return i + q - 2
    return m + n - q - i


def dist_step2(spec: LadderSpec, theorem: Theorem, i: int, q: int) -> int:
    """d(v_{1,n}, v_{i,q}): the opposite first-column corner, by row reversal."""
    _check_cell(spec, i, q)
    step1 = dist_step1_thm31 if theorem is Theorem.THM31 else dist_step1_thm32
    return step1(spec, i, spec.n + 1 - q)


def dist_step3a_thm31(spec: LadderSpec, i: int) -> int:
    """d(v_{m-1,1}, v_{i,1}) in the mixed-parity regime (bottom row only)."""
    _require(spec, Theorem.THM31)
    _check_cell(spec, i, 1)
    m, n = spec.m, spec.n
    if 2 * i <= m - n - 1:
        return i + n - 1
    return m - 1 - i


def dist_step3a_thm32(spec: LadderSpec, i: int) -> int:
    """d(v_{m-1,1}, v_{i,1}) in the equal-parity regime (bottom row only)."""
    _require(spec, Theorem.THM32)
    _check_cell(spec, i, 1)
    m, n = spec.m, spec.n
    if 2 * i <= m - n:
        return i + n - 1
    return m - 1 - i


def dist_step3b(spec: LadderSpec, theorem: Theorem, i: int, q: int) -> int:
    """d(v_{m-1,1}, v_{i,q}) for q >= 2, reduced to the v_{1,1} formula."""
    if q == 1:
        raise ValueError("q=1 is covered by the bottom-row formula (step IIIa)")
    _check_cell(spec, i, q)
    step1 = dist_step1_thm31 if theorem is Theorem.THM31 else dist_step1_thm32
    return step1(spec, i, spec.n + 2 - q)


def dist_step4_thm32(spec: LadderSpec, i: int, q: int) -> int:
    """d(v_{m-1,n}, v_{i,q}): the last corner, by row reversal of step III."""
    _require(spec, Theorem.THM32)
    _check_cell(spec, i, q)
    qq = spec.n + 1 - q
    if qq == 1:
        return dist_step3a_thm32(spec, i)
    return dist_step3b(spec, Theorem.THM32, i, qq)


@dataclass(frozen=True, order=True)
class FormulaCase:
    """One landmark formula: a theorem tag plus a step name.

    Steps I/II/IIIa/IIIb exist in both regimes; step IV only in THM32.
    The landmark is determined by the step: I -> v_{1,1}, II -> v_{1,n},
    IIIa/IIIb -> v_{m-1,1}, IV -> v_{m-1,n}.
    """

    theorem: Theorem
    step: str

    def key(self) -> str:
        return f"{self.theorem.name.lower()}:{self.step}"

    def landmark(self, spec: LadderSpec) -> Vertex:
        m, n = spec.m, spec.n
        corner = {"I": (1, 1), "II": (1, n),
                  "IIIa": (m - 1, 1), "IIIb": (m - 1, 1), "IV": (m - 1, n)}
        return vertex_of_label(spec, *corner[self.step])

    def cells(self, spec: LadderSpec):
        """The (i, q) domain this case covers."""
        qs = {"I": range(1, spec.n + 1), "II": range(1, spec.n + 1),
              "IIIa": range(1, 2), "IIIb": range(2, spec.n + 1),
              "IV": range(1, spec.n + 1)}[self.step]
        for q in qs:
            for i in range(1, spec.m):
                yield i, q

    def evaluate(self, spec: LadderSpec, i: int, q: int) -> int:
        if self.step == "I":
            step1 = dist_step1_thm31 if self.theorem is Theorem.THM31 else dist_step1_thm32
            return step1(spec, i, q)
        if self.step == "II":
            return dist_step2(spec, self.theorem, i, q)
        if self.step == "IIIa":
            step3a = dist_step3a_thm31 if self.theorem is Theorem.THM31 else dist_step3a_thm32
            return step3a(spec, i)
        if self.step == "IIIb":
            return dist_step3b(spec, self.theorem, i, q)
        if self.step == "IV":
            return dist_step4_thm32(spec, i, q)
        raise ValueError(f"unknown step {self.step!r}")


def applicable_cases(spec: LadderSpec) -> list[FormulaCase]:
    """All formula cases whose hypotheses spec satisfies."""
    if spec.thm31_applies:
        return [FormulaCase(Theorem.THM31, s) for s in ("I", "II", "IIIa", "IIIb")]
    if spec.thm32_applies:
        return [FormulaCase(Theorem.THM32, s) for s in ("I", "II", "IIIa", "IIIb", "IV")]
    raise HypothesisError(
        f"{spec.name()} satisfies neither regime "
        f"(m+n {'odd' if spec.mixed_parity else 'even'}, m-n={spec.m - spec.n})")


class FormulaMismatch(NamedTuple):
    case: str
    i: int
    q: int
    formula_value: int
    oracle_value: int


@dataclass
class FormulaValidationReport:
    """Per-case agreement counts plus every mismatching cell.

    Mismatches are data, not errors; an empty list certifies that the
    closed forms reproduce the search distances everywhere.
    """

    spec: LadderSpec
    theorem: Theorem
    agreements: dict[str, int] = field(default_factory=dict)
    mismatches: list[FormulaMismatch] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    @property
    def cells_checked(self) -> int:
        return sum(self.agreements.values()) + len(self.mismatches)

    def to_text(self) -> str:
        lines = [f"formula validation for {self.spec.name()} "
                 f"({self.theorem.value} regime)\n"]
        for key in sorted(self.agreements):
            lines.append(f"  {key:<12} agreements: {self.agreements[key]}\n")
        if self.ok:
            lines.append(f"  mismatches: none ({self.cells_checked} cells)\n")
        else:
            lines.append(f"  mismatches: {len(self.mismatches)}\n")
            for mm in self.mismatches:
                lines.append(f"    {mm.case} i={mm.i} q={mm.q}: "
                             f"formula={mm.formula_value} oracle={mm.oracle_value}\n")
        return "".join(lines)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["case", "i", "q", "formula_value", "oracle_value"])
        for mm in self.mismatches:
            writer.writerow([mm.case, mm.i, mm.q, mm.formula_value, mm.oracle_value])
        return buf.getvalue()


def validate_formulas(spec: LadderSpec,
                      matrix: DistanceMatrix | None = None) -> FormulaValidationReport:
    """Compare every applicable formula cell against the search oracle.

    Raises HypothesisError when neither regime applies to spec.
    """
    cases = applicable_cases(spec)
    if matrix is None:
        matrix = all_pairs_distances(build_ladder(spec))
    report = FormulaValidationReport(spec=spec, theorem=cases[0].theorem)
    for case in cases:
        landmark_row = matrix.row(case.landmark(spec))
        agree = 0
        for i, q in case.cells(spec):
            got = case.evaluate(spec, i, q)
            want = landmark_row[vertex_of_label(spec, i, q).idx]
            if got == want:
                agree += 1
            else:
                report.mismatches.append(
                    FormulaMismatch(case.key(), i, q, got, want))
        report.agreements[case.key()] = agree
    report.mismatches.sort()
    return report
