"""Distance-table rendering, CSV round-trip, and reference-table errata.

The package ships hand-transcribed reference distance tables for M(7,4)
and M(10,2).  Those tables are not internally consistent: a handful of
cells disagree with their mirror cell, and a few disagree with the
search distances outright.  compare_fixture classifies every off-diagonal
cell against the breadth-first oracle, which is authoritative in all
comparisons; the fixture never is.
"""

import csv
import io
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .distances import DistanceMatrix
from .errors import FixtureFormatError, InvalidSpecError
from .ladder import LadderSpec, Vertex, vertex_of_index, vertex_of_label


def matrix_to_csv(matrix: DistanceMatrix) -> str:
    """Label header row and column, one row per vertex, linefeed endings."""
    spec = matrix.spec
    labels = [vertex_of_index(spec, idx).label() for idx in range(matrix.side)]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([""] + labels)
    for label, row in zip(labels, matrix.dist):
        writer.writerow([label] + list(row))
    return buf.getvalue()


def emit_table(matrix: DistanceMatrix, split_width: int) -> str:
    """Aligned text rendering, split into vertical blocks.

    Blocks hold at most split_width label columns each; split_width at or
    above the side gives a single table.
    """
    if split_width < 1:
        raise ValueError(f"split_width must be >= 1, got {split_width}")
    spec = matrix.spec
    side = matrix.side
    labels = [vertex_of_index(spec, idx).label() for idx in range(side)]
    width = max(max(len(lab) for lab in labels),
                len(str(matrix.diameter()))) + 1
    row_head = max(len(lab) for lab in labels)

    blocks = []
    for start in range(0, side, split_width):
        cols = range(start, min(start + split_width, side))
        lines = [" " * row_head
                 + "".join(f"{labels[c]:>{width}}" for c in cols) + "\n"]
        lines.append("-" * (row_head + width * len(cols)) + "\n")
        for r in range(side):
            lines.append(f"{labels[r]:<{row_head}}"
                         + "".join(f"{matrix.dist[r][c]:>{width}}" for c in cols)
                         + "\n")
        blocks.append("".join(lines))
    return "\n".join(blocks)


def _parse_label(token: str) -> tuple[int, int]:
    """Accept 'v<i>:<q>', '<i>:<q>', or the two-digit 'v11' shorthand."""
    body = token.strip()
    if body.startswith("v"):
        body = body[1:]
    try:
        if ":" in body:
            i_part, q_part = body.split(":", 1)
            return int(i_part), int(q_part)
        if len(body) == 2 and body.isdigit():
            return int(body[0]), int(body[1])
    except ValueError:
        pass
    raise FixtureFormatError(f"cannot parse vertex label {token!r}")


def parse_matrix_csv(text: str) -> tuple[list[tuple[int, int]], list[list[int]]]:
    """Parse the shared CSV table format into labels and integer rows.

    Validates squareness and cell contents, naming the offending row and
    column on failure.
    """
    reader = list(csv.reader(io.StringIO(text)))
    reader = [row for row in reader if row]
    if not reader:
        raise FixtureFormatError("empty table")
    header = reader[0]
    if header and header[0].strip():
        raise FixtureFormatError(
            f"corner cell of the header row must be empty, got {header[0]!r}")
    labels = [_parse_label(tok) for tok in header[1:]]
    side = len(labels)
    if side == 0:
        raise FixtureFormatError("header row has no vertex labels")
    body = reader[1:]
    if len(body) < side:
        missing_i, missing_q = labels[len(body)]
        raise FixtureFormatError(
            f"expected {side} data rows, found {len(body)}; "
            f"first missing row is for label v{missing_i}:{missing_q}")
    if len(body) > side:
        raise FixtureFormatError(
            f"expected {side} data rows, found {len(body)}")
    entries: list[list[int]] = []
    for r, row in enumerate(body, start=1):
        if len(row) != side + 1:
            raise FixtureFormatError(
                f"row {r}: expected {side + 1} cells, found {len(row)}")
        if _parse_label(row[0]) != labels[r - 1]:
            raise FixtureFormatError(
                f"row {r}: label {row[0]!r} does not match header order")
        parsed: list[int] = []
        for c, cell in enumerate(row[1:], start=1):
            try:
                value = int(cell)
            except ValueError:
                raise FixtureFormatError(
                    f"row {r}, column {c}: non-integer cell {cell!r}") from None
            if value < 0:
                raise FixtureFormatError(
                    f"row {r}, column {c}: negative value {value}")
            parsed.append(value)
        entries.append(parsed)
    return labels, entries


def parse_distance_csv(text: str, spec: LadderSpec) -> DistanceMatrix:
    """Round-trip parser for matrix_to_csv output."""
    labels, entries = parse_matrix_csv(text)
    expected = [(vertex_of_index(spec, idx).i, vertex_of_index(spec, idx).q)
                for idx in range(spec.vertex_count)]
    if labels != expected:
        raise FixtureFormatError(
            f"labels do not enumerate {spec.name()} in dense order")
    return DistanceMatrix(spec=spec, dist=tuple(tuple(r) for r in entries))


@dataclass(frozen=True)
class ReferenceTable:
    """A transcribed distance table, faithful to its source, errata and all.

    Not required to be symmetric; asymmetric cells are exactly what the
    errata comparison exists to find.
    """

    spec: LadderSpec
    entries: tuple[tuple[int, ...], ...]
    source: str

    @property
    def side(self) -> int:
        return len(self.entries)


def load_fixture(path) -> ReferenceTable:
    """Load and validate a reference table from the shared CSV format.

    The spec is inferred from the labels, which must enumerate the whole
    vertex set in dense order; the diagonal must be zero.
    """
    path = Path(path)
    labels, entries = parse_matrix_csv(path.read_text(encoding="utf-8"))
    m = max(i for i, _ in labels) + 1
    n = max(q for _, q in labels)
    try:
        spec = LadderSpec(m, n)
    except InvalidSpecError as exc:
        raise FixtureFormatError(f"labels imply invalid spec: {exc}") from exc
    expected = [(vertex_of_index(spec, idx).i, vertex_of_index(spec, idx).q)
                for idx in range(spec.vertex_count)]
    if labels != expected:
        raise FixtureFormatError(
            f"labels do not enumerate {spec.name()} in dense order")
    for d, row in enumerate(entries):
        if row[d] != 0:
            raise FixtureFormatError(
                f"row {d + 1}, column {d + 1}: diagonal cell must be 0, "
                f"got {row[d]}")
    return ReferenceTable(spec=spec,
                          entries=tuple(tuple(r) for r in entries),
                          source=str(path))


def shipped_fixture_path(m: int, n: int) -> Path:
    """Path of the packaged reference table for M(m,n), if one ships."""
    candidate = resources.files(__package__) / "fixtures" / f"m{m}n{n}.csv"
    path = Path(str(candidate))
    if not path.is_file():
        raise FileNotFoundError(f"no shipped reference table for M({m},{n})")
    return path


@dataclass(frozen=True)
class AsymmetricCell:
    """An unordered pair printed with two different values."""

    a: Vertex
    b: Vertex
    printed_ab: int
    printed_ba: int
    oracle: int

    @property
    def neither_matches(self) -> bool:
        return self.oracle not in (self.printed_ab, self.printed_ba)


@dataclass(frozen=True)
class HardMismatch:
    """A symmetrically printed pair that still disagrees with the oracle."""

    a: Vertex
    b: Vertex
    printed: int
    oracle: int


@dataclass(frozen=True)
class OrderedMismatch:
    """One directed cell (row, column) whose printed value is wrong."""

    row: Vertex
    col: Vertex
    printed: int
    computed: int


@dataclass
class ErrataReport:
    """Classification of every off-diagonal cell of a reference table.

    Unordered pairs partition into consistent matches, asymmetric prints,
    and hard mismatches; oracle_mismatches lists every directed cell that
    disagrees with the computed distance.
    """

    spec: LadderSpec
    asymmetric_cells: list[AsymmetricCell]
    hard_mismatches: list[HardMismatch]
    oracle_mismatches: list[OrderedMismatch]
    consistent_match_count: int

    @property
    def pair_total(self) -> int:
        side = self.spec.vertex_count
        return side * (side - 1) // 2

    def to_text(self) -> str:
        lines = [f"errata report for {self.spec.name()}\n",
                 f"  unordered pairs: {self.pair_total}\n",
                 f"  consistent matches: {self.consistent_match_count}\n",
                 f"  asymmetric prints: {len(self.asymmetric_cells)}\n",
                 f"  hard mismatches: {len(self.hard_mismatches)}\n",
                 f"  directed cells disagreeing with oracle: "
                 f"{len(self.oracle_mismatches)}\n"]
        for cell in self.asymmetric_cells:
            note = " (neither value matches)" if cell.neither_matches else ""
            lines.append(f"  asymmetric {cell.a.label()},{cell.b.label()}: "
                         f"printed {{{cell.printed_ab}, {cell.printed_ba}}}, "
                         f"oracle {cell.oracle}{note}\n")
        for hard in self.hard_mismatches:
            lines.append(f"  hard {hard.a.label()},{hard.b.label()}: "
                         f"printed {hard.printed}, oracle {hard.oracle}\n")
        return "".join(lines)


def compare_fixture(fixture: ReferenceTable,
                    matrix: DistanceMatrix) -> ErrataReport:
    """Classify every off-diagonal cell of a reference table.

    The computed matrix is ground truth.  Each unordered pair lands in
    exactly one class: consistent match, asymmetric print (the two
    directed cells disagree with each other), or hard mismatch (they
    agree with each other but not with the oracle).
    """
    if fixture.spec != matrix.spec:
        raise ValueError(f"fixture is for {fixture.spec.name()}, "
                         f"matrix for {matrix.spec.name()}")
    spec = fixture.spec
    side = fixture.side
    asymmetric: list[AsymmetricCell] = []
    hard: list[HardMismatch] = []
    ordered: list[OrderedMismatch] = []
    matches = 0
    for u in range(side):
        vu = vertex_of_index(spec, u)
        for v in range(u + 1, side):
            vv = vertex_of_index(spec, v)
            printed_uv = fixture.entries[u][v]
            printed_vu = fixture.entries[v][u]
            oracle = matrix.dist[u][v]
            if printed_uv != oracle:
                ordered.append(OrderedMismatch(vu, vv, printed_uv, oracle))
            if printed_vu != oracle:
                ordered.append(OrderedMismatch(vv, vu, printed_vu, oracle))
            if printed_uv != printed_vu:
                asymmetric.append(AsymmetricCell(vu, vv, printed_uv,
                                                 printed_vu, oracle))
            elif printed_uv != oracle:
                hard.append(HardMismatch(vu, vv, printed_uv, oracle))
            else:
                matches += 1
    return ErrataReport(spec=spec, asymmetric_cells=asymmetric,
                        hard_mismatches=hard, oracle_mismatches=ordered,
                        consistent_match_count=matches)
