"""Construction of the generalized Mobius ladder M(m,n).

M(m,n) is built from the m x n grid of path products by gluing the last
column onto the first with a half twist: column m-1 attaches to column 1
in reversed row order.  Vertices carry 1-based labels (i, q) with
1 <= i <= m-1 (column) and 1 <= q <= n (row), plus a dense row-major
index used by every algorithm in the package.
"""

from dataclasses import dataclass
from typing import Iterator

from .errors import InvalidSpecError, VertexRangeError


@dataclass(frozen=True, order=True)
class LadderSpec:
    """The pair (m, n) defining M(m,n).

    m is the length of the long path factor, n the length of the short
    one.  Construction degenerates below m = 3, n = 2.
    """

    m: int
    n: int

    def __post_init__(self):
        if self.m < 3:
            raise InvalidSpecError(f"m must be >= 3, got m={self.m}")
        if self.n < 2:
            raise InvalidSpecError(f"n must be >= 2, got n={self.n}")

    @property
    def vertex_count(self) -> int:
        return (self.m - 1) * self.n

    @property
    def mixed_parity(self) -> bool:
        """True when exactly one of m, n is even."""
        return (self.m + self.n) % 2 == 1

    @property
    def thm31_applies(self) -> bool:
        """Hypotheses of the mixed-parity dimension-3 claim: m+n odd, m-n >= 3."""
        return self.mixed_parity and self.m - self.n >= 3

    @property
    def thm32_applies(self) -> bool:
        """Hypotheses of the equal-parity dimension-4 claim: m+n even, m-n >= 4."""
        return (not self.mixed_parity) and self.m - self.n >= 4

    @property
    def compact_labels(self) -> bool:
        """True when every vertex label fits the two-digit 'v11' shorthand."""
        return self.m - 1 <= 9 and self.n <= 9

    def name(self) -> str:
        return f"M({self.m},{self.n})"


@dataclass(frozen=True, order=True)
class Vertex:
    """A vertex label (i, q) together with its dense index.

    idx = (i-1)*n + (q-1); the dense order is i-major, q-minor, the same
    order the label shorthand enumerates.
    """

    i: int
    q: int
    idx: int

    def label(self) -> str:
        """'v11'-style shorthand when both coordinates are single digits,
        otherwise the unambiguous 'v<i>:<q>' form."""
        if self.i <= 9 and self.q <= 9:
            return f"v{self.i}{self.q}"
        return f"v{self.i}:{self.q}"

    def __str__(self) -> str:
        return self.label()


def vertex_of_label(spec: LadderSpec, i: int, q: int) -> Vertex:
    """Vertex for the 1-based label (i, q); raises VertexRangeError outside."""
    if not 1 <= i <= spec.m - 1:
        raise VertexRangeError(
            f"column index i={i} out of range 1..{spec.m - 1} for {spec.name()}")
    if not 1 <= q <= spec.n:
        raise VertexRangeError(
            f"row index q={q} out of range 1..{spec.n} for {spec.name()}")
    return Vertex(i, q, (i - 1) * spec.n + (q - 1))


def vertex_of_index(spec: LadderSpec, idx: int) -> Vertex:
    """Vertex for a dense index in 0..(m-1)*n-1; inverse of vertex_of_label."""
    if not 0 <= idx < spec.vertex_count:
        raise VertexRangeError(
            f"index {idx} out of range 0..{spec.vertex_count - 1} for {spec.name()}")
    return Vertex(idx // spec.n + 1, idx % spec.n + 1, idx)


def all_vertices(spec: LadderSpec) -> list[Vertex]:
    """Every vertex in dense-index order."""
    return [vertex_of_index(spec, idx) for idx in range(spec.vertex_count)]


def automorphism_rotate(spec: LadderSpec, v: Vertex) -> Vertex:
    """One step of the rotation automorphism induced by the twist gluing.

    Shifts the column by one; crossing the seam from column m-1 back to
    column 1 reverses the row.  Applying it m-1 times reverses all rows,
    2(m-1) times is the identity.
    """
    if v.i < spec.m - 1:
        return vertex_of_label(spec, v.i + 1, v.q)
    return vertex_of_label(spec, 1, spec.n + 1 - v.q)


@dataclass(frozen=True)
class Ladder:
    """Immutable adjacency structure of M(m,n).

    adjacency[u] is the sorted tuple of neighbor indices of u.  Safe for
    concurrent reads; built once by build_ladder.
    """

    spec: LadderSpec
    adjacency: tuple[tuple[int, ...], ...]
    vertex_count: int
    edge_count: int

    def neighbors(self, idx: int) -> tuple[int, ...]:
        return self.adjacency[idx]

    def degree(self, idx: int) -> int:
        return len(self.adjacency[idx])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as (u, v) with u < v, ascending."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield u, v

    def vertex(self, i: int, q: int) -> Vertex:
        return vertex_of_label(self.spec, i, q)

    def vertex_at(self, idx: int) -> Vertex:
        return vertex_of_index(self.spec, idx)


def build_ladder(spec: LadderSpec) -> Ladder:
    """Build M(m,n).

    Edge classes:
      (a) column edges  (i,q) ~ (i,q+1)
      (b) rung edges    (i,q) ~ (i+1,q)
      (c) twist edges   (m-1,q) ~ (1,n+1-q)

    Neighbor sets are deduplicated: for m = 3 with n odd, the middle-row
    rung and twist edges coincide, so edge_count can fall below
    (m-1)(2n-1) there.
    """
    m, n = spec.m, spec.n
    count = spec.vertex_count

    def at(i: int, q: int) -> int:
        return (i - 1) * n + (q - 1)

    nbrs: list[set[int]] = [set() for _ in range(count)]

    def connect(a: int, b: int) -> None:
        nbrs[a].add(b)
        nbrs[b].add(a)

    for i in range(1, m):
        for q in range(1, n):
            connect(at(i, q), at(i, q + 1))
    for i in range(1, m - 1):
        for q in range(1, n + 1):
            connect(at(i, q), at(i + 1, q))
    for q in range(1, n + 1):
        connect(at(m - 1, q), at(1, n + 1 - q))

    adjacency = tuple(tuple(sorted(s)) for s in nbrs)
    edge_count = sum(len(s) for s in adjacency) // 2
    return Ladder(spec=spec, adjacency=adjacency,
                  vertex_count=count, edge_count=edge_count)


def edge_list_text(ladder: Ladder) -> str:
    """One line per edge, 'i1,q1 i2,q2', 1-based labels, ascending order."""
    spec = ladder.spec
    lines = []
    for u, v in ladder.edges():
        a = vertex_of_index(spec, u)
        b = vertex_of_index(spec, v)
        lines.append(f"{a.i},{a.q} {b.i},{b.q}\n")
    return "".join(lines)


def dot_text(ladder: Ladder) -> str:
    """Undirected DOT export with node names v_i_q."""
    spec = ladder.spec
    lines = [f"graph mobius_m{spec.m}_n{spec.n} {{\n"]
    for u, v in ladder.edges():
        a = vertex_of_index(spec, u)
        b = vertex_of_index(spec, v)
        lines.append(f"  v_{a.i}_{a.q} -- v_{b.i}_{b.q};\n")
    lines.append("}\n")
    return "".join(lines)
