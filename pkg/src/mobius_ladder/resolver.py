"""Representation vectors, resolving-set checks, and exact metric dimension.

A landmark set W resolves the graph when the map v -> (d(v, w) for w in W)
is injective.  The exact dimension is found by enumerating subsets in
lexicographic dense-index order, cardinality by cardinality, with an
early-abort injectivity check; a greedy cover supplies the upper bound
that caps the enumeration.  Desk-scale instances finish in well under a
second, so no pruning beyond the early abort is needed.
"""

from dataclasses import dataclass
from itertools import combinations

from .distances import DistanceMatrix
from .ladder import LadderSpec, Vertex, vertex_of_index


@dataclass(frozen=True)
class Representation:
    """The ordered tuple of distances from one vertex to each landmark."""

    vertex: Vertex
    coords: tuple[int, ...]


@dataclass(frozen=True)
class CollisionWitness:
    """Two distinct vertices sharing a representation: proof W does not resolve."""

    a: Vertex
    b: Vertex
    shared_coords: tuple[int, ...]

    def describe(self) -> str:
        coords = ", ".join(str(c) for c in self.shared_coords)
        return f"{self.a.label()} == {self.b.label()} at ({coords})"


@dataclass(frozen=True)
class ResolvingCheck:
    """Outcome of an injectivity test, with a witness when it fails."""

    resolving: bool
    witness: CollisionWitness | None

    def __bool__(self) -> bool:
        return self.resolving


def _landmark_indices(matrix: DistanceMatrix, landmarks) -> list[int]:
    idxs = [w.idx if isinstance(w, Vertex) else int(w) for w in landmarks]
    if not idxs:
        raise ValueError("landmark set must be non-empty")
    if len(set(idxs)) != len(idxs):
        raise ValueError(f"landmark set has duplicates: {idxs}")
    side = matrix.side
    for w in idxs:
        if not 0 <= w < side:
            raise ValueError(f"landmark index {w} out of range 0..{side - 1}")
    return idxs


def representation(matrix: DistanceMatrix, v, landmarks) -> Representation:
    """r(v | W): distances from v to each landmark, in W's order."""
    idxs = _landmark_indices(matrix, landmarks)
    vertex = v if isinstance(v, Vertex) else vertex_of_index(matrix.spec, int(v))
    row = matrix.dist[vertex.idx]
    return Representation(vertex=vertex, coords=tuple(row[w] for w in idxs))


def is_resolving(matrix: DistanceMatrix, landmarks) -> ResolvingCheck:
    """Test injectivity of v -> r(v | W) over every vertex.

    On failure the witness is the lexicographically first colliding pair
    by dense index.
    """
    idxs = _landmark_indices(matrix, landmarks)
    groups: dict[tuple[int, ...], list[int]] = {}
    for v, row in enumerate(matrix.dist):
        groups.setdefault(tuple(row[w] for w in idxs), []).append(v)
    colliding = [members for members in groups.values() if len(members) > 1]
    if not colliding:
        return ResolvingCheck(resolving=True, witness=None)
    first = min(colliding, key=lambda members: members[0])
    spec = matrix.spec
    witness = CollisionWitness(
        a=vertex_of_index(spec, first[0]),
        b=vertex_of_index(spec, first[1]),
        shared_coords=tuple(matrix.dist[first[0]][w] for w in idxs))
    return ResolvingCheck(resolving=False, witness=witness)


def greedy_upper_bound(matrix: DistanceMatrix) -> list[Vertex]:
    """Greedy landmark cover: an upper bound on the metric dimension.

    Repeatedly adds the vertex whose distances split the most currently
    indistinguishable pairs, ties broken by smallest dense index.  Always
    terminates with a resolving set (a vertex separates itself from all
    others), though not necessarily a minimum one.
    """
    side = matrix.side
    dist = matrix.dist
    groups: list[list[int]] = [list(range(side))]
    chosen: list[int] = []

    def unresolved(parts: list[list[int]]) -> int:
        return sum(len(g) * (len(g) - 1) // 2 for g in parts)

    while unresolved(groups) > 0:
        best_w = -1
        best_pairs = None
        best_split = None
        for w in range(side):
            if w in chosen:
                continue
            split: list[list[int]] = []
            for g in groups:
                if len(g) == 1:
                    split.append(g)
                    continue
                sub: dict[int, list[int]] = {}
                for v in g:
                    sub.setdefault(dist[v][w], []).append(v)
                split.extend(sub.values())
            pairs = unresolved(split)
            if best_pairs is None or pairs < best_pairs:
                best_w, best_pairs, best_split = w, pairs, split
        chosen.append(best_w)
        groups = best_split
    return [vertex_of_index(matrix.spec, w) for w in chosen]


@dataclass(frozen=True)
class DimensionReport:
    """Exact metric dimension with its search certificate.

    status is "exact" when the enumeration found a minimum resolving set
    (having exhausted every smaller cardinality), or "undecided" when an
    explicit budget was exhausted first; then dimension and basis are
    None and searched_up_to records the cap.  witnesses holds one sample
    collision per fully failing cardinality.
    """

    spec: LadderSpec
    dimension: int | None
    basis: tuple[Vertex, ...] | None
    subsets_tested: int
    tested_by_cardinality: dict[int, int]
    witnesses: dict[int, CollisionWitness]
    greedy_bound: int
    status: str = "exact"
    searched_up_to: int | None = None

    def to_text(self) -> str:
        lines = [f"spec: {self.spec.name()}\n"]
        if self.status == "exact":
            basis = ", ".join(v.label() for v in self.basis)
            lines.append(f"dimension = {self.dimension}\n")
            lines.append(f"basis: {basis}\n")
        else:
            lines.append(f"dimension undecided: no resolving set of size "
                         f"<= {self.searched_up_to}\n")
        lines.append(f"subsets tested: {self.subsets_tested}\n")
        lines.append(f"greedy upper bound: {self.greedy_bound}\n")
        for k in sorted(self.witnesses):
            lines.append(f"collision at size {k}: "
                         f"{self.witnesses[k].describe()}\n")
        return "".join(lines)

    def to_kv_lines(self) -> list[str]:
        lines = [f"spec={self.spec.name()}",
                 f"status={self.status}",
                 f"dimension={self.dimension if self.dimension is not None else ''}"]
        if self.basis is not None:
            lines.append("basis=" + ",".join(v.label() for v in self.basis))
        lines.append(f"subsets_tested={self.subsets_tested}")
        for k in sorted(self.tested_by_cardinality):
            lines.append(f"subsets_tested_k{k}={self.tested_by_cardinality[k]}")
        for k in sorted(self.witnesses):
            w = self.witnesses[k]
            coords = ",".join(str(c) for c in w.shared_coords)
            lines.append(f"witness_k{k}={w.a.label()} {w.b.label()} ({coords})")
        return lines


def _injective(dist, landmarks) -> bool:
    """Early-abort check: bail at the first duplicated coordinate tuple."""
    seen = set()
    for row in dist:
        key = tuple(row[w] for w in landmarks)
        if key in seen:
            return False
        seen.add(key)
    return True


def metric_dimension(matrix: DistanceMatrix,
                     budget: int | None = None) -> DimensionReport:
    """Exact metric dimension by exhaustive subset enumeration.

    Cardinalities are searched in increasing order; within a cardinality,
    subsets run in lexicographic dense-index order with early exit at the
    first resolving set, so the reported basis is the lexicographically
    smallest minimum one.  Exhausting all (k-1)-subsets certifies
    minimality.  budget caps the cardinality (default: the greedy bound);
    if it is exhausted the report says so instead of guessing.
    """
    if budget is not None and budget < 1:
        raise ValueError(f"budget must be >= 1, got {budget}")
    side = matrix.side
    dist = matrix.dist
    greedy = greedy_upper_bound(matrix)
    cap = budget if budget is not None else len(greedy)

    tested = 0
    by_cardinality: dict[int, int] = {}
    witnesses: dict[int, CollisionWitness] = {}
    for k in range(1, cap + 1):
        count = 0
        found: tuple[int, ...] | None = None
        for subset in combinations(range(side), k):
            count += 1
            if _injective(dist, subset):
                found = subset
                break
        by_cardinality[k] = count
        tested += count
        if found is not None:
            basis = tuple(vertex_of_index(matrix.spec, w) for w in found)
            return DimensionReport(
                spec=matrix.spec, dimension=k, basis=basis,
                subsets_tested=tested, tested_by_cardinality=by_cardinality,
                witnesses=witnesses, greedy_bound=len(greedy))
        first_subset = tuple(range(k))
        witnesses[k] = is_resolving(matrix, first_subset).witness
    return DimensionReport(
        spec=matrix.spec, dimension=None, basis=None,
        subsets_tested=tested, tested_by_cardinality=by_cardinality,
        witnesses=witnesses, greedy_bound=len(greedy),
        status="undecided", searched_up_to=cap)
