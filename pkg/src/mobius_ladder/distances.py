"""Exact shortest-path distances on a ladder.

These breadth-first distances are the ground truth for every other
module: the closed-form evaluators, the resolving-set engine, and the
reference-table comparison all anchor on this matrix.
"""

from dataclasses import dataclass

from .ladder import Ladder, LadderSpec, Vertex


@dataclass(frozen=True)
class DistanceMatrix:
    """Symmetric all-pairs shortest-path distances in edge units.

    dist is a square tuple-of-tuples of side (m-1)*n, indexed by dense
    vertex index.  Immutable, safe to share across workers.
    """

    spec: LadderSpec
    dist: tuple[tuple[int, ...], ...]

    @property
    def side(self) -> int:
        return len(self.dist)

    def entry(self, u, v) -> int:
        """Distance between two vertices given as Vertex or dense index."""
        ui = u.idx if isinstance(u, Vertex) else u
        vi = v.idx if isinstance(v, Vertex) else v
        return self.dist[ui][vi]

    def row(self, u) -> tuple[int, ...]:
        ui = u.idx if isinstance(u, Vertex) else u
        return self.dist[ui]

    def diameter(self) -> int:
        return max(max(row) for row in self.dist)


def single_source_distances(ladder: Ladder, source) -> list[int]:
    """Unweighted shortest-path distances from source via frontier expansion."""
    start = source.idx if isinstance(source, Vertex) else source
    dist = [-1] * ladder.vertex_count
    dist[start] = 0
    frontier = [start]
    level = 0
    adjacency = ladder.adjacency
    while frontier:
        level += 1
        nxt = []
        for u in frontier:
            for w in adjacency[u]:
                if dist[w] < 0:
                    dist[w] = level
                    nxt.append(w)
        frontier = nxt
    if min(dist) < 0:
        raise RuntimeError(f"{ladder.spec.name()} is not connected")
    return dist


def all_pairs_distances(ladder: Ladder) -> DistanceMatrix:
    """Run a breadth-first search from every vertex."""
    rows = tuple(tuple(single_source_distances(ladder, s))
                 for s in range(ladder.vertex_count))
    return DistanceMatrix(spec=ladder.spec, dist=rows)
