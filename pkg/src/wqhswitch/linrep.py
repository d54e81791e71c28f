"""Line set of the linear representation T*_2(K) and its line graph.

Vertices are the affine lines of AG(3, q) whose point at infinity lies in K.
Line ``dir_index * q**2 + base_index`` has direction ``K[dir_index]``; its
canonical base point has a zero at the direction's leading coordinate, and
``base_index`` packs the remaining two coordinates as ``a * q + b``.
"""
from __future__ import annotations

from itertools import combinations

from .arcs import Arc
from .geometry import AffLine, Vec, affine_points, leading_index, line_canonicalize, lines_meet
from .gf2h import Field
from .graphcore import Graph, mask_of


class LineSet:
    def __init__(self, F: Field, K: Arc):
        if len(K) == 0:
            raise ValueError("the arc at infinity is empty")
        self.F = F
        self.q = F.q
        self.dirs: tuple[Vec, ...] = tuple(K.points)
        self._dir_index = {d: i for i, d in enumerate(self.dirs)}
        self._lead = [leading_index(d) for d in self.dirs]

    def __len__(self):
        return len(self.dirs) * self.q * self.q

    def line(self, idx: int) -> AffLine:
        q = self.q
        di, bi = divmod(idx, q * q)
        if not 0 <= di < len(self.dirs):
            raise IndexError(idx)
        a, b = divmod(bi, q)
        base = [a, b]
        base.insert(self._lead[di], 0)
        return AffLine(tuple(base), self.dirs[di])

    def lines(self) -> list[AffLine]:
        return [self.line(i) for i in range(len(self))]

    def index(self, line: AffLine) -> int:
        di = self._dir_index[line.dir]
        i = self._lead[di]
        if line.base[i] != 0:
            raise ValueError(f"{line} is not in canonical form")
        a, b = (x for j, x in enumerate(line.base) if j != i)
        return (di * self.q + a) * self.q + b

    def through(self, p: Vec, d: Vec) -> int:
        """Index of the line through affine point ``p`` with direction ``d``."""
        return self.index(line_canonicalize(self.F, p, d))

    def pencil(self, p: Vec) -> list[int]:
        """All |K| lines through ``p``."""
        return [self.through(p, d) for d in self.dirs]

    def pencils(self) -> list[list[int]]:
        return [self.pencil(p) for p in affine_points(self.F)]

    def to_json(self):
        return [
            {"id": i, "dir": list(ln.dir), "base": list(ln.base)}
            for i, ln in enumerate(self.lines())
        ]


def build_line_set(F: Field, K: Arc) -> LineSet:
    return LineSet(F, K)


def build_line_graph(L: LineSet) -> Graph:
    """Two lines are adjacent iff they share an affine point; every point's
    pencil is a clique and these cliques cover all edges."""
    rows = [0] * len(L)
    for pencil in L.pencils():
        m = mask_of(pencil)
        for u in pencil:
            rows[u] |= m
    for u in range(len(rows)):
        rows[u] &= ~(1 << u)
    return Graph(len(rows), rows, check=False)


def build_line_graph_pairwise(L: LineSet) -> Graph:
    """Same graph via the pairwise meeting predicate; slow, used as a cross-check."""
    lines = L.lines()
    edges = [
        (i, j)
        for (i, a), (j, b) in combinations(enumerate(lines), 2)
        if lines_meet(L.F, a, b)
    ]
    return Graph.from_edges(len(lines), edges)
