"""Immutable simple graphs with int-bitset adjacency rows, plus graph6 I/O."""
from __future__ import annotations

from collections import deque
from collections.abc import Iterable

import numpy as np


class GraphError(ValueError):
    pass


def bits(mask: int) -> Iterable[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Simple undirected graph on vertices ``0..v-1``.

    ``rows[i]`` is an int whose bit ``j`` is set iff i ~ j.  Graphs compare
    equal iff their adjacency is identical.
    """

    __slots__ = ("v", "rows", "_matrix")

    def __init__(self, v: int, rows: Iterable[int], check: bool = True):
        self.v = v
        self.rows = tuple(rows)
        self._matrix = None
        if check:
            self._validate()

    def _validate(self):
        if len(self.rows) != self.v:
            raise GraphError(f"expected {self.v} rows, got {len(self.rows)}")
        full = (1 << self.v) - 1
        for i, r in enumerate(self.rows):
            if r & ~full:
                raise GraphError(f"row {i} has bits beyond vertex {self.v - 1}")
            if r >> i & 1:
                raise GraphError(f"loop at vertex {i}")
            for j in bits(r):
                if not self.rows[j] >> i & 1:
                    raise GraphError(f"asymmetric adjacency between {i} and {j}")

    @classmethod
    def from_edges(cls, v: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * v
        for a, b in edges:
            if a == b:
                raise GraphError(f"loop at vertex {a}")
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return cls(v, rows)

    @classmethod
    def from_matrix(cls, A) -> Graph:
        A = np.asarray(A)
        v = A.shape[0]
        rows = []
        for i in range(v):
            rows.append(mask_of(np.flatnonzero(A[i]).tolist()))
        return cls(v, rows)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.v == other.v and self.rows == other.rows

    def __hash__(self):
        return hash((self.v, self.rows))

    def __repr__(self):
        return f"<Graph v={self.v} edges={self.num_edges()}>"

    def _vertex(self, u: int) -> int:
        if not 0 <= u < self.v:
            raise GraphError(f"vertex {u} out of range 0..{self.v - 1}")
        return u

    def has_edge(self, u: int, w: int) -> bool:
        return bool(self.rows[self._vertex(u)] >> self._vertex(w) & 1)

    def neighbors(self, u: int) -> list[int]:
        return list(bits(self.rows[self._vertex(u)]))

    def degree(self, u: int) -> int:
        return self.rows[self._vertex(u)].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def common_neighbors(self, u: int, w: int) -> int:
        return (self.rows[self._vertex(u)] & self.rows[self._vertex(w)]).bit_count()

    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> Iterable[tuple[int, int]]:
        for i, r in enumerate(self.rows):
            for j in bits(r >> (i + 1)):
                yield i, i + 1 + j

    def is_regular(self) -> bool:
        return len(set(self.degrees())) <= 1

    def is_connected(self) -> bool:
        if self.v == 0:
            return True
        seen = 1
        queue = deque([0])
        while queue:
            u = queue.popleft()
            new = self.rows[u] & ~seen
            seen |= new
            queue.extend(bits(new))
        return seen == (1 << self.v) - 1

    def induced_edge_count(self, vertices: Iterable[int]) -> int:
        vs = list(vertices)
        m = mask_of(vs)
        return sum((self.rows[u] & m).bit_count() for u in vs) // 2

    def matrix(self) -> np.ndarray:
        """Dense 0/1 adjacency matrix (uint8), cached."""
        if self._matrix is None:
            A = np.zeros((self.v, self.v), dtype=np.uint8)
            for i, r in enumerate(self.rows):
                A[i, list(bits(r))] = 1
            A.setflags(write=False)
            self._matrix = A
        return self._matrix

    def relabel(self, perm) -> Graph:
        """Graph with vertex ``i`` renamed ``perm[i]``."""
        perm = list(perm)
        if sorted(perm) != list(range(self.v)):
            raise GraphError("not a permutation")
        rows = [0] * self.v
        for i, r in enumerate(self.rows):
            rows[perm[i]] = mask_of(perm[j] for j in bits(r))
        return Graph(self.v, rows, check=False)


def _size_bytes(n: int) -> bytes:
    if n < 0 or n > 68719476735:
        raise GraphError(f"graph6 cannot encode {n} vertices")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def graph6_encode(G: Graph) -> bytes:
    """graph6 bytes, no header and no trailing newline."""
    out = bytearray(_size_bytes(G.v))
    acc = nbits = 0
    for j in range(1, G.v):
        col = G.rows[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def graph6_decode(data) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data:
        raise GraphError("empty graph6 string")
    if any(c < 63 or c > 126 for c in data):
        raise GraphError("graph6 bytes must lie in 63..126")
    vals = [c - 63 for c in data]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 4 and vals[1] < 63:
        n, pos = (vals[1] << 12) | (vals[2] << 6) | vals[3], 4
    elif len(vals) >= 8 and vals[1] == 63:
        n = 0
        for x in vals[2:8]:
            n = (n << 6) | x
        pos = 8
    else:
        raise GraphError("malformed graph6 size header")
    nbits = n * (n - 1) // 2
    body = vals[pos:]
    if len(body) != (nbits + 5) // 6:
        raise GraphError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6}")
    stream = "".join(format(x, "06b") for x in body)
    if "1" in stream[nbits:]:
        raise GraphError("nonzero padding bits in graph6 body")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        col = stream[k:k + j]
        k += j
        for i, c in enumerate(col):
            if c == "1":
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, rows, check=False)


def write_graph6(path, graphs) -> None:
    with open(path, "wb") as fh:
        for G in graphs:
            fh.write(graph6_encode(G) + b"\n")


def read_graph6(path) -> list[Graph]:
    with open(path, "rb") as fh:
        return [graph6_decode(line) for line in fh if line.strip()]
