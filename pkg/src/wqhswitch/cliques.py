"""Clique search over int-bitset adjacency rows."""
from __future__ import annotations

from collections.abc import Iterator

from .graphcore import Graph, GraphError, bits


def _color_order(rows, P: int) -> tuple[list[int], list[int]]:
    # greedy sequential colouring; colour of v bounds the clique size in
    # the prefix of the order ending at v
    order, colors = [], []
    U = P
    k = 0
    while U:
        k += 1
        Q = U
        while Q:
            v = (Q & -Q).bit_length() - 1
            Q &= ~rows[v] & ~(1 << v)
            U &= ~(1 << v)
            order.append(v)
            colors.append(k)
    return order, colors


class _Found(Exception):
    pass


def max_clique_size(G: Graph, cand: int, cap: int | None = None) -> int:
    """Size of a largest clique inside vertex mask ``cand``.

    With ``cap`` the search stops once a clique of that size is found, so the
    result is exact below ``cap`` and equals ``cap`` otherwise.
    """
    rows = G.rows
    best = 0

    def expand(size: int, P: int):
        nonlocal best
        order, colors = _color_order(rows, P)
        for v, c in zip(reversed(order), reversed(colors)):
            if size + c <= best:
                return
            if cap is not None and size + 1 >= cap:
                best = cap
                raise _Found
            NP = P & rows[v]
            if NP:
                expand(size + 1, NP)
            elif size + 1 > best:
                best = size + 1
                if cap is not None and best >= cap:
                    raise _Found
            P &= ~(1 << v)

    if cap is not None and cap <= 0:
        return 0
    try:
        if cand:
            expand(0, cand)
    except _Found:
        pass
    return best


def max_clique_through_edge(G: Graph, u: int, w: int, cap: int | None = None) -> int:
    if not G.has_edge(u, w):
        raise GraphError(f"{u} and {w} are not adjacent")
    common = G.rows[u] & G.rows[w]
    return 2 + max_clique_size(G, common, None if cap is None else cap - 2)


def k_cliques(G: Graph, k: int, within: int | None = None) -> Iterator[tuple[int, ...]]:
    """All cliques of exactly ``k`` vertices inside ``within`` (default all), ascending tuples."""
    rows = G.rows

    def rec(prefix: tuple[int, ...], P: int, need: int):
        if need == 0:
            yield prefix
            return
        while P and P.bit_count() >= need:
            low = P & -P
            v = low.bit_length() - 1
            P ^= low
            yield from rec(prefix + (v,), P & rows[v], need - 1)

    if k <= 0:
        yield ()
        return
    start = (1 << G.v) - 1 if within is None else within
    yield from rec((), start, k)


def count_cliques_through_edge(G: Graph, u: int, w: int, k: int) -> int:
    if not G.has_edge(u, w):
        raise GraphError(f"{u} and {w} are not adjacent")
    return sum(1 for _ in k_cliques(G, k - 2, G.rows[u] & G.rows[w]))


def maximal_cliques(G: Graph, min_size: int = 1) -> Iterator[tuple[int, ...]]:
    """Bron-Kerbosch with Tomita pivoting, pruning branches that cannot reach ``min_size``."""
    rows = G.rows

    def bk(R: tuple[int, ...], P: int, X: int):
        if not P:
            if not X and len(R) >= min_size:
                yield tuple(sorted(R))
            return
        if len(R) + P.bit_count() < min_size:
            return
        PX = P | X
        pivot = max(bits(PX), key=lambda u: (P & rows[u]).bit_count())
        for v in list(bits(P & ~rows[pivot])):
            b = 1 << v
            yield from bk(R + (v,), P & rows[v], X & rows[v])
            P &= ~b
            X |= b

    yield from bk((), (1 << G.v) - 1, 0)
