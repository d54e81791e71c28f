"""Points, lines and planes of AG(3, q) and of PG(2, q) at infinity.

Coordinates are triples of field elements (ints).  A projective point is a
normalized triple whose leftmost nonzero entry is 1, so equality of points is
tuple equality and the natural tuple order is the index order everywhere.
"""
from __future__ import annotations

from itertools import product
from typing import NamedTuple

from .gf2h import Field

Vec = tuple[int, int, int]


class GeometryError(ValueError):
    pass


class AffLine(NamedTuple):
    base: Vec  # lexicographically least point of the line
    dir: Vec  # normalized point at infinity


class AffPlane(NamedTuple):
    base: Vec  # lexicographically least point of the plane
    infinite_line: tuple[Vec, ...]  # its q+1 directions, sorted


def vadd(u: Vec, v: Vec) -> Vec:
    return (u[0] ^ v[0], u[1] ^ v[1], u[2] ^ v[2])


def vscale(F: Field, c: int, v: Vec) -> Vec:
    return (F.mul(c, v[0]), F.mul(c, v[1]), F.mul(c, v[2]))


def dot(F: Field, u: Vec, v: Vec) -> int:
    return F.mul(u[0], v[0]) ^ F.mul(u[1], v[1]) ^ F.mul(u[2], v[2])


def cross(F: Field, u: Vec, v: Vec) -> Vec:
    # characteristic 2: no signs
    m = F.mul
    return (
        m(u[1], v[2]) ^ m(u[2], v[1]),
        m(u[2], v[0]) ^ m(u[0], v[2]),
        m(u[0], v[1]) ^ m(u[1], v[0]),
    )


def det3(F: Field, a: Vec, b: Vec, c: Vec) -> int:
    return dot(F, a, cross(F, b, c))


def leading_index(v: Vec) -> int:
    for i, x in enumerate(v):
        if x:
            return i
    raise GeometryError("the zero vector is not a projective point")


def proj_normalize(F: Field, v) -> Vec:
    v = tuple(F.check(x) for x in v)
    if len(v) != 3:
        raise GeometryError(f"expected 3 coordinates, got {len(v)}")
    i = leading_index(v)
    if v[i] == 1:
        return v
    return vscale(F, F.inv(v[i]), v)


def proj_points(F: Field) -> list[Vec]:
    """All q^2+q+1 points of PG(2, q), sorted."""
    q = F.q
    pts = [(0, 0, 1)]
    pts += [(0, 1, z) for z in range(q)]
    pts += [(1, y, z) for y in range(q) for z in range(q)]
    return pts


def proj_line_points(F: Field, p1: Vec, p2: Vec) -> tuple[Vec, ...]:
    p1, p2 = proj_normalize(F, p1), proj_normalize(F, p2)
    if p1 == p2:
        raise GeometryError("a projective line needs two distinct points")
    pts = {p1}
    for t in F.elements:
        pts.add(proj_normalize(F, vadd(vscale(F, t, p1), p2)))
    return tuple(sorted(pts))


def proj_line_from_normal(F: Field, n: Vec) -> tuple[Vec, ...]:
    return tuple(p for p in proj_points(F) if dot(F, n, p) == 0)


def proj_lines(F: Field) -> list[tuple[Vec, ...]]:
    """All q^2+q+1 lines of PG(2, q), each a sorted point tuple; list sorted."""
    return sorted(proj_line_from_normal(F, n) for n in proj_points(F))


def line_normal(F: Field, line: tuple[Vec, ...]) -> Vec:
    return proj_normalize(F, cross(F, line[0], line[1]))


def proj_intersection(F: Field, l1: tuple[Vec, ...], l2: tuple[Vec, ...]) -> Vec:
    c = cross(F, line_normal(F, l1), line_normal(F, l2))
    if c == (0, 0, 0):
        raise GeometryError("lines coincide")
    return proj_normalize(F, c)


def affine_points(F: Field) -> list[Vec]:
    return list(product(F.elements, repeat=3))


def line_points(F: Field, line: AffLine) -> list[Vec]:
    return [vadd(line.base, vscale(F, t, line.dir)) for t in F.elements]


def line_canonicalize(F: Field, p: Vec, d: Vec) -> AffLine:
    # Along d the coordinate at d's leading position runs through all of
    # GF(q), so the lexicographically least point is the one where it is 0.
    d = proj_normalize(F, d)
    i = leading_index(d)
    return AffLine(vadd(p, vscale(F, p[i], d)), d)


def lines_meet(F: Field, l1: AffLine, l2: AffLine) -> bool:
    if l1 == l2:
        raise GeometryError("lines_meet called with identical lines")
    if l1.dir == l2.dir:
        return False
    return det3(F, l1.dir, l2.dir, vadd(l1.base, l2.base)) == 0


def _plane_normal(F: Field, infinite_line: tuple[Vec, ...]) -> Vec:
    return line_normal(F, infinite_line)


def plane_points(F: Field, M: AffPlane) -> list[Vec]:
    n = _plane_normal(F, M.infinite_line)
    c = dot(F, n, M.base)
    return [p for p in affine_points(F) if dot(F, n, p) == c]


def plane_contains(F: Field, M: AffPlane, p: Vec) -> bool:
    n = _plane_normal(F, M.infinite_line)
    return dot(F, n, p) == dot(F, n, M.base)


def _plane_base(F: Field, n: Vec, c: int) -> Vec:
    # the plane is a graph over the two coordinates other than n's leading one
    i = leading_index(n)
    best = None
    for p in product(F.elements, repeat=2):
        rest = list(p)
        v = rest[:i] + [0] + rest[i:]
        s = dot(F, n, tuple(v)) ^ c
        v[i] = F.div(s, n[i])
        cand = tuple(v)
        if best is None or cand < best:
            best = cand
    return best


def planes_through_infinite_line(F: Field, kline) -> list[AffPlane]:
    """The q parallel planes whose line at infinity is ``kline``, sorted by base."""
    kline = tuple(sorted(proj_normalize(F, p) for p in kline))
    if len(kline) != F.q + 1:
        raise GeometryError("not a projective line")
    n = _plane_normal(F, kline)
    if any(dot(F, n, p) for p in kline):
        raise GeometryError("not a projective line")
    return sorted(AffPlane(_plane_base(F, n, c), kline) for c in F.elements)


def plane_lines_with_direction(F: Field, M: AffPlane, d: Vec) -> list[AffLine]:
    d = proj_normalize(F, d)
    if d not in M.infinite_line:
        raise GeometryError(f"direction {d} is not on the plane's line at infinity")
    i = leading_index(d)
    return sorted(
        AffLine(p, d) for p in plane_points(F, M) if p[i] == 0
    )


def line_in_plane(F: Field, line: AffLine, M: AffPlane) -> bool:
    return line.dir in M.infinite_line and plane_contains(F, M, line.base)
