import random
from itertools import product

import pytest

from wqhswitch.geometry import (
    AffLine,
    GeometryError,
    affine_points,
    line_canonicalize,
    line_in_plane,
    line_points,
    lines_meet,
    plane_lines_with_direction,
    plane_points,
    planes_through_infinite_line,
    proj_line_points,
    proj_lines,
    proj_normalize,
    proj_points,
)
from wqhswitch.gf2h import Field


@pytest.fixture(scope="module", params=[1, 2, 3])
def F(request):
    return Field(request.param)


def test_proj_normalize_examples():
    F4, F8 = Field(2), Field(3)
    assert F4.inv(2) == 3 and F4.mul(3, 3) == 2
    assert proj_normalize(F4, (0, 2, 3)) == (0, 1, 2)
    assert proj_normalize(F4, (1, 0, 0)) == (1, 0, 0)
    assert proj_normalize(F8, (0, 0, 5)) == (0, 0, 1)


def test_proj_normalize_errors():
    F = Field(2)
    with pytest.raises(GeometryError):
        proj_normalize(F, (0, 0, 0))
    with pytest.raises(ValueError):
        proj_normalize(F, (4, 0, 1))


def test_proj_normalize_idempotent(F):
    for v in product(F.elements, repeat=3):
        if any(v):
            p = proj_normalize(F, v)
            assert proj_normalize(F, p) == p
            assert p[next(i for i, x in enumerate(p) if x)] == 1


def test_proj_point_count(F):
    pts = proj_points(F)
    q = F.q
    assert len(pts) == len(set(pts)) == q * q + q + 1
    assert pts == sorted(pts)


def test_proj_line_points_smallest_case():
    F = Field(1)
    assert proj_line_points(F, (1, 0, 0), (0, 1, 0)) == ((0, 1, 0), (1, 0, 0), (1, 1, 0))


def test_proj_line_points(F):
    rng = random.Random(1)
    pts = proj_points(F)
    for _ in range(20):
        a, b = rng.sample(pts, 2)
        line = proj_line_points(F, a, b)
        assert len(line) == F.q + 1
        assert a in line and b in line
        # closed under the span of any two members
        c, d = rng.sample(line, 2)
        assert proj_line_points(F, c, d) == line
    with pytest.raises(GeometryError):
        proj_line_points(F, pts[0], pts[0])


def test_proj_lines_form_a_plane(F):
    lines = proj_lines(F)
    q = F.q
    assert len(lines) == q * q + q + 1
    # two points on exactly one line
    pts = proj_points(F)
    for a, b in random.Random(2).sample([(a, b) for a in pts for b in pts if a < b], 10):
        assert sum(1 for ln in lines if a in ln and b in ln) == 1


def brute_canonical(F, p, d):
    return min(line_points(F, AffLine(p, d)))


def test_line_canonicalize_examples():
    F2, F4 = Field(1), Field(2)
    assert line_canonicalize(F2, (1, 0, 0), (1, 0, 0)) == AffLine((0, 0, 0), (1, 0, 0))
    assert line_canonicalize(F4, (3, 1, 2), (1, 0, 0)).base == (0, 1, 2)


def test_line_canonicalize_is_least_point(F):
    rng = random.Random(3)
    dirs = proj_points(F)
    for _ in range(100):
        p = tuple(rng.randrange(F.q) for _ in range(3))
        d = rng.choice(dirs)
        ln = line_canonicalize(F, p, d)
        assert ln.base == brute_canonical(F, p, d)
        assert line_canonicalize(F, ln.base, ln.dir) == ln
        assert p in line_points(F, ln)


def test_lines_meet_examples():
    F = Field(2)
    o = (0, 0, 0)
    assert lines_meet(F, AffLine(o, (1, 0, 0)), AffLine(o, (0, 1, 0)))
    assert not lines_meet(F, AffLine(o, (1, 0, 0)), AffLine((0, 0, 1), (0, 1, 0)))
    assert not lines_meet(F, AffLine(o, (1, 0, 0)), AffLine((0, 1, 0), (1, 0, 0)))
    with pytest.raises(GeometryError):
        lines_meet(F, AffLine(o, (1, 0, 0)), AffLine(o, (1, 0, 0)))


def test_lines_meet_matches_point_sets(F):
    rng = random.Random(4)
    dirs = proj_points(F)
    for _ in range(300):
        a = line_canonicalize(F, tuple(rng.randrange(F.q) for _ in range(3)), rng.choice(dirs))
        b = line_canonicalize(F, tuple(rng.randrange(F.q) for _ in range(3)), rng.choice(dirs))
        if a == b:
            continue
        common = set(line_points(F, a)) & set(line_points(F, b))
        assert len(common) <= 1
        assert lines_meet(F, a, b) == (len(common) == 1)


def test_planes_through_infinite_line(F):
    rng = random.Random(5)
    lines = proj_lines(F)
    for kline in rng.sample(lines, min(4, len(lines))):
        planes = planes_through_infinite_line(F, kline)
        assert len(planes) == F.q
        assert planes == sorted(planes)
        seen = set()
        for M in planes:
            pts = plane_points(F, M)
            assert len(pts) == F.q ** 2
            assert M.base == min(pts)
            assert seen.isdisjoint(pts)
            seen.update(pts)
        assert seen == set(affine_points(F))


def test_planes_counts_examples():
    kline = proj_line_points(Field(1), (0, 1, 0), (0, 0, 1))
    assert len(planes_through_infinite_line(Field(1), kline)) == 2
    F4 = Field(2)
    planes = planes_through_infinite_line(F4, proj_line_points(F4, (0, 1, 0), (0, 0, 1)))
    assert [len(plane_points(F4, M)) for M in planes] == [16] * 4


def test_plane_lines_with_direction(F):
    kline = proj_lines(F)[-1]
    M = planes_through_infinite_line(F, kline)[-1]
    for d in kline:
        lines = plane_lines_with_direction(F, M, d)
        assert len(lines) == F.q
        covered = [p for ln in lines for p in line_points(F, ln)]
        assert sorted(covered) == sorted(plane_points(F, M))
        for a in lines:
            assert line_canonicalize(F, a.base, a.dir) == a
            for b in lines:
                if a != b:
                    assert not lines_meet(F, a, b)
    off = next(p for p in proj_points(F) if p not in kline)
    with pytest.raises(GeometryError):
        plane_lines_with_direction(F, M, off)


def test_line_plane_intersections(F):
    rng = random.Random(6)
    lines = proj_lines(F)
    dirs = proj_points(F)
    for _ in range(50):
        M = rng.choice(planes_through_infinite_line(F, rng.choice(lines)))
        pts = set(plane_points(F, M))
        ln = line_canonicalize(F, tuple(rng.randrange(F.q) for _ in range(3)), rng.choice(dirs))
        k = len(pts.intersection(line_points(F, ln)))
        if ln.dir in M.infinite_line:
            assert k in (0, F.q)
            assert line_in_plane(F, ln, M) == (k == F.q)
        else:
            assert k == 1


def test_one_line_per_direction_through_a_point(F):
    p = (F.q - 1, 0, F.q - 1)
    dirs = proj_points(F)
    lines = {line_canonicalize(F, p, d) for d in dirs}
    assert len(lines) == len(dirs) == F.q ** 2 + F.q + 1
