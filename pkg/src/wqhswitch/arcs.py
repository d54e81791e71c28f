"""Denniston maximal arcs in PG(2, 2^h) and arc input files."""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from .gf2h import Field, FieldError, find_irreducible_lambda
from .geometry import GeometryError, Vec, proj_lines, proj_normalize

log = logging.getLogger(__name__)


class ArcError(ValueError):
    pass


@dataclass(frozen=True)
class Arc:
    points: tuple[Vec, ...]
    q: int
    declared_degree: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "_pset", frozenset(self.points))
        if len(set(self.points)) != len(self.points):
            raise ArcError("arc points must be distinct")
        if list(self.points) != sorted(self.points):
            raise ArcError("arc points must be sorted")
        if self.declared_degree is not None:
            h = self.q.bit_length() - 1
            expect = (self.q + 1) * (self.declared_degree - 1) + 1
            if len(self.points) != expect:
                raise ArcError(
                    f"degree-{self.declared_degree} maximal arc in PG(2,2^{h}) "
                    f"has {expect} points, got {len(self.points)}"
                )

    def __len__(self):
        return len(self.points)

    def __contains__(self, p):
        return p in self._pset

    def __iter__(self):
        return iter(self.points)

    def index(self, p: Vec) -> int:
        return self.points.index(p)


@dataclass
class IntersectionProfile:
    histogram: dict[int, int]
    secants: list[tuple[Vec, ...]] = field(default_factory=list)
    passed: bool = True
    offending_line: tuple[Vec, ...] | None = None

    def to_json(self):
        return {
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "secants": len(self.secants),
            "passed": self.passed,
        }


def quadratic_form(F: Field, lam: int, x: int, y: int) -> int:
    return F.mul(x, x) ^ F.mul(lam, F.mul(x, y)) ^ F.mul(y, y)


def additive_subgroup(basis) -> frozenset[int]:
    span = {0}
    for b in basis:
        span |= {a ^ b for a in span}
    return frozenset(span)


def denniston_arc(F: Field, m: int, basis=None) -> Arc:
    """Points (x : y : 1) with x^2 + lam*x*y + y^2 in an additive subgroup of order 2^m.

    The subgroup defaults to the span of 1, x, ..., x^(m-1).  ``basis`` may
    name m other GF(2)-independent elements.
    """
    if not 0 < m < F.h:
        raise ArcError(f"Denniston arcs need 0 < m < h, got m={m}, h={F.h}")
    if basis is None:
        basis = [1 << i for i in range(m)]
    basis = [F.check(b) for b in basis]
    group = additive_subgroup(basis)
    if len(basis) != m or len(group) != 1 << m:
        raise ArcError(f"basis {basis} does not span a subgroup of order 2^{m}")
    lam = find_irreducible_lambda(F)
    pts = sorted(
        proj_normalize(F, (x, y, 1))
        for x in F.elements
        for y in F.elements
        if quadratic_form(F, lam, x, y) in group
    )
    return Arc(tuple(pts), F.q, declared_degree=1 << m)


def intersection_profile(F: Field, K: Arc, degree: int | None = None) -> IntersectionProfile:
    hist: Counter[int] = Counter()
    prof = IntersectionProfile({})
    for line in proj_lines(F):
        k = sum(1 for p in line if p in K)
        hist[k] += 1
        if k >= 2:
            prof.secants.append(line)
        if degree is not None and prof.passed and k not in (0, degree):
            prof.passed = False
            prof.offending_line = line
    prof.histogram = dict(sorted(hist.items()))
    return prof


def verify_maximal_arc(F: Field, K: Arc, degree: int) -> IntersectionProfile:
    """Profile of K against every line; passes iff all sizes are 0 or ``degree``."""
    if degree < 1 or degree & (degree - 1):
        raise ArcError(f"degree must be a power of two, got {degree}")
    return intersection_profile(F, K, degree)


def load_arc(path, F: Field) -> Arc:
    """Read one projective point per line, three ints each; '#' starts a comment."""
    pts = []
    seen = set()
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        fields = text.split()
        if len(fields) != 3:
            raise ArcError(f"{path}:{lineno}: expected 3 integers, got {text!r}")
        try:
            p = proj_normalize(F, [int(x) for x in fields])
        except ValueError as exc:
            # FieldError and GeometryError land here, as do non-integers
            if not isinstance(exc, (FieldError, GeometryError)):
                exc = ArcError(f"not an integer in {text!r}")
            raise ArcError(f"{path}:{lineno}: {exc}") from None
        if p in seen:
            log.warning("%s:%d: duplicate point %s ignored", path, lineno, p)
            continue
        seen.add(p)
        pts.append(p)
    if not pts:
        raise ArcError(f"{path}: no points")
    return Arc(tuple(sorted(pts)), F.q)
