"""WQH switching along a pair of parallel classes in two planes through a secant.

Given a secant line ``kline`` of K at infinity, a point P of K on it, and two
affine planes M1, M2 with line at infinity ``kline``, C_i is the set of lines
of direction P inside M_i.  A vertex outside C1 u C2 whose neighbourhood in
C1 u C2 is exactly C1 or exactly C2 gets that neighbourhood complemented.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations

from .arcs import Arc
from .geometry import (
    AffPlane,
    Vec,
    plane_lines_with_direction,
    planes_through_infinite_line,
    proj_intersection,
    proj_line_points,
    proj_lines,
)
from .gf2h import Field
from .graphcore import Graph, bits, mask_of
from .linrep import LineSet

log = logging.getLogger(__name__)


class SwitchingError(ValueError):
    pass


class NoSecant(SwitchingError):
    pass


class NoValidPair(SwitchingError):
    pass


class ThresholdFail(SwitchingError):
    pass


class HypothesesNotVerified(SwitchingError):
    pass


@dataclass(frozen=True)
class SwitchingConfig:
    kline: tuple[Vec, ...]
    P: Vec
    Q1: Vec
    Q2: Vec
    M1: AffPlane
    M2: AffPlane
    t: int
    alpha: int
    q: int
    secant_index: int = 0
    plane_indices: tuple[int, int] = (0, 1)

    def to_json(self):
        return {
            "kline": [list(p) for p in self.kline],
            "secant_index": self.secant_index,
            "P": list(self.P),
            "Q1": list(self.Q1),
            "Q2": list(self.Q2),
            "M1": {"base": list(self.M1.base), "index": self.plane_indices[0]},
            "M2": {"base": list(self.M2.base), "index": self.plane_indices[1]},
            "t": self.t,
            "alpha": self.alpha,
            "q": self.q,
            "convention": "s = q - 1, t + 1 = |K| (lines per affine point)",
        }


@dataclass(frozen=True)
class PartitionSpec:
    C1: tuple[int, ...]
    C2: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "C1", tuple(sorted(self.C1)))
        object.__setattr__(self, "C2", tuple(sorted(self.C2)))
        if set(self.C1) & set(self.C2):
            raise SwitchingError("C1 and C2 intersect")

    @property
    def mask(self) -> int:
        return mask_of(self.C1) | mask_of(self.C2)

    def normalized(self) -> PartitionSpec:
        """Same partition with the class holding the smaller vertex first."""
        if self.C1 and self.C2 and self.C2[0] < self.C1[0]:
            return PartitionSpec(self.C2, self.C1)
        return self


@dataclass
class WQHReport:
    passed: bool
    checks: dict[str, bool]
    violations: list[tuple[str, int | None]] = field(default_factory=list)
    switched: list[int] = field(default_factory=list)

    def to_json(self):
        return {
            "passed": self.passed,
            "checks": self.checks,
            "violations": [list(v) for v in self.violations],
            "switched": self.switched,
        }


def geometric_alpha(F: Field, K: Arc) -> int:
    """Largest secant size minus one."""
    return max(sum(1 for p in line if p in K) for line in proj_lines(F)) - 1


def secants(F: Field, K: Arc) -> list[tuple[Vec, ...]]:
    return [line for line in proj_lines(F) if sum(1 for p in line if p in K) >= 2]


def _valid_pairs(F: Field, K: Arc, kline) -> list[tuple[Vec, Vec]]:
    off = [p for p in K if p not in kline]
    pairs = []
    for a, b in combinations(off, 2):
        meet = proj_intersection(F, proj_line_points(F, a, b), kline)
        if meet not in K:
            pairs.append((a, b))
    return pairs


def find_switching_config(
    F: Field,
    K: Arc,
    alpha: int | None = None,
    secant: int | None = None,
    p_index: int | None = None,
    qpair: tuple[int, int] | None = None,
    planes: tuple[int, int] = (0, 1),
) -> SwitchingConfig:
    """Least-index configuration, or the one picked by explicit indices.

    ``secant`` indexes the sorted secant list, ``p_index`` the points of K on
    the secant, ``qpair`` the sorted points of K, ``planes`` the sorted planes
    through the secant.
    """
    q = F.q
    t = len(K) - 1
    secs = secants(F, K)
    if not secs:
        raise NoSecant("no projective line meets K in two or more points")
    geo_alpha = geometric_alpha(F, K)
    if alpha is None:
        alpha = geo_alpha
    elif alpha != geo_alpha:
        log.warning("supplied alpha=%d differs from the arc's geometric alpha=%d", alpha, geo_alpha)
    if alpha < 1:
        raise SwitchingError(f"alpha must be >= 1, got {alpha}")
    if t <= q * (alpha - 1):
        raise ThresholdFail(f"t={t} <= q(alpha-1)={q * (alpha - 1)}")

    if secant is not None:
        if not 0 <= secant < len(secs):
            raise SwitchingError(f"secant index {secant} out of range 0..{len(secs) - 1}")
        candidates = [secant]
    else:
        candidates = range(len(secs))

    for si in candidates:
        kline = secs[si]
        pairs = _valid_pairs(F, K, kline)
        if qpair is not None:
            Q1, Q2 = sorted((K.points[qpair[0]], K.points[qpair[1]]))
            if (Q1, Q2) not in pairs:
                if secant is not None:
                    raise NoValidPair(f"points {qpair} are not a valid pair for secant {si}")
                continue
        elif pairs:
            Q1, Q2 = pairs[0]
        else:
            continue
        on = [p for p in kline if p in K]
        pi = 0 if p_index is None else p_index
        if not 0 <= pi < len(on):
            raise SwitchingError(f"P index {pi} out of range 0..{len(on) - 1}")
        planes_all = planes_through_infinite_line(F, kline)
        i1, i2 = planes
        if i1 == i2 or not (0 <= i1 < q and 0 <= i2 < q):
            raise SwitchingError(f"plane indices must be distinct in 0..{q - 1}, got {planes}")
        cfg = SwitchingConfig(
            kline=kline, P=on[pi], Q1=Q1, Q2=Q2,
            M1=planes_all[i1], M2=planes_all[i2],
            t=t, alpha=alpha, q=q, secant_index=si, plane_indices=(i1, i2),
        )
        check_config(F, K, cfg)
        return cfg
    raise NoValidPair("no secant admits Q1, Q2 whose joining line meets it outside K")


def check_config(F: Field, K: Arc, cfg: SwitchingConfig) -> None:
    on = [p for p in cfg.kline if p in K]
    problems = []
    if len(on) < 2:
        problems.append("secant meets K in fewer than 2 points")
    if cfg.P not in on:
        problems.append("P is not a point of K on the secant")
    for Q in (cfg.Q1, cfg.Q2):
        if Q not in K or Q in cfg.kline:
            problems.append(f"{Q} is not a point of K off the secant")
    if cfg.Q1 == cfg.Q2:
        problems.append("Q1 = Q2")
    elif proj_intersection(F, proj_line_points(F, cfg.Q1, cfg.Q2), cfg.kline) in K:
        problems.append("<Q1, Q2> meets the secant inside K")
    if cfg.t <= cfg.q * (cfg.alpha - 1):
        problems.append("t <= q(alpha-1)")
    if cfg.M1 == cfg.M2 or cfg.M1.infinite_line != cfg.kline or cfg.M2.infinite_line != cfg.kline:
        problems.append("M1, M2 are not distinct planes through the secant")
    if problems:
        raise SwitchingError("; ".join(problems))


def build_partition(cfg: SwitchingConfig, L: LineSet) -> PartitionSpec:
    return PartitionSpec(
        tuple(L.index(ln) for ln in plane_lines_with_direction(L.F, cfg.M1, cfg.P)),
        tuple(L.index(ln) for ln in plane_lines_with_direction(L.F, cfg.M2, cfg.P)),
    )


def _induced_degrees(G: Graph, vs, mask: int) -> set[int]:
    return {(G.rows[u] & mask).bit_count() for u in vs}


def verify_wqh_hypotheses(G: Graph, ps: PartitionSpec) -> WQHReport:
    """Check every condition of the switching lemma; list all offending vertices."""
    checks: dict[str, bool] = {}
    violations: list[tuple[str, int | None]] = []
    members = ps.C1 + ps.C2
    checks["in_range"] = all(0 <= u < G.v for u in members)
    if not checks["in_range"]:
        violations += [("out_of_range", u) for u in members if not 0 <= u < G.v]
        return WQHReport(False, checks, violations)

    m1, m2 = mask_of(ps.C1), mask_of(ps.C2)
    both = m1 | m2
    d1 = _induced_degrees(G, ps.C1, m1)
    d2 = _induced_degrees(G, ps.C2, m2)
    d12 = _induced_degrees(G, members, both)
    checks["C1_regular"] = len(d1) <= 1
    checks["C2_regular"] = len(d2) <= 1
    checks["C1uC2_regular"] = len(d12) <= 1
    checks["equal_size"] = len(ps.C1) == len(ps.C2) > 0
    checks["equal_degree"] = checks["C1_regular"] and checks["C2_regular"] and d1 == d2
    for name in ("C1_regular", "C2_regular", "C1uC2_regular", "equal_size", "equal_degree"):
        if not checks[name]:
            violations.append((name, None))

    switched = []
    balanced = True
    for x in range(G.v):
        if both >> x & 1:
            continue
        r = G.rows[x]
        n1, n2 = (r & m1).bit_count(), (r & m2).bit_count()
        if n1 == n2:
            continue
        hit = r & both
        if hit == m1 or hit == m2:
            switched.append(x)
        else:
            balanced = False
            violations.append(("unbalanced", x))
    checks["D_condition"] = balanced
    passed = all(checks.values())
    return WQHReport(passed, checks, violations, switched)


def apply_switch(G: Graph, ps: PartitionSpec) -> Graph:
    """Complement the adjacency between C1 u C2 and each vertex that sees exactly C1 or C2."""
    report = verify_wqh_hypotheses(G, ps)
    if not report.passed:
        raise HypothesesNotVerified(
            "partition fails the switching hypotheses: "
            + ", ".join(f"{k}" for k, ok in report.checks.items() if not ok)
        )
    both = ps.mask
    xmask = mask_of(report.switched)
    rows = list(G.rows)
    for x in report.switched:
        rows[x] ^= both
    for c in bits(both):
        rows[c] ^= xmask
    return Graph(G.v, rows, check=False)
