"""Strong regularity, spectra, characteristic polynomials and geometricity."""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .cliques import count_cliques_through_edge, max_clique_through_edge, maximal_cliques
from .geometry import line_in_plane, plane_lines_with_direction
from .graphcore import Graph, mask_of
from .linrep import LineSet
from .switching import SwitchingConfig

DEFAULT_PRIMES = (2147483647, 2147483629, 2147483587)


class NotSrg(ValueError):
    """Raised by :func:`srg_check`; ``pair`` is the first offending vertex pair, if any."""

    def __init__(self, msg, pair=None):
        super().__init__(msg)
        self.pair = pair


class SpectrumError(ValueError):
    pass


@dataclass(frozen=True)
class SrgParams:
    v: int
    k: int
    lam: int
    mu: int

    def __post_init__(self):
        if self.k * (self.k - self.lam - 1) != (self.v - self.k - 1) * self.mu:
            raise ValueError(f"infeasible parameters {self.astuple()}: k(k-lambda-1) != (v-k-1)mu")

    def astuple(self):
        return (self.v, self.k, self.lam, self.mu)

    def to_json(self):
        return {"v": self.v, "k": self.k, "lambda": self.lam, "mu": self.mu}


@dataclass(frozen=True)
class Spectrum:
    k: int
    r: int
    s: int
    f: int
    g: int

    def to_json(self):
        return {
            "eigenvalues": [self.k, self.r, self.s],
            "multiplicities": [1, self.f, self.g],
        }


def corollary_params(h: int, m: int) -> SrgParams:
    """Parameters of the line graph of T*_2(K) for a Denniston arc of degree 2^m in PG(2, 2^h)."""
    q, a = 1 << h, 1 << m
    return SrgParams(q * q * (a * q + a - q), q * (q + 1) * (a - 1), q * (2 * a - 3), q * (a - 1))


def srg_check(G: Graph) -> SrgParams:
    """Exact parameters, from all common-neighbour counts at once (A^2)."""
    v = G.v
    degs = G.degrees()
    if v == 0 or all(d == 0 for d in degs):
        raise NotSrg("edgeless graph")
    if all(d == v - 1 for d in degs):
        raise NotSrg("complete graph")
    k = degs[0]
    for u, d in enumerate(degs):
        if d != k:
            raise NotSrg(f"vertex {u} has degree {d}, vertex 0 has {k}", (0, u))
    A = G.matrix().astype(np.float64)
    # entries of A^2 are at most v, exact in float64
    C = (A @ A).astype(np.int64)
    iu = np.triu_indices(v, 1)
    adj = A[iu] == 1
    cn = C[iu]
    lam_vals = cn[adj]
    mu_vals = cn[~adj]
    lam = int(lam_vals[0]) if lam_vals.size else 0
    mu = int(mu_vals[0]) if mu_vals.size else 0
    bad = (adj & (cn != lam)) | (~adj & (cn != mu))
    if bad.any():
        i = int(np.flatnonzero(bad)[0])
        pair = (int(iu[0][i]), int(iu[1][i]))
        kind = "adjacent" if adj[i] else "non-adjacent"
        raise NotSrg(
            f"{kind} pair {pair} has {int(cn[i])} common neighbours, expected {lam if adj[i] else mu}",
            pair,
        )
    return SrgParams(v, k, lam, mu)


def srg_to_geometry_params(s: int, t: int, alpha: int) -> SrgParams:
    """Point graph of a partial geometry pg(s, t, alpha)."""
    num = (s + 1) * (s * t + alpha)
    if alpha < 1 or num % alpha:
        raise ValueError(f"pg({s},{t},{alpha}) gives a non-integral vertex count")
    return SrgParams(num // alpha, s * (t + 1), s - 1 + t * (alpha - 1), alpha * (t + 1))


def srg_spectrum(p: SrgParams) -> Spectrum:
    delta = (p.lam - p.mu) ** 2 + 4 * (p.k - p.mu)
    root = math.isqrt(delta)
    if root * root != delta:
        raise SpectrumError(
            f"irrational restricted eigenvalues ({p.lam - p.mu} +- sqrt({delta}))/2 "
            "(conference graph)"
        )
    r = (p.lam - p.mu + root) // 2
    s = (p.lam - p.mu - root) // 2
    if r == s:
        raise SpectrumError("degenerate parameters: r = s")
    f = Fraction(-p.k - (p.v - 1) * s, r - s)
    g = p.v - 1 - f
    if f.denominator != 1 or f < 0 or g < 0:
        raise SpectrumError(f"non-integral multiplicities f={f}, g={g}")
    return Spectrum(p.k, r, s, int(f), int(g))


def is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # these bases are deterministic far beyond 64 bits
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _hessenberg_mod(A: np.ndarray, p: int) -> np.ndarray:
    H = np.array(A, dtype=np.int64) % p
    n = H.shape[0]
    for m in range(1, n - 1):
        nz = np.flatnonzero(H[m:, m - 1])
        if nz.size == 0:
            continue
        i = m + int(nz[0])
        if i != m:
            H[[i, m], :] = H[[m, i], :]
            H[:, [i, m]] = H[:, [m, i]]
        inv = pow(int(H[m, m - 1]), p - 2, p)
        u = H[m + 1:, m - 1] * inv % p
        if not u.any():
            continue
        # rows i > m: R_i -= u_i R_m ; then the inverse column operation
        H[m + 1:, :] = (H[m + 1:, :] - (u[:, None] * H[m, :][None, :]) % p) % p
        H[:, m] = (H[:, m] + ((H[:, m + 1:] * u[None, :]) % p).sum(axis=1)) % p
    return H


def _charpoly_hessenberg(H: np.ndarray, p: int) -> list[int]:
    n = H.shape[0]
    h = [[int(x) for x in row] for row in H]
    polys = [[1]]  # ascending coefficients
    for k in range(1, n + 1):
        prev = polys[k - 1]
        cur = [0] + prev  # x * p_{k-1}
        c = h[k - 1][k - 1]
        for j, a in enumerate(prev):
            cur[j] = (cur[j] - c * a) % p
        prod = 1
        for i in range(k - 1, 0, -1):
            prod = prod * h[i][i - 1] % p
            if prod == 0:
                break
            coef = h[i - 1][k - 1] * prod % p
            if coef:
                for j, a in enumerate(polys[i - 1]):
                    cur[j] = (cur[j] - coef * a) % p
        polys.append(cur)
    return polys[n][::-1]


def char_poly_mod(G: Graph, primes=DEFAULT_PRIMES) -> dict[int, list[int]]:
    """Characteristic polynomial of the adjacency matrix mod each prime.

    Coefficients run from the leading ``x^v`` term down to the constant.
    """
    out = {}
    for p in primes:
        if p % 2 == 0 or not is_probable_prime(p):
            raise ValueError(f"{p} is not an odd prime")
        if p <= G.v:
            raise ValueError(f"prime {p} must exceed the vertex count {G.v}")
        if p >= 1 << 31:
            raise ValueError(f"prime {p} exceeds 31 bits")
        out[p] = _charpoly_hessenberg(_hessenberg_mod(G.matrix(), p), p)
    return out


@dataclass
class GeometricityReport:
    t: int
    edges_checked: int
    failing_edges: list[tuple[int, int]]
    pencil_count: int
    clique_cap_histogram: dict[int, int] = field(default_factory=dict)

    @property
    def geometric(self) -> bool:
        return not self.failing_edges

    def to_json(self):
        return {
            "t": self.t,
            "geometric": self.geometric,
            "edges_checked": self.edges_checked,
            "failing_edges": [list(e) for e in self.failing_edges],
            "pencil_count": self.pencil_count,
            "clique_cap_histogram": {str(k): v for k, v in sorted(self.clique_cap_histogram.items())},
        }


def geometricity_report(G: Graph, t: int) -> GeometricityReport:
    """Which edges lie in no clique of size t+1."""
    if t < 1:
        raise ValueError("t must be at least 1")
    covered = [0] * G.v
    pencils = 0
    for C in maximal_cliques(G, min_size=t + 1):
        pencils += 1
        m = mask_of(C)
        for u in C:
            covered[u] |= m
    failing = []
    hist: Counter[int] = Counter()
    n = 0
    for u, w in G.edges():
        n += 1
        if covered[u] >> w & 1:
            hist[t + 1] += 1
        else:
            failing.append((u, w))
            hist[max_clique_through_edge(G, u, w, cap=t + 1)] += 1
    return GeometricityReport(t, n, failing, pencils, dict(hist))


def plane_line_ids(L: LineSet, M) -> list[int]:
    ids = []
    for d in L.dirs:
        if d in M.infinite_line:
            ids += [L.index(ln) for ln in plane_lines_with_direction(L.F, M, d)]
    return sorted(ids)


@dataclass
class Witness:
    R: tuple[int, int, int]
    L1: int
    L2: int
    checks: dict[str, bool]
    clique_bound_switched: int
    clique_size_original: int
    cliques_through_edge_original: int

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json(self, L: LineSet | None = None):
        out = {
            "R": list(self.R),
            "L1": self.L1,
            "L2": self.L2,
            "max_clique_switched": self.clique_bound_switched,
            "max_clique_original": self.clique_size_original,
            "max_cliques_original": self.cliques_through_edge_original,
            "checks": self.checks,
            "passed": self.passed,
        }
        if L is not None:
            for key in ("L1", "L2"):
                ln = L.line(out[key])
                out[key + "_line"] = {"base": list(ln.base), "dir": list(ln.dir)}
        return out


def proposition_witness(cfg: SwitchingConfig, L: LineSet, G: Graph, Gp: Graph) -> Witness:
    """Edge (L1, L2) through a point R of M1 that lies in a (t+1)-clique of G but not of Gp."""
    F, t = L.F, cfg.t
    R = cfg.M1.base
    L1, L2 = L.through(R, cfg.Q1), L.through(R, cfg.Q2)
    lines = (L.line(L1), L.line(L2))
    checks = {}
    checks["outside_M1_M2"] = not any(
        line_in_plane(F, ln, M) for ln in lines for M in (cfg.M1, cfg.M2)
    )
    checks["adjacent_in_both"] = G.has_edge(L1, L2) and Gp.has_edge(L1, L2)
    checks["neighbourhoods_unchanged"] = (
        G.rows[L1] == Gp.rows[L1] and G.rows[L2] == Gp.rows[L2]
    )
    m2 = mask_of(plane_line_ids(L, cfg.M2))
    checks["no_common_neighbour_in_M2"] = not (
        G.rows[L1] & G.rows[L2] & m2 or Gp.rows[L1] & Gp.rows[L2] & m2
    )
    bound = max_clique_through_edge(Gp, L1, L2, cap=t + 1) if checks["adjacent_in_both"] else 0
    checks["switched_clique_at_most_t"] = bound <= t
    size = max_clique_through_edge(G, L1, L2) if G.has_edge(L1, L2) else 0
    count = count_cliques_through_edge(G, L1, L2, t + 1) if size >= t + 1 else 0
    checks["original_clique_is_t_plus_1"] = size == t + 1
    checks["original_clique_unique"] = count == 1
    pencil = mask_of(L.pencil(R))
    checks["original_clique_is_pencil"] = (
        count == 1 and pencil & G.rows[L1] & G.rows[L2] == pencil & ~(1 << L1) & ~(1 << L2)
    )
    return Witness(R, L1, L2, checks, bound, size, count)
