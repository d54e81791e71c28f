"""Command-line entry point: ``wqhswitch <command> [options]``."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import analysis, arcs, switching
from .explore import explore as run_explore
from .gf2h import Field
from .graphcore import Graph, GraphError, graph6_encode, read_graph6
from .linrep import build_line_graph, build_line_set

log = logging.getLogger("wqhswitch")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class Context:
    """Field, arc, line set and graph for one run, built lazily."""

    def __init__(self, args):
        self.args = args
        self.F = Field(args.h)
        if args.arc:
            self.K = arcs.load_arc(args.arc, self.F)
            self.m = None
        else:
            self.K = arcs.denniston_arc(self.F, args.m, basis=args.basis)
            self.m = args.m
        self.L = build_line_set(self.F, self.K)
        self.G = build_line_graph(self.L)
        self.t = len(self.K) - 1
        self._cfg = None

    @property
    def alpha(self):
        if self.args.alpha is not None:
            return self.args.alpha
        if self.m is not None:
            return (1 << self.m) - 1
        return None

    def config(self) -> switching.SwitchingConfig:
        if self._cfg is None:
            a = self.args
            self._cfg = switching.find_switching_config(
                self.F, self.K, self.alpha,
                secant=a.secant, p_index=a.p, qpair=tuple(a.qpair) if a.qpair else None,
                planes=tuple(a.pplane) if a.pplane else (0, 1),
            )
        return self._cfg

    def partition(self):
        return switching.build_partition(self.config(), self.L)

    def header(self) -> dict:
        out = {"field": {"h": self.F.h, "q": self.F.q, "modulus": self.F.modulus}}
        arc = {"size": len(self.K), "points": [list(p) for p in self.K]}
        if self.m is not None:
            arc["type"] = "denniston"
            arc["m"] = self.m
            arc["lambda"] = arcs.find_irreducible_lambda(self.F)
            prof = arcs.verify_maximal_arc(self.F, self.K, 1 << self.m)
        else:
            arc["type"] = "file"
            arc["path"] = str(self.args.arc)
            prof = arcs.intersection_profile(self.F, self.K)
        arc["profile"] = prof.to_json()
        out["arc"] = arc
        out["t"] = self.t
        return out


def _params_json(G: Graph):
    try:
        return analysis.srg_check(G).to_json()
    except analysis.NotSrg as exc:
        return {"error": str(exc), "pair": list(exc.pair) if exc.pair else None}


def _spectrum_json(G: Graph):
    try:
        return analysis.srg_spectrum(analysis.srg_check(G)).to_json()
    except (analysis.NotSrg, analysis.SpectrumError) as exc:
        return {"error": str(exc)}


def _emit(args, graphs: dict[str, Graph], report: dict, report_name="report.json") -> None:
    text = json.dumps(report, indent=2, sort_keys=False) + "\n"
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for name, G in graphs.items():
            (out / f"{name}.g6").write_bytes(graph6_encode(G) + b"\n")
        (out / report_name).write_text(text)
    elif graphs:
        for G in graphs.values():
            sys.stdout.buffer.write(graph6_encode(G) + b"\n")
        sys.stdout.flush()
        sys.stderr.write(text)
    else:
        sys.stdout.write(text)


def cmd_build(args) -> int:
    ctx = Context(args)
    rep = ctx.header()
    rep["vertices"] = ctx.G.v
    rep["degree"] = ctx.G.degree(0)
    rep["params"] = _params_json(ctx.G)
    ok = ctx.G.is_regular() and ctx.G.degree(0) == ctx.F.q * (len(ctx.K) - 1)
    if ctx.m is not None:
        expect = analysis.corollary_params(args.h, ctx.m).to_json()
        rep["expected_params"] = expect
        ok = ok and rep["params"] == expect and rep["arc"]["profile"]["passed"]
    if args.export:
        rep["lines"] = ctx.L.to_json()
    _emit(args, {"gamma": ctx.G}, rep)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_switch(args) -> int:
    ctx = Context(args)
    cfg = ctx.config()
    ps = ctx.partition()
    hyp = switching.verify_wqh_hypotheses(ctx.G, ps)
    rep = ctx.header()
    rep["config"] = cfg.to_json()
    rep["partition"] = {"C1": list(ps.C1), "C2": list(ps.C2)}
    rep["hypotheses"] = hyp.to_json()
    if not hyp.passed:
        _emit(args, {}, rep)
        return EXIT_FAIL
    Gp = switching.apply_switch(ctx.G, ps)
    rep["flipped_pairs"] = sum((a ^ b).bit_count() for a, b in zip(ctx.G.rows, Gp.rows)) // 2
    rep["params"] = _params_json(Gp)
    rep["params_original"] = _params_json(ctx.G)
    rep["connected"] = Gp.is_connected()
    ok = rep["params"] == rep["params_original"] and "error" not in rep["params"] and rep["connected"]
    _emit(args, {"gamma_prime": Gp}, rep)
    return EXIT_OK if ok else EXIT_FAIL


def _geometry_given(args) -> bool:
    return args.h is not None and (args.m is not None or args.arc is not None)


def cmd_verify(args) -> int:
    if not args.input:
        raise UsageError("verify needs --in FILE")
    graphs = read_graph6(args.input)
    ctx = Context(args) if _geometry_given(args) else None
    t = args.t if args.t is not None else (ctx.t if ctx else None)
    if t is None:
        raise UsageError("verify needs --t, or --h with --m/--arc to derive it")
    results = []
    ok = True
    for G in graphs:
        res = {"vertices": G.v, "params": _params_json(G), "spectrum": _spectrum_json(G)}
        res["connected"] = G.is_connected()
        geo = analysis.geometricity_report(G, t)
        res.update(geo.to_json())
        ok = ok and "error" not in res["params"]
        if ctx is not None:
            hyp = switching.verify_wqh_hypotheses(G, ctx.partition())
            res["hypotheses"] = hyp.to_json()
            res["config"] = ctx.config().to_json()
            ok = ok and hyp.passed
        results.append(res)
    rep = results[0] if len(results) == 1 else {"graphs": results}
    _emit(args, {}, rep)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_witness(args) -> int:
    ctx = Context(args)
    cfg = ctx.config()
    Gp = switching.apply_switch(ctx.G, ctx.partition())
    w = analysis.proposition_witness(cfg, ctx.L, ctx.G, Gp)
    rep = ctx.header()
    rep["config"] = cfg.to_json()
    rep["witness"] = w.to_json(ctx.L)
    _emit(args, {}, rep)
    return EXIT_OK if w.passed else EXIT_FAIL


def _primes(args):
    if not args.primes:
        return analysis.DEFAULT_PRIMES
    try:
        return tuple(int(p) for p in args.primes.split(","))
    except ValueError:
        raise UsageError(f"--primes expects comma-separated integers, got {args.primes!r}") from None


def cmd_spectrum(args) -> int:
    primes = _primes(args)
    if args.input:
        graphs = read_graph6(args.input)
        names = [f"graph{i}" for i in range(len(graphs))]
        rep = {}
    else:
        ctx = Context(args)
        Gp = switching.apply_switch(ctx.G, ctx.partition())
        graphs, names = [ctx.G, Gp], ["gamma", "gamma_prime"]
        rep = ctx.header()
        rep["config"] = ctx.config().to_json()
    polys = []
    for name, G in zip(names, graphs):
        try:
            cp = analysis.char_poly_mod(G, primes)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        polys.append(cp)
        rep[name] = {
            "params": _params_json(G),
            "spectrum": _spectrum_json(G),
            "connected": G.is_connected(),
            "charpoly_mod": {str(p): c for p, c in cp.items()},
        }
    rep["cospectral_mod_primes"] = all(cp == polys[0] for cp in polys)
    _emit(args, {}, rep)
    return EXIT_OK if rep["cospectral_mod_primes"] else EXIT_FAIL


def cmd_explore(args) -> int:
    if args.input:
        G = read_graph6(args.input)[0]
        if args.t is None or args.c is None:
            raise UsageError("explore --in needs --t and --c")
        t, c = args.t, args.c
    else:
        ctx = Context(args)
        G, t = ctx.G, ctx.t
        c = args.c if args.c is not None else ctx.F.q
    census = run_explore(G, t, args.depth, args.limit, c, seed=args.seed)
    if args.out:
        census.dump(args.out)
    else:
        sys.stdout.write(json.dumps(census.to_json(), indent=2) + "\n")
    return EXIT_OK


def cmd_export(args) -> int:
    ctx = Context(args)
    rep = ctx.header()
    rep["lines"] = ctx.L.to_json()
    _emit(args, {}, rep, report_name="lines.json")
    return EXIT_OK


COMMANDS = {
    "build": cmd_build,
    "switch": cmd_switch,
    "verify": cmd_verify,
    "witness": cmd_witness,
    "spectrum": cmd_spectrum,
    "explore": cmd_explore,
    "export": cmd_export,
}


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="wqhswitch",
        description="Line graphs of T*_2(K) for Denniston arcs, WQH switching and checks.",
    )
    p.add_argument("command", choices=sorted(COMMANDS))
    g = p.add_argument_group("geometry")
    g.add_argument("--h", type=int, help="field GF(2^h)")
    g.add_argument("--m", type=int, help="Denniston arc of degree 2^m")
    g.add_argument("--basis", type=lambda s: [int(x) for x in s.split(",")],
                   help="comma-separated basis of the additive subgroup (default 1,2,..,2^(m-1))")
    g.add_argument("--arc", help="arc file: one projective point per line")
    g.add_argument("--alpha", type=int, help="alpha for the threshold t > q(alpha-1)")
    s = p.add_argument_group("switching choices")
    s.add_argument("--secant", type=int, help="index into the sorted secant lines")
    s.add_argument("--p", type=int, help="index of P among the arc points on the secant")
    s.add_argument("--qpair", type=int, nargs=2, metavar=("I", "J"), help="arc point indices of Q1, Q2")
    s.add_argument("--pplane", type=int, nargs=2, metavar=("I", "J"), help="indices of planes M1, M2")
    o = p.add_argument_group("other")
    o.add_argument("--in", dest="input", help="graph6 input file")
    o.add_argument("--t", type=int, help="lines per point minus one")
    o.add_argument("--out", help="output directory (default: stdout)")
    o.add_argument("--primes", help="comma-separated primes for char_poly_mod")
    o.add_argument("--seed", type=int, default=0)
    o.add_argument("--depth", type=int, default=1)
    o.add_argument("--limit", type=int, default=1000, help="partitions tried per graph in explore")
    o.add_argument("--c", type=int, help="class size for explore (default q)")
    o.add_argument("--export", action="store_true", help="include the vertex-line table in build reports")
    o.add_argument("-v", "--verbose", action="store_true")
    return p


def _validate(parser, args) -> None:
    needs_geometry = args.command in ("build", "switch", "witness", "export") or (
        args.command in ("spectrum", "explore") and not args.input
    )
    if args.arc and args.m is not None:
        parser.error("--arc and --m are mutually exclusive")
    if args.h is not None and not 1 <= args.h <= 16:
        parser.error("--h must be in 1..16")
    if args.m is not None:
        if args.h is None:
            parser.error("--m needs --h")
        if not 0 < args.m < args.h:
            parser.error(f"Denniston arcs need 0 < m < h (got h={args.h}, m={args.m})")
    if needs_geometry and not _geometry_given(args):
        parser.error(f"{args.command} needs --h together with --m or --arc")
    if args.depth < 0:
        parser.error("--depth must be non-negative")


def run(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        _validate(parser, args)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"wqhswitch: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (arcs.ArcError, GraphError, OSError) as exc:
        print(f"wqhswitch: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except switching.SwitchingError as exc:
        print(f"wqhswitch: switching failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


def main():
    sys.exit(run())
