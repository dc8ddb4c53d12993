"""Command-line interface.

Every subcommand prints a JSON report on stdout and a one-line summary on
stderr.  Exit status: 0 when everything checked out, 1 when an exact check
contradicted a theorem, 2 for bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import arrangements as arrg
from . import elliptic, secant
from .curvefit import PointSet, cayley_bacharach, conditions_failure
from .errors import CurveCountError, InputError, SyzygyError, TheoremViolation
from .projgeom import PARABOLA, ProjLine, ProjPoint, conic_point, dual_conic, dual_line, meet
from .render import Viewport, render_scene
from .witnesses import WITNESSES, cubic_partition_instance

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

DEFAULT_TRIALS = 50
SEED_ENV = "SYZYGY_SEED"


class UsageError(Exception):
    pass


@dataclass
class RunReport:
    command: str
    seed: int | None = None
    trials: int | None = None
    results: list[dict] = field(default_factory=list)
    extra: dict = field(default_factory=dict)
    wall_time: float | None = None

    @property
    def verdict(self) -> str:
        if any(r.get("verdict") == arrg.VIOLATED for r in self.results):
            return arrg.VIOLATED
        return arrg.CONFIRMED

    def to_json(self, timing: bool = False) -> dict:
        out: dict = {"command": self.command}
        if self.seed is not None:
            out["seed"] = self.seed
        if self.trials is not None:
            out["trials"] = self.trials
        out.update(self.extra)
        if self.results:
            out["results"] = self.results
        out["verdict"] = self.verdict
        if timing and self.wall_time is not None:
            out["wall_time"] = round(self.wall_time, 3)
        return out


def _trial(index: int, fn: Callable[[], dict]) -> dict:
    """Run one check; theorem contradictions become a ``violated`` verdict."""
    try:
        body = fn()
    except (TheoremViolation, CurveCountError) as exc:
        return {"trial": index, "verdict": arrg.VIOLATED, "error": str(exc)}
    return {"trial": index, "verdict": body.pop("verdict", arrg.CONFIRMED), **body}


def _trial_rng(seed: int, index: int) -> random.Random:
    return random.Random(seed + index)


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


def _load_arrangement(args) -> tuple[arrg.ColoredArrangement, str | None]:
    if getattr(args, "witness", None):
        make, _ = WITNESSES[args.witness]
        return make(), args.witness
    if getattr(args, "input", None):
        return arrg.ColoredArrangement.from_json(_load_json(args.input)), None
    raise UsageError("give --input FILE or --witness NAME")


# -- subcommands ------------------------------------------------------------------

def cmd_construct(args) -> RunReport:
    if args.random is not None:
        k = args.random
        if k < 2:
            raise UsageError("--random needs k >= 2")
        rep = RunReport("construct", args.seed, args.trials, extra={"k": k})

        def one(i):
            arr = arrg.random_arrangement(k, _trial_rng(args.seed, i))
            curve = arrg.construct_curve(arr)
            return {"arrangement": arr.to_json(), "nullity": 1,
                    "points": k * k - k, "curve": curve.to_json()}

        rep.results = [_trial(i, lambda i=i: one(i)) for i in range(args.trials)]
        return rep

    arr, witness = _load_arrangement(args)
    rep = RunReport("construct")
    pts = arrg.offgreen_points(arr, allow_coincident=True)

    def check():
        curve = arrg.construct_curve(arr, allow_coincident=True)
        body = {"arrangement": arr.to_json(), "generic": arr.generic,
                "distinct_points": len(pts), "nullity": 1, "curve": curve.to_json()}
        if witness:
            body["matches_published"] = curve.proportional(WITNESSES[witness][1]())
            if not body["matches_published"]:
                body["verdict"] = arrg.VIOLATED
        return body

    rep.results = [_trial(0, check)]
    return rep


def _random_point_on(l: ProjLine, rng: random.Random, used: set) -> ProjPoint:
    while True:
        cut = ProjLine(*(rng.randint(-9, 9) or 1 for _ in range(3)))
        if cut == l:
            continue
        p = meet(l, cut)
        if p not in used:
            used.add(p)
            return p


def cmd_verify_pappus(args) -> RunReport:
    rep = RunReport("verify-pappus", args.seed, args.trials)

    def one(i):
        rng = _trial_rng(args.seed, i)
        for _ in range(1000):
            l1 = ProjLine(*(rng.randint(-9, 9) or 1 for _ in range(3)))
            l2 = ProjLine(*(rng.randint(-9, 9) or 2 for _ in range(3)))
            if l1 == l2:
                continue
            used = {meet(l1, l2)}
            A, B, C = (_random_point_on(l1, rng, used) for _ in range(3))
            a, b, c = (_random_point_on(l2, rng, used) for _ in range(3))
            try:
                line = arrg.pappus_check(A, B, C, a, b, c)
            except InputError:
                continue
            return {"points": [p.to_json() for p in (A, B, C, a, b, c)], "line": line.to_json()}
        raise UsageError("no nondegenerate Pappus instance found")

    rep.results = [_trial(i, lambda i=i: one(i)) for i in range(args.trials)]
    return rep


def _random_params(rng: random.Random, n: int) -> list[Fraction]:
    return [Fraction(v, rng.randint(1, 4)) for v in rng.sample(range(-30, 31), n)]


def cmd_verify_pascal(args) -> RunReport:
    rep = RunReport("verify-pascal", args.seed, args.trials)

    def one(i):
        rng = _trial_rng(args.seed, i)
        for _ in range(1000):
            params = _random_params(rng, 6)
            if len(set(params)) < 6:
                continue
            pts = [conic_point(t) for t in params]
            try:
                line = arrg.pascal_check(pts)
            except InputError:
                continue
            return {"params": [str(t) for t in params], "line": line.to_json()}
        raise UsageError("no nondegenerate hexagon found")

    rep.results = [_trial(i, lambda i=i: one(i)) for i in range(args.trials)]
    return rep


def cmd_verify_brianchon(args) -> RunReport:
    rep = RunReport("verify-brianchon", args.seed, args.trials)
    dual = dual_conic(PARABOLA)

    def one(i):
        rng = _trial_rng(args.seed, i)
        for _ in range(1000):
            params = _random_params(rng, 6)
            if len(set(params)) < 6:
                continue
            tangents = [dual_line(conic_point(t)) for t in params]
            try:
                point = arrg.brianchon_check(tangents, dual)
            except InputError:
                continue
            return {"params": [str(t) for t in params], "point": point.to_json()}
        raise UsageError("no nondegenerate hexagon found")

    rep.results = [_trial(i, lambda i=i: one(i)) for i in range(args.trials)]
    return rep


def cmd_verify_mobius(args) -> RunReport:
    rep = RunReport("verify-mobius", args.seed, args.trials, extra={"k": args.k})

    def one(i):
        inst = arrg.mobius_instance(args.k, _trial_rng(args.seed, i))
        res = arrg.mobius_check(inst.vertices, inst.green)
        return {"params": [str(t) for t in inst.params], "green": inst.green.to_json(),
                "count_on_green": res.count_on_green, "verdict": res.verdict}

    rep.results = [_trial(i, lambda i=i: one(i)) for i in range(args.trials)]
    return rep


def katz_instance(d: int, rng: random.Random):
    """Consecutive edges of a random inscribed ``2d``-gon, split red/blue."""
    for _ in range(1000):
        params = arrg.random_polygon_params(2 * d, rng)
        try:
            red, blue = arrg.polygon_edges(arrg.inscribed_polygon(params))
            pts = [meet(r, b) for r in red for b in blue]
        except InputError:
            continue
        if len(set(pts)) == d * d and sum(PARABOLA.contains(p) for p in pts) == 2 * d:
            return params, red, blue
    raise UsageError("no admissible polygon found")


def cmd_verify_katz(args) -> RunReport:
    if args.d < 3:
        raise UsageError("--d must be at least 3")
    rep = RunReport("verify-katz", args.seed, args.trials, extra={"d": args.d})

    def one(i):
        params, red, blue = katz_instance(args.d, _trial_rng(args.seed, i))
        curve = arrg.katz_check(red, blue)
        return {"params": [str(t) for t in params], "nullity": 1, "curve": curve.to_json()}

    rep.results = [_trial(i, lambda i=i: one(i)) for i in range(args.trials)]
    return rep


def cmd_cb_failure(args) -> RunReport:
    rep = RunReport("cb-failure")
    if args.two_quintics:
        rep.seed, rep.trials = args.seed, args.trials

        def one(i):
            inst = cubic_partition_instance(_trial_rng(args.seed, i))
            check = cayley_bacharach(inst.red, inst.blue, inst.gamma_rest, 4)
            body = {"params": [str(t) for t in inst.params], "quartics_through_rest": check.lhs,
                    "failure_on_cubic_points": check.rhs}
            if not check.holds or check.lhs != 1:
                body["verdict"] = arrg.VIOLATED
            return body

        rep.results = [_trial(i, lambda i=i: one(i)) for i in range(args.trials)]
        return rep
    if args.d is None:
        raise UsageError("--d is required")
    if args.collinear is not None:
        k = args.collinear
        if k < 1:
            raise UsageError("--collinear needs k >= 1")
        pts = PointSet(ProjPoint(i, 0, 1) for i in range(k))
        expected = max(k - (args.d + 1), 0)
        failure = conditions_failure(pts, args.d)
        rep.extra = {"points": k, "d": args.d, "failure": failure, "expected": expected}
        rep.results = [{"trial": 0, "verdict": arrg.CONFIRMED if failure == expected else arrg.VIOLATED}]
        return rep
    if args.input:
        data = _load_json(args.input)
        if not isinstance(data, list):
            raise UsageError("--input must hold a JSON list of points")
        pts = PointSet(ProjPoint.from_json(p) for p in data)
        rep.extra = {"points": len(pts), "d": args.d, "failure": conditions_failure(pts, args.d)}
        return rep
    raise UsageError("give --input FILE, --collinear K or --two-quintics")


def cmd_elliptic_construct(args) -> RunReport:
    curve = elliptic.CubicCurve.weierstrass(args.a, args.b)
    rep = RunReport("elliptic-construct", extra={"a": str(Fraction(args.a)), "b": str(Fraction(args.b))})

    def package(con, pts):
        arr = con.arrangement()
        cubic = arrg.construct_curve(arr)
        body = {"points": [p.to_json() for p in pts], "arrangement": arr.to_json(),
                "residual": [p.to_json() for p in con.residual],
                "recovers_cubic": cubic.proportional(curve.form)}
        if not body["recovers_cubic"]:
            body["verdict"] = arrg.VIOLATED
        return body

    if args.points:
        data = _load_json(args.points)
        if not isinstance(data, list) or len(data) != 5:
            raise UsageError("--points must hold a JSON list of 5 points")
        pts = [ProjPoint.from_json(p) for p in data]
        rep.results = [_trial(0, lambda: package(elliptic.thm10_construct(curve, pts), pts))]
        return rep
    if (Fraction(args.a), Fraction(args.b)) != (0, 17):
        raise UsageError("random sampling needs seed points; use --points for curves other than a=0, b=17")
    seeds = elliptic.default_seeds(curve)
    rep.seed, rep.trials = args.seed, args.trials

    def one(i):
        con, pts = elliptic.random_admissible_tuple(curve, seeds, _trial_rng(args.seed, i))
        return package(con, pts)

    rep.results = [_trial(i, lambda i=i: one(i)) for i in range(args.trials)]
    return rep


def cmd_secant_dim(args) -> RunReport:
    if args.d < 1:
        raise UsageError("--d must be positive")
    r = secant.secant_trials(args.d, args.trials, args.seed)
    return RunReport("secant-dim", args.seed, args.trials, extra=r.to_json())


def cmd_density_count(args) -> RunReport:
    if args.d < 1:
        raise UsageError("--d must be positive")
    c = secant.density_count(args.d)
    return RunReport("density-count", extra={"d": args.d, "params": c.params,
                                             "curve_space_dim": c.curve_space_dim,
                                             "dense_possible": c.dense_possible})


def cmd_render(args) -> RunReport:
    arr, _ = _load_arrangement(args)
    curve = None
    if not args.no_curve:
        curve = arrg.construct_curve(arr, allow_coincident=True)
    pts = arrg.offgreen_points(arr, allow_coincident=True)
    xmin, xmax, ymin, ymax = args.window
    vp = Viewport(xmin, xmax, ymin, ymax, resolution=args.resolution)
    svg = render_scene(arr, curve, pts, vp)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    return RunReport("render", extra={"out": args.out, "lines": svg.count("<line "),
                                      "polylines": svg.count("<polyline "),
                                      "points": svg.count("<circle ")})


# -- parser -------------------------------------------------------------------

def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="syzygy", description=__doc__.splitlines()[0])
    parser.add_argument("--timing", action="store_true", help="include wall time in the JSON report")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def randomized(p):
        p.add_argument("--seed", type=int, default=_default_seed(),
                       help=f"base seed; trial i uses seed+i (default 0 or ${SEED_ENV})")
        p.add_argument("--trials", type=int, default=DEFAULT_TRIALS,
                       help=f"number of trials (default {DEFAULT_TRIALS})")

    p = sub.add_parser("construct", help="unique degree k-1 curve of a colored arrangement")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--input", help="arrangement JSON file")
    src.add_argument("--witness", choices=sorted(WITNESSES))
    src.add_argument("--random", type=int, metavar="K", help="random generic arrangements with k = K")
    randomized(p)
    p.set_defaults(func=cmd_construct)

    for name, fn in (("verify-pappus", cmd_verify_pappus), ("verify-pascal", cmd_verify_pascal),
                     ("verify-brianchon", cmd_verify_brianchon)):
        p = sub.add_parser(name)
        randomized(p)
        p.set_defaults(func=fn)

    p = sub.add_parser("verify-mobius", help="polygon extension of the Braikenridge-Maclaurin theorem")
    p.add_argument("--k", type=int, default=4, choices=(3, 4))
    randomized(p)
    p.set_defaults(func=cmd_verify_mobius)

    p = sub.add_parser("verify-katz", help="unique degree d-2 curve through crossings off a conic")
    p.add_argument("--d", type=int, default=3)
    randomized(p)
    p.set_defaults(func=cmd_verify_katz)

    p = sub.add_parser("cb-failure", help="failure of points to impose conditions")
    p.add_argument("--d", type=int)
    p.add_argument("--input", help="JSON list of points")
    p.add_argument("--collinear", type=int, metavar="K", help="K collinear points on y = 0")
    p.add_argument("--two-quintics", action="store_true",
                   help="quartics through the 15 crossings off a cubic")
    randomized(p)
    p.set_defaults(func=cmd_cb_failure)

    p = sub.add_parser("elliptic-construct", help="4 red + 4 blue lines for y^2 = x^3 + a x + b")
    p.add_argument("--a", default="0")
    p.add_argument("--b", default="17")
    p.add_argument("--points", help="JSON list of 5 points on the curve")
    randomized(p)
    p.set_defaults(func=cmd_elliptic_construct)

    p = sub.add_parser("secant-dim", help="Terracini dimension of the secant variety of split forms")
    p.add_argument("--d", type=int, required=True)
    randomized(p)
    p.set_defaults(func=cmd_secant_dim)

    p = sub.add_parser("density-count", help="arrangement parameters vs. curve space dimension")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_density_count)

    p = sub.add_parser("render", help="SVG figure of an arrangement and its curve")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--input", help="arrangement JSON file")
    src.add_argument("--witness", choices=sorted(WITNESSES))
    p.add_argument("--out", required=True)
    p.add_argument("--window", type=float, nargs=4, default=(-5.0, 5.0, -5.0, 5.0),
                   metavar=("XMIN", "XMAX", "YMIN", "YMAX"))
    p.add_argument("--resolution", type=int, default=256)
    p.add_argument("--no-curve", action="store_true")
    p.set_defaults(func=cmd_render)
    return parser


def _summary(rep: RunReport) -> str:
    if rep.results:
        ok = sum(r["verdict"] != arrg.VIOLATED for r in rep.results)
        line = f"{rep.command}: {ok}/{len(rep.results)} ok, verdict {rep.verdict}"
    else:
        line = f"{rep.command}: {rep.verdict}"
    if rep.seed is not None:
        line += f" (seed {rep.seed})"
    if rep.wall_time is not None:
        line += f" in {rep.wall_time:.2f}s"
    return line


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"syzygy: {exc}", file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    if getattr(args, "trials", 1) is not None and getattr(args, "trials", 1) < 1:
        print("syzygy: --trials must be at least 1", file=stderr)
        return EXIT_USAGE
    start = time.perf_counter()
    try:
        rep = args.func(args)
    except TheoremViolation as exc:
        print(f"syzygy: theorem violation: {exc}", file=stderr)
        return EXIT_VIOLATION
    except (UsageError, SyzygyError, ValueError) as exc:
        print(f"syzygy: {exc}", file=stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"syzygy: {exc}", file=stderr)
        return EXIT_USAGE
    rep.wall_time = time.perf_counter() - start
    stdout.write(json.dumps(rep.to_json(timing=args.timing), indent=2) + "\n")
    print(_summary(rep), file=stderr)
    return EXIT_VIOLATION if rep.verdict == arrg.VIOLATED else EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
