"""Command-line front end: tabular datasets for the thermometry protocol.

Usage:
    qubit-thermometry trajectory --theta 3.14159 --t-max 1
    qubit-thermometry scan --n1 12 --n2 20 > scan.csv
    qubit-thermometry landmarks --T1 5 --T2 10 --format json
    qubit-thermometry entangled --alpha 0.3 --family fujiwara
    qubit-thermometry optimal-curve --out curve.csv

CSV output has a header row, comma separators and LF line endings.  JSON
output is ``{"columns": [...], "rows": [[...], ...]}``, except for
``landmarks`` which emits a flat key/value object.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import channel, entangled, optimizer
from .channel import ProbePair, ProbeState
from .exceptions import DomainError, RootBracketError

__all__ = ["RunConfig", "build_parser", "main", "run"]

PROG = "qubit-thermometry"

SUBCOMMAND_DEFAULTS = {
    "trajectory": {"t_max": 2.0},
    "scan": {"t_max": 0.6},
    "landmarks": {"t_max": 2.0},
    "entangled": {"t_max": 2.0},
    "optimal-curve": {"t_max": 2.0},
}


@dataclass(frozen=True)
class RunConfig:
    pair: ProbePair
    t_max: float
    t_steps: int
    theta_steps: int
    fmt: str = "csv"
    precision: int = 9

    def times(self):
        return np.linspace(0.0, self.t_max, self.t_steps + 1)

    def thetas(self):
        return np.linspace(0.0, math.pi, self.theta_steps + 1)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(2, f"{PROG}: error: {message}\n")


def _common_parent():
    parent = argparse.ArgumentParser(add_help=False)
    g = parent.add_argument_group("bath pair (occupations or temperatures, not both)")
    g.add_argument("--n1", type=float, help="cold-bath occupation parameter (default 12)")
    g.add_argument("--n2", type=float, help="hot-bath occupation parameter (default 20)")
    g.add_argument("--T1", type=float, help="cold-bath temperature in units of the qubit gap")
    g.add_argument("--T2", type=float, help="hot-bath temperature in units of the qubit gap")
    parent.add_argument("--t-max", type=float, default=None)
    parent.add_argument("--t-steps", type=int, default=600, help="number of time intervals")
    parent.add_argument("--theta-steps", type=int, default=200, help="number of polar-angle intervals")
    parent.add_argument("--format", choices=("csv", "json"), default="csv")
    parent.add_argument("--precision", type=int, default=9, help="significant digits")
    parent.add_argument("--out", help="write to this file instead of standard output")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog=PROG, description="Single-qubit thermometry datasets.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    parent = _common_parent()

    p = sub.add_parser("trajectory", parents=[parent], help="Bloch trajectories in both baths")
    p.add_argument("--theta", type=float, default=math.pi / 2)
    p.add_argument("--phi", type=float, default=0.0)
    p.add_argument("--r", type=float, default=1.0, help="Bloch radius of the probe")

    sub.add_parser("scan", parents=[parent], help="distance over the (t, theta) grid")
    sub.add_parser("landmarks", parents=[parent], help="characteristic times")

    p = sub.add_parser("entangled", parents=[parent], help="entangled probe vs best single qubit")
    p.add_argument("--alpha", type=float, default=None, help="family weight; omit for phi+")
    p.add_argument("--family", choices=entangled.FAMILIES, default="phi-plus-like")

    sub.add_parser("optimal-curve", parents=[parent], help="optimal angle and distance over time")
    return parser


def _config(args) -> RunConfig:
    occ = args.n1 is not None or args.n2 is not None
    temp = args.T1 is not None or args.T2 is not None
    if occ and temp:
        raise DomainError("give either --n1/--n2 or --T1/--T2, not both")
    if temp:
        if args.T1 is None or args.T2 is None:
            raise DomainError("--T1 and --T2 must be given together")
        pair = ProbePair.from_temperatures(args.T1, args.T2)
    elif occ:
        if args.n1 is None or args.n2 is None:
            raise DomainError("--n1 and --n2 must be given together")
        pair = ProbePair(args.n1, args.n2)
    else:
        pair = ProbePair(12.0, 20.0)
    t_max = args.t_max if args.t_max is not None else SUBCOMMAND_DEFAULTS[args.command]["t_max"]
    if not t_max > 0 or math.isinf(t_max):
        raise DomainError(f"--t-max must be positive and finite, got {t_max}")
    if args.t_steps < 1 or args.theta_steps < 2:
        raise DomainError("need --t-steps >= 1 and --theta-steps >= 2")
    if not 1 <= args.precision <= 17:
        raise DomainError("--precision must lie in [1, 17]")
    return RunConfig(pair, float(t_max), args.t_steps, args.theta_steps, args.format, args.precision)


def _fmt(x, precision):
    if x is None:
        return "none"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return f"{float(x):.{precision}g}"


def _json_value(x, precision):
    if x is None:
        return None
    if isinstance(x, (int, np.integer)):
        return int(x)
    return float(f"{float(x):.{precision}g}")


def render_table(columns, rows, fmt="csv", precision=9) -> str:
    if fmt == "json":
        payload = {"columns": list(columns), "rows": [[_json_value(v, precision) for v in r] for r in rows]}
        return json.dumps(payload) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([_fmt(v, precision) for v in r])
    return buf.getvalue()


def render_mapping(items, fmt="csv", precision=9) -> str:
    if fmt == "json":
        return json.dumps({k: _json_value(v, precision) for k, v in items}) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["key", "value"])
    for k, v in items:
        w.writerow([k, _fmt(v, precision)])
    return buf.getvalue()


def cmd_trajectory(cfg: RunConfig, probe: ProbeState) -> str:
    ts = cfg.times()
    r0 = probe.bloch_vector()
    r1 = channel.evolve_bloch(r0, cfg.pair.n1, ts)
    r2 = channel.evolve_bloch(r0, cfg.pair.n2, ts)
    d = np.linalg.norm(r1 - r2, axis=-1)
    rows = [(t, *a, *b, dd) for t, a, b, dd in zip(ts, r1, r2, d)]
    return render_table(["t", "x1", "y1", "z1", "x2", "y2", "z2", "delta"], rows, cfg.fmt, cfg.precision)


def cmd_scan(cfg: RunConfig) -> str:
    ts, thetas = cfg.times(), cfg.thetas()
    d_inf = channel.delta_infinity(cfg.pair)
    values = channel.distance(cfg.pair, ts[:, None], thetas[None, :])
    # ties (only at t = 0) resolve to the ground state
    best = values.shape[1] - 1 - np.argmax(values[:, ::-1], axis=1)
    rows = []
    for i, t in enumerate(ts):
        for j, th in enumerate(thetas):
            v = values[i, j]
            rows.append((t, th, v, v / d_inf, int(j == best[i])))
    return render_table(["t", "theta", "delta", "delta_norm", "argmax"], rows, cfg.fmt, cfg.precision)


def landmark_items(pair: ProbePair):
    lm = optimizer.landmarks(pair)

    def opt_at(t):
        return None if t is None else optimizer.theta_optimal(pair, t, lm.t_star).delta_opt

    return [
        ("n1", pair.n1),
        ("n2", pair.n2),
        ("delta_inf", lm.delta_inf),
        ("t_star", lm.t_star),
        ("t_ground", lm.t_ground),
        ("t_coherent_approx", lm.t_coherent_approx),
        ("t_crossing", lm.t_crossing),
        ("delta_ground_at_t_star", optimizer.delta_ground(pair, lm.t_star)),
        ("delta_ground_at_t_ground", None if lm.t_ground is None else optimizer.delta_ground(pair, lm.t_ground)),
        ("delta_coherent_at_t_coherent_approx", optimizer.delta_coherent(pair, lm.t_coherent_approx)),
        ("delta_excited_at_t_crossing", channel.distance(pair, lm.t_crossing, 0.0)),
        ("delta_opt_at_t_star", opt_at(lm.t_star)),
        ("delta_opt_at_t_ground", opt_at(lm.t_ground)),
        ("delta_opt_at_t_coherent_approx", opt_at(lm.t_coherent_approx)),
        ("delta_opt_at_t_crossing", opt_at(lm.t_crossing)),
        ("delta_phi_plus_at_t_crossing", entangled.delta_entangled_phi_plus(pair, lm.t_crossing)),
    ]


def cmd_landmarks(cfg: RunConfig) -> str:
    return render_mapping(landmark_items(cfg.pair), cfg.fmt, cfg.precision)


def cmd_entangled(cfg: RunConfig, alpha=None, family="phi-plus-like") -> str:
    ts = cfg.times()
    d_inf = channel.delta_infinity(cfg.pair)
    if alpha is None:
        ent = entangled.delta_entangled_phi_plus(cfg.pair, ts)
    else:
        psi = entangled.family_state(family, alpha)
        ent = np.array([entangled.delta_entangled(psi, cfg.pair, t) for t in ts])
    _, single = optimizer.optimal_curve(cfg.pair, ts)
    rows = [(t, e, s, e / d_inf, s / d_inf) for t, e, s in zip(ts, ent, single)]
    columns = ["t", "delta_entangled", "delta_opt", "delta_entangled_norm", "delta_opt_norm"]
    return render_table(columns, rows, cfg.fmt, cfg.precision)


def cmd_optimal_curve(cfg: RunConfig) -> str:
    ts = cfg.times()
    thetas, deltas = optimizer.optimal_curve(cfg.pair, ts)
    d_inf = channel.delta_infinity(cfg.pair)
    rows = [(t, th, d, d / d_inf) for t, th, d in zip(ts, thetas, deltas)]
    return render_table(["t", "theta_opt", "delta_opt", "delta_opt_norm"], rows, cfg.fmt, cfg.precision)


def _dispatch(args) -> str:
    cfg = _config(args)
    if args.command == "trajectory":
        return cmd_trajectory(cfg, ProbeState(theta=args.theta, R=args.r, phi=args.phi))
    if args.command == "scan":
        return cmd_scan(cfg)
    if args.command == "landmarks":
        return cmd_landmarks(cfg)
    if args.command == "entangled":
        return cmd_entangled(cfg, args.alpha, args.family)
    return cmd_optimal_curve(cfg)


def run(argv=None) -> str:
    """Parse ``argv`` and return the rendered output without writing it."""
    return _dispatch(build_parser().parse_args(argv))


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = _dispatch(args)
    except (DomainError, RootBracketError) as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 1
    # rendered in full before anything is written, so failures leave no partial file
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
