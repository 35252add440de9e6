"""Command line front end.

Exit status: 0 on success, 2 on a domain error (message on stderr), 64 on a
usage error such as an unknown subcommand.

Numeric defaults come from ``nctorus.toml`` in the working directory, or the
file given by ``--config``. Keys: ``tol``, ``phase_grid_cap``, ``q_max``,
``seed``, ``output_dir``. ``NCTORUS_SEED`` overrides the seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import fields, lab, representation, sklyanin, torus
from .config import load_config
from .errors import DomainError, NonConvergenceError
from .ncpoly import NcPolynomial

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise UsageError(message)


def _complex(text: str) -> complex:
    s = text.strip()
    if s.startswith("["):
        re_, im = json.loads(s)
        return complex(float(re_), float(im))
    if "," in s:
        re_, im = s.split(",")
        return complex(float(re_), float(im))
    return complex(s.replace(" ", ""))


def _dump(value) -> str:
    return json.dumps(value)


# -- handlers ---------------------------------------------------------------------
# each returns the exact text written to stdout

def _torus_check(a, cfg):
    return _dump(torus.validate_skew(torus.SkewMatrix.from_json(a.matrix)))


def _torus_k0(a, cfg):
    return str(torus.k0_rank(a.n))


def _torus_isom(a, cfg):
    t, tp = torus.parse_angle(a.theta), torus.parse_angle(a.theta_prime)
    return _dump(torus.isom_2d(t, tp, a.tol))


def _torus_fiber(a, cfg):
    return str(torus.fiber_count(torus.RationalAngle.parse(a.theta), a.grid_q))


def _rep_build(a, cfg):
    rep = representation.build_rep(torus.RationalAngle.parse(a.theta), _complex(a.z1), _complex(a.z2))
    return _dump(rep.to_dict())


def _rep_norm(a, cfg):
    x = NcPolynomial.parse(a.poly)
    theta = torus.RationalAngle.parse(a.theta)
    if a.grid is not None:
        return _dump(representation.norm_estimate(x, theta, a.grid))
    tol = a.tol if a.tol is not None else cfg.tol
    r = representation.converge_norm(x, theta, tol, cap=cfg.phase_grid_cap)
    return _dump(r._asdict())


def _sk_gamma(a, cfg):
    g = sklyanin.solve_gamma(_complex(a.alpha), _complex(a.beta))
    return _dump([g.real, g.imag])


def _sk_relations(a, cfg):
    rs = sklyanin.sklyanin_relations(sklyanin.SklyaninParams.from_json(a.params))
    return _dump(rs.to_strings())


def _sk_curve(a, cfg):
    p = sklyanin.SklyaninParams.from_json(a.params)
    return _dump(sklyanin.on_curve(p, sklyanin.ProjectivePoint3.from_json(a.point), a.tol))


def _field_companion(a, cfg):
    return fields.companion(fields.RationalPoly.parse(a.poly)).to_json()


def _field_charpoly(a, cfg):
    return str(fields.char_poly(fields.companion(fields.RationalPoly.parse(a.poly))))


def _field_member(a, cfg):
    mp = fields.RationalPoly.parse(a.minpoly)
    c = fields.AlgebraicNumber.near(mp, _complex(a.near)) if a.near else fields.AlgebraicNumber(mp)
    return _dump(fields.constants_member(c, a.n))


def _lab_scan(a, cfg):
    x = NcPolynomial.parse(a.poly)
    report = lab.norm_scan(
        x,
        a.q_max if a.q_max is not None else cfg.q_max,
        a.tol if a.tol is not None else cfg.tol,
        grid_cap=cfg.phase_grid_cap,
        seed=cfg.seed,
        workers=a.workers,
    )
    text = report.to_csv() if a.format == "csv" else report.to_json()
    if a.out:
        out = Path(a.out)
        if not out.is_absolute():
            out = cfg.output_dir / out
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text)
        return ""
    return text.rstrip("\n")


def _lab_finiteness(a, cfg):
    return _dump(lab.finiteness_experiment(a.grid_q))


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="nctorus", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--config", help="path to a nctorus.toml config file")
    groups = p.add_subparsers(dest="group", required=True, parser_class=_Parser, metavar="GROUP")

    def group(name, help_):
        g = groups.add_parser(name, help=help_)
        return g.add_subparsers(dest="cmd", required=True, parser_class=_Parser, metavar="COMMAND")

    t = group("torus", "skew matrices, K0 rank, 2-d isomorphism")
    c = t.add_parser("check", help="validate a skew matrix given as JSON")
    c.add_argument("--matrix", required=True, help='{"n": 2, "upper": ["1/5"]} or a full nested list')
    c.set_defaults(func=_torus_check)
    c = t.add_parser("k0", help="rank of K0 of the n-torus")
    c.add_argument("--n", type=int, required=True)
    c.set_defaults(func=_torus_k0)
    c = t.add_parser("isom", help="are the tori at theta and theta' isomorphic")
    c.add_argument("--theta", required=True, help="p/q (exact) or a float")
    c.add_argument("--theta-prime", required=True)
    c.add_argument("--tol", type=float, default=torus.DEFAULT_ISOM_TOL, help="float comparisons only")
    c.set_defaults(func=_torus_isom)
    c = t.add_parser("fiber", help="grid angles isomorphic to theta")
    c.add_argument("--theta", required=True, help="p/q")
    c.add_argument("--grid-q", type=int, required=True)
    c.set_defaults(func=_torus_fiber)

    r = group("rep", "clock-and-shift representations and norms")
    c = r.add_parser("build", help="twisted clock/shift matrices as JSON")
    c.add_argument("--theta", required=True, help="p/q")
    c.add_argument("--z1", default="1,0", help="boundary phase as re,im")
    c.add_argument("--z2", default="1,0")
    c.set_defaults(func=_rep_build)
    c = r.add_parser("norm", help="norm of a polynomial in U1, U2")
    c.add_argument("--poly", required=True, help="e.g. \"U1 + U1' + U2 + U2'\"")
    c.add_argument("--theta", required=True, help="p/q")
    c.add_argument("--grid", type=int, help="fixed phase grid (otherwise refine to --tol)")
    c.add_argument("--tol", type=float)
    c.set_defaults(func=_rep_norm)

    s = group("sklyanin", "Sklyanin parameters, relations, Jacobi curve")
    c = s.add_parser("gamma", help="solve the parameter constraint for gamma")
    c.add_argument("--alpha", required=True, help="re,im")
    c.add_argument("--beta", required=True, help="re,im")
    c.set_defaults(func=_sk_gamma)
    c = s.add_parser("relations", help="the six quadratic relations")
    c.add_argument("--params", required=True, help='{"alpha": [re, im], "beta": [re, im], "gamma": [re, im] | "auto"}')
    c.set_defaults(func=_sk_relations)
    c = s.add_parser("curve", help="is a point of CP^3 on the Jacobi curve")
    c.add_argument("--params", required=True)
    c.add_argument("--point", required=True, help="[[re, im], [re, im], [re, im], [re, im]]")
    c.add_argument("--tol", type=float, default=1e-12)
    c.set_defaults(func=_sk_curve)

    f = group("field", "companion matrices and fields of constants over Q")
    for name, func, help_ in (
        ("companion", _field_companion, "companion matrix of a monic polynomial"),
        ("charpoly", _field_charpoly, "characteristic polynomial of the companion matrix"),
    ):
        c = f.add_parser(name, help=help_)
        c.add_argument("--poly", required=True, help='lower coefficients c0..c(n-1), e.g. "-1,0" for x^2 - 1')
        c.set_defaults(func=func)
    c = f.add_parser("member", help="is a root of minpoly a constant of n x n matrices")
    c.add_argument("--minpoly", required=True, help="lower coefficients of an irreducible monic polynomial")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--near", help="pick the root nearest this complex value (re,im)")
    c.set_defaults(func=_field_member)

    lb = group("lab", "norm scans and fiber counting")
    c = lb.add_parser("scan", help="norm at every p/q with q <= q-max")
    c.add_argument("--poly", required=True)
    c.add_argument("--q-max", type=int)
    c.add_argument("--tol", type=float)
    c.add_argument("--format", choices=("csv", "json"), default="csv")
    c.add_argument("--out", help="write here (relative to output_dir) instead of stdout")
    c.add_argument("--workers", type=int, default=1)
    c.set_defaults(func=_lab_scan)
    c = lb.add_parser("finiteness", help="isomorphism class sizes on the grid k/grid-q")
    c.add_argument("--grid-q", type=int, required=True)
    c.set_defaults(func=_lab_finiteness)
    return p


def _glue_negative_values(argv: list[str]) -> list[str]:
    # argparse reads "-1,0" as an option; bind it to the preceding --flag instead
    out: list[str] = []
    for tok in argv:
        if (
            out
            and out[-1].startswith("--")
            and "=" not in out[-1]
            and len(tok) > 1
            and tok[0] == "-"
            and (tok[1].isdigit() or tok[1] == ".")
        ):
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    argv = _glue_negative_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except UsageError:
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        cfg = load_config(args.config)
        text = args.func(args, cfg)
    except (DomainError, NonConvergenceError, OverflowError, json.JSONDecodeError, ValueError) as exc:
        print(f"nctorus: error: {exc}", file=stderr)
        return EXIT_DOMAIN
    if text:
        print(text, file=stdout)
    return EXIT_OK


def main() -> None:
    sys.exit(run())
