"""Command-line front end.

Exit codes: 0 when every certificate passes, 1 on a verification failure (a JSON
diagnostic naming module, operation, witness and argv is printed on stdout),
2 on usage or input errors (diagnostic on stderr).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import fields

from .acceptance import CRITERIA, sampled_identities, summary, symbolic_identities
from .bounds import (
    TABLE_HEADER,
    degree_bound,
    pi,
    pibar,
    pibar_equals_pi,
    table_rows,
    theta,
)
from .catalog import catalog_get, catalog_list, load_algebra
from .config import RunConfig
from .core.maps import RationalMap
from .core.scalar import fmt_scalar, to_scalar
from .cremona import (
    CremonaMap,
    adjoint_cremona,
    base_locus_samples,
    bidegree_certificate,
    verify_involution,
)
from .cubic import (
    check_structural,
    curve_report,
    inversion_I,
    nu3,
    on_X,
    parse_point,
    structural_G,
    translation_T,
    twisted_cubic_through,
)
from .errors import CubicJordanError, InputError, VerificationError
from .variety import (
    jordan_variety,
    line_image,
    meets_base_locus,
    nondegeneracy_rank,
    oadp_solve,
    primitive_check,
    scroll_param,
    three_point_curve_check,
)

ENV_PREFIX = "JCK_"


class _Parser(argparse.ArgumentParser):
    """Raises instead of exiting so that :func:`dispatch` controls the exit code."""

    def error(self, message):
        raise InputError(f"{self.prog}: {message}", module="cli", operation="parse")


# -- input helpers -------------------------------------------------------------------


def parse_json_arg(text, flag):
    """Inline JSON, or ``@path`` / an existing path to a JSON file."""
    source = flag
    if text.startswith("@"):
        path = text[1:]
        source = path
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"{flag}: cannot read {path}: {exc.strerror}",
                             module="cli", operation="parse") from None
    elif os.path.isfile(text):
        source = text
        with open(text) as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}: malformed JSON at line {exc.lineno} column {exc.colno}: "
                         f"{exc.msg}", module="cli", operation="parse") from None


def _vector(data, k, flag):
    if not isinstance(data, list):
        raise InputError(f"{flag}: expected a JSON list")
    if k is not None and len(data) != k:
        raise InputError(f"{flag}: expected {k} coordinates, got {len(data)}")
    try:
        return [to_scalar(c) for c in data]
    except (TypeError, ValueError) as exc:
        raise InputError(f"{flag}: bad coordinate: {exc}") from None


def _matrix(data, k, flag):
    if not isinstance(data, list) or len(data) != k:
        raise InputError(f"{flag}: expected a {k}x{k} matrix")
    return [_vector(row, k, flag) for row in data]


def _strs(v):
    return [fmt_scalar(c) for c in v]


def _config(args):
    env = RunConfig.from_env()
    kw = {f.name: getattr(args, f.name, None) for f in fields(RunConfig)}
    try:
        return env.with_overrides(**kw)
    except ValueError as exc:
        raise InputError(str(exc), module="cli", operation="config") from None


def _rank3(J, operation):
    if J.rank != 3:
        raise InputError(f"{operation} needs a rank-3 algebra; {J.name} has rank {J.rank}",
                         module="cli", operation=operation)


# -- algebra ---------------------------------------------------------------------------


def cmd_algebra_check(args, config):
    J = load_algebra(args.algebra, config)
    mode = args.mode or ("symbolic" if J.dim <= config.symbolic_dim_threshold else "sampled")
    if mode == "symbolic":
        J2, flags = symbolic_identities(J.spec, config)
    else:
        J2, flags = sampled_identities(J.spec, config)
    out = {"algebra": J.name, "dim": J.dim, "rank": J2.rank, "mode": mode, **flags}
    return out, all(flags.values())


def cmd_algebra_rank(args, config):
    J = load_algebra(args.algebra, config)
    return {"algebra": J.name, "dim": J.dim, "rank": J.rank}, True


def cmd_algebra_minpoly(args, config):
    J = load_algebra(args.algebra, config)
    gmp = J.generic_min_poly()
    return {"algebra": J.name, "rank": J.rank,
            "sigma": [s.format() for s in gmp.sigma],
            "sigma_json": gmp.to_json(),
            "certified": J.jordan_identity}, True


def _form_or_value(J, args, which):
    if args.point is None:
        if which == "norm":
            p = J.norm_form()
            return {"algebra": J.name, "norm": p.format(), "norm_json": p.to_json()}
        forms = J.adjoint_form()
        return {"algebra": J.name, "adjoint": [p.format() for p in forms],
                "adjoint_json": [p.to_json() for p in forms]}
    x = _vector(parse_json_arg(args.point, "--point"), J.dim, "--point")
    if which == "norm":
        return {"algebra": J.name, "x": _strs(x), "norm": fmt_scalar(J.norm(x))}
    return {"algebra": J.name, "x": _strs(x), "adjoint": _strs(J.adjoint(x))}


def cmd_algebra_adjoint(args, config):
    return _form_or_value(load_algebra(args.algebra, config), args, "adjoint"), True


def cmd_algebra_norm(args, config):
    return _form_or_value(load_algebra(args.algebra, config), args, "norm"), True


def cmd_algebra_invert(args, config):
    J = load_algebra(args.algebra, config)
    x = _vector(parse_json_arg(args.point, "--point"), J.dim, "--point")
    inv = J.invert(x)
    check = J.mul(x, inv) == list(J.unit)
    return {"algebra": J.name, "x": _strs(x), "inverse": _strs(inv),
            "x_times_inverse_is_e": check}, check


# -- catalog ---------------------------------------------------------------------------


def cmd_catalog_list(args, config):
    rows = [{"name": n, "dim": d, "rank": r, "provenance": p}
            for n, d, r, p in catalog_list(config)]
    return rows, True


def cmd_catalog_show(args, config):
    e = catalog_get(args.name, config)
    out = e.to_json()
    out["dim"], out["rank"] = e.dim, e.rank
    if e.reference_adjoint is not None:
        out["matches_reference"] = (tuple(e.algebra.adjoint_form()) == e.reference_adjoint
                                    and e.algebra.norm_form() == e.reference_norm)
        return out, out["matches_reference"]
    return out, True


# -- cubic -----------------------------------------------------------------------------


def cmd_cubic_nu3(args, config):
    J = load_algebra(args.algebra, config)
    _rank3(J, "nu3")
    x = _vector(parse_json_arg(args.point, "--point"), J.dim, "--point")
    P = nu3(J, x)
    ok = on_X(J, P)
    return {"algebra": J.name, "x": _strs(x), "nu3": P.to_json(), "on_X": ok}, ok


def _triple(J, text):
    data = parse_json_arg(text, "--points")
    if not isinstance(data, list) or len(data) != 3:
        raise InputError("--points: expected a JSON list of three points")
    return [_vector(v, J.dim, "--points") for v in data]


def cmd_cubic_through(args, config):
    J = load_algebra(args.algebra, config)
    _rank3(J, "through")
    x, y, z = _triple(J, args.points)
    curve = twisted_cubic_through(J, x, y, z)
    rep = curve_report(curve, x, y, z)
    ok = (rep["degree"] == 3 and rep["span_dim"] == 4
          and all(v for k, v in rep.items() if k not in ("degree", "span_dim")))
    return {"algebra": J.name, "curve": curve.to_json(), "report": rep}, ok


def cmd_cubic_automorphism(args, config):
    J = load_algebra(args.algebra, config)
    _rank3(J, "automorphism")
    M = parse_point(_vector(parse_json_arg(args.zorn, "--zorn"), 2 * J.dim + 2, "--zorn"), J.dim)
    if args.kind == "I":
        image = inversion_I(M)
        extra = {}
    elif args.kind == "T":
        if args.omega is None:
            raise InputError("--kind T needs --omega")
        omega = _vector(parse_json_arg(args.omega, "--omega"), J.dim, "--omega")
        image = translation_T(J, omega, M)
        extra = {"omega": _strs(omega)}
    else:
        if args.g is None or args.g_sharp is None or args.eta is None:
            raise InputError("--kind G needs --g, --g-sharp and --eta")
        g = _matrix(parse_json_arg(args.g, "--g"), J.dim, "--g")
        gs = _matrix(parse_json_arg(args.g_sharp, "--g-sharp"), J.dim, "--g-sharp")
        pair = check_structural(J, g, gs, args.eta, config)
        image = structural_G(J, pair, M)
        extra = {"structural_samples": pair.checked_samples}
    before, after = on_X(J, M), on_X(J, image)
    ok = before == after
    return {"algebra": J.name, "kind": args.kind, **extra, "input": M.to_json(),
            "image": image.to_json(), "input_on_X": before, "image_on_X": after,
            "preserves_X": ok}, ok


# -- cremona ---------------------------------------------------------------------------


def _cremona_source(args, config):
    if (args.algebra is None) == (args.map is None):
        raise InputError("give exactly one of --algebra and --map")
    if args.algebra is not None:
        J = load_algebra(args.algebra, config)
        _rank3(J, "cremona")
        return adjoint_cremona(J), J.name
    data = parse_json_arg(args.map, "--map")
    return CremonaMap(RationalMap.from_json(data)), "map"


def cmd_cremona_verify(args, config):
    phi, label = _cremona_source(args, config)
    ell = None if args.ell is None else parse_json_arg(args.ell, "--ell")
    cert = verify_involution(phi, ell, config)
    out = {"source": label, "map": phi.formatted(), **cert.to_json()}
    samples = base_locus_samples(phi, cert, config)
    out["base_locus_samples"] = samples
    ok = all(v for s in samples for k, v in s.items() if k.endswith("_zero") and k != "n_v_zero")
    return out, ok


def cmd_cremona_bidegree(args, config):
    phi, label = _cremona_source(args, config)
    rep = bidegree_certificate(phi, config)
    return {"source": label, **rep}, True


# -- variety ---------------------------------------------------------------------------


def _variety(args, config):
    if getattr(args, "scroll", None) is not None:
        if args.algebra is not None:
            raise InputError("give only one of --algebra and --scroll")
        return scroll_param(args.scroll, args.r), None
    if args.algebra is None:
        raise InputError("give --algebra or --scroll")
    J = load_algebra(args.algebra, config)
    _rank3(J, "variety")
    return jordan_variety(J, config), J


def cmd_variety_param(args, config):
    V, _ = _variety(args, config)
    rank = nondegeneracy_rank(V, config)
    prim = primitive_check(V, config)
    out = {**V.to_json(), "nondegeneracy_rank": rank, "expected_rank": 2 * V.r + 4,
           "primitive": prim}
    return out, rank == 2 * V.r + 4


def cmd_variety_line_image(args, config):
    V, _ = _variety(args, config)
    data = parse_json_arg(args.line, "--line")
    if not isinstance(data, list) or len(data) != 2:
        raise InputError("--line: expected [p, q]")
    p, q = (_vector(v, V.r + 2, "--line") for v in data)
    img = line_image(V, p, q)
    return {"source": V.source, "p": _strs(p), "q": _strs(q), **img.to_json(),
            "meets_base_locus": meets_base_locus(V, p, q)}, True


def cmd_variety_three_point(args, config):
    V, J = _variety(args, config)
    if J is None:
        raise InputError("three-point needs --algebra")
    x, y, z = _triple(J, args.points)
    rep = three_point_curve_check(V, J, x, y, z)
    return {"source": V.source, **rep}, rep["ok"]


def cmd_variety_oadp(args, config):
    J = load_algebra(args.algebra, config)
    _rank3(J, "oadp")
    q = _vector(parse_json_arg(args.q, "--q"), 2 * J.dim + 2, "--q")
    sol = oadp_solve(J, q)
    ok = sol.line_check and sol.on_X and sol.conjugation_swaps
    return {"algebra": J.name, "q": _strs(q), **sol.to_json()}, ok


# -- bounds ----------------------------------------------------------------------------


def cmd_bounds_pi(args, config):
    return pi(args.r, args.n, args.d), True


def cmd_bounds_pibar(args, config):
    return pibar(args.r, args.n, args.delta), True


def cmd_bounds_equal(args, config):
    rep = pibar_equals_pi(args.r, args.n, args.delta)
    return rep, rep["holds"]


def cmd_bounds_degree(args, config):
    return fmt_scalar(degree_bound(args.r, args.n, args.delta)), True


def cmd_bounds_theta(args, config):
    return theta(args.r, args.n, args.k), True


def cmd_bounds_table(args, config):
    rows = list(table_rows(range(1, args.r_max + 1), range(2, args.n_max + 1), args.delta_max))
    return _TSV(rows), all(row[7] == row[8] for row in rows)


class _TSV:
    def __init__(self, rows):
        self.rows = rows

    def render(self):
        lines = ["\t".join(TABLE_HEADER)]
        lines += ["\t".join(fmt_scalar(c) for c in row) for row in self.rows]
        return "\n".join(lines)


# -- verify-all ------------------------------------------------------------------------


def cmd_verify_all(args, config):
    results = [c(config) for c in CRITERIA]
    return _VerifyAll(results, args.timings), all(r.passed for r in results)


class _VerifyAll:
    def __init__(self, results, timings):
        self.results, self.timings = results, timings

    def payload(self):
        out = summary(self.results)
        return out if self.timings else _strip_timings(out)

    def render(self):
        lines = []
        for r in self.results:
            line = r.line()
            lines.append(line if self.timings else line.rsplit(" (", 1)[0])
            lines.extend(f"    {f}" for f in r.failures)
        return "\n".join(lines)


def _strip_timings(obj):
    if isinstance(obj, dict):
        return {k: _strip_timings(v) for k, v in obj.items() if k != "seconds"}
    if isinstance(obj, list):
        return [_strip_timings(v) for v in obj]
    return obj


# -- parser ----------------------------------------------------------------------------


def _common(suppress):
    p = argparse.ArgumentParser(add_help=False)
    default = argparse.SUPPRESS if suppress else None
    p.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS if suppress
                   else "json", help="output format (default json)")
    for f in fields(RunConfig):
        flag = "--" + f.name.replace("_", "-")
        p.add_argument(flag, type=int, default=default, dest=f.name,
                       help=f"overrides {ENV_PREFIX}{f.name.upper()} (default {f.default})")
    return p


def build_parser():
    common = _common(True)
    parser = _Parser(prog="cubicjordan", parents=[_common(False)],
                     description="Exact computations with cubic Jordan algebras, their twisted "
                                 "cubic varieties, quadro-quadric Cremona maps and "
                                 "Castelnuovo-Harris bounds.")
    groups = parser.add_subparsers(dest="group", metavar="COMMAND", parser_class=_Parser)
    groups.required = True

    def leaf(sub, name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    def group(name, help_text):
        g = groups.add_parser(name, help=help_text)
        sub = g.add_subparsers(dest="command", metavar="ACTION", parser_class=_Parser)
        sub.required = True
        return sub

    alg = group("algebra", "Jordan algebra operations")
    p = leaf(alg, "check", cmd_algebra_check, "verify the core identities")
    p.add_argument("--algebra", required=True)
    p.add_argument("--mode", choices=("symbolic", "sampled"))
    for name, func, text in (("rank", cmd_algebra_rank, "generic rank"),
                             ("minpoly", cmd_algebra_minpoly, "generic minimum polynomial")):
        leaf(alg, name, func, text).add_argument("--algebra", required=True)
    for name, func in (("adjoint", cmd_algebra_adjoint), ("norm", cmd_algebra_norm)):
        p = leaf(alg, name, func, f"{name} form, or its value at --point")
        p.add_argument("--algebra", required=True)
        p.add_argument("--point")
    p = leaf(alg, "invert", cmd_algebra_invert, "x^(-1) = x^# / N(x)")
    p.add_argument("--algebra", required=True)
    p.add_argument("--point", required=True)

    cat = group("catalog", "catalog of algebras")
    leaf(cat, "list", cmd_catalog_list, "list default entries")
    leaf(cat, "show", cmd_catalog_show, "algebra spec and reference forms").add_argument("name")

    cub = group("cubic", "twisted cubic variety X")
    p = leaf(cub, "nu3", cmd_cubic_nu3, "[1, x; x^#, N(x)]")
    p.add_argument("--algebra", required=True)
    p.add_argument("--point", required=True)
    p = leaf(cub, "through", cmd_cubic_through, "cubic curve through nu3 of three points")
    p.add_argument("--algebra", required=True)
    p.add_argument("--points", required=True, help="JSON [x, y, z]")
    p = leaf(cub, "automorphism", cmd_cubic_automorphism, "apply I, T_omega or G_g")
    p.add_argument("--algebra", required=True)
    p.add_argument("--kind", choices=("I", "T", "G"), required=True)
    p.add_argument("--zorn", required=True, help="JSON [s, x..., y..., t]")
    p.add_argument("--omega")
    p.add_argument("--g")
    p.add_argument("--g-sharp", dest="g_sharp")
    p.add_argument("--eta")

    cre = group("cremona", "quadro-quadric Cremona maps")
    for name, func, text in (("verify", cmd_cremona_verify, "involution certificate"),
                             ("bidegree", cmd_cremona_bidegree, "degree and common factor")):
        p = leaf(cre, name, func, text)
        p.add_argument("--algebra")
        p.add_argument("--map", help="JSON list of polynomials [{exp, coef}, ...]")
        if name == "verify":
            p.add_argument("--ell", help="JSON matrix (default identity)")

    var = group("variety", "cubic parametrizations")

    def variety_args(p, scroll=True):
        p.add_argument("--algebra")
        if scroll:
            p.add_argument("--scroll", choices=("S122", "S113"))
            p.add_argument("--r", type=int, default=2)

    variety_args(leaf(var, "param", cmd_variety_param, "parametrization and rank"))
    p = leaf(var, "line-image", cmd_variety_line_image, "image of a line")
    variety_args(p)
    p.add_argument("--line", required=True, help="JSON [p, q]")
    p = leaf(var, "three-point", cmd_variety_three_point, "cubic through three points")
    variety_args(p, scroll=False)
    p.add_argument("--points", required=True)
    p = leaf(var, "oadp", cmd_variety_oadp, "secant line through a general point")
    p.add_argument("--algebra", required=True)
    p.add_argument("--q", required=True, help="JSON [s, x..., y..., t]")

    bnd = group("bounds", "Castelnuovo-Harris bound functions")
    for name, func, last in (("pi", cmd_bounds_pi, "d"), ("pibar", cmd_bounds_pibar, "delta"),
                             ("equal", cmd_bounds_equal, "delta"),
                             ("degree", cmd_bounds_degree, "delta"),
                             ("theta", cmd_bounds_theta, "k")):
        p = leaf(bnd, name, func, f"{name}(r, n, {last})")
        p.add_argument("--r", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument(f"--{last}", type=int, required=True)
    p = leaf(bnd, "table", cmd_bounds_table, "TSV grid of the bound functions")
    p.add_argument("--r-max", type=int, default=6)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--delta-max", type=int, default=20)

    p = groups.add_parser("verify-all", parents=[common], help="run the acceptance suite")
    p.set_defaults(func=cmd_verify_all)
    p.add_argument("--timings", action="store_true", help="include wall-clock timings")
    return parser


# -- output ----------------------------------------------------------------------------


def _render_text(obj, indent=""):
    if isinstance(obj, list) and obj and all(isinstance(v, dict) for v in obj) \
            and len({tuple(v) for v in obj}) == 1 \
            and not any(isinstance(u, (dict, list)) for v in obj for u in v.values()):
        keys = list(obj[0])
        rows = ["\t".join(keys)] + ["\t".join(str(v[k]) for k in keys) for v in obj]
        return "\n".join(indent + r for r in rows)
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if k.endswith("_json"):
                continue
            nested = isinstance(v, dict) or (
                isinstance(v, list) and any(isinstance(u, (dict, list)) for u in v))
            if nested and v:
                lines.append(f"{indent}{k}:")
                lines.append(_render_text(v, indent + "  "))
            elif isinstance(v, list):
                lines.append(f"{indent}{k}: " + ", ".join(str(u) for u in v))
            else:
                lines.append(f"{indent}{k}: {v}")
        return "\n".join(lines)
    if isinstance(obj, list):
        out = []
        for v in obj:
            if isinstance(v, dict):
                block = _render_text(v, indent + "  ")
                out.append(indent + "- " + block[len(indent) + 2:])
            elif isinstance(v, list) and not any(isinstance(u, (dict, list)) for u in v):
                out.append(f"{indent}- " + ", ".join(str(u) for u in v))
            elif isinstance(v, list):
                out.append(_render_text(v, indent + "  "))
            else:
                out.append(f"{indent}{v}")
        return "\n".join(out)
    return f"{indent}{obj}"


def _render(payload, fmt):
    if isinstance(payload, _TSV):
        return payload.render()
    if isinstance(payload, _VerifyAll):
        return payload.render() if fmt == "text" else json.dumps(payload.payload(), indent=2)
    if isinstance(payload, (int, str)):
        return str(payload)
    if fmt == "text":
        return _render_text(payload)
    return json.dumps(payload, indent=2)


def dispatch(argv=None, stdout=None, stderr=None) -> int:
    """Run one command; returns the exit code."""
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    where = ("cli", "parse")

    def diagnostic(exc):
        if isinstance(exc, CubicJordanError):
            out = exc.to_json()
        else:
            out = {"error": type(exc).__name__, "module": "", "operation": "",
                   "message": str(exc)}
        out["module"] = out["module"] or where[0]
        out["operation"] = out["operation"] or where[1]
        out["argv"] = argv
        return json.dumps(out, indent=2)

    try:
        args = build_parser().parse_args(argv)
        where = (args.group, getattr(args, "command", None) or args.group)
        config = _config(args)
        payload, ok = args.func(args, config)
    except VerificationError as exc:
        print(diagnostic(exc), file=stdout)
        return 1
    except (CubicJordanError, ValueError) as exc:
        print(diagnostic(exc), file=stderr)
        return 2
    except SystemExit as exc:
        # --help
        return exc.code if isinstance(exc.code, int) else 0
    print(_render(payload, args.format), file=stdout)
    if not ok:
        diag = {"error": "VerificationFailed", "module": where[0], "operation": where[1],
                "argv": argv}
        print(json.dumps(diag, indent=2), file=stdout)
        return 1
    return 0


def main():
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
