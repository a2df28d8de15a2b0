"""Command line front end.  Every subcommand prints one JSON object.

Exit codes: 0 success, 1 computation error or failed check, 2 input error.
"""
import argparse
import csv
import json
import sys
from fractions import Fraction

from .cremap.maps import (
    parse_map_text, iterate_degrees, inverse_low_degree, conjugate, equals,
    power, AffineBirMap, BitCapExceeded, InverseError, DEFAULT_BIT_CAP,
)
from .cremap import fixtures as fx
from .dynamics import (
    classify_growth, proper_base_points, mu_estimate, persistence_scan, BaseLocusError, NonIntegralMu,
)
from .exactalg.parsing import ParseError
from .exactalg.torus import parse_torus_header, parse_torus_constant
from .group_apps import (
    bs_check, GL2QEmbedding, EmbeddingError, gl2q_verify, gl2q_injectivity, parse_chi, sample_pairs,
)
from .halphen import (
    HalphenData, LatticeError, parse_class, kappa, degree_growth_closed_form, degree_growth_matrix,
    parity_check, example_9_4_pipeline, inner,
)
from .report import report_schema_version, rat
from .torus_normal import (
    DiagonalAuto, AlmostDiagonalAuto, ContextMismatch, ShapeError, diag_conjugacy,
    iterate_conjugacy_constraints, almost_diag_conjugacy, reduce_triangular, normalize_diagonal,
    kernel_lattice,
)


class InputError(Exception):
    pass


class CheckFailed(Exception):
    """A computation finished but a verified property did not hold."""

    def __init__(self, payload):
        super().__init__("check failed")
        self.payload = payload


INPUT_ERRORS = (InputError, ParseError, LatticeError, ShapeError, ContextMismatch, EmbeddingError, OSError)
COMPUTE_ERRORS = (BitCapExceeded, InverseError, BaseLocusError, NonIntegralMu, ArithmeticError,
                  NotImplementedError, AssertionError, ValueError)


def _read_map(path, field_text=None):
    with open(path) as fh:
        text = fh.read()
    if field_text and "field:" not in text:
        text = "field: %s\n%s" % (field_text, text)
    return parse_map_text(text)


def _point(text):
    try:
        return tuple(Fraction(v) for v in text.split(":"))
    except (ValueError, ZeroDivisionError):
        raise InputError("bad point %r; expected a:b:c" % text)


def cmd_degrees(a):
    phi = _read_map(a.map, a.field)
    return {"degrees": iterate_degrees(phi, a.k, a.bit_cap)}


def cmd_classify(a):
    phi = _read_map(a.map, a.field)
    return classify_growth(iterate_degrees(phi, a.k, a.bit_cap)).to_json()


def cmd_basepoints(a):
    phi = _read_map(a.map, a.field)
    pts = proper_base_points(phi, seed=a.seed)
    return {"degree": phi.degree, "base_points": [p.to_json() for p in pts]}


def cmd_mu(a):
    phi = _read_map(a.map, a.field)
    pencil = _point(a.pencil) if a.pencil else None
    return mu_estimate(phi, pencil, a.k, a.bit_cap).to_json()


def cmd_persistence(a):
    phi = _read_map(a.map, a.field)
    inv = _read_map(a.inverse, a.field) if a.inverse else inverse_low_degree(phi, seed=a.seed)
    pencil = _point(a.pencil) if a.pencil else None
    return persistence_scan(phi, inv, a.N, pencil).to_json()


def cmd_kappa(a):
    if a.example:
        return example_9_4_pipeline().to_json()
    if not a.delta:
        raise InputError("need --delta or --example")
    h = HalphenData(a.m, parse_class(a.delta, a.r))
    return {"m": a.m, "delta": str(h.delta), "delta_square": inner(h.delta, h.delta), "kappa": rat(kappa(h))}


def cmd_lattice(a):
    if a.parity:
        D = parse_class(a.parity, a.r)
        return {"delta": str(D), "square": inner(D, D), "parity": parity_check(D)}
    if not (a.lam and a.delta):
        raise InputError("need --lam and --delta, or --parity")
    lam, h = parse_class(a.lam, a.r), HalphenData(a.m, parse_class(a.delta, a.r))
    rows = []
    for n in range(a.n + 1):
        cf, mx = degree_growth_closed_form(lam, h, n), degree_growth_matrix(lam, h, n)
        rows.append({"n": n, "closed_form": cf, "matrix": mx, "equal": cf == mx})
    out = {"lam": str(lam), "delta": str(h.delta), "m": a.m, "rows": rows}
    if not all(r["equal"] for r in rows):
        raise CheckFailed(out)
    return out


def _torus_pair(G, texts):
    if len(texts) != 2:
        raise InputError("a diagonal map needs two constants")
    return [parse_torus_constant(G, t) for t in texts]


def cmd_conj_diag(a):
    G = parse_torus_header(a.torus)
    alpha, beta = _torus_pair(G, a.psi)
    if a.almost:
        data = AlmostDiagonalAuto(alpha)
        if a.mn:
            return iterate_conjugacy_constraints(data, a.mn[0], a.mn[1]).to_json()
        gamma = _torus_pair(G, a.psi2)[0] if a.psi2 else None
        if gamma is None:
            raise InputError("need --psi2 or --mn with --almost")
        return {"conjugate": almost_diag_conjugacy(alpha, gamma)}
    psi = DiagonalAuto(alpha, beta)
    out = {"kernel": [list(g) for g in kernel_lattice(psi).generators]}
    if not psi.has_finite_order():
        M, _, k = normalize_diagonal(psi)
        out["normalization"] = {"M": M, "k": k}
    if a.mn:
        out.update(iterate_conjugacy_constraints(psi, a.mn[0], a.mn[1], a.bound).to_json())
    elif a.psi2:
        out.update(diag_conjugacy(psi, DiagonalAuto(*_torus_pair(G, a.psi2)), a.bound).to_json())
    return out


def cmd_reduce(a):
    g = AffineBirMap.from_p2(_read_map(a.map, a.field))
    return reduce_triangular(g).to_json()


def cmd_bs(a):
    if a.m * a.n == 0:
        raise InputError("BS(m, n) needs mn != 0")
    return bs_check(a.m, a.n).to_json()


def cmd_gl2q(a):
    try:
        chi = parse_chi(a.chi)
    except ValueError as exc:
        raise InputError(str(exc))
    e = GL2QEmbedding(a.k, chi)
    out = {"k": a.k, "chi": {str(p): rat(v) for p, v in sorted(chi.items())},
           "injectivity": gl2q_injectivity(e).to_json()}
    if a.verify:
        primes = None if not chi else sorted(p for p in chi if p > 0)
        rep = gl2q_verify(e, sample_pairs(a.verify, a.seed, primes=primes))
        out["verification"] = rep.to_json()
        if not rep.ok:
            raise CheckFailed(out)
    return out


# fixtures

def _fx_jordan():
    got = conjugate(fx.jordan_psi(), fx.jordan_psi_inverse(), fx.jordan_map())
    return equals(got, fx.jordan_target()), {"expected": str(fx.jordan_target()), "got": str(got)}


def _fx_delpezzo():
    h = fx.delpezzo_h()
    orders = {k: power(h, k).is_identity() for k in (1, 2, 3, 6)}
    ok = orders[6] and not (orders[1] or orders[2] or orders[3])
    return ok, {"expected": "h^6 = id, h^2 != id, h^3 != id", "identity_at": {str(k): v for k, v in orders.items()}}


F_ALPHA_BETA_DEGREES = [(k + 3) // 2 for k in range(1, 21)]


def _fx_f_alpha_beta():
    f = fx.f_alpha_beta()
    deg = iterate_degrees(f, 20)
    mu = mu_estimate(f, (1, 0, 0), degrees=deg).mu
    cls = classify_growth(deg).growth_class
    ok = deg == F_ALPHA_BETA_DEGREES and mu == 1 and cls == "Jonquieres"
    return ok, {"expected": {"degrees": F_ALPHA_BETA_DEGREES, "mu": 1, "class": "Jonquieres"},
                "got": {"degrees": deg, "mu": mu, "class": cls}}


def _fx_sigma():
    s = fx.sigma()
    return power(s, 2).is_identity(), {"expected": "sigma^2 = id"}


HALPHEN_EXPECTED = {"kappa": Fraction(9, 4), "delta_sum": "E2 + E3 + E4 + E5 - 2E6 - 2E7", "delta_sum_square": -8}


def _fx_halphen():
    r = example_9_4_pipeline()
    got = {"kappa": r.kappa, "delta_sum": str(r.delta_sum), "delta_sum_square": r.delta_sum_square}
    ok = got == HALPHEN_EXPECTED and r.matrix_identity
    conv = lambda d: {k: rat(v) if isinstance(v, Fraction) else v for k, v in d.items()}
    return ok, {"expected": conv(HALPHEN_EXPECTED), "got": conv(got), "matrix_identity": r.matrix_identity}


def _fx_bs():
    v = bs_check(1, 5)
    return v.verdict == "KnownEmbedding" and v.relation_verified is True, v.to_json()


def _fx_gl2q():
    rep = gl2q_verify(GL2QEmbedding(1), sample_pairs(20, 0))
    return rep.ok, rep.to_json()


FIXTURES = {
    "bs-1-5": _fx_bs,
    "delpezzo6-order6": _fx_delpezzo,
    "f-alpha-beta": _fx_f_alpha_beta,
    "gl2q-k1": _fx_gl2q,
    "halphen-9-4": _fx_halphen,
    "jordan-conjugation": _fx_jordan,
    "sigma-involution": _fx_sigma,
}


def run_fixture(name):
    ok, values = FIXTURES[name]()
    return {"name": name, "pass": bool(ok), "values": values}


def cmd_fixtures(a):
    if a.list:
        return {"fixtures": sorted(FIXTURES)}
    names = sorted(FIXTURES) if a.all or not a.names else a.names
    unknown = [n for n in names if n not in FIXTURES]
    if unknown:
        raise InputError("unknown fixtures: %s" % ", ".join(unknown))
    results = [run_fixture(n) for n in sorted(names)]
    out = {"fixtures": results, "all_pass": all(r["pass"] for r in results)}
    if not out["all_pass"]:
        raise CheckFailed(out)
    return out


def build_parser():
    p = argparse.ArgumentParser(prog="cremona", description="Degree growth and normal forms of plane Cremona maps.")
    p.add_argument("--pretty", action="store_true", help="indented human-readable output")
    sub = p.add_subparsers(dest="command")

    def add(name, fn, needs_map=False, **kw):
        sp = sub.add_parser(name, **kw)
        sp.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)
        sp.add_argument("--seed", type=int, default=0)
        if needs_map:
            sp.add_argument("--map", required=True)
            sp.add_argument("--field", help="number field modulus, e.g. 't^2+t+1'")
            sp.add_argument("--bit-cap", type=int, default=DEFAULT_BIT_CAP)
        sp.set_defaults(func=fn)
        return sp

    for name, fn in (("degrees", cmd_degrees), ("classify", cmd_classify)):
        sp = add(name, fn, True)
        sp.add_argument("--k", type=int, default=20)
        sp.add_argument("--csv", action="store_true", help="emit k,degree rows instead of JSON")
    add("basepoints", cmd_basepoints, True)
    sp = add("mu", cmd_mu, True)
    sp.add_argument("--k", type=int, default=20)
    sp.add_argument("--pencil", help="point a:b:c whose pencil of lines is preserved")
    sp = add("persistence", cmd_persistence, True)
    sp.add_argument("--inverse", help="map file with the inverse")
    sp.add_argument("--N", type=int, default=6)
    sp.add_argument("--pencil")
    sp = add("kappa", cmd_kappa)
    sp.add_argument("--m", type=int, default=1)
    sp.add_argument("--delta")
    sp.add_argument("--r", type=int, default=9)
    sp.add_argument("--example", action="store_true", help="run the order-4 rotation example")
    sp = add("lattice", cmd_lattice)
    sp.add_argument("--lam")
    sp.add_argument("--delta")
    sp.add_argument("--m", type=int, default=1)
    sp.add_argument("--n", type=int, default=10)
    sp.add_argument("--r", type=int, default=9)
    sp.add_argument("--parity")
    sp = add("conj-diag", cmd_conj_diag)
    sp.add_argument("--torus", required=True, help="'torus: N=5, free=2'")
    sp.add_argument("--psi", nargs=2, required=True, metavar="CONST")
    sp.add_argument("--psi2", nargs="+", metavar="CONST")
    sp.add_argument("--mn", nargs=2, type=int)
    sp.add_argument("--almost", action="store_true")
    sp.add_argument("--bound", type=int, default=50)
    add("reduce", cmd_reduce, True)
    sp = add("bs", cmd_bs)
    sp.add_argument("m", type=int)
    sp.add_argument("n", type=int)
    sp = add("gl2q", cmd_gl2q)
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--chi", default="")
    sp.add_argument("--verify", type=int, default=0)
    sp = add("fixtures", cmd_fixtures)
    sp.add_argument("names", nargs="*")
    sp.add_argument("--all", action="store_true")
    sp.add_argument("--list", action="store_true")
    return p


def _pretty(obj, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                lines.append("%s%s:" % (pad, k))
                lines.extend(_pretty(v, indent + 1))
            else:
                lines.append("%s%s: %s" % (pad, k, json.dumps(v)))
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and v:
                lines.append("%s-" % pad)
                lines.extend(_pretty(v, indent + 1))
            else:
                lines.append("%s- %s" % (pad, json.dumps(v)))
    else:
        lines.append(pad + json.dumps(obj))
    return lines


def emit_csv(degrees, stream):
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(["k", "degree"])
    w.writerows(enumerate(degrees, 1))


def emit(payload, pretty, stream):
    out = dict(payload)
    out["report_schema_version"] = report_schema_version()
    if pretty:
        stream.write("\n".join(_pretty(out)) + "\n")
    else:
        stream.write(json.dumps(out, sort_keys=True) + "\n")


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    if not getattr(args, "command", None):
        parser.print_usage(stderr)
        return 2
    pretty = getattr(args, "pretty", False)
    try:
        payload = args.func(args)
    except CheckFailed as exc:
        emit(exc.payload, pretty, stdout)
        stderr.write("error: a verified property failed\n")
        return 1
    except INPUT_ERRORS as exc:
        stderr.write("input error: %s\n" % exc)
        return 2
    except COMPUTE_ERRORS as exc:
        stderr.write("computation error: %s: %s\n" % (type(exc).__name__, exc))
        return 1
    if getattr(args, "csv", False):
        emit_csv(payload["degrees"], stdout)
    else:
        emit(payload, pretty, stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
