"""Command line front end: ``modgray map|verify|code|fixtures``.

Exit codes: 0 success or verdict true, 1 verdict false, 2 usage or domain
error, 3 enumeration cap exceeded.
"""

import argparse
import hashlib
import json
import math
import os
import sys

import numpy as np

from . import catalog, codes, formats, graymaps
from .graymaps import GrayMapError, Layout
from .ring import RingError
from .weights import TrivialCodeError, WeightKind, min_weight

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


class Report:
    """Collects the result of one command; rendered as text or JSON."""

    def __init__(self, argv):
        self.command = list(argv)
        self.inputs = []
        self.lines = []
        self.result = None
        self.violations = []
        self.exit_status = EXIT_OK

    def add_input(self, obj):
        self.inputs.append(obj)

    def say(self, *lines):
        self.lines.extend(lines)

    def digest(self):
        blob = json.dumps([self.command, self.inputs], sort_keys=True, default=_jsonable)
        return hashlib.sha256(blob.encode()).hexdigest()

    def as_dict(self):
        return {
            "command": self.command,
            "inputs_digest": self.digest(),
            "result": _jsonable(self.result),
            "violations": _jsonable(self.violations),
            "exit_status": self.exit_status,
        }

    def render(self, as_json):
        if as_json:
            return json.dumps(self.as_dict(), sort_keys=True) + "\n"
        text = "\n".join(self.lines)
        return text + "\n" if text and not text.endswith("\n") else text


def _jsonable(x):
    if isinstance(x, np.ndarray):
        return x.tolist()
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (np.floating,)):
        return float(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


# --- input helpers ------------------------------------------------------


def _load_matrix(ref):
    """A fixture name or a path to a matrix file -> (MatrixFile, fixture name or None)."""
    if ref in catalog.list_fixtures():
        fx = catalog.get_fixture(ref)
        if not isinstance(fx.payload, formats.MatrixFile):
            raise UsageError(f"fixture {ref} is a map table, not a matrix")
        return fx.payload, ref
    if not os.path.exists(ref):
        raise UsageError(f"{ref!r} is neither a fixture name nor a readable file")
    mf = formats.load(ref)
    if not isinstance(mf, formats.MatrixFile):
        raise UsageError(f"{ref} is a map table, not a matrix")
    return mf, None


def _cap(args):
    if getattr(args, "force", False):
        return math.inf
    return getattr(args, "cap", None)


def _select_map(args):
    s = args.s
    which = args.which
    try:
        if which == "eta":
            return graymaps.eta(s)
        if which == "xi":
            return graymaps.xi(s)
        if which == "carlet":
            return graymaps.carlet(args.p, s)
        if which == "compose":
            return graymaps.compose_modular(s)
        if which == "vega":
            return graymaps.vega_map(s)
    except RingError as exc:
        raise GrayMapError(str(exc)) from None
    raise UsageError(f"unknown map {which!r}")


def _fmt_row(row):
    return " ".join(str(int(x)) for x in row)


# --- map ----------------------------------------------------------------


def cmd_map(args, rep):
    gmap = _select_map(args)
    layout = Layout(args.layout)
    rep.add_input({"map": gmap.name, "layout": layout.value})
    if args.value is not None:
        img = gmap(args.value)
        rep.result = list(img)
        rep.say(_fmt_row(img))
        return
    if args.vector is not None:
        v = [int(x) for x in args.vector.replace(",", " ").split()]
        img = graymaps.extend(gmap, np.array(v, dtype=np.int64), layout)
        rep.result = img
        rep.say(_fmt_row(img))
        return
    mf, fixture = _load_matrix(args.matrix)
    rep.add_input(formats.dumps(mf))
    if mf.spec != gmap.domain:
        raise GrayMapError(f"{gmap.name} acts on {gmap.domain}, matrix is over {mf.spec}")
    out = graymaps.extend(gmap, mf.matrix, layout)
    rep.result = out
    meta = {}
    if fixture:
        note = mf.meta.get("note")
        if note:
            meta["note"] = note
        for fx in catalog.fixtures_from(fixture):
            same = fx.matrix.shape == out.shape and np.array_equal(fx.matrix, out)
            meta[f"fixture {fx.name}"] = "matches" if same else "differs"
            if fx.meta.get("note"):
                meta["label"] = fx.meta["note"]
            rep.violations.extend([] if same else [f"output differs from {fx.name}"])
    rep.say(formats.dump_matrix(gmap.codomain, out, meta).rstrip("\n"))


# --- verify -------------------------------------------------------------


def cmd_verify(args, rep):
    what = args.what
    if what == "isometry":
        gmap = _select_map(args)
        src = WeightKind.parse(args.src_weight or args.weight)
        dst = WeightKind.parse(args.dst_weight or args.weight)
        rep.add_input({"map": gmap.name, "layout": args.layout, "n": args.length, "src": src.value, "dst": dst.value})
        r = graymaps.verify_isometry(gmap, Layout(args.layout), src, dst, n=args.length, cap=_cap(args))
        rep.result = {"checked_pairs": r.checked_pairs, "verdict": r.verdict}
        rep.violations = [list(v) for v in r.violations]
        rep.say(r.summary())
        for u, v, lhs, rhs in r.violations[: args.show]:
            rep.say(f"  violation u={u} v={v}: source {lhs}, image {rhs}")
        rep.exit_status = EXIT_OK if r.verdict else EXIT_FALSE
    elif what == "composition":
        rep.add_input({"s": args.s})
        r = graymaps.verify_composition_theorem(args.s)
        rep.result = {"status": r.status, "permutation": r.permutation}
        rep.say(r.summary())
        rep.exit_status = EXIT_OK if r.verdict else EXIT_FALSE
    elif what == "rm-image":
        rep.add_input({"s": args.s})
        ok = graymaps.image_is_rm2(args.s)
        rep.result = ok
        rep.say("true" if ok else "false")
        rep.exit_status = EXIT_OK if ok else EXIT_FALSE
    elif what == "basis-independence":
        if not args.matrix:
            raise UsageError("basis-independence needs a matrix (fixture name or file)")
        mf, _ = _load_matrix(args.matrix)
        rep.add_input(formats.dumps(mf))
        code = codes.LinearCode(mf.spec, mf.matrix)
        ok = graymaps.verify_mapped_basis_independence(code, Layout(args.layout), cap=_cap(args))
        rep.result = ok
        rep.say("true" if ok else "false")
        rep.exit_status = EXIT_OK if ok else EXIT_FALSE
    else:
        raise UsageError(f"unknown verifier {what!r}")


# --- code ---------------------------------------------------------------


def cmd_code(args, rep):
    mf, _ = _load_matrix(args.matrix)
    rep.add_input(formats.dumps(mf))
    code = codes.LinearCode(mf.spec, mf.matrix)
    spec = code.spec
    op = args.op
    if op == "standard-form":
        sf = codes.standard_form(code)
        rep.result = {"profile": sf.profile, "permutation": sf.column_permutation, "matrix": sf.matrix}
        rep.say(f"profile: {_fmt_row(sf.profile)}", f"permutation: {_fmt_row(sf.column_permutation)}")
        rep.say(formats.dump_matrix(spec, sf.matrix.reshape(-1, code.n)).rstrip("\n"))
    elif op == "cardinality":
        sf = codes.standard_form(code)
        c = codes.cardinality(sf)
        rep.result = c
        rep.say(str(c))
    elif op == "dual":
        d = codes.dual(code)
        sf = codes.standard_form(d)
        gen = sf.unpermute(sf.matrix).reshape(-1, code.n)
        rep.result = {"generator": gen, "cardinality": codes.cardinality(sf)}
        rep.say(formats.dump_matrix(spec, gen).rstrip("\n"))
    elif op == "enumerate":
        words = codes.enumerate_codewords(code, cap=_cap(args))
        words = words[np.lexsort(words.T[::-1])] if len(words) else words
        rep.result = words
        rep.say(*(_fmt_row(w) for w in words))
    elif op == "min-distance":
        words = codes.enumerate_codewords(code, cap=_cap(args))
        kinds = [WeightKind.parse(args.weight)] if args.weight else list(WeightKind)
        res = {}
        for k in kinds:
            try:
                res[k.value] = min_weight(words, spec, k)
            except TrivialCodeError:
                res[k.value] = None
        rep.result = res
        if args.weight:
            v = res[kinds[0].value]
            rep.say("trivial code" if v is None else _fmt_num(v))
        else:
            rep.say(*(f"{k}: {'trivial code' if v is None else _fmt_num(v)}" for k, v in res.items()))
    elif op == "self-orthogonal":
        so = codes.is_self_orthogonal(code)
        sd = codes.is_self_dual(code)
        rep.result = {"self_orthogonal": so, "self_dual": sd}
        rep.say(f"self-orthogonal: {str(so).lower()}", f"self-dual: {str(sd).lower()}")
    else:
        raise UsageError(f"unknown code operation {op!r}")


def _fmt_num(v):
    if isinstance(v, float):
        return f"{v:.9f}".rstrip("0").rstrip(".")
    return str(v)


# --- fixtures -----------------------------------------------------------


def cmd_fixtures(args, rep):
    if args.action == "list":
        names = catalog.list_fixtures()
        rep.result = list(names)
        for n in names:
            fx = catalog.get_fixture(n)
            rep.say(f"{n}\t{fx.kind}\t{fx.spec}")
    else:
        if not args.name:
            raise UsageError("fixtures show needs a name")
        fx = catalog.get_fixture(args.name)
        rep.result = {"name": fx.name, "kind": fx.kind, "text": fx.text}
        rep.say(fx.text.rstrip("\n"))


# --- parser -------------------------------------------------------------


def _map_choice(p, required=True):
    g = p.add_mutually_exclusive_group(required=required)
    for name in ("eta", "xi", "carlet", "compose", "vega"):
        g.add_argument(f"--{name}", dest="which", action="store_const", const=name)
    p.add_argument("-s", type=int, required=True, help="exponent s of Z_{p^s}")
    p.add_argument("-p", type=int, default=2, help="prime for --carlet (default 2)")
    p.add_argument("--layout", choices=[l.value for l in Layout], default="blockwise")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a single JSON report")
    common.add_argument("--cap", type=int, default=None, help="enumeration cap (default $RINGCODE_CAP or 2^26)")
    common.add_argument("--force", action="store_true", help="ignore the enumeration cap")

    parser = argparse.ArgumentParser(prog="modgray", description="Gray maps and linear codes over Z_{p^s}")
    sub = parser.add_subparsers(dest="command", required=True)

    pm = sub.add_parser("map", parents=[common], help="apply a Gray map")
    _map_choice(pm)
    src = pm.add_mutually_exclusive_group(required=True)
    src.add_argument("--value", type=int)
    src.add_argument("--vector", help="entries separated by spaces or commas")
    src.add_argument("--matrix", help="fixture name or matrix file")
    pm.set_defaults(func=cmd_map)

    pv = sub.add_parser("verify", parents=[common], help="exhaustive checks")
    pv.add_argument("what", choices=["isometry", "composition", "rm-image", "basis-independence"])
    pv.add_argument("matrix", nargs="?", help="matrix for basis-independence")
    g = pv.add_mutually_exclusive_group()
    for name in ("eta", "xi", "carlet", "compose", "vega"):
        g.add_argument(f"--{name}", dest="which", action="store_const", const=name)
    pv.set_defaults(which="eta")
    pv.add_argument("-s", type=int, default=None)
    pv.add_argument("-p", type=int, default=2)
    pv.add_argument("--layout", choices=[l.value for l in Layout], default="blockwise")
    pv.add_argument("--weight", default="homogeneous")
    pv.add_argument("--src-weight", default=None)
    pv.add_argument("--dst-weight", default=None)
    pv.add_argument("--length", type=int, default=1, help="vector length n for isometry checks")
    pv.add_argument("--show", type=int, default=10, help="violations to print")
    pv.set_defaults(func=cmd_verify)

    pc = sub.add_parser("code", parents=[common], help="operations on a linear code")
    pc.add_argument("op", choices=["standard-form", "dual", "enumerate", "min-distance", "cardinality", "self-orthogonal"])
    pc.add_argument("matrix", help="fixture name or matrix file")
    pc.add_argument("--weight", default=None)
    pc.set_defaults(func=cmd_code)

    pf = sub.add_parser("fixtures", parents=[common], help="list or show shipped fixtures")
    pf.add_argument("action", nargs="?", choices=["list", "show"], default="list")
    pf.add_argument("name", nargs="?")
    pf.set_defaults(func=cmd_fixtures)
    return parser


def main(argv=None, stdout=None, stderr=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    rep = Report(["modgray", *argv])
    if args.command == "verify" and args.what != "basis-independence" and args.s is None:
        print("modgray: error: verify needs -s", file=stderr)
        return EXIT_USAGE
    try:
        args.func(args, rep)
    except codes.CapExceeded as exc:
        rep.exit_status = EXIT_CAP
        rep.result = {"error": str(exc)}
        print(f"modgray: {exc} (use --force or --cap)", file=stderr)
    except (UsageError, GrayMapError, RingError, formats.FormatError, catalog.UnknownFixture, ValueError) as exc:
        rep.exit_status = EXIT_USAGE
        rep.result = {"error": str(exc)}
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"modgray: error: {msg}", file=stderr)
    if args.json or rep.exit_status in (EXIT_OK, EXIT_FALSE):
        stdout.write(rep.render(args.json))
    return rep.exit_status


if __name__ == "__main__":
    sys.exit(main())
