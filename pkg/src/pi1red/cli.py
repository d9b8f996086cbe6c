"""Command-line front end.

Exit codes: 0 success, 1 mathematical failure (a non-exact sequence, a
failed suite), 2 input error (bad JSON, schema or axiom violation, unknown
catalog name).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional, Sequence, Union

from .abcoh import ab_cohomology_profile
from .gammamod import FiniteGroup, GammaModule, GroupError, group_cohomology
from .lattice import LatticeError, NotExact, render_sequence
from .resolutions import (ResolutionError, SESData, TResolution, check_pi1_exact,
                          fundamental_sequence, m_resolution, pi1_of_resolution,
                          qiso_certificate, t_resolution_from_torus, t_resolution_generic,
                          validate_resolution)
from .rootdata import (CATALOG_NAMES, RootDatum, RootDatumError, fundamental_invariants,
                       parse_group_spec)

EXIT_OK, EXIT_MATH, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    """Malformed or invalid input; ``path`` locates the problem inside the JSON."""

    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.path = path


class MathFailure(Exception):
    pass


# ------------------------------------------------------------------------------
# input
# ------------------------------------------------------------------------------

def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def _datum(data, path: str) -> RootDatum:
    if not isinstance(data, dict):
        raise InputError("expected an object", path)
    try:
        return RootDatum.from_json(data)
    except RootDatumError as exc:
        raise InputError(str(exc), path) from exc
    except (GroupError, LatticeError, TypeError, ValueError, KeyError) as exc:
        raise InputError(f"schema: {exc}", path) from exc


def parse_input(path: str) -> Union[RootDatum, SESData, TResolution, GammaModule]:
    """Read a JSON file and return the object it describes, validated."""
    data = _load_json(path)
    if not isinstance(data, dict):
        raise InputError("top level must be an object")
    if any(k in data for k in ("G1", "G2", "G3")):
        for key in ("G1", "G2", "G3", "iota", "q", "partition"):
            if key not in data:
                raise InputError(f"schema: missing field '{key}'", "$")
        for key in ("G1", "G2", "G3"):
            _datum(data[key], f"$.{key}")
        part = data["partition"]
        if not isinstance(part, dict) or "sub" not in part or "lift" not in part:
            raise InputError("schema: partition needs 'sub' and 'lift'", "$.partition")
        try:
            return SESData.from_json(data)
        except ResolutionError as exc:
            raise MathFailure(str(exc)) from exc
        except (TypeError, ValueError, KeyError) as exc:
            raise InputError(f"schema: {exc}") from exc
    if "base" in data and "total" in data:
        _datum(data["base"], "$.base")
        _datum(data["total"], "$.total")
        try:
            return validate_resolution(TResolution.from_json(data))
        except ResolutionError as exc:
            raise MathFailure(str(exc)) from exc
        except (LatticeError, TypeError, ValueError, KeyError) as exc:
            raise InputError(f"schema: {exc}") from exc
    if "carrier" in data and "action" in data:
        try:
            group = _finite_group(data["group"])
            return GammaModule.from_json({**data, "group": group.to_json()})
        except (GroupError, LatticeError, TypeError, ValueError, KeyError) as exc:
            raise InputError(f"schema: {exc}") from exc
    return _datum(data, "$")


def _gamma_from_file(path: str):
    """``{"group": <table object> | {"cyclic": n} | {"symmetric": n}, "matrices": [...]}``."""
    data = _load_json(path)
    if not isinstance(data, dict) or "group" not in data or "matrices" not in data:
        raise InputError("schema: need 'group' and 'matrices'")
    return _finite_group(data["group"]), data["matrices"]


def _finite_group(g) -> FiniteGroup:
    """A multiplication table object, or the shorthand ``{"cyclic": n}`` / ``{"symmetric": n}``."""
    try:
        if isinstance(g, dict) and "cyclic" in g:
            return FiniteGroup.cyclic(int(g["cyclic"]))
        if isinstance(g, dict) and "symmetric" in g:
            return FiniteGroup.symmetric(int(g["symmetric"]))
        return FiniteGroup.from_json(g)
    except (GroupError, TypeError, ValueError, KeyError) as exc:
        raise InputError(f"schema: {exc}", "$.group") from exc


def _group_arg(words: Sequence[str], gamma: Optional[str] = None) -> RootDatum:
    if len(words) == 1 and (words[0].endswith(".json") or os.path.isfile(words[0])):
        obj = parse_input(words[0])
        if not isinstance(obj, RootDatum):
            raise InputError("expected a root datum file")
        d = obj
    else:
        try:
            d = parse_group_spec(list(words))
        except RootDatumError as exc:
            raise InputError(str(exc)) from exc
    if gamma:
        group, mats = _gamma_from_file(gamma)
        try:
            d = d.with_gamma(group, mats)
        except (RootDatumError, GroupError) as exc:
            raise InputError(str(exc), "$.matrices") from exc
    return d


def _resolution(d: RootDatum, kind: str) -> TResolution:
    if kind == "generic":
        return t_resolution_generic(d)
    return t_resolution_from_torus(d)


# ------------------------------------------------------------------------------
# verbs
# ------------------------------------------------------------------------------

def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_pi1(args) -> int:
    d = _group_arg(args.group, args.gamma)
    if args.resolution == "m":
        G = m_resolution(d).pi1
    else:
        G = pi1_of_resolution(_resolution(d, args.resolution))
    _emit(args, str(G), {"group": d.name, "pi1": str(G), "free_rank": G.free_rank,
                         "torsion": list(G.torsion), "resolution": args.resolution})
    return EXIT_OK


def cmd_invariants(args) -> int:
    d = _group_arg(args.group, args.gamma)
    inv = fundamental_invariants(d)
    rows = [
        ("pi1", str(inv.pi1)),
        ("mu*", str(inv.mu_star)),
        ("mu1*", str(inv.mu1_star)),
        ("mu(-1)", str(inv.mu_minus_one)),
        ("Z(G)*", str(inv.center_chars)),
        ("(G^tor)_*", str(inv.cochar_torus_quotient)),
        ("semisimple", "yes" if inv.is_semisimple else "no"),
        ("simply connected", "yes" if inv.is_simply_connected else "no"),
        ("adjoint", "yes" if inv.is_adjoint else "no"),
        ("mu sequence", render_sequence(inv.mu_sequence) if inv.mu_sequence else ""),
    ]
    text = "\n".join(f"{k}: {v}" for k, v in rows)
    _emit(args, text, {"group": d.name, **{k: v for k, v in rows}})
    return EXIT_OK


def cmd_resolve(args) -> int:
    d = _group_arg(args.group, args.gamma)
    if args.resolution == "m":
        m = m_resolution(d)
        text = "\n".join([f"m-resolution of {d.name or 'G'}",
                          f"mu_1*: {m.kernel_chars}", f"T_*: {m.t_star}", f"R_*: {m.r_star}",
                          f"pi1: {m.pi1}"])
        _emit(args, text, {"kind": "m", "base": d.to_json(), "total": m.total.to_json(),
                           "mu1_star": str(m.kernel_chars), "pi1": str(m.pi1)})
        return EXIT_OK
    r = _resolution(d, args.resolution)
    fs = fundamental_sequence(r)
    text = "\n".join([repr(r), f"pi1: {pi1_of_resolution(r)}", f"characters: {fs.render()}"])
    _emit(args, text, {**r.to_json(), "pi1": str(pi1_of_resolution(r))})
    return EXIT_OK


def cmd_check_exact(args) -> int:
    s = parse_input(args.path)
    if not isinstance(s, SESData):
        raise InputError("expected a short exact sequence file")
    try:
        seq = check_pi1_exact(s)
    except NotExact as exc:
        raise MathFailure(str(exc)) from exc
    text = "exact\n" + render_sequence(seq)
    _emit(args, text, {"exact": True, "sequence": render_sequence(seq)})
    return EXIT_OK


def cmd_qiso(args) -> int:
    d = _group_arg(args.group, args.gamma)
    r = _resolution(d, args.resolution if args.resolution != "m" else "torus")
    cert = qiso_certificate(r)
    (c0, c1), (t0, t1) = cert.cohomology()
    text = "\n".join([f"center complex: H^0 = {c0}, H^1 = {c1}",
                      f"torus complex:  H^0 = {t0}, H^1 = {t1}",
                      "quasi-isomorphic"])
    _emit(args, text, {"group": d.name, "center": [str(c0), str(c1)],
                       "torus": [str(t0), str(t1)], "quasi_isomorphic": True})
    return EXIT_OK


def cmd_cohomology(args) -> int:
    if len(args.group) == 1 and os.path.isfile(args.group[0]):
        obj = parse_input(args.group[0])
        if isinstance(obj, GammaModule):
            values = {i: group_cohomology(obj, i) for i in (0, 1, 2)}
            text = "\n".join(f"H^{i} = {v}" for i, v in values.items())
            _emit(args, text, {"H": {str(i): str(v) for i, v in values.items()}})
            return EXIT_OK
    d = _group_arg(args.group, args.gamma)
    if args.resolution == "m":
        raise InputError("cohomology needs a t-resolution (torus or generic)")
    prof = ab_cohomology_profile(d, _resolution(d, args.resolution))
    _emit(args, prof.render(), prof.to_json())
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.action == "list":
        _emit(args, "\n".join(CATALOG_NAMES), {"catalog": CATALOG_NAMES})
        return EXIT_OK
    if not args.spec:
        raise InputError("catalog show needs a group, e.g. 'catalog show PGL 3'")
    d = _group_arg(args.spec)
    _emit(args, json.dumps(d.to_json(), sort_keys=True), d.to_json())
    return EXIT_OK


def cmd_verify_suite(args) -> int:
    from .suites import run_suites
    results = run_suites(args.only or None, seed=args.seed)
    if args.json:
        print(json.dumps([{"criterion": r.number, "title": r.title, "passed": r.passed,
                           "detail": r.detail} for r in results], sort_keys=True))
    else:
        for r in results:
            print(r.line())
    return EXIT_OK if all(r.passed for r in results) else EXIT_MATH


# ------------------------------------------------------------------------------
# driver
# ------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--gamma", metavar="FILE", help="Galois action as JSON")
    common.add_argument("--resolution", choices=("torus", "generic", "m"), default="torus")
    common.add_argument("--seed", type=int, default=0, help="seed for the fuzz suites")

    p = argparse.ArgumentParser(prog="pi1red",
                                description="Algebraic fundamental groups from root data.")
    sub = p.add_subparsers(dest="verb", metavar="VERB", required=True)
    group_help = "catalog spec (e.g. 'PGL 3', 'SC E 6') or a root datum JSON file"
    for verb, fn, helptext in (("pi1", cmd_pi1, "fundamental group"),
                               ("invariants", cmd_invariants, "derived invariants"),
                               ("resolve", cmd_resolve, "build a resolution"),
                               ("qiso", cmd_qiso, "zig-zag of quasi-isomorphisms"),
                               ("cohomology", cmd_cohomology, "hypercohomology profile")):
        sp = sub.add_parser(verb, parents=[common], help=helptext)
        sp.add_argument("group", nargs="+", help=group_help)
        sp.set_defaults(func=fn)
    sp = sub.add_parser("check-exact", parents=[common], help="exactness of pi_1 on a sequence")
    sp.add_argument("path")
    sp.set_defaults(func=cmd_check_exact)
    sp = sub.add_parser("catalog", parents=[common], help="list or show catalog groups")
    sp.add_argument("action", choices=("list", "show"))
    sp.add_argument("spec", nargs="*")
    sp.set_defaults(func=cmd_catalog)
    sp = sub.add_parser("verify-suite", parents=[common], help="run the property suites")
    sp.add_argument("--only", type=int, nargs="+", choices=range(1, 9), metavar="N")
    sp.set_defaults(func=cmd_verify_suite)
    return p


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except MathFailure as exc:
        print(f"not exact: {exc}" if args.verb == "check-exact" else f"failed: {exc}")
        return EXIT_MATH
    except (NotExact, ResolutionError, LatticeError) as exc:
        print(f"failed: {exc}")
        return EXIT_MATH


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
