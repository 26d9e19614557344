"""Command-line front end: construct, specialize, verify, sieve, modules.

Every command writes one JSON document (to --out, atomically, or to stdout).
Exit codes: 0 ok, 2 invalid input, 3 capacity exceeded, 4 inconclusive.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from pathlib import Path

from . import __version__
from .constructions import (DEFAULT_SYMBOLIC_CAP, CapacityError, GenericConstruction,
                            construct_C1, construct_C2C3, construct_family)
from .descriptors import DescriptorError, parse_algebra, parse_element
from .exact_arith import rational_to_str, to_rational
from .galois_modules import (SPLIT, Character, GroupTooLarge, PatternError, TableFailure,
                             check_quad_identity, parse_cycles, parse_group,
                             perm_character, rank_growth_report, submodule_test, v_etale,
                             v_module)
from .specialize import (InadmissibleSpecialization, SamplingExhausted, SpecializedCurve,
                         default_workers, j_invariant, sample_family,
                         sample_specializations, specialize_at)
from .verify import certify_galois_Sd, independence_sieve, isogeny_decomposition_check

EXIT_OK, EXIT_INVALID, EXIT_CAPACITY, EXIT_INCONCLUSIVE = 0, 2, 3, 4
CONSTRUCTION_FORMAT = "etalecurves/construction"
CURVES_FORMAT = "etalecurves/curves"


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


# output -------------------------------------------------------------------
def dump(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def write_output(doc, out):
    text = dump(doc)
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    path = Path(out)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliError(EXIT_INVALID, f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CliError(EXIT_INVALID, f"{path} is not valid JSON: {exc}") from exc


def _expect(doc, fmt):
    if not isinstance(doc, dict) or doc.get("format") != fmt:
        raise CliError(EXIT_INVALID, f"expected a document of format {fmt!r}")
    return doc


# construct ----------------------------------------------------------------
def cmd_construct(args):
    omega = parse_algebra(args.omega)
    symbolic = False if args.no_symbolic else True
    cap = args.symbolic_cap
    kind = args.kind
    params = {"omega": args.omega, "kind": kind, "genus": args.genus, "d": args.d,
              "delta": args.delta, "symbolic_cap": cap, "symbolic": symbolic}
    if kind == "X1" and args.delta is None:
        if args.genus is None:
            raise CliError(EXIT_INVALID, "X1 needs --genus")
        if args.d is not None:
            raise CliError(EXIT_INVALID, "--d is only used with --delta or the quadratic kinds")
        gc = construct_C1(omega, args.genus, symbolic, cap)
        return {"format": CONSTRUCTION_FORMAT, "params": params,
                "construction": gc.to_json()}
    delta = parse_element(args.delta or "1", omega)
    if kind == "family" or args.d is not None or kind == "X1":
        d = args.d
        if d is None:
            raise CliError(EXIT_INVALID, f"kind {kind} with --delta needs --d")
        if args.genus is not None:
            raise CliError(EXIT_INVALID, "give either --genus or --d, not both")
        triple = construct_family(omega, delta, d, symbolic, cap)
        if kind == "family":
            return {"format": CONSTRUCTION_FORMAT, "params": params,
                    "family": [gc.to_json() for gc in triple]}
        gc = triple[("X1", "X2", "X3").index(kind)]
        return {"format": CONSTRUCTION_FORMAT, "params": params, "construction": gc.to_json()}
    if args.genus is None:
        raise CliError(EXIT_INVALID, f"{kind} needs --genus or --d")
    gc = construct_C2C3(omega, delta, args.genus, kind, symbolic, cap)
    return {"format": CONSTRUCTION_FORMAT, "params": params, "construction": gc.to_json()}


def load_constructions(path):
    doc = _expect(read_json(path), CONSTRUCTION_FORMAT)
    if "family" in doc:
        return [GenericConstruction.from_json(r) for r in doc["family"]], True
    return [GenericConstruction.from_json(doc["construction"])], False


# specialize ---------------------------------------------------------------
def _parse_t(text):
    try:
        return tuple(to_rational(v.strip()) for v in text.split(",") if v.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(EXIT_INVALID, f"cannot parse parameters {text!r}") from exc


def cmd_specialize(args):
    gcs, is_family = load_constructions(args.construction)
    params = {"construction": os.path.basename(args.construction), "seed": args.seed,
              "count": args.count, "height": args.height, "route": args.route}
    if args.t:
        t = _parse_t(args.t)
        params["t"] = [rational_to_str(v) for v in t]
        groups = [tuple(specialize_at(gc, t, args.route) for gc in gcs)]
    elif is_family:
        groups = sample_family(gcs, args.count, args.height, args.seed)
    else:
        groups = [(sc,) for sc in sample_specializations(gcs[0], args.count, args.height,
                                                         args.seed, workers=args.workers)]
    curves = [[sc.to_json() for sc in g] for g in groups]
    return {"format": CURVES_FORMAT, "params": params, "family": is_family,
            "curves": curves}


def load_curves(path):
    doc = _expect(read_json(path), CURVES_FORMAT)
    return [tuple(SpecializedCurve.from_json(r) for r in g) for g in doc["curves"]], \
        bool(doc.get("family"))


# verify / sieve ---------------------------------------------------------------
def _select(groups, index):
    if index is None:
        return list(enumerate(groups))
    if not 0 <= index < len(groups):
        raise CliError(EXIT_INVALID, f"index {index} out of range (0..{len(groups) - 1})")
    return [(index, groups[index])]


def _sieve_json(sc, args):
    if sc.genus != 1:
        return {"verdict": "unsupported", "reason": f"genus {sc.genus}"}
    try:
        res = independence_sieve(sc, args.coeff_bound, args.prime_budget,
                                 max_prime=args.max_prime, workers=args.workers)
    except ValueError as exc:
        return {"verdict": "unsupported", "reason": str(exc)}
    return res.to_json()


def _j_json(sc):
    if sc.genus != 1:
        return None
    a = j_invariant(sc, "weierstrass")
    b = j_invariant(sc, "invariants")
    return {"weierstrass": rational_to_str(a), "invariants": rational_to_str(b),
            "agree": a == b}


def cmd_verify(args, sieve_only=False):
    groups, is_family = load_curves(args.curves)
    run_galois = not sieve_only and (args.galois or not (args.sieve or args.isogeny))
    run_sieve = sieve_only or args.sieve
    run_isogeny = not sieve_only and args.isogeny
    if run_isogeny and not is_family:
        raise CliError(EXIT_INVALID, "--isogeny needs curves specialized from a family")
    certificates, inconclusive = [], False
    for idx, group in _select(groups, args.index):
        entry = {"index": idx, "members": []}
        for sc in group:
            cert = {"curve": sc.to_json()}
            if run_galois:
                g = certify_galois_Sd(sc.ell, args.galois_budget, kind=sc.kind)
                cert["galois"] = g.to_json()
                cert["zarhin"] = g.zarhin
                inconclusive |= not g.certified
            if run_sieve:
                cert["sieve"] = _sieve_json(sc, args)
                inconclusive |= cert["sieve"]["verdict"] == "inconclusive"
            if not sieve_only:
                cert["j_invariant"] = _j_json(sc)
            entry["members"].append(cert)
        if run_isogeny:
            rep = isogeny_decomposition_check(group, args.coeff_bound, args.prime_budget,
                                              run_sieve=True, max_prime=args.max_prime)
            entry["isogeny"] = rep.to_json()
            inconclusive |= rep.comparison is None or not rep.images_ok
        certificates.append(entry)
    params = {"curves": os.path.basename(args.curves), "coeff_bound": args.coeff_bound,
              "prime_budget": args.prime_budget, "max_prime": args.max_prime}
    if not sieve_only:
        params["galois_budget"] = args.galois_budget
    doc = {"format": "etalecurves/certificates", "params": params,
           "certificates": certificates}
    return doc, (EXIT_INCONCLUSIVE if inconclusive else EXIT_OK)


# modules ---------------------------------------------------------------------
def parse_subgroup(G, desc):
    if isinstance(desc, list):
        return G.subgroup([parse_cycles(s, G.degree) for s in desc])
    if not isinstance(desc, str):
        raise PatternError(f"cannot read subgroup {desc!r}")
    desc = desc.strip()
    if desc == "G":
        return G
    if desc == "1":
        return G.trivial_subgroup()
    if desc.startswith("stab:"):
        return G.stabilizer(int(desc[5:]) - 1)
    if desc.startswith("setstab:"):
        return G.set_stabilizer([int(v) - 1 for v in desc[8:].split(",")])
    if desc.startswith("gens:"):
        return G.subgroup([parse_cycles(s, G.degree) for s in desc[5:].split(";") if s.strip()])
    raise PatternError(f"cannot read subgroup {desc!r}")


def parse_character(G, desc):
    if not isinstance(desc, dict) or len(desc) != 1:
        raise PatternError(f"cannot read character {desc!r}")
    (key, val), = desc.items()
    if key == "trivial":
        return Character.trivial(G) * int(val)
    if key == "perm":
        return perm_character(G, parse_subgroup(G, val))
    if key == "v":
        return v_module(G, parse_subgroup(G, val))
    if key == "etale":
        return v_etale(G, [parse_subgroup(G, s) for s in val])
    if key == "sum":
        out = Character.zero(G)
        for part in val:
            out = out + parse_character(G, part)
        return out
    if key == "scale":
        k, inner = val
        return parse_character(G, inner) * int(k)
    raise PatternError(f"unknown character constructor {key!r}")


def run_check(G, check: dict):
    kind = check.get("check")
    if kind == "perm-character":
        chi = perm_character(G, parse_subgroup(G, check["subgroup"]))
        return {"check": kind, "character": chi.to_json()}, True
    if kind == "v-module":
        chi = v_module(G, parse_subgroup(G, check["subgroup"]))
        return {"check": kind, "character": chi.to_json()}, True
    if kind == "v-etale":
        chi = v_etale(G, [parse_subgroup(G, s) for s in check["omega"]])
        return {"check": kind, "character": chi.to_json()}, True
    if kind == "quad-identity":
        omega = [parse_subgroup(G, s) for s in check["omega"]]
        tilde = [SPLIT if t == SPLIT else [parse_subgroup(G, s) for s in t]
                 for t in check["tilde"]]
        res = check_quad_identity(G, omega, tilde)
        return {"check": kind, **res.to_json()}, res.holds
    if kind == "submodule":
        res = submodule_test(parse_character(G, check["V"]), parse_character(G, check["W"]))
        return {"check": kind, **res.to_json()}, True
    if kind == "rank-growth":
        rep = rank_growth_report(parse_character(G, check["realized"]),
                                 [parse_subgroup(G, s) for s in check["chain"]])
        return {"check": kind, **rep.to_json()}, True
    raise PatternError(f"unknown check {kind!r}")


def _load_pattern(text):
    if text is None:
        return {}
    if os.path.exists(text):
        return read_json(text)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(EXIT_INVALID, f"--pattern is neither a file nor JSON: {exc}") from exc


def cmd_modules(args):
    pattern = _load_pattern(args.pattern)
    if not isinstance(pattern, dict):
        raise CliError(EXIT_INVALID, "pattern must be a JSON object")
    group_text = args.group or pattern.get("group")
    if not group_text:
        raise CliError(EXIT_INVALID, "no group given")
    G = parse_group(group_text)
    if args.check:
        checks = [dict(pattern, check=args.check)]
    else:
        checks = pattern.get("checks")
        if not checks:
            raise CliError(EXIT_INVALID, "no checks given")
    results, ok = [], True
    for check in checks:
        res, holds = run_check(G, check)
        results.append(res)
        ok &= holds
    return {"format": "etalecurves/modules", "group": group_text, "order": G.order,
            "all_hold": ok, "results": results}


# parser ----------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="etalecurves", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a generic construction record")
    c.add_argument("--omega", required=True,
                   help="algebra: 'split:10', 'x^10-2' or ';'-separated factors")
    c.add_argument("--kind", default="X1", choices=["X1", "X2", "X3", "family"])
    c.add_argument("--genus", type=int)
    c.add_argument("--d", type=int, help="degree parameter (n = 2d+2) for quadratic kinds")
    c.add_argument("--delta", help="unit of the algebra, one polynomial per factor")
    c.add_argument("--no-symbolic", action="store_true")
    c.add_argument("--symbolic-cap", type=int, default=DEFAULT_SYMBOLIC_CAP)
    c.add_argument("--out")

    s = sub.add_parser("specialize", help="specialize a construction record")
    s.add_argument("--construction", required=True)
    s.add_argument("--t", help="explicit parameters 't1,t2,...'")
    s.add_argument("--count", type=int, default=5)
    s.add_argument("--height", type=int, default=10)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--route", default="auto", choices=["auto", "symbolic", "numeric"])
    s.add_argument("--workers", type=int, default=None)
    s.add_argument("--out")

    for name, help_ in (("verify", "certificates for specialized curves"),
                        ("sieve", "independence sieve only")):
        v = sub.add_parser(name, help=help_)
        v.add_argument("--curves", required=True)
        v.add_argument("--index", type=int)
        v.add_argument("--coeff-bound", type=int, default=5)
        v.add_argument("--prime-budget", type=int, default=200)
        v.add_argument("--max-prime", type=int, default=10 ** 5)
        v.add_argument("--workers", type=int, default=None)
        v.add_argument("--out")
        if name == "verify":
            v.add_argument("--galois", action="store_true")
            v.add_argument("--sieve", action="store_true")
            v.add_argument("--isogeny", action="store_true")
            v.add_argument("--galois-budget", type=int, default=100)

    m = sub.add_parser("modules", help="permutation-character checks")
    m.add_argument("--group", help="'S4', 'A5', 'W4' or 'n: (1,2); (1,2,3)'")
    m.add_argument("--check", choices=["perm-character", "v-module", "v-etale",
                                       "quad-identity", "submodule", "rank-growth"])
    m.add_argument("--pattern", help="JSON text or file")
    m.add_argument("--out")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "workers", None) is None and hasattr(args, "workers"):
        args.workers = default_workers()
    code = EXIT_OK
    try:
        if args.command == "construct":
            doc = cmd_construct(args)
        elif args.command == "specialize":
            doc = cmd_specialize(args)
        elif args.command == "verify":
            doc, code = cmd_verify(args)
        elif args.command == "sieve":
            doc, code = cmd_verify(args, sieve_only=True)
        else:
            doc = cmd_modules(args)
    except CliError as exc:
        return _fail(exc.code, type(exc).__name__, str(exc))
    except (CapacityError, GroupTooLarge, TableFailure) as exc:
        return _fail(EXIT_CAPACITY, type(exc).__name__, str(exc))
    except SamplingExhausted as exc:
        return _fail(EXIT_INCONCLUSIVE, type(exc).__name__, str(exc))
    except (DescriptorError, PatternError, InadmissibleSpecialization, KeyError,
            ValueError) as exc:
        return _fail(EXIT_INVALID, type(exc).__name__, str(exc))
    write_output(doc, args.out)
    return code


def _fail(code, kind, message) -> int:
    sys.stderr.write(dump({"error": {"exit_code": code, "type": kind, "message": message}}))
    return code


if __name__ == "__main__":
    sys.exit(main())
