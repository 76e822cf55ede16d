"""Command-line front end with deterministic text and JSON output."""
from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import __version__
from .binomials import initial_ideal
from .errors import (
    InvalidPartition,
    NotCohenMacaulay,
    NotNumerical,
    NotPointed,
    NotSimplicial,
    NotStandardGraded,
    NotSublattice,
    ParseError,
    PartitionNotConic,
    SemialgError,
    TooManyVertices,
    VerificationFailed,
)
from .homology import betti_at_degree, nerve_check, vanishing_transfer_check
from .presentation import (
    build_presentation,
    cm_check,
    cm_oracle,
    column_degree,
    is_block_resolution,
    regularity,
    verify_presentation,
)
from .semigroup import AffineSemigroup, apery_oracle_numerical

VALIDATION_ERRORS = (
    ParseError,
    NotPointed,
    InvalidPartition,
    NotNumerical,
    NotSimplicial,
    NotCohenMacaulay,
    NotStandardGraded,
    NotSublattice,
    ValueError,
)
CAP_ERRORS = (PartitionNotConic, TooManyVertices)


def parse_gens_inline(text):
    """Inline generators: columns split by ';', coordinates by ','.

    Without any ';' the entries are one-dimensional generators, matching
    the common numerical-semigroup form "8,11,18".
    """
    text = text.strip()
    if not text:
        raise ParseError("empty generator list")
    if ";" in text:
        cols = [c for c in text.split(";") if c.strip()]
        gens = []
        for ci, col in enumerate(cols):
            try:
                gens.append([int(x) for x in col.split(",")])
            except ValueError as exc:
                raise ParseError(f"column {ci + 1}: {exc}") from None
    else:
        try:
            gens = [[int(x)] for x in text.split(",")]
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    d = len(gens[0])
    for ci, g in enumerate(gens):
        if len(g) != d:
            raise ParseError(
                f"column {ci + 1} has {len(g)} coordinates, expected {d}"
            )
    return gens


def parse_input(args):
    """Resolve generators/E/caps from --input JSON and inline flags."""
    gens = None
    E = None
    field_char = 0
    q_cap = 10**6
    if args.input:
        try:
            with open(args.input, "r", encoding="utf-8") as fh:
                doc = json.load(fh)
        except OSError as exc:
            raise ParseError(f"cannot read {args.input}: {exc}") from None
        except json.JSONDecodeError as exc:
            raise ParseError(
                f"{args.input}: line {exc.lineno}, column {exc.colno}: {exc.msg}"
            ) from None
        if not isinstance(doc, dict) or "generators" not in doc:
            raise ParseError(f"{args.input}: expected an object with 'generators'")
        gens = doc["generators"]
        if not isinstance(gens, list) or not gens:
            raise ParseError(f"{args.input}: 'generators' must be a nonempty list")
        gens = [[int(x) for x in g] for g in gens]
        d = len(gens[0])
        for ci, g in enumerate(gens):
            if len(g) != d:
                raise ParseError(
                    f"{args.input}: column {ci + 1} has {len(g)} coordinates, expected {d}"
                )
        if doc.get("E") is not None:
            E = [int(i) for i in doc["E"]]
        field_char = int(doc.get("field_char", 0))
        q_cap = int(doc.get("q_cap", q_cap))
    if args.gens:
        gens = parse_gens_inline(args.gens)
    if gens is None:
        raise ParseError("no generators given; use --gens or --input")
    if getattr(args, "E", None):
        E = [int(x) for x in args.E.split(",")]
    if getattr(args, "field_char", None) is not None:
        field_char = args.field_char
    if getattr(args, "q_cap", None) is not None:
        q_cap = args.q_cap
    return gens, E, field_char, q_cap


def parse_degree(text, dim):
    try:
        a = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ParseError(f"--degree: {exc}") from None
    if len(a) != dim:
        raise ParseError(f"--degree has {len(a)} coordinates, expected {dim}")
    return a


def _block_names(S):
    s, r = S.order.s, S.order.r
    znames = ["Z" if s == 1 else f"Z{j + 1}" for j in range(s)]
    ynames = ["Y" if r == 1 else f"Y{i + 1}" for i in range(r)]
    return znames + ynames


def monomial_str(S, expo):
    names = _block_names(S)
    parts = []
    for name, e in zip(names, expo):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def z_monomial_str(S, zexpo):
    return monomial_str(S, tuple(zexpo) + (0,) * S.order.r)


def y_monomial_str(S, yexpo):
    return monomial_str(S, (0,) * S.order.s + tuple(yexpo))


def binomial_str(S, b):
    return f"{monomial_str(S, b.lead)} - {monomial_str(S, b.trail)}"


def element_str(a):
    if len(a) == 1:
        return str(a[0])
    return "(" + ", ".join(str(x) for x in a) + ")"


def _build(gens, E, q_cap):
    return AffineSemigroup(gens, E=E, q_cap=q_cap)


def cmd_apery(S, args):
    ap = S.apery()
    text = ", ".join(element_str(a) for a in ap)
    return {"apery": [list(a) for a in ap], "count": len(ap)}, text


def cmd_frobenius(S, args):
    f = S.frobenius()
    return {"frobenius": f}, str(f)


def cmd_groebner(S, args):
    gb = list(S.groebner_basis)
    payload = {
        "basis": [
            {
                "lead": list(g.lead),
                "trail": list(g.trail),
                "string": binomial_str(S, g),
            }
            for g in gb
        ],
        "count": len(gb),
    }
    return payload, "\n".join(binomial_str(S, g) for g in gb)


def cmd_initial(S, args):
    init = initial_ideal(S.groebner_basis)
    payload = {
        "initial_ideal": [list(m) for m in init],
        "strings": [monomial_str(S, m) for m in init],
        "count": len(init),
    }
    return payload, "\n".join(monomial_str(S, m) for m in init)


def cmd_q_set(S, args):
    q = S.standard_Q()
    payload = {
        "Q": [list(u) for u in q],
        "strings": [z_monomial_str(S, u) for u in q],
        "count": len(q),
    }
    return payload, "\n".join(z_monomial_str(S, u) for u in q)


def _column_payload(S, sigma, col):
    return {
        "entries": [
            {"row": row + 1, "sign": sign, "monomial": list(mono),
             "string": y_monomial_str(S, mono)}
            for row, sign, mono in col.entries
        ],
        "degree": list(column_degree(S, sigma, col)),
    }


def cmd_presentation(S, args):
    P = build_presentation(S)
    payload = {
        "beta0": P.beta0,
        "beta1": P.beta1,
        "sigma": [list(u) for u in P.sigma],
        "sigma_strings": [z_monomial_str(S, u) for u in P.sigma],
        "m_prime": [_column_payload(S, P.sigma, c) for c in P.m_prime],
        "n_block": [_column_payload(S, P.sigma, c) for c in P.n_block],
        "i_se_generators": [
            f"{y_monomial_str(S, l)} - {y_monomial_str(S, t)}"
            for l, t in P.i_se_gens
        ],
        "t": len(P.i_se_gens),
        "block_resolution": not P.m_prime,
    }
    lines = [
        f"beta0: {P.beta0}",
        "generators (sigma): " + ", ".join(z_monomial_str(S, u) for u in P.sigma),
        f"I_SE minimal generators (t = {len(P.i_se_gens)}):",
    ]
    for k, (l, t) in enumerate(P.i_se_gens):
        lines.append(f"  g{k + 1} = {y_monomial_str(S, l)} - {y_monomial_str(S, t)}")
    lines.append(f"M' columns ({len(P.m_prime)}):")
    for c in P.m_prime:
        ent = ", ".join(
            f"{'+' if sign > 0 else '-'}{y_monomial_str(S, mono)} @ row {row + 1}"
            for row, sign, mono in c.entries
        )
        lines.append(f"  [{ent}]  degree {element_str(column_degree(S, P.sigma, c))}")
    lines.append(
        f"N columns ({len(P.n_block)}): identity of size {P.beta0} "
        f"tensor (g1 ... g{len(P.i_se_gens)})"
    )
    lines.append(f"beta1: {P.beta1}")
    return payload, "\n".join(lines)


def cmd_verify(S, args):
    bound = Fraction(args.bound) if args.bound else None
    rep = verify_presentation(S, None, bound)
    payload = {
        "ok": rep.ok,
        "bound": str(rep.bound),
        "degrees_checked": rep.degrees_checked,
    }
    return payload, (
        f"ok: checked {rep.degrees_checked} degrees up to functional value {rep.bound}"
    )


def cmd_cm_check(S, args):
    val = cm_check(S)
    oracle = cm_oracle(S)
    payload = {"cohen_macaulay": val, "oracle": oracle}
    return payload, f"Cohen-Macaulay: {'yes' if val else 'no'} (oracle agrees: {'yes' if oracle == val else 'NO'})"


def cmd_regularity(S, args):
    v = regularity(S)
    payload = {"module_regularity": v, "ideal_regularity": v + 1}
    return payload, (
        f"regularity of the semigroup algebra as a free module: {v}\n"
        f"regularity of the defining ideal (printed-formula variant): {v + 1}"
    )


def cmd_betti(S, args):
    a = parse_degree(args.degree, S.dim)
    val = betti_at_degree(S, a, args.index, args.field_char or 0)
    payload = {"degree": list(a), "index": args.index, "dimension": val}
    return payload, str(val)


def cmd_nerve_check(S, args):
    a = parse_degree(args.degree, S.dim)
    rep = nerve_check(S, a, args.max_index, args.field_char or 0)
    payload = {
        "degree": list(a),
        "rows": [list(r) for r in rep.rows],
        "ok": rep.ok,
    }
    lines = [
        f"i={i}: nerve {dg}, divisor complex {dt}, {'equal' if eq else 'DIFFER'}"
        for i, dg, dt, eq in rep.rows
    ]
    lines.append("ok" if rep.ok else "MISMATCH")
    return payload, "\n".join(lines)


def cmd_transfer_check(S, args):
    a = parse_degree(args.degree, S.dim)
    rep = vanishing_transfer_check(S, a, args.index, args.field_char or 0)
    payload = {
        "degree": list(a),
        "index": args.index,
        "hypothesis_holds": rep.hypothesis_holds,
        "rows": [
            {"F": list(F), "degree": list(a2), "layer": layer,
             "value": val, "ok": ok}
            for F, a2, layer, val, ok in rep.rows
        ],
        "ok": rep.ok,
    }
    if not rep.hypothesis_holds:
        return payload, "hypothesis fails (ambient Betti number nonzero): vacuous"
    lines = [
        f"F={list(F)} degree {element_str(a2)} layer {layer}: {val} {'ok' if ok else 'FAIL'}"
        for F, a2, layer, val, ok in rep.rows
    ]
    lines.append("ok" if rep.ok else "FAIL")
    return payload, "\n".join(lines)


def cmd_oracle_apery(args, gens):
    vals = [g[0] for g in gens]
    if any(len(g) != 1 for g in gens):
        raise NotNumerical("oracle-apery needs one-dimensional generators")
    m = args.modulus if args.modulus is not None else min(vals)
    ap = apery_oracle_numerical(vals, m)
    payload = {"apery": ap, "modulus": m, "count": len(ap)}
    return payload, ", ".join(str(v) for v in ap)


NEEDS_DEGREE = {"betti", "nerve-check", "transfer-check"}


def make_parser():
    p = argparse.ArgumentParser(
        prog="semialg",
        description="Exact computations on pointed affine semigroups: toric "
        "Groebner bases, Apery sets, Frobenius numbers, short module "
        "presentations, Cohen-Macaulay checks, degreewise Betti numbers.",
    )
    p.add_argument("--version", action="version", version=f"semialg {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, degree=False, index=False):
        sp.add_argument("--gens", help="inline generators: columns ';', coordinates ','")
        sp.add_argument("--input", help="JSON input file with 'generators' and optional 'E'")
        sp.add_argument("--E", help="comma-separated 0-based indices of the cone block")
        sp.add_argument("--q-cap", type=int, dest="q_cap",
                        help="standard-monomial enumeration cap (default 10^6)")
        sp.add_argument("--field-char", type=int, dest="field_char",
                        help="homology coefficient field characteristic (0 = rationals)")
        sp.add_argument("--json", action="store_true", help="canonical JSON output")
        sp.add_argument("--no-timing", action="store_true",
                        help="omit the timing field from JSON output")
        if degree:
            sp.add_argument("--degree", required=True,
                            help="comma-separated element coordinates")
        if index:
            sp.add_argument("--index", type=int, required=True,
                            help="homological index (-1 = generator layer)")

    common(sub.add_parser("apery", help="Apery set relative to E"))
    common(sub.add_parser("frobenius", help="Frobenius number (numerical input)"))
    common(sub.add_parser("groebner", help="reduced toric Groebner basis"))
    common(sub.add_parser("initial", help="initial ideal generators"))
    common(sub.add_parser("q-set", help="standard monomials in the Z-variables"))
    common(sub.add_parser("presentation", help="short module presentation (M' | N)"))
    sp = sub.add_parser("verify", help="certify the presentation degreewise")
    common(sp)
    sp.add_argument("--bound", help="functional-value bound (integer or fraction)")
    common(sub.add_parser("cm-check", help="Cohen-Macaulay test (simplicial input)"))
    common(sub.add_parser("regularity", help="Castelnuovo-Mumford regularity values"))
    common(sub.add_parser("betti", help="degreewise Betti multiplicity"), degree=True, index=True)
    sp = sub.add_parser("nerve-check", help="nerve vs divisor-complex homology")
    common(sp, degree=True)
    sp.add_argument("--max-index", type=int, default=2, dest="max_index")
    common(sub.add_parser("transfer-check", help="Betti vanishing transfer"),
           degree=True, index=True)
    sp = sub.add_parser("oracle-apery", help="DP Apery oracle (no Groebner bases)")
    common(sp)
    sp.add_argument("--modulus", type=int, help="Apery modulus (default: least generator)")
    return p


COMMANDS = {
    "apery": cmd_apery,
    "frobenius": cmd_frobenius,
    "groebner": cmd_groebner,
    "initial": cmd_initial,
    "q-set": cmd_q_set,
    "presentation": cmd_presentation,
    "verify": cmd_verify,
    "cm-check": cmd_cm_check,
    "regularity": cmd_regularity,
    "betti": cmd_betti,
    "nerve-check": cmd_nerve_check,
    "transfer-check": cmd_transfer_check,
}


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    t0 = time.perf_counter_ns()
    try:
        gens, E, field_char, q_cap = parse_input(args)
        if getattr(args, "field_char", None) is None:
            args.field_char = field_char
        if args.command == "oracle-apery":
            payload, text = cmd_oracle_apery(args, gens)
        else:
            S = _build(gens, E, q_cap)
            payload, text = COMMANDS[args.command](S, args)
    except VerificationFailed as exc:
        print(f"error: verification failed: {exc}", file=sys.stderr)
        return 3
    except CAP_ERRORS as exc:
        print(f"error: cap exceeded: {exc}", file=sys.stderr)
        return 4
    except VALIDATION_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        doc = {
            "command": args.command,
            "engine": {"name": "semialg", "version": __version__},
            "input": {
                "generators": [list(g) for g in gens],
                "E": list(E) if E is not None else None,
                "field_char": args.field_char or 0,
                "q_cap": q_cap,
            },
            "result": payload,
        }
        if not args.no_timing:
            doc["timing_ms"] = (time.perf_counter_ns() - t0) // 1_000_000
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
