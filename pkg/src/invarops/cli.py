"""Command-line driver for validations and theorem checks.

Every subcommand takes a setup (a JSON file path or a shipped preset
name) and prints a deterministic structured text report, or the same
content as JSON with --json. Exit codes: 0 all checks pass, 1 a
mathematical property failed (non-reductive, non-commutative, not
generated, unstable operator), 2 input or usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import coset, lie
from .expr import ExprError, parse_expr, poly_of_ast, setup_vocabulary, words_of_ast
from .pbw import DegreeCapError, pbw_from_vector_words, symmetrize
from .setupio import SetupFileError, load_preset_file, load_setup_file, preset_names
from .sympoly import SymPoly, embed_poly


class _Report:
    def __init__(self, command: str, setup_label: str):
        self.lines: list[str] = []
        self.data: dict = {"command": command, "setup": setup_label}

    def line(self, text: str) -> None:
        self.lines.append(text)

    def set(self, key: str, value) -> None:
        self.data[key] = value

    def emit(self, as_json: bool) -> None:
        if as_json:
            print(json.dumps(self.data, indent=2, sort_keys=True))
        else:
            print("\n".join(self.lines))


def _semantics_note(setup) -> str:
    return f"connected-H semantics; component reps applied: {len(setup.component_reps)}"


def _render_vector(names, coords) -> str:
    parts = []
    for nm, c in zip(names, coords):
        if c == 0:
            continue
        body = nm if abs(c) == 1 else f"{abs(c)}*{nm}"
        parts.append((c < 0, body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] else "") + parts[0][1]
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out


def _load(arg: str):
    if os.path.exists(arg):
        return load_setup_file(arg)
    if arg in preset_names():
        return load_preset_file(arg)
    raise SetupFileError(
        f"{arg!r} is neither a file nor a preset; presets: {', '.join(preset_names())}")


def _parse_words(setup, text):
    vocab = setup_vocabulary(setup)
    ast = parse_expr(text, vocab.keys())
    items = [(c, [vocab[nm] for nm in word]) for c, word in words_of_ast(ast)]
    return pbw_from_vector_words(setup, items)


def _parse_poly_g(setup, text) -> SymPoly:
    vocab = setup_vocabulary(setup)
    ast = parse_expr(text, vocab.keys())
    variables = {
        nm: SymPoly.linear(setup.g_frame, setup.to_adapted(v)) for nm, v in vocab.items()
    }
    return poly_of_ast(ast, variables, setup.g_frame)


def _parse_poly_m(setup, text) -> SymPoly:
    names = setup.adapted_names[: setup.r]
    ast = parse_expr(text, names)
    variables = {nm: SymPoly.variable(setup.m_frame, i) for i, nm in enumerate(names)}
    return poly_of_ast(ast, variables, setup.m_frame)


def cmd_check(setup, meta, args, rep: _Report) -> int:
    alg = setup.algebra
    n = alg.dim
    triples = n * (n - 1) * (n - 2) // 6
    rep.line(f"setup: {setup.name or '(unnamed)'} (n={n}, r={setup.r})")
    rep.line("adapted basis: " + ", ".join(setup.adapted_names))
    rep.line(f"structure: ok ({triples} Jacobi triples checked)")
    rep.line(f"h subalgebra: ok (dim {setup.h.dim})")
    source = "auto-selected by column pivoting" if meta.get("auto_complement") else "from file"
    rep.line(f"complement: ok (dim {setup.r}, {source})")
    chi_kind = "zero" if all(v == 0 for v in setup.chi.values) else "nonzero"
    rep.line(f"character: ok ({chi_kind})")
    rep.line(f"component reps: {len(setup.component_reps)} valid"
             + (f" ({', '.join(meta['rep_names'])})" if meta.get("rep_names") else ""))
    if meta.get("extra_subspaces"):
        labels = ", ".join(f"{k} (dim {v.dim})" for k, v in meta["extra_subspaces"].items())
        rep.line(f"informational subspaces: {labels}")
    rep.set("n", n)
    rep.set("r", setup.r)
    rep.set("adapted_basis", list(setup.adapted_names))
    rep.set("jacobi_triples_checked", triples)
    rep.set("component_reps", len(setup.component_reps))
    rep.set("auto_complement", bool(meta.get("auto_complement")))
    rep.set("ok", True)
    return 0


def cmd_normalize(setup, meta, args, rep: _Report) -> int:
    u = _parse_words(setup, args.expr)
    rep.line(f"input: {args.expr}")
    rep.line(f"normal form: {u.render()}")
    rep.set("normal_form", u.render())
    rep.set("ok", True)
    return 0


def cmd_symmetrize(setup, meta, args, rep: _Report) -> int:
    p = _parse_poly_g(setup, args.expr)
    u = symmetrize(setup, p, cap=args.cap)
    rep.line(f"input: {args.expr}")
    rep.line(f"symmetrized: {u.render()}")
    rep.set("symmetrized", u.render())
    rep.set("ok", True)
    return 0


def cmd_project(setup, meta, args, rep: _Report) -> int:
    u = _parse_words(setup, args.expr)
    v = coset.project_mod_ideal(setup, u)
    rep.line(f"input: {args.expr}")
    rep.line(f"canonical form mod ideal: {v.render()}")
    rep.set("canonical_form", v.render())
    rep.set("in_ideal", v.is_zero())
    rep.set("ok", True)
    return 0


def cmd_dmod(setup, meta, args, rep: _Report) -> int:
    u = _parse_words(setup, args.expr)
    stable = coset.is_stable(setup, u, cap=args.cap)
    rep.line(f"input: {args.expr}")
    rep.line(f"stable modulo ideal: {'yes' if stable else 'no'} ({_semantics_note(setup)})")
    rep.set("stable", stable)
    rep.set("semantics", _semantics_note(setup))
    rep.set("ok", stable)
    return 0 if stable else 1


def cmd_invariants(setup, meta, args, rep: _Report) -> int:
    basis = coset.invariants_basis(setup, args.degree)
    rep.line(f"invariants of degree {args.degree} ({_semantics_note(setup)})")
    rep.line(f"dimension: {basis.dimension}")
    for p in basis.polys:
        rep.line(p.render())
    rep.set("degree", args.degree)
    rep.set("dimension", basis.dimension)
    rep.set("basis", [p.render() for p in basis.polys])
    rep.set("semantics", _semantics_note(setup))
    rep.set("ok", True)
    return 0


def cmd_reductive(setup, meta, args, rep: _Report) -> int:
    res = lie.invariant_complement(setup.algebra, setup.h, setup.component_reps)
    rep.set("semantics", _semantics_note(setup))
    if res.feasible:
        rep.line(f"reductive: yes ({_semantics_note(setup)})")
        rows = [_render_vector(setup.algebra.names, v) for v in res.complement.vectors]
        for row in rows:
            rep.line(f"invariant complement: {row}")
        rep.set("reductive", True)
        rep.set("complement", rows)
        rep.set("ok", True)
        return 0
    rep.line(f"reductive: no ({_semantics_note(setup)})")
    rep.line(res.certificate)
    rep.set("reductive", False)
    rep.set("certificate", res.certificate)
    rep.set("ok", False)
    return 1


def cmd_decompose(setup, meta, args, rep: _Report) -> int:
    rep.line(f"decomposition check up to degree {args.degree}")
    all_ok = True
    rows = []
    for d in range(args.degree + 1):
        r = coset.verify_direct_sum(setup, d, cap=max(args.cap, d))
        ok = r.ok
        all_ok = all_ok and ok
        rep.line(
            f"degree {d}: total {r.total_dim} = ideal {r.ideal_rank}"
            f" + complement {r.complement_dim}  {'ok' if ok else 'FAIL'}")
        rows.append({
            "degree": d, "total": r.total_dim, "ideal": r.ideal_rank,
            "complement": r.complement_dim, "ok": ok,
        })
    rep.line(f"result: {'pass' if all_ok else 'fail'}")
    rep.set("rows", rows)
    rep.set("ok", all_ok)
    return 0 if all_ok else 1


def cmd_commutativity(setup, meta, args, rep: _Report) -> int:
    rep.line(f"commutativity check up to degree {args.degree} ({_semantics_note(setup)})")
    rep.set("semantics", _semantics_note(setup))
    stable = coset.check_symmetrized_invariants_stable(setup, args.degree, cap=args.cap)
    rep.line(f"symmetrized invariants stable: {'yes' if stable else 'no'}")
    rep.set("invariants_stable", stable)
    if not stable:
        rep.line("commutative: not applicable")
        rep.set("commutative", None)
        rep.set("ok", False)
        return 1
    ok = coset.check_commutativity(setup, args.degree, cap=args.cap)
    rep.line(f"commutative: {'yes' if ok else 'no'}")
    rep.set("commutative", ok)
    rep.set("ok", ok)
    return 0 if ok else 1


def cmd_generation(setup, meta, args, rep: _Report) -> int:
    gens = [_parse_poly_m(setup, g) for g in args.gen]
    rep.line(f"generation check up to degree {args.degree} ({_semantics_note(setup)})")
    rep.line("generators: " + "; ".join(g.render() for g in gens))
    rep.set("semantics", _semantics_note(setup))
    rep.set("generators", [g.render() for g in gens])
    ok = coset.check_generation(setup, gens, args.degree, cap=args.cap)
    rep.line(f"generated: {'yes' if ok else 'no'}")
    rep.set("generated", ok)
    rep.set("ok", ok)
    return 0 if ok else 1


def cmd_laplace(setup, meta, args, rep: _Report) -> int:
    try:
        eps = [Fraction(tok) for tok in args.signature.split(",") if tok.strip()]
    except ValueError:
        raise ExprError("signature must be a comma-separated list of 1 and -1", 0) from None
    rep.line(f"Laplace generation check up to degree {args.degree} ({_semantics_note(setup)})")
    rep.line(f"signature: ({args.signature})")
    rep.set("semantics", _semantics_note(setup))
    rep.set("signature", [str(e) for e in eps])
    ok = coset.check_laplace_generation(setup, eps, args.degree, cap=args.cap)
    rep.line(f"generated by the signature quadratic: {'yes' if ok else 'no'}")
    rep.set("generated", ok)
    rep.set("ok", ok)
    return 0 if ok else 1


_COMMANDS = {
    "check": cmd_check,
    "normalize": cmd_normalize,
    "symmetrize": cmd_symmetrize,
    "project": cmd_project,
    "dmod": cmd_dmod,
    "invariants": cmd_invariants,
    "reductive": cmd_reductive,
    "decompose": cmd_decompose,
    "commutativity": cmd_commutativity,
    "generation": cmd_generation,
    "laplace": cmd_laplace,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="invarops",
        description="Exact invariant-operator computations on coset setups.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, expr=False, degree=False):
        p.add_argument("setup", help="setup JSON file or preset name")
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.add_argument("--cap", type=int, default=6,
                       help="symmetrization degree cap (default 6)")
        if expr:
            p.add_argument("expr", help="algebra expression")
        if degree:
            p.add_argument("--degree", type=int, required=True, help="degree bound")

    common(sub.add_parser("check", help="validate structure, subalgebra, character, reps"))
    common(sub.add_parser("normalize", help="normal form of an operator expression"), expr=True)
    common(sub.add_parser("symmetrize", help="symmetrize a polynomial expression"), expr=True)
    common(sub.add_parser("project", help="canonical form modulo the ideal"), expr=True)
    common(sub.add_parser("dmod", help="test stability modulo the ideal"), expr=True)
    common(sub.add_parser("invariants", help="basis of homogeneous invariants"), degree=True)
    common(sub.add_parser("reductive", help="search for an invariant complement"))
    common(sub.add_parser("decompose", help="direct-sum dimension checks"), degree=True)
    common(sub.add_parser("commutativity", help="pairwise commutators of symmetrized invariants"),
           degree=True)
    gen = sub.add_parser("generation", help="generation of the quotient algebra")
    common(gen, degree=True)
    gen.add_argument("--gen", action="append", required=True,
                     help="generator polynomial over the complement variables (repeatable)")
    lap = sub.add_parser("laplace", help="generation by the signature quadratic")
    common(lap, degree=True)
    lap.add_argument("--signature", required=True, help="comma-separated +-1 entries, e.g. 1,1")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        setup, meta = _load(args.setup)
    except SetupFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rep = _Report(args.command, setup.name or args.setup)
    try:
        code = _COMMANDS[args.command](setup, meta, args, rep)
    except ValueError as exc:
        # every library validation error subclasses ValueError
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rep.emit(args.json)
    return code


def console_main() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    console_main()
