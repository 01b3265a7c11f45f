"""Setup files: JSON descriptions of a Lie algebra with a coset setup.

All rationals are strings 'p' or 'p/q' (JSON integers are accepted,
floats never are). Structure constants are sparse triplets
[name_i, name_j, {name_k: value}]; subspace blocks give sparse vectors
over the basis names, with optional per-vector names. Only the 'h' and
'm' blocks configure the setup; any other block is informational.
Loading validates everything: Jacobi, subalgebra, complement, character,
automorphism properties of the component representatives.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources

from .lie import (
    Character,
    CosetSetup,
    LieAlgebra,
    LieError,
    Subspace,
    check_structure,
    make_setup,
)


class SetupFileError(ValueError):
    pass


def parse_rational(value, where: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise SetupFileError(f"{where}: rationals must be 'p/q' strings, not {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        s = value.strip()
        if not s or any(ch in s for ch in ".eE"):
            raise SetupFileError(f"{where}: bad rational {value!r}")
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise SetupFileError(f"{where}: bad rational {value!r}") from exc
    raise SetupFileError(f"{where}: bad rational {value!r}")


def _sparse_vector(data, names: tuple[str, ...], where: str) -> list[Fraction]:
    if not isinstance(data, dict):
        raise SetupFileError(f"{where}: vector must be an object of name: value pairs")
    v = [Fraction(0)] * len(names)
    for k, val in data.items():
        if k not in names:
            raise SetupFileError(f"{where}: unknown basis name {k!r}")
        v[names.index(k)] = parse_rational(val, f"{where}[{k}]")
    return v


def _subspace(alg: LieAlgebra, block, label: str) -> Subspace:
    if not isinstance(block, dict) or "vectors" not in block:
        raise SetupFileError(f"subspace {label!r} must be an object with a 'vectors' list")
    vectors = [
        _sparse_vector(v, alg.names, f"subspace {label!r} vector {i}")
        for i, v in enumerate(block["vectors"])
    ]
    names = block.get("names")
    try:
        return Subspace(alg, vectors, names=names)
    except LieError as exc:
        raise SetupFileError(f"subspace {label!r}: {exc}") from exc


def setup_from_dict(data: dict) -> tuple[CosetSetup, dict]:
    """Build a validated setup from a parsed JSON object.

    Returns (setup, meta) where meta carries the description, any
    informational subspace blocks, and the component rep names.
    """
    if not isinstance(data, dict):
        raise SetupFileError("setup file must contain a JSON object")
    for key in ("basis", "brackets", "subspaces"):
        if key not in data:
            raise SetupFileError(f"missing required key {key!r}")
    names = tuple(str(s) for s in data["basis"])
    brackets = {}
    for k, entry in enumerate(data["brackets"]):
        if not (isinstance(entry, list) and len(entry) == 3):
            raise SetupFileError(f"brackets[{k}] must be [name_i, name_j, vector]")
        a, b, vec = entry
        if a not in names or b not in names:
            raise SetupFileError(f"brackets[{k}]: unknown basis name")
        i, j = names.index(a), names.index(b)
        if i >= j:
            raise SetupFileError(f"brackets[{k}]: pairs must be listed with i < j in basis order")
        if (i, j) in brackets:
            raise SetupFileError(f"brackets[{k}]: duplicate pair ({a}, {b})")
        brackets[(i, j)] = _sparse_vector(vec, names, f"brackets[{k}]")
    try:
        alg = LieAlgebra(names, brackets)
    except LieError as exc:
        raise SetupFileError(str(exc)) from exc

    report = check_structure(alg)
    if not report.ok:
        lines = ", ".join(
            "(" + ", ".join(v.triple) + ")" for v in report.violations
        )
        raise SetupFileError(f"Jacobi identity fails on triples: {lines}")

    blocks = data["subspaces"]
    if not isinstance(blocks, dict) or "h" not in blocks:
        raise SetupFileError("subspaces must be an object containing at least 'h'")
    h = _subspace(alg, blocks["h"], "h")
    m = _subspace(alg, blocks["m"], "m") if "m" in blocks else None

    chi = None
    if "chi" in data:
        vals = data["chi"]
        if not isinstance(vals, list) or len(vals) != h.dim:
            raise SetupFileError("chi must be a list with one value per h vector")
        chi = Character.of([parse_rational(v, f"chi[{i}]") for i, v in enumerate(vals)])

    reps = []
    rep_names = []
    for k, entry in enumerate(data.get("component_reps", [])):
        if not isinstance(entry, dict) or "matrix" not in entry:
            raise SetupFileError(f"component_reps[{k}] must be an object with a 'matrix'")
        matrix = entry["matrix"]
        if len(matrix) != alg.dim or any(len(row) != alg.dim for row in matrix):
            raise SetupFileError(f"component_reps[{k}]: matrix must be {alg.dim}x{alg.dim}")
        reps.append([
            [parse_rational(e, f"component_reps[{k}][{i}][{j}]") for j, e in enumerate(row)]
            for i, row in enumerate(matrix)
        ])
        rep_names.append(str(entry.get("name", f"rep{k + 1}")))

    try:
        setup = make_setup(alg, h, m, chi, reps, name=data.get("name"))
    except LieError as exc:
        raise SetupFileError(str(exc)) from exc

    meta = {
        "description": data.get("description", ""),
        "auto_complement": m is None,
        "rep_names": rep_names,
        "extra_subspaces": {
            label: _subspace(alg, block, label)
            for label, block in sorted(blocks.items())
            if label not in ("h", "m")
        },
        "metadata": data.get("metadata", {}),
    }
    return setup, meta


def load_setup_file(path) -> tuple[CosetSetup, dict]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise SetupFileError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SetupFileError(f"{path}: invalid JSON: {exc}") from exc
    return setup_from_dict(data)


def load_setup(path) -> CosetSetup:
    """Load and fully validate a setup file."""
    return load_setup_file(path)[0]


def preset_names() -> list[str]:
    files = resources.files("invarops").joinpath("presets")
    return sorted(p.name[: -len(".json")] for p in files.iterdir() if p.name.endswith(".json"))


def load_preset(name: str) -> CosetSetup:
    return load_preset_file(name)[0]


def load_preset_file(name: str) -> tuple[CosetSetup, dict]:
    res = resources.files("invarops").joinpath("presets").joinpath(f"{name}.json")
    if not res.is_file():
        raise SetupFileError(f"unknown preset {name!r}; available: {', '.join(preset_names())}")
    return setup_from_dict(json.loads(res.read_text(encoding="utf-8")))
