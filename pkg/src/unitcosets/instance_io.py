"""Instance files (v1) and coset reports (v1)."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .codec import (
    MalformedInput,
    canonical_dumps,
    factored_from_json,
    rat_from_json,
    rat_to_json,
    rf_from_json,
    rf_to_json,
)
from .exact_arith import RationalFunction
from .unit_search import CosetEntry, CosetReport, EquationInstance, GroupSpec, SolutionRecord

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class InstanceFile:
    instance: EquationInstance
    box: int
    truncation: int


def _int_field(d: dict, key: str, default=None, least: int = 0) -> int:
    v = d.get(key, default)
    if not isinstance(v, int) or isinstance(v, bool) or v < least:
        raise MalformedInput(f"field {key!r} must be an integer >= {least}, got {v!r}")
    return v


def _check_version(d) -> None:
    if not isinstance(d, dict):
        raise MalformedInput("top level must be a JSON object")
    if d.get("v") != SCHEMA_VERSION:
        raise MalformedInput(f"unsupported schema version {d.get('v')!r}")


def parse_instance(data: dict) -> InstanceFile:
    _check_version(data)
    n = _int_field(data, "n", least=2)
    coeffs = data.get("coefficients")
    gens = data.get("generators")
    if not isinstance(coeffs, list) or len(coeffs) != n:
        raise MalformedInput(f"need {n} coefficients")
    if not isinstance(gens, list) or not gens:
        raise MalformedInput("need a nonempty generator list")
    coefficients = tuple(rf_from_json(c) for c in coeffs)
    generators = []
    for j, g in enumerate(gens):
        if not isinstance(g, list) or len(g) != n:
            raise MalformedInput(f"generator {j + 1} must have {n} coordinates")
        generators.append(tuple(factored_from_json(c) for c in g))
    box = _int_field(data, "box", 2)
    truncation = _int_field(data, "truncation", 32, least=2)
    try:
        inst = EquationInstance.build(GroupSpec(n, tuple(generators)), coefficients, truncation)
    except ValueError as e:
        raise MalformedInput(str(e)) from None
    return InstanceFile(inst, box, truncation)


def load_instance(path) -> InstanceFile:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except json.JSONDecodeError as e:
        raise MalformedInput(f"{path}: invalid JSON ({e})") from None
    return parse_instance(data)


def load_functions(path) -> list[RationalFunction]:
    """A ``{"v": 1, "functions": [...]}`` file of rational functions."""
    try:
        with open(path) as fh:
            data = json.load(fh)
    except json.JSONDecodeError as e:
        raise MalformedInput(f"{path}: invalid JSON ({e})") from None
    _check_version(data)
    fs = data.get("functions")
    if not isinstance(fs, list) or not fs:
        raise MalformedInput("need a nonempty 'functions' array")
    return [rf_from_json(f) for f in fs]


def _vec(xs) -> list[str]:
    return [rat_to_json(x) for x in xs]


def report_to_dict(rep: CosetReport) -> dict:
    cosets = []
    for e in rep.cosets:
        rec = e.record
        item = {
            "w": list(e.w),
            "nondegenerate": e.nondegenerate,
            "x": [rf_to_json(x) for x in rec.x],
        }
        if rec.family is None:
            item["xi"] = _vec(rec.xi)
        else:
            item["xi"] = "family"
            item["family"] = {
                "particular": _vec(rec.family[0]),
                "basis": [_vec(b) for b in rec.family[1]],
                "representative": _vec(rec.xi),
            }
        cosets.append(item)
    return {
        "v": SCHEMA_VERSION,
        "n": rep.n,
        "rank": rep.rank,
        "bound": rep.bound,
        "box": rep.box,
        "instance_digest": rep.digest,
        "cosets": cosets,
        "nondegenerate_cosets": rep.nondegenerate_count,
        "within_bound": rep.within_bound,
    }


def dump_report(rep: CosetReport) -> str:
    return canonical_dumps(report_to_dict(rep))


def report_from_dict(d: dict) -> CosetReport:
    _check_version(d)
    try:
        entries = []
        for item in d["cosets"]:
            w = tuple(int(x) for x in item["w"])
            x = tuple(rf_from_json(f) for f in item["x"])
            if item["xi"] == "family":
                fam = item["family"]
                xi = tuple(rat_from_json(c) for c in fam["representative"])
                family = (
                    tuple(rat_from_json(c) for c in fam["particular"]),
                    tuple(tuple(rat_from_json(c) for c in b) for b in fam["basis"]),
                )
            else:
                xi = tuple(rat_from_json(c) for c in item["xi"])
                family = None
            entries.append(CosetEntry(w, SolutionRecord(w, xi, x, family), bool(item["nondegenerate"])))
        rep = CosetReport(int(d["n"]), int(d["rank"]), int(d["bound"]), int(d["box"]),
                          str(d["instance_digest"]), tuple(entries))
    except (KeyError, TypeError) as e:
        raise MalformedInput(f"bad report: {e}") from None
    if rep.within_bound != d.get("within_bound"):
        raise MalformedInput("within_bound is inconsistent with the coset list")
    return rep


def parse_report(text: str) -> CosetReport:
    return report_from_dict(json.loads(text))


def _fmt_vec(xs) -> str:
    return "(" + ",".join(str(x) if isinstance(x, int) else rat_to_json(Fraction(x)) for x in xs) + ")"


def format_table(rep: CosetReport) -> str:
    """Fixed-column coset table; one header line, then one row per coset."""
    head = (f"rank={rep.rank} bound={rep.bound} box={rep.box} cosets={len(rep.cosets)} "
            f"nondegenerate={rep.nondegenerate_count} within_bound={'true' if rep.within_bound else 'false'}")
    rows = [("#", "w", "nondeg", "xi", "x")]
    for k, e in enumerate(rep.cosets, 1):
        xi = "family" if e.record.is_family else _fmt_vec(e.record.xi)
        x = " ; ".join(str(f) for f in e.record.x)
        rows.append((str(k), _fmt_vec(e.w), "yes" if e.nondegenerate else "no", xi, x))
    widths = [max(len(r[c]) for r in rows) for c in range(4)]
    lines = [head]
    for r in rows:
        lines.append("  ".join(r[c].ljust(widths[c]) for c in range(4)) + "  " + r[4])
    return "\n".join(line.rstrip() for line in lines) + "\n"
