"""Canonical JSON files for setups and branching tables.

The writer is deterministic down to the byte: fixed key order, two-space
indentation, integer lists inline, rationals as lowest-terms strings.  A
parse -> serialize round trip of a generated file reproduces it exactly.
No floating point value ever appears on either side.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .model import BundleLine, FixedPoint, OperatorSetup
from .branching import BranchingTable, branching_table


class SetupParseError(ValueError):
    """The document does not match the setup-file schema."""


def _fraction_str(x: Fraction) -> str:
    return str(Fraction(x))


def _parse_fraction(value, where: str) -> Fraction:
    if isinstance(value, bool):
        raise SetupParseError(f"{where}: expected a rational string, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise SetupParseError(f"{where}: bad rational {value!r} ({exc})") from None
    raise SetupParseError(f"{where}: expected a rational string, got {value!r}")


def _expect_int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SetupParseError(f"{where}: expected an integer, got {value!r}")
    return value


def _expect_int_list(value, where: str) -> tuple[int, ...]:
    if not isinstance(value, list):
        raise SetupParseError(f"{where}: expected a list of integers, got {value!r}")
    return tuple(_expect_int(v, f"{where}[{i}]") for i, v in enumerate(value))


def _expect_keys(obj: dict, required: tuple[str, ...], where: str) -> None:
    missing = [k for k in required if k not in obj]
    if missing:
        raise SetupParseError(f"{where}: missing field(s) {missing}")
    unknown = [k for k in obj if k not in required]
    if unknown:
        raise SetupParseError(f"{where}: unknown field(s) {unknown}")


def parse_setup(doc: Any) -> OperatorSetup:
    if not isinstance(doc, dict):
        raise SetupParseError("top level: expected an object")
    _expect_keys(doc, ("m", "tau", "operator_kind", "points"), "top level")
    m = _expect_int(doc["m"], "m")
    if not isinstance(doc["tau"], list):
        raise SetupParseError("tau: expected a list")
    tau = tuple(_parse_fraction(t, f"tau[{p}]") for p, t in enumerate(doc["tau"]))
    kind = doc["operator_kind"]
    if not isinstance(kind, str):
        raise SetupParseError(f"operator_kind: expected a string, got {kind!r}")
    if not isinstance(doc["points"], list):
        raise SetupParseError("points: expected a list")
    points = []
    for i, pt in enumerate(doc["points"]):
        where = f"points[{i}]"
        if not isinstance(pt, dict):
            raise SetupParseError(f"{where}: expected an object")
        _expect_keys(
            pt,
            ("name", "base_orientation", "group_sign", "tangent_weights", "lines"),
            where,
        )
        if not isinstance(pt["name"], str):
            raise SetupParseError(f"{where}.name: expected a string")
        base = _expect_int(pt["base_orientation"], f"{where}.base_orientation")
        group = _expect_int(pt["group_sign"], f"{where}.group_sign")
        if not isinstance(pt["tangent_weights"], list):
            raise SetupParseError(f"{where}.tangent_weights: expected a list")
        weights = tuple(
            _expect_int_list(k, f"{where}.tangent_weights[{l}]")
            for l, k in enumerate(pt["tangent_weights"])
        )
        if not isinstance(pt["lines"], list):
            raise SetupParseError(f"{where}.lines: expected a list")
        lines = []
        for j, ln in enumerate(pt["lines"]):
            lwhere = f"{where}.lines[{j}]"
            if not isinstance(ln, dict):
                raise SetupParseError(f"{lwhere}: expected an object")
            _expect_keys(ln, ("a", "grading", "epsilon"), lwhere)
            lines.append(
                BundleLine(
                    a=_expect_int_list(ln["a"], f"{lwhere}.a"),
                    grading=_expect_int(ln["grading"], f"{lwhere}.grading"),
                    epsilon=_expect_int_list(ln["epsilon"], f"{lwhere}.epsilon"),
                )
            )
        points.append(
            FixedPoint(
                name=pt["name"],
                tangent_weights=weights,
                lines=tuple(lines),
                base_orientation=base,
                orientation_sign=base,
                group_sign=group,
            )
        )
    return OperatorSetup(m=m, tau=tau, points=tuple(points), operator_kind=kind)


def load_setup(path) -> OperatorSetup:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise SetupParseError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise SetupParseError(f"{path} is not valid JSON: {exc}") from None
    return parse_setup(doc)


def _ints(values) -> str:
    return "[" + ", ".join(str(int(v)) for v in values) + "]"


def setup_to_json(setup: OperatorSetup) -> str:
    """Canonical text for a setup; byte-stable across round trips."""
    out = []
    out.append("{")
    out.append(f'  "m": {setup.m},')
    tau = ", ".join(json.dumps(_fraction_str(t)) for t in setup.tau)
    out.append(f'  "tau": [{tau}],')
    out.append(f'  "operator_kind": {json.dumps(setup.operator_kind)},')
    if not setup.points:
        out.append('  "points": []')
    else:
        out.append('  "points": [')
        for i, pt in enumerate(setup.points):
            out.append("    {")
            out.append(f'      "name": {json.dumps(pt.name)},')
            out.append(f'      "base_orientation": {pt.base_orientation},')
            out.append(f'      "group_sign": {pt.group_sign},')
            if pt.tangent_weights:
                out.append('      "tangent_weights": [')
                for l, k in enumerate(pt.tangent_weights):
                    comma = "," if l < len(pt.tangent_weights) - 1 else ""
                    out.append(f"        {_ints(k)}{comma}")
                out.append("      ],")
            else:
                out.append('      "tangent_weights": [],')
            if pt.lines:
                out.append('      "lines": [')
                for j, ln in enumerate(pt.lines):
                    comma = "," if j < len(pt.lines) - 1 else ""
                    out.append(
                        f'        {{"a": {_ints(ln.a)}, "grading": {ln.grading}, '
                        f'"epsilon": {_ints(ln.epsilon)}}}{comma}'
                    )
                out.append("      ]")
            else:
                out.append('      "lines": []')
            out.append("    }" + ("," if i < len(setup.points) - 1 else ""))
        out.append("  ]")
    out.append("}")
    return "\n".join(out) + "\n"


def save_setup(setup: OperatorSetup, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(setup_to_json(setup))


def parse_branching_table(doc: Any) -> BranchingTable:
    if not isinstance(doc, dict):
        raise SetupParseError("branching table: expected an object")
    _expect_keys(doc, ("label", "coefficients"), "branching table")
    if not isinstance(doc["label"], str):
        raise SetupParseError("branching table label: expected a string")
    if not isinstance(doc["coefficients"], list):
        raise SetupParseError("branching table coefficients: expected a list")
    entries = []
    for i, rec in enumerate(doc["coefficients"]):
        where = f"coefficients[{i}]"
        if not isinstance(rec, dict):
            raise SetupParseError(f"{where}: expected an object")
        _expect_keys(rec, ("b", "beta"), where)
        entries.append(
            (
                _expect_int_list(rec["b"], f"{where}.b"),
                _parse_fraction(rec["beta"], f"{where}.beta"),
            )
        )
    return branching_table(entries, label=doc["label"])


def load_branching_table(path) -> BranchingTable:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise SetupParseError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise SetupParseError(f"{path} is not valid JSON: {exc}") from None
    return parse_branching_table(doc)


def branching_table_to_json(table: BranchingTable) -> str:
    out = ["{", f'  "label": {json.dumps(table.label)},']
    records = sorted(table.coefficients.items())
    if not records:
        out.append('  "coefficients": []')
    else:
        out.append('  "coefficients": [')
        for i, (b, beta) in enumerate(records):
            comma = "," if i < len(records) - 1 else ""
            out.append(
                f'    {{"b": {_ints(b)}, "beta": {json.dumps(_fraction_str(beta))}}}{comma}'
            )
        out.append("  ]")
    out.append("}")
    return "\n".join(out) + "\n"


def save_branching_table(table: BranchingTable, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(branching_table_to_json(table))
