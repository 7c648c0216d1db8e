"""Finite group-configuration toolkit.

Thin dict-level wrappers over the compiled core; every function accepts and
returns plain python objects, with JSON strings at the boundary.
"""

from __future__ import annotations

import json
from typing import Any

from ._gcfg import (  # noqa: F401
    GcfgError,
    InvalidParamsError,
    SchemaError,
    UnknownSpecError,
    convert_json,
    generate_json,
    generate_matroid_json,
    glue_json,
    iso_json,
    reconstruct_json,
    run_cli,
    validate_json,
)

__all__ = [
    "GcfgError",
    "InvalidParamsError",
    "SchemaError",
    "UnknownSpecError",
    "generate",
    "generate_matroid",
    "validate",
    "reconstruct",
    "convert",
    "glue",
    "iso",
    "cli",
]


def generate(group: str, action: str = "regular", abelian: bool = False) -> dict[str, Any]:
    """Instance of a builtin group action (e.g. ``generate("cyclic:5")``)."""
    return json.loads(generate_json(group, action, abelian))


def generate_matroid(p: int = 5, m: int = 1) -> dict[str, Any]:
    """Translation matroid instance for F_p^m with m = k."""
    return json.loads(generate_matroid_json(p, m))


def validate(instance: dict[str, Any]) -> dict[str, Any]:
    """Validation report for any instance document."""
    return json.loads(validate_json(json.dumps(instance)))


def reconstruct(
    instance: dict[str, Any],
    anchor_a: str = "",
    anchor_b: str = "",
    abelian_check: bool = False,
    emit_group: bool = False,
    emit_config: bool = False,
) -> dict[str, Any]:
    """Reconstruction report: closure, presentation, group, action flags."""
    return json.loads(
        reconstruct_json(
            json.dumps(instance), anchor_a, anchor_b, abelian_check, emit_group, emit_config
        )
    )


def convert(instance: dict[str, Any], to: str) -> dict[str, Any]:
    """Convert between ``functional_instance`` and ``quadrangle`` documents."""
    return json.loads(convert_json(json.dumps(instance), to))


def glue(a: str, grid: int) -> dict[str, Any]:
    """Wrap-around group and embedding report on the grid inside [-a, a)."""
    return json.loads(glue_json(a, grid))


def iso(group1: dict[str, Any], group2: dict[str, Any]) -> dict[str, Any]:
    """Isomorphism report for two ``group`` documents."""
    return json.loads(iso_json(json.dumps(group1), json.dumps(group2)))


def cli(args: list[str]) -> dict[str, Any]:
    """Run a CLI subcommand in-process; returns exit_code, stdout, stderr."""
    return json.loads(run_cli(args))
