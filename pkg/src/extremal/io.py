"""Instance files and run reports.

Both are JSON.  Instances are written canonically (fixed key order, one
matrix row per line, floats in shortest round-trip form) so that
``dumps_instance(loads_instance(text)) == text`` for any file this module
wrote.  Complex scalars are ``[re, im]`` pairs; the ``field`` tag says which
representation to expect.

Run reports carry a schema tag and version and print every float with 17
significant digits.  Wall-clock times are left out so that the same command
and seed always produce the same bytes.
"""
from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .bodies import HPolytope, PointCloud
from .ellipsoid import Ellipsoid, nvol, to_axis_form
from .errors import DimensionError, DomainError

INSTANCE_FORMAT = "extremal-instance"
INSTANCE_VERSION = 1
REPORT_SCHEMA = "extremal-run-report"
REPORT_VERSION = 1
KINDS = ("points", "polytope", "ellipsoid")
SEED_ENV = "EXTREMAL_SEED"


class InstanceError(DomainError):
    """Malformed instance file."""


@dataclass(frozen=True, eq=False)
class Instance:
    kind: str
    body: object
    name: str | None = None

    @property
    def field(self) -> str:
        return self.body.field if hasattr(self.body, "field") else "real"


def resolve_seed(seed: int | None) -> int:
    """Explicit seed, else ``$EXTREMAL_SEED``, else 0."""
    if seed is not None:
        return int(seed)
    env = os.environ.get(SEED_ENV)
    if env is None or env.strip() == "":
        return 0
    try:
        return int(env)
    except ValueError:
        raise InstanceError(f"{SEED_ENV}={env!r} is not an integer") from None


# -- scalars ---------------------------------------------------------------------------

def _decode_scalar(v, field: str):
    if field == "complex":
        if isinstance(v, (int, float)) and not isinstance(v, bool):
            return complex(float(v), 0.0)
        if isinstance(v, list) and len(v) == 2 and all(isinstance(t, (int, float)) for t in v):
            return complex(float(v[0]), float(v[1]))
        raise InstanceError(f"complex scalars are [re, im] pairs, got {v!r}")
    if isinstance(v, (int, float)) and not isinstance(v, bool):
        return float(v)
    raise InstanceError(f"expected a real number, got {v!r}")


def _decode_vector(v, field: str, what: str) -> np.ndarray:
    if not isinstance(v, list):
        raise InstanceError(f"{what} must be a list")
    return np.array([_decode_scalar(t, field) for t in v], dtype=complex if field == "complex" else float)


def _decode_matrix(rows, field: str, what: str) -> np.ndarray:
    if not isinstance(rows, list) or not rows:
        raise InstanceError(f"{what} must be a nonempty list of rows")
    out = [_decode_vector(r, field, what) for r in rows]
    if len({len(r) for r in out}) != 1:
        raise DimensionError(f"{what}: rows have different lengths")
    return np.array(out)


def _fmt_float(x: float) -> str:
    return json.dumps(float(x))


def _fmt_scalar(x, field: str) -> str:
    if field == "complex":
        x = complex(x)
        return f"[{_fmt_float(x.real)}, {_fmt_float(x.imag)}]"
    return _fmt_float(x)


def _fmt_row(v, field: str) -> str:
    return "[" + ", ".join(_fmt_scalar(t, field) for t in v) + "]"


def _fmt_matrix(M, field: str, indent: str) -> str:
    inner = f",\n{indent}  ".join(_fmt_row(r, field) for r in M)
    return f"[\n{indent}  {inner}\n{indent}]"


# -- instances -------------------------------------------------------------------------

def loads_instance(text: str) -> Instance:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"not valid JSON ({exc.msg} at line {exc.lineno})") from None
    if not isinstance(doc, dict):
        raise InstanceError("an instance is a JSON object")
    if doc.get("format", INSTANCE_FORMAT) != INSTANCE_FORMAT:
        raise InstanceError(f"unknown format {doc.get('format')!r}")
    if doc.get("version", INSTANCE_VERSION) != INSTANCE_VERSION:
        raise InstanceError(f"unsupported instance version {doc.get('version')!r}")
    field = doc.get("field", "real")
    if field not in ("real", "complex"):
        raise InstanceError(f"field must be 'real' or 'complex', got {field!r}")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise InstanceError(f"kind must be one of {', '.join(KINDS)}, got {kind!r}")
    name = doc.get("name")
    known = {"format", "version", "name", "field", "kind", "points", "A", "b", "center", "shape"}
    extra = set(doc) - known
    if extra:
        raise InstanceError(f"unknown keys: {', '.join(sorted(extra))}")
    try:
        if kind == "points":
            body = PointCloud(_decode_matrix(doc.get("points"), field, "points"))
        elif kind == "polytope":
            if field != "real":
                raise InstanceError("polytopes are real; give a complex body through its realification")
            A = _decode_matrix(doc.get("A"), field, "A")
            b = _decode_vector(doc.get("b"), field, "b")
            body = HPolytope(A, b)
        else:
            shape = _decode_matrix(doc.get("shape"), field, "shape")
            center = _decode_vector(doc.get("center"), field, "center")
            body = Ellipsoid(center, shape)
    except InstanceError:
        raise
    except (DimensionError, DomainError, ValueError) as exc:
        raise InstanceError(str(exc)) from None
    return Instance(kind, body, name)


def dumps_instance(inst: Instance) -> str:
    field = inst.field
    lines = ["{", f'  "format": "{INSTANCE_FORMAT}",', f'  "version": {INSTANCE_VERSION},']
    if inst.name is not None:
        lines.append(f'  "name": {json.dumps(inst.name)},')
    lines += [f'  "field": "{field}",', f'  "kind": "{inst.kind}",']
    body = inst.body
    if inst.kind == "points":
        lines.append(f'  "points": {_fmt_matrix(body.points, field, "  ")}')
    elif inst.kind == "polytope":
        lines.append(f'  "A": {_fmt_matrix(body.A, field, "  ")},')
        lines.append(f'  "b": {_fmt_row(body.b, field)}')
    else:
        lines.append(f'  "center": {_fmt_row(body.center, field)},')
        lines.append(f'  "shape": {_fmt_matrix(body.shape, field, "  ")}')
    return "\n".join(lines) + "\n}\n"


def read_instance(path) -> Instance:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InstanceError(f"cannot read {path}: {exc.strerror}") from None
    return loads_instance(text)


def write_instance(inst: Instance, path) -> None:
    Path(path).write_text(dumps_instance(inst))


# -- reports ---------------------------------------------------------------------------

class _Float17:
    __slots__ = ("x",)

    def __init__(self, x):
        self.x = float(x)


def _plain(obj):
    """Convert numpy and dataclass-ish values into JSON-ready structures."""
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _plain(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return _Float17(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return [_Float17(obj.real), _Float17(obj.imag)]
    if obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, Ellipsoid):
        return ellipsoid_record(obj)
    if isinstance(obj, PointCloud):
        return {"points": _plain(obj.points)}
    return str(obj)


def _emit(v, indent: int) -> str:
    pad = "  " * indent
    if isinstance(v, _Float17):
        if math.isnan(v.x) or math.isinf(v.x):
            return json.dumps(repr(v.x))
        s = format(v.x, ".17g")
        if "e" not in s and "." not in s and "n" not in s:
            s += ".0"
        return s
    if isinstance(v, dict):
        if not v:
            return "{}"
        items = [f'{pad}  {json.dumps(k)}: {_emit(x, indent + 1)}' for k, x in v.items()]
        return "{\n" + ",\n".join(items) + f"\n{pad}}}"
    if isinstance(v, list):
        if not v:
            return "[]"
        if all(not isinstance(x, (dict, list)) or _is_pair(x) for x in v):
            return "[" + ", ".join(_emit(x, indent + 1) for x in v) + "]"
        items = [f"{pad}  {_emit(x, indent + 1)}" for x in v]
        return "[\n" + ",\n".join(items) + f"\n{pad}]"
    return json.dumps(v)


def _is_pair(x) -> bool:
    return isinstance(x, list) and len(x) == 2 and all(isinstance(t, _Float17) for t in x)


def ellipsoid_record(E: Ellipsoid) -> dict:
    return {
        "field": E.field,
        "center": E.center,
        "shape": E.shape,
        "semi_axes": to_axis_form(E).semi_axes,
        "nvol": nvol(E),
    }


def solve_record(rep) -> dict:
    """A SolveReport without its wall time."""
    return {
        "solver": rep.solver,
        "iterations": rep.iterations,
        "epsilon": rep.epsilon,
        "dual_gap": rep.dual_gap,
        "seed": rep.seed,
        "converged": rep.converged,
        "stationarity": rep.stationarity,
    }


def verification_record(rep) -> dict:
    details = {k: v for k, v in rep.details.items() if k != "hyperplane"}
    return {
        "name": rep.name,
        "trials": rep.trials,
        "max_residual": rep.max_residual,
        "threshold": rep.threshold,
        "strict": rep.strict,
        "passed": rep.passed,
        "seed": rep.seed,
        "parts": len(rep.parts),
        "failed_parts": [p.name for p in rep.parts if not p.passed],
        "details": details,
    }


def dumps_report(report: dict) -> str:
    """Serialize a run report (a dict) with the schema header prepended."""
    doc = {"schema": REPORT_SCHEMA, "version": REPORT_VERSION}
    doc.update(report)
    return _emit(_plain(doc), 0) + "\n"
