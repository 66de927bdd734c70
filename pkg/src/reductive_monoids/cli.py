"""Command line front end.

    reductive-monoids classify --group g.json --cone tau.json
    reductive-monoids orbits --group g.json --cone cc.json --format dot

Exit codes: 0 success, 2 malformed input, 3 the data is not a (valid,
affine) colored cone, 4 an enumeration bound was hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import linalg as la
from .classify import (
    AffineRefusal,
    ColoredCone,
    central_witness,
    construct_monoid,
    decoloration,
    dominant_weights,
    has_zero,
    is_affine,
    kernel,
    orbit_covers,
    orbits,
    quasi_direct_decompose,
    validate_colored_cone,
    weight_monoid,
)
from .cones import Cone
from .errors import ClassificationError, InputError, LinealityError, MonoidError, ResourceBoundExceeded
from .rootsys import GroupSpec, build_group

SUBCOMMANDS = ("classify", "check", "orbits", "weights", "decolor", "decompose", "affine-check", "witness")
CHAR0_NOTE = "decomposition of k[S] into V_chi (x) V_chi^* holds in characteristic 0 only"

EXIT_OK, EXIT_INPUT, EXIT_INVALID, EXIT_BOUND = 0, 2, 3, 4


class _Failure(Exception):
    def __init__(self, code: int, report: dict):
        super().__init__(report.get("reason", ""))
        self.code = code
        self.report = report


def _load_json(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def _parse_colors(raw: str | None) -> list[int] | None:
    if raw is None:
        return None
    try:
        return [int(x) for x in raw.replace(",", " ").split()]
    except ValueError as exc:
        raise InputError(f"bad --colors value {raw!r}") from exc


def _load_cone(path: str, n: int) -> tuple[Cone, list[int] | None]:
    data = _load_json(path)
    try:
        if "cone" in data:
            return Cone.from_json(data["cone"], n), list(data.get("colors", []))
        return Cone.from_json(data, n), None
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"malformed cone in {path}: {exc}") from exc


def _weights_json(model, cc) -> dict:
    try:
        return weight_monoid(model, cc).to_json()
    except (LinealityError, ResourceBoundExceeded) as exc:
        return {"error": str(exc)}


def monoid_report(model, cc: ColoredCone, certificate) -> dict:
    orbit_list = orbits(model, cc)
    return {
        "colored_cone": cc.to_json(),
        "affine_certificate": certificate.to_json(),
        "orbits": [o.to_json() for o in orbit_list],
        "kernel_dim": kernel(model, cc).dimension,
        "has_zero": has_zero(model, cc),
        "weight_monoid": _weights_json(model, cc),
        "decomposition": quasi_direct_decompose(model, cc).to_json(),
    }


def orbits_dot(orbit_list) -> str:
    lines = ["digraph orbits {"]
    for i, o in enumerate(orbit_list):
        rays = " ".join("(" + ",".join(la.fmt_vec(r)) + ")" for r in o.face.rays) or "0"
        colors = ",".join(str(c) for c in sorted(o.face_colors))
        lines.append(f'  o{i} [label="dim {o.dimension}\\nface {rays}\\ncolors {{{colors}}}"];')
    for i, j in orbit_covers(orbit_list):
        lines.append(f"  o{i} -> o{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _flat(v) -> bool:
    return not isinstance(v, dict) and not (isinstance(v, list) and any(isinstance(x, dict) for x in v))


def _text(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        return "\n".join(
            f"{pad}{k}: {_inline(obj[k])}" if _flat(obj[k]) else f"{pad}{k}:\n{_text(obj[k], indent + 1)}"
            for k in sorted(obj)
        )
    if isinstance(obj, list):
        return "\n".join(f"{pad}- {_inline(x)}" if _flat(x) else f"{pad}-\n{_text(x, indent + 1)}" for x in obj)
    return pad + _inline(obj)


def _inline(v) -> str:
    if isinstance(v, list):
        return "(" + ", ".join(_inline(x) for x in v) + ")"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if v is None:
        return "-"
    return str(v)


def _colored(model, args) -> ColoredCone:
    if not args.cone:
        raise InputError("--cone is required")
    cone, file_colors = _load_cone(args.cone, model.ambient_dim)
    flag = _parse_colors(args.colors)
    F = flag if flag is not None else (file_colors or [])
    return validate_colored_cone(model, cone, F)


def execute(args) -> tuple[dict, str | None]:
    """Run one request; returns the JSON report and, for ``--format dot``, the DOT text."""
    if not args.group:
        raise InputError("--group is required")
    model = build_group(GroupSpec.from_json(_load_json(args.group)))
    cmd = args.subcommand
    if args.format == "dot" and cmd != "orbits":
        raise InputError("--format dot is only available for orbits")

    if cmd == "classify":
        if not args.cone:
            raise InputError("--cone is required")
        tau, _ = _load_cone(args.cone, model.ambient_dim)
        cc, cert = construct_monoid(model, tau)
        return monoid_report(model, cc, cert), None

    cc = _colored(model, args)
    if cmd == "check":
        cert = is_affine(model, cc)
        if isinstance(cert, AffineRefusal):
            raise _Failure(EXIT_INVALID, {"error": "NotAffine", "condition": "affine", "reason": "no affineness certificate exists", **cert.to_json()})
        return {"valid": True, "colored_cone": cc.to_json(), "affine_certificate": cert.to_json(), "has_zero": has_zero(model, cc)}, None
    if cmd == "affine-check":
        cert = is_affine(model, cc)
        if isinstance(cert, AffineRefusal):
            raise _Failure(EXIT_INVALID, {"error": "NotAffine", "condition": "affine", "reason": "no affineness certificate exists", **cert.to_json()})
        return {"affine": True, "affine_certificate": cert.to_json()}, None
    if cmd == "orbits":
        orbit_list = orbits(model, cc)
        report = {"orbits": [o.to_json() for o in orbit_list], "covers": [list(p) for p in orbit_covers(orbit_list)]}
        return report, orbits_dot(orbit_list) if args.format == "dot" else None
    if cmd == "weights":
        report = {"weight_monoid": weight_monoid(model, cc).to_json()}
        if args.height_bound is not None:
            report["dominant_weights"] = [la.fmt_vec(w) for w in dominant_weights(model, cc, args.height_bound)]
            report["note"] = CHAR0_NOTE
        return report, None
    if cmd == "decolor":
        return {"colored_cone": cc.to_json(), "decoloration": {"cone": decoloration(model, cc).to_json(), "colors": []}}, None
    if cmd == "decompose":
        return {"decomposition": quasi_direct_decompose(model, cc).to_json()}, None
    if cmd == "witness":
        return {"central_witness": la.fmt_vec(central_witness(model, cc))}, None
    raise InputError(f"unknown subcommand {cmd!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="reductive-monoids", description="Classify normal reductive monoids by colored cones.")
    p.add_argument("subcommand", choices=SUBCOMMANDS)
    p.add_argument("--group", help="GroupSpec JSON file")
    p.add_argument("--cone", help="Cone JSON (tau for classify) or ColoredCone JSON")
    p.add_argument("--colors", help="color indices, e.g. 1,2 (overrides the file)")
    p.add_argument("--format", choices=("json", "text", "dot"), default="json")
    p.add_argument("--height-bound", type=int, default=None, dest="height_bound")
    return p


def _emit(report: dict, fmt: str, stream) -> None:
    if fmt == "text":
        stream.write(_text(report) + "\n")
    else:
        stream.write(json.dumps(report, sort_keys=True, indent=2) + "\n")


def main(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        report, dot = execute(args)
    except _Failure as f:
        code, report = f.code, f.report
    except ClassificationError as exc:
        code, report = EXIT_INVALID, exc.report()
    except LinealityError as exc:
        code, report = EXIT_INVALID, {"error": "LinealityError", "reason": str(exc)}
    except ResourceBoundExceeded as exc:
        code, report = EXIT_BOUND, {"error": type(exc).__name__, "reason": str(exc)}
    except (InputError, MonoidError) as exc:
        code, report = EXIT_INPUT, {"error": type(exc).__name__, "reason": str(exc)}
    else:
        if dot is not None:
            stdout.write(dot)
        else:
            _emit(report, args.format, stdout)
        return EXIT_OK
    if args.format == "json":
        _emit(report, "json", stdout)
    else:
        _emit(report, "text", stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
