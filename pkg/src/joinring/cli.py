"""``joinring`` command-line tool: JSON in, JSON out.

Exit codes: 0 on success, 1 for malformed input, 2 when the input is
well-formed but violates a hypothesis of the requested operation. Errors are
reported as ``{"error": reason, "message": ...}`` on stdout.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from .dft import C, diagonalize, joined_union, sort_spectrum, spectrum
from .errors import HypothesisError, NotAJoinError
from .fields import Field
from .groups import group_from_json, parse_group_spec
from .join import (
    JoinElement,
    center_basis,
    classify,
    count_units,
    expand,
    is_frobenius,
    is_unit,
    modular_unit_structure,
    radical_basis_join,
    recognize,
)
from .linalg import Matrix

COMMANDS = ("check", "mul", "units", "count-units", "radical", "center", "classify", "frobenius", "diagonalize", "spectrum")


class MalformedInput(ValueError):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="joinring", description="Joins of group-circulant matrices.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--field", help="Fp:<p>, Q or C")
    p.add_argument("--groups", help="comma-separated specs such as Z/3,D/6,S/4,cayley:file.json")
    p.add_argument("--normalized", action="store_true", help="use the unitary DFT normalization")
    p.add_argument("--in", dest="infile", help="read the JSON payload from this file instead of stdin")
    p.add_argument("--out", dest="outfile", help="write the JSON result to this file instead of stdout")
    return p


class Job:
    def __init__(self, args: argparse.Namespace, payload: Any):
        self.args = args
        self.payload = payload
        self.field = Field.parse(args.field) if args.field else None
        self.groups = parse_group_spec(args.groups) if args.groups else None

    def need_context(self):
        f, g = self.field, self.groups
        if isinstance(self.payload, dict):
            if f is None and "field" in self.payload:
                f = Field.parse(self.payload["field"])
            if g is None and "groups" in self.payload:
                g = _groups_from(self.payload["groups"])
        if f is None or g is None:
            raise MalformedInput("field and groups are required (flags or payload keys)")
        return f, tuple(g)

    def element(self, obj=None) -> JoinElement:
        obj = self.payload if obj is None else obj
        if obj is None:
            raise MalformedInput("this command needs a join element payload")
        if isinstance(obj, dict) and "element" in obj:
            obj = obj["element"]
        return JoinElement.from_json(obj, self.field, self.groups)


def _groups_from(objs):
    if not isinstance(objs, list):
        raise MalformedInput("groups must be a list")
    return [group_from_json(o) for o in objs]


def _cmd_check(job: Job) -> dict:
    obj = job.payload
    if isinstance(obj, dict) and "matrix" in obj:
        _, groups = job.need_context()
        m = Matrix.from_json(obj["matrix"])
        a = recognize(m, groups)
        return {"ok": True, "element": a.to_json()}
    a = job.element()
    back = recognize(expand(a), a.groups)
    if not back.allclose(a):
        raise HypothesisError("round-trip-failed", "expand/recognize did not round-trip")
    return {"ok": True}


def _cmd_mul(job: Job) -> dict:
    obj = job.payload
    items = obj.get("factors") if isinstance(obj, dict) else obj
    if not isinstance(items, list) or not items:
        raise MalformedInput("mul needs a non-empty list of factors")
    out = job.element(items[0])
    for x in items[1:]:
        out = out * job.element(x)
    return {"product": out.to_json()}


def _cmd_units(job: Job) -> dict:
    a = job.element()
    ok, inv = is_unit(a, return_inverse=True)
    res: dict = {"is_unit": ok, "inverse": inv.to_json() if inv is not None else None}
    p = a.field.characteristic()
    if ok and p and all(g.order % p == 0 for g in a.groups):
        res["structure"] = modular_unit_structure(a).to_json(a.field)
    return res


def _cmd_count_units(job: Job) -> dict:
    f, groups = job.need_context()
    return {"count": count_units(f, groups)}


def _cmd_radical(job: Job) -> dict:
    f, groups = job.need_context()
    basis = radical_basis_join(groups, f)
    return {"dim": len(basis), "basis": [b.to_json() for b in basis]}


def _cmd_center(job: Job) -> dict:
    f, groups = job.need_context()
    basis = center_basis(groups, f)
    return {"dim": len(basis), "basis": [b.to_json() for b in basis]}


def _cmd_classify(job: Job) -> dict:
    f, groups = job.need_context()
    return classify(groups, f)


def _cmd_frobenius(job: Job) -> dict:
    f, groups = job.need_context()
    res = is_frobenius(groups, f)
    out: dict = {"is_frobenius": res.is_frobenius}
    lam = job.payload.get("functional") if isinstance(job.payload, dict) else None
    if lam is not None and not res.is_frobenius:
        if not isinstance(lam, list):
            raise MalformedInput("functional must be a list of scalars")
        a, v = res.witness([f.from_json(x) for x in lam])
        out["witness"] = {"coefficients": [f.to_json(x) for x in a], "generator": v.to_json()}
    return out


def _complex_element(job: Job) -> JoinElement:
    obj = job.payload
    if isinstance(obj, dict) and "field" not in obj:
        obj = dict(obj, field="C")
    return job.element(obj)


def _cmd_diagonalize(job: Job) -> dict:
    return diagonalize(_complex_element(job), normalized=job.args.normalized).to_json()


def _cmd_spectrum(job: Job) -> dict:
    obj = job.payload
    if isinstance(obj, dict) and "outer" in obj and "inner" in obj:
        a = joined_union(obj["outer"], obj["inner"])
    else:
        a = _complex_element(job)
    return {"eigenvalues": [C.to_json(z) for z in sort_spectrum(spectrum(a))]}


HANDLERS = {
    "check": _cmd_check,
    "mul": _cmd_mul,
    "units": _cmd_units,
    "count-units": _cmd_count_units,
    "radical": _cmd_radical,
    "center": _cmd_center,
    "classify": _cmd_classify,
    "frobenius": _cmd_frobenius,
    "diagonalize": _cmd_diagonalize,
    "spectrum": _cmd_spectrum,
}


#: Commands driven by flags alone; stdin is read for these only with ``--in``.
FLAG_ONLY = {"count-units", "radical", "center", "classify"}


def _read_payload(args) -> Any:
    if args.command in FLAG_ONLY and not args.infile:
        return None
    if args.infile:
        with open(args.infile) as fh:
            text = fh.read()
    elif sys.stdin is None or sys.stdin.isatty():
        text = ""
    else:
        text = sys.stdin.read()
    if not text.strip():
        return None
    return json.loads(text)


def run(argv: list[str] | None = None) -> tuple[int, dict]:
    """Execute one job; returns ``(exit code, JSON-ready result)``."""
    args = build_parser().parse_args(argv)
    try:
        job = Job(args, _read_payload(args))
        return 0, HANDLERS[args.command](job)
    except HypothesisError as exc:
        return 2, {"error": exc.reason, "message": str(exc)}
    except NotAJoinError as exc:
        return 2, {"error": "not-a-join", "message": str(exc)}
    except (ValueError, KeyError, TypeError, IndexError, OSError) as exc:
        # JSONDecodeError, FieldError and GroupError are all ValueErrors.
        return 1, {"error": "malformed-input", "message": f"{type(exc).__name__}: {exc}"}


def main(argv: list[str] | None = None) -> int:
    code, result = run(argv)
    text = json.dumps(result, indent=2) + "\n"
    args_out = build_parser().parse_args(argv).outfile if code == 0 else None
    if args_out:
        with open(args_out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
