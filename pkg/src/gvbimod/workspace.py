"""Workspace documents: JSON definitions of algebras, bimodules and tasks,
executed in order with optional result assertions.

Scalars serialize as strings ("3", "-1/2"); subspaces are emitted as their
RREF basis rows, so reports are canonical and byte-diffable.
"""

from __future__ import annotations

import json
from importlib import resources

import jsonschema

from . import algebras as alg
from . import bimodules as bim
from . import distributors as dist
from . import duality as dua
from . import tensor as ten
from .errors import GvError, ValidationError
from .fields import GF, QQ, Field
from .linalg import Matrix, Subspace, image, kernel, rref


class WorkspaceParseError(GvError):
    """Malformed document: bad JSON, schema violation, or bad scalar."""


EXIT_OK = 0
EXIT_ASSERTION = 1
EXIT_PARSE = 2
EXIT_VALIDATION = 3


def _schema():
    with resources.files("gvbimod").joinpath("workspace_schema.json").open() as fh:
        return json.load(fh)


def parse_field_spec(spec) -> Field:
    ch = spec.get("characteristic", 0) if spec else 0
    if ch == 0:
        return QQ
    return GF(ch)


def parse_field_flag(text: str) -> Field:
    if text in ("q", "Q", "0"):
        return QQ
    if text.startswith("p="):
        return GF(int(text[2:]))
    raise WorkspaceParseError("field must be 'q' or 'p=<prime>', got %r" % text)


def _scalar(field, v):
    try:
        return field.parse(v)
    except (ValueError, TypeError) as e:
        raise WorkspaceParseError(str(e))


def _matrix(field, rows, shape=None):
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise WorkspaceParseError("matrix must be a list of rows")
    parsed = [[_scalar(field, v) for v in r] for r in rows]
    if shape is not None:
        n, m = shape
        if len(parsed) != n or any(len(r) != m for r in parsed):
            raise WorkspaceParseError("matrix has wrong shape")
    if not parsed:
        return Matrix(field, 0, 0, [])
    return Matrix.from_rows(field, parsed)


def scalar_str(field, v):
    return field.to_str(v)


def matrix_json(m: Matrix):
    ts = m.field.to_str
    return [[ts(x) for x in m.row(i)] for i in range(m.rows)]


def subspace_json(s: Subspace):
    return {"ambient_dim": s.ambient_dim, "dim": s.dim,
            "basis": matrix_json(s.basis)}


class Workspace:
    """Parsed and validated workspace: named algebras and bimodules plus an
    ordered task list."""

    def __init__(self, field, algebras, bimodules, tasks):
        self.field = field
        self.algebras = algebras
        self.bimodules = bimodules
        self.tasks = tasks


def parse_workspace(doc: dict, field: Field = None) -> Workspace:
    try:
        jsonschema.validate(doc, _schema())
    except jsonschema.ValidationError as e:
        raise WorkspaceParseError("schema violation: %s" % e.message)
    if field is None:
        field = parse_field_spec(doc.get("field"))
    algebras: dict = {}
    for name, spec in doc["algebras"].items():
        algebras[name] = _build_algebra(field, spec, algebras)
    bimodules: dict = {}
    for name, spec in doc["bimodules"].items():
        bimodules[name] = _build_bimodule(field, spec, algebras, bimodules)
        bimodules[name].label = name
    return Workspace(field, algebras, bimodules, doc["tasks"])


def serialize_workspace(ws: Workspace) -> dict:
    """Explicit document (structure constants and action matrices spelled
    out) that re-parses to a semantically identical workspace."""
    f = ws.field
    doc = {"field": {"characteristic": f.characteristic},
           "algebras": {}, "bimodules": {}, "tasks": [dict(t) for t in ws.tasks]}
    for name, a in ws.algebras.items():
        doc["algebras"][name] = {
            "structure_constants": [[[f.to_str(v) for v in cell]
                                     for cell in row] for row in a.table],
            "unit": [f.to_str(v) for v in a.unit],
        }

    def algebra_name(alg):
        for n, a in ws.algebras.items():
            if a.same_as(alg):
                return n
        raise ValidationError("bimodule references an unnamed algebra")

    for name, m in ws.bimodules.items():
        doc["bimodules"][name] = {
            "left_algebra": algebra_name(m.left_algebra),
            "right_algebra": algebra_name(m.right_algebra),
            "dim": m.dim,
            "left_actions": [matrix_json(x) for x in m.left_actions],
            "right_actions": [matrix_json(x) for x in m.right_actions],
        }
    return doc


def _resolve(table, name, what):
    if name not in table:
        raise ValidationError("unknown %s %r" % (what, name))
    return table[name]


def _build_algebra(field, spec, algebras):
    if "builtin" in spec:
        b = spec["builtin"]
        if b == "dual_numbers":
            return alg.dual_numbers(field)
        if b == "square_zero_pair":
            return alg.square_zero_pair(field)
        if b == "ground_field":
            return alg.ground_field_algebra(field)
        if b == "truncated_polynomial":
            return alg.truncated_polynomial(spec.get("n", 2), field)
        if b == "matrix_algebra":
            return alg.matrix_algebra(spec.get("n", 2), field)
        if b == "upper_triangular":
            return alg.upper_triangular(spec.get("n", 2), field)
        if b == "product":
            parts = [_resolve(algebras, n, "algebra") for n in spec["of"]]
            return alg.product(*parts)
        raise WorkspaceParseError("unknown builtin %r" % b)
    table = spec["structure_constants"]
    dim = len(table)
    parsed = [[[_scalar(field, v) for v in cell] for cell in row] for row in table]
    unit = [_scalar(field, v) for v in spec["unit"]]
    a = alg.Algebra(field, dim, parsed, unit)
    problems = alg.validate(a)
    if problems:
        raise ValidationError("algebra invalid: " + "; ".join(problems[:3]))
    return a


def _build_bimodule(field, spec, algebras, bimodules):
    if "construct" in spec:
        c = spec["construct"]
        if c == "regular":
            return bim.regular_bimodule(_resolve(algebras, spec["algebra"], "algebra"))
        if c == "simple":
            return bim.simple_module_of_local(
                _resolve(algebras, spec["algebra"], "algebra"))
        if c == "dual":
            return bim.dual_bimodule(_resolve(bimodules, spec["of"], "bimodule"))
        if c == "twist":
            a = _resolve(algebras, spec["algebra"], "algebra")
            psi = alg.AlgebraMorphism(a, a, _matrix(field, spec["automorphism"],
                                                    (a.dim, a.dim)))
            return bim.twist_bimodule(a, psi)
        if c == "direct_sum":
            return bim.direct_sum([_resolve(bimodules, n, "bimodule")
                                   for n in spec["of"]])
        if c == "tensor_over":
            x, y = [_resolve(bimodules, n, "bimodule") for n in spec["of"]]
            return ten.tensor_over(x, y).result
        if c == "cotensor_over":
            x, y = [_resolve(bimodules, n, "bimodule") for n in spec["of"]]
            return ten.cotensor_over(x, y).result
        if c == "second_tensor":
            x, y = [_resolve(bimodules, n, "bimodule") for n in spec["of"]]
            return dua.second_tensor(x, y)
        raise WorkspaceParseError("unknown construct %r" % c)
    la = _resolve(algebras, spec["left_algebra"], "algebra")
    ra = _resolve(algebras, spec["right_algebra"], "algebra")
    dim = spec["dim"]
    lam = [_matrix(field, m, (dim, dim)) for m in spec["left_actions"]]
    rho = [_matrix(field, m, (dim, dim)) for m in spec["right_actions"]]
    m = bim.Bimodule(la, ra, dim, lam, rho)
    problems = m.check()
    if problems:
        raise ValidationError("bimodule invalid: " + "; ".join(problems[:3]))
    return m


# -- task execution ------------------------------------------------------------------

def _task_result(ws: Workspace, op: str, args, seed: int):
    get = lambda n: _resolve(ws.bimodules, n, "bimodule")
    if op == "tensor_over":
        pres = ten.tensor_over(get(args[0]), get(args[1]))
        return {"dim": pres.result.dim,
                "relations": subspace_json(kernel(pres.structural_map))}
    if op == "cotensor_over":
        pres = ten.cotensor_over(get(args[0]), get(args[1]))
        return {"dim": pres.result.dim,
                "subspace": subspace_json(image(pres.structural_map))}
    if op == "second_tensor":
        return {"dim": dua.second_tensor(get(args[0]), get(args[1])).dim}
    if op == "balancing_map":
        m = ten.balancing_map(get(args[0]), get(args[1]))
        return {"rows": m.rows, "cols": m.cols, "rank": rref(m).rank}
    if op == "hom_space":
        s = bim.hom_space(get(args[0]), get(args[1]))
        return {"dim": s.dim, "basis": matrix_json(s.basis)}
    if op == "socle_left":
        return subspace_json(bim.socle_left(get(args[0])))
    if op == "socle_right":
        return subspace_json(bim.socle_right(get(args[0])))
    if op == "radical":
        return subspace_json(alg.radical(_resolve(ws.algebras, args[0], "algebra")))
    if op == "are_isomorphic":
        rep = bim.are_isomorphic(get(args[0]), get(args[1]), seed=seed)
        return {"isomorphic": rep.isomorphic, "certainty": rep.certainty,
                "reason": rep.reason}
    if op in ("is_projective_right", "is_projective_left",
              "is_injective_left", "is_injective_right"):
        fn = getattr(bim, op)
        return {"value": bool(fn(get(args[0])))}
    if op in ("internal_hom_right", "internal_hom_left",
              "internal_cohom_right", "internal_cohom_left"):
        res = getattr(dua, op)(get(args[0]), get(args[1]))
        return {"dim": res.object.dim, "variant": res.variant}
    if op == "varpi":
        vr = dua.varpi(get(args[0]), get(args[1]))
        return {"dim": vr.hom_tensor_side.dim, "bijective": vr.check()}
    if op == "evaluation":
        ev = dua.evaluation(get(args[0]), get(args[1]),
                            args[2] if len(args) > 2 else "right")
        return {"source_dim": ev.source.dim, "target_dim": ev.target.dim,
                "is_zero": ev.is_zero()}
    if op in ("distributor_left", "distributor_right"):
        fn = dist.distributor_left if op.endswith("left") else dist.distributor_right
        res = fn(get(args[0]), get(args[1]), get(args[2]))
        return {"source_dim": res.map.source.dim,
                "target_dim": res.map.target.dim,
                "kernel_dim": res.kernel.dim, "image_dim": res.image.dim,
                "is_zero": res.map.is_zero(),
                "is_isomorphism": res.is_isomorphism,
                "kernel": subspace_json(res.kernel),
                "image": subspace_json(res.image)}
    if op in ("tilde_left", "tilde_right"):
        side = "left" if op == "tilde_left" else "right"
        res = dist.tilde_variants(get(args[0]), get(args[1]), get(args[2]), side)
        return {"kernel_dim": res.kernel.dim, "image_dim": res.image.dim,
                "agrees_with_plain": True}
    if op == "check_pentagons":
        rep = dist.check_mixed_pentagons(*[get(a) for a in args[:4]])
        return {"all_commute": rep.all_commute,
                "entries": {n: ok for n, ok, _ in rep.entries}}
    if op == "check_triangles":
        rep = dist.check_triangles(get(args[0]), get(args[1]))
        return {"all_commute": rep.all_commute,
                "entries": {n: ok for n, ok, _ in rep.entries}}
    if op == "strongness":
        rep = dist.strongness_report(get(args[0]))
        return {"right": list(rep.right.answers), "left": list(rep.left.answers),
                "consistent": rep.consistent,
                "strong_right": rep.right.projective,
                "strong_left": rep.left.projective}
    if op == "flatness_implications":
        reps = dist.flatness_implications(get(args[0]), get(args[1]), get(args[2]))
        return {"implications": [
            {"name": r.name, "hypothesis": r.hypothesis,
             "conclusion": r.conclusion, "holds": r.holds} for r in reps],
            "all_hold": all(r.holds for r in reps)}
    raise WorkspaceParseError("unknown op %r" % op)


def _check_expectations(expect, result):
    details = {}
    ok = True
    for key, want in (expect or {}).items():
        actual = result
        for part in key.split("."):
            actual = actual.get(part) if isinstance(actual, dict) else None
        good = actual == want
        ok = ok and good
        details[key] = {"expected": want, "actual": actual, "ok": good}
    return ok, details


def run_workspace(ws: Workspace, seed: int = 0) -> tuple:
    """Execute every task in order; returns (exit_code, report)."""
    report = {
        "field": {"characteristic": ws.field.characteristic},
        "algebras": {n: {"dim": a.dim} for n, a in ws.algebras.items()},
        "bimodules": {n: {"dim": m.dim} for n, m in ws.bimodules.items()},
        "tasks": [],
        "all_passed": True,
    }
    for task in ws.tasks:
        result = _task_result(ws, task["op"], task["args"], seed)
        ok, details = _check_expectations(task.get("expect"), result)
        report["tasks"].append({
            "op": task["op"], "args": task["args"], "result": result,
            "assertions": {"passed": ok, "details": details},
        })
        report["all_passed"] = report["all_passed"] and ok
    return (EXIT_OK if report["all_passed"] else EXIT_ASSERTION), report


def load_and_run(path: str, field: Field = None, seed: int = 0) -> tuple:
    """Parse, validate and execute a workspace file; never raises for the
    documented error classes, returning the matching exit code instead."""
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        return EXIT_PARSE, {"error": "parse", "message": str(e)}
    try:
        ws = parse_workspace(doc, field)
    except WorkspaceParseError as e:
        return EXIT_PARSE, {"error": "parse", "message": str(e)}
    except ValidationError as e:
        return EXIT_VALIDATION, {"error": "validation", "message": str(e)}
    try:
        return run_workspace(ws, seed=seed)
    except ValidationError as e:
        return EXIT_VALIDATION, {"error": "validation", "message": str(e)}
    except WorkspaceParseError as e:
        return EXIT_PARSE, {"error": "parse", "message": str(e)}


def report_to_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=False) + "\n"
