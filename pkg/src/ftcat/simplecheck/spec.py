"""Algebra spec JSON.

Two forms are accepted.  A presentation::

    {"field": "Q", "generators": ["y"], "relations": [["y y", {"1": 1}]],
     "actions": {...}, "derivations": {...}, "commutations": [...],
     "parity": "u", "nilpotence_degree": 1, "dimension_bound": 64}

or a named builder with its parameters::

    {"builder": "taft_A", "l": 3, "d": 1, "lambda": 1}
"""

from __future__ import annotations

from typing import Any, Mapping

from ..errors import BadParameter, FtcatError, InvalidInput
from .algebra import EquivariantAlgebra
from .fields import ExactField
from .presentation import build_from_presentation, parse_scalar
from . import builders


def _field(obj: Mapping, default_l: int | None = None) -> ExactField:
    if "field" in obj:
        return ExactField.from_json(obj["field"])
    if default_l is not None:
        return ExactField.cyclotomic(default_l)
    return ExactField.rationals()


def _relations(raw) -> list:
    out = []
    if not isinstance(raw, list):
        raise InvalidInput("'relations' must be a list")
    for r in raw:
        if isinstance(r, Mapping):
            lhs, rhs = r.get("lhs"), r.get("rhs", {})
        elif isinstance(r, (list, tuple)) and len(r) == 2:
            lhs, rhs = r
        else:
            raise InvalidInput(f"bad relation {r!r}")
        if not isinstance(rhs, Mapping):
            raise InvalidInput(f"relation right side must map words to scalars: {r!r}")
        out.append((lhs, dict(rhs)))
    return out


def _matrix_table(field: ExactField, table):
    """Group-indexed tables arrive as {"(0,1)": ...} or [[key, value], ...]."""
    if table is None:
        return None
    items = table.items() if isinstance(table, Mapping) else table
    out = {}
    for k, v in items:
        if isinstance(k, str):
            k = tuple(int(x) for x in k.strip("()[] ").split(",") if x.strip())
        elif isinstance(k, list):
            k = tuple(k)
        if isinstance(v, list) and v and isinstance(v[0], list):
            v = [[parse_scalar(field, x) for x in row] for row in v]
        else:
            v = parse_scalar(field, v)
        out[k] = v
    return out


def _psi(field: ExactField, raw):
    """Cocycle tables are lists of [g, h, value] triples."""
    if raw is None:
        return None
    if raw == "klein":
        return builders.klein_pauli(field)[0]
    out = {}
    for g, h, v in raw:
        out[(tuple(g) if isinstance(g, list) else g, tuple(h) if isinstance(h, list) else h)] = \
            parse_scalar(field, v)
    return out


def _V(field: ExactField, raw):
    if raw is None:
        return None
    if raw == "klein":
        return builders.klein_pauli(field)[1]
    return _matrix_table(field, raw)


def _subgroup(raw):
    if isinstance(raw, list):
        return [tuple(x) if isinstance(x, list) else x for x in raw]
    return raw


def _builder(obj: Mapping[str, Any]) -> EquivariantAlgebra:
    kind = obj["builder"]
    cap = obj.get("dim_cap", builders.DEFAULT_DIM_CAP)
    if kind == "taft_A":
        l, d = int(obj["l"]), int(obj.get("d", 1))
        field = _field(obj, l)
        return builders.build_taft_A(l, d, parse_scalar(field, obj.get("lambda", 1)), field)
    if kind == "taft_hopf":
        l = int(obj["l"])
        return builders.taft_hopf_algebra(l, _field(obj, l))
    field = _field(obj)
    if kind == "group_quotient":
        return builders.build_group_quotient(obj["G"], _subgroup(obj.get("H")), _psi(field, obj.get("psi")),
                                             _V(field, obj.get("V")), field, cap)
    if kind == "clifford_smash":
        return builders.build_clifford_smash(obj["H"], int(obj["y_dim"]), obj.get("B", []),
                                             _psi(field, obj.get("psi")), obj.get("w_dim"),
                                             obj.get("w_action"), obj.get("u"), field, cap)
    if kind == "supergroup":
        return builders.supergroup_internal_hom(
            obj["G"], _subgroup(obj.get("H")), obj.get("Y"), obj.get("B", ()),
            _psi(field, obj.get("psi")), _V(field, obj.get("V")), int(obj.get("w_dim", 1)),
            obj.get("w_action"), obj.get("u"), field, cap)
    if kind == "exterior":
        return builders.exterior_one(field, bool(obj.get("structure", True)))
    if kind == "clifford":
        return builders.clifford_one(parse_scalar(field, obj.get("b", 1)), field)
    if kind == "group_algebra_z2":
        return builders.group_algebra_z2(field)
    if kind == "trivial_action_square":
        return builders.trivial_action_square(field)
    raise BadParameter(f"unknown builder {kind!r}")


def algebra_from_json(obj: Mapping[str, Any]) -> EquivariantAlgebra:
    """Build an equivariant algebra from a decoded spec object."""
    if not isinstance(obj, Mapping):
        raise InvalidInput("algebra spec must be an object")
    try:
        if "builder" in obj:
            return _builder(obj)
        if "generators" not in obj or "relations" not in obj:
            raise InvalidInput("algebra spec needs 'generators' and 'relations' (or 'builder')")
        return build_from_presentation(
            obj["generators"], _relations(obj["relations"]), _field(obj),
            dimension_bound=int(obj.get("dimension_bound", 64)),
            actions=obj.get("actions"), derivations=obj.get("derivations"),
            commutations=[tuple(c) for c in obj.get("commutations", [])],
            parity=obj.get("parity"), nilpotence_degree=obj.get("nilpotence_degree"))
    except FtcatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInput(f"bad algebra spec: {exc!r}") from None
