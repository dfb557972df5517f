"""Catalog of concrete series identities and the family instantiator.

Each :class:`IdentityRecord` pairs a left-hand :class:`~.series.SeriesSpec`
with a right-hand side given either as an exact expression tree or as a
bound closed-form family.  The built-in catalog ships as a JSON data file
inside the package; every record's stored convergence class is re-checked
against :func:`~.series.classify` at load time.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Optional, Union

from mpmath import mpf

from . import expressions
from .closed_forms import TheoremParams, theorem_lhs_spec, theorem_rhs
from .errors import InvalidParams
from .precision import PrecisionContext, make_context
from .sequences import HoradamParams
from .series import ConvergenceClass, SeriesSpec, UNIT_WEIGHT, Weight, classify

_DATA_FILE = "builtin_catalog.json"


@dataclass(frozen=True)
class IdentityRecord:
    id: str
    note: str
    lhs: SeriesSpec
    rhs: Union[expressions.Expr, TheoremParams]
    validity: str
    convergence: str  # ConvergenceClass kind expected for lhs
    tags: tuple = ()

    def rhs_value(self, ctx: PrecisionContext) -> mpf:
        if isinstance(self.rhs, TheoremParams):
            return theorem_rhs(self.rhs, ctx)
        return expressions.eval_expr(self.rhs, ctx)


# -- (de)serialization ---------------------------------------------------

def _weight_to_json(w: Weight) -> dict:
    obj = {"kind": w.kind}
    if w.kind != "unit":
        obj["m"] = w.m
    if w.kind == "horadam":
        h = w.params
        obj["params"] = [h.p, h.q, h.a, h.b]
    return obj


def _weight_from_json(obj: dict) -> Weight:
    kind = obj["kind"]
    if kind == "unit":
        return UNIT_WEIGHT
    if kind == "horadam":
        return Weight(kind, obj["m"], HoradamParams(*obj["params"]))
    return Weight(kind, obj["m"])


def _z_to_json(z) -> Union[str, dict]:
    if isinstance(z, Fraction):
        return f"{z.numerator}/{z.denominator}"
    return expressions.to_json(z)


def _z_from_json(obj) -> Union[Fraction, expressions.Expr]:
    if isinstance(obj, str):
        num, _, den = obj.partition("/")
        return Fraction(int(num), int(den) if den else 1)
    return expressions.from_json(obj)


def _params_to_json(params: TheoremParams) -> dict:
    obj = {"family": params.family}
    for name in ("r", "n", "m", "p", "q"):
        value = getattr(params, name)
        if value is not None:
            obj[name] = value
    if params.horadam is not None:
        h = params.horadam
        obj["horadam"] = [h.p, h.q, h.a, h.b]
    return obj


def _params_from_json(obj: dict) -> TheoremParams:
    horadam = HoradamParams(*obj["horadam"]) if "horadam" in obj else None
    return TheoremParams(obj["family"],
                         r=obj.get("r"), n=obj.get("n"), m=obj.get("m"),
                         p=obj.get("p"), q=obj.get("q"), horadam=horadam)


def record_to_json(record: IdentityRecord) -> dict:
    if isinstance(record.rhs, TheoremParams):
        rhs = {"family": _params_to_json(record.rhs)}
    else:
        rhs = {"expr": expressions.to_json(record.rhs)}
    return {
        "id": record.id,
        "note": record.note,
        "lhs": {
            "z": _z_to_json(record.lhs.z),
            "a": record.lhs.a,
            "weight": _weight_to_json(record.lhs.weight),
        },
        "rhs": rhs,
        "validity": record.validity,
        "convergence": record.convergence,
        "tags": list(record.tags),
    }


def record_from_json(obj: dict) -> IdentityRecord:
    lhs_obj = obj["lhs"]
    lhs = SeriesSpec(_z_from_json(lhs_obj["z"]), lhs_obj["a"],
                     _weight_from_json(lhs_obj["weight"]), label=obj["id"])
    rhs_obj = obj["rhs"]
    if "family" in rhs_obj:
        rhs = _params_from_json(rhs_obj["family"])
    else:
        rhs = expressions.from_json(rhs_obj["expr"])
    return IdentityRecord(obj["id"], obj["note"], lhs, rhs,
                          obj["validity"], obj["convergence"],
                          tuple(obj["tags"]))


# -- catalog loading -----------------------------------------------------

def _check_catalog(records: list[IdentityRecord]) -> None:
    ctx = make_context(20)
    seen = set()
    for record in records:
        if record.id in seen:
            raise ValueError(f"duplicate record id {record.id!r}")
        seen.add(record.id)
        actual = classify(record.lhs, ctx).kind
        if actual != record.convergence:
            raise ValueError(
                f"record {record.id!r} declares convergence "
                f"{record.convergence!r} but classifies as {actual!r}")


def load_catalog(path: Union[str, Path]) -> list[IdentityRecord]:
    """Load and validate a catalog JSON file."""
    with open(path, encoding="utf-8") as handle:
        data = json.load(handle)
    records = [record_from_json(obj) for obj in data]
    _check_catalog(records)
    return records


def save_catalog(records: list[IdentityRecord], path: Union[str, Path]) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump([record_to_json(r) for r in records], handle, indent=1)
        handle.write("\n")


_builtin_cache: Optional[list[IdentityRecord]] = None


def builtin_catalog() -> list[IdentityRecord]:
    """The packaged catalog (validated once, cached, treated as immutable)."""
    global _builtin_cache
    if _builtin_cache is None:
        data = resources.files("binom3k") / "data" / _DATA_FILE
        records = [record_from_json(obj)
                   for obj in json.loads(data.read_text(encoding="utf-8"))]
        _check_catalog(records)
        _builtin_cache = records
    return list(_builtin_cache)


def get_record(catalog: list[IdentityRecord], record_id: str) -> IdentityRecord:
    for record in catalog:
        if record.id == record_id:
            return record
    raise KeyError(f"no record with id {record_id!r}")


# -- construction helpers ------------------------------------------------

def scan_perfect_square(t_max: int) -> list[Fraction]:
    """Positive arguments z = (81 - t^2)/12 with integer t in [0, t_max].

    These are exactly the z at which sqrt(81 - 12z) is an integer, so the
    base closed form takes algebraic surd values.  Returned in decreasing
    order (t increasing).
    """
    if t_max < 0:
        raise ValueError("t_max must be >= 0")
    out = []
    for t in range(t_max + 1):
        z = Fraction(81 - t * t, 12)
        if z > 0:
            out.append(z)
    return out


def instantiate(family: str, params: TheoremParams) -> IdentityRecord:
    """Build a fresh record for one bound family instance."""
    if params.family != family:
        params = TheoremParams(family, r=params.r, n=params.n, m=params.m,
                               p=params.p, q=params.q, horadam=params.horadam)
    lhs = theorem_lhs_spec(params)  # raises InvalidParams on bad params
    ctx = make_context(20)
    kind = classify(lhs, ctx).kind
    if kind == "divergent_formal":
        raise InvalidParams(
            f"{params.describe()}: series argument exceeds the radius 27/4")
    slug = params.describe().lower().replace(" ", "-").replace("=", "")
    return IdentityRecord(
        id=slug.replace("_", "-"),
        note=f"instantiated family {params.describe()}",
        lhs=lhs, rhs=params,
        validity="family constraints hold",
        convergence=kind,
        tags=("instantiated", params.family.lower()),
    )
