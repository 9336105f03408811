"""JSON documents. Rationals travel as canonical strings ("p/q" or an integer); no floats."""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional

from .errors import InputFileError, MalformedJSONError, SchemaError
from .families import Pair, PairFamily, WeakSeparationWitness
from .generators import CompactModel, SigmaSequence, node, node_str
from .maximality import CoordinateReport, Region
from .msearch import MSearchReport
from .supnorm import PointSet

SCHEMA_VERSION = "equilat/1"

_RATIONAL = re.compile(r"-?\d+(/\d+)?")


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def parse_rational(s: Any) -> Fraction:
    if isinstance(s, bool) or isinstance(s, float):
        raise SchemaError(f"rational must be a string or integer, got {s!r}")
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str) or not _RATIONAL.fullmatch(s.strip()):
        raise SchemaError(f"not a rational literal: {s!r}")
    try:
        return Fraction(s.strip())
    except ZeroDivisionError:
        raise SchemaError(f"zero denominator in {s!r}") from None


def _require(doc: Any, key: str, kind):
    if not isinstance(doc, dict) or key not in doc:
        raise SchemaError(f"missing field {key!r}")
    value = doc[key]
    if not isinstance(value, kind) or isinstance(value, bool) and kind is not bool:
        raise SchemaError(f"field {key!r} has the wrong type")
    return value


def _int_set(values: Any, what: str) -> list[int]:
    if not isinstance(values, list) or any(
        isinstance(v, bool) or not isinstance(v, int) for v in values
    ):
        raise SchemaError(f"{what} must be an array of integers")
    return values


# families


def family_to_doc(F: PairFamily) -> dict:
    return {
        "ground_size": F.ground_size,
        "pairs": [{"A": sorted(p.A), "B": sorted(p.B)} for p in F],
    }


def family_from_doc(doc: Any) -> PairFamily:
    n = _require(doc, "ground_size", int)
    pairs = []
    for item in _require(doc, "pairs", list):
        A = _int_set(_require(item, "A", list), "A")
        B = _int_set(_require(item, "B", list), "B")
        if any(not 0 <= e < n for e in A + B):
            raise SchemaError(f"pair element outside ground set of size {n}")
        pairs.append(Pair.of(A, B))
    return PairFamily(n, pairs)


def witness_to_doc(W: WeakSeparationWitness, ground_size: int) -> dict:
    return {
        "ground_size": ground_size,
        "items": [{"F": sorted(f), "V": sorted(v)} for f, v in W.items],
    }


def witness_from_doc(doc: Any) -> tuple[WeakSeparationWitness, int]:
    n = _require(doc, "ground_size", int)
    items = [
        (_int_set(_require(it, "F", list), "F"), _int_set(_require(it, "V", list), "V"))
        for it in _require(doc, "items", list)
    ]
    return WeakSeparationWitness(tuple(items)), n


# points


def point_to_doc(p) -> list[str]:
    return [format_rational(c) for c in p]


def points_to_doc(S: PointSet) -> dict:
    return {"dim": S.dim, "points": [point_to_doc(p) for p in S]}


def points_from_doc(doc: Any) -> PointSet:
    d = _require(doc, "dim", int)
    rows = []
    for row in _require(doc, "points", list):
        if not isinstance(row, list):
            raise SchemaError("each point must be an array")
        rows.append(tuple(parse_rational(c) for c in row))
    return PointSet(d, rows)


def region_to_doc(R: Region) -> dict:
    return {
        "empty": R.is_empty,
        "boxes": [{"lo": point_to_doc(b.lo), "hi": point_to_doc(b.hi)} for b in R.boxes],
    }


def forced_to_doc(reports: list[CoordinateReport]) -> list[dict]:
    out = []
    for r in reports:
        item: dict = {"coordinate": r.coordinate, "status": r.status}
        if r.status == "pinned":
            item["value"] = format_rational(r.lo)
        elif r.status == "interval":
            item["lo"] = format_rational(r.lo)
            item["hi"] = format_rational(r.hi)
        out.append(item)
    return out


def msearch_to_doc(R: MSearchReport) -> dict:
    return {
        "dim": R.dim,
        "k_max": R.k_max,
        "seed": R.seed,
        "first_maximal_size": R.first_maximal_size
        if R.first_maximal_size is not None else f"not found <= {R.k_max}",
        "m": R.m,
        "claim": R.claim,
        "certificate": points_to_doc(R.certificate) if R.certificate is not None else None,
        "certificate_family": family_to_doc(R.certificate_family)
        if R.certificate_family is not None else None,
        "sizes": [
            {
                "size": s.size,
                "skeletons": s.skeletons,
                "realizations": s.realizations,
                "trials": s.trials,
                "failures": s.failures,
            }
            for s in R.sizes
        ],
    }


# tree objects


def sigma_to_doc(sigma: SigmaSequence) -> dict:
    doc: dict = {"bits": node_str(sigma.bits)}
    if sigma.tail is not None:
        doc["tail"] = {"onset": sigma.tail[0], "value": sigma.tail[1]}
    return doc


def sigma_from_doc(doc: Any) -> SigmaSequence:
    bits = _require(doc, "bits", str)
    tail = doc.get("tail")
    if tail is None:
        return SigmaSequence(node(bits))
    return SigmaSequence(node(bits), (_require(tail, "onset", int), _require(tail, "value", int)))


def antichain_to_doc(nodes) -> list[str]:
    return [node_str(s) for s in nodes]


def antichain_from_doc(doc: Any) -> list[tuple]:
    if not isinstance(doc, list) or any(not isinstance(s, str) for s in doc):
        raise SchemaError("antichain must be an array of bit strings")
    return [node(s) for s in doc]


def model_from_doc(doc: Any) -> CompactModel:
    isolated = _require(doc, "isolated", list)
    rest = doc.get("rest", [])
    limit: Optional[str] = doc.get("limit")
    return CompactModel(tuple(map(str, isolated)), limit, tuple(map(str, rest)))


def model_to_doc(model: CompactModel) -> dict:
    return {"isolated": list(model.isolated), "limit": model.limit, "rest": list(model.rest)}


# files


def load_json(path) -> Any:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputFileError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedJSONError(f"malformed JSON in {path}: {exc.msg} (line {exc.lineno})") from None


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, sort_keys=False)
