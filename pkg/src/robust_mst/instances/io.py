"""
Canonical JSON codec for instances, reports and generator metadata.

Canonical form: UTF-8, sorted keys, no insignificant whitespace, every
float printed with 17 significant digits.
"""

import json
import math
from typing import Any, Dict, Union

from pydantic import ValidationError

from ..errors import SchemaError
from ..models.graph import Graph
from ..models.instance import Instance, MinMaxInstance, TwoStageInstance
from ..models.report import InstanceMetadata, SolutionReport
from ..utils.logging import logger


INSTANCE_KEYS = {"name", "num_vertices", "edges", "first_stage_costs", "scenarios"}
REQUIRED_KEYS = {"num_vertices", "edges", "scenarios"}


def format_float(value: float) -> str:
    """Fixed float formatting used by every writer."""
    if not math.isfinite(value):
        raise ValueError(f"cannot serialise non-finite value {value}")
    return format(value, ".17g")


def canonical_json(obj: Any) -> str:
    """Serialise plain data (dicts, lists, numbers, strings, None) canonically."""
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return format_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, dict):
        items = sorted((str(k), v) for k, v in obj.items())
        return "{" + ",".join(f"{json.dumps(k, ensure_ascii=False)}:{canonical_json(v)}" for k, v in items) + "}"
    if isinstance(obj, (list, tuple, set, frozenset)):
        seq = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return "[" + ",".join(canonical_json(v) for v in seq) + "]"
    if hasattr(obj, "item"):
        # numpy scalars
        return canonical_json(obj.item())
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _json_path(loc, rename: Dict[str, str] = None) -> str:
    path = "$"
    for part in loc:
        if isinstance(part, int):
            path += f"[{part}]"
        else:
            path += "." + (rename or {}).get(part, part)
    return path


def _parse_document(data: Union[bytes, str]) -> Dict[str, Any]:
    try:
        text = data.decode("utf-8") if isinstance(data, bytes) else data
        doc = json.loads(text)
    except (UnicodeDecodeError, json.JSONDecodeError) as e:
        raise SchemaError("$", f"not valid UTF-8 JSON: {e}") from e
    if not isinstance(doc, dict):
        raise SchemaError("$", "document must be a JSON object")
    return doc


def load_instance(data: Union[bytes, str]) -> Instance:
    """
    Parse an instance document.

    Presence of "first_stage_costs" selects a TwoStageInstance.

    Raises:
        SchemaError: with the JSON path of the offending value
        RowLengthMismatch: if a cost row is not of length m
        DisconnectedGraph: if the graph is not connected
    """
    doc = _parse_document(data)
    missing = REQUIRED_KEYS - doc.keys()
    if missing:
        raise SchemaError(f"$.{sorted(missing)[0]}", "required key is missing")
    unknown = doc.keys() - INSTANCE_KEYS
    if unknown:
        raise SchemaError(f"$.{sorted(unknown)[0]}", "unknown key")
    if not isinstance(doc["scenarios"], list) or not all(isinstance(r, list) for r in doc["scenarios"]):
        raise SchemaError("$.scenarios", "must be a list of cost rows")

    try:
        graph = Graph(num_vertices=doc["num_vertices"], edges=doc["edges"])
    except ValidationError as e:
        err = e.errors()[0]
        raise SchemaError(_json_path(err["loc"]), err["msg"]) from e

    try:
        if "first_stage_costs" in doc:
            inst: Instance = TwoStageInstance(
                name=doc.get("name", ""),
                graph=graph,
                first_stage=doc["first_stage_costs"],
                scenarios=doc["scenarios"],
            )
        else:
            inst = MinMaxInstance(
                name=doc.get("name", ""),
                graph=graph,
                scenarios=doc["scenarios"],
            )
    except ValidationError as e:
        err = e.errors()[0]
        raise SchemaError(_json_path(err["loc"], {"first_stage": "first_stage_costs"}), err["msg"]) from e

    if inst.has_negative_costs:
        logger.warning(f"Instance '{inst.name}' has negative costs; only exact solvers accept it")
    return inst


def instance_to_document(inst: Instance) -> Dict[str, Any]:
    """Plain-data view of an instance in schema layout."""
    doc: Dict[str, Any] = {
        "name": inst.name,
        "num_vertices": inst.graph.num_vertices,
        "edges": [list(e) for e in inst.graph.edges],
        "scenarios": [list(row) for row in inst.scenarios],
    }
    if isinstance(inst, TwoStageInstance):
        doc["first_stage_costs"] = list(inst.first_stage)
    return doc


def save_instance(inst: Instance) -> bytes:
    """Serialise an instance canonically."""
    return canonical_json(instance_to_document(inst)).encode("utf-8")


def save_report(report: SolutionReport) -> bytes:
    """Serialise a solution report canonically."""
    return canonical_json(report.model_dump()).encode("utf-8")


def load_report(data: Union[bytes, str]) -> SolutionReport:
    """Parse a solution report document."""
    doc = _parse_document(data)
    try:
        return SolutionReport.model_validate(doc)
    except ValidationError as e:
        err = e.errors()[0]
        raise SchemaError(_json_path(err["loc"]), err["msg"]) from e


def save_metadata(meta: InstanceMetadata) -> bytes:
    """Serialise a generator sidecar canonically."""
    return canonical_json(meta.model_dump()).encode("utf-8")
