"""Body documents: versioned JSON serialization with re-validation on load."""

from __future__ import annotations

import json
from typing import Any

from .bodies import Body, ConvexPolygon, DiskPolygon, Edge
from .errors import LunekitError, SchemaError
from .regions import Cap
from .sphere import SpherePoint

__all__ = ["SCHEMA_VERSION", "to_document", "from_document", "save_body", "load_body"]

SCHEMA_VERSION = "1"

_KNOWN_FIELDS = {"schema_version", "kind", "data", "metadata"}


def _vec(p: SpherePoint) -> list[float]:
    return [p.x, p.y, p.z]


def to_document(body: Body, metadata: dict | None = None) -> dict:
    """Serializable document for a body; vectors as 3-element arrays."""
    if isinstance(body, Cap):
        kind, data = "cap", {"center": _vec(body.center), "radius": body.radius}
    elif isinstance(body, ConvexPolygon):
        kind, data = "polygon", {"vertices": [_vec(v) for v in body.vertices]}
    elif isinstance(body, DiskPolygon):
        edges = []
        for e in body.edges:
            if e.center is None:
                edges.append(
                    {"kind": "geodesic", "start": _vec(e.start), "end": _vec(e.end)}
                )
            else:
                edges.append(
                    {
                        "kind": "arc",
                        "start": _vec(e.start),
                        "end": _vec(e.end),
                        "center": _vec(e.center),
                        "radius": e.radius,
                    }
                )
        kind, data = "disk_polygon", {"edges": edges}
    else:
        raise SchemaError(f"not a body: {type(body).__name__}")
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": kind,
        "data": data,
        "metadata": dict(metadata or {}),
    }


def _point(v: Any) -> SpherePoint:
    if not isinstance(v, (list, tuple)) or len(v) != 3:
        raise SchemaError(f"expected a 3-element vector, got {v!r}")
    return SpherePoint(float(v[0]), float(v[1]), float(v[2]))


def from_document(doc: dict, strict: bool = False) -> tuple[Body, dict]:
    """Body and metadata from a document; all invariants re-validated.

    In strict mode unknown top-level fields are rejected; otherwise they are
    preserved under metadata["extra"].
    """
    if not isinstance(doc, dict):
        raise SchemaError("document must be a JSON object")
    unknown = set(doc) - _KNOWN_FIELDS
    if unknown and strict:
        raise SchemaError(f"unknown fields: {sorted(unknown)}")
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema_version: {doc.get('schema_version')!r}")
    metadata = dict(doc.get("metadata") or {})
    if unknown:
        metadata.setdefault("extra", {}).update({k: doc[k] for k in sorted(unknown)})
    kind = doc.get("kind")
    data = doc.get("data")
    if not isinstance(data, dict):
        raise SchemaError("missing data object")
    try:
        if kind == "cap":
            body: Body = Cap(center=_point(data["center"]), radius=float(data["radius"]))
        elif kind == "polygon":
            body = ConvexPolygon(
                vertices=tuple(_point(v) for v in data["vertices"])
            )
        elif kind == "disk_polygon":
            edges = []
            for e in data["edges"]:
                if e.get("kind") == "geodesic":
                    edges.append(Edge(start=_point(e["start"]), end=_point(e["end"])))
                elif e.get("kind") == "arc":
                    edges.append(
                        Edge(
                            start=_point(e["start"]),
                            end=_point(e["end"]),
                            center=_point(e["center"]),
                            radius=float(e["radius"]),
                        )
                    )
                else:
                    raise SchemaError(f"unknown edge kind: {e.get('kind')!r}")
            body = DiskPolygon(edges=tuple(edges))
        else:
            raise SchemaError(f"unknown body kind: {kind!r}")
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"malformed body data: {exc}") from exc
    except LunekitError as exc:
        raise SchemaError(f"body violates invariants: {exc}") from exc
    return body, metadata


def save_body(path: str, body: Body, metadata: dict | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(to_document(body, metadata), fh, indent=2)
        fh.write("\n")


def load_body(path: str, strict: bool = False) -> tuple[Body, dict]:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc}") from exc
    return from_document(doc, strict=strict)
