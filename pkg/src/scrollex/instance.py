"""Problem-instance documents: strict JSON parsing with pointered errors.

An instance is a JSON object with the fields

    vertices    list of distinct vertex names
    edges       list of two-element vertex lists
    facets      optional; must equal the maximal cliques of the graph
    extensions  list of {facet, x0, blocks:[{x, y:[...]}, ...]}

Unknown fields are rejected.  Every error carries a JSON-pointer-style path
into the document.
"""

from __future__ import annotations

import hashlib
import json

from .extension import ExtensionError, ScrollBlock, ScrollMatrix, validate_extension
from .graphs import CliqueComplex, Graph, GraphError


class InstanceError(ValueError):
    """Schema or semantic violation, located by a document path."""

    def __init__(self, path, message):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.message = message


def _expect(cond, path, message):
    if not cond:
        raise InstanceError(path, message)


def _check_keys(obj, allowed, path):
    _expect(isinstance(obj, dict), path, "expected an object")
    for key in obj:
        if key not in allowed:
            raise InstanceError(f"{path}/{key}", "unknown field")


def _string_list(value, path):
    _expect(isinstance(value, list), path, "expected a list")
    for k, v in enumerate(value):
        _expect(isinstance(v, str) and v, f"{path}/{k}", "expected a nonempty string")
    return list(value)


def parse_instance(document):
    """Parse and fully validate an instance; returns (Extension, canonical dict).

    ``document`` may be a JSON string or an already-decoded object.
    """
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as e:
            raise InstanceError("", f"invalid JSON: {e}") from None
    _check_keys(document, {"vertices", "edges", "facets", "extensions"}, "")
    _expect("vertices" in document, "/vertices", "missing")
    _expect("edges" in document, "/edges", "missing")

    vertices = _string_list(document["vertices"], "/vertices")
    seen = set()
    for k, v in enumerate(vertices):
        if v in seen:
            raise InstanceError(f"/vertices/{k}", f"duplicate vertex {v!r}")
        seen.add(v)

    raw_edges = document["edges"]
    _expect(isinstance(raw_edges, list), "/edges", "expected a list")
    edges = []
    for k, e in enumerate(raw_edges):
        _expect(
            isinstance(e, list) and len(e) == 2,
            f"/edges/{k}",
            "expected a two-element list",
        )
        u, w = e
        for v in (u, w):
            _expect(isinstance(v, str), f"/edges/{k}", "expected vertex names")
            _expect(v in seen, f"/edges/{k}", f"unknown vertex {v!r}")
        _expect(u != w, f"/edges/{k}", "loop edge")
        edges.append((u, w))

    try:
        graph = Graph(vertices, edges)
    except GraphError as e:
        raise InstanceError("/edges", str(e)) from None

    facets_doc = document.get("facets")
    if facets_doc is not None:
        _expect(isinstance(facets_doc, list), "/facets", "expected a list")
        declared = []
        for k, f in enumerate(facets_doc):
            names = _string_list(f, f"/facets/{k}")
            for v in names:
                _expect(v in seen, f"/facets/{k}", f"unknown vertex {v!r}")
            declared.append(frozenset(names))
    else:
        declared = None
    try:
        cx = CliqueComplex(graph, declared)
    except GraphError as e:
        raise InstanceError("/facets", str(e)) from None

    exts_doc = document.get("extensions", [])
    _expect(isinstance(exts_doc, list), "/extensions", "expected a list")
    matrices = []
    base_names = set(vertices)
    y_names = set()
    for i, ex in enumerate(exts_doc):
        _check_keys(ex, {"facet", "x0", "blocks"}, f"/extensions/{i}")
        for field in ("facet", "x0", "blocks"):
            _expect(field in ex, f"/extensions/{i}/{field}", "missing")
        facet = frozenset(_string_list(ex["facet"], f"/extensions/{i}/facet"))
        x0 = ex["x0"]
        _expect(isinstance(x0, str), f"/extensions/{i}/x0", "expected a string")
        blocks_doc = ex["blocks"]
        _expect(isinstance(blocks_doc, list) and blocks_doc,
                f"/extensions/{i}/blocks", "expected a nonempty list")
        blocks = []
        for j, b in enumerate(blocks_doc):
            _check_keys(b, {"x", "y"}, f"/extensions/{i}/blocks/{j}")
            for field in ("x", "y"):
                _expect(field in b, f"/extensions/{i}/blocks/{j}/{field}", "missing")
            _expect(isinstance(b["x"], str), f"/extensions/{i}/blocks/{j}/x",
                    "expected a string")
            ys = _string_list(b["y"], f"/extensions/{i}/blocks/{j}/y")
            for v in ys:
                if v in base_names or v in y_names:
                    raise InstanceError(
                        f"/extensions/{i}/blocks/{j}",
                        f"new variable {v!r} collides with an existing name",
                    )
                y_names.add(v)
            blocks.append(ScrollBlock(b["x"], tuple(ys)))
        matrices.append(ScrollMatrix(facet, x0, blocks))

    try:
        ext = validate_extension(cx, matrices)
    except ExtensionError as e:
        path = "/extensions"
        if e.matrix_index is not None:
            path += f"/{e.matrix_index}"
            if e.block_index is not None:
                path += f"/blocks/{e.block_index}"
        raise InstanceError(path, str(e)) from None

    canonical = canonical_document(ext)
    return ext, canonical


def canonical_document(ext):
    """The normalized instance dict: sorted edges, facets, stable extension order."""
    g = ext.base.skeleton
    doc = {
        "vertices": list(g.vertices),
        "edges": [list(e) for e in sorted(g.edges, key=lambda e: (g.rank[e[0]], g.rank[e[1]]))],
        "facets": [list(f) for f in ext.base.facets],
        "extensions": [
            {
                "facet": sorted(m.facet, key=g.rank.get),
                "x0": m.x0,
                "blocks": [{"x": b.x, "y": list(b.y)} for b in m.blocks],
            }
            for m in ext.matrices
        ],
    }
    return doc


def instance_digest(canonical):
    """sha256 over the canonical serialization of the instance document."""
    blob = json.dumps(canonical, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()
