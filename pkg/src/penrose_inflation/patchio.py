"""JSON serialization of pattern patches.

Exact fields round-trip losslessly: rationals as ``"p/q"`` strings, lattice
coordinates as integers.  Display positions carry 12 significant digits and
are never read back into a computation.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction

from .lattice import level
from .pattern import Face, PatchPoint, PatternPatch, Shift, tile_kind

FORMAT_NAME = "penrose-inflation-patch"
FORMAT_VERSION = 1


class PatchFormatError(ValueError):
    """Malformed patch document; the message starts with the offending location."""


def _g12(v: float) -> float:
    return float(f"{v:.12g}")


def patch_to_dict(patch: PatternPatch) -> dict:
    return {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "shift": patch.shift.as_strings(),
        "radius": patch.radius,
        "points": [{"x": list(p.x), "n": p.n, "pos": [_g12(p.display[0]), _g12(p.display[1])]} for p in patch.points],
        "edges": [list(e) for e in patch.edges],
        "faces": [{"verts": list(f.verts), "kind": f.kind, "gens": list(f.gens)} for f in patch.faces],
        "singular": patch.singular,
        "witness": list(patch.witness) if patch.witness is not None else None,
        "meta": dict(patch.meta),
    }


def dumps_patch(patch: PatternPatch) -> str:
    return json.dumps(patch_to_dict(patch), indent=1, sort_keys=False, ensure_ascii=False) + "\n"


def _fail(where: str, msg: str):
    raise PatchFormatError(f"{where}: {msg}")


def _int_list(v, length, where):
    if not isinstance(v, list) or len(v) != length or not all(isinstance(a, int) and not isinstance(a, bool) for a in v):
        _fail(where, f"expected a list of {length} integers, got {v!r}")
    return tuple(v)


def _number(v, where):
    if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v):
        _fail(where, f"expected a finite number, got {v!r}")
    return float(v)


def patch_from_dict(doc) -> PatternPatch:
    if not isinstance(doc, dict):
        _fail("$", "document must be a JSON object")
    if doc.get("format") != FORMAT_NAME:
        _fail("$.format", f"expected {FORMAT_NAME!r}, got {doc.get('format')!r}")
    if doc.get("version") != FORMAT_VERSION:
        raise PatchFormatError(f"$.version: unsupported patch version {doc.get('version')!r} (this build reads {FORMAT_VERSION})")
    for key in ("shift", "radius", "points", "edges", "faces", "singular"):
        if key not in doc:
            _fail(f"$.{key}", "missing field")

    shift_raw = doc["shift"]
    if not isinstance(shift_raw, list) or len(shift_raw) != 5 or not all(isinstance(s, str) for s in shift_raw):
        _fail("$.shift", f"expected 5 rational strings, got {shift_raw!r}")
    try:
        shift = Shift(tuple(Fraction(s) for s in shift_raw))
    except (ValueError, ZeroDivisionError) as exc:
        _fail("$.shift", str(exc))

    radius = _number(doc["radius"], "$.radius")
    if radius <= 0:
        _fail("$.radius", "must be positive")

    if not isinstance(doc["points"], list):
        _fail("$.points", "expected a list")
    points = []
    for i, p in enumerate(doc["points"]):
        where = f"$.points[{i}]"
        if not isinstance(p, dict):
            _fail(where, "expected an object")
        x = _int_list(p.get("x"), 5, where + ".x")
        n = p.get("n")
        if n != level(x):
            _fail(where + ".n", f"level {n!r} does not match sum of x = {level(x)}")
        pos = p.get("pos")
        if not isinstance(pos, list) or len(pos) != 2:
            _fail(where + ".pos", f"expected [x, y], got {pos!r}")
        points.append(PatchPoint(x, n, (_number(pos[0], where + ".pos[0]"), _number(pos[1], where + ".pos[1]"))))

    npts = len(points)

    def check_idx(v, where):
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < npts:
            _fail(where, f"point index {v!r} out of range 0..{npts - 1}")
        return v

    if not isinstance(doc["edges"], list):
        _fail("$.edges", "expected a list")
    edges = []
    for i, e in enumerate(doc["edges"]):
        if not isinstance(e, list) or len(e) != 2:
            _fail(f"$.edges[{i}]", f"expected [i, j], got {e!r}")
        edges.append((check_idx(e[0], f"$.edges[{i}][0]"), check_idx(e[1], f"$.edges[{i}][1]")))

    if not isinstance(doc["faces"], list):
        _fail("$.faces", "expected a list")
    faces = []
    for i, f in enumerate(doc["faces"]):
        where = f"$.faces[{i}]"
        if not isinstance(f, dict):
            _fail(where, "expected an object")
        verts = f.get("verts")
        if not isinstance(verts, list) or len(verts) != 4:
            _fail(where + ".verts", f"expected 4 indices, got {verts!r}")
        verts = tuple(check_idx(v, f"{where}.verts[{k}]") for k, v in enumerate(verts))
        gens = _int_list(f.get("gens"), 2, where + ".gens")
        kind = f.get("kind")
        try:
            expected = tile_kind(*gens)
        except ValueError as exc:
            _fail(where + ".gens", str(exc))
        if kind != expected:
            _fail(where + ".kind", f"{kind!r} inconsistent with generators {gens} ({expected})")
        faces.append(Face(verts, kind, gens))

    singular = doc["singular"]
    if not isinstance(singular, bool):
        _fail("$.singular", f"expected a boolean, got {singular!r}")
    witness = doc.get("witness")
    if witness is not None:
        witness = _int_list(witness, 5, "$.witness")
    meta = doc.get("meta", {})
    if not isinstance(meta, dict):
        _fail("$.meta", "expected an object")
    return PatternPatch(shift, radius, points, edges, faces, singular, witness, meta)


def loads_patch(text: str | bytes) -> PatternPatch:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PatchFormatError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return patch_from_dict(doc)


def write_patch(patch: PatternPatch, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_patch(patch))


def read_patch(path) -> PatternPatch:
    with open(path, "rb") as fh:
        return loads_patch(fh.read())
