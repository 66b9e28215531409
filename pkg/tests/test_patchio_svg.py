import json

import pytest

from penrose_inflation.patchio import (
    FORMAT_NAME,
    PatchFormatError,
    dumps_patch,
    loads_patch,
    patch_to_dict,
    read_patch,
    write_patch,
)
from penrose_inflation.pattern import Face, PatchPoint, PatternPatch, Shift
from penrose_inflation.svg import render_svg


def test_round_trip(origin_patch6, tmp_path):
    text = dumps_patch(origin_patch6)
    back = loads_patch(text)
    assert dumps_patch(back) == text
    assert [p.x for p in back.points] == [p.x for p in origin_patch6.points]
    assert back.edges == origin_patch6.edges
    assert back.faces == origin_patch6.faces
    assert back.witness == origin_patch6.witness
    path = tmp_path / "p.json"
    write_patch(origin_patch6, path)
    assert dumps_patch(read_patch(path)) == text


def test_zero_shift_strings(origin_patch6):
    doc = patch_to_dict(origin_patch6)
    assert doc["shift"] == ["0", "0", "0", "0", "0"]
    assert doc["format"] == FORMAT_NAME and doc["version"] == 1


def test_shift_round_trips_exactly(seventh_patch10):
    back = loads_patch(dumps_patch(seventh_patch10))
    assert back.shift == Shift.parse("1/7,0,0,0,0")


def _doc(patch):
    return patch_to_dict(patch)


@pytest.mark.parametrize(
    "mutate, where",
    [
        (lambda d: d.update(version=2), "$.version"),
        (lambda d: d.update(format="other"), "$.format"),
        (lambda d: d.pop("edges"), "$.edges"),
        (lambda d: d["points"][3].update(n=9), "$.points[3].n"),
        (lambda d: d["points"][0].update(x=[1, 2]), "$.points[0].x"),
        (lambda d: d["edges"].append([0, 10**6]), "$.edges["),
        (lambda d: d["faces"][1].update(kind="square"), "$.faces[1].kind"),
        (lambda d: d.update(shift=["1/0", "0", "0", "0", "0"]), "$.shift"),
        (lambda d: d.update(radius=-1), "$.radius"),
        (lambda d: d.update(singular="yes"), "$.singular"),
    ],
)
def test_error_locations(origin_patch6, mutate, where):
    d = json.loads(dumps_patch(origin_patch6))
    mutate(d)
    with pytest.raises(PatchFormatError) as exc:
        loads_patch(json.dumps(d))
    assert str(exc.value).startswith(where)


def test_version_message(origin_patch6):
    d = _doc(origin_patch6)
    d["version"] = 7
    with pytest.raises(PatchFormatError, match="unsupported patch version 7"):
        loads_patch(json.dumps(d))


def test_bad_json():
    with pytest.raises(PatchFormatError, match="line 1"):
        loads_patch("{not json")


def test_svg_deterministic(origin_patch8):
    p = origin_patch8
    a, b = render_svg(p), render_svg(p)
    assert a == b
    assert a.count("<polygon") == len(p.faces)
    assert a.count("<line") == len(p.edges)
    assert 'class="thick"' in a and 'class="thin"' in a
    assert "<circle" not in a
    assert render_svg(p, dots=True).count("<circle") == len(p.points)


def test_svg_single_rhomb():
    pts = [PatchPoint(x, 1, d) for x, d in [
        ((0, 0, 0, 0, 1), (1.0, 0.0)),
        ((1, 0, 0, 0, 1), (1.309017, 0.951057)),
        ((1, 1, 0, 0, 1), (0.5, 1.538842)),
        ((0, 1, 0, 0, 1), (0.190983, 0.587785)),
    ]]
    patch = PatternPatch(Shift(), 2.0, pts, [(0, 1), (1, 2), (2, 3), (3, 0)], [Face((0, 1, 2, 3), "thick", (1, 2))])
    svg = render_svg(patch, px_per_unit=10)
    assert svg.count("<polygon") == 1
    assert 'width="60"' in svg
    assert '<polygon class="thick" points="40,30 43.09,20.489 35,14.612 31.91,24.122"/>' in svg


def test_svg_empty_patch():
    svg = render_svg(PatternPatch(Shift(), 1.0))
    assert "<style" not in svg and "<polygon" not in svg and "<line" not in svg
    assert svg.startswith('<?xml') and svg.rstrip().endswith("</svg>")
