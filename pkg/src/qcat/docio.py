"""JSON document format for every core structure, plus named fixture
emission.

One document = {"kind": ..., "meta": {"name", "provenance"}, "body": ...}.
Rationals are strings "a/b", infinity is "inf".  `emit` is canonical
(sorted keys, pre-sorted lists, 2-space indent, trailing newline), so
committed fixture files are bit-exact and diff-friendly.
"""
from __future__ import annotations

import json
import re
from typing import Dict, List, Optional, Tuple

from . import fixtures
from .category import EnrichedCategory, EnrichedDistributor, EnrichedFunctor
from .errors import StructureError
from .extval import ExtVal, fmt_ext
from .lattice import HomLattice
from .pms import PartialMetricSpace, SampledSequence
from .quantaloid import FiniteQuantaloid

KINDS = ("quantaloid", "category", "functor", "distributor", "pms", "sequence")

QUANTALOID_FIXTURES = ("q2", "c3", "diamond", "l2", "l3", "l4",
                       "pz2", "pz3", "dl3")
PMS_FIXTURES = ("twopoint", "all1")


def document(kind: str, name: str, body: dict, provenance: str = "") -> dict:
    return {"kind": kind,
            "meta": {"name": name, "provenance": provenance},
            "body": body}


def emit(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def parse(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise StructureError(f"not valid JSON: {e}") from None
    _check_shape(doc)
    load(doc)  # full structural validation; result discarded
    return doc


def _check_shape(doc) -> None:
    if not isinstance(doc, dict):
        raise StructureError("document must be a JSON object")
    for field in ("kind", "meta", "body"):
        if field not in doc:
            raise StructureError(f"document missing field {field!r}")
    if doc["kind"] not in KINDS:
        raise StructureError(f"unknown kind {doc['kind']!r} "
                             f"(expected one of {', '.join(KINDS)})")
    meta = doc["meta"]
    if not isinstance(meta, dict) or "name" not in meta:
        raise StructureError("meta must be an object with a name")


def load(doc: dict):
    """Document -> the core object its kind names."""
    _check_shape(doc)
    kind, body = doc["kind"], doc["body"]
    name = doc["meta"].get("name", "")
    if kind == "quantaloid":
        return to_quantaloid(body, name)
    if kind == "category":
        return to_category(body, name)
    if kind == "functor":
        return to_functor(body, name)
    if kind == "distributor":
        return to_distributor(body, name)
    if kind == "pms":
        return to_pms(body, name)
    return to_sequence(body, name)


def _need(body: dict, field: str, where: str):
    if not isinstance(body, dict) or field not in body:
        raise StructureError(f"{where} body missing field {field!r}")
    return body[field]


# ---------------------------------------------------------------------------
# quantaloid
# ---------------------------------------------------------------------------

def from_quantaloid(q: FiniteQuantaloid) -> dict:
    homs = [{"src": a, "tgt": b,
             "elements": sorted(q.homs[(a, b)].elements),
             "leq": sorted([x, y] for (x, y) in q.homs[(a, b)].pairs)}
            for (a, b) in sorted(q.homs)]
    comp = [{"src": a, "mid": b, "tgt": c,
             "table": sorted([g, f, gf] for (g, f), gf in tab.items())}
            for (a, b, c), tab in sorted(q.comp.items())]
    body = {"objects": sorted(q.objects),
            "homs": homs,
            "comp": comp,
            "ids": dict(sorted(q.ids.items()))}
    if q.inv is not None:
        body["inv"] = [{"src": a, "tgt": b,
                        "map": dict(sorted(q.inv[(a, b)].items()))}
                       for (a, b) in sorted(q.inv)]
    return body


def to_quantaloid(body, name: str = "") -> FiniteQuantaloid:
    objects = _need(body, "objects", "quantaloid")
    homs: Dict[Tuple[str, str], HomLattice] = {}
    for h in _need(body, "homs", "quantaloid"):
        key = (_need(h, "src", "hom"), _need(h, "tgt", "hom"))
        if key in homs:
            raise StructureError(f"duplicate hom block for {key}")
        homs[key] = HomLattice(_need(h, "elements", "hom"),
                               [tuple(p) for p in _need(h, "leq", "hom")])
    comp: Dict[Tuple[str, str, str], Dict[Tuple[str, str], str]] = {}
    for c in _need(body, "comp", "quantaloid"):
        key = (_need(c, "src", "comp"), _need(c, "mid", "comp"),
               _need(c, "tgt", "comp"))
        if key in comp:
            raise StructureError(f"duplicate comp block for {key}")
        table = {}
        for row in _need(c, "table", "comp"):
            if len(row) != 3:
                raise StructureError(f"comp row must be [g, f, gf]: {row!r}")
            g, f, gf = row
            if (g, f) in table:
                raise StructureError(f"duplicate comp entry ({g},{f}) in {key}")
            table[(g, f)] = gf
        comp[key] = table
    inv = None
    if body.get("inv") is not None:
        inv = {}
        for block in body["inv"]:
            key = (_need(block, "src", "inv"), _need(block, "tgt", "inv"))
            inv[key] = dict(_need(block, "map", "inv"))
    return FiniteQuantaloid(objects, homs, comp,
                            _need(body, "ids", "quantaloid"), inv, name=name)


def quantaloid_fixture(name: str) -> FiniteQuantaloid:
    builders = {"q2": fixtures.q2, "c3": fixtures.c3,
                "diamond": fixtures.diamond, "l2": fixtures.l2,
                "l3": fixtures.l3, "l4": fixtures.l4, "pz2": fixtures.pz2,
                "pz3": fixtures.pz3, "dl3": fixtures.dl3}
    if name not in builders:
        raise StructureError(f"unknown quantaloid fixture {name!r}")
    return builders[name]()


# ---------------------------------------------------------------------------
# pms / sequence
# ---------------------------------------------------------------------------

def from_pms(x: PartialMetricSpace) -> dict:
    return {"points": list(x.points),
            "p": sorted([a, b, fmt_ext(x.p(a, b))]
                        for a in x.points for b in x.points)}


def to_pms(body, name: str = "") -> PartialMetricSpace:
    points = _need(body, "points", "pms")
    dist = {}
    for row in _need(body, "p", "pms"):
        if len(row) != 3:
            raise StructureError(f"distance row must be [x, y, value]: {row!r}")
        a, b, v = row
        if (a, b) in dist:
            raise StructureError(f"duplicate distance entry ({a},{b})")
        try:
            dist[(a, b)] = ExtVal(v)
        except (ValueError, ZeroDivisionError):
            raise StructureError(f"bad distance value {v!r} at ({a},{b})") from None
    return PartialMetricSpace(points, dist, name=name)


def pms_fixture(name: str) -> PartialMetricSpace:
    if name == "twopoint":
        return fixtures.twopoint()
    if name == "all1":
        return fixtures.all1()
    m = re.fullmatch(r"wordspace-(\d+)", name)
    if m:
        return fixtures.wordspace(int(m.group(1)))
    m = re.fullmatch(r"terminal-(\d+)", name)
    if m:
        return fixtures.terminal(int(m.group(1)))
    raise StructureError(f"unknown pms fixture {name!r}")


def _space_of(spec, where: str) -> PartialMetricSpace:
    if isinstance(spec, str):
        return pms_fixture(spec)
    return to_pms(spec, name=f"{where}-space")


def from_sequence(s: SampledSequence, space_name: Optional[str] = None) -> dict:
    body = {"space": space_name if space_name else from_pms(s.space),
            "points": [s.pt(n) for n in range(s.horizon + 1)],
            "horizon": s.horizon,
            "eps": fmt_ext(s.eps)}
    if s.constant_from is not None:
        body["constant_from"] = s.constant_from
    return body


def to_sequence(body, name: str = "") -> SampledSequence:
    space = _space_of(_need(body, "space", "sequence"), "sequence")
    return SampledSequence(space,
                           _need(body, "points", "sequence"),
                           _need(body, "horizon", "sequence"),
                           body.get("eps", "0"),
                           body.get("constant_from"),
                           name=name)


# ---------------------------------------------------------------------------
# category / functor / distributor
# ---------------------------------------------------------------------------

def from_category(c: EnrichedCategory, base_name: Optional[str] = None) -> dict:
    return {"base": base_name if base_name else from_quantaloid(c.base),
            "objects": list(c.objs),
            "typ": dict(sorted(c.typ.items())),
            "hom": sorted([x, y, e] for (x, y), e in c.hom.items())}


def _base_of(spec, where: str) -> FiniteQuantaloid:
    if isinstance(spec, str):
        return quantaloid_fixture(spec)
    return to_quantaloid(spec, name=f"{where}-base")


def to_category(body, name: str = "") -> EnrichedCategory:
    base = _base_of(_need(body, "base", "category"), "category")
    hom = {}
    for row in _need(body, "hom", "category"):
        if len(row) != 3:
            raise StructureError(f"hom row must be [x, y, element]: {row!r}")
        x, y, e = row
        if (x, y) in hom:
            raise StructureError(f"duplicate hom entry ({x},{y})")
        hom[(x, y)] = e
    return EnrichedCategory(base, _need(body, "objects", "category"),
                            _need(body, "typ", "category"), hom, name=name)


def from_functor(f: EnrichedFunctor) -> dict:
    return {"dom": from_category(f.dom),
            "cod": from_category(f.cod),
            "map": dict(sorted(f.map.items()))}


def to_functor(body, name: str = "") -> EnrichedFunctor:
    dom = to_category(_need(body, "dom", "functor"), "dom")
    cod = to_category(_need(body, "cod", "functor"), "cod")
    return EnrichedFunctor(dom, cod, _need(body, "map", "functor"), name=name)


def from_distributor(phi: EnrichedDistributor) -> dict:
    return {"dom": from_category(phi.dom),
            "cod": from_category(phi.cod),
            "mat": sorted([y, x, e] for (y, x), e in phi.mat.items())}


def to_distributor(body, name: str = "") -> EnrichedDistributor:
    dom = to_category(_need(body, "dom", "distributor"), "dom")
    cod = to_category(_need(body, "cod", "distributor"), "cod")
    mat = {}
    for row in _need(body, "mat", "distributor"):
        if len(row) != 3:
            raise StructureError(f"matrix row must be [y, x, element]: {row!r}")
        y, x, e = row
        if (y, x) in mat:
            raise StructureError(f"duplicate matrix entry ({y},{x})")
        mat[(y, x)] = e
    return EnrichedDistributor(dom, cod, mat, name=name)


# ---------------------------------------------------------------------------
# named fixtures (the CLI `fixtures` command)
# ---------------------------------------------------------------------------

FIXTURE_NAMES = QUANTALOID_FIXTURES + PMS_FIXTURES + ("wordspace-k", "terminal-k")


def fixture_document(name: str) -> dict:
    prov = f"qcat fixtures {name}"
    try:
        q = quantaloid_fixture(name)
    except StructureError:
        pass
    else:
        return document("quantaloid", name, from_quantaloid(q), prov)
    try:
        x = pms_fixture(name)
    except StructureError:
        raise StructureError(
            f"unknown fixture {name!r} (expected one of "
            f"{', '.join(FIXTURE_NAMES)})") from None
    return document("pms", name, from_pms(x), prov)
