"""Command-line front door.

    qcat <command> [--in FILE]... [--json] [--bound N] [--step Q] [--cap Q]
                   [--horizon N] [--eps Q] [--set NAMES]

Exit codes: 0 all verdicts positive, 1 some negative verdict (with a
witness in the report), 2 structural or usage error.  Reports have the
fixed field order command / inputs / verdicts / witnesses / info /
timing and are identical across runs except for timing.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from . import docio
from .category import (closure, closure_report, symmetrize, validate_category,
                       validate_distributor, validate_functor)
from .diagonals import diagonal_quantaloid
from .errors import QcatError, StructureError
from .extval import ExtVal, fmt_ext
from .pms import (NOT_EXPONENTIABLE, SampledSequence, Verdict, complete_finite,
                  converges_to, exponentiable, hausdorff, seq_cauchy, seq_type,
                  validate_pms)
from .quantaloid import analyze_properties, validate_quantaloid
from .report import PropertyReport

COMMANDS = ("validate", "analyze", "diagonals", "closure", "symcompare",
            "complete", "hausdorff", "exponentiable", "converge", "fixtures")


def _jsonable(x: Any) -> Any:
    if x is None or isinstance(x, (bool, int, str)):
        return x
    if isinstance(x, ExtVal):
        return fmt_ext(x)
    if isinstance(x, Fraction):
        return fmt_ext(ExtVal(x))
    if isinstance(x, float):
        return x
    if isinstance(x, dict):
        return {(k if isinstance(k, str) else str(k)): _jsonable(v)
                for k, v in x.items()}
    if isinstance(x, (set, frozenset)):
        return sorted(_jsonable(v) for v in x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Verdict):
        return {"ok": x.ok, "mode": x.mode, "value": _jsonable(x.value),
                "index": x.index, "detail": _jsonable(x.detail)}
    label = getattr(x, "label", None)
    if callable(label):
        return label()
    return str(x)


def _merge(rep: PropertyReport) -> Tuple[Dict[str, bool], Dict[str, Any], Dict[str, Any]]:
    return (dict(rep.flags), _jsonable(rep.witnesses), _jsonable(rep.info))


class Inputs:
    """Loaded --in documents, keyed by their meta names."""

    def __init__(self, files: List[str]):
        self.rows: List[Tuple[str, str, Any]] = []  # (name, kind, obj)
        self.manifest: List[Dict[str, str]] = []
        seen: Dict[str, int] = {}
        for path in files:
            try:
                with open(path, "r", encoding="utf-8") as fh:
                    doc = docio.parse(fh.read())
            except OSError as e:
                raise StructureError(f"cannot read {path}: {e.strerror}") from None
            name = doc["meta"].get("name") or path
            if name in seen:
                seen[name] += 1
                name = f"{name}#{seen[name]}"
            else:
                seen[name] = 1
            self.rows.append((name, doc["kind"], docio.load(doc)))
            self.manifest.append({"file": path, "kind": doc["kind"], "name": name})
        if not self.rows:
            raise StructureError("no --in files given")

    def only(self, *kinds: str) -> List[Tuple[str, str, Any]]:
        for name, kind, _ in self.rows:
            if kind not in kinds:
                raise StructureError(
                    f"input {name!r} has kind {kind}; expected "
                    + " or ".join(kinds))
        return self.rows


def _validator_for(kind: str):
    return {"quantaloid": validate_quantaloid,
            "category": validate_category,
            "functor": validate_functor,
            "distributor": validate_distributor,
            "pms": validate_pms}.get(kind)


# ---------------------------------------------------------------------------
# command bodies: each returns (verdicts, witnesses, info, extra)
# ---------------------------------------------------------------------------

def cmd_validate(inputs: Inputs, args) -> tuple:
    verdicts: Dict[str, Any] = {}
    witnesses: Dict[str, Any] = {}
    info: Dict[str, Any] = {}
    for name, kind, obj in inputs.rows:
        fn = _validator_for(kind)
        if fn is None:  # sequences validate on construction
            verdicts[name] = {"well-formed": True}
            continue
        v, w, i = _merge(fn(obj))
        verdicts[name] = v
        if w:
            witnesses[name] = w
        if i:
            info[name] = i
    return verdicts, witnesses, info, {}


def cmd_analyze(inputs: Inputs, args) -> tuple:
    verdicts: Dict[str, Any] = {}
    witnesses: Dict[str, Any] = {}
    info: Dict[str, Any] = {}
    for name, kind, obj in inputs.only("quantaloid", "pms"):
        rep = analyze_properties(obj) if kind == "quantaloid" else validate_pms(obj)
        v, w, i = _merge(rep)
        verdicts[name] = v
        if w:
            witnesses[name] = w
        if i:
            info[name] = i
    return verdicts, witnesses, info, {}


def cmd_diagonals(inputs: Inputs, args) -> tuple:
    verdicts: Dict[str, Any] = {}
    witnesses: Dict[str, Any] = {}
    info: Dict[str, Any] = {}
    docs = []
    for name, _, q in inputs.only("quantaloid"):
        dq = diagonal_quantaloid(q)
        v, w, i = _merge(validate_quantaloid(dq))
        verdicts[name] = v
        if w:
            witnesses[name] = w
        info[name] = dict(i, **{"diagonal-objects": len(dq.objects)})
        docs.append(docio.document(
            "quantaloid", dq.name, docio.from_quantaloid(dq),
            f"qcat diagonals (from {name})"))
    extra = {"document": docs[0] if len(docs) == 1 else docs}
    return verdicts, witnesses, info, extra


def _parse_set(arg: Optional[str]) -> List[str]:
    if not arg:
        raise StructureError("this command needs --set with object names")
    return [s for s in (t.strip() for t in arg.split(",")) if s]


def cmd_closure(inputs: Inputs, args) -> tuple:
    verdicts: Dict[str, Any] = {}
    witnesses: Dict[str, Any] = {}
    info: Dict[str, Any] = {}
    for name, _, c in inputs.only("category"):
        if args.set is None:
            v, w, i = _merge(closure_report(c, bound=args.bound))
            verdicts[name] = v
            if w:
                witnesses[name] = w
            info[name] = i
        else:
            s = _parse_set(args.set)
            cl = closure(c, s)
            added = sorted(cl - set(s))
            verdicts[name] = {"set-is-closed": not added}
            if added:
                witnesses[name] = {"set-is-closed": added}
            info[name] = {"set": sorted(s), "closure": sorted(cl)}
    return verdicts, witnesses, info, {}


def cmd_symcompare(inputs: Inputs, args) -> tuple:
    verdicts: Dict[str, Any] = {}
    witnesses: Dict[str, Any] = {}
    info: Dict[str, Any] = {}
    s = _parse_set(args.set)
    for name, _, c in inputs.only("category"):
        cl = closure(c, s)
        cls = closure(symmetrize(c), s)
        diff = sorted(cl ^ cls)
        verdicts[name] = {"closures-agree": not diff}
        if diff:
            witnesses[name] = {"closures-agree": diff[0]}
        info[name] = {"set": sorted(s), "closure": sorted(cl),
                      "symmetrized-closure": sorted(cls)}
    return verdicts, witnesses, info, {}


def cmd_complete(inputs: Inputs, args) -> tuple:
    verdicts: Dict[str, Any] = {}
    witnesses: Dict[str, Any] = {}
    info: Dict[str, Any] = {}
    docs = []
    for name, _, x in inputs.only("pms"):
        out = complete_finite(x, bound=args.bound)
        v, w, i = _merge(validate_pms(out))
        bad = next(((a, b) for a in x.points for b in x.points
                    if out.p(out.embedding[a], out.embedding[b]) != x.p(a, b)),
                   None)
        v["embedding-isometric"] = bad is None
        if bad is not None:
            w["embedding-isometric"] = list(bad)
        verdicts[name] = v
        if w:
            witnesses[name] = w
        info[name] = {"points": len(x.points), "completion-points": len(out.points),
                      "names": list(out.points),
                      "embedding": _jsonable(out.embedding)}
        docs.append(docio.document("pms", out.name or f"complete({name})",
                                   docio.from_pms(out),
                                   f"qcat complete (from {name})"))
    extra = {"document": docs[0] if len(docs) == 1 else docs}
    return verdicts, witnesses, info, extra


def _parse_groups(arg: str) -> List[List[str]]:
    groups = []
    for part in arg.split(";"):
        names = [s for s in (t.strip() for t in part.split(",")) if s]
        if names:
            groups.append(names)
    if not groups:
        raise StructureError("--set gave no subsets")
    return groups


def cmd_hausdorff(inputs: Inputs, args) -> tuple:
    verdicts: Dict[str, Any] = {}
    witnesses: Dict[str, Any] = {}
    info: Dict[str, Any] = {}
    docs = []
    for name, _, x in inputs.only("pms"):
        subsets = _parse_groups(args.set) if args.set else None
        out = hausdorff(x, subsets, bound=args.bound)
        v, w, i = _merge(validate_pms(out))
        verdicts[name] = v
        if w:
            witnesses[name] = w
        info[name] = {"subsets": list(out.points)}
        docs.append(docio.document("pms", out.name or f"hausdorff({name})",
                                   docio.from_pms(out),
                                   f"qcat hausdorff (from {name})"))
    extra = {"document": docs[0] if len(docs) == 1 else docs}
    return verdicts, witnesses, info, extra


def _fraction(text: str, flag: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise StructureError(f"{flag} needs an exact rational, got {text!r}") from None


def cmd_exponentiable(inputs: Inputs, args) -> tuple:
    if args.step is None or args.cap is None:
        raise StructureError("exponentiable needs --step and --cap")
    step = _fraction(args.step, "--step")
    cap = _fraction(args.cap, "--cap")
    verdicts: Dict[str, Any] = {}
    witnesses: Dict[str, Any] = {}
    info: Dict[str, Any] = {}
    for name, _, x in inputs.only("pms"):
        verdict, witness, meta = exponentiable(x, step, cap)
        verdicts[name] = {"exponentiable-on-grid": verdict != NOT_EXPONENTIABLE}
        if witness is not None:
            witnesses[name] = {"exponentiable-on-grid": _jsonable(witness)}
        info[name] = dict(_jsonable(meta), verdict=verdict)
    return verdicts, witnesses, info, {}


def cmd_converge(inputs: Inputs, args) -> tuple:
    verdicts: Dict[str, Any] = {}
    witnesses: Dict[str, Any] = {}
    info: Dict[str, Any] = {}
    for name, _, s in inputs.only("sequence"):
        if args.horizon is not None or args.eps is not None:
            if args.horizon is not None and args.horizon > s.horizon:
                raise StructureError(
                    "--horizon cannot extend a sequence beyond its samples")
            s = SampledSequence(s.space, s.pt, args.horizon or s.horizon,
                                args.eps if args.eps is not None else s.eps,
                                s.constant_from, name=s.name)
        space = s.space
        v: Dict[str, bool] = {}
        w: Dict[str, Any] = {}
        cv = seq_cauchy(space, s)
        v["cauchy"] = cv.ok
        if not cv.ok:
            w["cauchy"] = _jsonable(cv)
        tv = seq_type(space, s)
        meta = {"type": _jsonable(tv), "horizon": s.horizon,
                "eps": fmt_ext(s.eps)}
        if args.set is not None:
            target = args.set.strip()
            if target not in space.points:
                raise StructureError(f"--set names unknown point {target!r}")
            lv = converges_to(space, s, target)
            v[f"converges-to-{target}"] = lv.ok
            if not lv.ok:
                w[f"converges-to-{target}"] = _jsonable(lv)
            else:
                meta[f"limit-{target}"] = _jsonable(lv)
        verdicts[name] = v
        if w:
            witnesses[name] = w
        info[name] = meta
    return verdicts, witnesses, info, {}


RUNNERS = {"validate": cmd_validate, "analyze": cmd_analyze,
           "diagonals": cmd_diagonals, "closure": cmd_closure,
           "symcompare": cmd_symcompare, "complete": cmd_complete,
           "hausdorff": cmd_hausdorff, "exponentiable": cmd_exponentiable,
           "converge": cmd_converge}


# ---------------------------------------------------------------------------
# report rendering
# ---------------------------------------------------------------------------

def _flatten_false(verdicts: Dict[str, Any]) -> bool:
    for per in verdicts.values():
        if isinstance(per, dict):
            if not all(per.values()):
                return True
        elif per is False:
            return True
    return False


def _render_text(report: Dict[str, Any]) -> str:
    lines = [f"command: {report['command']}"]
    for row in report["inputs"]:
        lines.append(f"input: {row['name']} ({row['kind']}) from {row['file']}")
    for name, per in report["verdicts"].items():
        for flag, val in per.items():
            lines.append(f"{name}: {flag} = {'true' if val else 'false'}")
            wit = report["witnesses"].get(name, {}).get(flag)
            if wit is not None:
                lines.append(f"{name}: witness[{flag}] = {json.dumps(wit, sort_keys=True)}")
    for name, meta in report["info"].items():
        lines.append(f"{name}: info = {json.dumps(meta, sort_keys=True)}")
    if "document" in report:
        lines.append("document:")
        lines.append(docio.emit(report["document"]).rstrip("\n")
                     if isinstance(report["document"], dict)
                     else json.dumps(report["document"], sort_keys=True, indent=2))
    lines.append(f"timing: {report['timing']['seconds']:.3f}s")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qcat",
                                 description="checks for quantaloids, "
                                 "enriched categories, and partial metrics")
    sub = ap.add_subparsers(dest="command", required=True)
    for cmd in COMMANDS:
        p = sub.add_parser(cmd)
        if cmd == "fixtures":
            p.add_argument("name", help="fixture name, e.g. q2 or wordspace-2")
            p.add_argument("--json", action="store_true")
            continue
        p.add_argument("--in", dest="infiles", action="append", default=[],
                       metavar="FILE")
        p.add_argument("--json", action="store_true")
        p.add_argument("--bound", type=int, default=None)
        p.add_argument("--step")
        p.add_argument("--cap")
        p.add_argument("--horizon", type=int)
        p.add_argument("--eps")
        p.add_argument("--set")
    return ap


_DEFAULT_BOUNDS = {"closure": 5, "complete": 300000, "hausdorff": 4096}


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0

    if args.command == "fixtures":
        try:
            doc = docio.fixture_document(args.name)
        except QcatError as e:
            print(f"error: {e}", file=sys.stderr)
            return 2
        out.write(docio.emit(doc))
        return 0

    if args.bound is None:
        args.bound = _DEFAULT_BOUNDS.get(args.command, 5)

    started = time.perf_counter()
    try:
        inputs = Inputs(args.infiles)
        verdicts, witnesses, info, extra = RUNNERS[args.command](inputs, args)
    except QcatError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2

    report: Dict[str, Any] = {
        "command": args.command,
        "inputs": inputs.manifest,
        "verdicts": verdicts,
        "witnesses": witnesses,
        "info": info,
    }
    report.update(extra)
    report["timing"] = {"seconds": round(time.perf_counter() - started, 6)}

    if args.json:
        out.write(json.dumps(report, indent=2) + "\n")
    else:
        out.write(_render_text(report))
    return 1 if _flatten_false(verdicts) else 0


if __name__ == "__main__":
    sys.exit(main())
