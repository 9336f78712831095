"""Command-line front end: ``ncdiv <verb> FILE [--json] [--translate a1,...,an]``.

Exit codes: 0 the property holds (normal crossing, free, radical, ...),
1 it fails, 2 undecided or inconclusive, 3 input error, 4 internal error.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from importlib import resources
from pathlib import Path

from . import __version__
from .divisor import (
    NORMAL_CROSSING,
    NOT_NORMAL_CROSSING,
    decide_normal_crossing,
    is_free_at_origin,
    is_radical_jacobian,
    require_reduced,
    singular_locus_ideal,
)
from .errors import InternalError, NcdivError, NotFreeError
from .gb import buchberger
from .ideal import Ideal, is_radical
from .logres import (
    LogOneForm,
    dual_basis,
    residue,
    residue_is_holomorphic_on_smooth_component,
    verify_closed_basis_certificate,
)
from .ncfile import InputFileError, AnalysisRequest, load_request
from .poly import order as make_order

SCHEMA = "ncdiv-report/1"
EXIT_YES, EXIT_NO, EXIT_UNDECIDED, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3, 4


class Result:
    """A command outcome: JSON payload, text lines, exit code."""

    def __init__(self, payload: dict, lines: list[str], code: int):
        self.payload, self.lines, self.code = payload, lines, code


def _echo(req: AnalysisRequest, translate) -> dict:
    out = dict(req.text)
    if translate is not None:
        out["translate"] = [str(c) for c in translate]
    return out


# -- verbs -------------------------------------------------------------------

def run_analyze(req: AnalysisRequest, timing: bool = False) -> Result:
    D = req.germ()
    v = decide_normal_crossing(D)
    steps = []
    lines = [f"h = {D.h}"]
    for st in v.steps:
        rec = {"name": st.name, "outcome": st.outcome, "reason": st.reason, "witnesses": st.witnesses}
        if timing:
            rec["seconds"] = round(st.seconds, 6)
        steps.append(rec)
        lines.append(f"  [{st.outcome:>12}] {st.name}: {st.reason}")
        for k, w in st.witnesses.items():
            lines.append(f"                 {k}: {w}")
    lines.append(f"verdict: {v.final} (decided at {v.decided_at})")
    code = {NORMAL_CROSSING: EXIT_YES, NOT_NORMAL_CROSSING: EXIT_NO}.get(v.final, EXIT_UNDECIDED)
    return Result({"steps": steps, "final": v.final, "decided_at": v.decided_at}, lines, code)


def run_free(req: AnalysisRequest, timing: bool = False) -> Result:
    D = req.germ()
    require_reduced(D)
    fr = is_free_at_origin(D)
    payload = {"free": fr.free, "mu": fr.mu, "der_log": [str(v) for v in fr.generators]}
    lines = [f"h = {D.h}", "free" if fr.free else "not free",
             f"  Der(log D) minimal generators at 0 ({fr.mu}):"]
    lines += [f"    {v}" for v in fr.generators]
    if fr.free:
        payload.update(determinant=str(fr.determinant), unit=str(fr.unit))
        lines.append(f"  det = ({fr.unit}) * h, unit value at 0: {fr.unit.constant_term()}")
    if fr.projective_dimension is not None:
        payload.update(weights=list(fr.weights), projective_dimension=fr.projective_dimension)
        lines.append(f"  weights {fr.weights}: pd R/((h)+J_h) = {fr.projective_dimension}")
    return Result(payload, lines, EXIT_YES if fr.free else EXIT_NO)


def _radical_payload(rep) -> dict:
    out = {"verdict": rep.verdict, "method": rep.method, "at_origin": rep.at_origin, "notes": list(rep.notes)}
    if rep.witness is not None:
        out.update(witness=str(rep.witness), power=rep.power)
    return out


def run_radical(req: AnalysisRequest, timing: bool = False) -> Result:
    if req.ideal:
        I = Ideal(req.ideal, req.ring)
        rep = is_radical(I, at_origin=False)
        lines = [f"I = {I}"]
    else:
        D = req.germ()
        require_reduced(D)
        fr = is_free_at_origin(D)
        rep = is_radical_jacobian(D, fr)
        rep.notes.append("D is free at 0" if fr.free else "D is not free at 0")
        lines = [f"I = (h) + J_h = {singular_locus_ideal(D)}"]
    lines.append(f"{rep.verdict} ({rep.method})")
    if rep.witness is not None:
        lines.append(f"  witness: {rep.witness} (not in I, its {rep.power}-th power is)")
    lines += [f"  note: {n}" for n in rep.notes]
    code = {"radical": EXIT_YES, "not-radical": EXIT_NO}.get(rep.verdict, EXIT_UNDECIDED)
    return Result(_radical_payload(rep), lines, code)


def run_gb(req: AnalysisRequest, order: str | None = None, timing: bool = False) -> Result:
    ordname = order or req.order
    ord = make_order(ordname)
    gens = req.ideal or ([req.h] + req.h.gradient())
    gens = [g for g in gens if not g.is_zero()]
    G = buchberger(gens, ord)
    kind = "standard basis" if ord.is_local else "reduced Groebner basis"
    elems = [str(g) for g in G.elements]
    lines = [f"{kind} ({ordname}), {len(elems)} elements:"] + [f"  {e}" for e in elems]
    return Result({"order": ordname, "basis": elems}, lines, EXIT_YES)


def run_residues(req: AnalysisRequest, timing: bool = False) -> Result:
    D = req.germ()
    require_reduced(D)
    fr = is_free_at_origin(D)
    if not fr.free:
        raise NotFreeError("residues need a free divisor")
    forms = req.forms or dual_basis(D, fr)
    comps = D.local_factors() or [D.h]
    rows, lines = [], [f"h = {D.h}"]
    for i, w in enumerate(forms, 1):
        lines.append(f"omega_{i} = {w}")
        for c in comps:
            rc = residue(w, D, c, generic=True).simplified()
            smooth = any(g.constant_term() != 0 for g in c.gradient())
            hol = residue_is_holomorphic_on_smooth_component(w, D, c) if smooth else None
            rows.append({"form": i, "component": str(c), "residue": str(rc),
                         "direction": list(rc.direction), "holomorphic": hol})
            tag = {True: "holomorphic", False: "not holomorphic", None: "component singular"}[hol]
            lines.append(f"  on {{{c} = 0}}: {rc}   [{tag}]")
    return Result({"forms": [str(w) for w in forms], "residues": rows}, lines, EXIT_YES)


def run_verify_basis(req: AnalysisRequest, timing: bool = False) -> Result:
    if not req.forms:
        raise InputFileError("verify-basis needs 'form:' lines", source=req.source)
    D = req.germ()
    cert = verify_closed_basis_certificate(D, req.forms)
    num, den = cert.wedge
    payload = {"issued": cert.issued, "closed": cert.closed, "logarithmic": cert.logarithmic,
               "wedge_times_h": [str(num), str(den)], "duals_commute": cert.duals_commute}
    lines = [f"h = {D.h}"]
    for w, c in zip(req.forms, cert.closed):
        lines.append(f"  {w}: {'closed' if c else 'not closed'}")
    lines.append(f"  h * wedge = ({num})/({den}): {'unit' if cert.wedge_is_unit else 'not a unit'} at 0")
    lines.append(f"  dual vector fields {'commute' if cert.duals_commute else 'do not commute'}")
    lines.append("normal-crossing certificate issued" if cert.issued else "no certificate")
    return Result(payload, lines, EXIT_YES if cert.issued else EXIT_NO)


VERBS = {
    "analyze": run_analyze,
    "is-nc": run_analyze,
    "is-free": run_free,
    "is-radical": run_radical,
    "gb": run_gb,
    "residues": run_residues,
    "verify-basis": run_verify_basis,
}


# -- corpus --------------------------------------------------------------------

def bundled_fixtures() -> Path:
    return Path(str(resources.files("ncdiv") / "fixtures"))


def run_corpus(directory: Path | None) -> Result:
    d = Path(directory) if directory else bundled_fixtures()
    files = sorted(d.glob("*.nc")) if d.is_dir() else []
    if not files:
        raise InputFileError(f"no *.nc fixtures in {d}", source=str(d))
    rows, lines, failed = [], [], []
    width = max(len(f.stem) for f in files)
    for f in files:
        t0 = time.perf_counter()
        try:
            req = load_request(f)
            v = decide_normal_crossing(req.germ())
            got, at = v.final, v.decided_at
        except NcdivError as e:
            req, got, at = None, f"error:{e.code}", None
        ok = req is not None and req.expect is not None and got == req.expect
        if ok and req.expect_step is not None:
            ok = at == req.expect_step
        if not ok:
            failed.append(f.stem)
        rows.append({"fixture": f.stem, "expected": req.expect if req else None,
                     "expected_step": req.expect_step if req else None,
                     "got": got, "step": at, "pass": ok})
        lines.append(f"{'PASS' if ok else 'FAIL'}  {f.stem:<{width}}  {got:<32} {at or ''}"
                     f"  ({time.perf_counter() - t0:.2f}s)")
    lines.append(f"{len(files) - len(failed)}/{len(files)} fixtures match"
                 + (f"; mismatches: {', '.join(failed)}" if failed else ""))
    return Result({"fixtures": rows, "failed": failed}, lines, EXIT_NO if failed else EXIT_YES)


# -- plumbing ------------------------------------------------------------------

def _parse_point(text: str) -> list[Fraction]:
    try:
        return [Fraction(s.strip()) for s in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad point {text!r}; expected rationals like 1,0,-1/2") from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ncdiv", description="Exact normal-crossing tests for divisor germs.")
    ap.add_argument("--version", action="version", version=f"ncdiv {__version__}")
    sub = ap.add_subparsers(dest="verb", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--timing", action="store_true", help="include timings (JSON is then not reproducible)")
    for verb in VERBS:
        p = sub.add_parser(verb, parents=[common], help=f"{verb} on a germ description file")
        p.add_argument("file")
        p.add_argument("--translate", type=_parse_point, metavar="a1,...,an",
                       help="study the germ at this point instead of the origin")
        if verb == "gb":
            p.add_argument("--order", choices=["lex", "degrevlex", "ds"], default=None)
    p = sub.add_parser("corpus", parents=[common], help="run the fixture corpus and compare with expectations")
    p.add_argument("directory", nargs="?", default=None)
    return ap


def _emit(args, payload: dict, lines: list[str], out) -> None:
    if args.json:
        out.write(json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n")
    else:
        out.write("\n".join(lines) + "\n")


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    base = {"schema": SCHEMA, "command": args.verb}
    try:
        if args.verb == "corpus":
            res = run_corpus(args.directory)
        else:
            req = load_request(args.file)
            base["input"] = _echo(req, args.translate)
            if args.translate is not None:
                req = req.translated(args.translate)
            fn = VERBS[args.verb]
            res = fn(req, order=args.order, timing=args.timing) if args.verb == "gb" else fn(req, timing=args.timing)
        payload = {**base, **res.payload, "exit_code": res.code}
        _emit(args, payload, res.lines, out)
        return res.code
    except InternalError as e:
        code, err = EXIT_INTERNAL, {"code": e.code, "message": str(e)}
    except NcdivError as e:
        code, err = EXIT_INPUT, {"code": e.code, "message": str(e)}
        for attr in ("line", "column"):
            if getattr(e, attr, None) is not None:
                err[attr] = getattr(e, attr)
        if getattr(e, "witness", None) is not None:
            err["witness"] = str(e.witness)
    payload = {**base, "error": err, "exit_code": code}
    lines = [f"error [{err['code']}]: {err['message']}"]
    if "witness" in err:
        lines.append(f"  witness: {err['witness']}")
    if args.json:
        _emit(args, payload, lines, out)
    else:
        sys.stderr.write("\n".join(lines) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
