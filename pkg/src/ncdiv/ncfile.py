"""Reader for the plain-text germ description files (``*.nc``).

    # comment
    ring: x, y, z
    h: x*y*(x+y)*(x+y*z)
    factors: x, y, x+y, x+y*z        (optional)
    order: degrevlex                 (optional, for ``gb``)
    ideal: x^2, x*y                  (optional, for ``gb`` and ``is-radical``)
    form: [y, 0, 0] / (x*y)          (optional, repeatable)
    expect: not-normal-crossing      (optional, for ``corpus``)
    expect-step: radical-jacobian    (optional)
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .divisor import DivisorGerm
from .errors import InputError
from .logres import LogOneForm
from .parse import ParseError, parse_polynomial, split_top_level
from .poly import Polynomial, RingContext, order as make_order

KEYS = {"ring", "h", "factors", "order", "ideal", "form", "expect", "expect-step"}
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")


class InputFileError(InputError):
    code = "input-error"

    def __init__(self, message: str, line: int | None = None, column: int | None = None,
                 source: str = "<input>", code: str | None = None):
        self.message, self.line, self.column, self.source = message, line, column, source
        if code:
            self.code = code
        where = source
        if line is not None:
            where += f":{line}"
            if column is not None:
                where += f":{column}"
        super().__init__(f"{where}: {message}")


@dataclass
class AnalysisRequest:
    ring: RingContext
    h: Polynomial
    factors: list | None = None
    order: str = "degrevlex"
    ideal: list | None = None
    forms: list = field(default_factory=list)
    expect: str | None = None
    expect_step: str | None = None
    source: str = "<input>"
    text: dict = field(default_factory=dict)  # raw values, echoed in reports

    def germ(self) -> DivisorGerm:
        return DivisorGerm(self.h, tuple(self.factors) if self.factors else None)

    def translated(self, point: Sequence[Fraction]) -> AnalysisRequest:
        if len(point) != self.ring.n:
            raise InputFileError(f"--translate needs {self.ring.n} coordinates, got {len(point)}",
                                 source=self.source)
        shift = [self.ring.var(i) + point[i] for i in range(self.ring.n)]
        move = lambda p: p.substitute(shift)  # noqa: E731
        return AnalysisRequest(
            self.ring, move(self.h),
            [move(f) for f in self.factors] if self.factors else None,
            self.order,
            [move(g) for g in self.ideal] if self.ideal else None,
            [LogOneForm([move(a) for a in f.numerators], move(f.denominator)) for f in self.forms],
            self.expect, self.expect_step, self.source, dict(self.text))


def _poly(text: str, ring: RingContext, line: int, col: int, source: str) -> Polynomial:
    try:
        return parse_polynomial(text, ring)
    except ParseError as e:
        raise InputFileError(e.message, line, col + e.position, source, code="parse-error") from None


def _poly_list(text: str, ring, line, col, source) -> list[Polynomial]:
    out, pos = [], 0
    for part in split_top_level(text):
        off = text.index(part, pos)
        pos = off + len(part)
        out.append(_poly(part, ring, line, col + off, source))
    return out


def _form(text: str, ring, line, col, source) -> LogOneForm:
    m = re.match(r"\s*\[(.*)\]\s*(?:/\s*(.+))?$", text)
    if not m:
        raise InputFileError("form must look like [a1, ..., an] / den", line, col, source, code="parse-error")
    nums = _poly_list(m.group(1), ring, line, col + m.start(1), source)
    if len(nums) != ring.n:
        raise InputFileError(f"form needs {ring.n} coefficients, got {len(nums)}", line, col, source)
    den = _poly(m.group(2), ring, line, col + m.start(2), source) if m.group(2) else ring.one()
    if den.is_zero():
        raise InputFileError("zero denominator", line, col + m.start(2), source, code="parse-error")
    return LogOneForm(nums, den)


def parse_request(text: str, source: str = "<input>") -> AnalysisRequest:
    raw: dict[str, list] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0]
        if not body.strip():
            continue
        if ":" not in body:
            raise InputFileError("expected 'key: value'", lineno, 1, source, code="parse-error")
        key, value = body.split(":", 1)
        key = key.strip().lower()
        if key not in KEYS:
            raise InputFileError(f"unknown key {key!r}", lineno, 1, source, code="parse-error")
        if key in raw and key != "form":
            raise InputFileError(f"duplicate key {key!r}", lineno, 1, source, code="parse-error")
        col = len(key) + 2 + (len(value) - len(value.lstrip()))
        raw.setdefault(key, []).append((value.strip(), lineno, col))
    for req in ("ring", "h"):
        if req not in raw:
            raise InputFileError(f"missing '{req}:' line", None, None, source)
    (rtext, rline, rcol), = raw["ring"]
    names = [s.strip() for s in rtext.split(",") if s.strip()]
    bad = [s for s in names if not _NAME.match(s)]
    if not names or bad or len(set(names)) != len(names):
        raise InputFileError(f"bad ring declaration {rtext!r}", rline, rcol, source, code="parse-error")
    R = RingContext(tuple(names))
    (htext, hline, hcol), = raw["h"]
    h = _poly(htext, R, hline, hcol, source)
    req = AnalysisRequest(R, h, source=source, text={"ring": list(names), "h": htext})
    if "factors" in raw:
        (ftext, fline, fcol), = raw["factors"]
        req.factors = _poly_list(ftext, R, fline, fcol, source)
        req.text["factors"] = split_top_level(ftext)
        prod = R.one()
        for f in req.factors:
            prod = prod * f
        if prod != h:
            raise InputFileError(f"factors multiply to {prod}, not h", fline, fcol, source)
    if "order" in raw:
        (otext, oline, ocol), = raw["order"]
        try:
            make_order(otext)
        except ValueError:
            raise InputFileError(f"unknown order {otext!r}", oline, ocol, source, code="parse-error") from None
        req.order = otext
    if "ideal" in raw:
        (itext, iline, icol), = raw["ideal"]
        req.ideal = _poly_list(itext, R, iline, icol, source)
        req.text["ideal"] = split_top_level(itext)
    for ftext, fline, fcol in raw.get("form", []):
        req.forms.append(_form(ftext, R, fline, fcol, source))
    if req.forms:
        req.text["forms"] = [t for t, _, _ in raw["form"]]
    if "expect" in raw:
        req.expect = raw["expect"][0][0]
    if "expect-step" in raw:
        req.expect_step = raw["expect-step"][0][0]
    return req


def load_request(path) -> AnalysisRequest:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as e:
        raise InputFileError(f"cannot read file: {e.strerror}", source=str(p)) from None
    return parse_request(text, str(p))
