"""Plain-text surface specs: ``kind key=value ...``.

Examples::

    quadric-center a=1 b=1 c=2 xi=1 zeta=1
    paraboloid a=1 b=2 eta=1
    ellipsoid-cut a=1 b=1 c=2 d_sq=0.5
    cylinder-cut a=1 b=1 e_sq=2
    superquadric n=2 c=1
    plane d=0.5
    sphere r=1
    biharmonic-graph c1=0 c2=0
    poly "x^2+y^2+z^2-1"
"""

from __future__ import annotations

import math
import re
import shlex

from .config import TOL
from .errors import GeometryError, SpecParseError
from .geometry import (
    CandidateCylinder,
    CandidateEllipsoid,
    PlaneZ,
    Polynomial,
    QuadricCenter,
    QuadricParaboloid,
    SuperquadricRevolution,
    Surface,
    sphere,
)

_NUMBER = r"[0-9]*\.?[0-9]+(?:[eE][+-]?[0-9]+)?"
_FACTOR = re.compile(rf"\s*\*?\s*(?:(?P<num>{_NUMBER})|(?P<var>[xyz])(?:\s*\^\s*(?P<exp>[0-9]+))?)")


def parse_real(text: str, key: str = "value") -> float:
    try:
        v = float(text)
    except ValueError:
        raise SpecParseError(f"{key}: expected a decimal real, got {text!r}") from None
    if not math.isfinite(v):
        raise SpecParseError(f"{key}: value must be finite, got {text!r}")
    return v


def parse_sign(text: str, key: str) -> int:
    v = parse_real(text, key)
    if v not in (1.0, -1.0):
        raise SpecParseError(f"{key}: expected +1 or -1, got {text!r}")
    return int(v)


def parse_int(text: str, key: str) -> int:
    v = parse_real(text, key)
    if v != int(v):
        raise SpecParseError(f"{key}: expected an integer, got {text!r}")
    return int(v)


def parse_point(text: str) -> tuple[float, float, float]:
    parts = [t for t in re.split(r"[,\s]+", text.strip().strip("()[]")) if t]
    if len(parts) != 3:
        raise SpecParseError(f"point needs three comma-separated coordinates, got {text!r}")
    return tuple(parse_real(t, "point") for t in parts)


def parse_polynomial(text: str, max_degree: int = TOL.polynomial_max_degree) -> Polynomial:
    """Parse a monomial sum such as ``"x^2 + 2*x*y - 0.5z^3 + 1"``."""
    src = text.replace(" ", "")
    if not src:
        raise SpecParseError("empty polynomial")
    terms: dict[tuple[int, int, int], float] = {}
    pos = 0
    first = True
    while pos < len(src):
        sign = 1.0
        if src[pos] in "+-":
            sign = -1.0 if src[pos] == "-" else 1.0
            pos += 1
        elif not first:
            raise SpecParseError(f"expected '+' or '-' at position {pos} in {text!r}")
        first = False
        coef, exps, nfactors = sign, [0, 0, 0], 0
        while pos < len(src):
            if nfactors and src[pos] in "+-":
                break
            m = _FACTOR.match(src, pos)
            if not m or m.end() == pos:
                raise SpecParseError(f"cannot parse {src[pos:]!r} in polynomial {text!r}")
            if nfactors == 0 and m.group(0).startswith("*"):
                raise SpecParseError(f"dangling '*' in polynomial {text!r}")
            if m.group("num") is not None:
                coef *= float(m.group("num"))
            else:
                exps["xyz".index(m.group("var"))] += int(m.group("exp") or 1)
            nfactors += 1
            pos = m.end()
        if nfactors == 0:
            raise SpecParseError(f"empty term in polynomial {text!r}")
        key = tuple(exps)
        terms[key] = terms.get(key, 0.0) + coef
    try:
        return Polynomial.from_terms(terms, max_degree=max_degree)
    except GeometryError as exc:
        raise SpecParseError(str(exc)) from None


def _kv(tokens: list[str]) -> dict[str, str]:
    out = {}
    for tok in tokens:
        if "=" not in tok:
            raise SpecParseError(f"expected key=value, got {tok!r}")
        k, v = tok.split("=", 1)
        if k in out:
            raise SpecParseError(f"duplicate key {k!r}")
        out[k.strip()] = v.strip()
    return out


def _level(kv: dict, name: str) -> float:
    sq = f"{name}_sq"
    if (name in kv) == (sq in kv):
        raise SpecParseError(f"give exactly one of {name}= or {sq}=")
    if name in kv:
        return parse_real(kv.pop(name), name)
    v = parse_real(kv.pop(sq), sq)
    if v < 0:
        raise SpecParseError(f"{sq} must be non-negative")
    return math.sqrt(v)


_KINDS = {
    "quadric-center": ("a", "b", "c", "xi", "zeta"),
    "paraboloid": ("a", "b", "eta"),
    "ellipsoid-cut": ("a", "b", "c"),
    "cylinder-cut": ("a", "b"),
    "superquadric": ("n", "c"),
    "plane": (),
    "sphere": (),
    "biharmonic-graph": (),
    "poly": (),
}


def parse_surface(spec) -> Surface:
    """Build a surface from a spec string or an already-split token list."""
    if isinstance(spec, str):
        tokens = shlex.split(spec)
    else:
        tokens = list(spec)
        if len(tokens) == 1:
            # a whole spec passed as one quoted argument
            tokens = shlex.split(tokens[0])
    if not tokens:
        raise SpecParseError("empty surface spec")
    kind, rest = tokens[0], tokens[1:]
    if kind not in _KINDS:
        raise SpecParseError(f"unknown surface kind {kind!r}; expected one of {', '.join(_KINDS)}")
    try:
        if kind == "poly":
            if not rest:
                raise SpecParseError("poly needs a polynomial expression")
            exprs = [t for t in rest if not t.startswith("max_degree=")]
            kv = _kv([t for t in rest if t.startswith("max_degree=")])
            deg = parse_int(kv["max_degree"], "max_degree") if kv else TOL.polynomial_max_degree
            return parse_polynomial(" ".join(exprs), deg)
        kv = _kv(rest)
        missing = [k for k in _KINDS[kind] if k not in kv]
        if missing:
            raise SpecParseError(f"{kind}: missing {', '.join(missing)}")
        r = {}
        if kind in ("quadric-center", "paraboloid", "ellipsoid-cut", "cylinder-cut"):
            r = {k: parse_real(kv.pop(k), k) for k in ("a", "b", "c") if k in _KINDS[kind]}
        if kind == "quadric-center":
            s = QuadricCenter(**r, xi=parse_sign(kv.pop("xi"), "xi"), zeta=parse_sign(kv.pop("zeta"), "zeta"))
        elif kind == "paraboloid":
            s = QuadricParaboloid(**r, eta=parse_sign(kv.pop("eta"), "eta"))
        elif kind == "ellipsoid-cut":
            s = CandidateEllipsoid(**r, d=_level(kv, "d"))
        elif kind == "cylinder-cut":
            e = _level(kv, "e")
            if not e * e > 1:
                raise SpecParseError("cylinder-cut needs e^2 > 1")
            s = CandidateCylinder(**r, e=e)
        elif kind == "superquadric":
            s = SuperquadricRevolution(parse_int(kv.pop("n"), "n"), parse_real(kv.pop("c"), "c"))
        elif kind == "plane":
            s = PlaneZ(parse_real(kv.pop("d", "0"), "d"))
        elif kind == "sphere":
            s = sphere(parse_real(kv.pop("r", "1"), "r"))
        else:
            from .revolution import ProfileSpec

            s = ProfileSpec(parse_real(kv.pop("c1", "0"), "c1"), parse_real(kv.pop("c2", "0"), "c2")).as_surface()
        if kv:
            raise SpecParseError(f"{kind}: unknown keys {', '.join(sorted(kv))}")
        return s
    except GeometryError as exc:
        raise SpecParseError(f"{kind}: {exc}") from None
