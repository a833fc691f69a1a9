import math

import numpy as np
import pytest

from biharmonic_curves.errors import SpecParseError
from biharmonic_curves.geometry import (
    CandidateCylinder,
    CandidateEllipsoid,
    PlaneZ,
    Polynomial,
    QuadricCenter,
    QuadricParaboloid,
    RevolutionGraph,
    SuperquadricRevolution,
)
from biharmonic_curves.parsing import parse_point, parse_polynomial, parse_surface


def test_parse_each_kind():
    assert parse_surface("quadric-center a=1 b=1 c=2 xi=1 zeta=1") == QuadricCenter(1, 1, 2, 1, 1)
    assert parse_surface("quadric-center a=1 b=2 c=2 xi=-1 zeta=-1") == QuadricCenter(1, 2, 2, -1, -1)
    assert parse_surface("paraboloid a=1 b=2 eta=+1") == QuadricParaboloid(1, 2, 1)
    assert parse_surface("plane d=0.5") == PlaneZ(0.5)
    assert parse_surface("superquadric n=2 c=1.5") == SuperquadricRevolution(2, 1.5)
    assert parse_surface("ellipsoid-cut a=1 b=1 c=2 d_sq=0.5").d_sq == pytest.approx(0.5)
    assert isinstance(parse_surface("ellipsoid-cut a=1 b=1 c=2 d=0.7"), CandidateEllipsoid)
    assert isinstance(parse_surface("cylinder-cut a=1 b=1 e_sq=2"), CandidateCylinder)
    g = parse_surface("biharmonic-graph c1=0 c2=0")
    assert isinstance(g, RevolutionGraph)
    assert g.f(1.0) == pytest.approx(-math.log(2) / 2)
    assert parse_surface(["sphere", "r=2"]).value(np.array([0, 0, 2.0])) == 0.0


def test_parse_polynomial_syntax():
    s = parse_polynomial("x^2+y^2+z^2-1")
    assert s == Polynomial.from_terms({(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1, (0, 0, 0): -1})
    t = parse_polynomial("2*x*y - 0.5z^3 + 3 x y + 1e-1")
    assert t == Polynomial.from_terms({(1, 1, 0): 5, (0, 0, 3): -0.5, (0, 0, 0): 0.1})
    assert parse_surface('poly "x^2 + y^2 - 4"').value(np.array([2.0, 0, 0])) == 0.0
    assert parse_surface('poly "x^10 - 1" max_degree=10').degree == 10


@pytest.mark.parametrize(
    "spec",
    [
        "",
        "torus a=1",
        "quadric-center a=1 b=1 c=2 xi=1",
        "quadric-center a=1 b=1 c=2 xi=2 zeta=1",
        "quadric-center a=1 b=0 c=2 xi=1 zeta=1",
        "quadric-center a=one b=1 c=2 xi=1 zeta=1",
        "quadric-center a=1 b=1 c=2 xi=1 zeta=1 extra=3",
        "quadric-center a=1 a=1 b=1 c=2 xi=1 zeta=1",
        "plane 0.5",
        "cylinder-cut a=1 b=1 e_sq=1",
        "ellipsoid-cut a=1 b=1 c=2",
        "ellipsoid-cut a=1 b=1 c=2 d=1 d_sq=1",
        "superquadric n=1.5 c=1",
        "plane d=nan",
        'poly "x^9"',
        'poly "x^2 +* y"',
        'poly "x^-2"',
        'poly "w^2"',
        "poly",
    ],
)
def test_malformed_specs(spec):
    with pytest.raises(SpecParseError):
        parse_surface(spec)


def test_parse_point():
    assert parse_point("1,2,3") == (1.0, 2.0, 3.0)
    assert parse_point("(0.5, -1, 2e-3)") == (0.5, -1.0, 0.002)
    with pytest.raises(SpecParseError):
        parse_point("1,2")
