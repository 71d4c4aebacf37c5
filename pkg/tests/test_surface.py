from fractions import Fraction

import pytest

from cablowup import (parse_germ, resolve_invariants, surface_k2, surface_report,
                      surface_singularities, x_section_curves)
from cablowup.errors import Inconsistency, InvalidInput
from cablowup.exact import hj_expand
from cablowup.surface import SurfacePoint


def family(n):
    return parse_germ(f"xy + z^{n} + u^{n}")


@pytest.mark.parametrize("n, k2", [(3, 6), (4, Fraction(16, 3)), (5, 5)])
def test_k2_examples(n, k2):
    assert surface_k2(family(n), (1, n - 1, 1, 1)) == k2


def test_k2_mixed_germ():
    assert surface_k2(parse_germ("xy + z^3 + u^4"), (1, 2, 1, 1)) == 6


def test_k2_requires_good_divisor():
    with pytest.raises(InvalidInput):
        surface_k2(family(3), (1, 1, 1, 1))


@pytest.mark.parametrize("n", range(3, 9))
def test_family_has_one_cyclic_point(n):
    (p,) = surface_singularities(family(n), (1, n - 1, 1, 1))
    assert p.chain.entries == (n - 1,)
    assert p.label == ("A_1" if n == 3 else f"1/{n - 1}(1,1)")
    assert p.support == (1,)  # the vertex P_y


def test_mixed_germ_points():
    pts = surface_singularities(parse_germ("xy + z^3 + u^4"), (1, 2, 1, 1))
    assert sorted(p.label for p in pts) == ["A_1", "A_2"]
    a2 = next(p for p in pts if p.label == "A_2")
    assert a2.origin == "hypersurface" and a2.chart == 4


def test_smooth_quadric():
    g = parse_germ("xy + z^2 + u^2")
    assert surface_singularities(g, (1, 1, 1, 1)) == []
    rep = surface_report(g, (1, 1, 1, 1))
    assert rep.k2 == 8 and rep.picard == 2 and rep.euler_resolution == 4


@pytest.mark.parametrize("n", range(3, 9))
def test_family_invariants(n):
    rep = surface_report(family(n), (1, n - 1, 1, 1))
    assert rep.k2 == Fraction(4 * n, n - 1)
    assert rep.k2_resolution == 9 - n
    assert rep.euler_resolution == n + 3
    assert rep.b2_resolution == n + 1
    assert rep.picard == n
    c = rep.curve_data
    assert c.component_count == n and c.multiplicity == 1
    assert c.self_intersection == Fraction(1, n - 1) - 1
    assert c.resolved_self_intersection == -1
    assert c.identity_holds()


def test_mixed_germ_invariants():
    rep = surface_report(parse_germ("xy + z^3 + u^4"), (1, 2, 1, 1))
    assert rep.k2 == 6 and rep.k2_resolution == 6 and rep.picard == 1
    c = rep.curve_data
    assert c.component_count == 1 and c.multiplicity == 3
    assert c.self_intersection == Fraction(1, 6)
    assert c.resolved_self_intersection == -1
    assert c.identity_holds()


def test_section_choice_follows_lighter_coordinate():
    g = family(4)
    a = x_section_curves(g, (1, 3, 1, 1))
    b = x_section_curves(g, (3, 1, 1, 1))
    assert (a.section, b.section) == ("x", "y")
    assert a.resolved_self_intersection == b.resolved_self_intersection == -1


def test_non_integral_resolution_is_an_inconsistency():
    p = SurfacePoint("1/3(1,1)", hj_expand(3, 1), (0,), 1)
    with pytest.raises(Inconsistency):
        resolve_invariants(Fraction(5), [p])


def test_report_json_fields():
    d = surface_report(family(5), (1, 4, 1, 1)).to_dict()
    assert d["k2"] == "5" and d["k2_resolution"] == "4" and d["picard"] == 5
    assert d["singular_points"][0]["chain"] == [4]
